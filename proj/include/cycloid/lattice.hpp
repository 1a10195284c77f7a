#pragma once

// Integer lattice underlying a cycloid C(alpha, beta, gamma, delta).
//
// The Petri space is Z^2. A cycloid folds it by the lattice spanned by the
// columns of
//
//     A = | alpha  gamma |        B = | delta  -gamma |
//         | -beta  delta |            | beta    alpha |
//
// with det(A) = alpha*delta + beta*gamma (the area). B is the adjugate of A,
// so A^-1 = B / area. Two points are equivalent iff B*(x2 - x1) / area is
// integral. All arithmetic here is exact 64-bit integer arithmetic with
// overflow checks; nothing in this module uses floating point.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cycloid {

using Int = std::int64_t;

/// Default upper bound for each of alpha, beta, gamma, delta.
inline constexpr Int kDefaultMaxParam = 1'000'000;

namespace checked {
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
}  // namespace checked

/// Floor division rounding toward negative infinity. Requires divisor > 0.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// Ceiling division. Requires divisor > 0.
constexpr Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// A point (xi, eta) of the Petri space.
struct Point {
  Int xi = 0;
  Int eta = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) {
    return {checked::add(a.xi, b.xi), checked::add(a.eta, b.eta)};
  }
  friend Point operator-(Point a, Point b) {
    return {checked::sub(a.xi, b.xi), checked::sub(a.eta, b.eta)};
  }
};

std::ostream& operator<<(std::ostream& os, Point p);

/// The four positive fold parameters. Construction validates them.
class CycloidParams {
 public:
  /// Throws DomainError if any entry is < 1, OverflowError if any entry
  /// exceeds `max_param`.
  CycloidParams(Int alpha, Int beta, Int gamma, Int delta,
                Int max_param = kDefaultMaxParam);

  Int alpha() const { return alpha_; }
  Int beta() const { return beta_; }
  Int gamma() const { return gamma_; }
  Int delta() const { return delta_; }

  /// alpha*delta + beta*gamma, the number of transitions.
  Int area() const { return area_; }

  /// beta | delta
  bool regular() const { return delta_ % beta_ == 0; }
  /// alpha | gamma
  bool coregular() const { return gamma_ % alpha_ == 0; }

  /// A * (m, n) = m*(alpha, -beta) + n*(gamma, delta).
  Point lattice_point(Int m, Int n) const;

  std::string to_string() const;  // "C(a,b,g,d)"

  friend bool operator==(const CycloidParams& a, const CycloidParams& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.gamma_ == b.gamma_ &&
           a.delta_ == b.delta_;
  }
  friend auto operator<=>(const CycloidParams& a, const CycloidParams& b) {
    if (auto c = a.alpha_ <=> b.alpha_; c != 0) return c;
    if (auto c = a.beta_ <=> b.beta_; c != 0) return c;
    if (auto c = a.gamma_ <=> b.gamma_; c != 0) return c;
    return a.delta_ <=> b.delta_;
  }

 private:
  Int alpha_, beta_, gamma_, delta_;
  Int area_;
};

std::ostream& operator<<(std::ostream& os, const CycloidParams& p);

/// Exact fraction num/den with den > 0; not necessarily reduced.
struct Fraction {
  Int num = 0;
  Int den = 1;

  bool is_integer() const { return num % den == 0; }
  Int floor() const { return floor_div(num, den); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den ==
           static_cast<__int128>(b.num) * a.den;
  }
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// pi(v) = B*v / area. Both components share the denominator `area`.
struct ParamVector {
  Fraction first;
  Fraction second;

  bool is_integral() const { return first.is_integer() && second.is_integer(); }
  friend bool operator==(const ParamVector&, const ParamVector&) = default;
};

/// Coefficients (m, n) with x2 - x1 = A * (m, n).
struct EquivalenceWitness {
  Int m = 0;
  Int n = 0;
  friend bool operator==(const EquivalenceWitness&,
                         const EquivalenceWitness&) = default;
};

/// Corners of the fundamental parallelogram.
struct Corners {
  Point o, p, r, q;
};

inline Int area(const CycloidParams& params) { return params.area(); }

ParamVector param_vector(const CycloidParams& params, Point v);

/// The witness exists iff x1 and x2 are equivalent.
std::optional<EquivalenceWitness> equivalence_witness(const CycloidParams& params,
                                                      Point x1, Point x2);

bool equivalent(const CycloidParams& params, Point x1, Point x2);

/// pi(x) in [0,1) x [0,1). Edges O-P and O-Q are inside, P, Q, R and the
/// far edges are outside.
bool in_fundamental(const CycloidParams& params, Point x);

/// Unique representative of the class of x inside the fundamental
/// parallelogram: x - A * floor(pi(x)).
Point canonical(const CycloidParams& params, Point x);

/// O = (0,0), P = (alpha,-beta), R = (alpha+gamma, delta-beta), Q = (gamma,delta).
Corners corners(const CycloidParams& params);

}  // namespace cycloid
