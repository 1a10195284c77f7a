#include "cycloid/lattice.hpp"

#include <ostream>
#include <sstream>

#include "cycloid/error.hpp"

namespace cycloid {

namespace checked {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace checked

std::ostream& operator<<(std::ostream& os, Point p) {
  return os << '(' << p.xi << ',' << p.eta << ')';
}

CycloidParams::CycloidParams(Int alpha, Int beta, Int gamma, Int delta, Int max_param)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta), area_(0) {
  for (Int v : {alpha, beta, gamma, delta}) {
    if (v < 1) {
      throw DomainError("cycloid parameters must be positive integers, got " + to_string());
    }
    if (v > max_param) {
      throw OverflowError("cycloid parameter exceeds bound " + std::to_string(max_param) +
                          ": " + to_string());
    }
  }
  area_ = checked::add(checked::mul(alpha, delta), checked::mul(beta, gamma));
}

Point CycloidParams::lattice_point(Int m, Int n) const {
  return {checked::add(checked::mul(m, alpha_), checked::mul(n, gamma_)),
          checked::add(checked::mul(-m, beta_), checked::mul(n, delta_))};
}

std::string CycloidParams::to_string() const {
  std::ostringstream os;
  os << "C(" << alpha_ << ',' << beta_ << ',' << gamma_ << ',' << delta_ << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloidParams& p) {
  return os << p.to_string();
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.num << '/' << f.den;
}

ParamVector param_vector(const CycloidParams& params, Point v) {
  const Int a = params.area();
  return {{checked::sub(checked::mul(params.delta(), v.xi), checked::mul(params.gamma(), v.eta)), a},
          {checked::add(checked::mul(params.beta(), v.xi), checked::mul(params.alpha(), v.eta)), a}};
}

std::optional<EquivalenceWitness> equivalence_witness(const CycloidParams& params, Point x1,
                                                      Point x2) {
  const ParamVector pi = param_vector(params, x2 - x1);
  if (!pi.is_integral()) return std::nullopt;
  return EquivalenceWitness{pi.first.num / pi.first.den, pi.second.num / pi.second.den};
}

bool equivalent(const CycloidParams& params, Point x1, Point x2) {
  return param_vector(params, x2 - x1).is_integral();
}

bool in_fundamental(const CycloidParams& params, Point x) {
  const ParamVector pi = param_vector(params, x);
  return pi.first.floor() == 0 && pi.second.floor() == 0;
}

Point canonical(const CycloidParams& params, Point x) {
  const ParamVector pi = param_vector(params, x);
  return x - params.lattice_point(pi.first.floor(), pi.second.floor());
}

Corners corners(const CycloidParams& params) {
  const Int a = params.alpha(), b = params.beta(), g = params.gamma(), d = params.delta();
  return {{0, 0}, {a, -b}, {a + g, d - b}, {g, d}};
}

}  // namespace cycloid
