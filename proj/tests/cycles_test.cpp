#include <gtest/gtest.h>

#include "cycloid/cycles.hpp"
#include "cycloid/error.hpp"
#include "cycloid/transforms.hpp"

using namespace cycloid;

namespace {

// Independent route: the shortest nonzero (u, v) >= 0 equivalent to the
// origin, tested by the divisibility form of the equivalence criterion.
Int brute_min_cycle(const CycloidParams& p) {
  const Int A = p.area();
  for (Int len = 1; len <= A; ++len)
    for (Int u = 0; u <= len; ++u) {
      const Int v = len - u;
      if ((p.delta() * u - p.gamma() * v) % A == 0 && (p.beta() * u + p.alpha() * v) % A == 0) return len;
    }
  return -1;
}

template <typename F>
void for_each_params(Int max, F f) {
  for (Int a = 1; a <= max; ++a)
    for (Int b = 1; b <= max; ++b)
      for (Int g = 1; g <= max; ++g)
        for (Int d = 1; d <= max; ++d) f(CycloidParams{a, b, g, d});
}

}  // namespace

TEST(CycLattice, Examples) {
  EXPECT_EQ(cyc_lattice_min({1, 1, 4, 1}).length(), 5);
  const CycleWitness w = cyc_lattice_min({2, 8, 1, 4});
  EXPECT_EQ(w, (CycleWitness{1, 2, 4, 0}));
  EXPECT_EQ(cyc_lattice_min({1, 2, 5, 3}).length(), 7);
}

TEST(CycLattice, Budget) {
  EXPECT_THROW(cyc_lattice_min({1, 1, 4, 1}, 3), DomainError);
  EXPECT_EQ(cyc_j_bound({2, 8, 1, 4}), 16);
  EXPECT_EQ(cyc_j_bound({4, 2, 2, 3}), 5);
}

TEST(CycFormulaB, Examples) {
  EXPECT_EQ(cyc_formula_b({2, 8, 1, 4}), (CycleWitness{1, 2, 4, 0}));
  EXPECT_EQ(cyc_formula_b({4, 2, 2, 3}), (CycleWitness{0, 1, 2, 3}));
  // C_1 = R = (6, 1) for C(1,2,5,3).
  EXPECT_EQ(cyc_formula_b({1, 2, 5, 3}), (CycleWitness{1, 1, 6, 1}));
}

TEST(CycClosedForms, CaseC) {
  EXPECT_EQ(cyc_case_c({1, 1, 4, 1}), 5);
  EXPECT_EQ(cyc_case_c({1, 2, 5, 3}), 7);
  EXPECT_EQ(cyc_case_c({2, 8, 1, 4}), std::nullopt);
}

TEST(CycClosedForms, CaseD) {
  EXPECT_EQ(cyc_case_d({2, 3, 4, 6}), 8);
  EXPECT_EQ(cyc_case_d({1, 1, 4, 1}), 5);
  EXPECT_EQ(cyc_case_d({4, 2, 2, 3}), std::nullopt);
}

TEST(CycClosedForms, CaseE) {
  EXPECT_EQ(cyc_case_e({4, 2, 8, 3}), 7);
  EXPECT_EQ(cyc_case_e({4, 2, 2, 3}), std::nullopt);
  EXPECT_EQ(cyc_case_e({2, 1, 2, 1}), 2);
}

TEST(CycGraph, Examples) {
  EXPECT_EQ(shortest_cycle_graph(build_net({1, 1, 4, 1})).length, 5);
  EXPECT_EQ(shortest_cycle_graph(build_net({2, 8, 1, 4})).length, 4);
  EXPECT_EQ(shortest_cycle_graph(build_net({4, 3, 3, 3})).length, 6);
  EXPECT_THROW(shortest_cycle_graph(build_net({4, 3, 3, 3}), 10), DomainError);
}

TEST(CycGraph, WitnessIsACycle) {
  for (const CycloidParams& p : {CycloidParams{2, 8, 1, 4}, CycloidParams{1, 2, 5, 3},
                                 CycloidParams{4, 3, 3, 3}}) {
    const auto net = build_net(p);
    const GraphCycle g = shortest_cycle_graph(net);
    ASSERT_EQ(static_cast<Int>(g.cycle.size()), g.length);
    EXPECT_TRUE(g.acyclic.empty());
    for (std::size_t k = 0; k < g.cycle.size(); ++k) {
      const TransitionId from = g.cycle[k], to = g.cycle[(k + 1) % g.cycle.size()];
      EXPECT_TRUE(successor(net, from, PlaceKind::forward) == to ||
                  successor(net, from, PlaceKind::backward) == to);
    }
  }
}

TEST(Cyc, Dispatch) {
  EXPECT_EQ(cyc({1, 2, 5, 3}).length(), 7);
  EXPECT_EQ(cyc({2, 3, 4, 6}).length(), 8);
  EXPECT_EQ(cyc({2, 8, 1, 4}, {.cross_check_lattice = true}).length(), 4);
}

TEST(Cyc, LargeParams) {
  // Formula b stays cheap far beyond what the other routes can handle.
  const CycloidParams p{1, 1'000'000, 1, 999'999};
  const CycleWitness w = cyc(p);
  EXPECT_GE(w.u, 0);
  EXPECT_GE(w.v, 0);
  EXPECT_LE(w.length(), p.area());
  EXPECT_EQ(cyc({7, 3, 700'000, 999'999}).length(), cyc_formula_b({7, 3, 700'000, 999'999}).length());
}

TEST(CycProperty, AllRoutesAgree) {
  for_each_params(6, [](const CycloidParams& p) {
    const Int brute = brute_min_cycle(p);
    const Int formula = cyc_formula_b(p).length();
    ASSERT_EQ(formula, brute) << p;
    ASSERT_EQ(cyc_lattice_min(p).length(), brute) << p;
    ASSERT_EQ(shortest_cycle_graph(build_net(p)).length, brute) << p;
  });
}

TEST(CycProperty, Invariants) {
  for_each_params(6, [](const CycloidParams& p) {
    const CycleWitness w = cyc(p, {.cross_check_lattice = true});
    ASSERT_EQ(cyc(symmetric_params(p)).length(), w.length()) << p;
    ASSERT_LE(w.length(), p.area());
    ASSERT_LE(cyc_lattice_min(p).j, cyc_j_bound(p));
    ASSERT_GE(w.j, 1);
    ASSERT_EQ(p.lattice_point(w.i, w.j), (Point{w.u, w.v}));
    for (auto dir : {ShearDirection::reduce_gamma, ShearDirection::reduce_delta}) {
      if (shear_applicable(p, dir)) ASSERT_EQ(cyc(shear(p, dir)).length(), w.length()) << p;
    }
  });
}

TEST(CycProperty, ClosedFormsUnderGuards) {
  int c = 0, d = 0, e = 0;
  for_each_params(8, [&](const CycloidParams& p) {
    const Int general = cyc_formula_b(p).length();
    if (auto v = cyc_case_c(p)) { ASSERT_EQ(*v, general) << p; ++c; }
    if (auto v = cyc_case_d(p)) { ASSERT_EQ(*v, general) << p; ASSERT_EQ(*v * p.beta(), p.area()); ++d; }
    if (auto v = cyc_case_e(p)) { ASSERT_EQ(*v, general) << p; ASSERT_EQ(*v * p.alpha(), p.area()); ++e; }
  });
  EXPECT_GT(c, 0);
  EXPECT_GT(d, 0);
  EXPECT_GT(e, 0);
}
