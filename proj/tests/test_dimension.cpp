#include <gtest/gtest.h>

#include "tnsdim/dimension.hpp"

using namespace tnsdim;

namespace {

const PrimeField F;

using Dims = std::vector<std::int64_t>;

// Column (v, i, w) of the differential is Phi with X_v replaced by E_iw.
Matrix<Fp> jacobian_oracle(const TensorNetwork& net, const MapTuple<Fp>& x) {
  const auto t = graph_tensor(net, F);
  std::vector<std::vector<Fp>> cols;
  for (std::size_t v = 0; v < net.order(); ++v) {
    for (std::size_t i = 0; i < x.maps[v].rows(); ++i) {
      for (std::size_t w = 0; w < x.maps[v].cols(); ++w) {
        MapTuple<Fp> y = x;
        y.maps[v] = Matrix<Fp>(x.maps[v].rows(), x.maps[v].cols());
        y.maps[v](i, w) = F.one();
        cols.push_back(apply(y, t).entries());
      }
    }
  }
  Matrix<Fp> j(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < cols[c].size(); ++r) j(r, c) = cols[c][r];
  }
  return j;
}

// Nullity of (X_v) -> sum_v X_v ._v t with each E_ab applied by contraction.
std::size_t isotropy_oracle(const DenseTensor<Fp>& t) {
  std::vector<std::vector<Fp>> images;
  for (std::size_t v = 0; v < t.order(); ++v) {
    for (std::size_t a = 0; a < t.dim(v); ++a) {
      for (std::size_t b = 0; b < t.dim(v); ++b) {
        Matrix<Fp> e(t.dim(v), t.dim(v));
        e(a, b) = F.one();
        images.push_back(contract_factor(t, v, e).entries());
      }
    }
  }
  Echelon<Fp> ech(t.size());
  for (auto& im : images) ech.insert(im);
  return images.size() - ech.rank() - (t.order() - 1);
}

std::vector<TensorNetwork> isotropy_suite() {
  return {make_path({2}, {1, 1}),
          make_path({3}, {1, 1}),
          make_path({2, 3}, {1, 1, 1}),
          make_path({3, 2, 2}, {1, 1, 1, 1}),
          make_cycle({2, 2, 2}, {1, 1, 1}),
          make_cycle({3, 2, 2}, {1, 1, 1}),
          make_cycle({2, 2, 2, 2}, {1, 1, 1, 1}),
          make_cycle({2, 3, 2, 2}, {1, 1, 1, 1}),
          make_cycle({2, 2, 2, 2, 2}, {1, 1, 1, 1, 1}),
          make_complete({2, 2, 2, 2, 2, 2}, {1, 1, 1, 1}),
          make_star({2, 2}, {1, 1, 1}),
          make_star({3, 2, 2}, {1, 1, 1, 1}),
          make_star({2, 3, 3}, {1, 1, 1, 1})};
}

}  // namespace

TEST(Formulas, GaugeDim) {
  EXPECT_EQ(gauge_dim(make_cycle({2, 2, 2}, {2, 2, 2})), 9);
  EXPECT_EQ(gauge_dim(make_cycle({2, 2, 2, 2}, {2, 2, 2, 2})), 12);
  EXPECT_EQ(gauge_dim(make_cycle({1, 1, 1}, {2, 3, 4})), 0);
}

TEST(Formulas, ExpectedDim) {
  EXPECT_EQ(expected_dim(make_cycle({2, 2, 2}, {2, 2, 2})), 8);
  EXPECT_EQ(expected_dim(make_cycle({2, 2, 2, 2}, {4, 4, 4, 4})), 49);
  const auto p3 = make_path({2, 2}, {2, 4, 2});
  // Open-boundary MPS count: sum n_i m_{i-1} m_i - sum m_j^2 with m_0 = m_d = 1.
  const std::int64_t mps = std::min<std::int64_t>(2 * 2 + 4 * 4 + 2 * 2 - (4 + 4), 16);
  EXPECT_EQ(expected_dim(p3), 16);
  EXPECT_EQ(expected_dim(p3), mps);
}

TEST(Jacobian, MatchesColumnOracle) {
  Rng rng(31);
  for (const auto& net : {make_cycle({2, 2, 2}, {2, 3, 2}), make_path({2, 3}, {2, 3, 2}),
                          make_star({2, 2, 3}, {3, 2, 1, 2})}) {
    const auto x = random_map_tuple(net, F, rng);
    EXPECT_EQ(jacobian(net, x, F), jacobian_oracle(net, x));
  }
}

TEST(Isotropy, Examples) {
  EXPECT_EQ(isotropy_dim(graph_tensor(make_cycle({2, 2, 2}, {1, 1, 1}), F)), 9u);
  for (std::int64_t m : {2, 3, 4}) {
    EXPECT_EQ(isotropy_dim(graph_tensor(make_path({m}, {1, 1}), F)), static_cast<std::size_t>(m * m - 1));
  }
  DenseTensor<Fp> e11({2, 2});
  e11[0] = F.one();
  EXPECT_EQ(isotropy_dim(e11), 4u);
  EXPECT_EQ(isotropy_oracle(e11), 4u);
  EXPECT_THROW(isotropy_dim(DenseTensor<Fp>({2, 2})), ZeroTensor);
}

TEST(Isotropy, GraphTensorsMatchGauge) {
  for (const auto& net : isotropy_suite()) {
    const auto t = graph_tensor(net, F);
    EXPECT_EQ(static_cast<std::int64_t>(isotropy_dim(t)), gauge_dim(net)) << net.name();
  }
}

TEST(Isotropy, AgreesWithContractionOracle) {
  Rng rng(2);
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{2, 3, 4}, {3, 3, 3}, {2, 2, 2, 2}}) {
    const auto t = random_tensor(dims, F, rng);
    EXPECT_EQ(isotropy_dim(t), isotropy_oracle(t));
  }
  for (const auto& net : {make_cycle({2, 3, 2}, {1, 1, 1}), make_star({2, 2, 2}, {1, 1, 1, 1})}) {
    const auto t = graph_tensor(net, F);
    EXPECT_EQ(isotropy_dim(t), isotropy_oracle(t));
  }
}

TEST(Isotropy, ActedGraphTensorKeepsGaugeAlgebra) {
  // Invertible X_v carry the isotropy algebra isomorphically.
  Rng rng(3);
  const auto net = make_cycle({2, 2, 2}, {4, 4, 4});
  const auto t = apply(random_map_tuple(net, F, rng), graph_tensor(net, F));
  EXPECT_EQ(isotropy_dim(t), 9u);
}

TEST(Isotropy, PaddingAddsKTimesNPlusK) {
  for (const auto& net : {make_cycle({2, 2, 2}, {1, 1, 1}), make_path({2, 3}, {1, 1, 1})}) {
    const auto t = graph_tensor(net, F);
    const std::size_t base = isotropy_dim(t);
    for (std::size_t k : {1u, 2u}) {
      const auto p = pad_factor(t, 1, k);
      EXPECT_EQ(isotropy_dim(p), base + k * (t.dim(1) + k));
    }
  }
}

TEST(Isotropy, KroneckerWithTrivialIsotropyFactor) {
  Rng rng(5);
  // A random 3x3x3 tensor: concise with trivial isotropy (a random 2x3x4 one
  // has a 3-dimensional isotropy algebra, so it cannot serve here).
  const auto t = random_tensor({3, 3, 3}, F, rng);
  ASSERT_EQ(isotropy_dim(t), 0u);
  for (bool c : is_concise(t)) ASSERT_TRUE(c);
  const auto s = graph_tensor(make_cycle({2, 2, 2}, {1, 1, 1}), F);
  EXPECT_EQ(isotropy_dim(kronecker(t, s)), isotropy_dim(s));
  EXPECT_EQ(isotropy_dim(kronecker(t, s)), 9u);
}

TEST(Stab, Examples) {
  Rng rng(7);
  auto net = make_cycle({2, 2, 2}, {3, 3, 3});
  auto x = random_map_tuple(net, F, rng);
  EXPECT_EQ(stab_dim(net, x, F), 0u);
  net = make_cycle({2, 2, 2, 2}, {2, 2, 2, 2});
  x = random_map_tuple(net, F, rng);
  EXPECT_EQ(stab_dim(net, x, F), 0u);
  net = make_path({2}, {1, 1});
  x = random_map_tuple(net, F, rng);
  EXPECT_EQ(stab_dim(net, x, F), 1u);
  x.maps.pop_back();
  EXPECT_THROW(stab_dim(net, x, F), ShapeMismatch);
}

TEST(Stab, SingleEdgeCovectorsByHand) {
  // A = [[a, b], [c, -a]], X = x1 (x) x2 with x1, x2 in (C^2)^*.
  // d/dt: (x1 A) (x) x2 - x1 (x) (x2 A^T) as a 2x2 array, linear in (a, b, c).
  Rng rng(8);
  const auto net = make_path({2}, {1, 1});
  const auto x = random_map_tuple(net, F, rng);
  const Fp p0 = x.maps[0](0, 0), p1 = x.maps[0](0, 1), q0 = x.maps[1](0, 0), q1 = x.maps[1](0, 1);
  Matrix<Fp> m(4, 3);
  for (std::size_t u = 0; u < 3; ++u) {
    Fp a = u == 0 ? F.one() : F.zero(), b = u == 1 ? F.one() : F.zero(), c = u == 2 ? F.one() : F.zero();
    // x1 A = (p0 a + p1 c, p0 b - p1 a); x2 A^T = (q0 a + q1 b, q0 c - q1 a)
    const Fp xa0 = p0 * a + p1 * c, xa1 = p0 * b - p1 * a;
    const Fp ya0 = q0 * a + q1 * b, ya1 = q0 * c - q1 * a;
    const Fp x1[2] = {p0, p1}, x2[2] = {q0, q1}, xa[2] = {xa0, xa1}, ya[2] = {ya0, ya1};
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) m(i * 2 + j, u) = xa[i] * x2[j] - x1[i] * ya[j];
    }
  }
  EXPECT_EQ(nullity(m), 1u);
  EXPECT_EQ(stab_dim(net, x, F), nullity(m));
}

TEST(Stab, DenseAgreesWithFactored) {
  Rng rng(9);
  const std::vector<TensorNetwork> nets = {
      make_path({2}, {1, 1}),          make_path({2}, {2, 1}),          make_path({3}, {1, 2}),
      make_path({2, 2}, {2, 1, 2}),    make_star({2, 2, 2}, {1, 1, 1, 1}), make_star({2, 2, 2}, {1, 2, 2, 2}),
      make_cycle({2, 2, 2}, {1, 1, 1}), make_cycle({2, 2, 2}, {2, 2, 2}), make_cycle({3, 2, 2}, {1, 2, 1}),
      make_complete({2, 2, 2, 2, 2, 2}, {1, 1, 1, 1})};
  for (const auto& net : nets) {
    const auto x = random_map_tuple(net, F, rng);
    EXPECT_EQ(stab_dim(net, x, F), stab_dim_factored(net, x, F)) << net.name();
  }
}

TEST(Stab, ShortcutCases) {
  auto s = stab_shortcut(make_cycle({2, 2, 2, 2, 2}, {2, 2, 2, 2, 2}));
  EXPECT_TRUE(s.zero);
  EXPECT_EQ(s.reason, "cycle");
  s = stab_shortcut(make_complete({2, 2, 2, 2, 2, 2}, {2, 2, 2, 2}));
  EXPECT_TRUE(s.zero);
  EXPECT_EQ(s.reason, "degree");
  EXPECT_FALSE(stab_shortcut(make_star({2, 2, 2}, {1, 2, 2, 2})).zero);
  EXPECT_FALSE(stab_shortcut(make_complete({2, 2, 2, 2, 2, 2}, {1, 2, 2, 2})).zero);
  EXPECT_FALSE(stab_shortcut(make_cycle({2, 3, 2}, {2, 2, 2})).zero);
  EXPECT_FALSE(stab_shortcut(make_cycle({2, 2, 2}, {1, 1, 1})).zero);
}

TEST(Stab, ShortcutIsSoundOnSmallCases) {
  Rng rng(10);
  const std::vector<TensorNetwork> nets = {make_cycle({2, 2, 2}, {2, 1, 1}), make_cycle({3, 3, 3}, {2, 2, 2}),
                                           make_cycle({2, 2, 2, 2}, {1, 2, 1, 1}),
                                           make_complete({2, 2, 2, 2, 2, 2}, {2, 2, 2, 2})};
  for (const auto& net : nets) {
    ASSERT_TRUE(stab_shortcut(net).zero);
    const auto x = random_map_tuple(net, F, rng);
    EXPECT_EQ(stab_dim_factored(net, x, F), 0u) << net.name();
  }
  // The (3,2,1) exception is left to the solver, and both solvers agree on it.
  const auto k4 = make_complete({2, 2, 2, 2, 2, 2}, {1, 1, 1, 1});
  EXPECT_FALSE(stab_shortcut(k4).zero);
  const auto x = random_map_tuple(k4, F, rng);
  EXPECT_EQ(stab_dim(k4, x, F), stab_dim_factored(k4, x, F));
}

TEST(Stab, OrientationInvariant) {
  const std::vector<TensorNetwork> nets = {make_path({2, 3}, {2, 1, 2}), make_star({2, 2, 2}, {1, 1, 1, 1}),
                                           make_cycle({3, 2, 2}, {1, 2, 1}), make_cycle({2, 2, 2}, {1, 1, 1})};
  for (const auto& net : nets) {
    Rng a(100), b(200);
    const auto xa = random_map_tuple(net, F, a);
    const auto xb = random_map_tuple(net.flipped(), F, b);
    EXPECT_EQ(stab_dim(net, xa, F), stab_dim(net.flipped(), xb, F)) << net.name();
  }
}

TEST(Bounds, UpperExamples) {
  const Rng rng(1);
  EXPECT_EQ(upper_bound(make_cycle({2, 2, 2}, {2, 3, 4}), F, rng), 24);
  EXPECT_EQ(upper_bound(make_cycle({2, 2, 2, 2}, {2, 3, 2, 3}), F, rng), 25);
  EXPECT_EQ(upper_bound(make_cycle({2, 2, 2}, {5, 5, 5}), F, rng), 49);
  EXPECT_EQ(upper_bound(make_cycle({2, 2, 2}, {4, 4, 4}), F, rng), 37);
}

TEST(Bounds, LowerExamples) {
  const Rng rng(2);
  EXPECT_EQ(lower_bound(make_cycle({2, 2, 2}, {2, 3, 4}), F, rng, 3), 22);
  EXPECT_EQ(lower_bound(make_cycle({2, 2, 2, 2}, {2, 2, 2, 2}), F, rng, 3), 15);
  for (const Dims& n : {Dims{2, 3, 4}, Dims{1, 5, 2}, Dims{3, 3, 3}}) {
    const auto net = make_cycle({1, 1, 1}, n);
    EXPECT_EQ(lower_bound(net, F, rng, 3), n[0] + n[1] + n[2] - 3 + 1);
  }
  EXPECT_THROW(lower_bound(make_path({2}, {2, 2}), F, rng, 0), Error);
}

TEST(Bounds, LowerShiftsByTrailOffset) {
  const Rng rng(3);
  const std::vector<TensorNetwork> nets = {
      make_cycle({2, 2, 2}, {5, 5, 5}), make_cycle({2, 2, 2}, {5, 4, 3}), make_cycle({2, 2, 1}, {2, 2, 4}),
      make_path({3, 2}, {2, 6, 3}),     make_path({5}, {2, 3}),           make_star({2, 2, 2}, {9, 2, 3, 2})};
  for (const auto& net : nets) {
    const auto red = normalize(net);
    EXPECT_EQ(lower_bound(net, F, rng, 3), red.trail.offset() + lower_bound(red.net, F, rng, 3)) << net.name();
  }
}

TEST(Bounds, LowerOrientationInvariant) {
  for (const auto& net : {make_cycle({2, 2, 2}, {2, 3, 4}), make_path({2, 3}, {2, 3, 3}),
                          make_star({2, 2, 2}, {2, 2, 2, 2})}) {
    EXPECT_EQ(lower_bound(net, F, Rng(1), 3), lower_bound(net.flipped(), F, Rng(99), 3));
  }
}

TEST(Bounds, LowerMonotoneInBondDimension) {
  const Rng rng(4);
  const auto small = lower_bound(make_cycle({2, 2, 2}, {3, 3, 3}), F, rng, 3);
  const auto big = lower_bound(make_cycle({3, 2, 2}, {3, 3, 3}), F, rng, 3);
  EXPECT_LE(small, big);
  EXPECT_LE(lower_bound(make_cycle({2, 2, 1}, {2, 3, 3}), F, rng, 3), small);
}

TEST(Bounds, RationalBackendAgrees) {
  RationalField q(50);
  const Rng rng(5);
  for (const auto& net : {make_cycle({2, 2, 2}, {2, 2, 3}), make_path({2}, {2, 3})}) {
    EXPECT_EQ(lower_bound(net, q, rng, 1), lower_bound(net, F, rng, 1));
    EXPECT_EQ(upper_bound(net, q, rng), upper_bound(net, F, rng));
  }
}

TEST(Report, Verdicts) {
  const Rng rng(6);
  auto rep = dim_report(make_cycle({2, 2, 2}, {4, 4, 4}), F, rng);
  EXPECT_TRUE(rep.verdict.exact);
  EXPECT_EQ(rep.verdict.lo, 37);
  EXPECT_EQ(rep.verdict.to_string(), "Exact(37)");
  rep = dim_report(make_cycle({2, 2, 2}, {2, 4, 4}), F, rng);
  EXPECT_FALSE(rep.verdict.exact);
  EXPECT_EQ(rep.verdict.to_string(), "Range(26, 29)");
  rep = dim_report(make_cycle({2, 2, 2}, {5, 5, 5}), F, rng);
  EXPECT_EQ(rep.verdict.to_string(), "Exact(49)");
  EXPECT_EQ(rep.reduced.trail.offset(), 12);
  EXPECT_EQ(rep.provenance.prime, kDefaultPrime);
  EXPECT_EQ(rep.provenance.trials, 3);
}

TEST(Report, ExpectedNeverExceedsUpper) {
  const Rng rng(7);
  for (const auto& net : {make_cycle({2, 2, 2}, {2, 3, 4}), make_cycle({2, 2, 1}, {2, 2, 4}),
                          make_path({3, 3}, {2, 2, 2}), make_cycle({2, 2, 2}, {5, 5, 5})}) {
    const auto rep = dim_report(net, F, rng);
    EXPECT_LE(rep.expected_dim, rep.upper_bound) << net.name();
    EXPECT_LE(rep.lower_bound, rep.upper_bound);
  }
}

TEST(Report, SupercriticalIsExact) {
  const Rng rng(8);
  for (const auto& n : {Dims{4, 4, 4}, Dims{5, 4, 4}, Dims{6, 5, 4}}) {
    const auto net = make_cycle({2, 2, 2}, n);
    ASSERT_TRUE(classify(net).supercritical());
    const auto rep = dim_report(net, F, rng);
    EXPECT_TRUE(rep.verdict.exact);
    EXPECT_EQ(rep.verdict.lo, segre_hom_dim(net) - gauge_dim(net));
  }
}

TEST(Report, AnnotatesKnownCases) {
  const Rng rng(9);
  auto rep = dim_report(make_cycle({2, 2, 2, 2}, {2, 2, 2, 2}), F, rng, 3, true);
  ASSERT_EQ(rep.notes.size(), 1u);
  EXPECT_EQ(rep.notes[0], "known exact 15, sextic hypersurface");
  rep = dim_report(make_cycle({2, 2, 2, 2}, {2, 2, 2, 2}), F, rng, 3, false);
  EXPECT_TRUE(rep.notes.empty());
}

TEST(Report, GaugeOrbitBoundOnTables) {
  const Rng rng(10);
  std::vector<TensorNetwork> nets;
  for (const auto& n : {Dims{2, 2, 2}, Dims{2, 2, 3}, Dims{2, 2, 4}, Dims{2, 3, 3}, Dims{2, 3, 4}, Dims{2, 4, 4},
                        Dims{3, 3, 3}, Dims{3, 3, 4}, Dims{3, 4, 4}, Dims{4, 4, 4}})
    nets.push_back(make_cycle({2, 2, 2}, n));
  for (const auto& n : {Dims{2, 2, 2, 2}, Dims{2, 3, 2, 3}, Dims{2, 2, 3, 4}, Dims{3, 4, 3, 4}, Dims{4, 4, 4, 4}})
    nets.push_back(make_cycle({2, 2, 2, 2}, n));
  for (const auto& net : nets) {
    const auto rep = dim_report(net, F, rng);
    ASSERT_TRUE(rep.reduced.trail.empty());
    EXPECT_GE(rep.segre_hom_dim - rep.lower_bound, rep.gauge_dim - rep.stab.value) << net.name();
  }
}
