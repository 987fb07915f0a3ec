#include <gtest/gtest.h>

#include <cmath>

#include "qgeom/segre_ideal.hpp"
#include "support/oracles.hpp"

using namespace qgeom;
using namespace qgeom::testing;

namespace {

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected qgeom::Error";
  return Errc::ParseError;
}

}  // namespace

TEST(SegreGenerators, TwoQubitsGiveTheQuadric) {
  const auto ideal = segre_generators({2, 2});
  ASSERT_EQ(ideal.gens.size(), 1u);
  const MultiPoly want = MultiPoly(VarId::state({0, 0})) * MultiPoly(VarId::state({1, 1})) -
                         MultiPoly(VarId::state({0, 1})) * MultiPoly(VarId::state({1, 0}));
  EXPECT_EQ(ideal.gens[0], want);
}

TEST(SegreGenerators, ThreeQubitsVanishOnProduct) {
  const auto ideal = segre_generators({2, 2, 2});
  std::vector f{make_local<GaussRat>({1, 2}), make_local<GaussRat>({3, 1}), make_local<GaussRat>({1, 1})};
  const auto at = state_assignment(segre_map(f));
  for (const auto& g : ideal.gens) EXPECT_EQ(evaluate(g, at), GaussRat(0)) << g.str();
  for (const auto& g : ideal.gens) {
    EXPECT_EQ(is_homogeneous(g), (Grade{Grade::Kind::Degree, 2}));
    EXPECT_EQ(g, g.sign_canonical());
    EXPECT_EQ(g.size(), 2u);
  }
}

TEST(SegreGenerators, MatchesBruteForceMinorSet) {
  // Oracle: collect every 2x2 minor of every flattening (both sides of each
  // split), sign-normalize by hand and compare as sets.
  const Dims dims{2, 3, 2};
  std::set<MultiPoly> want;
  const auto dummy = make_state<GaussRat>(dims, std::vector<GaussRat>(12, GaussRat(1)));
  for (int mask = 1; mask < 7; ++mask) {
    std::vector<int> left;
    for (int j = 0; j < 3; ++j)
      if (mask & (1 << j)) left.push_back(j + 1);
    const auto shape = brute_flatten(dummy, left);
    // Rebuild the multi-index of each cell.
    std::vector<std::vector<MultiIndex>> cell(shape.rows(), std::vector<MultiIndex>(shape.cols()));
    for (std::size_t off = 0; off < 12; ++off) {
      const MultiIndex idx = dummy.multi_index(off);
      std::size_t r = 0, c = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        const bool in = std::find(left.begin(), left.end(), static_cast<int>(j + 1)) != left.end();
        (in ? r : c) = (in ? r : c) * dims[j] + idx[j];
      }
      cell[r][c] = idx;
    }
    auto v = [&](std::size_t r, std::size_t c) { return MultiPoly(state_var(cell[r][c])); };
    for (std::size_t r0 = 0; r0 < shape.rows(); ++r0)
      for (std::size_t r1 = 0; r1 < shape.rows(); ++r1)
        for (std::size_t c0 = 0; c0 < shape.cols(); ++c0)
          for (std::size_t c1 = 0; c1 < shape.cols(); ++c1) {
            if (r0 == r1 || c0 == c1) continue;
            MultiPoly p = v(r0, c0) * v(r1, c1) - v(r0, c1) * v(r1, c0);
            if (p.terms().begin()->second.real() < 0) p = -p;
            want.insert(p);
          }
  }
  const auto got = segre_generators(dims).gens;
  EXPECT_EQ(std::set<MultiPoly>(got.begin(), got.end()), want);
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
}

TEST(SegreGenerators, Preconditions) {
  EXPECT_EQ(error_of([] { segre_generators({2}); }), Errc::WrongShape);
  EXPECT_EQ(error_of([] { segre_generators(Dims(13, 2)); }), Errc::TooLarge);
  EXPECT_NO_THROW(segre_generators(Dims(3, 2), 8));
  EXPECT_EQ(error_of([] { segre_generators(Dims(3, 2), 7); }), Errc::TooLarge);
}

TEST(MinorSum, Examples) {
  const double h = 1.0 / std::sqrt(2.0);
  const Matrix<Complex> bell_flat(2, 2, {h, 0.0, 0.0, h});
  // Single minor 1/2, squared.
  EXPECT_NEAR(brute_minor_sum(bell_flat), 0.25, 1e-15);
  EXPECT_NEAR(minor_sum(bell_flat), 0.25, 1e-15);

  const Matrix<Complex> rank1(2, 3, {1.0, 2.0, Complex(0, 1), 2.0, 4.0, Complex(0, 2)});
  EXPECT_EQ(minor_sum(rank1), 0.0);

  const auto ghz_flat = flatten(ghz3(), Bipartition({1}, 3));
  EXPECT_NEAR(brute_minor_sum(ghz_flat), 0.25, 1e-15);
  EXPECT_NEAR(minor_sum(ghz_flat), 0.25, 1e-15);
}

TEST(MinorSum, ThreeRoutesAgreeExactly) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const auto m = random_matrix<GaussRat>(rng, r, c);
    const Rational want = brute_minor_sum(m);
    EXPECT_EQ(minor_sum_gram(m), want);
    EXPECT_EQ(minor_sum_enumerated(m), want);
    EXPECT_EQ(minor_sum_projected(m), want);
    EXPECT_EQ(minor_sum(m), want);
  }
}

TEST(MinorSum, FloatRoutesAgree) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 2 + rng() % 7, c = 2 + rng() % 7;
    const auto m = random_matrix<Complex>(rng, r, c);
    const double want = brute_minor_sum(m);
    EXPECT_NEAR(minor_sum_gram(m), want, 1e-9 * want);
    EXPECT_NEAR(minor_sum_projected(m), want, 1e-9 * want);
    EXPECT_NEAR(minor_sum(m), want, 1e-9 * want);
  }
}

TEST(MinorSum, NearRankOneStaysAccurate) {
  // Rank-1 plus a 1e-9 perturbation in one entry: the only nonzero minors
  // are (1e-9 * v_i)-sized. The Gram route loses this entirely.
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = random_local(rng, 8), v = random_local(rng, 8);
    Matrix<Complex> m(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) m(i, j) = u[i] * v[j];
    m(3, 5) += 1e-9;
    const double want = brute_minor_sum(m);
    EXPECT_NEAR(minor_sum(m), want, 1e-6 * want);
  }
}

TEST(GeneralizedConcurrence, TwoQubitFormula) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_haar_state(rng, {2, 2});
    const double direct = 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
    EXPECT_NEAR(generalized_concurrence(s).value, direct, 1e-12);
    EXPECT_NEAR(concurrence2(s), direct, 1e-12);
  }
}

TEST(GeneralizedConcurrence, ProductStatesVanish) {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = segre_map(random_factors(rng, Dims(2 + trial % 4, 2)));
    EXPECT_LE(generalized_concurrence(s).value, 1e-12);
  }
}

TEST(GeneralizedConcurrence, GhzAndW) {
  // Oracle: brute-force minor sums of each 2x4 flattening.
  for (const auto& b : canonical_bipartitions(3)) {
    EXPECT_NEAR(brute_minor_sum(brute_flatten(ghz3(), b.left())), 0.25, 1e-15);
    EXPECT_NEAR(brute_minor_sum(brute_flatten(w3(), b.left())), 2.0 / 9.0, 1e-15);
  }
  const auto g = generalized_concurrence(ghz3());
  EXPECT_NEAR(g.value, 1.0, 1e-12);
  ASSERT_EQ(g.per_bipartition.size(), 3u);
  for (const auto& [b, t] : g.per_bipartition) EXPECT_NEAR(t, 0.25, 1e-15);

  const auto w = generalized_concurrence(w3());
  EXPECT_NEAR(w.value, 2.0 * std::sqrt(2.0) / 3.0, 1e-12);
  for (const auto& [b, t] : w.per_bipartition) EXPECT_NEAR(t, 2.0 / 9.0, 1e-15);

  // Exact backend reproduces the same terms from unnormalized amplitudes.
  const auto we = generalized_concurrence(exact_w3());
  EXPECT_NEAR(we.value, 2.0 * std::sqrt(2.0) / 3.0, 1e-15);
  const auto ge = generalized_concurrence(exact_ghz3());
  EXPECT_EQ(ge.value, 1.0);
}

TEST(GeneralizedConcurrence, ReportInvariant) {
  Rng rng(43);
  auto r = generalized_concurrence(random_haar_state(rng, {2, 3, 2, 2}));
  double mean = 0.0;
  for (const auto& [b, t] : r.per_bipartition) {
    EXPECT_GE(t, 0.0);
    mean += t;
  }
  mean /= r.per_bipartition.size();
  EXPECT_DOUBLE_EQ(r.value, 2.0 * std::sqrt(mean));
  EXPECT_TRUE(std::is_sorted(r.per_bipartition.begin(), r.per_bipartition.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; }));
}

TEST(GeneralizedConcurrence, SingleModeReportsZero) {
  auto r = generalized_concurrence(make_state<Complex>({3}, {1.0, 2.0, 0.0}));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.per_bipartition.empty());
}

TEST(GeneralizedConcurrence, ScaleAndLocalUnitaryInvariance) {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const Dims dims{2, 3, 2};
    auto s = random_haar_state(rng, dims);
    const double base = generalized_concurrence(s).value;
    EXPECT_NEAR(generalized_concurrence(scale(s, Complex(-3.5, 0.25))).value, base, 1e-12);
    auto t = s;
    for (std::size_t j = 0; j < dims.size(); ++j) t = apply_local(t, j + 1, random_unitary(rng, dims[j]));
    EXPECT_NEAR(generalized_concurrence(t).value, base, 1e-12);
  }
}

TEST(Concurrence2, Examples) {
  EXPECT_NEAR(concurrence2(bell()), 1.0, 1e-15);
  EXPECT_EQ(concurrence2(make_state<Complex>({2, 2}, {1.0, 1.0, 1.0, 1.0})), 0.0);
  EXPECT_EQ(concurrence2(make_state<Complex>({2, 2}, {0.0, 1.0, 0.0, 0.0})), 0.0);
  EXPECT_EQ(concurrence2(exact_bell()), 1.0);
  EXPECT_EQ(concurrence2(make_state<Complex>({2, 2}, {1.0, 0.0, 0.0, 1.0})), 1.0);
  EXPECT_EQ(error_of([] { concurrence2(ghz3()); }), Errc::WrongShape);
  EXPECT_EQ(error_of([] { concurrence2(make_state<Complex>({2, 3}, {1, 0, 0, 0, 0, 1})); }), Errc::WrongShape);
}

TEST(Separability, BipartiteExamples) {
  EXPECT_FALSE(is_bipartite_separable(bell(), Bipartition({1}, 2), 1e-10));
  Rng rng(51);
  const auto psi = random_local(rng, 3);
  std::vector f{make_local<Complex>({1.0, 0.0}), psi};
  EXPECT_TRUE(is_bipartite_separable(segre_map(f), Bipartition({1}, 2), 1e-10));
  EXPECT_FALSE(is_bipartite_separable(ghz3(), Bipartition({1, 2}, 3), 1e-10));
  EXPECT_FALSE(is_bipartite_separable(exact_ghz3(), Bipartition({1, 2}, 3), 0.0));
}

TEST(Separability, FullExamples) {
  Rng rng(52);
  for (int trial = 0; trial < 20; ++trial) EXPECT_TRUE(is_fully_separable(segre_map(random_factors(rng, {2, 3, 2}))));
  EXPECT_FALSE(is_fully_separable(w3()));

  const double h = 1.0 / std::sqrt(2.0);
  auto bell_zero = make_state<Complex>({2, 2, 2}, {h, 0, 0, 0, 0, 0, h, 0});
  EXPECT_FALSE(is_fully_separable(bell_zero));
  EXPECT_TRUE(is_bipartite_separable(bell_zero, Bipartition({1, 2}, 3)));
  EXPECT_FALSE(is_bipartite_separable(bell_zero, Bipartition({1}, 3)));
}

TEST(Separability, AgreesWithLocalFactors) {
  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Dims dims(2 + trial % 3, 2);
    const State s = trial % 2 ? random_haar_state(rng, dims) : segre_map(random_factors(rng, dims));
    EXPECT_EQ(is_fully_separable(s, 1e-10), try_local_factors(s, 1e-10).has_value());
  }
}
