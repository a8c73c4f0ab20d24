#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fischer/algebra.hpp"

using namespace fischer;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Structure constants expanded directly from the line list, independent of
// the collinearity tables the algebra uses.
struct BruteForce {
  int n;
  Rational gamma, delta;
  std::vector<Line> lines;

  [[nodiscard]] const Line* line_of(Point x, Point y) const {
    for (const Line& l : lines) {
      const bool hx = l[0] == x || l[1] == x || l[2] == x;
      const bool hy = l[0] == y || l[1] == y || l[2] == y;
      if (hx && hy) return &l;
    }
    return nullptr;
  }

  [[nodiscard]] VectorQ product(Point x, Point y) const {
    VectorQ v = VectorQ::Zero(n);
    if (x == y) {
      v(x) = 2;
    } else if (const Line* l = line_of(x, y)) {
      const Point z = (*l)[0] + (*l)[1] + (*l)[2] - x - y;
      v(x) += delta / q(2);
      v(y) += delta / q(2);
      v(z) -= delta / q(2);
    }
    return v;
  }

  [[nodiscard]] Rational form(Point x, Point y) const {
    if (x == y) return gamma / q(2);
    return line_of(x, y) ? delta * gamma / q(8) : q(0);
  }

  [[nodiscard]] VectorQ multiply(const VectorQ& a, const VectorQ& b) const {
    VectorQ v = VectorQ::Zero(n);
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y)
        if (!a(x).is_zero() && !b(y).is_zero()) v += product(x, y) * (a(x) * b(y));
    return v;
  }

  [[nodiscard]] Rational bform(const VectorQ& a, const VectorQ& b) const {
    Rational acc;
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y) acc += a(x) * b(y) * form(x, y);
    return acc;
  }
};

BruteForce brute(const FischerSpace& s, Rational gamma, Rational delta) {
  return {s.point_count(), std::move(gamma), std::move(delta), s.lines()};
}

VectorQ random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  VectorQ v(n);
  for (int i = 0; i < n; ++i) v(i) = coef(rng);
  return v;
}

// Affine3 points are 3i + j; row 0 is the line {00, 01, 02}.
VectorQ affine_eta(const MatsuoAlgebra& alg) {
  VectorQ eta = alg.sum({0, 1, 2}) * q(4, 5);
  eta(0) -= 1;
  return eta;
}

VectorQ affine_w(const MatsuoAlgebra& alg) { return alg.sum({3, 4, 5}) - alg.sum({6, 7, 8}); }

}  // namespace

TEST(Algebra, SymThreeProduct) {
  const MatsuoAlgebra alg(sym_space(3), q(1, 2), q(1, 2));
  const VectorQ p = alg.multiply(alg.basis(0), alg.basis(1));
  VectorQ expected(3);
  expected << q(1, 4), q(1, 4), q(-1, 4);
  EXPECT_EQ(p, expected);
}

TEST(Algebra, OrthogonalPointsMultiplyToZero) {
  const MatsuoAlgebra alg(sym_space(4), q(3, 7), q(5, 3));
  // (0 1) and (2 3) commute as transpositions.
  const Point a = 0, b = 5;
  ASSERT_FALSE(alg.space().collinear(a, b));
  EXPECT_TRUE(is_zero(alg.multiply(alg.basis(a), alg.basis(b))));
  EXPECT_EQ(alg.bform(alg.basis(a), alg.basis(b)), q(0));
}

TEST(Algebra, FanoCollinearForm) {
  const MatsuoAlgebra alg(fano_plane(), q(4, 5), q(2, 3));
  EXPECT_EQ(alg.bform(alg.basis(0), alg.basis(1)), q(1, 15));
  EXPECT_EQ(alg.bform(alg.basis(3), alg.basis(3)), q(2, 5));
}

TEST(Algebra, BasicIdentitiesAndErrors) {
  const MatsuoAlgebra alg(sym_space(5), q(1, 2), q(1, 2));
  for (Point x = 0; x < 10; ++x) EXPECT_EQ(alg.multiply(alg.basis(x), alg.basis(x)), alg.basis(x) * q(2));
  EXPECT_TRUE(is_zero(alg.multiply(alg.zero(), alg.sum({1, 2, 3}))));
  EXPECT_THROW((void)alg.multiply(VectorQ::Zero(3), alg.zero()), std::invalid_argument);
  EXPECT_THROW((void)alg.bform(alg.zero(), VectorQ::Zero(11)), std::invalid_argument);
  EXPECT_THROW(MatsuoAlgebra(sym_space(3), q(0), q(1, 2)), std::domain_error);
  EXPECT_THROW(MatsuoAlgebra(sym_space(3), q(-1, 2), q(1, 2)), std::domain_error);
}

TEST(Algebra, MatchesBruteForceExpansion) {
  std::mt19937 rng(7);
  for (const auto& [space, gamma, delta] :
       {std::tuple{sym_space(5), q(1, 2), q(1, 2)}, std::tuple{fano_plane(), q(4, 5), q(2, 3)},
        std::tuple{affine_plane(), q(3, 2), q(-1, 3)}, std::tuple{extend_space(sym_space(4), 1), q(1), q(1, 4)}}) {
    const MatsuoAlgebra alg(space, gamma, delta);
    const BruteForce oracle = brute(space, gamma, delta);
    for (int trial = 0; trial < 5; ++trial) {
      const VectorQ a = random_element(rng, space.point_count());
      const VectorQ b = random_element(rng, space.point_count());
      EXPECT_EQ(alg.multiply(a, b), oracle.multiply(a, b));
      EXPECT_EQ(alg.multiply(a, b), alg.multiply(b, a));
      EXPECT_EQ(alg.bform(a, b), oracle.bform(a, b));
      EXPECT_EQ(alg.ad(a) * b, oracle.multiply(a, b));
    }
  }
}

TEST(Algebra, GramFormula) {
  const MatsuoAlgebra alg(symplectic_space(6), q(1, 2), q(1, 2));
  const BruteForce oracle = brute(alg.space(), q(1, 2), q(1, 2));
  const MatrixQ g = alg.gram();
  for (Point x = 0; x < alg.space().point_count(); ++x)
    for (Point y = 0; y < alg.space().point_count(); ++y) ASSERT_EQ(g(x, y), oracle.form(x, y));
  EXPECT_TRUE(gram_and_radical(alg).gram_formula_ok);
}

// ---------------------------------------------------------------------------

TEST(Invariance, FischerSpacesAndFano) {
  for (const auto& s : {sym_space(5), extend_space(sym_space(4), 2), orthogonal_space(6, false), affine_plane(),
                        dual_affine_plane()}) {
    const auto r = check_invariance(MatsuoAlgebra(s, q(1, 2), q(1, 2)));
    EXPECT_TRUE(r.invariant) << s.label();
    EXPECT_TRUE(r.condition1 && r.condition2) << s.label();
  }
  const auto fano = check_invariance(MatsuoAlgebra(fano_plane(), q(4, 5), q(2, 3)));
  EXPECT_TRUE(fano.invariant);
  EXPECT_TRUE(fano.condition1);
  EXPECT_TRUE(fano.condition2);
}

TEST(Invariance, FivePointSpaceFailsConditionTwo) {
  const FischerSpace s(5, {{1, 2, 3}, {0, 3, 4}}, "five");
  const MatsuoAlgebra alg(s, q(1, 2), q(1, 2));
  const auto r = check_invariance(alg);
  EXPECT_FALSE(r.invariant);
  ASSERT_TRUE(r.witness.has_value());
  const auto [e, f, g] = *r.witness;
  const BruteForce oracle = brute(s, q(1, 2), q(1, 2));
  EXPECT_NE(oracle.bform(oracle.product(e, f), alg.basis(g)), oracle.bform(alg.basis(f), oracle.product(e, g)));
  EXPECT_TRUE(r.condition1);
  EXPECT_FALSE(r.condition2);
  ASSERT_TRUE(r.condition2_witness.has_value());
  const auto [x, y, z] = *r.condition2_witness;
  EXPECT_FALSE(s.collinear(x, y));
  EXPECT_TRUE(s.collinear(y, z));
  EXPECT_FALSE(s.collinear(z, x));
  EXPECT_TRUE(s.collinear(x, s.third(y, z)));
}

TEST(Invariance, AgreesWithCombinatorialConditionsOnRandomSpaces) {
  std::mt19937 rng(11);
  int failing = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    std::vector<Line> lines;
    std::set<std::pair<Point, Point>> used;
    for (int attempt = 0; attempt < 12; ++attempt) {
      Line l{static_cast<Point>(rng() % n), static_cast<Point>(rng() % n), static_cast<Point>(rng() % n)};
      std::sort(l.begin(), l.end());
      if (l[0] == l[1] || l[1] == l[2]) continue;
      if (used.count({l[0], l[1]}) || used.count({l[0], l[2]}) || used.count({l[1], l[2]})) continue;
      used.insert({l[0], l[1]});
      used.insert({l[0], l[2]});
      used.insert({l[1], l[2]});
      lines.push_back(l);
    }
    const FischerSpace s(n, lines, "random");
    const auto r = check_invariance(MatsuoAlgebra(s, q(1, 2), q(1, 2)));
    EXPECT_EQ(r.invariant, r.condition1 && r.condition2) << to_space_text(s);
    failing += r.invariant ? 0 : 1;
  }
  EXPECT_GT(failing, 0);
}

// ---------------------------------------------------------------------------

TEST(Unity, RegularClosedForms) {
  for (const Rational& delta : {q(1, 2), q(1, 3), q(-1, 5), q(3)}) {
    const MatsuoAlgebra s3(sym_space(3), q(1, 2), delta);
    const auto u = unity(s3);
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(*u, s3.sum({0, 1, 2}) * (q(4) / (q(4) + q(2) * delta)));

    const MatsuoAlgebra a3(affine_plane(), q(1, 2), delta);
    const auto ua = unity(a3);
    ASSERT_TRUE(ua.has_value());
    EXPECT_EQ((*ua)(4), q(4) / (q(4) + q(8) * delta));
  }
  const MatsuoAlgebra fano(fano_plane(), q(4, 5), q(2, 3));
  const auto u = unity(fano);
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(*u, fano.sum({0, 1, 2, 3, 4, 5, 6}) * q(1, 2));
  for (Point x = 0; x < 7; ++x) EXPECT_EQ(fano.multiply(*u, fano.basis(x)), fano.basis(x) * q(2));
}

TEST(Unity, FanoHasNoUnityAtMinusTwoThirds) {
  EXPECT_FALSE(unity(MatsuoAlgebra(fano_plane(), q(4, 5), q(-2, 3))).has_value());
  EXPECT_FALSE(central_charge(MatsuoAlgebra(fano_plane(), q(4, 5), q(-2, 3))).has_value());
}

TEST(Unity, IrregularSpaces) {
  // A line plus an isolated point: 4/(4 + 2 delta) on the line, 1 on the point.
  const FischerSpace s(4, {{0, 1, 2}}, "line+point");
  const MatsuoAlgebra alg(s, q(1, 2), q(1, 2));
  const auto u = unity(alg);
  ASSERT_TRUE(u.has_value());
  VectorQ expected(4);
  expected << q(4, 5), q(4, 5), q(4, 5), q(1);
  EXPECT_EQ(*u, expected);

  // Two lines through 0: the line equations force a constant c, then the
  // point equations need 2c + 2 delta c = 2 at 0 and 2c + delta c = 2 elsewhere.
  const FischerSpace bowtie(5, {{0, 1, 2}, {0, 3, 4}}, "bowtie");
  EXPECT_FALSE(unity(MatsuoAlgebra(bowtie, q(1, 2), q(1, 2))).has_value());
  EXPECT_TRUE(unity(MatsuoAlgebra(bowtie, q(1, 2), q(0))).has_value());
}

TEST(Unity, CentralCharges) {
  EXPECT_EQ(central_charge(MatsuoAlgebra(sym_space(3), q(1, 2), q(1, 2))), q(6, 5));
  EXPECT_EQ(central_charge(MatsuoAlgebra(fano_plane(), q(4, 5), q(2, 3))), q(14, 5));
  EXPECT_EQ(central_charge(MatsuoAlgebra(orthogonal_space(10, true), q(1, 2), q(1, 2))), q(8));
  // 4 gamma nu / (4 + k delta) on Sp(6): nu = 63, k = 32.
  EXPECT_EQ(central_charge(MatsuoAlgebra(symplectic_space(6), q(1, 2), q(1, 2))), q(4 * 63, 2 * 20));
}

TEST(SubConformal, AffineEta) {
  const MatsuoAlgebra alg(affine_plane(), q(1, 2), q(1, 2));
  const VectorQ omega_row = sub_conformal(alg, {0, 1, 2});
  EXPECT_EQ(omega_row, alg.sum({0, 1, 2}) * q(4, 5));
  const VectorQ eta = omega_row - alg.basis(0);
  EXPECT_EQ(eta, affine_eta(alg));
  EXPECT_EQ(alg.multiply(eta, eta), eta * q(2));
  EXPECT_EQ(q(2) * alg.bform(eta, eta), q(7, 10));
  const VectorQ w = affine_w(alg);
  EXPECT_EQ(alg.multiply(eta, w), w * q(7, 10));

  const BruteForce oracle = brute(alg.space(), q(1, 2), q(1, 2));
  EXPECT_EQ(alg.bform(w, w), oracle.bform(w, w));
  EXPECT_NE(alg.bform(w, w), q(0));

  const ElementSpectrum spec = element_spectrum(alg, eta);
  bool has = false;
  for (const auto& [value, mult] : spec.roots) has = has || value == q(7, 10);
  EXPECT_TRUE(has);
}

TEST(SubConformal, SymFourChain) {
  for (const auto& [gamma, delta] : {std::pair{q(1, 2), q(1, 2)}, std::pair{q(2), q(1, 3)}, std::pair{q(1), q(3, 4)}}) {
    const MatsuoAlgebra alg(sym_space(4), gamma, delta);
    // (0 1), (0 2), (1 2) are points 0, 1, 3.
    const VectorQ xi = sub_conformal(alg, {0});
    const VectorQ eta = sub_conformal(alg, {0, 1, 3}) - xi;
    const VectorQ zeta = *unity(alg) - sub_conformal(alg, {0, 1, 3});
    for (const VectorQ& v : {xi, eta, zeta}) EXPECT_EQ(alg.multiply(v, v), v * q(2));
    EXPECT_EQ(q(2) * alg.bform(xi, xi), gamma);
    EXPECT_EQ(q(2) * alg.bform(eta, eta), (q(4) - delta) * gamma / (q(2) + delta));
    EXPECT_EQ(q(2) * alg.bform(zeta, zeta), q(6) * gamma / ((q(1) + delta) * (q(2) + delta)));
  }
}

TEST(SubConformal, WholeSpaceAndErrors) {
  const MatsuoAlgebra alg(sym_space(4), q(1, 2), q(1, 2));
  EXPECT_EQ(sub_conformal(alg, {0, 1, 2, 3, 4, 5}), *unity(alg));
  EXPECT_THROW((void)sub_conformal(alg, {0, 1}), std::domain_error);
}

// ---------------------------------------------------------------------------

TEST(AdSpectrum, SymThree) {
  const MatsuoAlgebra alg(sym_space(3), q(1, 2), q(1, 2));
  const AdSpectrum spec = ad_spectrum(alg, 0);
  EXPECT_TRUE(spec.diagonalizable);
  EXPECT_TRUE(spec.minimal_polynomial_ok);
  EXPECT_EQ(spec.dimension_of(q(0)), 1);
  EXPECT_EQ(spec.dimension_of(q(1, 2)), 1);
  EXPECT_EQ(spec.dimension_of(q(2)), 1);
  ASSERT_EQ(spec.spaces.size(), 3U);
  EXPECT_EQ(spec.spaces[1].value, q(1, 2));
  const VectorQ v = spec.spaces[1].basis.col(0);
  EXPECT_TRUE(v(0).is_zero());
  EXPECT_EQ(v(1), -v(2));
  for (const auto& sp : spec.spaces)
    for (Index c = 0; c < sp.basis.cols(); ++c)
      EXPECT_EQ(alg.ad(Point{0}) * sp.basis.col(c), sp.basis.col(c) * sp.value);
}

TEST(AdSpectrum, AgreesWithCharacteristicPolynomial) {
  for (const auto& s : {sym_space(5), extend_space(sym_space(4), 1), orthogonal_space(6, false)}) {
    const MatsuoAlgebra alg(s, q(1, 2), q(1, 2));
    const AdSpectrum spec = ad_spectrum(alg, 0);
    EXPECT_TRUE(spec.diagonalizable);
    const ElementSpectrum full = element_spectrum(alg, alg.basis(0));
    EXPECT_TRUE(full.residual.size() <= 1);
    for (std::size_t i = 0; i < full.roots.size(); ++i) {
      EXPECT_EQ(spec.dimension_of(full.roots[i].first), full.roots[i].second);
      EXPECT_EQ(full.geometric[i], full.roots[i].second);
    }
  }
}

TEST(AdSpectrum, LinesThroughThePointSplitAdOnAnySpace) {
  // ad_0 preserves the span of each line through 0, so it splits even though
  // the two lines violate the Fischer axiom.
  const FischerSpace s(6, {{0, 1, 2}, {0, 3, 4}}, "bowtie+point");
  ASSERT_FALSE(verify_fischer_axiom(s).is_fischer);
  const AdSpectrum spec = ad_spectrum(MatsuoAlgebra(s, q(1, 2), q(1, 2)), 0);
  EXPECT_TRUE(spec.diagonalizable);
  EXPECT_EQ(spec.residual_dim, 0);
  EXPECT_TRUE(spec.minimal_polynomial_ok);
  EXPECT_EQ(spec.dimension_of(q(2)), 1);
  EXPECT_EQ(spec.dimension_of(q(1, 2)), 2);
  EXPECT_EQ(spec.dimension_of(q(0)), 3);
}

TEST(Fusion, SymThreePasses) {
  const MatsuoAlgebra alg(sym_space(3), q(1, 2), q(1, 2));
  const FusionReport r = check_fusion(alg, 0);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.passed);
  const VectorQ v = alg.basis(1) - alg.basis(2);
  VectorQ expected(3);
  expected << q(1, 2), q(3, 2), q(3, 2);
  EXPECT_EQ(alg.multiply(v, v), expected);
}

TEST(Fusion, FanoFailsWithWitness) {
  const MatsuoAlgebra alg(fano_plane(), q(4, 5), q(2, 3));
  const AdSpectrum spec = ad_spectrum(alg, 0);
  EXPECT_TRUE(spec.diagonalizable);
  const FusionReport r = check_fusion(alg, 0);
  ASSERT_TRUE(r.applicable);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  const auto& w = *r.witness;
  const MatrixQ ad = alg.ad(Point{0});
  EXPECT_EQ(ad * w.left, w.left * w.left_value);
  EXPECT_EQ(ad * w.right, w.right * w.right_value);
  const BruteForce oracle = brute(alg.space(), q(4, 5), q(2, 3));
  EXPECT_EQ(w.product, oracle.multiply(w.left, w.right));
  const bool odd = (w.left_value == alg.delta()) != (w.right_value == alg.delta());
  if (odd) {
    EXPECT_NE(ad * w.product, w.product * alg.delta());
  } else {
    EXPECT_FALSE(is_zero(VectorQ(ad * (ad * w.product - w.product * q(2)))));
  }
}

TEST(Fusion, NotApplicableAtDegenerateDelta) {
  EXPECT_FALSE(check_fusion(MatsuoAlgebra(sym_space(4), q(1, 2), q(2)), 0).applicable);
  EXPECT_FALSE(check_fusion(MatsuoAlgebra(sym_space(4), q(1, 2), q(0)), 0).applicable);
}

TEST(Sigma, SymThreeSwap) {
  const MatsuoAlgebra alg(sym_space(3), q(1, 2), q(1, 2));
  const SigmaReport r = sigma_linear(alg, 0);
  ASSERT_TRUE(r.applicable);
  MatrixQ expected = MatrixQ::Zero(3, 3);
  expected(0, 0) = 1;
  expected(1, 2) = 1;
  expected(2, 1) = 1;
  EXPECT_EQ(r.matrix, expected);
  EXPECT_TRUE(r.involution && r.isometry && r.automorphism && r.matches_point_map);
}

TEST(Sigma, SymFourIsometryByDirectCheck) {
  const MatsuoAlgebra alg(sym_space(4), q(1, 2), q(1, 2));
  const SigmaReport r = sigma_linear(alg, 2);
  ASSERT_TRUE(r.applicable);
  EXPECT_TRUE(r.isometry);
  const MatrixQ g = alg.gram();
  EXPECT_EQ(MatrixQ(r.matrix.transpose() * g * r.matrix), g);
  EXPECT_EQ(MatrixQ(r.matrix * r.matrix), MatrixQ(MatrixQ::Identity(6, 6)));
}

TEST(Sigma, FanoNotAnAutomorphism) {
  const MatsuoAlgebra alg(fano_plane(), q(4, 5), q(2, 3));
  const SigmaReport r = sigma_linear(alg, 0);
  ASSERT_TRUE(r.applicable);
  EXPECT_FALSE(r.automorphism);
  ASSERT_TRUE(r.automorphism_witness.has_value());
  const auto [x, y] = *r.automorphism_witness;
  EXPECT_NE(VectorQ(r.matrix * alg.multiply(alg.basis(x), alg.basis(y))),
            alg.multiply(r.matrix.col(x), r.matrix.col(y)));
}

// ---------------------------------------------------------------------------

TEST(Radical, SymmetricGroups) {
  for (int n = 4; n <= 7; ++n) {
    const GramReport r = gram_and_radical(MatsuoAlgebra(sym_space(n), q(1, 2), q(1, 2)));
    EXPECT_EQ(r.radical_dim, 0);
    EXPECT_EQ(r.quotient_dim, n * (n - 1) / 2);
    EXPECT_TRUE(r.radical_is_ideal);
  }
}

TEST(Radical, SecondExtensionOfSym) {
  for (int n = 4; n <= 6; ++n) {
    const MatsuoAlgebra alg(extend_space(sym_space(n), 2), q(1, 2), q(1, 2));
    const GramReport r = gram_and_radical(alg);
    EXPECT_EQ(r.radical_dim, n * (n - 3) / 2);
    EXPECT_EQ(r.quotient_dim, (3 * n - 1) * n / 2);
    EXPECT_TRUE(r.radical_is_ideal);
    EXPECT_TRUE(is_zero(MatrixQ(r.gram * r.radical_basis)));
  }
}

TEST(Radical, FirstExtensionOfSymFour) {
  const GramReport r = gram_and_radical(MatsuoAlgebra(extend_space(sym_space(4), 1), q(1, 2), q(1, 2)));
  EXPECT_EQ(r.radical_dim, 0);
  EXPECT_EQ(r.quotient_dim, 12);
}

TEST(Radical, OrthogonalTen) {
  const FischerSpace s = orthogonal_space(10, true);
  const GramReport r = gram_and_radical(MatsuoAlgebra(s, q(1, 2), q(1, 2)), orbit_representatives(s));
  EXPECT_EQ(r.quotient_dim, 156);
  EXPECT_EQ(r.radical_dim, 496 - 156);
  EXPECT_TRUE(r.radical_is_ideal);
}

TEST(Quotient, TrivialRadical) {
  const MatsuoAlgebra alg(sym_space(5), q(1, 2), q(1, 2));
  const QuotientAlgebra quo(alg);
  EXPECT_EQ(quo.dimension(), 10);
  const VectorQ v = alg.sum({1, 4, 7});
  EXPECT_EQ(quo.project(v), v);
  EXPECT_EQ(quo.multiply(v, v), alg.multiply(v, v));
  EXPECT_TRUE(quo.form_nondegenerate());
}

TEST(Quotient, ProjectionIsHomomorphism) {
  const MatsuoAlgebra alg(extend_space(sym_space(5), 2), q(1, 2), q(1, 2));
  const GramReport g = gram_and_radical(alg);
  const QuotientAlgebra quo(alg, g);
  EXPECT_EQ(quo.dimension(), 35);
  EXPECT_TRUE(quo.form_nondegenerate());
  EXPECT_TRUE(quo.projection_is_homomorphism());
  for (Index c = 0; c < g.radical_basis.cols(); ++c) EXPECT_TRUE(is_zero(quo.project(g.radical_basis.col(c))));
  const VectorQ a = quo.project(alg.basis(3));
  EXPECT_EQ(quo.ad(a) * quo.project(alg.basis(17)), quo.multiply(a, quo.project(alg.basis(17))));
}

// ---------------------------------------------------------------------------

TEST(PropertySuite, SmallFischerSpacesPass) {
  for (const auto& s : {sym_space(4), sym_space(6), extend_space(sym_space(4), 2), symplectic_space(6),
                        orthogonal_space(6, false), dual_affine_plane(), affine_plane()}) {
    const PropertySuite r = run_property_suite(MatsuoAlgebra(s, q(1, 2), q(1, 2)));
    EXPECT_TRUE(r.passed()) << s.label() << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.checked.size(), static_cast<std::size_t>(s.point_count()));
  }
}

TEST(PropertySuite, FanoFails) {
  const PropertySuite r = run_property_suite(MatsuoAlgebra(fano_plane(), q(4, 5), q(2, 3)));
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.commutative);
  EXPECT_TRUE(r.invariant);
  EXPECT_FALSE(r.fusion);
  EXPECT_FALSE(r.sigma_automorphism);
  EXPECT_FALSE(r.transposition_orders);
}
