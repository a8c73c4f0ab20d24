#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fischer/linalg.hpp"
#include "fischer/spaces.hpp"

namespace fischer {

/// Coefficient vector over the point basis.
using AlgebraElement = VectorQ;

/// Commutative algebra on the points of a 3-point partial linear space with
/// products and form
///   x.x = 2x,                      (x|x) = gamma/2,
///   x.y = 0 for x, y not collinear, (x|y) = 0,
///   x.y = delta/2 (x + y - x o y),  (x|y) = delta gamma/8 for x ~ y.
class MatsuoAlgebra {
 public:
  /// Throws std::domain_error unless gamma > 0.
  MatsuoAlgebra(FischerSpace space, Rational gamma, Rational delta);

  [[nodiscard]] const FischerSpace& space() const noexcept { return space_; }
  [[nodiscard]] const Rational& gamma() const noexcept { return gamma_; }
  [[nodiscard]] const Rational& delta() const noexcept { return delta_; }
  [[nodiscard]] Index dimension() const noexcept { return space_.point_count(); }

  [[nodiscard]] AlgebraElement basis(Point x) const;
  [[nodiscard]] AlgebraElement zero() const { return AlgebraElement::Zero(dimension()); }
  [[nodiscard]] AlgebraElement sum(const std::vector<Point>& points) const;

  /// Throws std::invalid_argument on a length mismatch.
  [[nodiscard]] AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  [[nodiscard]] Rational bform(const AlgebraElement& a, const AlgebraElement& b) const;

  /// Matrix of v -> a.v in the point basis.
  [[nodiscard]] MatrixQ ad(const AlgebraElement& a) const;
  [[nodiscard]] MatrixQ ad(Point e) const;

  /// gamma/2 (I + delta/4 A).
  [[nodiscard]] MatrixQ gram() const;

 private:
  void check(const AlgebraElement& a) const;

  FischerSpace space_;
  Rational gamma_, delta_;
  Rational half_delta_, norm_, cross_;
};

// ---------------------------------------------------------------------------
// Invariance

struct InvarianceReport {
  bool invariant = true;  // (e.f|g) = (f|e.g) on basis triples
  std::optional<std::array<Point, 3>> witness;
  bool condition1 = true;  // x~y~z  =>  rel(x o y, z) = rel(x, y o z)
  std::optional<std::array<Point, 3>> condition1_witness;
  bool condition2 = true;  // x _|_ y ~ z _|_ x  =>  x _|_ y o z
  std::optional<std::array<Point, 3>> condition2_witness;
};

/// Exhaustive over basis triples whose first entry is in `sources` (all
/// points when empty).
InvarianceReport check_invariance(const MatsuoAlgebra& alg, const std::vector<Point>& sources = {});

// ---------------------------------------------------------------------------
// Unity and idempotents

/// Element u with u.x = 2x for every point x, if one exists. Uses the closed
/// form 4/(4 + k delta) times the sum of all points on k-regular spaces and an
/// exact linear solve otherwise.
std::optional<AlgebraElement> unity(const MatsuoAlgebra& alg);

/// 2(u|u) for the unity u.
std::optional<Rational> central_charge(const MatsuoAlgebra& alg);

/// Unity of the subalgebra spanned by a third-point-closed point set,
/// embedded in the ambient algebra. Throws std::domain_error if the set is not
/// closed or the subalgebra has no unity.
AlgebraElement sub_conformal(const MatsuoAlgebra& alg, const std::vector<Point>& sub);

// ---------------------------------------------------------------------------
// Adjoint spectra

struct Eigenspace {
  Rational value;
  MatrixQ basis;  // columns
};

struct AdSpectrum {
  std::vector<Eigenspace> spaces;  // ascending by value, nonzero dimension only
  bool diagonalizable = false;     // the spaces add up to the whole algebra
  Index residual_dim = 0;
  bool minimal_polynomial_ok = false;  // ad(ad - delta)(ad - 2) = 0

  [[nodiscard]] Index dimension_of(const Rational& value) const;
};

/// Eigenspaces of ad_e for the eigenvalues 0, delta and 2.
AdSpectrum ad_spectrum(const MatsuoAlgebra& alg, Point e);

/// Eigenvalues of ad_a with algebraic multiplicities (from the characteristic
/// polynomial) and geometric dimensions; any irreducible non-linear factor is
/// left in `residual`.
struct ElementSpectrum {
  std::vector<std::pair<Rational, int>> roots;
  std::vector<Index> geometric;
  Polynomial residual;
};
ElementSpectrum element_spectrum(const MatsuoAlgebra& alg, const AlgebraElement& a);

struct FusionReport {
  bool applicable = false;
  bool passed = false;
  struct Witness {
    Rational left_value, right_value;  // eigenvalues of the two factors
    AlgebraElement left, right, product;
  };
  std::optional<Witness> witness;
};

/// With B[0] = eigenspaces 0 and 2 and B[1] = eigenspace delta of ad_e, checks
/// B[i].B[j] in B[i+j mod 2] on eigenbasis pairs.
FusionReport check_fusion(const MatsuoAlgebra& alg, Point e);

struct SigmaReport {
  bool applicable = false;
  MatrixQ matrix;  // column x is sigma_e(x)
  bool involution = false;
  bool isometry = false;
  bool automorphism = false;
  std::optional<std::pair<Point, Point>> automorphism_witness;
  bool matches_point_map = false;
};

/// Linear map fixing B[0] and negating B[1].
SigmaReport sigma_linear(const MatsuoAlgebra& alg, Point e);

// ---------------------------------------------------------------------------
// Gram matrix, radical, quotient

struct GramReport {
  MatrixQ gram;
  Index radical_dim = 0;
  MatrixQ radical_basis;  // columns, canonical
  std::vector<Point> quotient_points;  // leftmost pivots of the Gram matrix
  Index quotient_dim = 0;
  bool gram_formula_ok = false;  // gram = gamma/2 (I + delta/4 A)
  bool radical_is_ideal = false;
};

/// The ideal check multiplies the radical by the points in `ideal_sources`
/// (all points when empty).
GramReport gram_and_radical(const MatsuoAlgebra& alg, const std::vector<Point>& ideal_sources = {});

/// Quotient by the radical with the induced product and form.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(const MatsuoAlgebra& alg);
  QuotientAlgebra(const MatsuoAlgebra& alg, const GramReport& gram);

  [[nodiscard]] Index dimension() const { return static_cast<Index>(points_.size()); }
  [[nodiscard]] const std::vector<Point>& basis_points() const { return points_; }
  [[nodiscard]] const MatrixQ& gram() const { return gram_; }

  [[nodiscard]] VectorQ project(const AlgebraElement& v) const;
  [[nodiscard]] AlgebraElement lift(const VectorQ& q) const;
  [[nodiscard]] VectorQ multiply(const VectorQ& a, const VectorQ& b) const;
  [[nodiscard]] Rational bform(const VectorQ& a, const VectorQ& b) const;
  [[nodiscard]] MatrixQ ad(const VectorQ& a) const;

  /// pi(x.y) = pi(x).pi(y) and (pi x|pi y) = (x|y) for x in `sources` (all
  /// points when empty) and every point y.
  [[nodiscard]] bool projection_is_homomorphism(const std::vector<Point>& sources = {}) const;
  [[nodiscard]] bool form_nondegenerate() const;

 private:
  MatsuoAlgebra alg_;
  std::vector<Point> points_;
  std::vector<Point> free_;
  MatrixQ reduce_;  // rows: quotient coordinates; columns: free points
  MatrixQ gram_;
};

// ---------------------------------------------------------------------------
// Property suite

struct PropertySuite {
  bool commutative = true;
  bool invariant = true;
  bool idempotent_norms = true;
  bool minimal_polynomial = true;
  bool fusion = true;
  bool sigma_automorphism = true;
  bool sigma_isometry = true;
  bool sigma_involution = true;
  bool sigma_matches_points = true;
  bool transposition_orders = true;
  std::vector<Point> checked;  // the points e examined
  std::vector<std::string> failures;

  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// All checks for the points in `sources` (all points when empty).
PropertySuite run_property_suite(const MatsuoAlgebra& alg, const std::vector<Point>& sources = {});

}  // namespace fischer
