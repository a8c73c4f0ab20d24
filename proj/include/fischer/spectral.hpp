#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fischer/linalg.hpp"
#include "fischer/spaces.hpp"

namespace fischer {

/// Local counts that do not fit a strongly regular graph.
class InconsistentParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SrgReport {
  std::int64_t nu = 0, k = 0, lambda = 0, mu = 0;
  Rational r, s;
  std::int64_t g = 0;  // multiplicity of s
};

/// Parameters from nu, kbar = |non-neighbours of a point| and
/// mubar = |points perpendicular to both points of a collinear pair|:
///   k = nu - kbar - 1, lambda = mubar + 2k - nu, mu = k(k - 1 - lambda)/kbar,
/// r > s the roots of x^2 - (lambda - mu)x + (mu - k), g = (k + r(nu - 1))/(r - s).
/// Throws InconsistentParameters when mu, r, s or g is not integral.
SrgReport srg_from_local(std::int64_t nu, std::int64_t kbar, std::int64_t mubar);

/// Parameters read off the collinearity graph, if it is strongly regular with
/// rational eigenvalues (complete and edgeless graphs excluded).
std::optional<SrgReport> measure_srg(const FischerSpace& space);

/// kbar and mubar measured on the graph, if constant.
struct LocalCounts {
  std::int64_t nu = 0, kbar = 0, mubar = 0;
};
std::optional<LocalCounts> local_counts(const FischerSpace& space);

struct SpectrumReport {
  std::vector<std::pair<Rational, Index>> eigenvalues;  // ascending
  bool complete = false;  // rational eigenvalues account for every vertex
  Polynomial residual;    // factor without rational roots (charpoly route only)
  std::string method;     // "structure", "certified-probe", "exact-rank" or "charpoly"

  [[nodiscard]] std::optional<Rational> least() const;
  [[nodiscard]] Index multiplicity(const Rational& value) const;
  /// sum mult = nu, sum theta mult = 0 and sum theta^2 mult = 2|E|.
  [[nodiscard]] bool trace_identities(const FischerSpace& space) const;
};

/// Integer adjacency matrix of the collinearity graph.
MatrixQ adjacency_matrix(const FischerSpace& space);

/// Exact spectrum of the collinearity graph. Structural identities come
/// first: connected components, twin classes (points with equal
/// neighbourhoods, where A = J_t (x) A' up to relabelling), complete graphs and
/// strongly regular graphs. Other graphs go through candidate probing with
/// the certificate of certify_spectrum, then exact ranks, then the
/// characteristic polynomial.
SpectrumReport exact_spectrum(const FischerSpace& space);

/// Independent check of a complete spectrum: nullities of A - theta I modulo
/// a prime bound the multiplicities from above and the product of the
/// A - theta I must vanish exactly.
bool certify_spectrum(const FischerSpace& space, const SpectrumReport& report);

/// Exact test of x^T m x >= 0 for symmetric m by symmetric elimination.
bool positive_semidefinite(const MatrixQ& m);

inline const char* const kEigenvalueBound = "EIGENVALUE_BOUND";
inline const char* const kAffine3Present = "AFFINE3_PRESENT";
inline const char* const kNotFischer = "NOT_FISCHER";

struct GateVerdict {
  Rational gamma, delta;
  Rational bound;                 // -4/delta
  std::optional<Rational> least;  // absent when the spectrum has irrational parts
  bool fischer = false;
  bool eigenvalue_ok = false;     // s >= -4/delta
  bool symplectic_ok = false;     // no affine plane of order 3
  bool symplectic_binding = false;  // only at (gamma, delta) = (1/2, 1/2)
  bool accepted = false;
  Index bound_multiplicity = 0;   // multiplicity of -4/delta, the radical dimension
  std::vector<std::string> reasons;  // reason codes of a rejection
  std::vector<std::string> notes;
};

/// Throws std::domain_error unless delta > 0 and gamma > 0. The affine-plane
/// test only rejects at (1/2, 1/2); elsewhere it is reported as a note.
GateVerdict realizability_gate(const FischerSpace& space, const Rational& gamma, const Rational& delta);

/// Positivity of (2/(8 + k))(8I + A*) from the spectrum of A*.
struct QuotientPositivity {
  std::int64_t k = 0;
  Rational least;                    // least eigenvalue of A*
  std::vector<Rational> eigenvalues; // of the quotient matrix, ascending
  bool positive = false;
  bool semidefinite = false;
  Index kernel_dim = 0;
};
QuotientPositivity quotient_positivity(const SpectrumReport& base, std::int64_t k);

/// quotient_positivity with k the valency of `base`.
QuotientPositivity root_quotient_positivity(const FischerSpace& base);

/// Action of eta = w - w* on the span of the second copy of X* inside
/// Ext(1, X*), modulo the first copy, where w and w* are twice the units of the
/// two algebras. `direct` is computed from products in the algebra; `formula`
/// is (2 - 2 delta k*/(4 + k* delta)) I + (2 delta/(4 + k* delta)) A*.
struct EtaQuotientAction {
  std::int64_t k_base = 0;
  MatrixQ direct;
  MatrixQ formula;
  bool agrees = false;
};
EtaQuotientAction eta_quotient_action(const FischerSpace& base, const Rational& gamma, const Rational& delta);

/// g = |R+| - l(l + 1)/2 for the least eigenvalue of Root(series, rank).
struct RootMultiplicity {
  char series = 'D';
  int rank = 0;
  std::int64_t positive_roots = 0;
  Rational least;
  Index g = 0;
  std::int64_t formula = 0;
  bool ok = false;
};
/// Throws std::domain_error unless series is 'D' or 'E'.
RootMultiplicity root_multiplicity_check(char series, int rank);

}  // namespace fischer
