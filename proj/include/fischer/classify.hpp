#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fischer/algebra.hpp"
#include "fischer/spaces.hpp"
#include "fischer/spectral.hpp"

namespace fischer {

/// One row of the diagram-parameter tables. c and d are only filled for the
/// realizable list (c = 4 nu gamma/(4 + k delta) and d = nu - mult(-8) at
/// gamma = delta = 1/2).
struct TableRow {
  std::string group;
  std::string spec;  // space recipe, parse_spec syntax
  std::int64_t nu = 0, k = 0;
  std::optional<std::int64_t> lambda;  // not part of the realizable list
  Rational s;
  std::int64_t g = 0;
  std::optional<Rational> c;
  std::optional<std::int64_t> d;
};

/// A printed value that contradicts an independent consistency check, with
/// the value the construction gives instead.
struct Erratum {
  std::string column;
  std::string printed;
  std::string corrected;
  std::string evidence;
};

struct RowCheck {
  TableRow printed;
  TableRow computed;
  std::vector<std::string> mismatches;  // "column: computed X, printed Y"
  std::vector<Erratum> errata;

  [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

// ---------------------------------------------------------------------------
// Printed closed forms

enum class Family { Sym, OPlus, OMinus, Sp };

/// kbar and mubar of the family at n, as printed.
LocalCounts table2_formula(Family family, int n);

/// Parameters (nu, k, lambda, s, g) of the diagram of the family at n, as
/// printed: S_n (n >= 4), O+_2n(2) (n >= 4), O-_2n(2) (n >= 3), Sp_2n(2) (n >= 3).
TableRow table3_formula(Family family, int n);
/// The S_3 row.
TableRow table3_s3();
/// F^m:G* from G*: 2^m nu*, 2^m k*, 2^m lambda*, 2^m s*, g*.
TableRow table3_extension(const TableRow& base, int m);

/// Rows of the realizable list as printed, with the generic rows (S_n,
/// F:S_n, F^2:S_n) at the given n.
std::vector<TableRow> table4_printed(int n);

// ---------------------------------------------------------------------------
// Reproduction

/// nu, k, lambda, s and g measured on the space; with `realizable`, also c
/// from the unity of the algebra at (1/2, 1/2) and d from the spectrum.
TableRow measure_row(const std::string& group, const std::string& spec, const FischerSpace& space, bool realizable);

/// Compares a measured row with a printed one. A printed lambda that no
/// strongly regular graph with the printed nu, k, s can have (mu would not be
/// an integer) is reported as an erratum when the measured row is consistent.
RowCheck compare_rows(const TableRow& printed, const TableRow& computed);

/// S_n (n = 3..8), Sp_6, Sp_8, O-_6, O-_8, O+_8, O+_10, and F^m:S_n for
/// m = 1, 2 and n = 4..6.
std::vector<RowCheck> table3();

/// All rows of the realizable list, generic rows at n = 4 and n = 5. The d
/// column is also recomputed as nu minus the radical dimension of the Gram
/// matrix; a disagreement is reported as a mismatch.
std::vector<RowCheck> table4();

// ---------------------------------------------------------------------------
// Candidate filter

struct Candidate {
  std::string group;  // base group, or family with its range
  Rational s;
  int max_m = 0;      // largest m with 2^m s >= -4/delta
};

struct CandidateList {
  Rational delta, bound;
  std::vector<Candidate> bases;
  std::vector<std::string> base_names;       // in the order of Hall's list
  std::vector<std::string> extension_names;  // F^m:G* for 1 <= m <= max_m
};

/// Hall's families of symplectic type whose least eigenvalue passes
/// s >= -4/delta, with their allowed extensions. S_4 is listed as 2^2:S_3, the
/// only extension of S_3 (larger ones coincide with extensions of S_4).
/// Throws std::domain_error unless delta > 0.
CandidateList enumerate_candidates(const Rational& delta);

// ---------------------------------------------------------------------------
// Chain of class S^4

/// d = c(-37 - 10c)/(-22 + 2c). Throws std::domain_error at c = 11.
Rational class_s4_dimension(const Rational& c);

struct ChainEntry {
  std::string group;
  Rational c;
  std::int64_t d = 0;
  Rational predicted;
  bool member = false;
  bool degenerate = false;  // the one-point space of S_2
};

struct ChainReport {
  std::vector<ChainEntry> entries;
  std::vector<std::pair<Rational, std::int64_t>> member_pairs;  // distinct (c, d), ascending
};

/// The one-point space S_2 followed by the computed rows of the realizable list.
ChainReport chain_check();

// ---------------------------------------------------------------------------
// Named computations

struct Affine3Witness {
  AlgebraElement eta, w;
  bool eta_idempotent = false;
  Rational c_eta;                // 2(eta|eta)
  bool w_is_eigenvector = false;
  Rational weight;               // eta.w = weight w
  Rational w_norm;               // (w|w)
  std::vector<Rational> allowed_weights;  // unitary highest weights at c = 7/10, as data
  bool weight_allowed = true;
  std::string reason;
};

/// eta = (4/5)(e00 + e01 + e02) - e00 and w = e10 + e11 + e12 - e20 - e21 - e22
/// in the affine plane of order 3 at (1/2, 1/2).
Affine3Witness affine3_witness();

struct RootEtaRow {
  std::string root;      // e.g. "D5"
  std::string base_group, group;
  Rational printed_c, computed_c;
  std::vector<Rational> printed_eigenvalues, computed_eigenvalues;
  bool complete = false;  // computed eigenspaces span the quotient
  std::vector<Erratum> errata;
  std::vector<std::string> mismatches;

  [[nodiscard]] bool ok() const { return complete && mismatches.empty(); }
};

/// eta = w - w* for X = Ext(1, X*) with X* = Root(series, rank), acting on
/// the quotient of the algebra of X by its radical at (1/2, 1/2). Candidates
/// are 0 and (2/(8 + k*))(8 + theta) for theta in the spectrum of X*.
RootEtaRow root_eta_row(char series, int rank);

/// A3, A4, D4, D5, D6, E6, E7, E8.
std::vector<RootEtaRow> root_eta_table();

}  // namespace fischer
