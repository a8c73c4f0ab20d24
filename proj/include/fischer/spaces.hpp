#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fischer {

using Point = int;
using Line = std::array<Point, 3>;

/// Finite partial linear space with 3-point lines.
///
/// Points are 0..point_count()-1. Lines are stored as sorted triples in
/// lexicographic order. Collinearity is kept as a dense bitset and the third
/// point of every collinear pair as a lookup table, so all queries are O(1).
class FischerSpace {
 public:
  FischerSpace() = default;

  /// Throws std::invalid_argument if a line has repeated or out-of-range
  /// points, or if two lines share more than one point.
  FischerSpace(int point_count, std::vector<Line> lines, std::string label = {},
               std::vector<std::string> names = {});

  [[nodiscard]] int point_count() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Line>& lines() const noexcept { return lines_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] std::string name(Point x) const;

  [[nodiscard]] bool collinear(Point x, Point y) const noexcept {
    return (bits_[row_offset(x) + static_cast<std::size_t>(y) / 64] >> (static_cast<unsigned>(y) % 64)) & 1U;
  }
  /// Third point of the line through x and y, or -1 if there is none.
  [[nodiscard]] Point third(Point x, Point y) const noexcept {
    return third_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
  }
  [[nodiscard]] const std::vector<Point>& neighbors(Point x) const { return neighbors_[static_cast<std::size_t>(x)]; }
  [[nodiscard]] int degree(Point x) const { return static_cast<int>(neighbors(x).size()); }

  /// Common valency if the collinearity graph is regular.
  [[nodiscard]] std::optional<int> valency() const;

  /// Number of common neighbours of x and y.
  [[nodiscard]] int common_neighbors(Point x, Point y) const;

  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }
  [[nodiscard]] const std::uint64_t* adjacency_row(Point x) const noexcept { return bits_.data() + row_offset(x); }

 private:
  [[nodiscard]] std::size_t row_offset(Point x) const noexcept { return static_cast<std::size_t>(x) * words_; }

  int n_ = 0;
  std::vector<Line> lines_;
  std::string label_;
  std::vector<std::string> names_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::int32_t> third_;
  std::vector<std::vector<Point>> neighbors_;
};

/// Recipe for one of the built-in spaces. `dim` is the GF(2) dimension for the
/// classical families (Sp(2n), O+(2n), O-(2n)) and n for Sym(n).
struct SpaceSpec {
  enum class Kind { Sym, Sp, OPlus, OMinus, Ext, DualAffine2, Affine3, Fano, Root, File };

  Kind kind = Kind::Sym;
  int dim = 0;
  int m = 0;                          // Ext exponent
  char series = 'A';                  // Root series
  std::shared_ptr<const SpaceSpec> inner;
  std::string path;

  static SpaceSpec of(Kind kind, int dim = 0) {
    SpaceSpec s;
    s.kind = kind;
    s.dim = dim;
    return s;
  }
  static SpaceSpec sym(int n) { return of(Kind::Sym, n); }
  static SpaceSpec sp(int dim) { return of(Kind::Sp, dim); }
  static SpaceSpec oplus(int dim) { return of(Kind::OPlus, dim); }
  static SpaceSpec ominus(int dim) { return of(Kind::OMinus, dim); }
  static SpaceSpec ext(int m, SpaceSpec base);
  static SpaceSpec root(char series, int rank);
  static SpaceSpec file(std::string path);

  /// Text form accepted by parse_spec in the command-line front end.
  [[nodiscard]] std::string text() const;
};

FischerSpace build_space(const SpaceSpec& spec);

FischerSpace sym_space(int n);
FischerSpace symplectic_space(int dim);
FischerSpace orthogonal_space(int dim, bool plus);
FischerSpace extend_space(const FischerSpace& base, int m);
FischerSpace dual_affine_plane();
FischerSpace affine_plane();
FischerSpace fano_plane();
FischerSpace root_space(char series, int rank);
FischerSpace disjoint_union(const FischerSpace& a, const FischerSpace& b);

/// Throws std::domain_error unless x and y are distinct collinear points.
Point third_point(const FischerSpace& space, Point x, Point y);

/// A subspace together with the ambient ids of its points (points[i] is the
/// ambient id of subspace point i, ascending).
struct Subspace {
  FischerSpace space;
  std::vector<Point> points;
};

/// Space induced on a point subset: every ambient line inside the subset.
Subspace induced_subspace(const FischerSpace& space, std::vector<Point> points);

/// Smallest superset of `seed` closed under taking third points.
Subspace subspace_closure(const FischerSpace& space, const std::vector<Point>& seed);

/// Closure of two distinct intersecting lines. Throws std::domain_error otherwise.
Subspace plane_span(const FischerSpace& space, const Line& l1, const Line& l2);

bool is_dual_affine_plane(const FischerSpace& s);
bool is_affine_plane(const FischerSpace& s);

struct AxiomReport {
  bool is_partial_linear = true;
  bool is_fischer = true;
  std::int64_t dual_affine_planes = 0;
  std::int64_t affine_planes = 0;
  std::optional<std::pair<Line, Line>> witness;

  [[nodiscard]] bool symplectic_type() const { return affine_planes == 0; }
};

/// Classifies the span of every pair of intersecting lines.
AxiomReport verify_fischer_axiom(const FischerSpace& space);

struct PointPermutation {
  std::vector<Point> image;

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] PointPermutation compose(const PointPermutation& after) const;  // after o this
  [[nodiscard]] std::int64_t order() const;
  bool operator==(const PointPermutation&) const = default;
};

/// Fixes x and the points not collinear with it; swaps y with x o y.
PointPermutation sigma_point_map(const FischerSpace& space, Point x);

/// First line whose image under `p` is not a line, if any.
std::optional<Line> non_preserved_line(const FischerSpace& space, const PointPermutation& p);

struct TranspositionReport {
  bool automorphisms = true;                       // every sigma_x preserves lines
  std::optional<std::pair<Point, Line>> line_witness;
  bool orders_ok = true;                           // order(sigma_x sigma_y) in {1,2,3}
  std::optional<std::pair<Point, Point>> order_witness;
  std::int64_t max_order = 1;
  bool injective = true;                           // x -> sigma_x
  std::optional<std::pair<Point, Point>> injectivity_witness;

  [[nodiscard]] bool passed() const { return automorphisms && orders_ok; }
};

/// Checks the sigma point maps of `sources` against every point (all points
/// when `sources` is empty).
TranspositionReport verify_3transposition(const FischerSpace& space, const std::vector<Point>& sources = {});

std::vector<std::vector<Point>> connected_components(const FischerSpace& space);

/// Orbits of the group generated by the sigma point maps.
std::vector<std::vector<Point>> sigma_orbits(const FischerSpace& space);

/// Smallest point of each sigma orbit.
std::vector<Point> orbit_representatives(const FischerSpace& space);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Text format: "points N", then "line i j k" entries; '#' starts a comment.
/// Throws ParseError carrying the 1-based line number.
FischerSpace parse_space_text(const std::string& text, const std::string& label = "file");
FischerSpace load_space_file(const std::string& path);
std::string to_space_text(const FischerSpace& space);

/// {"label":..., "points":N, "lines":[[i,j,k],...]} with sorted lines.
std::string to_json_text(const FischerSpace& space);
FischerSpace space_from_json_text(const std::string& text);

}  // namespace fischer
