#include "fischer/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fischer {

FischerSpace::FischerSpace(int point_count, std::vector<Line> lines, std::string label, std::vector<std::string> names)
    : n_(point_count), lines_(std::move(lines)), label_(std::move(label)), names_(std::move(names)) {
  if (n_ < 0) throw std::invalid_argument("negative point count");
  if (!names_.empty() && static_cast<int>(names_.size()) != n_) throw std::invalid_argument("point name count mismatch");
  const auto n = static_cast<std::size_t>(n_);
  words_ = (n + 63) / 64;
  bits_.assign(n * words_, 0);
  third_.assign(n * n, -1);
  neighbors_.assign(n, {});

  for (auto& l : lines_) std::sort(l.begin(), l.end());
  std::sort(lines_.begin(), lines_.end());
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const Line& l = lines_[i];
    if (l[0] < 0 || l[2] >= n_) {
      throw std::invalid_argument("line " + std::to_string(i) + " has a point outside 0.." + std::to_string(n_ - 1));
    }
    if (l[0] == l[1] || l[1] == l[2]) throw std::invalid_argument("line " + std::to_string(i) + " repeats a point");
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        const auto x = static_cast<std::size_t>(l[a]);
        const auto y = static_cast<std::size_t>(l[b]);
        auto& slot = third_[x * n + y];
        if (slot != -1) {
          throw std::invalid_argument("lines share two points " + std::to_string(x) + " and " + std::to_string(y));
        }
        slot = l[3 - a - b];
        bits_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (third_[x * n + y] != -1) neighbors_[x].push_back(static_cast<Point>(y));
}

std::string FischerSpace::name(Point x) const {
  if (names_.empty()) return std::to_string(x);
  return names_[static_cast<std::size_t>(x)];
}

std::optional<int> FischerSpace::valency() const {
  if (n_ == 0) return 0;
  const int k = degree(0);
  for (Point x = 1; x < n_; ++x)
    if (degree(x) != k) return std::nullopt;
  return k;
}

int FischerSpace::common_neighbors(Point x, Point y) const {
  const auto* a = adjacency_row(x);
  const auto* b = adjacency_row(y);
  int count = 0;
  for (std::size_t w = 0; w < words_; ++w) count += __builtin_popcountll(a[w] & b[w]);
  return count;
}

Point third_point(const FischerSpace& space, Point x, Point y) {
  const int n = space.point_count();
  if (x < 0 || y < 0 || x >= n || y >= n) throw std::domain_error("third_point: point out of range");
  if (x == y) throw std::domain_error("third_point: points coincide");
  const Point z = space.third(x, y);
  if (z < 0) throw std::domain_error("third_point: points " + space.name(x) + " and " + space.name(y) + " are not collinear");
  return z;
}

Subspace induced_subspace(const FischerSpace& space, std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<int> local(static_cast<std::size_t>(space.point_count()), -1);
  for (std::size_t i = 0; i < points.size(); ++i) local[static_cast<std::size_t>(points[i])] = static_cast<int>(i);
  std::vector<Line> lines;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point x = points[i];
    names.push_back(space.name(x));
    for (Point y : space.neighbors(x)) {
      const Point z = space.third(x, y);
      if (x < y && y < z && local[static_cast<std::size_t>(y)] >= 0 && local[static_cast<std::size_t>(z)] >= 0) {
        lines.push_back({static_cast<Point>(i), local[static_cast<std::size_t>(y)], local[static_cast<std::size_t>(z)]});
      }
    }
  }
  Subspace out;
  out.space = FischerSpace(static_cast<int>(points.size()), std::move(lines), space.label() + "|sub", std::move(names));
  out.points = std::move(points);
  return out;
}

Subspace subspace_closure(const FischerSpace& space, const std::vector<Point>& seed) {
  std::vector<bool> in(static_cast<std::size_t>(space.point_count()), false);
  std::vector<Point> members;
  auto add = [&](Point p) {
    if (p < 0 || p >= space.point_count()) throw std::domain_error("subspace_closure: point out of range");
    if (!in[static_cast<std::size_t>(p)]) {
      in[static_cast<std::size_t>(p)] = true;
      members.push_back(p);
    }
  };
  for (Point p : seed) add(p);
  // Each newly added point is paired with every earlier member exactly once.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Point z = space.third(members[i], members[j]);
      if (z >= 0) add(z);
    }
  }
  return induced_subspace(space, members);
}

Subspace plane_span(const FischerSpace& space, const Line& l1, const Line& l2) {
  int shared = 0;
  for (Point a : l1)
    for (Point b : l2) shared += a == b;
  if (shared != 1) throw std::domain_error("plane_span: lines must be distinct and intersecting");
  return subspace_closure(space, {l1[0], l1[1], l1[2], l2[0], l2[1], l2[2]});
}

bool is_dual_affine_plane(const FischerSpace& s) {
  if (s.point_count() != 6 || s.lines().size() != 4) return false;
  for (Point x = 0; x < 6; ++x)
    if (s.degree(x) != 4) return false;  // two lines through every point
  return true;
}

bool is_affine_plane(const FischerSpace& s) {
  if (s.point_count() != 9 || s.lines().size() != 12) return false;
  for (Point x = 0; x < 9; ++x)
    if (s.degree(x) != 8) return false;
  return true;
}

AxiomReport verify_fischer_axiom(const FischerSpace& space) {
  AxiomReport report;
  std::int64_t dual_pairs = 0;
  std::int64_t affine_pairs = 0;
  auto fail = [&](const Line& l1, const Line& l2) {
    report.is_fischer = false;
    if (!report.witness) report.witness = std::make_pair(l1, l2);
  };

  std::vector<Line> through;
  for (Point x = 0; x < space.point_count(); ++x) {
    through.clear();
    for (Point y : space.neighbors(x)) {
      const Point z = space.third(x, y);
      if (y < z) through.push_back({x, y, z});
    }
    for (std::size_t i = 0; i < through.size(); ++i) {
      const Point a = through[i][1], b = through[i][2];
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        const Point c = through[j][1], d = through[j][2];
        const int links = space.collinear(a, c) + space.collinear(a, d) + space.collinear(b, c) + space.collinear(b, d);
        if (links == 2) {
          // Octahedron: a~c, b~d (or a~d, b~c) meeting in a sixth point opposite x.
          const Point p = space.collinear(a, c) ? c : d;
          const Point q = p == c ? d : c;
          const Point e = space.third(a, p);
          if (space.collinear(b, q) && space.third(b, q) == e && !space.collinear(x, e)) {
            ++dual_pairs;
            continue;
          }
        }
        auto sort_line = [](Line l) {
          std::sort(l.begin(), l.end());
          return l;
        };
        const Line l1 = sort_line(through[i]);
        const Line l2 = sort_line(through[j]);
        if (links == 4) {
          const Subspace span = plane_span(space, l1, l2);
          if (is_affine_plane(span.space)) {
            ++affine_pairs;
            continue;
          }
        }
        fail(l1, l2);
      }
    }
  }
  // Each dual affine plane contains 6 intersecting line pairs, each affine plane 54.
  report.dual_affine_planes = dual_pairs / 6;
  report.affine_planes = affine_pairs / 54;
  return report;
}

bool PointPermutation::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<Point>(i)) return false;
  return true;
}

PointPermutation PointPermutation::compose(const PointPermutation& after) const {
  PointPermutation out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) out.image[i] = after.image[static_cast<std::size_t>(image[i])];
  return out;
}

std::int64_t PointPermutation::order() const {
  std::vector<bool> seen(image.size(), false);
  std::int64_t result = 1;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

PointPermutation sigma_point_map(const FischerSpace& space, Point x) {
  PointPermutation p;
  p.image.resize(static_cast<std::size_t>(space.point_count()));
  std::iota(p.image.begin(), p.image.end(), 0);
  for (Point y : space.neighbors(x)) p.image[static_cast<std::size_t>(y)] = space.third(x, y);
  return p;
}

std::optional<Line> non_preserved_line(const FischerSpace& space, const PointPermutation& p) {
  for (const Line& l : space.lines()) {
    const Point a = p.image[static_cast<std::size_t>(l[0])];
    const Point b = p.image[static_cast<std::size_t>(l[1])];
    const Point c = p.image[static_cast<std::size_t>(l[2])];
    if (space.third(a, b) != c) return l;
  }
  return std::nullopt;
}

TranspositionReport verify_3transposition(const FischerSpace& space, const std::vector<Point>& sources) {
  TranspositionReport report;
  const int n = space.point_count();
  std::vector<PointPermutation> sigma;
  sigma.reserve(static_cast<std::size_t>(n));
  for (Point x = 0; x < n; ++x) sigma.push_back(sigma_point_map(space, x));

  std::vector<Point> xs = sources;
  if (xs.empty()) {
    xs.resize(static_cast<std::size_t>(n));
    std::iota(xs.begin(), xs.end(), 0);
  }
  for (Point x : xs) {
    const auto& sx = sigma[static_cast<std::size_t>(x)];
    if (auto bad = non_preserved_line(space, sx)) {
      report.automorphisms = false;
      if (!report.line_witness) report.line_witness = std::make_pair(x, *bad);
    }
    for (Point y = 0; y < n; ++y) {
      const std::int64_t ord = sx.compose(sigma[static_cast<std::size_t>(y)]).order();
      report.max_order = std::max(report.max_order, ord);
      if (ord > 3) {
        report.orders_ok = false;
        if (!report.order_witness) report.order_witness = std::make_pair(x, y);
      }
    }
  }

  std::vector<Point> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](Point x) -> const std::vector<Point>& { return sigma[static_cast<std::size_t>(x)].image; };
  std::sort(order.begin(), order.end(), [&](Point a, Point b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (key(order[i - 1]) == key(order[i])) {
      report.injective = false;
      report.injectivity_witness = std::make_pair(std::min(order[i - 1], order[i]), std::max(order[i - 1], order[i]));
      break;
    }
  }
  return report;
}

namespace {

std::vector<std::vector<Point>> components_by(const FischerSpace& space, bool via_third) {
  const int n = space.point_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Point>> out;
  for (Point s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.push_back({s});
    comp[static_cast<std::size_t>(s)] = id;
    for (std::size_t i = 0; i < out.back().size(); ++i) {
      const Point p = out[static_cast<std::size_t>(id)][i];
      for (Point q : space.neighbors(p)) {
        // sigma_q moves p to q o p; plain connectivity steps to q itself.
        const Point next = via_third ? space.third(q, p) : q;
        if (comp[static_cast<std::size_t>(next)] < 0) {
          comp[static_cast<std::size_t>(next)] = id;
          out[static_cast<std::size_t>(id)].push_back(next);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace

std::vector<std::vector<Point>> connected_components(const FischerSpace& space) { return components_by(space, false); }

std::vector<std::vector<Point>> sigma_orbits(const FischerSpace& space) { return components_by(space, true); }

std::vector<Point> orbit_representatives(const FischerSpace& space) {
  std::vector<Point> reps;
  for (const auto& orbit : sigma_orbits(space)) reps.push_back(orbit.front());
  return reps;
}

}  // namespace fischer
