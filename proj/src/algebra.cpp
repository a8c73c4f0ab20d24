#include "fischer/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fischer {
namespace {

using Term = std::pair<Point, Rational>;
using Sparse = std::vector<Term>;

void normalize(Sparse& v) {
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Rational acc = v[i].second;
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].first == v[i].first; ++j) acc += v[j].second;
    if (!acc.is_zero()) v[out++] = {v[i].first, acc};
    i = j;
  }
  v.resize(out);
}

Sparse sparse_of(const VectorQ& v) {
  Sparse out;
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) out.emplace_back(static_cast<Point>(i), v(i));
  return out;
}

Sparse unit(Point x) { return {{x, Rational(1)}}; }

VectorQ dense_of(const Sparse& v, Index n) {
  VectorQ out = VectorQ::Zero(n);
  for (const auto& [x, c] : v) out(x) += c;
  return out;
}

Sparse scaled(Sparse v, const Rational& c) {
  if (c.is_zero()) return {};
  for (auto& t : v) t.second *= c;
  return v;
}

Sparse combine(Sparse a, const Sparse& b, const Rational& cb) {
  for (const auto& [x, c] : b) a.emplace_back(x, c * cb);
  normalize(a);
  return a;
}

bool equal(const Sparse& a, const Sparse& b) { return a == b; }

// Structure constants, kept apart from the class so the sparse helpers stay
// free functions.
struct Table {
  const FischerSpace& space;
  Rational half_delta, norm, cross;

  Sparse mul(const Sparse& a, const Sparse& b) const {
    Sparse out;
    for (const auto& [x, ax] : a) {
      for (const auto& [y, by] : b) {
        if (x == y) {
          out.emplace_back(x, Rational(2) * ax * by);
          continue;
        }
        const Point z = space.third(x, y);
        if (z < 0) continue;
        const Rational c = half_delta * ax * by;
        out.emplace_back(x, c);
        out.emplace_back(y, c);
        out.emplace_back(z, -c);
      }
    }
    normalize(out);
    return out;
  }

  Rational form(const Sparse& a, const Sparse& b) const {
    Rational acc;
    for (const auto& [x, ax] : a)
      for (const auto& [y, by] : b) {
        if (x == y) {
          acc += norm * ax * by;
        } else if (space.collinear(x, y)) {
          acc += cross * ax * by;
        }
      }
    return acc;
  }
};

Table table_of(const MatsuoAlgebra& alg) {
  return {alg.space(), alg.delta() / Rational(2), alg.gamma() / Rational(2),
          alg.delta() * alg.gamma() / Rational(8)};
}

std::vector<Point> all_points_if_empty(const FischerSpace& space, const std::vector<Point>& sources) {
  if (!sources.empty()) return sources;
  std::vector<Point> all(static_cast<std::size_t>(space.point_count()));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

MatsuoAlgebra::MatsuoAlgebra(FischerSpace space, Rational gamma, Rational delta)
    : space_(std::move(space)), gamma_(std::move(gamma)), delta_(std::move(delta)) {
  if (gamma_.sign() <= 0) throw std::domain_error("gamma must be positive");
  half_delta_ = delta_ / Rational(2);
  norm_ = gamma_ / Rational(2);
  cross_ = delta_ * gamma_ / Rational(8);
}

void MatsuoAlgebra::check(const AlgebraElement& a) const {
  if (a.size() != dimension()) {
    throw std::invalid_argument("element of length " + std::to_string(a.size()) + " in an algebra of dimension " +
                                std::to_string(dimension()));
  }
}

AlgebraElement MatsuoAlgebra::basis(Point x) const {
  if (x < 0 || x >= space_.point_count()) throw std::invalid_argument("basis: point out of range");
  AlgebraElement v = zero();
  v(x) = 1;
  return v;
}

AlgebraElement MatsuoAlgebra::sum(const std::vector<Point>& points) const {
  AlgebraElement v = zero();
  for (Point x : points) v(x) += 1;
  return v;
}

AlgebraElement MatsuoAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  return dense_of(table_of(*this).mul(sparse_of(a), sparse_of(b)), dimension());
}

Rational MatsuoAlgebra::bform(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  return table_of(*this).form(sparse_of(a), sparse_of(b));
}

MatrixQ MatsuoAlgebra::ad(const AlgebraElement& a) const {
  check(a);
  const Table t = table_of(*this);
  const Sparse sa = sparse_of(a);
  MatrixQ m = MatrixQ::Zero(dimension(), dimension());
  for (Point y = 0; y < space_.point_count(); ++y)
    for (const auto& [x, c] : t.mul(sa, unit(y))) m(x, y) = c;
  return m;
}

MatrixQ MatsuoAlgebra::ad(Point e) const { return ad(basis(e)); }

MatrixQ MatsuoAlgebra::gram() const {
  const Table t = table_of(*this);
  MatrixQ g = MatrixQ::Zero(dimension(), dimension());
  for (Point x = 0; x < space_.point_count(); ++x) {
    g(x, x) = t.form(unit(x), unit(x));
    for (Point y : space_.neighbors(x)) g(x, y) = t.form(unit(x), unit(y));
  }
  return g;
}

// ---------------------------------------------------------------------------

InvarianceReport check_invariance(const MatsuoAlgebra& alg, const std::vector<Point>& sources) {
  InvarianceReport r;
  const FischerSpace& s = alg.space();
  const Table t = table_of(alg);
  const int n = s.point_count();
  const auto xs = all_points_if_empty(s, sources);

  std::vector<Sparse> products(static_cast<std::size_t>(n));
  for (Point e : xs) {
    for (Point f = 0; f < n; ++f) products[static_cast<std::size_t>(f)] = t.mul(unit(e), unit(f));
    for (Point f = 0; f < n && r.invariant; ++f) {
      for (Point g = 0; g < n; ++g) {
        const Rational lhs = t.form(products[static_cast<std::size_t>(f)], unit(g));
        const Rational rhs = t.form(unit(f), products[static_cast<std::size_t>(g)]);
        if (lhs != rhs) {
          r.invariant = false;
          r.witness = std::array<Point, 3>{e, f, g};
          break;
        }
      }
    }
  }

  // 0: equal, 1: collinear, 2: distinct and not collinear.
  auto rel = [&](Point a, Point b) { return a == b ? 0 : (s.collinear(a, b) ? 1 : 2); };
  for (Point x : xs) {
    for (Point y : s.neighbors(x)) {
      for (Point z : s.neighbors(y)) {
        if (r.condition1 && rel(s.third(x, y), z) != rel(x, s.third(y, z))) {
          r.condition1 = false;
          r.condition1_witness = std::array<Point, 3>{x, y, z};
        }
      }
    }
    for (Point y = 0; y < n && r.condition2; ++y) {
      if (rel(x, y) != 2) continue;
      for (Point z : s.neighbors(y)) {
        if (rel(z, x) == 2 && s.collinear(x, s.third(y, z))) {
          r.condition2 = false;
          r.condition2_witness = std::array<Point, 3>{x, y, z};
          break;
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

std::optional<AlgebraElement> unity(const MatsuoAlgebra& alg) {
  const FischerSpace& s = alg.space();
  const Table t = table_of(alg);
  const int n = s.point_count();
  auto is_unity = [&](const AlgebraElement& u) {
    const Sparse su = sparse_of(u);
    for (Point x = 0; x < n; ++x)
      if (!equal(t.mul(su, unit(x)), scaled(unit(x), Rational(2)))) return false;
    return true;
  };

  if (const auto k = s.valency()) {
    const Rational denom = Rational(4) + Rational(*k) * alg.delta();
    if (!denom.is_zero()) {
      AlgebraElement u = AlgebraElement::Constant(n, Rational(4) / denom);
      if (is_unity(u)) return u;
    }
  }

  // u.x = 2x reads 2u_x + delta/2 sum_{y~x} u_y = 2 at x and
  // delta/2 (u_y - u_{x o y}) = 0 at each neighbour y.
  std::vector<std::vector<std::pair<Point, Rational>>> rows;
  std::vector<Rational> rhs;
  for (Point x = 0; x < n; ++x) {
    std::vector<std::pair<Point, Rational>> row{{x, Rational(2)}};
    for (Point y : s.neighbors(x)) row.emplace_back(y, t.half_delta);
    rows.push_back(std::move(row));
    rhs.emplace_back(2);
  }
  if (!alg.delta().is_zero()) {
    for (const Line& l : s.lines()) {
      rows.push_back({{l[0], Rational(1)}, {l[1], Rational(-1)}});
      rhs.emplace_back(0);
      rows.push_back({{l[0], Rational(1)}, {l[2], Rational(-1)}});
      rhs.emplace_back(0);
    }
  }
  MatrixQ a = MatrixQ::Zero(static_cast<Index>(rows.size()), n);
  VectorQ b(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [x, c] : rows[i]) a(static_cast<Index>(i), x) += c;
    b(static_cast<Index>(i)) = rhs[i];
  }
  auto u = solve(a, b);
  if (!u || !is_unity(*u)) return std::nullopt;
  return u;
}

std::optional<Rational> central_charge(const MatsuoAlgebra& alg) {
  const auto u = unity(alg);
  if (!u) return std::nullopt;
  return Rational(2) * alg.bform(*u, *u);
}

AlgebraElement sub_conformal(const MatsuoAlgebra& alg, const std::vector<Point>& sub) {
  std::vector<Point> pts = sub;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const Subspace closure = subspace_closure(alg.space(), pts);
  if (closure.points != pts) throw std::domain_error("sub_conformal: point set is not closed under third points");
  const MatsuoAlgebra small(closure.space, alg.gamma(), alg.delta());
  const auto u = unity(small);
  if (!u) throw std::domain_error("sub_conformal: subalgebra has no unity");
  AlgebraElement out = alg.zero();
  for (std::size_t i = 0; i < pts.size(); ++i) out(pts[i]) = (*u)(static_cast<Index>(i));
  return out;
}

// ---------------------------------------------------------------------------

Index AdSpectrum::dimension_of(const Rational& value) const {
  for (const auto& sp : spaces)
    if (sp.value == value) return sp.basis.cols();
  return 0;
}

namespace {

// ad_e vanishes on points not collinear with e and preserves the span W of e
// and its neighbours, so its eigenvectors come from the |W| x |W| block.
struct LocalAd {
  std::vector<Point> points;  // W, ascending
  MatrixQ block;
};

LocalAd local_ad(const MatsuoAlgebra& alg, Point e) {
  const FischerSpace& s = alg.space();
  const Table t = table_of(alg);
  LocalAd out;
  out.points = s.neighbors(e);
  out.points.push_back(e);
  std::sort(out.points.begin(), out.points.end());
  std::vector<int> local(static_cast<std::size_t>(s.point_count()), -1);
  for (std::size_t i = 0; i < out.points.size(); ++i) local[static_cast<std::size_t>(out.points[i])] = static_cast<int>(i);
  const auto w = static_cast<Index>(out.points.size());
  out.block = MatrixQ::Zero(w, w);
  for (Index j = 0; j < w; ++j)
    for (const auto& [x, c] : t.mul(unit(e), unit(out.points[static_cast<std::size_t>(j)])))
      out.block(local[static_cast<std::size_t>(x)], j) = c;
  return out;
}

std::vector<Rational> fusion_values(const Rational& delta) {
  std::vector<Rational> v{Rational(0), delta, Rational(2)};
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

AdSpectrum ad_spectrum(const MatsuoAlgebra& alg, Point e) {
  const FischerSpace& s = alg.space();
  const Table t = table_of(alg);
  const int n = s.point_count();
  const LocalAd local = local_ad(alg, e);
  AdSpectrum out;

  Index total = 0;
  for (const Rational& value : fusion_values(alg.delta())) {
    MatrixQ shifted = local.block;
    for (Index i = 0; i < shifted.rows(); ++i) shifted(i, i) -= value;
    const Kernel k = kernel(shifted);
    std::vector<std::pair<Point, VectorQ>> vectors;  // keyed by free point
    for (Index c = 0; c < k.basis.cols(); ++c) {
      VectorQ v = VectorQ::Zero(n);
      for (Index i = 0; i < k.basis.rows(); ++i) v(local.points[static_cast<std::size_t>(i)]) = k.basis(i, c);
      vectors.emplace_back(local.points[static_cast<std::size_t>(k.free[static_cast<std::size_t>(c)])], std::move(v));
    }
    if (value.is_zero()) {
      for (Point x = 0; x < n; ++x)
        if (x != e && !s.collinear(e, x)) vectors.emplace_back(x, alg.basis(x));
    }
    if (vectors.empty()) continue;
    std::sort(vectors.begin(), vectors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Eigenspace sp{value, MatrixQ(n, static_cast<Index>(vectors.size()))};
    for (std::size_t c = 0; c < vectors.size(); ++c) sp.basis.col(static_cast<Index>(c)) = vectors[c].second;
    total += sp.basis.cols();
    out.spaces.push_back(std::move(sp));
  }
  out.diagonalizable = total == n;
  out.residual_dim = n - total;

  out.minimal_polynomial_ok = true;
  const Sparse se = unit(e);
  for (Point w : local.points) {
    Sparse v = t.mul(se, unit(w));
    v = combine(t.mul(se, v), v, -alg.delta());
    v = combine(t.mul(se, v), v, Rational(-2));
    if (!v.empty()) {
      out.minimal_polynomial_ok = false;
      break;
    }
  }
  return out;
}

ElementSpectrum element_spectrum(const MatsuoAlgebra& alg, const AlgebraElement& a) {
  const MatrixQ m = alg.ad(a);
  const RootSplit split = rational_roots(characteristic_polynomial(m));
  ElementSpectrum out;
  out.roots = split.roots;
  out.residual = split.residual;
  for (const auto& [value, mult] : out.roots) {
    MatrixQ shifted = m;
    for (Index i = 0; i < m.rows(); ++i) shifted(i, i) -= value;
    out.geometric.push_back(kernel(shifted).nullity());
  }
  return out;
}

FusionReport check_fusion(const MatsuoAlgebra& alg, Point e) {
  FusionReport out;
  const Rational& delta = alg.delta();
  if (delta.is_zero() || delta == Rational(2)) return out;
  const AdSpectrum spec = ad_spectrum(alg, e);
  if (!spec.diagonalizable) return out;
  out.applicable = true;

  const Table t = table_of(alg);
  const Sparse se = unit(e);
  struct Vec {
    Rational value;
    int parity;
    Sparse v;
  };
  std::vector<Vec> basis;
  for (const auto& sp : spec.spaces)
    for (Index c = 0; c < sp.basis.cols(); ++c)
      basis.push_back({sp.value, sp.value == delta ? 1 : 0, sparse_of(sp.basis.col(c))});

  auto in_part = [&](const Sparse& p, int parity) {
    const Sparse ap = t.mul(se, p);
    if (parity == 1) return equal(ap, scaled(p, delta));
    return t.mul(se, combine(ap, p, Rational(-2))).empty();
  };
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Sparse p = t.mul(basis[i].v, basis[j].v);
      if (!in_part(p, (basis[i].parity + basis[j].parity) % 2)) {
        const Index n = alg.dimension();
        out.witness = FusionReport::Witness{basis[i].value, basis[j].value, dense_of(basis[i].v, n),
                                            dense_of(basis[j].v, n), dense_of(p, n)};
        return out;
      }
    }
  }
  out.passed = true;
  return out;
}

SigmaReport sigma_linear(const MatsuoAlgebra& alg, Point e) {
  SigmaReport out;
  const Rational& delta = alg.delta();
  if (delta.is_zero() || delta == Rational(2)) return out;
  if (!ad_spectrum(alg, e).diagonalizable) return out;
  out.applicable = true;

  const FischerSpace& s = alg.space();
  const Table t = table_of(alg);
  const int n = s.point_count();
  const Sparse se = unit(e);
  // With eigenvalues 0, delta, 2 the projection onto the delta part is
  // ad (ad - 2) / (delta (delta - 2)).
  const Rational scale = Rational(-2) / (delta * (delta - Rational(2)));
  std::vector<Sparse> sigma(static_cast<std::size_t>(n));
  for (Point x = 0; x < n; ++x) {
    const Sparse ax = t.mul(se, unit(x));
    const Sparse proj = t.mul(se, combine(ax, unit(x), Rational(-2)));
    sigma[static_cast<std::size_t>(x)] = combine(unit(x), proj, scale);
  }
  auto apply = [&](const Sparse& v) {
    Sparse out_v;
    for (const auto& [x, c] : v)
      for (const auto& [y, d] : sigma[static_cast<std::size_t>(x)]) out_v.emplace_back(y, c * d);
    normalize(out_v);
    return out_v;
  };

  out.matrix = MatrixQ::Zero(n, n);
  for (Point x = 0; x < n; ++x)
    for (const auto& [y, c] : sigma[static_cast<std::size_t>(x)]) out.matrix(y, x) = c;

  const PointPermutation perm = sigma_point_map(s, e);
  out.involution = out.isometry = out.automorphism = out.matches_point_map = true;
  for (Point x = 0; x < n; ++x) {
    const Sparse& sx = sigma[static_cast<std::size_t>(x)];
    if (!equal(apply(sx), unit(x))) out.involution = false;
    if (!equal(sx, unit(perm.image[static_cast<std::size_t>(x)]))) out.matches_point_map = false;
    for (Point y = x; y < n; ++y) {
      const Sparse& sy = sigma[static_cast<std::size_t>(y)];
      if (out.isometry && t.form(sx, sy) != t.form(unit(x), unit(y))) out.isometry = false;
      if (out.automorphism && !equal(apply(t.mul(unit(x), unit(y))), t.mul(sx, sy))) {
        out.automorphism = false;
        out.automorphism_witness = std::make_pair(x, y);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

GramReport gram_and_radical(const MatsuoAlgebra& alg, const std::vector<Point>& ideal_sources) {
  const FischerSpace& s = alg.space();
  const int n = s.point_count();
  GramReport out;
  out.gram = alg.gram();

  MatrixQ formula = MatrixQ::Identity(n, n);
  const Rational quarter_delta = alg.delta() / Rational(4);
  for (Point x = 0; x < n; ++x)
    for (Point y : s.neighbors(x)) formula(x, y) = quarter_delta;
  formula *= alg.gamma() / Rational(2);
  out.gram_formula_ok = formula == out.gram;

  // Same kernel as the Gram matrix, with integer entries: q (4I + delta A)
  // for delta = p/q.
  const Rational p(alg.delta().numerator());
  const Rational q(alg.delta().denominator());
  const Rational diag = Rational(4) * q;
  MatrixQ scaled_gram = MatrixQ::Identity(n, n) * diag;
  for (Point x = 0; x < n; ++x)
    for (Point y : s.neighbors(x)) scaled_gram(x, y) = p;
  const Kernel k = kernel(scaled_gram);
  out.radical_basis = k.basis;
  out.radical_dim = k.nullity();
  for (Index c : k.pivots) out.quotient_points.push_back(static_cast<Point>(c));
  out.quotient_dim = static_cast<Index>(k.pivots.size());

  // x.r must stay in the radical: q(4I + delta A)(x.r) = 0.
  const Table t = table_of(alg);
  out.radical_is_ideal = true;
  for (Point x : all_points_if_empty(s, ideal_sources)) {
    for (Index c = 0; c < k.basis.cols() && out.radical_is_ideal; ++c) {
      const Sparse w = t.mul(unit(x), sparse_of(k.basis.col(c)));
      VectorQ image = VectorQ::Zero(n);
      for (const auto& [h, wh] : w) {
        image(h) += diag * wh;
        const Rational pw = p * wh;
        for (Point g : s.neighbors(h)) image(g) += pw;
      }
      if (!is_zero(image)) out.radical_is_ideal = false;
    }
    if (!out.radical_is_ideal) break;
  }
  return out;
}

QuotientAlgebra::QuotientAlgebra(const MatsuoAlgebra& alg) : QuotientAlgebra(alg, gram_and_radical(alg, {0})) {}

QuotientAlgebra::QuotientAlgebra(const MatsuoAlgebra& alg, const GramReport& g) : alg_(alg), points_(g.quotient_points) {
  std::vector<bool> pivot(static_cast<std::size_t>(alg.dimension()), false);
  for (Point p : points_) pivot[static_cast<std::size_t>(p)] = true;
  for (Point x = 0; x < alg.space().point_count(); ++x)
    if (!pivot[static_cast<std::size_t>(x)]) free_.push_back(x);
  // Radical vector for free point f is e_f + sum_i C(i, f) e_{p_i}, so
  // e_f = -sum_i C(i, f) e_{p_i} modulo the radical.
  const auto d = static_cast<Index>(points_.size());
  reduce_ = MatrixQ(d, static_cast<Index>(free_.size()));
  for (Index i = 0; i < d; ++i)
    for (Index f = 0; f < reduce_.cols(); ++f) reduce_(i, f) = -g.radical_basis(points_[static_cast<std::size_t>(i)], f);
  gram_ = MatrixQ(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) gram_(i, j) = g.gram(points_[static_cast<std::size_t>(i)], points_[static_cast<std::size_t>(j)]);
}

VectorQ QuotientAlgebra::project(const AlgebraElement& v) const {
  VectorQ out(dimension());
  for (Index i = 0; i < dimension(); ++i) out(i) = v(points_[static_cast<std::size_t>(i)]);
  for (std::size_t f = 0; f < free_.size(); ++f) {
    const Rational& c = v(free_[f]);
    if (c.is_zero()) continue;
    for (Index i = 0; i < dimension(); ++i)
      if (!reduce_(i, static_cast<Index>(f)).is_zero()) out(i) += c * reduce_(i, static_cast<Index>(f));
  }
  return out;
}

AlgebraElement QuotientAlgebra::lift(const VectorQ& q) const {
  AlgebraElement v = alg_.zero();
  for (Index i = 0; i < dimension(); ++i) v(points_[static_cast<std::size_t>(i)]) = q(i);
  return v;
}

VectorQ QuotientAlgebra::multiply(const VectorQ& a, const VectorQ& b) const {
  return project(alg_.multiply(lift(a), lift(b)));
}

Rational QuotientAlgebra::bform(const VectorQ& a, const VectorQ& b) const { return alg_.bform(lift(a), lift(b)); }

MatrixQ QuotientAlgebra::ad(const VectorQ& a) const {
  const Table t = table_of(alg_);
  const Sparse la = sparse_of(lift(a));
  MatrixQ m(dimension(), dimension());
  for (Index i = 0; i < dimension(); ++i)
    m.col(i) = project(dense_of(t.mul(la, unit(points_[static_cast<std::size_t>(i)])), alg_.dimension()));
  return m;
}

bool QuotientAlgebra::projection_is_homomorphism(const std::vector<Point>& sources) const {
  const Table t = table_of(alg_);
  const int n = alg_.space().point_count();
  std::vector<Sparse> images(static_cast<std::size_t>(n));
  for (Point y = 0; y < n; ++y) images[static_cast<std::size_t>(y)] = sparse_of(lift(project(alg_.basis(y))));
  for (Point x : all_points_if_empty(alg_.space(), sources)) {
    const Sparse& px = images[static_cast<std::size_t>(x)];
    for (Point y = 0; y < n; ++y) {
      const Sparse& py = images[static_cast<std::size_t>(y)];
      const VectorQ lhs = project(dense_of(t.mul(unit(x), unit(y)), n));
      const VectorQ rhs = project(dense_of(t.mul(px, py), n));
      if (lhs != rhs) return false;
      if (t.form(px, py) != t.form(unit(x), unit(y))) return false;
    }
  }
  return true;
}

bool QuotientAlgebra::form_nondegenerate() const { return rank(gram_) == dimension(); }

// ---------------------------------------------------------------------------

PropertySuite run_property_suite(const MatsuoAlgebra& alg, const std::vector<Point>& sources) {
  PropertySuite out;
  const FischerSpace& s = alg.space();
  const Table t = table_of(alg);
  const int n = s.point_count();
  out.checked = all_points_if_empty(s, sources);
  auto fail = [&](bool& flag, const std::string& what, Point e) {
    if (flag) out.failures.push_back(what + " fails at point " + s.name(e));
    flag = false;
  };

  for (Point e : out.checked) {
    for (Point f = 0; f < n; ++f)
      if (!equal(t.mul(unit(e), unit(f)), t.mul(unit(f), unit(e)))) fail(out.commutative, "commutativity", e);
    if (!equal(t.mul(unit(e), unit(e)), scaled(unit(e), Rational(2))) ||
        Rational(2) * t.form(unit(e), unit(e)) != alg.gamma())
      fail(out.idempotent_norms, "idempotent norm", e);

    const AdSpectrum spec = ad_spectrum(alg, e);
    if (!spec.minimal_polynomial_ok || !spec.diagonalizable) fail(out.minimal_polynomial, "minimal polynomial", e);
    const FusionReport fusion = check_fusion(alg, e);
    if (!fusion.applicable || !fusion.passed) fail(out.fusion, "fusion", e);
    const SigmaReport sigma = sigma_linear(alg, e);
    if (!sigma.applicable || !sigma.automorphism) fail(out.sigma_automorphism, "sigma automorphism", e);
    if (!sigma.applicable || !sigma.isometry) fail(out.sigma_isometry, "sigma isometry", e);
    if (!sigma.applicable || !sigma.involution) fail(out.sigma_involution, "sigma involution", e);
    if (!sigma.applicable || !sigma.matches_point_map) fail(out.sigma_matches_points, "sigma point map", e);
  }
  const InvarianceReport inv = check_invariance(alg, out.checked);
  if (!inv.invariant) fail(out.invariant, "invariance", (*inv.witness)[0]);
  const TranspositionReport tr = verify_3transposition(s, out.checked);
  if (!tr.passed()) {
    fail(out.transposition_orders, "3-transposition",
         tr.order_witness ? tr.order_witness->first : tr.line_witness->first);
  }
  return out;
}

}  // namespace fischer
