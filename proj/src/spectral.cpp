#include "fischer/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include "fischer/algebra.hpp"

namespace fischer {
namespace {

using Graph = std::vector<std::vector<int>>;

std::int64_t isqrt_exact(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

// Rational roots r >= s of x^2 - b x + c, when the discriminant is a square.
std::optional<std::pair<Rational, Rational>> quadratic_roots(std::int64_t b, std::int64_t c) {
  const std::int64_t root = isqrt_exact(b * b - 4 * c);
  if (root < 0) return std::nullopt;
  return std::pair{Rational(b + root, 2), Rational(b - root, 2)};
}

Graph graph_of(const FischerSpace& space) {
  Graph g(static_cast<std::size_t>(space.point_count()));
  for (Point x = 0; x < space.point_count(); ++x) g[static_cast<std::size_t>(x)] = space.neighbors(x);
  return g;
}

struct Bits {
  std::size_t words = 0;
  std::vector<std::uint64_t> data;

  explicit Bits(const Graph& g) : words((g.size() + 63) / 64), data(g.size() * words, 0) {
    for (std::size_t x = 0; x < g.size(); ++x)
      for (int y : g[x]) data[x * words + static_cast<std::size_t>(y) / 64] |= std::uint64_t{1} << (y % 64);
  }
  [[nodiscard]] bool test(std::size_t x, std::size_t y) const { return (data[x * words + y / 64] >> (y % 64)) & 1U; }
  [[nodiscard]] int common(std::size_t x, std::size_t y) const {
    int c = 0;
    for (std::size_t w = 0; w < words; ++w) c += std::popcount(data[x * words + w] & data[y * words + w]);
    return c;
  }
};

std::optional<std::int64_t> regular_degree(const Graph& g) {
  if (g.empty()) return std::nullopt;
  const std::size_t k = g.front().size();
  for (const auto& row : g)
    if (row.size() != k) return std::nullopt;
  return static_cast<std::int64_t>(k);
}

std::optional<SrgReport> srg_of_graph(const Graph& g) {
  const auto k = regular_degree(g);
  const auto n = static_cast<std::int64_t>(g.size());
  if (!k || *k == 0 || *k == n - 1) return std::nullopt;
  const Bits bits(g);
  std::int64_t lambda = -1, mu = -1;
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = x + 1; y < g.size(); ++y) {
      const std::int64_t c = bits.common(x, y);
      std::int64_t& slot = bits.test(x, y) ? lambda : mu;
      if (slot < 0) slot = c;
      if (slot != c) return std::nullopt;
    }
  }
  if (lambda < 0 || mu < 0) return std::nullopt;
  SrgReport r{n, *k, lambda, mu, {}, {}, 0};
  const auto roots = quadratic_roots(lambda - mu, mu - *k);
  if (!roots) return std::nullopt;
  r.r = roots->first;
  r.s = roots->second;
  if (r.r == r.s) return std::nullopt;
  const Rational g_value = (Rational(*k) + r.r * Rational(n - 1)) / (r.r - r.s);
  if (!g_value.is_integer() || g_value.sign() < 0) return std::nullopt;
  r.g = g_value.small_numerator();
  return r;
}

std::vector<std::vector<int>> components_of(const Graph& g) {
  std::vector<int> seen(g.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start] >= 0) continue;
    std::vector<int> comp{static_cast<int>(start)};
    seen[start] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int y : g[static_cast<std::size_t>(comp[i])])
        if (seen[static_cast<std::size_t>(y)] < 0) {
          seen[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph induced(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> local(g.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int y : g[static_cast<std::size_t>(vertices[i])])
      if (local[static_cast<std::size_t>(y)] >= 0) out[i].push_back(local[static_cast<std::size_t>(y)]);
  return out;
}

MatrixQ matrix_of(const Graph& g) {
  const auto n = static_cast<Index>(g.size());
  MatrixQ a = MatrixQ::Zero(n, n);
  for (Index x = 0; x < n; ++x)
    for (int y : g[static_cast<std::size_t>(x)]) a(x, y) = 1;
  return a;
}

void add_eigenvalue(std::map<Rational, Index>& spectrum, const Rational& value, Index mult) {
  if (mult > 0) spectrum[value] += mult;
}

SpectrumReport report_of(const std::map<Rational, Index>& spectrum, std::string method) {
  SpectrumReport r;
  r.eigenvalues.assign(spectrum.begin(), spectrum.end());
  r.complete = true;
  r.residual = {Rational(1)};
  r.method = std::move(method);
  return r;
}

// Integer candidates theta are certified when the nullities of A - theta I
// modulo a prime (upper bounds for the rational ones) add up to n and the
// product of the A - theta I vanishes exactly, which forces A to be
// diagonalizable with exactly those eigenvalues and multiplicities.
std::optional<SpectrumReport> certify(const Graph& g, const std::vector<Rational>& candidates) {
  const auto n = static_cast<Index>(g.size());
  const MatrixQ a = matrix_of(g);
  std::vector<std::pair<std::int64_t, Index>> found;
  Index total = 0;
  for (const Rational& c : candidates) {
    if (!c.is_integer() || !c.is_small()) continue;
    MatrixQ shifted = a;
    for (Index i = 0; i < n; ++i) shifted(i, i) -= c;
    const Index null = nullity_mod_prime(shifted);
    if (null > 0) {
      found.emplace_back(c.small_numerator(), null);
      total += null;
    }
  }
  if (total != n) return std::nullopt;

  using MatrixI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  std::int64_t kmax = 0;
  for (const auto& row : g) kmax = std::max<std::int64_t>(kmax, static_cast<std::int64_t>(row.size()));
  MatrixI adj = MatrixI::Zero(n, n);
  for (Index x = 0; x < n; ++x)
    for (int y : g[static_cast<std::size_t>(x)]) adj(x, y) = 1;
  MatrixI product = MatrixI::Identity(n, n);
  long double growth = 1;  // bound on the absolute row sums of `product`
  for (const auto& [theta, mult] : found) {
    growth *= static_cast<long double>(kmax + std::abs(theta));
    if (growth > 1e17L) return std::nullopt;
    MatrixI factor = adj;
    factor.diagonal().array() -= theta;
    product = product * factor;
  }
  if (!product.isZero()) return std::nullopt;

  std::map<Rational, Index> spectrum;
  for (const auto& [theta, mult] : found) add_eigenvalue(spectrum, Rational(theta), mult);
  return report_of(spectrum, "certified-probe");
}

SpectrumReport graph_spectrum(const Graph& g);

// Structural routes: every step is an identity on the adjacency matrix.
std::optional<SpectrumReport> structural_spectrum(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.size());
  std::map<Rational, Index> spectrum;
  if (n == 0) return report_of(spectrum, "structure");

  const auto comps = components_of(g);
  if (comps.size() > 1) {
    for (const auto& comp : comps) {
      const SpectrumReport part = graph_spectrum(induced(g, comp));
      if (!part.complete) return std::nullopt;
      for (const auto& [v, m] : part.eigenvalues) add_eigenvalue(spectrum, v, m);
    }
    return report_of(spectrum, "structure");
  }

  const auto k = regular_degree(g);
  if (k && *k == n - 1) {  // complete graph
    add_eigenvalue(spectrum, Rational(*k), 1);
    add_eigenvalue(spectrum, Rational(-1), n - 1);
    return report_of(spectrum, "structure");
  }
  if (k && *k == 0) {
    add_eigenvalue(spectrum, Rational(0), n);
    return report_of(spectrum, "structure");
  }

  // Twins: equal neighbourhoods. With t twins per class A is J_t (x) A_quotient
  // up to relabelling.
  std::map<std::vector<int>, std::vector<int>> classes;
  for (std::size_t x = 0; x < g.size(); ++x) {
    std::vector<int> row = g[x];
    std::sort(row.begin(), row.end());
    classes[row].push_back(static_cast<int>(x));
  }
  const std::size_t t = classes.begin()->second.size();
  const bool uniform = std::all_of(classes.begin(), classes.end(), [&](const auto& c) { return c.second.size() == t; });
  if (t > 1 && uniform) {
    std::vector<int> reps;
    for (const auto& [row, members] : classes) reps.push_back(members.front());
    std::sort(reps.begin(), reps.end());
    const SpectrumReport base = graph_spectrum(induced(g, reps));
    if (!base.complete) return std::nullopt;
    const auto tq = static_cast<std::int64_t>(t);
    add_eigenvalue(spectrum, Rational(0), static_cast<Index>((tq - 1) * static_cast<std::int64_t>(reps.size())));
    for (const auto& [v, m] : base.eigenvalues) add_eigenvalue(spectrum, v * Rational(tq), m);
    return report_of(spectrum, "structure");
  }

  // Connected strongly regular graph: A^2 = kI + lambda A + mu(J - I - A)
  // leaves k (simple) and the two roots with forced multiplicities.
  if (const auto srg = srg_of_graph(g)) {
    add_eigenvalue(spectrum, Rational(srg->k), 1);
    add_eigenvalue(spectrum, srg->r, static_cast<Index>(n - 1 - srg->g));
    add_eigenvalue(spectrum, srg->s, static_cast<Index>(srg->g));
    return report_of(spectrum, "structure");
  }
  return std::nullopt;
}

SpectrumReport graph_spectrum(const Graph& g) {
  if (auto s = structural_spectrum(g)) return *std::move(s);

  std::vector<Rational> candidates{Rational(0)};
  if (const auto k = regular_degree(g)) candidates.emplace_back(*k);
  std::int64_t kmax = 0;
  for (const auto& row : g) kmax = std::max<std::int64_t>(kmax, static_cast<std::int64_t>(row.size()));
  // Eigenvalues of an integer matrix that are rational are integers in
  // [-kmax, kmax]; small graphs afford the whole range.
  if (g.size() <= 64)
    for (std::int64_t c = -kmax; c <= kmax; ++c) candidates.emplace_back(c);
  if (auto s = certify(g, candidates)) return *std::move(s);

  const MatrixQ a = matrix_of(g);
  const EigenProbe probe = probe_eigenvalues(a, candidates);
  if (probe.complete) {
    std::map<Rational, Index> spectrum(probe.found.begin(), probe.found.end());
    return report_of(spectrum, "exact-rank");
  }

  const RootSplit split = rational_roots(characteristic_polynomial(a));
  SpectrumReport r;
  for (const auto& [v, m] : split.roots) r.eigenvalues.emplace_back(v, static_cast<Index>(m));
  r.residual = split.residual;
  r.complete = split.residual.size() <= 1;
  r.method = "charpoly";
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

SrgReport srg_from_local(std::int64_t nu, std::int64_t kbar, std::int64_t mubar) {
  if (kbar < 1) throw InconsistentParameters("kbar must be at least 1");
  SrgReport r;
  r.nu = nu;
  r.k = nu - kbar - 1;
  r.lambda = mubar + 2 * r.k - nu;
  const std::int64_t num = r.k * (r.k - 1 - r.lambda);
  if (num % kbar != 0) {
    throw InconsistentParameters("mu = " + std::to_string(num) + "/" + std::to_string(kbar) + " is not an integer");
  }
  r.mu = num / kbar;
  const auto roots = quadratic_roots(r.lambda - r.mu, r.mu - r.k);
  if (!roots) throw InconsistentParameters("eigenvalues are irrational");
  r.r = roots->first;
  r.s = roots->second;
  if (r.r == r.s) throw InconsistentParameters("repeated eigenvalue");
  const Rational g = (Rational(r.k) + r.r * Rational(nu - 1)) / (r.r - r.s);
  if (!g.is_integer() || g.sign() < 0) throw InconsistentParameters("multiplicity g = " + g.str() + " is not a non-negative integer");
  r.g = g.small_numerator();
  return r;
}

std::optional<SrgReport> measure_srg(const FischerSpace& space) { return srg_of_graph(graph_of(space)); }

std::optional<LocalCounts> local_counts(const FischerSpace& space) {
  const auto k = space.valency();
  const int n = space.point_count();
  if (!k || space.lines().empty()) return std::nullopt;
  LocalCounts out{n, n - *k - 1, -1};
  const std::size_t words = space.words_per_row();
  for (const Line& l : space.lines()) {
    for (auto [x, y] : {std::pair{l[0], l[1]}, std::pair{l[0], l[2]}, std::pair{l[1], l[2]}}) {
      int covered = 0;
      for (std::size_t w = 0; w < words; ++w) covered += std::popcount(space.adjacency_row(x)[w] | space.adjacency_row(y)[w]);
      const std::int64_t perp = n - covered;  // x and y cover each other
      if (out.mubar < 0) out.mubar = perp;
      if (out.mubar != perp) return std::nullopt;
    }
  }
  return out;
}

std::optional<Rational> SpectrumReport::least() const {
  if (!complete || eigenvalues.empty()) return std::nullopt;
  return eigenvalues.front().first;
}

Index SpectrumReport::multiplicity(const Rational& value) const {
  for (const auto& [v, m] : eigenvalues)
    if (v == value) return m;
  return 0;
}

bool SpectrumReport::trace_identities(const FischerSpace& space) const {
  if (!complete) return false;
  Index count = 0;
  Rational trace, trace2;
  for (const auto& [v, m] : eigenvalues) {
    count += m;
    trace += v * Rational(static_cast<std::int64_t>(m));
    trace2 += v * v * Rational(static_cast<std::int64_t>(m));
  }
  std::int64_t degree_sum = 0;
  for (Point x = 0; x < space.point_count(); ++x) degree_sum += space.degree(x);
  return count == space.point_count() && trace.is_zero() && trace2 == Rational(degree_sum);
}

MatrixQ adjacency_matrix(const FischerSpace& space) { return matrix_of(graph_of(space)); }

SpectrumReport exact_spectrum(const FischerSpace& space) { return graph_spectrum(graph_of(space)); }

bool certify_spectrum(const FischerSpace& space, const SpectrumReport& report) {
  if (!report.complete) return false;
  std::vector<Rational> candidates;
  for (const auto& [v, m] : report.eigenvalues) candidates.push_back(v);
  const auto certified = certify(graph_of(space), candidates);
  return certified && certified->eigenvalues == report.eigenvalues;
}

bool positive_semidefinite(const MatrixQ& input) {
  MatrixQ m = input;
  const Index n = m.rows();
  for (Index i = 0; i < n; ++i) {
    const Rational d = m(i, i);
    if (d.sign() < 0) return false;
    if (d.is_zero()) {
      for (Index j = i + 1; j < n; ++j)
        if (!m(i, j).is_zero()) return false;
      continue;
    }
    for (Index j = i + 1; j < n; ++j) {
      if (m(j, i).is_zero()) continue;
      const Rational f = m(j, i) / d;
      for (Index l = i + 1; l < n; ++l)
        if (!m(i, l).is_zero()) m(j, l) -= f * m(i, l);
    }
  }
  return true;
}

GateVerdict realizability_gate(const FischerSpace& space, const Rational& gamma, const Rational& delta) {
  if (delta.sign() <= 0) throw std::domain_error("gate: delta must be positive");
  if (gamma.sign() <= 0) throw std::domain_error("gate: gamma must be positive");
  GateVerdict v;
  v.gamma = gamma;
  v.delta = delta;
  v.bound = Rational(-4) / delta;

  const SpectrumReport spectrum = exact_spectrum(space);
  v.least = spectrum.least();
  if (v.least) {
    v.eigenvalue_ok = *v.least >= v.bound;
  } else {
    MatrixQ shifted = adjacency_matrix(space);
    for (Index i = 0; i < shifted.rows(); ++i) shifted(i, i) -= v.bound;
    v.eigenvalue_ok = positive_semidefinite(shifted);
  }
  v.bound_multiplicity = spectrum.multiplicity(v.bound);

  const AxiomReport axiom = verify_fischer_axiom(space);
  v.fischer = axiom.is_fischer;
  v.symplectic_ok = axiom.symplectic_type();
  v.symplectic_binding = gamma == Rational(1, 2) && delta == Rational(1, 2);

  if (!v.fischer) v.reasons.emplace_back(kNotFischer);
  if (!v.eigenvalue_ok) v.reasons.emplace_back(kEigenvalueBound);
  if (!v.symplectic_ok) {
    if (v.symplectic_binding) {
      v.reasons.emplace_back(kAffine3Present);
    } else {
      v.notes.emplace_back("contains an affine plane of order 3; this only rules out (1/2, 1/2), advisory here");
    }
  }
  v.accepted = v.reasons.empty();
  return v;
}

QuotientPositivity quotient_positivity(const SpectrumReport& base, std::int64_t k) {
  if (!base.complete || base.eigenvalues.empty()) throw std::domain_error("quotient_positivity: incomplete spectrum");
  QuotientPositivity out;
  out.k = k;
  out.least = base.eigenvalues.front().first;
  const Rational scale = Rational(2) / Rational(8 + k);
  for (const auto& [theta, mult] : base.eigenvalues) out.eigenvalues.push_back(scale * (Rational(8) + theta));
  out.kernel_dim = base.multiplicity(Rational(-8));
  out.positive = out.least > Rational(-8);
  out.semidefinite = out.least >= Rational(-8);
  return out;
}

QuotientPositivity root_quotient_positivity(const FischerSpace& base) {
  const auto k = base.valency();
  if (!k) throw std::domain_error("root_quotient_positivity: diagram is not regular");
  return quotient_positivity(exact_spectrum(base), *k);
}

EtaQuotientAction eta_quotient_action(const FischerSpace& base, const Rational& gamma, const Rational& delta) {
  const auto kb = base.valency();
  if (!kb) throw std::domain_error("eta_quotient_action: diagram is not regular");
  const int nb = base.point_count();
  const MatsuoAlgebra alg(extend_space(base, 1), gamma, delta);
  const auto omega = unity(alg);
  if (!omega) throw std::domain_error("eta_quotient_action: no unity");
  std::vector<Point> first(static_cast<std::size_t>(nb));
  std::iota(first.begin(), first.end(), 0);
  const AlgebraElement eta = *omega - sub_conformal(alg, first);

  EtaQuotientAction out;
  out.k_base = *kb;
  out.direct = MatrixQ(nb, nb);
  for (Point x = 0; x < nb; ++x) {
    const AlgebraElement v = alg.multiply(eta, alg.basis(nb + x));
    for (Point y = 0; y < nb; ++y) out.direct(y, x) = v(nb + y);
  }
  const Rational denom = Rational(4) + Rational(*kb) * delta;
  out.formula = adjacency_matrix(base) * (Rational(2) * delta / denom);
  const Rational diag = Rational(2) - Rational(2) * delta * Rational(*kb) / denom;
  for (Index i = 0; i < nb; ++i) out.formula(i, i) += diag;
  out.agrees = out.direct == out.formula;
  return out;
}

RootMultiplicity root_multiplicity_check(char series, int rank) {
  if (series != 'D' && series != 'E') throw std::domain_error("root_multiplicity_check: series must be D or E");
  const FischerSpace space = root_space(series, rank);
  const SpectrumReport spectrum = exact_spectrum(space);
  RootMultiplicity out;
  out.series = series;
  out.rank = rank;
  out.positive_roots = space.point_count();
  out.least = *spectrum.least();
  out.g = spectrum.multiplicity(out.least);
  out.formula = out.positive_roots - static_cast<std::int64_t>(rank) * (rank + 1) / 2;
  out.ok = out.g == out.formula;
  return out;
}

}  // namespace fischer
