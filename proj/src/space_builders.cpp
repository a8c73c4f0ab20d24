#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "fischer/spaces.hpp"

namespace fischer {
namespace {

// Symplectic form on GF(2)^dim with hyperbolic pairs (2i, 2i+1).
int polar(std::uint32_t x, std::uint32_t y) {
  const std::uint32_t swapped = ((y & 0x55555555U) << 1) | ((y >> 1) & 0x55555555U);
  return __builtin_popcount(x & swapped) & 1;
}

// Plus type: sum of x_{2i} x_{2i+1}. Minus type replaces the last block by
// x + xy + y, which over GF(2) is x OR y.
int quadratic(std::uint32_t x, int dim, bool plus) {
  int q = 0;
  for (int i = 0; i < dim; i += 2) {
    const unsigned a = (x >> i) & 1U;
    const unsigned b = (x >> (i + 1)) & 1U;
    q ^= static_cast<int>((!plus && i == dim - 2) ? (a | b) : (a & b));
  }
  return q;
}

std::string bits(std::uint32_t x, int dim) {
  std::string s;
  for (int i = 0; i < dim; ++i) s += ((x >> i) & 1U) ? '1' : '0';
  return s;
}

// Points are given GF(2) vectors; x and y span a line {x, y, x+y} iff polar(x, y) = 1.
FischerSpace gf2_space(const std::vector<std::uint32_t>& vectors, int dim, std::string label) {
  std::map<std::uint32_t, Point> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    index[vectors[i]] = static_cast<Point>(i);
    names.push_back(bits(vectors[i], dim));
  }
  std::vector<Line> lines;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (!polar(vectors[i], vectors[j])) continue;
      const auto it = index.find(vectors[i] ^ vectors[j]);
      if (it == index.end()) throw std::logic_error("GF(2) point set not closed under x+y");
      if (static_cast<std::size_t>(it->second) > j) {
        lines.push_back({static_cast<Point>(i), static_cast<Point>(j), it->second});
      }
    }
  }
  return FischerSpace(static_cast<int>(vectors.size()), std::move(lines), std::move(label), std::move(names));
}

using Root = std::vector<int>;  // doubled coordinates

int dot4(const Root& a, const Root& b) {  // four times the inner product
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Roots of E8 in doubled coordinates: +-2e_i +-2e_j and (+-1)^8 with an even
// number of minus signs.
std::vector<Root> e8_roots() {
  std::vector<Root> out;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {-2, 2})
        for (int sj : {-2, 2}) {
          Root r(8, 0);
          r[static_cast<std::size_t>(i)] = si;
          r[static_cast<std::size_t>(j)] = sj;
          out.push_back(r);
        }
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Root r(8, 1);
    for (int i = 0; i < 8; ++i)
      if ((mask >> i) & 1U) r[static_cast<std::size_t>(i)] = -1;
    out.push_back(r);
  }
  return out;
}

std::vector<Root> all_roots(char series, int rank) {
  std::vector<Root> out;
  if (series == 'A') {
    const auto dim = static_cast<std::size_t>(rank + 1);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (i != j) {
          Root r(dim, 0);
          r[i] = 2;
          r[j] = -2;
          out.push_back(r);
        }
  } else if (series == 'D') {
    const auto dim = static_cast<std::size_t>(rank);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        for (int si : {-2, 2})
          for (int sj : {-2, 2}) {
            Root r(dim, 0);
            r[i] = si;
            r[j] = sj;
            out.push_back(r);
          }
  } else {
    // E7 is the centralizer of the root (1/2)(1,...,1) in E8; E6 additionally
    // centralizes -e7-e8, which together with it spans an A2.
    const Root theta1(8, 1);
    Root theta2(8, 0);
    theta2[6] = theta2[7] = -2;
    for (const Root& r : e8_roots()) {
      if (rank <= 7 && dot4(r, theta1) != 0) continue;
      if (rank == 6 && dot4(r, theta2) != 0) continue;
      out.push_back(r);
    }
  }
  return out;
}

std::string root_name(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    if (r[i] % 2 == 0) {
      s += std::to_string(r[i] / 2);
    } else {
      s += (r[i] < 0 ? "-1/2" : "1/2");
    }
  }
  return s + ")";
}

}  // namespace

FischerSpace root_space(char series, int rank) {
  if (series != 'A' && series != 'D' && series != 'E') {
    throw std::domain_error(std::string("root system ") + series + " is not simply laced");
  }
  if (series == 'A' && (rank < 1 || rank > 63)) throw std::domain_error("A_n needs 1 <= n <= 63");
  if (series == 'D' && (rank < 4 || rank > 32)) throw std::domain_error("D_n needs 4 <= n <= 32");
  if (series == 'E' && (rank < 6 || rank > 8)) throw std::domain_error("E_n needs n in {6, 7, 8}");

  // Positive roots with respect to the functional with weights 2^i, which is
  // nonzero on every root.
  std::vector<Root> positive;
  for (Root& r : all_roots(series, rank)) {
    long long f = 0;
    for (std::size_t i = 0; i < r.size(); ++i) f += r[i] * (1LL << i);
    if (f > 0) positive.push_back(std::move(r));
  }
  std::sort(positive.begin(), positive.end());
  std::map<Root, Point> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < positive.size(); ++i) {
    index[positive[i]] = static_cast<Point>(i);
    names.push_back(root_name(positive[i]));
  }

  // Non-orthogonal positive roots a, b lie in a unique A2; its third positive
  // root is a+b when (a|b) = -1 and |a-b| when (a|b) = 1.
  std::vector<Line> lines;
  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = i + 1; j < positive.size(); ++j) {
      const int ip = dot4(positive[i], positive[j]);
      if (ip == 0) continue;
      Root c(positive[i].size());
      for (std::size_t t = 0; t < c.size(); ++t) c[t] = positive[i][t] + (ip < 0 ? 1 : -1) * positive[j][t];
      auto it = index.find(c);
      if (it == index.end()) {
        for (int& v : c) v = -v;
        it = index.find(c);
      }
      if (it == index.end()) throw std::logic_error("root system not closed");
      if (static_cast<std::size_t>(it->second) > j) {
        lines.push_back({static_cast<Point>(i), static_cast<Point>(j), it->second});
      }
    }
  return FischerSpace(static_cast<int>(positive.size()), std::move(lines),
                      std::string("Root(") + series + std::to_string(rank) + ")", std::move(names));
}

SpaceSpec SpaceSpec::ext(int m, SpaceSpec base) {
  SpaceSpec s = of(Kind::Ext);
  s.m = m;
  s.inner = std::make_shared<const SpaceSpec>(std::move(base));
  return s;
}

SpaceSpec SpaceSpec::root(char series, int rank) {
  SpaceSpec s = of(Kind::Root, rank);
  s.series = series;
  return s;
}

SpaceSpec SpaceSpec::file(std::string path) {
  SpaceSpec s = of(Kind::File);
  s.path = std::move(path);
  return s;
}

std::string SpaceSpec::text() const {
  switch (kind) {
    case Kind::Sym: return "sym:" + std::to_string(dim);
    case Kind::Sp: return "sp:" + std::to_string(dim);
    case Kind::OPlus: return "o+:" + std::to_string(dim);
    case Kind::OMinus: return "o-:" + std::to_string(dim);
    case Kind::Ext: return "ext:" + std::to_string(m) + ":" + (inner ? inner->text() : std::string("?"));
    case Kind::DualAffine2: return "dualaffine2";
    case Kind::Affine3: return "affine3";
    case Kind::Fano: return "fano";
    case Kind::Root: return std::string("root:") + series + std::to_string(dim);
    case Kind::File: return "file:" + path;
  }
  return "?";
}

FischerSpace build_space(const SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceSpec::Kind::Sym: return sym_space(spec.dim);
    case SpaceSpec::Kind::Sp: return symplectic_space(spec.dim);
    case SpaceSpec::Kind::OPlus: return orthogonal_space(spec.dim, true);
    case SpaceSpec::Kind::OMinus: return orthogonal_space(spec.dim, false);
    case SpaceSpec::Kind::Ext:
      if (!spec.inner) throw std::invalid_argument("extension without a base space");
      return extend_space(build_space(*spec.inner), spec.m);
    case SpaceSpec::Kind::DualAffine2: return dual_affine_plane();
    case SpaceSpec::Kind::Affine3: return affine_plane();
    case SpaceSpec::Kind::Fano: return fano_plane();
    case SpaceSpec::Kind::Root: return root_space(spec.series, spec.dim);
    case SpaceSpec::Kind::File: return load_space_file(spec.path);
  }
  throw std::invalid_argument("unknown space kind");
}

FischerSpace sym_space(int n) {
  if (n < 2) throw std::domain_error("Sym(n) needs n >= 2");
  if (n > 64) throw std::domain_error("Sym(n) limited to n <= 64");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
      names.push_back("(" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ")");
    }
  auto id = [&](int i, int j) {
    // Position of (i, j), i < j, in lexicographic order.
    return static_cast<Point>(i * n - i * (i + 1) / 2 + (j - i - 1));
  };
  std::vector<Line> lines;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) lines.push_back({id(i, j), id(i, k), id(j, k)});
  return FischerSpace(static_cast<int>(pairs.size()), std::move(lines), "Sym(" + std::to_string(n) + ")",
                      std::move(names));
}

FischerSpace symplectic_space(int dim) {
  if (dim < 2 || dim % 2 != 0) throw std::domain_error("Sp(2n) needs an even dimension >= 2");
  if (dim > 12) throw std::domain_error("Sp(2n) limited to 2n <= 12");
  std::vector<std::uint32_t> vectors;
  for (std::uint32_t x = 1; x < (1U << dim); ++x) vectors.push_back(x);
  return gf2_space(vectors, dim, "Sp(" + std::to_string(dim) + ")");
}

FischerSpace orthogonal_space(int dim, bool plus) {
  if (dim % 2 != 0 || dim < (plus ? 4 : 2)) {
    throw std::domain_error(plus ? "O+(2n) needs an even dimension >= 4" : "O-(2n) needs an even dimension >= 2");
  }
  if (dim > 12) throw std::domain_error("O(2n) limited to 2n <= 12");
  std::vector<std::uint32_t> vectors;
  for (std::uint32_t x = 1; x < (1U << dim); ++x)
    if (quadratic(x, dim, plus) == 1) vectors.push_back(x);
  return gf2_space(vectors, dim, std::string(plus ? "O+(" : "O-(") + std::to_string(dim) + ")");
}

FischerSpace extend_space(const FischerSpace& base, int m) {
  if (m <= 0) throw std::domain_error("extension exponent must be positive");
  if (base.point_count() == 0) throw std::domain_error("extension of an empty space");
  if (m > 10) throw std::domain_error("extension exponent limited to 10");
  const int copies = 1 << m;
  const int nu = base.point_count();
  auto id = [&](int p, Point x) { return static_cast<Point>(p * nu + x); };
  std::vector<Line> lines;
  for (const Line& l : base.lines())
    for (int p = 0; p < copies; ++p)
      for (int q = 0; q < copies; ++q) lines.push_back({id(p, l[0]), id(q, l[1]), id(p ^ q, l[2])});
  std::vector<std::string> names;
  for (int p = 0; p < copies; ++p)
    for (Point x = 0; x < nu; ++x) names.push_back("(" + std::to_string(p) + ";" + base.name(x) + ")");
  return FischerSpace(copies * nu, std::move(lines), "Ext(" + std::to_string(m) + "," + base.label() + ")",
                      std::move(names));
}

FischerSpace dual_affine_plane() {
  // Octahedron with opposite vertices {0,1}, {2,3}, {4,5}.
  return FischerSpace(6, {{0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}}, "DualAffine2");
}

FischerSpace affine_plane() {
  std::vector<Line> lines;
  std::vector<std::string> names;
  for (int p = 0; p < 9; ++p) names.push_back("(" + std::to_string(p / 3) + "," + std::to_string(p % 3) + ")");
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b) {
      const int i = (6 - a / 3 - b / 3) % 3;
      const int j = (6 - a % 3 - b % 3) % 3;
      const int c = 3 * i + j;
      if (c > b) lines.push_back({a, b, c});
    }
  return FischerSpace(9, std::move(lines), "Affine3", std::move(names));
}

FischerSpace fano_plane() {
  std::vector<Line> lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back("x" + std::to_string(i));
  return FischerSpace(7, std::move(lines), "Fano", std::move(names));
}

FischerSpace disjoint_union(const FischerSpace& a, const FischerSpace& b) {
  std::vector<Line> lines = a.lines();
  const int shift = a.point_count();
  for (const Line& l : b.lines()) lines.push_back({l[0] + shift, l[1] + shift, l[2] + shift});
  std::vector<std::string> names;
  for (Point x = 0; x < a.point_count(); ++x) names.push_back(a.name(x));
  for (Point x = 0; x < b.point_count(); ++x) names.push_back(b.name(x) + "'");
  return FischerSpace(a.point_count() + b.point_count(), std::move(lines), a.label() + "+" + b.label(),
                      std::move(names));
}

}  // namespace fischer
