#include "fischer/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fischer {
namespace {

constexpr std::array<std::uint32_t, 8> kPrimes = {2147483647U, 2147483629U, 2147483587U, 2147483579U,
                                                  2147483563U, 2147483549U, 2147483543U, 2147483497U};

// Residue image of a rational matrix: RREF pivots plus, for every free column,
// the residues of its canonical kernel vector at the pivot positions.
struct ModularImage {
  std::vector<Index> pivots;
  std::vector<Index> free;
  std::vector<std::uint32_t> residues;  // free-major: residues[f * rank + i]
};

template <std::uint32_t P>
std::optional<ModP<P>> reduce(const Rational& x) {
  using F = ModP<P>;
  if (x.is_small()) {
    const std::int64_t d = x.small_denominator() % static_cast<std::int64_t>(P);
    if (d == 0) return std::nullopt;
    return F(x.small_numerator()) * inverse(F(d));
  }
  const BigInt d = x.denominator() % P;
  if (d == 0) return std::nullopt;
  BigInt n = x.numerator() % P;
  if (n < 0) n += P;
  return F(static_cast<std::int64_t>(n)) * inverse(F(static_cast<std::int64_t>(d)));
}

template <std::uint32_t P>
std::optional<ModularImage> modular_image(const MatrixQ& m) {
  using F = ModP<P>;
  Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> a(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      auto r = reduce<P>(m(i, j));
      if (!r) return std::nullopt;
      a(i, j) = *r;
    }
  }
  ModularImage img;
  img.pivots = gauss_jordan(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : img.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (Index j = 0; j < m.cols(); ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) img.free.push_back(j);
  const auto rank = img.pivots.size();
  img.residues.resize(img.free.size() * rank);
  for (std::size_t f = 0; f < img.free.size(); ++f) {
    for (std::size_t i = 0; i < rank; ++i) {
      img.residues[f * rank + i] = (-a(static_cast<Index>(i), img.free[f])).value();
    }
  }
  return img;
}

std::optional<ModularImage> modular_image(std::size_t prime_index, const MatrixQ& m) {
  switch (prime_index) {
    case 0: return modular_image<kPrimes[0]>(m);
    case 1: return modular_image<kPrimes[1]>(m);
    case 2: return modular_image<kPrimes[2]>(m);
    case 3: return modular_image<kPrimes[3]>(m);
    case 4: return modular_image<kPrimes[4]>(m);
    case 5: return modular_image<kPrimes[5]>(m);
    case 6: return modular_image<kPrimes[6]>(m);
    default: return modular_image<kPrimes[7]>(m);
  }
}

std::int64_t reconstruction_bound(std::int64_t m) {
  auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(m) / 2));
  while (static_cast<__int128>(bound) * bound * 2 > m) --bound;
  while (static_cast<__int128>(bound + 1) * (bound + 1) * 2 <= m) ++bound;
  return bound;
}

// a/b with a == r*b (mod m) and |a|, b <= bound = floor(sqrt(m/2)).
std::optional<Rational> reconstruct_small(std::int64_t r, std::int64_t m, std::int64_t bound) {
  std::int64_t r0 = m, r1 = r % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || (t1 < 0 ? -t1 : t1) > bound) return std::nullopt;
  if (std::gcd(r1, t1) != 1) return std::nullopt;
  return Rational(t1 < 0 ? -r1 : r1, t1 < 0 ? -t1 : t1);
}

std::optional<Rational> reconstruct_big(const BigInt& r, const BigInt& m) {
  const BigInt bound = boost::multiprecision::sqrt(BigInt(m / 2));
  BigInt r0 = m, r1 = r % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    const BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || boost::multiprecision::abs(t1) > bound) return std::nullopt;
  if (boost::multiprecision::gcd(r1, t1) != 1) return std::nullopt;
  return Rational(BigRational(t1 < 0 ? BigInt(-r1) : r1, boost::multiprecision::abs(t1)));
}

std::optional<std::int64_t> checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) return std::nullopt;
  return out;
}

// m * v == 0, preferring 128-bit integer arithmetic on denominator-cleared data.
class KernelVerifier {
 public:
  explicit KernelVerifier(const MatrixQ& m) : m_(m) {
    rows_.resize(static_cast<std::size_t>(m.rows()));
    integral_ = true;
    for (Index i = 0; i < m.rows() && integral_; ++i) {
      std::int64_t l = 1;
      for (Index j = 0; j < m.cols() && integral_; ++j) {
        const Rational& x = m(i, j);
        if (!x.is_small()) {
          integral_ = false;
        } else if (!x.is_zero()) {
          auto next = checked_lcm(l, x.small_denominator());
          if (next) l = *next; else integral_ = false;
        }
      }
      auto& row = rows_[static_cast<std::size_t>(i)];
      for (Index j = 0; j < m.cols() && integral_; ++j) {
        const Rational& x = m(i, j);
        if (x.is_zero()) continue;
        std::int64_t v = 0;
        if (__builtin_mul_overflow(x.small_numerator(), l / x.small_denominator(), &v) || v > kEntryLimit ||
            v < -kEntryLimit) {
          integral_ = false;
        } else {
          row.emplace_back(j, v);
        }
      }
    }
  }

  [[nodiscard]] bool in_kernel(const VectorQ& v) const {
    if (integral_) {
      if (auto r = integral_check(v)) return *r;
    }
    for (Index i = 0; i < m_.rows(); ++i) {
      Rational acc;
      for (Index j = 0; j < v.size(); ++j) {
        if (!v(j).is_zero() && !m_(i, j).is_zero()) acc += m_(i, j) * v(j);
      }
      if (!acc.is_zero()) return false;
    }
    return true;
  }

 private:
  static constexpr std::int64_t kEntryLimit = std::int64_t{1} << 40;

  [[nodiscard]] std::optional<bool> integral_check(const VectorQ& v) const {
    std::int64_t l = 1;
    for (Index j = 0; j < v.size(); ++j) {
      if (v(j).is_zero()) continue;
      if (!v(j).is_small()) return std::nullopt;
      auto next = checked_lcm(l, v(j).small_denominator());
      if (!next) return std::nullopt;
      l = *next;
    }
    std::vector<std::int64_t> w(static_cast<std::size_t>(v.size()), 0);
    for (Index j = 0; j < v.size(); ++j) {
      if (v(j).is_zero()) continue;
      std::int64_t x = 0;
      if (__builtin_mul_overflow(v(j).small_numerator(), l / v(j).small_denominator(), &x) || x > kEntryLimit ||
          x < -kEntryLimit)
        return std::nullopt;
      w[static_cast<std::size_t>(j)] = x;
    }
    for (const auto& row : rows_) {
      __int128 acc = 0;
      for (const auto& [j, a] : row) acc += static_cast<__int128>(a) * w[static_cast<std::size_t>(j)];
      if (acc != 0) return false;
    }
    return true;
  }

  const MatrixQ& m_;
  bool integral_ = false;
  std::vector<std::vector<std::pair<Index, std::int64_t>>> rows_;
};

Kernel kernel_from_rref(const RowMatrixQ& r, const std::vector<Index>& pivots) {
  Kernel k;
  k.pivots = pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(r.cols()), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (Index j = 0; j < r.cols(); ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) k.free.push_back(j);
  k.basis = MatrixQ::Zero(r.cols(), static_cast<Index>(k.free.size()));
  for (std::size_t f = 0; f < k.free.size(); ++f) {
    const Index col = k.free[f];
    k.basis(col, static_cast<Index>(f)) = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Rational& x = r(static_cast<Index>(i), col);
      if (!x.is_zero()) k.basis(pivots[i], static_cast<Index>(f)) = -x;
    }
  }
  return k;
}

}  // namespace

RowEchelon reduced_row_echelon(const MatrixQ& m) {
  RowMatrixQ r = m;
  RowEchelon out;
  out.pivots = gauss_jordan(r);
  out.rref = r;
  return out;
}

Kernel kernel_dense(const MatrixQ& m) {
  RowMatrixQ r = m;
  const auto pivots = gauss_jordan(r);
  return kernel_from_rref(r, pivots);
}

std::optional<Kernel> kernel_modular(const MatrixQ& m) {
  const KernelVerifier verifier(m);
  std::optional<ModularImage> best;
  std::vector<BigInt> acc;  // CRT-combined residues
  BigInt modulus = 1;

  for (std::size_t pi = 0; pi < kPrimes.size(); ++pi) {
    auto img = modular_image(pi, m);
    if (!img) continue;
    if (best && img->pivots.size() < best->pivots.size()) continue;  // unlucky prime
    if (!best || img->pivots.size() > best->pivots.size() || img->pivots != best->pivots) {
      best = std::move(img);
      acc.assign(best->residues.begin(), best->residues.end());
      modulus = kPrimes[pi];
    } else {
      const BigInt p = kPrimes[pi];
      const BigInt inv = [&] {
        // modulus^{-1} mod p via Fermat.
        return BigInt(boost::multiprecision::powm(BigInt(modulus % p), p - 2, p));
      }();
      for (std::size_t e = 0; e < acc.size(); ++e) {
        BigInt diff = (BigInt(img->residues[e]) - acc[e] % p) % p;
        if (diff < 0) diff += p;
        acc[e] += modulus * ((diff * inv) % p);
      }
      modulus *= p;
    }

    // Lift and certify.
    const std::size_t rank = best->pivots.size();
    const Index cols = m.cols();
    MatrixQ basis = MatrixQ::Zero(cols, static_cast<Index>(best->free.size()));
    bool lifted = true;
    const bool small = modulus < (BigInt(1) << 62);
    const auto small_mod = small ? static_cast<std::int64_t>(modulus) : 0;
    const auto small_bound = small ? reconstruction_bound(small_mod) : 0;
    for (std::size_t f = 0; f < best->free.size() && lifted; ++f) {
      basis(best->free[f], static_cast<Index>(f)) = Rational(1);
      for (std::size_t i = 0; i < rank; ++i) {
        const BigInt& r = acc[f * rank + i];
        if (r == 0) continue;
        auto q = small ? reconstruct_small(static_cast<std::int64_t>(r), small_mod, small_bound) : reconstruct_big(r, modulus);
        if (!q) {
          lifted = false;
          break;
        }
        basis(best->pivots[i], static_cast<Index>(f)) = *q;
      }
    }
    if (!lifted) continue;
    bool certified = true;
    for (Index f = 0; f < basis.cols() && certified; ++f) certified = verifier.in_kernel(basis.col(f));
    if (!certified) continue;

    // The certified vectors span the kernel (nullity over Q cannot exceed the
    // nullity mod p). They match the rational RREF iff each one ends at its
    // free column; otherwise the prime disagrees on the pivot columns.
    bool canonical = true;
    for (std::size_t f = 0; f < best->free.size() && canonical; ++f) {
      for (std::size_t i = 0; i < rank; ++i) {
        if (best->pivots[i] > best->free[f] && !basis(best->pivots[i], static_cast<Index>(f)).is_zero()) {
          canonical = false;
          break;
        }
      }
    }
    if (!canonical) continue;
    Kernel k;
    k.basis = std::move(basis);
    k.pivots = best->pivots;
    k.free = best->free;
    return k;
  }
  return std::nullopt;
}

Kernel kernel(const MatrixQ& m) {
  Index nnz = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) nnz += m(i, j).is_zero() ? 0 : 1;
  const Index side = std::max(m.rows(), m.cols());
  if (m.rows() * m.cols() <= 48 * 48 || nnz <= 8 * side) return kernel_dense(m);
  if (auto k = kernel_modular(m)) return *std::move(k);
  return kernel_dense(m);
}

Index rank(const MatrixQ& m) { return kernel(m).rank(); }

Index nullity_mod_prime(const MatrixQ& m) {
  for (std::size_t pi = 0; pi < kPrimes.size(); ++pi) {
    if (auto img = modular_image(pi, m)) return static_cast<Index>(img->free.size());
  }
  return kernel_dense(m).nullity();
}

std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  RowMatrixQ aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto pivots = gauss_jordan(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  VectorQ x = VectorQ::Zero(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<Index>(i), a.cols());
  return x;
}

Polynomial characteristic_polynomial(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  const Index n = m.rows();
  MatrixQ h = m;
  // Similarity reduction to upper Hessenberg form.
  for (Index c = 1; c + 1 < n; ++c) {
    Index p = c;
    while (p < n && h(p, c - 1).is_zero()) ++p;
    if (p == n) continue;
    if (p != c) {
      h.row(p).swap(h.row(c));
      h.col(p).swap(h.col(c));
    }
    const Rational inv = inverse(h(c, c - 1));
    for (Index i = c + 1; i < n; ++i) {
      if (h(i, c - 1).is_zero()) continue;
      const Rational t = h(i, c - 1) * inv;
      for (Index j = 0; j < n; ++j)
        if (!h(c, j).is_zero()) h(i, j) -= t * h(c, j);
      for (Index j = 0; j < n; ++j)
        if (!h(j, i).is_zero()) h(j, c) += t * h(j, i);
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Polynomial> p(static_cast<std::size_t>(n + 1));
  p[0] = {Rational(1)};
  for (Index k = 1; k <= n; ++k) {
    Polynomial next(static_cast<std::size_t>(k + 1));
    const Polynomial& prev = p[static_cast<std::size_t>(k - 1)];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] += prev[d];
      next[d] -= h(k - 1, k - 1) * prev[d];
    }
    Rational sub = 1;
    for (Index i = k - 1; i >= 1; --i) {
      sub *= h(i, i - 1);
      if (sub.is_zero()) break;
      const Rational coeff = h(i - 1, k - 1) * sub;
      if (coeff.is_zero()) continue;
      const Polynomial& q = p[static_cast<std::size_t>(i - 1)];
      for (std::size_t d = 0; d < q.size(); ++d) next[d] -= coeff * q[d];
    }
    p[static_cast<std::size_t>(k)] = std::move(next);
  }
  return p[static_cast<std::size_t>(n)];
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::vector<BigInt> divisors(BigInt n) {
  n = boost::multiprecision::abs(n);
  std::vector<std::pair<BigInt, int>> factors;
  if (n <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    auto m = static_cast<std::uint64_t>(n);
    for (std::uint64_t d = 2; d * d <= m && d < 2000000; ++d) {
      int e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      if (e > 0) factors.emplace_back(BigInt(d), e);
    }
    if (m > 1) factors.emplace_back(BigInt(m), 1);
  } else {
    for (BigInt d = 2; d * d <= n && d < 20000; ++d) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      if (e > 0) factors.emplace_back(d, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
  }
  std::vector<BigInt> out{1};
  for (const auto& [prime, e] : factors) {
    const std::size_t base = out.size();
    BigInt pw = 1;
    for (int i = 0; i < e; ++i) {
      pw *= prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Divides p by (t - r); the remainder must be zero.
Polynomial deflate(const Polynomial& p, const Rational& r) {
  Polynomial q(p.size() - 1);
  Rational carry;
  for (std::size_t i = p.size() - 1; i >= 1; --i) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

RootSplit rational_roots(const Polynomial& poly) {
  Polynomial p = poly;
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (p.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
  RootSplit out;
  int zero_mult = 0;
  while (p.size() > 1 && p.front().is_zero()) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);

  if (p.size() > 1) {
    // Integer coefficients with the same roots.
    BigInt l = 1;
    for (const auto& c : p) l = boost::multiprecision::lcm(l, c.denominator());
    const BigInt lead = (p.back() * Rational(l)).numerator();
    const BigInt tail = (p.front() * Rational(l)).numerator();
    const auto num_divs = divisors(tail);
    const auto den_divs = divisors(lead);
    std::vector<Rational> candidates;
    for (const auto& a : num_divs)
      for (const auto& b : den_divs) {
        const Rational q(BigRational(a, b));
        candidates.push_back(q);
        candidates.push_back(-q);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) {
      int mult = 0;
      while (p.size() > 1 && evaluate(p, c).is_zero()) {
        p = deflate(p, c);
        ++mult;
      }
      if (mult > 0) out.roots.emplace_back(c, mult);
    }
  }
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  out.residual = std::move(p);
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_zero(const VectorQ& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

bool is_zero(const MatrixQ& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

EigenProbe probe_eigenvalues(const MatrixQ& m, std::vector<Rational> candidates) {
  if (m.rows() != m.cols()) throw std::invalid_argument("probe_eigenvalues: matrix must be square");
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  EigenProbe out;
  for (const Rational& c : candidates) {
    MatrixQ shifted = m;
    for (Index i = 0; i < m.rows(); ++i) shifted(i, i) -= c;
    const Index null = m.rows() - rank(shifted);
    if (null > 0) {
      out.found.emplace_back(c, null);
      out.total += null;
    }
  }
  out.complete = out.total == m.rows();
  return out;
}

}  // namespace fischer
