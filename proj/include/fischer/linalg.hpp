#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fischer/rational.hpp"

namespace fischer {

using Index = Eigen::Index;
using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowMatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Element of the prime field GF(P).
template <std::uint32_t P>
class ModP {
 public:
  static constexpr std::uint32_t modulus = P;

  ModP() noexcept = default;
  ModP(std::int64_t x) noexcept  // NOLINT
      : v_(static_cast<std::uint32_t>(((x % static_cast<std::int64_t>(P)) + P) % P)) {}

  static ModP raw(std::uint32_t v) noexcept {
    ModP r;
    r.v_ = v;
    return r;
  }
  [[nodiscard]] std::uint32_t value() const noexcept { return v_; }
  [[nodiscard]] bool is_zero() const noexcept { return v_ == 0; }

  friend ModP operator+(ModP a, ModP b) noexcept {
    std::uint32_t s = a.v_ + b.v_;
    return raw(s >= P ? s - P : s);
  }
  friend ModP operator-(ModP a, ModP b) noexcept { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_); }
  friend ModP operator-(ModP a) noexcept { return raw(a.v_ == 0 ? 0 : P - a.v_); }
  friend ModP operator*(ModP a, ModP b) noexcept {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % P));
  }
  ModP& operator+=(ModP b) noexcept { return *this = *this + b; }
  ModP& operator-=(ModP b) noexcept { return *this = *this - b; }
  ModP& operator*=(ModP b) noexcept { return *this = *this * b; }
  friend bool operator==(ModP a, ModP b) noexcept { return a.v_ == b.v_; }

  friend ModP inverse(ModP a) {
    std::uint64_t result = 1, base = a.v_;
    for (std::uint32_t e = P - 2; e != 0; e >>= 1) {
      if (e & 1U) result = result * base % P;
      base = base * base % P;
    }
    return raw(static_cast<std::uint32_t>(result));
  }

 private:
  std::uint32_t v_ = 0;
};

inline bool is_zero_scalar(const Rational& x) noexcept { return x.is_zero(); }
template <std::uint32_t P>
bool is_zero_scalar(const ModP<P>& x) noexcept {
  return x.is_zero();
}

/// In-place Gauss-Jordan elimination to reduced row echelon form over an exact
/// field. Pivots are taken leftmost-first; zero entries of the pivot row are
/// skipped so sparse inputs stay cheap. Returns the pivot columns.
template <class Scalar, int Options>
std::vector<Index> gauss_jordan(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Options>& m) {
  std::vector<Index> pivots;
  std::vector<Index> support;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && is_zero_scalar(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));

    const Scalar inv = inverse(m(row, col));
    support.clear();
    for (Index j = col; j < m.cols(); ++j) {
      if (!is_zero_scalar(m(row, j))) {
        m(row, j) = m(row, j) * inv;
        support.push_back(j);
      }
    }
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero_scalar(m(r, col))) continue;
      const Scalar f = m(r, col);
      for (Index j : support) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

struct RowEchelon {
  MatrixQ rref;
  std::vector<Index> pivots;
};

RowEchelon reduced_row_echelon(const MatrixQ& m);

/// Null space of a matrix in canonical form: one basis column per free column
/// of the reduced row echelon form, equal to 1 at its free column and 0 at the
/// other free columns.
struct Kernel {
  MatrixQ basis;
  std::vector<Index> pivots;
  std::vector<Index> free;

  [[nodiscard]] Index rank() const { return static_cast<Index>(pivots.size()); }
  [[nodiscard]] Index nullity() const { return basis.cols(); }
};

/// Exact kernel. Picks rational elimination for small or sparse inputs and the
/// certified multi-modular route otherwise; both yield the same canonical basis.
Kernel kernel(const MatrixQ& m);

/// Rational Gauss-Jordan route.
Kernel kernel_dense(const MatrixQ& m);

/// Multi-modular route: eliminates over GF(p), lifts the basis by rational
/// reconstruction and accepts it only after an exact check m * v == 0. Returns
/// nullopt when no certificate is found within the prime budget.
std::optional<Kernel> kernel_modular(const MatrixQ& m);

Index rank(const MatrixQ& m);

/// Upper bound on the nullity of an integer-valued matrix from elimination
/// modulo a single prime (nullity over Q <= nullity over GF(p)).
Index nullity_mod_prime(const MatrixQ& m);

/// Particular solution of a x = b with free variables set to zero.
std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b);

/// Polynomial with rational coefficients, constant term first.
using Polynomial = std::vector<Rational>;

/// det(t I - m), computed by exact Hessenberg reduction.
Polynomial characteristic_polynomial(const MatrixQ& m);

Rational evaluate(const Polynomial& p, const Rational& x);

/// Rational roots with multiplicities, ascending. Any factor without rational
/// roots is returned in `residual` (monic, degree 0 when fully split).
struct RootSplit {
  std::vector<std::pair<Rational, int>> roots;
  Polynomial residual;
};
RootSplit rational_roots(const Polynomial& p);

/// Exact eigenvalue probing: nullity of m - c I for each candidate c. The
/// result is `complete` when the nullities add up to the size of m, in which
/// case m is diagonalizable and the candidates with positive nullity are its
/// whole spectrum.
struct EigenProbe {
  std::vector<std::pair<Rational, Index>> found;  // ascending, nullity > 0
  Index total = 0;
  bool complete = false;
};
EigenProbe probe_eigenvalues(const MatrixQ& m, std::vector<Rational> candidates);

[[nodiscard]] bool is_zero(const VectorQ& v);
[[nodiscard]] bool is_zero(const MatrixQ& m);

template <class Derived>
MatrixQ to_rational(const Eigen::MatrixBase<Derived>& m) {
  MatrixQ out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = Rational(static_cast<std::int64_t>(m(i, j)));
  return out;
}

}  // namespace fischer

namespace Eigen {

template <std::uint32_t P>
struct NumTraits<fischer::ModP<P>> : GenericNumTraits<fischer::ModP<P>> {
  using Real = fischer::ModP<P>;
  using NonInteger = fischer::ModP<P>;
  using Nested = fischer::ModP<P>;
  using Literal = fischer::ModP<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 2
  };
};

}  // namespace Eigen
