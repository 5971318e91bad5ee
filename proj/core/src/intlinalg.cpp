#include "hypint/intlinalg.hpp"

#include <type_traits>
#include <utility>

namespace hypint {
namespace {

BigMat identity(std::size_t m) {
  BigMat I(m, BigVec(m, 0));
  for (std::size_t i = 0; i < m; ++i) I[i][i] = 1;
  return I;
}

// rows (a, b) <- (s a + t b, u a + v b)
void combine(BigVec& a, BigVec& b, const Int& s, const Int& t, const Int& u, const Int& v) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    Int na = s * a[k] + t * b[k];
    Int nb = u * a[k] + v * b[k];
    a[k] = std::move(na);
    b[k] = std::move(nb);
  }
}

void axpy(BigVec& dst, const Int& q, const BigVec& src) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= q * src[k];
}

}  // namespace

Echelon hermite(const BigMat& rows, std::size_t ncols) {
  Echelon e;
  e.H = rows;
  const std::size_t m = rows.size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw DomainError("hermite: ragged matrix");
  e.U = identity(m);
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m; ++col) {
    for (std::size_t i = row + 1; i < m; ++i) {
      if (e.H[i][col] == 0) continue;
      if (e.H[row][col] == 0) {
        std::swap(e.H[row], e.H[i]);
        std::swap(e.U[row], e.U[i]);
        continue;
      }
      Int a = e.H[row][col], b = e.H[i][col], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int u = -b / g, v = a / g;
      combine(e.H[row], e.H[i], s, t, u, v);
      combine(e.U[row], e.U[i], s, t, u, v);
    }
    if (e.H[row][col] == 0) continue;
    if (e.H[row][col] < 0) {
      for (auto& x : e.H[row]) x = -x;
      for (auto& x : e.U[row]) x = -x;
    }
    const Int& piv = e.H[row][col];
    for (std::size_t k = 0; k < row; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), e.H[k][col].get_mpz_t(), piv.get_mpz_t());
      if (q == 0) continue;
      axpy(e.H[k], q, e.H[row]);
      axpy(e.U[k], q, e.U[row]);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rank = row;
  return e;
}

BigMat lattice_basis(const BigMat& rows, std::size_t ncols) {
  Echelon e = hermite(rows, ncols);
  e.H.resize(e.rank);
  return e.H;
}

BigMat transpose(const BigMat& A, std::size_t ncols) {
  BigMat T(ncols, BigVec(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) T[j][i] = A[i][j];
  return T;
}

BigMat integer_kernel(const BigMat& X, std::size_t ncols) {
  Echelon e = hermite(transpose(X, ncols), X.size());
  BigMat K(e.U.begin() + static_cast<std::ptrdiff_t>(e.rank), e.U.end());
  if (K.empty()) return K;
  return lattice_basis(K, ncols);
}

namespace {

template <class T>
std::optional<std::vector<T>> echelon_coordinates(const BigMat& H, const std::vector<std::size_t>& pivots,
                                                  const std::vector<T>& b) {
  std::vector<T> residual = b;
  std::vector<T> y(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const auto c = pivots[i];
    if constexpr (std::is_same_v<T, Int>) {
      if (!mpz_divisible_p(residual[c].get_mpz_t(), H[i][c].get_mpz_t())) return std::nullopt;
      y[i] = residual[c] / H[i][c];
    } else {
      y[i] = residual[c] / T(H[i][c]);
    }
    if (y[i] == 0) continue;
    for (std::size_t k = 0; k < residual.size(); ++k) residual[k] -= y[i] * H[i][k];
  }
  for (const auto& r : residual)
    if (r != 0) return std::nullopt;
  return y;
}

std::vector<std::size_t> pivots_of(const BigMat& basis) {
  std::vector<std::size_t> piv;
  for (const auto& row : basis) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) throw DomainError("echelon basis has a zero row");
    piv.push_back(c);
  }
  return piv;
}

}  // namespace

std::optional<BigVec> solve_integer(const BigMat& X, std::size_t ncols, const BigVec& b) {
  if (b.size() != X.size()) throw DomainError("solve_integer: dimension mismatch");
  Echelon e = hermite(transpose(X, ncols), X.size());
  BigMat H(e.H.begin(), e.H.begin() + static_cast<std::ptrdiff_t>(e.rank));
  auto y = echelon_coordinates<Int>(H, e.pivots, b);
  if (!y) return std::nullopt;
  BigVec x(ncols, 0);
  for (std::size_t i = 0; i < y->size(); ++i)
    for (std::size_t k = 0; k < ncols; ++k) x[k] += (*y)[i] * e.U[i][k];
  return x;
}

std::optional<BigVec> lattice_coordinates(const BigMat& basis, const BigVec& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return BigVec{};
  }
  if (v.size() != basis.front().size()) throw DomainError("lattice_coordinates: dimension mismatch");
  return echelon_coordinates<Int>(basis, pivots_of(basis), v);
}

std::optional<RatVec> rational_coordinates(const BigMat& basis, const BigVec& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return RatVec{};
  }
  if (v.size() != basis.front().size()) throw DomainError("rational_coordinates: dimension mismatch");
  RatVec b(v.begin(), v.end());
  return echelon_coordinates<Rat>(basis, pivots_of(basis), b);
}

BigMat inverse_unimodular(const BigMat& U) {
  const std::size_t n = U.size();
  Echelon e = hermite(U, n);
  if (e.rank != n) throw DomainError("matrix is singular");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (e.H[i][j] != (i == j ? 1 : 0)) throw DomainError("matrix is not unimodular");
  return e.U;
}

Int determinant(const BigMat& A) {
  const std::size_t n = A.size();
  std::vector<RatVec> M(n);
  for (std::size_t i = 0; i < n; ++i) M[i] = RatVec(A[i].begin(), A[i].end());
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(M[p], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (M[r][c] == 0) continue;
      Rat f = M[r][c] / M[c][c];
      for (std::size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
    }
  }
  return det.get_num();
}

std::size_t rank(const BigMat& rows, std::size_t ncols) { return hermite(rows, ncols).rank; }

}  // namespace hypint
