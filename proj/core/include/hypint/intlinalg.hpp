#pragma once

#include <optional>

#include "hypint/types.hpp"

namespace hypint {

/// Row-style Hermite normal form with the unimodular transform that
/// produced it: `H = U * X`. Nonzero rows of `H` come first, pivots are
/// strictly increasing and positive, and entries above a pivot are reduced
/// into `[0, pivot)`, so the nonzero rows are a canonical lattice basis.
struct Echelon {
  BigMat H;
  BigMat U;
  std::vector<std::size_t> pivots;  // pivot column of row i, i < rank
  std::size_t rank = 0;
};

Echelon hermite(const BigMat& rows, std::size_t ncols);

/// Canonical basis (HNF rows) of the lattice spanned by `rows`.
BigMat lattice_basis(const BigMat& rows, std::size_t ncols);

/// Basis of {x in Z^n : X x = 0} for an m x n matrix X, in HNF (so the first
/// nonzero entry of every basis vector is positive).
BigMat integer_kernel(const BigMat& X, std::size_t ncols);

/// Some x in Z^n with X x = b, or nullopt when none exists.
std::optional<BigVec> solve_integer(const BigMat& X, std::size_t ncols, const BigVec& b);

/// Integer coordinates of v in the echelon basis `basis` (rows), if any.
std::optional<BigVec> lattice_coordinates(const BigMat& basis, const BigVec& v);

/// Rational coordinates of v in the row space of the echelon basis, if v lies
/// in that space.
std::optional<RatVec> rational_coordinates(const BigMat& basis, const BigVec& v);

/// Inverse of a unimodular integer matrix; throws DomainError otherwise.
BigMat inverse_unimodular(const BigMat& U);

Int determinant(const BigMat& A);

std::size_t rank(const BigMat& rows, std::size_t ncols);

BigMat transpose(const BigMat& A, std::size_t ncols);

}  // namespace hypint
