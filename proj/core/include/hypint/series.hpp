#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hypint/lattice.hpp"
#include "hypint/report.hpp"

namespace hypint {

/// Monomial exponent of the index vector l: -l_j-1 for j < M, l_j otherwise.
Vec exponent_of(const Vec& l, std::size_t M);
Vec index_of(const Vec& e, std::size_t M);
/// Sum of l_j over j < M: the truncation degree.
std::int64_t negative_degree(const Vec& l, std::size_t M);

/// (-1)^{sum_{j<M} l_j} prod_{j<M} l_j! / prod_{j>=M} l_j!.
Rat series_coefficient(const Vec& l, std::size_t M);

/// Truncated series in Lambda_1..Lambda_N keyed by monomial exponent.
/// Every monomial whose index vector has negative degree <= `frontier` is
/// present (with its exact coefficient) or has coefficient zero.
struct SparseSeries {
  std::size_t N = 0;
  std::size_t M = 0;
  Vec u;
  std::int64_t frontier = 0;
  std::map<Vec, Rat> terms;

  bool empty() const { return terms.empty(); }
  /// Coefficient at a monomial; zero when absent.
  Rat at(const Vec& exponent) const;
};

/// Optional per-coordinate bounds on l, used by callers that need a window.
struct IndexBounds {
  std::optional<Vec> lower;
  std::optional<Vec> upper;
};

/// All l with l_j >= 0, l_j = 0 off sigma_beta, sum_{j<M} (-l_j-1) a_j +
/// sum_{j>=M} l_j a_j = u and negative degree <= D, in lexicographic order.
std::vector<Vec> enumerate_solutions(const LatticeConfig& cfg, const Vec& u, std::int64_t D,
                                     const IndexBounds& bounds = {});

/// The defining formula for any u (empty when there are no solutions).
SparseSeries expand_series(const LatticeConfig& cfg, const Vec& u, std::int64_t D);

struct Expansion {
  SparseSeries series;
  std::string diagnostic;  // empty when u is in M_beta
};
/// As expand_series, restricted to parameters u in M_beta.
Expansion expand_Fu(const LatticeConfig& cfg, const Vec& u, std::int64_t D);

/// Derivative with respect to Lambda_k; the result is the series for u - a_k
/// with the frontier moved to where completeness still holds.
SparseSeries differentiate(const LatticeConfig& cfg, const SparseSeries& s, std::size_t k);

struct LatticeRelation {
  Vec l;  // sum l_j a_j = 0
};
/// Canonical (HNF) basis of the relation lattice L.
std::vector<LatticeRelation> relation_basis(const LatticeConfig& cfg);

struct BoxOperator {
  LatticeRelation relation;
  Vec positive;  // max(l_j, 0)
  Vec negative;  // max(-l_j, 0)
};
BoxOperator make_box(const LatticeConfig& cfg, const LatticeRelation& l);
/// Difference of the two iterated-derivative branches, restricted to the
/// common complete range.
SparseSeries apply_box(const LatticeConfig& cfg, const BoxOperator& op, const SparseSeries& s);

VerificationReport contiguity(const LatticeConfig& cfg, const Vec& u, std::size_t k, std::int64_t D);
VerificationReport box_annihilates(const LatticeConfig& cfg, const Vec& u, const LatticeRelation& l, std::int64_t D);
VerificationReport euler_check(const LatticeConfig& cfg, const Vec& u, std::size_t i, std::int64_t D);

struct NonzeroAnswer {
  Tri answer = Tri::Unknown;
  std::optional<Vec> witness;
  std::string reason;
};
/// Whether the defining equation has a solution l (that is, F_u != 0).
/// Exact unless the solution set is unbounded without a positive relation,
/// in which case solutions of negative degree <= search_cap are tried.
NonzeroAnswer is_nonzero(const LatticeConfig& cfg, const Vec& u, std::int64_t search_cap = 64);

}  // namespace hypint
