#pragma once

#include <cstdint>
#include <map>

#include "hypint/lattice.hpp"
#include "hypint/report.hpp"
#include "hypint/series.hpp"

namespace hypint {

bool is_prime(std::int64_t p);
/// Primes <= bound, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Sum of the base-p digits of n.
std::int64_t digit_sum(std::int64_t n, std::int64_t p);
/// v_p(n!) = (n - s_p(n)) / (p - 1). Throws DomainError unless p is prime.
std::int64_t legendre_valuation(std::int64_t n, std::int64_t p);

/// v_p of the series coefficient at index l, from factorial valuations.
std::int64_t coeff_valuation(const Vec& l, std::size_t M, std::int64_t p);
/// v_p of a nonzero rational by repeated division of numerator and denominator.
std::int64_t exact_valuation(const Rat& q, std::int64_t p);

struct ValuationProfile {
  std::int64_t p = 0;
  std::map<Vec, std::int64_t> valuation;  // keyed by index vector l
};
ValuationProfile valuation_profile(const SparseSeries& s, std::int64_t p);

/// Largest factorial argument among the stored index vectors.
std::int64_t max_factorial_argument(const SparseSeries& s);

/// Prime-by-prime integrality of F_u up to negative degree D. An empty prime
/// list means every prime up to the largest factorial argument, which makes
/// the check exhaustive.
VerificationReport verify_p_integrality(const LatticeConfig& cfg, const Vec& u, std::int64_t D,
                                        std::vector<std::int64_t> primes = {}, bool check_hypothesis = true);

}  // namespace hypint
