#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "hypint/lattice.hpp"
#include "hypint/report.hpp"
#include "hypint/series.hpp"

namespace hypint {

/// Factorial ratio prod_j C_j(m)! / prod_k D_k(m)! given by nonnegative
/// integer linear forms in r variables. Rows of `C` and `D` are the forms.
class RatioFamily {
 public:
  /// Throws InputError naming the violated condition ("balance", ...).
  RatioFamily(Mat C, Mat D);

  std::size_t r() const { return r_; }
  std::size_t J() const { return C_.size(); }
  std::size_t K() const { return D_.size(); }
  const Mat& C() const { return C_; }
  const Mat& D() const { return D_; }
  /// Largest value of any form on (1,...,1).
  std::int64_t max_form_total() const;
  std::string describe() const;

 private:
  std::size_t r_ = 0;
  Mat C_, D_;
};

/// Sum floor(C_j(x)) - sum floor(D_k(x)) for x in [0,1)^r.
std::int64_t landau_phi(const RatioFamily& fam, const RatVec& x);

struct LandauMin {
  std::int64_t value = 0;
  RatVec witness;  // a point of [0,1)^r where the minimum is attained
};
/// Exact minimum of the step function over [0,1)^r. Throws DomainError for r > r_cap.
LandauMin landau_min(const RatioFamily& fam, std::size_t r_cap = 3);

Rat ratio_E(const RatioFamily& fam, const Vec& m);

/// Standard basis of Z^{r+J+K} followed by one point per variable, A' the
/// first r+J points and height covector (1,...,1).
LatticeConfig build_config(const RatioFamily& fam);

struct MinHeight {
  std::optional<std::int64_t> height;  // least height with a nonzero series
  Vec witness;                          // u at that height
  std::size_t points_tested = 0;
  std::size_t unknown = 0;  // parameters at heights below the answer left undecided
  bool certified() const { return height.has_value() && unknown == 0; }
};
/// Scans heights 1..H_cap for the least h with some u in M_beta, -c.u = h, F_u != 0.
MinHeight min_height(const LatticeConfig& cfg, std::int64_t H_cap);

struct HypothesisResult {
  bool holds = false;
  bool minimal = false;
  MinHeight scan;
  std::string reason;
};
/// Minimality of A' and min_height == M. Scanning to height M suffices
/// because u = -beta is always nonzero.
HypothesisResult hypothesis_check(const LatticeConfig& cfg, std::int64_t H_cap);
bool integrality_hypothesis_holds(const LatticeConfig& cfg, std::int64_t H_cap);

/// Lexicographically first m in [0,m_bound]^r with E(m) not an integer.
std::optional<Vec> brute_force_nonintegral(const RatioFamily& fam, std::int64_t m_bound);

/// Searches beyond the box for a non-integral E(m), guided by a point where
/// the step function is negative: for primes p above every form total,
/// m close to p*x has v_p(E(m)) = Phi(m/p).
std::optional<Vec> guided_nonintegral(const RatioFamily& fam, const RatVec& x, std::size_t prime_tries = 200);

std::int64_t default_m_bound(const RatioFamily& fam);

VerificationReport landau_theorem_check(const RatioFamily& fam, std::int64_t m_bound);

/// Every F_u with u in M_beta at height <= height_cap (and every extra u)
/// has integer coefficients up to negative degree D.
VerificationReport integrality_sweep(const LatticeConfig& cfg, std::int64_t height_cap, std::int64_t D,
                                     const std::vector<Vec>& extra = {});

/// Random family with 1 <= r <= r_max, 1 <= J,K <= jk_max and entries <= coeff_max.
RatioFamily random_family(std::mt19937_64& rng, std::size_t r_max = 2, std::size_t jk_max = 3,
                          std::int64_t coeff_max = 6);

}  // namespace hypint
