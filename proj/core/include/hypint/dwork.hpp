#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hypint/lattice.hpp"
#include "hypint/piadic.hpp"
#include "hypint/report.hpp"

namespace hypint {

/// Exact coefficients of the Artin-Hasse exponential exp(sum_i t^{p^i}/p^i)
/// up to t^n, from n a_n = sum_{p^i <= n} a_{n - p^i}.
std::vector<Rat> artin_hasse(std::int64_t p, std::int64_t n);

/// The root gamma_0 of sum_i t^{p^i}/p^i with ord gamma_0 = 1/(p-1),
/// normalized by gamma_0 = pi mod pi^2.
PiAdic gamma0(const std::shared_ptr<const PiRing>& ring);

/// Default guard digits for tables reaching index `index_max`.
std::int64_t default_guard(std::int64_t index_max);

/// Splitting-function data for one prime, computed once to relative
/// precision K + guard and then read only. Comparisons are made modulo pi^K.
///
/// theta_i = AH_i gamma_0^i. hat_theta and hat_theta1 are the coefficients of
/// theta-hat(t) = sum hat_theta_i (gamma_0 t)^i / i! and of the same series
/// with the exp(gamma_0 t) factor removed. sigma_i and tau_i are the sums
/// built from hat_theta1; the coefficient of t^{-n} in Q is q(n).
class DworkTables {
 public:
  /// guard < 0 selects default_guard(index_max).
  DworkTables(std::int64_t p, std::int64_t K, std::int64_t guard, std::int64_t index_max);

  std::int64_t p() const { return p_; }
  std::int64_t K() const { return K_; }
  std::int64_t guard() const { return guard_; }
  std::int64_t index_max() const { return index_max_; }
  const std::shared_ptr<const PiRing>& ring() const { return ring_; }

  const PiAdic& gamma0() const { return gamma0_; }
  /// gamma_0^k for any integer k.
  PiAdic gamma0_pow(std::int64_t k) const;
  const Rat& artin_hasse(std::int64_t i) const;
  const PiAdic& theta(std::int64_t i) const;
  const PiAdic& hat_theta(std::int64_t i) const;
  const PiAdic& hat_theta1(std::int64_t i) const;
  const PiAdic& sigma(std::int64_t i) const;
  const PiAdic& tau(std::int64_t i) const;
  /// Coefficient of t^{-n} in Q(t), n >= 1.
  PiAdic q(std::int64_t n) const;
  /// sigma(l) = prod_{j<M} sigma_{l_j} prod_{j>=M} tau_{l_j}.
  PiAdic sigma_of(const Vec& l, std::size_t M) const;

  PiAdic from_int(const Int& n) const { return PiAdic::from_int(ring_, n); }
  PiAdic from_rat(const Rat& q) const { return PiAdic::from_rat(ring_, q); }

 private:
  const PiAdic& at(const std::vector<PiAdic>& v, std::int64_t i, const char* what) const;

  std::int64_t p_, K_, guard_, index_max_;
  std::shared_ptr<const PiRing> ring_;
  PiAdic gamma0_, gamma0_inv_;
  std::vector<Rat> ah_;
  std::vector<PiAdic> theta_, hat_theta_, hat_theta1_, sigma_, tau_;
};

/// Lower bounds, in powers of pi, used both for checks and for truncation.
std::int64_t theta_ord_bound(std::int64_t i);
std::int64_t hat_theta1_ord_bound(std::int64_t p, std::int64_t i);

/// Table-level identities: Artin-Hasse integrality, gamma_0 as a root,
/// the ord bounds, the congruences of sigma and tau, hat_theta = tau and
/// theta(t) theta-hat(t^p) = theta-hat(t), all for indices <= index_max.
VerificationReport verify_tables(const DworkTables& t);

/// The negative part of theta(t) Q(t^p) equals p Q(t), on t^{-1}..t^{-n_max}.
VerificationReport verify_key_identity(std::int64_t p, std::int64_t K, std::int64_t n_max, std::int64_t guard = -1);

struct GCoefficient {
  Vec l;
  Rat f;     // coefficient of F_u
  PiAdic g;  // sigma(l) f, the coefficient of G_u
};
/// G_u up to negative degree D, in the order of the F_u expansion.
std::vector<GCoefficient> expand_Gu(const DworkTables& t, const LatticeConfig& cfg, const Vec& u, std::int64_t D);

/// Coefficient of x^rho Lambda^mu in the Frobenius image of G, truncated to
/// pi^K: every omitted term has a certified ord >= K.
PiAdic frobenius_coeff(const DworkTables& t, const LatticeConfig& cfg, const Vec& rho, const Vec& mu);

/// Index bound that covers frobenius_coeff and the recursion on the window.
std::int64_t dwork_index_bound(const LatticeConfig& cfg, std::int64_t p, std::int64_t K, std::int64_t height_cap,
                               std::int64_t D);

/// For rho in M_beta at heights <= height_cap and the coefficient window
/// -1-D <= mu_j <= 1 (j < M), mu_j >= 0 (j >= M): the Frobenius image equals
/// p^M gamma_0^{c.rho} G_rho modulo pi^K, and matched coefficients have
/// ratio p^M. Also checks G = F mod gamma_0 on the window.
VerificationReport verify_eigenvector(const LatticeConfig& cfg, std::int64_t p, std::int64_t K,
                                      std::int64_t height_cap, std::int64_t D, std::int64_t guard = -1);

/// Rebuilds each G_rho coefficient on the window from lower G_u through
/// the unit-multiplier recursion and checks that every multiplier is
/// p-integral.
VerificationReport verify_recursion(const LatticeConfig& cfg, std::int64_t p, std::int64_t K,
                                    std::int64_t height_cap, std::int64_t D, std::int64_t guard = -1);

}  // namespace hypint
