#include "hypint/valuation.hpp"

#include <algorithm>

#include "hypint/criterion.hpp"

namespace hypint {
namespace {

std::string vec_str(const Vec& v) { return "(" + join(v) + ")"; }

std::int64_t remove_factor(const Int& x, std::int64_t p) {
  if (x == 0) return 0;
  Int rest;
  Int pp = static_cast<long>(p);
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t k = i * i; k <= bound; k += i) composite[static_cast<std::size_t>(k)] = true;
  }
  return out;
}

std::int64_t digit_sum(std::int64_t n, std::int64_t p) {
  if (n < 0) throw DomainError("digit sum of a negative number");
  std::int64_t s = 0;
  for (; n > 0; n /= p) s += n % p;
  return s;
}

std::int64_t legendre_valuation(std::int64_t n, std::int64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n < 0) throw DomainError("factorial of a negative number");
  return (n - digit_sum(n, p)) / (p - 1);
}

std::int64_t coeff_valuation(const Vec& l, std::size_t M, std::int64_t p) {
  std::int64_t v = 0;
  for (std::size_t j = 0; j < l.size(); ++j) v += (j < M ? 1 : -1) * legendre_valuation(l[j], p);
  return v;
}

std::int64_t exact_valuation(const Rat& q, std::int64_t p) {
  if (q == 0) throw DomainError("valuation of zero");
  return remove_factor(q.get_num(), p) - remove_factor(q.get_den(), p);
}

ValuationProfile valuation_profile(const SparseSeries& s, std::int64_t p) {
  ValuationProfile vp;
  vp.p = p;
  for (const auto& [e, c] : s.terms) vp.valuation[index_of(e, s.M)] = coeff_valuation(index_of(e, s.M), s.M, p);
  return vp;
}

std::int64_t max_factorial_argument(const SparseSeries& s) {
  std::int64_t m = 0;
  for (const auto& [e, c] : s.terms)
    for (auto x : index_of(e, s.M)) m = std::max(m, x);
  return m;
}

VerificationReport verify_p_integrality(const LatticeConfig& cfg, const Vec& u, std::int64_t D,
                                        std::vector<std::int64_t> primes, bool check_hypothesis) {
  VerificationReport rep("p-integrality");
  rep.set_input("u", vec_str(u));
  rep.set_input("D", std::to_string(D));
  const std::string base = "u=" + vec_str(u);
  if (check_hypothesis) {
    HypothesisResult h = hypothesis_check(cfg, static_cast<std::int64_t>(cfg.M()));
    if (h.holds) rep.pass(base + ":hypothesis", "minimal-height-hypothesis", h.reason);
    else rep.inconclusive(base + ":hypothesis", "minimal-height-hypothesis", "hypothesis unverified: " + h.reason);
  }
  Expansion ex = expand_Fu(cfg, u, D);
  if (!ex.diagnostic.empty()) {
    rep.fail(base + ":parameter", "parameter-in-range", ex.diagnostic);
    return rep;
  }
  const SparseSeries& s = ex.series;
  const std::int64_t top = max_factorial_argument(s);
  if (primes.empty()) primes = primes_up_to(top);
  for (auto p : primes)
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  rep.set_input("primes", std::to_string(primes.size()) + " up to " + (primes.empty() ? "-" : std::to_string(primes.back())));

  std::vector<Vec> ls;
  for (const auto& [e, c] : s.terms) ls.push_back(index_of(e, s.M));
  std::sort(ls.begin(), ls.end());
  bool any_failure = false;
  for (auto p : primes) {
    const std::string id = base + ":p=" + std::to_string(p);
    std::optional<std::string> bad, mismatch;
    for (const auto& l : ls) {
      const std::int64_t legendre = coeff_valuation(l, s.M, p);
      const std::int64_t exact = exact_valuation(s.at(exponent_of(l, s.M)), p);
      if (legendre != exact && !mismatch)
        mismatch = "l=" + vec_str(l) + " legendre=" + std::to_string(legendre) + " exact=" + std::to_string(exact);
      if (legendre < 0 && !bad) bad = "l=" + vec_str(l) + " v_p=" + std::to_string(legendre);
    }
    if (mismatch) rep.fail(id + ":dual-path", "valuation-paths-agree", *mismatch);
    if (bad) {
      rep.fail(id, "p-integral", *bad);
      any_failure = true;
    } else {
      rep.pass(id, "p-integral", "terms=" + std::to_string(ls.size()));
    }
  }

  std::optional<std::string> non_integral, big_prime;
  for (const auto& [e, c] : s.terms) {
    Vec l = index_of(e, s.M);
    if (c.get_den() != 1 && !non_integral) non_integral = "l=" + vec_str(l) + " c=" + c.get_str();
    std::int64_t top_den = 0;
    for (std::size_t j = s.M; j < l.size(); ++j) top_den = std::max(top_den, l[j]);
    Int den = c.get_den();
    for (auto p : primes_up_to(top_den)) {
      Int rest;
      Int pp = static_cast<long>(p);
      mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
      den = rest;
    }
    if (den != 1 && !big_prime) big_prime = "l=" + vec_str(l) + " leftover denominator " + den.get_str();
  }
  if (big_prime) rep.fail(base + ":denominator-support", "denominator-primes-bounded", *big_prime);
  else rep.pass(base + ":denominator-support", "denominator-primes-bounded");
  if (non_integral) rep.fail(base + ":exact", "integral-coefficients", *non_integral);
  else rep.pass(base + ":exact", "integral-coefficients", "terms=" + std::to_string(s.terms.size()));
  // The exhaustive prime list and the exact denominator must tell the same story.
  if (any_failure != non_integral.has_value() && primes == primes_up_to(top))
    rep.fail(base + ":consistency", "prime-check-matches-denominator", "prime checks and exact denominators disagree");
  return rep;
}

}  // namespace hypint
