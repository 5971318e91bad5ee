#include "hypint/dwork.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hypint/polytope.hpp"
#include "hypint/series.hpp"
#include "hypint/valuation.hpp"

namespace hypint {
namespace {

std::string vec_str(const Vec& v) { return "(" + join(v) + ")"; }

Int falling(std::int64_t top, std::int64_t count) {
  Int r = 1;
  for (std::int64_t k = 0; k < count; ++k) r *= static_cast<long>(top - k);
  return r;
}

Int factorial(std::int64_t n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(std::int64_t n, std::int64_t k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Worst outcome over many comparisons, keeping the first witness of it.
struct Tally {
  Compare worst = Compare::Equal;
  std::string witness;
  std::size_t count = 0;

  void add(Compare c, const std::function<std::string()>& describe) {
    ++count;
    const auto rank = [](Compare x) { return x == Compare::Unequal ? 2 : x == Compare::Inconclusive ? 1 : 0; };
    if (rank(c) > rank(worst)) {
      worst = c;
      witness = describe();
    }
  }
  void record(VerificationReport& rep, const std::string& id, const std::string& tag) const {
    const std::string n = "checked=" + std::to_string(count);
    switch (worst) {
      case Compare::Equal: rep.pass(id, tag, n); break;
      case Compare::Unequal: rep.fail(id, tag, witness); break;
      case Compare::Inconclusive: rep.inconclusive(id, tag, "precision exhausted: " + witness); break;
    }
  }
};

}  // namespace

std::vector<Rat> artin_hasse(std::int64_t p, std::int64_t n) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::vector<Rat> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    Rat s = 0;
    for (std::int64_t q = 1; q <= k; q *= p) s += a[static_cast<std::size_t>(k - q)];
    s /= static_cast<long>(k);
    a[static_cast<std::size_t>(k)] = s;
  }
  return a;
}

PiAdic gamma0(const std::shared_ptr<const PiRing>& ring) {
  const std::int64_t p = ring->p, d = p - 1;
  // Terms t^{p^i}/p^i with p^i - (p-1) i >= R + 1 vanish at this precision.
  std::vector<std::int64_t> powers;
  for (std::int64_t q = 1, i = 0; q - d * i <= ring->R + 1; q *= p, ++i) powers.push_back(q);
  auto f = [&](const PiAdic& t, bool derivative) {
    PiAdic s = PiAdic::zero(ring, ring->R + 1);
    for (std::size_t i = 0; i < powers.size(); ++i) {
      const Int pi_i = [&] { Int r; Int pp = static_cast<long>(p); mpz_pow_ui(r.get_mpz_t(), pp.get_mpz_t(), i); return r; }();
      s = s + (derivative ? t.pow(powers[i] - 1) : t.pow(powers[i]) * PiAdic::from_rat(ring, Rat(1, pi_i)));
    }
    return s;
  };
  PiAdic t = PiAdic::pi_power(ring, 1);
  for (std::int64_t good = 1; good <= 2 * ring->R + 2; good *= 2) t = t - f(t, false) * f(t, true).inverse();
  return t;
}

std::int64_t default_guard(std::int64_t index_max) { return index_max + 16; }

std::int64_t theta_ord_bound(std::int64_t i) { return i; }

std::int64_t hat_theta1_ord_bound(std::int64_t p, std::int64_t i) { return ceil_div(i * (p - 1) * (p - 1), p); }

DworkTables::DworkTables(std::int64_t p, std::int64_t K, std::int64_t guard, std::int64_t index_max)
    : p_(p), K_(K), guard_(guard < 0 ? default_guard(index_max) : guard), index_max_(index_max) {
  if (K < 1) throw DomainError("precision K must be positive");
  if (index_max < 0) throw DomainError("negative table size");
  const std::int64_t d = p - 1;
  ring_ = PiRing::make(p, K_ + guard_);
  const std::int64_t R = ring_->R;
  gamma0_ = hypint::gamma0(ring_);
  gamma0_inv_ = gamma0_.inverse();

  ah_ = hypint::artin_hasse(p, index_max);
  PiAdic g = from_int(1);
  for (std::int64_t i = 0; i <= index_max; ++i) {
    theta_.push_back(from_rat(ah_[static_cast<std::size_t>(i)]) * g);
    g = g * gamma0_;
  }

  // hat_theta1 is needed until its ord bound reaches R, for the sigma tails.
  std::int64_t kmax = index_max;
  while (hat_theta1_ord_bound(p, kmax) < R) ++kmax;
  // P_j = p^j gamma_j = sum_{i <= j} p^{j-i} gamma_0^{p^i}.
  std::vector<std::int64_t> pj;
  for (std::int64_t q = 1; q <= std::max<std::int64_t>(kmax, 1); q *= p) pj.push_back(q);
  std::vector<PiAdic> P;
  for (std::size_t j = 0; j < pj.size(); ++j) {
    PiAdic s = PiAdic::zero(ring_, R + 1);
    for (std::size_t i = 0; i <= j; ++i) s = s + from_int(Int(static_cast<long>(pj[j - i]))) * gamma0_.pow(pj[i]);
    P.push_back(s);
  }
  auto run = [&](std::size_t jstart, std::int64_t n_top) {
    std::vector<PiAdic> h{from_int(1)};
    for (std::int64_t n = 1; n <= n_top; ++n) {
      PiAdic s = PiAdic::zero(ring_, R + n + 1);
      for (std::size_t j = jstart; j < pj.size() && pj[j] <= n; ++j)
        s = s + P[j] * from_int(falling(n - 1, pj[j] - 1)) * h[static_cast<std::size_t>(n - pj[j])];
      h.push_back(s);
    }
    std::vector<PiAdic> out;
    PiAdic gi = from_int(1);
    for (std::int64_t n = 0; n <= n_top; ++n) {
      out.push_back(h[static_cast<std::size_t>(n)] * gi);
      gi = gi * gamma0_inv_;
    }
    return out;
  };
  hat_theta_ = run(0, index_max);
  hat_theta1_ = run(1, kmax);

  for (std::int64_t i = 0; i <= index_max; ++i) {
    PiAdic s = PiAdic::zero(ring_, hat_theta1_ord_bound(p, kmax));
    for (std::int64_t k = 0; k < kmax; ++k) {
      PiAdic term = from_int(binomial(i + k, k)) * hat_theta1_[static_cast<std::size_t>(k)];
      s = k % 2 ? s - term : s + term;
    }
    sigma_.push_back(s);
    PiAdic t = PiAdic::zero(ring_, R + 1);
    for (std::int64_t k = 0; k <= i; ++k) t = t + from_int(binomial(i, k)) * hat_theta1_[static_cast<std::size_t>(k)];
    tau_.push_back(t);
  }
  (void)d;
}

const PiAdic& DworkTables::at(const std::vector<PiAdic>& v, std::int64_t i, const char* what) const {
  if (i < 0 || i >= static_cast<std::int64_t>(v.size()))
    throw DomainError(std::string("precision exhaustion: ") + what + " index " + std::to_string(i) +
                      " beyond table size " + std::to_string(v.size()));
  return v[static_cast<std::size_t>(i)];
}

PiAdic DworkTables::gamma0_pow(std::int64_t k) const { return k >= 0 ? gamma0_.pow(k) : gamma0_inv_.pow(-k); }

const Rat& DworkTables::artin_hasse(std::int64_t i) const {
  if (i < 0 || i > index_max_) throw DomainError("precision exhaustion: artin-hasse index " + std::to_string(i));
  return ah_[static_cast<std::size_t>(i)];
}
const PiAdic& DworkTables::theta(std::int64_t i) const { return at(theta_, i, "theta"); }
const PiAdic& DworkTables::hat_theta(std::int64_t i) const { return at(hat_theta_, i, "hat-theta"); }
const PiAdic& DworkTables::hat_theta1(std::int64_t i) const { return at(hat_theta1_, i, "hat-theta1"); }
const PiAdic& DworkTables::sigma(std::int64_t i) const { return at(sigma_, i, "sigma"); }
const PiAdic& DworkTables::tau(std::int64_t i) const { return at(tau_, i, "tau"); }

PiAdic DworkTables::q(std::int64_t n) const {
  if (n < 1) throw DomainError("Q has only negative powers");
  const std::int64_t i = n - 1;
  PiAdic c = from_int(factorial(i)) * sigma(i) * gamma0_pow(-n);
  return i % 2 ? -c : c;
}

PiAdic DworkTables::sigma_of(const Vec& l, std::size_t M) const {
  PiAdic s = from_int(1);
  for (std::size_t j = 0; j < l.size(); ++j) s = s * (j < M ? sigma(l[j]) : tau(l[j]));
  return s;
}

VerificationReport verify_tables(const DworkTables& t) {
  VerificationReport rep("dwork-tables");
  const std::int64_t p = t.p(), K = t.K(), n = t.index_max();
  rep.set_input("p", std::to_string(p));
  rep.set_input("K", std::to_string(K));
  rep.set_input("guard", std::to_string(t.guard()));
  rep.set_input("index_max", std::to_string(n));
  const std::string base = "p=" + std::to_string(p);

  std::optional<std::int64_t> bad_ah;
  for (std::int64_t i = 0; i <= n && !bad_ah; ++i)
    if (t.artin_hasse(i).get_den() % p == 0) bad_ah = i;
  if (bad_ah) rep.fail(base + ":artin-hasse", "artin-hasse-p-integral", "i=" + std::to_string(*bad_ah));
  else rep.pass(base + ":artin-hasse", "artin-hasse-p-integral", "checked=" + std::to_string(n + 1));

  {
    Tally root;
    const auto& ring = t.ring();
    PiAdic f = PiAdic::zero(ring, ring->R + 1);
    Int q = 1;
    for (std::int64_t e = 1; e - (p - 1) * static_cast<std::int64_t>(mpz_sizeinbase(q.get_mpz_t(), 2)) <= ring->R + 1 && e < (1 << 20); e *= p) {
      f = f + t.gamma0().pow(e) * t.from_rat(Rat(1, q));
      q *= static_cast<long>(p);
    }
    root.add(f.ord_at_least(K, K), [&] { return "f(gamma0)=" + f.to_string(); });
    root.add(t.gamma0().compare(PiAdic::pi_power(ring, 1), std::min<std::int64_t>(2, K)),
             [&] { return "gamma0 not pi mod pi^2"; });
    root.record(rep, base + ":gamma0", "gamma0-root");
  }

  Tally th, hth, hth1, thnu, sig, ta, eq, prod;
  for (std::int64_t i = 0; i <= n; ++i) {
    const std::string w = "i=" + std::to_string(i);
    th.add(t.theta(i).ord_at_least(theta_ord_bound(i), K), [&] { return w + " " + t.theta(i).to_string(); });
    hth.add(t.hat_theta(i).ord_at_least(0, K), [&] { return w + " " + t.hat_theta(i).to_string(); });
    hth1.add(t.hat_theta1(i).ord_at_least(hat_theta1_ord_bound(p, i), K),
             [&] { return w + " " + t.hat_theta1(i).to_string(); });
    sig.add((t.sigma(i) - t.from_int(1)).ord_at_least(1, K), [&] { return w + " " + t.sigma(i).to_string(); });
    ta.add((t.tau(i) - t.from_int(1)).ord_at_least(1, K), [&] { return w + " " + t.tau(i).to_string(); });
    eq.add(t.hat_theta(i).compare(t.tau(i), K), [&] { return w; });
    for (std::int64_t j = 0; i + j <= n; ++j)
      thnu.add((t.theta(i) * t.theta(j)).ord_at_least(i + j, K),
               [&] { return "m=(" + std::to_string(i) + "," + std::to_string(j) + ")"; });
    // theta(t) theta-hat(t^p) = theta-hat(t), coefficient of t^i.
    PiAdic lhs = PiAdic::zero(t.ring(), t.ring()->R + 1);
    for (std::int64_t k = 0; p * k <= i; ++k)
      lhs = lhs + t.theta(i - p * k) * t.hat_theta(k) * t.gamma0_pow(k) * t.from_rat(Rat(1, factorial(k)));
    PiAdic rhs = t.hat_theta(i) * t.gamma0_pow(i) * t.from_rat(Rat(1, factorial(i)));
    prod.add(lhs.compare(rhs, K), [&] { return w; });
  }
  th.record(rep, base + ":theta", "ord-bound-theta");
  hth.record(rep, base + ":hat-theta", "ord-bound-hat-theta");
  hth1.record(rep, base + ":hat-theta1", "ord-bound-hat-theta1");
  thnu.record(rep, base + ":theta-nu", "ord-bound-theta-nu");
  sig.record(rep, base + ":sigma", "sigma-congruent-one");
  ta.record(rep, base + ":tau", "tau-congruent-one");
  eq.record(rep, base + ":hat-theta-tau", "hat-theta-equals-tau");
  prod.record(rep, base + ":product", "theta-hat-theta-product");
  return rep;
}

VerificationReport verify_key_identity(std::int64_t p, std::int64_t K, std::int64_t n_max, std::int64_t guard) {
  if (n_max < 1) throw DomainError("n_max must be positive");
  const std::int64_t d = p - 1;
  const std::int64_t i_top = (K + n_max) / std::max<std::int64_t>(d, 1) + 1;
  DworkTables t(p, K, guard, p * (i_top + 1));
  VerificationReport rep("key-identity");
  rep.set_input("p", std::to_string(p));
  rep.set_input("K", std::to_string(K));
  rep.set_input("guard", std::to_string(t.guard()));
  rep.set_input("n_max", std::to_string(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    PiAdic lhs = PiAdic::zero(t.ring(), K);
    for (std::int64_t i = std::max<std::int64_t>(0, ceil_div(n, p) - 1); d * (i + 1) - n < K; ++i)
      lhs = lhs + t.theta(p * (i + 1) - n) * t.q(i + 1);
    const PiAdic rhs = t.from_int(p) * t.q(n);
    Tally one;
    one.add(lhs.compare(rhs, K), [&] { return "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string(); });
    one.record(rep, "p=" + std::to_string(p) + ":t^-" + std::to_string(n), "key-identity");
  }
  return rep;
}

std::vector<GCoefficient> expand_Gu(const DworkTables& t, const LatticeConfig& cfg, const Vec& u, std::int64_t D) {
  Expansion ex = expand_Fu(cfg, u, D);
  if (!ex.diagnostic.empty()) throw DomainError(ex.diagnostic);
  std::vector<GCoefficient> out;
  for (const auto& [e, c] : ex.series.terms) {
    Vec l = index_of(e, cfg.M());
    PiAdic g = t.sigma_of(l, cfg.M()) * t.from_rat(c);
    out.push_back({std::move(l), c, std::move(g)});
  }
  return out;
}

PiAdic frobenius_coeff(const DworkTables& t, const LatticeConfig& cfg, const Vec& rho, const Vec& mu) {
  const std::size_t N = cfg.N(), M = cfg.M();
  const std::int64_t p = t.p(), K = t.K();
  if (mu.size() != N || rho.size() != cfg.n()) throw DomainError("frobenius coefficient: wrong dimensions");
  Vec s(cfg.n(), 0);
  for (std::size_t j = 0; j < N; ++j) s = add(s, scale(cfg.point(j), mu[j]));
  if (s != rho) return PiAdic::zero(t.ring(), K);
  for (std::size_t j = M; j < N; ++j)
    if (mu[j] < 0) return PiAdic::zero(t.ring(), K);

  // part(j, l) is a lower bound for ord of the j-th factor.
  auto lo = [&](std::size_t j) { return j < M ? std::max<std::int64_t>(0, ceil_div(-mu[j], p) - 1) : 0; };
  auto part = [&](std::size_t j, std::int64_t l) {
    if (j < M) return mu[j] + p * (l + 1) - 1 - digit_sum(l, p);
    return mu[j] - p * l + digit_sum(l, p);
  };
  // Visit j >= M first (finite ranges), then j < M where part grows with l.
  std::vector<std::size_t> order;
  for (std::size_t j = M; j < N; ++j) order.push_back(j);
  for (std::size_t j = 0; j < M; ++j) order.push_back(j);
  std::vector<std::int64_t> min_part(N);
  for (std::size_t j = 0; j < N; ++j) {
    if (j < M) {
      min_part[j] = part(j, lo(j));
    } else {
      std::int64_t m = part(j, 0);
      for (std::int64_t l = 1; p * l <= mu[j]; ++l) m = std::min(m, part(j, l));
      min_part[j] = m;
    }
  }
  std::vector<std::int64_t> rest(N + 1, 0);
  for (std::size_t k = N; k-- > 0;) rest[k] = rest[k + 1] + min_part[order[k]];

  PiAdic total = PiAdic::zero(t.ring(), K);
  Vec l(N, 0);
  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t k, std::int64_t bound) {
    if (k == N) {
      PiAdic term = t.sigma_of(l, M);
      std::int64_t sign = 0;
      for (std::size_t j = 0; j < N; ++j) {
        if (j < M) {
          const std::int64_t m = mu[j] + p * (l[j] + 1);
          term = term * t.theta(m) * t.from_int(factorial(l[j])) * t.gamma0_pow(-l[j] - 1);
          sign += l[j];
        } else {
          const std::int64_t m = mu[j] - p * l[j];
          term = term * t.theta(m) * t.gamma0_pow(l[j]) * t.from_rat(Rat(1, factorial(l[j])));
        }
      }
      total = total + (sign % 2 ? -term : term);
      return;
    }
    const std::size_t j = order[k];
    for (std::int64_t v = lo(j);; ++v) {
      if (j >= M && p * v > mu[j]) break;
      const std::int64_t b = bound + part(j, v);
      if (b + rest[k + 1] >= K) {
        if (j < M) break;  // part grows with l_j below M
        continue;
      }
      l[j] = v;
      dfs(k + 1, b);
    }
    l[j] = 0;
  };
  dfs(0, 0);
  return total.truncated(K);
}

std::int64_t dwork_index_bound(const LatticeConfig& cfg, std::int64_t p, std::int64_t K, std::int64_t height_cap,
                               std::int64_t D) {
  const std::int64_t d = p - 1;
  const auto M = static_cast<std::int64_t>(cfg.M());
  const std::int64_t lmax = (K + 1 + D) / d + 2;
  const std::int64_t upper_mu = M * (1 + D) + 1;
  const std::int64_t a = 1 + p * (lmax + 1);
  const std::int64_t top = upper_mu / p;
  const std::int64_t b = upper_mu + p * (top + (K + top) / d + 3) + 1;
  return std::max({a, b, D + 1, height_cap}) + 2;
}

namespace {

struct Window {
  Vec rho;
  std::vector<Vec> mus;
};

std::vector<Window> eigen_windows(const LatticeConfig& cfg, std::int64_t height_cap, std::int64_t D) {
  if (!cfg.beta_interior()) throw DomainError("Frobenius checks need beta in the interior of the cone");
  const std::size_t N = cfg.N(), M = cfg.M(), n = cfg.n();
  std::vector<Window> out;
  for (std::int64_t h = 1; h <= height_cap; ++h) {
    for (const auto& v : interior_points_at_height(cfg, h)) {
      Window w;
      w.rho = negate(v);
      Polyhedron P(N);
      for (std::size_t j = 0; j < N; ++j) {
        Vec e(N, 0);
        e[j] = 1;
        if (j < M) {
          P.add(e, 1 + D);
          P.add(negate(e), 1);
        } else {
          P.add(e, 0);
        }
      }
      for (std::size_t r = 0; r < n; ++r) {
        BigVec row(N);
        for (std::size_t j = 0; j < N; ++j) row[j] = static_cast<long>(cfg.point(j)[r]);
        P.add_equality(row, Int(static_cast<long>(-w.rho[r])));
      }
      w.mus = P.integer_points();
      out.push_back(std::move(w));
    }
  }
  return out;
}

bool on_support(const Vec& mu, std::size_t M) {
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (j < M ? mu[j] >= 0 : mu[j] < 0) return false;
  return true;
}

// The G_rho coefficient of Lambda^mu, zero off the support.
PiAdic g_coefficient(const DworkTables& t, const Vec& mu, std::size_t M) {
  if (!on_support(mu, M)) return PiAdic::zero(t.ring(), t.K());
  const Vec l = index_of(mu, M);
  return t.sigma_of(l, M) * t.from_rat(series_coefficient(l, M));
}

std::string frob_inputs(VerificationReport& rep, const LatticeConfig& cfg, std::int64_t p, std::int64_t K,
                        std::int64_t height_cap, std::int64_t D, const DworkTables& t) {
  rep.set_input("config", cfg.describe());
  rep.set_input("p", std::to_string(p));
  rep.set_input("K", std::to_string(K));
  rep.set_input("guard", std::to_string(t.guard()));
  rep.set_input("height_cap", std::to_string(height_cap));
  rep.set_input("D", std::to_string(D));
  return "p=" + std::to_string(p);
}

}  // namespace

VerificationReport verify_eigenvector(const LatticeConfig& cfg, std::int64_t p, std::int64_t K,
                                      std::int64_t height_cap, std::int64_t D, std::int64_t guard) {
  DworkTables t(p, K, guard, dwork_index_bound(cfg, p, K, height_cap, D));
  VerificationReport rep("dwork-eigenvector");
  const std::string base = frob_inputs(rep, cfg, p, K, height_cap, D, t);
  if (!aprime_minimal(cfg)) rep.inconclusive(base + ":minimal", "aprime-minimal", "A' is not minimal");
  else rep.pass(base + ":minimal", "aprime-minimal");
  const std::size_t M = cfg.M();
  const Int pM = [&] { Int r; Int pp = static_cast<long>(p); mpz_pow_ui(r.get_mpz_t(), pp.get_mpz_t(), M); return r; }();
  const PiAdic pMv = t.from_int(pM);
  for (const auto& w : eigen_windows(cfg, height_cap, D)) {
    const std::string id = base + ":rho=" + vec_str(w.rho);
    const PiAdic scale_rho = pMv * t.gamma0_pow(cfg.height_of(w.rho));
    Tally eig, ratio, cong;
    for (const auto& mu : w.mus) {
      const PiAdic frob = frobenius_coeff(t, cfg, w.rho, mu);
      const PiAdic g = g_coefficient(t, mu, M);
      const PiAdic expected = scale_rho * g;
      eig.add(frob.compare(expected, K),
              [&] { return "mu=" + vec_str(mu) + " frob=" + frob.to_string() + " expected=" + expected.to_string(); });
      if (!on_support(mu, M)) continue;
      const PiAdic den = t.gamma0_pow(cfg.height_of(w.rho)) * g;
      const std::int64_t Kr = K - den.ord();
      if (den.is_zero() || Kr < 1) {
        ratio.add(Compare::Inconclusive, [&] { return "mu=" + vec_str(mu) + " denominator ord " + std::to_string(den.ord()); });
      } else {
        const PiAdic r = frob * den.inverse();
        ratio.add(r.compare(pMv, Kr), [&] { return "mu=" + vec_str(mu) + " ratio=" + r.to_string(); });
      }
      const Vec l = index_of(mu, M);
      const PiAdic f = t.from_rat(series_coefficient(l, M));
      cong.add((g - f).ord_at_least(f.ord() + 1, K), [&] { return "l=" + vec_str(l); });
    }
    eig.record(rep, id + ":eigenvector", "frobenius-eigenvector");
    ratio.record(rep, id + ":ratio", "eigenvalue-ratio");
    cong.record(rep, id + ":g-vs-f", "g-congruent-f");
  }
  return rep;
}

VerificationReport verify_recursion(const LatticeConfig& cfg, std::int64_t p, std::int64_t K,
                                    std::int64_t height_cap, std::int64_t D, std::int64_t guard) {
  DworkTables t(p, K, guard, dwork_index_bound(cfg, p, K, height_cap, D));
  VerificationReport rep("dwork-recursion");
  const std::string base = frob_inputs(rep, cfg, p, K, height_cap, D, t);
  const std::size_t N = cfg.N(), M = cfg.M();
  const auto Mi = static_cast<std::int64_t>(M);
  const PiAdic inv_pM = t.from_rat(Rat(1, [&] { Int r; Int pp = static_cast<long>(p); mpz_pow_ui(r.get_mpz_t(), pp.get_mpz_t(), M); return r; }()));
  std::map<std::int64_t, std::vector<Vec>> by_height;
  std::map<std::pair<Vec, std::int64_t>, std::vector<Vec>> solutions;
  auto params_at = [&](std::int64_t h) -> const std::vector<Vec>& {
    auto it = by_height.find(h);
    if (it == by_height.end()) it = by_height.emplace(h, interior_points_at_height(cfg, h)).first;
    return it->second;
  };
  for (const auto& w : eigen_windows(cfg, height_cap, D)) {
    const std::string id = base + ":rho=" + vec_str(w.rho);
    Tally rec, mult;
    for (const auto& mu : w.mus) {
      std::int64_t top = 0;
      for (std::size_t j = M; j < N; ++j) top += floor_div(mu[j], p);
      IndexBounds bounds;
      bounds.lower = Vec(N, 0);
      // Terms at u' = h_u - M have ord >= (p-1) u' - top, since the
      // factorials below the face cost at most top powers of pi.
      const std::int64_t uprime_max = ceil_div(K + top, p - 1);
      bounds.upper = Vec(N, top + uprime_max);
      for (std::size_t j = 0; j < N; ++j) {
        if (j < M) (*bounds.lower)[j] = std::max<std::int64_t>(0, ceil_div(-mu[j], p) - 1);
        else (*bounds.upper)[j] = floor_div(mu[j], p);
      }
      PiAdic sum = PiAdic::zero(t.ring(), K);
      for (std::int64_t hu = 1; hu < Mi + uprime_max; ++hu) {
        for (const auto& v : params_at(hu)) {
          const Vec u = negate(v);
          const std::int64_t Du = std::max<std::int64_t>(0, hu - Mi + top);
          auto key = std::make_pair(u, Du);
          auto it = solutions.find(key);
          if (it == solutions.end()) it = solutions.emplace(key, enumerate_solutions(cfg, u, Du)).first;
          for (const auto& l : it->second) {
            bool inside = true;
            for (std::size_t j = 0; j < N && inside; ++j)
              inside = l[j] >= (*bounds.lower)[j] && l[j] <= (*bounds.upper)[j];
            if (!inside) continue;
            const Vec e = exponent_of(l, M);
            std::int64_t nu_n = 0;
            PiAdic theta_prod = t.from_int(1);
            for (std::size_t j = 0; j < N; ++j) {
              const std::int64_t m = mu[j] - p * e[j];
              nu_n += m;
              theta_prod = theta_prod * t.theta(m);
            }
            const PiAdic multiplier = inv_pM * t.gamma0_pow((p - 1) * hu - nu_n) * theta_prod;
            mult.add(multiplier.ord_at_least(0, K), [&] { return "u=" + vec_str(u) + " l=" + vec_str(l); });
            const PiAdic gu = t.sigma_of(l, M) * t.from_rat(series_coefficient(l, M));
            sum = sum + multiplier * gu;
          }
        }
      }
      const PiAdic g = g_coefficient(t, mu, M);
      rec.add(sum.compare(g, K), [&] { return "mu=" + vec_str(mu) + " sum=" + sum.to_string() + " g=" + g.to_string(); });
    }
    rec.record(rep, id + ":recursion", "recursion-reproduces-g");
    mult.record(rep, id + ":multipliers", "multiplier-p-integral");
  }
  return rep;
}

}  // namespace hypint
