// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hypint/criterion.hpp"
#include "hypint/dwork.hpp"
#include "hypint/series.hpp"
#include "hypint/valuation.hpp"
#include "oracles.hpp"

using namespace hypint;
using oracle::fact;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && s > limit_s) {
    o.ok = false;
    o.detail = "over the time limit of " + std::to_string(limit_s) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", n, title, s, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

LatticeConfig family_config() { return build_config(RatioFamily({{30}, {1}}, {{15}, {10}, {6}})); }

// Every term of the expansion is the closed form at its own parameter,
// every expected parameter in the box occurs, and all are integers.
Outcome check_family(const LatticeConfig& cfg, const Vec& u, std::int64_t D,
                     const std::function<std::optional<std::pair<Vec, Rat>>(const Vec& l)>& closed,
                     const std::function<std::size_t(const Vec& key)>& in_box, std::size_t box_size,
                     const std::string& name) {
  Outcome o;
  Expansion ex = expand_Fu(cfg, u, D);
  o.require(ex.diagnostic.empty(), name + ": " + ex.diagnostic);
  std::set<Vec> seen;
  for (const auto& [e, c] : ex.series.terms) {
    const Vec l = index_of(e, cfg.M());
    auto want = closed(l);
    if (!want) {
      o.require(false, name + ": unexpected index " + join(l));
      continue;
    }
    o.require(c == want->second, name + ": coefficient mismatch at " + join(l));
    o.require(c.get_den() == 1, name + ": non-integral coefficient at " + join(l));
    if (in_box(want->first)) seen.insert(want->first);
  }
  o.require(seen.size() == box_size, name + ": " + std::to_string(seen.size()) + " of " + std::to_string(box_size) +
                                         " parameters present");
  return o;
}

Outcome merge(Outcome a, const Outcome& b) {
  a.require(b.ok, b.detail);
  return a;
}

Outcome from_report(const VerificationReport& rep, const std::string& name) {
  Outcome o;
  const CheckRecord* bad = nullptr;
  for (const auto& r : rep.records())
    if (r.status != Status::Pass) {
      bad = &r;
      break;
    }
  o.require(!rep.records().empty(), name + ": no records");
  if (bad) o.require(false, name + ": " + to_string(bad->status) + " " + bad->id + " " + bad->tag + " " + bad->witness);
  return o;
}

}  // namespace

int main() {
  criterion(1, "min-height of the 30-15-10-6 configuration is 3", 5.0, [] {
    Outcome o;
    LatticeConfig cfg = family_config();
    MinHeight mh = min_height(cfg, 2 * static_cast<std::int64_t>(cfg.M()) + 2);
    o.require(mh.certified() && *mh.height == 3, "got " + (mh.height ? std::to_string(*mh.height) : std::string("none")));
    return o;
  });

  criterion(2, "min-height of the cubic surface configuration is 2", 5.0, [] {
    Outcome o;
    LatticeConfig cfg = oracle::cubic();
    MinHeight mh = min_height(cfg, 2 * static_cast<std::int64_t>(cfg.M()) + 2);
    o.require(mh.certified() && *mh.height == 2 && *mh.height == (3 + 1 + 2) / 3,
              "got " + (mh.height ? std::to_string(*mh.height) : std::string("none")));
    return o;
  });

  criterion(3, "displayed coefficient families match exact factorial ratios", 60.0, [] {
    LatticeConfig cubic = oracle::cubic();
    auto st_box = [](const Vec& k) -> std::size_t { return k[0] <= 30 && k[1] <= 30; };
    // l = (3s+d, 3t+d, s, s+t+d, s+t+d, t) for d = 0, 1.
    auto cubic_closed = [](std::int64_t d) {
      return [d](const Vec& l) -> std::optional<std::pair<Vec, Rat>> {
        const std::int64_t s = l[2], t = l[5];
        if (l != Vec{3 * s + d, 3 * t + d, s, s + t + d, s + t + d, t}) return std::nullopt;
        Rat c = oracle::ratio(fact(3 * s + d) * fact(3 * t + d), fact(s) * fact(t) * fact(s + t + d) * fact(s + t + d));
        if ((l[0] + l[1]) % 2) c = -c;
        return std::make_pair(Vec{s, t}, c);
      };
    };
    Outcome o = check_family(cubic, {-1, -2, -2, -1, -2}, 180, cubic_closed(0), st_box, 31 * 31, "cubic u=-beta");
    o = merge(o, check_family(cubic, {-2, -1, -1, -2, -2}, 182, cubic_closed(1), st_box, 31 * 31, "cubic u=-(2,1,1,2,2)"));

    LatticeConfig fam = family_config();
    auto m_box = [](const Vec& k) -> std::size_t { return k[0] <= 50; };
    // l = (m, 30m+6k, m, 15m+3k, 10m+2k, 6m+k, m) with shift k.
    auto fam_closed = [](std::int64_t k) {
      return [k](const Vec& l) -> std::optional<std::pair<Vec, Rat>> {
        const std::int64_t m = l[0];
        if (l != Vec{m, 30 * m + 6 * k, m, 15 * m + 3 * k, 10 * m + 2 * k, 6 * m + k, m}) return std::nullopt;
        Rat c = oracle::ratio(fact(30 * m + 6 * k) * fact(m), fact(15 * m + 3 * k) * fact(10 * m + 2 * k) * fact(6 * m + k));
        return std::make_pair(Vec{m}, c);
      };
    };
    auto fam_closed28 = [](const Vec& l) -> std::optional<std::pair<Vec, Rat>> {
      const std::int64_t m = l[0];
      if (l != Vec{m, 30 * m + 28, m, 15 * m + 14, 10 * m + 9, 6 * m + 5, m}) return std::nullopt;
      Rat c = oracle::ratio(fact(30 * m + 28) * fact(m), fact(15 * m + 14) * fact(10 * m + 9) * fact(6 * m + 5));
      return std::make_pair(Vec{m}, c);
    };
    o = merge(o, check_family(fam, {-1, -1, -1, 0, 0, 0}, 1600, fam_closed(0), m_box, 51, "30-family u=-beta"));
    o = merge(o, check_family(fam, {-1, -7, -1, 3, 2, 1}, 1606, fam_closed(1), m_box, 51, "30-family (30m+6)!"));
    o = merge(o, check_family(fam, {-1, -29, -1, 14, 9, 5}, 1628, fam_closed28, m_box, 51, "30-family (30m+28)!"));
    return o;
  });

  criterion(4, "step function, min-height and brute force agree on 200 random families", 600.0, [] {
    Outcome o;
    std::mt19937_64 rng(20261019);
    int negative = 0;
    for (int i = 0; i < 200; ++i) {
      RatioFamily fam = random_family(rng, 2, 3, 6);
      const bool a = landau_min(fam).value >= 0;
      LatticeConfig cfg = build_config(fam);
      HypothesisResult h = hypothesis_check(cfg, static_cast<std::int64_t>(cfg.M()));
      auto bad = brute_force_nonintegral(fam, default_m_bound(fam));
      std::optional<Vec> far;
      if (!a && !bad) far = guided_nonintegral(fam, landau_min(fam).witness);
      negative += !a;
      o.require(h.scan.certified() || h.holds, fam.describe() + ": min-height undecided");
      o.require(a == h.holds, fam.describe() + ": step function and min-height disagree");
      o.require(!a || !bad, fam.describe() + ": brute force counterexample " + (bad ? join(*bad) : ""));
      o.require(a || bad || far, fam.describe() + ": no witness for a negative step function");
    }
    o.require(negative > 0 && negative < 200, "sample has no mix of integral and non-integral families");
    return o;
  });

  criterion(5, "contiguity, Euler and box annihilation at D = 6", 600.0, [] {
    Outcome o;
    struct Case {
      LatticeConfig cfg;
      std::vector<Vec> us;
      std::string name;
    };
    std::vector<Case> cases{{oracle::cubic(), {{-1, -2, -2, -1, -2}, {-2, -1, -1, -2, -2}}, "cubic"},
                            {family_config(), {{-1, -1, -1, 0, 0, 0}, {-1, -7, -1, 3, 2, 1}}, "30-15-10-6"}};
    for (const auto& c : cases) {
      auto rels = relation_basis(c.cfg);
      std::size_t compared = 0;
      for (const auto& u : c.us) {
        for (std::size_t k = 0; k < c.cfg.N(); ++k) {
          VerificationReport rep = contiguity(c.cfg, u, k, 6);
          for (const auto& r : rep.records()) compared += r.witness.rfind("compared=", 0) == 0;
          o = merge(o, from_report(rep, c.name + " contiguity"));
        }
        for (std::size_t i = 0; i < c.cfg.n(); ++i) o = merge(o, from_report(euler_check(c.cfg, u, i, 6), c.name + " euler"));
        for (const auto& l : rels) o = merge(o, from_report(box_annihilates(c.cfg, u, l, 6), c.name + " box"));
      }
      o.require(compared > 0, c.name + ": every contiguity comparison was empty");
    }
    return o;
  });

  criterion(6, "p-adic tables, congruences and the key identity for p = 2, 3, 5 at K = 12", 120.0, [] {
    Outcome o;
    for (std::int64_t p : {2, 3, 5}) {
      DworkTables t(p, 12, -1, 30);
      o = merge(o, from_report(verify_tables(t), "tables p=" + std::to_string(p)));
      o = merge(o, from_report(verify_key_identity(p, 12, 10), "key identity p=" + std::to_string(p)));
    }
    return o;
  });

  criterion(7, "Frobenius eigenvector and recursion on the smallest and cubic configurations", 600.0, [] {
    Outcome o;
    for (const auto& [cfg, name] : {std::make_pair(oracle::smallest(), std::string("smallest")),
                                    std::make_pair(oracle::cubic(), std::string("cubic"))})
      for (std::int64_t p : {2, 3}) {
        const std::string id = name + " p=" + std::to_string(p);
        VerificationReport eig = verify_eigenvector(cfg, p, 12, 3, 3);
        std::size_t ratios = 0;
        for (const auto& r : eig.records()) ratios += r.tag == "eigenvalue-ratio" && r.status == Status::Pass;
        o.require(ratios > 0, id + ": no matched coefficient ratio");
        o = merge(o, from_report(eig, id + " eigenvector"));
        o = merge(o, from_report(verify_recursion(cfg, p, 12, 3, 3), id + " recursion"));
      }
    return o;
  });

  criterion(8, "the (m!m!)/(2m)! negative control is rejected three ways", 60.0, [] {
    Outcome o;
    RatioFamily fam({{1}, {1}}, {{2}});
    LandauMin lm = landau_min(fam);
    o.require(lm.value == -1, "step function minimum is " + std::to_string(lm.value));
    o.require(landau_phi(fam, {Rat(1, 2)}) == -1, "step function at 1/2 is not -1");
    LatticeConfig cfg = build_config(fam);
    o.require(!hypothesis_check(cfg, static_cast<std::int64_t>(cfg.M())).holds, "min-height condition holds");
    VerificationReport rep = verify_p_integrality(cfg, negate(cfg.beta()), 6, {2}, false);
    bool witness = false;
    for (const auto& r : rep.records())
      witness = witness || (r.status == Status::Fail && r.witness.find("l=(1,1,1,2,1)") != std::string::npos);
    o.require(witness, "no p=2 witness at m=1");
    return o;
  });

  return failures == 0 ? 0 : 1;
}
