#include <atomic>
#include <functional>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "hypint/criterion.hpp"
#include "hypint/dwork.hpp"
#include "hypint/io.hpp"
#include "hypint/valuation.hpp"

using namespace hypint;

namespace {

struct Shared {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  bool summary = false;
};

// Runs fn(0..n-1) on up to `jobs` threads; results keep index order.
std::vector<VerificationReport> parallel_reports(std::size_t n, unsigned jobs,
                                                 const std::function<VerificationReport(std::size_t)>& fn) {
  std::vector<VerificationReport> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs) && t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

int emit(const Shared& sh, VerificationReport rep) {
  if (sh.seed) rep.set_seed(*sh.seed);
  if (!sh.out.empty()) write_text_file(sh.out, rep.to_text());
  if (sh.summary) std::cout << rep.summary() << "\n";
  else if (sh.out.empty()) std::cout << rep.to_text();
  return rep.ok() ? 0 : 3;
}

Document need_document(const Shared& sh) {
  if (sh.config.empty()) throw InputError("--config is required");
  return load_document(sh.config);
}

std::string str(const Vec& v) { return "(" + join(v) + ")"; }

std::string rat_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrality and Frobenius checks for factorial-ratio hypergeometric series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Shared sh;
  std::uint64_t seed_value = 0;
  auto shared = [&](CLI::App* c) {
    c->add_option("--config", sh.config, "input document (JSON)");
    c->add_option("--out", sh.out, "write the full report (or series) to this file");
    c->add_option("--seed", seed_value, "seed echoed into the report")->each([&](const std::string&) { sh.seed = seed_value; });
    c->add_option("--jobs", sh.jobs, "worker threads")->check(CLI::PositiveNumber);
    c->add_flag("--summary", sh.summary, "print the human digest instead of the report");
  };

  auto* expand = app.add_subcommand("expand", "truncated expansion of F_u");
  shared(expand);
  std::string u_text;
  std::int64_t degree = 6;
  bool raw = false;
  expand->add_option("--u", u_text, "parameter u, comma separated")->required();
  expand->add_option("--degree", degree, "negative-degree truncation D")->check(CLI::NonNegativeNumber);
  expand->add_flag("--raw", raw, "expand the defining formula even when u is outside M_beta");

  auto* family = app.add_subcommand("check-family", "Landau criterion, min-height and brute force agreement");
  shared(family);
  std::int64_t m_bound = -1;
  family->add_option("--m-bound", m_bound, "brute-force box [0,m]^r (default depends on r)");

  auto* integ = app.add_subcommand("verify-integrality", "p-integrality of F_u for all u up to a height");
  shared(integ);
  std::int64_t height_cap = -1;
  std::int64_t integ_degree = 6;
  integ->add_option("--height-cap", height_cap, "largest height swept (default M)");
  integ->add_option("--degree", integ_degree, "negative-degree truncation D")->check(CLI::NonNegativeNumber);

  auto* minh = app.add_subcommand("min-height", "least height carrying a nonzero series");
  shared(minh);
  std::int64_t minh_cap = -1;
  minh->add_option("--height-cap", minh_cap, "largest height scanned (default 2M + 2)");

  auto* landau = app.add_subcommand("landau", "minimum of the Landau step function");
  shared(landau);

  auto* dw = app.add_subcommand("dwork-verify", "Frobenius eigenvector and recursion checks");
  shared(dw);
  std::vector<std::int64_t> primes{2};
  std::int64_t K = 12, tdeg = 10, dw_cap = 3, window = 3, guard = -1;
  bool key_only = false;
  dw->add_option("--prime", primes, "primes (repeatable)");
  dw->add_option("--precision", K, "compare modulo pi^K")->check(CLI::PositiveNumber);
  dw->add_option("--tdeg", tdeg, "key identity checked on t^-1 .. t^-tdeg")->check(CLI::PositiveNumber);
  dw->add_option("--height-cap", dw_cap, "largest height of rho")->check(CLI::NonNegativeNumber);
  dw->add_option("--degree", window, "coefficient window D")->check(CLI::NonNegativeNumber);
  dw->add_option("--guard", guard, "extra internal precision (default from table size)");
  dw->add_flag("--key-only", key_only, "only the one-variable identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*expand) {
      Document doc = need_document(sh);
      const LatticeConfig& cfg = *doc.config;
      Vec u = parse_vector(u_text);
      if (u.size() != cfg.n()) throw InputError("--u has length " + std::to_string(u.size()) + ", expected " + std::to_string(cfg.n()));
      if (!za_member(cfg, u)) throw DomainError("u=" + str(u) + " is not in ZA");
      SparseSeries s;
      if (raw) {
        s = expand_series(cfg, u, degree);
      } else {
        Expansion ex = expand_Fu(cfg, u, degree);
        if (!ex.diagnostic.empty()) throw DomainError(ex.diagnostic);
        s = std::move(ex.series);
      }
      const std::string text = series_to_text(s, cfg);
      if (!sh.out.empty()) write_text_file(sh.out, text);
      if (sh.summary) std::cout << "terms=" << s.terms.size() << " frontier=" << s.frontier << "\n";
      else if (sh.out.empty()) std::cout << text;
      return 0;
    }
    if (*family) {
      Document doc = need_document(sh);
      if (!doc.family) throw InputError("check-family needs a document with fields 'C' and 'D'");
      VerificationReport rep = landau_theorem_check(*doc.family, m_bound < 0 ? default_m_bound(*doc.family) : m_bound);
      rep.set_input("family", doc.family->describe());
      return emit(sh, rep);
    }
    if (*integ) {
      Document doc = need_document(sh);
      const LatticeConfig& cfg = *doc.config;
      const std::int64_t cap = height_cap < 0 ? static_cast<std::int64_t>(cfg.M()) : height_cap;
      VerificationReport rep("verify-integrality");
      rep.set_input("config", cfg.describe());
      rep.set_input("config_hash", fnv1a_hex(cfg.describe()));
      rep.set_input("height_cap", std::to_string(cap));
      rep.set_input("D", std::to_string(integ_degree));
      HypothesisResult h = hypothesis_check(cfg, static_cast<std::int64_t>(cfg.M()));
      if (!h.holds) {
        rep.fail("hypothesis", "minimal-height-hypothesis", h.reason);
        return emit(sh, rep);
      }
      rep.pass("hypothesis", "minimal-height-hypothesis", h.reason);
      std::vector<Vec> us;
      for (std::int64_t ht = 1; ht <= cap; ++ht)
        for (const auto& v : interior_points_at_height(cfg, ht)) us.push_back(negate(v));
      for (const auto& u : doc.parameters)
        if (std::find(us.begin(), us.end(), u) == us.end()) us.push_back(u);
      auto parts = parallel_reports(us.size(), sh.jobs, [&](std::size_t i) {
        return verify_p_integrality(cfg, us[i], integ_degree, {}, false);
      });
      for (const auto& p : parts) rep.absorb(p);
      return emit(sh, rep);
    }
    if (*minh) {
      Document doc = need_document(sh);
      const LatticeConfig& cfg = *doc.config;
      const std::int64_t cap = minh_cap < 0 ? 2 * static_cast<std::int64_t>(cfg.M()) + 2 : minh_cap;
      VerificationReport rep("min-height");
      rep.set_input("config", cfg.describe());
      rep.set_input("height_cap", std::to_string(cap));
      MinHeight mh = min_height(cfg, cap);
      const std::string tested = " points_tested=" + std::to_string(mh.points_tested);
      if (!mh.height) {
        rep.inconclusive("min-height", "min-height", "no nonzero series up to height " + std::to_string(cap) + tested);
      } else {
        const std::string w = "height=" + std::to_string(*mh.height) + " u=" + str(mh.witness) + tested;
        if (mh.certified()) rep.pass("min-height", "min-height", w);
        else rep.inconclusive("min-height", "min-height", w + " undecided=" + std::to_string(mh.unknown));
        const bool equal = *mh.height == static_cast<std::int64_t>(cfg.M());
        rep.add("min-height-equals-M", "min-height-equals-M", equal ? Status::Pass : Status::Fail,
                "M=" + std::to_string(cfg.M()) + " min=" + std::to_string(*mh.height));
      }
      return emit(sh, rep);
    }
    if (*landau) {
      Document doc = need_document(sh);
      if (!doc.family) throw InputError("landau needs a document with fields 'C' and 'D'");
      VerificationReport rep("landau");
      rep.set_input("family", doc.family->describe());
      LandauMin lm = landau_min(*doc.family);
      rep.add("landau-minimum", "step-function-nonnegative", lm.value >= 0 ? Status::Pass : Status::Fail,
              "min=" + std::to_string(lm.value) + " x=" + rat_str(lm.witness));
      return emit(sh, rep);
    }
    if (*dw) {
      VerificationReport rep("dwork-verify");
      std::optional<Document> doc;
      if (!key_only) doc = need_document(sh);
      if (doc) rep.set_input("config", doc->config->describe());
      rep.set_input("K", std::to_string(K));
      auto parts = parallel_reports(primes.size(), sh.jobs, [&](std::size_t i) {
        const std::int64_t p = primes[i];
        VerificationReport r("dwork");
        DworkTables t(p, K, guard, 30);
        r.absorb(verify_tables(t));
        r.absorb(verify_key_identity(p, K, tdeg, guard));
        if (doc) {
          r.absorb(verify_eigenvector(*doc->config, p, K, dw_cap, window, guard));
          r.absorb(verify_recursion(*doc->config, p, K, dw_cap, window, guard));
        }
        return r;
      });
      for (const auto& p : parts) rep.absorb(p);
      return emit(sh, rep);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
