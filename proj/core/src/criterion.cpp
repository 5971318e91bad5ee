#include "hypint/criterion.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hypint/polytope.hpp"
#include "hypint/valuation.hpp"

namespace hypint {
namespace {

Int floor_of(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Rat eval(const Vec& a, const RatVec& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(static_cast<long>(a[i])) * x[i];
  return s;
}

std::int64_t form_total(const Vec& a) {
  std::int64_t s = 0;
  for (auto c : a) s += c;
  return s;
}

std::string vec_str(const Vec& v) { return "(" + join(v) + ")"; }

std::string rat_vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

Int factorial(std::int64_t k) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

// Solves the r x r system rows . x = rhs; nullopt when singular.
std::optional<RatVec> solve_square(std::vector<RatVec> A, RatVec b) {
  const std::size_t r = A.size();
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (p < r && A[p][c] == 0) ++p;
    if (p == r) return std::nullopt;
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || A[i][c] == 0) continue;
      Rat f = A[i][c] / A[c][c];
      for (std::size_t k = c; k < r; ++k) A[i][k] -= f * A[c][k];
      b[i] -= f * b[c];
    }
  }
  RatVec x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = b[i] / A[i][i];
  return x;
}

}  // namespace

RatioFamily::RatioFamily(Mat C, Mat D) : C_(std::move(C)), D_(std::move(D)) {
  if (C_.empty()) throw InputError("family needs at least one numerator form (C)");
  if (D_.empty()) throw InputError("family needs at least one denominator form (D)");
  r_ = C_.front().size();
  if (r_ == 0) throw InputError("forms must have at least one variable");
  for (const auto* F : {&C_, &D_})
    for (const auto& row : *F) {
      if (row.size() != r_) throw InputError("forms have inconsistent numbers of variables");
      for (auto c : row)
        if (c < 0) throw InputError("form coefficients must be nonnegative");
      if (form_total(row) == 0) throw InputError("a form is identically zero");
    }
  for (const auto& c : C_)
    for (const auto& d : D_)
      if (c == d) throw InputError("a numerator form equals a denominator form");
  for (std::size_t s = 0; s < r_; ++s) {
    std::int64_t sc = 0, sd = 0;
    for (const auto& c : C_) sc += c[s];
    for (const auto& d : D_) sd += d[s];
    if (sc != sd) throw InputError("balance violated: coefficient sums differ in variable " + std::to_string(s + 1));
    if (sc == 0) throw InputError("variable " + std::to_string(s + 1) + " appears in no form");
  }
}

std::int64_t RatioFamily::max_form_total() const {
  std::int64_t m = 0;
  for (const auto* F : {&C_, &D_})
    for (const auto& row : *F) m = std::max(m, form_total(row));
  return m;
}

std::string RatioFamily::describe() const {
  std::ostringstream os;
  os << "r=" << r_ << " C=[";
  for (std::size_t j = 0; j < C_.size(); ++j) os << (j ? ";" : "") << join(C_[j]);
  os << "] D=[";
  for (std::size_t k = 0; k < D_.size(); ++k) os << (k ? ";" : "") << join(D_[k]);
  os << "]";
  return os.str();
}

std::int64_t landau_phi(const RatioFamily& fam, const RatVec& x) {
  if (x.size() != fam.r()) throw DomainError("point has wrong dimension");
  for (const auto& xi : x)
    if (xi < 0 || xi >= 1) throw DomainError("coordinate " + xi.get_str() + " outside [0,1)");
  Int s = 0;
  for (const auto& c : fam.C()) s += floor_of(eval(c, x));
  for (const auto& d : fam.D()) s -= floor_of(eval(d, x));
  return s.get_si();
}

LandauMin landau_min(const RatioFamily& fam, std::size_t r_cap) {
  const std::size_t r = fam.r();
  if (r > r_cap) throw DomainError("landau_min supports r <= " + std::to_string(r_cap));
  struct Form {
    Vec a;
    int sign;
  };
  std::vector<Form> forms;
  for (const auto& c : fam.C()) forms.push_back({c, +1});
  for (const auto& d : fam.D()) forms.push_back({d, -1});

  // Arrangement hyperplanes a . x = b meeting [0,1]^r.
  std::set<std::pair<Vec, std::int64_t>> planes;
  for (const auto& f : forms)
    for (std::int64_t t = 0; t <= form_total(f.a); ++t) planes.insert({f.a, t});
  for (std::size_t s = 0; s < r; ++s) {
    Vec e(r, 0);
    e[s] = 1;
    planes.insert({e, 0});
    planes.insert({e, 1});
  }
  std::vector<std::pair<Vec, std::int64_t>> H(planes.begin(), planes.end());

  std::set<RatVec> vertices;
  std::vector<std::size_t> idx(r);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t start) {
    if (pos == r) {
      std::vector<RatVec> A(r, RatVec(r));
      RatVec b(r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) A[i][k] = static_cast<long>(H[idx[i]].first[k]);
        b[i] = static_cast<long>(H[idx[i]].second);
      }
      auto x = solve_square(std::move(A), std::move(b));
      if (!x) return;
      for (const auto& xi : *x)
        if (xi < 0 || xi > 1) return;
      vertices.insert(*x);
      return;
    }
    for (std::size_t i = start; i < H.size(); ++i) {
      idx[pos] = i;
      choose(pos + 1, i + 1);
    }
  };
  choose(0, 0);

  std::optional<LandauMin> best;
  for (const auto& v : vertices) {
    std::vector<Rat> val(forms.size());
    std::vector<Vec> tight_dirs;
    for (std::size_t f = 0; f < forms.size(); ++f) {
      val[f] = eval(forms[f].a, v);
      if (val[f].get_den() == 1) {
        Vec a = forms[f].a;
        if (std::find(tight_dirs.begin(), tight_dirs.end(), a) == tight_dirs.end()) tight_dirs.push_back(a);
      }
    }
    const std::size_t t = tight_dirs.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
      Polyhedron P(r);
      for (std::size_t i = 0; i < t; ++i) {
        Vec a = tight_dirs[i];
        if (!(mask >> i & 1)) a = negate(a);
        P.add(a, -1);
      }
      for (std::size_t s = 0; s < r; ++s) {
        Vec e(r, 0);
        if (v[s] == 0) e[s] = 1;
        else if (v[s] == 1) e[s] = -1;
        else continue;
        P.add(e, -1);
      }
      auto d = P.some_point();
      if (!d) continue;
      std::int64_t phi = 0;
      Rat eps_max = -1;
      auto tighten = [&](const Rat& gap) {
        if (eps_max < 0 || gap < eps_max) eps_max = gap;
      };
      for (std::size_t f = 0; f < forms.size(); ++f) {
        Rat slope = eval(forms[f].a, *d);
        Int fl = floor_of(val[f]);
        if (val[f].get_den() == 1) {
          if (slope < 0) fl -= 1;
          tighten(Rat(1) / abs(slope));
        } else if (slope > 0) {
          tighten((Rat(fl + 1) - val[f]) / slope);
        } else if (slope < 0) {
          tighten((val[f] - Rat(fl)) / -slope);
        }
        phi += forms[f].sign * fl.get_si();
      }
      for (std::size_t s = 0; s < r; ++s) {
        if ((*d)[s] > 0) tighten((1 - v[s]) / (*d)[s]);
        else if ((*d)[s] < 0) tighten(v[s] / -(*d)[s]);
      }
      Rat eps = eps_max / 2;
      RatVec x(r);
      for (std::size_t s = 0; s < r; ++s) x[s] = v[s] + eps * (*d)[s];
      if (landau_phi(fam, x) != phi) throw std::logic_error("landau_min: cell value disagrees with direct evaluation");
      if (!best || phi < best->value) best = LandauMin{phi, x};
    }
  }
  if (!best) throw std::logic_error("landau_min: no cell found");
  return *best;
}

Rat ratio_E(const RatioFamily& fam, const Vec& m) {
  if (m.size() != fam.r()) throw DomainError("m has wrong dimension");
  Int num = 1, den = 1;
  for (const auto& c : fam.C()) num *= factorial(dot(c, m));
  for (const auto& d : fam.D()) den *= factorial(dot(d, m));
  Rat q(num, den);
  q.canonicalize();
  return q;
}

LatticeConfig build_config(const RatioFamily& fam) {
  const std::size_t r = fam.r(), J = fam.J(), K = fam.K(), n = r + J + K;
  Mat pts;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    pts.push_back(e);
  }
  for (std::size_t s = 0; s < r; ++s) {
    Vec a(n, 0);
    a[s] = 1;
    for (std::size_t j = 0; j < J; ++j) a[r + j] = fam.C()[j][s];
    for (std::size_t k = 0; k < K; ++k) a[r + J + k] = -fam.D()[k][s];
    pts.push_back(a);
  }
  std::vector<std::size_t> ap(r + J);
  for (std::size_t j = 0; j < r + J; ++j) ap[j] = j;
  return LatticeConfig(std::move(pts), ap, Vec(n, 1));
}

MinHeight min_height(const LatticeConfig& cfg, std::int64_t H_cap) {
  if (H_cap < 1) throw DomainError("height cap must be at least 1");
  MinHeight mh;
  std::size_t unknown = 0;
  for (std::int64_t h = 1; h <= H_cap; ++h) {
    for (const auto& v : interior_points_at_height(cfg, h)) {
      Vec u = negate(v);
      if (!za_member(cfg, u)) continue;
      ++mh.points_tested;
      NonzeroAnswer a = is_nonzero(cfg, u);
      if (a.answer == Tri::Yes) {
        mh.height = h;
        mh.witness = u;
        mh.unknown = unknown;
        return mh;
      }
      if (a.answer == Tri::Unknown) ++unknown;
    }
  }
  mh.unknown = unknown;
  return mh;
}

HypothesisResult hypothesis_check(const LatticeConfig& cfg, std::int64_t H_cap) {
  HypothesisResult res;
  res.minimal = aprime_minimal(cfg);
  if (!res.minimal) {
    res.reason = "A' is not minimal: a proper subset sums into the relative interior";
    return res;
  }
  const std::int64_t M = static_cast<std::int64_t>(cfg.M());
  res.scan = min_height(cfg, std::max<std::int64_t>(1, std::min(H_cap, M)));
  if (!res.scan.height) {
    res.reason = "no nonzero series found up to height " + std::to_string(std::min(H_cap, M));
    return res;
  }
  if (!res.scan.certified()) {
    res.reason = "undecided parameters below height " + std::to_string(*res.scan.height);
    return res;
  }
  res.holds = *res.scan.height == M;
  res.reason = "minimal height " + std::to_string(*res.scan.height) + " at u=" + vec_str(res.scan.witness) +
               ", |A'|=" + std::to_string(M);
  return res;
}

bool integrality_hypothesis_holds(const LatticeConfig& cfg, std::int64_t H_cap) { return hypothesis_check(cfg, H_cap).holds; }

std::optional<Vec> brute_force_nonintegral(const RatioFamily& fam, std::int64_t m_bound) {
  const std::size_t r = fam.r();
  Vec m(r, 0);
  while (true) {
    if (ratio_E(fam, m).get_den() != 1) return m;
    std::size_t i = r;
    while (i > 0 && m[i - 1] == m_bound) m[--i] = 0;
    if (i == 0) return std::nullopt;
    ++m[i - 1];
  }
}

std::optional<Vec> guided_nonintegral(const RatioFamily& fam, const RatVec& x, std::size_t prime_tries) {
  std::int64_t p = fam.max_form_total() + 1;
  for (std::size_t tries = 0; tries < prime_tries; ++p) {
    if (!is_prime(p)) continue;
    ++tries;
    Vec m(fam.r());
    for (std::size_t s = 0; s < fam.r(); ++s) {
      Rat q = x[s] * Rat(p);
      Int f = floor_of(q + Rat(1, 2));
      m[s] = f.get_si();
    }
    if (ratio_E(fam, m).get_den() != 1) return m;
  }
  return std::nullopt;
}

std::int64_t default_m_bound(const RatioFamily& fam) { return fam.r() == 1 ? 50 : 20; }

VerificationReport landau_theorem_check(const RatioFamily& fam, std::int64_t m_bound) {
  VerificationReport rep("check-family");
  rep.set_input("family", fam.describe());
  rep.set_input("m_bound", std::to_string(m_bound));
  LandauMin lm = landau_min(fam);
  const bool a = lm.value >= 0;
  std::string wa = "min=" + std::to_string(lm.value) + " at x=" + rat_vec_str(lm.witness);
  if (a) rep.pass("step-function", "step-function-nonnegative", wa);
  else rep.fail("step-function", "step-function-nonnegative", wa);

  auto bad = brute_force_nonintegral(fam, m_bound);
  if (!bad) rep.pass("brute-force", "ratio-integral-in-box");
  else rep.fail("brute-force", "ratio-integral-in-box", "m=" + vec_str(*bad) + " E=" + ratio_E(fam, *bad).get_str());

  LatticeConfig cfg = build_config(fam);
  HypothesisResult hc = hypothesis_check(cfg, static_cast<std::int64_t>(cfg.M()));
  const bool c = hc.holds;
  if (c) rep.pass("min-height", "minimal-height-equals-size", hc.reason);
  else rep.fail("min-height", "minimal-height-equals-size", hc.reason);

  if (a != c) {
    rep.fail("agreement", "step-function-iff-min-height", wa + "; " + hc.reason);
  } else if (a && bad) {
    rep.fail("agreement", "step-function-implies-integral", "m=" + vec_str(*bad));
  } else if (!a && !bad) {
    auto far = guided_nonintegral(fam, lm.witness);
    if (far) rep.pass("agreement", "negative-step-has-witness", "m=" + vec_str(*far) + " beyond the box");
    else rep.inconclusive("agreement", "negative-step-has-witness", "no non-integral ratio found");
  } else {
    rep.pass("agreement", "step-function-iff-min-height");
  }
  return rep;
}

VerificationReport integrality_sweep(const LatticeConfig& cfg, std::int64_t height_cap, std::int64_t D,
                                     const std::vector<Vec>& extra) {
  VerificationReport rep("integrality");
  std::vector<Vec> us;
  for (std::int64_t h = 1; h <= height_cap; ++h)
    for (const auto& v : interior_points_at_height(cfg, h)) us.push_back(negate(v));
  for (const auto& u : extra)
    if (std::find(us.begin(), us.end(), u) == us.end()) us.push_back(u);
  for (const auto& u : us) {
    const std::string id = "u=" + vec_str(u) + ":D=" + std::to_string(D);
    if (!in_m_beta(cfg, u)) {
      rep.fail(id, "parameter-in-range", "u is not in M_beta");
      continue;
    }
    SparseSeries s = expand_series(cfg, u, D);
    bool ok = true;
    for (const auto& [e, c] : s.terms) {
      if (c.get_den() != 1) {
        rep.fail(id, "integral-coefficients", "l=" + vec_str(index_of(e, cfg.M())) + " c=" + c.get_str());
        ok = false;
        break;
      }
    }
    if (ok) rep.pass(id, "integral-coefficients", "terms=" + std::to_string(s.terms.size()));
  }
  return rep;
}

RatioFamily random_family(std::mt19937_64& rng, std::size_t r_max, std::size_t jk_max, std::int64_t coeff_max) {
  auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  while (true) {
    const std::size_t r = static_cast<std::size_t>(uni(1, static_cast<std::int64_t>(r_max)));
    const std::size_t J = static_cast<std::size_t>(uni(1, static_cast<std::int64_t>(jk_max)));
    const std::size_t K = static_cast<std::size_t>(uni(1, static_cast<std::int64_t>(jk_max)));
    Mat C(J, Vec(r)), D(K, Vec(r, 0));
    for (auto& row : C)
      for (auto& c : row) c = uni(0, coeff_max);
    bool ok = true;
    for (std::size_t s = 0; s < r && ok; ++s) {
      std::int64_t total = 0;
      for (const auto& row : C) total += row[s];
      for (std::int64_t u = 0; u < total; ++u) D[static_cast<std::size_t>(uni(0, static_cast<std::int64_t>(K) - 1))][s] += 1;
      for (const auto& row : D)
        if (row[s] > coeff_max) ok = false;
    }
    if (!ok) continue;
    try {
      return RatioFamily(C, D);
    } catch (const InputError&) {
      continue;
    }
  }
}

}  // namespace hypint
