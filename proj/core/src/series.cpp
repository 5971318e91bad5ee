#include "hypint/series.hpp"

#include <algorithm>
#include <sstream>

#include "hypint/intlinalg.hpp"
#include "hypint/polytope.hpp"

namespace hypint {

Vec exponent_of(const Vec& l, std::size_t M) {
  Vec e(l.size());
  for (std::size_t j = 0; j < l.size(); ++j) e[j] = j < M ? -l[j] - 1 : l[j];
  return e;
}

Vec index_of(const Vec& e, std::size_t M) {
  Vec l(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) l[j] = j < M ? -e[j] - 1 : e[j];
  return l;
}

std::int64_t negative_degree(const Vec& l, std::size_t M) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < M && j < l.size(); ++j) s += l[j];
  return s;
}

namespace {

Int factorial(std::int64_t k) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

std::string vec_str(const Vec& v) { return "(" + join(v) + ")"; }

// l = x0 + sum_i t_i K_i over the face columns; all other coordinates vanish.
struct SolutionSpace {
  std::vector<std::size_t> cols;
  std::optional<BigVec> x0;
  BigMat K;
};

SolutionSpace solution_space(const LatticeConfig& cfg, const Vec& u) {
  if (u.size() != cfg.n()) throw DomainError("parameter has dimension " + std::to_string(u.size()) +
                                             ", expected " + std::to_string(cfg.n()));
  SolutionSpace sp;
  for (std::size_t j = 0; j < cfg.N(); ++j)
    if (cfg.on_face(j)) sp.cols.push_back(j);
  const std::size_t m = sp.cols.size();
  BigMat S(cfg.n(), BigVec(m));
  for (std::size_t i = 0; i < cfg.n(); ++i)
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t j = sp.cols[c];
      const long s = j < cfg.M() ? -1 : 1;
      S[i][c] = s * cfg.point(j)[i];
    }
  BigVec rhs = to_big(add(u, cfg.beta()));
  sp.x0 = solve_integer(S, m, rhs);
  if (sp.x0) sp.K = integer_kernel(S, m);
  return sp;
}

// Polyhedron in t with l(t) >= 0 and the optional window.
Polyhedron solution_polyhedron(const SolutionSpace& sp, const IndexBounds& b) {
  const std::size_t k = sp.K.size();
  Polyhedron P(k);
  for (std::size_t c = 0; c < sp.cols.size(); ++c) {
    const std::size_t j = sp.cols[c];
    BigVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = sp.K[i][c];
    Int lo = 0;
    if (b.lower && (*b.lower)[j] > 0) lo = static_cast<long>((*b.lower)[j]);
    P.add(row, (*sp.x0)[c] - lo);
    if (b.upper) {
      BigVec neg(k);
      for (std::size_t i = 0; i < k; ++i) neg[i] = -row[i];
      P.add(std::move(neg), Int(static_cast<long>((*b.upper)[j])) - (*sp.x0)[c]);
    }
  }
  return P;
}

Vec assemble(const SolutionSpace& sp, const Vec& t, std::size_t N) {
  Vec l(N, 0);
  for (std::size_t c = 0; c < sp.cols.size(); ++c) {
    Int v = (*sp.x0)[c];
    for (std::size_t i = 0; i < t.size(); ++i) v += sp.K[i][c] * static_cast<long>(t[i]);
    if (!v.fits_slong_p()) throw DomainError("solution entry exceeds 64 bits");
    l[sp.cols[c]] = v.get_si();
  }
  return l;
}

bool all_nonnegative(const Vec& l) {
  return std::all_of(l.begin(), l.end(), [](std::int64_t x) { return x >= 0; });
}

}  // namespace

Rat series_coefficient(const Vec& l, std::size_t M) {
  Int num = 1, den = 1;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (l[j] < 0) throw DomainError("negative index in series coefficient");
    if (j < M) num *= factorial(l[j]);
    else den *= factorial(l[j]);
  }
  Rat r(num, den);
  r.canonicalize();
  if (negative_degree(l, M) % 2 != 0) r = -r;
  return r;
}

Rat SparseSeries::at(const Vec& exponent) const {
  auto it = terms.find(exponent);
  return it == terms.end() ? Rat(0) : it->second;
}

std::vector<Vec> enumerate_solutions(const LatticeConfig& cfg, const Vec& u, std::int64_t D,
                                     const IndexBounds& bounds) {
  std::vector<Vec> out;
  if (D < 0) return out;
  const SolutionSpace sp = solution_space(cfg, u);
  if (!sp.x0) return out;
  const std::size_t N = cfg.N(), M = cfg.M();
  if (bounds.lower && bounds.lower->size() != N) throw DomainError("lower bound has wrong length");
  if (bounds.upper && bounds.upper->size() != N) throw DomainError("upper bound has wrong length");
  auto within = [&](const Vec& l) {
    if (!all_nonnegative(l) || negative_degree(l, M) > D) return false;
    for (std::size_t j = 0; j < N; ++j) {
      if (bounds.lower && l[j] < (*bounds.lower)[j]) return false;
      if (bounds.upper && l[j] > (*bounds.upper)[j]) return false;
    }
    return true;
  };
  if (sp.K.empty()) {
    Vec l = assemble(sp, {}, N);
    if (within(l)) out.push_back(l);
    return out;
  }
  Polyhedron P = solution_polyhedron(sp, bounds);
  const std::size_t k = sp.K.size();
  BigVec deg(k, 0);
  Int deg0 = D;
  for (std::size_t c = 0; c < sp.cols.size(); ++c) {
    if (sp.cols[c] >= M) continue;
    for (std::size_t i = 0; i < k; ++i) deg[i] -= sp.K[i][c];
    deg0 -= (*sp.x0)[c];
  }
  P.add(std::move(deg), deg0);
  P.for_each_integer_point([&](const Vec& t) {
    Vec l = assemble(sp, t, N);
    if (within(l)) out.push_back(std::move(l));
  });
  std::sort(out.begin(), out.end());
  return out;
}

SparseSeries expand_series(const LatticeConfig& cfg, const Vec& u, std::int64_t D) {
  SparseSeries s;
  s.N = cfg.N();
  s.M = cfg.M();
  s.u = u;
  s.frontier = D;
  for (const auto& l : enumerate_solutions(cfg, u, D)) {
    Vec e = exponent_of(l, s.M);
    auto [it, inserted] = s.terms.emplace(std::move(e), series_coefficient(l, s.M));
    if (!inserted) throw DomainError("two index vectors share a monomial");
  }
  return s;
}

Expansion expand_Fu(const LatticeConfig& cfg, const Vec& u, std::int64_t D) {
  Expansion ex;
  if (!za_member(cfg, u)) {
    ex.series.N = cfg.N();
    ex.series.M = cfg.M();
    ex.series.u = u;
    ex.series.frontier = D;
    ex.diagnostic = "parameter " + vec_str(u) + " is not in the group generated by the points";
    return ex;
  }
  if (!interior_contains(cfg.beta_face().cone, negate(u))) {
    ex.series.N = cfg.N();
    ex.series.M = cfg.M();
    ex.series.u = u;
    ex.series.frontier = D;
    ex.diagnostic = "parameter " + vec_str(u) + " is not in the negative relative interior of the face of beta";
    return ex;
  }
  ex.series = expand_series(cfg, u, D);
  return ex;
}

SparseSeries differentiate(const LatticeConfig& cfg, const SparseSeries& s, std::size_t k) {
  if (k >= s.N) throw DomainError("derivative index out of range");
  SparseSeries d;
  d.N = s.N;
  d.M = s.M;
  d.u = sub(s.u, cfg.point(k));
  d.frontier = s.frontier + (k < s.M ? 1 : 0);
  for (const auto& [e, c] : s.terms) {
    if (e[k] == 0) continue;
    Vec f = e;
    f[k] -= 1;
    Rat v = c * Rat(static_cast<long>(e[k]));
    d.terms.emplace(std::move(f), std::move(v));
  }
  return d;
}

std::vector<LatticeRelation> relation_basis(const LatticeConfig& cfg) {
  BigMat A(cfg.n(), BigVec(cfg.N()));
  for (std::size_t i = 0; i < cfg.n(); ++i)
    for (std::size_t j = 0; j < cfg.N(); ++j) A[i][j] = static_cast<long>(cfg.point(j)[i]);
  std::vector<LatticeRelation> out;
  for (const auto& k : integer_kernel(A, cfg.N())) out.push_back({to_small(k)});
  return out;
}

BoxOperator make_box(const LatticeConfig& cfg, const LatticeRelation& l) {
  if (l.l.size() != cfg.N()) throw DomainError("relation has wrong length");
  Vec s(cfg.n(), 0);
  for (std::size_t j = 0; j < cfg.N(); ++j) s = add(s, scale(cfg.point(j), l.l[j]));
  if (std::any_of(s.begin(), s.end(), [](std::int64_t x) { return x != 0; }))
    throw DomainError("vector " + vec_str(l.l) + " is not a relation among the points");
  BoxOperator op{l, Vec(cfg.N(), 0), Vec(cfg.N(), 0)};
  for (std::size_t j = 0; j < cfg.N(); ++j) {
    if (l.l[j] > 0) op.positive[j] = l.l[j];
    if (l.l[j] < 0) op.negative[j] = -l.l[j];
  }
  return op;
}

namespace {

SparseSeries iterate(const LatticeConfig& cfg, SparseSeries s, const Vec& powers) {
  for (std::size_t k = 0; k < powers.size(); ++k)
    for (std::int64_t r = 0; r < powers[k]; ++r) s = differentiate(cfg, s, k);
  return s;
}

bool complete_at(const Vec& e, std::size_t M, std::int64_t frontier) {
  return negative_degree(index_of(e, M), M) <= frontier;
}

}  // namespace

SparseSeries apply_box(const LatticeConfig& cfg, const BoxOperator& op, const SparseSeries& s) {
  SparseSeries a = iterate(cfg, s, op.positive);
  SparseSeries b = iterate(cfg, s, op.negative);
  SparseSeries d;
  d.N = s.N;
  d.M = s.M;
  d.u = a.u;
  d.frontier = std::min(a.frontier, b.frontier);
  for (const auto& [e, c] : a.terms)
    if (complete_at(e, s.M, d.frontier)) d.terms[e] += c;
  for (const auto& [e, c] : b.terms)
    if (complete_at(e, s.M, d.frontier)) d.terms[e] -= c;
  for (auto it = d.terms.begin(); it != d.terms.end();) {
    if (it->second == 0) it = d.terms.erase(it);
    else ++it;
  }
  return d;
}

VerificationReport contiguity(const LatticeConfig& cfg, const Vec& u, std::size_t k, std::int64_t D) {
  VerificationReport rep("contiguity");
  const std::string id = "u=" + vec_str(u) + ":k=" + std::to_string(k + 1) + ":D=" + std::to_string(D);
  if (k >= cfg.N()) throw DomainError("derivative index out of range");
  SparseSeries lhs = differentiate(cfg, expand_series(cfg, u, D), k);
  if (!cfg.on_face(k)) {
    if (lhs.empty()) rep.pass(id, "derivative-vanishes-off-face");
    else rep.fail(id, "derivative-vanishes-off-face", "nonzero term at e=" + vec_str(lhs.terms.begin()->first));
    return rep;
  }
  SparseSeries rhs = expand_series(cfg, lhs.u, lhs.frontier);
  std::map<Vec, std::pair<Rat, Rat>> both;
  for (const auto& [e, c] : lhs.terms)
    if (complete_at(e, cfg.M(), lhs.frontier)) both[e].first = c;
  for (const auto& [e, c] : rhs.terms)
    if (complete_at(e, cfg.M(), lhs.frontier)) both[e].second = c;
  // Both sides are complete up to the frontier, so two empty sides agree
  // there; only an empty region leaves nothing to compare.
  if (lhs.frontier < 0) {
    rep.inconclusive(id, "contiguity", "common truncation is empty");
    return rep;
  }
  if (both.empty()) {
    rep.pass(id, "contiguity", "both sides vanish up to negative degree " + std::to_string(lhs.frontier));
    return rep;
  }
  for (const auto& [e, pr] : both) {
    if (pr.first != pr.second) {
      rep.fail(id, "contiguity",
               "e=" + vec_str(e) + " derivative=" + pr.first.get_str() + " shifted=" + pr.second.get_str());
      return rep;
    }
  }
  rep.pass(id, "contiguity", "compared=" + std::to_string(both.size()));
  return rep;
}

VerificationReport box_annihilates(const LatticeConfig& cfg, const Vec& u, const LatticeRelation& l, std::int64_t D) {
  VerificationReport rep("box");
  BoxOperator op = make_box(cfg, l);
  const std::string id = "u=" + vec_str(u) + ":l=" + vec_str(l.l) + ":D=" + std::to_string(D);
  SparseSeries s = expand_series(cfg, u, D);
  SparseSeries d = apply_box(cfg, op, s);
  if (!d.empty()) {
    const auto& [e, c] = *d.terms.begin();
    rep.fail(id, "box-annihilation", "e=" + vec_str(e) + " residual=" + c.get_str());
    return rep;
  }
  // Count the coefficients that entered the comparison.
  SparseSeries a = iterate(cfg, s, op.positive);
  std::size_t compared = 0;
  for (const auto& [e, c] : a.terms) compared += complete_at(e, cfg.M(), d.frontier);
  rep.pass(id, "box-annihilation", "frontier=" + std::to_string(d.frontier) + " compared=" + std::to_string(compared));
  return rep;
}

VerificationReport euler_check(const LatticeConfig& cfg, const Vec& u, std::size_t i, std::int64_t D) {
  VerificationReport rep("euler");
  if (i >= cfg.n()) throw DomainError("Euler row index out of range");
  const std::string id = "u=" + vec_str(u) + ":i=" + std::to_string(i + 1) + ":D=" + std::to_string(D);
  SparseSeries s = expand_series(cfg, u, D);
  for (const auto& [e, c] : s.terms) {
    std::int64_t w = 0;
    for (std::size_t j = 0; j < cfg.N(); ++j) w += cfg.point(j)[i] * e[j];
    if (w != u[i]) {
      rep.fail(id, "euler-annihilation", "e=" + vec_str(e) + " eigenvalue=" + std::to_string(w));
      return rep;
    }
  }
  rep.pass(id, "euler-annihilation", "terms=" + std::to_string(s.terms.size()));
  return rep;
}

NonzeroAnswer is_nonzero(const LatticeConfig& cfg, const Vec& u, std::int64_t search_cap) {
  NonzeroAnswer ans;
  const SolutionSpace sp = solution_space(cfg, u);
  if (!sp.x0) {
    ans.answer = Tri::No;
    ans.reason = "no integer solution";
    return ans;
  }
  const std::size_t N = cfg.N(), k = sp.K.size(), m = sp.cols.size();
  if (k == 0) {
    Vec l = assemble(sp, {}, N);
    ans.answer = all_nonnegative(l) ? Tri::Yes : Tri::No;
    if (ans.answer == Tri::Yes) ans.witness = l;
    ans.reason = "unique integer solution";
    return ans;
  }
  auto kernel_row = [&](std::size_t c) {
    BigVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = sp.K[i][c];
    return row;
  };
  {
    Polyhedron pos(k);
    for (std::size_t c = 0; c < m; ++c) pos.add(kernel_row(c), -1);
    if (auto t = pos.some_point()) {
      Int den = 1;
      for (const auto& x : *t) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      BigVec g(m, 0);
      for (std::size_t c = 0; c < m; ++c) {
        Rat s = 0;
        for (std::size_t i = 0; i < k; ++i) s += (*t)[i] * sp.K[i][c];
        g[c] = Rat(s * den).get_num();
      }
      Int lambda = 0;
      for (std::size_t c = 0; c < m; ++c) {
        if ((*sp.x0)[c] >= 0) continue;
        Int need;
        Int negx = -(*sp.x0)[c];
        mpz_cdiv_q(need.get_mpz_t(), negx.get_mpz_t(), g[c].get_mpz_t());
        if (need > lambda) lambda = need;
      }
      Vec l(N, 0);
      for (std::size_t c = 0; c < m; ++c) {
        Int v = (*sp.x0)[c] + lambda * g[c];
        l[sp.cols[c]] = v.get_si();
      }
      ans.answer = Tri::Yes;
      ans.witness = l;
      ans.reason = "strictly positive relation";
      return ans;
    }
  }
  Polyhedron P = solution_polyhedron(sp, {});
  if (!P.feasible()) {
    ans.answer = Tri::No;
    ans.reason = "no nonnegative real solution";
    return ans;
  }
  {
    Polyhedron rec(k);
    BigVec total(k, 0);
    for (std::size_t c = 0; c < m; ++c) {
      BigVec row = kernel_row(c);
      for (std::size_t i = 0; i < k; ++i) total[i] += row[i];
      rec.add(std::move(row), 0);
    }
    rec.add(std::move(total), -1);
    if (!rec.feasible()) {
      auto t = P.first_integer_point();
      ans.answer = t ? Tri::Yes : Tri::No;
      if (t) ans.witness = assemble(sp, *t, N);
      ans.reason = "bounded solution set";
      return ans;
    }
  }
  auto sols = enumerate_solutions(cfg, u, search_cap);
  if (!sols.empty()) {
    ans.answer = Tri::Yes;
    ans.witness = sols.front();
    ans.reason = "found within search cap";
  } else {
    ans.answer = Tri::Unknown;
    ans.reason = "unbounded solution set, none of negative degree <= " + std::to_string(search_cap);
  }
  return ans;
}

}  // namespace hypint
