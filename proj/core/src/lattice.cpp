#include "hypint/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hypint/intlinalg.hpp"
#include "hypint/polytope.hpp"

namespace hypint {

LatticeConfig::LatticeConfig(Mat points, const std::vector<std::size_t>& aprime, std::optional<Vec> height) {
  if (points.empty()) throw InputError("configuration has no points");
  n_ = points.front().size();
  if (n_ == 0) throw InputError("configuration points have dimension 0");
  for (const auto& a : points)
    if (a.size() != n_) throw InputError("configuration points have inconsistent dimensions");
  {
    std::set<Vec> seen(points.begin(), points.end());
    if (seen.size() != points.size()) throw InputError("configuration points are not distinct");
  }
  if (aprime.empty()) throw InputError("aprime must be nonempty");
  std::vector<bool> used(points.size(), false);
  for (auto i : aprime) {
    if (i >= points.size()) throw InputError("aprime index out of range");
    if (used[i]) throw InputError("aprime index repeated");
    used[i] = true;
    perm_.push_back(i);
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!used[i]) perm_.push_back(i);
  M_ = aprime.size();
  for (auto i : perm_) points_.push_back(points[i]);

  if (height) {
    if (height->size() != n_) throw InputError("height covector has wrong dimension");
    height_ = *height;
  } else {
    Vec last(n_, 0);
    last.back() = 1;
    bool ok = true;
    for (const auto& a : points_)
      if (dot(last, a) != 1) ok = false;
    if (ok) {
      height_ = last;
    } else {
      auto c = solve_integer(to_big(points_), n_, BigVec(points_.size(), 1));
      if (!c) throw InputError("points: no integer covector c with c . a_j = 1 for all points");
      height_ = to_small(*c);
    }
  }
  for (const auto& a : points_)
    if (dot(height_, a) != 1) throw InputError("points: (" + join(a) + ") is not at height 1");

  beta_.assign(n_, 0);
  for (std::size_t j = 0; j < M_; ++j) beta_ = add(beta_, points_[j]);

  za_.basis = lattice_basis(to_big(points_), n_);
  za_.rank = za_.basis.size();
  cone_ = make_cone(points_, n_);
  face_ = face_of(cone_, beta_);
  on_face_.assign(points_.size(), false);
  for (auto j : face_.generator_indices) on_face_[j] = true;
  face_lattice_ = lattice_in_span(za_.basis, face_.cone);
  beta_interior_ = interior_contains(cone_, beta_);
}

std::string LatticeConfig::describe() const {
  std::ostringstream os;
  os << "n=" << n_ << " N=" << N() << " M=" << M_ << " beta=(" << join(beta_) << ") height=(" << join(height_) << ")";
  return os.str();
}

bool za_member(const LatticeConfig& cfg, const Vec& v) {
  if (v.size() != cfg.n()) throw DomainError("vector has dimension " + std::to_string(v.size()) + ", expected " +
                                             std::to_string(cfg.n()));
  return lattice_coordinates(cfg.za().basis, to_big(v)).has_value();
}

const Cone& cone_facets(const LatticeConfig& cfg) { return cfg.cone(); }

bool aprime_minimal(const LatticeConfig& cfg) {
  const std::size_t M = cfg.M();
  if (M > 20) throw DomainError("minimality check is capped at |A'| <= 20");
  const Cone& face = cfg.beta_face().cone;
  const std::uint32_t full = (std::uint32_t{1} << M) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Vec s(cfg.n(), 0);
    for (std::size_t j = 0; j < M; ++j)
      if (mask >> j & 1) s = add(s, cfg.point(j));
    if (interior_contains(face, s)) return false;
  }
  return true;
}

Normalized hyperplane_normalize(const LatticeConfig& cfg) {
  const std::size_t n = cfg.n();
  BigMat T(n, BigVec(n, 0));
  Vec last(n, 0);
  last.back() = 1;
  if (cfg.height() == last) {
    for (std::size_t i = 0; i < n; ++i) T[i][i] = 1;
  } else {
    // U c = e_1 with U unimodular, so c is the first row of (U^T)^{-1}.
    BigMat col(n, BigVec(1));
    for (std::size_t i = 0; i < n; ++i) col[i][0] = cfg.height()[i];
    Echelon e = hermite(col, 1);
    if (e.rank != 1 || e.H[0][0] != 1) throw DomainError("height covector is not primitive");
    BigMat V = inverse_unimodular(transpose(e.U, n));
    for (std::size_t i = 1; i < n; ++i) T[i - 1] = V[i];
    T[n - 1] = V[0];
  }
  Mat pts;
  for (const auto& a : cfg.points()) {
    Vec t(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Int s = 0;
      for (std::size_t k = 0; k < n; ++k) s += T[i][k] * a[k];
      if (!s.fits_slong_p()) throw DomainError("normalized coordinate exceeds 64 bits");
      t[i] = s.get_si();
    }
    pts.push_back(std::move(t));
  }
  std::vector<std::size_t> ap(cfg.M());
  for (std::size_t j = 0; j < cfg.M(); ++j) ap[j] = j;
  return Normalized{LatticeConfig(std::move(pts), ap, last), std::move(T)};
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

SemigroupAnswer semigroup_member(const LatticeConfig& cfg, const Vec& v, std::int64_t degree_cap) {
  if (degree_cap < 0) throw DomainError("degree cap must be nonnegative");
  if (v.size() != cfg.n()) throw DomainError("vector has wrong dimension");
  const std::int64_t h = cfg.height_of(v);
  if (h < 0) return {Tri::No, std::nullopt};
  if (h > degree_cap) return {Tri::Unknown, std::nullopt};
  const std::size_t N = cfg.N();
  Polyhedron P(N);
  for (std::size_t j = 0; j < N; ++j) {
    BigVec e(N, 0);
    e[j] = 1;
    P.add(std::move(e), 0);
  }
  for (std::size_t i = 0; i < cfg.n(); ++i) {
    BigVec row(N);
    for (std::size_t j = 0; j < N; ++j) row[j] = static_cast<long>(cfg.point(j)[i]);
    P.add_equality(row, Int(static_cast<long>(-v[i])));
  }
  auto w = P.first_integer_point();
  if (!w) return {Tri::No, std::nullopt};
  return {Tri::Yes, w};
}

std::vector<Vec> interior_points_at_height(const LatticeConfig& cfg, std::int64_t h) {
  const BigMat& F = cfg.face_lattice();
  const Cone& face = cfg.beta_face().cone;
  const std::size_t k = F.size();
  std::vector<Vec> out;
  if (k == 0 || h <= 0) return out;
  Polyhedron P(k);
  auto image = [&](const BigVec& functional) {
    BigVec r(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < cfg.n(); ++t) r[i] += F[i][t] * functional[t];
    return r;
  };
  for (const auto& f : face.facets) P.add(image(f), -1);
  P.add_equality(image(to_big(cfg.height())), Int(static_cast<long>(-h)));
  P.for_each_integer_point([&](const Vec& z) {
    Vec v(cfg.n(), 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < cfg.n(); ++t) {
        Int s = F[i][t] * z[i];
        v[t] += s.get_si();
      }
    if (interior_contains(face, v)) out.push_back(std::move(v));
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool in_m_beta(const LatticeConfig& cfg, const Vec& u) {
  return za_member(cfg, u) && interior_contains(cfg.beta_face().cone, negate(u));
}

}  // namespace hypint
