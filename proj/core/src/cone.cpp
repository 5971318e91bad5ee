#include "hypint/cone.hpp"

#include <algorithm>

#include "hypint/intlinalg.hpp"

namespace hypint {
namespace {

Int dot_big(const BigVec& a, const BigVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot_rat(const BigVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigVec primitive_of(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  BigVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat t = v[i] * l;
    r[i] = t.get_num();
  }
  return primitive(std::move(r));
}

// Inverse of a square rational matrix by Gauss-Jordan; the input is known to be invertible.
std::vector<RatVec> inverse(std::vector<RatVec> A) {
  const std::size_t d = A.size();
  std::vector<RatVec> I(d, RatVec(d, 0));
  for (std::size_t i = 0; i < d; ++i) I[i][i] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (A[p][c] == 0) ++p;
    std::swap(A[p], A[c]);
    std::swap(I[p], I[c]);
    Rat inv = 1 / A[c][c];
    for (std::size_t k = 0; k < d; ++k) {
      A[c][k] *= inv;
      I[c][k] *= inv;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rat f = A[r][c];
      for (std::size_t k = 0; k < d; ++k) {
        A[r][k] -= f * A[c][k];
        I[r][k] -= f * I[c][k];
      }
    }
  }
  return I;
}

struct Ray {
  BigVec g;
  std::vector<bool> tight;  // over constraints processed so far
};

// Extreme rays of {g in R^d : y_j . g >= 0 for all j}, where the y_j span R^d.
BigMat dual_extreme_rays(const BigMat& Y, std::size_t d) {
  // Initial simplicial cone from the first d independent constraints, in input order.
  std::vector<std::size_t> basis_rows;
  BigMat chosen;
  for (std::size_t j = 0; j < Y.size() && basis_rows.size() < d; ++j) {
    chosen.push_back(Y[j]);
    if (rank(chosen, d) == chosen.size()) basis_rows.push_back(j);
    else chosen.pop_back();
  }
  std::vector<RatVec> Y0(d);
  for (std::size_t i = 0; i < d; ++i) Y0[i] = RatVec(chosen[i].begin(), chosen[i].end());
  auto inv = inverse(Y0);
  std::vector<std::size_t> order = basis_rows;
  for (std::size_t j = 0; j < Y.size(); ++j)
    if (std::find(basis_rows.begin(), basis_rows.end(), j) == basis_rows.end()) order.push_back(j);

  std::vector<Ray> rays;
  for (std::size_t c = 0; c < d; ++c) {
    RatVec col(d);
    for (std::size_t r = 0; r < d; ++r) col[r] = inv[r][c];
    Ray ray{primitive_of(col), std::vector<bool>(d, true)};
    ray.tight[c] = false;
    rays.push_back(std::move(ray));
  }
  for (std::size_t step = d; step < order.size(); ++step) {
    const BigVec& y = Y[order[step]];
    std::vector<Ray> pos, neg, zero;
    std::vector<Int> val;
    for (auto& r : rays) {
      Int v = dot_big(y, r.g);
      if (v > 0) pos.push_back(r), pos.back().tight.push_back(false);
      else if (v < 0) neg.push_back(r), neg.back().tight.push_back(false);
      else zero.push_back(r), zero.back().tight.push_back(true);
    }
    std::vector<Ray> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    std::vector<const Ray*> all;
    for (const auto& r : pos) all.push_back(&r);
    for (const auto& r : neg) all.push_back(&r);
    for (const auto& r : zero) all.push_back(&r);
    const std::size_t m = step + 1;
    for (const auto& P : pos) {
      for (const auto& N : neg) {
        std::vector<bool> common(m);
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < m; ++i) cnt += (common[i] = P.tight[i] && N.tight[i]);
        if (cnt + 2 < d) continue;
        bool adjacent = true;
        for (const Ray* R : all) {
          if (R == &P || R == &N) continue;
          bool covers = true;
          for (std::size_t i = 0; i < m && covers; ++i)
            if (common[i] && !R->tight[i]) covers = false;
          if (covers) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Int vp = dot_big(y, P.g), vn = dot_big(y, N.g);
        BigVec g(d);
        for (std::size_t i = 0; i < d; ++i) g[i] = vp * N.g[i] - vn * P.g[i];
        Ray nr{primitive(std::move(g)), common};
        nr.tight[m - 1] = true;
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }
  BigMat out;
  for (auto& r : rays) out.push_back(std::move(r.g));
  return out;
}

}  // namespace

Cone make_cone(const Mat& generators, std::size_t n) {
  Cone c;
  c.n = n;
  c.generators = generators;
  for (const auto& g : generators)
    if (g.size() != n) throw DomainError("cone generator has wrong dimension");
  if (generators.empty()) return c;
  c.span_basis = lattice_basis(to_big(generators), n);
  const std::size_t d = c.span_basis.size();
  if (d == 0) return c;
  BigMat Y;
  for (const auto& g : generators) Y.push_back(*lattice_coordinates(c.span_basis, to_big(g)));
  BigMat duals = dual_extreme_rays(Y, d);

  // Map a functional on lattice coordinates to the ambient functional inside the span:
  // h = B^T (B B^T)^{-1} g.
  const BigMat& B = c.span_basis;
  std::vector<RatVec> G(d, RatVec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) G[i][j] = dot_big(B[i], B[j]);
  auto Ginv = inverse(G);
  for (const auto& g : duals) {
    RatVec w(d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) w[i] += Ginv[i][j] * g[j];
    RatVec h(n, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < n; ++k) h[k] += w[i] * B[i][k];
    c.facets.push_back(primitive_of(h));
  }
  std::sort(c.facets.begin(), c.facets.end());
  c.facets.erase(std::unique(c.facets.begin(), c.facets.end()), c.facets.end());
  c.has_lineality = rank(duals, d) < d;
  return c;
}

bool in_span(const Cone& cone, const RatVec& v) {
  if (v.size() != cone.n) throw DomainError("vector has wrong dimension");
  if (cone.span_basis.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  // Clear denominators: membership in a rational span is scale invariant.
  BigVec w = primitive_of(v);
  return rational_coordinates(cone.span_basis, w).has_value();
}

bool cone_contains(const Cone& cone, const Vec& v) {
  RatVec r(v.begin(), v.end());
  if (!in_span(cone, r)) return false;
  for (const auto& h : cone.facets)
    if (dot_rat(h, r) < 0) return false;
  return true;
}

bool interior_contains(const Cone& cone, const RatVec& v) {
  if (cone.generators.empty() || !in_span(cone, v)) return false;
  bool zero = true;
  for (const auto& x : v)
    if (x != 0) zero = false;
  if (zero && !cone.facets.empty()) return false;
  for (const auto& h : cone.facets)
    if (dot_rat(h, v) <= 0) return false;
  return true;
}

bool interior_contains(const Cone& cone, const Vec& v) { return interior_contains(cone, RatVec(v.begin(), v.end())); }

Face face_of(const Cone& cone, const Vec& beta) {
  if (!cone_contains(cone, beta)) throw DomainError("point is not in the cone: (" + join(beta) + ")");
  BigVec b = to_big(beta);
  std::vector<const BigVec*> vanishing;
  for (const auto& h : cone.facets)
    if (dot_big(h, b) == 0) vanishing.push_back(&h);
  Face f;
  Mat gens;
  for (std::size_t j = 0; j < cone.generators.size(); ++j) {
    BigVec a = to_big(cone.generators[j]);
    bool on = true;
    for (const BigVec* h : vanishing)
      if (dot_big(*h, a) != 0) on = false;
    if (on) {
      f.generator_indices.push_back(j);
      gens.push_back(cone.generators[j]);
    }
  }
  f.cone = make_cone(gens, cone.n);
  return f;
}

BigMat lattice_in_span(const BigMat& lattice_basis_rows, const Cone& face) {
  if (lattice_basis_rows.empty()) return {};
  const std::size_t n = face.n;
  const std::size_t d = lattice_basis_rows.size();
  BigMat W = face.generators.empty() ? BigMat{} : integer_kernel(to_big(face.generators), n);
  if (face.generators.empty()) {
    W.clear();
    for (std::size_t i = 0; i < n; ++i) {
      BigVec e(n, 0);
      e[i] = 1;
      W.push_back(e);
    }
  }
  if (W.empty()) return lattice_basis(lattice_basis_rows, n);
  // y in Z^d with W B^T y = 0.
  BigMat WB(W.size(), BigVec(d, 0));
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) WB[i][j] = dot_big(W[i], lattice_basis_rows[j]);
  BigMat Y = integer_kernel(WB, d);
  if (Y.empty()) return {};
  BigMat rows;
  for (const auto& y : Y) {
    BigVec v(n, 0);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < n; ++k) v[k] += y[j] * lattice_basis_rows[j][k];
    rows.push_back(std::move(v));
  }
  return lattice_basis(rows, n);
}

}  // namespace hypint
