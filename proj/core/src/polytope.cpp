#include "hypint/polytope.hpp"

#include <map>

namespace hypint {
namespace {

using History = std::vector<std::uint64_t>;

struct Row {
  BigVec a;
  Int b;
  History hist;
};

std::size_t popcount(const History& h) {
  std::size_t c = 0;
  for (auto w : h) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

History merge(const History& x, const History& y) {
  History r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] | y[i];
  return r;
}

void normalize(BigVec& a, Int& b) {
  Int g = b;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  g = abs(g);
  if (g <= 1) return;
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
}

bool is_zero(const BigVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

// Deduplicates rows with equal normal vector, keeping the tightest constant.
// Returns false if a constant row is violated.
bool insert_row(std::map<BigVec, Row>& out, Row r) {
  normalize(r.a, r.b);
  if (is_zero(r.a)) return r.b >= 0;
  auto it = out.find(r.a);
  if (it == out.end()) {
    BigVec key = r.a;
    out.emplace(std::move(key), std::move(r));
  } else if (r.b < it->second.b) {
    it->second = std::move(r);
  }
  return true;
}

__int128 floor_div128(__int128 n, __int128 d) {
  __int128 q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

__int128 ceil_div128(__int128 n, __int128 d) { return -floor_div128(-n, d); }

}  // namespace

Polyhedron::Polyhedron(std::size_t dim) : dim_(dim) {}

void Polyhedron::add(BigVec a, Int b) {
  if (a.size() != dim_) throw DomainError("Polyhedron::add: dimension mismatch");
  rows_.push_back({std::move(a), std::move(b)});
}

void Polyhedron::add(const Vec& a, std::int64_t b) { add(to_big(a), Int(static_cast<long>(b))); }

void Polyhedron::add_equality(const BigVec& a, const Int& b) {
  add(a, b);
  BigVec na(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) na[i] = -a[i];
  add(std::move(na), -b);
}

Polyhedron::Projected Polyhedron::project() const {
  Projected p;
  p.level.assign(dim_ + 1, {});
  const std::size_t words = (rows_.size() + 63) / 64 + 1;
  std::map<BigVec, Row> current;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Row r{rows_[i].a, rows_[i].b, History(words, 0)};
    r.hist[i / 64] |= std::uint64_t{1} << (i % 64);
    if (!insert_row(current, std::move(r))) {
      p.empty = true;
      return p;
    }
  }
  for (std::size_t k = dim_; k >= 1; --k) {
    const std::size_t var = k - 1;
    const std::size_t eliminated = dim_ - var;  // after this step
    std::vector<const Row*> pos, neg;
    std::map<BigVec, Row> next;
    for (const auto& [key, r] : current) {
      const int s = sgn(r.a[var]);
      if (s > 0) pos.push_back(&r);
      else if (s < 0) neg.push_back(&r);
      else next.emplace(key, r);
    }
    for (const Row* r : pos) p.level[k].push_back({r->a, r->b});
    for (const Row* r : neg) p.level[k].push_back({r->a, r->b});
    for (const Row* P : pos) {
      for (const Row* N : neg) {
        History h = merge(P->hist, N->hist);
        if (popcount(h) > eliminated + 1) continue;  // Chernikov/Kohler redundancy rule
        Int cp = P->a[var], cn = -N->a[var];
        Row r;
        r.a.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i) r.a[i] = cn * P->a[i] + cp * N->a[i];
        r.b = cn * P->b + cp * N->b;
        r.hist = std::move(h);
        if (!insert_row(next, std::move(r))) {
          p.empty = true;
          return p;
        }
      }
    }
    current = std::move(next);
  }
  return p;
}

bool Polyhedron::feasible() const { return !project().empty; }

std::optional<RatVec> Polyhedron::some_point() const {
  const Projected p = project();
  if (p.empty) return std::nullopt;
  RatVec x(dim_, 0);
  for (std::size_t k = 0; k < dim_; ++k) {
    std::optional<Rat> lo, hi;
    for (const auto& row : p.level[k + 1]) {
      Rat rest = row.b;
      for (std::size_t i = 0; i < k; ++i) rest += row.a[i] * x[i];
      Rat bound = -rest / Rat(row.a[k]);
      if (row.a[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      if (*lo > *hi) return std::nullopt;  // cannot happen for an exact projection
      x[k] = (*lo + *hi) / 2;
    } else if (lo) {
      x[k] = *lo;
    } else if (hi) {
      x[k] = *hi;
    }
  }
  return x;
}

void Polyhedron::for_each_integer_point(const std::function<void(const Vec&)>& visit) const {
  for_each_integer_point_while([&](const Vec& x) {
    visit(x);
    return true;
  });
}

std::optional<Vec> Polyhedron::first_integer_point() const {
  std::optional<Vec> out;
  for_each_integer_point_while([&](const Vec& x) {
    out = x;
    return false;
  });
  return out;
}

bool Polyhedron::for_each_integer_point_while(const std::function<bool(const Vec&)>& visit) const {
  const Projected p = project();
  if (p.empty) return true;
  struct SmallRow {
    Vec a;
    std::int64_t b;
  };
  std::vector<std::vector<SmallRow>> lv(dim_ + 1);
  for (std::size_t k = 1; k <= dim_; ++k)
    for (const auto& r : p.level[k]) {
      if (!r.b.fits_slong_p()) throw DomainError("polyhedron constant exceeds 64 bits");
      lv[k].push_back({to_small(r.a), r.b.get_si()});
    }
  Vec x(dim_, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == dim_) return visit(x);
    bool has_lo = false, has_hi = false;
    __int128 lo = 0, hi = 0;
    for (const auto& row : lv[k + 1]) {
      __int128 rest = row.b;
      for (std::size_t i = 0; i < k; ++i) rest += static_cast<__int128>(row.a[i]) * x[i];
      const __int128 c = row.a[k];
      if (c > 0) {
        const __int128 l = ceil_div128(-rest, c);
        if (!has_lo || l > lo) lo = l, has_lo = true;
      } else {
        const __int128 h = floor_div128(rest, -c);
        if (!has_hi || h < hi) hi = h, has_hi = true;
      }
    }
    if (!has_lo || !has_hi) throw DomainError("integer enumeration over an unbounded polyhedron");
    if (lo > hi) return true;
    if (lo < INT64_MIN || hi > INT64_MAX) throw DomainError("enumeration bound exceeds 64 bits");
    for (auto v = static_cast<std::int64_t>(lo), top = static_cast<std::int64_t>(hi); v <= top; ++v) {
      x[k] = v;
      if (!rec(k + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

std::vector<Vec> Polyhedron::integer_points() const {
  std::vector<Vec> out;
  for_each_integer_point([&](const Vec& x) { out.push_back(x); });
  return out;
}

}  // namespace hypint
