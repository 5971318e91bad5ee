#include "hypint/types.hpp"

#include <sstream>

namespace hypint {

std::int64_t dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (s > INT64_MAX || s < INT64_MIN) throw DomainError("dot: 64-bit overflow");
  return static_cast<std::int64_t>(s);
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, std::int64_t k) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

Vec negate(const Vec& a) { return scale(a, -1); }

BigVec to_big(const Vec& v) {
  BigVec r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

BigMat to_big(const Mat& m) {
  BigMat r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(to_big(row));
  return r;
}

Vec to_small(const BigVec& v) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw DomainError("integer entry exceeds 64 bits: " + x.get_str());
    r.push_back(x.get_si());
  }
  return r;
}

Mat to_small(const BigMat& m) {
  Mat r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(to_small(row));
  return r;
}

BigVec primitive(BigVec v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

std::string join(const Vec& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::string join(const BigVec& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i].get_str();
  }
  return os.str();
}

}  // namespace hypint
