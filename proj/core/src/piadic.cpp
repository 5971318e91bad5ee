#include "hypint/piadic.hpp"

#include <algorithm>

namespace hypint {
namespace {

// Precision of values that are exact (zero from an integer, say).
constexpr std::int64_t kExact = std::int64_t{1} << 40;

Int mod_pE(const Int& x, const PiRing& r) {
  Int out;
  mpz_fdiv_r(out.get_mpz_t(), x.get_mpz_t(), r.pE.get_mpz_t());
  return out;
}

std::int64_t p_valuation(const Int& x, std::int64_t p, std::int64_t cap) {
  if (x == 0) return cap;
  Int rest;
  Int pp = static_cast<long>(p);
  return std::min<std::int64_t>(cap, static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t())));
}

// Multiplies a mantissa by pi, using pi^{p-1} = -p.
void times_pi(std::vector<Int>& c, const PiRing& r) {
  const std::size_t d = c.size();
  Int top = c[d - 1];
  for (std::size_t i = d - 1; i > 0; --i) c[i] = c[i - 1];
  c[0] = mod_pE(-top * static_cast<long>(r.p), r);
}

// Divides a mantissa with zero constant term modulo p by pi.
void divide_pi(std::vector<Int>& c, const PiRing& r) {
  const std::size_t d = c.size();
  Int low = c[0];
  Int q;
  mpz_divexact_ui(q.get_mpz_t(), low.get_mpz_t(), static_cast<unsigned long>(r.p));
  for (std::size_t i = 0; i + 1 < d; ++i) c[i] = c[i + 1];
  c[d - 1] = mod_pE(-q, r);
}

void times_pi_power(std::vector<Int>& c, std::int64_t t, const PiRing& r) {
  const std::int64_t d = r.degree();
  const std::int64_t q = t / d;
  if (q > 0) {
    Int scale;
    Int pp = static_cast<long>(r.p);
    mpz_pow_ui(scale.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(q));
    if (q % 2 == 1) scale = -scale;
    for (auto& x : c) x = mod_pE(x * scale, r);
  }
  for (std::int64_t i = 0; i < t % d; ++i) times_pi(c, r);
}

}  // namespace

std::shared_ptr<const PiRing> PiRing::make(std::int64_t p, std::int64_t R) {
  if (p < 2) throw DomainError("prime must be at least 2");
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) throw DomainError(std::to_string(p) + " is not prime");
  if (R < 1) throw DomainError("relative precision must be positive");
  auto r = std::make_shared<PiRing>();
  r->p = p;
  r->R = R;
  r->E = (R + p - 2) / (p - 1) + 2;
  Int pp = static_cast<long>(p);
  mpz_pow_ui(r->pE.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(r->E));
  return r;
}

const char* to_string(Compare c) {
  switch (c) {
    case Compare::Equal: return "equal";
    case Compare::Unequal: return "unequal";
    case Compare::Inconclusive: return "inconclusive";
  }
  return "?";
}

PiAdic::PiAdic(std::shared_ptr<const PiRing> ring, std::vector<Int> mant, std::int64_t shift, std::int64_t abs)
    : ring_(std::move(ring)), mant_(std::move(mant)), shift_(shift), abs_(abs) {
  normalize();
}

void PiAdic::cap() {
  if (!mant_.empty()) abs_ = std::min(abs_, shift_ + ring_->R);
  abs_ = std::min(abs_, kExact);
}

void PiAdic::normalize() {
  const PiRing& r = *ring_;
  const std::int64_t d = r.degree();
  if (!mant_.empty()) {
    mant_.resize(static_cast<std::size_t>(d));
    for (auto& x : mant_) x = mod_pE(x, r);
    std::int64_t o = kExact;
    for (std::int64_t i = 0; i < d; ++i) {
      const Int& x = mant_[static_cast<std::size_t>(i)];
      if (x != 0) o = std::min(o, i + d * p_valuation(x, r.p, r.E));
    }
    if (o >= d * r.E || shift_ + o >= abs_) {
      mant_.clear();
    } else {
      for (std::int64_t i = 0; i < o; ++i) divide_pi(mant_, r);
      shift_ += o;
    }
  }
  if (mant_.empty()) shift_ = abs_;
  cap();
  if (mant_.empty()) shift_ = abs_;
}

PiAdic PiAdic::zero(std::shared_ptr<const PiRing> ring, std::int64_t abs) {
  return PiAdic(std::move(ring), {}, abs, abs);
}

PiAdic PiAdic::from_int(std::shared_ptr<const PiRing> ring, const Int& n) {
  if (n == 0) return zero(std::move(ring), kExact);
  const std::int64_t p = ring->p;
  Int unit;
  Int pp = static_cast<long>(p);
  const auto v = static_cast<std::int64_t>(mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
  if (v % 2 == 1) unit = -unit;  // p^v = (-1)^v pi^{(p-1)v}
  const std::int64_t shift = (p - 1) * v;
  std::vector<Int> mant(static_cast<std::size_t>(p - 1), 0);
  mant[0] = unit;
  return PiAdic(ring, std::move(mant), shift, kExact);
}

PiAdic PiAdic::from_rat(std::shared_ptr<const PiRing> ring, const Rat& q) {
  if (q.get_den() == 1) return from_int(ring, q.get_num());
  return from_int(ring, q.get_num()) * from_int(ring, q.get_den()).inverse();
}

PiAdic PiAdic::pi_power(std::shared_ptr<const PiRing> ring, std::int64_t k) {
  std::vector<Int> mant(static_cast<std::size_t>(ring->p - 1), 0);
  mant[0] = 1;
  return PiAdic(ring, std::move(mant), k, kExact);
}

PiAdic PiAdic::operator+(const PiAdic& o) const {
  const std::int64_t A = std::min(abs_, o.abs_);
  if (is_zero()) return o.truncated(A);
  if (o.is_zero()) return truncated(A);
  const std::int64_t s = std::min(shift_, o.shift_);
  if (A <= s) return zero(ring_, A);
  std::vector<Int> sum(static_cast<std::size_t>(ring_->degree()), 0);
  for (const PiAdic* x : {this, &o}) {
    if (x->shift_ >= A) continue;
    std::vector<Int> m = x->mant_;
    times_pi_power(m, x->shift_ - s, *ring_);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m[i];
  }
  return PiAdic(ring_, std::move(sum), s, A);
}

PiAdic PiAdic::operator-() const {
  PiAdic out = *this;
  for (auto& x : out.mant_) x = mod_pE(-x, *ring_);
  return out;
}

PiAdic PiAdic::operator-(const PiAdic& o) const { return *this + (-o); }

PiAdic PiAdic::operator*(const PiAdic& o) const {
  if (is_zero() || o.is_zero()) {
    const std::int64_t a = std::min(kExact, std::min(abs_ + o.shift_, o.abs_ + shift_));
    return zero(ring_, a);
  }
  const std::size_t d = mant_.size();
  std::vector<Int> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += mant_[i] * o.mant_[j];
  for (std::size_t k = 2 * d - 2; k >= d; --k) prod[k - d] -= prod[k] * static_cast<long>(ring_->p);
  prod.resize(d);
  return PiAdic(ring_, std::move(prod), shift_ + o.shift_, std::min(abs_ + o.shift_, o.abs_ + shift_));
}

PiAdic PiAdic::inverse() const {
  if (is_zero()) throw DomainError("inverse of a value that is zero modulo pi^" + std::to_string(abs_));
  const PiRing& r = *ring_;
  const std::int64_t rel = rel_precision();
  PiAdic u(ring_, mant_, 0, rel);
  Int c0inv;
  Int pp = static_cast<long>(r.p);
  mpz_invert(c0inv.get_mpz_t(), mant_[0].get_mpz_t(), r.pE.get_mpz_t());
  std::vector<Int> start(mant_.size(), 0);
  start[0] = c0inv;
  PiAdic y(ring_, std::move(start), 0, rel);
  const PiAdic two = from_int(ring_, 2);
  for (std::int64_t good = 1; good < rel; good *= 2) y = y * (two - u * y);
  return PiAdic(ring_, y.mant_, -shift_, rel - shift_);
}

PiAdic PiAdic::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  PiAdic result = from_int(ring_, 1), base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

PiAdic PiAdic::truncated(std::int64_t abs) const {
  if (abs >= abs_) return *this;
  if (is_zero() || shift_ >= abs) return zero(ring_, abs);
  PiAdic out = *this;
  out.abs_ = abs;
  return out;
}

Compare PiAdic::compare(const PiAdic& o, std::int64_t K) const { return (*this - o).ord_at_least(K, K); }

Compare PiAdic::ord_at_least(std::int64_t bound, std::int64_t K) const {
  const std::int64_t b = std::min(bound, K);
  if (!is_zero()) return shift_ >= b ? Compare::Equal : Compare::Unequal;
  return abs_ >= b ? Compare::Equal : Compare::Inconclusive;
}

std::string PiAdic::to_string() const {
  const std::string tail = abs_ >= kExact ? "" : " + O(pi^" + std::to_string(abs_) + ")";
  if (is_zero()) return "0" + tail;
  std::string s = "pi^" + std::to_string(shift_) + "*(";
  for (std::size_t i = 0; i < mant_.size(); ++i) {
    if (i) s += " ";
    s += mant_[i].get_str();
  }
  return s + ")" + tail;
}

}  // namespace hypint
