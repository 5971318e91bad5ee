#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "hypint/types.hpp"

namespace hypint {

/// Parameters shared by all elements of one truncated ring: the prime p and
/// the relative precision R (in powers of pi) that every value is capped at.
struct PiRing {
  std::int64_t p = 2;
  std::int64_t R = 16;
  std::int64_t E = 0;  // coefficients are stored modulo p^E
  Int pE;

  static std::shared_ptr<const PiRing> make(std::int64_t p, std::int64_t R);
  std::int64_t degree() const { return p - 1; }
};

enum class Compare { Equal, Unequal, Inconclusive };
const char* to_string(Compare c);

/// Element of Z_p[pi] with pi^{p-1} = -p, known modulo pi^abs.
///
/// A nonzero value is pi^shift times a unit mantissa sum_{i<p-1} c_i pi^i,
/// so ord is exact and equals shift. A value that is zero to the known
/// precision has no mantissa and shift == abs. abs - shift never exceeds R.
class PiAdic {
 public:
  PiAdic() = default;
  static PiAdic zero(std::shared_ptr<const PiRing> ring, std::int64_t abs);
  static PiAdic from_int(std::shared_ptr<const PiRing> ring, const Int& n);
  static PiAdic from_rat(std::shared_ptr<const PiRing> ring, const Rat& q);
  /// pi^k for any integer k.
  static PiAdic pi_power(std::shared_ptr<const PiRing> ring, std::int64_t k);

  const std::shared_ptr<const PiRing>& ring() const { return ring_; }
  bool is_zero() const { return mant_.empty(); }
  /// Exact order for nonzero values; the known lower bound (abs) otherwise.
  std::int64_t ord() const { return shift_; }
  std::int64_t abs_precision() const { return abs_; }
  std::int64_t rel_precision() const { return abs_ - shift_; }

  PiAdic operator+(const PiAdic& o) const;
  PiAdic operator-(const PiAdic& o) const;
  PiAdic operator-() const;
  PiAdic operator*(const PiAdic& o) const;
  /// Throws DomainError when the value is zero to the known precision.
  PiAdic inverse() const;
  PiAdic operator/(const PiAdic& o) const { return *this * o.inverse(); }
  PiAdic pow(std::int64_t k) const;
  /// Forgets everything beyond pi^abs.
  PiAdic truncated(std::int64_t abs) const;

  /// Compares modulo pi^K.
  Compare compare(const PiAdic& o, std::int64_t K) const;
  /// ord >= bound modulo pi^K: Equal when certified, Unequal when refuted.
  Compare ord_at_least(std::int64_t bound, std::int64_t K) const;

  std::string to_string() const;

 private:
  PiAdic(std::shared_ptr<const PiRing> ring, std::vector<Int> mant, std::int64_t shift, std::int64_t abs);
  void normalize();
  void cap();

  std::shared_ptr<const PiRing> ring_;
  std::vector<Int> mant_;  // empty for zero
  std::int64_t shift_ = 0;
  std::int64_t abs_ = 0;
};

}  // namespace hypint
