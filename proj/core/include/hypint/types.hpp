#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hypint {

using Int = mpz_class;
using Rat = mpq_class;

/// Small integer vector. Coordinates of configuration points, exponents and
/// solution vectors all fit comfortably in 64 bits at desk scale.
using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

using BigVec = std::vector<Int>;
using BigMat = std::vector<BigVec>;
using RatVec = std::vector<Rat>;

/// Input that cannot be interpreted (bad file, malformed field).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a mathematical precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, std::int64_t k);
Vec negate(const Vec& a);

BigVec to_big(const Vec& v);
BigMat to_big(const Mat& m);
/// Throws DomainError if an entry does not fit into 64 bits.
Vec to_small(const BigVec& v);
Mat to_small(const BigMat& m);

/// Divides by the gcd of the entries (no-op for the zero vector).
BigVec primitive(BigVec v);

std::string join(const Vec& v, const char* sep = ",");
std::string join(const BigVec& v, const char* sep = ",");

}  // namespace hypint
