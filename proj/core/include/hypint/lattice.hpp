#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hypint/cone.hpp"
#include "hypint/types.hpp"

namespace hypint {

struct ZAGroup {
  BigMat basis;  // HNF rows
  std::size_t rank = 0;
};

/// A configuration A = {a_1..a_N} in Z^n on a height-one hyperplane, with the
/// distinguished subset A' stored first (indices 0..M-1).
///
/// Construction validates the data and precomputes the group ZA, the cone
/// C(A), the face sigma_beta of beta = sum of A', and the lattice ZA cut down
/// to the span of that face. Values are immutable afterwards.
class LatticeConfig {
 public:
  /// `aprime` lists 0-based indices into `points`; the stored order puts those
  /// first (in the given order) followed by the rest in input order. When
  /// `height` is absent the last coordinate is used if it works, otherwise an
  /// integer covector solving c . a_j = 1 is searched for.
  LatticeConfig(Mat points, const std::vector<std::size_t>& aprime, std::optional<Vec> height = std::nullopt);

  std::size_t n() const { return n_; }
  std::size_t N() const { return points_.size(); }
  std::size_t M() const { return M_; }
  const Mat& points() const { return points_; }
  const Vec& point(std::size_t j) const { return points_[j]; }
  /// Input index of stored point j.
  std::size_t original_index(std::size_t j) const { return perm_[j]; }
  const Vec& beta() const { return beta_; }
  const Vec& height() const { return height_; }
  std::int64_t height_of(const Vec& v) const { return dot(height_, v); }

  const ZAGroup& za() const { return za_; }
  const Cone& cone() const { return cone_; }
  const Face& beta_face() const { return face_; }
  /// True iff stored point j lies on sigma_beta.
  bool on_face(std::size_t j) const { return on_face_[j]; }
  /// True iff sigma_beta is the whole cone.
  bool beta_interior() const { return beta_interior_; }
  const BigMat& face_lattice() const { return face_lattice_; }

  std::string describe() const;

 private:
  std::size_t n_ = 0;
  std::size_t M_ = 0;
  Mat points_;
  std::vector<std::size_t> perm_;
  Vec beta_;
  Vec height_;
  ZAGroup za_;
  Cone cone_;
  Face face_;
  std::vector<bool> on_face_;
  BigMat face_lattice_;
  bool beta_interior_ = false;
};

bool za_member(const LatticeConfig& cfg, const Vec& v);
const Cone& cone_facets(const LatticeConfig& cfg);

/// No proper subset of A' sums into the relative interior of sigma_beta.
/// Throws DomainError for M > 20.
bool aprime_minimal(const LatticeConfig& cfg);

struct Normalized {
  LatticeConfig config;
  BigMat transform;  // unimodular T with (T v)_last = c . v
};
/// Applies a unimodular change of coordinates taking the height covector to
/// the last coordinate functional.
Normalized hyperplane_normalize(const LatticeConfig& cfg);

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

struct SemigroupAnswer {
  Tri answer = Tri::Unknown;
  std::optional<Vec> witness;  // l with sum l_j a_j = v
};
SemigroupAnswer semigroup_member(const LatticeConfig& cfg, const Vec& v, std::int64_t degree_cap);

/// Points of ZA in the relative interior of sigma_beta at height h > 0, lexicographically sorted.
std::vector<Vec> interior_points_at_height(const LatticeConfig& cfg, std::int64_t h);

/// u in M_beta: u in ZA and -u in the relative interior of sigma_beta.
bool in_m_beta(const LatticeConfig& cfg, const Vec& u);

}  // namespace hypint
