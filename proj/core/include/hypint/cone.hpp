#pragma once

#include <cstddef>
#include <optional>

#include "hypint/types.hpp"

namespace hypint {

/// The real cone spanned by a finite list of integer vectors in Z^n.
///
/// `facets` are primitive integer functionals lying in the linear span of the
/// generators (so they are unique), lexicographically sorted. Together with
/// membership in the span they cut out the cone exactly.
struct Cone {
  std::size_t n = 0;
  Mat generators;
  BigMat span_basis;  // HNF basis of the group generated by `generators`
  BigMat facets;
  bool has_lineality = false;

  std::size_t dim() const { return span_basis.size(); }
};

Cone make_cone(const Mat& generators, std::size_t n);

bool in_span(const Cone& cone, const RatVec& v);
/// Closed-cone membership.
bool cone_contains(const Cone& cone, const Vec& v);
/// Relative-interior membership: v in the span and strictly positive on every facet.
bool interior_contains(const Cone& cone, const RatVec& v);
bool interior_contains(const Cone& cone, const Vec& v);

struct Face {
  Cone cone;
  std::vector<std::size_t> generator_indices;  // into the parent's generator list
};

/// Smallest face containing `beta`. Throws DomainError if beta is not in the cone.
Face face_of(const Cone& cone, const Vec& beta);

/// Basis (HNF rows) of the points of `lattice_basis` lying in the real span of `face`.
BigMat lattice_in_span(const BigMat& lattice_basis, const Cone& face);

}  // namespace hypint
