#pragma once

#include <functional>
#include <optional>

#include "hypint/types.hpp"

namespace hypint {

/// `a . x + b >= 0`
struct Inequality {
  BigVec a;
  Int b;
};

/// Polyhedron {x in R^dim : a_i . x + b_i >= 0}, with Fourier-Motzkin
/// projections onto every coordinate prefix. Once projected, integer points
/// are enumerated by a depth-first search whose bounds at each depth are exact
/// for the real projection, so no branch is opened that has no real
/// completion.
class Polyhedron {
 public:
  explicit Polyhedron(std::size_t dim);

  std::size_t dim() const { return dim_; }
  void add(BigVec a, Int b);
  void add(const Vec& a, std::int64_t b);
  void add_equality(const BigVec& a, const Int& b);
  const std::vector<Inequality>& rows() const { return rows_; }

  bool feasible() const;
  /// A rational point, if the polyhedron is nonempty.
  std::optional<RatVec> some_point() const;
  /// Visits integer points in lexicographic order. Throws DomainError if a
  /// coordinate is unbounded.
  void for_each_integer_point(const std::function<void(const Vec&)>& visit) const;
  /// As above, stopping as soon as `visit` returns false. Returns false if
  /// the walk was stopped.
  bool for_each_integer_point_while(const std::function<bool(const Vec&)>& visit) const;
  std::optional<Vec> first_integer_point() const;
  std::vector<Vec> integer_points() const;

 private:
  struct Projected {
    // level[k] holds the rows of the projection onto x_0..x_{k-1} whose
    // coefficient on x_{k-1} is nonzero; level[0] is never consulted.
    std::vector<std::vector<Inequality>> level;
    bool empty = false;
  };
  Projected project() const;

  std::size_t dim_;
  std::vector<Inequality> rows_;
};

}  // namespace hypint
