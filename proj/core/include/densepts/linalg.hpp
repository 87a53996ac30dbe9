#pragma once

// Exact integer/rational linear algebra. No floating point anywhere.

#include <cstddef>
#include <optional>
#include <vector>

#include "densepts/arith.hpp"

namespace densepts {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// Determinant of a square matrix by Bareiss fraction-free elimination.
Integer determinant(IntMatrix m);

/// Rank over Q by Bareiss elimination.
std::size_t rank(IntMatrix m);

/// Every k x k minor (all row subsets times all column subsets of size k),
/// in lexicographic subset order.
std::vector<Integer> minors(const IntMatrix& m, std::size_t k);

/// gcd of every k x k minor where k = number of rows (requires rows <= cols).
Integer maximal_minor_gcd(const IntMatrix& m);

/// Primitive integer basis of the right kernel {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Inverse over Q; nullopt when singular.
std::optional<RatMatrix> inverse(const IntMatrix& m);

IntVector multiply(const IntMatrix& m, const IntVector& x);
RatVector multiply(const RatMatrix& m, const RatVector& x);
Integer dot(const IntVector& a, const IntVector& b);

/// Divides out the content and makes the first nonzero entry positive.
/// Returns false (leaving v untouched) when v is zero.
bool make_primitive(IntVector& v);

/// Row echelon form built one row at a time, entries kept integral and
/// content-reduced (fraction-free). Tracks which inserted rows raised the rank.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t columns) : columns_(columns) {}

  /// Reduces `row` against the current basis; returns true if it raised the rank.
  bool insert(IntVector row);

  std::size_t rank() const { return basis_.size(); }
  std::size_t columns() const { return columns_; }
  bool full() const { return basis_.size() == columns_; }

 private:
  std::size_t columns_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace densepts
