#pragma once

#include "dgq/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace dgq::linalg {

using Column = std::uint32_t;

/// Sparse vector: (column, value) pairs, strictly increasing columns, no zeros.
template <class T>
using SparseRow = std::vector<std::pair<Column, T>>;

/// Incremental row-echelon basis of a subspace of Q^n.
///
/// Rows are cleared of denominators and reduced fraction-free with content
/// normalisation. Arithmetic runs on int64 and switches to GMP integers the
/// first time an intermediate product would overflow, so results are always
/// exact.
class Echelon {
 public:
  /// Adds `row` to the spanning set. Returns true if the rank grew.
  bool insert(const SparseRow<Rational>& row);
  bool insert(const SparseRow<std::int64_t>& row);
  /// True if `row` lies in the current span.
  bool contains(const SparseRow<Rational>& row) const;
  std::size_t rank() const { return wide_ ? big_.size() : small_.size(); }
  /// Current basis (one row per pivot, in pivot order).
  std::vector<SparseRow<Rational>> basis() const;
  bool using_wide_arithmetic() const { return wide_; }

 private:
  void widen();
  bool insert_big(SparseRow<Integer> row);

  bool wide_ = false;
  std::map<Column, SparseRow<std::int64_t>> small_;
  std::map<Column, SparseRow<Integer>> big_;
};

/// Rank of the span of `rows`.
std::size_t rank(const std::vector<SparseRow<Rational>>& rows);

/// Reduced row-echelon form: leading coefficient 1, pivot columns cleared in
/// every other row, rows ordered by pivot.
struct Rref {
  std::vector<SparseRow<Rational>> rows;
  std::vector<Column> pivots;
};
Rref rref(std::vector<SparseRow<Rational>> rows);

/// Basis of {x in Q^ncols : row·x = 0 for all rows}, returned in RREF.
std::vector<SparseRow<Rational>> nullspace(const std::vector<SparseRow<Rational>>& rows, std::size_t ncols);

}  // namespace dgq::linalg
