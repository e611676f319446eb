#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace simplicia {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix in triplet form.
class IntegerMatrix {
 public:
  struct Entry {
    int row;
    int col;
    BigInt value;
  };

  IntegerMatrix(int rows, int cols);

  /// Adds `value` at (row, col); duplicate positions are summed.
  void add(int row, int col, BigInt value);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  /// Deduplicated nonzero triplets sorted by (row, col).
  const std::vector<Entry>& entries() const;

  static IntegerMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
  std::vector<std::vector<BigInt>> to_dense() const;

 private:
  int rows_;
  int cols_;
  mutable std::vector<Entry> entries_;
  mutable bool normalized_ = true;
};

struct SNFResult {
  /// Nonzero invariant factors d_1 | d_2 | ... (all positive).
  std::vector<BigInt> invariant_factors;
  int rank = 0;
};

/// Smith normal form by exact elimination. Unit pivots are eliminated
/// sparsely; the remaining block is reduced with minimal-absolute-value pivots.
/// Machine integers are used until an operation would overflow, after which
/// the computation restarts with arbitrary precision.
SNFResult smith_normal_form(const IntegerMatrix& m);

/// Rank over the prime field Z/p.
int rank_mod_p(const IntegerMatrix& m, std::uint32_t p);

}  // namespace simplicia
