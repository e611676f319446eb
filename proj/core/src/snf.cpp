#include "simplicia/snf.hpp"

#include <algorithm>
#include <utility>

#include "simplicia/errors.hpp"

namespace simplicia {

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix size");
}

void IntegerMatrix::add(int row, int col, BigInt value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw InvalidArgument("matrix index out of range");
  if (value == 0) return;
  entries_.push_back({row, col, std::move(value)});
  normalized_ = false;
}

const std::vector<IntegerMatrix::Entry>& IntegerMatrix::entries() const {
  if (!normalized_) {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (auto& e : entries_) {
      if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
        merged.back().value += e.value;
      } else {
        merged.push_back(std::move(e));
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Entry& e) { return e.value == 0; }),
                 merged.end());
    entries_ = std::move(merged);
    normalized_ = true;
  }
  return entries_;
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  const int r = static_cast<int>(dense.size());
  const int c = r == 0 ? 0 : static_cast<int>(dense.front().size());
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (dense[i].at(j) != 0) m.add(i, j, dense[i][j]);
  return m;
}

std::vector<std::vector<BigInt>> IntegerMatrix::to_dense() const {
  std::vector<std::vector<BigInt>> d(rows_, std::vector<BigInt>(cols_));
  for (const auto& e : entries()) d[e.row][e.col] = e.value;
  return d;
}

namespace {

struct Overflow {};

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t absolute(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return a < 0 ? -a : a;
}
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt absolute(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
inline bool is_unit(const BigInt& a) { return a == 1 || a == -1; }

template <class T>
T gcd_of(T a, T b) {
  a = absolute(a);
  b = absolute(b);
  while (b != 0) {
    T r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <class T>
using SparseRow = std::vector<std::pair<int, T>>;

// row_i -= coef * row_r. Returns columns newly introduced into row_i.
template <class T>
void axpy(SparseRow<T>& target, const SparseRow<T>& pivot, const T& coef, std::vector<int>& new_cols) {
  SparseRow<T> out;
  out.reserve(target.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < target.size() && target[a].first < pivot[b].first)) {
      out.push_back(std::move(target[a++]));
    } else if (a == target.size() || pivot[b].first < target[a].first) {
      T v = sub(T(0), mul(coef, pivot[b].second));
      new_cols.push_back(pivot[b].first);
      out.emplace_back(pivot[b].first, std::move(v));
      ++b;
    } else {
      T v = sub(target[a].second, mul(coef, pivot[b].second));
      if (v != 0) out.emplace_back(target[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

template <class T>
const T* find_entry(const SparseRow<T>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const std::pair<int, T>& e, int c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// Diagonalizes a dense matrix with minimal-|value| pivots; returns the nonzero diagonal.
template <class T>
std::vector<T> dense_diagonal(std::vector<std::vector<T>> a) {
  std::vector<T> diag;
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a.front().size());
  for (int t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      int pi = -1, pj = -1;
      T best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi < 0 || absolute(a[i][j]) < best)) {
            best = absolute(a[i][j]);
            pi = i;
            pj = j;
          }
      if (pi < 0) return diag;
      std::swap(a[t], a[pi]);
      for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

      bool clean = true;
      const T p = a[t][t];
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        T q = a[i][t] / p;
        for (int j = t; j < cols; ++j) a[i][j] = sub(a[i][j], mul(q, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        T q = a[t][j] / p;
        for (int i = t; i < rows; ++i) a[i][j] = sub(a[i][j], mul(q, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(absolute(a[t][t]));
  }
  return diag;
}

// Turns a diagonal into a divisibility chain with the same product structure.
template <class T>
void normalize_chain(std::vector<T>& d) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (d[j] % d[i] == 0) continue;
        T g = gcd_of(d[i], d[j]);
        T l = (d[i] / g) * d[j];
        d[i] = g;
        d[j] = l;
        changed = true;
      }
    }
  }
  std::sort(d.begin(), d.end());
}

template <class T>
SNFResult snf_impl(const IntegerMatrix& m) {
  const int nrows = m.rows();
  const int ncols = m.cols();
  std::vector<SparseRow<T>> rows(nrows);
  std::vector<std::vector<int>> col_rows(ncols);
  for (const auto& e : m.entries()) {
    rows[e.row].emplace_back(e.col, static_cast<T>(e.value));
    col_rows[e.col].push_back(e.row);
  }
  std::vector<char> row_alive(nrows, 1), col_alive(ncols, 1);
  int units = 0;

  std::vector<int> new_cols;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < ncols; ++c) {
      if (!col_alive[c]) continue;
      auto& cr = col_rows[c];
      // Drop stale row references.
      cr.erase(std::remove_if(cr.begin(), cr.end(),
                              [&](int r) { return !row_alive[r] || find_entry(rows[r], c) == nullptr; }),
               cr.end());
      std::sort(cr.begin(), cr.end());
      cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
      if (cr.empty()) {
        col_alive[c] = 0;
        continue;
      }
      int pivot = -1;
      for (int r : cr) {
        if (is_unit(*find_entry(rows[r], c)) && (pivot < 0 || rows[r].size() < rows[pivot].size())) pivot = r;
      }
      if (pivot < 0) continue;
      const T p = *find_entry(rows[pivot], c);
      for (int r : cr) {
        if (r == pivot) continue;
        const T coef = mul(*find_entry(rows[r], c), p);  // p is ±1, so a/p == a*p
        new_cols.clear();
        axpy(rows[r], rows[pivot], coef, new_cols);
        for (int nc : new_cols) col_rows[nc].push_back(r);
      }
      row_alive[pivot] = 0;
      col_alive[c] = 0;
      rows[pivot].clear();
      cr.clear();
      ++units;
      progress = true;
    }
  }

  // Dense residue: rows and columns that still carry entries.
  std::vector<int> res_rows, res_cols;
  std::vector<int> col_pos(ncols, -1);
  for (int r = 0; r < nrows; ++r) {
    if (!row_alive[r] || rows[r].empty()) continue;
    res_rows.push_back(r);
    for (const auto& [c, v] : rows[r]) {
      if (col_pos[c] < 0) {
        col_pos[c] = 0;
        res_cols.push_back(c);
      }
    }
  }
  std::sort(res_cols.begin(), res_cols.end());
  for (std::size_t k = 0; k < res_cols.size(); ++k) col_pos[res_cols[k]] = static_cast<int>(k);
  std::vector<std::vector<T>> dense(res_rows.size(), std::vector<T>(res_cols.size(), T(0)));
  for (std::size_t k = 0; k < res_rows.size(); ++k)
    for (const auto& [c, v] : rows[res_rows[k]]) dense[k][col_pos[c]] = v;

  std::vector<T> diag = dense_diagonal(std::move(dense));
  normalize_chain(diag);

  SNFResult out;
  out.invariant_factors.assign(units, BigInt(1));
  for (const auto& d : diag) out.invariant_factors.emplace_back(d);
  std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
  out.rank = static_cast<int>(out.invariant_factors.size());
  return out;
}

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& m) {
  bool fits = true;
  for (const auto& e : m.entries()) {
    if (e.value > std::numeric_limits<std::int64_t>::max() / 2 ||
        e.value < std::numeric_limits<std::int64_t>::min() / 2) {
      fits = false;
      break;
    }
  }
  if (fits) {
    try {
      return snf_impl<std::int64_t>(m);
    } catch (const Overflow&) {
    }
  }
  return snf_impl<BigInt>(m);
}

int rank_mod_p(const IntegerMatrix& m, std::uint32_t p) {
  if (p < 2) throw InvalidArgument("modulus must be a prime >= 2");
  const std::uint64_t P = p;
  auto reduce = [&](const BigInt& v) {
    BigInt r = v % BigInt(P);
    if (r < 0) r += P;
    return static_cast<std::uint64_t>(r);
  };
  auto inverse = [&](std::uint64_t a) {
    std::uint64_t result = 1, base = a, e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return result;
  };
  const int nrows = m.rows();
  const int ncols = m.cols();
  using Row = std::vector<std::pair<int, std::uint64_t>>;
  std::vector<Row> rows(nrows);
  std::vector<std::vector<int>> col_rows(ncols);
  for (const auto& e : m.entries()) {
    auto v = reduce(e.value);
    if (v == 0) continue;
    rows[e.row].emplace_back(e.col, v);
    col_rows[e.col].push_back(e.row);
  }
  std::vector<char> row_alive(nrows, 1);
  auto entry = [&](const Row& row, int c) -> std::uint64_t {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, std::uint64_t>& e, int x) { return e.first < x; });
    return (it == row.end() || it->first != c) ? 0 : it->second;
  };
  int rank = 0;
  for (int c = 0; c < ncols; ++c) {
    auto& cr = col_rows[c];
    cr.erase(std::remove_if(cr.begin(), cr.end(), [&](int r) { return !row_alive[r] || entry(rows[r], c) == 0; }),
             cr.end());
    std::sort(cr.begin(), cr.end());
    cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
    if (cr.empty()) continue;
    int pivot = cr.front();
    for (int r : cr)
      if (rows[r].size() < rows[pivot].size()) pivot = r;
    const std::uint64_t inv = inverse(entry(rows[pivot], c));
    for (int r : cr) {
      if (r == pivot) continue;
      const std::uint64_t coef = entry(rows[r], c) * inv % P;
      Row out;
      const Row& a = rows[r];
      const Row& b = rows[pivot];
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
          out.emplace_back(b[j].first, (P - coef * b[j].second % P) % P);
          col_rows[b[j].first].push_back(r);
          ++j;
        } else {
          std::uint64_t v = (a[i].second + P - coef * b[j].second % P) % P;
          if (v) out.emplace_back(a[i].first, v);
          ++i;
          ++j;
        }
      }
      rows[r] = std::move(out);
    }
    row_alive[pivot] = 0;
    rows[pivot].clear();
    ++rank;
  }
  return rank;
}

}  // namespace simplicia
