#include "dgq/linalg.hpp"

#include "dgq/errors.hpp"

#include <algorithm>
#include <numeric>

namespace dgq::linalg {

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// a·x − b·y where x and y share their leading column, which cancels.
SparseRow<std::int64_t> combine(std::int64_t a, const SparseRow<std::int64_t>& x, std::int64_t b,
                                const SparseRow<std::int64_t>& y) {
  SparseRow<std::int64_t> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 1, j = 1;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, checked_mul(a, x[i].second));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, checked_sub(0, checked_mul(b, y[j].second)));
      ++j;
    } else {
      const auto v = checked_sub(checked_mul(a, x[i].second), checked_mul(b, y[j].second));
      if (v != 0) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow<Integer> combine(const Integer& a, const SparseRow<Integer>& x, const Integer& b,
                           const SparseRow<Integer>& y) {
  SparseRow<Integer> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 1, j = 1;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize(SparseRow<std::int64_t>& row) {
  std::int64_t g = 0;
  for (const auto& [c, v] : row) g = std::gcd(g, v < 0 ? -v : v);
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) v /= g;
  }
}

void normalize(SparseRow<Integer>& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// Reduces `row` against `pivots` until its leading column is free or it vanishes.
template <class Int>
void reduce(SparseRow<Int>& row, const std::map<Column, SparseRow<Int>>& pivots) {
  while (!row.empty()) {
    auto it = pivots.find(row.front().first);
    if (it == pivots.end()) return;
    const auto& p = it->second;
    Int a = p.front().second;
    Int b = row.front().second;
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      const auto g = std::gcd(a, b);
      a /= g;
      b /= g;
    } else {
      Int g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    }
    row = combine(a, row, b, p);
    if (!row.empty()) normalize(row);
  }
}

SparseRow<Integer> clear_denominators(const SparseRow<Rational>& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  SparseRow<Integer> out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    Integer n = v.get_num() * (l / v.get_den());
    out.emplace_back(c, std::move(n));
  }
  return out;
}

bool fits_small(const SparseRow<Integer>& row) {
  return std::all_of(row.begin(), row.end(), [](const auto& e) { return e.second.fits_slong_p(); });
}

SparseRow<std::int64_t> to_small(const SparseRow<Integer>& row) {
  SparseRow<std::int64_t> out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, v.get_si());
  return out;
}

SparseRow<Integer> to_big(const SparseRow<std::int64_t>& row) {
  SparseRow<Integer> out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, Integer(static_cast<long>(v)));
  return out;
}

}  // namespace

void Echelon::widen() {
  for (auto& [c, row] : small_) big_.emplace(c, to_big(row));
  small_.clear();
  wide_ = true;
}

bool Echelon::insert_big(SparseRow<Integer> row) {
  if (row.empty()) return false;
  normalize(row);
  reduce(row, big_);
  if (row.empty()) return false;
  const Column lead = row.front().first;
  big_.emplace(lead, std::move(row));
  return true;
}

bool Echelon::insert(const SparseRow<std::int64_t>& input) {
  if (input.empty()) return false;
  if (!wide_) {
    try {
      SparseRow<std::int64_t> row = input;
      normalize(row);
      reduce(row, small_);
      if (row.empty()) return false;
      const Column lead = row.front().first;
      small_.emplace(lead, std::move(row));
      return true;
    } catch (const Overflow&) {
      widen();
    }
  }
  return insert_big(to_big(input));
}

bool Echelon::insert(const SparseRow<Rational>& input) {
  SparseRow<Integer> row = clear_denominators(input);
  if (row.empty()) return false;
  if (!wide_ && fits_small(row)) return insert(to_small(row));
  if (!wide_) widen();
  return insert_big(std::move(row));
}

bool Echelon::contains(const SparseRow<Rational>& input) const {
  SparseRow<Integer> row = clear_denominators(input);
  if (row.empty()) return true;
  if (wide_) {
    normalize(row);
    reduce(row, big_);
    return row.empty();
  }
  if (fits_small(row)) {
    try {
      auto small = to_small(row);
      normalize(small);
      reduce(small, small_);
      return small.empty();
    } catch (const Overflow&) {
    }
  }
  std::map<Column, SparseRow<Integer>> big;
  for (const auto& [c, r] : small_) big.emplace(c, to_big(r));
  normalize(row);
  reduce(row, big);
  return row.empty();
}

std::vector<SparseRow<Rational>> Echelon::basis() const {
  std::vector<SparseRow<Rational>> out;
  out.reserve(rank());
  auto emit = [&out](const auto& rows) {
    for (const auto& [c, r] : rows) {
      SparseRow<Rational> q;
      q.reserve(r.size());
      for (const auto& [col, v] : r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::int64_t>) {
          q.emplace_back(col, Rational(static_cast<long>(v)));
        } else {
          q.emplace_back(col, Rational(v));
        }
      }
      out.push_back(std::move(q));
    }
  };
  if (wide_) {
    emit(big_);
  } else {
    emit(small_);
  }
  return out;
}

std::size_t rank(const std::vector<SparseRow<Rational>>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

namespace {

// row −= factor·pivot, both sorted.
SparseRow<Rational> axpy(const SparseRow<Rational>& row, const Rational& factor, const SparseRow<Rational>& pivot) {
  SparseRow<Rational> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rational* find_entry(const SparseRow<Rational>& row, Column c) {
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, Column col) { return e.first < col; });
  if (it == row.end() || it->first != c) return nullptr;
  return &it->second;
}

}  // namespace

Rref rref(std::vector<SparseRow<Rational>> rows) {
  // Forward elimination into a pivot-keyed echelon, then back substitution.
  std::map<Column, SparseRow<Rational>> pivots;
  for (auto& r : rows) {
    r.erase(std::remove_if(r.begin(), r.end(), [](const auto& e) { return e.second == 0; }), r.end());
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) break;
      r = axpy(r, r.front().second, it->second);
    }
    if (r.empty()) continue;
    const Rational lead = r.front().second;
    for (auto& [c, v] : r) v /= lead;
    pivots.emplace(r.front().first, std::move(r));
  }
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    for (auto jt = std::next(it); jt != pivots.rend(); ++jt) {
      if (const Rational* f = find_entry(jt->second, it->first)) {
        Rational factor = *f;
        jt->second = axpy(jt->second, factor, it->second);
      }
    }
  }
  Rref out;
  for (auto& [c, r] : pivots) {
    out.pivots.push_back(c);
    out.rows.push_back(std::move(r));
  }
  return out;
}

std::vector<SparseRow<Rational>> nullspace(const std::vector<SparseRow<Rational>>& rows, std::size_t ncols) {
  const Rref r = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (Column c : r.pivots) {
    if (c >= ncols) throw InvalidInput("nullspace: column index out of range");
    is_pivot[c] = true;
  }
  // For each free column f: x_f = 1, x_pivot(i) = −rows[i][f].
  std::vector<std::vector<std::pair<Column, Rational>>> by_free(ncols);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    for (const auto& [c, v] : r.rows[i]) {
      if (!is_pivot[c]) by_free[c].emplace_back(r.pivots[i], -v);
    }
  }
  std::vector<SparseRow<Rational>> basis;
  for (Column f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    SparseRow<Rational> v = std::move(by_free[f]);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis)).rows;
}

}  // namespace dgq::linalg
