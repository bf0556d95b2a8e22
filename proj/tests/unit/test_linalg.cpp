#include "oracles.hpp"

#include <doctest.h>

using namespace dgq;
using linalg::SparseRow;

namespace {

SparseRow<Rational> sparse(const std::vector<Rational>& dense) {
  SparseRow<Rational> r;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) r.emplace_back(static_cast<linalg::Column>(i), dense[i]);
  }
  return r;
}

oracle::Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int density, Integer scale) {
  oracle::Matrix m(rows, std::vector<Rational>(cols));
  std::uniform_int_distribution<int> pct(0, 99), val(-9, 9);
  for (auto& row : m) {
    for (auto& x : row) {
      if (pct(rng) < density) x = fraction(Integer(val(rng)) * scale, Integer(1 + pct(rng) % 5));
    }
  }
  // Plant dependencies.
  if (rows > 3) m[rows - 1] = m[0], m[rows - 2] = m[1];
  for (std::size_t j = 0; j < cols && rows > 3; ++j) m[rows - 3][j] = 2 * m[0][j] - Rational(1, 3) * m[1][j];
  return m;
}

}  // namespace

TEST_CASE("incremental echelon rank matches a dense oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    const Integer scale = trial % 3 == 0 ? Integer("1000000000000") : Integer(1);
    const auto m = random_matrix(rng, rows, cols, 10 + static_cast<int>(rng() % 80), scale);
    std::vector<SparseRow<Rational>> s;
    for (const auto& r : m) s.push_back(sparse(r));
    const std::size_t expect = oracle::rank(m);
    CHECK(linalg::rank(s) == expect);
    linalg::Echelon e;
    for (const auto& r : s) e.insert(r);
    CHECK(e.rank() == expect);
    for (const auto& r : s) CHECK(e.contains(r));
  }
}

TEST_CASE("int64 overflow widens to exact arithmetic") {
  linalg::Echelon e;
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK(e.insert(SparseRow<std::int64_t>{{0, big}, {1, 3}}));
  CHECK(e.insert(SparseRow<std::int64_t>{{0, 3}, {1, big}}));
  CHECK_FALSE(e.insert(SparseRow<std::int64_t>{{0, big - 1}, {1, big - 5}}));
  CHECK(e.rank() == 2);
  CHECK(e.using_wide_arithmetic());
}

TEST_CASE("rref has unit pivots and cleared pivot columns") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 6, 8, 50, 1);
    std::vector<SparseRow<Rational>> s;
    for (const auto& r : m) s.push_back(sparse(r));
    const auto r = linalg::rref(s);
    CHECK(r.rows.size() == oracle::rank(m));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      CHECK(r.rows[i].front().first == r.pivots[i]);
      CHECK(r.rows[i].front().second == 1);
      for (std::size_t k = 0; k < r.rows.size(); ++k) {
        if (k == i) continue;
        for (const auto& [c, v] : r.rows[k]) CHECK(c != r.pivots[i]);
      }
    }
  }
}

TEST_CASE("nullspace is annihilated and has complementary dimension") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t cols = 2 + rng() % 8;
    const auto m = random_matrix(rng, 1 + rng() % 6, cols, 40, 1);
    std::vector<SparseRow<Rational>> s;
    for (const auto& r : m) s.push_back(sparse(r));
    const auto ns = linalg::nullspace(s, cols);
    CHECK(ns.size() == cols - oracle::rank(m));
    for (const auto& v : ns) {
      for (const auto& row : m) {
        Rational dot = 0;
        for (const auto& [c, x] : v) dot += row[c] * x;
        CHECK(dot == 0);
      }
    }
  }
}
