#include "hiconn/qmatrix.hpp"

#include "doctest.h"

#include <map>
#include <random>

using namespace hiconn;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                      std::size_t cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Rat q(num(rng), den(rng));
      q.canonicalize();
      m(i, j) = q;
    }
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(QMatrix().rank() == 0);
  CHECK(QMatrix::identity(2).rank() == 2);
  QMatrix m = QMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
  CHECK(m.rank() == 1);
}

TEST_CASE("kernel basics") {
  CHECK(QMatrix::identity(3).kernel_basis().empty());
  CHECK(QMatrix(2, 3).kernel_basis().size() == 3);

  QMatrix m = QMatrix::from_rows({{Rat(1), Rat(1)}});
  auto k = m.kernel_basis();
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("kernel vectors are exact null vectors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix m = random_matrix(rng, 4, 6);
    const auto kernel = m.kernel_basis();
    CHECK(m.cols() == m.rank() + kernel.size());
    for (const auto& v : kernel) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("rank equals rank of the transpose") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix m = random_matrix(rng, 3 + trial % 3, 4);
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("span dimension") {
  CHECK(span_dim({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
  CHECK(span_dim({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}) == 1);
  CHECK(span_dim({}) == 0);
  CHECK_THROWS_AS(span_dim({{Rat(1)}, {Rat(1), Rat(2)}}), DimensionError);
}

TEST_CASE("plu reproduces the matrix entry for entry") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix m = random_matrix(rng, 4, 5);
    const PLU f = plu_decompose(m);
    const QMatrix prod = f.lower * f.upper;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        CHECK(prod(i, j) == m(f.perm[i], j));
  }
}

TEST_CASE("sparse echelon agrees with dense rank") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix m = random_matrix(rng, 5, 7);
    RowEchelon ech;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      SparseVec v;
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) v.emplace_back(j, m(i, j));
      ech.insert(v);
    }
    CHECK(ech.rank() == m.rank());
  }
}

TEST_CASE("sparse echelon reduction coefficients reconstruct the input") {
  RowEchelon ech;
  ech.insert({{0, Rat(1)}, {2, Rat(2)}});
  ech.insert({{1, Rat(3)}, {2, Rat(1)}});
  SparseVec v{{0, Rat(2)}, {1, Rat(3)}, {2, Rat(5)}};
  std::vector<std::pair<long, Rat>> used;
  SparseVec rem = ech.reduce(v, &used);
  CHECK(rem.empty());
  // accumulate coeff * stored row and compare against v
  std::map<std::int64_t, Rat> acc;
  for (const auto& [ordinal, c] : used)
    for (const auto& [col, x] : ech.stored_row(ordinal).ent)
      acc[col] += c * Rat(x);
  for (const auto& [col, x] : v) {
    CHECK(acc[col] == x);
    acc.erase(col);
  }
  for (const auto& [col, x] : acc) CHECK(x == 0);
}
