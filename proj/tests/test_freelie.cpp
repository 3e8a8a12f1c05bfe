#include "hiconn/freelie.hpp"

#include "hiconn/qmatrix.hpp"

#include "doctest.h"

using namespace hiconn;

TEST_CASE("mobius values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(3) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK_THROWS_AS(mobius(0), DimensionError);
}

TEST_CASE("witt dimensions, even generators") {
  const GeneratorSpec spec(2, 2);  // d = 3
  CHECK(witt_dim(spec, 1) == 2);
  CHECK(witt_dim(spec, 2) == 1);
  CHECK(witt_dim(spec, 3) == 2);
  CHECK(witt_dim(spec, 4) == 3);
  CHECK(witt_dim(GeneratorSpec(1, 2), 2) == 0);
  CHECK(witt_dim(GeneratorSpec(3, 2), 2) == 3);
  CHECK(witt_dim(GeneratorSpec(4, 2), 2) == 6);
  CHECK(witt_dim(GeneratorSpec(4, 2), 3) == 20);
  CHECK_THROWS_AS(witt_dim(spec, 0), DimensionError);
}

TEST_CASE("witt dimensions, odd generators") {
  // free graded Lie algebra on one odd generator has basis {x, [x,x]}
  const GeneratorSpec spec(1, 3);  // d = 4
  CHECK(witt_dim(spec, 1) == 1);
  CHECK(witt_dim(spec, 2) == 1);
  CHECK(witt_dim(spec, 3) == 0);
  CHECK(witt_dim(GeneratorSpec(2, 3), 2) == 3);
  CHECK(witt_dim(GeneratorSpec(4, 3), 2) == 10);
}

TEST_CASE("weight basis matches the Witt formula") {
  for (int deg : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      const GeneratorSpec spec(n, deg);
      const auto tower = free_lie_basis_tower(spec, 5);
      for (int r = 1; r <= 5; ++r)
        CHECK(static_cast<long>(tower[r].size()) == witt_dim(spec, r));
    }
  }
}

TEST_CASE("weight-2 basis element is the commutator") {
  const GeneratorSpec spec(2, 2);
  const auto basis = free_lie_weight_basis(spec, 2);
  REQUIRE(basis.size() == 1);
  const Rat c = basis[0].coeff({0, 1});
  CHECK(c != 0);
  CHECK(basis[0].coeff({1, 0}) == -c);
  CHECK(free_lie_weight_basis(spec, 3).size() == 2);
}

TEST_CASE("recursive span equals the full left-normed enumeration") {
  for (int deg : {2, 3}) {
    for (int n = 2; n <= 3; ++n) {
      const GeneratorSpec spec(n, deg);
      for (int r = 2; r <= 4; ++r) {
        // all n^r left-normed ad-words ad(a_{i1})...ad(a_{i_{r-1}})(a_{i_r})
        RowEchelon full;
        const std::int64_t total = 1 << (2 * r);  // enough for n <= 4
        (void)total;
        std::vector<int> idx(r, 0);
        while (true) {
          NCPoly v = NCPoly::generator(idx[r - 1]);
          for (int pos = r - 2; pos >= 0; --pos)
            v = graded_bracket(NCPoly::generator(idx[pos]), v, spec);
          if (!v.is_zero()) full.insert(ncpoly_to_sparse(v, n));
          int pos = 0;
          while (pos < r && ++idx[pos] == n) idx[pos++] = 0;
          if (pos == r) break;
        }
        CHECK(static_cast<long>(full.rank()) == witt_dim(spec, r));
      }
    }
  }
}

TEST_CASE("caps propagate") {
  Caps caps;
  caps.max_words = 8;
  CHECK_THROWS_AS(free_lie_weight_basis(GeneratorSpec(2, 2), 4, caps),
                  ResourceLimitError);
}
