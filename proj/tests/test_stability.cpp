#include "hiconn/stability.hpp"

#include "doctest.h"

using namespace hiconn;

namespace {
Rat determinant(const QMatrix& m) {
  const PLU f = plu_decompose(m);
  Rat det = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= f.upper(i, i);
  // permutation sign
  std::vector<std::size_t> p = f.perm;
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  return det * sign;
}
}  // namespace

TEST_CASE("hyperbolic forms") {
  const HyperbolicForm odd = hyperbolic_form(1, 3);
  CHECK(odd.epsilon == -1);
  CHECK(odd.q(0, 1) == 1);
  CHECK(odd.q(1, 0) == -1);
  CHECK(odd.q(0, 0) == 0);

  const HyperbolicForm even = hyperbolic_form(1, 4);
  CHECK(even.epsilon == 1);
  CHECK(even.q(1, 0) == 1);

  const HyperbolicForm g2 = hyperbolic_form(2, 3);
  CHECK(g2.q.rows() == 4);
  CHECK(g2.q(0, 2) == 1);
  CHECK(g2.q(2, 0) == -1);
  CHECK(g2.q(1, 3) == 1);

  // unimodular and graded-symmetric for both parities
  for (int d : {3, 4}) {
    const QMatrix q = hyperbolic_form(2, d).q;
    const Rat det = determinant(q);
    CHECK((det == 1 || det == -1));
    const int sign = d % 2 ? -1 : 1;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(q(i, j) == Rat(sign) * q(j, i));
  }
}

TEST_CASE("form automorphisms") {
  const QMatrix q = hyperbolic_form(1, 3).q;
  CHECK(is_form_automorphism(QMatrix::identity(2), q));
  QMatrix neg(2, 2);
  neg(0, 0) = -1;
  neg(1, 1) = -1;
  CHECK(is_form_automorphism(neg, q));
  QMatrix rot(2, 2);  // an element of Sp_2(Z) = SL_2(Z)
  rot(0, 1) = 1;
  rot(1, 0) = -1;
  CHECK(is_form_automorphism(rot, q));
  QMatrix stretch(2, 2);
  stretch(0, 0) = 2;
  stretch(1, 1) = 1;
  CHECK(!is_form_automorphism(stretch, q));
  CHECK_THROWS_AS(is_form_automorphism(QMatrix::identity(3), q),
                  DimensionError);
}

TEST_CASE("G/O homotopy ranks") {
  CHECK(go_pi_rank(4) == 1);
  CHECK(go_pi_rank(8) == 1);
  CHECK(go_pi_rank(6) == 0);
  CHECK(go_pi_rank(0) == 0);
  CHECK(go_pi_rank(-4) == 0);
}

TEST_CASE("block quotient homotopy ranks") {
  CHECK(block_quotient_pi_rank(5, 3, 3) == 6);
  CHECK(block_quotient_pi_rank(5, 3, 4) == 0);
  CHECK(block_quotient_pi_rank(6, 1, 2) == 2);
  CHECK_THROWS_AS(block_quotient_pi_rank(2, 3, 1), HypothesisError);
  CHECK_THROWS_AS(block_quotient_pi_rank(5, 3, 0), DimensionError);
}

TEST_CASE("block quotient homology series") {
  const PowerSeries s5 = block_quotient_homology_series(5, 1, 7);
  const long expect[] = {1, 0, 0, 2, 0, 0, 1, 2};
  for (std::size_t k = 0; k <= 7; ++k) CHECK(s5.coeff(k) == expect[k]);

  const PowerSeries s4 = block_quotient_homology_series(4, 1, 4);
  CHECK(s4.coeff(0) == 1);
  CHECK(s4.coeff(4) == 2);
  CHECK(s4.coeff(1) == 0);
  CHECK(s4.coeff(2) == 0);
  CHECK(s4.coeff(3) == 0);
}

TEST_CASE("diffeomorphism window") {
  CHECK(diff_pi_rank(9, 2, 3) == 4);
  CHECK(diff_pi_rank(9, 2, 2) == 0);
  CHECK(!diff_pi_rank(4, 2, 3).has_value());
  CHECK(!diff_pi_rank(9, 2, 1).has_value());
  CHECK(!diff_pi_rank(9, 2, 8).has_value());
}

TEST_CASE("stable range") {
  CHECK(stable_range_max_k(5, 10) == 2);
  CHECK(stable_range_max_k(3, 100) == 0);
  CHECK(stable_range_max_k(5, 5) == -1);
  // monotone nondecreasing in d and g
  for (int d = 3; d <= 7; ++d)
    for (int g = 1; g <= 14; ++g) {
      CHECK(stable_range_max_k(d + 1, g) >= stable_range_max_k(d, g));
      CHECK(stable_range_max_k(d, g + 1) >= stable_range_max_k(d, g));
    }
}

TEST_CASE("charney connectivity") {
  CHECK(charney_connectivity(10, 2) == 2);
  CHECK(charney_connectivity(6, 2) == 0);
  CHECK(charney_connectivity(5, 2) == Rat(-1, 2));
  CHECK_THROWS_AS(charney_connectivity(4, 0), DimensionError);
}

TEST_CASE("self-equivalence degrees avoid the Morlet window") {
  // homotopy of the self-equivalence spaces is concentrated in degrees
  // divisible by d-1, and the window 1 < k < d-1 contains no such degree,
  // so only the G/O part contributes there
  for (int d = 4; d <= 10; ++d)
    for (long k = 2; k < d - 1; ++k) CHECK(k % (d - 1) != 0);
}

TEST_CASE("range report") {
  const RangeReport rep = stability_report(5, 10, 8);
  CHECK(rep.max_stable_k == 2);
  CHECK(rep.block_pi_rank[2] == 20);  // k=3, 3+5=8
  CHECK(!rep.diff_rank[0].has_value());
  CHECK(rep.diff_rank[2] == 20);
  CHECK(rep.charney[1] == 2);
}
