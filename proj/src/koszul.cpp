#include "hiconn/koszul.hpp"

namespace hiconn {

std::vector<std::pair<int, int>> weight2_pairs(int n, int deg) {
  std::vector<std::pair<int, int>> pairs;
  const bool with_squares = (deg % 2 == 0);  // x_i^2 = 0 in odd degree
  for (int i = 0; i < n; ++i)
    for (int j = i + (with_squares ? 0 : 1); j < n; ++j)
      pairs.emplace_back(i, j);
  return pairs;
}

QuadraticAlgebra cohomology_algebra(const ManifoldModel& m,
                                    std::size_t series_order) {
  const int n = m.n();
  const int d = m.d();
  const auto pairs = weight2_pairs(n, d);

  // The multiplication map sends the basis monomial x_i x_j to q_ij; its
  // kernel is the relation space.
  QMatrix eval(1, pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    eval(0, p) = m.q()(pairs[p].first, pairs[p].second);

  QuadraticAlgebra a{n, d, {}, PowerSeries(series_order)};
  const int sign = d % 2 ? -1 : 1;
  for (const auto& t : eval.kernel_basis()) {
    QMatrix c(n, n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [i, j] = pairs[p];
      if (i == j) {
        c(i, i) = t[p];
      } else {
        c(i, j) = t[p] / 2;
        c(j, i) = sign * t[p] / 2;
      }
    }
    a.relations.push_back(std::move(c));
  }

  a.poincare.set_coeff(0, 1);
  a.poincare.set_coeff(1, n);
  a.poincare.set_coeff(2, 1);
  return a;
}

std::vector<std::vector<Rat>> relation_coords(const QuadraticAlgebra& a) {
  const auto pairs = weight2_pairs(a.n, a.gen_degree);
  const int sign = a.gen_degree % 2 ? -1 : 1;
  std::vector<std::vector<Rat>> coords;
  for (const QMatrix& c : a.relations) {
    std::vector<Rat> v(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [i, j] = pairs[p];
      v[p] = (i == j) ? c(i, i) : c(i, j) + sign * c(j, i);
    }
    coords.push_back(std::move(v));
  }
  return coords;
}

QMatrix koszul_pairing_matrix(int n, int d) {
  // <x_i x_j, [a_k, a_l]> = s1 d_ik d_jl - s2 d_il d_jk with
  // s1 = (-1)^{|y||a|+|x|+|a|} and s2 = (-1)^{|a||b|+|y||b|+|x|+|b|};
  // for |x| = d, |a| = d-1 these collapse to s1 = -1 and -s2 = (-1)^{d-1}.
  const auto pairs = weight2_pairs(n, d);
  const int cross = d % 2 ? 1 : -1;  // (-1)^{d-1}
  QMatrix mat(pairs.size(), pairs.size());
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      Rat v = 0;
      if (i == k && j == l) v -= 1;
      if (i == l && j == k) v += cross;
      mat(a, b) = v;
    }
  return mat;
}

std::vector<std::vector<Rat>> lie_dual_relation_coords(
    const QuadraticAlgebra& a) {
  const auto pairs = weight2_pairs(a.n, a.gen_degree);
  const QMatrix pairing = koszul_pairing_matrix(a.n, a.gen_degree);
  if (pairing.rank() != pairs.size())
    throw ConsistencyError("degenerate weight-2 pairing");

  const auto rel = relation_coords(a);
  if (rel.empty()) {
    // no relations: the orthogonal complement is everything
    return QMatrix(0, pairs.size()).kernel_basis();
  }
  return (QMatrix::from_rows(rel) * pairing).kernel_basis();
}

std::vector<std::vector<Rat>> algebra_dual_relation_coords(
    int n, int d, const std::vector<std::vector<Rat>>& lie_coords) {
  const auto pairs = weight2_pairs(n, d);
  const QMatrix pairing = koszul_pairing_matrix(n, d);
  if (lie_coords.empty()) return QMatrix(0, pairs.size()).kernel_basis();
  // t is a relation iff <t, lambda> = 0 for every dual relation lambda
  QMatrix rows(lie_coords.size(), pairs.size());
  for (std::size_t k = 0; k < lie_coords.size(); ++k) {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      Rat acc = 0;
      for (std::size_t q = 0; q < pairs.size(); ++q)
        acc += pairing(p, q) * lie_coords[k][q];
      rows(k, p) = std::move(acc);
    }
  }
  return rows.kernel_basis();
}

LiePresentation quadratic_dual_lie(const QuadraticAlgebra& a) {
  if (a.gen_degree < 2)
    throw DimensionError("dual generators would have degree < 1");
  const GeneratorSpec gens(a.n, a.gen_degree - 1);
  const auto pairs = weight2_pairs(a.n, a.gen_degree);

  LiePresentation out{gens, {}};
  for (const auto& lambda : lie_dual_relation_coords(a)) {
    NCPoly rel;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (lambda[p] == 0) continue;
      rel.axpy(lambda[p],
               graded_bracket(NCPoly::generator(pairs[p].first),
                              NCPoly::generator(pairs[p].second), gens));
    }
    out.relations.push_back(std::move(rel));
  }
  return out;
}

bool froberg_check(const QuadraticAlgebra& a, long n, std::size_t order) {
  const std::size_t ord = std::min(order, a.poincare.order());
  return (a.poincare.at_neg_z() * ul_series(n, ord)).is_one();
}

}  // namespace hiconn
