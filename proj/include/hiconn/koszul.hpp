#pragma once

// Quadratic presentations of the cohomology algebra of a highly connected
// manifold and the dual Lie presentation obtained through the signed
// pairing between products of generators and brackets.

#include "hiconn/homotopy_lie.hpp"
#include "hiconn/manifold.hpp"
#include "hiconn/series.hpp"

#include <vector>

namespace hiconn {

// Index set for the weight-2 component of a free graded commutative algebra
// on n generators of degree deg: pairs (i,j) with i<j for odd deg, i<=j for
// even deg. The weight-2 component of a free graded Lie algebra on the dual
// generators (degree deg-1) is indexed by the same pairs.
std::vector<std::pair<int, int>> weight2_pairs(int n, int deg);

struct QuadraticAlgebra {
  int n;           // number of generators
  int gen_degree;  // common cohomological degree (= d)
  // Each relation is a graded-symmetric n x n coefficient matrix c,
  // c_ij = (-1)^{gen_degree} c_ji, meaning sum c_ij x_i x_j = 0.
  std::vector<QMatrix> relations;
  PowerSeries poincare;  // weight series; 1 + n z + z^2 for manifold models
};

// Presentation of H^*(M;Q): n generators in degree d, relation space the
// kernel of c -> sum c_ij q_ij on the weight-2 component.
QuadraticAlgebra cohomology_algebra(const ManifoldModel& m,
                                    std::size_t series_order = 12);

// Relations of a quadratic algebra written in weight2_pairs coordinates.
std::vector<std::vector<Rat>> relation_coords(const QuadraticAlgebra& a);

// Matrix of the signed pairing <x_i x_j, [alpha_k, alpha_l]> between the
// weight-2 pair bases on the algebra side (degree d) and Lie side
// (degree d-1).
QMatrix koszul_pairing_matrix(int n, int d);

// Coordinates (over weight2_pairs) of the orthogonal complement of the
// algebra relation space on the Lie side, and the reverse direction.
std::vector<std::vector<Rat>> lie_dual_relation_coords(
    const QuadraticAlgebra& a);
std::vector<std::vector<Rat>> algebra_dual_relation_coords(
    int n, int d, const std::vector<std::vector<Rat>>& lie_coords);

struct LiePresentation {
  GeneratorSpec gens;
  std::vector<NCPoly> relations;  // inside the tensor algebra
};

// The Koszul-dual Lie presentation: dual generators of degree d-1 with the
// orthogonal relation space. For a manifold model the relation span is the
// line through relation_element(m).
LiePresentation quadratic_dual_lie(const QuadraticAlgebra& a);

// True iff poincare(-z) * ul_series(n) == 1 through the given order.
bool froberg_check(const QuadraticAlgebra& a, long n, std::size_t order);

}  // namespace hiconn
