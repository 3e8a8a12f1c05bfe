#pragma once

// Free graded Lie algebras on n generators of one common degree, realized
// inside the tensor algebra via graded commutators, together with the Witt
// dimension formula they are checked against.

#include "hiconn/ncpoly.hpp"

#include <vector>

namespace hiconn {

// Moebius function by trial factorization.
int mobius(long ell);

// Dimension of the weight-r component of the free graded Lie algebra:
//   eta_r = (1/r) sum_{l | r} sigma * mu(l) * n^{r/l},
//   sigma = (-1)^{gen_degree * (r + r/l)}.
// Throws DimensionError for r < 1 and ConsistencyError if the sum fails to
// be divisible by r.
long witt_dim(const GeneratorSpec& spec, int r);

// Bases of the weight components 1..rmax, built bottom-up: weight 1 is the
// generators, and weight w is an independent subset of the brackets
// [generator, basis element of weight w-1]. Every element is a left-normed
// bracket, and the span at each weight equals the span of all left-normed
// bracket words of that length.
std::vector<std::vector<NCPoly>> free_lie_basis_tower(const GeneratorSpec& spec,
                                                      int rmax,
                                                      const Caps& caps = {});

// The weight-r component only; returns exactly witt_dim(spec, r) elements.
std::vector<NCPoly> free_lie_weight_basis(const GeneratorSpec& spec, int r,
                                          const Caps& caps = {});

}  // namespace hiconn
