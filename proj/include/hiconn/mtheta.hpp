#pragma once

// Generator degrees and Betti series of the rational cohomology of the
// stable target: a free graded commutative algebra on the positive-degree
// monomials of a polynomial algebra (Euler class plus a range of Pontryagin
// classes), shifted down by the manifold dimension.

#include "hiconn/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hiconn {

struct MTGeneratorSpec {
  int d;       // half-dimension, >= 1
  int cutoff;  // maximal output degree
  // Euler class e of degree 2d, then p_l of degree 4l for
  // ceil((d+1)/4) <= l <= d-1 (empty range for d = 1).
  std::vector<std::pair<std::string, int>> base_generators;

  static MTGeneratorSpec make(int d, int cutoff);
};

// Multiset degree -> multiplicity of the monomials in the base generators
// of total degree > 2d, shifted down by 2d and capped at cutoff.
std::map<int, long> loopspace_generator_degrees(const MTGeneratorSpec& spec);

// Betti series of the free graded commutative algebra on the given
// generator multiset: even degrees contribute 1/(1-t^k), odd ones (1+t^k).
PowerSeries free_graded_comm_series(const std::map<int, long>& generators,
                                    std::size_t cutoff);

PowerSeries omega_mt_betti(const MTGeneratorSpec& spec);

}  // namespace hiconn
