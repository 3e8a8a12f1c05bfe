#pragma once

// Ranks of rational homotopy groups of the self-equivalence spaces of a
// highly connected manifold, by closed formula and by explicit homology of
// the associated three-term chain complexes; the cross-check between the
// two routes is the point of this module.

#include "hiconn/homotopy_lie.hpp"
#include "hiconn/manifold.hpp"

#include <array>

namespace hiconn {

enum class AutVariant {
  closed,        // aut(M)
  based,         // aut_*(M)
  rel_boundary,  // aut_dN(N), N = M minus an open disk
};

// One weight slice of the complex
//   L(r) --d1--> L(r+1)^n --d0--> L(r+2)
//   d1(xi) = ([alpha_1,xi],...,[alpha_n,xi]),
//   d0(zeta_1,...,zeta_n) = sum_{i,j} q_ij [alpha_i, zeta_j],
// in quotient-basis coordinates. d0*d1 = 0 is verified at construction.
struct ChainComplexSlice {
  int r;
  QMatrix d1;  // (n * dim L(r+1)) x dim L(r)
  QMatrix d0;  // dim L(r+2) x (n * dim L(r+1))
  std::array<std::size_t, 3> dims;  // dim L(r), n*dim L(r+1), dim L(r+2)
};

ChainComplexSlice build_complex_slice(const ManifoldModel& m, int r,
                                      const Caps& caps = {});

// Theorem-level closed formulas for the rank of pi_{r(d-1)} of the chosen
// variant; requires n >= 3 (the quotient Lie algebra must have trivial
// center) and d >= 2. Only the parity of d enters.
//   rel_boundary: n*eta_{r+1} - eta_{r+2}
//   based:        n*eps_{r+1} - eps_{r+2}
//   closed:       n*eps_{r+1} - eps_{r+2} - eps_r
long aut_rank_closed(long n, int d, int r, AutVariant variant);

// The same ranks from exact homology computations; n = 2 is allowed here
// (instructive: the formulas fail when the center is nontrivial).
long aut_rank_homology(const ManifoldModel& m, int r, AutVariant variant,
                       const Caps& caps = {});

// rank(d0) == dim L(r+2)
bool verify_surjectivity_d0(const ManifoldModel& m, int r,
                            const Caps& caps = {});

}  // namespace hiconn
