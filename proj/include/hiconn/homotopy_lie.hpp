#pragma once

// The homotopy Lie algebra of a highly connected manifold: the free graded
// Lie algebra on n degree-(d-1) generators modulo the single quadratic
// relation carried by the intersection form. Weight-component dimensions
// come by three independent routes (closed formula, power-series inversion,
// explicit quotient bases) that are cross-checked against each other.

#include "hiconn/freelie.hpp"
#include "hiconn/manifold.hpp"
#include "hiconn/series.hpp"

#include <map>
#include <memory>
#include <vector>

namespace hiconn {

using WeightDims = std::map<int, long>;

enum class Parity { even, odd };

inline Parity parity_of(int x) { return x % 2 ? Parity::odd : Parity::even; }

// Q = 1/2 sum_{i,j} q_ij [alpha_i, alpha_j], a weight-2 element of the free
// Lie algebra on the manifold's generators.
NCPoly relation_element(const ManifoldModel& m);

// A weight component of L(alpha_1..alpha_n)/(ideal), realized inside the
// tensor algebra. The ideal rows span the weight-r slice of the ideal; the
// basis elements represent a complement. Immutable after construction.
class LieSliceBasis {
 public:
  int weight() const { return weight_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<NCPoly>& basis() const { return basis_; }
  std::size_t ideal_dim() const { return ideal_ordinals_; }

  // Coordinates of a weight-matching Lie element in the quotient basis.
  // Throws ConsistencyError when v does not lie in freeLie(r) + ideal.
  std::vector<Rat> coords(const NCPoly& v) const;

 private:
  friend LieSliceBasis make_slice(const GeneratorSpec&, int,
                                  const std::vector<NCPoly>&, const Caps&);
  int weight_ = 0;
  int n_ = 0;
  std::size_t ideal_ordinals_ = 0;  // rows [0, ideal_ordinals_) are ideal rows
  std::vector<NCPoly> basis_;
  std::shared_ptr<const RowEchelon> ech_;
};

// Weight-r slice of the quotient by the ideal generated by Q.
LieSliceBasis quotient_slice(const ManifoldModel& m, int r,
                             const Caps& caps = {});

// Weight-r slice of the free Lie algebra itself (empty ideal).
LieSliceBasis free_slice(const GeneratorSpec& spec, int r,
                         const Caps& caps = {});

// Closed formula for the quotient dimensions:
//   eps_r = sum_{l|r} sigma (mu(l)/l) sum_{p+2q=r/l} (-1)^q n^p C(p+q,p)/(p+q),
//   sigma = (-1)^{(d-1)(r + r/l)}.
// Requires n >= 2, r >= 1; the rational arithmetic must cancel exactly.
long epsilon_closed(long n, Parity d_parity, int r);

// Hilbert series of the universal enveloping algebra, 1/(1 - n z + z^2);
// coefficients satisfy u_0 = 1, u_1 = n, u_r = n u_{r-1} - u_{r-2}.
PowerSeries ul_series(long n, std::size_t order);

// Quotient dimensions recovered from ul_series by inverting the
// Poincare-Birkhoff-Witt product
//   d odd:  prod_r (1-z^r)^{-eps_r}
//   d even: prod_{r odd} (1+z^r)^{eps_r} * prod_{r even} (1-z^r)^{-eps_r}
// by successive coefficient matching. Each eps_r must come out a
// nonnegative integer.
WeightDims epsilon_from_pbw(long n, Parity d_parity, std::size_t order);

// Matrix of xi -> ([alpha_1,xi],...,[alpha_n,xi]) from the weight-r slice to
// the weight-(r+1) slice; (n * dim L(r+1)) x dim L(r).
QMatrix adjoint_block_matrix(const ManifoldModel& m, const LieSliceBasis& from,
                             const LieSliceBasis& to);

// dim { xi in L(r) : [alpha_i, xi] = 0 for all i } for r = 1..rmax.
WeightDims center_dims(const ManifoldModel& m, int rmax, const Caps& caps = {});

}  // namespace hiconn
