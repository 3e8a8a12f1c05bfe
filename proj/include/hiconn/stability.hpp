#pragma once

// Range arithmetic for homological stability, rational homotopy of the
// block-diffeomorphism quotient, and hyperbolic-form predicates.

#include "hiconn/qmatrix.hpp"
#include "hiconn/series.hpp"

#include <optional>
#include <vector>

namespace hiconn {

// H(Z^g, eps): Z^{2g} with pairing matrix [[0, I], [eps I, 0]],
// eps = (-1)^d.
struct HyperbolicForm {
  int g;
  int epsilon;
  QMatrix q;  // 2g x 2g
};

HyperbolicForm hyperbolic_form(int g, int d);

// lambda^t q lambda == q over the integers.
bool is_form_automorphism(const QMatrix& lambda, const QMatrix& q);

// rank of pi_k(G/O) tensor Q: 1 for positive k divisible by 4, else 0.
int go_pi_rank(long k);

// rank of the abelianized pi_k of the block quotient: 2g * go_pi_rank(k+d).
// Requires d > 2, k >= 1.
long block_quotient_pi_rank(int d, int g, long k);

// Betti series of the block quotient: free graded commutative algebra on 2g
// generators in each degree k >= 1 with k + d = 0 mod 4.
PowerSeries block_quotient_homology_series(int d, int g, std::size_t cutoff);

// rank of pi_{k-1}(Diff_D) tensor Q inside the window 1 < k < d-1;
// nullopt outside it.
std::optional<long> diff_pi_rank(int d, int g, long k);

// Largest k >= 0 with k < min(d-2, (g-5)/2), or -1 when empty. d > 2.
long stable_range_max_k(int d, int g);

// Connectivity (g-4-k)/2 of the stabilization map with k-th tensor-power
// coefficients; k >= 1.
Rat charney_connectivity(int g, int k);

struct RangeReport {
  int d, g;
  long max_stable_k;
  // per k = 1..kmax
  std::vector<long> block_pi_rank;
  std::vector<std::optional<long>> diff_rank;
  std::vector<Rat> charney;
};

RangeReport stability_report(int d, int g, int kmax);

}  // namespace hiconn
