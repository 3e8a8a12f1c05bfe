#include "hiconn/stability.hpp"

#include "hiconn/mtheta.hpp"

#include <map>

namespace hiconn {

HyperbolicForm hyperbolic_form(int g, int d) {
  if (g < 1) throw DimensionError("hyperbolic_form requires g >= 1");
  const int eps = d % 2 ? -1 : 1;
  QMatrix q(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    q(i, g + i) = 1;
    q(g + i, i) = eps;
  }
  return {g, eps, std::move(q)};
}

bool is_form_automorphism(const QMatrix& lambda, const QMatrix& q) {
  if (lambda.rows() != lambda.cols() || q.rows() != q.cols() ||
      lambda.rows() != q.rows())
    throw DimensionError("is_form_automorphism: size mismatch");
  if (!lambda.is_integral() || !q.is_integral())
    throw DimensionError("is_form_automorphism: integer matrices expected");
  return lambda.transpose() * q * lambda == q;
}

int go_pi_rank(long k) { return (k > 0 && k % 4 == 0) ? 1 : 0; }

long block_quotient_pi_rank(int d, int g, long k) {
  if (d <= 2) throw HypothesisError("block_quotient_pi_rank requires d > 2");
  if (k < 1) throw DimensionError("block_quotient_pi_rank requires k >= 1");
  return 2L * g * go_pi_rank(k + d);
}

PowerSeries block_quotient_homology_series(int d, int g, std::size_t cutoff) {
  if (d <= 2)
    throw HypothesisError("block_quotient_homology_series requires d > 2");
  std::map<int, long> gens;
  for (std::size_t k = 1; k <= cutoff; ++k)
    if ((k + d) % 4 == 0) gens[static_cast<int>(k)] = 2L * g;
  return free_graded_comm_series(gens, cutoff);
}

std::optional<long> diff_pi_rank(int d, int g, long k) {
  if (d <= 2) throw HypothesisError("diff_pi_rank requires d > 2");
  if (!(1 < k && k < d - 1)) return std::nullopt;
  return 2L * g * go_pi_rank(k + d);
}

long stable_range_max_k(int d, int g) {
  if (d <= 2) throw HypothesisError("stable_range_max_k requires d > 2");
  const long from_d = d - 3;  // k < d-2
  // k < (g-5)/2, i.e. 2k <= g-6
  const long num = g - 6;
  const long from_g = num >= 0 ? num / 2 : -((-num + 1) / 2);
  const long k = std::min(from_d, from_g);
  return k >= 0 ? k : -1;
}

Rat charney_connectivity(int g, int k) {
  if (k < 1) throw DimensionError("charney_connectivity requires k >= 1");
  Rat c(g - 4 - k, 2);
  c.canonicalize();
  return c;
}

RangeReport stability_report(int d, int g, int kmax) {
  RangeReport rep{d, g, stable_range_max_k(d, g), {}, {}, {}};
  for (int k = 1; k <= kmax; ++k) {
    rep.block_pi_rank.push_back(block_quotient_pi_rank(d, g, k));
    rep.diff_rank.push_back(diff_pi_rank(d, g, k));
    rep.charney.push_back(charney_connectivity(g, k));
  }
  return rep;
}

}  // namespace hiconn
