#include "hiconn/mtheta.hpp"

#include "hiconn/rational.hpp"

namespace hiconn {

MTGeneratorSpec MTGeneratorSpec::make(int d, int cutoff) {
  if (d < 1) throw DimensionError("MTGeneratorSpec requires d >= 1");
  if (cutoff < 0) throw DimensionError("cutoff must be nonnegative");
  MTGeneratorSpec spec{d, cutoff, {}};
  spec.base_generators.emplace_back("e", 2 * d);
  for (int l = (d + 4) / 4; l <= d - 1; ++l)  // ceil((d+1)/4)
    spec.base_generators.emplace_back("p" + std::to_string(l), 4 * l);
  return spec;
}

namespace {

void enumerate_monomials(const std::vector<int>& degrees, std::size_t from,
                         int degree_so_far, int max_degree, int shift,
                         std::map<int, long>& out) {
  if (degree_so_far > shift) ++out[degree_so_far - shift];
  for (std::size_t i = from; i < degrees.size(); ++i) {
    if (degree_so_far + degrees[i] > max_degree) continue;
    enumerate_monomials(degrees, i, degree_so_far + degrees[i], max_degree,
                        shift, out);
  }
}

}  // namespace

std::map<int, long> loopspace_generator_degrees(const MTGeneratorSpec& spec) {
  std::vector<int> degrees;
  for (const auto& [name, deg] : spec.base_generators) degrees.push_back(deg);
  std::map<int, long> out;
  enumerate_monomials(degrees, 0, 0, 2 * spec.d + spec.cutoff, 2 * spec.d,
                      out);
  return out;
}

PowerSeries free_graded_comm_series(const std::map<int, long>& generators,
                                    std::size_t cutoff) {
  PowerSeries series = PowerSeries::one(cutoff);
  for (const auto& [deg, mult] : generators) {
    if (deg < 1) throw DimensionError("generator degrees must be >= 1");
    if (static_cast<std::size_t>(deg) > cutoff) continue;
    const PowerSeries factor =
        deg % 2 ? PowerSeries::binomial_factor(+1, deg, mult, cutoff)
                : PowerSeries::binomial_factor(-1, deg, -mult, cutoff);
    series = series * factor;
  }
  return series;
}

PowerSeries omega_mt_betti(const MTGeneratorSpec& spec) {
  return free_graded_comm_series(loopspace_generator_degrees(spec),
                                 spec.cutoff);
}

}  // namespace hiconn
