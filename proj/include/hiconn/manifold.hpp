#pragma once

// Rational model of a (d-1)-connected 2d-manifold: half-dimension d and the
// integral intersection matrix q on middle cohomology.

#include "hiconn/ncpoly.hpp"
#include "hiconn/qmatrix.hpp"

#include <optional>

namespace hiconn {

class ManifoldModel {
 public:
  // Validates on construction: d >= 3, q integral and invertible over Q,
  // q_ij = (-1)^d q_ji, and q_ii = 0 when d is odd.
  ManifoldModel(int d, QMatrix q, std::optional<int> genus = std::nullopt);

  int d() const { return d_; }
  int n() const { return static_cast<int>(q_.rows()); }
  const QMatrix& q() const { return q_; }
  std::optional<int> genus() const { return genus_; }

  int gen_degree() const { return d_ - 1; }
  GeneratorSpec generator_spec() const { return {n(), gen_degree()}; }

 private:
  int d_;
  QMatrix q_;
  std::optional<int> genus_;
};

}  // namespace hiconn
