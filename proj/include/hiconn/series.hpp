#pragma once

// Truncated formal power series with exact rational coefficients. A series
// of order N carries coefficients c_0..c_N; all arithmetic is exact through
// order N and silently discards higher terms.

#include "hiconn/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hiconn {

class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1) {}

  static PowerSeries one(std::size_t order) {
    PowerSeries s(order);
    s.c_[0] = 1;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const Rat& coeff(std::size_t k) const { return c_.at(k); }
  void set_coeff(std::size_t k, Rat v) { c_.at(k) = std::move(v); }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const PowerSeries& o) const = default;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;

  // 1/this; requires a unit constant term.
  PowerSeries reciprocal() const;

  // z -> -z
  PowerSeries at_neg_z() const;

  // (1 + sign*z^m)^e for integer e of either sign, m >= 1.
  static PowerSeries binomial_factor(int sign, std::size_t m, long e,
                                     std::size_t order);

  // log of a series with constant term 1, exp of one with constant term 0.
  PowerSeries log() const;
  PowerSeries exp() const;

  bool is_one() const;

  std::string to_string() const;  // "1, 2, 3/2, ..." by ascending degree

 private:
  std::vector<Rat> c_;
};

}  // namespace hiconn
