#include "hiconn/series.hpp"

#include <algorithm>

namespace hiconn {

namespace {
std::size_t common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  PowerSeries r(common_order(*this, o));
  for (std::size_t k = 0; k <= r.order(); ++k)
    r.c_[k] = c_[k] + o.c_[k];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  PowerSeries r(common_order(*this, o));
  for (std::size_t k = 0; k <= r.order(); ++k)
    r.c_[k] = c_[k] - o.c_[k];
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  PowerSeries r(common_order(*this, o));
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= r.order(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

PowerSeries PowerSeries::reciprocal() const {
  if (c_[0] == 0)
    throw DimensionError("reciprocal of a series with zero constant term");
  PowerSeries r(order());
  r.c_[0] = 1 / c_[0];
  for (std::size_t k = 1; k <= order(); ++k) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc / c_[0];
  }
  return r;
}

PowerSeries PowerSeries::at_neg_z() const {
  PowerSeries r(order());
  for (std::size_t k = 0; k <= order(); ++k)
    r.c_[k] = (k % 2 == 0) ? c_[k] : -c_[k];
  return r;
}

PowerSeries PowerSeries::binomial_factor(int sign, std::size_t m, long e,
                                         std::size_t order) {
  if (m == 0) throw DimensionError("binomial_factor requires m >= 1");
  PowerSeries r(order);
  // (1 + s z^m)^e = sum_k C(e,k) s^k z^{mk}, generalized binomial
  Rat coeff = 1;
  r.c_[0] = 1;
  for (std::size_t k = 1; m * k <= order; ++k) {
    coeff *= Rat(e - static_cast<long>(k) + 1) / Rat(static_cast<long>(k));
    if (sign < 0 && k % 2 == 1)
      r.c_[m * k] = -coeff;
    else
      r.c_[m * k] = coeff;
  }
  return r;
}

PowerSeries PowerSeries::log() const {
  if (c_[0] != 1)
    throw DimensionError("log requires constant term 1");
  // L' = f'/f, integrated with L(0)=0:  k l_k = k c_k - sum_{j<k} j l_j c_{k-j}
  PowerSeries l(order());
  for (std::size_t k = 1; k <= order(); ++k) {
    Rat acc = Rat(static_cast<long>(k)) * c_[k];
    for (std::size_t j = 1; j < k; ++j)
      acc -= Rat(static_cast<long>(j)) * l.c_[j] * c_[k - j];
    l.c_[k] = acc / Rat(static_cast<long>(k));
  }
  return l;
}

PowerSeries PowerSeries::exp() const {
  if (c_[0] != 0)
    throw DimensionError("exp requires constant term 0");
  // E' = f' E:  k e_k = sum_{j=1..k} j c_j e_{k-j}
  PowerSeries e(order());
  e.c_[0] = 1;
  for (std::size_t k = 1; k <= order(); ++k) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      acc += Rat(static_cast<long>(j)) * c_[j] * e.c_[k - j];
    e.c_[k] = acc / Rat(static_cast<long>(k));
  }
  return e;
}

bool PowerSeries::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(),
                     [](const Rat& x) { return x == 0; });
}

std::string PowerSeries::to_string() const {
  std::string s;
  for (std::size_t k = 0; k <= order(); ++k) {
    if (k) s += ", ";
    s += c_[k].get_str();
  }
  return s;
}

}  // namespace hiconn
