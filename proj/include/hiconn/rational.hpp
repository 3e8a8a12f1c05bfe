#pragma once

// Exact arithmetic base layer: arbitrary-precision integers and rationals
// (GMP) plus the error types shared by all modules.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hiconn {

using Int = mpz_class;
using Rat = mpq_class;

// Inputs with incompatible shapes or out-of-domain parameters.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed the configured enumeration caps.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exactness identity failed internally; indicates a bug, not bad input.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// A theorem-level hypothesis (n >= 3, d > 2, ...) is violated.
struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact conversion; throws ConsistencyError when q is not an integer or does
// not fit in a long.
inline long to_long_checked(const Rat& q, const char* what = "value") {
  if (!is_integer(q))
    throw ConsistencyError(std::string(what) + " is not an integer: " +
                           q.get_str());
  const Int& num = q.get_num();
  if (!num.fits_slong_p())
    throw ConsistencyError(std::string(what) + " does not fit in a long: " +
                           q.get_str());
  return num.get_si();
}

// C(n, k) for integer n (possibly negative), k >= 0.
inline Int binomial(const Int& n, unsigned long k) {
  Int num = 1, den = 1;
  for (unsigned long i = 0; i < k; ++i) {
    num *= n - static_cast<long>(i);
    den *= static_cast<long>(i + 1);
  }
  // den always divides num for integer n
  return num / den;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace hiconn
