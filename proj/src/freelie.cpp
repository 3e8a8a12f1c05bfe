#include "hiconn/freelie.hpp"

#include "hiconn/qmatrix.hpp"

namespace hiconn {

int mobius(long ell) {
  if (ell < 1) throw DimensionError("mobius requires ell >= 1");
  int primes = 0;
  for (long p = 2; p * p <= ell; ++p) {
    if (ell % p) continue;
    ell /= p;
    if (ell % p == 0) return 0;  // square factor
    ++primes;
  }
  if (ell > 1) ++primes;
  return primes % 2 ? -1 : 1;
}

long witt_dim(const GeneratorSpec& spec, int r) {
  if (r < 1) throw DimensionError("witt_dim requires r >= 1");
  Int sum = 0;
  for (long ell = 1; ell <= r; ++ell) {
    if (r % ell) continue;
    const int mu = mobius(ell);
    if (mu == 0) continue;
    const long m = r / ell;
    Int term = int_pow(Int(spec.n), static_cast<unsigned long>(m));
    term *= mu;
    if (spec.parity() && ((r + m) & 1)) term = -term;
    sum += term;
  }
  if (sum % r != 0)
    throw ConsistencyError("Witt sum not divisible by r at r=" +
                           std::to_string(r));
  Int dim = sum / r;
  if (dim < 0)
    throw ConsistencyError("negative Witt dimension at r=" + std::to_string(r));
  return dim.get_si();
}

std::vector<std::vector<NCPoly>> free_lie_basis_tower(const GeneratorSpec& spec,
                                                      int rmax,
                                                      const Caps& caps) {
  if (rmax < 1) throw DimensionError("free_lie_basis_tower requires rmax >= 1");
  check_caps(spec.n, rmax, caps);

  std::vector<std::vector<NCPoly>> tower(rmax + 1);
  for (int i = 0; i < spec.n; ++i)
    tower[1].push_back(NCPoly::generator(i));

  for (int w = 2; w <= rmax; ++w) {
    RowEchelon ech;
    for (const NCPoly& b : tower[w - 1]) {
      for (int i = 0; i < spec.n; ++i) {
        NCPoly cand = graded_bracket(NCPoly::generator(i), b, spec);
        if (cand.is_zero()) continue;
        if (ech.insert(ncpoly_to_sparse(cand, spec.n)) >= 0)
          tower[w].push_back(std::move(cand));
      }
    }
  }
  return tower;
}

std::vector<NCPoly> free_lie_weight_basis(const GeneratorSpec& spec, int r,
                                          const Caps& caps) {
  if (r < 1) throw DimensionError("free_lie_weight_basis requires r >= 1");
  return free_lie_basis_tower(spec, r, caps)[r];
}

}  // namespace hiconn
