#include "hiconn/aut_ranks.hpp"

namespace hiconn {

ChainComplexSlice build_complex_slice(const ManifoldModel& m, int r,
                                      const Caps& caps) {
  if (r < 1) throw DimensionError("build_complex_slice requires r >= 1");
  const GeneratorSpec spec = m.generator_spec();
  const int n = m.n();

  const LieSliceBasis s0 = quotient_slice(m, r, caps);
  const LieSliceBasis s1 = quotient_slice(m, r + 1, caps);
  const LieSliceBasis s2 = quotient_slice(m, r + 2, caps);

  ChainComplexSlice slice;
  slice.r = r;
  slice.dims = {s0.dim(), n * s1.dim(), s2.dim()};
  slice.d1 = adjoint_block_matrix(m, s0, s1);

  // column (block j, basis element b): sum_i q_ij [alpha_i, b]
  slice.d0 = QMatrix(s2.dim(), n * s1.dim());
  for (int j = 0; j < n; ++j) {
    for (std::size_t b = 0; b < s1.dim(); ++b) {
      NCPoly image;
      for (int i = 0; i < n; ++i) {
        const Rat& qij = m.q()(i, j);
        if (qij == 0) continue;
        image.axpy(qij, graded_bracket(NCPoly::generator(i), s1.basis()[b],
                                       spec));
      }
      std::vector<Rat> c = s2.coords(image);
      for (std::size_t k = 0; k < s2.dim(); ++k)
        slice.d0(k, j * s1.dim() + b) = std::move(c[k]);
    }
  }

  if (!(slice.d0 * slice.d1).is_zero())
    throw ConsistencyError("d0 * d1 != 0: the relation ideal is leaking");
  return slice;
}

long aut_rank_closed(long n, int d, int r, AutVariant variant) {
  if (n < 3)
    throw HypothesisError(
        "closed rank formulas require n >= 3 (trivial center)");
  if (d < 2) throw DimensionError("aut_rank_closed requires d >= 2");
  if (r < 1) throw DimensionError("aut_rank_closed requires r >= 1");

  if (variant == AutVariant::rel_boundary) {
    const GeneratorSpec spec(static_cast<int>(n), d - 1);
    return n * witt_dim(spec, r + 1) - witt_dim(spec, r + 2);
  }
  const Parity par = parity_of(d);
  const long rank = n * epsilon_closed(n, par, r + 1) -
                    epsilon_closed(n, par, r + 2) -
                    (variant == AutVariant::closed
                         ? epsilon_closed(n, par, r)
                         : 0);
  return rank;
}

namespace {

// Kernel dimension of (zeta_1,...,zeta_n) -> sum_{i,j} q_ij [zeta_i, iota_j]
// on the free Lie algebra, the weight slice relevant for degree r(d-1).
long rel_boundary_homology(const ManifoldModel& m, int r, const Caps& caps) {
  const GeneratorSpec spec = m.generator_spec();
  const int n = m.n();
  const LieSliceBasis s1 = free_slice(spec, r + 1, caps);
  const LieSliceBasis s2 = free_slice(spec, r + 2, caps);

  QMatrix mat(s2.dim(), n * s1.dim());
  for (int i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < s1.dim(); ++b) {
      NCPoly image;
      for (int j = 0; j < n; ++j) {
        const Rat& qij = m.q()(i, j);
        if (qij == 0) continue;
        image.axpy(qij, graded_bracket(s1.basis()[b], NCPoly::generator(j),
                                       spec));
      }
      std::vector<Rat> c = s2.coords(image);
      for (std::size_t k = 0; k < s2.dim(); ++k)
        mat(k, i * s1.dim() + b) = std::move(c[k]);
    }
  }
  return static_cast<long>(n * s1.dim() - mat.rank());
}

}  // namespace

long aut_rank_homology(const ManifoldModel& m, int r, AutVariant variant,
                       const Caps& caps) {
  if (r < 1) throw DimensionError("aut_rank_homology requires r >= 1");
  if (variant == AutVariant::rel_boundary)
    return rel_boundary_homology(m, r, caps);

  const ChainComplexSlice slice = build_complex_slice(m, r, caps);
  const long ker_d0 =
      static_cast<long>(slice.dims[1]) - static_cast<long>(slice.d0.rank());
  if (variant == AutVariant::based) return ker_d0;
  return ker_d0 - static_cast<long>(slice.d1.rank());
}

bool verify_surjectivity_d0(const ManifoldModel& m, int r, const Caps& caps) {
  const ChainComplexSlice slice = build_complex_slice(m, r, caps);
  return slice.d0.rank() == slice.dims[2];
}

}  // namespace hiconn
