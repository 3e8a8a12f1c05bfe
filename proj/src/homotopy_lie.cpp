#include "hiconn/homotopy_lie.hpp"

namespace hiconn {

ManifoldModel::ManifoldModel(int d, QMatrix q, std::optional<int> genus)
    : d_(d), q_(std::move(q)), genus_(genus) {
  if (d_ < 3) throw DimensionError("ManifoldModel requires d >= 3");
  if (q_.rows() != q_.cols() || q_.rows() == 0)
    throw DimensionError("intersection matrix must be square and nonempty");
  if (!q_.is_integral())
    throw DimensionError("intersection matrix must be integral");
  const int sign = d_ % 2 ? -1 : 1;
  for (std::size_t i = 0; i < q_.rows(); ++i) {
    if (d_ % 2 && q_(i, i) != 0)
      throw DimensionError("odd d requires zero diagonal in q");
    for (std::size_t j = 0; j < q_.cols(); ++j)
      if (q_(i, j) != sign * q_(j, i))
        throw DimensionError("q_ij = (-1)^d q_ji violated");
  }
  if (q_.rank() != q_.rows())
    throw DimensionError("intersection matrix must be invertible over Q");
}

NCPoly relation_element(const ManifoldModel& m) {
  const GeneratorSpec spec = m.generator_spec();
  NCPoly q_rel;
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      const Rat& qij = m.q()(i, j);
      if (qij == 0) continue;
      q_rel.axpy(qij / 2,
                 graded_bracket(NCPoly::generator(i), NCPoly::generator(j),
                                spec));
    }
  return q_rel;
}

// Shared construction: echelon the ideal spanning set first, then sweep the
// free-Lie basis; survivors become the quotient basis.
LieSliceBasis make_slice(const GeneratorSpec& spec, int r,
                         const std::vector<NCPoly>& ideal_weight_r,
                         const Caps& caps) {
  auto ech = std::make_shared<RowEchelon>();
  for (const NCPoly& v : ideal_weight_r)
    ech->insert(ncpoly_to_sparse(v, spec.n));

  LieSliceBasis slice;
  slice.weight_ = r;
  slice.n_ = spec.n;
  slice.ideal_ordinals_ = ech->rank();

  // The basis representatives are the stored echelon rows themselves (the
  // free-basis sweep reduced modulo the ideal), so coords() is expressed in
  // exactly the basis handed out here.
  for (const NCPoly& b : free_lie_weight_basis(spec, r, caps)) {
    const long ordinal = ech->insert(ncpoly_to_sparse(b, spec.n));
    if (ordinal < 0) continue;
    SparseVec row;
    for (const auto& [col, x] : ech->stored_row(ordinal).ent)
      row.emplace_back(col, Rat(x));
    slice.basis_.push_back(sparse_to_ncpoly(row, spec.n, r));
  }
  slice.ech_ = std::move(ech);
  return slice;
}

std::vector<Rat> LieSliceBasis::coords(const NCPoly& v) const {
  std::vector<Rat> out(basis_.size());
  if (v.is_zero()) return out;
  if (v.weight() != weight_)
    throw DimensionError("coords: weight mismatch");
  std::vector<std::pair<long, Rat>> used;
  SparseVec rem = ech_->reduce(ncpoly_to_sparse(v, n_), &used);
  if (!rem.empty())
    throw ConsistencyError("element lies outside the slice span");
  for (const auto& [ordinal, c] : used) {
    const long k = ordinal - static_cast<long>(ideal_ordinals_);
    if (k >= 0) out[k] = c;
  }
  return out;
}

namespace {

// Weight-r component of the ideal (Q): left-normed ad-words of generators
// applied to Q, trimmed to a basis at every intermediate weight.
std::vector<NCPoly> ideal_weight_component(const ManifoldModel& m, int r,
                                           const Caps& caps) {
  if (r < 2) return {};
  check_caps(m.n(), r, caps);
  const GeneratorSpec spec = m.generator_spec();
  std::vector<NCPoly> layer{relation_element(m)};
  for (int w = 3; w <= r; ++w) {
    RowEchelon ech;
    std::vector<NCPoly> next;
    for (const NCPoly& v : layer)
      for (int i = 0; i < m.n(); ++i) {
        NCPoly cand = graded_bracket(NCPoly::generator(i), v, spec);
        if (cand.is_zero()) continue;
        if (ech.insert(ncpoly_to_sparse(cand, spec.n)) >= 0)
          next.push_back(std::move(cand));
      }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

LieSliceBasis quotient_slice(const ManifoldModel& m, int r, const Caps& caps) {
  if (r < 1) throw DimensionError("quotient_slice requires r >= 1");
  return make_slice(m.generator_spec(), r, ideal_weight_component(m, r, caps),
                    caps);
}

LieSliceBasis free_slice(const GeneratorSpec& spec, int r, const Caps& caps) {
  if (r < 1) throw DimensionError("free_slice requires r >= 1");
  return make_slice(spec, r, {}, caps);
}

long epsilon_closed(long n, Parity d_parity, int r) {
  if (n < 2) throw DimensionError("epsilon_closed requires n >= 2");
  if (r < 1) throw DimensionError("epsilon_closed requires r >= 1");
  Rat sum = 0;
  for (long ell = 1; ell <= r; ++ell) {
    if (r % ell) continue;
    const int mu = mobius(ell);
    if (mu == 0) continue;
    const long m = r / ell;
    Rat inner = 0;
    for (long q = 0; 2 * q <= m; ++q) {
      const long p = m - 2 * q;
      Rat term(int_pow(Int(n), static_cast<unsigned long>(p)) *
               binomial(Int(p + q), static_cast<unsigned long>(p)));
      term /= Rat(p + q);
      if (q & 1) term = -term;
      inner += term;
    }
    Rat contrib = Rat(mu) / Rat(ell) * inner;
    if (d_parity == Parity::even && ((r + m) & 1)) contrib = -contrib;
    sum += contrib;
  }
  const long eps = to_long_checked(sum, "epsilon_closed");
  if (eps < 0)
    throw ConsistencyError("negative epsilon at r=" + std::to_string(r) +
                           ": sign-convention bug");
  return eps;
}

PowerSeries ul_series(long n, std::size_t order) {
  if (order < 1) throw DimensionError("ul_series requires order >= 1");
  PowerSeries s(order);
  s.set_coeff(0, 1);
  if (order >= 1) s.set_coeff(1, n);
  for (std::size_t r = 2; r <= order; ++r)
    s.set_coeff(r, Rat(n) * s.coeff(r - 1) - s.coeff(r - 2));
  return s;
}

WeightDims epsilon_from_pbw(long n, Parity d_parity, std::size_t order) {
  PowerSeries rest = ul_series(n, order);
  WeightDims eps;
  for (std::size_t r = 1; r <= order; ++r) {
    const long e = to_long_checked(rest.coeff(r), "PBW coefficient");
    if (e < 0)
      throw ConsistencyError("negative PBW dimension at r=" +
                             std::to_string(r));
    eps[static_cast<int>(r)] = e;
    if (e == 0) continue;
    // divide out this weight's factor: exterior for odd homological degree,
    // polynomial for even
    const bool exterior = (d_parity == Parity::even) && (r % 2 == 1);
    const PowerSeries inverse_factor =
        exterior ? PowerSeries::binomial_factor(+1, r, -e, order)
                 : PowerSeries::binomial_factor(-1, r, e, order);
    rest = rest * inverse_factor;
  }
  return eps;
}

QMatrix adjoint_block_matrix(const ManifoldModel& m, const LieSliceBasis& from,
                             const LieSliceBasis& to) {
  const GeneratorSpec spec = m.generator_spec();
  const std::size_t rows = m.n() * to.dim();
  QMatrix mat(rows, from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    for (int i = 0; i < m.n(); ++i) {
      const NCPoly br =
          graded_bracket(NCPoly::generator(i), from.basis()[j], spec);
      std::vector<Rat> c = to.coords(br);
      for (std::size_t k = 0; k < to.dim(); ++k)
        mat(i * to.dim() + k, j) = std::move(c[k]);
    }
  }
  return mat;
}

WeightDims center_dims(const ManifoldModel& m, int rmax, const Caps& caps) {
  if (rmax < 1) throw DimensionError("center_dims requires rmax >= 1");
  WeightDims out;
  LieSliceBasis cur = quotient_slice(m, 1, caps);
  for (int r = 1; r <= rmax; ++r) {
    LieSliceBasis next = quotient_slice(m, r + 1, caps);
    const QMatrix ad = adjoint_block_matrix(m, cur, next);
    out[r] = static_cast<long>(cur.dim() - ad.rank());
    cur = std::move(next);
  }
  return out;
}

}  // namespace hiconn
