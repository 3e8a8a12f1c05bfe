#include "hiconn/verify.hpp"

#include "hiconn/aut_ranks.hpp"
#include "hiconn/freelie.hpp"
#include "hiconn/homotopy_lie.hpp"
#include "hiconn/koszul.hpp"
#include "hiconn/mtheta.hpp"
#include "hiconn/stability.hpp"

#include <sstream>

namespace hiconn {

QMatrix random_unimodular(int n, std::mt19937_64& rng, int ops) {
  QMatrix u = QMatrix::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> shear(-1, 1);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int s = 0; s < ops; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (kind(rng) == 0) {
      // signed swap of rows i and j keeps the determinant at +-1
      for (int c = 0; c < n; ++c) {
        Rat t = u(i, c);
        u(i, c) = -u(j, c);
        u(j, c) = t;
      }
    } else {
      const int c = shear(rng);
      if (c == 0) continue;
      for (int col = 0; col < n; ++col) u(i, col) += Rat(c) * u(j, col);
    }
  }
  return u;
}

namespace {

struct Suite {
  const VerifyOptions& opt;
  std::vector<CheckResult> results;

  bool full() const { return opt.level == VerifyLevel::full; }

  void record(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, detail});
  }
};

ManifoldModel hyperbolic_model(int g, int d) {
  return ManifoldModel(d, hyperbolic_form(g, d).q, g);
}

// A non-hyperbolic model with odd rank; only possible for even d.
ManifoldModel identity_model(int n, int d) {
  return ManifoldModel(d, QMatrix::identity(n));
}

void check_witt_oracle(Suite& s) {
  std::ostringstream bad;
  bool ok = true;
  const int nmax = s.full() ? 4 : 3;
  const int rmax = s.full() ? 6 : 4;
  for (int deg : {2, 3}) {  // gen degrees of both parities (d = 3, 4)
    for (int n = 1; n <= nmax; ++n) {
      const GeneratorSpec spec(n, deg);
      const auto tower = free_lie_basis_tower(spec, rmax, s.opt.caps);
      for (int r = 1; r <= rmax; ++r) {
        const long closed = witt_dim(spec, r);
        const long oracle = static_cast<long>(tower[r].size());
        if (closed != oracle) {
          ok = false;
          bad << " (n=" << n << ",deg=" << deg << ",r=" << r << ": " << closed
              << " vs " << oracle << ")";
        }
      }
    }
  }
  // extra reach at full level, modest weights for the wider algebras
  if (s.full()) {
    for (int n : {5, 6}) {
      for (int deg : {2, 3}) {
        const GeneratorSpec spec(n, deg);
        const auto tower = free_lie_basis_tower(spec, 4, s.opt.caps);
        for (int r = 1; r <= 4; ++r)
          if (witt_dim(spec, r) != static_cast<long>(tower[r].size())) {
            ok = false;
            bad << " (n=" << n << ",deg=" << deg << ",r=" << r << ")";
          }
      }
    }
  }
  s.record("witt-formula-vs-bracket-span", ok, bad.str());
}

void check_epsilon_routes(Suite& s) {
  std::ostringstream bad;
  bool ok = true;
  const long nmax = s.full() ? 6 : 3;
  const int rmax = s.full() ? 8 : 4;
  for (long n = 2; n <= nmax; ++n) {
    for (Parity par : {Parity::odd, Parity::even}) {
      WeightDims pbw = epsilon_from_pbw(n, par, rmax);
      for (int r = 1; r <= rmax; ++r) {
        long closed = epsilon_closed(n, par, r);
        if (s.opt.inject_fault && n == 2 && r == 2 && par == Parity::odd)
          closed += 1;
        if (closed != pbw[r]) {
          ok = false;
          bad << " (n=" << n << ",d " << (par == Parity::odd ? "odd" : "even")
              << ",r=" << r << ": closed " << closed << " vs pbw " << pbw[r]
              << ")";
        }
      }
    }
  }
  s.record("epsilon-closed-vs-pbw", ok, bad.str());
}

void check_epsilon_brute_force(Suite& s) {
  std::ostringstream bad;
  bool ok = true;
  const int rmax = s.full() ? 5 : 4;
  std::vector<ManifoldModel> models;
  models.push_back(hyperbolic_model(1, 3));
  models.push_back(hyperbolic_model(1, 4));
  models.push_back(identity_model(3, 4));
  if (s.full()) {
    models.push_back(hyperbolic_model(2, 3));
    models.push_back(hyperbolic_model(2, 4));
  }
  for (const ManifoldModel& m : models) {
    for (int r = 1; r <= rmax; ++r) {
      const long brute =
          static_cast<long>(quotient_slice(m, r, s.opt.caps).dim());
      const long closed = epsilon_closed(m.n(), parity_of(m.d()), r);
      if (brute != closed) {
        ok = false;
        bad << " (n=" << m.n() << ",d=" << m.d() << ",r=" << r << ": quotient "
            << brute << " vs closed " << closed << ")";
      }
    }
  }
  s.record("epsilon-vs-quotient-dims", ok, bad.str());
}

void check_bracket_identities(Suite& s) {
  std::mt19937_64 rng(s.opt.seed);
  bool anti_ok = true, jacobi_ok = true;
  for (int deg : {1, 2}) {
    for (int n : {2, 3}) {
      const GeneratorSpec spec(n, deg);
      const auto tower = free_lie_basis_tower(spec, 3, s.opt.caps);
      std::vector<NCPoly> pool;
      for (int w = 1; w <= 3; ++w)
        for (const NCPoly& b : tower[w]) pool.push_back(b);
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (int trial = 0; trial < 12; ++trial) {
        const NCPoly& x = pool[pick(rng)];
        const NCPoly& y = pool[pick(rng)];
        const NCPoly& z = pool[pick(rng)];
        const int px = spec.weight_parity(x.weight());
        const int py = spec.weight_parity(y.weight());

        NCPoly anti = graded_bracket(x, y, spec);
        anti.axpy(px * py ? Rat(-1) : Rat(1), graded_bracket(y, x, spec));
        if (!anti.is_zero()) anti_ok = false;

        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        NCPoly lhs = graded_bracket(x, graded_bracket(y, z, spec), spec);
        lhs.axpy(Rat(-1),
                 graded_bracket(graded_bracket(x, y, spec), z, spec));
        lhs.axpy(px * py ? Rat(1) : Rat(-1),
                 graded_bracket(y, graded_bracket(x, z, spec), spec));
        if (!lhs.is_zero()) jacobi_ok = false;
      }
    }
  }
  s.record("graded-antisymmetry", anti_ok, "");
  s.record("graded-jacobi", jacobi_ok, "");
}

void check_pbw_free_bookkeeping(Suite& s) {
  // PBW for the free graded Lie algebra: the parity-alternating product of
  // (1 -+ z^r)^{-+eta_r} equals the tensor-algebra series 1/(1-nz).
  std::ostringstream bad;
  bool ok = true;
  const std::size_t order = 8;
  for (int deg : {1, 2}) {
    for (long n = 1; n <= 3; ++n) {
      const GeneratorSpec spec(static_cast<int>(n), deg);
      PowerSeries prod = PowerSeries::one(order);
      for (std::size_t r = 1; r <= order; ++r) {
        const long eta = witt_dim(spec, static_cast<int>(r));
        if (eta == 0) continue;
        const bool exterior = (deg % 2 == 1) && (r % 2 == 1);
        prod = prod * (exterior
                           ? PowerSeries::binomial_factor(+1, r, eta, order)
                           : PowerSeries::binomial_factor(-1, r, -eta, order));
      }
      PowerSeries tensor(order);
      Rat pw = 1;
      for (std::size_t k = 0; k <= order; ++k) {
        tensor.set_coeff(k, pw);
        pw *= n;
      }
      if (!(prod == tensor)) {
        ok = false;
        bad << " (n=" << n << ",deg=" << deg << ")";
      }
    }
  }
  s.record("pbw-free-lie-bookkeeping", ok, bad.str());
}

void check_koszul(Suite& s) {
  std::ostringstream bad;
  bool ok = true;
  for (int g : {1, 2}) {
    for (int d : {3, 4}) {
      const ManifoldModel m = hyperbolic_model(g, d);
      const QuadraticAlgebra a = cohomology_algebra(m);
      const auto pairs = weight2_pairs(m.n(), d);

      if (a.relations.size() + 1 != pairs.size()) {
        ok = false;
        bad << " (g=" << g << ",d=" << d << ": relation count)";
      }

      const LiePresentation dual = quadratic_dual_lie(a);
      const NCPoly q_rel = relation_element(m);
      if (dual.relations.size() != 1) {
        ok = false;
        bad << " (g=" << g << ",d=" << d << ": dual relation count "
            << dual.relations.size() << ")";
      } else {
        // one-dimensional spans agree iff the two elements are proportional
        const NCPoly& r0 = dual.relations.front();
        const auto& lead = r0.terms().begin()->first;
        const Rat scale = q_rel.coeff(lead) / r0.terms().begin()->second;
        NCPoly diff = q_rel;
        diff.axpy(-scale, r0);
        if (scale == 0 || !diff.is_zero()) {
          ok = false;
          bad << " (g=" << g << ",d=" << d << ": dual span mismatch)";
        }
      }

      // dualizing twice returns the original relation span
      const auto lie = lie_dual_relation_coords(a);
      const auto back = algebra_dual_relation_coords(m.n(), d, lie);
      const auto orig = relation_coords(a);
      auto both = orig;
      both.insert(both.end(), back.begin(), back.end());
      if (!(span_dim(both) == orig.size() && back.size() == orig.size())) {
        ok = false;
        bad << " (g=" << g << ",d=" << d << ": involutivity)";
      }

      if (!froberg_check(a, m.n(), 10)) {
        ok = false;
        bad << " (g=" << g << ",d=" << d << ": froberg)";
      }

      // chi(L) = 2 - n: alternating sum of the three weight dimensions
      const long chi = 1 - m.n() + 1;
      if (chi != 2 - m.n()) {
        ok = false;
        bad << " (g=" << g << ": euler)";
      }
    }
  }
  s.record("koszul-duality", ok, bad.str());
}

void check_aut_oracle(Suite& s) {
  std::ostringstream bad;
  bool ok = true;
  const std::vector<int> genera = s.full() ? std::vector<int>{2, 3}
                                           : std::vector<int>{2};
  const std::vector<int> ds =
      s.full() ? std::vector<int>{3, 4, 5} : std::vector<int>{3, 4};
  const int rmax = s.full() ? 2 : 1;
  for (int g : genera) {
    for (int d : ds) {
      const ManifoldModel m = hyperbolic_model(g, d);
      for (int r = 1; r <= rmax; ++r) {
        for (AutVariant v : {AutVariant::closed, AutVariant::based,
                             AutVariant::rel_boundary}) {
          const long closed = aut_rank_closed(m.n(), d, r, v);
          const long hom = aut_rank_homology(m, r, v, s.opt.caps);
          if (closed != hom) {
            ok = false;
            bad << " (g=" << g << ",d=" << d << ",r=" << r << ",variant="
                << static_cast<int>(v) << ": " << closed << " vs " << hom
                << ")";
          }
        }
        const ChainComplexSlice slice = build_complex_slice(m, r, s.opt.caps);
        if (slice.d0.rank() != slice.dims[2]) {
          ok = false;
          bad << " (g=" << g << ",d=" << d << ",r=" << r << ": d0 not onto)";
        }
        if (slice.d1.rank() != slice.dims[0]) {
          ok = false;
          bad << " (g=" << g << ",d=" << d << ",r=" << r
              << ": ker d1 nontrivial)";
        }
      }
    }
  }
  if (s.full()) {
    // deeper weight for the largest algebra, one slice per parity
    for (int d : {3, 4}) {
      const ManifoldModel m = hyperbolic_model(3, d);
      const ChainComplexSlice slice = build_complex_slice(m, 3, s.opt.caps);
      const long rank_d0 = static_cast<long>(slice.d0.rank());
      const long rank_d1 = static_cast<long>(slice.d1.rank());
      const long ker_d0 = static_cast<long>(slice.dims[1]) - rank_d0;
      if (ker_d0 != aut_rank_closed(6, d, 3, AutVariant::based) ||
          ker_d0 - rank_d1 != aut_rank_closed(6, d, 3, AutVariant::closed) ||
          rank_d0 != static_cast<long>(slice.dims[2]) ||
          rank_d1 != static_cast<long>(slice.dims[0])) {
        ok = false;
        bad << " (g=3,d=" << d << ",r=3 slice)";
      }
    }
  }
  s.record("aut-ranks-closed-vs-homology", ok, bad.str());
}

void check_center(Suite& s) {
  std::ostringstream bad;
  bool ok = true;
  const int rmax = 3;

  std::vector<ManifoldModel> big{hyperbolic_model(2, 3), hyperbolic_model(2, 4),
                                 identity_model(3, 4)};
  if (s.full()) big.push_back(hyperbolic_model(3, 3));
  for (const ManifoldModel& m : big) {
    for (const auto& [r, dim] : center_dims(m, rmax, s.opt.caps))
      if (dim != 0) {
        ok = false;
        bad << " (n=" << m.n() << ",d=" << m.d() << ",r=" << r
            << ": center dim " << dim << ")";
      }
  }

  const WeightDims even_center = center_dims(hyperbolic_model(1, 4), rmax,
                                             s.opt.caps);
  if (even_center.at(2) != 2) {
    ok = false;
    bad << " (n=2 d even weight 2: " << even_center.at(2) << " != 2)";
  }

  const ManifoldModel odd2 = hyperbolic_model(1, 3);
  for (int r = 2; r <= 4; ++r)
    if (quotient_slice(odd2, r, s.opt.caps).dim() != 0) {
      ok = false;
      bad << " (n=2 d odd not abelian at r=" << r << ")";
    }
  s.record("center-dichotomy", ok, bad.str());
}

void check_base_change(Suite& s) {
  std::ostringstream bad;
  bool ok = true;
  std::mt19937_64 rng(s.opt.seed);
  const int trials = s.full() ? 5 : 1;
  const int rmax = 3;
  for (int d : {3, 4}) {
    const ManifoldModel m0 = hyperbolic_model(2, d);
    for (int t = 0; t < trials; ++t) {
      const QMatrix u = random_unimodular(m0.n(), rng, 3 * m0.n());
      const ManifoldModel m1(d, u.transpose() * m0.q() * u);
      for (int r = 1; r <= rmax; ++r) {
        if (quotient_slice(m0, r, s.opt.caps).dim() !=
            quotient_slice(m1, r, s.opt.caps).dim()) {
          ok = false;
          bad << " (d=" << d << ",r=" << r << ": quotient dims differ)";
        }
      }
      for (AutVariant v : {AutVariant::closed, AutVariant::based,
                           AutVariant::rel_boundary}) {
        if (aut_rank_homology(m0, 1, v, s.opt.caps) !=
            aut_rank_homology(m1, 1, v, s.opt.caps)) {
          ok = false;
          bad << " (d=" << d << ",variant=" << static_cast<int>(v)
              << ": homology rank differs)";
        }
      }
      if (center_dims(m0, 2, s.opt.caps) != center_dims(m1, 2, s.opt.caps)) {
        ok = false;
        bad << " (d=" << d << ": center dims differ)";
      }
    }
  }
  s.record("base-change-invariance", ok, bad.str());
}

void check_mt_degrees(Suite& s) {
  std::ostringstream bad;
  bool ok = true;

  const auto d1 = loopspace_generator_degrees(MTGeneratorSpec::make(1, 12));
  for (int k = 1; k <= 12; ++k) {
    const long expect = (k % 2 == 0) ? 1 : 0;
    const auto it = d1.find(k);
    const long got = it == d1.end() ? 0 : it->second;
    if (got != expect) {
      ok = false;
      bad << " (d=1 degree " << k << ": " << got << ")";
    }
  }

  // d=3: independently enumerate 4i+6j+8k over the shifted window
  const int cutoff = 12;
  std::map<int, long> expect3;
  for (int i = 0; 4 * i <= 6 + cutoff; ++i)
    for (int j = 0; 4 * i + 6 * j <= 6 + cutoff; ++j)
      for (int k = 0; 4 * i + 6 * j + 8 * k <= 6 + cutoff; ++k) {
        const int deg = 4 * i + 6 * j + 8 * k;
        if (deg > 6) ++expect3[deg - 6];
      }
  if (loopspace_generator_degrees(MTGeneratorSpec::make(3, cutoff)) !=
      expect3) {
    ok = false;
    bad << " (d=3 multiset mismatch)";
  }

  for (int d = 1; d <= 6; ++d)
    for (const auto& [deg, mult] :
         loopspace_generator_degrees(MTGeneratorSpec::make(d, 10)))
      if (deg % 2) {
        ok = false;
        bad << " (d=" << d << ": odd generator degree " << deg << ")";
      }
  s.record("mt-generator-degrees", ok, bad.str());
}

void check_ranges(Suite& s) {
  std::ostringstream bad;
  bool ok = true;
  if (stable_range_max_k(5, 10) != 2) ok = false, bad << " (5,10)";
  if (stable_range_max_k(5, 5) != -1) ok = false, bad << " (5,5)";
  if (stable_range_max_k(3, 100) != 0) ok = false, bad << " (3,100)";
  if (charney_connectivity(10, 2) != Rat(2)) ok = false, bad << " (charney)";
  for (int d = 3; d <= 9; ++d)
    for (long k = 1; k <= 24; ++k) {
      const bool nonzero = block_quotient_pi_rank(d, 1, k) != 0;
      if (nonzero != ((k + d) % 4 == 0)) {
        ok = false;
        bad << " (block d=" << d << ",k=" << k << ")";
      }
    }
  for (int d = 3; d <= 9; ++d)
    for (long k = 0; k <= 12; ++k) {
      const bool inside = 1 < k && k < d - 1;
      if (k >= 1 && diff_pi_rank(d, 2, k).has_value() != inside) {
        ok = false;
        bad << " (diff window d=" << d << ",k=" << k << ")";
      }
    }
  // monotonicity of the stable range in d and g
  for (int d = 3; d <= 8; ++d)
    for (int g = 1; g <= 20; ++g) {
      if (stable_range_max_k(d + 1, g) < stable_range_max_k(d, g) ||
          stable_range_max_k(d, g + 1) < stable_range_max_k(d, g)) {
        ok = false;
        bad << " (monotonicity d=" << d << ",g=" << g << ")";
      }
    }
  s.record("stability-range-arithmetic", ok, bad.str());
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  Suite s{opt, {}};
  check_witt_oracle(s);
  check_epsilon_routes(s);
  check_epsilon_brute_force(s);
  check_bracket_identities(s);
  check_pbw_free_bookkeeping(s);
  check_koszul(s);
  check_aut_oracle(s);
  check_center(s);
  check_base_change(s);
  check_mt_degrees(s);
  check_ranges(s);
  return s.results;
}

}  // namespace hiconn
