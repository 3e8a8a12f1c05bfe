// Command-line front end: reproducible tables for the dimension formulas,
// Betti series and stability ranges, plus the oracle cross-check suites.
// Every command emits a deterministic JSON or CSV record.

#include "hiconn/aut_ranks.hpp"
#include "hiconn/freelie.hpp"
#include "hiconn/homotopy_lie.hpp"
#include "hiconn/koszul.hpp"
#include "hiconn/mtheta.hpp"
#include "hiconn/stability.hpp"
#include "hiconn/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct GlobalOpts {
  std::string format = "json";
  std::string out;
  long cap_words = 0;  // 0 = default
  hiconn::Caps caps() const {
    hiconn::Caps c;
    if (cap_words > 0) c.max_words = cap_words;
    return c;
  }
};

void emit(const GlobalOpts& g, const ordered_json& record,
          const std::string& csv) {
  const std::string payload =
      g.format == "csv" ? csv : record.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + g.out);
    f << payload;
  }
}

ordered_json record_for(const std::string& command, ordered_json params,
                        ordered_json results, const std::string& method) {
  return ordered_json{{"command", command},
                      {"params", std::move(params)},
                      {"results", std::move(results)},
                      {"method", method},
                      {"version", kVersion}};
}

hiconn::ManifoldModel genus_model(int g, int d) {
  return hiconn::ManifoldModel(d, hiconn::hyperbolic_form(g, d).q, g);
}

int run_witt(const GlobalOpts& g, int n, int d, int rmax) {
  const hiconn::GeneratorSpec spec(n, d - 1);
  ordered_json eta = ordered_json::array();
  std::string csv = "r,eta\n";
  for (int r = 1; r <= rmax; ++r) {
    const long v = hiconn::witt_dim(spec, r);
    eta.push_back(v);
    csv += std::to_string(r) + "," + std::to_string(v) + "\n";
  }
  emit(g, record_for("witt", {{"n", n}, {"d", d}, {"rmax", rmax}},
                     {{"eta", eta}}, "closed"),
       csv);
  return 0;
}

int run_epsilon(const GlobalOpts& g, int n, int d, int rmax,
                const std::string& method) {
  const hiconn::Parity par = hiconn::parity_of(d);
  const bool want_closed = method == "closed" || method == "all";
  const bool want_pbw = method == "pbw" || method == "all";
  const bool want_oracle = method == "oracle" || method == "all";

  std::optional<std::vector<long>> closed, pbw, oracle;
  if (want_closed) {
    closed.emplace();
    for (int r = 1; r <= rmax; ++r)
      closed->push_back(hiconn::epsilon_closed(n, par, r));
  }
  if (want_pbw) {
    pbw.emplace();
    auto dims = hiconn::epsilon_from_pbw(n, par, rmax);
    for (int r = 1; r <= rmax; ++r) pbw->push_back(dims[r]);
  }
  if (want_oracle) {
    // brute force needs an invertible graded-symmetric form of rank n
    std::optional<hiconn::ManifoldModel> m;
    if (d % 2 == 0) {
      m.emplace(d, hiconn::QMatrix::identity(n));
    } else if (n % 2 == 0) {
      m = genus_model(n / 2, d);
    } else {
      throw hiconn::HypothesisError(
          "no invertible antisymmetric form exists for odd n, odd d; "
          "the oracle route needs a manifold model");
    }
    oracle.emplace();
    for (int r = 1; r <= rmax; ++r)
      oracle->push_back(
          static_cast<long>(hiconn::quotient_slice(*m, r, g.caps()).dim()));
  }

  bool agree = true;
  const std::vector<long>* ref =
      closed ? &*closed : (pbw ? &*pbw : &*oracle);
  for (const auto* route : {&closed, &pbw, &oracle})
    if (route->has_value() && **route != *ref) agree = false;

  ordered_json results;
  std::string csv = "r";
  if (closed) csv += ",closed";
  if (pbw) csv += ",pbw";
  if (oracle) csv += ",oracle";
  csv += "\n";
  for (int r = 1; r <= rmax; ++r) {
    csv += std::to_string(r);
    if (closed) csv += "," + std::to_string((*closed)[r - 1]);
    if (pbw) csv += "," + std::to_string((*pbw)[r - 1]);
    if (oracle) csv += "," + std::to_string((*oracle)[r - 1]);
    csv += "\n";
  }
  if (closed) results["closed"] = *closed;
  if (pbw) results["pbw"] = *pbw;
  if (oracle) results["oracle"] = *oracle;
  if (method == "all") results["agree"] = agree;

  emit(g, record_for("epsilon",
                     {{"n", n}, {"d", d}, {"rmax", rmax}},
                     results, method),
       csv);
  return agree ? 0 : 2;
}

int run_aut_ranks(const GlobalOpts& g, int genus, int d, int rmax,
                  const std::string& variant_name, const std::string& method) {
  hiconn::AutVariant variant = hiconn::AutVariant::closed;
  if (variant_name == "based") variant = hiconn::AutVariant::based;
  if (variant_name == "rel-boundary")
    variant = hiconn::AutVariant::rel_boundary;

  const int n = 2 * genus;
  std::optional<std::vector<long>> formula, homology;
  if (method == "formula" || method == "both") {
    formula.emplace();
    for (int r = 1; r <= rmax; ++r)
      formula->push_back(hiconn::aut_rank_closed(n, d, r, variant));
  }
  if (method == "homology" || method == "both") {
    const hiconn::ManifoldModel m = genus_model(genus, d);
    homology.emplace();
    for (int r = 1; r <= rmax; ++r)
      homology->push_back(hiconn::aut_rank_homology(m, r, variant, g.caps()));
  }
  const bool agree = !(formula && homology) || *formula == *homology;

  // the rank at index r is the rank of pi_{r(d-1)} of the chosen space
  ordered_json results{{"variant", variant_name}};
  ordered_json degrees = ordered_json::array();
  std::string csv = "r,degree";
  if (formula) csv += ",formula";
  if (homology) csv += ",homology";
  csv += "\n";
  for (int r = 1; r <= rmax; ++r) {
    degrees.push_back(static_cast<long>(r) * (d - 1));
    csv += std::to_string(r) + "," + std::to_string(r * (d - 1));
    if (formula) csv += "," + std::to_string((*formula)[r - 1]);
    if (homology) csv += "," + std::to_string((*homology)[r - 1]);
    csv += "\n";
  }
  results["degrees"] = degrees;
  if (formula) results["formula"] = *formula;
  if (homology) results["homology"] = *homology;
  if (method == "both") results["agree"] = agree;

  emit(g, record_for("aut-ranks",
                     {{"g", genus}, {"d", d}, {"rmax", rmax},
                      {"variant", variant_name}},
                     results, method),
       csv);
  return agree ? 0 : 2;
}

int run_mt_betti(const GlobalOpts& g, int d, int cutoff) {
  const auto spec = hiconn::MTGeneratorSpec::make(d, cutoff);
  const auto degrees = hiconn::loopspace_generator_degrees(spec);
  const hiconn::PowerSeries betti = hiconn::omega_mt_betti(spec);

  ordered_json gens;
  for (const auto& [deg, mult] : degrees)
    gens[std::to_string(deg)] = mult;
  ordered_json coeffs = ordered_json::array();
  std::string csv = "degree,betti\n";
  for (std::size_t k = 0; k <= betti.order(); ++k) {
    const long b = hiconn::to_long_checked(betti.coeff(k), "betti number");
    coeffs.push_back(b);
    csv += std::to_string(k) + "," + std::to_string(b) + "\n";
  }
  emit(g, record_for("mt-betti", {{"d", d}, {"cutoff", cutoff}},
                     {{"betti", coeffs}, {"generator_degrees", gens}},
                     "closed"),
       csv);
  return 0;
}

int run_stability(const GlobalOpts& g, int d, int genus, int kmax) {
  const hiconn::RangeReport rep = hiconn::stability_report(d, genus, kmax);
  ordered_json block = ordered_json::array();
  ordered_json diff = ordered_json::array();
  ordered_json charney = ordered_json::array();
  std::string csv = "k,block_pi_rank,diff_pi_rank,charney_connectivity\n";
  for (int k = 1; k <= kmax; ++k) {
    block.push_back(rep.block_pi_rank[k - 1]);
    if (rep.diff_rank[k - 1])
      diff.push_back(*rep.diff_rank[k - 1]);
    else
      diff.push_back("outside-range");
    charney.push_back(rep.charney[k - 1].get_str());
    csv += std::to_string(k) + "," + std::to_string(rep.block_pi_rank[k - 1]) +
           "," +
           (rep.diff_rank[k - 1] ? std::to_string(*rep.diff_rank[k - 1])
                                 : std::string("outside-range")) +
           "," + rep.charney[k - 1].get_str() + "\n";
  }
  csv += "max_stable_k,," + std::to_string(rep.max_stable_k) + ",\n";
  emit(g, record_for("stability", {{"d", d}, {"g", genus}, {"kmax", kmax}},
                     {{"max_stable_k", rep.max_stable_k},
                      {"block_pi_rank", block},
                      {"diff_pi_rank", diff},
                      {"charney_connectivity", charney}},
                     "closed"),
       csv);
  return 0;
}

int run_verify(const GlobalOpts& g, const std::string& level,
               std::uint64_t seed, bool inject_fault) {
  hiconn::VerifyOptions opt;
  opt.level =
      level == "full" ? hiconn::VerifyLevel::full : hiconn::VerifyLevel::quick;
  opt.seed = seed;
  opt.inject_fault = inject_fault;
  opt.caps = g.caps();

  const auto results = hiconn::run_verification(opt);
  bool all = true;
  std::string first_failure;
  ordered_json checks = ordered_json::array();
  std::string csv = "check,pass,detail\n";
  for (const auto& c : results) {
    if (!c.pass && all) first_failure = c.name;
    all = all && c.pass;
    checks.push_back(ordered_json{
        {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    csv += c.name + "," + (c.pass ? "true" : "false") + ",\"" + c.detail +
           "\"\n";
  }
  ordered_json res{{"checks", checks}, {"all_passed", all}};
  if (!all) res["first_failure"] = first_failure;
  emit(g, record_for("verify",
                     {{"level", level}, {"seed", seed}},
                     res, "oracle"),
       csv);
  if (!all) std::cerr << "verification failed: " << first_failure << "\n";
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for rational homotopy invariants of "
               "highly connected manifolds"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write the record to FILE instead of stdout");
  app.add_option("--cap-words", g.cap_words,
                 "override the word-count resource cap");

  int n = 2, d = 3, rmax = 4, genus = 1, cutoff = 12, kmax = 12;
  std::string method = "closed", variant = "closed", level = "quick";
  std::uint64_t seed = 1;
  bool inject_fault = false;

  auto* witt = app.add_subcommand("witt", "free Lie algebra dimensions");
  witt->add_option("--n", n, "number of generators")->required();
  witt->add_option("--d", d, "half-dimension (generators live in d-1)")
      ->required();
  witt->add_option("--rmax", rmax, "largest weight")->capture_default_str();

  auto* eps = app.add_subcommand("epsilon",
                                 "homotopy Lie algebra dimensions");
  eps->add_option("--n", n, "rank of the middle cohomology")->required();
  eps->add_option("--d", d, "half-dimension")->required();
  eps->add_option("--rmax", rmax, "largest weight")->capture_default_str();
  eps->add_option("--method", method, "closed | pbw | oracle | all")
      ->check(CLI::IsMember({"closed", "pbw", "oracle", "all"}))
      ->capture_default_str();

  auto* aut = app.add_subcommand("aut-ranks",
                                 "ranks of homotopy groups of "
                                 "self-equivalence spaces");
  aut->add_option("--g", genus, "genus (n = 2g)")->required();
  aut->add_option("--d", d, "half-dimension")->required();
  aut->add_option("--rmax", rmax, "largest r (degree r(d-1))")
      ->capture_default_str();
  aut->add_option("--variant", variant, "closed | based | rel-boundary")
      ->check(CLI::IsMember({"closed", "based", "rel-boundary"}))
      ->capture_default_str();
  std::string aut_method = "formula";
  aut->add_option("--method", aut_method, "formula | homology | both")
      ->check(CLI::IsMember({"formula", "homology", "both"}))
      ->capture_default_str();

  auto* mt = app.add_subcommand("mt-betti",
                                "Betti series of the stable homology target");
  mt->add_option("--d", d, "half-dimension")->required();
  mt->add_option("--cutoff", cutoff, "largest output degree")
      ->capture_default_str();

  auto* stab = app.add_subcommand("stability",
                                  "stability ranges and block-quotient ranks");
  stab->add_option("--d", d, "half-dimension")->required();
  stab->add_option("--g", genus, "genus")->required();
  stab->add_option("--kmax", kmax, "largest degree in the tables")
      ->capture_default_str();

  auto* ver = app.add_subcommand("verify", "run the oracle cross-check suites");
  ver->add_option("--level", level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  ver->add_option("--seed", seed, "seed for randomized property checks")
      ->capture_default_str();
  ver->add_flag("--inject-fault", inject_fault,
                "test mode: corrupt one identity to prove failures surface");

  // global flags may follow the subcommand
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (witt->parsed()) return run_witt(g, n, d, rmax);
    if (eps->parsed()) return run_epsilon(g, n, d, rmax, method);
    if (aut->parsed())
      return run_aut_ranks(g, genus, d, rmax, variant, aut_method);
    if (mt->parsed()) return run_mt_betti(g, d, cutoff);
    if (stab->parsed()) return run_stability(g, d, genus, kmax);
    if (ver->parsed()) return run_verify(g, level, seed, inject_fault);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
