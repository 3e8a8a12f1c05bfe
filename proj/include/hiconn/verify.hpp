#pragma once

// Cross-check suites: every closed formula in the library against its
// independent brute-force oracle, plus the structural identities (Jacobi,
// duality, Euler characteristic, base-change invariance).

#include "hiconn/ncpoly.hpp"
#include "hiconn/qmatrix.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hiconn {

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // deterministic description; empty when unremarkable
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::quick;
  std::uint64_t seed = 1;
  // Test mode: corrupt one computed value on purpose to prove the harness
  // reports failures.
  bool inject_fault = false;
  Caps caps;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opt);

// Random element of GL_n(Z) built from elementary shears and signed swaps;
// deterministic for a fixed generator state.
QMatrix random_unimodular(int n, std::mt19937_64& rng, int ops);

}  // namespace hiconn
