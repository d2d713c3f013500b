#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recomp/modular.hpp"
#include "recomp/parallel.hpp"

namespace recomp {

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    /// No check failed.
    bool passed() const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    /// The modular polynomial the suites check against; replaceable so that
    /// a perturbed table can be shown to fail.
    Phi2 phi;
    ExecPolicy policy = ExecPolicy::parallel;
};

/// Suite names accepted by run_verify.
const std::vector<std::string>& verify_suites();

/// Runs "lemma", "decomp", "lattes", "modular" or "all". Exceptions inside a
/// check are reported as failures of that check. Throws Error on an unknown
/// suite name.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts = {});

/// Greedy nearest matching of two multisets; returns the worst relative
/// distance, or infinity when the sizes differ.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace recomp
