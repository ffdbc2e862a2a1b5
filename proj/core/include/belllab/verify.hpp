#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bell {

struct SuiteResult {
    std::string name;
    bool passed{};
    double max_violation{};
    double threshold{};
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 20260810;
    // Test hook: flips one Bell-vector coefficient so the orthonormality
    // suite must fail.
    bool inject_bell_sign_flip = false;
};

// Runs the full invariant suite: Bell-vector orthonormality, measure/Born
// equivalence, orthogonal additivity, the probability-range sweep,
// no-signaling for every exact model, and the CHSH bound over random finite
// strategies.
std::vector<SuiteResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace bell
