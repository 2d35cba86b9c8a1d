#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace phasecat::verify {

struct CriterionResult {
    std::string id;
    bool passed = false;
    std::string detail;
};

using Reporter = std::function<void(const CriterionResult&)>;

CriterionResult ac1_cat_vs_fock(std::uint64_t seed);
CriterionResult ac2_normal_form(std::uint64_t seed);
CriterionResult ac3_degenerate_pair(std::uint64_t seed);
CriterionResult ac4_lindblad_solution(std::uint64_t seed);
CriterionResult ac5_signature_preservation(std::uint64_t seed);
CriterionResult ac6_kerr_coefficients(std::uint64_t seed);
CriterionResult ac7_mixed_compass(std::uint64_t seed);
CriterionResult ac8_kho_section(std::uint64_t seed);
CriterionResult ac9_global_sanity(std::uint64_t seed);

/// Run every criterion; `progress` fires after each one.
std::vector<CriterionResult> run_all(std::uint64_t seed, const Reporter& progress = {});

}  // namespace phasecat::verify
