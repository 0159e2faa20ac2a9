#pragma once
/// \file selftest.hpp
/// The acceptance checks, shared by the acceptance binary and the CLI.

#include <functional>
#include <string>
#include <vector>

namespace foamlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;  ///< 0: no time bound
    std::string detail;
};

/// Runs criteria 1..11 in order; \p progress sees each result as it lands.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace foamlab
