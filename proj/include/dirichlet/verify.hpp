#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet/bundle.hpp"

namespace dirichlet {

struct VerifyOptions {
    /// Bound on |B|, fiber sizes and probe sets for the single-bundle checks.
    /// Checks over pairs of bundles use min(max_size, 2).
    std::size_t max_size = 3;
    /// Bundles added to the single-bundle corpus (e.g. loaded from files).
    std::vector<Bundle> extra_bundles;
};

struct CheckInfo {
    std::string_view id;
    std::string_view title;
};

struct CheckResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
};

/// The checks in report order.
const std::vector<CheckInfo>& verify_checks();

/// Runs one check by id. Throws Error(invalid_argument) on an unknown id.
CheckResult run_check(std::string_view id, const VerifyOptions& options);
std::vector<CheckResult> run_all(const VerifyOptions& options);

} // namespace dirichlet
