#pragma once

// Named verification suites: fixed registries of instances, run in parallel
// and merged back in registry order.

#include "igrr/report.hpp"
#include "igrr/universal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace igrr {

struct SuiteOptions {
    int max_degree = 12;
    int max_dim = 6;
    std::optional<int> n;
    std::optional<std::string> geometry;
    std::optional<std::string> sheaf;
    std::optional<std::size_t> base_levels;
    const ClassTable* table = nullptr;  // nullptr: the shared table
    unsigned threads = 0;               // 0: hardware concurrency
};

/// series-identities, integrality, projective-bundle, immersion,
/// divisor-calculus, kappa, surface-det, main-theorem, all.
const std::vector<std::string>& suite_names();

/// A suite name or a single series identity name (see series_identity_names,
/// plus "howe"). Throws std::invalid_argument for unknown names and for
/// geometry outside the resource guards; ParseError for malformed specs.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options = {});

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace igrr
