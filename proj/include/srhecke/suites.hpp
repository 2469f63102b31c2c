#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srhecke/chars.hpp"

namespace srhecke {

struct SuiteConfig {
    int n = 4;
    int kmax = 4;
    int degmax = 6;
    int lmax = 3;
    int workers = 1;
    unsigned seed = 12345;
};

std::vector<std::string> suite_names();

/// Empty when cfg is acceptable for the suite; otherwise an explanation of
/// the refused cap.
std::optional<std::string> validate_suite(const std::string& name,
                                          const SuiteConfig& cfg);

/// Runs a registered suite; reports come back in deterministic order
/// regardless of the worker count. Throws on unknown suite name.
std::vector<Report> run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace srhecke
