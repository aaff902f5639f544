#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/hpreal.hpp"

namespace sumfree {

struct VerifyOptions {
    std::uint64_t max_p = 101;
    std::optional<std::uint64_t> p;  // restrict the prime-indexed suites to one prime
    double supersat_eps = 0.3;
    std::uint64_t trials = 10000;
    std::optional<std::uint64_t> seed;  // required by the supersat suite
    std::optional<Rational> tau;
    bool records = false;  // collect one JSON line per check
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    /// Checks run smallest case first, so failures.front() is a minimal counterexample.
    std::vector<std::string> failures;
    std::vector<std::string> records;
    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// claim2, claim3, claim5, claim6, sandwich, supersat, codegree, witnesses.
const std::vector<std::string>& verify_suite_names();

SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});
/// "all" or a single suite name; throws InvalidInput on anything else.
std::vector<SuiteResult> run_suites(std::string_view selector, const VerifyOptions& options = {});

}  // namespace sumfree
