#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sumfree/census.hpp"
#include "sumfree/hpreal.hpp"

namespace sumfree::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3 };

struct RunConfig {
    std::string command;
    std::string group;
    std::string set;
    std::string claims = "all";
    std::optional<int> theorem;
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> n;
    std::optional<double> eps;
    std::optional<std::string> tau;
    std::optional<std::uint64_t> seed;
    std::uint64_t trials = 10000;
    long precision_bits = kDefaultPrecisionBits;
    std::uint64_t max_p = 101;
    bool breakdown = false;
    std::string format = "text";
    std::string out;
    std::size_t threads = 0;  // 0: available parallelism
    std::size_t census_cap = kDefaultCensusCap;
    std::size_t breakdown_cap = kDefaultBreakdownCap;
};

int cmd_census(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_bounds(const RunConfig& config, std::ostream& out);
int cmd_linkgraph(const RunConfig& config, std::ostream& out);

/// Parses argv, dispatches, and maps exceptions onto exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Comma-separated element specs: an index, or colon-separated coordinates.
ElementSet parse_element_set(const AbelianGroup& g, const std::string& spec);
Rational parse_rational(const std::string& text);

}  // namespace sumfree::cli
