#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sumfree/bigcount.hpp"
#include "sumfree/element_set.hpp"
#include "sumfree/group.hpp"

namespace sumfree {

inline constexpr std::size_t kDefaultCensusCap = 16;
inline constexpr std::size_t kDefaultBreakdownCap = 12;
inline constexpr std::size_t kDefaultBruteForceCap = 5;
inline constexpr std::size_t kWitnessEnumerationCap = 8;

struct CensusOptions {
    std::size_t threads = 1;
    std::size_t max_order = kDefaultCensusCap;
};

/// counts[k] = number of sum-free triplets with min(|A|,|B|,|C|) = k, for k = 0..N.
struct MinKBreakdown {
    std::vector<BigCount> counts;
    [[nodiscard]] BigCount total() const;
};

/// (A + B) and C are disjoint.
bool is_sumfree_triplet(const AbelianGroup& g, const ElementSet& a, const ElementSet& b, const ElementSet& c);
/// Ordered pairs (x, y) in A x B with x + y in C.
BigCount count_solutions(const AbelianGroup& g, const ElementSet& a, const ElementSet& b, const ElementSet& c);
/// r(x) = #{(a, b) in A x B : a + b = x} for every x.
std::vector<std::uint64_t> representation_counts(const AbelianGroup& g, const ElementSet& a, const ElementSet& b);
/// Elements with at least eps * N representations (non-strict, compared exactly).
ElementSet restricted_sumset(const AbelianGroup& g, const ElementSet& a, const ElementSet& b, double eps);

/// Number of ordered sum-free triplets, as the sum over A of i(H_A).
BigCount total_census(const AbelianGroup& g, const CensusOptions& options = {});
MinKBreakdown census_by_min_k(const AbelianGroup& g, const CensusOptions& options = {1, kDefaultBreakdownCap});
/// Direct loop over all (A, B, C). Independent of the link-graph route.
BigCount brute_force_oracle(const AbelianGroup& g, std::size_t max_order = kDefaultBruteForceCap);

struct WitnessReport {
    std::uint64_t p1 = 0;
    ElementSet subgroup;
    BigCount count;      // 2^(N + N/p1)
    bool verified = false;
    bool enumerated = false;  // every triplet checked individually (N <= 8)
};

/// Triplets A, B subseteq H, C subseteq G \ H for H of index p_1. Verification checks the
/// maximal triplet (H, H, G \ H), which covers all subsets; for N <= 8 every triplet is also
/// checked one by one.
WitnessReport subgroup_witnesses(const AbelianGroup& g);

struct SupersatReport {
    double epsilon = 0;
    double sigma = 0;  // eps^3 / 64
    std::string regime;  // "zp" or "general"
    bool exhaustive = false;
    std::uint64_t trials = 0;  // triples examined
    BigCount min_solutions_found;
    double threshold = 0;  // sigma * N^2
    bool all_passed = false;
};

struct SupersatHypotheses {
    std::size_t min_size = 0;  // each of |A|, |B|, |C| at least this
    std::size_t min_sum = 0;   // |A| + |B| + |C| at least this
    std::string regime;
};

/// Size thresholds: for Z/p, |X| > eps p and sum >= (1 + eps) p; otherwise |X| >= eps N and
/// sum >= (3/2 + eps) N. Throws InvalidInput when unsatisfiable.
SupersatHypotheses supersat_hypotheses(const AbelianGroup& g, double eps);
SupersatReport supersat_check(const AbelianGroup& g, double eps, std::uint64_t trials, std::uint64_t seed);
/// Every qualifying triple; requires N <= 8.
SupersatReport supersat_exhaustive(const AbelianGroup& g, double eps);

}  // namespace sumfree
