#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumfree/bigcount.hpp"
#include "sumfree/group.hpp"
#include "sumfree/linkgraph.hpp"

namespace sumfree {

inline constexpr std::size_t kDefaultCountCap = 26;

/// Sum over B subseteq Y of 2^(n - |N(B)|) for a bipartite graph with n vertices per side,
/// given as z-neighbor masks of the y-vertices. Subsets B are visited in binary order; the
/// union N(B) is assembled from two precomputed half tables (one OR per subset).
/// Reuse one instance to avoid reallocating the tables.
class IndependentSetKernel {
public:
    static constexpr std::size_t kMaxSide = 31;

    std::uint64_t count(std::span<const std::uint64_t> z_neighbor_masks);

    /// hist[b * (n + 1) + f] += number of B with |B| = b and n - |N(B)| = f.
    void profile(std::span<const std::uint64_t> z_neighbor_masks, std::span<std::uint64_t> hist);

private:
    void build_tables(std::span<const std::uint64_t> masks);

    std::size_t low_bits_ = 0;
    std::vector<std::uint64_t> low_;
    std::vector<std::uint64_t> high_;
};

/// Exact i(H), empty set included. Requires n_per_side <= max_n.
BigCount count_independent_sets(const BipartiteLinkGraph& h, std::size_t max_n = kDefaultCountCap);

/// Independent sets of the m-vertex path: F_{m+2} with F_1 = F_2 = 1.
BigCount fibonacci_path_count(std::size_t m);
/// Lucas number L_k (L_0 = 2, L_1 = 1).
BigCount lucas_number(std::size_t k);
/// Independent sets of the cycle of length 2n: L_{2n}. Requires n >= 2.
BigCount lucas_cycle_count(std::size_t n);
/// t_p + 1 with t_p = 2 t_{p-1} + t_{p-2}, t_0 = t_1 = 2. Requires p >= 3.
BigCount pell_closed_form(std::size_t p);

/// State of the four interleaved sequences counting independent sets of the link graph of
/// {-1, 0, 1} in Z/p. b_p exists from p = 4 and d_p from p = 3.
struct AppendixState {
    std::size_t p = 0;
    BigCount a;
    std::optional<BigCount> b;
    BigCount c;
    std::optional<BigCount> d;

    [[nodiscard]] BigCount total() const { return a + a + c; }
};

AppendixState appendix_recurrences(std::size_t p);
/// States for 2..p_max, in order.
std::vector<AppendixState> appendix_table(std::size_t p_max);

/// i(H_A) for |A| = 2: the link graph is N/t disjoint cycles of length 2t, t = o(x - y).
BigCount union_of_cycles_count(const AbelianGroup& g, const ElementSet& a);

/// Sum of i(H_A) over all unordered 2-subsets A, from the order histogram.
BigCount k2_total(const AbelianGroup& g);

}  // namespace sumfree
