#include "sumfree/iscount.hpp"

#include <bit>
#include <string>

#include "sumfree/error.hpp"

namespace sumfree {

void IndependentSetKernel::build_tables(std::span<const std::uint64_t> masks) {
    const std::size_t n = masks.size();
    if (n > kMaxSide) throw CapExceeded("independent-set kernel supports at most 31 vertices per side");
    low_bits_ = n / 2;
    const std::size_t high_bits = n - low_bits_;
    low_.assign(std::size_t{1} << low_bits_, 0);
    high_.assign(std::size_t{1} << high_bits, 0);
    for (std::size_t s = 1; s < low_.size(); ++s) {
        low_[s] = low_[s & (s - 1)] | masks[static_cast<std::size_t>(std::countr_zero(s))];
    }
    for (std::size_t s = 1; s < high_.size(); ++s) {
        high_[s] = high_[s & (s - 1)] | masks[low_bits_ + static_cast<std::size_t>(std::countr_zero(s))];
    }
}

std::uint64_t IndependentSetKernel::count(std::span<const std::uint64_t> z_neighbor_masks) {
    build_tables(z_neighbor_masks);
    const auto n = static_cast<unsigned>(z_neighbor_masks.size());
    std::uint64_t total = 0;
    for (const auto hi : high_) {
        std::uint64_t partial = 0;
        for (const auto lo : low_) partial += std::uint64_t{1} << (n - static_cast<unsigned>(std::popcount(hi | lo)));
        total += partial;
    }
    return total;
}

void IndependentSetKernel::profile(std::span<const std::uint64_t> z_neighbor_masks, std::span<std::uint64_t> hist) {
    build_tables(z_neighbor_masks);
    const std::size_t n = z_neighbor_masks.size();
    if (hist.size() < (n + 1) * (n + 1)) throw InvalidInput("histogram buffer too small");
    for (std::size_t h = 0; h < high_.size(); ++h) {
        const auto hb = static_cast<std::size_t>(std::popcount(h));
        for (std::size_t l = 0; l < low_.size(); ++l) {
            const auto b = hb + static_cast<std::size_t>(std::popcount(l));
            const auto free = n - static_cast<std::size_t>(std::popcount(high_[h] | low_[l]));
            ++hist[b * (n + 1) + free];
        }
    }
}

BigCount count_independent_sets(const BipartiteLinkGraph& h, std::size_t max_n) {
    const auto n = h.n_per_side();
    if (n > max_n || n > IndependentSetKernel::kMaxSide) {
        throw CapExceeded("independent-set count capped at " + std::to_string(max_n) + " vertices per side");
    }
    std::vector<std::uint64_t> masks(n);
    for (std::size_t y = 0; y < n; ++y) masks[y] = h.z_neighbors(y).mask64();
    IndependentSetKernel kernel;
    return BigCount(kernel.count(masks));
}

BigCount fibonacci_path_count(std::size_t m) {
    // F_{m+2}, iterating (F_k, F_{k+1}) from (F_1, F_2) = (1, 1).
    BigCount f = 1;
    BigCount g = 1;
    for (std::size_t k = 0; k < m; ++k) {
        BigCount next = f + g;
        f = std::move(g);
        g = std::move(next);
    }
    return g;
}

BigCount lucas_number(std::size_t k) {
    BigCount prev = 2;
    BigCount cur = 1;
    if (k == 0) return prev;
    for (std::size_t i = 1; i < k; ++i) {
        BigCount next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigCount lucas_cycle_count(std::size_t n) {
    if (n < 2) throw InvalidInput("cycle of length 2n needs n >= 2");
    return lucas_number(2 * n);
}

BigCount pell_closed_form(std::size_t p) {
    if (p < 3) throw InvalidInput("closed form stated for p >= 3");
    BigCount prev = 2;  // t_0
    BigCount cur = 2;   // t_1
    for (std::size_t i = 2; i <= p; ++i) {
        BigCount next = cur + cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur + BigCount(1);
}

std::vector<AppendixState> appendix_table(std::size_t p_max) {
    if (p_max < 2) throw InvalidInput("appendix recurrences start at p = 2");
    std::vector<AppendixState> s;
    auto at = [&s](std::size_t p) -> AppendixState& { return s[p - 2]; };
    for (std::size_t p = 2; p <= p_max; ++p) {
        AppendixState st;
        st.p = p;
        // b_p = 2 b_{p-1} + a_{p-4} from p = 6; a_2 = 2 is defined so that b_6 fits.
        if (p == 4) st.b = BigCount(1);
        if (p == 5) st.b = BigCount(3);
        if (p >= 6) st.b = *at(p - 1).b + *at(p - 1).b + at(p - 4).a;
        if (p == 2) st.a = 2;
        if (p == 3) st.a = 4;
        if (p >= 4) st.a = at(p - 1).a + at(p - 1).a + *st.b;
        // d_p = c_{p-2} + d_{p-1} from p = 4; c_p = 2 d_p + c_{p-1} from p = 3.
        if (p == 3) st.d = BigCount(2);
        if (p >= 4) st.d = at(p - 2).c + *at(p - 1).d;
        if (p == 2) st.c = 3;
        if (p >= 3) st.c = *st.d + *st.d + at(p - 1).c;
        s.push_back(std::move(st));
    }
    return s;
}

AppendixState appendix_recurrences(std::size_t p) { return appendix_table(p).back(); }

BigCount union_of_cycles_count(const AbelianGroup& g, const ElementSet& a) {
    const auto m = a.indices();
    if (m.size() != 2 || a.universe() != g.order()) throw InvalidInput("union-of-cycles count needs |A| = 2");
    const auto t = g.element_order(g.sub(m[0], m[1]));
    return BigCount::pow(lucas_number(2 * t), g.order() / t);
}

BigCount k2_total(const AbelianGroup& g) {
    const auto hist = order_histogram(g);
    BigCount total;
    for (const auto& [t, a_t] : hist.counts) {
        if (t < 2) continue;
        // N * a_t ordered pairs (x, y) with o(x - y) = t; each unordered pair twice.
        const BigCount pairs(static_cast<std::uint64_t>(g.order()) * a_t / 2);
        total += pairs * BigCount::pow(lucas_number(2 * t), g.order() / t);
    }
    return total;
}

}  // namespace sumfree
