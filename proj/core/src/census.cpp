#include "sumfree/census.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <thread>

#include "sumfree/error.hpp"
#include "sumfree/hpreal.hpp"
#include "sumfree/iscount.hpp"

namespace sumfree {

namespace {

using u128 = UInt128;

// Addition table over canonical indices; only for the small groups the census handles.
class SmallGroup {
public:
    explicit SmallGroup(const AbelianGroup& g) : n_(g.order()), add_(n_ * n_) {
        if (n_ > 64) throw CapExceeded("mask-based routines need |G| <= 64");
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) add_[a * n_ + b] = g.add(a, b);
        }
    }

    [[nodiscard]] std::size_t n() const { return n_; }

    [[nodiscard]] std::uint64_t translate(std::uint64_t mask, std::size_t x) const {
        std::uint64_t out = 0;
        for (; mask; mask &= mask - 1) {
            out |= std::uint64_t{1} << add_[static_cast<std::size_t>(std::countr_zero(mask)) * n_ + x];
        }
        return out;
    }

    /// z-neighbor masks of the link graph of A.
    void link_masks(std::uint64_t a_mask, std::vector<std::uint64_t>& out) const {
        out.assign(n_, 0);
        for (std::size_t y = 0; y < n_; ++y) {
            for (auto m = a_mask; m; m &= m - 1) {
                out[y] |= std::uint64_t{1} << add_[y * n_ + static_cast<std::size_t>(std::countr_zero(m))];
            }
        }
    }

private:
    std::size_t n_;
    std::vector<std::size_t> add_;
};

void check_cap(const AbelianGroup& g, std::size_t cap, const char* what) {
    if (g.order() > cap) {
        throw CapExceeded(std::string(what) + " capped at |G| <= " + std::to_string(cap) + ", got " +
                          std::to_string(g.order()));
    }
}

// Runs body(worker, begin, end) over contiguous blocks of [0, items).
template <typename Body>
void fan_out(std::size_t threads, std::uint64_t items, Body&& body) {
    threads = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, items));
    if (threads == 1) {
        body(std::size_t{0}, std::uint64_t{0}, items);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        const std::uint64_t begin = items * w / threads;
        const std::uint64_t end = items * (w + 1) / threads;
        pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

mpq_class exact(double v) { return decimal_rational(v); }

std::uint64_t ceil_q(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_ui();
}

std::uint64_t floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_ui();
}

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidInput("eps must lie in (0, 1)");
}

bool meets_sigma(const BigCount& solutions, double eps, std::size_t n) {
    const mpq_class e = exact(eps);
    const mpq_class need = e * e * e / 64 * static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
    return mpq_class(solutions.mpz()) >= need;
}

SupersatReport make_report(const AbelianGroup& g, double eps, const SupersatHypotheses& hyp) {
    SupersatReport r;
    r.epsilon = eps;
    r.sigma = eps * eps * eps / 64.0;
    r.regime = hyp.regime;
    r.threshold = r.sigma * static_cast<double>(g.order()) * static_cast<double>(g.order());
    return r;
}

std::uint64_t solutions_masks(const SmallGroup& sg, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t total = 0;
    for (; a; a &= a - 1) {
        total += static_cast<std::uint64_t>(
            std::popcount(sg.translate(b, static_cast<std::size_t>(std::countr_zero(a))) & c));
    }
    return total;
}

// Uniform integer in [0, bound) by rejection, independent of library distribution details.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + uniform_below(rng, n - i);
        std::swap(idx[i], idx[j]);
        mask |= std::uint64_t{1} << idx[i];
    }
    return mask;
}

void check_triplet(const AbelianGroup& g, const ElementSet& a, const ElementSet& b, const ElementSet& c) {
    const auto n = g.order();
    if (a.universe() != n || b.universe() != n || c.universe() != n) {
        throw InvalidInput("sets must be subsets of " + g.name());
    }
}

}  // namespace

BigCount MinKBreakdown::total() const {
    BigCount t;
    for (const auto& c : counts) t += c;
    return t;
}

bool is_sumfree_triplet(const AbelianGroup& g, const ElementSet& a, const ElementSet& b, const ElementSet& c) {
    check_triplet(g, a, b, c);
    ElementSet sums(g.order());
    for (auto x : a.indices()) sums |= translate(g, b, x);
    return !sums.intersects(c);
}

BigCount count_solutions(const AbelianGroup& g, const ElementSet& a, const ElementSet& b, const ElementSet& c) {
    check_triplet(g, a, b, c);
    BigCount total;
    for (auto x : a.indices()) total += BigCount(translate(g, b, x).intersection_size(c));
    return total;
}

std::vector<std::uint64_t> representation_counts(const AbelianGroup& g, const ElementSet& a, const ElementSet& b) {
    std::vector<std::uint64_t> r(g.order(), 0);
    const auto bs = b.indices();
    for (auto x : a.indices()) {
        for (auto y : bs) ++r[g.add(x, y)];
    }
    return r;
}

ElementSet restricted_sumset(const AbelianGroup& g, const ElementSet& a, const ElementSet& b, double eps) {
    check_eps(eps);
    const mpq_class need = exact(eps) * static_cast<unsigned long>(g.order());
    const auto r = representation_counts(g, a, b);
    ElementSet out(g.order());
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (mpq_class(static_cast<unsigned long>(r[x])) >= need) out.insert(x);
    }
    return out;
}

BigCount total_census(const AbelianGroup& g, const CensusOptions& options) {
    check_cap(g, std::min(options.max_order, IndependentSetKernel::kMaxSide), "total census");
    const SmallGroup sg(g);
    const std::size_t n = sg.n();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<u128> partial(std::max<std::size_t>(1, options.threads), 0);
    fan_out(options.threads, subsets, [&](std::size_t w, std::uint64_t begin, std::uint64_t end) {
        IndependentSetKernel kernel;
        std::vector<std::uint64_t> masks;
        u128 acc = 0;
        for (std::uint64_t a = begin; a < end; ++a) {
            sg.link_masks(a, masks);
            acc += kernel.count(masks);
        }
        partial[w] = acc;
    });
    u128 total = 0;
    for (auto p : partial) total += p;
    return BigCount::from_u128(total);
}

MinKBreakdown census_by_min_k(const AbelianGroup& g, const CensusOptions& options) {
    check_cap(g, std::min(options.max_order, IndependentSetKernel::kMaxSide), "min-k breakdown");
    const SmallGroup sg(g);
    const std::size_t n = sg.n();
    const std::uint64_t subsets = std::uint64_t{1} << n;

    std::vector<std::vector<std::uint64_t>> binom(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }

    const std::size_t workers = std::max<std::size_t>(1, options.threads);
    std::vector<std::vector<u128>> partial(workers, std::vector<u128>(n + 1, 0));
    fan_out(options.threads, subsets, [&](std::size_t w, std::uint64_t begin, std::uint64_t end) {
        IndependentSetKernel kernel;
        std::vector<std::uint64_t> masks;
        std::vector<std::uint64_t> hist((n + 1) * (n + 1));
        auto& out = partial[w];
        for (std::uint64_t a = begin; a < end; ++a) {
            const auto a_size = static_cast<std::size_t>(std::popcount(a));
            sg.link_masks(a, masks);
            std::fill(hist.begin(), hist.end(), 0);
            kernel.profile(masks, hist);
            for (std::size_t b = 0; b <= n; ++b) {
                for (std::size_t free = 0; free <= n; ++free) {
                    const auto h = hist[b * (n + 1) + free];
                    if (h == 0) continue;
                    for (std::size_t c = 0; c <= free; ++c) {
                        out[std::min({a_size, b, c})] += static_cast<u128>(h) * binom[free][c];
                    }
                }
            }
        }
    });
    MinKBreakdown r;
    r.counts.assign(n + 1, BigCount{});
    for (std::size_t k = 0; k <= n; ++k) {
        u128 sum = 0;
        for (const auto& p : partial) sum += p[k];
        r.counts[k] = BigCount::from_u128(sum);
    }
    return r;
}

BigCount brute_force_oracle(const AbelianGroup& g, std::size_t max_order) {
    check_cap(g, max_order, "brute-force oracle");
    const std::size_t n = g.order();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<ElementSet> all;
    all.reserve(subsets);
    for (std::uint64_t m = 0; m < subsets; ++m) all.push_back(ElementSet::from_mask(n, m));
    std::uint64_t count = 0;
    for (const auto& a : all) {
        for (const auto& b : all) {
            for (const auto& c : all) count += is_sumfree_triplet(g, a, b, c) ? 1 : 0;
        }
    }
    return BigCount(count);
}

WitnessReport subgroup_witnesses(const AbelianGroup& g) {
    WitnessReport r;
    r.p1 = smallest_prime_factor(g);
    r.subgroup = index_p1_subgroup(g);
    const auto n = g.order();
    const auto h_size = r.subgroup.size();
    r.count = BigCount::pow2(n + h_size);  // 2^|H| * 2^|H| * 2^(N - |H|)
    const auto outside = r.subgroup.complement();
    // Sum-freeness is inherited by subsets, so the maximal triplet settles all of them.
    r.verified = h_size * r.p1 == n && is_subgroup(g, r.subgroup) &&
                 is_sumfree_triplet(g, r.subgroup, r.subgroup, outside);
    if (n <= kWitnessEnumerationCap) {
        r.enumerated = true;
        const SmallGroup sg(g);
        const auto hm = r.subgroup.mask64();
        const auto om = outside.mask64();
        auto sub_masks = [](std::uint64_t super) {
            std::vector<std::uint64_t> out;
            for (std::uint64_t s = super;; s = (s - 1) & super) {
                out.push_back(s);
                if (s == 0) break;
            }
            return out;
        };
        const auto hs = sub_masks(hm);
        const auto os = sub_masks(om);
        std::uint64_t checked = 0;
        for (auto a : hs) {
            for (auto b : hs) {
                for (auto c : os) {
                    if (solutions_masks(sg, a, b, c) != 0) r.verified = false;
                    ++checked;
                }
            }
        }
        if (BigCount(checked) != r.count) r.verified = false;
    }
    return r;
}

SupersatHypotheses supersat_hypotheses(const AbelianGroup& g, double eps) {
    check_eps(eps);
    const auto n = static_cast<unsigned long>(g.order());
    const mpq_class e = exact(eps);
    SupersatHypotheses h;
    if (g.is_cyclic_prime_order()) {
        h.regime = "zp";
        h.min_size = floor_q(e * n) + 1;                   // strict: |X| > eps p
        h.min_sum = ceil_q((1 + e) * n);                   // sum >= (1 + eps) p
    } else {
        h.regime = "general";
        h.min_size = ceil_q(e * n);                        // |X| >= eps N
        h.min_sum = ceil_q((mpq_class(3, 2) + e) * n);     // sum >= (3/2 + eps) N
    }
    if (h.min_size > n || h.min_sum > 3 * n) {
        throw InvalidInput("supersaturation hypotheses cannot be met for eps=" + std::to_string(eps) +
                           " and N=" + std::to_string(n));
    }
    return h;
}

SupersatReport supersat_check(const AbelianGroup& g, double eps, std::uint64_t trials, std::uint64_t seed) {
    const auto hyp = supersat_hypotheses(g, eps);
    const SmallGroup sg(g);
    const std::size_t n = sg.n();
    auto report = make_report(g, eps, hyp);
    std::mt19937_64 rng(seed);
    std::uint64_t best = UINT64_MAX;
    const std::size_t span = n - hyp.min_size + 1;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::size_t a = 0, b = 0, c = 0;
        while (true) {
            a = hyp.min_size + uniform_below(rng, span);
            b = hyp.min_size + uniform_below(rng, span);
            const std::size_t c_min = std::max(hyp.min_size, hyp.min_sum > a + b ? hyp.min_sum - a - b : 0);
            if (c_min > n) continue;
            // Half of the draws sit on the sum boundary, where violations would appear first.
            c = (rng() & 1U) ? c_min : c_min + uniform_below(rng, n - c_min + 1);
            break;
        }
        const auto sa = random_subset(rng, n, a);
        const auto sb = random_subset(rng, n, b);
        const auto sc = random_subset(rng, n, c);
        best = std::min(best, solutions_masks(sg, sa, sb, sc));
    }
    report.trials = trials;
    report.min_solutions_found = BigCount(trials == 0 ? 0 : best);
    report.all_passed = trials == 0 || meets_sigma(report.min_solutions_found, eps, n);
    return report;
}

SupersatReport supersat_exhaustive(const AbelianGroup& g, double eps) {
    if (g.order() > 8) throw CapExceeded("exhaustive supersaturation check capped at |G| <= 8");
    const auto hyp = supersat_hypotheses(g, eps);
    const SmallGroup sg(g);
    const std::size_t n = sg.n();
    auto report = make_report(g, eps, hyp);
    report.exhaustive = true;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<std::uint64_t> sized;
    for (std::uint64_t m = 0; m < subsets; ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) >= hyp.min_size) sized.push_back(m);
    }
    std::uint64_t best = UINT64_MAX;
    std::uint64_t examined = 0;
    for (auto a : sized) {
        for (auto b : sized) {
            std::vector<std::uint64_t> shifted;
            for (auto m = a; m; m &= m - 1) shifted.push_back(sg.translate(b, static_cast<std::size_t>(std::countr_zero(m))));
            const auto ab = static_cast<std::size_t>(std::popcount(a) + std::popcount(b));
            for (auto c : sized) {
                if (ab + static_cast<std::size_t>(std::popcount(c)) < hyp.min_sum) continue;
                std::uint64_t sol = 0;
                for (auto s : shifted) sol += static_cast<std::uint64_t>(std::popcount(s & c));
                best = std::min(best, sol);
                ++examined;
            }
        }
    }
    report.trials = examined;
    report.min_solutions_found = BigCount(examined == 0 ? 0 : best);
    report.all_passed = examined == 0 || meets_sigma(report.min_solutions_found, eps, n);
    return report;
}

}  // namespace sumfree
