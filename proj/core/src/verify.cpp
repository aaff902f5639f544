#include "sumfree/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "sumfree/bounds.hpp"
#include "sumfree/census.hpp"
#include "sumfree/error.hpp"
#include "sumfree/group.hpp"
#include "sumfree/iscount.hpp"
#include "sumfree/linkgraph.hpp"

namespace sumfree {

namespace {

class Recorder {
public:
    Recorder(std::string suite, bool keep) : keep_(keep) { result_.name = std::move(suite); }

    void check(const std::string& id, bool ok, const std::string& detail = {}) {
        ++result_.checks;
        if (!ok) result_.failures.push_back(id + (detail.empty() ? "" : ": " + detail));
        if (keep_) {
            nlohmann::ordered_json j;
            j["suite"] = result_.name;
            j["check"] = id;
            j["pass"] = ok;
            if (!detail.empty()) j["detail"] = detail;
            result_.records.push_back(j.dump());
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
    bool keep_;
};

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi, const std::optional<std::uint64_t>& only) {
    std::vector<std::uint64_t> out;
    if (only) {
        if (!is_prime(*only) || *only < lo) {
            throw InvalidInput("--p must be a prime >= " + std::to_string(lo) + ", got " + std::to_string(*only));
        }
        out.push_back(*only);
        return out;
    }
    for (std::uint64_t p = lo; p <= hi; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

ElementSet zp_set(std::uint64_t p, std::initializer_list<std::uint64_t> elems) {
    ElementSet s(p);
    for (auto e : elems) s.insert(e % p);
    return s;
}

std::string set_text(const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto i : s.indices()) {
        out += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return out + "}";
}

// Independent sets of the m-cycle (m >= 3) or m-path by a direct subset loop.
std::uint64_t direct_count(std::size_t m, bool cycle) {
    std::uint64_t count = 0;
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
        std::uint64_t shifted = (s << 1) & full;
        if (cycle) shifted |= s >> (m - 1);
        if ((s & shifted) == 0) ++count;
    }
    return count;
}

void for_each_subset_of_size(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

SuiteResult claim2(const VerifyOptions& o) {
    Recorder rec("claim2", o.records);
    for (auto p : primes_in(5, o.max_p, o.p)) {
        const auto locus = c4_locus_zp(p);
        std::size_t mismatches = 0;
        std::string first;
        for (std::uint64_t x = 2; x < p; ++x) {
            const bool predicted = locus.contains(x);
            const bool actual = contains_c4(build_link_graph(AbelianGroup::make({p}), zp_set(p, {0, 1, x})));
            if (predicted != actual) {
                if (mismatches++ == 0) first = "x=" + std::to_string(x);
            }
        }
        rec.check("p=" + std::to_string(p) + " locus", mismatches == 0,
                  mismatches == 0 ? "" : std::to_string(mismatches) + " mismatches, first " + first);
        if (p <= 13) {
            std::size_t bad = 0;
            std::string first_bad;
            const auto g = AbelianGroup::make({p});
            for_each_subset_of_size(p, 3, [&](const std::vector<std::size_t>& idx) {
                ElementSet a(p, std::span<const std::size_t>(idx));
                if (c4_predicted_zp(p, a) != contains_c4(build_link_graph(g, a)) && bad++ == 0) first_bad = set_text(a);
            });
            rec.check("p=" + std::to_string(p) + " all 3-sets", bad == 0, bad == 0 ? "" : "first " + first_bad);
        }
    }
    return rec.take();
}

SuiteResult claim3(const VerifyOptions& o) {
    Recorder rec("claim3", o.records);
    for (std::size_t n = 2; n <= 12; ++n) {
        const BigCount lucas = lucas_cycle_count(n);
        const BigCount direct(direct_count(2 * n, true));
        const BigCount linked = count_independent_sets(build_link_graph(AbelianGroup::make({n}), zp_set(n, {0, 1})));
        rec.check("n=" + std::to_string(n), lucas == direct && lucas == linked,
                  "lucas " + lucas.to_string() + ", direct " + direct.to_string() + ", link graph " + linked.to_string());
    }
    for (std::size_t m = 1; m <= 20; ++m) {
        const BigCount fib = fibonacci_path_count(m);
        const BigCount direct(direct_count(m, false));
        rec.check("path m=" + std::to_string(m), fib == direct, "fibonacci " + fib.to_string() + ", direct " + direct.to_string());
    }
    return rec.take();
}

SuiteResult claim5(const VerifyOptions& o) {
    Recorder rec("claim5", o.records);
    for (auto p : primes_in(5, o.max_p, o.p)) {
        const auto g = AbelianGroup::make({p});
        const auto h_minus = build_link_graph(g, zp_set(p, {0, 1, p - 1}));
        const auto h_half = build_link_graph(g, zp_set(p, {0, 1, (p + 1) / 2}));
        const auto h_two = build_link_graph(g, zp_set(p, {0, 1, 2}));
        const auto phi = tabulate_map(p, [p](Vertex v) { return apply_phi(p, v); });
        const auto phi_inv = tabulate_map(p, [p](Vertex v) { return apply_phi_inverse(p, v); });
        const auto theta = tabulate_map(p, [p](Vertex v) { return apply_theta(p, v); });
        const auto theta_inv = tabulate_map(p, [p](Vertex v) { return apply_theta_inverse(p, v); });
        const std::string id = "p=" + std::to_string(p);
        rec.check(id + " phi", verify_edge_preservation(phi, h_minus, h_half) &&
                                   verify_edge_preservation(phi_inv, h_half, h_minus));
        rec.check(id + " theta", verify_edge_preservation(theta, h_minus, h_two) &&
                                     verify_edge_preservation(theta_inv, h_two, h_minus));
        if (2 * p <= kDefaultIsomorphismVertexCap && p <= 23) {
            rec.check(id + " isomorphism search",
                      is_isomorphic(h_minus, h_half) && is_isomorphic(h_minus, h_two) && is_isomorphic(h_half, h_two));
        }
    }
    return rec.take();
}

SuiteResult claim6(const VerifyOptions& o) {
    Recorder rec("claim6", o.records);
    const auto table = appendix_table(6);
    auto at = [&](std::size_t p) -> const AppendixState& { return table.at(p - 2); };
    struct Seed {
        const char* name;
        std::optional<BigCount> actual;
        std::uint64_t expected;
    };
    const Seed seeds[] = {
        {"a_2", at(2).a, 2}, {"a_3", at(3).a, 4}, {"a_4", at(4).a, 9}, {"b_4", at(4).b, 1}, {"b_5", at(5).b, 3},
        {"b_6", at(6).b, 8}, {"c_2", at(2).c, 3}, {"c_3", at(3).c, 7}, {"d_3", at(3).d, 2}, {"d_4", at(4).d, 5},
    };
    for (const auto& s : seeds) {
        rec.check(std::string("seed ") + s.name, s.actual && *s.actual == BigCount(s.expected),
                  s.actual ? "got " + s.actual->to_string() : "missing");
    }
    std::vector<std::uint64_t> ps;
    if (o.p) {
        if (*o.p < 3) throw InvalidInput("claim6 needs p >= 3");
        ps.push_back(*o.p);
    } else {
        for (std::uint64_t p = 3; p <= 13; ++p) ps.push_back(p);
    }
    for (auto p : ps) {
        const BigCount closed = pell_closed_form(p);
        const BigCount recurrence = appendix_recurrences(p).total();
        const BigCount counted = count_independent_sets(build_link_graph(AbelianGroup::make({p}), zp_set(p, {0, 1, p - 1})));
        rec.check("p=" + std::to_string(p), closed == recurrence && closed == counted,
                  "closed form " + closed.to_string() + ", recurrences " + recurrence.to_string() + ", count " +
                      counted.to_string());
    }
    return rec.take();
}

SuiteResult sandwich(const VerifyOptions& o) {
    Recorder rec("sandwich", o.records);
    {
        const auto chain = prime_case_base_chain();
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            if (compare(chain[i].second, chain[i + 1].second) != Cmp::Greater) {
                ok = false;
                detail = chain[i].first + " vs " + chain[i + 1].first;
                break;
            }
        }
        rec.check("base chain", ok, detail);
        const HPReal alpha = csikvari_alpha(3);
        const HPReal base = csikvari_base(3);
        rec.check("alpha(3) range",
                  compare(alpha, HPReal::from_rational(Rational(2410, 10000))) == Cmp::Greater &&
                      compare(alpha, HPReal::from_rational(Rational(2411, 10000))) == Cmp::Less &&
                      compare(base, HPReal::from_rational(Rational(238898, 100000))) == Cmp::Greater &&
                      compare(base, HPReal::from_rational(Rational(238899, 100000))) == Cmp::Less,
                  "alpha ~" + alpha.lower_string(12) + ", base ~" + base.lower_string(12));
    }
    for (auto p : primes_in(3, 13, o.p)) {
        const auto g = AbelianGroup::make({p});
        for (std::size_t k = 2; k <= std::min<std::size_t>(5, p); ++k) {
            std::size_t bad = 0;
            std::size_t total = 0;
            std::string first_bad;
            for_each_subset_of_size(p, k, [&](const std::vector<std::size_t>& idx) {
                ElementSet a(p, std::span<const std::size_t>(idx));
                const SandwichReport r = sandwich_report(g, a);
                ++total;
                if (!r.passed() && bad++ == 0) {
                    first_bad = "A=" + set_text(a) + " i=" + r.count.to_string() + " lower " +
                                to_string(r.lower_decision.result) + " upper " + to_string(r.upper_decision.result);
                }
            });
            rec.check("p=" + std::to_string(p) + " |A|=" + std::to_string(k), bad == 0,
                      std::to_string(total) + " sets" + (bad ? ", first failure " + first_bad : ""));
        }
        if (p == 7) {
            const SandwichReport r = sandwich_report(g, zp_set(7, {0, 1, 3}));
            rec.check("p=7 A={0,1,3} equality",
                      r.count == BigCount(458) && r.girth == std::optional<std::size_t>(6) && r.girth5_equality() &&
                          r.passed(),
                      "i=" + r.count.to_string());
        }
    }
    return rec.take();
}

// Restricted sum-set size: |A +_eps B| >= min(N, |A| + |B| - N/p1) - 3 sqrt(eps) N whenever sqrt(eps) N < |A|, |B|.
void restricted_sumset_bound(Recorder& rec, const AbelianGroup& g) {
    const std::uint64_t n = g.order();
    const std::uint64_t h = n / smallest_prime_factor(g);
    std::vector<std::size_t> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) table[x * n + y] = g.add(x, y);
    }
    const double eps_values[] = {0.01, 0.05, 0.1};
    std::size_t bad = 0;
    std::size_t instances = 0;
    std::string first_bad;
    std::vector<std::uint32_t> reps(n);
    for (double eps : eps_values) {
        const Rational e(eps);
        const Rational nn(static_cast<unsigned long>(n));
        mpz_class need;  // ceil(eps N)
        mpz_cdiv_q(need.get_mpz_t(), Rational(e * nn).get_num_mpz_t(), Rational(e * nn).get_den_mpz_t());
        for (std::uint64_t am = 1; am < (std::uint64_t{1} << n); ++am) {
            const std::uint64_t sa = static_cast<std::uint64_t>(std::popcount(am));
            if (!(e * nn * nn < Rational(static_cast<unsigned long>(sa * sa)))) continue;
            for (std::uint64_t bm = 1; bm < (std::uint64_t{1} << n); ++bm) {
                const std::uint64_t sb = static_cast<std::uint64_t>(std::popcount(bm));
                if (!(e * nn * nn < Rational(static_cast<unsigned long>(sb * sb)))) continue;
                std::fill(reps.begin(), reps.end(), 0);
                for (std::uint64_t a = am; a; a &= a - 1) {
                    const auto x = static_cast<std::size_t>(std::countr_zero(a));
                    for (std::uint64_t b = bm; b; b &= b - 1) ++reps[table[x * n + static_cast<std::size_t>(std::countr_zero(b))]];
                }
                std::uint64_t size = 0;
                for (auto r : reps) size += (r >= need.get_ui()) ? 1 : 0;
                const std::uint64_t target = std::min(n, sa + sb > h ? sa + sb - h : 0);
                ++instances;
                if (size >= target) continue;
                const std::uint64_t gap = target - size;
                if (Rational(9) * e * nn * nn >= Rational(static_cast<unsigned long>(gap * gap))) continue;
                if (bad++ == 0) {
                    first_bad = "eps=" + std::to_string(eps) + " A=" + set_text(ElementSet::from_mask(n, am)) +
                                " B=" + set_text(ElementSet::from_mask(n, bm));
                }
            }
        }
    }
    rec.check("restricted sumset size " + g.name(), bad == 0,
              std::to_string(instances) + " instances" + (bad ? ", first failure " + first_bad : ""));
}

SuiteResult supersat(const VerifyOptions& o) {
    if (!o.seed) throw InvalidInput("the supersat suite samples random triples and needs an explicit --seed");
    Recorder rec("supersat", o.records);
    auto describe = [](const SupersatReport& r) {
        std::ostringstream s;
        s << r.trials << " triples, min solutions " << r.min_solutions_found << ", threshold " << r.threshold;
        return s.str();
    };
    {
        const SupersatReport r = supersat_exhaustive(AbelianGroup::make({7}), o.supersat_eps);
        rec.check("Z/7 exhaustive", r.all_passed, describe(r));
    }
    const std::vector<std::vector<std::uint64_t>> sampled = {{11}, {13}, {2, 2, 2}};
    for (const auto& shape : sampled) {
        const auto g = AbelianGroup::make(shape);
        const SupersatReport r = supersat_check(g, o.supersat_eps, o.trials, *o.seed);
        rec.check(g.name() + " sampled", r.all_passed, describe(r));
    }
    for (const auto& g : enumerate_factor_shapes(10)) {
        if (g.order() >= 2) restricted_sumset_bound(rec, g);
    }
    return rec.take();
}

SuiteResult codegree(const VerifyOptions& o) {
    Recorder rec("codegree", o.records);
    std::vector<Rational> taus;
    if (o.tau) {
        taus.push_back(*o.tau);
    } else {
        taus = {Rational(1, 4), Rational(1, 2), Rational(1)};
    }
    for (const auto& g : enumerate_factor_shapes(20)) {
        const std::uint64_t n = g.order();
        if (n < 2) continue;
        for (const auto& tau : taus) {
            const CodegreeReport r = codegree_analysis(g, tau);
            const Rational expected = codegree_delta(n, tau);
            const Rational nq(static_cast<unsigned long>(n));
            const bool ok = r.delta == expected && r.delta2 == 1 / (nq * tau) && r.delta3 == 1 / (nq * tau * tau);
            rec.check(g.name() + " tau=" + tau.get_str(), ok, "delta " + r.delta.get_str() + ", expected " + expected.get_str());
        }
    }
    return rec.take();
}

SuiteResult witnesses(const VerifyOptions& o) {
    Recorder rec("witnesses", o.records);
    for (const auto& g : enumerate_factor_shapes(kWitnessEnumerationCap)) {
        const std::uint64_t n = g.order();
        if (n < 2) continue;
        const WitnessReport r = subgroup_witnesses(g);
        const BigCount expected = BigCount::pow2(n + n / r.p1);
        rec.check(g.name(), r.count == expected && r.verified && r.enumerated,
                  "count " + r.count.to_string() + ", expected " + expected.to_string());
    }
    return rec.take();
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"claim2", claim2},     {"claim3", claim3},   {"claim5", claim5},     {"claim6", claim6},
        {"sandwich", sandwich}, {"supersat", supersat}, {"codegree", codegree}, {"witnesses", witnesses},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) return fn(options);
    }
    throw InvalidInput("unknown verification suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_suites(std::string_view selector, const VerifyOptions& options) {
    std::vector<SuiteResult> out;
    if (selector == "all") {
        for (const auto& [n, fn] : registry()) out.push_back(fn(options));
    } else {
        out.push_back(run_suite(selector, options));
    }
    return out;
}

}  // namespace sumfree
