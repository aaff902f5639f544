#include "sumfree/bounds.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <mutex>

#include "sumfree/error.hpp"
#include "sumfree/iscount.hpp"
#include "sumfree/linkgraph.hpp"

namespace sumfree {

const char* to_string(BoundDirection d) { return d == BoundDirection::Upper ? "upper" : "lower"; }

namespace {

HPReal integer(const BigCount& v, mpfr_prec_t prec) { return HPReal::from_integer(v, prec); }
HPReal integer(std::uint64_t v, mpfr_prec_t prec) { return HPReal::from_integer(BigCount(v), prec); }

HPReal power(std::uint64_t base, const Rational& e, mpfr_prec_t prec) { return pow(integer(base, prec), e); }

Rational exact(double v) { return decimal_rational(v); }

std::string shortest(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

std::string fraction(std::uint64_t num, std::uint64_t den) {
    return std::to_string(num) + "/" + std::to_string(den);
}

HPReal phi_squared(mpfr_prec_t prec) {
    return (integer(3, prec) + sqrt(integer(5, prec))) / integer(2, prec);
}

HPReal one_plus_sqrt2(mpfr_prec_t prec) { return integer(1, prec) + sqrt(integer(2, prec)); }

void check_epsilon(double eps, bool allow_zero) {
    if (!(eps < 1.0) || eps < 0.0 || (!allow_zero && eps == 0.0)) {
        throw InvalidInput("eps must lie in (0, 1), got " + shortest(eps));
    }
}

// a(1-a)^(d-1) - (1-2a)^d
HPReal root_function(const Rational& a, std::size_t d, mpfr_prec_t prec) {
    const HPReal x = HPReal::from_rational(a, prec);
    const HPReal one = integer(1, prec);
    return x * pow(one - x, Rational(static_cast<unsigned long>(d - 1))) -
           pow(one - x - x, Rational(static_cast<unsigned long>(d)));
}

struct RootBracket {
    Rational lo;
    Rational hi;
};

RootBracket bisect_root(std::size_t d, mpfr_prec_t prec) {
    Rational lo(0);
    Rational hi(1, 2);
    Rational target(1);
    mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(prec - 8));
    const BigCount zero(0);
    for (mpfr_prec_t it = 0; it < prec + 64 && hi - lo > target; ++it) {
        const Rational mid = (lo + hi) / 2;
        const Cmp s = compare(root_function(mid, d, prec), zero);
        if (s == Cmp::Greater) {
            hi = mid;
        } else if (s == Cmp::Less) {
            lo = mid;
        } else {
            if (s == Cmp::Equal) lo = hi = mid;
            break;
        }
    }
    return {lo, hi};
}

RootBracket cached_root(std::size_t d, mpfr_prec_t prec) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, mpfr_prec_t>, RootBracket> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({d, prec}); it != cache.end()) return it->second;
    }
    RootBracket b = bisect_root(d, prec);
    std::lock_guard lock(mutex);
    cache.emplace(std::make_pair(d, prec), b);
    return b;
}

HPReal bracket_interval(const RootBracket& b, mpfr_prec_t prec) {
    return HPReal::hull(HPReal::from_rational(b.lo, prec), HPReal::from_rational(b.hi, prec));
}

BoundTerm make_term(std::string label, std::string base_expression, HPReal base, Rational exponent,
                    std::string coefficient_expression, HPReal coefficient, HPReal value, bool asymptotic = false) {
    return BoundTerm{std::move(label),
                     std::move(base_expression),
                     std::move(base),
                     std::move(exponent),
                     std::move(coefficient_expression),
                     std::move(coefficient),
                     std::move(value),
                     asymptotic};
}

BoundTerm power_term(std::string label, std::string base_expression, HPReal base, std::uint64_t n,
                     std::string coefficient_expression, const BigCount& coefficient, mpfr_prec_t prec,
                     bool asymptotic = false) {
    HPReal coef = integer(coefficient, prec);
    HPReal value = coef * pow(base, Rational(static_cast<unsigned long>(n)));
    return make_term(std::move(label), std::move(base_expression), std::move(base), Rational(static_cast<unsigned long>(n)),
                     std::move(coefficient_expression), std::move(coef), std::move(value), asymptotic);
}

void finalize(BoundReport& r) {
    std::stable_sort(r.terms.begin(), r.terms.end(),
                     [](const BoundTerm& a, const BoundTerm& b) { return a.base.mid_double() > b.base.mid_double(); });
    HPReal total(r.precision);
    for (const auto& t : r.terms) total += t.value;
    r.total = std::move(total);
}

BigCount choose(std::uint64_t n, std::uint64_t k) { return BigCount::binomial(n, k); }

// Evaluates bound_at(prec) and compares against v, doubling precision until decided.
template <typename BoundAt>
std::pair<HPReal, Decision> decide_bound(BoundAt&& bound_at, const BigCount& v, bool bound_is_upper) {
    HPReal last;
    Decision d = decide([&](mpfr_prec_t prec) {
        last = bound_at(prec);
        return bound_is_upper ? compare(v, last) : compare(last, v);
    });
    return {std::move(last), d};
}

bool at_most(const Decision& d) { return d.result == Cmp::Less || d.result == Cmp::Equal; }

}  // namespace

HPReal kahn_bound(std::size_t d, std::size_t n, mpfr_prec_t precision) {
    if (d < 1 || n < 2 || n % 2 != 0) throw InvalidInput("kahn_bound needs d >= 1 and even n >= 2");
    BigCount base = BigCount::pow2(d + 1);
    base -= BigCount(1);
    return pow(integer(base, precision), Rational(static_cast<unsigned long>(n), static_cast<unsigned long>(2 * d)));
}

HPReal perarnau_perkins_bound(std::size_t n, mpfr_prec_t precision) {
    if (n < 2 || n % 2 != 0) throw InvalidInput("perarnau_perkins_bound needs even n >= 2");
    return power(458, Rational(static_cast<unsigned long>(n), 14UL), precision);
}

HPReal csikvari_alpha(std::size_t d, double tol, mpfr_prec_t precision) {
    if (d < 2) throw InvalidInput("csikvari_alpha needs d >= 2");
    if (!(tol > 0)) throw InvalidInput("csikvari_alpha needs tol > 0");
    const Rational limit = exact(tol);
    for (mpfr_prec_t prec = std::max(precision, kDefaultPrecisionBits); prec <= kMaxPrecisionBits; prec *= 2) {
        const RootBracket b = cached_root(d, prec);
        if (b.hi - b.lo <= limit) return bracket_interval(b, std::max(precision, prec));
    }
    throw PrecisionExhausted("csikvari_alpha: tolerance " + shortest(tol) + " not reached at " +
                             std::to_string(kMaxPrecisionBits) + " bits");
}

HPReal csikvari_base(std::size_t d, mpfr_prec_t precision) {
    if (d < 2) throw InvalidInput("csikvari_base needs d >= 2");
    const HPReal a = bracket_interval(cached_root(d, precision), precision);
    const HPReal one = integer(1, precision);
    return pow(one - a, Rational(static_cast<unsigned long>(d - 1))) / a;
}

HPReal csikvari_bound(std::size_t d, std::size_t n, mpfr_prec_t precision) {
    if (n % 2 != 0) throw InvalidInput("csikvari_bound needs even n");
    return pow(csikvari_base(d, precision), Rational(static_cast<unsigned long>(n / 2)));
}

BigCount k0_formula(std::uint64_t n) {
    mpz_class v = 3 * BigCount::pow(4, n).mpz() - 3 * BigCount::pow2(n).mpz() + 1;
    return BigCount(v);
}

BigCount k1_formula(std::uint64_t p) {
    if (p < 1) throw InvalidInput("k1_formula needs p >= 1");
    const mpz_class pz(static_cast<unsigned long>(p));
    mpz_class v = 3 * pz * (BigCount::pow(3, p).mpz() - 1) - 3 * pz * pz * (BigCount::pow2(p - 1).mpz() - 1) +
                  pz * pz * (pz - 1);
    return BigCount(v);
}

HPReal binomial_tail_base(double eps, mpfr_prec_t precision) {
    check_epsilon(eps, false);
    const HPReal e = HPReal::from_double(eps, precision);
    const HPReal one = integer(1, precision);
    return exp(e * (one + log(one / e)));
}

HPReal small_k_tail(std::uint64_t p, double eps, mpfr_prec_t precision) {
    if (!(eps > 0.0) || !(eps < 1e-3)) throw InvalidInput("small_k_tail needs 0 < eps < 1e-3");
    if (p < 1) throw InvalidInput("small_k_tail needs p >= 1");
    const HPReal k4 = integer(BigCount(3) * choose(p, 4), precision) * power(31, Rational(static_cast<unsigned long>(p), 4UL), precision);
    const HPReal rest = integer(6, precision) * power(63, Rational(static_cast<unsigned long>(p), 5UL), precision) *
                        pow(binomial_tail_base(eps, precision), Rational(static_cast<unsigned long>(p)));
    return k4 + rest;
}

BigCount q31(std::uint64_t p) { return BigCount(3) * choose(p, 2); }

BigCount q32(std::uint64_t p) {
    if (p < 5) throw InvalidInput("Q_{3,2} needs p >= 5");
    return BigCount(p - 5) * choose(p, 2);
}

BoundPair theorem1_bounds(std::uint64_t p, mpfr_prec_t precision) {
    if (p < 7 || !is_prime(p)) throw InvalidInput("theorem 1 bounds need a prime p >= 7, got " + std::to_string(p));
    const auto prec = precision;
    BoundReport upper;
    upper.theorem = "1";
    upper.parameters = {{"p", std::to_string(p)}};
    upper.direction = BoundDirection::Upper;
    upper.precision = prec;

    upper.terms.push_back(power_term("min=0", "4", integer(4, prec), p, "3", BigCount(3), prec));
    upper.terms.push_back(power_term("min=1", "3", integer(3, prec), p, "3p", BigCount(3 * p), prec));
    upper.terms.push_back(power_term("min=2", "phi^2", phi_squared(prec), p, "3C(p,2)", BigCount(3) * choose(p, 2), prec));
    upper.terms.push_back(power_term("min=3 with C4", "1+sqrt(2)", one_plus_sqrt2(prec), p, "Q31(p)", q31(p), prec));
    BoundReport lower = upper;
    lower.direction = BoundDirection::Lower;

    {
        HPReal coef = integer(q32(p), prec);
        HPReal value = coef * power(458, Rational(static_cast<unsigned long>(p), 7UL), prec);
        upper.terms.push_back(make_term("min=3 C4-free", "458^(1/7)", power(458, Rational(1, 7), prec),
                                        Rational(static_cast<unsigned long>(p)), "Q32(p)", std::move(coef), std::move(value)));
    }
    {
        HPReal coef = integer(BigCount(3) * choose(p, 4), prec);
        HPReal value = coef * power(31, Rational(static_cast<unsigned long>(p), 4UL), prec);
        upper.terms.push_back(make_term("min>=4", "31^(1/4)", power(31, Rational(1, 4), prec),
                                        Rational(static_cast<unsigned long>(p)), "3C(p,4)", std::move(coef), std::move(value),
                                        true));
    }
    lower.terms.push_back(power_term("min=3 C4-free", "a+1/a-2", csikvari_base(3, prec), p, "Q32(p)", q32(p), prec));

    finalize(upper);
    finalize(lower);
    return {std::move(upper), std::move(lower)};
}

BoundReport theorem7_bound(std::uint64_t n, double eps, mpfr_prec_t precision) {
    if (n < 2) throw InvalidInput("theorem 7 bound needs N >= 2");
    check_epsilon(eps, false);
    const auto prec = precision;
    BoundReport r;
    r.theorem = "7";
    r.parameters = {{"N", std::to_string(n)}, {"eps", shortest(eps)}};
    r.direction = BoundDirection::Upper;
    r.precision = prec;
    r.terms.push_back(power_term("min=0", "4", integer(4, prec), n, "3", BigCount(3), prec));
    r.terms.push_back(power_term("min=1", "3", integer(3, prec), n, "3N", BigCount(3 * n), prec));
    {
        const Rational unit = Rational(3, 2) + 2 * exact(eps);
        r.terms.push_back(make_term("min>=eps*N", "2^(3/2+2eps)", pow(integer(2, prec), unit),
                                    Rational(static_cast<unsigned long>(n)), "1", integer(1, prec),
                                    container_exponent(n, eps, ContainerRegime::General, prec)));
    }
    {
        HPReal coef = integer(BigCount(3) * choose(n, 2), prec);
        HPReal value = coef * power(7, Rational(static_cast<unsigned long>(n), 2UL), prec);
        r.terms.push_back(make_term("min=2", "7^(1/2)", power(7, Rational(1, 2), prec), Rational(static_cast<unsigned long>(n)),
                                    "3C(N,2)", std::move(coef), std::move(value), true));
    }
    finalize(r);
    return r;
}

BoundPair theorem8_bounds(std::uint64_t n, double eps, mpfr_prec_t precision) {
    if (n < 2) throw InvalidInput("theorem 8 bounds need N >= 2");
    check_epsilon(eps, false);
    const auto prec = precision;
    const std::uint64_t p1 = smallest_prime_factor(n);
    const BigCount lucas = lucas_number(2 * p1);
    const std::string lucas_root = lucas.to_string() + "^(1/" + std::to_string(p1) + ")";
    const Rational n_over_p1(static_cast<unsigned long>(n), static_cast<unsigned long>(p1));
    const Rational nq(static_cast<unsigned long>(n));

    BoundReport upper;
    upper.theorem = "8";
    upper.parameters = {{"N", std::to_string(n)}, {"p1", std::to_string(p1)}, {"eps", shortest(eps)}};
    upper.direction = BoundDirection::Upper;
    upper.precision = prec;
    upper.terms.push_back(power_term("min=0", "4", integer(4, prec), n, "3", BigCount(3), prec));
    upper.terms.push_back(power_term("min=1", "3", integer(3, prec), n, "3N", BigCount(3 * n), prec));
    BoundReport lower = upper;
    lower.direction = BoundDirection::Lower;
    lower.parameters.pop_back();

    const Rational unit = 1 + Rational(1, static_cast<unsigned long>(p1));
    const std::string unit_text = fraction(p1 + 1, p1);
    {
        const Rational with_eps = unit + 2 * exact(eps);
        upper.terms.push_back(make_term("min>=eps*N", "2^(" + unit_text + "+2eps)", pow(integer(2, prec), with_eps), nq, "1",
                                        integer(1, prec), pow(integer(2, prec), with_eps * nq)));
        lower.terms.push_back(make_term("index-p1 subgroup", "2^(" + unit_text + ")", pow(integer(2, prec), unit), nq, "1",
                                        integer(1, prec), pow(integer(2, prec), unit * nq)));
    }
    const HPReal lucas_base = pow(integer(lucas, prec), Rational(1UL, static_cast<unsigned long>(p1)));
    const HPReal lucas_power = pow(integer(lucas, prec), n_over_p1);
    {
        HPReal coef = integer(BigCount(3) * choose(n, 2), prec);
        HPReal value = coef * lucas_power;
        upper.terms.push_back(make_term("min=2", lucas_root, lucas_base, nq, "3C(N,2)", std::move(coef), std::move(value)));
    }
    {
        HPReal coef = HPReal::from_rational(Rational(static_cast<unsigned long>(3 * n), 2UL), prec);
        HPReal value = coef * lucas_power;
        lower.terms.push_back(make_term("min=2", lucas_root, lucas_base, nq, "3N/2", std::move(coef), std::move(value)));
    }
    {
        HPReal coef = integer(BigCount(3) * choose(n, 3), prec);
        HPReal value = coef * power(15, Rational(static_cast<unsigned long>(n), 3UL), prec);
        upper.terms.push_back(make_term("min=3", "15^(1/3)", power(15, Rational(1, 3), prec), nq, "3C(N,3)", std::move(coef),
                                        std::move(value), true));
    }
    finalize(upper);
    finalize(lower);
    return {std::move(upper), std::move(lower)};
}

std::vector<std::pair<std::string, HPReal>> prime_case_base_chain(mpfr_prec_t precision) {
    std::vector<std::pair<std::string, HPReal>> chain;
    chain.emplace_back("4", integer(4, precision));
    chain.emplace_back("3", integer(3, precision));
    chain.emplace_back("phi^2", phi_squared(precision));
    chain.emplace_back("1+sqrt(2)", one_plus_sqrt2(precision));
    chain.emplace_back("458^(1/7)", power(458, Rational(1, 7), precision));
    chain.emplace_back("a+1/a-2", csikvari_base(3, precision));
    chain.emplace_back("31^(1/4)", power(31, Rational(1, 4), precision));
    return chain;
}

HPReal container_exponent(std::uint64_t n, double eps, ContainerRegime which, mpfr_prec_t precision) {
    check_epsilon(eps, true);
    const Rational unit = (which == ContainerRegime::CyclicPrime ? Rational(1) : Rational(3, 2)) + 2 * exact(eps);
    return pow(integer(2, precision), unit * Rational(static_cast<unsigned long>(n)));
}

Rational codegree_delta(std::uint64_t n, const Rational& tau) {
    if (sgn(tau) <= 0) throw InvalidInput("tau must be positive");
    if (n < 1) throw InvalidInput("codegree_delta needs N >= 1");
    const Rational nq(static_cast<unsigned long>(n));
    Rational r = Rational(4) / (nq * tau) + Rational(2) / (nq * tau * tau);
    r.canonicalize();
    return r;
}

CodegreeReport codegree_analysis(const AbelianGroup& g, const Rational& tau) {
    if (sgn(tau) <= 0) throw InvalidInput("tau must be positive");
    constexpr std::uint64_t kCap = 256;
    const std::uint64_t n = g.order();
    if (n > kCap) throw CapExceeded("co-degree analysis limited to N <= " + std::to_string(kCap));
    const std::size_t vertices = 3 * n;
    std::vector<std::array<std::size_t, 3>> edges;
    edges.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) edges.push_back({x, n + y, 2 * n + g.add(x, y)});
    }
    std::vector<std::uint32_t> pair_count(vertices * vertices, 0);
    std::map<std::array<std::size_t, 3>, std::uint32_t> triple_count;
    std::vector<std::uint64_t> degree(vertices, 0);
    for (auto e : edges) {
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < 3; ++i) {
            ++degree[e[i]];
            for (std::size_t j = i + 1; j < 3; ++j) {
                ++pair_count[e[i] * vertices + e[j]];
                ++pair_count[e[j] * vertices + e[i]];
            }
        }
        ++triple_count[e];
    }
    std::vector<std::uint64_t> d3(vertices, 0);
    for (const auto& [e, c] : triple_count) {
        for (auto v : e) d3[v] = std::max<std::uint64_t>(d3[v], c);
    }
    std::uint64_t sum2 = 0;
    std::uint64_t sum3 = 0;
    for (std::size_t v = 0; v < vertices; ++v) {
        std::uint32_t best = 0;
        for (std::size_t u = 0; u < vertices; ++u) best = std::max(best, pair_count[v * vertices + u]);
        sum2 += best;
        sum3 += d3[v];
    }
    CodegreeReport r;
    r.vertices = vertices;
    r.edges = edges.size();
    const Rational vq(static_cast<unsigned long>(vertices));
    r.average_degree = Rational(static_cast<unsigned long>(3 * edges.size())) / vq;
    r.average_degree.canonicalize();
    r.delta2 = Rational(static_cast<unsigned long>(sum2)) / (tau * r.average_degree * vq);
    r.delta3 = Rational(static_cast<unsigned long>(sum3)) / (tau * tau * r.average_degree * vq);
    r.delta2.canonicalize();
    r.delta3.canonicalize();
    // r = 3: 2^(C(3,2)-1) * (2^-C(1,2) delta_2 + 2^-C(2,2) delta_3)
    r.delta = 4 * (r.delta2 + r.delta3 / 2);
    r.delta.canonicalize();
    return r;
}

Rational generic_codegree(const AbelianGroup& g, const Rational& tau) { return codegree_analysis(g, tau).delta; }

bool SandwichReport::lower_holds() const { return at_most(lower_decision); }
bool SandwichReport::upper_holds() const { return at_most(upper_decision); }
bool SandwichReport::girth5_holds() const { return !girth5_decision || at_most(*girth5_decision); }
bool SandwichReport::girth5_equality() const {
    return girth5_decision && girth5_decision->result == Cmp::Equal;
}

SandwichReport sandwich_report(const AbelianGroup& g, const ElementSet& a) {
    if (a.size() < 2) throw InvalidInput("sandwich_report needs |A| >= 2");
    const BipartiteLinkGraph h = build_link_graph(g, a);
    SandwichReport r;
    r.n = h.n_per_side();
    r.degree = a.size();
    r.count = count_independent_sets(h);
    r.girth = girth(h);
    r.c4 = contains_c4(h);
    const std::size_t d = r.degree;
    const std::size_t vertices = 2 * r.n;
    std::tie(r.lower, r.lower_decision) =
        decide_bound([&](mpfr_prec_t prec) { return csikvari_bound(d, vertices, prec); }, r.count, false);
    std::tie(r.upper, r.upper_decision) =
        decide_bound([&](mpfr_prec_t prec) { return kahn_bound(d, vertices, prec); }, r.count, true);
    if (d == 3 && r.girth && *r.girth >= 5) {
        auto [bound, decision] =
            decide_bound([&](mpfr_prec_t prec) { return perarnau_perkins_bound(vertices, prec); }, r.count, true);
        r.girth5_upper = std::move(bound);
        r.girth5_decision = decision;
    }
    return r;
}

DominationReport census_domination(const AbelianGroup& g, const CensusOptions& options) {
    const MinKBreakdown breakdown = census_by_min_k(g, options);
    const std::uint64_t n = g.order();
    DominationReport r;
    r.census = breakdown.total();
    r.k0 = breakdown.counts.at(0);
    r.k1 = breakdown.counts.size() > 1 ? breakdown.counts[1] : BigCount(0);
    auto bound_at = [&](mpfr_prec_t prec) {
        HPReal b = integer(r.k0 + r.k1, prec);
        for (std::uint64_t k = 2; k <= n; ++k) {
            b += integer(BigCount(3) * choose(n, k), prec) * kahn_bound(k, 2 * n, prec);
        }
        return b;
    };
    std::tie(r.bound, r.decision) = decide_bound(bound_at, r.census, true);
    return r;
}

}  // namespace sumfree
