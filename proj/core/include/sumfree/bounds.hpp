#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumfree/bigcount.hpp"
#include "sumfree/census.hpp"
#include "sumfree/element_set.hpp"
#include "sumfree/group.hpp"
#include "sumfree/hpreal.hpp"

namespace sumfree {

inline constexpr double kDefaultEpsilon = 1e-4;
inline constexpr double kDefaultRootTolerance = 1e-15;

enum class BoundDirection { Upper, Lower };

const char* to_string(BoundDirection d);

/// value = coefficient * base^exponent, where base is the growth rate per unit of the
/// exponent (p or N). Asymptotic terms carry an unevaluated (1+o(1)) factor that is
/// left out of value.
struct BoundTerm {
    std::string label;
    std::string base_expression;
    HPReal base;
    Rational exponent;
    std::string coefficient_expression;
    HPReal coefficient;
    HPReal value;
    bool asymptotic = false;
};

struct BoundReport {
    std::string theorem;
    std::vector<std::pair<std::string, std::string>> parameters;
    BoundDirection direction = BoundDirection::Upper;
    std::vector<BoundTerm> terms;  // decreasing base
    HPReal total;                  // sum of term values
    mpfr_prec_t precision = kDefaultPrecisionBits;
};

struct BoundPair {
    BoundReport upper;
    BoundReport lower;
};

/// (2^(d+1) - 1)^(n / 2d): independent sets of a d-regular bipartite graph on n vertices.
HPReal kahn_bound(std::size_t d, std::size_t n, mpfr_prec_t precision = kDefaultPrecisionBits);
/// 458^(n/14): cubic graphs of girth at least 5 on n vertices.
HPReal perarnau_perkins_bound(std::size_t n, mpfr_prec_t precision = kDefaultPrecisionBits);
/// Bracket of width <= tol around the root of a(1-a)^(d-1) = (1-2a)^d in [0, 1/2].
/// Raises the working precision as needed; throws PrecisionExhausted past 1024 bits.
HPReal csikvari_alpha(std::size_t d, double tol = kDefaultRootTolerance,
                      mpfr_prec_t precision = kDefaultPrecisionBits);
/// (1-a)^(d-1) / a for the root a; equals a + 1/a - 2 when d = 3.
HPReal csikvari_base(std::size_t d, mpfr_prec_t precision = kDefaultPrecisionBits);
/// csikvari_base(d)^(n/2): lower bound on independent sets of a d-regular bipartite graph.
HPReal csikvari_bound(std::size_t d, std::size_t n, mpfr_prec_t precision = kDefaultPrecisionBits);

BigCount k0_formula(std::uint64_t n);
BigCount k1_formula(std::uint64_t p);

/// e^(eps (1 + log(1/eps))), growth rate of the binomial tail sum_{k <= eps p} C(p, k) / 2.
HPReal binomial_tail_base(double eps, mpfr_prec_t precision = kDefaultPrecisionBits);
/// 3 C(p,4) 31^(p/4) + 3 * 63^(p/5) * 2 * binomial_tail_base(eps)^p. Requires 0 < eps < 1e-3.
HPReal small_k_tail(std::uint64_t p, double eps = kDefaultEpsilon, mpfr_prec_t precision = kDefaultPrecisionBits);

/// Prime p >= 7.
BoundPair theorem1_bounds(std::uint64_t p, mpfr_prec_t precision = kDefaultPrecisionBits);
BoundReport theorem7_bound(std::uint64_t n, double eps = kDefaultEpsilon,
                           mpfr_prec_t precision = kDefaultPrecisionBits);
BoundPair theorem8_bounds(std::uint64_t n, double eps = kDefaultEpsilon, mpfr_prec_t precision = kDefaultPrecisionBits);

/// Q_{3,1}(p) = 3 C(p, 2) and Q_{3,2}(p) = (p - 5) C(p, 2).
BigCount q31(std::uint64_t p);
BigCount q32(std::uint64_t p);

/// Named bases 4, 3, phi^2, 1+sqrt2, 458^(1/7), a+1/a-2, 31^(1/4), strictly decreasing.
std::vector<std::pair<std::string, HPReal>> prime_case_base_chain(mpfr_prec_t precision = kDefaultPrecisionBits);

enum class ContainerRegime { CyclicPrime, General };

/// 2^((1 + 2 eps) N) for Z/p, 2^((3/2 + 2 eps) N) otherwise. Accepts 0 <= eps < 1.
HPReal container_exponent(std::uint64_t n, double eps, ContainerRegime which,
                          mpfr_prec_t precision = kDefaultPrecisionBits);

/// 4/(N tau) + 2/(N tau^2).
Rational codegree_delta(std::uint64_t n, const Rational& tau);

struct CodegreeReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    Rational average_degree;
    Rational delta2;
    Rational delta3;
    Rational delta;
};

/// Builds the 3-partite hypergraph {x, y, x+y} on three copies of g and evaluates the
/// co-degree function from its actual pair and triple degrees.
CodegreeReport codegree_analysis(const AbelianGroup& g, const Rational& tau);
Rational generic_codegree(const AbelianGroup& g, const Rational& tau);

struct SandwichReport {
    std::size_t n = 0;  // vertices per side
    std::size_t degree = 0;
    BigCount count;
    std::optional<std::size_t> girth;
    bool c4 = false;
    HPReal lower;
    HPReal upper;
    std::optional<HPReal> girth5_upper;
    Decision lower_decision;   // lower vs count
    Decision upper_decision;   // count vs upper
    std::optional<Decision> girth5_decision;  // count vs girth5_upper
    [[nodiscard]] bool lower_holds() const;
    [[nodiscard]] bool upper_holds() const;
    [[nodiscard]] bool girth5_holds() const;
    [[nodiscard]] bool girth5_equality() const;
    [[nodiscard]] bool passed() const { return lower_holds() && upper_holds() && girth5_holds(); }
};

/// Exact i(H_A) against the Csikvari lower and Kahn upper bounds (and the 458^(n/14) bound
/// for cubic graphs of girth >= 5). Requires |A| >= 2.
SandwichReport sandwich_report(const AbelianGroup& g, const ElementSet& a);

struct DominationReport {
    BigCount census;
    BigCount k0;
    BigCount k1;
    HPReal bound;  // k0 + k1 + sum_{k>=2} 3 C(N,k) kahn(k, 2N)
    Decision decision;  // census vs bound
    [[nodiscard]] bool holds() const {
        return decision.result == Cmp::Less || decision.result == Cmp::Equal;
    }
};

/// Non-asymptotic upper bound check for a group within the breakdown cap.
DominationReport census_domination(const AbelianGroup& g, const CensusOptions& options = {1, kDefaultBreakdownCap});

}  // namespace sumfree
