#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/element_set.hpp"

namespace sumfree {

inline constexpr std::uint64_t kDefaultMaxGroupOrder = std::uint64_t{1} << 24;

struct GroupElement {
    std::vector<std::uint64_t> coords;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Number of elements of each exact order t.
struct OrderHistogram {
    std::map<std::uint64_t, std::uint64_t> counts;

    [[nodiscard]] std::uint64_t at(std::uint64_t t) const {
        auto it = counts.find(t);
        return it == counts.end() ? 0 : it->second;
    }
    friend bool operator==(const OrderHistogram&, const OrderHistogram&) = default;
};

/// Finite abelian group Z/m_1 x ... x Z/m_k. Elements are indexed in mixed radix with
/// the first factor most significant; every bit-vector in the library uses this indexing.
class AbelianGroup {
public:
    static AbelianGroup make(std::vector<std::uint64_t> factor_orders,
                             std::uint64_t max_order = kDefaultMaxGroupOrder);
    /// The one-element group (empty factor list); only reachable through this constructor.
    static AbelianGroup trivial();

    [[nodiscard]] const std::vector<std::uint64_t>& factor_orders() const { return factors_; }
    [[nodiscard]] std::size_t order() const { return order_; }
    [[nodiscard]] bool is_cyclic_prime_order() const;
    /// "Z/2xZ/3"; the trivial group prints as "Z/1".
    [[nodiscard]] std::string name() const;

    [[nodiscard]] GroupElement element_at(std::size_t index) const;
    [[nodiscard]] std::size_t index_of(const GroupElement& e) const;

    [[nodiscard]] GroupElement add(const GroupElement& a, const GroupElement& b) const;
    [[nodiscard]] GroupElement neg(const GroupElement& a) const;

    [[nodiscard]] std::size_t add(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::size_t neg(std::size_t a) const;
    [[nodiscard]] std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }

    [[nodiscard]] std::uint64_t element_order(const GroupElement& a) const;
    [[nodiscard]] std::uint64_t element_order(std::size_t a) const { return element_order(element_at(a)); }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }

private:
    void check_element(const GroupElement& e) const;

    std::vector<std::uint64_t> factors_;
    std::size_t order_ = 1;
};

/// Parses "Z/7", "Z/2xZ/2", "Z/2 x Z/3". "Z/1" yields the trivial group.
AbelianGroup parse_group_spec(std::string_view spec, std::uint64_t max_order = kDefaultMaxGroupOrder);

OrderHistogram order_histogram(const AbelianGroup& g);

/// Least prime dividing |G|; |G| / p_1 is the largest proper subgroup order.
std::uint64_t smallest_prime_factor(const AbelianGroup& g);
std::uint64_t smallest_prime_factor(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Subgroup of index p_1: kernel of reduction mod p_1 on the first factor divisible by p_1.
ElementSet index_p1_subgroup(const AbelianGroup& g);

/// { s + x : s in set }.
ElementSet translate(const AbelianGroup& g, const ElementSet& set, std::size_t x);
bool is_subgroup(const AbelianGroup& g, const ElementSet& set);

/// Every nondecreasing factor list (entries >= 2) with product <= max_order. Several
/// lists can describe isomorphic groups, e.g. {6} and {2,3}.
std::vector<AbelianGroup> enumerate_factor_shapes(std::uint64_t max_order);

}  // namespace sumfree
