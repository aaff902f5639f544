#include "sumfree/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "sumfree/error.hpp"

namespace sumfree {

AbelianGroup AbelianGroup::make(std::vector<std::uint64_t> factor_orders, std::uint64_t max_order) {
    if (factor_orders.empty()) throw InvalidInput("group needs at least one cyclic factor");
    std::uint64_t n = 1;
    for (auto m : factor_orders) {
        if (m < 2) throw InvalidInput("cyclic factor orders must be >= 2, got " + std::to_string(m));
        if (m > max_order || n > max_order / m) {
            throw CapExceeded("group order exceeds configured maximum " + std::to_string(max_order));
        }
        n *= m;
    }
    AbelianGroup g;
    g.factors_ = std::move(factor_orders);
    g.order_ = static_cast<std::size_t>(n);
    return g;
}

AbelianGroup AbelianGroup::trivial() { return AbelianGroup{}; }

bool AbelianGroup::is_cyclic_prime_order() const { return factors_.size() == 1 && is_prime(factors_[0]); }

std::string AbelianGroup::name() const {
    if (factors_.empty()) return "Z/1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += 'x';
        out += "Z/" + std::to_string(factors_[i]);
    }
    return out;
}

GroupElement AbelianGroup::element_at(std::size_t index) const {
    if (index >= order_) throw InvalidInput("element index out of range");
    GroupElement e;
    e.coords.resize(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        e.coords[i] = index % factors_[i];
        index /= factors_[i];
    }
    return e;
}

std::size_t AbelianGroup::index_of(const GroupElement& e) const {
    check_element(e);
    std::size_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) index = index * factors_[i] + e.coords[i];
    return index;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check_element(a);
    check_element(b);
    GroupElement r;
    r.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
    return r;
}

GroupElement AbelianGroup::neg(const GroupElement& a) const {
    check_element(a);
    GroupElement r;
    r.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        r.coords[i] = a.coords[i] == 0 ? 0 : factors_[i] - a.coords[i];
    }
    return r;
}

std::size_t AbelianGroup::add(std::size_t a, std::size_t b) const {
    if (a >= order_ || b >= order_) throw InvalidInput("element index out of range");
    if (factors_.size() == 1) return (a + b) % order_;
    std::size_t result = 0;
    std::size_t place = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        const auto m = factors_[i];
        result += ((a % m + b % m) % m) * place;
        a /= m;
        b /= m;
        place *= m;
    }
    return result;
}

std::size_t AbelianGroup::neg(std::size_t a) const { return index_of(neg(element_at(a))); }

std::uint64_t AbelianGroup::element_order(const GroupElement& a) const {
    check_element(a);
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        t = std::lcm(t, factors_[i] / std::gcd(factors_[i], a.coords[i]));
    }
    return t;
}

void AbelianGroup::check_element(const GroupElement& e) const {
    if (e.coords.size() != factors_.size()) {
        throw InvalidInput("element has " + std::to_string(e.coords.size()) + " coordinates, group has " +
                           std::to_string(factors_.size()) + " factors");
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (e.coords[i] >= factors_[i]) throw InvalidInput("coordinate out of range for its factor");
    }
}

AbelianGroup parse_group_spec(std::string_view spec, std::uint64_t max_order) {
    std::string compact;
    for (char c : spec) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    }
    if (compact.empty()) throw InvalidInput("empty group spec");

    std::vector<std::uint64_t> factors;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        if (compact.compare(pos, 2, "Z/") != 0) throw InvalidInput("group spec must look like Z/m[xZ/n...]: " + compact);
        pos += 2;
        std::uint64_t m = 0;
        const auto* first = compact.data() + pos;
        const auto* last = compact.data() + compact.size();
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec != std::errc{} || ptr == first) throw InvalidInput("bad cyclic order in group spec: " + compact);
        factors.push_back(m);
        pos = static_cast<std::size_t>(ptr - compact.data());
        if (pos < compact.size()) {
            if (compact[pos] != 'x' && compact[pos] != 'X' && compact[pos] != '*') {
                throw InvalidInput("expected 'x' between factors in group spec: " + compact);
            }
            ++pos;
            if (pos == compact.size()) throw InvalidInput("dangling 'x' in group spec");
        }
    }
    if (factors.size() == 1 && factors[0] == 1) return AbelianGroup::trivial();
    return AbelianGroup::make(std::move(factors), max_order);
}

OrderHistogram order_histogram(const AbelianGroup& g) {
    OrderHistogram h;
    for (std::size_t i = 0; i < g.order(); ++i) ++h.counts[g.element_order(g.element_at(i))];
    return h;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2) throw InvalidInput("smallest prime factor needs n >= 2");
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return d;
    }
    return n;
}

std::uint64_t smallest_prime_factor(const AbelianGroup& g) { return smallest_prime_factor(g.order()); }

ElementSet index_p1_subgroup(const AbelianGroup& g) {
    const auto p1 = smallest_prime_factor(g);
    const auto& f = g.factor_orders();
    const auto it = std::find_if(f.begin(), f.end(), [p1](std::uint64_t m) { return m % p1 == 0; });
    const auto factor = static_cast<std::size_t>(it - f.begin());
    ElementSet h(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (g.element_at(i).coords[factor] % p1 == 0) h.insert(i);
    }
    return h;
}

ElementSet translate(const AbelianGroup& g, const ElementSet& set, std::size_t x) {
    ElementSet out(g.order());
    for (auto s : set.indices()) out.insert(g.add(s, x));
    return out;
}

bool is_subgroup(const AbelianGroup& g, const ElementSet& set) {
    if (set.universe() != g.order() || !set.contains(0)) return false;
    const auto members = set.indices();
    for (auto a : members) {
        if (!set.contains(g.neg(a))) return false;
        for (auto b : members) {
            if (!set.contains(g.add(a, b))) return false;
        }
    }
    return true;
}

namespace {
void extend_shapes(std::vector<std::uint64_t>& prefix, std::uint64_t product, std::uint64_t max_order,
                   std::vector<AbelianGroup>& out) {
    const std::uint64_t start = prefix.empty() ? 2 : prefix.back();
    for (std::uint64_t m = start; product * m <= max_order; ++m) {
        prefix.push_back(m);
        out.push_back(AbelianGroup::make(prefix, max_order));
        extend_shapes(prefix, product * m, max_order, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<AbelianGroup> enumerate_factor_shapes(std::uint64_t max_order) {
    std::vector<AbelianGroup> out;
    std::vector<std::uint64_t> prefix;
    extend_shapes(prefix, 1, max_order, out);
    std::stable_sort(out.begin(), out.end(),
                     [](const AbelianGroup& a, const AbelianGroup& b) { return a.order() < b.order(); });
    return out;
}

}  // namespace sumfree
