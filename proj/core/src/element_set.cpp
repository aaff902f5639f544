#include "sumfree/element_set.hpp"

#include <bit>
#include <string>

#include "sumfree/error.hpp"

namespace sumfree {

namespace {
constexpr std::size_t kWordBits = 64;
std::size_t word_count(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }
}  // namespace

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : ElementSet(universe) {
    for (auto m : members) insert(m);
}

ElementSet::ElementSet(std::size_t universe, std::span<const std::size_t> members)
    : ElementSet(universe) {
    for (auto m : members) insert(m);
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > kWordBits) throw InvalidInput("from_mask needs universe <= 64");
    ElementSet s(universe);
    if (universe == 0) return s;
    if (universe < kWordBits && (mask >> universe) != 0) {
        throw InvalidInput("mask has bits outside the universe");
    }
    s.words_[0] = mask;
    return s;
}

ElementSet ElementSet::full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
}

std::size_t ElementSet::size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool ElementSet::contains(std::size_t i) const {
    check_index(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void ElementSet::insert(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void ElementSet::erase(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

std::vector<std::size_t> ElementSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::uint64_t ElementSet::mask64() const { return words_.empty() ? 0 : words_[0]; }

ElementSet& ElementSet::operator|=(const ElementSet& o) {
    check_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
    check_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
}

ElementSet ElementSet::complement() const {
    ElementSet out(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    if (const auto tail = universe_ % kWordBits; tail != 0 && !out.words_.empty()) {
        out.words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
    return out;
}

bool ElementSet::intersects(const ElementSet& o) const { return intersection_size(o) != 0; }

std::size_t ElementSet::intersection_size(const ElementSet& o) const {
    check_same_universe(o);
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        n += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
    }
    return n;
}

void ElementSet::check_index(std::size_t i) const {
    if (i >= universe_) {
        throw InvalidInput("element index " + std::to_string(i) + " outside universe of size " +
                           std::to_string(universe_));
    }
}

void ElementSet::check_same_universe(const ElementSet& o) const {
    if (o.universe_ != universe_) throw InvalidInput("element sets over different universes");
}

}  // namespace sumfree
