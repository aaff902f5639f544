#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sumfree {

/// Subset of a group, stored as a membership bit-vector over canonical element
/// indices. Also used for per-vertex neighbor masks in link graphs.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe);
    ElementSet(std::size_t universe, std::initializer_list<std::size_t> members);
    ElementSet(std::size_t universe, std::span<const std::size_t> members);

    /// Low `universe` bits of `mask`; requires universe <= 64.
    static ElementSet from_mask(std::size_t universe, std::uint64_t mask);
    static ElementSet full(std::size_t universe);

    [[nodiscard]] std::size_t universe() const { return universe_; }
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] bool empty() const { return size() == 0; }
    [[nodiscard]] bool contains(std::size_t i) const;

    void insert(std::size_t i);
    void erase(std::size_t i);

    [[nodiscard]] std::vector<std::size_t> indices() const;
    /// Lowest word; exact representation only when universe <= 64.
    [[nodiscard]] std::uint64_t mask64() const;
    [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

    ElementSet& operator|=(const ElementSet& o);
    ElementSet& operator&=(const ElementSet& o);
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    [[nodiscard]] ElementSet complement() const;
    [[nodiscard]] bool intersects(const ElementSet& o) const;
    [[nodiscard]] std::size_t intersection_size(const ElementSet& o) const;

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    void check_index(std::size_t i) const;
    void check_same_universe(const ElementSet& o) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace sumfree
