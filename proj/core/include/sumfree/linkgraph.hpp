#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sumfree/element_set.hpp"
#include "sumfree/group.hpp"

namespace sumfree {

enum class Side : std::uint8_t { Y, Z };

/// Side-tagged vertex of a link graph: (Y, j) or (Z, j).
struct Vertex {
    Side side = Side::Y;
    std::size_t index = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Bipartite graph on two copies Y, Z of a group. For a link graph of A the edge {y, z}
/// is present iff z - y lies in A, so every vertex has degree |A|.
class BipartiteLinkGraph {
public:
    BipartiteLinkGraph(std::size_t n_per_side, std::vector<ElementSet> z_neighbors_of_y);

    [[nodiscard]] std::size_t n_per_side() const { return n_; }
    [[nodiscard]] std::size_t vertex_count() const { return 2 * n_; }
    [[nodiscard]] std::size_t edge_count() const;
    /// Common degree when biregular, otherwise the maximum degree.
    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] bool is_biregular() const { return biregular_; }

    [[nodiscard]] const ElementSet& z_neighbors(std::size_t y) const { return z_of_y_.at(y); }
    [[nodiscard]] const ElementSet& y_neighbors(std::size_t z) const { return y_of_z_.at(z); }
    [[nodiscard]] bool has_edge(std::size_t y, std::size_t z) const { return z_of_y_.at(y).contains(z); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

    /// (y, z) pairs in lexicographic order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    /// Flat id: (Y, j) -> j, (Z, j) -> n + j.
    [[nodiscard]] std::size_t flat(Vertex v) const;
    [[nodiscard]] Vertex vertex_at(std::size_t flat_id) const;

private:
    std::size_t n_;
    std::vector<ElementSet> z_of_y_;
    std::vector<ElementSet> y_of_z_;
    std::size_t degree_ = 0;
    bool biregular_ = true;
};

BipartiteLinkGraph build_link_graph(const AbelianGroup& g, const ElementSet& a);

/// True iff two distinct y-vertices share at least two z-neighbors.
bool contains_c4(const BipartiteLinkGraph& h);

/// The x (other than 0, 1) for which the link graph of {0, 1, x} in Z/p has a 4-cycle:
/// {p - 1, 2, (p + 1) / 2}. Requires p >= 5 prime.
std::set<std::uint64_t> c4_locus_zp(std::uint64_t p);

/// Affine normal form of a 3-set {a, b, c} of Z/p: the x with {0, 1, x} = (A - a) / (b - a).
std::uint64_t normalize_three_set_zp(std::uint64_t p, const ElementSet& a);
bool c4_predicted_zp(std::uint64_t p, const ElementSet& a);

/// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const BipartiteLinkGraph& h);

using VertexMap = std::vector<Vertex>;  // indexed by flat id of the source graph

inline constexpr std::size_t kDefaultIsomorphismVertexCap = 64;

std::optional<VertexMap> find_isomorphism(const BipartiteLinkGraph& h1, const BipartiteLinkGraph& h2,
                                          std::size_t max_vertices = kDefaultIsomorphismVertexCap);
bool is_isomorphic(const BipartiteLinkGraph& h1, const BipartiteLinkGraph& h2,
                   std::size_t max_vertices = kDefaultIsomorphismVertexCap);

// Explicit maps between the link graphs of {0,1,x} for x = -1, (p+1)/2 and 2 in Z/p.
Vertex apply_phi(std::uint64_t p, Vertex v);
Vertex apply_phi_inverse(std::uint64_t p, Vertex v);
Vertex apply_theta(std::uint64_t p, Vertex v);
Vertex apply_theta_inverse(std::uint64_t p, Vertex v);

VertexMap tabulate_map(std::size_t n_per_side, const std::function<Vertex(Vertex)>& f);

/// {u,v} in E(from) iff {map(u), map(v)} in E(to). Throws InvalidInput if map is not a bijection.
bool verify_edge_preservation(const VertexMap& map, const BipartiteLinkGraph& from, const BipartiteLinkGraph& to);

std::string export_dot(const BipartiteLinkGraph& h);
/// {"n":..,"degree":..,"edges":[[y,z],...]} with edges sorted.
std::string export_json(const BipartiteLinkGraph& h);

}  // namespace sumfree
