#include "sumfree/linkgraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "sumfree/bigcount.hpp"
#include "sumfree/error.hpp"

namespace sumfree {

BipartiteLinkGraph::BipartiteLinkGraph(std::size_t n_per_side, std::vector<ElementSet> z_neighbors_of_y)
    : n_(n_per_side), z_of_y_(std::move(z_neighbors_of_y)) {
    if (z_of_y_.size() != n_) throw InvalidInput("need one neighbor set per y-vertex");
    y_of_z_.assign(n_, ElementSet(n_));
    for (std::size_t y = 0; y < n_; ++y) {
        if (z_of_y_[y].universe() != n_) throw InvalidInput("neighbor set universe must equal side size");
        for (auto z : z_of_y_[y].indices()) y_of_z_[z].insert(y);
    }
    std::size_t lo = std::numeric_limits<std::size_t>::max();
    std::size_t hi = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        for (auto d : {z_of_y_[v].size(), y_of_z_[v].size()}) {
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    }
    degree_ = hi;
    biregular_ = n_ == 0 || lo == hi;
}

std::size_t BipartiteLinkGraph::edge_count() const {
    std::size_t e = 0;
    for (const auto& s : z_of_y_) e += s.size();
    return e;
}

bool BipartiteLinkGraph::adjacent(Vertex u, Vertex v) const {
    if (u.side == v.side) return false;
    if (u.side == Side::Z) std::swap(u, v);
    return has_edge(u.index, v.index);
}

std::vector<std::pair<std::size_t, std::size_t>> BipartiteLinkGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count());
    for (std::size_t y = 0; y < n_; ++y) {
        for (auto z : z_of_y_[y].indices()) out.emplace_back(y, z);
    }
    return out;
}

std::size_t BipartiteLinkGraph::flat(Vertex v) const {
    if (v.index >= n_) throw InvalidInput("vertex index out of range");
    return v.side == Side::Y ? v.index : n_ + v.index;
}

Vertex BipartiteLinkGraph::vertex_at(std::size_t flat_id) const {
    if (flat_id >= 2 * n_) throw InvalidInput("flat vertex id out of range");
    return flat_id < n_ ? Vertex{Side::Y, flat_id} : Vertex{Side::Z, flat_id - n_};
}

BipartiteLinkGraph build_link_graph(const AbelianGroup& g, const ElementSet& a) {
    if (a.universe() != g.order()) throw InvalidInput("set is not over this group's index range");
    const auto members = a.indices();
    std::vector<ElementSet> nbrs(g.order(), ElementSet(g.order()));
    for (std::size_t y = 0; y < g.order(); ++y) {
        for (auto x : members) nbrs[y].insert(g.add(y, x));
    }
    return BipartiteLinkGraph(g.order(), std::move(nbrs));
}

bool contains_c4(const BipartiteLinkGraph& h) {
    const auto n = h.n_per_side();
    for (std::size_t y1 = 0; y1 < n; ++y1) {
        for (std::size_t y2 = y1 + 1; y2 < n; ++y2) {
            if (h.z_neighbors(y1).intersection_size(h.z_neighbors(y2)) >= 2) return true;
        }
    }
    return false;
}

std::set<std::uint64_t> c4_locus_zp(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) throw InvalidInput("c4 locus needs a prime p >= 5");
    return {p - 1, 2, (p + 1) / 2};
}

namespace {
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    UInt128 r = 1;
    UInt128 x = b % m;
    while (e) {
        if (e & 1U) r = r * x % m;
        x = x * x % m;
        e >>= 1U;
    }
    return static_cast<std::uint64_t>(r);
}
}  // namespace

std::uint64_t normalize_three_set_zp(std::uint64_t p, const ElementSet& a) {
    if (!is_prime(p)) throw InvalidInput("normalization needs prime p");
    const auto m = a.indices();
    if (m.size() != 3 || a.universe() != p) throw InvalidInput("normalization needs a 3-subset of Z/p");
    const std::uint64_t base = m[0];
    const std::uint64_t unit = (m[1] + p - base) % p;
    const std::uint64_t inv = mod_pow(unit, p - 2, p);
    return static_cast<std::uint64_t>(static_cast<UInt128>((m[2] + p - base) % p) * inv % p);
}

bool c4_predicted_zp(std::uint64_t p, const ElementSet& a) {
    return c4_locus_zp(p).contains(normalize_three_set_zp(p, a));
}

namespace {
std::vector<std::vector<std::size_t>> adjacency_lists(const BipartiteLinkGraph& h) {
    const auto n = h.n_per_side();
    std::vector<std::vector<std::size_t>> adj(2 * n);
    for (auto [y, z] : h.edges()) {
        adj[y].push_back(n + z);
        adj[n + z].push_back(y);
    }
    return adj;
}
}  // namespace

std::optional<std::size_t> girth(const BipartiteLinkGraph& h) {
    const auto adj = adjacency_lists(h);
    const std::size_t v_count = adj.size();
    constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = kUnseen;
    std::vector<std::size_t> dist(v_count);
    std::vector<std::size_t> parent(v_count);
    for (std::size_t root = 0; root < v_count; ++root) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[root] = 0;
        parent[root] = kUnseen;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            if (2 * dist[u] >= best) break;
            for (auto w : adj[u]) {
                if (dist[w] == kUnseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == kUnseen) return std::nullopt;
    return best;
}

namespace {

using Masks = std::vector<std::uint64_t>;

Masks adjacency_masks(const BipartiteLinkGraph& h) {
    const auto n = h.n_per_side();
    Masks m(2 * n, 0);
    for (auto [y, z] : h.edges()) {
        m[y] |= std::uint64_t{1} << (n + z);
        m[n + z] |= std::uint64_t{1} << y;
    }
    return m;
}

// Joint 1-dimensional colour refinement so colours are comparable across both graphs.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const Masks& a, const Masks& b) {
    std::vector<std::size_t> ca(a.size()), cb(b.size());
    for (std::size_t v = 0; v < a.size(); ++v) ca[v] = static_cast<std::size_t>(std::popcount(a[v]));
    for (std::size_t v = 0; v < b.size(); ++v) cb[v] = static_cast<std::size_t>(std::popcount(b[v]));
    std::size_t classes = 0;
    while (true) {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> palette;
        auto signature = [](const Masks& m, const std::vector<std::size_t>& c, std::size_t v) {
            std::vector<std::size_t> s;
            for (auto bits = m[v]; bits; bits &= bits - 1) s.push_back(c[static_cast<std::size_t>(std::countr_zero(bits))]);
            std::sort(s.begin(), s.end());
            return std::make_pair(c[v], std::move(s));
        };
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sa, sb;
        for (std::size_t v = 0; v < a.size(); ++v) sa.push_back(signature(a, ca, v));
        for (std::size_t v = 0; v < b.size(); ++v) sb.push_back(signature(b, cb, v));
        for (const auto& s : sa) palette.emplace(s, 0);
        for (const auto& s : sb) palette.emplace(s, 0);
        std::size_t next = 0;
        for (auto& [key, id] : palette) id = next++;
        for (std::size_t v = 0; v < a.size(); ++v) ca[v] = palette[sa[v]];
        for (std::size_t v = 0; v < b.size(); ++v) cb[v] = palette[sb[v]];
        if (palette.size() == classes) break;
        classes = palette.size();
    }
    return {ca, cb};
}

class IsoSearch {
public:
    IsoSearch(const Masks& a, const Masks& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb)
        : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), map_(a.size(), kNone), used_(b.size(), false) {
        build_order();
    }

    std::optional<std::vector<std::size_t>> run() {
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    // BFS order per component, so most vertices have an already-placed neighbour.
    void build_order() {
        std::vector<bool> seen(a_.size(), false);
        for (std::size_t start = 0; start < a_.size(); ++start) {
            if (seen[start]) continue;
            std::queue<std::size_t> q;
            q.push(start);
            seen[start] = true;
            while (!q.empty()) {
                const auto u = q.front();
                q.pop();
                order_.push_back(u);
                for (auto bits = a_[u]; bits; bits &= bits - 1) {
                    const auto w = static_cast<std::size_t>(std::countr_zero(bits));
                    if (!seen[w]) {
                        seen[w] = true;
                        q.push(w);
                    }
                }
            }
        }
    }

    bool consistent(std::size_t v, std::size_t c) const {
        const auto placed = a_[v] & placed_mask_;
        if (std::popcount(placed) != std::popcount(b_[c] & image_mask_)) return false;
        for (auto bits = placed; bits; bits &= bits - 1) {
            const auto w = static_cast<std::size_t>(std::countr_zero(bits));
            if (!((b_[c] >> map_[w]) & 1U)) return false;
        }
        return true;
    }

    bool try_candidate(std::size_t depth, std::size_t v, std::size_t c) {
        if (used_[c] || cb_[c] != ca_[v] || !consistent(v, c)) return false;
        map_[v] = c;
        used_[c] = true;
        placed_mask_ |= std::uint64_t{1} << v;
        image_mask_ |= std::uint64_t{1} << c;
        if (extend(depth + 1)) return true;
        map_[v] = kNone;
        used_[c] = false;
        placed_mask_ &= ~(std::uint64_t{1} << v);
        image_mask_ &= ~(std::uint64_t{1} << c);
        return false;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const auto v = order_[depth];
        const auto placed = a_[v] & placed_mask_;
        if (placed) {
            const auto anchor = static_cast<std::size_t>(std::countr_zero(placed));
            for (auto bits = b_[map_[anchor]]; bits; bits &= bits - 1) {
                if (try_candidate(depth, v, static_cast<std::size_t>(std::countr_zero(bits)))) return true;
            }
            return false;
        }
        for (std::size_t c = 0; c < b_.size(); ++c) {
            if (try_candidate(depth, v, c)) return true;
        }
        return false;
    }

    const Masks& a_;
    const Masks& b_;
    std::vector<std::size_t> ca_, cb_;
    std::vector<std::size_t> map_;
    std::vector<bool> used_;
    std::vector<std::size_t> order_;
    std::uint64_t placed_mask_ = 0;
    std::uint64_t image_mask_ = 0;
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const BipartiteLinkGraph& h1, const BipartiteLinkGraph& h2,
                                          std::size_t max_vertices) {
    const auto cap = std::min<std::size_t>(max_vertices, 64);
    if (h1.vertex_count() > cap || h2.vertex_count() > cap) {
        throw CapExceeded("isomorphism search limited to " + std::to_string(cap) + " vertices");
    }
    if (h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count()) return std::nullopt;
    const auto a = adjacency_masks(h1);
    const auto b = adjacency_masks(h2);
    auto [ca, cb] = refine_colours(a, b);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    IsoSearch search(a, b, std::move(ca), std::move(cb));
    auto flat_map = search.run();
    if (!flat_map) return std::nullopt;
    VertexMap out;
    out.reserve(flat_map->size());
    for (auto target : *flat_map) out.push_back(h2.vertex_at(target));
    return out;
}

bool is_isomorphic(const BipartiteLinkGraph& h1, const BipartiteLinkGraph& h2, std::size_t max_vertices) {
    return find_isomorphism(h1, h2, max_vertices).has_value();
}

Vertex apply_phi(std::uint64_t p, Vertex v) {
    const std::uint64_t half = (p + 1) / 2;
    if (v.side == Side::Y) return {Side::Y, static_cast<std::size_t>(v.index % p * half % p)};
    return {Side::Z, static_cast<std::size_t>((v.index + 1) % p * half % p)};
}

Vertex apply_phi_inverse(std::uint64_t p, Vertex v) {
    // 2 is the inverse of (p+1)/2 modulo p.
    if (v.side == Side::Y) return {Side::Y, static_cast<std::size_t>(2 * v.index % p)};
    return {Side::Z, static_cast<std::size_t>((2 * v.index + p - 1) % p)};
}

Vertex apply_theta(std::uint64_t p, Vertex v) {
    if (v.side == Side::Y) return v;
    return {Side::Z, static_cast<std::size_t>((v.index + 1) % p)};
}

Vertex apply_theta_inverse(std::uint64_t p, Vertex v) {
    if (v.side == Side::Y) return v;
    return {Side::Z, static_cast<std::size_t>((v.index + p - 1) % p)};
}

VertexMap tabulate_map(std::size_t n_per_side, const std::function<Vertex(Vertex)>& f) {
    VertexMap m;
    m.reserve(2 * n_per_side);
    for (std::size_t j = 0; j < n_per_side; ++j) m.push_back(f({Side::Y, j}));
    for (std::size_t j = 0; j < n_per_side; ++j) m.push_back(f({Side::Z, j}));
    return m;
}

bool verify_edge_preservation(const VertexMap& map, const BipartiteLinkGraph& from, const BipartiteLinkGraph& to) {
    const auto vc = from.vertex_count();
    if (map.size() != vc || to.vertex_count() != vc) throw InvalidInput("map size does not match vertex counts");
    std::vector<bool> hit(vc, false);
    for (const auto& v : map) {
        const auto id = to.flat(v);
        if (hit[id]) throw InvalidInput("vertex map is not a bijection");
        hit[id] = true;
    }
    for (std::size_t u = 0; u < vc; ++u) {
        for (std::size_t w = u + 1; w < vc; ++w) {
            if (from.adjacent(from.vertex_at(u), from.vertex_at(w)) != to.adjacent(map[u], map[w])) return false;
        }
    }
    return true;
}

std::string export_dot(const BipartiteLinkGraph& h) {
    std::ostringstream os;
    os << "graph link {\n";
    for (std::size_t j = 0; j < h.n_per_side(); ++j) os << "  Y" << j << ";\n";
    for (std::size_t j = 0; j < h.n_per_side(); ++j) os << "  Z" << j << ";\n";
    for (auto [y, z] : h.edges()) os << "  Y" << y << " -- Z" << z << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const BipartiteLinkGraph& h) {
    nlohmann::ordered_json j;
    j["n"] = h.n_per_side();
    j["degree"] = h.degree();
    auto edges = nlohmann::json::array();
    for (auto [y, z] : h.edges()) edges.push_back({y, z});
    j["edges"] = std::move(edges);
    return j.dump();
}

}  // namespace sumfree
