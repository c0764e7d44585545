#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rep11 {

/// A finite simple undirected graph with an ordered vertex list.
///
/// The declaration order of the vertices is the canonical order used by every
/// search and enumeration, so outputs are deterministic. Equality compares
/// vertex and edge label sets, not isomorphism classes.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(std::vector<std::string> vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges);
    /// Complete graph on vertices "1".."k".
    static Graph complete(std::size_t k);
    /// Edgeless graph on vertices "1".."k".
    static Graph empty_graph(std::size_t k);
    /// Disjoint union; colliding names on the right get suffixes _2, _3, ...
    static Graph disjoint_union(const Graph& left, const Graph& right);

    /// Parses the edge-list text format or the JSON alternative (sniffed on
    /// the first significant character). Errors carry line numbers.
    static Graph parse(const std::string& text);
    static Graph parse_file(const std::string& path);

    const std::vector<std::string>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const std::string& v) const { return index_.count(v) != 0; }
    std::size_t vertex_index(const std::string& v) const;
    bool has_edge(const std::string& x, const std::string& y) const;
    bool has_edge_by_index(std::size_t i, std::size_t j) const;

    /// Edges as token pairs in canonical (index) order.
    std::vector<std::pair<std::string, std::string>> edges() const;

    std::string serialize() const;  ///< edge-list text format; parse() round-trips
    std::string to_json() const;

    friend bool operator==(const Graph& a, const Graph& b);
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    std::vector<std::string> vertices_;
    std::unordered_map<std::string, std::size_t> index_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;  // i < j
};

} // namespace rep11
