#include "rep11/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rep11/errors.hpp"
#include "rep11/word.hpp"

namespace rep11 {

Graph Graph::from_edges(std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    if (vertices.empty()) throw InputError("graph needs at least one vertex");
    Graph g;
    g.vertices_ = std::move(vertices);
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
        const auto& v = g.vertices_[i];
        if (!is_valid_token(v)) throw InputError("invalid vertex name '" + v + "'");
        if (!g.index_.emplace(v, i).second)
            throw InputError("duplicate vertex name '" + v + "'");
    }
    for (const auto& [x, y] : edges) {
        auto ix = g.index_.find(x);
        auto iy = g.index_.find(y);
        if (ix == g.index_.end()) throw InputError("edge endpoint '" + x + "' is not a declared vertex");
        if (iy == g.index_.end()) throw InputError("edge endpoint '" + y + "' is not a declared vertex");
        if (ix->second == iy->second) throw InputError("self-loop on vertex '" + x + "'");
        auto e = std::minmax(ix->second, iy->second);
        if (!g.edges_.emplace(e.first, e.second).second)
            throw InputError("duplicate edge " + x + " " + y);
    }
    return g;
}

Graph Graph::complete(std::size_t k) {
    if (k < 1) throw InputError("complete(k): k must be at least 1");
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 1; i <= k; ++i) vs.push_back(std::to_string(i));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) es.emplace_back(vs[i], vs[j]);
    return from_edges(std::move(vs), es);
}

Graph Graph::empty_graph(std::size_t k) {
    if (k < 1) throw InputError("empty_graph(k): k must be at least 1");
    std::vector<std::string> vs;
    for (std::size_t i = 1; i <= k; ++i) vs.push_back(std::to_string(i));
    return from_edges(std::move(vs), {});
}

Graph Graph::disjoint_union(const Graph& left, const Graph& right) {
    std::vector<std::string> vs = left.vertices_;
    std::set<std::string> taken(vs.begin(), vs.end());
    std::unordered_map<std::string, std::string> rename;
    for (const auto& v : right.vertices_) {
        std::string name = v;
        for (std::size_t suffix = 2; taken.count(name); ++suffix)
            name = v + "_" + std::to_string(suffix);
        taken.insert(name);
        rename.emplace(v, name);
        vs.push_back(name);
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [x, y] : left.edges()) es.emplace_back(x, y);
    for (const auto& [x, y] : right.edges()) es.emplace_back(rename.at(x), rename.at(y));
    return from_edges(std::move(vs), es);
}

namespace {

Graph parse_json_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph JSON: expected object with 'vertices' and 'edges'");
    std::vector<std::string> vs;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw InputError("graph JSON: vertices must be strings");
        vs.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw InputError("graph JSON: each edge must be a 2-array of strings");
        es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::from_edges(std::move(vs), es);
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

Graph Graph::parse(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json_graph(text);

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_vertices = false;
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(strip_comment(line));
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "vertices:") {
            if (have_vertices)
                throw InputError("line " + std::to_string(lineno) + ": repeated 'vertices:' line");
            std::string tok;
            while (ls >> tok) vs.push_back(tok);
            if (vs.empty())
                throw InputError("line " + std::to_string(lineno) + ": 'vertices:' lists no vertices");
            have_vertices = true;
        } else if (head == "edge:") {
            if (!have_vertices)
                throw InputError("line " + std::to_string(lineno) + ": 'edge:' before 'vertices:'");
            std::string x, y, extra;
            if (!(ls >> x >> y) || (ls >> extra))
                throw InputError("line " + std::to_string(lineno) + ": 'edge:' needs exactly two endpoints");
            es.emplace_back(x, y);
        } else {
            throw InputError("line " + std::to_string(lineno) + ": expected 'vertices:' or 'edge:', got '" + head + "'");
        }
    }
    if (!have_vertices) throw InputError("graph text has no 'vertices:' line");
    return from_edges(std::move(vs), es);
}

Graph Graph::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::size_t Graph::vertex_index(const std::string& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw InputError("unknown vertex '" + v + "'");
    return it->second;
}

bool Graph::has_edge(const std::string& x, const std::string& y) const {
    return has_edge_by_index(vertex_index(x), vertex_index(y));
}

bool Graph::has_edge_by_index(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    auto e = std::minmax(i, j);
    return edges_.count({e.first, e.second}) != 0;
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (const auto& [i, j] : edges_) out.emplace_back(vertices_[i], vertices_[j]);
    return out;
}

std::string Graph::serialize() const {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& v : vertices_) out << ' ' << v;
    out << '\n';
    for (const auto& [i, j] : edges_) out << "edge: " << vertices_[i] << ' ' << vertices_[j] << '\n';
    return out.str();
}

std::string Graph::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = vertices_;
    auto& es = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [i, j2] : edges_) es.push_back({vertices_[i], vertices_[j2]});
    return j.dump(2) + "\n";
}

bool operator==(const Graph& a, const Graph& b) {
    std::set<std::string> va(a.vertices_.begin(), a.vertices_.end());
    std::set<std::string> vb(b.vertices_.begin(), b.vertices_.end());
    if (va != vb) return false;
    std::set<std::pair<std::string, std::string>> ea, eb;
    for (const auto& [i, j] : a.edges_)
        ea.insert(std::minmax(a.vertices_[i], a.vertices_[j]));
    for (const auto& [i, j] : b.edges_)
        eb.insert(std::minmax(b.vertices_[i], b.vertices_[j]));
    return ea == eb;
}

} // namespace rep11
