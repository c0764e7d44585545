#include "rep11/semantics.hpp"

#include <sstream>

#include "rep11/errors.hpp"

namespace rep11 {

bool adjacent_in_word(const Word& w, const std::string& x, const std::string& y) {
    if (x == y) throw InputError("adjacent_in_word: letters must be distinct, got '" + x + "' twice");
    if (!w.contains(x)) throw InputError("adjacent_in_word: letter '" + x + "' does not occur in the word");
    if (!w.contains(y)) throw InputError("adjacent_in_word: letter '" + y + "' does not occur in the word");
    Word r = restriction(w, {x, y});
    return count_factor(r, {x, x}) + count_factor(r, {y, y}) <= 1;
}

Graph decode(const Word& w, const std::vector<std::string>& vertices) {
    Word probe({}, vertices);  // validates the vertex list as an alphabet
    for (const auto& l : w.letters())
        if (!probe.in_alphabet(l))
            throw InputError("decode: letter '" + l + "' is not a declared vertex");
    for (const auto& v : vertices)
        if (!w.contains(v))
            throw InputError("decode: vertex '" + v + "' is not covered by the word");
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent_in_word(w, vertices[i], vertices[j]))
                edges.emplace_back(vertices[i], vertices[j]);
    return Graph::from_edges(vertices, edges);
}

std::string PairDiagnosis::describe() const {
    std::ostringstream out;
    out << "pair (" << x << "," << y << "): " << x << x << "=" << xx_count << ", " << y << y
        << "=" << yy_count << " (" << (xx_count + yy_count) << " squares) -> "
        << (adjacent_in_word ? "adjacent" : "non-adjacent") << " in word, "
        << (adjacent_in_graph ? "adjacent" : "non-adjacent") << " in graph";
    return out.str();
}

VerifyOutcome verify_explain(const Graph& g, const Word& w) {
    VerifyOutcome out;
    for (const auto& l : w.letters()) {
        if (!g.has_vertex(l)) {
            out.reason = "letter '" + l + "' is not a vertex of the graph";
            return out;
        }
    }
    for (const auto& v : g.vertices()) {
        if (!w.contains(v)) {
            out.reason = "vertex '" + v + "' does not occur in the word";
            return out;
        }
    }
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            Word r = restriction(w, {vs[i], vs[j]});
            std::size_t xx = count_factor(r, {vs[i], vs[i]});
            std::size_t yy = count_factor(r, {vs[j], vs[j]});
            bool in_word = xx + yy <= 1;
            bool in_graph = g.has_edge_by_index(i, j);
            if (in_word != in_graph)
                out.mismatches.push_back({vs[i], vs[j], xx, yy, in_word, in_graph});
        }
    }
    if (!out.mismatches.empty()) {
        out.reason = "adjacency mismatch on " + std::to_string(out.mismatches.size()) + " pair(s)";
        return out;
    }
    out.ok = true;
    return out;
}

bool verify(const Graph& g, const Word& w) { return verify_explain(g, w).ok; }

} // namespace rep11
