#pragma once

#include <string>
#include <vector>

#include "rep11/graph.hpp"
#include "rep11/word.hpp"

namespace rep11 {

/// The adjacency rule: x and y are adjacent in w iff the restriction of w to
/// {x,y} contains at most one factor xx or yy, occurrences counted with
/// overlap. Both letters must occur in w and differ; violations throw
/// InputError rather than returning false.
bool adjacent_in_word(const Word& w, const std::string& x, const std::string& y);

/// The graph represented by w on the vertex list V: edge {x,y} iff
/// adjacent_in_word(w, x, y). Requires w's letters to lie in V and every
/// vertex of V to occur in w (coverage); violations throw InputError naming
/// the offending token.
Graph decode(const Word& w, const std::vector<std::string>& vertices);

struct PairDiagnosis {
    std::string x, y;
    std::size_t xx_count = 0;
    std::size_t yy_count = 0;
    bool adjacent_in_word = false;
    bool adjacent_in_graph = false;

    std::string describe() const;
};

struct VerifyOutcome {
    bool ok = false;
    std::string reason;                    ///< empty on success
    std::vector<PairDiagnosis> mismatches; ///< pairs where word and graph disagree
};

/// True iff w covers V(G) and decodes to exactly G. Precondition failures
/// (stray letters, missing vertices) yield ok=false with a reason, never an
/// exception.
VerifyOutcome verify_explain(const Graph& g, const Word& w);
bool verify(const Graph& g, const Word& w);

} // namespace rep11
