#pragma once

#include <string>
#include <vector>

#include "rep11/dfa.hpp"
#include "rep11/graph.hpp"
#include "rep11/product.hpp"

namespace rep11 {

/// DFA for the pair adjacency language over alphabet sigma: words whose
/// restriction to {a,b} contains at least one a, at least one b, and at most
/// one factor aa or bb in total. Letters outside {a,b} self-loop. Built from
/// the language definition; at most 10 reachable states including the dead
/// sink.
Dfa pair_adjacent_dfa(const std::string& a, const std::string& b,
                      std::vector<std::string> alphabet);

/// The hand-drawn six-state variant of the pair automaton (accepting q2/q4,
/// reached right after a doubled letter). Kept for the --figure1 diagnostic:
/// it disagrees with the language definition, e.g. it rejects "abab" and
/// accepts "aa".
Dfa figure1_pair_dfa(const std::string& a, const std::string& b,
                     std::vector<std::string> alphabet);

/// Words of length <= max_len on which figure1_pair_dfa and pair_adjacent_dfa
/// disagree, in length-then-lex order.
std::vector<Word> figure1_disagreements(const std::string& a, const std::string& b,
                                        const std::vector<std::string>& alphabet,
                                        std::size_t max_len);

/// Accepts exactly the words in which every alphabet letter occurs at least
/// once. Subset construction: 2^n states.
Dfa coverage_dfa(std::vector<std::string> alphabet);

/// Accepts exactly the nonempty concatenations of permutations of the
/// alphabet. Block boundaries are forced at multiples of n, so tracking the
/// letter set of the current partial block suffices.
Dfa perm_concat_dfa(std::vector<std::string> alphabet);

struct LanguageOptions {
    std::size_t state_cap = default_state_cap();
    /// Require every vertex to occur. Without it, complements of pair
    /// languages admit words that miss isolated vertices, and membership
    /// would no longer match verify().
    bool require_coverage = true;
};

/// Lazy product recognizing exactly the words w with verify(g, w):
/// pair_adjacent_dfa per edge, its complement per non-edge, plus coverage.
LazyProduct graph_language(const Graph& g, const LanguageOptions& options = {});

/// graph_language further intersected with perm_concat_dfa.
LazyProduct permutational_language(const Graph& g, const LanguageOptions& options = {});

} // namespace rep11
