#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rep11/dfa.hpp"
#include "rep11/word.hpp"

namespace rep11 {

/// Default explored-state cap: REP11_STATE_CAP when set, 5,000,000 otherwise.
std::size_t default_state_cap();

struct ProductTerm {
    Dfa dfa;
    bool negated = false;  ///< reject-flip polarity: the term contributes its complement
};

/// Lazy intersection of component DFAs under per-term polarity.
///
/// Tuple states are materialized on demand; a word is accepted iff every term
/// accepts under its polarity. Exploration never exceeds the state cap — a
/// breach raises ResourceError, it is never truncated silently. All traversal
/// follows the alphabet order, so witnesses and enumerations are
/// deterministic.
class LazyProduct {
public:
    LazyProduct(std::vector<std::string> alphabet, std::vector<ProductTerm> terms,
                std::size_t state_cap = default_state_cap());

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::size_t term_count() const { return terms_.size(); }
    std::size_t state_cap() const { return cap_; }

    /// Letter-by-letter membership; no state materialization.
    bool member(const Word& w) const;

    /// Lexicographically least among the shortest accepted words (BFS in
    /// alphabet order); nullopt when the language is empty.
    std::optional<Word> shortest_accepted() const;

    bool is_empty() const;

    /// Every accepted word of length <= max_len, in length-then-lex order.
    std::vector<Word> enumerate_accepted(std::size_t max_len) const;

    /// Explicit reachable product automaton, states in BFS discovery order.
    Dfa materialize() const;
    Dfa materialize(std::size_t cap) const;

private:
    struct Explored;
    Explored explore(bool stop_at_accepting, std::size_t cap) const;

    std::vector<std::string> alphabet_;
    std::vector<ProductTerm> terms_;
    std::size_t cap_;
};

} // namespace rep11
