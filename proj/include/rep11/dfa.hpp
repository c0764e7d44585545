#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rep11/word.hpp"

namespace rep11 {

/// A complete deterministic finite automaton over a token alphabet.
///
/// States are dense indices; the transition function must be total before
/// the automaton is used (validate() checks). Letter order follows the
/// alphabet vector and is the canonical order for every traversal, so
/// exports and witness searches are reproducible byte for byte.
class Dfa {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    Dfa(std::vector<std::string> alphabet, std::size_t state_count, std::size_t start);

    std::size_t state_count() const { return delta_.size(); }
    std::size_t start() const { return start_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }

    /// Index of a token in the alphabet; InputError when unknown.
    std::size_t letter_index(std::string_view token) const;

    void set_transition(std::size_t from, std::size_t letter, std::size_t to);
    void set_accepting(std::size_t state, bool accepting = true);

    std::size_t step(std::size_t state, std::size_t letter) const { return delta_[state][letter]; }
    bool accepting(std::size_t state) const { return accept_[state] != 0; }

    /// Totality and range check; InvariantViolation on failure.
    void validate() const;

    /// Runs the automaton over the word's letters.
    bool member(const Word& w) const;

private:
    std::vector<std::string> alphabet_;
    std::unordered_map<std::string, std::size_t> letter_idx_;
    std::size_t start_ = 0;
    std::vector<std::vector<std::size_t>> delta_;  // [state][letter]
    std::vector<std::uint8_t> accept_;
};

/// Same automaton with the accepting set flipped.
Dfa complement(Dfa d);

/// Canonical minimal DFA for the same language (partition refinement over the
/// reachable part, then BFS renumbering).
Dfa minimize(const Dfa& d);

/// Graphviz DOT text. States are renumbered in BFS discovery order and
/// parallel edges are grouped into one edge per letter set, so output is
/// stable under re-export.
std::string export_dot(const Dfa& d);

/// JSON text: {states, alphabet, start, accepting, transitions}. Stable under
/// re-export; dfa_from_json reads it back.
std::string export_json(const Dfa& d);
Dfa dfa_from_json(const std::string& text);

} // namespace rep11
