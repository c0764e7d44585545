#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace rep11 {

/// A finite word over a fixed vertex alphabet.
///
/// Letters are whitespace-free tokens, so multi-character vertex names are
/// first class. Indexing is 0-based; equality compares the letter sequences
/// only. The alphabet is carried along for validation and for operations
/// that need the full vertex set (coverage, block splitting).
class Word {
public:
    Word() = default;
    Word(std::vector<std::string> letters, std::vector<std::string> alphabet);

    /// Canonical text format: whitespace-separated tokens.
    static Word parse_tokens(std::string_view text, std::vector<std::string> alphabet);
    /// Compact text format: one letter per character.
    static Word parse_compact(std::string_view text, std::vector<std::string> alphabet);

    const std::vector<std::string>& letters() const { return letters_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::string& operator[](std::size_t i) const { return letters_[i]; }

    /// True when the letter occurs somewhere in the word.
    bool contains(std::string_view letter) const;
    bool in_alphabet(std::string_view letter) const;
    /// True when every alphabet letter occurs at least once.
    bool covers_alphabet() const;

    std::string str() const;      ///< tokens joined by single spaces; round-trips
    std::string compact() const;  ///< tokens concatenated, no separators
    /// compact() when every alphabet token is one character, str() otherwise.
    std::string display() const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    std::vector<std::string> letters_;
    std::vector<std::string> alphabet_;
};

/// A located square (degree 2) or cube (degree 3): `degree` consecutive
/// copies of the block letters[start .. start+period).
struct Repetition {
    std::size_t start = 0;
    std::size_t period = 0;
    int degree = 2;

    friend bool operator==(const Repetition& a, const Repetition& b) {
        return a.start == b.start && a.period == b.period && a.degree == b.degree;
    }
    friend bool operator!=(const Repetition& a, const Repetition& b) { return !(a == b); }
};

/// Subsequence of w consisting of the letters in `keep`, in original order.
/// The result's alphabet is `keep` (deduplicated, in w's alphabet order).
/// Throws InputError when `keep` mentions a token outside w's alphabet.
Word restriction(const Word& w, const std::vector<std::string>& keep);

/// Number of (possibly overlapping) occurrences of `factor` in w.
/// "vvv" contains "vv" twice. Throws InputError on an empty factor.
std::size_t count_factor(const Word& w, const std::vector<std::string>& factor);
std::size_t count_factor(const Word& w, const Word& factor);

/// All squares (degree 2) or cubes (degree 3) in w, sorted by (start, period).
std::vector<Repetition> find_repetitions(const Word& w, int degree);

bool is_square_free(const Word& w);
bool is_cube_free(const Word& w);

/// Validates a token: nonempty and free of whitespace.
bool is_valid_token(std::string_view token);

} // namespace rep11
