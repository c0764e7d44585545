#include "rep11/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "rep11/errors.hpp"

namespace rep11 {

bool is_valid_token(std::string_view token) {
    if (token.empty()) return false;
    for (unsigned char c : token)
        if (std::isspace(c)) return false;
    return true;
}

namespace {

void check_alphabet(const std::vector<std::string>& alphabet) {
    std::unordered_set<std::string_view> seen;
    for (const auto& t : alphabet) {
        if (!is_valid_token(t)) throw InputError("invalid alphabet token '" + t + "'");
        if (!seen.insert(t).second) throw InputError("duplicate alphabet token '" + t + "'");
    }
}

} // namespace

Word::Word(std::vector<std::string> letters, std::vector<std::string> alphabet)
    : letters_(std::move(letters)), alphabet_(std::move(alphabet)) {
    check_alphabet(alphabet_);
    std::unordered_set<std::string_view> ab(alphabet_.begin(), alphabet_.end());
    for (const auto& l : letters_)
        if (!ab.count(l)) throw InputError("letter '" + l + "' is not in the alphabet");
}

Word Word::parse_tokens(std::string_view text, std::vector<std::string> alphabet) {
    std::vector<std::string> letters;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) letters.push_back(tok);
    return Word(std::move(letters), std::move(alphabet));
}

Word Word::parse_compact(std::string_view text, std::vector<std::string> alphabet) {
    std::vector<std::string> letters;
    for (unsigned char c : text) {
        if (std::isspace(c)) continue;
        letters.emplace_back(1, static_cast<char>(c));
    }
    return Word(std::move(letters), std::move(alphabet));
}

bool Word::contains(std::string_view letter) const {
    return std::find(letters_.begin(), letters_.end(), letter) != letters_.end();
}

bool Word::in_alphabet(std::string_view letter) const {
    return std::find(alphabet_.begin(), alphabet_.end(), letter) != alphabet_.end();
}

bool Word::covers_alphabet() const {
    for (const auto& a : alphabet_)
        if (!contains(a)) return false;
    return true;
}

std::string Word::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += letters_[i];
    }
    return out;
}

std::string Word::compact() const {
    std::string out;
    for (const auto& l : letters_) out += l;
    return out;
}

std::string Word::display() const {
    bool single = std::all_of(alphabet_.begin(), alphabet_.end(),
                              [](const std::string& t) { return t.size() == 1; });
    return single ? compact() : str();
}

Word restriction(const Word& w, const std::vector<std::string>& keep) {
    std::unordered_set<std::string_view> wanted;
    for (const auto& t : keep) {
        if (!w.in_alphabet(t))
            throw InputError("restriction: '" + t + "' is not in the word's alphabet");
        wanted.insert(t);
    }
    // Result alphabet keeps the word's canonical order.
    std::vector<std::string> sub_alphabet;
    for (const auto& a : w.alphabet())
        if (wanted.count(a)) sub_alphabet.push_back(a);
    std::vector<std::string> letters;
    for (const auto& l : w.letters())
        if (wanted.count(l)) letters.push_back(l);
    return Word(std::move(letters), std::move(sub_alphabet));
}

std::size_t count_factor(const Word& w, const std::vector<std::string>& factor) {
    if (factor.empty()) throw InputError("count_factor: empty factor");
    const auto& a = w.letters();
    if (factor.size() > a.size()) return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + factor.size() <= a.size(); ++i) {
        bool match = true;
        for (std::size_t t = 0; match && t < factor.size(); ++t)
            match = a[i + t] == factor[t];
        if (match) ++count;
    }
    return count;
}

std::size_t count_factor(const Word& w, const Word& factor) {
    return count_factor(w, factor.letters());
}

std::vector<Repetition> find_repetitions(const Word& w, int degree) {
    if (degree != 2 && degree != 3)
        throw InputError("find_repetitions: degree must be 2 (square) or 3 (cube)");
    const auto& a = w.letters();
    const std::size_t n = a.size();
    std::vector<Repetition> out;
    for (std::size_t start = 0; start < n; ++start) {
        const std::size_t room = n - start;
        for (std::size_t period = 1; period * static_cast<std::size_t>(degree) <= room; ++period) {
            // degree equal blocks <=> letters repeat with the given period
            // across the first (degree-1) block lengths.
            bool equal = true;
            const std::size_t span = period * static_cast<std::size_t>(degree - 1);
            for (std::size_t t = 0; equal && t < span; ++t)
                equal = a[start + t] == a[start + period + t];
            if (equal) out.push_back({start, period, degree});
        }
    }
    return out;
}

bool is_square_free(const Word& w) { return find_repetitions(w, 2).empty(); }

bool is_cube_free(const Word& w) { return find_repetitions(w, 3).empty(); }

} // namespace rep11
