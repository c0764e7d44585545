#include "rep11/languages.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <tuple>

#include "rep11/errors.hpp"

namespace rep11 {

namespace {

void check_pair(const std::string& a, const std::string& b,
                const std::vector<std::string>& alphabet) {
    if (a == b) throw InputError("pair automaton needs two distinct letters, got '" + a + "' twice");
    for (const auto& l : {a, b})
        if (std::find(alphabet.begin(), alphabet.end(), l) == alphabet.end())
            throw InputError("pair letter '" + l + "' is not in the alphabet");
}

} // namespace

Dfa pair_adjacent_dfa(const std::string& a, const std::string& b,
                      std::vector<std::string> alphabet) {
    check_pair(a, b, alphabet);

    // Logical state: (last restricted letter: 0 none / 1 a / 2 b,
    //                 seen-a, seen-b, squares so far: 0 or 1), plus a dead
    // sink once a second square appears.
    struct State {
        int last;
        bool seen_a, seen_b;
        int squares;
        bool dead;
        auto key() const { return std::tie(dead, last, seen_a, seen_b, squares); }
        bool operator<(const State& o) const { return key() < o.key(); }
    };
    const State start{0, false, false, 0, false};
    auto advance = [&](State s, bool letter_is_a) {
        if (s.dead) return s;
        int letter = letter_is_a ? 1 : 2;
        if (s.last == letter) {
            if (++s.squares > 1) return State{0, false, false, 0, true};
        }
        s.last = letter;
        s.seen_a = s.seen_a || letter_is_a;
        s.seen_b = s.seen_b || !letter_is_a;
        return s;
    };

    // BFS over logical states in alphabet order; ids in discovery order.
    std::map<State, std::size_t> ids;
    std::vector<State> order;
    std::queue<State> queue;
    ids.emplace(start, 0);
    order.push_back(start);
    queue.push(start);
    std::vector<std::array<std::size_t, 2>> trans;  // per state: on a, on b
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop();
        std::array<std::size_t, 2> row{};
        for (int is_a = 1; is_a >= 0; --is_a) {
            State t = advance(s, is_a == 1);
            auto [it, inserted] = ids.emplace(t, order.size());
            if (inserted) {
                order.push_back(t);
                queue.push(t);
            }
            row[is_a == 1 ? 0 : 1] = it->second;
        }
        trans.push_back(row);
    }

    Dfa d(std::move(alphabet), order.size(), 0);
    const std::size_t ia = d.letter_index(a);
    const std::size_t ib = d.letter_index(b);
    for (std::size_t s = 0; s < order.size(); ++s) {
        const State& st = order[s];
        d.set_accepting(s, !st.dead && st.seen_a && st.seen_b);
        for (std::size_t l = 0; l < d.alphabet().size(); ++l) {
            if (l == ia)
                d.set_transition(s, l, trans[s][0]);
            else if (l == ib)
                d.set_transition(s, l, trans[s][1]);
            else
                d.set_transition(s, l, s);  // other letters vanish under restriction
        }
    }
    d.validate();
    return d;
}

Dfa figure1_pair_dfa(const std::string& a, const std::string& b,
                     std::vector<std::string> alphabet) {
    check_pair(a, b, alphabet);
    // q0..q5; q5 is absorbing; accepting {q2, q4}.
    Dfa d(std::move(alphabet), 6, 0);
    const std::size_t ia = d.letter_index(a);
    const std::size_t ib = d.letter_index(b);
    const std::size_t on_a[6] = {1, 2, 5, 1, 2, 5};
    const std::size_t on_b[6] = {3, 3, 4, 4, 5, 5};
    for (std::size_t s = 0; s < 6; ++s) {
        for (std::size_t l = 0; l < d.alphabet().size(); ++l) {
            if (s == 5)
                d.set_transition(s, l, 5);
            else if (l == ia)
                d.set_transition(s, l, on_a[s]);
            else if (l == ib)
                d.set_transition(s, l, on_b[s]);
            else
                d.set_transition(s, l, s);
        }
    }
    d.set_accepting(2);
    d.set_accepting(4);
    d.validate();
    return d;
}

std::vector<Word> figure1_disagreements(const std::string& a, const std::string& b,
                                        const std::vector<std::string>& alphabet,
                                        std::size_t max_len) {
    Dfa reference = pair_adjacent_dfa(a, b, alphabet);
    Dfa figure = figure1_pair_dfa(a, b, alphabet);
    std::vector<Word> out;
    std::vector<std::string> cur;
    auto walk = [&](auto&& self, std::size_t sr, std::size_t sf, std::size_t depth) -> void {
        if (reference.accepting(sr) != figure.accepting(sf)) out.emplace_back(cur, alphabet);
        if (depth == max_len) return;
        for (std::size_t l = 0; l < alphabet.size(); ++l) {
            cur.push_back(alphabet[l]);
            self(self, reference.step(sr, l), figure.step(sf, l), depth + 1);
            cur.pop_back();
        }
    };
    walk(walk, reference.start(), figure.start(), 0);
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& x, const Word& y) { return x.size() < y.size(); });
    return out;
}

namespace {

void check_subset_size(std::size_t n) {
    if (n == 0) throw InputError("alphabet must be nonempty");
    if (n > 16)
        throw ResourceError("subset construction needs 2^" + std::to_string(n) +
                            " states; alphabets above 16 letters are not supported");
}

} // namespace

Dfa coverage_dfa(std::vector<std::string> alphabet) {
    const std::size_t n = alphabet.size();
    check_subset_size(n);
    const std::size_t full = (std::size_t{1} << n) - 1;
    Dfa d(std::move(alphabet), full + 1, 0);  // state = set of letters seen
    for (std::size_t mask = 0; mask <= full; ++mask) {
        d.set_accepting(mask, mask == full);
        for (std::size_t l = 0; l < n; ++l)
            d.set_transition(mask, l, mask | (std::size_t{1} << l));
    }
    d.validate();
    return d;
}

Dfa perm_concat_dfa(std::vector<std::string> alphabet) {
    const std::size_t n = alphabet.size();
    check_subset_size(n);
    const std::size_t full = (std::size_t{1} << n) - 1;
    // States: (partial-block letter set, completed-a-block bit) plus dead.
    // id = mask + (done ? 2^n : 0); dead = 2^(n+1). The full mask resets to
    // the empty set with the done bit, so ids holding the full mask stay
    // unreachable.
    const std::size_t done_offset = full + 1;
    const std::size_t dead = 2 * done_offset;
    Dfa d(std::move(alphabet), dead + 1, 0);
    for (std::size_t done = 0; done <= 1; ++done) {
        for (std::size_t mask = 0; mask <= full; ++mask) {
            const std::size_t id = mask + done * done_offset;
            d.set_accepting(id, mask == 0 && done == 1);
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t bit = std::size_t{1} << l;
                if (mask & bit) {
                    d.set_transition(id, l, dead);  // repeat inside a block
                } else {
                    std::size_t next = mask | bit;
                    if (next == full)
                        d.set_transition(id, l, done_offset);  // block complete
                    else
                        d.set_transition(id, l, next + done * done_offset);
                }
            }
        }
    }
    for (std::size_t l = 0; l < n; ++l) d.set_transition(dead, l, dead);
    d.validate();
    return d;
}

LazyProduct graph_language(const Graph& g, const LanguageOptions& options) {
    const auto& vs = g.vertices();
    std::vector<ProductTerm> terms;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            terms.push_back({pair_adjacent_dfa(vs[i], vs[j], vs), !g.has_edge_by_index(i, j)});
    if (options.require_coverage) terms.push_back({coverage_dfa(vs), false});
    return LazyProduct(vs, std::move(terms), options.state_cap);
}

LazyProduct permutational_language(const Graph& g, const LanguageOptions& options) {
    const auto& vs = g.vertices();
    std::vector<ProductTerm> terms;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            terms.push_back({pair_adjacent_dfa(vs[i], vs[j], vs), !g.has_edge_by_index(i, j)});
    if (options.require_coverage) terms.push_back({coverage_dfa(vs), false});
    terms.push_back({perm_concat_dfa(vs), false});
    return LazyProduct(vs, std::move(terms), options.state_cap);
}

} // namespace rep11
