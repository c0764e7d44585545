#include "rep11/product.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <unordered_map>

#include "rep11/errors.hpp"

namespace rep11 {

std::size_t default_state_cap() {
    if (const char* env = std::getenv("REP11_STATE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 5'000'000;
}

namespace {

struct TupleHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const {
        std::size_t h = v.size();
        for (std::size_t x : v)
            h ^= std::hash<std::size_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace

LazyProduct::LazyProduct(std::vector<std::string> alphabet, std::vector<ProductTerm> terms,
                         std::size_t state_cap)
    : alphabet_(std::move(alphabet)), terms_(std::move(terms)), cap_(state_cap) {
    if (cap_ == 0) throw InputError("product state cap must be positive");
    for (const auto& term : terms_) {
        term.dfa.validate();
        if (term.dfa.alphabet() != alphabet_)
            throw InputError("product term alphabet differs from the product alphabet");
    }
}

bool LazyProduct::member(const Word& w) const {
    std::vector<std::size_t> state(terms_.size());
    for (std::size_t t = 0; t < terms_.size(); ++t) state[t] = terms_[t].dfa.start();
    std::vector<std::size_t> letter_ids;
    letter_ids.reserve(w.size());
    for (const auto& l : w.letters()) {
        auto it = std::find(alphabet_.begin(), alphabet_.end(), l);
        if (it == alphabet_.end())
            throw InputError("letter '" + l + "' is not in the product alphabet");
        letter_ids.push_back(static_cast<std::size_t>(it - alphabet_.begin()));
    }
    for (std::size_t a : letter_ids)
        for (std::size_t t = 0; t < terms_.size(); ++t)
            state[t] = terms_[t].dfa.step(state[t], a);
    for (std::size_t t = 0; t < terms_.size(); ++t)
        if (terms_[t].dfa.accepting(state[t]) == terms_[t].negated) return false;
    return true;
}

struct LazyProduct::Explored {
    std::vector<std::vector<std::size_t>> tuples;  // id -> component states
    std::vector<std::vector<std::size_t>> delta;   // id -> successor ids per letter
    std::vector<std::uint8_t> accepting;
    std::vector<std::size_t> parent;      // BFS tree, npos for the start
    std::vector<std::size_t> via_letter;  // letter taken from parent
    std::optional<std::size_t> first_accepting;
};

LazyProduct::Explored LazyProduct::explore(bool stop_at_accepting, std::size_t cap) const {
    Explored ex;
    const std::size_t k = alphabet_.size();
    std::unordered_map<std::vector<std::size_t>, std::size_t, TupleHash> ids;

    auto tuple_accepting = [&](const std::vector<std::size_t>& tuple) {
        for (std::size_t t = 0; t < terms_.size(); ++t)
            if (terms_[t].dfa.accepting(tuple[t]) == terms_[t].negated) return false;
        return true;
    };
    auto add_state = [&](std::vector<std::size_t> tuple, std::size_t parent,
                         std::size_t via) -> std::size_t {
        auto [it, inserted] = ids.emplace(std::move(tuple), ex.tuples.size());
        if (!inserted) return it->second;
        if (ex.tuples.size() >= cap)
            throw ResourceError("product state cap exceeded (cap=" + std::to_string(cap) +
                                ", explored=" + std::to_string(ex.tuples.size()) + ")");
        ex.tuples.push_back(it->first);
        ex.delta.emplace_back();
        ex.accepting.push_back(tuple_accepting(it->first) ? 1 : 0);
        ex.parent.push_back(parent);
        ex.via_letter.push_back(via);
        return it->second;
    };

    std::vector<std::size_t> start(terms_.size());
    for (std::size_t t = 0; t < terms_.size(); ++t) start[t] = terms_[t].dfa.start();
    std::size_t start_id = add_state(std::move(start), Dfa::npos, Dfa::npos);
    if (ex.accepting[start_id]) {
        ex.first_accepting = start_id;
        if (stop_at_accepting) return ex;
    }

    std::queue<std::size_t> queue;
    queue.push(start_id);
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop();
        ex.delta[cur].resize(k);
        for (std::size_t a = 0; a < k; ++a) {
            std::vector<std::size_t> next(terms_.size());
            for (std::size_t t = 0; t < terms_.size(); ++t)
                next[t] = terms_[t].dfa.step(ex.tuples[cur][t], a);
            std::size_t before = ex.tuples.size();
            std::size_t id = add_state(std::move(next), cur, a);
            ex.delta[cur][a] = id;
            if (id == before) {  // newly discovered
                if (ex.accepting[id] && !ex.first_accepting) {
                    ex.first_accepting = id;
                    if (stop_at_accepting) return ex;
                }
                queue.push(id);
            }
        }
    }
    return ex;
}

std::optional<Word> LazyProduct::shortest_accepted() const {
    Explored ex = explore(/*stop_at_accepting=*/true, cap_);
    if (!ex.first_accepting) return std::nullopt;
    std::vector<std::string> letters;
    for (std::size_t s = *ex.first_accepting; ex.parent[s] != Dfa::npos; s = ex.parent[s])
        letters.push_back(alphabet_[ex.via_letter[s]]);
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters), alphabet_);
}

bool LazyProduct::is_empty() const {
    return !explore(/*stop_at_accepting=*/true, cap_).first_accepting.has_value();
}

std::vector<Word> LazyProduct::enumerate_accepted(std::size_t max_len) const {
    const std::size_t k = alphabet_.size();
    std::vector<Word> out;
    std::vector<std::string> cur;
    std::vector<std::size_t> state(terms_.size());
    for (std::size_t t = 0; t < terms_.size(); ++t) state[t] = terms_[t].dfa.start();

    auto accepting_now = [&](const std::vector<std::size_t>& tuple) {
        for (std::size_t t = 0; t < terms_.size(); ++t)
            if (terms_[t].dfa.accepting(tuple[t]) == terms_[t].negated) return false;
        return true;
    };

    // depth-first over the word tree; letters in alphabet order
    auto walk = [&](auto&& self, std::vector<std::size_t>& tuple, std::size_t depth) -> void {
        if (accepting_now(tuple)) out.emplace_back(cur, alphabet_);
        if (depth == max_len) return;
        for (std::size_t a = 0; a < k; ++a) {
            std::vector<std::size_t> next(terms_.size());
            for (std::size_t t = 0; t < terms_.size(); ++t)
                next[t] = terms_[t].dfa.step(tuple[t], a);
            cur.push_back(alphabet_[a]);
            self(self, next, depth + 1);
            cur.pop_back();
        }
    };
    walk(walk, state, 0);
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return out;
}

Dfa LazyProduct::materialize() const { return materialize(cap_); }

Dfa LazyProduct::materialize(std::size_t cap) const {
    Explored ex = explore(/*stop_at_accepting=*/false, cap);
    Dfa d(alphabet_, ex.tuples.size(), 0);
    for (std::size_t s = 0; s < ex.tuples.size(); ++s) {
        d.set_accepting(s, ex.accepting[s] != 0);
        for (std::size_t a = 0; a < alphabet_.size(); ++a) d.set_transition(s, a, ex.delta[s][a]);
    }
    d.validate();
    return d;
}

} // namespace rep11
