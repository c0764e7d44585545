#include "rep11/dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "rep11/errors.hpp"

namespace rep11 {

Dfa::Dfa(std::vector<std::string> alphabet, std::size_t state_count, std::size_t start)
    : alphabet_(std::move(alphabet)), start_(start) {
    if (alphabet_.empty()) throw InputError("DFA needs a nonempty alphabet");
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (!is_valid_token(alphabet_[i]))
            throw InputError("invalid alphabet token '" + alphabet_[i] + "'");
        if (!letter_idx_.emplace(alphabet_[i], i).second)
            throw InputError("duplicate alphabet token '" + alphabet_[i] + "'");
    }
    if (state_count == 0) throw InputError("DFA needs at least one state");
    if (start >= state_count) throw InputError("DFA start state out of range");
    delta_.assign(state_count, std::vector<std::size_t>(alphabet_.size(), npos));
    accept_.assign(state_count, 0);
}

std::size_t Dfa::letter_index(std::string_view token) const {
    auto it = letter_idx_.find(std::string(token));
    if (it == letter_idx_.end()) throw InputError("letter '" + std::string(token) + "' is not in the DFA alphabet");
    return it->second;
}

void Dfa::set_transition(std::size_t from, std::size_t letter, std::size_t to) {
    if (from >= delta_.size() || to >= delta_.size() || letter >= alphabet_.size())
        throw InputError("transition out of range");
    delta_[from][letter] = to;
}

void Dfa::set_accepting(std::size_t state, bool accepting) {
    if (state >= accept_.size()) throw InputError("accepting state out of range");
    accept_[state] = accepting ? 1 : 0;
}

void Dfa::validate() const {
    for (std::size_t s = 0; s < delta_.size(); ++s)
        for (std::size_t a = 0; a < alphabet_.size(); ++a)
            if (delta_[s][a] >= delta_.size())
                throw InvariantViolation("DFA transition missing for state " + std::to_string(s) +
                                         " on letter '" + alphabet_[a] + "'");
}

bool Dfa::member(const Word& w) const {
    std::size_t s = start_;
    for (const auto& l : w.letters()) s = delta_[s][letter_index(l)];
    return accepting(s);
}

Dfa complement(Dfa d) {
    d.validate();
    for (std::size_t s = 0; s < d.state_count(); ++s) d.set_accepting(s, !d.accepting(s));
    return d;
}

namespace {

// Reachable part of d with states renumbered in BFS discovery order.
Dfa bfs_renumber(const Dfa& d) {
    d.validate();
    const std::size_t k = d.alphabet().size();
    std::vector<std::size_t> order;          // new id -> old id
    std::vector<std::size_t> remap(d.state_count(), Dfa::npos);
    std::queue<std::size_t> queue;
    remap[d.start()] = 0;
    order.push_back(d.start());
    queue.push(d.start());
    while (!queue.empty()) {
        std::size_t s = queue.front();
        queue.pop();
        for (std::size_t a = 0; a < k; ++a) {
            std::size_t t = d.step(s, a);
            if (remap[t] == Dfa::npos) {
                remap[t] = order.size();
                order.push_back(t);
                queue.push(t);
            }
        }
    }
    Dfa out(d.alphabet(), order.size(), 0);
    for (std::size_t s = 0; s < order.size(); ++s) {
        out.set_accepting(s, d.accepting(order[s]));
        for (std::size_t a = 0; a < k; ++a) out.set_transition(s, a, remap[d.step(order[s], a)]);
    }
    return out;
}

} // namespace

Dfa minimize(const Dfa& d) {
    Dfa r = bfs_renumber(d);
    const std::size_t n = r.state_count();
    const std::size_t k = r.alphabet().size();

    // Initial partition by acceptance, class labels assigned in state order.
    std::vector<std::size_t> cls(n);
    {
        std::map<bool, std::size_t> ids;
        for (std::size_t s = 0; s < n; ++s)
            cls[s] = ids.emplace(r.accepting(s), ids.size()).first->second;
    }
    std::size_t num_classes = 1 + *std::max_element(cls.begin(), cls.end());

    // Moore refinement: split classes by (class, successor classes) until the
    // class count stops growing.
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> sig;
            sig.reserve(k + 1);
            sig.push_back(cls[s]);
            for (std::size_t a = 0; a < k; ++a) sig.push_back(cls[r.step(s, a)]);
            next[s] = ids.emplace(std::move(sig), ids.size()).first->second;
        }
        cls = std::move(next);
        if (ids.size() == num_classes) break;
        num_classes = ids.size();
    }

    const std::size_t classes = num_classes;
    Dfa q(r.alphabet(), classes, cls[r.start()]);
    for (std::size_t s = 0; s < n; ++s) {
        q.set_accepting(cls[s], r.accepting(s));
        for (std::size_t a = 0; a < k; ++a) q.set_transition(cls[s], a, cls[r.step(s, a)]);
    }
    return bfs_renumber(q);
}

std::string export_dot(const Dfa& d) {
    Dfa r = bfs_renumber(d);
    const std::size_t k = r.alphabet().size();
    std::ostringstream out;
    out << "digraph dfa {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __start [shape=point, label=\"\"];\n";
    out << "  __start -> q0;\n";
    for (std::size_t s = 0; s < r.state_count(); ++s)
        if (r.accepting(s)) out << "  q" << s << " [peripheries=2];\n";
    for (std::size_t s = 0; s < r.state_count(); ++s) {
        // group parallel edges: one edge per target, letters joined in order
        std::vector<std::pair<std::size_t, std::string>> grouped;  // (target, label)
        for (std::size_t a = 0; a < k; ++a) {
            std::size_t t = r.step(s, a);
            auto it = std::find_if(grouped.begin(), grouped.end(),
                                   [&](const auto& g) { return g.first == t; });
            if (it == grouped.end())
                grouped.emplace_back(t, r.alphabet()[a]);
            else
                it->second += "," + r.alphabet()[a];
        }
        for (const auto& [t, label] : grouped)
            out << "  q" << s << " -> q" << t << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const Dfa& d) {
    Dfa r = bfs_renumber(d);
    nlohmann::ordered_json j;
    j["states"] = r.state_count();
    j["alphabet"] = r.alphabet();
    j["start"] = r.start();
    auto& acc = j["accepting"] = nlohmann::ordered_json::array();
    for (std::size_t s = 0; s < r.state_count(); ++s)
        if (r.accepting(s)) acc.push_back(s);
    auto& trans = j["transitions"] = nlohmann::ordered_json::array();
    for (std::size_t s = 0; s < r.state_count(); ++s)
        for (std::size_t a = 0; a < r.alphabet().size(); ++a)
            trans.push_back({s, r.alphabet()[a], r.step(s, a)});
    return j.dump(2) + "\n";
}

Dfa dfa_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("DFA JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("DFA JSON: expected an object");
    for (const char* key : {"states", "alphabet", "start", "accepting", "transitions"})
        if (!j.contains(key)) throw InputError(std::string("DFA JSON: missing field '") + key + "'");
    std::size_t states = j.at("states").get<std::size_t>();
    std::vector<std::string> alphabet = j.at("alphabet").get<std::vector<std::string>>();
    std::size_t start = j.at("start").get<std::size_t>();
    Dfa d(std::move(alphabet), states, start);
    for (const auto& s : j.at("accepting")) d.set_accepting(s.get<std::size_t>());
    for (const auto& t : j.at("transitions")) {
        if (!t.is_array() || t.size() != 3)
            throw InputError("DFA JSON: each transition must be [state, letter, state]");
        d.set_transition(t[0].get<std::size_t>(), d.letter_index(t[1].get<std::string>()),
                         t[2].get<std::size_t>());
    }
    d.validate();
    return d;
}

} // namespace rep11
