#include "rep11/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "rep11/errors.hpp"
#include "rep11/semantics.hpp"

namespace rep11 {

namespace {

// Incremental word search. Appending a letter updates, for every pair it
// belongs to, the last restricted letter and the running square count;
// branches die as soon as an edge pair collects two squares or the remaining
// positions cannot cover the unseen vertices.
class WordSearcher {
public:
    WordSearcher(const Graph& g, const SearchBudget& budget)
        : g_(g), n_(g.vertex_count()), budget_(budget) {
        adj_.assign(n_ * n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                adj_[i * n_ + j] = g.has_edge_by_index(i, j) ? 1 : 0;
        pair_last_.assign(n_ * n_, kNone);
        pair_sq_.assign(n_ * n_, 0);
        seen_.assign(n_, 0);
        missing_ = n_;
    }

    // Collect representing words of exactly `length`; stop after the first
    // when stop_first is set. Letters are tried in vertex order, so results
    // come out in lex order.
    void collect(std::size_t length, bool stop_first, std::vector<Word>& out) {
        length_ = length;
        stop_first_ = stop_first;
        done_ = false;
        out_ = &out;
        cur_.clear();
        descend();
        out_ = nullptr;
    }

    std::uint64_t visits() const { return visits_; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    struct Undo {
        std::size_t pair;
        std::size_t last;
        std::uint8_t squares;
    };

    std::size_t pair_id(std::size_t u, std::size_t v) const {
        return u < v ? u * n_ + v : v * n_ + u;
    }

    void descend() {
        if (done_) return;
        if (cur_.size() == length_) {
            if (missing_ == 0 && all_non_edges_doubled()) {
                std::vector<std::string> letters;
                letters.reserve(cur_.size());
                for (std::size_t idx : cur_) letters.push_back(g_.vertices()[idx]);
                out_->emplace_back(std::move(letters), g_.vertices());
                if (stop_first_) done_ = true;
            }
            return;
        }
        const std::size_t remaining = length_ - cur_.size() - 1;
        for (std::size_t v = 0; v < n_ && !done_; ++v) {
            if (++visits_ > budget_.max_word_visits)
                throw ResourceError("word search budget exceeded (" +
                                    std::to_string(budget_.max_word_visits) + " visits)");
            std::size_t will_miss = missing_ - (seen_[v] == 0 ? 1 : 0);
            if (will_miss > remaining) continue;

            std::vector<Undo> journal;
            journal.reserve(n_ - 1);
            bool feasible = true;
            for (std::size_t u = 0; u < n_; ++u) {
                if (u == v) continue;
                std::size_t p = pair_id(u, v);
                journal.push_back({p, pair_last_[p], pair_sq_[p]});
                if (pair_last_[p] == v) {
                    if (pair_sq_[p] < 3) ++pair_sq_[p];  // saturate; only >= 2 matters
                    if (pair_sq_[p] >= 2 && adj_[p]) feasible = false;
                }
                pair_last_[p] = v;
            }
            ++seen_[v];
            if (seen_[v] == 1) --missing_;
            cur_.push_back(v);

            if (feasible) descend();

            cur_.pop_back();
            if (seen_[v] == 1) ++missing_;
            --seen_[v];
            for (auto it = journal.rbegin(); it != journal.rend(); ++it) {
                pair_last_[it->pair] = it->last;
                pair_sq_[it->pair] = it->squares;
            }
        }
    }

    bool all_non_edges_doubled() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!adj_[i * n_ + j] && pair_sq_[i * n_ + j] < 2) return false;
        return true;
    }

    const Graph& g_;
    std::size_t n_;
    SearchBudget budget_;
    std::vector<std::uint8_t> adj_;
    std::vector<std::size_t> pair_last_;
    std::vector<std::uint8_t> pair_sq_;
    std::vector<std::size_t> seen_;
    std::size_t missing_ = 0;
    std::vector<std::size_t> cur_;
    std::size_t length_ = 0;
    bool stop_first_ = false;
    bool done_ = false;
    std::vector<Word>* out_ = nullptr;
    std::uint64_t visits_ = 0;
};

std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
    std::vector<std::size_t> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// Enumerates concatenations of `blocks` permutations of g's vertices in lex
// order of permutation indices, collecting the ones that represent g.
std::vector<PermWord> collect_perm_reps(const Graph& g, std::size_t blocks,
                                        const SearchBudget& budget, bool stop_first,
                                        std::uint64_t& tuples_used) {
    const std::size_t n = g.vertex_count();
    const auto perms = permutations_of(n);
    std::vector<PermWord> out;
    std::vector<std::size_t> odometer(blocks, 0);
    for (;;) {
        if (++tuples_used > budget.max_perm_tuples)
            throw ResourceError("permutation search budget exceeded (" +
                                std::to_string(budget.max_perm_tuples) + " tuples)");
        std::vector<std::string> letters;
        letters.reserve(blocks * n);
        for (std::size_t b : odometer)
            for (std::size_t idx : perms[b]) letters.push_back(g.vertices()[idx]);
        Word w(std::move(letters), g.vertices());
        if (verify(g, w)) {
            out.push_back(PermWord::split(w));
            if (stop_first) return out;
        }
        // advance odometer, last position fastest
        std::size_t pos = blocks;
        while (pos > 0) {
            if (++odometer[pos - 1] < perms.size()) break;
            odometer[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

} // namespace

std::optional<RepSearchResult> rep_number(const Graph& g, std::size_t max_len,
                                          const SearchBudget& budget) {
    if (max_len < g.vertex_count()) throw InputError("rep_number: max_len is below the vertex count");
    WordSearcher searcher(g, budget);
    for (std::size_t len = g.vertex_count(); len <= max_len; ++len) {
        std::vector<Word> found;
        searcher.collect(len, /*stop_first=*/true, found);
        if (!found.empty()) return RepSearchResult{len, std::move(found.front())};
    }
    return std::nullopt;
}

std::optional<PermRepSearchResult> perm_rep_number(const Graph& g, std::size_t max_blocks,
                                                   const SearchBudget& budget) {
    if (max_blocks < 1) throw InputError("perm_rep_number: max_blocks must be at least 1");
    std::uint64_t tuples = 0;
    for (std::size_t k = 1; k <= max_blocks; ++k) {
        auto found = collect_perm_reps(g, k, budget, /*stop_first=*/true, tuples);
        if (!found.empty()) return PermRepSearchResult{k, std::move(found.front())};
    }
    return std::nullopt;
}

std::vector<Word> enumerate_representations(const Graph& g, std::size_t length,
                                            const SearchBudget& budget) {
    std::vector<Word> out;
    if (length < g.vertex_count()) return out;  // cannot cover
    WordSearcher searcher(g, budget);
    searcher.collect(length, /*stop_first=*/false, out);
    return out;
}

std::vector<PermWord> enumerate_perm_representations(const Graph& g, std::size_t blocks,
                                                     const SearchBudget& budget) {
    if (blocks < 1) throw InputError("enumerate_perm_representations: blocks must be at least 1");
    std::uint64_t tuples = 0;
    return collect_perm_reps(g, blocks, budget, /*stop_first=*/false, tuples);
}

std::vector<PermWord> all_perm_words(std::size_t n, std::size_t blocks) {
    if (n < 1 || blocks < 1) throw InputError("all_perm_words: n and blocks must be at least 1");
    std::vector<std::string> alphabet;
    for (std::size_t i = 1; i <= n; ++i) alphabet.push_back(std::to_string(i));
    const auto perms = permutations_of(n);
    double total = 1;
    for (std::size_t b = 0; b < blocks; ++b) total *= static_cast<double>(perms.size());
    if (total > 1e7)
        throw ResourceError("all_perm_words: " + std::to_string(perms.size()) + "^" +
                            std::to_string(blocks) + " words is beyond the 1e7 guard");
    std::vector<PermWord> out;
    std::vector<std::size_t> odometer(blocks, 0);
    for (;;) {
        std::vector<std::string> letters;
        letters.reserve(blocks * n);
        for (std::size_t b : odometer)
            for (std::size_t idx : perms[b]) letters.push_back(alphabet[idx]);
        out.push_back(PermWord::split(Word(std::move(letters), alphabet)));
        std::size_t pos = blocks;
        while (pos > 0) {
            if (++odometer[pos - 1] < perms.size()) break;
            odometer[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

namespace {

// Self-contained generator (splitmix64) so sampled scans reproduce across
// standard libraries.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

void scan_word(const PermWord& pw, CubeScanResult& result) {
    ++result.words_scanned;
    const std::size_t n = pw.block_size();
    auto cubes = find_repetitions(pw.word(), 3);
    if (cubes.empty()) return;
    Graph before = decode(pw);
    for (const auto& cube : cubes) {
        ++result.cubes_found;
        if (cube.period % n != 0) {
            result.misaligned.emplace_back(pw.word(), cube);
            continue;
        }
        PermWord shorter = remove_cube_middle(pw, cube);
        if (decode(shorter) != before) result.decode_changed.emplace_back(pw.word(), cube);
    }
}

} // namespace

CubeScanResult exhaustive_cube_scan(std::size_t n, std::size_t max_blocks) {
    CubeScanResult result;
    for (std::size_t k = 1; k <= max_blocks; ++k) {
        auto words = all_perm_words(n, k);
        if (k == max_blocks) result.words_at_max_blocks = words.size();
        for (const auto& pw : words) scan_word(pw, result);
    }
    return result;
}

CubeScanResult random_cube_scan(std::size_t n, std::size_t max_blocks, std::uint64_t samples,
                                std::uint64_t seed) {
    if (n < 1 || max_blocks < 1) throw InputError("random_cube_scan: n and blocks must be at least 1");
    std::vector<std::string> alphabet;
    for (std::size_t i = 1; i <= n; ++i) alphabet.push_back(std::to_string(i));
    SplitMix64 rng(seed);
    CubeScanResult result;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::size_t blocks = 1 + static_cast<std::size_t>(rng.below(max_blocks));
        if (blocks == max_blocks) ++result.words_at_max_blocks;
        std::vector<std::string> letters;
        letters.reserve(blocks * n);
        std::vector<std::size_t> perm(n);
        for (std::size_t b = 0; b < blocks; ++b) {
            std::iota(perm.begin(), perm.end(), 0);
            for (std::size_t i = n; i > 1; --i)  // Fisher-Yates
                std::swap(perm[i - 1], perm[rng.below(i)]);
            for (std::size_t idx : perm) letters.push_back(alphabet[idx]);
        }
        scan_word(PermWord::split(Word(std::move(letters), alphabet)), result);
    }
    return result;
}

namespace {

Graph k3_plus_isolated() {
    return Graph::from_edges({"1", "2", "3", "v"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
}

using Clock = std::chrono::steady_clock;

AuditEntry timed_entry(const std::string& claim, const std::string& ref,
                       const std::function<std::pair<bool, std::string>()>& check) {
    AuditEntry entry;
    entry.claim = claim;
    entry.ref = ref;
    auto t0 = Clock::now();
    auto [pass, note] = check();
    entry.pass = pass;
    entry.witness_or_counterexample = note;
    entry.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return entry;
}

} // namespace

AuditReport run_audit(const AuditOptions& options) {
    AuditReport report;
    report.options = options;
    const Graph gstar = k3_plus_isolated();

    report.entries.push_back(timed_entry(
        "K3 plus isolated vertex: minimum representation length is 6 and all 24 "
        "minimum-length words contain the cube vvv",
        "min-length-cube", [&]() -> std::pair<bool, std::string> {
            auto best = rep_number(gstar, 6);
            if (!best || best->length != 6)
                return {false, best ? "unexpected minimum " + std::to_string(best->length)
                                    : "nothing found up to length 6"};
            auto words = enumerate_representations(gstar, 6);
            if (words.size() != 24)
                return {false, "expected 24 words, found " + std::to_string(words.size())};
            for (const auto& w : words)
                if (count_factor(w, {"v", "v", "v"}) == 0) return {false, "cube-free word " + w.display()};
            return {true, "24 words; least is " + best->witness.display()};
        }));

    report.entries.push_back(timed_entry(
        "K3 plus isolated vertex: permutational minimum is 3 blocks, no 2-block word "
        "works, and every representing 3-block word contains a square",
        "perm-min-square", [&]() -> std::pair<bool, std::string> {
            if (!enumerate_perm_representations(gstar, 1).empty())
                return {false, "a 1-block representation exists"};
            if (!enumerate_perm_representations(gstar, 2).empty())
                return {false, "a 2-block representation exists"};
            auto triples = enumerate_perm_representations(gstar, 3);
            if (triples.empty()) return {false, "no 3-block representation found"};
            for (const auto& pw : triples)
                if (is_square_free(pw.word()))
                    return {false, "square-free triple " + pw.word().display()};
            return {true, std::to_string(triples.size()) + " representing triples; least is " +
                              triples.front().word().display()};
        }));

    report.entries.push_back(timed_entry(
        "cube periods in permutational words are multiples of the block size "
        "(n=3, up to 4 blocks, exhaustive)",
        "cube-period-alignment", [&]() -> std::pair<bool, std::string> {
            auto scan = exhaustive_cube_scan(3, 4);
            if (!scan.misaligned.empty())
                return {false, "misaligned cube in " + scan.misaligned.front().first.display()};
            return {true, std::to_string(scan.words_scanned) + " words, " +
                              std::to_string(scan.cubes_found) + " cubes, all aligned"};
        }));

    report.entries.push_back(timed_entry(
        "removing the middle copy of any cube preserves the decoded graph "
        "(n=3, up to 4 blocks, exhaustive)",
        "cube-middle-removal", [&]() -> std::pair<bool, std::string> {
            auto scan = exhaustive_cube_scan(3, 4);
            if (!scan.decode_changed.empty())
                return {false, "decode changed for " + scan.decode_changed.front().first.display()};
            return {true, std::to_string(scan.cubes_found) + " cube removals, decode preserved"};
        }));

    if (options.extended) {
        report.entries.push_back(timed_entry(
            "randomized cube scan at n=4 (10000 words, up to 5 blocks): alignment and "
            "removal safety hold",
            "cube-period-alignment-sampled", [&]() -> std::pair<bool, std::string> {
                auto scan = random_cube_scan(4, 5, 10000, options.seed);
                if (!scan.clean())
                    return {false, (scan.misaligned.empty() ? scan.decode_changed.front().first
                                                            : scan.misaligned.front().first)
                                       .display()};
                return {true, std::to_string(scan.words_scanned) + " words, " +
                                  std::to_string(scan.cubes_found) + " cubes, all clean"};
            }));
    }

    report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                  [](const AuditEntry& e) { return e.pass; });
    return report;
}

std::string audit_to_json(const AuditReport& report) {
    nlohmann::ordered_json j;
    auto& assertions = j["assertions"] = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        nlohmann::ordered_json entry;
        entry["claim"] = e.claim;
        entry["paper_ref"] = e.ref;
        entry["verdict"] = e.pass ? "pass" : "fail";
        entry["witness_or_counterexample"] = e.witness_or_counterexample;
        entry["elapsed_ms"] = e.elapsed_ms;
        assertions.push_back(std::move(entry));
    }
    j["all_pass"] = report.all_pass;
    j["extended"] = report.options.extended;
    j["seed"] = report.options.seed;
    return j.dump(2) + "\n";
}

} // namespace rep11
