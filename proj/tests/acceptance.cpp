// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Every tolerance is exact; elapsed-time ceilings are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rep11/errors.hpp"
#include "rep11/graph.hpp"
#include "rep11/languages.hpp"
#include "rep11/perm.hpp"
#include "rep11/search.hpp"
#include "rep11/semantics.hpp"

using namespace rep11;

namespace {

struct Failure {
    std::string detail;
};

void expect(bool condition, const std::string& detail) {
    if (!condition) throw Failure{detail};
}

Graph gstar() {
    return Graph::from_edges({"1", "2", "3", "v"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
}

std::vector<Graph> all_labeled_graphs(const std::vector<std::string>& vertices) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            pairs.emplace_back(vertices[i], vertices[j]);
    std::vector<Graph> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<std::string, std::string>> edges;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (mask & (1u << p)) edges.push_back(pairs[p]);
        out.push_back(Graph::from_edges(vertices, edges));
    }
    return out;
}

std::vector<Word> words_up_to(const std::vector<std::string>& alphabet, std::size_t max_len) {
    std::vector<Word> out;
    out.emplace_back(std::vector<std::string>{}, alphabet);
    std::vector<std::size_t> odometer;
    for (std::size_t len = 1; len <= max_len; ++len) {
        odometer.assign(len, 0);
        for (;;) {
            std::vector<std::string> letters;
            letters.reserve(len);
            for (std::size_t idx : odometer) letters.push_back(alphabet[idx]);
            out.emplace_back(std::move(letters), alphabet);
            std::size_t pos = len;
            while (pos > 0) {
                if (++odometer[pos - 1] < alphabet.size()) break;
                odometer[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return out;
}

bool is_permutational(const Word& w) {
    try {
        PermWord::split(w);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

class Runner {
public:
    void criterion(int number, const std::string& title, double limit_seconds,
                   const std::function<void()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        std::string failure;
        try {
            body();
        } catch (const Failure& f) {
            failure = f.detail;
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (failure.empty() && elapsed > limit_seconds) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "took %.2fs, limit %.0fs", elapsed, limit_seconds);
            failure = buf;
        }
        if (failure.empty()) {
            std::printf("PASS criterion %d (%.2fs): %s\n", number, elapsed, title.c_str());
        } else {
            std::printf("FAIL criterion %d (%.2fs): %s -- %s\n", number, elapsed, title.c_str(),
                        failure.c_str());
            ++failures_;
        }
    }

    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

} // namespace

int main() {
    Runner runner;
    const Graph g_star = gstar();

    runner.criterion(1, "minimum representation length of K3 plus isolated vertex is 6", 5.0, [&] {
        auto searched = rep_number(g_star, 8);
        expect(searched.has_value(), "search found nothing up to length 8");
        expect(searched->length == 6, "search minimum " + std::to_string(searched->length));
        auto accepted = graph_language(g_star).shortest_accepted();
        expect(accepted.has_value(), "automaton language empty");
        expect(accepted->size() == 6, "automaton minimum " + std::to_string(accepted->size()));
    });

    runner.criterion(2, "all 24 minimum-length words contain the cube vvv", 5.0, [&] {
        auto words = enumerate_representations(g_star, 6);
        expect(words.size() == 24, "found " + std::to_string(words.size()) + " words");
        for (const auto& w : words) {
            expect(count_factor(w, {"v", "v", "v"}) >= 1, "no vvv in " + w.display());
            expect(!is_cube_free(w), "cube-free word " + w.display());
        }
    });

    runner.criterion(3, "permutational minimum is 3 blocks and every representing triple has a square",
                     30.0, [&] {
        expect(enumerate_perm_representations(g_star, 2).empty(),
               "a 2-block representation exists");
        auto triples = enumerate_perm_representations(g_star, 3);
        expect(!triples.empty(), "no 3-block representation among the 13824 triples");
        for (const auto& pw : triples)
            expect(!is_square_free(pw.word()), "square-free triple " + pw.word().display());
        auto least = perm_rep_number(g_star, 3);
        expect(least.has_value() && least->blocks == 3, "permutational minimum is not 3");
    });

    runner.criterion(4, "cube periods are multiples of the block size (exhaustive n=3, sampled n=4)",
                     30.0, [&] {
        auto exhaustive = exhaustive_cube_scan(3, 4);
        expect(exhaustive.misaligned.empty(),
               "misaligned cube in " + (exhaustive.misaligned.empty()
                                            ? std::string()
                                            : exhaustive.misaligned.front().first.display()));
        expect(exhaustive.words_at_max_blocks == 1296,
               "expected 1296 four-block words, saw " +
                   std::to_string(exhaustive.words_at_max_blocks));
        auto sampled = random_cube_scan(4, 5, 10000, 12345);
        expect(sampled.words_scanned == 10000, "sample count off");
        expect(sampled.misaligned.empty(), "misaligned cube in a sampled word");
    });

    runner.criterion(5, "cube middle removal and normalization preserve the decoded graph", 30.0, [&] {
        auto exhaustive = exhaustive_cube_scan(3, 4);
        expect(exhaustive.decode_changed.empty(),
               "decode changed for " + (exhaustive.decode_changed.empty()
                                            ? std::string()
                                            : exhaustive.decode_changed.front().first.display()));
        for (std::size_t blocks = 1; blocks <= 4; ++blocks) {
            for (const auto& pw : all_perm_words(3, blocks)) {
                auto normalized = cube_free_normalize(pw);
                expect(is_cube_free(normalized.word()),
                       "normalization left a cube in " + normalized.word().display());
                expect(decode(normalized) == decode(pw),
                       "normalization changed decode of " + pw.word().display());
            }
        }
    });

    runner.criterion(6, "language membership equals verification on every 3-vertex graph", 60.0, [&] {
        const std::vector<std::string> vertices{"1", "2", "3"};
        auto words = words_up_to(vertices, 6);
        for (const auto& g : all_labeled_graphs(vertices)) {
            LazyProduct plain = graph_language(g);
            LazyProduct permutational = permutational_language(g);
            for (const auto& w : words) {
                bool expected = verify(g, w);
                expect(plain.member(w) == expected,
                       "graph_language mismatch on " + w.display());
                expect(permutational.member(w) == (is_permutational(w) && expected),
                       "permutational_language mismatch on " + w.display());
            }
        }
    });

    runner.criterion(7, "pair automaton equals the definition; figure-1 variant disagrees", 30.0, [&] {
        const std::vector<std::string> abc{"a", "b", "c"};
        Dfa d = pair_adjacent_dfa("a", "b", abc);
        for (const auto& w : words_up_to(abc, 6)) {
            Word r = restriction(w, {"a", "b"});
            bool expected = r.contains("a") && r.contains("b") &&
                            count_factor(r, {"a", "a"}) + count_factor(r, {"b", "b"}) <= 1;
            expect(d.member(w) == expected, "pair automaton mismatch on " + w.display());
        }
        auto disagreements = figure1_disagreements("a", "b", abc, 6);
        expect(!disagreements.empty(), "figure-1 variant agrees everywhere");
        bool has_abab = false;
        for (const auto& w : disagreements) has_abab = has_abab || w.compact() == "abab";
        expect(has_abab, "abab missing from the disagreement set");
        Dfa figure = figure1_pair_dfa("a", "b", abc);
        expect(!figure.member(Word::parse_compact("abab", abc)), "figure-1 variant accepts abab");
    });

    runner.criterion(8, "search minimum equals automaton minimum on every graph with up to 3 vertices",
                     30.0, [&] {
        std::vector<std::vector<std::string>> vertex_sets{{"1"}, {"1", "2"}, {"1", "2", "3"}};
        for (const auto& vertices : vertex_sets) {
            for (const auto& g : all_labeled_graphs(vertices)) {
                auto searched = rep_number(g, 8);
                auto accepted = graph_language(g).shortest_accepted();
                expect(searched.has_value(), "search found nothing for " + g.serialize());
                expect(accepted.has_value(), "language empty for " + g.serialize());
                expect(searched->length == accepted->size(),
                       "minima differ for " + g.serialize() + ": search " +
                           std::to_string(searched->length) + ", automaton " +
                           std::to_string(accepted->size()));
            }
        }
    });

    if (runner.failures() == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", runner.failures());
    return runner.failures();
}
