#include <doctest.h>

#include "oracles.hpp"
#include "rep11/errors.hpp"
#include "rep11/perm.hpp"
#include "rep11/search.hpp"
#include "rep11/semantics.hpp"

using namespace rep11;
using oracles::make_word;

namespace {
const std::vector<std::string> kV{"1", "2", "3", "v"};
} // namespace

TEST_CASE("adjacency rule on the counterexample words") {
    Word w = make_word("123vvv", kV);
    CHECK(adjacent_in_word(w, "1", "2"));
    CHECK(adjacent_in_word(w, "2", "3"));
    CHECK_FALSE(adjacent_in_word(w, "1", "v"));
    CHECK_FALSE(adjacent_in_word(make_word("1122", {"1", "2"}), "1", "2"));
}

TEST_CASE("adjacency preconditions are errors, not false") {
    Word w = make_word("1212", {"1", "2", "3"});
    CHECK_THROWS_AS(adjacent_in_word(w, "1", "1"), InputError);
    CHECK_THROWS_AS(adjacent_in_word(w, "1", "3"), InputError);  // 3 absent from the word
}

TEST_CASE("adjacency is symmetric") {
    for (const auto& w : oracles::all_words({"a", "b", "c"}, 5)) {
        if (!w.contains("a") || !w.contains("b")) continue;
        CHECK(adjacent_in_word(w, "a", "b") == adjacent_in_word(w, "b", "a"));
    }
}

TEST_CASE("decode recovers the counterexample graph") {
    CHECK(decode(make_word("123vvv", kV), kV) == oracles::gstar());
    CHECK(decode(make_word("1212", {"1", "2"}), {"1", "2"}) == Graph::complete(2));
    // three-permutation witness: blocks 123v / v123 / 123v
    CHECK(decode(make_word("123vv123123v", kV), kV) == oracles::gstar());
}

TEST_CASE("decode errors name the offending token") {
    CHECK_THROWS_WITH_AS(decode(make_word("123", kV), kV), doctest::Contains("'v'"), InputError);
    Word stray = make_word("12x", {"1", "2", "x"});
    CHECK_THROWS_WITH_AS(decode(stray, {"1", "2"}), doctest::Contains("'x'"), InputError);
}

TEST_CASE("verify on the counterexample graph") {
    Graph g = oracles::gstar();
    CHECK(verify(g, make_word("12vvv3", kV)));
    CHECK(verify(g, make_word("123vvv", kV)));
    CHECK_FALSE(verify(g, make_word("123v", kV)));
    CHECK(verify(Graph::complete(2), make_word("12", {"1", "2"})));
}

TEST_CASE("verify failures carry machine-readable reasons") {
    Graph g = oracles::gstar();
    auto missing = verify_explain(g, make_word("123", kV));
    CHECK_FALSE(missing.ok);
    CHECK(missing.reason == "vertex 'v' does not occur in the word");

    auto stray = verify_explain(Graph::complete(2), make_word("12x", {"1", "2", "x"}));
    CHECK_FALSE(stray.ok);
    CHECK(stray.reason == "letter 'x' is not a vertex of the graph");

    auto mismatch = verify_explain(g, make_word("123v", kV));
    CHECK_FALSE(mismatch.ok);
    REQUIRE(mismatch.mismatches.size() == 3);  // v looks adjacent to each of 1,2,3
    CHECK(mismatch.mismatches.front().x == "1");
    CHECK(mismatch.mismatches.front().y == "v");
    CHECK(mismatch.mismatches.front().xx_count + mismatch.mismatches.front().yy_count == 0);
    CHECK(mismatch.mismatches.front().adjacent_in_word);
    CHECK_FALSE(mismatch.mismatches.front().adjacent_in_graph);
}

TEST_CASE("decoder agrees with the direct non-adjacency clause") {
    const std::vector<std::string> abc{"a", "b", "c"};
    for (std::size_t len = 3; len <= 6; ++len) {
        for (const auto& w : oracles::all_words(abc, len)) {
            if (!w.covers_alphabet()) continue;
            Graph g = decode(w, abc);
            for (std::size_t i = 0; i < abc.size(); ++i)
                for (std::size_t j = i + 1; j < abc.size(); ++j)
                    CHECK(g.has_edge(abc[i], abc[j]) ==
                          !oracles::clause_non_adjacent(w, abc[i], abc[j]));
        }
    }
}

TEST_CASE("two-letter restrictions of permutational words decompose into xy/yx blocks") {
    // adjacency holds iff at most one consecutive pair of restricted blocks differs
    const std::vector<std::string> abc{"1", "2", "3"};
    for (std::size_t blocks = 1; blocks <= 4; ++blocks) {
        for (const auto& pw : all_perm_words(3, blocks)) {
            for (std::size_t i = 0; i < abc.size(); ++i) {
                for (std::size_t j = i + 1; j < abc.size(); ++j) {
                    Word r = restriction(pw.word(), {abc[i], abc[j]});
                    REQUIRE(r.size() == 2 * blocks);
                    std::size_t differing = 0;
                    for (std::size_t b = 0; b + 1 < blocks; ++b) {
                        // each restricted block is xy or yx
                        CHECK(r[2 * b] != r[2 * b + 1]);
                        if (r[2 * b] != r[2 * (b + 1)]) ++differing;
                    }
                    CHECK(adjacent_in_word(pw.word(), abc[i], abc[j]) == (differing <= 1));
                }
            }
        }
    }
}
