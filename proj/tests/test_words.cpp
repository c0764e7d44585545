#include <algorithm>

#include <doctest.h>

#include "oracles.hpp"
#include "rep11/errors.hpp"
#include "rep11/word.hpp"

using namespace rep11;
using oracles::make_word;

namespace {
const std::vector<std::string> kAbc{"a", "b", "c"};
const std::vector<std::string> kGstarAb{"1", "2", "3", "v"};
} // namespace

TEST_CASE("word construction validates letters and alphabet") {
    CHECK_NOTHROW(Word({"a", "b"}, kAbc));
    CHECK_THROWS_AS(Word({"a", "x"}, kAbc), InputError);
    CHECK_THROWS_AS(Word({}, {"a", "a"}), InputError);
    CHECK_THROWS_AS(Word({}, {"a b"}), InputError);
    CHECK(Word({}, kAbc).empty());
}

TEST_CASE("token and compact parsing round-trip") {
    std::vector<std::string> multi{"v1", "v2"};
    Word w = Word::parse_tokens("v1 v2 v2 v1", multi);
    CHECK(w.size() == 4);
    CHECK(w.str() == "v1 v2 v2 v1");
    CHECK(Word::parse_tokens(w.str(), multi) == w);
    Word c = Word::parse_compact("abba", kAbc);
    CHECK(c.compact() == "abba");
    CHECK(c.display() == "abba");
    CHECK(Word::parse_compact(c.compact(), kAbc) == c);
    CHECK(w.display() == w.str());  // multi-char tokens fall back to spaced form
    CHECK_THROWS_AS(Word::parse_tokens("v1 bogus", multi), InputError);
}

TEST_CASE("restriction keeps order and shrinks the alphabet") {
    Word w = make_word("123vvv", kGstarAb);
    CHECK(restriction(w, {"1", "v"}).compact() == "1vvv");
    CHECK(restriction(w, {"1", "v"}).alphabet() == std::vector<std::string>{"1", "v"});

    Word ab = make_word("abab", {"a", "b"});
    CHECK(restriction(ab, {"a", "b"}) == ab);

    Word w2 = make_word("12vvv3", kGstarAb);
    CHECK(restriction(w2, {"2", "v"}).compact() == "2vvv");

    CHECK_THROWS_AS(restriction(w, {"z"}), InputError);
}

TEST_CASE("restriction is idempotent") {
    for (std::size_t len = 0; len <= 6; ++len) {
        for (const auto& w : oracles::all_words(kAbc, len)) {
            Word once = restriction(w, {"a", "c"});
            CHECK(restriction(once, {"a", "c"}) == once);
        }
    }
}

TEST_CASE("factor occurrences are counted with overlap") {
    Word vvv = make_word("vvv", {"v"});
    CHECK(count_factor(vvv, {"v", "v"}) == 2);
    CHECK(count_factor(make_word("abab", {"a", "b"}), {"a", "a"}) == 0);
    CHECK(count_factor(make_word("aaaa", {"a"}), {"a", "a"}) == 3);
    CHECK_THROWS_AS(count_factor(vvv, std::vector<std::string>{}), InputError);
}

TEST_CASE("single-letter square counts match the run-length formula") {
    for (std::size_t len = 0; len <= 10; ++len) {
        for (const auto& w : oracles::all_words({"x", "y"}, len)) {
            CHECK(count_factor(w, {"x", "x"}) == oracles::run_length_square_count(w, "x"));
            // restricting to {x} merges everything into one run
            Word rx = restriction(w, {"x"});
            std::size_t x_total = rx.size();
            CHECK(count_factor(rx, {"x", "x"}) == (x_total == 0 ? 0 : x_total - 1));
        }
    }
}

TEST_CASE("repetition examples") {
    Word w = make_word("123v123v123", kGstarAb);
    auto squares = find_repetitions(w, 2);
    CHECK(std::find(squares.begin(), squares.end(), Repetition{0, 4, 2}) != squares.end());

    CHECK(find_repetitions(make_word("vvv", {"v"}), 3) ==
          std::vector<Repetition>{Repetition{0, 1, 3}});

    CHECK(find_repetitions(make_word("abcacb", kAbc), 2).empty());

    CHECK_FALSE(is_cube_free(make_word("123vvv", kGstarAb)));
    CHECK(is_square_free(make_word("ab", {"a", "b"})));
    CHECK(is_cube_free(make_word("aabbaabb", {"a", "b"})));
    CHECK_FALSE(is_square_free(make_word("aabbaabb", {"a", "b"})));
}

TEST_CASE("repetition scan matches the block-extraction oracle exhaustively") {
    for (std::size_t len = 0; len <= 10; ++len) {
        for (const auto& w : oracles::all_words({"a", "b"}, len)) {
            for (int degree : {2, 3}) {
                auto got = find_repetitions(w, degree);
                CHECK(got == oracles::naive_repetitions(w, degree));
                // soundness: each hit really is `degree` equal blocks
                for (const auto& rep : got) {
                    REQUIRE(rep.start + rep.period * static_cast<std::size_t>(degree) <= w.size());
                    for (std::size_t t = 0; t < rep.period * static_cast<std::size_t>(degree - 1); ++t)
                        CHECK(w[rep.start + t] == w[rep.start + rep.period + t]);
                }
            }
        }
    }
}

TEST_CASE("repetitions come out sorted by start then period") {
    Word w = make_word("aaaa", {"a"});
    auto reps = find_repetitions(w, 2);
    for (std::size_t i = 1; i < reps.size(); ++i) {
        bool ordered = reps[i - 1].start < reps[i].start ||
                       (reps[i - 1].start == reps[i].start && reps[i - 1].period < reps[i].period);
        CHECK(ordered);
    }
    CHECK(find_repetitions(w, 2).size() == 4);  // (0,1) (0,2) (1,1) (2,1)
}
