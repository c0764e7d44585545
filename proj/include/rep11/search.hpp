#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rep11/graph.hpp"
#include "rep11/perm.hpp"
#include "rep11/word.hpp"

namespace rep11 {

struct SearchBudget {
    std::uint64_t max_word_visits = 100'000'000;  ///< branch visits in word search
    std::uint64_t max_perm_tuples = 1'000'000;    ///< permutation tuples checked
};

struct RepSearchResult {
    std::size_t length = 0;
    Word witness;
};

struct PermRepSearchResult {
    std::size_t blocks = 0;
    PermWord witness;
};

/// Smallest length <= max_len of a word representing g, with the
/// lexicographically least witness (letters in vertex declaration order).
/// nullopt when nothing is found within max_len; ResourceError when the
/// visit budget runs out first.
std::optional<RepSearchResult> rep_number(const Graph& g, std::size_t max_len,
                                          const SearchBudget& budget = {});

/// Smallest block count <= max_blocks of a permutational representation of g;
/// tuples enumerated in lex order of permutation indices.
std::optional<PermRepSearchResult> perm_rep_number(const Graph& g, std::size_t max_blocks,
                                                   const SearchBudget& budget = {});

/// Every word of exactly the given length representing g, in lex order.
std::vector<Word> enumerate_representations(const Graph& g, std::size_t length,
                                            const SearchBudget& budget = {});

/// Every concatenation of exactly `blocks` permutations representing g, in
/// lex order of permutation indices.
std::vector<PermWord> enumerate_perm_representations(const Graph& g, std::size_t blocks,
                                                     const SearchBudget& budget = {});

/// All permutational words with the given exact block count over vertices
/// "1".."n", in lex order of permutation indices.
std::vector<PermWord> all_perm_words(std::size_t n, std::size_t blocks);

/// Scan of cube structure in permutational words: every cube found is checked
/// for period alignment (period divisible by n) and for decode preservation
/// under middle-copy removal.
struct CubeScanResult {
    std::uint64_t words_scanned = 0;
    std::uint64_t cubes_found = 0;
    std::uint64_t words_at_max_blocks = 0;
    std::vector<std::pair<Word, Repetition>> misaligned;      ///< period not divisible by n
    std::vector<std::pair<Word, Repetition>> decode_changed;  ///< removal altered the graph
    bool clean() const { return misaligned.empty() && decode_changed.empty(); }
};

/// Exhaustive scan over all permutational words with 1..max_blocks blocks.
CubeScanResult exhaustive_cube_scan(std::size_t n, std::size_t max_blocks);

/// Randomized scan: `samples` words, block count uniform in 1..max_blocks,
/// blocks drawn by Fisher-Yates from a self-contained generator so results
/// are reproducible across platforms for a given seed.
CubeScanResult random_cube_scan(std::size_t n, std::size_t max_blocks, std::uint64_t samples,
                                std::uint64_t seed);

struct AuditOptions {
    bool extended = false;      ///< add the randomized n=4 scan
    std::uint64_t seed = 12345; ///< recorded in the report
};

struct AuditEntry {
    std::string claim;
    std::string ref;  ///< stable short identifier for the assertion
    bool pass = false;
    std::string witness_or_counterexample;
    std::int64_t elapsed_ms = 0;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    bool all_pass = false;
    AuditOptions options;
};

/// Exhaustive desk-scale audit of the toolkit's core claims about K3 plus an
/// isolated vertex and about cube structure in permutational words.
AuditReport run_audit(const AuditOptions& options = {});
std::string audit_to_json(const AuditReport& report);

} // namespace rep11
