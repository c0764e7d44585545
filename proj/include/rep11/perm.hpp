#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rep11/graph.hpp"
#include "rep11/word.hpp"

namespace rep11 {

/// A word certified to be a concatenation of permutations of its alphabet.
///
/// Blocks are forced at indices 0, n, 2n, ... for n = alphabet size, so the
/// decomposition is unique when it exists. Zero blocks (the empty word) is a
/// valid decomposition.
class PermWord {
public:
    /// The unique block decomposition of w, or InputError("not permutational:
    /// ...") naming the first offending block.
    static PermWord split(const Word& w);
    /// Convenience: concatenate blocks (each a permutation) and certify.
    static PermWord from_blocks(const std::vector<std::vector<std::string>>& blocks,
                                std::vector<std::string> alphabet);

    const Word& word() const { return word_; }
    std::size_t block_size() const { return word_.alphabet().size(); }
    std::size_t block_count() const { return blocks_; }
    std::span<const std::string> block(std::size_t i) const;

    friend bool operator==(const PermWord& a, const PermWord& b) { return a.word_ == b.word_; }
    friend bool operator!=(const PermWord& a, const PermWord& b) { return !(a == b); }

private:
    PermWord(Word w, std::size_t blocks) : word_(std::move(w)), blocks_(blocks) {}
    Word word_;
    std::size_t blocks_ = 0;
};

/// The graph represented by the permutational word (alphabet = vertex list).
Graph decode(const PermWord& pw);

/// Cubes in pw.word() whose period is not a multiple of the block size.
/// Always empty for a valid permutational word; a nonempty result is either
/// a bug or a counterexample to the alignment property and should be
/// reported loudly.
std::vector<Repetition> misaligned_cubes(const PermWord& pw);

/// Removes block i when block i+1 is an identical permutation. The decoded
/// graph is unchanged. Precondition failure throws InputError.
PermWord remove_duplicate_block(const PermWord& pw, std::size_t i);

/// Removes the middle copy of a cube. The cube's period must be a multiple
/// of the block size (anything else is an InvariantViolation); the boundary
/// blocks restitch into permutations, so the result is again a PermWord and
/// decodes to the same graph. Length shrinks by exactly one period.
PermWord remove_cube_middle(const PermWord& pw, const Repetition& cube);

struct NormalizeTrace {
    PermWord result;
    std::vector<Repetition> removed;  ///< cubes removed, in order
};

/// Repeatedly removes the middle copy of the leftmost shortest cube until the
/// word is cube-free. The decoded graph is invariant across every step and
/// the block count never increases.
NormalizeTrace cube_free_normalize_trace(const PermWord& pw);
PermWord cube_free_normalize(const PermWord& pw);

} // namespace rep11
