#include "rep11/perm.hpp"

#include <algorithm>
#include <unordered_set>

#include "rep11/errors.hpp"
#include "rep11/semantics.hpp"

namespace rep11 {

PermWord PermWord::split(const Word& w) {
    const std::size_t n = w.alphabet().size();
    if (n == 0) throw InputError("split: word has an empty alphabet");
    if (w.size() % n != 0)
        throw InputError("not permutational: length " + std::to_string(w.size()) +
                         " is not a multiple of the alphabet size " + std::to_string(n));
    const std::size_t blocks = w.size() / n;
    for (std::size_t b = 0; b < blocks; ++b) {
        std::unordered_set<std::string_view> seen;
        for (std::size_t t = 0; t < n; ++t) {
            if (!seen.insert(w[b * n + t]).second)
                throw InputError("not permutational: block " + std::to_string(b) +
                                 " repeats letter '" + w[b * n + t] + "'");
        }
        // n distinct letters from an n-letter alphabet form a permutation
    }
    return PermWord(w, blocks);
}

PermWord PermWord::from_blocks(const std::vector<std::vector<std::string>>& blocks,
                               std::vector<std::string> alphabet) {
    std::vector<std::string> letters;
    for (const auto& b : blocks) letters.insert(letters.end(), b.begin(), b.end());
    return split(Word(std::move(letters), std::move(alphabet)));
}

std::span<const std::string> PermWord::block(std::size_t i) const {
    if (i >= blocks_) throw InputError("block index " + std::to_string(i) + " out of range");
    const std::size_t n = block_size();
    return std::span<const std::string>(word_.letters()).subspan(i * n, n);
}

Graph decode(const PermWord& pw) { return decode(pw.word(), pw.word().alphabet()); }

std::vector<Repetition> misaligned_cubes(const PermWord& pw) {
    const std::size_t n = pw.block_size();
    std::vector<Repetition> out;
    for (const auto& rep : find_repetitions(pw.word(), 3))
        if (rep.period % n != 0) out.push_back(rep);
    return out;
}

PermWord remove_duplicate_block(const PermWord& pw, std::size_t i) {
    if (i + 1 >= pw.block_count())
        throw InputError("remove_duplicate_block: no block follows block " + std::to_string(i));
    auto a = pw.block(i);
    auto b = pw.block(i + 1);
    if (!std::equal(a.begin(), a.end(), b.begin(), b.end()))
        throw InputError("remove_duplicate_block: blocks " + std::to_string(i) + " and " +
                         std::to_string(i + 1) + " differ");
    const std::size_t n = pw.block_size();
    std::vector<std::string> letters = pw.word().letters();
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i * n),
                  letters.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    return PermWord::split(Word(std::move(letters), pw.word().alphabet()));
}

namespace {

bool is_cube_at(const Word& w, const Repetition& rep) {
    if (rep.degree != 3 || rep.period == 0) return false;
    if (rep.start + 3 * rep.period > w.size()) return false;
    for (std::size_t t = 0; t < 2 * rep.period; ++t)
        if (w[rep.start + t] != w[rep.start + rep.period + t]) return false;
    return true;
}

} // namespace

PermWord remove_cube_middle(const PermWord& pw, const Repetition& cube) {
    if (!is_cube_at(pw.word(), cube))
        throw InputError("remove_cube_middle: no cube at start=" + std::to_string(cube.start) +
                         " period=" + std::to_string(cube.period));
    const std::size_t n = pw.block_size();
    if (cube.period % n != 0)
        throw InvariantViolation("cube of period " + std::to_string(cube.period) +
                                 " in a permutational word with block size " + std::to_string(n));
    std::vector<std::string> letters = pw.word().letters();
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(cube.start + cube.period),
                  letters.begin() + static_cast<std::ptrdiff_t>(cube.start + 2 * cube.period));
    Word shorter(std::move(letters), pw.word().alphabet());
    try {
        return PermWord::split(shorter);
    } catch (const InputError& e) {
        throw InvariantViolation(std::string("cube removal broke the block structure: ") + e.what());
    }
}

NormalizeTrace cube_free_normalize_trace(const PermWord& pw) {
    NormalizeTrace trace{pw, {}};
    for (;;) {
        auto cubes = find_repetitions(trace.result.word(), 3);
        if (cubes.empty()) break;
        // find_repetitions sorts by (start, period): front() is the leftmost
        // shortest cube.
        trace.result = remove_cube_middle(trace.result, cubes.front());
        trace.removed.push_back(cubes.front());
    }
    return trace;
}

PermWord cube_free_normalize(const PermWord& pw) { return cube_free_normalize_trace(pw).result; }

} // namespace rep11
