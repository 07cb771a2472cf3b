#ifndef THUELAB_WORDS_HPP
#define THUELAB_WORDS_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "thuelab/errors.hpp"

namespace thuelab::words {

using Symbol = int;

/// A finite sequence of symbols, used for colour sequences along paths.
using Word = std::vector<Symbol>;

/// Split positions of a word of length m, as symbol counts before each cut.
/// Valid cuts are strictly increasing values in 1..m-1, so every segment
/// between consecutive cuts (and before the first / after the last) is
/// nonempty.
using CutPoints = std::vector<std::size_t>;

/// A block w[start..start+2n) whose first half equals its second half.
struct Repetition {
    std::size_t start;
    std::size_t half_length;

    bool operator==(const Repetition&) const = default;
};

/// Finds the first repeated block, ordered by start position and then by
/// half length. Returns nullopt if the word is nonrepetitive.
///
/// Works shift by shift: a square with half length n starting at i exists
/// iff w[j] == w[j+n] for all j in [i, i+n). Runs of such agreements give
/// all squares for that shift in O(L) time, O(L^2) overall.
inline std::optional<Repetition> find_repetition(const Word& w) {
    const std::size_t len = w.size();
    std::optional<Repetition> best;
    for (std::size_t n = 1; 2 * n <= len; ++n) {
        std::size_t run = 0;
        for (std::size_t j = 0; j + n < len; ++j) {
            if (w[j] == w[j + n]) {
                ++run;
                if (run >= n) {
                    const std::size_t start = j + 1 - n;
                    if (!best || start < best->start) best = Repetition{start, n};
                    break;  // earliest start for this shift found
                }
            } else {
                run = 0;
            }
        }
    }
    return best;
}

inline bool is_nonrepetitive(const Word& w) { return !find_repetition(w).has_value(); }

namespace detail {

// 0 -> 012, 1 -> 02, 2 -> 1. Iterating from "0" converges to a squarefree
// infinite word over three symbols; every prefix is squarefree.
inline Word squarefree_morphism(const Word& w) {
    Word out;
    out.reserve(2 * w.size());
    for (Symbol s : w) {
        switch (s) {
            case 0: out.insert(out.end(), {0, 1, 2}); break;
            case 1: out.insert(out.end(), {0, 2}); break;
            default: out.push_back(1); break;
        }
    }
    return out;
}

inline std::set<Symbol> alphabet(const Word& w) { return {w.begin(), w.end()}; }

inline bool alphabets_disjoint(const std::set<Symbol>& a, const std::set<Symbol>& b) {
    for (Symbol s : a) {
        if (b.count(s)) return false;
    }
    return true;
}

inline void check_cuts(const CutPoints& cuts, std::size_t word_length) {
    std::size_t prev = 0;
    for (std::size_t c : cuts) {
        if (c <= prev || c >= word_length) {
            throw BadCuts("cut points must be strictly increasing interior positions");
        }
        prev = c;
    }
}

// S = B^0 A[0,c1) B^1 A[c1,c2) ... B^r A[cr,m) B^{r+1}.
inline Word assemble(const Word& a, const CutPoints& cuts, const std::vector<Word>& blocks) {
    Word s;
    std::size_t total = a.size();
    for (const Word& b : blocks) total += b.size();
    s.reserve(total);
    std::size_t from = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        s.insert(s.end(), blocks[i].begin(), blocks[i].end());
        if (i < cuts.size() + 1) {
            const std::size_t to = (i < cuts.size()) ? cuts[i] : a.size();
            s.insert(s.end(), a.begin() + static_cast<std::ptrdiff_t>(from),
                     a.begin() + static_cast<std::ptrdiff_t>(to));
            from = to;
        }
    }
    return s;
}

}  // namespace detail

/// Deterministic squarefree word of the requested length over {0, 1, 2}.
inline Word thue_word(std::size_t length) {
    if (length == 0) return {};
    Word w{0};
    while (w.size() < length) w = detail::squarefree_morphism(w);
    w.resize(length);
    return w;
}

/// Interrupts a nonrepetitive word `a` with nonrepetitive blocks over a
/// disjoint alphabet: S = B^0 A_1 B^1 A_2 ... B^r A_{r+1} B^{r+1}, where the
/// A_i are the segments of `a` split at `cuts`. The first and last block may
/// be empty; interior blocks must be nonempty. The result is nonrepetitive.
inline Word interleave(const Word& a, const CutPoints& cuts, const std::vector<Word>& blocks) {
    if (a.empty()) throw BadParameter("interleave: word to interrupt must be nonempty");
    if (blocks.size() != cuts.size() + 2) {
        throw BadParameter("interleave: need exactly |cuts|+2 blocks");
    }
    detail::check_cuts(cuts, a.size());
    for (std::size_t i = 1; i + 1 < blocks.size(); ++i) {
        if (blocks[i].empty()) throw BadParameter("interleave: interior blocks must be nonempty");
    }
    if (!is_nonrepetitive(a)) throw NotNonrepetitive("interleave: word to interrupt has a repetition");
    std::set<Symbol> block_alphabet;
    for (const Word& b : blocks) {
        if (!is_nonrepetitive(b)) throw NotNonrepetitive("interleave: interrupting block has a repetition");
        block_alphabet.insert(b.begin(), b.end());
    }
    if (!detail::alphabets_disjoint(detail::alphabet(a), block_alphabet)) {
        throw AlphabetOverlap("interleave: block alphabet must be disjoint from the word's");
    }
    Word s = detail::assemble(a, cuts, blocks);
    assert(is_nonrepetitive(s));
    return s;
}

/// Interrupts a rainbow word with single symbols outside its alphabet:
/// S = b_0 A_1 b_1 A_2 ... b_r A_{r+1} b_{r+1}. The singles need not be
/// distinct from each other. The result is nonrepetitive.
inline Word rainbow_interrupt(const Word& a, const CutPoints& cuts,
                              const std::vector<Symbol>& singles) {
    if (a.empty()) throw BadParameter("rainbow_interrupt: word to interrupt must be nonempty");
    if (singles.size() != cuts.size() + 2) {
        throw BadParameter("rainbow_interrupt: need exactly |cuts|+2 singles");
    }
    detail::check_cuts(cuts, a.size());
    const std::set<Symbol> a_alphabet = detail::alphabet(a);
    if (a_alphabet.size() != a.size()) {
        throw NotRainbow("rainbow_interrupt: word symbols must be pairwise distinct");
    }
    for (Symbol b : singles) {
        if (a_alphabet.count(b)) {
            throw AlphabetOverlap("rainbow_interrupt: singles must avoid the word's alphabet");
        }
    }
    std::vector<Word> blocks;
    blocks.reserve(singles.size());
    for (Symbol b : singles) blocks.push_back(Word{b});
    Word s = detail::assemble(a, cuts, blocks);
    assert(is_nonrepetitive(s));
    return s;
}

}  // namespace thuelab::words

#endif
