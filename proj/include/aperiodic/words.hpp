#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "aperiodic/letters.hpp"
#include "aperiodic/rational.hpp"

namespace aperiodic {

// Letter-to-word morphism, extended to words by concatenation.
struct SubstitutionRule {
    std::array<Word, 4> image;  // indexed by letter code

    const Word& operator()(Letter l) const { return image[static_cast<std::uint8_t>(l)]; }
};

// The core substitution a->axa, x->y, y->z, z->x.
const SubstitutionRule& tau();
// The injective recoding a->ax, x->ay, y->az, z->ax.
const SubstitutionRule& zeta();

Word apply_substitution(const SubstitutionRule& rule, const Word& w);

// tau^n(x): cycles x, y, z with the exponent mod 3.
Letter tau_n_x(std::int64_t n);

// p(0) = "a", p(n+1) = p(n) + tau^n(x) + p(n); length 2^(n+1)-1, palindromic.
Word p_n(int n);

// First L letters of the substitution fixed point.
Word eta_prefix(std::size_t L);

// All distinct length-L factors of the subshift, lexicographically sorted.
// Enumerates by sliding over p(n+3) for the smallest n with 2^(n+1)-1 >= L,
// which is guaranteed to contain every factor of that length.
std::vector<Word> enumerate_subwords(std::size_t L);

std::size_t complexity(std::size_t L);

// complexity(L) for every L in 1..max_L, from a single scan text.
std::vector<std::size_t> complexity_range(std::size_t max_L);

// Closed form: 4, 6, 8 for L <= 3; for L = 2^n + k (n >= 2, 0 <= k < 2^n):
// 2^(n+1) + 2^(n-1) + 3k when k < 2^(n-1), else 2^(n+1) + 2^n + 2k.
std::size_t complexity_closed_form(std::size_t L);

struct RightSpecialWord {
    Word word;
    std::vector<Letter> extensions;  // sorted; at least two entries
};

// Length-L factors with two or more one-letter right extensions in the language.
std::vector<RightSpecialWord> right_special_words(std::size_t L);

struct IndexReport {
    Word word;              // period block w of the best occurrence w^N v
    Rat64 index;            // N + |v|/|w|; 0 with empty word when nothing qualifies
    std::int64_t position;  // 0-based start of the occurrence in the scanned prefix, -1 if none

    bool found() const { return !word.empty(); }
};

// Maximal fractional-power index over all occurrences w^N v (N >= 2) in
// eta_prefix(scan_length). Exact rational arithmetic; throws if an index >= 4
// turns up, since the language provably contains no fourth power.
IndexReport max_index_scan(std::size_t scan_length);

struct PartitionClass {
    std::uint64_t modulus;  // 2^(n+1)
    std::uint64_t residue;  // in [0, modulus)
};

// The unique residue class mod 2^(n+1) of separator positions for the
// n-decomposition visible in the window. Positions are absolute (offset-aware).
// Requires length >= 3 * 2^(n+1).
PartitionClass n_partition(const Window& w, int n);

// Plain reversal.
Word reflect(Word w);

// The involution position i -> 1 - i (reversal plus offset update).
Window reflect_origin(Window w);

// Factor of the two-sided special word ...p(n) s | p(n)... covering positions
// [-radius, radius+1], with the distinguished letter s at position 0.
Window special_word_window(Letter s, std::int64_t radius);

// Empirical letter counts over eta_prefix(L), as exact fractions of L.
std::map<Letter, Rat64> letter_frequency(std::size_t L);

struct RepetitivityRow {
    std::size_t L;                // factor length probed
    std::int64_t window_needed;   // minimal M: every length-M factor of the text
                                  // contains every length-L factor
    Rat64 per_length;             // window_needed / L
    Rat64 cumulative;             // max of per_length over all probed L' <= L
};

// Linear-repetitivity witness table over eta_prefix(text_length) for
// L = 2, 4, 8, ..., max_L (powers of two).
std::vector<RepetitivityRow> repetitivity_table(std::size_t max_L, std::size_t text_length);

}  // namespace aperiodic
