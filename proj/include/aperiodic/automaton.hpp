#pragma once

#include <cstdint>

#include "aperiodic/letters.hpp"

namespace aperiodic {

// Four-state automaton over input bits {0,1} whose output labels, read along
// binary expansions, reproduce the substitution fixed point. States 0..3 are
// labeled a, x, y, z; input 0 sends every state to state 0, input 1 cycles
// 1 -> 2 -> 3 -> 1 and sends 0 into the cycle at 1.
struct GeneratingAutomaton {
    static constexpr int transition(int state, int bit) {
        return bit == 0 ? 0 : (state == 3 ? 1 : state + 1);
    }
    static constexpr Letter label(int state) { return static_cast<Letter>(state); }
};

// Label of the state reached from state 0 on the most-significant-bit-first
// binary expansion of n; n = 0 reads the single digit 0. Equals the letter of
// the fixed point at 0-based position n.
Letter automaton_letter(std::uint64_t n);

// End-state labels over all length-n binary inputs in lexicographic order,
// starting from state `start`; a word of length 2^n.
Word label_block(int n, int start);

}  // namespace aperiodic
