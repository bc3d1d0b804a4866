#include "aperiodic/automaton.hpp"

#include <bit>
#include <stdexcept>

namespace aperiodic {

Letter automaton_letter(std::uint64_t n) {
    int state = 0;
    if (n == 0) {
        state = GeneratingAutomaton::transition(state, 0);
    } else {
        const int top = 63 - std::countl_zero(n);
        for (int b = top; b >= 0; --b)
            state = GeneratingAutomaton::transition(state, static_cast<int>((n >> b) & 1u));
    }
    return GeneratingAutomaton::label(state);
}

Word label_block(int n, int start) {
    if (n < 1) throw std::invalid_argument("label_block: n must be >= 1");
    if (n > 40) throw std::invalid_argument("label_block: n too large");
    if (start < 0 || start > 3) throw std::invalid_argument("label_block: start state in 0..3");
    const std::uint64_t total = std::uint64_t{1} << n;
    check_cap(static_cast<std::size_t>(total), "label_block");
    Word out;
    out.reserve(static_cast<std::size_t>(total));
    for (std::uint64_t input = 0; input < total; ++input) {
        int state = start;
        for (int b = n - 1; b >= 0; --b)
            state = GeneratingAutomaton::transition(state, static_cast<int>((input >> b) & 1u));
        out.push_back(GeneratingAutomaton::label(state));
    }
    return out;
}

}  // namespace aperiodic
