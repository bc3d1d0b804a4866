#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aperiodic {

// The subshift alphabet. Values double as the byte encoding used for storage,
// so a Word is just a contiguous byte sequence.
enum class Letter : std::uint8_t { a = 0, x = 1, y = 2, z = 3 };

using Word = std::vector<Letter>;

constexpr char to_char(Letter l) {
    constexpr char table[4] = {'a', 'x', 'y', 'z'};
    return table[static_cast<std::uint8_t>(l)];
}

inline Letter letter_from_char(char c) {
    switch (c) {
        case 'a': return Letter::a;
        case 'x': return Letter::x;
        case 'y': return Letter::y;
        case 'z': return Letter::z;
        default:
            throw std::invalid_argument(std::string("not a letter: '") + c + "'");
    }
}

inline std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) s.push_back(to_char(l));
    return s;
}

inline Word word_from_string(std::string_view s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) w.push_back(letter_from_char(c));
    return w;
}

// A finite factor of a two-sided sequence. `offset` is the integer position of
// letters[0]; the origin bar sits between positions 0 and 1.
struct Window {
    Word letters;
    std::int64_t offset = 1;

    std::int64_t first() const { return offset; }
    std::int64_t last() const { return offset + static_cast<std::int64_t>(letters.size()) - 1; }
    bool empty() const { return letters.empty(); }

    bool contains(std::int64_t pos) const { return !empty() && pos >= first() && pos <= last(); }

    Letter at(std::int64_t pos) const {
        if (!contains(pos)) throw std::out_of_range("position outside window");
        return letters[static_cast<std::size_t>(pos - offset)];
    }

    // The window must reach the origin bar for origin-dependent operations.
    bool straddles_origin() const { return !empty() && offset <= 1 && last() >= 0; }

    bool operator==(const Window&) const = default;
};

// Copy of the stretch [from, to] (absolute positions, inclusive).
inline Window subwindow(const Window& w, std::int64_t from, std::int64_t to) {
    if (from > to || !w.contains(from) || !w.contains(to))
        throw std::out_of_range("subwindow outside window");
    auto base = w.letters.begin() + static_cast<std::ptrdiff_t>(from - w.offset);
    return Window{Word(base, base + static_cast<std::ptrdiff_t>(to - from + 1)), from};
}

// Default cap on generated word lengths (letters); override with APERIODIC_CAP.
std::size_t resource_cap();

// Throws std::length_error mentioning the cap when `needed` exceeds it.
void check_cap(std::size_t needed, const char* what);

}  // namespace aperiodic
