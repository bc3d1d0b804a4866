#include "aperiodic/words.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <stdexcept>

#include "aperiodic/suffix_array.hpp"

namespace aperiodic {

std::size_t resource_cap() {
    static const std::size_t cap = [] {
        if (const char* e = std::getenv("APERIODIC_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(e, &end, 10);
            if (end != e && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return std::size_t{1} << 26;
    }();
    return cap;
}

void check_cap(std::size_t needed, const char* what) {
    if (needed > resource_cap())
        throw std::length_error(std::string(what) + ": needs " + std::to_string(needed) +
                                " letters, over the cap of " + std::to_string(resource_cap()) +
                                " (set APERIODIC_CAP to raise)");
}

const SubstitutionRule& tau() {
    static const SubstitutionRule r{{word_from_string("axa"), word_from_string("y"),
                                     word_from_string("z"), word_from_string("x")}};
    return r;
}

const SubstitutionRule& zeta() {
    static const SubstitutionRule r{{word_from_string("ax"), word_from_string("ay"),
                                     word_from_string("az"), word_from_string("ax")}};
    return r;
}

Word apply_substitution(const SubstitutionRule& rule, const Word& w) {
    std::size_t total = 0;
    for (Letter l : w) total += rule(l).size();
    check_cap(total, "apply_substitution");
    Word out;
    out.reserve(total);
    for (Letter l : w) {
        const Word& img = rule(l);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Letter tau_n_x(std::int64_t n) {
    switch (((n % 3) + 3) % 3) {
        case 0: return Letter::x;
        case 1: return Letter::y;
        default: return Letter::z;
    }
}

Word p_n(int n) {
    if (n < 0) throw std::invalid_argument("p_n: n must be >= 0");
    const auto len = n >= 62 ? ULLONG_MAX : (1ull << (n + 1)) - 1;
    check_cap(static_cast<std::size_t>(len), "p_n");
    Word w{Letter::a};
    w.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < n; ++k) {
        const std::size_t old = w.size();
        w.push_back(tau_n_x(k));
        for (std::size_t i = 0; i < old; ++i) w.push_back(w[i]);
    }
    return w;
}

Word eta_prefix(std::size_t L) {
    check_cap(L, "eta_prefix");
    Word w;
    if (L == 0) return w;
    w.push_back(Letter::a);
    for (int k = 0; w.size() < L; ++k) {
        const std::size_t old = w.size();
        w.push_back(tau_n_x(k));
        for (std::size_t i = 0; i < old && w.size() < L; ++i) w.push_back(w[i]);
    }
    return w;
}

namespace {

// Smallest n with 2^(n+1)-1 >= L.
int level_for_length(std::size_t L) {
    int n = 0;
    while (((std::size_t{1} << (n + 1)) - 1) < L) ++n;
    return n;
}

// Scan text prescribed for factors of length L: p(n+3) with n minimal.
Word scan_text(std::size_t L) { return p_n(level_for_length(L) + 3); }

}  // namespace

std::vector<Word> enumerate_subwords(std::size_t L) {
    if (L < 1) throw std::invalid_argument("enumerate_subwords: L must be >= 1");
    const Word text = scan_text(L);
    const auto sa = SuffixArray::build(text);
    const std::int64_t T = static_cast<std::int64_t>(text.size());
    std::vector<Word> out;
    // Walk suffixes in rank order; a new distinct factor starts whenever the
    // common prefix with the previously accepted suffix drops below L.
    std::int32_t since_accept = INT32_MAX;
    bool any = false;
    for (std::int64_t r = 0; r < T; ++r) {
        if (r > 0) since_accept = std::min(since_accept, sa.lcp[static_cast<std::size_t>(r)]);
        const std::int64_t start = sa.sa[static_cast<std::size_t>(r)];
        if (T - start < static_cast<std::int64_t>(L)) continue;
        if (!any || since_accept < static_cast<std::int32_t>(L))
            out.emplace_back(text.begin() + start, text.begin() + start + static_cast<std::int64_t>(L));
        any = true;
        since_accept = INT32_MAX;
    }
    return out;
}

std::size_t complexity(std::size_t L) {
    if (L < 1) throw std::invalid_argument("complexity: L must be >= 1");
    const Word text = scan_text(L);
    const auto sa = SuffixArray::build(text);
    const std::size_t T = text.size();
    std::size_t dup = 0;
    for (std::int32_t v : sa.lcp)
        if (v >= static_cast<std::int32_t>(L)) ++dup;
    return (T - L + 1) - dup;
}

std::vector<std::size_t> complexity_range(std::size_t max_L) {
    if (max_L < 1) throw std::invalid_argument("complexity_range: max_L must be >= 1");
    // One text sized for the largest length serves all smaller ones: it is a
    // factor of the fixed point extending each minimal text, and the minimal
    // text already contains every factor, so the counts coincide.
    const Word text = scan_text(max_L);
    const auto sa = SuffixArray::build(text);
    const std::size_t T = text.size();
    // ge[L] = #{ranks with lcp >= L}, via histogram and suffix sums
    std::vector<std::size_t> ge(max_L + 2, 0);
    for (std::int32_t v : sa.lcp) {
        if (v < 1) continue;
        ++ge[std::min<std::size_t>(static_cast<std::size_t>(v), max_L + 1)];
    }
    for (std::size_t L = max_L; L >= 1; --L) ge[L] += ge[L + 1];
    std::vector<std::size_t> out(max_L);
    for (std::size_t L = 1; L <= max_L; ++L) out[L - 1] = (T - L + 1) - ge[L];
    return out;
}

std::size_t complexity_closed_form(std::size_t L) {
    if (L < 1) throw std::invalid_argument("complexity_closed_form: L must be >= 1");
    if (L <= 3) return 2 + 2 * L;  // 4, 6, 8
    int n = 0;
    while ((std::size_t{1} << (n + 1)) <= L) ++n;  // 2^n <= L < 2^(n+1), n >= 2
    const std::size_t k = L - (std::size_t{1} << n);
    if (k < (std::size_t{1} << (n - 1)))
        return (std::size_t{1} << (n + 1)) + (std::size_t{1} << (n - 1)) + 3 * k;
    return (std::size_t{1} << (n + 1)) + (std::size_t{1} << n) + 2 * k;
}

std::vector<RightSpecialWord> right_special_words(std::size_t L) {
    if (L < 1) throw std::invalid_argument("right_special_words: L must be >= 1");
    const std::vector<Word> next = enumerate_subwords(L + 1);
    std::vector<RightSpecialWord> out;
    std::size_t i = 0;
    while (i < next.size()) {
        std::size_t j = i + 1;
        while (j < next.size() &&
               std::equal(next[i].begin(), next[i].end() - 1, next[j].begin()))
            ++j;
        if (j - i >= 2) {
            RightSpecialWord rs;
            rs.word.assign(next[i].begin(), next[i].end() - 1);
            for (std::size_t k = i; k < j; ++k) rs.extensions.push_back(next[k].back());
            out.push_back(std::move(rs));
        }
        i = j;
    }
    return out;
}

IndexReport max_index_scan(std::size_t scan_length) {
    if (scan_length < 8) throw std::invalid_argument("max_index_scan: scan_length must be >= 8");
    const Word text = eta_prefix(scan_length);
    const LceIndex lce(text);
    const std::int64_t T = static_cast<std::int64_t>(text.size());

    IndexReport best;
    best.index = Rat64(0);
    best.position = -1;

    // Anchored periodic-run detection: for each candidate period q, every run
    // of length >= 2q covers some anchor pair (i-q, i) with i a multiple of q;
    // the forward/backward common extensions around the pair recover the full
    // run extent M, and M/q is the exact index of that occurrence.
    for (std::int64_t q = 1; 2 * q <= T; ++q) {
        for (std::int64_t i = q; i < T; i += q) {
            const std::int64_t j = i - q;
            const std::int64_t f = lce.forward(i, j);
            const std::int64_t b = (j > 0) ? lce.backward(i - 1, j - 1) : 0;
            const std::int64_t M = f + b + q;
            if (M < 2 * q) continue;
            const Rat64 idx(M, q);
            if (idx > best.index) {
                best.index = idx;
                best.position = j - b;
                best.word.assign(text.begin() + best.position, text.begin() + best.position + q);
            }
        }
    }
    if (best.index >= Rat64(4))
        throw std::runtime_error("max_index_scan: occurrence of index >= 4 found at position " +
                                 std::to_string(best.position) +
                                 "; the language has no fourth powers, so this is a bug");
    return best;
}

PartitionClass n_partition(const Window& w, int n) {
    if (n < 0) throw std::invalid_argument("n_partition: n must be >= 0");
    if (n > 61) throw std::invalid_argument("n_partition: n too large");
    const std::uint64_t P = std::uint64_t{1} << (n + 1);
    if (w.letters.size() < 3 * P) throw std::runtime_error("window too short");
    const Word pn = p_n(n);

    std::vector<std::uint64_t> good;
    for (std::uint64_t r = 0; r < P; ++r) {
        bool ok = true;
        for (std::int64_t pos = w.first(); ok && pos <= w.last(); ++pos) {
            std::int64_t m = (pos - static_cast<std::int64_t>(r)) % static_cast<std::int64_t>(P);
            if (m < 0) m += static_cast<std::int64_t>(P);
            const Letter l = w.letters[static_cast<std::size_t>(pos - w.first())];
            if (m == 0)
                ok = (l != Letter::a);  // separator slot holds x, y or z
            else
                ok = (l == pn[static_cast<std::size_t>(m - 1)]);
        }
        if (ok) good.push_back(r);
    }
    if (good.size() != 1)
        throw std::runtime_error("no valid partition");
    return PartitionClass{P, good[0]};
}

Word reflect(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

Window reflect_origin(Window w) {
    // position i goes to 1 - i, so the old last letter lands at 1 - last
    const std::int64_t new_offset = 1 - w.last();
    std::reverse(w.letters.begin(), w.letters.end());
    w.offset = new_offset;
    return w;
}

Window special_word_window(Letter s, std::int64_t radius) {
    if (s == Letter::a)
        throw std::invalid_argument("special_word_window: s must be one of x, y, z");
    if (radius < 1) throw std::invalid_argument("special_word_window: radius must be >= 1");
    const int n = level_for_length(static_cast<std::size_t>(radius) + 1);
    const Word pn = p_n(n);
    const std::int64_t P = static_cast<std::int64_t>(pn.size());
    Word letters;
    letters.reserve(static_cast<std::size_t>(2 * P + 1));
    letters.insert(letters.end(), pn.begin(), pn.end());
    letters.push_back(s);
    letters.insert(letters.end(), pn.begin(), pn.end());
    const Window full{std::move(letters), -P};  // s sits at position 0
    return subwindow(full, -radius, radius + 1);
}

std::map<Letter, Rat64> letter_frequency(std::size_t L) {
    if (L < 1) throw std::invalid_argument("letter_frequency: L must be >= 1");
    const Word text = eta_prefix(L);
    std::array<std::int64_t, 4> counts{0, 0, 0, 0};
    for (Letter l : text) ++counts[static_cast<std::uint8_t>(l)];
    std::map<Letter, Rat64> out;
    for (int c = 0; c < 4; ++c)
        if (counts[c] > 0)
            out[static_cast<Letter>(c)] = Rat64(counts[c], static_cast<std::int64_t>(L));
    return out;
}

std::vector<RepetitivityRow> repetitivity_table(std::size_t max_L, std::size_t text_length) {
    if (max_L < 2 || (max_L & (max_L - 1)) != 0)
        throw std::invalid_argument("repetitivity_table: max_L must be a power of two >= 2");
    const Word text = eta_prefix(text_length);
    const auto sa = SuffixArray::build(text);
    const std::int64_t T = static_cast<std::int64_t>(text.size());

    std::vector<RepetitivityRow> rows;
    Rat64 cumulative(0);
    for (std::size_t L = 2; L <= max_L; L *= 2) {
        // Group suffixes sharing their first L letters; each group is the
        // occurrence list of one distinct factor. The minimal window length
        // that necessarily contains the factor is governed by the largest
        // occurrence gap (and the two text edges).
        std::int64_t worst = 0;
        std::vector<std::int64_t> occ;
        std::int32_t since_accept = INT32_MAX;
        bool open = false;
        auto close_group = [&]() {
            if (!open) return;
            std::sort(occ.begin(), occ.end());
            std::int64_t need = occ.front() + static_cast<std::int64_t>(L);
            for (std::size_t t = 1; t < occ.size(); ++t)
                need = std::max(need, occ[t] - occ[t - 1] + static_cast<std::int64_t>(L) - 1);
            need = std::max(need, T - occ.back());
            worst = std::max(worst, need);
            occ.clear();
        };
        for (std::int64_t r = 0; r < T; ++r) {
            if (r > 0) since_accept = std::min(since_accept, sa.lcp[static_cast<std::size_t>(r)]);
            const std::int64_t start = sa.sa[static_cast<std::size_t>(r)];
            if (T - start < static_cast<std::int64_t>(L)) continue;
            if (open && since_accept < static_cast<std::int32_t>(L)) close_group();
            occ.push_back(start);
            open = true;
            since_accept = INT32_MAX;
        }
        close_group();

        RepetitivityRow row;
        row.L = L;
        row.window_needed = worst;
        row.per_length = Rat64(worst, static_cast<std::int64_t>(L));
        if (cumulative < row.per_length) cumulative = row.per_length;
        row.cumulative = cumulative;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace aperiodic
