#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <set>

#include "aperiodic/words.hpp"

using namespace aperiodic;

static bool is_palindrome(const Word& w) {
    for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
        if (w[i] != w[j - 1]) return false;
    return true;
}

TEST_CASE("palindromic blocks p(n)") {
    CHECK(to_string(p_n(0)) == "a");
    CHECK(to_string(p_n(1)) == "axa");
    CHECK(to_string(p_n(2)) == "axayaxa");
    CHECK(to_string(p_n(3)) == "axayaxazaxayaxa");
    for (int n = 0; n <= 14; ++n) {
        const Word p = p_n(n);
        CHECK(p.size() == (std::size_t{1} << (n + 1)) - 1);
        CHECK(is_palindrome(p));
    }
    // nesting p(n+1) = p(n) . tau^n(x) . p(n)
    for (int n = 0; n <= 12; ++n) {
        Word expect = p_n(n);
        expect.push_back(tau_n_x(n));
        const Word& pn = p_n(n);
        expect.insert(expect.end(), pn.begin(), pn.end());
        CHECK(expect == p_n(n + 1));
    }
    CHECK_THROWS_AS(p_n(-1), std::invalid_argument);
    CHECK_THROWS_AS(p_n(26), std::length_error);  // 2^27-1 letters > default cap
}

TEST_CASE("fixed point prefix") {
    CHECK(to_string(eta_prefix(20)) == "axayaxazaxayaxaxaxay");
    const Word big = eta_prefix(4096);
    const Word small = eta_prefix(500);
    CHECK(Word(big.begin(), big.begin() + 500) == small);
    // eta is fixed by tau
    const Word sub = apply_substitution(tau(), eta_prefix(2048));
    CHECK(sub.size() == 4096);
    CHECK(sub == big);
    // a in every even position, never in an odd one
    const Word e = eta_prefix(std::size_t{1} << 16);
    for (std::size_t i = 0; i < e.size(); ++i)
        CHECK((e[i] == Letter::a) == (i % 2 == 0));
}

TEST_CASE("one-sided substitution matches the two-sided one") {
    // zeta^n(a) == tau^{n-1}(a) tau^{n-1}(x)
    Word z{Letter::a};
    Word ta{Letter::a}, tx{Letter::x};
    for (int n = 1; n <= 14; ++n) {
        z = apply_substitution(zeta(), z);
        Word expect = ta;
        expect.insert(expect.end(), tx.begin(), tx.end());
        CHECK(z == expect);
        ta = apply_substitution(tau(), ta);
        tx = apply_substitution(tau(), tx);
    }
}

TEST_CASE("subword complexity") {
    const std::size_t spot[] = {0, 4, 6, 8, 10, 13, 16, 18, 20};
    for (std::size_t L = 1; L <= 8; ++L) {
        CHECK(complexity(L) == spot[L]);
        CHECK(complexity_closed_form(L) == spot[L]);
    }
    CHECK(complexity_closed_form(12) == 32);
    CHECK(complexity_closed_form(16) == 40);
    for (int n = 2; n <= 10; ++n) {
        const std::size_t L = (std::size_t{1} << (n + 1)) - 1;
        CHECK(complexity_closed_form(L) ==
              (std::size_t{1} << (n + 2)) + (std::size_t{1} << n) - 2);
    }
    const auto table = complexity_range(512);
    for (std::size_t L = 1; L <= 512; ++L) {
        CHECK(table[L - 1] == complexity_closed_form(L));
        if (L > 1) {
            const std::size_t d = table[L - 1] - table[L - 2];
            CHECK(d >= 2);
            CHECK(d <= 3);
        }
    }
    CHECK(complexity(100) == complexity_closed_form(100));

    const auto len2 = enumerate_subwords(2);
    std::set<std::string> got;
    for (const Word& w : len2) got.insert(to_string(w));
    CHECK(got == std::set<std::string>{"ax", "ay", "az", "xa", "ya", "za"});
    // lexicographic order
    for (std::size_t i = 1; i < len2.size(); ++i) CHECK(len2[i - 1] < len2[i]);
}

TEST_CASE("right special factors") {
    const auto l1 = right_special_words(1);
    REQUIRE(l1.size() == 1);
    CHECK(to_string(l1[0].word) == "a");
    CHECK(l1[0].extensions == Word{Letter::x, Letter::y, Letter::z});

    const auto l2 = right_special_words(2);
    REQUIRE(l2.size() == 1);
    CHECK(to_string(l2[0].word) == "xa");
    CHECK(l2[0].extensions.size() == 3);

    const auto l4 = right_special_words(4);
    REQUIRE(l4.size() == 2);
    CHECK(to_string(l4[0].word) == "xaxa");
    CHECK(l4[0].extensions == Word{Letter::x, Letter::y});
    CHECK(to_string(l4[1].word) == "yaxa");
    CHECK(l4[1].extensions == Word{Letter::x, Letter::y, Letter::z});

    CHECK(right_special_words(6).size() == 1);

    // branching degrees account for the complexity increment
    for (std::size_t L : {3, 5, 9, 17, 33}) {
        std::size_t inc = 0;
        for (const auto& rs : right_special_words(L)) inc += rs.extensions.size() - 1;
        CHECK(inc == complexity(L + 1) - complexity(L));
    }
}

TEST_CASE("maximal fractional-power index") {
    CHECK_THROWS_AS(max_index_scan(7), std::invalid_argument);
    CHECK_FALSE(max_index_scan(8).found());

    auto rep = max_index_scan(18);
    REQUIRE(rep.found());
    CHECK(rep.index == Rat64(3, 1));
    CHECK(to_string(rep.word) == "ax");
    CHECK(rep.position == 12);

    for (std::size_t s : {19, 31}) {
        rep = max_index_scan(s);
        CHECK(rep.index == Rat64(7, 2));
        CHECK(rep.position == 12);
    }
    for (std::size_t s : {80, 128}) {
        rep = max_index_scan(s);
        CHECK(rep.index == Rat64(31, 8));
        CHECK(to_string(rep.word) == "axayaxaz");
        CHECK(rep.position == 48);
    }
    rep = max_index_scan(300);
    CHECK(rep.index == Rat64(63, 16));
    CHECK(rep.position == 96);
    rep = max_index_scan(512);
    CHECK(rep.index == Rat64(127, 32));
    CHECK(rep.word.size() == 32);
    CHECK(rep.position == 192);
}

TEST_CASE("block decomposition residues") {
    // natural embedding: positions 1..24, level 1
    Window w{eta_prefix(24), 1};
    auto pc = n_partition(w, 1);
    CHECK(pc.modulus == 4);
    CHECK(pc.residue == 0);
    // same letters seen from offset 0
    w.offset = 0;
    pc = n_partition(w, 1);
    CHECK(pc.residue == 3);

    // any long enough sub-window of the natural embedding gives the same
    // residue per level
    const Word e = eta_prefix(5000);
    std::mt19937_64 eng(99);
    for (int n = 0; n <= 4; ++n) {
        const std::int64_t P = std::int64_t{1} << (n + 1);
        const std::int64_t len = 3 * P + 17;
        const std::int64_t base =
            n_partition(Window{eta_prefix(static_cast<std::size_t>(3 * P)), 1}, n).residue;
        for (int trial = 0; trial < 30; ++trial) {
            const auto start = static_cast<std::int64_t>(eng() % 4000);
            Window sub{Word(e.begin() + start, e.begin() + start + len), start + 1};
            const auto got = n_partition(sub, n);
            CHECK(got.modulus == P);
            CHECK(got.residue == base);
        }
    }

    CHECK_THROWS_WITH(n_partition(Window{eta_prefix(11), 1}, 1), "window too short");
    Window junk{Word(20, Letter::a), 1};
    CHECK_THROWS_WITH(n_partition(junk, 1), "no valid partition");
}

TEST_CASE("origin reflection") {
    Window w = special_word_window(Letter::x, 1);
    CHECK(w.offset == -1);
    CHECK(to_string(w.letters) == "axax");
    const Window r = reflect_origin(w);
    CHECK(r.offset == 1 - w.last());
    CHECK(reflect_origin(r) == w);

    std::mt19937_64 eng(5);
    const Word e = eta_prefix(2000);
    for (int trial = 0; trial < 50; ++trial) {
        const auto start = static_cast<std::size_t>(eng() % 1900);
        const auto len = 1 + eng() % 80;
        Window win{Word(e.begin() + start, e.begin() + start + len),
                   static_cast<std::int64_t>(eng() % 200) - 100};
        const Window back = reflect_origin(reflect_origin(win));
        CHECK(back == win);
    }
}

TEST_CASE("two-sided special-word windows") {
    for (Letter s : {Letter::x, Letter::y, Letter::z}) {
        for (std::int64_t radius : {1, 2, 3, 7, 20, 100}) {
            const Window w = special_word_window(s, radius);
            CHECK(w.first() == -radius);
            CHECK(w.last() == radius + 1);
            CHECK(w.at(0) == s);
            for (std::int64_t i = 1; i <= radius; ++i) CHECK(w.at(-i) == w.at(i));
        }
    }
    CHECK_THROWS_AS(special_word_window(Letter::a, 3), std::invalid_argument);
}

TEST_CASE("letter frequencies") {
    const auto f7 = letter_frequency(7);
    REQUIRE(f7.size() == 3);
    CHECK(f7.at(Letter::a) == Rat64(4, 7));
    CHECK(f7.at(Letter::x) == Rat64(2, 7));
    CHECK(f7.at(Letter::y) == Rat64(1, 7));
    for (std::size_t L : {1, 2, 3, 10, 63, 64, 200}) {
        const auto f = letter_frequency(L);
        Rat64 total(0, 1);
        for (const auto& [l, v] : f) {
            CHECK(v.num > 0);
            total = total + v;
        }
        CHECK(total == Rat64(1, 1));
        CHECK(f.at(Letter::a) == Rat64(static_cast<std::int64_t>((L + 1) / 2),
                                       static_cast<std::int64_t>(L)));
    }
}

TEST_CASE("repetitivity constants") {
    const auto rows = repetitivity_table(256, std::size_t{1} << 18);
    REQUIRE(rows.size() == 8);
    const std::int64_t nums[] = {17, 33, 67, 135, 271, 543, 1087, 2175};
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(rows[i].L == (std::size_t{2} << i));
        CHECK(rows[i].window_needed == static_cast<std::size_t>(nums[i]));
        CHECK(rows[i].per_length ==
              Rat64(nums[i], static_cast<std::int64_t>(rows[i].L)));
        CHECK(rows[i].cumulative == Rat64(17, 2));
        CHECK(rows[i].cumulative < Rat64(64, 1));
    }
    CHECK_THROWS_AS(repetitivity_table(12, 4096), std::invalid_argument);
}

TEST_CASE("resource guard") {
    CHECK(resource_cap() >= (std::size_t{1} << 20));
    CHECK_THROWS_AS(eta_prefix(resource_cap() + 1), std::length_error);
}
