#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "aperiodic/spectra.hpp"
#include "aperiodic/words.hpp"
#include "oracle_dense.hpp"

using namespace aperiodic;

namespace {
const WeightParams ANISO{1.0, 1.0, 2.0, 3.0};
const WeightParams ISO{0.25, 0.25, 0.25, 0.25};

JacobiMatrix random_matrix(std::mt19937_64& eng, std::size_t n) {
    auto uni = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
    };
    JacobiMatrix m;
    m.diagonal.resize(n);
    m.off_diagonal.resize(n - 1);
    for (auto& d : m.diagonal) d = uni(-3, 3);
    for (auto& e : m.off_diagonal) e = uni(-3, 3);
    return m;
}
}  // namespace

TEST_CASE("two-site matrices have eigenvalues D +- |t|") {
    const auto m = jacobi_from_word(word_from_string("a"), ANISO);
    const auto hull = gershgorin_hull(m);
    CHECK(hull.first == 5.0);
    CHECK(hull.second == 7.0);
    const auto ev = eigenvalues(m);
    REQUIRE(ev.size() == 2);
    CHECK(std::abs(ev[0] - 5.0) < 1e-9);
    CHECK(std::abs(ev[1] - 7.0) < 1e-9);
}

TEST_CASE("constant three-site matrix") {
    JacobiMatrix m;
    m.diagonal = {2, 2, 2};
    m.off_diagonal = {1, 1};
    const auto ev = eigenvalues(m);
    REQUIRE(ev.size() == 3);
    const double r = std::sqrt(2.0);
    CHECK(std::abs(ev[0] - (2 - r)) < 1e-9);
    CHECK(std::abs(ev[1] - 2.0) < 1e-9);
    CHECK(std::abs(ev[2] - (2 + r)) < 1e-9);
}

TEST_CASE("agreement with a dense characteristic-polynomial solver") {
    std::mt19937_64 eng(777);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + eng() % 7;  // up to 8
        const JacobiMatrix m = random_matrix(eng, n);
        const auto got = eigenvalues(m);
        const auto want = oracle::dense_eigenvalues(m);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
    }
}

TEST_CASE("counting function is consistent with the solved spectrum") {
    std::mt19937_64 eng(123);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + eng() % 14;
        const JacobiMatrix m = random_matrix(eng, n);
        const auto ev = eigenvalues(m);
        for (double x : {-7.0, -2.5, -0.1, 0.0, 1.3, 2.9, 7.0}) {
            std::size_t want = 0;
            while (want < ev.size() && ev[want] < x - 1e-9) ++want;
            // stay away from near-eigenvalue ambiguity
            bool near = false;
            for (double l : ev) near = near || std::abs(l - x) < 1e-7;
            if (!near) CHECK(static_cast<std::size_t>(sturm_count_below(m, x)) == want);
        }

        // leading principal submatrix interlaces
        if (n >= 4) {
            JacobiMatrix sub;
            sub.diagonal.assign(m.diagonal.begin(), m.diagonal.end() - 1);
            sub.off_diagonal.assign(m.off_diagonal.begin(), m.off_diagonal.end() - 1);
            const auto mu = eigenvalues(sub);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                CHECK(ev[i] <= mu[i] + 1e-8);
                CHECK(mu[i] <= ev[i + 1] + 1e-8);
            }
        }
    }
}

TEST_CASE("decoupled blocks solve independently") {
    JacobiMatrix m;
    m.diagonal = {0, 1, 2, 3};
    m.off_diagonal = {1, 0, 1};
    const auto ev = eigenvalues(m);
    REQUIRE(ev.size() == 4);
    const double s5 = std::sqrt(5.0);
    const double want[] = {(1 - s5) / 2, (1 + s5) / 2, (5 - s5) / 2, (5 + s5) / 2};
    double sorted[4];
    std::copy(want, want + 4, sorted);
    std::sort(sorted, sorted + 4);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(ev[i] - sorted[i]) < 1e-10);
}

TEST_CASE("worker count never changes results") {
    const auto m = laplacian_gamma_n(8, ANISO);
    const auto serial = eigenvalues(m, 1e-12, 1);
    CHECK(eigenvalues(m, 1e-12, 2) == serial);
    CHECK(eigenvalues(m, 1e-12, 5) == serial);
    CHECK(eigenvalues(m, 1e-12, 0) == serial);
}

TEST_CASE("interval union measure") {
    CHECK(measure_estimate({}, 0.5) == 0.0);
    CHECK(measure_estimate({0.0, 1.0, 3.0}, 0.25) == 1.5);
    CHECK(measure_estimate({0.0, 1.0, 3.0}, 0.5) == 3.0);
    CHECK_THROWS_AS(measure_estimate({0.0}, 0.0), std::invalid_argument);
}

TEST_CASE("integrated density of states") {
    const std::vector<double> ev{1, 2, 2, 3};
    CHECK(ids(ev, 0.0) == Rat64(0, 1));
    CHECK(ids(ev, 1.0) == Rat64(1, 4));
    CHECK(ids(ev, 1.5) == Rat64(1, 4));
    CHECK(ids(ev, 2.0) == Rat64(3, 4));
    CHECK(ids(ev, 3.0) == Rat64(1, 1));
    CHECK(ids(ev, 99.0) == Rat64(1, 1));
    CHECK(ids({}, 1.0) == Rat64(0, 1));

    CHECK(ids_sup_distance({0, 1}, {0, 2}) == 0.5);
    CHECK(ids_sup_distance({0, 1}, {0, 1}) == 0.0);
    CHECK_THROWS_AS(ids_sup_distance({}, {1.0}), std::invalid_argument);
}

TEST_CASE("levels double and stay inside the hull") {
    const auto tower = spectrum_tower(6, ANISO);
    REQUIRE(tower.size() == 6);
    for (const auto& est : tower) {
        CHECK(est.eigenvalues.size() ==
              static_cast<std::size_t>(std::int64_t{1} << est.level));
        for (std::size_t i = 1; i < est.eigenvalues.size(); ++i)
            CHECK(est.eigenvalues[i - 1] <= est.eigenvalues[i]);
        CHECK(est.eigenvalues.front() >= est.hull_min - 1e-9);
        CHECK(est.eigenvalues.back() <= est.hull_max + 1e-9);
    }
    CHECK_THROWS_AS(spectrum_tower(0, ANISO), std::invalid_argument);
    CHECK_THROWS_WITH(spectrum_tower(3, WeightParams{1, 1, -1, 1}),
                      "parameters outside P: need t != 0, u+v != 0, u+w != 0, v+w != 0");
}

TEST_CASE("weight permutations exchange letters without changing spectra") {
    // u<->v swaps the roles of y and z, u<->w swaps x and z, v<->w swaps x and y
    const Word base = p_n(5);
    auto mapped = [&](Letter from, Letter to) {
        Word w = base;
        for (auto& l : w) {
            if (l == from)
                l = to;
            else if (l == to)
                l = from;
        }
        return w;
    };
    const WeightParams p{1.5, 0.5, 2.0, 3.0};
    const auto uv = jacobi_from_word(mapped(Letter::y, Letter::z),
                                     WeightParams{p.t, p.v, p.u, p.w});
    const auto uw = jacobi_from_word(mapped(Letter::x, Letter::z),
                                     WeightParams{p.t, p.w, p.v, p.u});
    const auto vw = jacobi_from_word(mapped(Letter::x, Letter::y),
                                     WeightParams{p.t, p.u, p.w, p.v});
    const auto ref = jacobi_from_word(base, p);
    for (const auto& other : {uv, uw, vw}) {
        CHECK(other.diagonal == ref.diagonal);
        CHECK(other.off_diagonal == ref.off_diagonal);
    }
}

TEST_CASE("epsilon-cover trend matches frozen values at small levels") {
    const auto tower = spectrum_tower(9, ANISO);
    const double frozen[] = {4.951884, 3.853186, 3.293020, 2.917788};
    for (int n = 6; n <= 9; ++n) {
        const auto& est = tower[static_cast<std::size_t>(n - 1)];
        const double eps = est.hull_width() * std::ldexp(1.0, -n);
        CHECK(std::abs(measure_estimate(est.eigenvalues, eps) - frozen[n - 6]) < 1e-5);
    }
}

TEST_CASE("density of states converges geometrically for equal weights") {
    const auto tower = spectrum_tower(10, ISO);
    auto dist = [&](int a, int b) {
        return ids_sup_distance(tower[static_cast<std::size_t>(a - 1)].eigenvalues,
                                tower[static_cast<std::size_t>(b - 1)].eigenvalues);
    };
    double prev = dist(6, 7);
    CHECK(std::abs(prev - std::ldexp(1.0, -7)) < 1e-14);
    for (int n = 7; n <= 9; ++n) {
        const double d = dist(n, n + 1);
        CHECK(std::abs(d - std::ldexp(1.0, -(n + 1))) < 1e-14);
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("triple-block witnesses") {
    const auto wx = gordon_witnesses(Letter::x, 1);
    REQUIRE(wx.size() == 2);
    CHECK(wx[0].m == 0);
    CHECK(wx[0].scale == 2);
    CHECK(to_string(wx[0].block) == "ax");
    CHECK(to_string(wx[0].prefix) == "a");
    CHECK(wx[1].scale == 16);
    CHECK(wx[1].block.size() == 16);
    CHECK(wx[1].prefix == p_n(3));

    const auto wy = gordon_witnesses(Letter::y, 0);
    REQUIRE(wy.size() == 1);
    CHECK(wy[0].scale == 4);
    CHECK(to_string(wy[0].block) == "axay");

    const auto wz = gordon_witnesses(Letter::z, 0);
    REQUIRE(wz.size() == 1);
    CHECK(wz[0].scale == 8);
    CHECK(to_string(wz[0].block) == "axayaxaz");

    // scale identity: |w| = 2^(3m + k + 1) with k = 0,1,2 for x,y,z
    for (Letter s : {Letter::x, Letter::y, Letter::z}) {
        const int k = static_cast<int>(s) - 1;
        for (const auto& wit : gordon_witnesses(s, 2)) {
            CHECK(wit.scale == std::int64_t{1} << (3 * wit.m + k + 1));
            CHECK(static_cast<std::int64_t>(wit.block.size()) == wit.scale);
            CHECK(wit.block.back() == s);
        }
    }
    CHECK_THROWS_AS(gordon_witnesses(Letter::a, 1), std::invalid_argument);
    CHECK_THROWS_AS(gordon_witnesses(Letter::x, -1), std::invalid_argument);
}

TEST_CASE("transfer products over the triple blocks grow slowly") {
    const auto tower = spectrum_tower(8, ANISO);
    const auto& ev = tower.back().eigenvalues;
    std::mt19937_64 eng(2024);
    auto uni = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
    };
    for (Letter s : {Letter::x, Letter::y, Letter::z}) {
        for (const auto& wit : gordon_witnesses(s, 1)) {
            for (int i = 0; i < 10; ++i) {
                const double E = uni(ev.front(), ev.back());
                const auto rep = gordon_growth_check(wit, E, ANISO);
                CHECK(rep.bound_holds == (rep.log2_ratio >= -2.0));
                CHECK(rep.bound_holds);
                CHECK(rep.det_error <= 1e-10);
                const double m = std::max(rep.log2_norm_fwd_L,
                                          std::max(rep.log2_norm_fwd_2L, rep.log2_norm_bwd_L));
                CHECK(rep.log2_ratio == m);
                // determinism
                const auto rep2 = gordon_growth_check(wit, E, ANISO);
                CHECK(rep2.log2_ratio == rep.log2_ratio);
            }
        }
    }
    const auto wit = gordon_witnesses(Letter::x, 0).front();
    CHECK_THROWS_AS(gordon_growth_check(wit, 1.0, WeightParams{0, 1, 1, 1}),
                    std::domain_error);
    CHECK_THROWS_AS(gordon_growth_check(wit, 1.0, ANISO, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("scatter export") {
    const auto tower = spectrum_tower(3, ANISO);
    const std::string svg = tower_svg(tower);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("n=1") != std::string::npos);
    CHECK(svg.find("n=3") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(tower_svg(tower) == svg);
    CHECK_THROWS_AS(tower_svg({}), std::invalid_argument);
}
