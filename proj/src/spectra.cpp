#include "aperiodic/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>

#include "aperiodic/words.hpp"

namespace aperiodic {

std::pair<double, double> gershgorin_hull(const JacobiMatrix& m) {
    const std::size_t N = m.size();
    if (N == 0) throw std::invalid_argument("empty matrix");
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < N; ++i) {
        double r = 0;
        if (i > 0) r += std::fabs(m.off_diagonal[i - 1]);
        if (i + 1 < N) r += std::fabs(m.off_diagonal[i]);
        lo = std::min(lo, m.diagonal[i] - r);
        hi = std::max(hi, m.diagonal[i] + r);
    }
    return {lo, hi};
}

namespace {

struct SturmBlock {
    const double* d;
    std::vector<double> e2;  // squared off-diagonals
    int n;
    double pivmin;

    SturmBlock(const double* diag, const double* off, int size) : d(diag), n(size) {
        e2.resize(size > 0 ? static_cast<std::size_t>(size - 1) : 0);
        double maxe2 = 1.0;
        for (int i = 0; i + 1 < size; ++i) {
            e2[static_cast<std::size_t>(i)] = off[i] * off[i];
            maxe2 = std::max(maxe2, e2[static_cast<std::size_t>(i)]);
        }
        pivmin = std::numeric_limits<double>::min() * maxe2;
    }

    int count_below(double x) const {
        double t = d[0] - x;
        int cnt = t < 0;
        for (int i = 1; i < n; ++i) {
            double denom = t;
            if (std::fabs(denom) < pivmin) denom = denom < 0 ? -pivmin : pivmin;
            t = (d[i] - x) - e2[static_cast<std::size_t>(i - 1)] / denom;
            if (t < 0) ++cnt;
        }
        return cnt;
    }
};

// Bisection over one block for eigenvalue indices [ilo, ihi). The midpoint
// sequence seen by any single index depends only on the starting interval, so
// partitioning the index range across workers cannot change the output.
void bisect_range(const SturmBlock& blk, double lo0, double hi0, int ilo0, int ihi0,
                  double tol_abs, double* out) {
    struct Node {
        double lo, hi;
        int ilo, ihi;
    };
    std::vector<Node> stack{{lo0, hi0, ilo0, ihi0}};
    while (!stack.empty()) {
        Node nd = stack.back();
        stack.pop_back();
        const double mid = nd.lo + 0.5 * (nd.hi - nd.lo);
        if (nd.hi - nd.lo <= tol_abs || mid <= nd.lo || mid >= nd.hi) {
            for (int i = nd.ilo; i < nd.ihi; ++i) out[i] = mid;
            continue;
        }
        int c = blk.count_below(mid);
        c = std::clamp(c, nd.ilo, nd.ihi);
        if (c > nd.ilo) stack.push_back({nd.lo, mid, nd.ilo, c});
        if (c < nd.ihi) stack.push_back({mid, nd.hi, c, nd.ihi});
    }
}

std::vector<double> solve_block(const double* diag, const double* off, int n, double tol_abs,
                                double lo, double hi, int workers) {
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = diag[0];
        return out;
    }
    const SturmBlock blk(diag, off, n);
    if (workers <= 1 || n < 256) {
        bisect_range(blk, lo, hi, 0, n, tol_abs, out.data());
        return out;
    }
    const int chunks = std::min(workers, n);
    std::vector<std::future<void>> futs;
    futs.reserve(static_cast<std::size_t>(chunks));
    for (int c = 0; c < chunks; ++c) {
        const int a = static_cast<int>(static_cast<std::int64_t>(n) * c / chunks);
        const int b = static_cast<int>(static_cast<std::int64_t>(n) * (c + 1) / chunks);
        if (a == b) continue;
        futs.push_back(std::async(std::launch::async, [&, a, b] {
            bisect_range(blk, lo, hi, a, b, tol_abs, out.data());
        }));
    }
    for (auto& f : futs) f.get();
    return out;
}

}  // namespace

int sturm_count_below(const JacobiMatrix& m, double x) {
    if (m.size() == 0) throw std::invalid_argument("empty matrix");
    const SturmBlock blk(m.diagonal.data(), m.off_diagonal.data(),
                         static_cast<int>(m.size()));
    return blk.count_below(x);
}

std::vector<double> eigenvalues(const JacobiMatrix& m, double tol, int workers) {
    const std::size_t N = m.size();
    if (N == 0) throw std::invalid_argument("empty matrix");
    if (m.off_diagonal.size() + 1 != N) throw std::invalid_argument("ragged tridiagonal");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;

    const auto [hlo, hhi] = gershgorin_hull(m);
    const double width = hhi - hlo;
    const double tol_abs = std::max(tol * width, 4.0 * std::numeric_limits<double>::min());
    const double margin = 0.0625 * (width + 1.0);

    std::vector<double> out;
    out.reserve(N);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= N - 1; ++i) {
        const bool cut = (i == N - 1) || (m.off_diagonal[i] == 0.0);
        if (!cut) continue;
        const std::size_t len = i - start + 1;
        auto part = solve_block(m.diagonal.data() + start, m.off_diagonal.data() + start,
                                static_cast<int>(len), tol_abs, hlo - margin, hhi + margin,
                                workers);
        out.insert(out.end(), part.begin(), part.end());
        start = i + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SpectrumEstimate> spectrum_tower(int n_max, const WeightParams& p, double tol,
                                             int workers) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (!p.in_P())
        throw std::domain_error(
            "parameters outside P: need t != 0, u+v != 0, u+w != 0, v+w != 0");
    std::vector<SpectrumEstimate> tower;
    tower.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const JacobiMatrix m = laplacian_gamma_n(n, p);
        SpectrumEstimate est;
        est.level = n;
        const auto hull = gershgorin_hull(m);
        est.hull_min = hull.first;
        est.hull_max = hull.second;
        est.eigenvalues = eigenvalues(m, tol, workers);
        tower.push_back(std::move(est));
    }
    return tower;
}

double measure_estimate(const std::vector<double>& sorted_eigs, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    double total = 0;
    bool open = false;
    double cs = 0, ce = 0;
    for (double e : sorted_eigs) {
        const double a = e - eps, b = e + eps;
        if (!open) {
            cs = a;
            ce = b;
            open = true;
        } else if (a <= ce) {
            ce = std::max(ce, b);
        } else {
            total += ce - cs;
            cs = a;
            ce = b;
        }
    }
    if (open) total += ce - cs;
    return total;
}

Rat64 ids(const std::vector<double>& sorted_eigs, double E) {
    if (sorted_eigs.empty()) return Rat64(0);
    const auto cnt = std::upper_bound(sorted_eigs.begin(), sorted_eigs.end(), E) -
                     sorted_eigs.begin();
    return Rat64(static_cast<std::int64_t>(cnt),
                 static_cast<std::int64_t>(sorted_eigs.size()));
}

double ids_sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty spectrum");
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    double sup = 0;
    auto probe = [&](double p) {
        const double above =
            std::fabs(static_cast<double>(std::upper_bound(a.begin(), a.end(), p) - a.begin()) / na -
                      static_cast<double>(std::upper_bound(b.begin(), b.end(), p) - b.begin()) / nb);
        const double below =
            std::fabs(static_cast<double>(std::lower_bound(a.begin(), a.end(), p) - a.begin()) / na -
                      static_cast<double>(std::lower_bound(b.begin(), b.end(), p) - b.begin()) / nb);
        sup = std::max({sup, above, below});
    };
    for (double p : a) probe(p);
    for (double p : b) probe(p);
    return sup;
}

std::vector<GordonWitness> gordon_witnesses(Letter s, int m_max) {
    if (s == Letter::a) throw std::invalid_argument("witness letter must be x, y or z");
    if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
    const int k = s == Letter::x ? 0 : (s == Letter::y ? 1 : 2);
    std::vector<GordonWitness> out;
    for (int m = 0; m <= m_max; ++m) {
        const int q = 3 * m + k;
        GordonWitness wit;
        wit.s = s;
        wit.m = m;
        wit.scale = std::int64_t{1} << (q + 1);
        wit.prefix = p_n(q);
        wit.block = wit.prefix;
        wit.block.push_back(s);
        const std::int64_t L = wit.scale;
        // literal verification of the pattern  w w | w v  on [-2L+1, 2L-1]
        const Window win = special_word_window(s, 2 * L - 1);
        auto expect_block = [&](std::int64_t from, const Word& blockw) {
            for (std::int64_t j = 0; j < static_cast<std::int64_t>(blockw.size()); ++j)
                if (win.at(from + j) != blockw[static_cast<std::size_t>(j)])
                    throw std::logic_error("gordon witness pattern verification failed");
        };
        expect_block(-2 * L + 1, wit.block);
        expect_block(-L + 1, wit.block);
        expect_block(1, wit.block);
        expect_block(L + 1, wit.prefix);
        out.push_back(std::move(wit));
    }
    return out;
}

namespace {

// 2-vector with an explicit power-of-two exponent, so products of up to a few
// thousand transfer steps can be tracked at any energy without overflow.
struct ScaledVec {
    double a = 1, b = 0;
    std::int64_t e2 = 0;

    void renorm() {
        const double m = std::max(std::fabs(a), std::fabs(b));
        if (m == 0) return;
        int k = 0;
        std::frexp(m, &k);
        if (k > 512 || k < -512) {
            a = std::ldexp(a, -k);
            b = std::ldexp(b, -k);
            e2 += k;
        }
    }

    void apply(const TransferMatrix& M) {
        const double na = M.m00 * a + M.m01 * b;
        const double nb = M.m10 * a + M.m11 * b;
        a = na;
        b = nb;
        renorm();
    }

    double log2_norm() const { return std::log2(std::hypot(a, b)) + static_cast<double>(e2); }
};

}  // namespace

GordonGrowthReport gordon_growth_check(const GordonWitness& witness, double E,
                                       const WeightParams& p, double seed_c, double seed_s) {
    if (!p.in_P())
        throw std::domain_error(
            "parameters outside P: need t != 0, u+v != 0, u+w != 0, v+w != 0");
    const double seed_norm = std::hypot(seed_c, seed_s);
    if (seed_norm == 0) throw std::invalid_argument("seed vector must be nonzero");
    const std::int64_t L = witness.scale;
    const Window win = special_word_window(witness.s, 2 * L - 1);
    if (win.first() > -L || win.last() < 2 * L) throw std::runtime_error("window too small");

    GordonGrowthReport rep;
    rep.energy = E;

    ScaledVec fwd{seed_c / seed_norm, seed_s / seed_norm, 0};
    double det_fwd_L = 1, det_fwd_2L = 1, det_bwd = 1;
    double det_acc = 1;
    for (std::int64_t n = 1; n <= 2 * L; ++n) {
        const TransferMatrix M = transfer_matrix(E, win.at(n - 1), win.at(n), p);
        fwd.apply(M);
        det_acc *= M.det();
        if (n == L) {
            rep.log2_norm_fwd_L = fwd.log2_norm();
            det_fwd_L = det_acc;
        }
    }
    rep.log2_norm_fwd_2L = fwd.log2_norm();
    det_fwd_2L = det_acc;

    ScaledVec bwd{seed_c / seed_norm, seed_s / seed_norm, 0};
    det_acc = 1;
    for (std::int64_t n = 0; n > -L; --n) {
        const TransferMatrix M = transfer_matrix(E, win.at(n - 1), win.at(n), p);
        bwd.apply(M.unimodular_inverse());
        // the unimodular inverse swaps/negates entries, so its determinant is
        // the same floating-point expression as det(M)
        det_acc *= M.det();
    }
    rep.log2_norm_bwd_L = bwd.log2_norm();
    det_bwd = det_acc;

    rep.log2_ratio = std::max({rep.log2_norm_fwd_L, rep.log2_norm_fwd_2L, rep.log2_norm_bwd_L});
    rep.bound_holds = rep.log2_ratio >= -2.0;
    rep.det_error = std::max({std::fabs(det_fwd_L - 1.0), std::fabs(det_fwd_2L - 1.0),
                              std::fabs(det_bwd - 1.0)});
    return rep;
}

std::string tower_svg(const std::vector<SpectrumEstimate>& tower) {
    if (tower.empty()) throw std::invalid_argument("empty tower");
    double lo = tower.front().hull_min, hi = tower.front().hull_max;
    int max_level = 0;
    for (const auto& est : tower) {
        lo = std::min(lo, est.hull_min);
        hi = std::max(hi, est.hull_max);
        max_level = std::max(max_level, est.level);
    }
    if (hi <= lo) hi = lo + 1;
    const double W = 800, H = 60.0 + 40.0 * max_level;
    auto xmap = [&](double e) { return 40.0 + (e - lo) / (hi - lo) * (W - 80.0); };
    auto ymap = [&](int level) { return H - 30.0 - 40.0 * (level - 1); };
    char buf[128];
    std::string s;
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  W, H, W, H);
    s += buf;
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& est : tower) {
        std::snprintf(buf, sizeof buf,
                      "<text x=\"4\" y=\"%.1f\" font-size=\"12\">n=%d</text>\n",
                      ymap(est.level) + 4.0, est.level);
        s += buf;
        for (double e : est.eigenvalues) {
            std::snprintf(buf, sizeof buf,
                          "<circle cx=\"%.2f\" cy=\"%.1f\" r=\"1.5\" fill=\"black\"/>\n",
                          xmap(e), ymap(est.level));
            s += buf;
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace aperiodic
