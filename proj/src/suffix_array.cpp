#include "aperiodic/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace aperiodic {

SuffixArray SuffixArray::build(const Word& text) {
    const std::int32_t n = static_cast<std::int32_t>(text.size());
    SuffixArray out;
    out.sa.resize(n);
    out.rank.resize(n);
    out.lcp.assign(n, 0);
    if (n == 0) return out;

    std::iota(out.sa.begin(), out.sa.end(), 0);
    for (std::int32_t i = 0; i < n; ++i)
        out.rank[i] = static_cast<std::int32_t>(text[i]);

    std::vector<std::int32_t> tmp(n);
    for (std::int32_t k = 1;; k *= 2) {
        auto key = [&](std::int32_t i) {
            return std::pair<std::int32_t, std::int32_t>(
                out.rank[i], i + k < n ? out.rank[i + k] : -1);
        };
        std::sort(out.sa.begin(), out.sa.end(),
                  [&](std::int32_t a, std::int32_t b) { return key(a) < key(b); });
        tmp[out.sa[0]] = 0;
        for (std::int32_t r = 1; r < n; ++r)
            tmp[out.sa[r]] = tmp[out.sa[r - 1]] + (key(out.sa[r - 1]) < key(out.sa[r]) ? 1 : 0);
        out.rank = tmp;
        if (out.rank[out.sa[n - 1]] == n - 1) break;
    }

    // Kasai
    std::int32_t h = 0;
    for (std::int32_t i = 0; i < n; ++i) {
        if (out.rank[i] == 0) {
            h = 0;
            continue;
        }
        std::int32_t j = out.sa[out.rank[i] - 1];
        if (h > 0) --h;
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        out.lcp[out.rank[i]] = h;
    }
    return out;
}

RangeMin::RangeMin(const std::vector<std::int32_t>& v) {
    const std::size_t n = v.size();
    log2_.assign(n + 1, 0);
    for (std::size_t i = 2; i <= n; ++i) log2_[i] = log2_[i / 2] + 1;
    table_.push_back(v);
    for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
        const auto& prev = table_[k - 1];
        std::vector<std::int32_t> row(n - (std::size_t{1} << k) + 1);
        for (std::size_t i = 0; i < row.size(); ++i)
            row[i] = std::min(prev[i], prev[i + (std::size_t{1} << (k - 1))]);
        table_.push_back(std::move(row));
    }
}

std::int32_t RangeMin::min_in(std::size_t lo, std::size_t hi) const {
    const std::size_t k = log2_[hi - lo + 1];
    return std::min(table_[k][lo], table_[k][hi + 1 - (std::size_t{1} << k)]);
}

LceIndex::LceIndex(const Word& text) : n_(static_cast<std::int64_t>(text.size())) {
    fwd_ = SuffixArray::build(text);
    Word rev(text.rbegin(), text.rend());
    bwd_ = SuffixArray::build(rev);
    fwd_rmq_ = RangeMin(fwd_.lcp);
    bwd_rmq_ = RangeMin(bwd_.lcp);
}

std::int64_t LceIndex::lce(const SuffixArray& sa, const RangeMin& rmq, std::int64_t n,
                           std::int64_t i, std::int64_t j) {
    if (i == j) return n - i;
    auto ri = sa.rank[static_cast<std::size_t>(i)];
    auto rj = sa.rank[static_cast<std::size_t>(j)];
    if (ri > rj) std::swap(ri, rj);
    return rmq.min_in(static_cast<std::size_t>(ri) + 1, static_cast<std::size_t>(rj));
}

std::int64_t LceIndex::forward(std::int64_t i, std::int64_t j) const {
    if (i >= n_ || j >= n_ || i < 0 || j < 0) return 0;
    return lce(fwd_, fwd_rmq_, n_, i, j);
}

std::int64_t LceIndex::backward(std::int64_t i, std::int64_t j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) return 0;
    // position i in the text is position n-1-i in the reversed text
    return lce(bwd_, bwd_rmq_, n_, n_ - 1 - i, n_ - 1 - j);
}

}  // namespace aperiodic
