#pragma once

#include <cstdint>
#include <vector>

#include "aperiodic/letters.hpp"

namespace aperiodic {

// Suffix array with LCP table, built by rank doubling (O(N log^2 N)).
// Backs subword enumeration, complexity counting and longest-common-extension
// queries; texts here stay well below 2^31 letters.
struct SuffixArray {
    std::vector<std::int32_t> sa;    // sa[r] = start of the rank-r suffix
    std::vector<std::int32_t> rank;  // rank[i] = rank of suffix starting at i
    std::vector<std::int32_t> lcp;   // lcp[r] = lcp(suffix sa[r-1], suffix sa[r]); lcp[0] = 0

    static SuffixArray build(const Word& text);
};

// Sparse-table range minimum over a fixed vector; queries are inclusive on both ends.
class RangeMin {
  public:
    RangeMin() = default;
    explicit RangeMin(const std::vector<std::int32_t>& v);
    std::int32_t min_in(std::size_t lo, std::size_t hi) const;

  private:
    std::vector<std::vector<std::int32_t>> table_;
    std::vector<std::uint8_t> log2_;
};

// Longest common extension queries over one text, both directions.
class LceIndex {
  public:
    explicit LceIndex(const Word& text);

    // length of the longest common prefix of text[i..] and text[j..]
    std::int64_t forward(std::int64_t i, std::int64_t j) const;
    // length of the longest common suffix of text[..i] and text[..j] (inclusive ends)
    std::int64_t backward(std::int64_t i, std::int64_t j) const;

    std::int64_t size() const { return n_; }

  private:
    std::int64_t n_ = 0;
    SuffixArray fwd_;
    SuffixArray bwd_;  // over the reversed text
    RangeMin fwd_rmq_;
    RangeMin bwd_rmq_;

    static std::int64_t lce(const SuffixArray& sa, const RangeMin& rmq, std::int64_t n,
                            std::int64_t i, std::int64_t j);
};

}  // namespace aperiodic
