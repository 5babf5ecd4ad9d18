// Exact minimum-weight and weight-distribution machinery for GF(4) codes:
// packed codeword enumeration, the MacWilliams transform in exact integer
// arithmetic, and a bounded-weight search over the hermitian dual.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "qc4/gf4.hpp"
#include "qc4/matrix.hpp"

namespace qc4 {

using BigInt = boost::multiprecision::cpp_int;

struct WeightDistribution {
    int n = 0;
    std::vector<BigInt> counts;  // A_0 .. A_n

    BigInt total() const;
    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) = default;
};

// 4^k, exact.
BigInt pow4(int k);

// Exhaustive enumeration of the row space of `rows` (reduced internally, so
// dependent spanning sets are fine). Throws BudgetError when 4^rank exceeds
// max_enum codewords.
WeightDistribution weight_distribution(const Gf4Mat& rows, std::uint64_t max_enum);

struct MinWeightResult {
    int weight = 0;
    std::vector<Gf4> witness;  // lexicographically smallest minimum-weight word
};

// Minimum Hamming weight over nonzero codewords; requires a nonzero code.
MinWeightResult min_weight_enumerate(const Gf4Mat& rows, std::uint64_t max_enum);

// Dual weight distribution of a dimension-k linear code via
// W_dual(x, y) = |C|^{-1} W(x + 3y, x - y), all in exact integers.
WeightDistribution macwilliams_dual_distribution(const WeightDistribution& dist, int k);

// min{w > 0 : dual[w] > primal[w]}; nullopt when the distributions coincide
// (self-dual code).
std::optional<int> dual_difference_min_weight(const WeightDistribution& primal,
                                              const WeightDistribution& dual);

struct BoundedSearchReport {
    int w_max = 0;
    bool found = false;
    int weight = 0;              // valid when found
    std::vector<Gf4> witness;    // valid when found
    std::uint64_t candidates = 0;
};

// Least-weight word of weight <= w_max lying in the hermitian dual of C but
// not in C, where C is spanned by code_rows. Scalar multiples are collapsed
// (first nonzero coordinate fixed to 1); the reported witness is the
// lexicographically smallest hit at the winning weight.
BoundedSearchReport bounded_weight_dual_search(const Gf4Mat& code_rows, int w_max,
                                               std::uint64_t max_candidates);

// Number of candidates the bounded search would enumerate.
BigInt bounded_search_candidate_count(int n, int w_max);

}  // namespace qc4
