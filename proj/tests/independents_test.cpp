#include <gtest/gtest.h>

#include <numeric>

#include "sumsetlab/independents.hpp"
#include "sumsetlab/rng.hpp"

using namespace sumsetlab;

namespace {

// Transfer-matrix oracle, independent of the backtracking enumerator:
// Q_n splits into two Q_(n-1) halves joined by a perfect matching, so
// i(Q_n) counts ordered pairs of disjoint independent sets of Q_(n-1).
// The half-cube sets come from a brute-force scan over all masks.

bool is_independent_mask(std::uint32_t mask, int n) {
    const int N = 1 << n;
    for (int x = 0; x < N; ++x) {
        if (!((mask >> x) & 1)) continue;
        for (int i = 0; i < n; ++i)
            if ((mask >> (x ^ (1 << i))) & 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> brute_independent_sets(int n) {
    std::vector<std::uint32_t> sets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (1 << n)); ++mask)
        if (is_independent_mask(static_cast<std::uint32_t>(mask), n)) sets.push_back(static_cast<std::uint32_t>(mask));
    return sets;
}

std::uint64_t transfer_matrix_count(int n) {
    if (n == 1) return 3;  // K_2 directly
    const auto halves = brute_independent_sets(n - 1);
    std::uint64_t total = 0;
    for (const std::uint32_t a : halves)
        for (const std::uint32_t b : halves)
            if ((a & b) == 0) ++total;
    return total;
}

}  // namespace

TEST(CountIndependentSets, SpecExamples) {
    EXPECT_EQ(count_independent_sets(1), 3u);
    EXPECT_EQ(count_independent_sets(2), 7u);
    EXPECT_EQ(count_independent_sets(2, GF2Vector(2, 3)), 5u);  // C_4 plus diagonals = K_4
    EXPECT_THROW(count_independent_sets(2, GF2Vector(2, 0)), std::invalid_argument);
    EXPECT_THROW(count_independent_sets(6), std::invalid_argument);
}

TEST(CountIndependentSets, MatchesTransferMatrixOracle) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(count_independent_sets(n), transfer_matrix_count(n)) << "n=" << n;
}

TEST(CountIndependentSets, KnownValues) {
    EXPECT_EQ(count_independent_sets(3), 35u);
    EXPECT_EQ(count_independent_sets(4), 743u);
    EXPECT_EQ(count_independent_sets(5), 254475u);
}

TEST(CountIndependentSets, OrderIndependenceAtN5) {
    // a second vertex order must reproduce the count
    const std::uint32_t N = 32;
    std::vector<std::uint32_t> reversed(N);
    for (std::uint32_t i = 0; i < N; ++i) reversed[i] = N - 1 - i;
    std::uint64_t count_rev = 0;
    for_each_independent_set(5, std::nullopt, [&](std::uint32_t) { ++count_rev; }, &reversed);
    EXPECT_EQ(count_rev, 254475u);

    std::vector<std::uint32_t> gray(N);
    for (std::uint32_t i = 0; i < N; ++i) gray[i] = i ^ (i >> 1);
    std::uint64_t count_gray = 0;
    for_each_independent_set(5, std::nullopt, [&](std::uint32_t) { ++count_gray; }, &gray);
    EXPECT_EQ(count_gray, 254475u);
}

TEST(EnumerateIndependentSets, StreamContract) {
    const auto stream1 = enumerate_independent_sets(1);
    ASSERT_EQ(stream1.size(), 3u);
    EXPECT_TRUE(stream1[0].bits.none());
    EXPECT_EQ(stream1[1].bits.to_indices(), (std::vector<std::uint64_t>{0}));
    EXPECT_EQ(stream1[2].bits.to_indices(), (std::vector<std::uint64_t>{1}));

    const auto stream2 = enumerate_independent_sets(2);
    EXPECT_EQ(stream2.size(), 7u);
    bool has_diagonal = false;
    for (const auto& s : stream2)
        if (s.bits == Bitmap::from_indices(4, {0, 3})) has_diagonal = true;
    EXPECT_TRUE(has_diagonal);
}

TEST(EnumerateIndependentSets, EveryStreamedSetIsIndependent) {
    for (int n = 1; n <= 4; ++n) {
        std::uint64_t streamed = 0;
        for_each_independent_set(n, std::nullopt, [&](std::uint32_t mask) {
            ++streamed;
            EXPECT_TRUE(is_independent_mask(mask, n));
        });
        EXPECT_EQ(streamed, count_independent_sets(n));
    }
}

TEST(ParitySplit, SpecExamples) {
    const ParityProfile empty = parity_split(BitSubset(2));
    EXPECT_EQ(empty.even_count, 0u);
    EXPECT_EQ(empty.odd_count, 0u);
    const ParityProfile diag = parity_split(BitSubset::of(2, {0, 3}));
    EXPECT_EQ(diag.even_count, 2u);
    EXPECT_EQ(diag.odd_count, 0u);
    const ParityProfile single = parity_split(BitSubset::of(3, {4}));
    EXPECT_EQ(single.even_count, 0u);
    EXPECT_EQ(single.odd_count, 1u);
    EXPECT_EQ(single.min_side(), 0u);
}

TEST(ParityBalance, SpecExamples) {
    const ParityHistogram h2 = parity_balance_distribution(2);
    EXPECT_EQ(h2.total, 7u);
    ASSERT_EQ(h2.counts.size(), 1u);
    EXPECT_EQ(h2.counts.at(0), 7u);

    const ParityHistogram h3 = parity_balance_distribution(3);
    EXPECT_EQ(h3.total, 35u);
    EXPECT_GT(h3.frequency(0), std::exp(-0.5));

    std::uint64_t sum = 0;
    for (const auto& [k, v] : h3.counts) sum += v;
    EXPECT_EQ(sum, h3.total);
}

TEST(ParityBalance, ExactHistogramAtN5) {
    const ParityHistogram h = parity_balance_distribution(5);
    EXPECT_EQ(h.total, 254475u);
    EXPECT_EQ(h.counts.at(0), 131071u);
    EXPECT_EQ(h.counts.at(1), 65328u);
    EXPECT_EQ(h.counts.at(2), 41240u);
    EXPECT_EQ(h.counts.at(3), 15680u);
    EXPECT_EQ(h.counts.at(4), 1140u);
    EXPECT_EQ(h.counts.at(5), 16u);
}

TEST(PoissonReference, SpecExamples) {
    EXPECT_NEAR(poisson_reference(0), 0.60653, 1e-5);
    EXPECT_NEAR(poisson_reference(1), 0.30327, 1e-5);
    double total = 0.0;
    for (int k = 0; k <= 20; ++k) total += poisson_reference(k);
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(BalancedTail, SpecExamples) {
    EXPECT_EQ(balanced_tail_count(2, 0.1), 0u);
    EXPECT_EQ(balanced_tail_count(3, 0.49), 0u);
    // monotone nonincreasing in beta
    std::uint64_t prev = ~std::uint64_t{0};
    for (double beta : {0.01, 0.05, 0.1, 0.2, 0.4}) {
        const std::uint64_t c = balanced_tail_count(4, beta);
        EXPECT_LE(c, prev);
        prev = c;
    }
    EXPECT_THROW(balanced_tail_count(3, 0.0), std::invalid_argument);
    EXPECT_THROW(balanced_tail_count(3, 0.5), std::invalid_argument);
}

TEST(LayeredIndependentSet, SpecExamples) {
    EXPECT_EQ(layered_independent_set(2).bits.to_indices(), (std::vector<std::uint64_t>{0}));
    const BitSubset l4 = layered_independent_set(4);
    EXPECT_EQ(l4.count(), 5u);  // weight 0 plus the four weight-3 vertices
    EXPECT_THROW(layered_independent_set(3), std::invalid_argument);
}

TEST(LayeredIndependentSet, IndependentInAugmentedCube) {
    for (int n : {2, 4, 6}) {
        const BitSubset s = layered_independent_set(n);
        const auto members = s.bits.to_indices();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const int w = std::popcount(members[i] ^ members[j]);
                EXPECT_NE(w, 1);
                EXPECT_NE(w, n);
            }
    }
}

TEST(AugmentedCounts, SupergraphMonotone) {
    for (int n : {3, 4}) {
        const std::uint64_t base = count_independent_sets(n);
        for (std::uint32_t v = 1; v < (1u << n); ++v)
            EXPECT_LE(count_independent_sets(n, GF2Vector(n, v)), base);
    }
}

TEST(AugmentedCounts, EvenEdgeStrictlyBelowAtN4and5) {
    for (int n : {4, 5}) {
        const std::uint64_t base = count_independent_sets(n);
        for (std::uint32_t v = 1; v < (1u << n); ++v) {
            if (std::popcount(v) % 2 != 0) continue;
            EXPECT_LT(count_independent_sets(n, GF2Vector(n, v)), base) << "n=" << n << " v=" << v;
        }
    }
}
