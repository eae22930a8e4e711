#pragma once

// Exact enumeration of independent sets in the hypercube Q_n (optionally
// augmented by one extra Cayley matching) and the parity-balance
// statistics over them. The vertex set is F_2^n under the library's index
// encoding; Q_n edges join indices at Hamming distance 1.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sumsetlab/gf2.hpp"

namespace sumsetlab {

inline constexpr int kIndependentsMaxDimension = 5;

struct ParityProfile {
    std::uint32_t even_count = 0;
    std::uint32_t odd_count = 0;
    std::uint32_t min_side() const noexcept { return std::min(even_count, odd_count); }
};

struct ParityHistogram {
    int n = 0;
    std::map<std::uint32_t, std::uint64_t> counts;  // min_side value -> #independent sets
    std::uint64_t total = 0;

    double frequency(std::uint32_t k) const {
        auto it = counts.find(k);
        return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
    }
};

namespace detail {

inline void check_indep_dimension(int n) {
    if (n < 1 || n > kIndependentsMaxDimension)
        throw std::invalid_argument("independent-set enumeration supports n in [1, 5]");
}

// Adjacency of Q_n (plus the optional extra matching) as 32-bit masks,
// with an optional relabeling of the vertices. Label order is the
// enumeration order, so a permutation re-checks order independence.
inline std::vector<std::uint32_t> hypercube_adjacency(int n, std::optional<GF2Vector> extra,
                                                      const std::vector<std::uint32_t>* relabel) {
    const std::uint32_t N = std::uint32_t{1} << n;
    if (relabel && relabel->size() != N) throw std::invalid_argument("relabel: permutation arity mismatch");
    std::vector<std::uint32_t> vertex_of(N);
    for (std::uint32_t i = 0; i < N; ++i) vertex_of[i] = relabel ? (*relabel)[i] : i;
    std::vector<std::uint32_t> label_of(N);
    for (std::uint32_t i = 0; i < N; ++i) label_of[vertex_of[i]] = i;

    std::vector<std::uint32_t> adj(N, 0);
    for (std::uint32_t lab = 0; lab < N; ++lab) {
        const std::uint32_t x = vertex_of[lab];
        for (int i = 0; i < n; ++i) adj[lab] |= std::uint32_t{1} << label_of[x ^ (std::uint32_t{1} << i)];
        if (extra) adj[lab] |= std::uint32_t{1} << label_of[x ^ extra->bits];
    }
    return adj;
}

}  // namespace detail

/// Visits every independent set of Q_n (as a vertex mask over the
/// original labels) exactly once, in the deterministic order of the
/// grow-by-larger-vertex scan: the empty set first, then extensions in
/// increasing index.
template <class F>
void for_each_independent_set(int n, std::optional<GF2Vector> extra, F&& visit,
                              const std::vector<std::uint32_t>* relabel = nullptr) {
    detail::check_indep_dimension(n);
    if (extra) {
        if (extra->n != n) throw std::invalid_argument("extra edge vector has wrong dimension");
        if (extra->is_zero()) throw std::invalid_argument("extra edge vector must be nonzero");
    }
    const std::uint32_t N = std::uint32_t{1} << n;
    const auto adj = detail::hypercube_adjacency(n, extra, relabel);
    std::vector<std::uint32_t> vertex_of(N);
    for (std::uint32_t i = 0; i < N; ++i) vertex_of[i] = relabel ? (*relabel)[i] : i;
    const std::uint32_t all = (n == 5) ? ~std::uint32_t{0} : ((std::uint32_t{1} << N) - 1);

    // chosen/allowed are masks over labels; emitted sets use true vertices
    struct Rec {
        const std::vector<std::uint32_t>& adj;
        const std::vector<std::uint32_t>& vertex_of;
        F& visit;
        void operator()(std::uint32_t chosen_vertices, std::uint32_t allowed) {
            visit(chosen_vertices);
            std::uint32_t m = allowed;
            while (m) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                const std::uint32_t above = (v == 31) ? 0 : (~std::uint32_t{0} << (v + 1));
                (*this)(chosen_vertices | (std::uint32_t{1} << vertex_of[v]),
                        allowed & ~adj[v] & above);
            }
        }
    } rec{adj, vertex_of, visit};
    rec(0, all);
}

/// i(Q_n), or the count for Q_n plus the matching Gamma(extra).
inline std::uint64_t count_independent_sets(int n, std::optional<GF2Vector> extra = std::nullopt) {
    std::uint64_t c = 0;
    for_each_independent_set(n, extra, [&](std::uint32_t) { ++c; });
    return c;
}

/// Materialized enumeration, in stream order.
inline std::vector<BitSubset> enumerate_independent_sets(int n, std::optional<GF2Vector> extra = std::nullopt) {
    std::vector<BitSubset> out;
    for_each_independent_set(n, extra, [&](std::uint32_t mask) {
        BitSubset s(n);
        std::uint32_t m = mask;
        while (m) {
            s.bits.set(static_cast<std::uint32_t>(std::countr_zero(m)));
            m &= m - 1;
        }
        out.push_back(std::move(s));
    });
    return out;
}

inline ParityProfile parity_split(const BitSubset& I) {
    ParityProfile p;
    I.bits.for_each([&](std::uint64_t x) {
        if (std::popcount(x) & 1)
            ++p.odd_count;
        else
            ++p.even_count;
    });
    return p;
}

/// e^(-1/2) (1/2)^k / k!, the Poisson(1/2) reference mass at k.
inline double poisson_reference(int k) {
    if (k < 0) throw std::invalid_argument("poisson_reference: k must be >= 0");
    double mass = std::exp(-0.5);
    for (int i = 1; i <= k; ++i) mass *= 0.5 / static_cast<double>(i);
    return mass;
}

/// Exact histogram of min(|I & E|, |I & O|) over all independent sets.
inline ParityHistogram parity_balance_distribution(int n) {
    detail::check_indep_dimension(n);
    const std::uint32_t N = std::uint32_t{1} << n;
    std::uint32_t even_mask = 0;
    for (std::uint32_t x = 0; x < N; ++x)
        if ((std::popcount(x) & 1) == 0) even_mask |= std::uint32_t{1} << x;
    ParityHistogram h;
    h.n = n;
    for_each_independent_set(n, std::nullopt, [&](std::uint32_t mask) {
        const std::uint32_t e = std::popcount(mask & even_mask);
        const std::uint32_t o = std::popcount(mask) - e;
        ++h.counts[std::min(e, o)];
        ++h.total;
    });
    return h;
}

/// Number of independent sets with min parity side strictly above beta*N.
inline std::uint64_t balanced_tail_count(int n, double beta) {
    if (!(beta > 0.0 && beta < 0.5)) throw std::invalid_argument("balanced_tail_count: beta must be in (0, 1/2)");
    const ParityHistogram h = parity_balance_distribution(n);
    const double threshold = beta * static_cast<double>(std::uint64_t{1} << n);
    std::uint64_t c = 0;
    for (const auto& [k, v] : h.counts)
        if (static_cast<double>(k) > threshold) c += v;
    return c;
}

/// The even-weight-below-n/2 plus odd-weight-above-n/2 construction; an
/// independent set of Q_n joined with the matching Gamma(all-ones). Only
/// defined for even n.
inline BitSubset layered_independent_set(int n) {
    check_dimension(n);
    if (n % 2 != 0) throw std::invalid_argument("layered_independent_set: n must be even");
    BitSubset out(n);
    const std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < N; ++x) {
        const int w = std::popcount(x);
        const bool even = (w & 1) == 0;
        if ((even && 2 * w < n) || (!even && 2 * w > n)) out.bits.set(x);
    }
    return out;
}

}  // namespace sumsetlab
