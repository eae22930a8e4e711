#pragma once

// Exact linear algebra and bit-parallel set operations over F_2^n.
//
// Element indexing is little-endian and fixed for the whole library: bit j
// of an element's index is coordinate j of the vector. Subsets of F_2^n
// are bitmaps of length 2^n with bit i = membership of the element whose
// index is i. Every other module and the CLI wire format build on this
// encoding.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sumsetlab/bitmap.hpp"

namespace sumsetlab {

/// Dimension bounds for F_2^n sets (2^24-bit masks at the top end).
inline constexpr int kMinDimension = 1;
inline constexpr int kMaxDimension = 24;

inline void check_dimension(int n) {
    if (n < kMinDimension || n > kMaxDimension)
        throw std::invalid_argument("dimension n must be in [1, 24], got " + std::to_string(n));
}

/// A vector of F_2^n. bits is the element index; bit j = coordinate j.
struct GF2Vector {
    int n = 0;
    std::uint32_t bits = 0;

    GF2Vector() = default;
    GF2Vector(int dim, std::uint32_t b) : n(dim), bits(b) {
        check_dimension(dim);
        if (dim < 32 && b >> dim)
            throw std::invalid_argument("GF2Vector: value exceeds dimension");
    }
    bool is_zero() const noexcept { return bits == 0; }
    bool operator==(const GF2Vector&) const = default;
};

inline int hamming_weight(const GF2Vector& x) noexcept { return std::popcount(x.bits); }
inline int weight_parity(const GF2Vector& x) noexcept { return std::popcount(x.bits) & 1; }

/// <x, y> over F_2: parity of the coordinate-wise AND.
inline int dot(const GF2Vector& x, const GF2Vector& y) {
    if (x.n != y.n) throw std::invalid_argument("dot: dimension mismatch");
    return std::popcount(x.bits & y.bits) & 1;
}

enum class SumMode { Inclusive, Distinct };

/// A subset of F_2^n as a 2^n-bit bitmap.
struct BitSubset {
    int n = 0;
    Bitmap bits;

    BitSubset() = default;
    explicit BitSubset(int dim) : n(dim), bits(std::uint64_t{1} << dim) { check_dimension(dim); }

    static BitSubset full(int dim) {
        check_dimension(dim);
        BitSubset s(dim);
        s.bits = Bitmap(std::uint64_t{1} << dim, true);
        return s;
    }
    static BitSubset of(int dim, std::initializer_list<std::uint64_t> idx) {
        BitSubset s(dim);
        for (auto i : idx) s.bits.set(i);
        return s;
    }

    std::uint64_t universe() const noexcept { return std::uint64_t{1} << n; }
    std::uint64_t count() const noexcept { return bits.count(); }
    bool contains(std::uint32_t index) const { return bits.test(index); }
    bool contains(const GF2Vector& v) const { return bits.test(v.bits); }
    void insert(std::uint32_t index) { bits.set(index); }
    bool operator==(const BitSubset&) const = default;
};

namespace detail {

inline constexpr std::uint64_t kButterflyMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

// Permute a 2^n-bit bitmap by index XOR a, in place. One masked butterfly
// per set bit of a: bits j < 6 shuffle inside words, bits j >= 6 swap
// word blocks.
inline void xor_permute_words(Bitmap::word_t* w, std::size_t nwords, int n, std::uint32_t a) {
    for (int j = 0; j < n && j < 6; ++j) {
        if (!((a >> j) & 1)) continue;
        const std::uint64_t m = kButterflyMask[j];
        const int s = 1 << j;
        for (std::size_t i = 0; i < nwords; ++i) {
            const std::uint64_t x = w[i];
            w[i] = ((x >> s) & m) | ((x & m) << s);
        }
    }
    for (int j = 6; j < n; ++j) {
        if (!((a >> j) & 1)) continue;
        const std::size_t block = std::size_t{1} << (j - 6);
        for (std::size_t g = 0; g < nwords; g += 2 * block)
            for (std::size_t i = 0; i < block; ++i) std::swap(w[g + i], w[g + block + i]);
    }
}

/// Single-word variant for n <= 6 hot loops.
inline std::uint64_t xor_permute_word(std::uint64_t x, std::uint32_t a) {
    for (int j = 0; j < 6; ++j)
        if ((a >> j) & 1) {
            const std::uint64_t m = kButterflyMask[j];
            const int s = 1 << j;
            x = ((x >> s) & m) | ((x & m) << s);
        }
    return x;
}

}  // namespace detail

/// {a + s : s in S}. An involution in a; bit i of the output is bit
/// (i XOR a) of the input.
inline BitSubset xor_translate(const BitSubset& S, const GF2Vector& a) {
    if (S.n != a.n) throw std::invalid_argument("xor_translate: dimension mismatch");
    BitSubset out = S;
    detail::xor_permute_words(out.bits.data(), out.bits.word_count(), S.n, a.bits);
    return out;
}

/// A + A, accumulated as the union of |A| xor-translates of A.
inline BitSubset sumset(const BitSubset& A, SumMode mode = SumMode::Inclusive) {
    BitSubset out(A.n);
    if (A.bits.word_count() == 1) {
        std::uint64_t mask = A.bits.data()[0];
        std::uint64_t s = 0;
        std::uint64_t m = mask;
        while (m) {
            const std::uint32_t a = static_cast<std::uint32_t>(std::countr_zero(m));
            m &= m - 1;
            s |= detail::xor_permute_word(mask, a);
        }
        if (mode == SumMode::Distinct) s &= ~std::uint64_t{1};
        out.bits.data()[0] = s;
        return out;
    }
    std::vector<Bitmap::word_t> scratch(A.bits.word_count());
    A.bits.for_each([&](std::uint64_t a) {
        std::copy(A.bits.data(), A.bits.data() + scratch.size(), scratch.begin());
        detail::xor_permute_words(scratch.data(), scratch.size(), A.n, static_cast<std::uint32_t>(a));
        for (std::size_t w = 0; w < scratch.size(); ++w) out.bits.data()[w] |= scratch[w];
    });
    // in F_2^n two distinct elements never sum to zero, so the Distinct
    // sumset is the Inclusive one minus the origin
    if (mode == SumMode::Distinct && out.bits.size() > 0 && out.bits.test(0)) out.bits.reset(0);
    return out;
}

/// v-perp: all x with <x, v> = 0. A subgroup of size 2^(n-1).
inline BitSubset hyperplane(const GF2Vector& v) {
    if (v.is_zero()) throw std::invalid_argument("hyperplane: v must be nonzero");
    BitSubset out(v.n);
    const std::uint64_t N = out.universe();
    for (std::uint64_t x = 0; x < N; ++x)
        if ((std::popcount(static_cast<std::uint32_t>(x) & v.bits) & 1) == 0) out.bits.set(x);
    return out;
}

/// Rank of the span, by Gaussian elimination over F_2.
inline int rank(const std::vector<GF2Vector>& vs) {
    std::vector<std::uint32_t> pivots;
    for (const auto& v : vs) {
        if (!vs.empty() && v.n != vs.front().n) throw std::invalid_argument("rank: dimension mismatch");
        std::uint32_t x = v.bits;
        for (std::uint32_t p : pivots)
            if (std::uint32_t hi = std::uint32_t{1} << (31 - std::countl_zero(p)); x & hi) x ^= p;
        if (x) pivots.push_back(x);
    }
    return static_cast<int>(pivots.size());
}

// Incremental rank accumulator: keeps reduced pivot rows.
class GF2Span {
public:
    explicit GF2Span(int n) : n_(n) { check_dimension(n); }
    int rank() const noexcept { return static_cast<int>(pivots_.size()); }
    /// Reduce x against the span; nonzero remainder means x is new.
    std::uint32_t reduce(std::uint32_t x) const {
        for (std::uint32_t p : pivots_)
            if (x & top_bit(p)) x ^= p;
        return x;
    }
    bool try_add(std::uint32_t x) {
        x = reduce(x);
        if (!x) return false;
        pivots_.push_back(x);
        return true;
    }

private:
    static std::uint32_t top_bit(std::uint32_t p) { return std::uint32_t{1} << (31 - std::countl_zero(p)); }
    int n_;
    std::vector<std::uint32_t> pivots_;
};

/// n linearly independent vectors outside S, greedily by index order,
/// or nullopt when the complement does not span.
inline std::optional<std::vector<GF2Vector>> basis_in_complement(const BitSubset& S) {
    GF2Span span(S.n);
    std::vector<GF2Vector> basis;
    const std::uint64_t N = S.universe();
    for (std::uint64_t x = 1; x < N && static_cast<int>(basis.size()) < S.n; ++x) {
        if (S.bits.test(x)) continue;
        if (span.try_add(static_cast<std::uint32_t>(x))) basis.emplace_back(S.n, static_cast<std::uint32_t>(x));
    }
    if (static_cast<int>(basis.size()) < S.n) return std::nullopt;
    return basis;
}

/// Square matrix over F_2, one GF2Vector per row; y_i = <row_i, x>.
struct GF2Matrix {
    int n = 0;
    std::vector<GF2Vector> rows;

    GF2Matrix() = default;
    GF2Matrix(int dim, std::vector<GF2Vector> r) : n(dim), rows(std::move(r)) {
        check_dimension(dim);
        if (static_cast<int>(rows.size()) != dim) throw std::invalid_argument("GF2Matrix: need n rows");
        for (const auto& row : rows)
            if (row.n != dim) throw std::invalid_argument("GF2Matrix: row dimension mismatch");
    }
    static GF2Matrix identity(int dim) {
        std::vector<GF2Vector> rows;
        rows.reserve(dim);
        for (int i = 0; i < dim; ++i) rows.emplace_back(dim, std::uint32_t{1} << i);
        return {dim, std::move(rows)};
    }
    bool is_invertible() const { return rank(rows) == n; }
};

inline GF2Vector mul(const GF2Matrix& M, const GF2Vector& x) {
    if (M.n != x.n) throw std::invalid_argument("mul: dimension mismatch");
    std::uint32_t y = 0;
    for (int i = 0; i < M.n; ++i) y |= static_cast<std::uint32_t>(std::popcount(M.rows[i].bits & x.bits) & 1) << i;
    return {M.n, y};
}

/// Pointwise image {Mx : x in S}. M must be invertible.
inline BitSubset apply_linear(const GF2Matrix& M, const BitSubset& S) {
    if (M.n != S.n) throw std::invalid_argument("apply_linear: dimension mismatch");
    if (!M.is_invertible()) throw std::invalid_argument("apply_linear: matrix is singular");
    BitSubset out(S.n);
    S.bits.for_each([&](std::uint64_t x) {
        out.bits.set(mul(M, GF2Vector(S.n, static_cast<std::uint32_t>(x))).bits);
    });
    return out;
}

}  // namespace sumsetlab
