#pragma once

// Finite abelian groups as explicit products of cyclic groups, their
// subsets, Cayley sum graphs, and the proper edge coloring of K_N by
// x + y. Elements are mixed-radix indices into the moduli list; F_2^n is
// the special case where every modulus is 2 and the index coincides with
// the gf2 encoding.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sumsetlab/bitmap.hpp"
#include "sumsetlab/gf2.hpp"

namespace sumsetlab {

class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
        if (moduli_.empty()) throw std::invalid_argument("AbelianGroup: empty moduli list");
        order_ = 1;
        strides_.reserve(moduli_.size());
        for (std::uint32_t m : moduli_) {
            if (m < 2) throw std::invalid_argument("AbelianGroup: every modulus must be >= 2");
            strides_.push_back(order_);
            if (order_ > (std::uint64_t{1} << 32) / m)
                throw std::invalid_argument("AbelianGroup: order too large");
            order_ *= m;
        }
    }

    static AbelianGroup cyclic(std::uint32_t m) { return AbelianGroup({m}); }
    static AbelianGroup f2(int n) {
        check_dimension(n);
        return AbelianGroup(std::vector<std::uint32_t>(n, 2));
    }

    std::uint64_t order() const noexcept { return order_; }
    const std::vector<std::uint32_t>& moduli() const noexcept { return moduli_; }
    bool is_f2() const noexcept {
        return std::all_of(moduli_.begin(), moduli_.end(), [](std::uint32_t m) { return m == 2; });
    }

    void check_element(std::uint64_t a) const {
        if (a >= order_) throw std::out_of_range("group element index out of range");
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        check_element(a);
        check_element(b);
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            const std::uint64_t m = moduli_[i];
            const std::uint64_t ca = (a / strides_[i]) % m;
            const std::uint64_t cb = (b / strides_[i]) % m;
            std::uint64_t c = ca + cb;
            if (c >= m) c -= m;
            out += c * strides_[i];
        }
        return out;
    }

    std::uint64_t neg(std::uint64_t a) const {
        check_element(a);
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            const std::uint64_t m = moduli_[i];
            const std::uint64_t ca = (a / strides_[i]) % m;
            out += (ca == 0 ? 0 : m - ca) * strides_[i];
        }
        return out;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    std::vector<std::uint32_t> decode(std::uint64_t a) const {
        check_element(a);
        std::vector<std::uint32_t> t(moduli_.size());
        for (std::size_t i = 0; i < moduli_.size(); ++i) t[i] = static_cast<std::uint32_t>((a / strides_[i]) % moduli_[i]);
        return t;
    }
    std::uint64_t encode(const std::vector<std::uint32_t>& t) const {
        if (t.size() != moduli_.size()) throw std::invalid_argument("encode: tuple arity mismatch");
        std::uint64_t a = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] >= moduli_[i]) throw std::out_of_range("encode: component out of range");
            a += std::uint64_t{t[i]} * strides_[i];
        }
        return a;
    }

    bool operator==(const AbelianGroup& o) const { return moduli_ == o.moduli_; }

private:
    std::vector<std::uint32_t> moduli_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t order_ = 0;
};

/// A subset of a group, as an order-length bitmap.
struct GroupSubset {
    AbelianGroup group;
    Bitmap bits;

    explicit GroupSubset(AbelianGroup g) : group(std::move(g)), bits(group.order()) {}
    GroupSubset(AbelianGroup g, Bitmap b) : group(std::move(g)), bits(std::move(b)) {
        if (bits.size() != group.order()) throw std::invalid_argument("GroupSubset: mask length != group order");
    }
    static GroupSubset of(AbelianGroup g, std::initializer_list<std::uint64_t> idx) {
        GroupSubset s(std::move(g));
        for (auto i : idx) s.bits.set(i);
        return s;
    }
    std::uint64_t count() const noexcept { return bits.count(); }
    bool contains(std::uint64_t a) const { return bits.test(a); }
};

/// Colors of the K_N edge coloring are group elements; same layout.
using ColorSet = GroupSubset;

inline void check_same_group(const GroupSubset& a, const GroupSubset& b) {
    if (!(a.group == b.group)) throw std::invalid_argument("operands belong to different groups");
}

/// Edge test of the Cayley sum graph Gamma_G(D): x != y with x + y in D.
inline bool cayley_sum_adjacent(const AbelianGroup& G, const GroupSubset& D, std::uint64_t x, std::uint64_t y) {
    if (x == y) return false;
    return D.bits.test(G.add(x, y));
}

/// True iff no two distinct members of A sum into D.
inline bool is_independent_in_cayley(const AbelianGroup& G, const GroupSubset& A, const GroupSubset& D) {
    const auto members = A.bits.to_indices();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (D.bits.test(G.add(members[i], members[j]))) return false;
    return true;
}

/// Pairwise sums of A. Distinct mode takes unordered pairs of distinct
/// elements only; Inclusive also adds every a + a.
inline GroupSubset sumset_g(const AbelianGroup& G, const GroupSubset& A, SumMode mode) {
    GroupSubset out(G);
    const auto members = A.bits.to_indices();
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (mode == SumMode::Inclusive) out.bits.set(G.add(members[i], members[i]));
        for (std::size_t j = i + 1; j < members.size(); ++j) out.bits.set(G.add(members[i], members[j]));
    }
    return out;
}

/// Color of edge {a, b} in the proper coloring of K_N: the sum a + b.
inline std::uint64_t edge_color(const AbelianGroup& G, std::uint64_t a, std::uint64_t b) {
    if (a == b) throw std::invalid_argument("edge_color: a and b must be distinct");
    return G.add(a, b);
}

/// All pairwise edge colors distinct? Vertices must be distinct.
inline bool is_rainbow_clique(const AbelianGroup& G, const std::vector<std::uint64_t>& V) {
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = i + 1; j < V.size(); ++j)
            if (V[i] == V[j]) throw std::invalid_argument("is_rainbow_clique: duplicate vertices");
    Bitmap seen(G.order());
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = i + 1; j < V.size(); ++j) {
            const std::uint64_t c = G.add(V[i], V[j]);
            if (seen.test(c)) return false;
            seen.set(c);
        }
    return true;
}

struct ColorFractionReport {
    std::vector<std::uint64_t> counts;  // multiplicity of each color over K_N
    std::uint64_t min_count = 0;        // over all colors
    std::uint64_t max_count = 0;
    std::uint64_t min_realized = 0;     // over colors with count > 0
};

/// Multiplicity of every color over the C(N,2) edges of K_N.
inline ColorFractionReport color_fraction_check(const AbelianGroup& G) {
    const std::uint64_t N = G.order();
    ColorFractionReport r;
    r.counts.assign(N, 0);
    for (std::uint64_t a = 0; a < N; ++a)
        for (std::uint64_t b = a + 1; b < N; ++b) ++r.counts[G.add(a, b)];
    r.min_count = *std::min_element(r.counts.begin(), r.counts.end());
    r.max_count = *std::max_element(r.counts.begin(), r.counts.end());
    r.min_realized = r.max_count;
    for (std::uint64_t c : r.counts)
        if (c > 0) r.min_realized = std::min(r.min_realized, c);
    return r;
}

/// Colors that appear on at least one edge of K_N, i.e. c with some
/// a != c - a. In F_2^n this is everything but 0; in Z_N (N > 2) all of G.
inline Bitmap realizable_colors(const AbelianGroup& G) {
    const std::uint64_t N = G.order();
    Bitmap out(N);
    for (std::uint64_t c = 0; c < N; ++c)
        for (std::uint64_t a = 0; a < N; ++a)
            if (G.sub(c, a) != a) {
                out.set(c);
                break;
            }
    return out;
}

/// F_2^n bridge: the index encodings agree bit for bit.
inline GroupSubset to_group_subset(const AbelianGroup& G, const BitSubset& S) {
    if (!G.is_f2() || G.order() != S.universe())
        throw std::invalid_argument("to_group_subset: group is not the matching F_2^n");
    return {G, S.bits};
}
inline BitSubset to_bit_subset(const GroupSubset& S) {
    if (!S.group.is_f2()) throw std::invalid_argument("to_bit_subset: group is not an F_2^n");
    BitSubset out(static_cast<int>(S.group.moduli().size()));
    out.bits = S.bits;
    return out;
}

}  // namespace sumsetlab
