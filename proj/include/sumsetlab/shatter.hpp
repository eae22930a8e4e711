#pragma once

// Shattering machinery over families of subsets of [n] = {0, .., n-1}:
// the shattered-set family, the Pajor count inequality, down-closed
// families, the Harris-Kleitman/FKG correlation margin in exact rational
// arithmetic, and the Chernoff-Hoeffding weight-tail witness.

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumsetlab/bitmap.hpp"

namespace sumsetlab {

using BigRational = boost::multiprecision::cpp_rational;

inline constexpr int kShatterMaxGround = 20;

/// A family of subsets of [n], as a bitmap over P([n]): member i is the
/// subset whose characteristic vector is the binary expansion of i.
struct SetFamily {
    int n = 0;
    Bitmap members;

    explicit SetFamily(int ground) : n(ground), members(std::uint64_t{1} << ground) {
        if (ground < 1 || ground > kShatterMaxGround)
            throw std::invalid_argument("SetFamily: ground-set size must be in [1, 20]");
    }
    static SetFamily of(int ground, std::initializer_list<std::uint32_t> sets) {
        SetFamily f(ground);
        for (auto s : sets) f.members.set(s);
        return f;
    }
    static SetFamily power_set(int ground) {
        SetFamily f(ground);
        f.members = Bitmap(std::uint64_t{1} << ground, true);
        return f;
    }
    std::uint64_t size() const noexcept { return members.count(); }
    bool operator==(const SetFamily&) const = default;
};

namespace detail {

/// Trace index of m on J: the bits of m & J packed into |J| positions.
inline std::uint32_t trace_index(std::uint32_t m, std::uint32_t J) {
    std::uint32_t idx = 0;
    int out = 0;
    std::uint32_t j = J;
    while (j) {
        const int bit = std::countr_zero(j);
        j &= j - 1;
        idx |= ((m >> bit) & 1u) << out;
        ++out;
    }
    return idx;
}

/// Does F trace out all 2^|J| subsets of J?
inline bool shatters(const SetFamily& F, std::uint32_t J) {
    const int k = std::popcount(J);
    const std::uint64_t want = std::uint64_t{1} << k;
    if (F.size() < want) return false;
    Bitmap seen(want);
    std::uint64_t have = 0;
    bool all = false;
    F.members.for_each([&](std::uint64_t m) {
        if (all) return;
        const std::uint32_t idx = trace_index(static_cast<std::uint32_t>(m), J);
        if (!seen.test(idx)) {
            seen.set(idx);
            if (++have == want) all = true;
        }
    });
    return all;
}

}  // namespace detail

/// All J shattered by F, walked upward in popcount: a set is checked
/// only when all its facets are already shattered (shattering is closed
/// downward), so the output is down-closed by construction.
inline SetFamily shattered_family(const SetFamily& F) {
    SetFamily out(F.n);
    if (F.members.none()) return out;  // nothing shatters anything, not even the empty set
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << F.n) - 1);
    out.members.set(0);  // any nonempty family shatters the empty set
    // level-by-level scan by popcount
    for (int level = 1; level <= F.n; ++level) {
        std::uint32_t J = (std::uint32_t{1} << level) - 1;
        while (true) {
            bool candidate = true;
            std::uint32_t j = J;
            while (j) {
                const std::uint32_t facet = J & ~(j & (0 - j));
                j &= j - 1;
                if (!out.members.test(facet)) {
                    candidate = false;
                    break;
                }
            }
            if (candidate && detail::shatters(F, J)) out.members.set(J);
            // Gosper: next mask of the same popcount
            const std::uint32_t u = J & (0 - J);
            const std::uint32_t v = J + u;
            if ((v | J) > full || v == 0) break;
            J = v + (((v ^ J) / u) >> 2);
            if (J > full) break;
        }
    }
    return out;
}

struct PajorReport {
    std::uint64_t shattered_count = 0;
    std::uint64_t family_size = 0;
    bool ok = false;  // shattered_count >= family_size, always true by the lemma
};

inline PajorReport pajor_check(const SetFamily& F) {
    PajorReport r;
    r.family_size = F.size();
    r.shattered_count = shattered_family(F).size();
    r.ok = r.shattered_count >= r.family_size;
    return r;
}

/// Closed under taking subsets?
inline bool is_downclosed(const SetFamily& J) {
    bool ok = true;
    J.members.for_each([&](std::uint64_t m) {
        if (!ok) return;
        std::uint32_t bits = static_cast<std::uint32_t>(m);
        while (bits) {
            const std::uint32_t facet = static_cast<std::uint32_t>(m) & ~(bits & (0 - bits));
            bits &= bits - 1;
            if (!J.members.test(facet)) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

/// Downward closure (useful for generating FKG inputs).
inline SetFamily down_closure(const SetFamily& F) {
    SetFamily out = F;
    for (int bit = 0; bit < F.n; ++bit) {
        const std::uint64_t N = std::uint64_t{1} << F.n;
        for (std::uint64_t m = 0; m < N; ++m)
            if ((m >> bit & 1) && out.members.test(m)) out.members.set(m & ~(std::uint64_t{1} << bit));
    }
    return out;
}

/// Exact Harris-Kleitman margin |J&K|/2^n - (|J|/2^n)(|K|/2^n), which the
/// correlation inequality keeps nonnegative for down-closed families.
inline BigRational fkg_margin(const SetFamily& J, const SetFamily& K) {
    if (J.n != K.n) throw std::invalid_argument("fkg_margin: ground sets differ");
    if (!is_downclosed(J) || !is_downclosed(K))
        throw std::invalid_argument("fkg_margin: both families must be down-closed");
    const BigRational N(std::uint64_t{1} << J.n);
    const BigRational inter((J.members & K.members).count());
    const BigRational j(J.size()), k(K.size());
    return inter / N - (j / N) * (k / N);
}

/// The weight-tail witness: when |J| > gamma 2^n, some member must have
/// size above n/2 - sqrt(ln(1/gamma)/2) sqrt(n). Returns the largest
/// member (smallest index on ties) if it clears the bound.
inline std::optional<std::uint32_t> weight_tail_witness(const SetFamily& J, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("weight_tail_witness: gamma in (0,1)");
    if (J.members.none()) return std::nullopt;
    std::uint32_t best = 0;
    int best_size = -1;
    J.members.for_each([&](std::uint64_t m) {
        const int sz = std::popcount(m);
        if (sz > best_size) {
            best_size = sz;
            best = static_cast<std::uint32_t>(m);
        }
    });
    const double bound =
        0.5 * J.n - std::sqrt(0.5 * std::log(1.0 / gamma)) * std::sqrt(static_cast<double>(J.n));
    if (static_cast<double>(best_size) > bound) return best;
    return std::nullopt;
}

}  // namespace sumsetlab
