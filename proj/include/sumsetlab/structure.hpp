#pragma once

// Recognizers and explicit constructions: membership in H_n and H'_n,
// budgeted exact sumset recognition with certificates, the hyperplane
// completion construction, the lower-bound lift, and the quotient view
// of a hyperplane's coset.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "sumsetlab/gf2.hpp"

namespace sumsetlab {

/// Smallest-index nonzero v with v-perp inside S, if any.
inline std::optional<GF2Vector> find_hyperplane_inside(const BitSubset& S) {
    const std::uint32_t N = static_cast<std::uint32_t>(S.universe());
    for (std::uint32_t v = 1; v < N; ++v) {
        GF2Vector vec(S.n, v);
        if (hyperplane(vec).bits.is_subset_of(S.bits)) return vec;
    }
    return std::nullopt;
}

/// Smallest-index nonzero v whose full off-hyperplane coset lies in S.
inline std::optional<GF2Vector> find_hyperplane_complement_inside(const BitSubset& S) {
    const std::uint32_t N = static_cast<std::uint32_t>(S.universe());
    for (std::uint32_t v = 1; v < N; ++v) {
        GF2Vector vec(S.n, v);
        if (hyperplane(vec).bits.complement().is_subset_of(S.bits)) return vec;
    }
    return std::nullopt;
}

/// Case split on the rank of the complement of S: either the complement
/// spans (carrying the greedy basis) or some v pins every <x,v> = 1
/// vector inside S (carrying the smallest such v).
struct ComplementNotFullRank {
    GF2Vector v;
};
struct ComplementFullRank {
    std::vector<GF2Vector> basis;
};
using ComplementRankCase = std::variant<ComplementNotFullRank, ComplementFullRank>;

inline ComplementRankCase complement_rank_case(const BitSubset& S) {
    if (auto basis = basis_in_complement(S)) return ComplementFullRank{std::move(*basis)};
    // complement does not span: find the smallest nonzero v orthogonal to
    // all of it, i.e. with the whole <x,v> = 1 coset inside S
    GF2Span span(S.n);
    std::vector<std::uint32_t> comp_basis;
    const std::uint64_t N = S.universe();
    for (std::uint64_t x = 1; x < N; ++x)
        if (!S.bits.test(x) && span.try_add(static_cast<std::uint32_t>(x)))
            comp_basis.push_back(static_cast<std::uint32_t>(x));
    for (std::uint32_t v = 1; v < N; ++v) {
        bool ok = true;
        for (std::uint32_t b : comp_basis)
            if (std::popcount(b & v) & 1) {
                ok = false;
                break;
            }
        if (ok) return ComplementNotFullRank{GF2Vector(S.n, v)};
    }
    throw std::logic_error("complement_rank_case: no annihilating v despite rank deficit");
}

enum class Decision { Yes, No, Unknown };

struct RecognitionResult {
    Decision decision = Decision::Unknown;
    std::optional<BitSubset> certificate;  // A with A + A = S when Yes
    std::uint64_t nodes_explored = 0;
    std::uint64_t budget = 0;
};

inline constexpr std::uint64_t kDefaultRecognitionBudget = 100'000'000;

/// Is S a sumset? Branch-and-prune over anchored candidates A (0 in A and
/// A inside S, valid for Inclusive mode by translation invariance); any
/// partial whose sumset already leaves S is cut. Yes carries the found
/// certificate; No means the space was exhausted; Unknown means the node
/// budget ran out first.
inline RecognitionResult is_sumset(const BitSubset& S, SumMode mode = SumMode::Inclusive,
                                   std::uint64_t budget = kDefaultRecognitionBudget) {
    if (mode != SumMode::Distinct && mode != SumMode::Inclusive)
        throw std::invalid_argument("is_sumset: bad mode");
    if (mode == SumMode::Distinct)
        throw std::invalid_argument("is_sumset: Distinct mode is out of scope (no anchoring argument)");
    RecognitionResult result;
    result.budget = budget;

    if (S.bits.none()) {
        result.decision = Decision::Yes;
        result.certificate = BitSubset(S.n);  // A = empty set
        return result;
    }
    if (!S.bits.test(0)) {
        result.decision = Decision::No;  // every nonempty inclusive sumset contains 0
        return result;
    }

    // cheap certificate first: a set closed enough to satisfy S + S = S
    if (const BitSubset self = sumset(S, SumMode::Inclusive); self == S) {
        result.decision = Decision::Yes;
        result.certificate = S;
        result.nodes_explored = 1;
        return result;
    }

    std::vector<std::uint32_t> candidates;
    S.bits.for_each([&](std::uint64_t x) {
        if (x != 0) candidates.push_back(static_cast<std::uint32_t>(x));
    });

    // include-first depth-first search over candidate ranks, with an
    // explicit stack (include chains can run as deep as |S|)
    struct Frame {
        Bitmap sum;             // sumset of the members chosen so far
        std::size_t next;       // next candidate rank to try
        bool added_member;
    };
    BitSubset A(S.n);
    A.bits.set(0);
    std::vector<std::uint32_t> members{0};
    std::vector<Frame> stack;
    Bitmap origin(S.universe());
    origin.set(0);  // sumset of A = {0}
    stack.push_back({std::move(origin), 0, false});
    result.nodes_explored = 1;

    while (!stack.empty()) {
        Frame& f = stack.back();
        bool descended = false;
        for (std::size_t i = f.next; i < candidates.size(); ++i) {
            const std::uint32_t x = candidates[i];
            A.bits.set(x);
            Bitmap grown = f.sum | xor_translate(A, GF2Vector(S.n, x)).bits;
            if (!grown.is_subset_of(S.bits)) {
                A.bits.reset(x);
                continue;
            }
            f.next = i + 1;
            members.push_back(x);
            if (++result.nodes_explored > budget) {
                result.decision = Decision::Unknown;
                return result;
            }
            if (grown == S.bits) {
                result.decision = Decision::Yes;
                result.certificate = A;
                return result;
            }
            stack.push_back({std::move(grown), i + 1, true});
            descended = true;
            break;
        }
        if (!descended) {
            if (f.added_member) {
                A.bits.reset(members.back());
                members.pop_back();
            }
            stack.pop_back();
        }
    }
    result.decision = Decision::No;
    return result;
}

struct CompletionResult {
    GF2Vector v;      // the hyperplane witness used
    BitSubset A;      // {0} union (S \ v-perp)
    BitSubset missing;  // part of v-perp not reached by A + A
    bool success = false;
};

/// The lower-bound construction: for S containing some v-perp, test
/// whether A = {0} union (S \ v-perp) already satisfies A + A = S. The
/// off-hyperplane part always matches; failure is confined to v-perp.
inline CompletionResult hyperplane_completion(const BitSubset& S) {
    const auto v = find_hyperplane_inside(S);
    if (!v) throw std::invalid_argument("hyperplane_completion: S contains no hyperplane");
    const BitSubset vp = hyperplane(*v);

    CompletionResult r{*v, BitSubset(S.n), BitSubset(S.n), false};
    r.A.bits = S.bits - vp.bits;
    r.A.bits.set(0);
    const BitSubset sum = sumset(r.A, SumMode::Inclusive);
    if (!((sum.bits - vp.bits) == (S.bits - vp.bits)))
        throw std::logic_error("hyperplane_completion: off-hyperplane part mismatch");
    r.missing.bits = vp.bits - sum.bits;
    r.success = r.missing.bits.none();
    return r;
}

/// Lift A in F_2^(n-1) to A' = {0} union {(1, a) : a in A} in F_2^n,
/// with coordinate 0 of the large space as the distinguished bit.
inline BitSubset lift_lower_bound(const BitSubset& A) {
    if (A.n + 1 > kMaxDimension) throw std::invalid_argument("lift_lower_bound: lifted dimension exceeds cap");
    BitSubset out(A.n + 1);
    out.bits.set(0);
    A.bits.for_each([&](std::uint64_t a) { out.bits.set(2 * a + 1); });
    return out;
}

/// The off-hyperplane part of S, shifted into v-perp by the first vector
/// u outside v-perp (index order) and re-indexed into F_2^(n-1) through
/// the greedy basis of v-perp. The shift leaves the sumset unchanged.
inline BitSubset quotient_shift(const BitSubset& S, const GF2Vector& v) {
    if (v.is_zero()) throw std::invalid_argument("quotient_shift: v must be nonzero");
    if (v.n != S.n) throw std::invalid_argument("quotient_shift: dimension mismatch");
    if (S.n < 2) throw std::invalid_argument("quotient_shift: needs n >= 2");
    const BitSubset vp = hyperplane(v);
    BitSubset off(S.n);
    off.bits = S.bits - vp.bits;
    BitSubset out(S.n - 1);
    if (off.bits.none()) return out;

    const std::uint32_t u = static_cast<std::uint32_t>(vp.bits.complement().first());
    const BitSubset shifted = xor_translate(off, GF2Vector(S.n, u));

    // greedy basis of v-perp, then coordinates by elimination
    std::vector<std::uint32_t> basis;
    GF2Span span(S.n);
    vp.bits.for_each([&](std::uint64_t x) {
        if (static_cast<int>(basis.size()) < S.n - 1 && x != 0 && span.try_add(static_cast<std::uint32_t>(x)))
            basis.push_back(static_cast<std::uint32_t>(x));
    });
    if (static_cast<int>(basis.size()) != S.n - 1)
        throw std::logic_error("quotient_shift: hyperplane basis extraction failed");

    // reduce the basis once, tagging each row with its combination of the
    // original basis vectors; solving a member is then one ordered pass
    std::vector<std::uint32_t> rows = basis;
    std::vector<std::uint32_t> tags(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) tags[i] = std::uint32_t{1} << i;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const std::uint32_t hb = std::uint32_t{1} << (31 - std::countl_zero(rows[j]));
            if (rows[i] & hb) {
                rows[i] ^= rows[j];
                tags[i] ^= tags[j];
            }
        }
    }
    shifted.bits.for_each([&](std::uint64_t x) {
        std::uint32_t rem = static_cast<std::uint32_t>(x);
        std::uint32_t coords = 0;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            const std::uint32_t hb = std::uint32_t{1} << (31 - std::countl_zero(rows[j]));
            if (rem & hb) {
                rem ^= rows[j];
                coords ^= tags[j];
            }
        }
        if (rem != 0) throw std::logic_error("quotient_shift: member outside span of v-perp");
        out.bits.set(coords);
    });
    return out;
}

}  // namespace sumsetlab
