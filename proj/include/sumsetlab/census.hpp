#pragma once

// Exact censuses of sumsets and hyperplane-containing families in F_2^n,
// plus the bound calculators that accompany them. The enumeration core
// scans the 2^(2^n - 1) subsets anchored at 0 (translation invariance of
// A + A covers the rest) and deduplicates through a flat presence bitmap
// of 2^(2^n) bits, so n = 5 (512 MiB per bitmap) is the hard ceiling.

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumsetlab/gf2.hpp"

namespace sumsetlab {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an operation would exceed its documented resource budget.
/// The CLI maps it to exit code 65.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kCensusMaxDimension = 5;

struct CensusResult {
    int n = 0;
    SumMode mode = SumMode::Inclusive;
    BigInt count_sumsets;
    BigInt count_hyperplane_family;
    BigInt count_intersection;
    BigInt count_sumsets_only;      // |S_n \ H_n|
    BigInt count_hyperplane_only;   // |H_n \ S_n|
    BigInt asymptotic_reference;    // (2^n - 1) * 2^(2^(n-1))
    bool has_cross = false;
    double elapsed_seconds = 0.0;
    int workers = 1;
};

/// (2^n - 1) * 2^(2^(n-1)), the reference asymptotic for |S_n| and |H_n|.
inline BigInt asymptotic_reference(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("asymptotic_reference: n must be in [1, 64]");
    if (n > 30)
        throw ResourceLimitError("asymptotic_reference: 2^(2^" + std::to_string(n - 1) +
                                 ") does not fit in memory at desk scale");
    BigInt r = (BigInt(1) << n) - 1;
    return r << (std::uint64_t{1} << (n - 1));
}

/// 2^n * 3^(2^(n-1)), the cap on generators with an incomplete sumset.
inline BigInt incomplete_generator_bound(int n) {
    check_dimension(n);
    BigInt r = 1;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << (n - 1)); ++i) r *= 3;
    return r << n;
}

namespace detail {

inline void check_census_dimension(int n) {
    if (n < 1) throw std::invalid_argument("census: n must be >= 1");
    if (n > kCensusMaxDimension)
        throw ResourceLimitError(
            "census: n = " + std::to_string(n) + " needs a 2^(2^" + std::to_string(n) +
            ")-bit dedup bitmap; n <= 5 is the desk-scale frontier");
}

/// Honors SUMSETLAB_MAX_MEM_GB when set.
inline void check_memory_budget(std::uint64_t bytes) {
    const char* env = std::getenv("SUMSETLAB_MAX_MEM_GB");
    if (!env) return;
    const double limit_gb = std::strtod(env, nullptr);
    if (limit_gb <= 0) return;
    if (static_cast<double>(bytes) > limit_gb * (1ull << 30))
        throw ResourceLimitError("census: needs " + std::to_string(bytes >> 20) +
                                 " MiB, above SUMSETLAB_MAX_MEM_GB=" + std::string(env));
}

// Presence bitmap over all 2^N subsets of F_2^n, written concurrently.
// Setting bits through fetch_or is order-free, so the final bitmap (and
// every count derived from it) is identical for any worker count.
class PresenceBitmap {
public:
    explicit PresenceBitmap(int n) {
        const std::uint64_t bits = std::uint64_t{1} << (std::uint64_t{1} << n);
        nwords_ = bits >= 64 ? bits / 64 : 1;
        data_ = std::make_unique<std::atomic<std::uint64_t>[]>(nwords_);
        for (std::uint64_t i = 0; i < nwords_; ++i) data_[i].store(0, std::memory_order_relaxed);
    }
    void mark(std::uint32_t subset_mask) {
        data_[subset_mask >> 6].fetch_or(std::uint64_t{1} << (subset_mask & 63), std::memory_order_relaxed);
    }
    void mark_serial(std::uint32_t subset_mask) {
        auto& w = data_[subset_mask >> 6];
        w.store(w.load(std::memory_order_relaxed) | (std::uint64_t{1} << (subset_mask & 63)),
                std::memory_order_relaxed);
    }
    std::uint64_t word(std::uint64_t i) const { return data_[i].load(std::memory_order_relaxed); }
    std::uint64_t word_count() const { return nwords_; }
    std::uint64_t popcount() const {
        std::uint64_t c = 0;
        for (std::uint64_t i = 0; i < nwords_; ++i) c += std::popcount(word(i));
        return c;
    }
    static std::uint64_t bytes_needed(int n) {
        const std::uint64_t bits = std::uint64_t{1} << (std::uint64_t{1} << n);
        return bits >= 64 ? bits / 8 : 8;
    }

private:
    std::uint64_t nwords_ = 0;
    std::unique_ptr<std::atomic<std::uint64_t>[]> data_;
};

// Depth-first scan of the anchored generator sets. Every node of the
// tree is one set A (0 in A, extended by strictly larger elements), and
// its sumset is maintained incrementally: adding x contributes exactly
// x + A as one bitmap permutation.
template <class Record>
void grow_anchored(std::uint32_t A, std::uint32_t s, int next_elem, int num_elems, Record&& rec) {
    rec(s);
    for (int j = next_elem; j < num_elems; ++j) {
        const std::uint32_t A2 = A | (std::uint32_t{1} << j);
        grow_anchored(A2, s | static_cast<std::uint32_t>(xor_permute_word(A2, static_cast<std::uint32_t>(j))),
                      j + 1, num_elems, rec);
    }
}

inline std::uint32_t sumset_word32(std::uint32_t mask) {
    std::uint32_t s = 0, m = mask;
    while (m) {
        const std::uint32_t a = static_cast<std::uint32_t>(std::countr_zero(m));
        m &= m - 1;
        s |= static_cast<std::uint32_t>(xor_permute_word(mask, a));
    }
    return s;
}

// Runs the anchored scan for all 2^(N-1) generator sets, split into
// contiguous prefix-pattern tasks pulled by the workers.
inline void run_anchored_scan(int n, SumMode mode, int workers, PresenceBitmap& presence) {
    const int N = 1 << n;
    const int prefix = std::min(8, N - 1);  // elements 1..prefix fixed per task
    const std::uint32_t tasks = std::uint32_t{1} << prefix;
    std::atomic<std::uint32_t> next_task{0};
    const std::uint32_t drop_origin = (mode == SumMode::Distinct) ? ~std::uint32_t{1} : ~std::uint32_t{0};

    auto work = [&] {
        while (true) {
            const std::uint32_t t = next_task.fetch_add(1, std::memory_order_relaxed);
            if (t >= tasks) return;
            const std::uint32_t A = 1u | (t << 1);
            grow_anchored(A, sumset_word32(A), prefix + 1, N,
                          [&](std::uint32_t s) { presence.mark(s & drop_origin); });
        }
    };

    presence.mark(0);  // the empty generator set
    if (workers <= 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
}

// Marks every superset of every hyperplane: for each of the 2^n - 1
// hyperplane masks, walk the submasks of its complement.
inline void mark_hyperplane_family(int n, PresenceBitmap& presence) {
    const std::uint32_t N = std::uint32_t{1} << n;
    for (std::uint32_t v = 1; v < N; ++v) {
        std::uint32_t h = 0;
        for (std::uint32_t x = 0; x < N; ++x)
            if ((std::popcount(x & v) & 1) == 0) h |= std::uint32_t{1} << x;
        const std::uint32_t free_mask = ~h & (N == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << N) - 1));
        std::uint32_t sub = free_mask;
        while (true) {
            presence.mark_serial(h | sub);
            if (sub == 0) break;
            sub = (sub - 1) & free_mask;
        }
    }
}

}  // namespace detail

/// Exact |{A + A : A subset of F_2^n}| for the given mode.
inline CensusResult census_sumsets(int n, SumMode mode = SumMode::Inclusive, int workers = 1) {
    detail::check_census_dimension(n);
    if (workers < 1) workers = 1;
    detail::check_memory_budget(detail::PresenceBitmap::bytes_needed(n));
    const auto t0 = std::chrono::steady_clock::now();
    detail::PresenceBitmap presence(n);
    detail::run_anchored_scan(n, mode, workers, presence);
    CensusResult r;
    r.n = n;
    r.mode = mode;
    r.workers = workers;
    r.count_sumsets = presence.popcount();
    r.asymptotic_reference = asymptotic_reference(n);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// Exact |H_n|: subsets containing v-perp for some nonzero v.
inline BigInt census_hyperplane_family(int n) {
    detail::check_census_dimension(n);
    detail::check_memory_budget(detail::PresenceBitmap::bytes_needed(n));
    detail::PresenceBitmap presence(n);
    detail::mark_hyperplane_family(n, presence);
    return BigInt(presence.popcount());
}

/// Both families materialized side by side: counts of S_n, H_n, their
/// intersection and differences.
inline CensusResult census_cross(int n, SumMode mode = SumMode::Inclusive, int workers = 1) {
    detail::check_census_dimension(n);
    if (mode != SumMode::Inclusive)
        throw std::invalid_argument("census_cross: the H_n comparison is defined for Inclusive mode");
    if (workers < 1) workers = 1;
    detail::check_memory_budget(2 * detail::PresenceBitmap::bytes_needed(n));
    const auto t0 = std::chrono::steady_clock::now();
    detail::PresenceBitmap sum_presence(n);
    detail::run_anchored_scan(n, mode, workers, sum_presence);
    detail::PresenceBitmap hyp_presence(n);
    detail::mark_hyperplane_family(n, hyp_presence);

    std::uint64_t cs = 0, ch = 0, ci = 0;
    for (std::uint64_t w = 0; w < sum_presence.word_count(); ++w) {
        const std::uint64_t a = sum_presence.word(w);
        const std::uint64_t b = hyp_presence.word(w);
        cs += std::popcount(a);
        ch += std::popcount(b);
        ci += std::popcount(a & b);
    }
    CensusResult r;
    r.n = n;
    r.mode = mode;
    r.workers = workers;
    r.count_sumsets = cs;
    r.count_hyperplane_family = ch;
    r.count_intersection = ci;
    r.count_sumsets_only = cs - ci;
    r.count_hyperplane_only = ch - ci;
    r.asymptotic_reference = asymptotic_reference(n);
    r.has_cross = true;
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// |H_n| once more, by inclusion-exclusion over the nonzero normals.
/// The union size |U_{v in T} v-perp| comes from the rank of T and the
/// consistency of the affine system <x, v> = 1 for all v in T.
inline BigInt hn_inclusion_exclusion(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("hn_inclusion_exclusion: 2^(2^n - 1) terms; n <= 4 only");
    const std::uint32_t K = (std::uint32_t{1} << n) - 1;  // nonzero vectors
    const std::uint64_t N = std::uint64_t{1} << n;
    BigInt total = 0;
    for (std::uint32_t T = 1; T < (std::uint32_t{1} << K); ++T) {
        // eliminate augmented rows (v << 1) | 1; a pivot's top bit always
        // lies in the v part, so reduction can key on the full row
        std::uint32_t pivots[5] = {0, 0, 0, 0, 0};
        int rank_v = 0;
        bool consistent = true;
        for (std::uint32_t i = 0; i < K; ++i) {
            if (!((T >> i) & 1)) continue;
            std::uint32_t row = ((i + 1) << 1) | 1;
            for (int p = 0; p < rank_v; ++p) {
                const std::uint32_t hb = std::uint32_t{1} << (31 - std::countl_zero(pivots[p]));
                if (row & hb) row ^= pivots[p];
            }
            if (row == 1) {
                consistent = false;
                break;
            }
            if (row > 1) pivots[rank_v++] = row;
        }
        std::uint64_t union_size = N - (consistent ? (N >> rank_v) : 0);
        BigInt term = BigInt(1) << (N - union_size);
        if (std::popcount(T) & 1)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// Count of A with A + A != F_2^n (Inclusive), by full scan.
inline BigInt count_incomplete_generators(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("count_incomplete_generators: full 2^(2^n) scan; n <= 4 only");
    const int N = 1 << n;
    const std::uint32_t full = (N == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << N) - 1);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask)
        if (detail::sumset_word32(static_cast<std::uint32_t>(mask)) != full) ++count;
    return BigInt(count);
}

/// Prop. lower bound: any computed census must reach 2^(2^(n-1)).
inline bool easylower_bound_check(const CensusResult& census) {
    return census.count_sumsets >= (BigInt(1) << (std::uint64_t{1} << (census.n - 1)));
}

/// Binary entropy H(x) = -x log2 x - (1-x) log2 (1-x).
inline double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("binary_entropy: x must be in [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

struct BoundsReport {
    std::uint64_t N = 0;
    std::uint64_t s = 0;
    BigInt k;            // floor(N / (2 s ln(eN/s))), clamped at 0
    BigInt count_bound;  // 2^(N - floor(s/8)) + ceil-power bound on e^(N/2)
    bool out_of_regime = false;
    bool small_s_warning = false;  // s < 64 (log2 N)^2
};

/// Union-count bound arithmetic: k sumsets of size-< s sets cover at most
/// 2^(N - s/8) + e^(N/2) subsets. Exponents round outward so the reported
/// bound is never under-stated.
inline BoundsReport union_count_bound(std::uint64_t N, std::uint64_t s) {
    if (N < 2 || N > (std::uint64_t{1} << 24)) throw std::invalid_argument("union_count_bound: N must be in [2, 2^24]");
    if (s == 0) throw std::invalid_argument("union_count_bound: s must be positive");
    if (s == N) throw std::invalid_argument("union_count_bound: degenerate s = N");
    BoundsReport r;
    r.N = N;
    r.s = s;
    const long double log2N = std::log2(static_cast<long double>(N));
    r.small_s_warning = static_cast<long double>(s) < 64.0L * log2N * log2N;

    const long double ln_term = 1.0L + std::log(static_cast<long double>(N) / static_cast<long double>(s));
    const long double denom = 2.0L * static_cast<long double>(s) * ln_term;
    std::uint64_t k = 0;
    if (denom > 0.0L) k = static_cast<std::uint64_t>(std::floor(static_cast<long double>(N) / denom));
    r.k = k;
    r.out_of_regime = r.small_s_warning || k == 0;

    const std::uint64_t exp_main = (s / 8 >= N) ? 0 : N - s / 8;  // >= N - s/8, since s/8 floors
    // e^(N/2) <= 2^ceil((N/2) log2 e); nudge the product upward first
    const long double kLog2E = 1.44269504088896340737L;
    long double prod = (static_cast<long double>(N) / 2.0L) * kLog2E;
    prod = std::nextafter(prod, std::numeric_limits<long double>::infinity());
    const std::uint64_t exp_e = static_cast<std::uint64_t>(std::ceil(prod));
    r.count_bound = (BigInt(1) << exp_main) + (BigInt(1) << exp_e);
    return r;
}

}  // namespace sumsetlab
