#pragma once

// Decomposition algorithms over the K_N edge coloring by sums: the
// greedy many-sums subset, exact maximum sumset-inside-S (a clique search
// on the Cayley sum graph), the greedy union-of-sumsets cover with its
// counting lower bound, and the intersection-of-sumsets representation
// over F_2^n. Sums are taken in Distinct mode throughout the cover path:
// colors are sums of distinct elements.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sumsetlab/census.hpp"
#include "sumsetlab/gf2.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/rng.hpp"

namespace sumsetlab {

inline constexpr std::uint64_t kMaxCliqueOrderCap = 4096;

struct ManySumsWitness {
    GroupSubset A;
    GroupSubset A_prime;
    std::uint64_t sums = 0;  // |A' + A'| in Distinct mode
};

/// The many-sums greedy: start from the smallest element, and keep adding
/// the smallest x whose fresh sums (A' + x) \ (A' + A') number at least
/// (|A'| + 1) / 2. The stop size is guaranteed to reach sqrt(|A|), and
/// the accumulated sums reach |A'|^2 / 4 from size 2 on.
inline ManySumsWitness greedy_many_sums(const AbelianGroup& G, const GroupSubset& A) {
    if (A.bits.none()) throw std::invalid_argument("greedy_many_sums: A must be nonempty");
    const auto members = A.bits.to_indices();

    std::vector<std::uint64_t> chosen{members.front()};
    std::vector<bool> in_prime(members.size(), false);
    in_prime[0] = true;
    Bitmap sums(G.order());
    std::uint64_t sums_count = 0;

    bool added = true;
    while (added) {
        added = false;
        for (std::size_t i = 1; i < members.size(); ++i) {
            if (in_prime[i]) continue;
            const std::uint64_t x = members[i];
            std::uint64_t gain = 0;
            for (std::uint64_t a : chosen)
                if (!sums.test(G.add(a, x))) ++gain;
            if (2 * gain >= chosen.size() + 1) {
                for (std::uint64_t a : chosen) sums.set(G.add(a, x));
                sums_count += gain;
                chosen.push_back(x);
                in_prime[i] = true;
                added = true;
                break;
            }
        }
    }

    ManySumsWitness w{A, GroupSubset(G), sums_count};
    for (std::uint64_t a : chosen) w.A_prime.bits.set(a);
    return w;
}

namespace detail {

/// Adjacency of the Cayley sum graph x ~ y iff x + y in S (x != y), as
/// flat bitset rows. In Inclusive mode membership additionally requires
/// a + a in S, which deletes the other vertices outright.
struct SumGraph {
    std::uint64_t N = 0;
    std::size_t W = 0;
    std::vector<std::uint64_t> adj;    // N rows of W words
    std::vector<std::uint64_t> alive;  // vertex mask (W words)

    SumGraph(const AbelianGroup& G, const ColorSet& S, SumMode mode) {
        N = G.order();
        W = (N + 63) / 64;
        adj.assign(N * W, 0);
        alive.assign(W, 0);
        for (std::uint64_t x = 0; x < N; ++x) {
            if (mode == SumMode::Inclusive && !S.bits.test(G.add(x, x))) continue;
            alive[x >> 6] |= std::uint64_t{1} << (x & 63);
        }
        for (std::uint64_t x = 0; x < N; ++x) {
            if (!(alive[x >> 6] >> (x & 63) & 1)) continue;
            for (std::uint64_t y = x + 1; y < N; ++y) {
                if (!(alive[y >> 6] >> (y & 63) & 1)) continue;
                if (S.bits.test(G.add(x, y))) {
                    adj[x * W + (y >> 6)] |= std::uint64_t{1} << (y & 63);
                    adj[y * W + (x >> 6)] |= std::uint64_t{1} << (x & 63);
                }
            }
        }
    }
    const std::uint64_t* row(std::uint64_t v) const { return adj.data() + v * W; }
};

inline int bs_first(const std::uint64_t* p, std::size_t W) {
    for (std::size_t w = 0; w < W; ++w)
        if (p[w]) return static_cast<int>(w * 64 + std::countr_zero(p[w]));
    return -1;
}
inline int bs_count(const std::uint64_t* p, std::size_t W) {
    int c = 0;
    for (std::size_t w = 0; w < W; ++w) c += std::popcount(p[w]);
    return c;
}

// Branch-and-bound maximum clique with greedy-coloring bounds (the
// bitset scheme of the BBMC family). Scratch buffers live in per-depth
// frames so the hot path never allocates; the incumbent is an atomic so
// root branches can run on parallel workers sharing it.
class CliqueSearch {
public:
    CliqueSearch(const SumGraph& g, std::uint64_t node_budget, std::atomic<int>& shared_best)
        : g_(g), W_(g.W), budget_(node_budget ? node_budget : ~std::uint64_t{0}), best_(shared_best) {
        frames_.reserve(g.N + 2);  // frame references stay valid across resizes
    }

    void enable_certificate(std::vector<int>* out) { best_members_ = out; }
    void stop_at_first_improvement(bool b) { stop_at_first_ = b; }

    /// Full search over the whole graph.
    void run() {
        ensure_frames(0);
        frames_[0].P = g_.alive;
        if (bs_count(frames_[0].P.data(), W_) == 0) return;
        expand(0);
    }

    /// One root branch: clique {v} with candidate set P (W words).
    void run_branch(int v, const std::vector<std::uint64_t>& P) {
        ensure_frames(1);
        frames_[1].P = P;
        current_.assign(1, v);
        if (bs_count(P.data(), W_) == 0) {
            offer(1);
            return;
        }
        expand(1);
    }

    bool exhausted_budget() const { return nodes_ > budget_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    struct Frame {
        std::vector<std::uint64_t> P;
        std::vector<std::uint64_t> Q, Qc;
        std::vector<int> order, color;
    };

    void ensure_frames(int depth) {
        if (frames_.size() <= static_cast<std::size_t>(depth) + 1) frames_.resize(depth + 2);
        frames_[depth].P.resize(W_);
        frames_[depth + 1].P.resize(W_);
    }

    void offer(int size) {
        int cur = best_.load(std::memory_order_relaxed);
        while (size > cur && !best_.compare_exchange_weak(cur, size, std::memory_order_relaxed)) {
        }
        if (size > cur) {
            if (best_members_) *best_members_ = current_;
            if (stop_at_first_) done_ = true;
        }
    }

    void color_sort(Frame& f) {
        f.order.clear();
        f.color.clear();
        f.Q = f.P;
        int c = 0;
        while (true) {
            const int v0 = bs_first(f.Q.data(), W_);
            if (v0 < 0) break;
            ++c;
            f.Qc = f.Q;
            while (true) {
                const int v = bs_first(f.Qc.data(), W_);
                if (v < 0) break;
                f.Qc[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                f.Q[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                const std::uint64_t* av = g_.row(static_cast<std::uint64_t>(v));
                for (std::size_t w = 0; w < W_; ++w) f.Qc[w] &= ~av[w];
                f.order.push_back(v);
                f.color.push_back(c);
            }
        }
    }

    void expand(int depth) {
        if (done_ || ++nodes_ > budget_) {
            done_ = true;
            return;
        }
        ensure_frames(depth);
        Frame& f = frames_[depth];
        color_sort(f);
        Frame& child = frames_[depth + 1];
        for (int i = static_cast<int>(f.order.size()) - 1; i >= 0 && !done_; --i) {
            if (depth + f.color[i] <= best_.load(std::memory_order_relaxed)) return;
            const int v = f.order[i];
            f.P[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            const std::uint64_t* av = g_.row(static_cast<std::uint64_t>(v));
            bool nonempty = false;
            for (std::size_t w = 0; w < W_; ++w) {
                child.P[w] = f.P[w] & av[w];
                nonempty |= (child.P[w] != 0);
            }
            current_.push_back(v);
            if (!nonempty)
                offer(depth + 1);
            else
                expand(depth + 1);
            current_.pop_back();
        }
    }

    const SumGraph& g_;
    std::size_t W_;
    std::uint64_t budget_;
    std::atomic<int>& best_;
    std::uint64_t nodes_ = 0;
    bool stop_at_first_ = false;
    bool done_ = false;
    std::vector<int>* best_members_ = nullptr;
    std::vector<int> current_;
    std::vector<Frame> frames_;
};

/// Deterministic greedy cliques for the initial incumbent: one growth per
/// seed vertex, always extending by the candidate of maximum residual
/// degree (smallest index on ties).
inline std::vector<int> greedy_clique_incumbent(const SumGraph& g, int seeds) {
    std::vector<int> best;
    std::vector<std::uint64_t> cand(g.W);
    const int N = static_cast<int>(g.N);
    int tried = 0;
    for (int s = 0; s < N && tried < seeds; ++s) {
        if (!(g.alive[s >> 6] >> (s & 63) & 1)) continue;
        ++tried;
        std::vector<int> clique{s};
        std::copy(g.row(s), g.row(s) + g.W, cand.begin());
        while (true) {
            int pick = -1, pick_deg = -1;
            for (std::size_t w = 0; w < g.W; ++w) {
                std::uint64_t cur = cand[w];
                while (cur) {
                    const int v = static_cast<int>(w * 64 + std::countr_zero(cur));
                    cur &= cur - 1;
                    int deg = 0;
                    const std::uint64_t* av = g.row(v);
                    for (std::size_t u = 0; u < g.W; ++u) deg += std::popcount(cand[u] & av[u]);
                    if (deg > pick_deg) {
                        pick_deg = deg;
                        pick = v;
                    }
                }
            }
            if (pick < 0) break;
            clique.push_back(pick);
            const std::uint64_t* av = g.row(pick);
            for (std::size_t w = 0; w < g.W; ++w) cand[w] &= av[w];
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

}  // namespace detail

struct MaxCliqueOptions {
    std::uint64_t node_budget = 0;  // 0 = unlimited (exact, as specified)
    int workers = 1;
    int incumbent_seeds = 64;
};

struct MaxCliqueResult {
    GroupSubset members;
    int size = 0;
    bool exact = true;
    std::uint64_t nodes = 0;
};

/// Maximum-cardinality A with sumset_g(A, mode) inside S, by exact
/// branch-and-bound clique search on the Cayley sum graph of S. With
/// several workers the root branches are searched in parallel against a
/// shared incumbent; the certificate is then re-derived sequentially so
/// the result does not depend on scheduling.
inline MaxCliqueResult max_sumset_inside(const AbelianGroup& G, const ColorSet& S,
                                         SumMode mode = SumMode::Distinct, MaxCliqueOptions opts = {}) {
    if (G.order() > kMaxCliqueOrderCap)
        throw ResourceLimitError("max_sumset_inside: exact search capped at N <= 4096");
    if (!(S.group == G)) throw std::invalid_argument("max_sumset_inside: color set group mismatch");
    detail::SumGraph graph(G, S, mode);

    MaxCliqueResult result{GroupSubset(G), 0, true, 0};
    std::vector<int> best = detail::greedy_clique_incumbent(graph, opts.incumbent_seeds);

    if (opts.workers <= 1) {
        std::atomic<int> incumbent{static_cast<int>(best.size())};
        std::vector<int> found;
        detail::CliqueSearch search(graph, opts.node_budget, incumbent);
        search.enable_certificate(&found);
        search.run();
        result.nodes = search.nodes();
        result.exact = !search.exhausted_budget();
        if (!found.empty()) best = found;
    } else {
        // phase 1: parallel size proof over root branches, in plain index
        // order; each worker rebuilds its own candidate set
        // P_b = (alive minus branches up to b) & adj[v_b]
        std::atomic<int> incumbent{static_cast<int>(best.size())};
        std::vector<int> branches;
        for (std::uint64_t v = 0; v < graph.N; ++v)
            if (graph.alive[v >> 6] >> (v & 63) & 1) branches.push_back(static_cast<int>(v));
        std::atomic<std::size_t> next{0};
        std::atomic<std::uint64_t> nodes_total{0};
        std::atomic<bool> budget_hit{false};
        auto work = [&] {
            while (true) {
                const std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
                if (b >= branches.size()) return;
                const int v = branches[b];
                // candidates: vertices after v in the branch order, adjacent to v
                std::vector<std::uint64_t> Pb(graph.W, 0);
                const std::uint64_t* av = graph.row(static_cast<std::uint64_t>(v));
                for (std::size_t w = 0; w < graph.W; ++w) Pb[w] = graph.alive[w] & av[w];
                for (std::size_t j = 0; j <= b; ++j) Pb[branches[j] >> 6] &= ~(std::uint64_t{1} << (branches[j] & 63));
                detail::CliqueSearch search(graph, opts.node_budget, incumbent);
                search.run_branch(v, Pb);
                nodes_total.fetch_add(search.nodes(), std::memory_order_relaxed);
                if (search.exhausted_budget()) budget_hit.store(true, std::memory_order_relaxed);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        result.nodes = nodes_total.load();
        result.exact = !budget_hit.load();

        // phase 2: deterministic certificate for the proven size
        const int target = incumbent.load();
        if (target > static_cast<int>(best.size())) {
            std::atomic<int> reset{target - 1};
            std::vector<int> found;
            detail::CliqueSearch search(graph, 0, reset);
            search.enable_certificate(&found);
            search.stop_at_first_improvement(true);
            search.run();
            if (!found.empty()) best = found;
        }
    }

    for (int v : best) result.members.bits.set(static_cast<std::uint64_t>(v));
    result.size = static_cast<int>(best.size());
    if (result.size == 0 && graph.N > 0 && mode == SumMode::Distinct) {
        // no admissible pair at all: any single vertex works
        result.members.bits.set(0);
        result.size = 1;
    }
    return result;
}

/// ceil(|S| / C(q, 2)) with q the exact maximum: a q-element generator
/// yields at most q(q-1)/2 distinct colors, so no union cover can be
/// smaller. q <= 1 makes covering impossible; |S| is returned as the
/// degenerate bound.
inline std::uint64_t cover_lower_bound_from_clique(std::uint64_t target_size, std::uint64_t q) {
    if (target_size == 0) return 0;
    const std::uint64_t pairs = q * (q - 1) / 2;
    if (pairs == 0) return target_size;
    return (target_size + pairs - 1) / pairs;
}

inline std::uint64_t cover_lower_bound(const AbelianGroup& G, const ColorSet& S) {
    if (S.bits.none()) return 0;
    const MaxCliqueResult q = max_sumset_inside(G, S, SumMode::Distinct);
    return cover_lower_bound_from_clique(S.bits.count(), static_cast<std::uint64_t>(q.size));
}

struct CoverParams {
    std::uint64_t seed = 0;
    std::uint64_t candidate_budget = 32;  // greedy growths per step
    std::uint64_t exact_threshold = 512;  // exact step search up to this group order
};

struct CoverSolution {
    enum class Mode { Union, Intersection };
    Mode mode = Mode::Union;
    std::vector<GroupSubset> generators;
    ColorSet covered;
    ColorSet target;
    bool verified = false;
    std::vector<std::uint64_t> per_step_gain;
    std::vector<int> incomplete_axes;  // Intersection mode: i with (A_i+A_i) missing part of e_i-perp
};

namespace detail {

// Exact best-gain step: maximize |sumset(A) & residual| over cliques of
// the Cayley sum graph. The optimistic bound on a branch is the pair
// budget C(k + color, 2) - C(k, 2) capped by the residual still open.
class CoverageSearch {
public:
    CoverageSearch(const AbelianGroup& G, const SumGraph& g, const Bitmap& residual)
        : G_(G), g_(g), W_(g.W), residual_(residual), residual_count_(residual.count()) {
        frames_.reserve(g.N + 2);  // frame references stay valid across resizes
    }

    std::pair<std::vector<int>, std::uint64_t> run(std::uint64_t initial_best_gain) {
        best_gain_ = initial_best_gain;
        best_members_.clear();
        frames_.resize(1);
        frames_[0].P = g_.alive;
        frames_[0].sums = Bitmap(G_.order());
        frames_[0].gain = 0;
        expand(0);
        return {best_members_, best_gain_};
    }

private:
    struct Frame {
        std::vector<std::uint64_t> P;
        std::vector<std::uint64_t> Q, Qc;
        std::vector<int> order, color;
        Bitmap sums;  // distinct sums of the current clique
        std::uint64_t gain = 0;
    };

    void color_sort(Frame& f) {
        f.order.clear();
        f.color.clear();
        f.Q = f.P;
        int c = 0;
        while (true) {
            const int v0 = bs_first(f.Q.data(), W_);
            if (v0 < 0) break;
            ++c;
            f.Qc = f.Q;
            while (true) {
                const int v = bs_first(f.Qc.data(), W_);
                if (v < 0) break;
                f.Qc[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                f.Q[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                const std::uint64_t* av = g_.row(static_cast<std::uint64_t>(v));
                for (std::size_t w = 0; w < W_; ++w) f.Qc[w] &= ~av[w];
                f.order.push_back(v);
                f.color.push_back(c);
            }
        }
    }

    static std::uint64_t pair_count(std::uint64_t k) { return k * (k - 1) / 2; }

    void expand(int depth) {
        if (frames_.size() <= static_cast<std::size_t>(depth) + 1) frames_.resize(depth + 2);
        Frame& f = frames_[depth];
        color_sort(f);
        Frame& child = frames_[depth + 1];
        child.P.resize(W_);
        const std::uint64_t k = current_.size();
        for (int i = static_cast<int>(f.order.size()) - 1; i >= 0; --i) {
            const std::uint64_t extra_pairs =
                pair_count(k + static_cast<std::uint64_t>(f.color[i])) - pair_count(k);
            const std::uint64_t open = residual_count_ - f.gain;
            if (f.gain + std::min(extra_pairs, open) <= best_gain_) return;
            const int v = f.order[i];
            f.P[v >> 6] &= ~(std::uint64_t{1} << (v & 63));

            child.sums = f.sums;
            child.gain = f.gain;
            for (int a : current_) {
                const std::uint64_t s = G_.add(static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(a));
                if (!child.sums.test(s)) {
                    child.sums.set(s);
                    if (residual_.test(s)) ++child.gain;
                }
            }
            current_.push_back(v);
            if (child.gain > best_gain_) {
                best_gain_ = child.gain;
                best_members_ = current_;
            }
            const std::uint64_t* av = g_.row(static_cast<std::uint64_t>(v));
            bool nonempty = false;
            for (std::size_t w = 0; w < W_; ++w) {
                child.P[w] = f.P[w] & av[w];
                nonempty |= (child.P[w] != 0);
            }
            if (nonempty) expand(depth + 1);
            current_.pop_back();
        }
    }

    const AbelianGroup& G_;
    const SumGraph& g_;
    std::size_t W_;
    const Bitmap& residual_;
    std::uint64_t residual_count_;
    std::uint64_t best_gain_ = 0;
    std::vector<int> best_members_;
    std::vector<int> current_;
    std::vector<Frame> frames_;
};

// One greedy clique growth maximizing marginal residual coverage.
inline std::pair<std::vector<std::uint64_t>, std::uint64_t> grow_cover_clique(
    const AbelianGroup& G, const SumGraph& g, const Bitmap& residual, std::uint64_t start) {
    std::vector<std::uint64_t> clique{start};
    Bitmap sums(G.order());
    std::uint64_t gain = 0;
    std::vector<std::uint64_t> cand(g.row(start), g.row(start) + g.W);
    while (true) {
        std::int64_t best_marginal = 0;
        std::uint64_t pick = 0;
        bool found = false;
        for (std::size_t w = 0; w < g.W; ++w) {
            std::uint64_t cur = cand[w];
            while (cur) {
                const std::uint64_t v = w * 64 + static_cast<std::uint64_t>(std::countr_zero(cur));
                cur &= cur - 1;
                std::int64_t marginal = 0;
                for (std::uint64_t a : clique) {
                    const std::uint64_t s = G.add(v, a);
                    if (!sums.test(s) && residual.test(s)) ++marginal;
                }
                if (marginal > best_marginal) {
                    best_marginal = marginal;
                    pick = v;
                    found = true;
                }
            }
        }
        if (!found) break;
        for (std::uint64_t a : clique) {
            const std::uint64_t s = G.add(pick, a);
            if (!sums.test(s)) {
                sums.set(s);
                if (residual.test(s)) ++gain;
            }
        }
        clique.push_back(pick);
        const std::uint64_t* av = g.row(pick);
        for (std::size_t w = 0; w < g.W; ++w) cand[w] &= av[w];
    }
    return {clique, gain};
}

}  // namespace detail

/// Greedy union cover of S by sumsets: repeatedly take the generator
/// covering the most yet-uncovered colors (exact search at small orders,
/// seeded greedy restarts otherwise), then finish color by color with
/// single edges once the best gain drops to 1.
inline CoverSolution greedy_union_cover(const AbelianGroup& G, const ColorSet& S, CoverParams params = {}) {
    if (!(S.group == G)) throw std::invalid_argument("greedy_union_cover: color set group mismatch");
    const std::uint64_t N = G.order();
    CoverSolution sol{CoverSolution::Mode::Union, {}, ColorSet(G), S, false, {}, {}};
    if (S.bits.none()) {
        sol.verified = true;
        return sol;
    }

    detail::SumGraph graph(G, S, SumMode::Distinct);
    Bitmap residual = S.bits;
    SplitMix64 rng(params.seed);

    while (true) {
        if (residual.none()) break;
        std::vector<std::uint64_t> step_members;
        std::uint64_t step_gain = 0;
        for (std::uint64_t r = 0; r < std::max<std::uint64_t>(params.candidate_budget, 1); ++r) {
            const std::uint64_t start = rng.next_below(N);
            auto [clique, gain] = detail::grow_cover_clique(G, graph, residual, start);
            if (gain > step_gain) {
                step_gain = gain;
                step_members = std::move(clique);
            }
        }
        if (N <= params.exact_threshold) {
            // the greedy result seeds the exact search as its incumbent
            detail::CoverageSearch search(G, graph, residual);
            auto [members, gain] = search.run(std::max<std::uint64_t>(step_gain, 1));
            if (gain > step_gain && !members.empty()) {
                step_gain = gain;
                step_members.clear();
                for (int v : members) step_members.push_back(static_cast<std::uint64_t>(v));
            }
        }
        if (step_gain <= 1) break;

        GroupSubset A(G);
        for (std::uint64_t v : step_members) A.bits.set(v);
        const GroupSubset covered_now = sumset_g(G, A, SumMode::Distinct);
        if (!covered_now.bits.is_subset_of(S.bits))
            throw std::logic_error("greedy_union_cover: step sumset escapes the target");
        sol.per_step_gain.push_back((covered_now.bits & residual).count());
        residual -= covered_now.bits;
        sol.covered.bits |= covered_now.bits;
        sol.generators.push_back(std::move(A));
    }

    // single-edge finish: one generator per remaining color
    residual.for_each([&](std::uint64_t c) {
        std::uint64_t a = 0;
        bool ok = false;
        for (; a < N; ++a)
            if (G.sub(c, a) != a) {
                ok = true;
                break;
            }
        if (!ok)
            throw std::domain_error("greedy_union_cover: color " + std::to_string(c) +
                                    " has no distinct-pair representation in this group");
        GroupSubset A(G);
        A.bits.set(a);
        A.bits.set(G.sub(c, a));
        sol.covered.bits.set(c);
        sol.per_step_gain.push_back(1);
        sol.generators.push_back(std::move(A));
    });

    sol.verified = (sol.covered.bits == S.bits);
    return sol;
}

/// Bernoulli(1/2) color subset over the realizable colors, reproducible
/// from the seed.
inline ColorSet random_color_subset(const AbelianGroup& G, std::uint64_t seed) {
    ColorSet out(G);
    const Bitmap realizable = realizable_colors(G);
    SplitMix64 rng(seed);
    for (std::uint64_t c = 0; c < G.order(); ++c)
        if (realizable.test(c) && rng.next_bit()) out.bits.set(c);
    return out;
}

/// The n-generator intersection representation of S containing 0:
/// A_i = (S minus e_i-perp) union {0}; S is recovered as the
/// intersection of the n inclusive sumsets whenever each sumset covers
/// the whole hyperplane e_i-perp.
inline CoverSolution intersection_representation(const BitSubset& S) {
    if (!S.bits.test(0))
        throw std::invalid_argument("intersection_representation: S must contain 0");
    const int n = S.n;
    const AbelianGroup G = AbelianGroup::f2(n);
    CoverSolution sol{CoverSolution::Mode::Intersection, {}, ColorSet(G), to_group_subset(G, S), false, {}, {}};

    Bitmap inter(S.universe(), true);
    for (int i = 0; i < n; ++i) {
        const BitSubset ei_perp = hyperplane(GF2Vector(n, std::uint32_t{1} << i));
        BitSubset Ai(n);
        Ai.bits = S.bits - ei_perp.bits;
        Ai.bits.set(0);
        const BitSubset sum = sumset(Ai, SumMode::Inclusive);
        if (!ei_perp.bits.is_subset_of(sum.bits)) sol.incomplete_axes.push_back(i);
        inter &= sum.bits;
        sol.generators.push_back(to_group_subset(G, Ai));
        sol.per_step_gain.push_back(static_cast<std::uint64_t>(sum.count()));
    }
    sol.covered.bits = inter;
    sol.verified = (inter == S.bits);
    return sol;
}

}  // namespace sumsetlab
