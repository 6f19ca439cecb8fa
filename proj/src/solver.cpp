#include "ioc/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <string>

#include "ioc/verify.hpp"

namespace ioc {

const char* to_string(SolveMethod method) noexcept {
    return method == SolveMethod::Oracle ? "oracle" : "branch_and_bound";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

[[noreturn]] void throw_no_code(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) {
            throw Error(ErrorCode::NoCode, "no identifying open code: vertex " + std::to_string(v) +
                                               " is isolated");
        }
    }
    const auto twins = find_open_twins(g);
    throw Error(ErrorCode::NoCode, "no identifying open code: vertices " +
                                       std::to_string(twins.front().first) + " and " +
                                       std::to_string(twins.front().second) + " are open twins");
}

template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(Vertex v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(Vertex v) const { return ((w[v >> 6] >> (v & 63)) & 1U) != 0; }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool any() const {
        for (std::uint64_t x : w) {
            if (x != 0) return true;
        }
        return false;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < W; ++i) {
            if ((w[i] & o.w[i]) != 0) return true;
        }
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < W; ++i) {
            if ((w[i] & ~o.w[i]) != 0) return false;
        }
        return true;
    }
    Bits without(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }
    Bits operator^(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] ^ o.w[i];
        return r;
    }
    friend bool operator==(const Bits&, const Bits&) = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < W; ++i) {
            std::uint64_t x = w[i];
            while (x != 0) {
                f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(x))));
                x &= x - 1;
            }
        }
    }
};

template <std::size_t W>
class HittingSetSearch {
public:
    explicit HittingSetSearch(const Graph& g) : n_(g.order()) {
        std::vector<Bits<W>> nbr(n_);
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex u : g.neighbors(v)) nbr[v].set(u);
        }
        std::vector<Bits<W>> raw;
        for (Vertex v = 0; v < n_; ++v) raw.push_back(nbr[v]);
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v = u + 1; v < n_; ++v) {
                if (nbr[u].intersects(nbr[v])) raw.push_back(nbr[u] ^ nbr[v]);
            }
        }
        // Keep only inclusion-minimal requirements.
        std::stable_sort(raw.begin(), raw.end(),
                         [](const Bits<W>& a, const Bits<W>& b) { return a.count() < b.count(); });
        for (const Bits<W>& r : raw) {
            const bool implied = std::any_of(reqs_.begin(), reqs_.end(),
                                             [&](const Bits<W>& k) { return k.subset_of(r); });
            if (!implied) reqs_.push_back(r);
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (g.degree(v) == 1) supports_.set(g.neighbors(v).front());
        }
    }

    std::uint64_t nodes() const { return nodes_; }

    /// Minimum code. Requires that a code exists.
    Bits<W> minimize() {
        best_ = greedy();
        limit_ = static_cast<std::size_t>(best_.count()) - 1;
        deciding_ = false;
        search_root();
        return best_;
    }

    /// Some code of size <= budget, if any.
    std::optional<Bits<W>> decide(std::size_t budget) {
        Bits<W> g = greedy();
        if (static_cast<std::size_t>(g.count()) <= budget) return g;
        limit_ = budget;
        deciding_ = true;
        found_ = false;
        search_root();
        if (found_) return best_;
        return std::nullopt;
    }

private:
    void search_root() {
        std::vector<std::uint32_t> active(reqs_.size());
        std::iota(active.begin(), active.end(), 0U);
        Bits<W> in = supports_;
        dfs(in, Bits<W>{}, std::move(active));
    }

    // Hits every requirement with the most-covering vertex, then drops
    // redundant vertices from the highest index down.
    Bits<W> greedy() const {
        Bits<W> in = supports_;
        for (;;) {
            std::vector<int> score(n_, 0);
            bool open = false;
            for (const Bits<W>& r : reqs_) {
                if (r.intersects(in)) continue;
                open = true;
                r.for_each([&](Vertex v) { ++score[v]; });
            }
            if (!open) break;
            const auto it = std::max_element(score.begin(), score.end());
            in.set(static_cast<Vertex>(it - score.begin()));
        }
        for (Vertex v = static_cast<Vertex>(n_); v-- > 0;) {
            if (!in.test(v) || supports_.test(v)) continue;
            Bits<W> trial = in;
            trial.reset(v);
            if (std::all_of(reqs_.begin(), reqs_.end(),
                            [&](const Bits<W>& r) { return r.intersects(trial); })) {
                in = trial;
            }
        }
        return in;
    }

    bool dfs(Bits<W> in, Bits<W> out, std::vector<std::uint32_t> active) {
        ++nodes_;
        std::size_t size = static_cast<std::size_t>(in.count());
        if (size > limit_) return false;

        std::uint32_t branch_req = 0;
        int branch_avail = 0;
        for (bool changed = true; changed;) {
            changed = false;
            branch_avail = 0;
            std::size_t keep = 0;
            for (std::uint32_t idx : active) {
                const Bits<W>& r = reqs_[idx];
                if (r.intersects(in)) continue;
                const Bits<W> avail = r.without(out);
                const int c = avail.count();
                if (c == 0) return false;
                if (c == 1) {
                    in |= avail;
                    ++size;
                    changed = true;
                    continue;
                }
                if (branch_avail == 0 || c < branch_avail) {
                    branch_avail = c;
                    branch_req = idx;
                }
                active[keep++] = idx;
            }
            active.resize(keep);
            if (size > limit_) return false;
        }

        if (active.empty()) {
            best_ = in;
            if (deciding_) {
                found_ = true;
                return true;
            }
            limit_ = size - 1;
            return false;
        }

        if (size + packing_bound(active, out) > limit_) return false;

        // Candidates from the tightest requirement, most-covering first.
        std::vector<std::pair<int, Vertex>> cand;
        reqs_[branch_req].without(out).for_each([&](Vertex v) {
            int hits = 0;
            for (std::uint32_t idx : active) {
                if (reqs_[idx].test(v)) ++hits;
            }
            cand.emplace_back(-hits, v);
        });
        std::sort(cand.begin(), cand.end());

        for (const auto& [neg_hits, v] : cand) {
            if (size + 1 > limit_) break;
            Bits<W> next_in = in;
            next_in.set(v);
            if (dfs(next_in, out, active)) return true;
            out.set(v);
        }
        return false;
    }

    std::size_t packing_bound(const std::vector<std::uint32_t>& active, const Bits<W>& out) const {
        std::vector<std::pair<int, Bits<W>>> avail;
        avail.reserve(active.size());
        for (std::uint32_t idx : active) {
            Bits<W> a = reqs_[idx].without(out);
            avail.emplace_back(a.count(), a);
        }
        std::stable_sort(avail.begin(), avail.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Bits<W> used;
        std::size_t picks = 0;
        for (const auto& [c, a] : avail) {
            if (a.intersects(used)) continue;
            used |= a;
            ++picks;
        }
        return picks;
    }

    std::size_t n_;
    std::vector<Bits<W>> reqs_;
    Bits<W> supports_;
    Bits<W> best_;
    std::size_t limit_ = 0;
    bool deciding_ = false;
    bool found_ = false;
    std::uint64_t nodes_ = 0;
};

template <std::size_t W>
VertexSet to_vertex_set(const Bits<W>& bits, std::size_t n) {
    VertexSet s(n);
    bits.for_each([&](Vertex v) { s.insert(v); });
    return s;
}

template <class F>
decltype(auto) dispatch_width(std::size_t n, F&& f) {
    if (n <= 64) return f(std::integral_constant<std::size_t, 1>{});
    if (n <= 128) return f(std::integral_constant<std::size_t, 2>{});
    if (n <= 256) return f(std::integral_constant<std::size_t, 4>{});
    if (n <= 512) return f(std::integral_constant<std::size_t, 8>{});
    if (n <= 1024) return f(std::integral_constant<std::size_t, 16>{});
    throw Error(ErrorCode::TooLarge, "solver supports at most 1024 vertices, got " + std::to_string(n));
}

}  // namespace

SolveResult solve_oracle(const Graph& g, std::size_t max_order) {
    const auto start = Clock::now();
    const std::size_t n = g.order();
    const std::size_t cap = std::min<std::size_t>(max_order, 30);
    if (n > cap) {
        throw Error(ErrorCode::TooLarge, "oracle limited to " + std::to_string(cap) +
                                             " vertices, got " + std::to_string(n));
    }
    if (!admits_io_code(g)) throw_no_code(g);

    std::vector<std::uint32_t> nbr(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors(v)) nbr[v] |= std::uint32_t{1} << u;
    }
    std::vector<std::uint32_t> sigs(n);
    std::uint64_t checked = 0;
    auto is_code = [&](std::uint32_t mask) {
        ++checked;
        for (std::size_t v = 0; v < n; ++v) {
            sigs[v] = nbr[v] & mask;
            if (sigs[v] == 0) return false;
        }
        std::sort(sigs.begin(), sigs.end());
        return std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end();
    };

    SolveResult result;
    result.method = SolveMethod::Oracle;
    result.code = VertexSet(n);
    if (n == 0) {
        result.wall_time_ms = elapsed_ms(start);
        return result;
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::size_t k = 1; k <= n; ++k) {
        // Gosper's hack walks k-subsets in increasing numeric order.
        for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
            if (is_code(static_cast<std::uint32_t>(mask))) {
                result.gamma = k;
                for (Vertex v = 0; v < n; ++v) {
                    if ((mask >> v) & 1U) result.code.insert(v);
                }
                result.nodes_explored = checked;
                result.wall_time_ms = elapsed_ms(start);
                return result;
            }
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    throw Error(ErrorCode::Internal, "oracle exhausted all subsets without finding a code");
}

SolveResult solve(const Graph& g) {
    const auto start = Clock::now();
    if (!admits_io_code(g)) throw_no_code(g);
    const std::size_t n = g.order();
    SolveResult result;
    result.method = SolveMethod::BranchAndBound;
    if (n == 0) {
        result.code = VertexSet(0);
        return result;
    }
    dispatch_width(n, [&](auto width) {
        constexpr std::size_t W = decltype(width)::value;
        HittingSetSearch<W> search(g);
        const Bits<W> best = search.minimize();
        result.code = to_vertex_set(best, n);
        result.gamma = result.code.size();
        result.nodes_explored = search.nodes();
        return 0;
    });
    result.wall_time_ms = elapsed_ms(start);
    return result;
}

std::optional<VertexSet> solve_with_budget(const Graph& g, std::size_t max_size) {
    if (!admits_io_code(g)) throw_no_code(g);
    const std::size_t n = g.order();
    if (n == 0) return VertexSet(0);
    return dispatch_width(n, [&](auto width) -> std::optional<VertexSet> {
        constexpr std::size_t W = decltype(width)::value;
        HittingSetSearch<W> search(g);
        if (auto code = search.decide(max_size)) return to_vertex_set(*code, n);
        return std::nullopt;
    });
}

}  // namespace ioc
