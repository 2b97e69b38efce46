#include "tmatch/exact.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <string>
#include <unordered_map>

#include "tmatch/approx.hpp"

namespace tmatch {

BudgetExceeded::BudgetExceeded(std::uint64_t explored, std::size_t best_found)
    : std::runtime_error("exact search exceeded its node budget after " + std::to_string(explored) +
                         " nodes (best found: " + std::to_string(best_found) + ")"),
      explored_(explored),
      best_(best_found) {}

std::size_t temporal_vertex_bound(const LinkStream& stream, int gamma) {
    auto cells = static_cast<std::size_t>(stream.vertex_count()) * static_cast<std::size_t>(stream.duration());
    return cells / (2 * static_cast<std::size_t>(gamma));
}

namespace {

/// Take-or-skip search over γ-edges in canonical order, pruned by an upper bound
/// against a threshold. Whether a γ-edge is still compatible depends only on how
/// long each vertex stays busy, so results are memoized on (next γ-edge, busy time
/// left per vertex), either as exact values or as upper bounds.
class Search {
public:
    using Value = long long;

    Search(const LinkStream& stream, int gamma, std::optional<std::uint64_t> budget)
        : gamma_(gamma), budget_(budget), edges_(enumerate_gamma_edges(stream, gamma)) {
        busy_until_.assign(stream.vertex_count(), kIdle);
        scan_end_.assign(stream.vertex_count(), kIdle);
        greedy_end_.assign(stream.vertex_count(), kIdle);
        std::vector<bool> used(stream.vertex_count(), false);
        for (const auto& g : edges_) used[g.u] = used[g.v] = true;
        for (VertexId v = 0; v < used.size(); ++v)
            if (used[v]) keyed_.push_back(v);
    }

    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<GammaEdge>& edges() const { return edges_; }
    std::uint64_t nodes() const { return nodes_; }

    /// Optimum if it exceeds `threshold`, otherwise an upper bound <= threshold.
    /// With `stop_at`, returns as soon as a path of that many members is found.
    Value run(Value threshold, std::size_t best_known, std::size_t stop_at = std::numeric_limits<std::size_t>::max()) {
        best_known_ = best_known;
        stop_at_ = stop_at;
        try {
            return solve(0, threshold);
        } catch (const Reached&) {
            return static_cast<Value>(stop_at_);
        }
    }

    const std::vector<std::size_t>& reached_path() const { return reached_path_; }

    /// A matching of size `optimum`, rebuilt from memoized subproblems.
    GammaMatching witness(Value optimum) {
        GammaMatching m{gamma_, {}};
        std::fill(busy_until_.begin(), busy_until_.end(), kIdle);
        Value left = optimum;
        for (std::size_t i = next_compatible(0); left > 0 && i < edges_.size(); i = next_compatible(i + 1)) {
            const auto& g = edges_[i];
            Time bu = busy_until_[g.u], bv = busy_until_[g.v];
            busy_until_[g.u] = busy_until_[g.v] = g.last();
            if (1 + solve(i + 1, left - 2) >= left) {
                m.members.push_back(g);
                --left;
            } else {
                busy_until_[g.u] = bu;
                busy_until_[g.v] = bv;
            }
        }
        return m;
    }

private:
    struct Reached {};
    struct Entry {
        Value value;
        bool exact;
    };
    static constexpr Time kIdle = std::numeric_limits<Time>::min();

    bool compatible(const GammaEdge& g) const { return busy_until_[g.u] < g.start && busy_until_[g.v] < g.start; }

    std::size_t next_compatible(std::size_t i) const {
        while (i < edges_.size() && !compatible(edges_[i])) ++i;
        return i;
    }

    std::string key(std::size_t i) const {
        std::string k(sizeof(std::size_t) + keyed_.size(), '\0');
        std::memcpy(k.data(), &i, sizeof(std::size_t));
        Time start = edges_[i].start;
        for (std::size_t j = 0; j < keyed_.size(); ++j) {
            Time left = busy_until_[keyed_[j]] - start + 1;
            k[sizeof(std::size_t) + j] = static_cast<char>(left > 0 ? left : 0);
        }
        return k;
    }

    /// min(remaining count, per-vertex window packing / 2, 2 * greedy) over the
    /// γ-edges from i on that are compatible with the current state.
    Value bound(std::size_t i) {
        for (VertexId v : keyed_) scan_end_[v] = greedy_end_[v] = busy_until_[v];
        Value count = 0, packing = 0, greedy = 0;
        for (; i < edges_.size(); ++i) {
            const auto& g = edges_[i];
            if (!compatible(g)) continue;
            ++count;
            for (VertexId w : {g.u, g.v}) {
                if (g.start > scan_end_[w]) {
                    scan_end_[w] = g.last();
                    ++packing;
                }
            }
            if (g.start > greedy_end_[g.u] && g.start > greedy_end_[g.v]) {
                greedy_end_[g.u] = greedy_end_[g.v] = g.last();
                ++greedy;
            }
        }
        return std::min({count, packing / 2, 2 * greedy});
    }

    Value solve(std::size_t from, Value threshold) {
        std::size_t i = next_compatible(from);
        if (i >= edges_.size()) return 0;
        auto k = key(i);
        auto it = memo_.find(k);
        if (it != memo_.end() && (it->second.exact || it->second.value <= threshold)) return it->second.value;
        if (budget_ && nodes_ >= *budget_) throw BudgetExceeded(nodes_, best_known_);
        ++nodes_;

        Value ub = bound(i);
        if (it != memo_.end()) ub = std::min(ub, it->second.value);
        if (ub <= threshold) {
            memo_.insert_or_assign(std::move(k), Entry{ub, false});
            return ub;
        }

        const auto& g = edges_[i];
        Time bu = busy_until_[g.u], bv = busy_until_[g.v];
        busy_until_[g.u] = busy_until_[g.v] = g.last();
        path_.push_back(i);
        best_known_ = std::max(best_known_, path_.size());
        if (path_.size() >= stop_at_) {
            reached_path_ = path_;
            throw Reached{};
        }
        Value best = 1 + solve(i + 1, threshold - 1);
        path_.pop_back();
        busy_until_[g.u] = bu;
        busy_until_[g.v] = bv;

        if (best < ub) best = std::max(best, solve(i + 1, std::max(threshold, best)));
        memo_.insert_or_assign(std::move(k), Entry{best, best > threshold});
        return best;
    }

    int gamma_;
    std::optional<std::uint64_t> budget_;
    std::vector<GammaEdge> edges_;
    std::vector<VertexId> keyed_;
    std::vector<Time> busy_until_, scan_end_, greedy_end_;
    std::unordered_map<std::string, Entry> memo_;

    std::vector<std::size_t> path_, reached_path_;
    std::size_t stop_at_ = std::numeric_limits<std::size_t>::max();
    std::size_t best_known_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult exact_maximum(const LinkStream& stream, int gamma, std::optional<std::uint64_t> node_budget) {
    if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
    Search search(stream, gamma, node_budget);
    auto greedy = greedy_matching(stream, search.edges(), gamma);
    // The optimum is at least the greedy size, so a threshold below it yields the exact value.
    auto optimum = search.run(static_cast<Search::Value>(greedy.size()) - 1, greedy.size());
    auto witness = search.witness(optimum);
    return {static_cast<std::size_t>(optimum), std::move(witness), search.nodes()};
}

bool exact_decision(const LinkStream& stream, int gamma, std::size_t k, std::optional<std::uint64_t> node_budget) {
    if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
    if (k == 0) return true;
    if (k > temporal_vertex_bound(stream, gamma)) return false;
    Search search(stream, gamma, node_budget);
    if (k > search.edge_count()) return false;
    auto greedy = greedy_matching(stream, search.edges(), gamma);
    if (greedy.size() >= k) return true;
    if (2 * greedy.size() < k) return false;
    return search.run(static_cast<Search::Value>(k) - 1, greedy.size(), k) >= static_cast<Search::Value>(k);
}

}  // namespace tmatch
