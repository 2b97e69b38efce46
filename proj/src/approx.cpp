#include "tmatch/approx.hpp"

#include <algorithm>
#include <unordered_set>

namespace tmatch {

namespace {

class Occupancy {
public:
    Occupancy(const LinkStream& stream, std::size_t dense_limit)
        : first_(stream.interval().first), width_(static_cast<std::size_t>(stream.duration())) {
        std::size_t cells = stream.vertex_count() * width_;
        if (stream.vertex_count() == 0 || cells / stream.vertex_count() != width_ || cells > dense_limit) {
            sparse_ = true;
        } else {
            dense_.assign(cells, false);
        }
    }

    bool marked(Time t, VertexId v) const {
        if (sparse_) return cells_.contains(key(t, v));
        return dense_[v * width_ + static_cast<std::size_t>(t - first_)];
    }

    void mark(Time t, VertexId v) {
        if (sparse_)
            cells_.insert(key(t, v));
        else
            dense_[v * width_ + static_cast<std::size_t>(t - first_)] = true;
    }

private:
    std::uint64_t key(Time t, VertexId v) const {
        return (static_cast<std::uint64_t>(t - first_) << 32) | v;
    }

    Time first_;
    std::size_t width_;
    bool sparse_ = false;
    std::vector<bool> dense_;
    std::unordered_set<std::uint64_t> cells_;
};

}  // namespace

GammaMatching greedy_matching(const LinkStream& stream, int gamma, const GreedyOptions& options) {
    auto edges = enumerate_gamma_edges(stream, gamma);
    return greedy_matching(stream, edges, gamma, options);
}

GammaMatching greedy_matching(const LinkStream& stream, std::span<const GammaEdge> sorted_gamma_edges, int gamma,
                              const GreedyOptions& options) {
    if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
    GammaMatching matching{gamma, {}};
    Occupancy rho(stream, options.dense_cell_limit);

    for (const auto& g : sorted_gamma_edges) {
        bool free = true;
        for (Time t = g.start; t <= g.last() && free; ++t)
            free = !rho.marked(t, g.u) && !rho.marked(t, g.v);
        if (free) matching.members.push_back(g);
        if (free || options.marking == MarkingPolicy::MarkOnReject) {
            for (Time t = g.start; t <= g.last(); ++t) {
                rho.mark(t, g.u);
                rho.mark(t, g.v);
            }
        }
    }
    return matching;
}

std::vector<TemporalVertex> bottom_vertices(const GammaMatching& matching) {
    std::vector<TemporalVertex> bot;
    bot.reserve(2 * matching.size());
    for (const auto& g : matching.members) {
        bot.push_back({g.last(), g.u});
        bot.push_back({g.last(), g.v});
    }
    std::sort(bot.begin(), bot.end());
    return bot;
}

}  // namespace tmatch
