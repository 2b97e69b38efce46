#include "tmatch/kernel.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tmatch {

std::size_t kernel_edge_bound(int k, int gamma) {
    return kernel_pool_bound(k, gamma) * static_cast<std::size_t>(gamma);
}

std::size_t kernel_pool_bound(int k, int gamma) {
    if (k < 1) return 0;
    return 2 * static_cast<std::size_t>(k - 1) * static_cast<std::size_t>(2 * k - 1) * static_cast<std::size_t>(gamma);
}

KernelOutcome kernelize(const LinkStream& stream, int gamma, int k, KernelMode mode) {
    if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
    auto all = enumerate_gamma_edges(stream, gamma);
    return kernelize(stream, all, greedy_matching(stream, all, gamma), k, mode);
}

KernelOutcome kernelize(const LinkStream& stream, std::span<const GammaEdge> all, const GammaMatching& greedy, int k,
                        KernelMode mode) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const int gamma = greedy.gamma;
    KernelOutcome out;
    out.k = k;
    out.input_gamma_edges = all.size();
    out.greedy = greedy;
    auto ell = static_cast<long long>(out.greedy.size());

    if (mode == KernelMode::Decide) {
        if (ell >= k) {
            out.verdict = KernelVerdict::SolutionFound;
            return out;
        }
        if (2 * ell < k) {
            out.verdict = KernelVerdict::NoSolution;
            return out;
        }
    }
    out.verdict = KernelVerdict::Kernel;

    // S(t', u) for every t' within γ-1 instants before a bottom vertex (t, u).
    std::map<std::pair<Time, VertexId>, std::vector<std::size_t>> buckets;
    for (const auto& bot : bottom_vertices(out.greedy)) {
        Time lo = std::max(stream.interval().first, bot.time - gamma + 1);
        for (Time s = lo; s <= bot.time; ++s) buckets.try_emplace({s, bot.vertex});
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& g = all[i];
        for (VertexId end : {g.u, g.v}) {
            auto it = buckets.find({g.start, end});
            if (it != buckets.end()) it->second.push_back(i);
        }
    }

    auto cap = static_cast<std::size_t>(2 * k - 1);
    std::vector<std::size_t> pool;
    for (auto& [key, members] : buckets) {
        VertexId self = key.second;
        auto partner = [&](std::size_t i) { return all[i].u == self ? all[i].v : all[i].u; };
        std::sort(members.begin(), members.end(),
                  [&](std::size_t a, std::size_t b) { return partner(a) < partner(b); });
        if (members.size() > cap) members.resize(cap);
        pool.insert(pool.end(), members.begin(), members.end());
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    out.pool_size = pool.size();

    std::vector<TimedEdge> kept;
    kept.reserve(pool.size() * static_cast<std::size_t>(gamma));
    for (std::size_t i : pool) {
        const auto& g = all[i];
        for (Time t = g.start; t <= g.last(); ++t) kept.push_back({t, g.u, g.v});
    }
    out.kernel = LinkStream::with_edges(stream, stream.interval(), std::move(kept));
    return out;
}

double kernel_gamma_edge_ratio(const LinkStream& input, const LinkStream& kernel, int gamma) {
    auto denom = enumerate_gamma_edges(input, gamma).size();
    auto num = enumerate_gamma_edges(kernel, gamma).size();
    if (denom == 0) return num == 0 ? 1.0 : 0.0;
    return static_cast<double>(num) / static_cast<double>(denom);
}

}  // namespace tmatch
