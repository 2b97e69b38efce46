#include "tmatch/compress.hpp"

#include <string>

namespace tmatch {

LinkStream delta_compress(const LinkStream& stream, Time delta) {
    if (delta <= 1 || delta >= stream.duration())
        throw std::invalid_argument("delta must satisfy 1 < delta < |T| (|T| = " +
                                    std::to_string(stream.duration()) + ", delta = " + std::to_string(delta) + ")");
    TimeInterval buckets{floor_div(stream.interval().first, delta), floor_div(stream.interval().last, delta)};
    std::vector<TimedEdge> merged;
    merged.reserve(stream.edge_count());
    for (const auto& e : stream.edges()) merged.push_back({floor_div(e.time, delta), e.u, e.v});
    return LinkStream::with_edges(stream, buckets, std::move(merged));
}

}  // namespace tmatch
