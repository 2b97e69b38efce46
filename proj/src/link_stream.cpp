#include "tmatch/link_stream.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace tmatch {

GammaEdge GammaEdge::make(Time start, VertexId a, VertexId b, int gamma) {
    if (a == b) throw std::invalid_argument("gamma-edge endpoints must be distinct");
    if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
    return GammaEdge{start, std::min(a, b), std::max(a, b), gamma};
}

std::vector<TemporalVertex> temporal_vertices_of(const GammaEdge& edge) {
    std::vector<TemporalVertex> out;
    out.reserve(2 * static_cast<std::size_t>(edge.gamma));
    for (Time t = edge.start; t <= edge.last(); ++t) {
        out.push_back({t, edge.u});
        out.push_back({t, edge.v});
    }
    return out;
}

bool independent(const GammaEdge& a, const GammaEdge& b) {
    if (a.gamma != b.gamma) throw std::invalid_argument("independent: gamma values differ");
    bool shares_vertex = a.touches(b.u) || a.touches(b.v);
    bool overlaps = a.start <= b.last() && b.start <= a.last();
    return !(shares_vertex && overlaps);
}

void GammaMatching::normalize() {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool ValidationReport::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << '\n';
        os << violations[i].message;
    }
    return os.str();
}

InvalidStream::InvalidStream(ValidationReport report)
    : std::runtime_error("invalid link stream: " + report.summary()), report_(std::move(report)) {}

namespace {

std::string edge_text(const NamedEdge& e) {
    std::ostringstream os;
    os << "(" << e.time << ",{" << e.u << "," << e.v << "})";
    return os.str();
}

std::optional<TimeInterval> inferred_interval(const StreamDraft& draft) {
    if (draft.interval) return draft.interval;
    if (draft.edges.empty()) return std::nullopt;
    auto [lo, hi] = std::minmax_element(draft.edges.begin(), draft.edges.end(),
                                        [](const NamedEdge& a, const NamedEdge& b) { return a.time < b.time; });
    return TimeInterval{lo->time, hi->time};
}

}  // namespace

ValidationReport validate_stream(const StreamDraft& draft) {
    ValidationReport report;
    auto interval = inferred_interval(draft);
    if (!interval) {
        report.violations.push_back({ViolationKind::EmptyInterval, "no time interval given and no edges to infer it from"});
    } else if (interval->length() < 1) {
        report.violations.push_back({ViolationKind::EmptyInterval, "time interval is empty"});
    }

    std::unordered_set<std::string_view> known(draft.vertices.begin(), draft.vertices.end());
    for (const auto& e : draft.edges) {
        if (interval && interval->length() >= 1 && !interval->contains(e.time))
            report.violations.push_back({ViolationKind::TimeOutOfInterval, "time out of interval: " + edge_text(e)});
        if (e.u == e.v)
            report.violations.push_back({ViolationKind::SelfLoop, "self-loop: " + edge_text(e)});
        for (const auto* end : {&e.u, &e.v}) {
            if (!known.contains(*end))
                report.violations.push_back(
                    {ViolationKind::UnknownVertex, "unknown vertex '" + *end + "' in " + edge_text(e)});
        }
    }
    return report;
}

LinkStream LinkStream::build(const StreamDraft& draft) {
    auto report = validate_stream(draft);
    if (!report.ok()) throw InvalidStream(std::move(report));

    LinkStream s;
    s.interval_ = *inferred_interval(draft);
    s.names_ = draft.vertices;
    std::sort(s.names_.begin(), s.names_.end());
    s.names_.erase(std::unique(s.names_.begin(), s.names_.end()), s.names_.end());
    s.index_.reserve(s.names_.size());
    for (VertexId i = 0; i < s.names_.size(); ++i) s.index_.emplace(s.names_[i], i);

    s.edges_.reserve(draft.edges.size());
    for (const auto& e : draft.edges) {
        VertexId a = s.index_.at(e.u);
        VertexId b = s.index_.at(e.v);
        s.edges_.push_back({e.time, std::min(a, b), std::max(a, b)});
    }
    std::sort(s.edges_.begin(), s.edges_.end());
    s.edges_.erase(std::unique(s.edges_.begin(), s.edges_.end()), s.edges_.end());
    return s;
}

LinkStream LinkStream::from_edges(const std::vector<NamedEdge>& edges, std::optional<TimeInterval> interval,
                                  const std::vector<std::string>& extra_vertices) {
    StreamDraft draft;
    draft.interval = interval;
    draft.edges = edges;
    std::set<std::string> names(extra_vertices.begin(), extra_vertices.end());
    for (const auto& e : edges) {
        names.insert(e.u);
        names.insert(e.v);
    }
    draft.vertices.assign(names.begin(), names.end());
    return build(draft);
}

LinkStream LinkStream::with_edges(const LinkStream& like, TimeInterval interval, std::vector<TimedEdge> edges) {
    if (interval.length() < 1) throw std::invalid_argument("with_edges: empty interval");
    for (auto& e : edges) {
        if (e.u == e.v || e.u >= like.vertex_count() || e.v >= like.vertex_count())
            throw std::invalid_argument("with_edges: bad vertex id");
        if (!interval.contains(e.time)) throw std::invalid_argument("with_edges: time out of interval");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    LinkStream s;
    s.interval_ = interval;
    s.names_ = like.names_;
    s.index_ = like.index_;
    s.edges_ = std::move(edges);
    std::sort(s.edges_.begin(), s.edges_.end());
    s.edges_.erase(std::unique(s.edges_.begin(), s.edges_.end()), s.edges_.end());
    return s;
}

std::optional<VertexId> LinkStream::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId LinkStream::id(std::string_view name) const {
    auto found = find(name);
    if (!found) throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
    return *found;
}

bool LinkStream::has_edge(Time t, VertexId a, VertexId b) const {
    TimedEdge key{t, std::min(a, b), std::max(a, b)};
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

bool LinkStream::contains(const GammaEdge& edge) const {
    if (edge.u == edge.v) return false;
    if (edge.start < interval_.first || edge.last() > interval_.last) return false;
    auto it = std::lower_bound(edges_.begin(), edges_.end(), TimedEdge{edge.start, edge.u, edge.v});
    for (Time t = edge.start; t <= edge.last(); ++t) {
        it = std::lower_bound(it, edges_.end(), TimedEdge{t, edge.u, edge.v});
        if (it == edges_.end() || *it != TimedEdge{t, edge.u, edge.v}) return false;
    }
    return true;
}

GammaEdge LinkStream::gamma_edge(Time start, std::string_view a, std::string_view b, int gamma) const {
    return GammaEdge::make(start, id(a), id(b), gamma);
}

std::string LinkStream::describe(const GammaEdge& edge) const {
    std::ostringstream os;
    os << "G" << edge.gamma << "(" << edge.start << "," << name(edge.u) << "," << name(edge.v) << ")";
    return os.str();
}

std::string LinkStream::describe(const TemporalVertex& tv) const {
    std::ostringstream os;
    os << "(" << tv.time << "," << name(tv.vertex) << ")";
    return os.str();
}

std::vector<GammaEdge> enumerate_gamma_edges(const LinkStream& stream, int gamma) {
    if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
    std::vector<GammaEdge> out;
    if (gamma > stream.duration()) return out;

    std::vector<TimedEdge> by_pair(stream.edges().begin(), stream.edges().end());
    std::sort(by_pair.begin(), by_pair.end(), [](const TimedEdge& a, const TimedEdge& b) {
        return std::tie(a.u, a.v, a.time) < std::tie(b.u, b.v, b.time);
    });

    // Each maximal run of consecutive instants of length L yields L - gamma + 1 γ-edges.
    std::size_t i = 0;
    while (i < by_pair.size()) {
        std::size_t j = i + 1;
        while (j < by_pair.size() && by_pair[j].u == by_pair[i].u && by_pair[j].v == by_pair[i].v &&
               by_pair[j].time == by_pair[j - 1].time + 1)
            ++j;
        auto run = static_cast<Time>(j - i);
        for (Time s = 0; s + gamma <= run; ++s)
            out.push_back({by_pair[i].time + s, by_pair[i].u, by_pair[i].v, gamma});
        i = j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

ValidationReport validate_matching(const LinkStream& stream, const GammaMatching& matching) {
    ValidationReport report;
    std::map<TemporalVertex, std::size_t> owner;
    for (std::size_t i = 0; i < matching.members.size(); ++i) {
        const auto& g = matching.members[i];
        if (g.gamma != matching.gamma) {
            report.violations.push_back({ViolationKind::GammaMismatch,
                                         "gamma mismatch: " + stream.describe(g) + " in a " +
                                             std::to_string(matching.gamma) + "-matching"});
            continue;
        }
        if (!stream.contains(g))
            report.violations.push_back({ViolationKind::GammaEdgeMissing, "gamma-edge not in stream: " + stream.describe(g)});
        for (const auto& tv : temporal_vertices_of(g)) {
            auto [it, inserted] = owner.emplace(tv, i);
            if (!inserted) {
                report.violations.push_back({ViolationKind::SharedTemporalVertex,
                                             "shared temporal vertex " + stream.describe(tv) + " between " +
                                                 stream.describe(matching.members[it->second]) + " and " +
                                                 stream.describe(g)});
            }
        }
    }
    return report;
}

}  // namespace tmatch
