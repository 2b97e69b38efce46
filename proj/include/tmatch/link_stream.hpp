#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tmatch {

using Time = std::int64_t;
using VertexId = std::uint32_t;

/// Inclusive interval of discrete instants.
struct TimeInterval {
    Time first = 0;
    Time last = 0;

    Time length() const { return last - first + 1; }
    bool contains(Time t) const { return first <= t && t <= last; }

    friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

/// A link at one instant between two vertices, stored with u < v.
struct TimedEdge {
    Time time = 0;
    VertexId u = 0;
    VertexId v = 0;

    friend auto operator<=>(const TimedEdge&, const TimedEdge&) = default;
};

struct TemporalVertex {
    Time time = 0;
    VertexId vertex = 0;

    friend auto operator<=>(const TemporalVertex&, const TemporalVertex&) = default;
};

/// Block of `gamma` consecutive timed edges between u and v starting at `start`.
/// The value does not imply the block exists in any particular stream.
struct GammaEdge {
    Time start = 0;
    VertexId u = 0;
    VertexId v = 0;
    int gamma = 1;

    static GammaEdge make(Time start, VertexId a, VertexId b, int gamma);

    Time last() const { return start + gamma - 1; }
    bool touches(VertexId w) const { return w == u || w == v; }

    // Canonical order: (start, smaller endpoint, larger endpoint).
    friend auto operator<=>(const GammaEdge&, const GammaEdge&) = default;
};

std::vector<TemporalVertex> temporal_vertices_of(const GammaEdge& edge);

/// True iff the two γ-edges share no temporal vertex. Throws std::invalid_argument on mismatched γ.
bool independent(const GammaEdge& a, const GammaEdge& b);

struct GammaMatching {
    int gamma = 1;
    std::vector<GammaEdge> members;  // kept in canonical order

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    void normalize();

    friend bool operator==(const GammaMatching&, const GammaMatching&) = default;
};

enum class ViolationKind {
    TimeOutOfInterval,
    SelfLoop,
    UnknownVertex,
    EmptyInterval,
    GammaMismatch,
    GammaEdgeMissing,
    SharedTemporalVertex,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
    std::string summary() const;
};

/// An edge as it appears in input, before identifiers are interned.
struct NamedEdge {
    Time time = 0;
    std::string u;
    std::string v;
};

/// Unchecked description of a link stream. `interval` left empty means "infer from the edges".
struct StreamDraft {
    std::optional<TimeInterval> interval;
    std::vector<std::string> vertices;
    std::vector<NamedEdge> edges;
};

ValidationReport validate_stream(const StreamDraft& draft);

class InvalidStream : public std::runtime_error {
public:
    explicit InvalidStream(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Immutable link stream (T, V, E). Vertex ids are dense and follow the
/// lexicographic order of the vertex names; edges are deduplicated and
/// sorted by (time, u, v).
class LinkStream {
public:
    /// Throws InvalidStream when the draft violates an invariant.
    static LinkStream build(const StreamDraft& draft);

    /// Vertex set is the union of the edge endpoints and `extra_vertices`.
    static LinkStream from_edges(const std::vector<NamedEdge>& edges,
                                 std::optional<TimeInterval> interval = std::nullopt,
                                 const std::vector<std::string>& extra_vertices = {});

    /// Same vertex set and interval as `like`, with a different edge set.
    /// Edge ids must refer to `like`'s vertices; times must lie in `interval`.
    static LinkStream with_edges(const LinkStream& like, TimeInterval interval,
                                 std::vector<TimedEdge> edges);

    TimeInterval interval() const { return interval_; }
    Time duration() const { return interval_.length(); }
    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const TimedEdge> edges() const { return edges_; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(VertexId id) const { return names_.at(id); }
    std::optional<VertexId> find(std::string_view name) const;
    VertexId id(std::string_view name) const;  // throws std::out_of_range

    bool has_edge(Time t, VertexId a, VertexId b) const;
    /// "Exists in L": all γ constituent timed edges are present.
    bool contains(const GammaEdge& edge) const;

    /// γ-edge by vertex names; does not check existence.
    GammaEdge gamma_edge(Time start, std::string_view a, std::string_view b, int gamma) const;

    std::string describe(const GammaEdge& edge) const;
    std::string describe(const TemporalVertex& tv) const;

    friend bool operator==(const LinkStream& a, const LinkStream& b) {
        return a.interval_ == b.interval_ && a.names_ == b.names_ && a.edges_ == b.edges_;
    }

private:
    LinkStream() = default;

    TimeInterval interval_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<TimedEdge> edges_;
};

/// Every γ-edge existing in the stream, in canonical order. Throws std::invalid_argument if gamma < 1.
std::vector<GammaEdge> enumerate_gamma_edges(const LinkStream& stream, int gamma);

ValidationReport validate_matching(const LinkStream& stream, const GammaMatching& matching);

}  // namespace tmatch
