#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tmatch/tmatch.hpp"

namespace py = pybind11;
using namespace tmatch;

namespace {

using EdgeTuple = std::tuple<Time, std::string, std::string>;

LinkStream stream_from(const std::vector<EdgeTuple>& edges, std::optional<std::pair<Time, Time>> interval,
                       const std::vector<std::string>& vertices) {
    std::vector<NamedEdge> named;
    named.reserve(edges.size());
    for (const auto& [t, u, v] : edges) named.push_back({t, u, v});
    std::optional<TimeInterval> iv;
    if (interval) iv = TimeInterval{interval->first, interval->second};
    return LinkStream::from_edges(named, iv, vertices);
}

std::vector<EdgeTuple> named_edges(const LinkStream& s) {
    std::vector<EdgeTuple> out;
    out.reserve(s.edge_count());
    for (const auto& e : s.edges()) out.emplace_back(e.time, s.name(e.u), s.name(e.v));
    return out;
}

py::dict record_dict(const ExperimentRecord& r) {
    py::dict d;
    d["dataset"] = r.label;
    d["delta"] = r.delta;
    d["gamma"] = r.gamma;
    d["vertices"] = r.vertices;
    d["duration"] = r.duration;
    d["edges"] = r.edges;
    d["gamma_edges"] = r.gamma_edges;
    d["greedy"] = r.greedy;
    d["k"] = r.k;
    d["verdict"] = r.verdict;
    d["pool"] = r.pool;
    d["kernel_edges"] = r.kernel_edges;
    d["kernel_gamma_edges"] = r.kernel_gamma_edges;
    d["kernel_ratio"] = kernel_ratio(r);
    d["approx_ratio"] = approx_quality_ratio(r);
    d["approx_s"] = r.approx_seconds;
    d["kernel_s"] = r.kernel_seconds;
    d["total_s"] = r.total_seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Temporal matching in link streams";
    m.attr("__version__") = "0.1.0";

    py::register_exception<InvalidStream>(m, "InvalidStream", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<GammaEdge>(m, "GammaEdge")
        .def_readonly("start", &GammaEdge::start)
        .def_readonly("u", &GammaEdge::u)
        .def_readonly("v", &GammaEdge::v)
        .def_readonly("gamma", &GammaEdge::gamma)
        .def_property_readonly("last", &GammaEdge::last)
        .def("independent", [](const GammaEdge& a, const GammaEdge& b) { return independent(a, b); })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const GammaEdge& g) {
            std::ostringstream os;
            os << "GammaEdge(start=" << g.start << ", u=" << g.u << ", v=" << g.v << ", gamma=" << g.gamma << ")";
            return os.str();
        });

    py::class_<GammaMatching>(m, "GammaMatching")
        .def_readonly("gamma", &GammaMatching::gamma)
        .def_readonly("members", &GammaMatching::members)
        .def("__len__", &GammaMatching::size)
        .def("__iter__", [](const GammaMatching& g) { return py::make_iterator(g.members.begin(), g.members.end()); },
             py::keep_alive<0, 1>());

    py::class_<LinkStream>(m, "LinkStream")
        .def(py::init(&stream_from), py::arg("edges"), py::arg("interval") = py::none(),
             py::arg("vertices") = std::vector<std::string>{},
             "Edges are (t, u, v) tuples; the interval defaults to [min t, max t].")
        .def_property_readonly("interval", [](const LinkStream& s) {
            return std::make_pair(s.interval().first, s.interval().last);
        })
        .def_property_readonly("duration", &LinkStream::duration)
        .def_property_readonly("vertices", &LinkStream::vertex_names)
        .def_property_readonly("edges", &named_edges)
        .def("__len__", &LinkStream::edge_count)
        .def("id", &LinkStream::id)
        .def("name", &LinkStream::name)
        .def("gamma_edge", &LinkStream::gamma_edge, py::arg("start"), py::arg("a"), py::arg("b"), py::arg("gamma"))
        .def("contains", &LinkStream::contains)
        .def("describe", py::overload_cast<const GammaEdge&>(&LinkStream::describe, py::const_))
        .def("to_text", [](const LinkStream& s) {
            std::ostringstream os;
            serialize_stream(os, s);
            return os.str();
        })
        .def_static("from_text", [](const std::string& text) {
            std::istringstream in(text);
            return parse_stream(in).stream;
        })
        .def(py::self == py::self);

    m.def("gamma_edges", &enumerate_gamma_edges, py::arg("stream"), py::arg("gamma"));
    m.def("validate_matching", [](const LinkStream& s, const GammaMatching& mm) {
        auto r = validate_matching(s, mm);
        std::vector<std::string> out;
        for (const auto& v : r.violations) out.push_back(v.message);
        return out;
    }, "Violation messages; empty when the matching is valid.");
    m.def("matching", [](int gamma, const std::vector<GammaEdge>& members) {
        GammaMatching g{gamma, members};
        g.normalize();
        return g;
    }, py::arg("gamma"), py::arg("members"));

    m.def("greedy", [](const LinkStream& s, int gamma) { return greedy_matching(s, gamma); }, py::arg("stream"),
          py::arg("gamma"));
    m.def("bottom_vertices", [](const GammaMatching& g) {
        std::vector<std::pair<Time, VertexId>> out;
        for (const auto& tv : bottom_vertices(g)) out.emplace_back(tv.time, tv.vertex);
        return out;
    });

    m.def("compress", &delta_compress, py::arg("stream"), py::arg("delta"));

    m.def("exact_maximum", [](const LinkStream& s, int gamma, std::optional<std::uint64_t> budget) {
        auto r = exact_maximum(s, gamma, budget);
        return py::make_tuple(r.optimum, r.witness);
    }, py::arg("stream"), py::arg("gamma"), py::arg("budget") = kDefaultNodeBudget,
       "(optimum, witness); budget=None searches without limit.");
    m.def("exact_decision", &exact_decision, py::arg("stream"), py::arg("gamma"), py::arg("k"),
          py::arg("budget") = kDefaultNodeBudget);

    m.def("kernelize", [](const LinkStream& s, int gamma, int k, bool prune_only) {
        auto out = kernelize(s, gamma, k, prune_only ? KernelMode::PruneOnly : KernelMode::Decide);
        py::dict d;
        d["verdict"] = verdict_name(out.verdict);
        d["greedy"] = out.greedy;
        d["pool"] = out.pool_size;
        d["kernel"] = out.kernel ? py::cast(*out.kernel) : py::none();
        return d;
    }, py::arg("stream"), py::arg("gamma"), py::arg("k"), py::arg("prune_only") = false);
    m.def("kernel_edge_bound", &kernel_edge_bound);
    m.def("kernel_pool_bound", &kernel_pool_bound);

    m.def("reduce_sat", [](int variables, const std::vector<std::vector<int>>& clauses, int gamma) {
        auto inst = reduce(CnfFormula{variables, clauses}, gamma);
        return py::make_tuple(inst.stream, inst.target);
    }, py::arg("variables"), py::arg("clauses"), py::arg("gamma"), "(stream, target) for a CNF in DIMACS literals.");

    m.def("generate", [](int groups, int particles, double radius, double friction, double wind, double max_speed,
                         double width, double height, int duration, std::uint64_t seed) {
        GeneratorConfig c{groups, particles, radius, friction, wind, max_speed, width, height, duration, seed};
        c.check();
        return generate(c);
    }, py::arg("groups") = GeneratorConfig{}.group_count, py::arg("particles") = GeneratorConfig{}.particle_count,
       py::arg("radius") = GeneratorConfig{}.radius, py::arg("friction") = GeneratorConfig{}.friction,
       py::arg("wind") = GeneratorConfig{}.wind, py::arg("max_speed") = GeneratorConfig{}.max_speed,
       py::arg("width") = GeneratorConfig{}.arena_width, py::arg("height") = GeneratorConfig{}.arena_height,
       py::arg("duration") = GeneratorConfig{}.duration, py::arg("seed") = GeneratorConfig{}.seed);

    m.def("run_pipeline", [](const LinkStream& s, int gamma, std::optional<Time> delta, std::optional<int> k,
                             const std::string& label) {
        PipelineOptions o;
        o.gamma = gamma;
        o.delta = delta;
        o.k = k;
        o.label = label;
        return record_dict(run_pipeline(s, o).record);
    }, py::arg("stream"), py::arg("gamma"), py::arg("delta") = py::none(), py::arg("k") = py::none(),
       py::arg("label") = "stream");
}
