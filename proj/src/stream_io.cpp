#include "tmatch/stream_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace tmatch {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line), detail_(what) {}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

Time parse_time(const std::string& tok, std::size_t lineno) {
    Time t = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), t);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(lineno, "bad time '" + tok + "'");
    return t;
}

struct RawLines {
    std::map<std::string, std::string> header;
    std::vector<std::string> vertices;
    std::vector<NamedEdge> body;
};

RawLines read_lines(std::istream& in) {
    RawLines raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto text = trim(line);
        if (text.empty()) continue;
        if (text[0] == '#') {
            auto entry = trim(std::string_view(text).substr(1));
            auto eq = entry.find('=');
            if (eq == std::string::npos) continue;
            auto key = trim(std::string_view(entry).substr(0, eq));
            auto value = trim(std::string_view(entry).substr(eq + 1));
            if (key == "vertex")
                raw.vertices.push_back(value);
            else
                raw.header[key] = value;
            continue;
        }
        std::istringstream ls(text);
        std::string t, u, v, extra;
        if (!(ls >> t >> u >> v) || (ls >> extra)) throw ParseError(lineno, "expected 't u v', got '" + text + "'");
        raw.body.push_back({parse_time(t, lineno), u, v});
    }
    return raw;
}

}  // namespace

StreamFile parse_stream(std::istream& in) {
    auto raw = read_lines(in);
    std::optional<TimeInterval> interval;
    auto lo = raw.header.find("t_min");
    auto hi = raw.header.find("t_max");
    if ((lo == raw.header.end()) != (hi == raw.header.end()))
        throw ParseError(0, "header must give both t_min and t_max or neither");
    if (lo != raw.header.end()) {
        interval = TimeInterval{parse_time(lo->second, 0), parse_time(hi->second, 0)};
        raw.header.erase("t_min");
        raw.header.erase("t_max");
    } else if (raw.body.empty()) {
        throw ParseError(0, "empty stream without t_min/t_max header");
    }

    std::set<std::string> names(raw.vertices.begin(), raw.vertices.end());
    for (const auto& e : raw.body) {
        names.insert(e.u);
        names.insert(e.v);
    }
    StreamDraft draft{interval, {names.begin(), names.end()}, std::move(raw.body)};
    auto report = validate_stream(draft);
    if (!report.ok()) throw ParseError(0, report.summary());
    return {LinkStream::build(draft), std::move(raw.header)};
}

StreamFile read_stream(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    try {
        return parse_stream(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.detail() + " (in " + path.string() + ")");
    }
}

void serialize_stream(std::ostream& out, const LinkStream& stream, const std::map<std::string, std::string>& extra_header) {
    out << "# t_min=" << stream.interval().first << "\n# t_max=" << stream.interval().last << '\n';
    std::vector<bool> linked(stream.vertex_count(), false);
    for (const auto& e : stream.edges()) linked[e.u] = linked[e.v] = true;
    for (VertexId v = 0; v < stream.vertex_count(); ++v)
        if (!linked[v]) out << "# vertex=" << stream.name(v) << '\n';
    for (const auto& [key, value] : extra_header) out << "# " << key << '=' << value << '\n';
    // Vertex ids follow name order, so (time, u, v) order is already name order.
    for (const auto& e : stream.edges()) out << e.time << ' ' << stream.name(e.u) << ' ' << stream.name(e.v) << '\n';
}

void write_stream(const std::filesystem::path& path, const LinkStream& stream,
                  const std::map<std::string, std::string>& extra_header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    serialize_stream(out, stream, extra_header);
}

void serialize_matching(std::ostream& out, const LinkStream& stream, const GammaMatching& matching) {
    out << "# gamma=" << matching.gamma << "\n# size=" << matching.size() << '\n';
    for (const auto& g : matching.members) out << g.start << ' ' << stream.name(g.u) << ' ' << stream.name(g.v) << '\n';
}

GammaMatching parse_matching(std::istream& in, const LinkStream& stream, std::optional<int> gamma) {
    auto raw = read_lines(in);
    if (!gamma) {
        auto it = raw.header.find("gamma");
        if (it == raw.header.end()) throw ParseError(0, "matching file has no gamma header");
        gamma = static_cast<int>(parse_time(it->second, 0));
    }
    if (*gamma < 1) throw ParseError(0, "gamma must be >= 1");
    GammaMatching m{*gamma, {}};
    for (const auto& e : raw.body) {
        auto a = stream.find(e.u), b = stream.find(e.v);
        if (!a || !b) throw ParseError(0, "matching refers to unknown vertex in (" + std::to_string(e.time) + "," + e.u + "," + e.v + ")");
        if (*a == *b) throw ParseError(0, "matching has a self-loop at vertex " + e.u);
        m.members.push_back(GammaEdge::make(e.time, *a, *b, *gamma));
    }
    std::sort(m.members.begin(), m.members.end());
    return m;
}

}  // namespace tmatch
