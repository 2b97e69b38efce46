#include "tmatch/reduction.hpp"

#include <cstdlib>
#include <istream>
#include <set>
#include <sstream>

namespace tmatch {

std::size_t CnfFormula::literal_occurrences() const {
    std::size_t total = 0;
    for (const auto& c : clauses) total += c.size();
    return total;
}

void CnfFormula::check() const {
    if (variable_count < 1) throw std::invalid_argument("formula needs at least one variable");
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        const auto& c = clauses[i];
        if (c.empty() || c.size() > 3)
            throw std::invalid_argument("clause " + std::to_string(i) + " must have 1 to 3 literals");
        std::set<int> seen;
        for (int lit : c) {
            int var = std::abs(lit);
            if (lit == 0 || var > variable_count)
                throw std::invalid_argument("clause " + std::to_string(i) + ": literal out of range");
            if (!seen.insert(var).second)
                throw std::invalid_argument("clause " + std::to_string(i) + " repeats variable " + std::to_string(var));
        }
    }
}

bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(formula.variable_count))
        throw std::invalid_argument("assignment size does not match variable count");
    for (const auto& clause : formula.clauses) {
        bool sat = false;
        for (int lit : clause) sat = sat || (assignment[static_cast<std::size_t>(std::abs(lit) - 1)] == (lit > 0));
        if (!sat) return false;
    }
    return true;
}

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    std::string line;
    std::vector<int> pending;
    bool header = false;
    std::size_t declared_clauses = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c" || first[0] == '%') continue;
        if (first == "p") {
            std::string kind;
            if (!(ls >> kind >> f.variable_count >> declared_clauses) || kind != "cnf")
                throw std::invalid_argument("dimacs line " + std::to_string(lineno) + ": bad problem line");
            header = true;
            continue;
        }
        if (!header) throw std::invalid_argument("dimacs line " + std::to_string(lineno) + ": clause before header");
        std::istringstream body(line);
        std::string tok;
        while (body >> tok) {
            char* end = nullptr;
            long lit = std::strtol(tok.c_str(), &end, 10);
            if (*end != '\0') throw std::invalid_argument("dimacs line " + std::to_string(lineno) + ": bad literal '" + tok + "'");
            if (lit == 0) {
                f.clauses.push_back(pending);
                pending.clear();
            } else {
                pending.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!header) throw std::invalid_argument("dimacs: missing 'p cnf' header");
    if (!pending.empty()) f.clauses.push_back(pending);
    if (f.clauses.size() != declared_clauses)
        throw std::invalid_argument("dimacs: header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                    std::to_string(f.clauses.size()));
    f.check();
    return f;
}

namespace gadget {
std::string spine(int var) { return "x" + std::to_string(var) + "="; }
std::string positive(int var) { return "x" + std::to_string(var) + "+"; }
std::string negative(int var) { return "x" + std::to_string(var) + "-"; }
std::string positive_clause(int var, int clause) { return "x" + std::to_string(var) + "++" + std::to_string(clause); }
std::string negative_clause(int var, int clause) { return "x" + std::to_string(var) + "--" + std::to_string(clause); }
}  // namespace gadget

ReductionInstance reduce(const CnfFormula& formula, int gamma) {
    if (gamma < 2) throw std::invalid_argument("reduction requires gamma >= 2");
    formula.check();
    const int n = formula.variable_count;
    const int m = static_cast<int>(formula.clauses.size());
    const Time horizon = static_cast<Time>(m + 1) * gamma;

    std::vector<std::string> vertices{gadget::clause_hub};
    std::vector<NamedEdge> edges;
    auto link = [&](Time from, Time to, const std::string& a, const std::string& b) {
        for (Time t = from; t <= to; ++t) edges.push_back({t, a, b});
    };

    for (int x = 1; x <= n; ++x) {
        vertices.insert(vertices.end(), {gadget::spine(x), gadget::positive(x), gadget::negative(x)});
        link(0, horizon - 1, gadget::spine(x), gadget::positive(x));
        link(0, horizon - 1, gadget::spine(x), gadget::negative(x));
        for (int i = 0; i < m; ++i) {
            vertices.insert(vertices.end(), {gadget::positive_clause(x, i), gadget::negative_clause(x, i)});
            Time from = static_cast<Time>(i) * gamma + 1, to = static_cast<Time>(i + 1) * gamma;
            link(from, to, gadget::positive(x), gadget::positive_clause(x, i));
            link(from, to, gadget::negative(x), gadget::negative_clause(x, i));
        }
    }
    for (int i = 0; i < m; ++i) {
        Time from = static_cast<Time>(i) * gamma + 1, to = static_cast<Time>(i + 1) * gamma;
        for (int lit : formula.clauses[static_cast<std::size_t>(i)]) {
            int x = std::abs(lit);
            link(from, to, gadget::clause_hub, lit > 0 ? gadget::positive_clause(x, i) : gadget::negative_clause(x, i));
        }
    }

    StreamDraft draft{TimeInterval{0, horizon - 1}, std::move(vertices), std::move(edges)};
    auto target = static_cast<std::size_t>((2 * m + 1) * n + m);
    return {formula, LinkStream::build(draft), gamma, target};
}

GammaMatching assignment_to_matching(const ReductionInstance& instance, const std::vector<bool>& assignment) {
    const auto& f = instance.formula;
    if (!satisfies(f, assignment)) throw std::invalid_argument("assignment does not satisfy formula");
    const int gamma = instance.gamma;
    const int n = f.variable_count;
    const int m = static_cast<int>(f.clauses.size());
    const auto& s = instance.stream;
    auto value = [&](int x) { return static_cast<bool>(assignment[static_cast<std::size_t>(x - 1)]); };

    GammaMatching matching{gamma, {}};
    for (int x = 1; x <= n; ++x) {
        const auto& side = value(x) ? gadget::positive(x) : gadget::negative(x);
        for (int i = 0; i <= m; ++i)
            matching.members.push_back(s.gamma_edge(static_cast<Time>(i) * gamma, gadget::spine(x), side, gamma));
        // The unused side is free to pair with its per-clause gadget vertices.
        for (int i = 0; i < m; ++i) {
            auto start = static_cast<Time>(i) * gamma + 1;
            matching.members.push_back(value(x)
                                           ? s.gamma_edge(start, gadget::negative(x), gadget::negative_clause(x, i), gamma)
                                           : s.gamma_edge(start, gadget::positive(x), gadget::positive_clause(x, i), gamma));
        }
    }
    for (int i = 0; i < m; ++i) {
        int witness = 0;
        for (int lit : f.clauses[static_cast<std::size_t>(i)]) {
            int x = std::abs(lit);
            if (value(x) == (lit > 0) && (witness == 0 || x < witness)) witness = x;
        }
        auto start = static_cast<Time>(i) * gamma + 1;
        const auto partner = value(witness) ? gadget::positive_clause(witness, i) : gadget::negative_clause(witness, i);
        matching.members.push_back(s.gamma_edge(start, gadget::clause_hub, partner, gamma));
    }
    matching.normalize();
    return matching;
}

}  // namespace tmatch
