#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tmatch/link_stream.hpp"

namespace tmatch {

/// CNF over variables 1..variable_count. Literals use DIMACS signs.
struct CnfFormula {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;

    std::size_t literal_occurrences() const;
    /// Throws std::invalid_argument unless every clause has 1..3 literals over
    /// distinct variables in range.
    void check() const;
};

/// assignment[i] is the value of variable i+1.
bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment);

/// Reads DIMACS CNF ("p cnf n m", "c" comments, 0-terminated clauses).
CnfFormula parse_dimacs(std::istream& in);

/// Link stream whose maximum γ-matching reaches `target` = (2m+1)n+m iff the
/// formula is satisfiable.
struct ReductionInstance {
    CnfFormula formula;
    LinkStream stream;
    int gamma = 2;
    std::size_t target = 0;
};

namespace gadget {
std::string spine(int var);                 // "x{i}="
std::string positive(int var);              // "x{i}+"
std::string negative(int var);              // "x{i}-"
std::string positive_clause(int var, int clause);  // "x{i}++{j}"
std::string negative_clause(int var, int clause);  // "x{i}--{j}"
inline const std::string clause_hub = "c";
}  // namespace gadget

/// Throws std::invalid_argument if gamma < 2 or the formula is malformed.
ReductionInstance reduce(const CnfFormula& formula, int gamma);

/// The matching of size `target` built from a satisfying assignment. The witness
/// of each clause is its lowest-index satisfied variable.
/// Throws std::invalid_argument("assignment does not satisfy formula") otherwise.
GammaMatching assignment_to_matching(const ReductionInstance& instance, const std::vector<bool>& assignment);

}  // namespace tmatch
