#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "tmatch/link_stream.hpp"

namespace tmatch {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct ExactResult {
    std::size_t optimum = 0;
    GammaMatching witness;
    std::uint64_t explored_nodes = 0;
};

/// Thrown when a search exhausts its node budget before proving its answer.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t explored, std::size_t best_found);
    std::uint64_t explored_nodes() const { return explored_; }
    std::size_t best_found() const { return best_; }

private:
    std::uint64_t explored_;
    std::size_t best_;
};

/// Maximum γ-matching by branch and bound over γ-edges in canonical order, with
/// memoized subproblems. The incumbent starts from the greedy matching.
/// `node_budget` (expanded states) of nullopt means unlimited.
ExactResult exact_maximum(const LinkStream& stream, int gamma,
                          std::optional<std::uint64_t> node_budget = kDefaultNodeBudget);

/// True iff a γ-matching of size >= k exists. Stops as soon as one is found.
bool exact_decision(const LinkStream& stream, int gamma, std::size_t k,
                    std::optional<std::uint64_t> node_budget = kDefaultNodeBudget);

/// Largest size allowed by counting temporal vertices: floor(|V||T| / 2γ).
std::size_t temporal_vertex_bound(const LinkStream& stream, int gamma);

}  // namespace tmatch
