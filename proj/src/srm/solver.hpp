#ifndef SRM_SOLVER_HPP
#define SRM_SOLVER_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "srm/structure.hpp"

namespace srm {

// Result of solving one state: the expected discounted number of relevant
// products under optimal play, the category to test first, and (for the
// class-based solver) the class presentation order along the path where
// every test comes back negative.
struct ValueReport {
    double value = 0.0;
    int best_category = -1;  // -1 when nothing useful remains
    std::vector<CategoryMask> level_ordering;
};

struct SolveStats {
    std::uint64_t states_expanded = 0;  // memoization misses
    std::uint64_t memo_hits = 0;
    std::uint64_t dp_subsets = 0;        // subset states across all levels
    std::uint64_t max_level_subsets = 0; // largest subset table of any level
    std::uint64_t subsolve_requests = 0; // recursive solves requested
    std::uint64_t max_level_subsolves = 0;
    int max_classes = 0;                 // largest class count of any level
    bool level_budget_ok = true;         // per-level instrumentation checks
};

// Literal recursion over single categories: at every state, try each
// category with positive relevance probability, condition on both feedback
// values and take the best. Transparent and obviously correct; used as the
// oracle for the class-based solver. Memoized on (S, E).
class ReferenceSolver {
public:
    explicit ReferenceSolver(const Instance& inst) : inst_(&inst) {}

    const ValueReport& solve(const State& state);
    const SolveStats& stats() const { return stats_; }
    const Instance& instance() const { return *inst_; }

private:
    const Instance* inst_;
    std::unordered_map<State, ValueReport, StateHash> memo_;
    SolveStats stats_;
};

// Class-based optimal solver. Each state is reduced to its non-dominated
// equivalence classes; the best order to test those classes is found by
// dynamic programming over subsets of already-tested classes (the
// continuation after a run of negatives depends on the tested set, not its
// order). Positive feedback recurses into the reduced sub-instance through
// the shared memo table.
//
// Worst case is exponential: a level with K classes expands 2^K subset
// states, and the number of distinct reachable (S, E) keys can itself grow
// exponentially with the matrix size. Fine at the intended desk scale.
class OptimalSolver {
public:
    explicit OptimalSolver(const Instance& inst) : inst_(&inst) {}

    const ValueReport& solve(const State& state);
    const SolveStats& stats() const { return stats_; }
    const Instance& instance() const { return *inst_; }

private:
    const Instance* inst_;
    std::unordered_map<State, ValueReport, StateHash> memo_;
    SolveStats stats_;
};

// The category to test now: a known-relevant category if one exists, else
// the first class of the solver's ordering; -1 when no remaining category
// has positive probability. Always lies in a non-dominated class.
int optimal_policy_action(const Instance& inst, const State& state, OptimalSolver& solver);

}  // namespace srm

#endif  // SRM_SOLVER_HPP
