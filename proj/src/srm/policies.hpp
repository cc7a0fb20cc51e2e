#ifndef SRM_POLICIES_HPP
#define SRM_POLICIES_HPP

#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "srm/solver.hpp"

namespace srm {

enum class PolicyKind {
    optimal,        // class-based exact solver
    optimal_naive,  // literal recursive exact solver
    farsighted,     // greedy over classes, recursively self-consistent
    naive_greedy,   // argmax of discounted-run(L^k) * P(class relevant)
    custom,
};

// A policy is a named rule choosing which non-dominated class to test at an
// experimentation state. Evaluators and sessions apply the known-relevant
// short-circuit before the rule is ever consulted, so a rule only sees
// states where every class has probability strictly below one.
struct Policy {
    using Rule = std::function<int(const Instance&, const State&, const ClassPartition&)>;

    PolicyKind kind = PolicyKind::optimal;
    std::string name = "optimal";
    Rule rule;  // only for PolicyKind::custom

    static Policy optimal() { return {PolicyKind::optimal, "optimal", nullptr}; }
    static Policy optimal_naive() { return {PolicyKind::optimal_naive, "optimal-naive", nullptr}; }
    static Policy farsighted() { return {PolicyKind::farsighted, "farsighted", nullptr}; }
    static Policy naive_greedy() { return {PolicyKind::naive_greedy, "naive-greedy", nullptr}; }
    static Policy anti_greedy();  // argmin of the naive score; worst-case probe
    static Policy custom(std::string name, Rule rule) {
        return {PolicyKind::custom, std::move(name), std::move(rule)};
    }
    static std::optional<Policy> by_name(const std::string& name);
};

// Greedy class score: expected discounted worth of testing the class now and
// exhausting it on success, ignoring everything that follows.
double naive_class_score(const Instance& inst, const State& state, const CategoryClass& cls);
int naive_greedy_class(const Instance& inst, const State& state, const ClassPartition& partition);

// Farsighted greedy: pick the class whose test-and-exhaust value is best
// under the assumption that all later decisions are made the same way.
// Computed recursively with memoization on (S, E).
//
// Instrumentation: testing the chosen class and recursing into the
// negative-feedback remainder stays within one "level"; each positive-branch
// sub-instance opens a new level. A level that starts with K classes may
// request at most K + (K-1) + ... + 1 sub-solves.
class FarsightedSolver {
public:
    explicit FarsightedSolver(const Instance& inst) : inst_(&inst) {}

    const ValueReport& solve(const State& state);
    const SolveStats& stats() const { return stats_; }
    const Instance& instance() const { return *inst_; }

    // Class test order along the all-negative path from this state.
    std::vector<CategoryMask> negative_chain(const State& state);

private:
    struct LevelFrame {
        int initial_classes = -1;
        std::uint64_t subsolves = 0;
    };

    double solve_impl(const State& state, bool fresh_level);

    const Instance* inst_;
    std::unordered_map<State, ValueReport, StateHash> memo_;
    std::vector<LevelFrame> level_stack_;
    SolveStats stats_;
};

// Binds a policy to one instance, owning whatever solver caches the rule
// needs. Choosers are stateful (memoized) and not thread-safe; use one per
// thread.
class ClassChooser {
public:
    ClassChooser(const Instance& inst, Policy policy);

    // Index into partition.classes; -1 when the partition is empty.
    int choose(const State& state, const ClassPartition& partition);

    // Class order tested at this state while feedback keeps coming back
    // negative (for the exact solver: the optimizer's own ordering).
    std::vector<CategoryMask> level_ordering(const State& state);

    // Exact expected payoff of this policy from the given state.
    double solve_value(const State& state);

    const Policy& policy() const { return policy_; }
    const Instance& instance() const { return *inst_; }
    std::string stats_summary() const;

private:
    const Instance* inst_;
    Policy policy_;
    std::unique_ptr<OptimalSolver> optimal_;
    std::unique_ptr<ReferenceSolver> reference_;
    std::unique_ptr<FarsightedSolver> farsighted_;
};

// Product to show: a category plus the position within that category.
struct ProductRef {
    int category = -1;
    int ordinal = 0;

    bool operator==(const ProductRef&) const = default;
};

// The product a policy would show at a state where no product of any
// category has been shown yet: the next product of a known-relevant
// category if one exists, else the first product of the chosen class.
std::optional<ProductRef> next_action(const Instance& inst, const State& state,
                                      ClassChooser& chooser);

// Exact expected discounted payoff of a policy, by recursion over the
// feedback tree. At each experimentation state one opportunity is charged
// for the test product; a positive answer exhausts the rest of the class.
class PolicyEvaluator {
public:
    PolicyEvaluator(const Instance& inst, Policy policy);

    double value(const State& state);
    double value();  // from the initial state

private:
    const Instance* inst_;
    ClassChooser chooser_;
    std::unordered_map<State, double, StateHash> memo_;
};

double evaluate_policy(const Instance& inst, const Policy& policy);

// One user session driven product by product. next() returns the product to
// show (stable until feed() reports the observed feedback). Conditioning
// happens on the first product of each category; the remaining products of a
// positively rated category are queued and must keep rating 1, anything else
// raises InconsistentFeedbackError.
class Session {
public:
    Session(const Instance& inst, ClassChooser& chooser);

    std::optional<ProductRef> next();
    void feed(int feedback);

    const State& state() const { return state_; }
    int payoff() const { return payoff_; }
    int shown_count() const { return shown_; }

private:
    const Instance* inst_;
    ClassChooser* chooser_;
    State state_;
    std::deque<ProductRef> queue_;  // known-relevant products awaiting display
    std::optional<ProductRef> pending_;
    bool pending_fresh_ = false;  // pending product opens a new category
    int payoff_ = 0;
    int shown_ = 0;
};

}  // namespace srm

#endif  // SRM_POLICIES_HPP
