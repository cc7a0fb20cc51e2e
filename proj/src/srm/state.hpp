#ifndef SRM_STATE_HPP
#define SRM_STATE_HPP

#include <cstddef>
#include <vector>

#include "srm/instance.hpp"

namespace srm {

// Information state: the surviving types S(t) and the categories E(t) not
// yet presented. This pair is a sufficient statistic for the full feedback
// history, because feedback is deterministic given the type; it is also the
// memoization key used by every solver.
struct State {
    TypeMask surviving = 0;
    CategoryMask remaining = 0;

    bool operator==(const State&) const = default;
};

struct StateHash {
    std::size_t operator()(const State& s) const {
        std::uint64_t x = s.surviving * 0x9e3779b97f4a7c15ULL;
        x ^= x >> 32;
        x += s.remaining * 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 29;
        return static_cast<std::size_t>(x);
    }
};

// All positive-prior types survive, every category is available.
State initial_state(const Instance& inst);

// Posterior over surviving types (ascending type index), normalized to 1.
// Throws InconsistentFeedbackError if the state carries no mass.
std::vector<double> posterior(const Instance& inst, const State& state);

// P(Y_j = 1 | state) = posterior mass of the types finding j relevant.
// The category must still be in E(t).
double relevance_probability(const Instance& inst, const State& state, int category);

// Bayesian update: drop the category from E(t) and intersect S(t) with the
// types consistent with the observed feedback. Throws
// InconsistentFeedbackError when the feedback has probability zero.
State condition(const Instance& inst, const State& state, int category, int feedback);

}  // namespace srm

#endif  // SRM_STATE_HPP
