#ifndef SRM_TESTS_FIXTURES_HPP
#define SRM_TESTS_FIXTURES_HPP

#include <vector>

#include "srm/bench.hpp"
#include "srm/bounds.hpp"
#include "srm/report.hpp"

namespace fixtures {

// Two types, two categories, each type likes exactly one. Optimal value at
// beta = 0.5 is 0.75.
inline srm::Instance identity2(double beta = 0.5) {
    return srm::Instance::create({{1, 0}, {0, 1}}, {0.5, 0.5}, {1, 1}, beta);
}

inline srm::Instance identity2_skewed(double beta = 0.5) {
    return srm::Instance::create({{1, 0}, {0, 1}}, {0.7, 0.3}, {1, 1}, beta);
}

// Nested staircase: every type likes A, the sets shrink down to D. Testing
// A, B, C, D in order recovers the known-type payoff exactly.
inline srm::Instance triangular4(double beta = 0.5) {
    return srm::Instance::create(
        {{1, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}},
        {0.25, 0.25, 0.25, 0.25}, {1, 1, 1, 1}, beta);
}

// Four types with overlapping tastes: A is liked by {1,2,3}, B by {2,3},
// C by {1,4}, D by {2,4}. B starts out dominated by A; negative feedback on
// C merges A and B into one class. Optimal value at beta = 0.5 is 1.3125.
inline srm::Instance overlap4(double beta = 0.5) {
    return srm::Instance::create(
        {{1, 0, 1, 0}, {1, 1, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}},
        {0.25, 0.25, 0.25, 0.25}, {1, 1, 1, 1}, beta);
}

// Diagonal with uneven priors and category sizes; greedy is optimal here.
inline srm::Instance diag3(double beta = 0.5) {
    return srm::Instance::create({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                 {0.5, 0.3, 0.2}, {2, 1, 3}, beta);
}

// One category of `products` items liked with probability `p`.
inline srm::Instance single_category(double p, int products, double beta) {
    return srm::Instance::create({{1}, {0}}, {p, 1.0 - p}, {products}, beta);
}

// Deterministic mixed bag for property tests: dimensions 2..max_dim,
// category sizes 1..max_products.
inline std::vector<srm::Instance> random_corpus(int count, int max_dim, int max_products,
                                                double beta, std::uint64_t seed) {
    std::vector<srm::Instance> out;
    srm::Rng dims(srm::RngStream{seed, 987654321});
    for (int s = 0; s < count; ++s) {
        int n = 2 + static_cast<int>(dims.next() % static_cast<std::uint64_t>(max_dim - 1));
        int h = 2 + static_cast<int>(dims.next() % static_cast<std::uint64_t>(max_dim - 1));
        srm::GenerationRule rule{max_products};
        out.push_back(srm::random_instance(n, h, beta,
                                           srm::RngStream{seed, static_cast<std::uint64_t>(s)},
                                           rule));
    }
    return out;
}

// Every (S, E) pair reachable from the initial state through feedback
// observations of positive probability.
inline std::vector<srm::State> reachable_states(const srm::Instance& inst) {
    std::vector<srm::State> order;
    std::vector<srm::State> frontier{srm::initial_state(inst)};
    std::unordered_map<srm::State, bool, srm::StateHash> seen;
    seen[frontier.front()] = true;
    while (!frontier.empty()) {
        srm::State state = frontier.back();
        frontier.pop_back();
        order.push_back(state);
        for (int j : srm::mask_indices(state.remaining)) {
            double p = srm::relevance_probability(inst, state, j);
            for (int fb : {0, 1}) {
                double prob = fb ? p : 1.0 - p;
                if (prob <= 0.0) continue;
                srm::State next = srm::condition(inst, state, j, fb);
                if (!seen[next]) {
                    seen[next] = true;
                    frontier.push_back(next);
                }
            }
        }
    }
    return order;
}

}  // namespace fixtures

#endif  // SRM_TESTS_FIXTURES_HPP
