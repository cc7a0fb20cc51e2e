#ifndef SRM_SIMULATE_HPP
#define SRM_SIMULATE_HPP

#include <random>
#include <utility>

#include "srm/policies.hpp"

namespace srm {

// Identifies one reproducible random stream. Identical (seed, stream) pairs
// reproduce identical draws; distinct streams are decorrelated by mixing.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

class Rng {
public:
    explicit Rng(RngStream id);

    std::uint64_t next() { return engine_(); }
    // Uniform strictly inside (0, 1); safe to feed to log().
    double uniform01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

// Geometric session length on {1, 2, ...}: P(C = m) = beta^(m-1) (1 - beta),
// drawn by inverting the tail. Uncapped; callers stop once every product is
// shown anyway, so truncation would not change any expectation.
int sample_horizon(double beta, Rng& rng);

// One simulated session: latent type and horizon sampled first, then the
// policy is stepped forward with deterministic feedback q^X.
struct SessionTrace {
    int sampled_type = -1;
    int horizon = 0;
    std::vector<std::pair<ProductRef, int>> shown;  // product, feedback
    int payoff = 0;
};

SessionTrace run_session(const Instance& inst, const Policy& policy, RngStream stream);
SessionTrace run_session(const Instance& inst, ClassChooser& chooser, RngStream stream);

std::string format_trace(const Instance& inst, const SessionTrace& trace);

struct MonteCarloResult {
    double mean = 0.0;
    double std_error = 0.0;  // 0 when runs == 1
    long long runs = 0;
};

// Mean payoff over independent runs; run r uses stream (seed, r), and the
// mean is accumulated pairwise over the run-indexed buffer, so the result is
// bit-identical for any worker count.
MonteCarloResult monte_carlo(const Instance& inst, const Policy& policy, long long runs,
                             std::uint64_t seed, int workers = 1);

}  // namespace srm

#endif  // SRM_SIMULATE_HPP
