#ifndef SRM_BENCH_HPP
#define SRM_BENCH_HPP

#include <string>
#include <vector>

#include "srm/simulate.hpp"

namespace srm {

// How random instances are drawn: relevance entries are fair coin flips with
// all-zero rows resampled, priors are normalized independent uniforms, and
// each category gets 1..max_products products uniformly (all 1 by default).
struct GenerationRule {
    int max_products = 1;
};

Instance random_instance(int n_types, int n_categories, double beta, RngStream stream,
                         const GenerationRule& rule = {});

struct SweepConfig {
    int n_types = 5;
    int n_categories = 5;
    int samples = 50;
    std::vector<double> beta_grid;  // default_grid() when empty
    std::uint64_t seed = 0;
    GenerationRule rule;
    int threads = 1;

    static std::vector<double> default_grid();  // 0.00, 0.05, ..., 0.95
};

// Exact payoffs of the three policies on one sampled instance at one beta.
struct RatioRow {
    double beta = 0.0;
    int sample_id = 0;
    double v_opt = 0.0;
    double v_farsighted = 0.0;
    double v_naive = 0.0;
    double ratio_farsighted = 1.0;
    double ratio_naive = 1.0;
};

struct SweepAggregate {
    double beta = 0.0;
    double avg_ratio_farsighted = 0.0;
    double min_ratio_farsighted = 0.0;
    double avg_ratio_naive = 0.0;
    double min_ratio_naive = 0.0;
};

struct SweepResult {
    std::vector<RatioRow> rows;           // sorted by (sample_id, beta)
    std::vector<SweepAggregate> aggregates;  // one per beta, ascending
};

SweepResult ratio_sweep(const SweepConfig& config);

// Two CSV files: per-row payoffs and per-beta aggregates, 12 significant
// digits throughout.
void emit_csv(const SweepResult& result, const std::string& rows_path,
              const std::string& summary_path);

}  // namespace srm

#endif  // SRM_BENCH_HPP
