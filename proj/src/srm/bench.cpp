#include "srm/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <thread>

namespace srm {

Instance random_instance(int n_types, int n_categories, double beta, RngStream stream,
                         const GenerationRule& rule) {
    if (n_types < 1 || n_categories < 1) {
        throw ArgumentError("random_instance needs at least one type and one category");
    }
    Rng rng(stream);

    std::vector<std::vector<int>> relevance(n_types, std::vector<int>(n_categories, 0));
    for (auto& row : relevance) {
        bool any = false;
        while (!any) {
            for (int j = 0; j < n_categories; ++j) {
                row[j] = static_cast<int>(rng.next() & 1);
                any = any || row[j];
            }
        }
    }

    std::vector<double> prior(n_types);
    double total = 0.0;
    for (double& p : prior) {
        p = rng.uniform01();
        total += p;
    }
    for (double& p : prior) p /= total;

    std::vector<int> products(n_categories, 1);
    if (rule.max_products > 1) {
        for (int& l : products) {
            l = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(rule.max_products));
        }
    }
    return Instance::create(relevance, prior, products, beta);
}

std::vector<double> SweepConfig::default_grid() {
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i) grid.push_back(i * 0.05);
    return grid;
}

SweepResult ratio_sweep(const SweepConfig& config) {
    if (config.samples < 1) {
        throw ArgumentError("sweep needs at least one sample");
    }
    const std::vector<double> grid =
        config.beta_grid.empty() ? SweepConfig::default_grid() : config.beta_grid;
    for (double b : grid) {
        if (!(b >= 0.0) || b >= 1.0) {
            throw ArgumentError("beta grid values must lie in [0, 1)");
        }
    }

    const std::size_t grid_size = grid.size();
    SweepResult result;
    result.rows.resize(static_cast<std::size_t>(config.samples) * grid_size);

    auto run_sample = [&](int sample) {
        Instance base = random_instance(config.n_types, config.n_categories, 0.0,
                                        RngStream{config.seed, static_cast<std::uint64_t>(sample)},
                                        config.rule);
        for (std::size_t g = 0; g < grid_size; ++g) {
            Instance inst = base.with_beta(grid[g]);
            OptimalSolver optimal(inst);
            FarsightedSolver farsighted(inst);
            const State start = initial_state(inst);

            RatioRow row;
            row.beta = grid[g];
            row.sample_id = sample;
            row.v_opt = optimal.solve(start).value;
            row.v_farsighted = farsighted.solve(start).value;
            row.v_naive = evaluate_policy(inst, Policy::naive_greedy());
            if (row.v_opt > kProbTol) {
                row.ratio_farsighted = row.v_farsighted / row.v_opt;
                row.ratio_naive = row.v_naive / row.v_opt;
            }
            result.rows[static_cast<std::size_t>(sample) * grid_size + g] = row;
        }
    };

    int threads = std::max(1, config.threads);
    if (threads == 1) {
        for (int s = 0; s < config.samples; ++s) run_sample(s);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (int s = w; s < config.samples; s += threads) run_sample(s);
            });
        }
        for (auto& t : pool) t.join();
    }

    for (std::size_t g = 0; g < grid_size; ++g) {
        SweepAggregate agg;
        agg.beta = grid[g];
        agg.min_ratio_farsighted = 2.0;
        agg.min_ratio_naive = 2.0;
        for (int s = 0; s < config.samples; ++s) {
            const RatioRow& row = result.rows[static_cast<std::size_t>(s) * grid_size + g];
            agg.avg_ratio_farsighted += row.ratio_farsighted;
            agg.avg_ratio_naive += row.ratio_naive;
            agg.min_ratio_farsighted = std::min(agg.min_ratio_farsighted, row.ratio_farsighted);
            agg.min_ratio_naive = std::min(agg.min_ratio_naive, row.ratio_naive);
        }
        agg.avg_ratio_farsighted /= config.samples;
        agg.avg_ratio_naive /= config.samples;
        result.aggregates.push_back(agg);
    }
    return result;
}

namespace {

std::string g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void emit_csv(const SweepResult& result, const std::string& rows_path,
              const std::string& summary_path) {
    if (result.rows.empty()) {
        throw ArgumentError("nothing to emit: the sweep produced no rows");
    }
    std::ofstream rows(rows_path);
    if (!rows) throw IoError("cannot open file for writing: " + rows_path);
    rows << "beta,sample_id,v_opt,v_farsighted,v_naive,ratio_farsighted,ratio_naive\n";
    for (const RatioRow& r : result.rows) {
        rows << g12(r.beta) << ',' << r.sample_id << ',' << g12(r.v_opt) << ','
             << g12(r.v_farsighted) << ',' << g12(r.v_naive) << ','
             << g12(r.ratio_farsighted) << ',' << g12(r.ratio_naive) << '\n';
    }
    if (!rows) throw IoError("failed writing " + rows_path);

    std::ofstream summary(summary_path);
    if (!summary) throw IoError("cannot open file for writing: " + summary_path);
    summary << "beta,avg_ratio_farsighted,min_ratio_farsighted,avg_ratio_naive,min_ratio_naive\n";
    for (const SweepAggregate& a : result.aggregates) {
        summary << g12(a.beta) << ',' << g12(a.avg_ratio_farsighted) << ','
                << g12(a.min_ratio_farsighted) << ',' << g12(a.avg_ratio_naive) << ','
                << g12(a.min_ratio_naive) << '\n';
    }
    if (!summary) throw IoError("failed writing " + summary_path);
}

}  // namespace srm
