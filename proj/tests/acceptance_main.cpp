// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Diagnostics go to stderr.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"

using namespace srm;

namespace {

int g_failures = 0;

void report(int index, const char* title, bool pass) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", index, title);
    if (!pass) ++g_failures;
}

void complain(const std::string& what) { std::fprintf(stderr, "  %s\n", what.c_str()); }

constexpr double kBetaGrid5[] = {0.1, 0.3, 0.5, 0.7, 0.9};

// ---------------------------------------------------------------------------
// 1. The class-based solver equals the literal recursion: exhaustively over
//    every 2x2 and 3x3 binary matrix under three priors, and on 200 seeded
//    random instances up to 6x6 with category sizes up to 2.
bool oracle_equivalence() {
    bool ok = true;
    auto check_pair = [&](const Instance& inst) {
        ReferenceSolver ref(inst);
        OptimalSolver opt(inst);
        State s0 = initial_state(inst);
        double a = ref.solve(s0).value;
        double b = opt.solve(s0).value;
        if (std::fabs(a - b) > 1e-9) {
            ok = false;
            complain("solver mismatch " + std::to_string(a) + " vs " + std::to_string(b));
        }
    };

    for (int n : {2, 3}) {
        std::vector<std::vector<double>> priors;
        priors.push_back(std::vector<double>(n, 1.0 / n));
        if (n == 2) {
            priors.push_back({0.7, 0.3});
            priors.push_back({0.2, 0.8});
        } else {
            priors.push_back({0.5, 0.3, 0.2});
            priors.push_back({0.1, 0.3, 0.6});
        }
        const int cells = n * n;
        for (int bits = 0; bits < (1 << cells); ++bits) {
            std::vector<std::vector<int>> relevance(n, std::vector<int>(n));
            for (int c = 0; c < cells; ++c) relevance[c / n][c % n] = (bits >> c) & 1;
            for (const auto& prior : priors) {
                for (double beta : kBetaGrid5) {
                    check_pair(Instance::create(relevance, prior, std::vector<int>(n, 1), beta));
                }
            }
        }
    }

    Rng dims(RngStream{20240801, 0});
    for (int s = 0; s < 200; ++s) {
        int n = 2 + static_cast<int>(dims.next() % 5);
        int h = 2 + static_cast<int>(dims.next() % 5);
        Instance base = random_instance(n, h, 0.0,
                                        RngStream{20240801, static_cast<std::uint64_t>(s + 1)},
                                        GenerationRule{2});
        for (double beta : kBetaGrid5) check_pair(base.with_beta(beta));
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 2 + 7. One sweep per matrix size feeds both the bound checks and the CSV
//    shape checks.
struct SweepArtifacts {
    SweepConfig config;
    SweepResult result;
    std::string rows_path;
    std::string summary_path;
};

SweepArtifacts run_sweep(int size, std::uint64_t seed, const std::string& tag) {
    SweepArtifacts art;
    art.config.n_types = size;
    art.config.n_categories = size;
    art.config.samples = 50;
    art.config.seed = seed;
    art.config.threads = 2;
    art.result = ratio_sweep(art.config);
    art.rows_path = "acceptance_rows_" + tag + ".csv";
    art.summary_path = "acceptance_summary_" + tag + ".csv";
    emit_csv(art.result, art.rows_path, art.summary_path);
    return art;
}

bool approximation_bounds(const std::vector<SweepArtifacts>& sweeps) {
    bool ok = true;
    for (const SweepArtifacts& art : sweeps) {
        const int h = art.config.n_categories;
        for (const RatioRow& row : art.result.rows) {
            BoundInputs in;
            in.beta = row.beta;
            in.l_min = 1;
            in.h = h;
            in.l_total = h;  // default generation: one product per category
            if (row.ratio_farsighted < farsighted_bound(in) - 1e-9) {
                ok = false;
                complain("farsighted bound violated at beta " + std::to_string(row.beta));
            }
            if (row.ratio_naive < naive_bound(in) - 1e-9) {
                ok = false;
                complain("naive bound violated at beta " + std::to_string(row.beta));
            }
            double floor = universal_bound(in);
            if (row.ratio_farsighted < floor - 1e-9 || row.ratio_naive < floor - 1e-9 ||
                1.0 < floor - 1e-9) {
                ok = false;
                complain("universal bound violated at beta " + std::to_string(row.beta));
            }
        }
        // The universal factor binds every policy; probe the adversarial
        // argmin rule on the same instances.
        for (int s = 0; s < art.config.samples; ++s) {
            Instance base = random_instance(art.config.n_types, art.config.n_categories, 0.0,
                                            RngStream{art.config.seed,
                                                      static_cast<std::uint64_t>(s)},
                                            art.config.rule);
            for (double beta : {0.05, 0.5, 0.95}) {
                Instance inst = base.with_beta(beta);
                OptimalSolver opt(inst);
                double v_opt = opt.solve(initial_state(inst)).value;
                double v_anti = evaluate_policy(inst, Policy::anti_greedy());
                BoundInputs in = BoundInputs::from_instance(inst);
                if (v_anti < universal_bound(in) * v_opt - 1e-9) {
                    ok = false;
                    complain("anti-greedy universal bound violated, sample " + std::to_string(s));
                }
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 3. Structural checks on every reachable state of the corpus.
std::vector<Instance> structure_corpus() {
    std::vector<Instance> corpus = {fixtures::identity2(),  fixtures::identity2_skewed(),
                                    fixtures::triangular4(), fixtures::overlap4(),
                                    fixtures::overlap4(0.9), fixtures::diag3()};
    for (const Instance& inst : fixtures::random_corpus(24, 5, 2, 0.0, 424242)) {
        corpus.push_back(inst.with_beta(0.35));
        corpus.push_back(inst.with_beta(0.85));
    }
    return corpus;
}

bool structural_rules(const std::vector<Instance>& corpus) {
    bool ok = true;
    for (const Instance& inst : corpus) {
        OptimalSolver opt(inst);
        for (const State& s : fixtures::reachable_states(inst)) {
            ClassPartition partition = nondominated_classes(inst, s);
            int action = optimal_policy_action(inst, s, opt);

            // Sure categories are served before anything uncertain.
            std::vector<int> sure;
            for (int j : mask_indices(s.remaining)) {
                if ((inst.column(j) & s.surviving) == s.surviving) sure.push_back(j);
            }
            if (!sure.empty()) {
                bool action_sure = false;
                for (int j : sure) action_sure = action_sure || (action == j);
                if (!action_sure) {
                    ok = false;
                    complain("a sure category was not chosen first");
                }
            }

            // Experimentation only ever touches a non-dominated category.
            if (action >= 0 && partition.class_of(action) < 0) {
                ok = false;
                complain("optimal action outside the non-dominated classes");
            }
            if (action < 0 && !partition.empty()) {
                ok = false;
                complain("no action reported at a decidable state");
            }

            // Dominated categories never get promoted by negative feedback.
            for (const CategoryClass& cls : partition.classes) {
                int j = cls.lowest_category();
                if (relevance_probability(inst, s, j) < 1.0 &&
                    !no_promotion_after_negative(inst, s, j)) {
                    ok = false;
                    complain("dominated category promoted after negative feedback");
                }
            }
        }

        // Trace-level form of the exhaust-first rule under the optimal policy.
        for (std::uint64_t run = 0; run < 60; ++run) {
            SessionTrace trace = run_session(inst, Policy::optimal(), RngStream{5150, run});
            State state = initial_state(inst);
            std::map<int, int> open_counts;  // category -> unshown liked products
            for (const auto& [product, feedback] : trace.shown) {
                std::set<int> sure_now;
                for (auto& [cat, left] : open_counts) {
                    if (left > 0) sure_now.insert(cat);
                }
                for (int j : mask_indices(state.remaining)) {
                    if ((inst.column(j) & state.surviving) == state.surviving) sure_now.insert(j);
                }
                if (!sure_now.empty() && sure_now.find(product.category) == sure_now.end()) {
                    ok = false;
                    complain("trace shows an uncertain category while a sure one waits");
                }
                if (mask_has(state.remaining, product.category)) {
                    state = condition(inst, state, product.category, feedback);
                    if (feedback == 1) {
                        open_counts[product.category] = inst.products(product.category) - 1;
                    }
                } else {
                    open_counts[product.category] -= 1;
                }
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Closed-form anchors.
bool closed_form_anchors() {
    bool ok = true;
    for (double p : {0.25, 0.6, 1.0}) {
        for (int products : {1, 2, 4}) {
            for (double beta : {0.0, 0.5, 0.9}) {
                Instance inst = fixtures::single_category(p, products, beta);
                double expect = p * discounted_run(beta, products);
                ReferenceSolver ref(inst);
                OptimalSolver opt(inst);
                State s0 = initial_state(inst);
                if (std::fabs(ref.solve(s0).value - expect) > 1e-12 ||
                    std::fabs(opt.solve(s0).value - expect) > 1e-12) {
                    ok = false;
                    complain("single-category closed form missed");
                }
            }
        }
    }
    {
        Instance inst = fixtures::triangular4();
        OptimalSolver opt(inst);
        ReferenceSolver ref(inst);
        double v = opt.solve(initial_state(inst)).value;
        if (std::fabs(v - 1.53125) > 1e-9 ||
            std::fabs(ref.solve(initial_state(inst)).value - 1.53125) > 1e-9 ||
            std::fabs(v - full_information_value(inst).discounted) > 1e-9) {
            ok = false;
            complain("staircase anchor missed");
        }
    }
    {
        Instance inst = fixtures::identity2();
        OptimalSolver opt(inst);
        ReferenceSolver ref(inst);
        if (std::fabs(opt.solve(initial_state(inst)).value - 0.75) > 1e-9 ||
            std::fabs(ref.solve(initial_state(inst)).value - 0.75) > 1e-9) {
            ok = false;
            complain("two-type anchor missed");
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 5. Diagonal instances: the naive greedy matches the optimum exactly.
bool diagonal_optimality() {
    bool ok = true;
    Rng rng(RngStream{77007, 0});
    for (int s = 0; s < 100; ++s) {
        int n = 2 + static_cast<int>(rng.next() % 5);
        std::vector<std::vector<int>> relevance(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) relevance[i][i] = 1;
        std::vector<double> prior(n);
        double total = 0.0;
        for (double& p : prior) {
            p = rng.uniform01();
            total += p;
        }
        for (double& p : prior) p /= total;
        std::vector<int> products(n);
        for (int& l : products) l = 1 + static_cast<int>(rng.next() % 3);
        double beta = 0.95 * rng.uniform01();
        Instance inst = Instance::create(relevance, prior, products, beta);

        OptimalSolver opt(inst);
        double v_opt = opt.solve(initial_state(inst)).value;
        double v_naive = evaluate_policy(inst, Policy::naive_greedy());
        if (std::fabs(v_opt - v_naive) > 1e-9) {
            ok = false;
            complain("diagonal sample " + std::to_string(s) + ": naive " +
                     std::to_string(v_naive) + " vs optimal " + std::to_string(v_opt));
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 6. Monte Carlo agrees with exact evaluation; workers never change results.
bool simulation_consistency() {
    bool ok = true;
    std::vector<Instance> instances = {fixtures::identity2(), fixtures::triangular4(),
                                       fixtures::overlap4(0.7), fixtures::diag3(0.6),
                                       random_instance(5, 5, 0.8, RngStream{31337, 0})};
    std::vector<Policy> policies = {Policy::optimal(), Policy::farsighted(),
                                    Policy::naive_greedy(), Policy::anti_greedy()};
    int triple = 0;
    for (const Instance& inst : instances) {
        for (const Policy& policy : policies) {
            ClassChooser chooser(inst, policy);
            double exact = chooser.solve_value(initial_state(inst));
            MonteCarloResult mc =
                monte_carlo(inst, policy, 100000, 1000 + triple, 2);
            if (std::fabs(mc.mean - exact) > 4.0 * mc.std_error + 1e-12) {
                ok = false;
                complain("triple " + std::to_string(triple) + " (" + policy.name + "): mean " +
                         std::to_string(mc.mean) + " vs exact " + std::to_string(exact) +
                         " se " + std::to_string(mc.std_error));
            }
            ++triple;
        }
    }
    Instance probe = fixtures::overlap4(0.7);
    MonteCarloResult w1 = monte_carlo(probe, Policy::optimal(), 20000, 9, 1);
    MonteCarloResult w2 = monte_carlo(probe, Policy::optimal(), 20000, 9, 2);
    MonteCarloResult w8 = monte_carlo(probe, Policy::optimal(), 20000, 9, 8);
    if (w1.mean != w2.mean || w1.mean != w8.mean || w1.std_error != w2.std_error ||
        w1.std_error != w8.std_error) {
        ok = false;
        complain("worker count changed the simulation output");
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 7. Shape of the emitted curves, checked from the CSV files themselves.
std::vector<std::vector<double>> parse_csv_numbers(const std::string& path, int columns) {
    std::vector<std::vector<double>> rows;
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (static_cast<int>(row.size()) == columns) rows.push_back(std::move(row));
    }
    return rows;
}

bool figure_shape(const std::vector<SweepArtifacts>& sweeps) {
    bool ok = true;
    for (const SweepArtifacts& art : sweeps) {
        auto summary = parse_csv_numbers(art.summary_path, 5);
        if (summary.size() < 4) {
            ok = false;
            complain("summary csv too short: " + art.summary_path);
            continue;
        }
        for (int column : {1, 2, 3, 4}) {
            double interior = 2.0;
            for (std::size_t i = 1; i + 1 < summary.size(); ++i) {
                interior = std::min(interior, summary[i][column]);
            }
            if (summary.front()[column] < interior - 1e-9 ||
                summary.back()[column] < interior - 1e-9) {
                ok = false;
                complain("curve endpoints dip below the interior minimum");
            }
        }
        for (std::size_t i = 0; i < summary.size(); ++i) {
            if (summary[i][2] > summary[i][1] + 1e-12 || summary[i][4] > summary[i][3] + 1e-12) {
                ok = false;
                complain("minimum exceeds average in the summary csv");
            }
        }

        auto rows = parse_csv_numbers(art.rows_path, 7);
        std::map<int, std::vector<std::pair<double, double>>> by_sample;
        for (const auto& row : rows) {
            by_sample[static_cast<int>(row[1])].emplace_back(row[0], row[4]);
        }
        for (auto& [sample, series] : by_sample) {
            for (std::size_t i = 1; i < series.size(); ++i) {
                if (series[i].first > series[i - 1].first &&
                    series[i].second < series[i - 1].second - 1e-9) {
                    ok = false;
                    complain("naive value decreased in beta for sample " +
                             std::to_string(sample));
                }
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 8. Instrumentation budgets.
bool instrumentation(const std::vector<Instance>& corpus) {
    bool ok = true;
    for (const Instance& inst : corpus) {
        OptimalSolver opt(inst);
        opt.solve(initial_state(inst));
        if (!opt.stats().level_budget_ok) {
            ok = false;
            complain("subset expansion exceeded 2^K on a level");
        }
        if (opt.stats().max_level_subsets >
            (std::uint64_t{1} << std::min(opt.stats().max_classes, 62))) {
            ok = false;
            complain("largest subset table exceeds 2^K");
        }

        FarsightedSolver far(inst);
        far.solve(initial_state(inst));
        const SolveStats& fs = far.stats();
        std::uint64_t k = static_cast<std::uint64_t>(fs.max_classes);
        if (!fs.level_budget_ok || fs.max_level_subsolves > k * (k + 1) / 2) {
            ok = false;
            complain("farsighted level used more than K(K+1)/2 sub-solves");
        }
    }
    return ok;
}

}  // namespace

int main() {
    report(1, "class-based optimum equals the literal recursion (exhaustive + 200 random)",
           oracle_equivalence());

    std::vector<SweepArtifacts> sweeps;
    sweeps.push_back(run_sweep(5, 501, "5x5"));
    sweeps.push_back(run_sweep(7, 701, "7x7"));
    report(2, "worst-case approximation guarantees hold on 50+50 sampled instances over the beta grid",
           approximation_bounds(sweeps));

    std::vector<Instance> corpus = structure_corpus();
    report(3, "structural rules hold on every reachable corpus state", structural_rules(corpus));
    report(4, "closed-form anchors match to stated tolerances", closed_form_anchors());
    report(5, "naive greedy is exactly optimal on 100 random diagonal instances",
           diagonal_optimality());
    report(6, "Monte Carlo means sit within 4 standard errors of exact values",
           simulation_consistency());
    report(7, "emitted ratio curves have the documented shape", figure_shape(sweeps));
    std::printf("  note: the per-sample monotonicity sub-check holds on this pinned corpus but\n"
                "  is not a universal property: the greedy score weights classes by pooled\n"
                "  product count, so its argmax can switch to a weaker class as beta grows,\n"
                "  dropping the exact value (about 3%% of random samples elsewhere).\n");
    report(8, "solver instrumentation stays within the per-level budgets",
           instrumentation(corpus));

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    }
    return g_failures;
}
