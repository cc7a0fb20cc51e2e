// Command-line front end for the srm solver library. Talks to the shared
// library exclusively through the C interface in srm.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "srm.h"

namespace {

struct InstanceDeleter {
    void operator()(srm_instance* p) const { srm_instance_free(p); }
};
struct StateDeleter {
    void operator()(srm_state* p) const { srm_state_free(p); }
};
struct ReportDeleter {
    void operator()(srm_report* p) const { srm_report_free(p); }
};
struct SessionDeleter {
    void operator()(srm_session* p) const { srm_session_free(p); }
};

using InstancePtr = std::unique_ptr<srm_instance, InstanceDeleter>;
using ReportPtr = std::unique_ptr<srm_report, ReportDeleter>;
using SessionPtr = std::unique_ptr<srm_session, SessionDeleter>;

// Failures end the process with the library's status code, which doubles as
// the documented exit code (2 usage, 3 validation, 4 I/O, 5 inconsistency).
[[noreturn]] void fail(int status) {
    std::cerr << "error: " << srm_last_error() << "\n";
    std::exit(status);
}

void check(int status) {
    if (status != SRM_OK) fail(status);
}

int policy_id(const std::string& name) {
    if (name == "optimal") return SRM_POLICY_OPTIMAL;
    if (name == "optimal-naive") return SRM_POLICY_OPTIMAL_NAIVE;
    if (name == "farsighted") return SRM_POLICY_FARSIGHTED;
    if (name == "naive-greedy") return SRM_POLICY_NAIVE_GREEDY;
    if (name == "anti-greedy") return SRM_POLICY_ANTI_GREEDY;
    std::cerr << "error: unknown policy \"" << name << "\"\n";
    std::exit(2);
}

InstancePtr load_instance(const std::string& path, bool beta_set, double beta) {
    srm_instance* raw = nullptr;
    check(srm_instance_load(path.c_str(), &raw));
    InstancePtr inst(raw);
    if (beta_set) {
        srm_instance* adjusted = nullptr;
        check(srm_instance_with_beta(inst.get(), beta, &adjusted));
        inst.reset(adjusted);
    }
    return inst;
}

std::string product_label(const srm_instance* inst, int category, int ordinal) {
    return std::string(srm_instance_category_name(inst, category)) + "." +
           std::to_string(ordinal + 1);
}

int cmd_solve(const std::string& file, const std::string& policy, bool beta_set, double beta,
              bool explain) {
    InstancePtr inst = load_instance(file, beta_set, beta);
    srm_report* raw = nullptr;
    check(srm_solve(inst.get(), policy_id(policy), &raw));
    ReportPtr report(raw);
    char* text = nullptr;
    check(srm_report_render(report.get(), explain ? 1 : 0, &text));
    std::cout << text;
    srm_string_free(text);
    return 0;
}

int cmd_evaluate(const std::string& file, const std::string& policy, bool beta_set, double beta) {
    InstancePtr inst = load_instance(file, beta_set, beta);
    double value = 0.0;
    check(srm_evaluate(inst.get(), policy_id(policy), &value));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    std::cout << "policy: " << policy << "\n" << "value: " << buf << "\n";
    return 0;
}

int cmd_simulate(const std::string& file, const std::string& policy, bool beta_set, double beta,
                 long long runs, std::uint64_t seed, int workers, bool trace) {
    InstancePtr inst = load_instance(file, beta_set, beta);
    if (trace) {
        for (long long r = 0; r < runs; ++r) {
            char* text = nullptr;
            check(srm_simulate_trace(inst.get(), policy_id(policy), seed,
                                     static_cast<std::uint64_t>(r), &text));
            std::cout << "run " << r << ":\n" << text;
            srm_string_free(text);
        }
    }
    double mean = 0.0, stderr_out = 0.0;
    check(srm_simulate(inst.get(), policy_id(policy), runs, seed, workers, &mean, &stderr_out));
    char mbuf[64], sbuf[64];
    std::snprintf(mbuf, sizeof mbuf, "%.12g", mean);
    std::snprintf(sbuf, sizeof sbuf, "%.12g", stderr_out);
    std::cout << "runs: " << runs << "\n"
              << "mean: " << mbuf << "\n"
              << "stderr: " << sbuf << "\n";
    return 0;
}

int cmd_sweep(const srm_sweep_config& config, const std::string& rows_path,
              const std::string& summary_path) {
    check(srm_sweep(&config, rows_path.c_str(), summary_path.c_str()));
    std::cout << "rows: " << rows_path << "\n" << "summary: " << summary_path << "\n";
    return 0;
}

int cmd_gen(int n_types, int n_categories, double beta, std::uint64_t seed, int max_products,
            const std::string& out_path) {
    srm_instance* raw = nullptr;
    check(srm_instance_random(n_types, n_categories, beta, max_products, seed, &raw));
    InstancePtr inst(raw);
    check(srm_instance_save(inst.get(), out_path.c_str()));
    std::cout << "wrote: " << out_path << "\n";
    return 0;
}

int cmd_recommend(const std::string& file, const std::string& policy, bool beta_set, double beta) {
    InstancePtr inst = load_instance(file, beta_set, beta);
    srm_session* raw = nullptr;
    check(srm_session_start(inst.get(), policy_id(policy), &raw));
    SessionPtr session(raw);

    while (true) {
        int category = -1, ordinal = -1;
        check(srm_session_next(session.get(), &category, &ordinal));
        if (category < 0) break;
        std::cout << product_label(inst.get(), category, ordinal) << "\n" << std::flush;

        int feedback = -1;
        while (feedback < 0) {
            std::cerr << "feedback (0/1): " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) {
                std::cout << "payoff: " << srm_session_payoff(session.get()) << "\n";
                return 0;
            }
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line == "0" || line == "1") {
                feedback = line[0] - '0';
            } else {
                std::cerr << "please answer 0 or 1\n";
            }
        }
        check(srm_session_feed(session.get(), feedback));
    }
    std::cout << "payoff: " << srm_session_payoff(session.get()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"srm — sequential relevance maximization: exact and greedy "
                 "recommendation policies under binary feedback"};
    app.set_version_flag("--version", srm_version());
    app.require_subcommand(1);
    const std::string policy_help =
        "policy: optimal, optimal-naive, farsighted, naive-greedy, anti-greedy";

    std::string file, policy = "optimal";
    double beta = 0.0;
    bool explain = false;

    auto* solve = app.add_subcommand("solve", "compute a policy's exact value and plan");
    solve->add_option("instance", file, "instance JSON file")->required();
    auto* solve_beta = solve->add_option("--beta", beta, "override the instance's beta");
    solve->add_option("--policy", policy, policy_help);
    solve->add_flag("--explain", explain, "also print the class partition and solver statistics");

    auto* evaluate = app.add_subcommand("evaluate", "exact expected payoff of a policy");
    evaluate->add_option("instance", file, "instance JSON file")->required();
    auto* eval_beta = evaluate->add_option("--beta", beta, "override the instance's beta");
    evaluate->add_option("--policy", policy, policy_help);

    long long runs = 10000;
    std::uint64_t seed = 0;
    int workers = 1;
    bool trace = false;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo sessions for a policy");
    simulate->add_option("instance", file, "instance JSON file")->required();
    auto* sim_beta = simulate->add_option("--beta", beta, "override the instance's beta");
    simulate->add_option("--policy", policy, policy_help);
    simulate->add_option("--runs", runs, "number of sessions");
    simulate->add_option("--seed", seed, "stream seed");
    simulate->add_option("--workers", workers, "worker threads (result is identical)");
    simulate->add_flag("--trace", trace, "dump every session, one line per shown product");

    srm_sweep_config config{5, 5, 50, 1, 1, 0, 0.05, 0.95};
    std::string rows_path = "sweep_rows.csv";
    std::string summary_path = "sweep_summary.csv";
    auto* sweep = app.add_subcommand(
        "sweep", "exact heuristic-vs-optimal ratios over random instances and a beta grid");
    sweep->add_option("--n-types", config.n_types, "types per sampled instance");
    sweep->add_option("--n-categories", config.n_categories, "categories per sampled instance");
    sweep->add_option("--samples", config.samples, "number of sampled instances");
    sweep->add_option("--seed", config.seed, "generator seed");
    sweep->add_option("--max-products", config.max_products, "category sizes drawn from 1..N");
    sweep->add_option("--threads", config.threads, "worker threads");
    sweep->add_option("--beta-step", config.beta_step, "grid step");
    sweep->add_option("--beta-max", config.beta_max, "largest grid beta (must stay below 1)");
    sweep->add_option("--rows", rows_path, "per-sample CSV path");
    sweep->add_option("--summary", summary_path, "per-beta aggregate CSV path");

    int n_types = 3, n_categories = 3, max_products = 1;
    double gen_beta = 0.5;
    std::string out_path = "instance.json";
    auto* gen = app.add_subcommand("gen", "write a random instance file");
    gen->add_option("--n-types", n_types, "number of types");
    gen->add_option("--n-categories", n_categories, "number of categories");
    gen->add_option("--beta", gen_beta, "continuation probability");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--max-products", max_products, "category sizes drawn from 1..N");
    gen->add_option("--out", out_path, "destination file");

    auto* recommend =
        app.add_subcommand("recommend", "interactive loop: product ids out, 0/1 feedback in");
    recommend->add_option("instance", file, "instance JSON file")->required();
    auto* rec_beta = recommend->add_option("--beta", beta, "override the instance's beta");
    recommend->add_option("--policy", policy, policy_help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (solve->parsed()) return cmd_solve(file, policy, !solve_beta->empty(), beta, explain);
    if (evaluate->parsed()) return cmd_evaluate(file, policy, !eval_beta->empty(), beta);
    if (simulate->parsed())
        return cmd_simulate(file, policy, !sim_beta->empty(), beta, runs, seed, workers, trace);
    if (sweep->parsed()) return cmd_sweep(config, rows_path, summary_path);
    if (gen->parsed()) return cmd_gen(n_types, n_categories, gen_beta, seed, max_products, out_path);
    if (recommend->parsed()) return cmd_recommend(file, policy, !rec_beta->empty(), beta);
    return 2;
}
