#include "srm.h"

#include <cstring>
#include <memory>
#include <string>

#include "srm/bench.hpp"
#include "srm/bounds.hpp"
#include "srm/report.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return SRM_OK;
    } catch (const srm::Error& e) {
        g_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SRM_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

srm::Policy policy_from_id(int policy) {
    switch (policy) {
        case SRM_POLICY_OPTIMAL: return srm::Policy::optimal();
        case SRM_POLICY_OPTIMAL_NAIVE: return srm::Policy::optimal_naive();
        case SRM_POLICY_FARSIGHTED: return srm::Policy::farsighted();
        case SRM_POLICY_NAIVE_GREEDY: return srm::Policy::naive_greedy();
        case SRM_POLICY_ANTI_GREEDY: return srm::Policy::anti_greedy();
        default: throw srm::ArgumentError("unknown policy id " + std::to_string(policy));
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw srm::ArgumentError(what);
}

}  // namespace

struct srm_instance {
    srm::Instance impl;
};

struct srm_state {
    srm::State impl;
};

struct srm_report {
    double value = 0.0;
    int action = -1;
    std::string plain;
    std::string detailed;
};

struct srm_session {
    std::unique_ptr<srm::Instance> inst;
    std::unique_ptr<srm::ClassChooser> chooser;
    std::unique_ptr<srm::Session> session;
};

extern "C" {

const char* srm_version(void) { return "1.0.0"; }

const char* srm_last_error(void) { return g_last_error.c_str(); }

void srm_string_free(char* text) { delete[] text; }

int srm_instance_parse(const char* json_text, srm_instance** out) {
    return guarded([&] {
        require(json_text && out, "null argument");
        *out = new srm_instance{srm::Instance::parse_json(json_text)};
    });
}

int srm_instance_load(const char* path, srm_instance** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new srm_instance{srm::Instance::load_file(path)};
    });
}

int srm_instance_save(const srm_instance* inst, const char* path) {
    return guarded([&] {
        require(inst && path, "null argument");
        inst->impl.save_file(path);
    });
}

int srm_instance_to_json(const srm_instance* inst, char** out_text) {
    return guarded([&] {
        require(inst && out_text, "null argument");
        *out_text = copy_string(inst->impl.to_json());
    });
}

int srm_instance_with_beta(const srm_instance* inst, double beta, srm_instance** out) {
    return guarded([&] {
        require(inst && out, "null argument");
        *out = new srm_instance{inst->impl.with_beta(beta)};
    });
}

int srm_instance_random(int n_types, int n_categories, double beta, int max_products,
                        uint64_t seed, srm_instance** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        srm::GenerationRule rule;
        rule.max_products = max_products < 1 ? 1 : max_products;
        *out = new srm_instance{
            srm::random_instance(n_types, n_categories, beta, srm::RngStream{seed, 0}, rule)};
    });
}

void srm_instance_free(srm_instance* inst) { delete inst; }

int srm_instance_n_types(const srm_instance* inst) { return inst->impl.n_types(); }

int srm_instance_n_categories(const srm_instance* inst) { return inst->impl.n_categories(); }

int srm_instance_total_products(const srm_instance* inst) { return inst->impl.total_products(); }

double srm_instance_beta(const srm_instance* inst) { return inst->impl.beta(); }

const char* srm_instance_category_name(const srm_instance* inst, int category) {
    if (!inst || category < 0 || category >= inst->impl.n_categories()) return nullptr;
    return inst->impl.category_name(category).c_str();
}

int srm_instance_category_by_name(const srm_instance* inst, const char* name) {
    if (!inst || !name) return -1;
    return inst->impl.category_by_name(name);
}

int srm_state_create(const srm_instance* inst, srm_state** out) {
    return guarded([&] {
        require(inst && out, "null argument");
        *out = new srm_state{srm::initial_state(inst->impl)};
    });
}

int srm_state_clone(const srm_state* state, srm_state** out) {
    return guarded([&] {
        require(state && out, "null argument");
        *out = new srm_state{state->impl};
    });
}

void srm_state_free(srm_state* state) { delete state; }

int srm_state_condition(const srm_instance* inst, srm_state* state, int category, int feedback) {
    return guarded([&] {
        require(inst && state, "null argument");
        state->impl = srm::condition(inst->impl, state->impl, category, feedback);
    });
}

int srm_state_num_surviving(const srm_state* state) {
    return srm::mask_count(state->impl.surviving);
}

int srm_state_num_remaining(const srm_state* state) {
    return srm::mask_count(state->impl.remaining);
}

int srm_state_has_type(const srm_state* state, int type) {
    if (!state || type < 0 || type >= 64) return 0;
    return srm::mask_has(state->impl.surviving, type) ? 1 : 0;
}

int srm_state_has_category(const srm_state* state, int category) {
    if (!state || category < 0 || category >= 64) return 0;
    return srm::mask_has(state->impl.remaining, category) ? 1 : 0;
}

int srm_relevance_probability(const srm_instance* inst, const srm_state* state, int category,
                              double* out) {
    return guarded([&] {
        require(inst && state && out, "null argument");
        *out = srm::relevance_probability(inst->impl, state->impl, category);
    });
}

int srm_solve(const srm_instance* inst, int policy, srm_report** out) {
    return guarded([&] {
        require(inst && out, "null argument");
        srm::SolveRender render = srm::render_solve(inst->impl, policy_from_id(policy));
        auto* report = new srm_report;
        report->value = render.value;
        report->action = render.action;
        report->plain = std::move(render.plain);
        report->detailed = std::move(render.detailed);
        *out = report;
    });
}

void srm_report_free(srm_report* report) { delete report; }

double srm_report_value(const srm_report* report) { return report->value; }

int srm_report_action(const srm_report* report) { return report->action; }

int srm_report_render(const srm_report* report, int explain, char** out_text) {
    return guarded([&] {
        require(report && out_text, "null argument");
        *out_text = copy_string(explain ? report->detailed : report->plain);
    });
}

int srm_evaluate(const srm_instance* inst, int policy, double* out_value) {
    return guarded([&] {
        require(inst && out_value, "null argument");
        srm::ClassChooser chooser(inst->impl, policy_from_id(policy));
        *out_value = chooser.solve_value(srm::initial_state(inst->impl));
    });
}

int srm_next_action(const srm_instance* inst, const srm_state* state, int policy,
                    int* out_category) {
    return guarded([&] {
        require(inst && state && out_category, "null argument");
        srm::ClassChooser chooser(inst->impl, policy_from_id(policy));
        auto product = srm::next_action(inst->impl, state->impl, chooser);
        *out_category = product ? product->category : -1;
    });
}

int srm_session_start(const srm_instance* inst, int policy, srm_session** out) {
    return guarded([&] {
        require(inst && out, "null argument");
        auto* session = new srm_session;
        session->inst = std::make_unique<srm::Instance>(inst->impl);
        session->chooser =
            std::make_unique<srm::ClassChooser>(*session->inst, policy_from_id(policy));
        session->session = std::make_unique<srm::Session>(*session->inst, *session->chooser);
        *out = session;
    });
}

void srm_session_free(srm_session* session) { delete session; }

int srm_session_next(srm_session* session, int* out_category, int* out_ordinal) {
    return guarded([&] {
        require(session && out_category && out_ordinal, "null argument");
        auto product = session->session->next();
        *out_category = product ? product->category : -1;
        *out_ordinal = product ? product->ordinal : -1;
    });
}

int srm_session_feed(srm_session* session, int feedback) {
    return guarded([&] {
        require(session != nullptr, "null argument");
        session->session->feed(feedback);
    });
}

int srm_session_payoff(const srm_session* session) { return session->session->payoff(); }

int srm_session_shown(const srm_session* session) { return session->session->shown_count(); }

int srm_simulate(const srm_instance* inst, int policy, long long runs, uint64_t seed,
                 int workers, double* out_mean, double* out_stderr) {
    return guarded([&] {
        require(inst && out_mean && out_stderr, "null argument");
        srm::MonteCarloResult result =
            srm::monte_carlo(inst->impl, policy_from_id(policy), runs, seed, workers);
        *out_mean = result.mean;
        *out_stderr = result.std_error;
    });
}

int srm_simulate_trace(const srm_instance* inst, int policy, uint64_t seed, uint64_t run_index,
                       char** out_text) {
    return guarded([&] {
        require(inst && out_text, "null argument");
        srm::SessionTrace trace = srm::run_session(inst->impl, policy_from_id(policy),
                                                   srm::RngStream{seed, run_index});
        *out_text = copy_string(srm::format_trace(inst->impl, trace));
    });
}

int srm_bound_farsighted(double beta, int l_min, int h, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        srm::BoundInputs in;
        in.beta = beta;
        in.l_min = l_min;
        in.h = h;
        in.l_total = l_min > h ? l_min : h;
        *out = srm::farsighted_bound(in);
    });
}

int srm_bound_naive(double beta, int l_min, int h, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        srm::BoundInputs in;
        in.beta = beta;
        in.l_min = l_min;
        in.h = h;
        in.l_total = l_min > h ? l_min : h;
        *out = srm::naive_bound(in);
    });
}

int srm_bound_universal(double beta, int l_total, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        srm::BoundInputs in;
        in.beta = beta;
        in.l_min = 1;
        in.h = 1;
        in.l_total = l_total;
        *out = srm::universal_bound(in);
    });
}

int srm_full_information(const srm_instance* inst, double* out_discounted, double* out_cap) {
    return guarded([&] {
        require(inst && out_discounted && out_cap, "null argument");
        srm::FullInformationValue v = srm::full_information_value(inst->impl);
        *out_discounted = v.discounted;
        *out_cap = v.cap;
    });
}

int srm_sweep(const srm_sweep_config* config, const char* rows_csv_path,
              const char* summary_csv_path) {
    return guarded([&] {
        require(config && rows_csv_path && summary_csv_path, "null argument");
        srm::SweepConfig cfg;
        cfg.n_types = config->n_types;
        cfg.n_categories = config->n_categories;
        cfg.samples = config->samples;
        cfg.seed = config->seed;
        cfg.threads = config->threads < 1 ? 1 : config->threads;
        cfg.rule.max_products = config->max_products < 1 ? 1 : config->max_products;
        double step = config->beta_step > 0.0 ? config->beta_step : 0.05;
        double top = config->beta_max > 0.0 ? config->beta_max : 0.95;
        for (double b = 0.0; b < top + step / 2; b += step) {
            if (b < 1.0) cfg.beta_grid.push_back(b);
        }
        srm::SweepResult result = srm::ratio_sweep(cfg);
        srm::emit_csv(result, rows_csv_path, summary_csv_path);
    });
}

}  // extern "C"
