#include "srm/policies.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace srm {

double naive_class_score(const Instance& inst, const State& state, const CategoryClass& cls) {
    double p = inst.mass(cls.relevant_types) / inst.mass(state.surviving);
    return discounted_run(inst.beta(), cls.product_count) * p;
}

int naive_greedy_class(const Instance& inst, const State& state,
                       const ClassPartition& partition) {
    int best = -1;
    double best_score = -1.0;
    for (int k = 0; k < partition.size(); ++k) {
        double score = naive_class_score(inst, state, partition.classes[k]);
        if (score > best_score) {
            best_score = score;
            best = k;
        }
    }
    return best;
}

Policy Policy::anti_greedy() {
    return custom("anti-greedy", [](const Instance& inst, const State& state,
                                    const ClassPartition& partition) {
        int worst = -1;
        double worst_score = 0.0;
        for (int k = 0; k < partition.size(); ++k) {
            double score = naive_class_score(inst, state, partition.classes[k]);
            if (worst < 0 || score < worst_score) {
                worst_score = score;
                worst = k;
            }
        }
        return worst;
    });
}

std::optional<Policy> Policy::by_name(const std::string& name) {
    if (name == "optimal") return optimal();
    if (name == "optimal-naive") return optimal_naive();
    if (name == "farsighted") return farsighted();
    if (name == "naive-greedy") return naive_greedy();
    if (name == "anti-greedy") return anti_greedy();
    return std::nullopt;
}

const ValueReport& FarsightedSolver::solve(const State& state) {
    solve_impl(state, true);
    return memo_.at(state);
}

double FarsightedSolver::solve_impl(const State& state, bool fresh_level) {
    if (fresh_level) level_stack_.push_back(LevelFrame{});

    double value = 0.0;
    auto it = memo_.find(state);
    if (it != memo_.end()) {
        ++stats_.memo_hits;
        value = it->second.value;
    } else {
        ++stats_.states_expanded;
        const ClassPartition partition = nondominated_classes(*inst_, state);
        const int k_count = partition.size();
        ValueReport report;
        if (k_count > 0) {
            stats_.max_classes = std::max(stats_.max_classes, k_count);
            // Recursive calls grow level_stack_, so address the frame by
            // index, never by reference.
            const std::size_t frame_index = level_stack_.size() - 1;
            if (level_stack_[frame_index].initial_classes < 0) {
                level_stack_[frame_index].initial_classes = k_count;
            }

            const double beta = inst_->beta();
            const double total = inst_->mass(state.surviving);
            if (total <= 0.0) {
                throw InconsistentFeedbackError("unreachable state: no surviving type carries mass");
            }

            double best = -1.0;
            int best_k = -1;
            double best_p = 0.0;
            for (int k = 0; k < k_count; ++k) {
                const CategoryClass& cls = partition.classes[k];
                const double p = inst_->mass(cls.relevant_types) / total;
                level_stack_[frame_index].subsolves += 1;
                ++stats_.subsolve_requests;
                double v_zoom = solve_impl(
                    State{cls.relevant_types, state.remaining & ~cls.categories}, true);
                double w = p * (discounted_run(beta, cls.product_count) +
                                pow_int(beta, cls.product_count) * v_zoom);
                if (w > best) {
                    best = w;
                    best_k = k;
                    best_p = p;
                }
            }

            const CategoryClass& chosen = partition.classes[best_k];
            report.value = best;
            report.best_category = chosen.lowest_category();
            report.level_ordering.push_back(chosen.categories);
            if (best_p < 1.0) {
                // Negative feedback stays within the current level.
                double v_rest = solve_impl(
                    State{state.surviving & ~chosen.relevant_types,
                          state.remaining & ~chosen.categories},
                    false);
                report.value += beta * (1.0 - best_p) * v_rest;
            }
        }
        value = report.value;
        memo_.emplace(state, std::move(report));
    }

    if (fresh_level) {
        LevelFrame frame = level_stack_.back();
        level_stack_.pop_back();
        if (frame.initial_classes > 0) {
            const std::uint64_t k0 = static_cast<std::uint64_t>(frame.initial_classes);
            stats_.max_level_subsolves = std::max(stats_.max_level_subsolves, frame.subsolves);
            if (frame.subsolves > k0 * (k0 + 1) / 2) stats_.level_budget_ok = false;
        }
    }
    return value;
}

std::vector<CategoryMask> FarsightedSolver::negative_chain(const State& state) {
    std::vector<CategoryMask> chain;
    State at = state;
    while (true) {
        const ValueReport& report = solve(at);
        if (report.level_ordering.empty()) break;
        CategoryMask cls = report.level_ordering.front();
        chain.push_back(cls);
        int lead = mask_lowest(cls);
        TypeMask relevant = inst_->column(lead) & at.surviving;
        TypeMask rest = at.surviving & ~relevant;
        if (rest == 0) break;  // a negative answer is impossible here
        at = State{rest, at.remaining & ~cls};
    }
    return chain;
}

ClassChooser::ClassChooser(const Instance& inst, Policy policy)
    : inst_(&inst), policy_(std::move(policy)) {
    switch (policy_.kind) {
        case PolicyKind::optimal:
            optimal_ = std::make_unique<OptimalSolver>(inst);
            break;
        case PolicyKind::optimal_naive:
            reference_ = std::make_unique<ReferenceSolver>(inst);
            break;
        case PolicyKind::farsighted:
            farsighted_ = std::make_unique<FarsightedSolver>(inst);
            break;
        case PolicyKind::naive_greedy:
            break;
        case PolicyKind::custom:
            if (!policy_.rule) {
                throw ArgumentError("custom policy has no decision rule");
            }
            break;
    }
}

int ClassChooser::choose(const State& state, const ClassPartition& partition) {
    if (partition.empty()) return -1;
    switch (policy_.kind) {
        case PolicyKind::optimal: {
            int category = optimal_->solve(state).best_category;
            return partition.class_of(category);
        }
        case PolicyKind::optimal_naive: {
            int category = reference_->solve(state).best_category;
            if (category < 0) return -1;
            int k = partition.class_of(category);
            if (k >= 0) return k;
            // A dominated category can tie the optimum; its dominating class
            // is worth at least as much, so redirect there.
            TypeMask m = inst_->column(category) & state.surviving;
            for (int c = 0; c < partition.size(); ++c) {
                if ((m & ~partition.classes[c].relevant_types) == 0) return c;
            }
            return 0;
        }
        case PolicyKind::farsighted: {
            int category = farsighted_->solve(state).best_category;
            return partition.class_of(category);
        }
        case PolicyKind::naive_greedy:
            return naive_greedy_class(*inst_, state, partition);
        case PolicyKind::custom:
            return policy_.rule(*inst_, state, partition);
    }
    return -1;
}

std::vector<CategoryMask> ClassChooser::level_ordering(const State& state) {
    if (policy_.kind == PolicyKind::optimal) {
        return optimal_->solve(state).level_ordering;
    }
    if (policy_.kind == PolicyKind::farsighted) {
        return farsighted_->negative_chain(state);
    }
    // Generic rules: walk the all-negative chain, re-deciding at each state.
    std::vector<CategoryMask> chain;
    State at = state;
    while (true) {
        ClassPartition partition = nondominated_classes(*inst_, at);
        int k = choose(at, partition);
        if (k < 0) break;
        const CategoryClass& cls = partition.classes[k];
        chain.push_back(cls.categories);
        TypeMask rest = at.surviving & ~cls.relevant_types;
        if (rest == 0) break;
        at = State{rest, at.remaining & ~cls.categories};
    }
    return chain;
}

double ClassChooser::solve_value(const State& state) {
    switch (policy_.kind) {
        case PolicyKind::optimal:
            return optimal_->solve(state).value;
        case PolicyKind::optimal_naive:
            return reference_->solve(state).value;
        case PolicyKind::farsighted:
            return farsighted_->solve(state).value;
        case PolicyKind::naive_greedy:
        case PolicyKind::custom: {
            PolicyEvaluator evaluator(*inst_, policy_);
            return evaluator.value(state);
        }
    }
    return 0.0;
}

std::string ClassChooser::stats_summary() const {
    const SolveStats* stats = nullptr;
    if (optimal_) stats = &optimal_->stats();
    if (reference_) stats = &reference_->stats();
    if (farsighted_) stats = &farsighted_->stats();
    if (!stats) return "";
    std::ostringstream oss;
    oss << "states expanded : " << stats->states_expanded << "\n"
        << "memo hits       : " << stats->memo_hits << "\n"
        << "subsolves       : " << stats->subsolve_requests << "\n";
    if (optimal_) {
        oss << "subset states   : " << stats->dp_subsets
            << " (largest level " << stats->max_level_subsets << ")\n";
    }
    if (farsighted_) {
        oss << "level subsolves : " << stats->max_level_subsolves << " (largest level)\n";
    }
    oss << "classes (max)   : " << stats->max_classes << "\n";
    return oss.str();
}

std::optional<ProductRef> next_action(const Instance& inst, const State& state,
                                      ClassChooser& chooser) {
    // Known-relevant categories are served first, lowest index first.
    for (int j : mask_indices(state.remaining)) {
        if ((inst.column(j) & state.surviving) == state.surviving) {
            return ProductRef{j, 0};
        }
    }
    ClassPartition partition = nondominated_classes(inst, state);
    if (partition.empty()) return std::nullopt;
    int k = chooser.choose(state, partition);
    if (k < 0) return std::nullopt;
    return ProductRef{partition.classes[k].lowest_category(), 0};
}

PolicyEvaluator::PolicyEvaluator(const Instance& inst, Policy policy)
    : inst_(&inst), chooser_(inst, std::move(policy)) {}

double PolicyEvaluator::value() { return value(initial_state(*inst_)); }

double PolicyEvaluator::value(const State& state) {
    auto it = memo_.find(state);
    if (it != memo_.end()) return it->second;

    const ClassPartition partition = nondominated_classes(*inst_, state);
    double v = 0.0;
    if (!partition.empty()) {
        const double beta = inst_->beta();
        const double total = inst_->mass(state.surviving);

        // At most one class can be known relevant; exhaust it outright.
        int sure = -1;
        for (int k = 0; k < partition.size(); ++k) {
            if (partition.classes[k].relevant_types == state.surviving) {
                sure = k;
                break;
            }
        }
        if (sure >= 0) {
            const CategoryClass& cls = partition.classes[sure];
            v = discounted_run(beta, cls.product_count) +
                pow_int(beta, cls.product_count) *
                    value(State{state.surviving, state.remaining & ~cls.categories});
        } else {
            int k = chooser_.choose(state, partition);
            if (k < 0) {
                throw ArgumentError("policy \"" + chooser_.policy().name +
                                    "\" returned no class at a decidable state");
            }
            const CategoryClass& cls = partition.classes[k];
            const double q = inst_->mass(cls.relevant_types) / total;
            const int test = cls.lowest_category();
            double v_pos = value(State{cls.relevant_types, state.remaining & ~cls.categories});
            double v_neg = value(State{state.surviving & ~cls.relevant_types,
                                       state.remaining & ~mask_bit(test)});
            v = q * (discounted_run(beta, cls.product_count) +
                     pow_int(beta, cls.product_count) * v_pos) +
                (1.0 - q) * beta * v_neg;
        }
    }
    memo_.emplace(state, v);
    return v;
}

double evaluate_policy(const Instance& inst, const Policy& policy) {
    PolicyEvaluator evaluator(inst, policy);
    return evaluator.value();
}

Session::Session(const Instance& inst, ClassChooser& chooser)
    : inst_(&inst), chooser_(&chooser), state_(initial_state(inst)) {}

std::optional<ProductRef> Session::next() {
    if (pending_) return pending_;
    if (!queue_.empty()) {
        pending_ = queue_.front();
        queue_.pop_front();
        pending_fresh_ = false;
        return pending_;
    }
    // Promote known-relevant categories into the queue before experimenting.
    for (int j : mask_indices(state_.remaining)) {
        if ((inst_->column(j) & state_.surviving) == state_.surviving) {
            state_ = condition(*inst_, state_, j, 1);
            for (int ordinal = 0; ordinal < inst_->products(j); ++ordinal) {
                queue_.push_back(ProductRef{j, ordinal});
            }
            pending_ = queue_.front();
            queue_.pop_front();
            // First product of the category: feedback 0 would contradict the
            // posterior, which feed() reports as an inconsistency.
            pending_fresh_ = false;
            return pending_;
        }
    }
    ClassPartition partition = nondominated_classes(*inst_, state_);
    if (partition.empty()) return std::nullopt;
    int k = chooser_->choose(state_, partition);
    if (k < 0) return std::nullopt;
    pending_ = ProductRef{partition.classes[k].lowest_category(), 0};
    pending_fresh_ = true;
    return pending_;
}

void Session::feed(int feedback) {
    if (!pending_) {
        throw ArgumentError("no pending recommendation to rate");
    }
    if (feedback != 0 && feedback != 1) {
        throw ArgumentError("feedback must be 0 or 1");
    }
    const ProductRef shown = *pending_;
    if (pending_fresh_) {
#ifndef NDEBUG
        if (feedback == 0 &&
            nondominated_classes(*inst_, state_).class_of(shown.category) >= 0) {
            assert(no_promotion_after_negative(*inst_, state_, shown.category));
        }
#endif
        State next_state = condition(*inst_, state_, shown.category, feedback);
        state_ = next_state;
        if (feedback == 1) {
            for (int ordinal = 1; ordinal < inst_->products(shown.category); ++ordinal) {
                queue_.push_back(ProductRef{shown.category, ordinal});
            }
        }
    } else if (feedback != 1) {
        throw InconsistentFeedbackError(
            "inconsistent observation: category " + inst_->category_name(shown.category) +
            " is already known relevant");
    }
    payoff_ += feedback;
    ++shown_;
    pending_.reset();
    pending_fresh_ = false;
}

}  // namespace srm
