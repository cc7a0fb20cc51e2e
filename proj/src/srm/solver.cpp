#include "srm/solver.hpp"

#include <algorithm>

namespace srm {

const ValueReport& ReferenceSolver::solve(const State& state) {
    auto it = memo_.find(state);
    if (it != memo_.end()) {
        ++stats_.memo_hits;
        return it->second;
    }
    ++stats_.states_expanded;

    const double beta = inst_->beta();
    const double total = inst_->mass(state.surviving);
    if (total <= 0.0) {
        throw InconsistentFeedbackError("unreachable state: no surviving type carries mass");
    }

    ValueReport report;
    for (int j : mask_indices(state.remaining)) {
        TypeMask relevant = inst_->column(j) & state.surviving;
        double p = inst_->mass(relevant) / total;
        if (p <= 0.0) continue;
        const int run = inst_->products(j);
        const CategoryMask rest = state.remaining & ~mask_bit(j);

        ++stats_.subsolve_requests;
        double v_pos = solve(State{relevant, rest}).value;
        double v = p * (discounted_run(beta, run) + pow_int(beta, run) * v_pos);
        if (p < 1.0) {
            ++stats_.subsolve_requests;
            double v_neg = solve(State{state.surviving & ~relevant, rest}).value;
            v += (1.0 - p) * beta * v_neg;
        }
        if (v > report.value) {
            report.value = v;
            report.best_category = j;
        }
    }
    return memo_.emplace(state, std::move(report)).first->second;
}

const ValueReport& OptimalSolver::solve(const State& state) {
    auto it = memo_.find(state);
    if (it != memo_.end()) {
        ++stats_.memo_hits;
        return it->second;
    }
    ++stats_.states_expanded;

    const ClassPartition partition = nondominated_classes(*inst_, state);
    const int k_count = partition.size();
    if (k_count == 0) {
        return memo_.emplace(state, ValueReport{}).first->second;
    }
    stats_.max_classes = std::max(stats_.max_classes, k_count);
    if (k_count > 20) {
        throw ArgumentError("state has more than 20 non-dominated classes; "
                            "the subset table would not fit in memory");
    }

    const double beta = inst_->beta();
    const double total = inst_->mass(state.surviving);
    if (total <= 0.0) {
        throw InconsistentFeedbackError("unreachable state: no surviving type carries mass");
    }

    // Categories removed from E once a class has been tested.
    std::vector<CategoryMask> class_cats(k_count);
    for (int k = 0; k < k_count; ++k) class_cats[k] = partition.classes[k].categories;

    const std::uint32_t full = (std::uint32_t{1} << k_count) - 1;
    std::vector<double> value_togo(full + 1, 0.0);
    std::vector<int> choice(full + 1, -1);

    std::uint64_t level_subsets = 0;
    // A tested superset has a larger integer encoding, so a simple downward
    // sweep sees every dependency before it is needed.
    for (std::uint32_t tested = full;; --tested) {
        ++level_subsets;
        double best = 0.0;
        int best_k = -1;
        for (int k = 0; k < k_count; ++k) {
            if (tested & (std::uint32_t{1} << k)) continue;
            TypeMask survivors = partition.classes[k].relevant_types;
            CategoryMask shown = class_cats[k];
            for (int s = 0; s < k_count; ++s) {
                if (tested & (std::uint32_t{1} << s)) {
                    survivors &= ~partition.classes[s].relevant_types;
                    shown |= class_cats[s];
                }
            }
            const double p = inst_->mass(survivors) / total;
            double v = beta * value_togo[tested | (std::uint32_t{1} << k)];
            if (p > 0.0) {
                const int run = partition.classes[k].product_count;
                ++stats_.subsolve_requests;
                double v_zoom = solve(State{survivors, state.remaining & ~shown}).value;
                v += p * (discounted_run(beta, run) + pow_int(beta, run) * v_zoom);
            }
            if (v > best) {
                best = v;
                best_k = k;
            }
        }
        value_togo[tested] = best;
        choice[tested] = best_k;
        if (tested == 0) break;
    }
    stats_.dp_subsets += level_subsets;
    stats_.max_level_subsets = std::max(stats_.max_level_subsets, level_subsets);
    if (level_subsets > (std::uint64_t{1} << k_count)) stats_.level_budget_ok = false;

    ValueReport report;
    report.value = value_togo[0];
    std::uint32_t tested = 0;
    while (choice[tested] >= 0) {
        report.level_ordering.push_back(class_cats[choice[tested]]);
        tested |= std::uint32_t{1} << choice[tested];
    }
    if (!report.level_ordering.empty()) {
        report.best_category = mask_lowest(report.level_ordering.front());
    }
    return memo_.emplace(state, std::move(report)).first->second;
}

int optimal_policy_action(const Instance& inst, const State& state, OptimalSolver& solver) {
    for (int j : mask_indices(state.remaining)) {
        if ((inst.column(j) & state.surviving) == state.surviving) return j;
    }
    return solver.solve(state).best_category;
}

}  // namespace srm
