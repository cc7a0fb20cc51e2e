#include "srm/state.hpp"

namespace srm {

State initial_state(const Instance& inst) {
    // Canonical instances only store positive-prior types.
    return State{inst.all_types(), inst.all_categories()};
}

std::vector<double> posterior(const Instance& inst, const State& state) {
    double total = inst.mass(state.surviving);
    if (state.surviving == 0 || total <= 0.0) {
        throw InconsistentFeedbackError("unreachable state: no surviving type carries mass");
    }
    std::vector<double> out;
    for (int i : mask_indices(state.surviving)) {
        out.push_back(inst.prior(i) / total);
    }
    return out;
}

double relevance_probability(const Instance& inst, const State& state, int category) {
    if (category < 0 || category >= inst.n_categories()) {
        throw ArgumentError("category index out of range");
    }
    if (!mask_has(state.remaining, category)) {
        throw ArgumentError("category already shown: " + inst.category_name(category));
    }
    double total = inst.mass(state.surviving);
    if (state.surviving == 0 || total <= 0.0) {
        throw InconsistentFeedbackError("unreachable state: no surviving type carries mass");
    }
    return inst.mass(inst.column(category) & state.surviving) / total;
}

State condition(const Instance& inst, const State& state, int category, int feedback) {
    if (category < 0 || category >= inst.n_categories()) {
        throw ArgumentError("category index out of range");
    }
    if (!mask_has(state.remaining, category)) {
        throw ArgumentError("category already shown: " + inst.category_name(category));
    }
    if (feedback != 0 && feedback != 1) {
        throw ArgumentError("feedback must be 0 or 1");
    }
    TypeMask relevant = inst.column(category) & state.surviving;
    TypeMask next = feedback ? relevant : (state.surviving & ~relevant);
    if (next == 0) {
        throw InconsistentFeedbackError(
            "inconsistent observation: feedback " + std::to_string(feedback) + " for category " +
            inst.category_name(category) + " has probability zero");
    }
    return State{next, state.remaining & ~mask_bit(category)};
}

}  // namespace srm
