#include "srm/report.hpp"

#include <cstdio>
#include <sstream>

namespace srm {

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render_category_set(const Instance& inst, CategoryMask cats) {
    std::string out = "{";
    bool first = true;
    for (int j : mask_indices(cats)) {
        if (!first) out += ",";
        out += inst.category_name(j);
        first = false;
    }
    return out + "}";
}

std::string render_type_set(TypeMask types) {
    std::string out = "{";
    bool first = true;
    for (int i : mask_indices(types)) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

std::string render_partition(const Instance& inst, const State& state,
                             const ClassPartition& partition) {
    std::ostringstream oss;
    const double total = inst.mass(state.surviving);
    oss << "classes:\n";
    for (int k = 0; k < partition.size(); ++k) {
        const CategoryClass& cls = partition.classes[k];
        oss << "  " << k + 1 << ". " << render_category_set(inst, cls.categories)
            << " types=" << render_type_set(cls.relevant_types)
            << " mass=" << format_g12(inst.mass(cls.relevant_types) / total)
            << " products=" << cls.product_count << "\n";
    }
    if (partition.classes.empty()) oss << "  (none)\n";
    oss << "dominated: " << render_category_set(inst, partition.dominated) << "\n";
    oss << "zero-relevance: " << render_category_set(inst, partition.inactive) << "\n";
    return oss.str();
}

std::string render_plan(const Instance& inst, ClassChooser& chooser) {
    std::ostringstream oss;
    State at = initial_state(inst);
    bool first = true;
    for (int level = 0; level < inst.n_categories() + 1; ++level) {
        std::vector<CategoryMask> ordering = chooser.level_ordering(at);
        if (ordering.empty()) break;
        if (!first) oss << " ";
        first = false;
        oss << "[";
        for (std::size_t i = 0; i < ordering.size(); ++i) {
            if (i) oss << " ";
            std::string names;
            for (int j : mask_indices(ordering[i])) {
                if (!names.empty()) names += ",";
                names += inst.category_name(j);
            }
            oss << names;
        }
        oss << "]";
        // Descend into the sub-instance reached when the first class of this
        // level tests positive.
        CategoryMask lead = ordering.front();
        TypeMask relevant = inst.column(mask_lowest(lead)) & at.surviving;
        if (relevant == 0) break;
        at = State{relevant, at.remaining & ~lead};
    }
    std::string plan = oss.str();
    return plan.empty() ? "(nothing to show)" : plan;
}

SolveRender render_solve(const Instance& inst, const Policy& policy) {
    ClassChooser chooser(inst, policy);
    const State start = initial_state(inst);

    SolveRender out;
    out.value = chooser.solve_value(start);

    auto action = next_action(inst, start, chooser);
    out.action = action ? action->category : -1;

    std::ostringstream plain;
    plain << "policy: " << policy.name << "\n";
    plain << "value: " << format_g12(out.value) << "\n";
    plain << "action: " << (out.action >= 0 ? inst.category_name(out.action) : "none") << "\n";
    plain << "plan: " << render_plan(inst, chooser) << "\n";
    out.plain = plain.str();

    std::ostringstream detailed;
    detailed << out.plain;
    detailed << render_partition(inst, start, nondominated_classes(inst, start));
    std::string stats = chooser.stats_summary();
    if (!stats.empty()) detailed << "solver statistics:\n" << stats;
    out.detailed = detailed.str();
    return out;
}

}  // namespace srm
