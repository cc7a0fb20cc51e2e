#include "srm/structure.hpp"

#include <algorithm>

namespace srm {

int ClassPartition::class_of(int category) const {
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (mask_has(classes[k].categories, category)) return static_cast<int>(k);
    }
    return -1;
}

TypeMask relevant_set(const Instance& inst, const State& state, int category) {
    if (category < 0 || category >= inst.n_categories() ||
        !mask_has(state.remaining, category)) {
        throw ArgumentError("category not available in this state");
    }
    return inst.column(category) & state.surviving;
}

DominanceVerdict dominates(const Instance& inst, const State& state, int j, int j2) {
    if (j == j2) {
        throw ArgumentError("dominance compares two distinct categories");
    }
    TypeMask mj = relevant_set(inst, state, j);
    TypeMask mj2 = relevant_set(inst, state, j2);
    DominanceVerdict verdict;
    if (mj == mj2) {
        verdict.equal = true;
    } else if ((mj2 & ~mj) == 0) {
        verdict.dominates = true;
    }
    return verdict;
}

ClassPartition nondominated_classes(const Instance& inst, const State& state) {
    ClassPartition partition;

    // Distinct relevant-type sets of the active categories, with members.
    std::vector<TypeMask> sets;
    std::vector<CategoryMask> members;
    for (int j : mask_indices(state.remaining)) {
        TypeMask m = inst.column(j) & state.surviving;
        if (m == 0) {
            partition.inactive |= mask_bit(j);
            continue;
        }
        bool found = false;
        for (std::size_t k = 0; k < sets.size(); ++k) {
            if (sets[k] == m) {
                members[k] |= mask_bit(j);
                found = true;
                break;
            }
        }
        if (!found) {
            sets.push_back(m);
            members.push_back(mask_bit(j));
        }
    }

    // A set is non-dominated when no other set strictly contains it.
    for (std::size_t k = 0; k < sets.size(); ++k) {
        bool dominated = false;
        for (std::size_t k2 = 0; k2 < sets.size(); ++k2) {
            if (k2 == k) continue;
            if ((sets[k] & ~sets[k2]) == 0) {  // sets[k] strictly inside sets[k2]
                dominated = true;
                break;
            }
        }
        if (dominated) {
            partition.dominated |= members[k];
        } else {
            CategoryClass cls;
            cls.categories = members[k];
            cls.relevant_types = sets[k];
            for (int j : mask_indices(members[k])) cls.product_count += inst.products(j);
            partition.classes.push_back(cls);
        }
    }
    std::sort(partition.classes.begin(), partition.classes.end(),
              [](const CategoryClass& a, const CategoryClass& b) {
                  return a.lowest_category() < b.lowest_category();
              });
    return partition;
}

bool no_promotion_after_negative(const Instance& inst, const State& state, int category) {
    ClassPartition before = nondominated_classes(inst, state);
    if (before.class_of(category) < 0) {
        throw ArgumentError("category is not in a non-dominated class of this state");
    }
    // A previously dominated category may join an existing class when their
    // relevant-type sets collapse to the same set (fusion). What must never
    // happen is a successor class made solely of previously dominated
    // categories: that would be a genuine promotion.
    State after = condition(inst, state, category, 0);
    ClassPartition then = nondominated_classes(inst, after);
    for (const CategoryClass& cls : then.classes) {
        bool heritage = false;
        for (const CategoryClass& old : before.classes) {
            if (cls.categories & old.categories) {
                heritage = true;
                break;
            }
        }
        if (!heritage) return false;
    }
    return true;
}

}  // namespace srm
