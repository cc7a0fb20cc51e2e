#ifndef SRM_STRUCTURE_HPP
#define SRM_STRUCTURE_HPP

#include <vector>

#include "srm/state.hpp"

namespace srm {

struct DominanceVerdict {
    bool dominates = false;  // strict containment of the other relevant-type set
    bool equal = false;      // identical relevant-type sets
};

// One non-dominated equivalence class: the categories sharing a common
// relevant-type set inside the current state, plus their pooled product count.
struct CategoryClass {
    CategoryMask categories = 0;
    TypeMask relevant_types = 0;
    int product_count = 0;

    int lowest_category() const { return mask_lowest(categories); }
};

// Partition of the useful remaining categories: non-dominated classes in
// ascending order of their lowest member, the dominated categories, and the
// categories no surviving type finds relevant (never worth showing).
struct ClassPartition {
    std::vector<CategoryClass> classes;
    CategoryMask dominated = 0;
    CategoryMask inactive = 0;

    int size() const { return static_cast<int>(classes.size()); }
    bool empty() const { return classes.empty(); }
    int class_of(int category) const;  // index into classes, -1 if not in any
};

// M_j(t): surviving types that find the category relevant.
TypeMask relevant_set(const Instance& inst, const State& state, int category);

// Whether j dominates j2 (strictly larger relevant-type set) or ties it.
DominanceVerdict dominates(const Instance& inst, const State& state, int j, int j2);

ClassPartition nondominated_classes(const Instance& inst, const State& state);

// Checked structural property: after negative feedback for a category of the
// current partition, every class of the successor partition still contains a
// previously non-dominated category. Dominated categories may only enter by
// fusing with an existing class, never by forming a class of their own.
// Used as an assertion in tests and debug builds.
bool no_promotion_after_negative(const Instance& inst, const State& state, int category);

}  // namespace srm

#endif  // SRM_STRUCTURE_HPP
