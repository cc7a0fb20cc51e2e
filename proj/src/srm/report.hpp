#ifndef SRM_REPORT_HPP
#define SRM_REPORT_HPP

#include <string>

#include "srm/policies.hpp"

namespace srm {

// All numeric CLI output uses 12 significant digits.
std::string format_g12(double v);

std::string render_category_set(const Instance& inst, CategoryMask cats);
std::string render_type_set(TypeMask types);  // 1-based indices

std::string render_partition(const Instance& inst, const State& state,
                             const ClassPartition& partition);

// Presentation plan: one bracket per level with the class test order inside;
// a new level starts after positive feedback on the level's first class.
std::string render_plan(const Instance& inst, ClassChooser& chooser);

struct SolveRender {
    double value = 0.0;
    int action = -1;  // first category to test, -1 if none
    std::string plain;
    std::string detailed;
};

SolveRender render_solve(const Instance& inst, const Policy& policy);

}  // namespace srm

#endif  // SRM_REPORT_HPP
