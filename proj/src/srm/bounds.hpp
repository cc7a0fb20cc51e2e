#ifndef SRM_BOUNDS_HPP
#define SRM_BOUNDS_HPP

#include "srm/instance.hpp"

namespace srm {

// Inputs for the worst-case approximation factors: only coarse features of
// the instance are needed.
struct BoundInputs {
    double beta = 0.0;
    int l_min = 1;    // fewest products in any category
    int h = 1;        // number of categories
    int l_total = 1;  // total products

    static BoundInputs from_instance(const Instance& inst);
    void validate() const;
};

// Guaranteed fraction of the optimal payoff achieved by the farsighted
// greedy policy: (1 - b^Lmin) / (1 + b - b^H - b^Lmin). Equals 1 at beta=0.
double farsighted_bound(const BoundInputs& in);

// Guaranteed fraction for the naive greedy policy:
// (1 - b^Lmin) / (1 + b - b^H). The exact guarantee uses the smallest class
// size, which Lmin bounds from below, so this form is valid and computable
// without solving anything.
double naive_bound(const BoundInputs& in);

// Guaranteed fraction for any policy at all: b^(L-1). A session outlasting
// every product collects the full payoff no matter the order.
double universal_bound(const BoundInputs& in);

// Payoff benchmark when the type is revealed on arrival. `cap` is the
// undiscounted expected count of relevant products, an upper bound on any
// policy's payoff; `discounted` is the known-type optimal value.
struct FullInformationValue {
    double discounted = 0.0;
    double cap = 0.0;
};

// r_i: products the type finds relevant, counting category sizes.
int relevant_product_count(const Instance& inst, int type);

FullInformationValue full_information_value(const Instance& inst);

}  // namespace srm

#endif  // SRM_BOUNDS_HPP
