#include "srm/bounds.hpp"

namespace srm {

BoundInputs BoundInputs::from_instance(const Instance& inst) {
    BoundInputs in;
    in.beta = inst.beta();
    in.l_min = inst.min_products();
    in.h = inst.n_categories();
    in.l_total = inst.total_products();
    return in;
}

void BoundInputs::validate() const {
    if (l_min < 1 || h < 1 || l_total < h) {
        throw ArgumentError("bound inputs need l_min >= 1, h >= 1 and l_total >= h");
    }
    if (!(beta >= 0.0) || beta >= 1.0) {
        throw ArgumentError("bound inputs need 0 <= beta < 1");
    }
}

double farsighted_bound(const BoundInputs& in) {
    in.validate();
    double b_lmin = pow_int(in.beta, in.l_min);
    return (1.0 - b_lmin) / (1.0 + in.beta - pow_int(in.beta, in.h) - b_lmin);
}

double naive_bound(const BoundInputs& in) {
    in.validate();
    return (1.0 - pow_int(in.beta, in.l_min)) /
           (1.0 + in.beta - pow_int(in.beta, in.h));
}

double universal_bound(const BoundInputs& in) {
    in.validate();
    return pow_int(in.beta, in.l_total - 1);
}

int relevant_product_count(const Instance& inst, int type) {
    int count = 0;
    for (int j : mask_indices(inst.row(type))) count += inst.products(j);
    return count;
}

FullInformationValue full_information_value(const Instance& inst) {
    FullInformationValue out;
    for (int i = 0; i < inst.n_types(); ++i) {
        int r = relevant_product_count(inst, i);
        out.cap += inst.prior(i) * r;
        out.discounted += inst.prior(i) * discounted_run(inst.beta(), r);
    }
    return out;
}

}  // namespace srm
