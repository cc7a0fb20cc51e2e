#ifndef SRM_INSTANCE_HPP
#define SRM_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "srm/errors.hpp"

namespace srm {

// Probability comparisons use kProbTol, payoff comparisons use kValueTol.
inline constexpr double kProbTol = 1e-12;
inline constexpr double kValueTol = 1e-9;

// Type sets and category sets are bitmasks, which caps instances at 64
// types and 64 categories. The exact solvers are exponential well before
// that limit matters.
inline constexpr int kMaxTypes = 64;
inline constexpr int kMaxCategories = 64;

using TypeMask = std::uint64_t;
using CategoryMask = std::uint64_t;

constexpr std::uint64_t mask_bit(int i) { return std::uint64_t{1} << i; }
constexpr bool mask_has(std::uint64_t m, int i) { return (m >> i) & 1; }
constexpr std::uint64_t mask_all(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}
int mask_count(std::uint64_t m);
int mask_lowest(std::uint64_t m);  // index of lowest set bit; -1 if empty
std::vector<int> mask_indices(std::uint64_t m);

// (1 - beta^n) / (1 - beta): discounted worth of n consecutive relevant
// products starting now. Requires beta < 1.
double discounted_run(double beta, int n);
double pow_int(double base, int exp);

// A problem instance: binary relevance matrix over user types x product
// categories, a prior over types, per-category product counts, and the
// per-opportunity continuation probability beta.
//
// Instances are immutable once created. The factory validates the raw data,
// drops zero-prior types and merges duplicate rows (summing their priors),
// so every stored type has positive mass and a distinct relevance vector.
class Instance {
public:
    static Instance create(const std::vector<std::vector<int>>& relevance,
                           const std::vector<double>& prior,
                           const std::vector<int>& products_per_category,
                           double beta,
                           std::vector<std::string> category_names = {});

    // JSON shape:
    // { "beta": 0.8,
    //   "categories": [{"name":"A","products":3}, ...],
    //   "types": [{"prior":0.25,"relevance":[1,0,1,0]}, ...] }
    static Instance parse_json(const std::string& text);
    static Instance load_file(const std::string& path);
    std::string to_json() const;
    void save_file(const std::string& path) const;

    Instance with_beta(double beta) const;

    int n_types() const { return static_cast<int>(rows_.size()); }
    int n_categories() const { return static_cast<int>(products_.size()); }
    double beta() const { return beta_; }

    // Categories relevant to a type (one matrix row).
    CategoryMask row(int type) const { return rows_[type]; }
    // Types that find a category relevant (one matrix column).
    TypeMask column(int category) const { return cols_[category]; }
    bool relevant(int type, int category) const {
        return mask_has(rows_[type], category);
    }

    double prior(int type) const { return prior_[type]; }
    // Total prior mass of a set of types.
    double mass(TypeMask types) const;

    int products(int category) const { return products_[category]; }
    int total_products() const { return total_products_; }
    int min_products() const;

    const std::string& category_name(int category) const { return names_[category]; }
    int category_by_name(const std::string& name) const;  // -1 if unknown
    std::string product_label(int category, int ordinal) const;

    TypeMask all_types() const { return mask_all(n_types()); }
    CategoryMask all_categories() const { return mask_all(n_categories()); }

    // Spreadsheet-style default names: A..Z, AA, AB, ...
    static std::string default_category_name(int index);

private:
    Instance() = default;

    std::vector<CategoryMask> rows_;
    std::vector<TypeMask> cols_;
    std::vector<double> prior_;
    std::vector<int> products_;
    std::vector<std::string> names_;
    double beta_ = 0.0;
    int total_products_ = 0;
};

}  // namespace srm

#endif  // SRM_INSTANCE_HPP
