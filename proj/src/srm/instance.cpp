#include "srm/instance.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace srm {

int mask_count(std::uint64_t m) { return std::popcount(m); }

int mask_lowest(std::uint64_t m) {
    if (m == 0) return -1;
    return std::countr_zero(m);
}

std::vector<int> mask_indices(std::uint64_t m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m) {
        int i = std::countr_zero(m);
        out.push_back(i);
        m &= m - 1;
    }
    return out;
}

double pow_int(double base, int exp) {
    double result = 1.0;
    double b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        b *= b;
    }
    return result;
}

double discounted_run(double beta, int n) {
    return (1.0 - pow_int(beta, n)) / (1.0 - beta);
}

namespace {

void validate_parts(const std::vector<std::vector<int>>& relevance,
                    const std::vector<double>& prior,
                    const std::vector<int>& products,
                    double beta) {
    if (relevance.empty() || relevance.front().empty()) {
        throw ValidationError("empty relevance matrix: need at least one type and one category");
    }
    const std::size_t n = relevance.size();
    const std::size_t h = relevance.front().size();
    if (n > kMaxTypes || h > kMaxCategories) {
        throw ValidationError("instance too large: at most 64 types and 64 categories supported");
    }
    for (const auto& row : relevance) {
        if (row.size() != h) {
            throw ValidationError("ragged relevance matrix: all rows must have the same length");
        }
        for (int v : row) {
            if (v != 0 && v != 1) {
                throw ValidationError("non-binary relevance entry: entries must be exactly 0 or 1");
            }
        }
    }
    if (prior.size() != n) {
        throw ValidationError("prior length does not match the number of types");
    }
    double sum = 0.0;
    for (double p : prior) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw ValidationError("negative or non-finite prior entry");
        }
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kProbTol) {
        std::ostringstream oss;
        oss << "prior is not normalized: entries sum to " << sum;
        throw ValidationError(oss.str());
    }
    if (products.size() != h) {
        throw ValidationError("products-per-category length does not match the number of categories");
    }
    for (int l : products) {
        if (l < 1) {
            throw ValidationError("every category must contain at least one product");
        }
    }
    if (!(beta >= 0.0) || beta >= 1.0 || !std::isfinite(beta)) {
        throw ValidationError("beta out of range: need 0 <= beta < 1 (beta = 1 diverges)");
    }
}

}  // namespace

Instance Instance::create(const std::vector<std::vector<int>>& relevance,
                          const std::vector<double>& prior,
                          const std::vector<int>& products_per_category,
                          double beta,
                          std::vector<std::string> category_names) {
    validate_parts(relevance, prior, products_per_category, beta);

    const int h = static_cast<int>(relevance.front().size());

    Instance inst;
    inst.beta_ = beta;
    inst.products_ = products_per_category;
    inst.total_products_ = 0;
    for (int l : products_per_category) inst.total_products_ += l;

    if (category_names.empty()) {
        for (int j = 0; j < h; ++j) category_names.push_back(default_category_name(j));
    } else if (static_cast<int>(category_names.size()) != h) {
        throw ValidationError("category-name list does not match the number of categories");
    }
    inst.names_ = std::move(category_names);

    // Canonicalize: drop zero-prior types, merge duplicate rows by summing
    // their priors. First occurrence keeps the position.
    for (std::size_t i = 0; i < relevance.size(); ++i) {
        if (prior[i] <= 0.0) continue;
        CategoryMask row = 0;
        for (int j = 0; j < h; ++j) {
            if (relevance[i][j]) row |= mask_bit(j);
        }
        bool merged = false;
        for (std::size_t k = 0; k < inst.rows_.size(); ++k) {
            if (inst.rows_[k] == row) {
                inst.prior_[k] += prior[i];
                merged = true;
                break;
            }
        }
        if (!merged) {
            inst.rows_.push_back(row);
            inst.prior_.push_back(prior[i]);
        }
    }
    if (inst.rows_.empty()) {
        throw ValidationError("prior assigns zero mass to every type");
    }

    inst.cols_.assign(h, 0);
    for (std::size_t i = 0; i < inst.rows_.size(); ++i) {
        for (int j = 0; j < h; ++j) {
            if (mask_has(inst.rows_[i], j)) inst.cols_[j] |= mask_bit(static_cast<int>(i));
        }
    }
    return inst;
}

Instance Instance::with_beta(double beta) const {
    if (!(beta >= 0.0) || beta >= 1.0 || !std::isfinite(beta)) {
        throw ValidationError("beta out of range: need 0 <= beta < 1 (beta = 1 diverges)");
    }
    Instance copy = *this;
    copy.beta_ = beta;
    return copy;
}

double Instance::mass(TypeMask types) const {
    double sum = 0.0;
    std::uint64_t m = types;
    while (m) {
        sum += prior_[static_cast<std::size_t>(std::countr_zero(m))];
        m &= m - 1;
    }
    return sum;
}

int Instance::min_products() const {
    int lo = products_[0];
    for (int l : products_) lo = std::min(lo, l);
    return lo;
}

int Instance::category_by_name(const std::string& name) const {
    for (int j = 0; j < n_categories(); ++j) {
        if (names_[j] == name) return j;
    }
    return -1;
}

std::string Instance::product_label(int category, int ordinal) const {
    return names_[category] + "." + std::to_string(ordinal + 1);
}

std::string Instance::default_category_name(int index) {
    std::string name;
    int i = index;
    do {
        name.insert(name.begin(), static_cast<char>('A' + i % 26));
        i = i / 26 - 1;
    } while (i >= 0);
    return name;
}

Instance Instance::parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("instance file is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("beta") || !doc.contains("categories") ||
            !doc.contains("types")) {
            throw ValidationError("instance JSON must contain \"beta\", \"categories\" and \"types\"");
        }
        double beta = doc.at("beta").get<double>();

        std::vector<std::string> names;
        std::vector<int> products;
        for (const auto& cat : doc.at("categories")) {
            names.push_back(cat.contains("name")
                                ? cat.at("name").get<std::string>()
                                : default_category_name(static_cast<int>(names.size())));
            products.push_back(cat.value("products", 1));
        }

        std::vector<std::vector<int>> relevance;
        std::vector<double> prior;
        for (const auto& type : doc.at("types")) {
            prior.push_back(type.at("prior").get<double>());
            std::vector<int> row;
            for (const auto& v : type.at("relevance")) {
                if (!v.is_number_integer()) {
                    throw ValidationError("non-binary relevance entry: entries must be exactly 0 or 1");
                }
                row.push_back(v.get<int>());
            }
            relevance.push_back(std::move(row));
        }
        return create(relevance, prior, products, beta, std::move(names));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed instance JSON: ") + e.what());
    }
}

Instance Instance::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open instance file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

std::string Instance::to_json() const {
    nlohmann::ordered_json doc;
    doc["beta"] = beta_;
    doc["categories"] = nlohmann::ordered_json::array();
    for (int j = 0; j < n_categories(); ++j) {
        doc["categories"].push_back({{"name", names_[j]}, {"products", products_[j]}});
    }
    doc["types"] = nlohmann::ordered_json::array();
    for (int i = 0; i < n_types(); ++i) {
        nlohmann::ordered_json type;
        type["prior"] = prior_[i];
        std::vector<int> row(n_categories());
        for (int j = 0; j < n_categories(); ++j) row[j] = relevant(i, j) ? 1 : 0;
        type["relevance"] = row;
        doc["types"].push_back(type);
    }
    return doc.dump(2) + "\n";
}

void Instance::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open file for writing: " + path);
    }
    out << to_json();
    if (!out) {
        throw IoError("failed writing instance file: " + path);
    }
}

}  // namespace srm
