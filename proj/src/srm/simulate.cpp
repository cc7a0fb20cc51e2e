#include "srm/simulate.hpp"

#include <cmath>
#include <sstream>
#include <thread>

namespace srm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int sample_type(const Instance& inst, Rng& rng) {
    double u = rng.uniform01();
    double acc = 0.0;
    for (int i = 0; i < inst.n_types(); ++i) {
        acc += inst.prior(i);
        if (u <= acc) return i;
    }
    return inst.n_types() - 1;
}

}  // namespace

Rng::Rng(RngStream id) : engine_(splitmix64(id.seed ^ splitmix64(id.stream))) {}

int sample_horizon(double beta, Rng& rng) {
    if (beta <= 0.0) return 1;
    double u = rng.uniform01();
    double m = std::floor(std::log(u) / std::log(beta));
    if (m < 0.0) m = 0.0;
    if (m > 1e9) m = 1e9;
    return 1 + static_cast<int>(m);
}

SessionTrace run_session(const Instance& inst, ClassChooser& chooser, RngStream stream) {
    Rng rng(stream);
    SessionTrace trace;
    trace.sampled_type = sample_type(inst, rng);
    trace.horizon = sample_horizon(inst.beta(), rng);

    Session session(inst, chooser);
    for (int t = 0; t < trace.horizon; ++t) {
        auto product = session.next();
        if (!product) break;
        int feedback = inst.relevant(trace.sampled_type, product->category) ? 1 : 0;
        session.feed(feedback);
        trace.shown.emplace_back(*product, feedback);
    }
    trace.payoff = session.payoff();
    return trace;
}

SessionTrace run_session(const Instance& inst, const Policy& policy, RngStream stream) {
    ClassChooser chooser(inst, policy);
    return run_session(inst, chooser, stream);
}

std::string format_trace(const Instance& inst, const SessionTrace& trace) {
    std::ostringstream oss;
    oss << "type=" << trace.sampled_type + 1 << " horizon=" << trace.horizon
        << " shown=" << trace.shown.size() << " payoff=" << trace.payoff << "\n";
    for (std::size_t t = 0; t < trace.shown.size(); ++t) {
        const auto& [product, feedback] = trace.shown[t];
        oss << "  " << t + 1 << " " << inst.product_label(product.category, product.ordinal)
            << " feedback=" << feedback << "\n";
    }
    return oss.str();
}

namespace {

double pairwise_sum(const std::vector<double>& xs, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += xs[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(xs, lo, mid) + pairwise_sum(xs, mid, hi);
}

}  // namespace

MonteCarloResult monte_carlo(const Instance& inst, const Policy& policy, long long runs,
                             std::uint64_t seed, int workers) {
    if (runs < 1) {
        throw ArgumentError("monte_carlo needs at least one run");
    }
    if (workers < 1) workers = 1;
    const std::size_t n = static_cast<std::size_t>(runs);
    std::vector<double> payoffs(n);

    auto work = [&](std::size_t lo, std::size_t hi) {
        // One chooser per worker keeps solver caches warm across runs.
        ClassChooser chooser(inst, policy);
        for (std::size_t r = lo; r < hi; ++r) {
            payoffs[r] = run_session(inst, chooser, RngStream{seed, r}).payoff;
        }
    };

    if (workers == 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = std::min(n, static_cast<std::size_t>(w) * chunk);
            std::size_t hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    MonteCarloResult result;
    result.runs = runs;
    result.mean = pairwise_sum(payoffs, 0, n) / static_cast<double>(n);
    if (runs > 1) {
        std::vector<double> sq(n);
        for (std::size_t i = 0; i < n; ++i) {
            double d = payoffs[i] - result.mean;
            sq[i] = d * d;
        }
        double variance = pairwise_sum(sq, 0, n) / static_cast<double>(n - 1);
        result.std_error = std::sqrt(variance / static_cast<double>(n));
    }
    return result;
}

}  // namespace srm
