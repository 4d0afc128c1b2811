#include "zhash/loadbal.hpp"

#include <algorithm>
#include <cmath>

namespace zhash {

CollisionRun run_collision(std::span<const std::uint32_t> candidates, std::size_t n, unsigned d,
                           std::uint32_t tau, unsigned max_rounds) {
    if (d == 0 || n % d != 0) throw ParameterError("run_collision: d must divide n");
    if (tau < 1) throw ParameterError("run_collision: tau must be >= 1");
    if (candidates.size() % d != 0) throw ParameterError("run_collision: ragged candidates");
    const std::size_t jobs = candidates.size() / d;

    CollisionRun run;
    run.n = n;
    run.d = d;
    run.tau = tau;
    run.assignment.assign(jobs, kUnassigned);
    run.assigned_round.assign(jobs, 0);

    std::vector<std::uint32_t> requests(n, 0);
    std::vector<std::size_t> pending(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pending[j] = j;

    for (unsigned round = 1; round <= max_rounds && !pending.empty(); ++round) {
        for (std::size_t j : pending) {
            for (unsigned i = 0; i < d; ++i) ++requests[candidates[j * d + i]];
        }
        std::vector<std::size_t> still;
        for (std::size_t j : pending) {
            for (unsigned i = 0; i < d; ++i) {
                if (requests[candidates[j * d + i]] <= tau) {
                    run.assignment[j] = candidates[j * d + i];
                    run.assigned_round[j] = round;
                    break;
                }
            }
            if (run.assignment[j] == kUnassigned) still.push_back(j);
        }
        for (std::size_t j : pending) {
            for (unsigned i = 0; i < d; ++i) requests[candidates[j * d + i]] = 0;
        }
        pending = std::move(still);
        run.round_log.push_back(pending.size());
        if (pending.empty()) run.rounds_used = round;
    }
    if (jobs == 0) run.rounds_used = 0;
    return run;
}

GoLeftRun run_goleft(std::span<const std::uint32_t> candidates, std::size_t n, unsigned d) {
    if (d == 0 || n % d != 0) throw ParameterError("run_goleft: d must divide n");
    if (candidates.size() % d != 0) throw ParameterError("run_goleft: ragged candidates");
    GoLeftRun run;
    run.n = n;
    run.d = d;
    run.loads.assign(n, 0);
    const std::size_t jobs = candidates.size() / d;
    for (std::size_t j = 0; j < jobs; ++j) {
        std::uint32_t best = candidates[j * d];
        for (unsigned i = 1; i < d; ++i) {
            const std::uint32_t m = candidates[j * d + i];
            if (run.loads[m] < run.loads[best]) best = m;
        }
        run.max_load = std::max(run.max_load, ++run.loads[best]);
    }
    return run;
}

TauThreshold tau_threshold(std::uint64_t n, unsigned d, double alpha) {
    if (n < 16) throw ParameterError("tau_threshold: n must be >= 16");
    if (d < 2) throw ParameterError("tau_threshold: d must be >= 2");
    if (!(alpha > 0.0)) throw ParameterError("tau_threshold: alpha must be > 0");
    TauThreshold out;
    const double dd = d;
    const double ln_n = std::log(static_cast<double>(n));
    const double lnln_n = std::log(ln_n);
    out.beta = 2.0 * dd * (alpha + std::log(dd) + 1.5);
    out.k = alpha + 2.0;
    out.t = std::max(3U, static_cast<unsigned>(std::floor(lnln_n / out.beta)));
    out.term_rounds = std::pow(out.beta * out.t * ln_n / lnln_n, 1.0 / (out.t - 2.0)) / (dd - 1.0);
    out.term_constant = std::pow(dd, dd + 1.0) * std::exp(dd) + 1.0;
    out.term_k = 2.0 * out.k + 1.0;
    out.tau_real = std::max({out.term_rounds, out.term_constant, out.term_k});
    out.tau = static_cast<std::uint32_t>(std::ceil(out.tau_real));
    return out;
}

std::uint64_t witness_tree_jobs(std::uint64_t tau, unsigned d, unsigned t) {
    if (d < 2) throw ParameterError("witness_tree_jobs: d must be >= 2");
    if (t < 1) throw ParameterError("witness_tree_jobs: t must be >= 1");
    using u128 = unsigned __int128;
    const u128 ratio = static_cast<u128>(tau) * (d - 1);
    if (ratio == 1) throw DomainError("witness_tree_jobs: tau (d-1) = 1 makes the formula degenerate");
    if (ratio == 0) throw ParameterError("witness_tree_jobs: tau must be >= 1");
    constexpr u128 kLimit = ~std::uint64_t{0};
    u128 sum = 0;
    u128 power = 1;
    for (unsigned i = 0; i + 1 < t; ++i) {
        sum += power;
        if (sum > kLimit) throw ParameterError("witness_tree_jobs: overflow");
        if (i + 2 < t) {
            if (power > kLimit / ratio) throw ParameterError("witness_tree_jobs: overflow");
            power *= ratio;
        }
    }
    const u128 jobs = static_cast<u128>(tau) * sum;
    if (jobs > kLimit) throw ParameterError("witness_tree_jobs: overflow");
    return static_cast<std::uint64_t>(jobs);
}

double phi_d(unsigned d) {
    if (d < 1) throw ParameterError("phi_d: d must be >= 1");
    // Largest root of x^d = x^(d-1) + ... + 1, found by bisection on [1, 2].
    auto f = [d](double x) {
        double lhs = std::pow(x, d);
        double rhs = 0.0;
        for (unsigned i = 0; i < d; ++i) rhs += std::pow(x, i);
        return lhs - rhs;
    };
    if (d == 1) return 1.0;
    double lo = 1.0;
    double hi = 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace zhash
