#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zhash/error.hpp"
#include "zhash/hasher.hpp"

namespace zhash {

inline constexpr std::uint32_t kUnassigned = 0xffffffffU;

/// Outcome of the tau-collision protocol. Machines are numbered
/// group * (n/d) + index-in-group.
struct CollisionRun {
    std::size_t n = 0;
    unsigned d = 0;
    std::uint32_t tau = 0;
    std::optional<unsigned> rounds_used;  // nullopt: max_rounds exhausted
    std::vector<std::uint32_t> assignment;    // job -> machine or kUnassigned
    std::vector<std::uint32_t> assigned_round;  // job -> round (1-based) or 0
    std::vector<std::size_t> round_log;       // unassigned jobs after each round
};

struct GoLeftRun {
    std::size_t n = 0;
    unsigned d = 0;
    std::vector<std::uint32_t> loads;
    std::uint32_t max_load = 0;
};

/// Candidate machines of every job: job j, group i -> i * (n/d) + h_i(job_j).
template <HashSequence H>
std::vector<std::uint32_t> candidate_machines(const H& hasher, std::span<const Key> jobs,
                                              std::size_t n) {
    const unsigned d = hasher.d();
    if (d == 0 || n % d != 0) throw ParameterError("load balancing: d must divide n");
    const std::size_t group = n / d;
    if (hasher.range() != group) throw ParameterError("load balancing: hash range must be n/d");
    std::vector<std::uint32_t> cand(jobs.size() * d);
    std::vector<std::uint64_t> hv(d);
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        hasher.eval(jobs[j], hv);
        for (unsigned i = 0; i < d; ++i) {
            cand[j * d + i] = static_cast<std::uint32_t>(i * group + hv[i]);
        }
    }
    return cand;
}

/// Synchronous rounds: every unassigned job requests all its candidates; a
/// machine acknowledges iff it got at most tau requests this round; a job
/// with acknowledgements takes the one from the lowest group.
CollisionRun run_collision(std::span<const std::uint32_t> candidates, std::size_t n, unsigned d,
                           std::uint32_t tau, unsigned max_rounds = 64);

template <HashSequence H>
CollisionRun run_collision(const H& hasher, std::span<const Key> jobs, std::size_t n,
                           std::uint32_t tau, unsigned max_rounds = 64) {
    return run_collision(candidate_machines(hasher, jobs, n), n, hasher.d(), tau, max_rounds);
}

/// Sequential d-choice allocation, least loaded candidate, ties to the
/// leftmost group.
GoLeftRun run_goleft(std::span<const std::uint32_t> candidates, std::size_t n, unsigned d);

template <HashSequence H>
GoLeftRun run_goleft(const H& hasher, std::span<const Key> jobs, std::size_t n) {
    return run_goleft(candidate_machines(hasher, jobs, n), n, hasher.d());
}

struct TauThreshold {
    double beta = 0.0;
    double k = 0.0;
    unsigned t = 3;
    double tau_real = 0.0;  // the max-formula before rounding up
    std::uint32_t tau = 0;
    double term_rounds = 0.0;    // (1/(d-1)) (beta t ln n / ln ln n)^(1/(t-2))
    double term_constant = 0.0;  // d^(d+1) e^d + 1
    double term_k = 0.0;         // 2k + 1
};

/// beta = 2d(alpha + ln d + 3/2), k = alpha + 2,
/// t = max(3, floor(ln ln n / beta)),
/// tau = ceil(max{term_rounds, term_constant, term_k}).
TauThreshold tau_threshold(std::uint64_t n, unsigned d, double alpha);

/// j_t = (tau^t (d-1)^(t-1) - tau) / (tau (d-1) - 1), evaluated exactly as
/// tau * sum_{i<t-1} (tau (d-1))^i. Throws DomainError if the denominator
/// vanishes and ParameterError on 64-bit overflow.
std::uint64_t witness_tree_jobs(std::uint64_t tau, unsigned d, unsigned t);

/// Growth constant of the d-step Fibonacci numbers (golden ratio for d = 2).
double phi_d(unsigned d);

}  // namespace zhash
