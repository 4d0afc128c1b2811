#include "zhash/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>

#include "zhash/bpz.hpp"
#include "zhash/cuckoo.hpp"
#include "zhash/error.hpp"
#include "zhash/gcuckoo.hpp"
#include "zhash/hasher.hpp"
#include "zhash/hypergraph.hpp"
#include "zhash/loadbal.hpp"
#include "zhash/stats.hpp"
#include "zhash/uniform_sim.hpp"
#include "zhash/zfamily.hpp"

namespace zhash {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kKeyStream = 0xfeedULL;

// 2-core (kappa + 1 = 2) space-utilization thresholds for d = 3..8.
constexpr double kCoreThreshold[] = {0.818, 0.772, 0.702, 0.637, 0.582, 0.535};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt_int(std::uint64_t v) { return std::to_string(v); }

std::uint64_t ceil_mul(double factor, std::uint64_t n) {
    return static_cast<std::uint64_t>(std::ceil(factor * static_cast<double>(n) - 1e-9));
}

std::vector<Key> draw_keys(std::uint64_t seed, std::size_t count) {
    Prng prng = Prng(seed).child(kKeyStream);
    std::vector<Key> keys;
    keys.reserve(count);
    while (keys.size() < count) {
        while (keys.size() < count) keys.push_back(prng.below(kPrime));
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    }
    return keys;
}

ZParams zparams(const ExperimentConfig& cfg, unsigned d, std::uint64_t m) {
    ZParams p;
    p.c = cfg.c;
    p.d = d;
    p.kappa = cfg.kappa;
    p.ell = derived_ell(cfg);
    p.m = m;
    return p;
}

AnyHasher make_hasher(Prng& prng, const ExperimentConfig& cfg, unsigned d, std::uint64_t m) {
    if (cfg.oracle_random) return RandomOracle(d, m, prng.next());
    return draw_z(prng, zparams(cfg, d, m));
}

struct TrialSpec {
    std::vector<Column> columns;
    std::function<std::vector<double>(std::uint64_t trial, Prng& prng)> run;
};

void run_trials(const ExperimentConfig& cfg, const TrialSpec& spec, ExperimentResult& result) {
    result.columns = spec.columns;
    result.rows.assign(cfg.trials, {});
    result.wall_us.assign(cfg.trials, 0.0);
    const Prng root(cfg.seed);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t t = next++; t < cfg.trials; t = next++) {
            Prng prng = root.child(t);
            const auto start = std::chrono::steady_clock::now();
            result.rows[t] = spec.run(t, prng);
            const auto stop = std::chrono::steady_clock::now();
            result.wall_us[t] = std::chrono::duration<double, std::micro>(stop - start).count();
        }
    };
    const unsigned width = std::max(1U, cfg.threads);
    if (width == 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < width; ++i) pool.emplace_back(worker);
}

std::vector<double> column(const ExperimentResult& r, std::size_t index) {
    std::vector<double> out;
    out.reserve(r.rows.size());
    for (const auto& row : r.rows) out.push_back(row[index]);
    return out;
}

double fraction(const std::vector<double>& values, const std::function<bool(double)>& pred) {
    if (values.empty()) return 0.0;
    const auto hits = std::count_if(values.begin(), values.end(), pred);
    return static_cast<double>(hits) / static_cast<double>(values.size());
}

void add(ExperimentResult& r, std::string name, std::string value) {
    r.summary.emplace_back(std::move(name), std::move(value));
}

void check(ExperimentResult& r, std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
}

// ---------------------------------------------------------------- cuckoo / stash

void exp_cuckoo(const ExperimentConfig& cfg, ExperimentResult& r, bool stash_law) {
    const auto keys = draw_keys(cfg.seed, cfg.n);
    const std::uint64_t m = ceil_mul(1.0 + cfg.epsilon, cfg.n);
    TrialSpec spec;
    spec.columns = {{"suitable", ColumnKind::integer}, {"excess", ColumnKind::integer}};
    spec.run = [&](std::uint64_t, Prng& prng) {
        const AnyHasher h = make_hasher(prng, cfg, 2, m);
        const auto ex = excess(build(h, keys));
        return std::vector<double>{ex <= static_cast<std::int64_t>(cfg.s) ? 1.0 : 0.0,
                                   static_cast<double>(ex)};
    };
    run_trials(cfg, spec, r);
    const auto ex = column(r, 1);
    add(r, "m", fmt_int(m));
    if (!stash_law) {
        const double fail = fraction(ex, [&](double v) { return v > cfg.s; });
        add(r, "failure_rate", fmt(fail));
        add(r, "target", "Pr(ex > s) = O(1/n^(s+1))");
        check(r, "failure rate <= 0.02", fail <= 0.02, fmt(fail));
        return;
    }
    double prev = 2.0;
    bool decreasing = true;
    double p1 = 0.0;
    double p2 = 0.0;
    for (unsigned s = 0; s <= 2; ++s) {
        const double p = fraction(ex, [&](double v) { return v >= s + 1; });
        add(r, "Pr(ex>=" + std::to_string(s + 1) + ")", fmt(p));
        decreasing = decreasing && p < prev;
        prev = p;
        if (s == 0) p1 = p;
        if (s == 1) p2 = p;
    }
    add(r, "target", "Pr(ex >= s+1) = O(1/n^(s+1))");
    check(r, "Pr(ex>=s+1) strictly decreasing for s=0,1,2", decreasing, "");
    const double ratio = p1 > 0.0 ? p2 / p1 : kNaN;
    check(r, "Pr(ex>=2)/Pr(ex>=1) <= 0.1", p1 > 0.0 && ratio <= 0.1, fmt(ratio));
}

// ---------------------------------------------------------------- mphf

void exp_mphf(const ExperimentConfig& cfg, ExperimentResult& r) {
    const auto keys = draw_keys(cfg.seed, cfg.n);
    const std::uint64_t m = ceil_mul(1.0 + cfg.epsilon, cfg.n);
    MphfParams mp;
    mp.epsilon = cfg.epsilon;
    mp.delta = cfg.delta;
    mp.c = cfg.c;
    TrialSpec spec;
    spec.columns = {{"acyclic", ColumnKind::integer},
                    {"attempts", ColumnKind::integer},
                    {"injective", ColumnKind::integer}};
    spec.run = [&](std::uint64_t, Prng& prng) {
        if (cfg.oracle_random) {
            const RandomOracle h(2, m, prng.next());
            const bool acyclic = peel_2core(build(h, keys)).core_empty();
            return std::vector<double>{acyclic ? 1.0 : 0.0, kNaN, kNaN};
        }
        const auto built = build_mphf(prng, keys, mp);
        std::vector<std::uint64_t> values;
        values.reserve(keys.size());
        for (Key x : keys) values.push_back(built.ph(x));
        std::sort(values.begin(), values.end());
        const bool injective = std::adjacent_find(values.begin(), values.end()) == values.end();
        return std::vector<double>{built.attempts == 1 ? 1.0 : 0.0,
                                   static_cast<double>(built.attempts), injective ? 1.0 : 0.0};
    };
    run_trials(cfg, spec, r);
    const auto bounds = acyclic_prob_bounds(cfg.epsilon);
    const double rate = fraction(column(r, 0), [](double v) { return v == 1.0; });
    add(r, "m", fmt_int(m));
    add(r, "acyclic_rate", fmt(rate));
    add(r, "exact_rate", fmt(bounds.exact_rate));
    add(r, "lower_bound", fmt(bounds.lower_bound));
    check(r, "acyclic rate within [lower_bound - 0.03, exact_rate + 0.03]",
          rate >= bounds.lower_bound - 0.03 && rate <= bounds.exact_rate + 0.03, fmt(rate));
    if (!cfg.oracle_random) {
        const auto attempts = column(r, 1);
        double mean = 0.0;
        for (double a : attempts) mean += a;
        mean /= static_cast<double>(attempts.size());
        add(r, "mean_attempts", fmt(mean));
        const double injective = fraction(column(r, 2), [](double v) { return v == 1.0; });
        check(r, "every build injective", injective == 1.0, fmt(injective));
        check(r, "mean attempts <= 1.25", mean <= 1.25, fmt(mean));
    }
}

// ---------------------------------------------------------------- uniform-probe

void exp_uniform(const ExperimentConfig& cfg, ExperimentResult& r) {
    const auto keys = draw_keys(cfg.seed, cfg.probe_keys);
    UniformSimParams up;
    up.n = cfg.n;
    up.epsilon = cfg.epsilon;
    up.delta = cfg.delta;
    up.c = cfg.c;
    up.w = cfg.w;
    TrialSpec spec;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        spec.columns.push_back({"h" + std::to_string(i), ColumnKind::integer});
    }
    spec.run = [&](std::uint64_t, Prng& prng) {
        const UniformSimDS ds = build_ds(prng, up);
        std::vector<double> row;
        for (Key x : keys) row.push_back(static_cast<double>(ds(x)));
        return row;
    };
    run_trials(cfg, spec, r);
    const std::size_t values = std::size_t{1} << cfg.w;
    double worst = 1.0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        std::vector<std::uint64_t> counts(values, 0);
        for (const auto& row : r.rows) ++counts[static_cast<std::size_t>(row[i])];
        const double p = stats::chi_square_uniform(counts).p_value;
        add(r, "marginal_p[h" + std::to_string(i) + "]", fmt(p));
        worst = std::min(worst, p);
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
        for (std::size_t j = i + 1; j < keys.size(); ++j) {
            std::vector<std::uint64_t> counts(values * values, 0);
            for (const auto& row : r.rows) {
                ++counts[static_cast<std::size_t>(row[i]) * values + static_cast<std::size_t>(row[j])];
            }
            const double p = stats::chi_square_uniform(counts).p_value;
            add(r, "pairwise_p[h" + std::to_string(i) + ",h" + std::to_string(j) + "]", fmt(p));
            worst = std::min(worst, p);
        }
    }
    check(r, "marginal and pairwise chi-square p > 0.001", worst > 0.001, fmt(worst));
}

// ---------------------------------------------------------------- gcuckoo

void exp_gcuckoo(const ExperimentConfig& cfg, ExperimentResult& r, LabelMode mode) {
    const auto keys = draw_keys(cfg.seed, cfg.n);
    const std::uint64_t m = ceil_mul((1.0 + cfg.epsilon) * (cfg.d - 1), cfg.n);
    const std::uint32_t cap = default_max_label(mode, cfg.n);
    TrialSpec spec;
    spec.columns = {{"success", ColumnKind::integer},
                    {"max_label", ColumnKind::integer},
                    {"moves", ColumnKind::integer}};
    spec.run = [&](std::uint64_t, Prng& prng) {
        GCuckooTable table(make_hasher(prng, cfg, cfg.d, m), mode, cap);
        std::size_t moves = 0;
        bool ok = true;
        for (Key x : keys) {
            const auto res = table.insert(x);
            moves += res.moves;
            if (res.outcome == LabeledOutcome::aborted) {
                ok = false;
                break;
            }
        }
        return std::vector<double>{ok ? 1.0 : 0.0, static_cast<double>(table.max_label()),
                                   static_cast<double>(moves)};
    };
    run_trials(cfg, spec, r);
    const double log2n = std::log2(static_cast<double>(cfg.n));
    const double bound = mode == LabelMode::khosla ? 4.0 * log2n : std::log2(log2n) + 10.0;
    const double success = fraction(column(r, 0), [](double v) { return v == 1.0; });
    const double within = fraction(column(r, 1), [&](double v) { return v <= bound; });
    add(r, "m_per_table", fmt_int(m));
    add(r, "abort_label", fmt_int(cap));
    add(r, "label_bound", fmt(bound));
    add(r, "success_rate", fmt(success));
    add(r, "target", mode == LabelMode::khosla ? "max label O(log n)" : "max label log log n + O(1)");
    check(r, "all insertions succeed in >= 99% of trials", success >= 0.99, fmt(success));
    check(r, "max label within bound in >= 99% of trials", within >= 0.99, fmt(within));
}

// ---------------------------------------------------------------- load balancing

void exp_collision(const ExperimentConfig& cfg, ExperimentResult& r) {
    const auto keys = draw_keys(cfg.seed, cfg.n);
    const auto thr = tau_threshold(cfg.n, cfg.d, cfg.alpha);
    const std::uint32_t tau = cfg.tau != 0 ? cfg.tau : thr.tau;
    TrialSpec spec;
    spec.columns = {{"rounds", ColumnKind::integer}, {"within_t", ColumnKind::integer}};
    spec.run = [&](std::uint64_t, Prng& prng) {
        const AnyHasher h = make_hasher(prng, cfg, cfg.d, cfg.n / cfg.d);
        const auto run = run_collision(h, keys, cfg.n, tau);
        const double rounds = run.rounds_used ? static_cast<double>(*run.rounds_used) : -1.0;
        const bool within = run.rounds_used && *run.rounds_used <= thr.t;
        return std::vector<double>{rounds, within ? 1.0 : 0.0};
    };
    run_trials(cfg, spec, r);
    const double within = fraction(column(r, 1), [](double v) { return v == 1.0; });
    add(r, "beta", fmt(thr.beta));
    add(r, "k", fmt(thr.k));
    add(r, "t", fmt_int(thr.t));
    add(r, "tau", fmt_int(tau));
    add(r, "j_t", fmt_int(witness_tree_jobs(tau, cfg.d, thr.t)));
    add(r, "ln_n", fmt(std::log(static_cast<double>(cfg.n))));
    add(r, "log2_n", fmt(std::log2(static_cast<double>(cfg.n))));
    add(r, "within_t_rate", fmt(within));
    check(r, "terminates within t rounds in >= 99% of trials", within >= 0.99, fmt(within));
}

void exp_goleft(const ExperimentConfig& cfg, ExperimentResult& r) {
    const auto keys = draw_keys(cfg.seed, cfg.n);
    TrialSpec spec;
    spec.columns = {{"max_load", ColumnKind::integer}};
    spec.run = [&](std::uint64_t, Prng& prng) {
        const std::uint64_t group = cfg.n / cfg.d;
        const AnyHasher h = cfg.d >= 2 && !cfg.oracle_random
                                ? AnyHasher(draw_z(prng, zparams(cfg, cfg.d, group)))
                                : AnyHasher(RandomOracle(cfg.d, group, prng.next()));
        return std::vector<double>{static_cast<double>(run_goleft(h, keys, cfg.n).max_load)};
    };
    run_trials(cfg, spec, r);
    const double lnln = std::log(std::log(static_cast<double>(cfg.n)));
    const double phi = phi_d(cfg.d);
    add(r, "phi_d", fmt(phi));
    if (cfg.d >= 2) {
        const double bound = lnln / (cfg.d * std::log(phi)) + 8.0;
        const double within = fraction(column(r, 0), [&](double v) { return v <= bound; });
        add(r, "load_bound", fmt(bound));
        check(r, "max load <= lnln n/(d ln phi_d) + 8 in >= 95% of trials", within >= 0.95,
              fmt(within));
    }
}

// ---------------------------------------------------------------- core threshold

void exp_core(const ExperimentConfig& cfg, ExperimentResult& r) {
    const auto keys = draw_keys(cfg.seed, cfg.n);
    const auto m = static_cast<std::uint64_t>(
        std::llround(static_cast<double>(cfg.n) / (cfg.d * cfg.ratio)));
    TrialSpec spec;
    spec.columns = {{"core_edges", ColumnKind::integer}, {"core_empty", ColumnKind::integer}};
    spec.run = [&](std::uint64_t, Prng& prng) {
        const AnyHasher h = make_hasher(prng, cfg, cfg.d, m);
        const auto peel = peel_2core(build(h, keys));
        return std::vector<double>{static_cast<double>(peel.residual.size()),
                                   peel.core_empty() ? 1.0 : 0.0};
    };
    run_trials(cfg, spec, r);
    const double empty = fraction(column(r, 1), [](double v) { return v == 1.0; });
    add(r, "m_per_part", fmt_int(m));
    add(r, "actual_ratio", fmt(static_cast<double>(cfg.n) / static_cast<double>(cfg.d * m)));
    add(r, "empty_core_rate", fmt(empty));
    if (cfg.d >= 3 && cfg.d <= 8) {
        const double threshold = kCoreThreshold[cfg.d - 3];
        add(r, "threshold", fmt(threshold));
        if (cfg.ratio < threshold) {
            check(r, "2-core empty in >= 95% of trials (below threshold)", empty >= 0.95, fmt(empty));
        } else {
            check(r, "2-core nonempty in >= 95% of trials (above threshold)", 1.0 - empty >= 0.95,
                  fmt(1.0 - empty));
        }
    }
}

// ---------------------------------------------------------------- components

void exp_components(const ExperimentConfig& cfg, ExperimentResult& r) {
    const auto keys = draw_keys(cfg.seed, cfg.n);
    const std::uint64_t m = std::max<std::uint64_t>(1, ceil_mul(1.0 + cfg.epsilon, cfg.n));
    TrialSpec spec;
    spec.columns = {{"components", ColumnKind::integer},
                    {"max_vertices", ColumnKind::integer},
                    {"max_edges_minus_vertices", ColumnKind::integer}};
    spec.run = [&](std::uint64_t, Prng& prng) {
        const AnyHasher h = make_hasher(prng, cfg, 2, m);
        const auto comps = components(build(h, keys)).components;
        double max_v = 0.0;
        double max_ev = comps.empty() ? 0.0 : -std::numeric_limits<double>::infinity();
        for (const auto& c : comps) {
            max_v = std::max(max_v, static_cast<double>(c.vertex_count));
            max_ev = std::max(max_ev, static_cast<double>(c.edge_count) -
                                          static_cast<double>(c.vertex_count));
        }
        return std::vector<double>{static_cast<double>(comps.size()), max_v, max_ev};
    };
    run_trials(cfg, spec, r);
    // Histogram of the per-trial maximum component size; trials without
    // edges contribute nothing.
    std::vector<std::uint64_t> hist;
    for (double v : column(r, 1)) {
        const auto b = static_cast<std::size_t>(v);
        if (b == 0) continue;
        if (hist.size() <= b) hist.resize(b + 1, 0);
        ++hist[b];
    }
    std::string h;
    for (std::size_t b = 0; b < hist.size(); ++b) {
        if (hist[b] == 0) continue;
        if (!h.empty()) h += ' ';
        h += std::to_string(b) + ":" + std::to_string(hist[b]);
    }
    add(r, "m", fmt_int(m));
    add(r, "max_vertices_histogram", h.empty() ? "(empty)" : h);
    if (m >= 6 * cfg.n && cfg.n >= 2) {
        const double bound = 40.0 * std::log2(static_cast<double>(cfg.n));
        const double within = fraction(column(r, 1), [&](double v) { return v <= bound; });
        add(r, "size_bound", fmt(bound));
        check(r, "max component <= 40 log2 n in every trial", within == 1.0, fmt(within));
    }
}

// ---------------------------------------------------------------- deficiency

void exp_deficiency(const ExperimentConfig& cfg, ExperimentResult& r) {
    ZParams p = zparams(cfg, cfg.d, ceil_mul(1.0 + cfg.epsilon, cfg.n));
    TrialSpec spec;
    spec.columns = {{"d_T", ColumnKind::integer}, {"class", ColumnKind::integer}};
    spec.run = [&](std::uint64_t, Prng& prng) {
        std::vector<Key> t;
        while (t.size() < cfg.n) {
            const Key x = prng.below(kPrime);
            if (std::find(t.begin(), t.end(), x) == t.end()) t.push_back(x);
        }
        const auto rep = classify_deficiency(draw_z(prng, p), t);
        return std::vector<double>{static_cast<double>(rep.d_T),
                                   static_cast<double>(static_cast<int>(rep.cls))};
    };
    run_trials(cfg, spec, r);
    const double rate = fraction(column(r, 1), [](double v) { return v != 0.0; });
    const double ratio = static_cast<double>(cfg.n * cfg.n) / static_cast<double>(p.ell);
    const double bound = std::min(1.0, std::pow(ratio, static_cast<double>(p.c * p.k())));
    const double sigma = stats::binomial_sigma(bound, cfg.trials);
    add(r, "bad_or_crit_rate", fmt(rate));
    add(r, "bound", fmt(bound));
    add(r, "sigma", fmt(sigma));
    check(r, "Pr(bad or crit) <= bound + 3 sigma", rate <= bound + 3.0 * sigma, fmt(rate));
}

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {
        "cuckoo",      "stash",    "mphf-acyclic",   "uniform-probe", "gcuckoo-khosla",
        "gcuckoo-eppstein", "collision", "goleft", "core-threshold", "components", "deficiency"};
    return names;
}

std::uint64_t derived_ell(const ExperimentConfig& cfg) {
    if (cfg.ell) return *cfg.ell;
    return ell_from_delta(cfg.n, cfg.delta);
}

void validate(const ExperimentConfig& cfg) {
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), cfg.experiment) == names.end()) {
        throw ParameterError("unknown experiment '" + cfg.experiment + "'");
    }
    const std::string& e = cfg.experiment;
    if (cfg.trials < 1) throw ParameterError("--trials must be >= 1");
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw ParameterError("--delta must lie in (0, 1)");
    if (cfg.ell && *cfg.ell < 1) throw ParameterError("--ell must be >= 1");
    if (cfg.c < 1) throw ParameterError("--c must be >= 1");
    if (cfg.kappa < 2 || cfg.kappa % 2 != 0 || cfg.kappa > 64) {
        throw ParameterError("--kappa must be even and in [2, 64]");
    }
    if (cfg.n < 1 && e != "components") throw ParameterError("--n must be >= 1");
    if (cfg.n > (std::uint64_t{1} << 28)) throw ParameterError("--n too large");
    const bool needs_eps = e == "cuckoo" || e == "stash" || e == "mphf-acyclic" ||
                           e == "uniform-probe" || e == "gcuckoo-khosla" ||
                           e == "gcuckoo-eppstein" || e == "components";
    if (needs_eps && !(cfg.epsilon > 0.0)) throw ParameterError("--epsilon must be > 0");
    if (e == "mphf-acyclic" && cfg.epsilon < 0.08) {
        throw ParameterError("mphf-acyclic needs --epsilon >= 0.08");
    }
    if ((e == "gcuckoo-khosla" || e == "gcuckoo-eppstein") && cfg.d < 3) {
        throw ParameterError("generalized cuckoo hashing needs --d >= 3");
    }
    if (e == "collision" || e == "goleft") {
        if (cfg.d < 1 || cfg.n % cfg.d != 0) throw ParameterError("--d must divide --n");
        if (e == "collision" && (cfg.d < 2 || cfg.n < 16)) {
            throw ParameterError("collision needs --d >= 2 and --n >= 16");
        }
        if (!(cfg.alpha > 0.0)) throw ParameterError("--alpha must be > 0");
    } else if (cfg.d < 2) {
        throw ParameterError("--d must be >= 2");
    }
    if (e == "core-threshold" && !(cfg.ratio > 0.0)) throw ParameterError("--ratio must be > 0");
    if (e == "uniform-probe") {
        if (cfg.w < 1 || cfg.w > 2) throw ParameterError("uniform-probe needs --w in [1, 2]");
        if (cfg.probe_keys < 1 || cfg.probe_keys > 6) {
            throw ParameterError("uniform-probe needs --probe-keys in [1, 6]");
        }
    }
    if (cfg.oracle_random && (e == "uniform-probe" || e == "deficiency")) {
        throw ParameterError("--oracle-random does not apply to " + e);
    }
}

bool ExperimentResult::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    ExperimentResult r;
    r.experiment = cfg.experiment;
    r.ell = derived_ell(cfg);
    const std::string& e = cfg.experiment;
    if (e == "cuckoo") exp_cuckoo(cfg, r, false);
    else if (e == "stash") exp_cuckoo(cfg, r, true);
    else if (e == "mphf-acyclic") exp_mphf(cfg, r);
    else if (e == "uniform-probe") exp_uniform(cfg, r);
    else if (e == "gcuckoo-khosla") exp_gcuckoo(cfg, r, LabelMode::khosla);
    else if (e == "gcuckoo-eppstein") exp_gcuckoo(cfg, r, LabelMode::eppstein);
    else if (e == "collision") exp_collision(cfg, r);
    else if (e == "goleft") exp_goleft(cfg, r);
    else if (e == "core-threshold") exp_core(cfg, r);
    else if (e == "components") exp_components(cfg, r);
    else exp_deficiency(cfg, r);
    return r;
}

void write_csv(std::ostream& os, const ExperimentResult& result) {
    os << "experiment,trial,ell";
    for (const auto& c : result.columns) os << ',' << c.name;
    os << ",wall_us\n";
    for (std::size_t t = 0; t < result.rows.size(); ++t) {
        os << result.experiment << ',' << t << ',' << result.ell;
        for (std::size_t i = 0; i < result.columns.size(); ++i) {
            const double v = result.rows[t][i];
            os << ',';
            if (std::isnan(v)) continue;
            if (result.columns[i].kind == ColumnKind::integer) {
                os << static_cast<long long>(v);
            } else {
                os << fmt(v);
            }
        }
        os << ',' << fmt(result.wall_us[t]) << '\n';
    }
}

void write_summary(std::ostream& os, const ExperimentConfig& cfg, const ExperimentResult& result) {
    os << "experiment: " << cfg.experiment << '\n'
       << "seed: " << cfg.seed << '\n'
       << "params: n=" << cfg.n << " d=" << cfg.d << " c=" << cfg.c << " kappa=" << cfg.kappa
       << " epsilon=" << fmt(cfg.epsilon) << " delta=" << fmt(cfg.delta) << " ell=" << result.ell
       << " s=" << cfg.s << " tau=" << cfg.tau << " alpha=" << fmt(cfg.alpha)
       << " ratio=" << fmt(cfg.ratio) << " w=" << cfg.w << " trials=" << cfg.trials
       << " hash=" << (cfg.oracle_random ? "random-oracle" : "Z") << '\n';
    for (const auto& [name, value] : result.summary) os << "  " << name << " = " << value << '\n';
    for (const auto& c : result.checks) {
        os << (c.pass ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) os << "  [" << c.detail << ']';
        os << '\n';
    }
}

}  // namespace zhash
