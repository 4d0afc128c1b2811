// zhash: Monte-Carlo experiments over the hash class Z and its applications.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zhash/bpz.hpp"
#include "zhash/error.hpp"
#include "zhash/experiments.hpp"
#include "zhash/prng.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

void add_common(CLI::App* sub, zhash::ExperimentConfig& cfg, std::string& out) {
    sub->add_option("--n", cfg.n, "number of keys / jobs")->capture_default_str();
    sub->add_option("--d", cfg.d, "number of hash functions")->capture_default_str();
    sub->add_option("--c", cfg.c, "number of g-components")->capture_default_str();
    sub->add_option("--kappa", cfg.kappa, "independence of f and g (even)")->capture_default_str();
    sub->add_option("--epsilon", cfg.epsilon, "table slack: m = (1+eps) n")->capture_default_str();
    sub->add_option("--delta", cfg.delta, "ell = ceil(n^delta)")->capture_default_str();
    sub->add_option("--ell", cfg.ell, "override the z table size");
    sub->add_option("--s", cfg.s, "stash size")->capture_default_str();
    sub->add_option("--tau", cfg.tau, "collision threshold (0: derived)")->capture_default_str();
    sub->add_option("--alpha", cfg.alpha, "failure exponent for tau_threshold")->capture_default_str();
    sub->add_option("--ratio", cfg.ratio, "edges per vertex (core-threshold)")->capture_default_str();
    sub->add_option("--w", cfg.w, "output bits (uniform-probe)")->capture_default_str();
    sub->add_option("--probe-keys", cfg.probe_keys, "probed keys (uniform-probe)")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "number of trials")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
    sub->add_flag("--oracle-random", cfg.oracle_random, "use fully random hash values");
    sub->add_option("--out", out, "CSV output path (default: stdout)");
}

int run(const zhash::ExperimentConfig& cfg, const std::string& out) {
    zhash::ExperimentResult result;
    try {
        result = zhash::run_experiment(cfg);
    } catch (const zhash::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (out.empty()) {
        zhash::write_csv(std::cout, result);
        zhash::write_summary(std::cerr, cfg, result);
    } else {
        std::ofstream os(out, std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot open " << out << '\n';
            return kExitUsage;
        }
        zhash::write_csv(os, result);
        os.flush();
        if (!os) {
            std::cerr << "error: write to " << out << " failed\n";
            return kExitUsage;
        }
        zhash::write_summary(std::cout, cfg, result);
    }
    return result.passed() ? kExitPass : kExitFail;
}

int build_mphf(const std::string& keys_path, const std::string& out, const zhash::MphfParams& params,
               std::uint64_t seed) {
    std::ifstream in(keys_path);
    if (!in) {
        std::cerr << "error: cannot open " << keys_path << '\n';
        return kExitUsage;
    }
    std::vector<zhash::Key> keys;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(token, &used, 10);
            if (used != token.size()) throw std::invalid_argument(token);
            keys.push_back(v);
        } catch (const std::exception&) {
            std::cerr << "error: bad key '" << token << "'\n";
            return kExitUsage;
        }
    }
    try {
        zhash::Prng prng(seed);
        const auto built = zhash::build_mphf(prng, keys, params);
        const auto blob = zhash::serialize(built.ph);
        std::ofstream os(out, std::ios::binary);
        os.write(reinterpret_cast<const char*>(blob.data()), static_cast<std::streamsize>(blob.size()));
        if (!os) {
            std::cerr << "error: write to " << out << " failed\n";
            return kExitUsage;
        }
        std::cout << "keys: " << keys.size() << "\nattempts: " << built.attempts
                  << "\nrange: " << 2 * built.ph.m() << "\nbytes: " << blob.size() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Experiments with the hash class Z"};
    app.require_subcommand(1);

    std::vector<zhash::ExperimentConfig> configs(zhash::experiment_names().size());
    std::vector<std::string> outs(configs.size());
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        configs[i].experiment = zhash::experiment_names()[i];
        subs.push_back(app.add_subcommand(configs[i].experiment, "run the " + configs[i].experiment +
                                                                     " experiment"));
        add_common(subs.back(), configs[i], outs[i]);
    }

    std::string keys_path;
    std::string blob_path;
    zhash::MphfParams mp;
    std::uint64_t mphf_seed = 42;
    auto* mphf = app.add_subcommand("mphf-build", "build a minimal perfect hash for a key file");
    mphf->add_option("keys", keys_path, "file with decimal keys")->required();
    mphf->add_option("--out", blob_path, "serialized output")->required();
    mphf->add_option("--epsilon", mp.epsilon)->capture_default_str();
    mphf->add_option("--delta", mp.delta)->capture_default_str();
    mphf->add_option("--c", mp.c)->capture_default_str();
    mphf->add_option("--seed", mphf_seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (mphf->parsed()) return build_mphf(keys_path, blob_path, mp, mphf_seed);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) return run(configs[i], outs[i]);
    }
    return kExitUsage;
}
