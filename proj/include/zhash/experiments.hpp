#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zhash {

struct ExperimentConfig {
    std::string experiment;
    std::uint64_t n = 1000;
    unsigned d = 2;
    unsigned c = 4;
    unsigned kappa = 2;
    double epsilon = 1.0;
    double delta = 0.5;
    std::optional<std::uint64_t> ell;  // overrides ceil(n^delta)
    unsigned s = 0;
    std::uint32_t tau = 0;  // 0: take tau from tau_threshold
    double alpha = 1.0;
    double ratio = 0.8;     // core-threshold: edges / total vertices
    unsigned w = 2;         // uniform-probe word width
    unsigned probe_keys = 2;
    std::uint64_t trials = 100;
    std::uint64_t seed = 42;
    bool oracle_random = false;
    unsigned threads = 1;
};

/// Names accepted in ExperimentConfig::experiment.
const std::vector<std::string>& experiment_names();

/// Throws ParameterError with a readable message on invalid settings.
void validate(const ExperimentConfig& cfg);

/// ceil(n^delta) unless cfg.ell is set.
std::uint64_t derived_ell(const ExperimentConfig& cfg);

enum class ColumnKind { integer, real };

struct Column {
    std::string name;
    ColumnKind kind;
};

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct ExperimentResult {
    std::string experiment;
    std::uint64_t ell = 0;
    std::vector<Column> columns;                 // per-trial statistics
    std::vector<std::vector<double>> rows;       // NaN renders as an empty field
    std::vector<double> wall_us;
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<Check> checks;

    [[nodiscard]] bool passed() const noexcept;
};

/// Runs every trial (in parallel when cfg.threads > 1; trial i always uses
/// stream child(i) of the seed) and evaluates the acceptance checks.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Header "experiment,trial,ell,<columns>,wall_us", one row per trial,
/// floats with 6 significant digits.
void write_csv(std::ostream& os, const ExperimentResult& result);

/// Parameter echo, summary values, and one PASS/FAIL line per check.
void write_summary(std::ostream& os, const ExperimentConfig& cfg, const ExperimentResult& result);

}  // namespace zhash
