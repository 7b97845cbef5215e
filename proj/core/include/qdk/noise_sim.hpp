#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdk/codes.hpp"
#include "qdk/collective.hpp"

namespace qdk::sim {

enum class Encoding { Dfs, Bare };

/// Distribution of the collective error coefficients a_alpha. Gaussian
/// draws are i.i.d. N(0, scale^2); Uniform draws are i.i.d. on
/// [-scale, scale].
struct CoefficientDistribution {
    enum class Kind { Gaussian, Uniform };
    Kind kind = Kind::Gaussian;
    double scale = 1.0;
};

struct SimConfig {
    std::string code_id = "qutrit3";
    int trials = 1;
    std::uint64_t seed = 0;
    CoefficientDistribution distribution;
    double time = 1.0;
    Encoding encoding = Encoding::Dfs;
};

struct TrialRecord {
    double fidelity = 0.0;
    double leakage = 0.0;
};

/// Per-trial fidelities plus summary statistics; identical (seed, config)
/// produce identical records.
struct FidelityReport {
    SimConfig config;
    std::vector<TrialRecord> trials;
    double mean_fidelity = 0.0;
    double min_fidelity = 0.0;
    double max_leakage = 0.0;
    double runtime_seconds = 0.0;
};

/// For each trial: draw coefficients, a random logical state and gauge,
/// encode (dfs = code blocks; bare = logical amplitudes on the first site's
/// |0>,|1> with the remaining sites parked), evolve, decode, record the
/// logical fidelity against the input.
FidelityReport run_trials(const SimConfig& config);

/// Standard state fidelity <c|rho|c> of a pure logical input against a 2x2
/// output density matrix. Throws std::domain_error when rho is visibly
/// non-positive (eigenvalue below -1e-9).
double logical_fidelity(const Eigen::Vector2cd& input, const Eigen::Matrix2cd& rho);

/// Monte Carlo group average of U rho U^dagger over collective unitaries
/// U = exp(-i sum_a a_alpha S^alpha) composed in random words of three
/// exponentials. The sample budget is spent in averaging rounds applied in
/// sequence, which drives the non-commutant part of rho down geometrically;
/// singlet projectors and the maximally mixed state are exact fixed points.
Eigen::MatrixXcd twirl(const Eigen::MatrixXcd& rho, const collective::OperatorSet& set,
                       int samples, std::uint64_t seed);

/// CSV with header comments carrying the full config, then
/// trial,fidelity,leakage rows.
void write_csv(const FidelityReport& report, std::ostream& out);

/// JSON summary (config echo, statistics, per-trial records).
std::string to_json(const FidelityReport& report);

}  // namespace qdk::sim
