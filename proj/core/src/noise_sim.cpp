#include "qdk/noise_sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qdk/rng.hpp"

namespace qdk::sim {

using Cx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

std::vector<double> draw_coefficients(rng::SplitMix64& r, const CoefficientDistribution& dist,
                                      int count) {
    std::vector<double> a(count);
    for (int i = 0; i < count; ++i) {
        a[i] = dist.kind == CoefficientDistribution::Kind::Gaussian
                   ? dist.scale * r.gaussian()
                   : dist.scale * (2.0 * r.next_double() - 1.0);
    }
    return a;
}

Eigen::Vector2cd draw_logical(rng::SplitMix64& r) {
    Eigen::Vector2cd c;
    c << Cx(r.gaussian(), r.gaussian()), Cx(r.gaussian(), r.gaussian());
    return c / c.norm();
}

VectorXcd draw_gauge(rng::SplitMix64& r, int size) {
    VectorXcd g(size);
    for (int i = 0; i < size; ++i) g(i) = Cx(r.gaussian(), r.gaussian());
    return g / g.norm();
}

collective::StateVector bare_encode(const collective::SiteConfig& config,
                                    const Eigen::Vector2cd& c) {
    // logical amplitudes on the first site's |0>,|1>, remaining sites parked
    // in |d-1...> (|0...> for d=2)
    const int park = config.d == 2 ? 0 : config.d - 1;
    std::vector<int> digits(config.sites(), park);
    digits[0] = 0;
    auto s0 = collective::StateVector::basis_state(config, digits);
    digits[0] = 1;
    auto s1 = collective::StateVector::basis_state(config, digits);
    return collective::StateVector(config, c(0) * s0.amps + c(1) * s1.amps);
}

Eigen::Matrix2cd bare_decode(const collective::StateVector& state, double* leakage) {
    // reduced density matrix of site 0, restricted to its |0>,|1> block
    const int d = state.config.d;
    const std::int64_t rest = state.config.dim() / d;
    Eigen::MatrixXcd site(d, d);
    site.setZero();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (std::int64_t k = 0; k < rest; ++k)
                site(a, b) += state.amps(a * rest + k) * std::conj(state.amps(b * rest + k));
    Eigen::Matrix2cd rho = site.topLeftCorner<2, 2>();
    if (leakage) *leakage = std::max(0.0, 1.0 - rho.trace().real());
    return rho;
}

}  // namespace

double logical_fidelity(const Eigen::Vector2cd& input, const Eigen::Matrix2cd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
    if (es.eigenvalues().minCoeff() < -1e-9)
        throw std::domain_error("logical_fidelity: output density matrix is not positive");
    const double cn = input.norm();
    if (cn < 1e-14) throw std::invalid_argument("logical_fidelity: zero input state");
    Eigen::Vector2cd c = input / cn;
    double f = std::real(c.dot(rho * c));
    return std::clamp(f, 0.0, 1.0 + 1e-12);
}

FidelityReport run_trials(const SimConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
    if (!(config.distribution.scale >= 0.0) || !std::isfinite(config.distribution.scale))
        throw std::invalid_argument("run_trials: bad distribution scale");
    if (!std::isfinite(config.time)) throw std::invalid_argument("run_trials: bad time");

    const auto t_start = std::chrono::steady_clock::now();
    codes::CodeBasis code = codes::code_by_id(config.code_id);
    collective::OperatorSet set = collective::OperatorSet::build(code.config);
    const int coeff_count = set.generator_count();

    FidelityReport report;
    report.config = config;
    report.trials.resize(config.trials);

    rng::SplitMix64 root(config.seed);
    // trials use independent substreams keyed by index; execution order is
    // irrelevant to the result, reduction happens in trial-index order
    for (int trial = 0; trial < config.trials; ++trial) {
        rng::SplitMix64 r = root.substream(static_cast<std::uint64_t>(trial));
        std::vector<double> a = draw_coefficients(r, config.distribution, coeff_count);
        Eigen::Vector2cd c = draw_logical(r);
        VectorXcd gauge = draw_gauge(r, code.block_size());

        collective::StateVector input =
            config.encoding == Encoding::Dfs ? codes::encode(code, {c, gauge})
                                             : bare_encode(code.config, c);
        collective::StateVector output = collective::evolve(input, set, a, config.time);

        TrialRecord rec;
        if (config.encoding == Encoding::Dfs) {
            codes::DecodeResult dec = codes::decode(code, output);
            rec.leakage = dec.leakage;
            rec.fidelity = logical_fidelity(c, dec.rho);
        } else {
            Eigen::Matrix2cd rho = bare_decode(output, &rec.leakage);
            rec.fidelity = logical_fidelity(c, rho);
        }
        report.trials[trial] = rec;
    }

    double sum = 0.0, minf = 1.0, maxl = 0.0;
    for (const auto& t : report.trials) {
        sum += t.fidelity;
        minf = std::min(minf, t.fidelity);
        maxl = std::max(maxl, t.leakage);
    }
    report.mean_fidelity = sum / config.trials;
    report.min_fidelity = minf;
    report.max_leakage = maxl;
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return report;
}

MatrixXcd twirl(const MatrixXcd& rho, const collective::OperatorSet& set, int samples,
                std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("twirl: samples must be >= 1");
    const Eigen::Index dim = rho.rows();
    if (rho.cols() != dim || dim != set.config().dim())
        throw std::invalid_argument("twirl: density matrix does not match the operator set");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("twirl: input is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-10)
        throw std::invalid_argument("twirl: input trace != 1");
    {
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho);
        if (es.eigenvalues().minCoeff() < -1e-10)
            throw std::invalid_argument("twirl: input is not positive semidefinite");
    }

    constexpr int kWordLength = 3;
    const int rounds = samples >= 16 ? 4 : 1;
    rng::SplitMix64 r(seed);

    MatrixXcd current = rho;
    int spent = 0;
    for (int round = 0; round < rounds; ++round) {
        const int budget = round + 1 == rounds ? samples - spent : samples / rounds;
        spent += budget;
        MatrixXcd acc = MatrixXcd::Zero(dim, dim);
        for (int s = 0; s < budget; ++s) {
            MatrixXcd u = MatrixXcd::Identity(dim, dim);
            for (int w = 0; w < kWordLength; ++w) {
                std::vector<double> a =
                    draw_coefficients(r, {CoefficientDistribution::Kind::Gaussian, 1.0},
                                      set.generator_count());
                MatrixXcd h = set.error_operator(a);
                Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
                VectorXcd phases(dim);
                for (Eigen::Index i = 0; i < dim; ++i)
                    phases(i) = std::exp(Cx(0, -es.eigenvalues()(i)));
                u = (es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint() * u)
                        .eval();
            }
            acc += u * current * u.adjoint();
        }
        current = acc / static_cast<double>(budget);
        current = ((current + current.adjoint()) / 2.0).eval();
    }
    return current;
}

void write_csv(const FidelityReport& report, std::ostream& out) {
    const auto& c = report.config;
    out << "# qdk-simulation/1\n";
    out << "# code=" << c.code_id << " encoding=" << (c.encoding == Encoding::Dfs ? "dfs" : "bare")
        << " trials=" << c.trials << " seed=" << c.seed << " dist="
        << (c.distribution.kind == CoefficientDistribution::Kind::Gaussian ? "gaussian" : "uniform")
        << " scale=" << c.distribution.scale << " time=" << c.time << "\n";
    out << "trial,fidelity,leakage\n";
    char line[128];
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g\n", i, report.trials[i].fidelity,
                      report.trials[i].leakage);
        out << line;
    }
}

std::string to_json(const FidelityReport& report) {
    const auto& c = report.config;
    nlohmann::json j;
    j["schema"] = "qdk-simulation/1";
    j["config"] = {
        {"code", c.code_id},
        {"encoding", c.encoding == Encoding::Dfs ? "dfs" : "bare"},
        {"trials", c.trials},
        {"seed", c.seed},
        {"distribution",
         c.distribution.kind == CoefficientDistribution::Kind::Gaussian ? "gaussian" : "uniform"},
        {"scale", c.distribution.scale},
        {"time", c.time},
    };
    j["mean_fidelity"] = report.mean_fidelity;
    j["min_fidelity"] = report.min_fidelity;
    j["max_leakage"] = report.max_leakage;
    j["runtime_seconds"] = report.runtime_seconds;
    auto& jt = j["trials"] = nlohmann::json::array();
    for (const auto& t : report.trials) jt.push_back({{"fidelity", t.fidelity}, {"leakage", t.leakage}});
    return j.dump(2);
}

}  // namespace qdk::sim
