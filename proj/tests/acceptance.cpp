// Acceptance suite: every release criterion with its pinned tolerance,
// one pass/fail line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "qdk/codes.hpp"
#include "qdk/collective.hpp"
#include "qdk/dfs_finder.hpp"
#include "qdk/noise_sim.hpp"
#include "qdk/rng.hpp"
#include "qdk/su_algebra.hpp"
#include "qdk/tableaux.hpp"

using namespace qdk;
using Cx = std::complex<double>;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<tableaux::DynkinLabel, std::int64_t> term_map(const tableaux::Decomposition& dec) {
    std::map<tableaux::DynkinLabel, std::int64_t> m;
    for (const auto& t : dec.terms()) m[t.diagram.dynkin()] += t.multiplicity;
    return m;
}

std::vector<tableaux::FactorKind> chain(const std::string& s) {
    std::vector<tableaux::FactorKind> f;
    for (char c : s)
        f.push_back(c == 'f' ? tableaux::FactorKind::Fundamental
                             : tableaux::FactorKind::Antifundamental);
    return f;
}

collective::SiteConfig config_of(int d, const std::string& kinds) {
    std::vector<su::RepKind> k;
    for (char c : kinds)
        k.push_back(c == 'f' ? su::RepKind::Fundamental : su::RepKind::Antifundamental);
    return collective::SiteConfig(d, k);
}

// ------------------------------------------------------------- criterion 1
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    using L = tableaux::DynkinLabel;
    struct Case {
        int d;
        std::string factors;
        std::map<L, std::int64_t> expect;
    };
    const std::vector<Case> cases = {
        {2, "ff", {{L{2}, 1}, {L{0}, 1}}},                                    // 3 + 1
        {2, "fff", {{L{1}, 2}, {L{3}, 1}}},                                   // 2 + 2 + 4
        {3, "ff", {{L{0, 1}, 1}, {L{2, 0}, 1}}},                              // 3bar + 6
        {3, "af", {{L{1, 1}, 1}, {L{0, 0}, 1}}},                              // 8 + 1
        {3, "fff", {{L{1, 1}, 2}, {L{0, 0}, 1}, {L{3, 0}, 1}}},               // 8+8+1+10
        {3, "aff", {{L{2, 1}, 1}, {L{1, 0}, 2}, {L{0, 2}, 1}}},               // 15+3+3+6bar
        {3, "ffff", {{L{1, 0}, 3}, {L{0, 2}, 2}, {L{2, 1}, 3}, {L{4, 0}, 1}}},// 81 total
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        auto dec = tableaux::decompose_chain(chain(c.factors), c.d);
        if (term_map(dec) != c.expect) {
            ok = false;
            detail = "mismatch for d=" + std::to_string(c.d) + " chain " + c.factors;
        }
        std::int64_t total = 1;
        for (std::size_t i = 0; i < c.factors.size(); ++i) total *= c.d;
        if (dec.total_dimension() != total) ok = false;
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 1.0) {
        ok = false;
        detail = "runtime " + std::to_string(elapsed) + " s";
    }
    if (detail.empty())
        detail = "seven products exact, " + std::to_string(elapsed) + " s";
    report(1, "tableau reproduction", ok, detail);
}

// ------------------------------------------------------------- criterion 2
void criterion_2() {
    bool ok = true;
    double worst_gram = 0.0, worst_label = 0.0;
    for (const auto& code : {codes::three_qubit_code(), codes::three_qutrit_code()}) {
        const auto dim = code.config.dim();
        Eigen::MatrixXcd v(dim, dim);
        for (std::int64_t i = 0; i < dim; ++i) v.row(i) = code.vectors[i].state.amps.adjoint();
        worst_gram = std::max(
            worst_gram,
            (v * v.adjoint() - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff());

        auto set = collective::OperatorSet::build(code.config);
        Eigen::MatrixXcd t3 = set.op(2) / 2.0;
        Eigen::MatrixXcd t2 =
            (set.op(0) * set.op(0) + set.op(1) * set.op(1) + set.op(2) * set.op(2)) / 4.0;
        Eigen::MatrixXcd y;
        Eigen::MatrixXcd c2 = Eigen::MatrixXcd::Zero(dim, dim);
        for (int alpha = 0; alpha < set.generator_count(); ++alpha)
            c2 += set.op(alpha) * set.op(alpha);
        if (code.config.d == 3) y = set.op(7) / std::sqrt(3.0);
        for (const auto& ls : code.vectors) {
            const auto& s = ls.state.amps;
            worst_label = std::max(worst_label, (t3 * s - ls.labels.t3 * s).norm());
            worst_label =
                std::max(worst_label, (t2 * s - ls.labels.t * (ls.labels.t + 1) * s).norm());
            if (code.config.d == 3) {
                worst_label = std::max(worst_label, (y * s - ls.labels.y * s).norm());
                // principal labels through the collective quadratic casimir
                const double c2_expect = 4.0 / 3.0 *
                                             (ls.labels.p * ls.labels.p + ls.labels.q * ls.labels.q +
                                              ls.labels.p * ls.labels.q) +
                                         4.0 * (ls.labels.p + ls.labels.q);
                worst_label = std::max(worst_label, (c2 * s - c2_expect * s).norm());
            }
        }
    }
    ok = worst_gram < 1e-12 && worst_label < 1e-10;
    char detail[128];
    std::snprintf(detail, sizeof detail, "gram defect %.2e (tol 1e-12), label residual %.2e (tol 1e-10)",
                  worst_gram, worst_label);
    report(2, "printed-state verification", ok, detail);
}

// ------------------------------------------------------------- criterion 3
void criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    rng::SplitMix64 r(20260810);
    auto qb = codes::three_qubit_code();
    auto qt = codes::three_qutrit_code();
    double qb_mismatch = 0.0, off_block = 0.0, copy_diff = 0.0, printed_diff = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> a3(3), a8(8);
        for (auto& x : a3) x = r.gaussian();
        for (auto& x : a8) x = r.gaussian();

        Eigen::MatrixXcd m = codes::sdfs_matrix(qb, a3);
        qb_mismatch = std::max(
            qb_mismatch, (m - codes::qubit3_sdfs_reference(a3)).cwiseAbs().maxCoeff());

        Eigen::MatrixXcd mq = codes::sdfs_matrix(qt, a8);
        Eigen::MatrixXcd b0 = codes::extract_block(mq, qt.logical_blocks[0]);
        Eigen::MatrixXcd b1 = codes::extract_block(mq, qt.logical_blocks[1]);
        copy_diff = std::max(copy_diff, (b0 - b1).cwiseAbs().maxCoeff());
        printed_diff = std::max(
            printed_diff, (b0 - codes::qutrit3_octet_reference(a8)).cwiseAbs().maxCoeff());
        // off-block structure of the full 27x27 conjugated operator
        auto inside = [&](Eigen::Index i) {
            if (i < 8) return 0;
            if (i < 16) return 1;
            if (i < 17) return 2;
            return 3;
        };
        for (Eigen::Index i = 0; i < 27; ++i)
            for (Eigen::Index j = 0; j < 27; ++j)
                if (inside(i) != inside(j)) off_block = std::max(off_block, std::abs(mq(i, j)));
    }
    const double elapsed = seconds_since(t0);
    bool ok = qb_mismatch < 1e-12 && off_block < 1e-10 && copy_diff < 1e-12 &&
              printed_diff < 1e-12 && elapsed < 10.0;
    char detail[192];
    std::snprintf(detail, sizeof detail,
                  "qubit3 %.2e, off-block %.2e, S0-S1 %.2e, S0-printed %.2e, %.2f s",
                  qb_mismatch, off_block, copy_diff, printed_diff, elapsed);
    report(3, "matrix reproduction (100 seeded draws)", ok, detail);
}

// ------------------------------------------------------------- criterion 4
void criterion_4() {
    // |phi'> with kinds [f, af]
    auto mixed = config_of(3, "fa");
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(9);
    amps(0) = amps(4) = amps(8) = 1 / std::sqrt(3.0);
    auto set_mixed = collective::OperatorSet::build(mixed);
    double phi_prime_norm = 0.0;
    for (int alpha = 0; alpha < 8; ++alpha)
        phi_prime_norm = std::max(phi_prime_norm, set_mixed.apply(alpha, amps).norm());

    auto set_ff = collective::OperatorSet::build(config_of(3, "ff"));
    double phi_norm = 0.0;
    for (int alpha = 0; alpha < 8; ++alpha)
        phi_norm = std::max(phi_norm, set_ff.apply(alpha, amps).norm());

    auto set3 = collective::OperatorSet::build(config_of(3, "fff"));
    auto singlet = codes::qutrit_singlet();
    double singlet_norm = 0.0;
    for (int alpha = 0; alpha < 8; ++alpha)
        singlet_norm = std::max(singlet_norm, set3.apply(alpha, singlet.amps).norm());

    bool ok = phi_prime_norm < 1e-12 && phi_norm > 0.5 && singlet_norm < 1e-12;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "|phi'| %.2e (tol 1e-12), |phi| %.3f (> 0.5), psi_s %.2e (tol 1e-12)",
                  phi_prime_norm, phi_norm, singlet_norm);
    report(4, "singlet discrimination", ok, detail);
}

// ------------------------------------------------------------- criterion 5
void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<int, std::string>> configs = {
        {2, "ff"},  {2, "fff"},  {2, "ffff"},
        {3, "ff"},  {3, "af"},
        {3, "fff"}, {3, "aff"},
        {3, "ffff"}, {3, "afff"},
    };
    bool ok = true;
    std::string detail;
    int commutant_qubits = 0, commutant_qutrits = 0;
    for (const auto& [d, kinds] : configs) {
        auto report_ = dfs::decompose_hilbert_space(config_of(d, kinds));
        std::map<tableaux::DynkinLabel, std::int64_t> numerical;
        for (const auto& s : report_.sectors) numerical[s.label] += s.multiplicity;
        auto expected = term_map(tableaux::decompose_chain(chain(kinds), d));
        if (numerical != expected) {
            ok = false;
            detail = "sector mismatch for d=" + std::to_string(d) + " " + kinds;
        }
        auto set = collective::OperatorSet::build(config_of(d, kinds));
        int commutant = dfs::commutant_dimension(set);
        if (commutant != report_.commutant_dimension_expected()) {
            ok = false;
            detail = "commutant mismatch for d=" + std::to_string(d) + " " + kinds;
        }
        if (d == 2 && kinds == "fff") commutant_qubits = commutant;
        if (d == 3 && kinds == "fff") commutant_qutrits = commutant;
    }
    if (commutant_qubits != 5 || commutant_qutrits != 6) {
        ok = false;
        detail = "three-site commutants off";
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 60.0) {
        ok = false;
        detail = "runtime " + std::to_string(elapsed) + " s";
    }
    if (detail.empty()) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "9 configurations, commutants 5 and 6 confirmed, %.2f s", elapsed);
        detail = buf;
    }
    report(5, "oracle equivalence (numerical vs tableaux)", ok, detail);
}

// ------------------------------------------------------------- criterion 6
void criterion_6() {
    auto t0 = std::chrono::steady_clock::now();
    sim::SimConfig config;
    config.code_id = "qutrit3";
    config.trials = 1000;
    config.seed = 20260810;
    config.distribution.scale = 1.0;
    config.time = 1.0;
    config.encoding = sim::Encoding::Dfs;
    auto dfs_report = sim::run_trials(config);

    config.encoding = sim::Encoding::Bare;
    auto bare_report = sim::run_trials(config);

    const double elapsed = seconds_since(t0);
    bool ok = dfs_report.min_fidelity >= 1.0 - 1e-9 && dfs_report.max_leakage < 1e-10 &&
              bare_report.mean_fidelity < 0.999 && elapsed < 120.0;
    char detail[192];
    std::snprintf(detail, sizeof detail,
                  "dfs min fidelity 1-%.2e, leakage %.2e; bare mean %.4f; %.1f s",
                  1.0 - dfs_report.min_fidelity, dfs_report.max_leakage,
                  bare_report.mean_fidelity, elapsed);
    report(6, "noiseless-subsystem dynamics (1000 trials)", ok, detail);
}

// ------------------------------------------------------------- criterion 7
void criterion_7() {
    // fixed points at 1e4 samples
    auto mixed_cfg = config_of(3, "fa");
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(9);
    amps(0) = amps(4) = amps(8) = 1 / std::sqrt(3.0);
    Eigen::MatrixXcd rho_singlet = amps * amps.adjoint();
    auto set_mixed = collective::OperatorSet::build(mixed_cfg);
    double singlet_dev =
        (sim::twirl(rho_singlet, set_mixed, 10000, 1) - rho_singlet).cwiseAbs().maxCoeff();

    auto set_ff = collective::OperatorSet::build(config_of(3, "ff"));
    Eigen::MatrixXcd mm = Eigen::MatrixXcd::Identity(9, 9) / 9.0;
    double mm_dev = (sim::twirl(mm, set_ff, 10000, 2) - mm).cwiseAbs().maxCoeff();

    // random two-qutrit density matrix
    rng::SplitMix64 r(77);
    Eigen::MatrixXcd g(9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) g(i, j) = Cx(r.gaussian(), r.gaussian());
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    Eigen::MatrixXcd twirled = sim::twirl(rho, set_ff, 10000, 3);
    double resid = 0.0;
    for (int alpha = 0; alpha < 8; ++alpha)
        resid = std::max(resid,
                         (set_ff.op(alpha) * twirled - twirled * set_ff.op(alpha)).norm());

    bool ok = singlet_dev < 1e-6 && mm_dev < 1e-6 && resid < 1e-3;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "singlet dev %.2e, mixed dev %.2e (tol 1e-6); commutator %.2e (tol 1e-3)",
                  singlet_dev, mm_dev, resid);
    report(7, "twirl fixed points and convergence (1e4 samples)", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
