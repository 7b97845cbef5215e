// qdk — command-line front end for the qudit DFS/NS toolkit.
//
// Subcommands: decompose, operators, find-dfs, verify-code, label,
// discriminate, simulate, twirl. Exit codes: 0 success, 2 validation
// failure, 1 internal error. Commands accept --json <path> where output has
// a JSON schema, and --seed where randomness is involved.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdk/codes.hpp"
#include "qdk/collective.hpp"
#include "qdk/dfs_finder.hpp"
#include "qdk/noise_sim.hpp"
#include "qdk/rng.hpp"
#include "qdk/su_algebra.hpp"
#include "qdk/tableaux.hpp"

namespace {

using qdk::tableaux::FactorKind;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<FactorKind> parse_factors(const std::string& csv) {
    std::vector<FactorKind> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "f")
            out.push_back(FactorKind::Fundamental);
        else if (tok == "af")
            out.push_back(FactorKind::Antifundamental);
        else
            throw ValidationError("bad factor '" + tok + "' (expected f or af)");
    }
    if (out.empty()) throw ValidationError("empty factor list");
    return out;
}

std::vector<qdk::su::RepKind> parse_kinds(const std::string& csv, int n) {
    if (csv.empty()) return std::vector<qdk::su::RepKind>(n, qdk::su::RepKind::Fundamental);
    std::vector<qdk::su::RepKind> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "f")
            out.push_back(qdk::su::RepKind::Fundamental);
        else if (tok == "af")
            out.push_back(qdk::su::RepKind::Antifundamental);
        else
            throw ValidationError("bad kind '" + tok + "' (expected f or af)");
    }
    if (n > 0 && static_cast<int>(out.size()) != n)
        throw ValidationError("--kinds length does not match --n");
    return out;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << body;
    if (body.empty() || body.back() != '\n') out << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

std::string dynkin_str(const qdk::tableaux::DynkinLabel& label) {
    std::string s = "(";
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(label[i]);
    }
    return s + ")";
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// ---------------------------------------------------------------- decompose
int cmd_decompose(int d, const std::string& factors_csv, const std::string& json_path) {
    auto factors = parse_factors(factors_csv);
    auto decomposition = qdk::tableaux::decompose_chain(factors, d);

    std::cout << "direct sum: " << decomposition.direct_sum_string() << "\n";
    std::cout << "terms:\n";
    for (const auto& t : decomposition.terms()) {
        std::cout << "  " << dynkin_str(t.diagram.dynkin()) << " ["
                  << qdk::tableaux::dimension_closed_form(t.diagram) << "]  x" << t.multiplicity
                  << "\n";
    }
    std::cout << "total dimension: " << decomposition.total_dimension() << "\n";
    if (!json_path.empty())
        write_file(json_path, qdk::tableaux::to_json(decomposition, d, factors));
    return 0;
}

// ---------------------------------------------------------------- operators
int cmd_operators(int d, int n, const std::string& kinds_csv, const std::string& json_path) {
    nlohmann::json j;
    if (n <= 0 && !kinds_csv.empty())
        n = static_cast<int>(parse_kinds(kinds_csv, 0).size());
    if (n <= 0) {
        auto gens = qdk::su::generators(d);
        std::cout << gens.size() << " single-site generators for d=" << d << "\n";
        j["schema"] = "qdk-operators/1";
        j["d"] = d;
        auto& jg = j["generators"] = nlohmann::json::array();
        for (const auto& g : gens) jg.push_back(matrix_to_json(g));
    } else {
        auto kinds = parse_kinds(kinds_csv, n);
        qdk::collective::SiteConfig config(d, kinds);
        if (config.dim() > qdk::collective::max_dense_dim())
            throw ValidationError("d^n = " + std::to_string(config.dim()) +
                                  " exceeds the dense bound " +
                                  std::to_string(qdk::collective::max_dense_dim()) +
                                  " (set QDK_MAX_DIM to raise it)");
        auto set = qdk::collective::OperatorSet::build(config);
        std::cout << set.generator_count() << " collective generators on " << n << " sites, dim "
                  << config.dim() << "\n";
        double herm = 0.0;
        for (int alpha = 0; alpha < set.generator_count(); ++alpha)
            herm = std::max(herm,
                            (set.op(alpha) - set.op(alpha).adjoint()).cwiseAbs().maxCoeff());
        std::cout << "hermiticity defect: " << fmt(herm) << "\n";
        j["schema"] = "qdk-operators/1";
        j["d"] = d;
        auto& jk = j["kinds"] = nlohmann::json::array();
        for (auto k : kinds) jk.push_back(k == qdk::su::RepKind::Fundamental ? "f" : "af");
        auto& jg = j["generators"] = nlohmann::json::array();
        for (int alpha = 0; alpha < set.generator_count(); ++alpha)
            jg.push_back(matrix_to_json(set.op(alpha)));
    }
    if (!json_path.empty()) write_file(json_path, j.dump(2));
    return 0;
}

// ----------------------------------------------------------------- find-dfs
int cmd_find_dfs(int d, int n, const std::string& kinds_csv, const std::string& json_path,
                 bool full) {
    auto kinds = parse_kinds(kinds_csv, n);
    qdk::collective::SiteConfig config(d, kinds);
    if (config.dim() > qdk::collective::max_dense_dim())
        throw ValidationError("d^n = " + std::to_string(config.dim()) +
                              " exceeds the dense bound; rerun with QDK_MAX_DIM raised or use "
                              "the matrix-free operator interface");

    auto report = qdk::dfs::decompose_hilbert_space(config);
    auto set = qdk::collective::OperatorSet::build(config);
    int commutant = qdk::dfs::commutant_dimension(set);

    std::cout << "sectors (J, d_J, n_J):\n";
    for (const auto& s : report.sectors)
        std::cout << "  " << dynkin_str(s.label) << "  d_J=" << s.dim << "  n_J=" << s.multiplicity
                  << "  C2=" << fmt(s.casimir2) << (d == 3 ? "  C3=" + fmt(s.casimir3) : "")
                  << "\n";
    std::cout << "commutant dimension: " << commutant
              << " (sum of n_J^2 = " << report.commutant_dimension_expected() << ")\n";
    std::cout << "unitarity defect: " << fmt(report.residuals.unitarity)
              << ", weight residual: " << fmt(report.residuals.weight_eigen) << "\n";

    if (!json_path.empty()) {
        nlohmann::json j;
        j["schema"] = "qdk-report/1";
        j["d"] = d;
        auto& jk = j["kinds"] = nlohmann::json::array();
        for (auto k : kinds) jk.push_back(k == qdk::su::RepKind::Fundamental ? "f" : "af");
        auto& js = j["sectors"] = nlohmann::json::array();
        for (const auto& s : report.sectors)
            js.push_back({{"dynkin", s.label},
                          {"dim", s.dim},
                          {"mult", s.multiplicity},
                          {"casimir2", s.casimir2},
                          {"casimir3", s.casimir3}});
        j["commutant_dimension"] = commutant;
        j["residuals"] = {{"unitarity", report.residuals.unitarity},
                          {"weight_eigen", report.residuals.weight_eigen},
                          {"casimir_split", report.residuals.casimir_split}};
        if (full) {
            j["v_dfs"] = matrix_to_json(report.v_dfs);
            auto& jl = j["labels"] = nlohmann::json::array();
            for (const auto& l : report.labels)
                jl.push_back({{"p", l.p}, {"q", l.q}, {"lambda", l.lambda},
                              {"t", l.t}, {"t3", l.t3}, {"y", l.y}});
        }
        write_file(json_path, j.dump(2));
    }
    return 0;
}

// -------------------------------------------------------------- verify-code
struct Check {
    std::string name;
    double residual;
    double tolerance;
    bool pass() const { return residual < tolerance; }
};

int cmd_verify_code(const std::string& code_id, int trials, std::uint64_t seed) {
    qdk::codes::CodeBasis code;
    try {
        code = qdk::codes::code_by_id(code_id);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    if (trials < 1) throw ValidationError("--trials must be >= 1");

    auto set = qdk::collective::OperatorSet::build(code.config);
    const auto dim = code.config.dim();
    std::vector<Check> checks;

    // orthonormality
    Eigen::MatrixXcd v(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i) v.row(i) = code.vectors[i].state.amps.adjoint();
    double gram = (v * v.adjoint() - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    checks.push_back({"orthonormality", gram, 1e-12});

    // CSCO labels
    Eigen::MatrixXcd t3_op = set.op(2) / 2.0;
    Eigen::MatrixXcd y_op, t2_op;
    if (code.config.d == 3) y_op = set.op(7) / std::sqrt(3.0);
    t2_op = (set.op(0) * set.op(0) + set.op(1) * set.op(1) + set.op(2) * set.op(2)) / 4.0;
    double label_resid = 0.0;
    for (const auto& ls : code.vectors) {
        const auto& s = ls.state.amps;
        label_resid = std::max(label_resid, (t3_op * s - ls.labels.t3 * s).norm());
        label_resid =
            std::max(label_resid, (t2_op * s - ls.labels.t * (ls.labels.t + 1) * s).norm());
        if (code.config.d == 3)
            label_resid = std::max(label_resid, (y_op * s - ls.labels.y * s).norm());
    }
    checks.push_back({"csco_labels", label_resid, 1e-10});

    // block structure + reference matrices over seeded random draws
    qdk::rng::SplitMix64 rng(seed);
    double off_block = 0.0, copy_mismatch = 0.0, reference_mismatch = 0.0;
    const int coeffs = set.generator_count();
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> a(coeffs);
        for (auto& x : a) x = rng.gaussian();
        Eigen::MatrixXcd m = qdk::codes::sdfs_matrix(code, a);
        Eigen::MatrixXcd b0 = qdk::codes::extract_block(m, code.logical_blocks[0]);
        Eigen::MatrixXcd b1 = qdk::codes::extract_block(m, code.logical_blocks[1]);
        copy_mismatch = std::max(copy_mismatch, (b0 - b1).cwiseAbs().maxCoeff());
        if (code.id == "qubit3") {
            reference_mismatch = std::max(
                reference_mismatch,
                (m - qdk::codes::qubit3_sdfs_reference(a)).cwiseAbs().maxCoeff());
        } else {
            reference_mismatch = std::max(
                reference_mismatch,
                (b0 - qdk::codes::qutrit3_octet_reference(a)).cwiseAbs().maxCoeff());
        }
        // off-block: zero outside the irrep blocks (blocks are contiguous in
        // the code ordering: per-lambda logical blocks, then the rest)
        std::vector<std::pair<int, int>> spans;
        spans.emplace_back(0, code.block_size());
        spans.emplace_back(code.block_size(), code.block_size());
        if (code.id == "qutrit3") {
            spans.emplace_back(16, 1);
            spans.emplace_back(17, 10);
        } else {
            spans.emplace_back(4, 4);
        }
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                bool inside = false;
                for (auto [off, len] : spans)
                    if (i >= off && i < off + len && j >= off && j < off + len) inside = true;
                if (!inside) off_block = std::max(off_block, std::abs(m(i, j)));
            }
    }
    checks.push_back({"off_block", off_block, 1e-10});
    checks.push_back({"copy_block_equality", copy_mismatch, 1e-12});
    checks.push_back({"reference_matrix", reference_mismatch, 1e-12});

    // singlet annihilation (three-qutrit code only)
    if (code.id == "qutrit3") {
        auto singlet = qdk::codes::qutrit_singlet();
        double ann = 0.0;
        for (int alpha = 0; alpha < coeffs; ++alpha)
            ann = std::max(ann, set.apply(alpha, singlet.amps).norm());
        checks.push_back({"singlet_annihilation", ann, 1e-12});
    }

    // logical round trip through a random collective error
    double roundtrip = 0.0, leak = 0.0;
    for (int trial = 0; trial < std::min(trials, 20); ++trial) {
        std::vector<double> a(coeffs);
        for (auto& x : a) x = rng.gaussian();
        Eigen::Vector2cd c;
        c << std::complex<double>(rng.gaussian(), rng.gaussian()),
            std::complex<double>(rng.gaussian(), rng.gaussian());
        c /= c.norm();
        Eigen::VectorXcd gauge(code.block_size());
        for (int i = 0; i < code.block_size(); ++i)
            gauge(i) = std::complex<double>(rng.gaussian(), rng.gaussian());
        gauge /= gauge.norm();
        auto encoded = qdk::codes::encode(code, {c, gauge});
        auto evolved = qdk::collective::evolve(encoded, set, a, 1.0);
        auto decoded = qdk::codes::decode(code, evolved);
        roundtrip = std::max(roundtrip, 1.0 - qdk::sim::logical_fidelity(c, decoded.rho));
        leak = std::max(leak, decoded.leakage);
    }
    checks.push_back({"ns_round_trip", roundtrip, 1e-9});
    checks.push_back({"ns_leakage", leak, 1e-10});

    bool all_pass = true;
    for (const auto& c : checks) {
        std::cout << (c.pass() ? "PASS" : "FAIL") << "  " << c.name << "  residual "
                  << fmt(c.residual) << "  (tol " << fmt(c.tolerance) << ")\n";
        all_pass = all_pass && c.pass();
    }
    std::cout << (all_pass ? "PASS" : "FAIL") << "  " << code_id << " (" << trials
              << " seeded draws)\n";
    return all_pass ? 0 : 1;
}

// -------------------------------------------------------- label/discriminate
nlohmann::json discrimination_json(const qdk::codes::Discrimination& rep) {
    nlohmann::json j;
    j["schema"] = "qdk-discrimination/1";
    j["is_singlet"] = rep.is_singlet;
    j["max_generator_norm"] = rep.max_generator_norm;
    j["is_weight_vector"] = rep.is_weight_vector;
    if (rep.is_weight_vector) {
        j["t3"] = rep.t3;
        j["y"] = rep.y;
    }
    auto& jc = j["content"] = nlohmann::json::array();
    for (const auto& [label, weight] : rep.content)
        jc.push_back({{"dynkin", label}, {"weight", weight}});
    if (rep.has_ladder_terminus) j["ladder_terminus"] = rep.ladder_terminus;
    return j;
}

int cmd_discriminate(const std::string& state_path, const std::string& json_path, bool as_label) {
    auto state = qdk::collective::state_from_json(read_file(state_path));
    auto rep = qdk::codes::discriminate(state);

    if (as_label) {
        if (rep.is_weight_vector)
            std::cout << "weight vector: t3=" << fmt(rep.t3) << " y=" << fmt(rep.y) << "\n";
        else
            std::cout << "not a joint (T3, Y) eigenvector\n";
    }
    std::cout << "is_singlet: " << (rep.is_singlet ? "true" : "false")
              << "  (max ||S^a psi|| = " << fmt(rep.max_generator_norm) << ")\n";
    std::cout << "irrep content:\n";
    for (const auto& [label, weight] : rep.content)
        std::cout << "  " << dynkin_str(label) << "  weight " << fmt(weight) << "\n";
    if (rep.has_ladder_terminus)
        std::cout << "raising chain terminates in " << dynkin_str(rep.ladder_terminus) << "\n";
    if (!json_path.empty()) write_file(json_path, discrimination_json(rep).dump(2));
    return 0;
}

// ------------------------------------------------------------------ simulate
int cmd_simulate(const std::string& code_id, const std::string& encoding, int trials,
                 std::uint64_t seed, double sigma, double time, const std::string& dist,
                 const std::string& csv_path, const std::string& json_path) {
    qdk::sim::SimConfig config;
    config.code_id = code_id;
    if (encoding == "dfs")
        config.encoding = qdk::sim::Encoding::Dfs;
    else if (encoding == "bare")
        config.encoding = qdk::sim::Encoding::Bare;
    else
        throw ValidationError("--encoding must be dfs or bare");
    if (trials < 1) throw ValidationError("--trials must be >= 1");
    if (!(sigma >= 0.0)) throw ValidationError("--sigma must be >= 0");
    config.trials = trials;
    config.seed = seed;
    config.time = time;
    config.distribution.scale = sigma;
    if (dist == "gaussian")
        config.distribution.kind = qdk::sim::CoefficientDistribution::Kind::Gaussian;
    else if (dist == "uniform")
        config.distribution.kind = qdk::sim::CoefficientDistribution::Kind::Uniform;
    else
        throw ValidationError("--dist must be gaussian or uniform");

    qdk::sim::FidelityReport report;
    try {
        report = qdk::sim::run_trials(config);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    std::cout << "trials: " << trials << "  mean fidelity: " << fmt(report.mean_fidelity)
              << "  min fidelity: " << fmt(report.min_fidelity)
              << "  max leakage: " << fmt(report.max_leakage) << "\n";
    if (!csv_path.empty()) {
        std::ostringstream csv;
        qdk::sim::write_csv(report, csv);
        write_file(csv_path, csv.str());
    }
    if (!json_path.empty()) write_file(json_path, qdk::sim::to_json(report));
    return 0;
}

// --------------------------------------------------------------------- twirl
int cmd_twirl(const std::string& state_path, int samples, std::uint64_t seed,
              const std::string& json_path) {
    if (samples < 1) throw ValidationError("--samples must be >= 1");
    auto state = qdk::collective::state_from_json(read_file(state_path));
    auto set = qdk::collective::OperatorSet::build(state.config);
    Eigen::MatrixXcd rho = state.amps * state.amps.adjoint();

    auto commutator_residual = [&](const Eigen::MatrixXcd& m) {
        double r = 0.0;
        for (int alpha = 0; alpha < set.generator_count(); ++alpha)
            r = std::max(r, (set.op(alpha) * m - m * set.op(alpha)).norm());
        return r;
    };
    const double before = commutator_residual(rho);
    Eigen::MatrixXcd twirled = qdk::sim::twirl(rho, set, samples, seed);
    const double after = commutator_residual(twirled);
    const double drift = (twirled - rho).cwiseAbs().maxCoeff();

    std::cout << "commutator residual: " << fmt(before) << " -> " << fmt(after) << " ("
              << samples << " samples)\n";
    std::cout << "max entry change: " << fmt(drift) << "\n";
    if (!json_path.empty()) {
        nlohmann::json j;
        j["schema"] = "qdk-twirl/1";
        j["samples"] = samples;
        j["seed"] = seed;
        j["residual_before"] = before;
        j["residual_after"] = after;
        j["rho"] = matrix_to_json(twirled);
        write_file(json_path, j.dump(2));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qdk — decoherence-free subsystem toolkit for qudits"};
    app.require_subcommand(1);

    // decompose
    auto* sc_dec = app.add_subcommand("decompose", "Tensor-product irrep decomposition");
    int dec_d = 3;
    std::string dec_factors, dec_json;
    sc_dec->add_option("--d", dec_d, "local dimension")->required();
    sc_dec->add_option("--factors", dec_factors, "comma list of f|af")->required();
    sc_dec->add_option("--json", dec_json, "write JSON to path");

    // operators
    auto* sc_ops = app.add_subcommand("operators", "Emit single-site or collective generators");
    int ops_d = 3, ops_n = 0;
    std::string ops_kinds, ops_json;
    sc_ops->add_option("--d", ops_d, "local dimension")->required();
    sc_ops->add_option("--n", ops_n, "site count (omit for single-site)");
    sc_ops->add_option("--kinds", ops_kinds, "comma list of f|af (default all f)");
    sc_ops->add_option("--json", ops_json, "write JSON to path");

    // find-dfs
    auto* sc_dfs = app.add_subcommand("find-dfs", "Numerical irrep-sector decomposition");
    int dfs_d = 3, dfs_n = 3;
    std::string dfs_kinds, dfs_json;
    bool dfs_full = false;
    sc_dfs->add_option("--d", dfs_d, "local dimension")->required();
    sc_dfs->add_option("--n", dfs_n, "site count")->required();
    sc_dfs->add_option("--kinds", dfs_kinds, "comma list of f|af (default all f)");
    sc_dfs->add_option("--json", dfs_json, "write JSON to path");
    sc_dfs->add_flag("--full", dfs_full, "include V_dfs and labels in JSON");

    // verify-code
    auto* sc_ver = app.add_subcommand("verify-code", "Run the invariant suite for a code");
    std::string ver_code;
    int ver_trials = 100;
    std::uint64_t ver_seed = 0;
    sc_ver->add_option("--code", ver_code, "qubit3 or qutrit3")->required();
    sc_ver->add_option("--trials", ver_trials, "random coefficient draws");
    sc_ver->add_option("--seed", ver_seed, "rng seed");

    // label
    auto* sc_lab = app.add_subcommand("label", "CSCO labels and irrep content of a state");
    std::string lab_state, lab_json;
    sc_lab->add_option("--state", lab_state, "StateVector JSON path")->required();
    sc_lab->add_option("--json", lab_json, "write JSON to path");

    // discriminate
    auto* sc_dis = app.add_subcommand("discriminate", "Singlet test and irrep content");
    std::string dis_state, dis_json;
    sc_dis->add_option("--state", dis_state, "StateVector JSON path")->required();
    sc_dis->add_option("--json", dis_json, "write JSON to path");

    // simulate
    auto* sc_sim = app.add_subcommand("simulate", "Monte Carlo collective-noise harness");
    std::string sim_code = "qutrit3", sim_encoding = "dfs", sim_dist = "gaussian";
    std::string sim_csv, sim_json;
    int sim_trials = 1000;
    std::uint64_t sim_seed = 0;
    double sim_sigma = 1.0, sim_time = 1.0;
    sc_sim->add_option("--code", sim_code, "code id");
    sc_sim->add_option("--encoding", sim_encoding, "dfs or bare");
    sc_sim->add_option("--trials", sim_trials, "trial count");
    sc_sim->add_option("--seed", sim_seed, "rng seed");
    sc_sim->add_option("--sigma", sim_sigma, "coefficient scale");
    sc_sim->add_option("--time", sim_time, "evolution time");
    sc_sim->add_option("--dist", sim_dist, "gaussian or uniform");
    sc_sim->add_option("--csv", sim_csv, "write per-trial CSV to path");
    sc_sim->add_option("--json", sim_json, "write JSON summary to path");

    // twirl
    auto* sc_twl = app.add_subcommand("twirl", "Group-average a state's density matrix");
    std::string twl_state, twl_json;
    int twl_samples = 10000;
    std::uint64_t twl_seed = 0;
    sc_twl->add_option("--state", twl_state, "StateVector JSON path")->required();
    sc_twl->add_option("--samples", twl_samples, "Monte Carlo samples");
    sc_twl->add_option("--seed", twl_seed, "rng seed");
    sc_twl->add_option("--json", twl_json, "write JSON to path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*sc_dec) return cmd_decompose(dec_d, dec_factors, dec_json);
        if (*sc_ops) return cmd_operators(ops_d, ops_n, ops_kinds, ops_json);
        if (*sc_dfs) return cmd_find_dfs(dfs_d, dfs_n, dfs_kinds, dfs_json, dfs_full);
        if (*sc_ver) return cmd_verify_code(ver_code, ver_trials, ver_seed);
        if (*sc_lab) return cmd_discriminate(lab_state, lab_json, true);
        if (*sc_dis) return cmd_discriminate(dis_state, dis_json, false);
        if (*sc_sim)
            return cmd_simulate(sim_code, sim_encoding, sim_trials, sim_seed, sim_sigma, sim_time,
                                sim_dist, sim_csv, sim_json);
        if (*sc_twl) return cmd_twirl(twl_state, twl_samples, twl_seed, twl_json);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
