#include "qdk/codes.hpp"

#include <cmath>
#include <stdexcept>

namespace qdk::codes {

using Cx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt6 = std::sqrt(6.0);
const double kSqrt12 = std::sqrt(12.0);

struct Ket {
    const char* digits;
    double coeff;
};

collective::StateVector make_state(const collective::SiteConfig& config,
                                   std::initializer_list<Ket> kets, double norm) {
    VectorXcd v = VectorXcd::Zero(config.dim());
    for (const auto& k : kets) {
        std::int64_t idx = 0;
        for (const char* p = k.digits; *p; ++p) idx = idx * config.d + (*p - '0');
        v(idx) += k.coeff / norm;
    }
    return collective::StateVector(config, std::move(v));
}

dfs::QuantumNumbers qn(int p, int q, int lambda, double t, double t3, double y) {
    dfs::QuantumNumbers n;
    n.p = p;
    n.q = q;
    n.lambda = lambda;
    n.t = t;
    n.t3 = t3;
    n.y = y;
    return n;
}

}  // namespace

CodeBasis three_qubit_code() {
    CodeBasis code;
    code.id = "qubit3";
    code.config = collective::SiteConfig::all_fundamental(2, 3);
    code.ordering_note = "two J=1/2 doublets (lambda=0,1), then the J=3/2 quadruplet; "
                         "labels are |J,lambda,mu> with p=2J and mu=t3";
    auto& v = code.vectors;
    const auto& c = code.config;
    // J=1/2, lambda=0
    v.push_back({make_state(c, {{"010", 1}, {"100", -1}}, kSqrt2), qn(1, 0, 0, 0.5, 0.5, 0), "|1/2,0,+1/2>"});
    v.push_back({make_state(c, {{"011", 1}, {"101", -1}}, kSqrt2), qn(1, 0, 0, 0.5, -0.5, 0), "|1/2,0,-1/2>"});
    // J=1/2, lambda=1
    v.push_back({make_state(c, {{"001", 2}, {"010", -1}, {"100", -1}}, kSqrt6),
                 qn(1, 0, 1, 0.5, 0.5, 0), "|1/2,1,+1/2>"});
    v.push_back({make_state(c, {{"110", -2}, {"011", 1}, {"101", 1}}, kSqrt6),
                 qn(1, 0, 1, 0.5, -0.5, 0), "|1/2,1,-1/2>"});
    // J=3/2 quadruplet
    v.push_back({make_state(c, {{"000", 1}}, 1), qn(3, 0, 0, 1.5, 1.5, 0), "|3/2,0,+3/2>"});
    v.push_back({make_state(c, {{"001", 1}, {"010", 1}, {"100", 1}}, kSqrt3),
                 qn(3, 0, 0, 1.5, 0.5, 0), "|3/2,0,+1/2>"});
    v.push_back({make_state(c, {{"011", 1}, {"101", 1}, {"110", 1}}, kSqrt3),
                 qn(3, 0, 0, 1.5, -0.5, 0), "|3/2,0,-1/2>"});
    v.push_back({make_state(c, {{"111", 1}}, 1), qn(3, 0, 0, 1.5, -1.5, 0), "|3/2,0,-3/2>"});
    code.logical_blocks = {std::vector<int>{0, 1}, std::vector<int>{2, 3}};
    return code;
}

CodeBasis three_qutrit_code() {
    CodeBasis code;
    code.id = "qutrit3";
    code.config = collective::SiteConfig::all_fundamental(3, 3);
    code.ordering_note = "octet lambda=0, octet lambda=1, singlet, decuplet; labels are "
                         "|p,q;lambda;t,t3,y>. The third and sixth lambda=0 octet states "
                         "carry the sign that makes the two octet blocks of any collective "
                         "error entrywise equal.";
    auto& v = code.vectors;
    const auto& c = code.config;

    // octet lambda = 0
    v.push_back({make_state(c, {{"200", 1}, {"020", -1}}, kSqrt2), qn(1, 1, 0, 1, 1, 0), "psi8,0_1"});
    v.push_back({make_state(c, {{"100", 1}, {"010", -1}}, kSqrt2), qn(1, 1, 0, 0.5, 0.5, 1), "psi8,0_2"});
    v.push_back({make_state(c, {{"101", 1}, {"011", -1}}, kSqrt2), qn(1, 1, 0, 0.5, -0.5, 1), "psi8,0_3"});
    v.push_back({make_state(c, {{"211", 1}, {"121", -1}}, kSqrt2), qn(1, 1, 0, 1, -1, 0), "psi8,0_4"});
    v.push_back({make_state(c, {{"212", 1}, {"122", -1}}, kSqrt2), qn(1, 1, 0, 0.5, -0.5, -1), "psi8,0_5"});
    v.push_back({make_state(c, {{"202", 1}, {"022", -1}}, kSqrt2), qn(1, 1, 0, 0.5, 0.5, -1), "psi8,0_6"});
    v.push_back({make_state(c, {{"021", -1}, {"120", -1}, {"201", 1}, {"210", 1}}, 2.0),
                 qn(1, 1, 0, 1, 0, 0), "psi8,0_7"});
    v.push_back({make_state(c, {{"012", 2}, {"021", 1}, {"102", -2}, {"120", -1}, {"201", -1}, {"210", 1}},
                            kSqrt12),
                 qn(1, 1, 0, 0, 0, 0), "psi8,0_8"});

    // octet lambda = 1
    v.push_back({make_state(c, {{"002", 2}, {"020", -1}, {"200", -1}}, kSqrt6), qn(1, 1, 1, 1, 1, 0), "psi8,1_1"});
    v.push_back({make_state(c, {{"001", 2}, {"010", -1}, {"100", -1}}, kSqrt6),
                 qn(1, 1, 1, 0.5, 0.5, 1), "psi8,1_2"});
    v.push_back({make_state(c, {{"110", -2}, {"011", 1}, {"101", 1}}, kSqrt6),
                 qn(1, 1, 1, 0.5, -0.5, 1), "psi8,1_3"});
    v.push_back({make_state(c, {{"112", 2}, {"121", -1}, {"211", -1}}, kSqrt6), qn(1, 1, 1, 1, -1, 0), "psi8,1_4"});
    v.push_back({make_state(c, {{"221", -2}, {"122", 1}, {"212", 1}}, kSqrt6),
                 qn(1, 1, 1, 0.5, -0.5, -1), "psi8,1_5"});
    v.push_back({make_state(c, {{"220", -2}, {"022", 1}, {"202", 1}}, kSqrt6),
                 qn(1, 1, 1, 0.5, 0.5, -1), "psi8,1_6"});
    v.push_back({make_state(c, {{"012", 2}, {"021", -1}, {"102", 2}, {"120", -1}, {"201", -1}, {"210", -1}},
                            kSqrt12),
                 qn(1, 1, 1, 1, 0, 0), "psi8,1_7"});
    v.push_back({make_state(c, {{"021", -1}, {"120", 1}, {"201", -1}, {"210", 1}}, 2.0),
                 qn(1, 1, 1, 0, 0, 0), "psi8,1_8"});

    // singlet
    v.push_back({qutrit_singlet(), qn(0, 0, 0, 0, 0, 0), "psi_s"});

    // decuplet (labels derived from the additive weights)
    v.push_back({make_state(c, {{"111", 1}}, 1), qn(3, 0, 0, 1.5, -1.5, 1), "psi10_1"});
    v.push_back({make_state(c, {{"011", 1}, {"101", 1}, {"110", 1}}, kSqrt3),
                 qn(3, 0, 0, 1.5, -0.5, 1), "psi10_2"});
    v.push_back({make_state(c, {{"001", 1}, {"010", 1}, {"100", 1}}, kSqrt3),
                 qn(3, 0, 0, 1.5, 0.5, 1), "psi10_3"});
    v.push_back({make_state(c, {{"000", 1}}, 1), qn(3, 0, 0, 1.5, 1.5, 1), "psi10_4"});
    v.push_back({make_state(c, {{"112", 1}, {"121", 1}, {"211", 1}}, kSqrt3),
                 qn(3, 0, 0, 1, -1, 0), "psi10_5"});
    v.push_back({make_state(c, {{"012", 1}, {"021", 1}, {"102", 1}, {"120", 1}, {"201", 1}, {"210", 1}},
                            kSqrt6),
                 qn(3, 0, 0, 1, 0, 0), "psi10_6"});
    v.push_back({make_state(c, {{"002", 1}, {"020", 1}, {"200", 1}}, kSqrt3),
                 qn(3, 0, 0, 1, 1, 0), "psi10_7"});
    v.push_back({make_state(c, {{"122", 1}, {"212", 1}, {"221", 1}}, kSqrt3),
                 qn(3, 0, 0, 0.5, -0.5, -1), "psi10_8"});
    v.push_back({make_state(c, {{"022", 1}, {"202", 1}, {"220", 1}}, kSqrt3),
                 qn(3, 0, 0, 0.5, 0.5, -1), "psi10_9"});
    v.push_back({make_state(c, {{"222", 1}}, 1), qn(3, 0, 0, 0, 0, -2), "psi10_10"});

    code.logical_blocks = {std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7},
                           std::vector<int>{8, 9, 10, 11, 12, 13, 14, 15}};
    return code;
}

CodeBasis code_by_id(const std::string& id) {
    if (id == "qubit3") return three_qubit_code();
    if (id == "qutrit3") return three_qutrit_code();
    throw std::invalid_argument("code_by_id: unknown code id '" + id + "'");
}

collective::StateVector qutrit_singlet() {
    auto config = collective::SiteConfig::all_fundamental(3, 3);
    return make_state(config,
                      {{"012", 1}, {"021", -1}, {"102", -1}, {"120", 1}, {"201", 1}, {"210", -1}},
                      kSqrt6);
}

collective::StateVector qutrit_singlet_truncated() {
    auto config = collective::SiteConfig::all_fundamental(3, 3);
    return make_state(config, {{"012", 1}, {"021", -1}, {"102", -1}, {"120", 1}, {"210", -1}},
                      kSqrt5);
}

collective::StateVector encode(const CodeBasis& code, const LogicalState& logical) {
    const int block = code.block_size();
    if (logical.gauge.size() != block)
        throw std::invalid_argument("encode: gauge dimension != block size");
    const double cn = logical.c.norm();
    const double gn = logical.gauge.norm();
    if (cn < 1e-14 || gn < 1e-14) throw std::invalid_argument("encode: zero amplitudes");
    Eigen::Vector2cd c = logical.c / cn;
    VectorXcd gauge = logical.gauge / gn;

    VectorXcd out = VectorXcd::Zero(code.config.dim());
    for (int mu = 0; mu < block; ++mu) {
        out += gauge(mu) * (c(0) * code.vectors[code.logical_blocks[0][mu]].state.amps +
                            c(1) * code.vectors[code.logical_blocks[1][mu]].state.amps);
    }
    return collective::StateVector(code.config, std::move(out));
}

DecodeResult decode(const CodeBasis& code, const collective::StateVector& state) {
    if (!(state.config == code.config))
        throw std::invalid_argument("decode: state config does not match the code");
    const int block = code.block_size();
    Eigen::MatrixXcd a(2, block);   // a(lambda, mu) = <psi^lambda_mu | state>
    for (int lambda = 0; lambda < 2; ++lambda)
        for (int mu = 0; mu < block; ++mu)
            a(lambda, mu) = code.vectors[code.logical_blocks[lambda][mu]].state.amps.dot(state.amps);

    DecodeResult r;
    r.rho = a * a.adjoint();
    r.leakage = std::max(0.0, 1.0 - r.rho.trace().real());
    return r;
}

Eigen::MatrixXcd sdfs_matrix(const CodeBasis& code, std::span<const double> a) {
    collective::OperatorSet set = collective::OperatorSet::build(code.config);
    MatrixXcd s = set.error_operator(a);
    const auto dim = code.config.dim();
    MatrixXcd v(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i) v.row(i) = code.vectors[i].state.amps.adjoint();
    return v * s * v.adjoint();
}

Eigen::MatrixXcd extract_block(const Eigen::MatrixXcd& m, const std::vector<int>& indices) {
    MatrixXcd out(indices.size(), indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = m(indices[i], indices[j]);
    return out;
}

Eigen::MatrixXcd qubit3_sdfs_reference(std::span<const double> a) {
    if (a.size() != 3) throw std::invalid_argument("qubit3_sdfs_reference: need 3 coefficients");
    const double a1 = a[0], a2 = a[1], a3 = a[2];
    const Cx am(a1, -a2), ap(a1, a2);
    const double r3 = std::sqrt(3.0);
    MatrixXcd m = MatrixXcd::Zero(8, 8);
    // two identical logical 2x2 blocks
    for (int b = 0; b < 2; ++b) {
        m(2 * b, 2 * b) = a3;
        m(2 * b, 2 * b + 1) = am;
        m(2 * b + 1, 2 * b) = ap;
        m(2 * b + 1, 2 * b + 1) = -a3;
    }
    // J=3/2 block, diagonal 3a3, a3, -a3, -3a3 with sqrt(3),2,sqrt(3) couplings
    m(4, 4) = 3 * a3;
    m(5, 5) = a3;
    m(6, 6) = -a3;
    m(7, 7) = -3 * a3;
    m(4, 5) = r3 * am;
    m(5, 4) = r3 * ap;
    m(5, 6) = 2.0 * am;
    m(6, 5) = 2.0 * ap;
    m(6, 7) = r3 * am;
    m(7, 6) = r3 * ap;
    return m;
}

Eigen::MatrixXcd qutrit3_octet_reference(std::span<const double> a) {
    if (a.size() != 8) throw std::invalid_argument("qutrit3_octet_reference: need 8 coefficients");
    const double a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3];
    const double a5 = a[4], a6 = a[5], a7 = a[6], a8 = a[7];
    const Cx A12m(a1, -a2), A12p(a1, a2);
    const Cx A45m(a4, -a5), A45p(a4, a5);
    const Cx A67m(a6, -a7), A67p(a6, a7);
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
    MatrixXcd m(8, 8);
    m << 2 * a3, A67p, 0, 0, 0, A45m, r2 * A12m, 0,
        A67m, a3 + r3 * a8, A12m, 0, 0, 0, -A45m / r2, -3.0 * A45m / r6,
        0, A12p, -a3 + r3 * a8, -A45m, 0, 0, A67m / r2, -3.0 * A67m / r6,
        0, 0, -A45p, -2 * a3, A67m, 0, r2 * A12p, 0,
        0, 0, 0, A67p, -a3 - r3 * a8, A12p, A45p / r2, 3.0 * A45p / r6,
        A45p, 0, 0, 0, A12m, a3 - r3 * a8, A67p / r2, -3.0 * A67p / r6,
        r2 * A12p, -A45p / r2, A67p / r2, r2 * A12m, A45m / r2, A67m / r2, 0, 0,
        0, -3.0 * A45p / r6, -3.0 * A67p / r6, 0, 3.0 * A45m / r6, -3.0 * A67m / r6, 0, 0;
    return m;
}

Discrimination discriminate(const collective::StateVector& state) {
    collective::OperatorSet set = collective::OperatorSet::build(state.config);
    Discrimination rep;

    for (int alpha = 0; alpha < set.generator_count(); ++alpha)
        rep.max_generator_norm =
            std::max(rep.max_generator_norm, set.apply(alpha, state.amps).norm());
    rep.is_singlet = rep.max_generator_norm < 1e-10;

    dfs::DecompositionReport decomposition = dfs::decompose_hilbert_space(state.config);
    for (const auto& sec : decomposition.sectors) {
        const int span = static_cast<int>(sec.dim) * sec.multiplicity;
        double weight = 0.0;
        for (int r = sec.row_offset; r < sec.row_offset + span; ++r)
            weight += std::norm((decomposition.v_dfs.row(r) * state.amps).value());
        if (weight > 1e-12) rep.content.emplace_back(sec.label, weight);
    }
    std::sort(rep.content.begin(), rep.content.end(),
              [](const auto& x, const auto& y) { return x.second > y.second; });

    // weight-vector check against the Cartan operators, then the raising
    // chain: repeatedly apply raising-direction operators until annihilated
    // and read (p,q) off the terminal weight
    const int d = state.config.d;
    if (d == 2 || d == 3) {
        MatrixXcd t3_op = set.op(2) / 2.0;
        VectorXcd t3v = t3_op * state.amps;
        rep.t3 = std::real(state.amps.dot(t3v));
        bool weight_ok = (t3v - rep.t3 * state.amps).norm() < 1e-9;
        if (d == 3) {
            MatrixXcd y_op = set.op(7) / std::sqrt(3.0);
            VectorXcd yv = y_op * state.amps;
            rep.y = std::real(state.amps.dot(yv));
            weight_ok = weight_ok && (yv - rep.y * state.amps).norm() < 1e-9;
        }
        rep.is_weight_vector = weight_ok;
        if (weight_ok) {
            std::vector<MatrixXcd> raising;
            if (d == 3) {
                raising = {
                    (set.op(0) + Cx(0, 1) * set.op(1)) / 2.0,   // T+
                    (set.op(3) + Cx(0, 1) * set.op(4)) / 2.0,   // V+
                    (set.op(5) - Cx(0, 1) * set.op(6)) / 2.0,   // U-
                };
            } else {
                raising = {(set.op(0) + Cx(0, 1) * set.op(1)) / 2.0};
            }
            VectorXcd current = state.amps;
            const int max_steps = static_cast<int>(state.config.dim()) + 8;
            for (int step = 0; step < max_steps; ++step) {
                bool moved = false;
                for (const auto& r : raising) {
                    VectorXcd next = r * current;
                    if (next.norm() > 1e-8) {
                        current = next / next.norm();
                        moved = true;
                        break;
                    }
                }
                if (!moved) break;
            }
            try {
                rep.ladder_terminus = dfs::identify_irrep(current, set);
                rep.has_ladder_terminus = true;
            } catch (const std::domain_error&) {
                rep.has_ladder_terminus = false;   // terminus not a clean weight vector
            }
        }
    }
    return rep;
}

}  // namespace qdk::codes
