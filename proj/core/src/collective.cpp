#include "qdk/collective.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qdk::collective {

using Cx = std::complex<double>;

SiteConfig::SiteConfig(int d_, std::vector<su::RepKind> kinds_)
    : d(d_), kinds(std::move(kinds_)) {
    if (d < 2) throw std::invalid_argument("SiteConfig: d must be >= 2");
    if (kinds.empty()) throw std::invalid_argument("SiteConfig: need at least one site");
}

SiteConfig SiteConfig::all_fundamental(int d, int n) {
    return SiteConfig(d, std::vector<su::RepKind>(n, su::RepKind::Fundamental));
}

std::int64_t SiteConfig::dim() const {
    std::int64_t total = 1;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (total > (std::int64_t{1} << 46) / d)
            throw std::overflow_error("SiteConfig::dim: d^n overflows");
        total *= d;
    }
    return total;
}

std::int64_t max_dense_dim() {
    static const std::int64_t bound = [] {
        if (const char* env = std::getenv("QDK_MAX_DIM")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::int64_t>(v);
        }
        return std::int64_t{2187};
    }();
    return bound;
}

StateVector::StateVector(SiteConfig config_, Eigen::VectorXcd amps_)
    : config(std::move(config_)), amps(std::move(amps_)) {
    if (amps.size() != config.dim())
        throw std::invalid_argument("StateVector: amplitude count != d^n");
    if (!amps.allFinite()) throw std::invalid_argument("StateVector: non-finite amplitudes");
    const double n = amps.norm();
    if (n < 1e-14) throw std::invalid_argument("StateVector: zero vector");
    if (std::abs(n - 1.0) > 1e-12) amps /= n;
}

StateVector StateVector::basis_state(const SiteConfig& config, const std::vector<int>& digits) {
    if (static_cast<int>(digits.size()) != config.sites())
        throw std::invalid_argument("basis_state: digit count != site count");
    std::int64_t idx = 0;
    for (int digit : digits) {
        if (digit < 0 || digit >= config.d) throw std::invalid_argument("basis_state: digit out of range");
        idx = idx * config.d + digit;
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(config.dim());
    v(idx) = 1.0;
    return StateVector(config, std::move(v));
}

std::string to_json(const StateVector& state) {
    nlohmann::json j;
    j["schema"] = "qdk-state/1";
    j["d"] = state.config.d;
    auto& jk = j["kinds"] = nlohmann::json::array();
    for (auto k : state.config.kinds)
        jk.push_back(k == su::RepKind::Fundamental ? "f" : "af");
    auto& ja = j["amps"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < state.amps.size(); ++i)
        ja.push_back({state.amps(i).real(), state.amps(i).imag()});
    return j.dump(2);
}

StateVector state_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    int d = j.at("d").get<int>();
    std::vector<su::RepKind> kinds;
    for (const auto& k : j.at("kinds")) {
        std::string s = k.get<std::string>();
        if (s == "f")
            kinds.push_back(su::RepKind::Fundamental);
        else if (s == "af")
            kinds.push_back(su::RepKind::Antifundamental);
        else
            throw std::invalid_argument("state_from_json: bad kind " + s);
    }
    SiteConfig config(d, std::move(kinds));
    const auto& ja = j.at("amps");
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(ja.size()));
    for (std::size_t i = 0; i < ja.size(); ++i)
        amps(static_cast<Eigen::Index>(i)) = Cx(ja[i].at(0).get<double>(), ja[i].at(1).get<double>());
    return StateVector(std::move(config), std::move(amps));
}

OperatorSet OperatorSet::build(const SiteConfig& config) {
    OperatorSet set;
    set.config_ = config;
    set.site_gens_f_ = su::rep_generators(config.d, su::RepKind::Fundamental);
    set.site_gens_a_ = su::rep_generators(config.d, su::RepKind::Antifundamental);

    const std::int64_t dim = config.dim();
    if (dim <= max_dense_dim()) {
        const int n = config.sites();
        const int d = config.d;
        set.dense_.reserve(set.site_gens_f_.size());
        for (std::size_t alpha = 0; alpha < set.site_gens_f_.size(); ++alpha) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
            std::int64_t stride = dim / d;   // site 0 stride
            for (int site = 0; site < n; ++site) {
                const auto& g = set.site_gen(static_cast<int>(alpha), site);
                const std::int64_t block = stride * d;
                for (std::int64_t base = 0; base < dim; base += block)
                    for (std::int64_t off = 0; off < stride; ++off)
                        for (int row = 0; row < d; ++row)
                            for (int col = 0; col < d; ++col)
                                if (g(row, col) != Cx{})
                                    m(base + row * stride + off, base + col * stride + off) += g(row, col);
                stride /= d;
            }
            set.dense_.push_back(std::move(m));
        }
    }
    return set;
}

OperatorSet collective_set(const SiteConfig& config) { return OperatorSet::build(config); }

Eigen::MatrixXcd collective_one_site_operator(const SiteConfig& config,
                                              const Eigen::MatrixXcd& m) {
    const int d = config.d;
    if (m.rows() != d || m.cols() != d)
        throw std::invalid_argument("collective_one_site_operator: operator is not d x d");
    const std::int64_t dim = config.dim();
    if (dim > max_dense_dim())
        throw std::length_error("collective_one_site_operator: space too large for dense form");
    const Eigen::MatrixXcd anti = -m.transpose();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    std::int64_t stride = dim / d;
    for (int site = 0; site < config.sites(); ++site) {
        const auto& g = config.kinds[site] == su::RepKind::Fundamental ? m : anti;
        const std::int64_t block = stride * d;
        for (std::int64_t base = 0; base < dim; base += block)
            for (std::int64_t off = 0; off < stride; ++off)
                for (int row = 0; row < d; ++row)
                    for (int col = 0; col < d; ++col)
                        if (g(row, col) != Cx{})
                            out(base + row * stride + off, base + col * stride + off) += g(row, col);
        stride /= d;
    }
    return out;
}

const Eigen::MatrixXcd& OperatorSet::site_gen(int alpha, int site) const {
    return config_.kinds[site] == su::RepKind::Fundamental ? site_gens_f_[alpha]
                                                           : site_gens_a_[alpha];
}

const Eigen::MatrixXcd& OperatorSet::op(int alpha) const {
    if (dense_.empty())
        throw std::length_error("OperatorSet::op: space too large for dense materialization; "
                                "use apply (matrix-free)");
    return dense_.at(alpha);
}

Eigen::VectorXcd OperatorSet::apply(int alpha, const Eigen::VectorXcd& v) const {
    const int n = config_.sites();
    const int d = config_.d;
    const std::int64_t dim = config_.dim();
    if (v.size() != dim) throw std::invalid_argument("OperatorSet::apply: wrong vector size");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    std::int64_t stride = dim / d;
    for (int site = 0; site < n; ++site) {
        const auto& g = site_gen(alpha, site);
        const std::int64_t block = stride * d;
        for (std::int64_t base = 0; base < dim; base += block)
            for (std::int64_t off = 0; off < stride; ++off) {
                for (int row = 0; row < d; ++row) {
                    Cx acc{};
                    for (int col = 0; col < d; ++col) {
                        Cx coeff = g(row, col);
                        if (coeff != Cx{}) acc += coeff * v(base + col * stride + off);
                    }
                    out(base + row * stride + off) += acc;
                }
            }
        stride /= d;
    }
    return out;
}

Eigen::VectorXcd OperatorSet::apply_error(std::span<const double> a, const Eigen::VectorXcd& v) const {
    if (static_cast<int>(a.size()) != generator_count())
        throw std::invalid_argument("apply_error: coefficient count != d^2-1");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
    for (int alpha = 0; alpha < generator_count(); ++alpha)
        if (a[alpha] != 0.0) out += a[alpha] * apply(alpha, v);
    return out;
}

Eigen::MatrixXcd OperatorSet::error_operator(std::span<const double> a) const {
    if (static_cast<int>(a.size()) != generator_count())
        throw std::invalid_argument("error_operator: coefficient count != d^2-1");
    const Eigen::MatrixXcd& first = op(0);
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(first.rows(), first.cols());
    for (int alpha = 0; alpha < generator_count(); ++alpha)
        if (a[alpha] != 0.0) s += a[alpha] * op(alpha);
    return s;
}

namespace {

// Lanczos approximation of exp(-i t H) v for Hermitian H given by an applier.
Eigen::VectorXcd lanczos_expmv(const OperatorSet& set, std::span<const double> a, double t,
                               const Eigen::VectorXcd& v) {
    const Eigen::Index dim = v.size();
    const int max_krylov = static_cast<int>(std::min<Eigen::Index>(dim, 160));
    const double beta0 = v.norm();

    std::vector<Eigen::VectorXcd> basis;
    basis.reserve(max_krylov);
    basis.push_back(v / beta0);
    std::vector<double> alpha_c, beta_c;

    for (int k = 0; k < max_krylov; ++k) {
        Eigen::VectorXcd w = set.apply_error(a, basis[k]);
        Cx diag = basis[k].dot(w);
        alpha_c.push_back(diag.real());
        w -= diag * basis[k];
        if (k > 0) w -= beta_c[k - 1] * basis[k - 1];
        // full reorthogonalization: the spaces are small
        for (const auto& b : basis) w -= b.dot(w) * b;
        double nb = w.norm();
        if (nb < 1e-13 || k == max_krylov - 1) break;
        beta_c.push_back(nb);
        basis.push_back(w / nb);
    }

    const int m = static_cast<int>(basis.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) tri(i, i) = alpha_c[i];
    for (int i = 0; i + 1 < m; ++i) tri(i, i + 1) = tri(i + 1, i) = beta_c[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
    Eigen::VectorXcd phases(m);
    for (int i = 0; i < m; ++i)
        phases(i) = std::exp(Cx(0, -t * es.eigenvalues()(i)));
    Eigen::VectorXcd small = es.eigenvectors().cast<Cx>() *
                             (phases.asDiagonal() * (es.eigenvectors().transpose().cast<Cx>() *
                                                     Eigen::VectorXcd::Unit(m, 0)));
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    for (int i = 0; i < m; ++i) out += small(i) * basis[i];
    return beta0 * out;
}

}  // namespace

StateVector evolve(const StateVector& state, const OperatorSet& set,
                   std::span<const double> a, double t) {
    if (!(state.config == set.config()))
        throw std::invalid_argument("evolve: state and operator set configs differ");
    if (!std::isfinite(t)) throw std::invalid_argument("evolve: non-finite time");
    for (double c : a)
        if (!std::isfinite(c)) throw std::invalid_argument("evolve: non-finite coefficient");

    const std::int64_t dim = state.config.dim();
    Eigen::VectorXcd out;
    if (dim < 1000 && set.dense_available()) {
        Eigen::MatrixXcd h = set.error_operator(a);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        Eigen::VectorXcd phases(dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            phases(i) = std::exp(Cx(0, -t * es.eigenvalues()(i)));
        out = es.eigenvectors() * (phases.asDiagonal() * (es.eigenvectors().adjoint() * state.amps));
    } else {
        // split the interval so each Lanczos call handles a modest phase
        double scale = 0.0;
        for (double c : a) scale += std::abs(c);
        scale *= 2.0 * state.config.sites();   // crude bound on ||S||
        int steps = std::max(1, static_cast<int>(std::ceil(std::abs(t) * scale / 30.0)));
        out = state.amps;
        for (int s = 0; s < steps; ++s) out = lanczos_expmv(set, a, t / steps, out);
    }
    return StateVector(state.config, std::move(out));
}

}  // namespace qdk::collective
