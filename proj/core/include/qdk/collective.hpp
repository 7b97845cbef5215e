#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qdk/su_algebra.hpp"

namespace qdk::collective {

/// n qudit sites of local dimension d, each carrying the fundamental or the
/// antifundamental irrep. Site 0 is the most significant digit in base d, so
/// |012> is the basis state of index 0*d^2 + 1*d + 2.
struct SiteConfig {
    int d = 0;
    std::vector<su::RepKind> kinds;

    SiteConfig() = default;
    SiteConfig(int d_, std::vector<su::RepKind> kinds_);
    static SiteConfig all_fundamental(int d, int n);

    int sites() const { return static_cast<int>(kinds.size()); }
    std::int64_t dim() const;
    bool operator==(const SiteConfig&) const = default;
};

/// Largest Hilbert-space dimension for which collective operators are
/// materialized as dense matrices. Defaults to 2187 (= 3^7); the
/// QDK_MAX_DIM environment variable overrides it.
std::int64_t max_dense_dim();

/// Complex amplitude vector over the configured sites, normalized to unit
/// norm on construction.
struct StateVector {
    SiteConfig config;
    Eigen::VectorXcd amps;

    StateVector() = default;
    StateVector(SiteConfig config_, Eigen::VectorXcd amps_);   // normalizes; rejects zero/non-finite

    static StateVector basis_state(const SiteConfig& config, const std::vector<int>& digits);

    double norm() const { return amps.norm(); }
};

std::string to_json(const StateVector& state);
StateVector state_from_json(const std::string& json_text);

/// The d^2-1 collective generators S^a = sum_i g^a_i on the configured
/// sites, with g per site from rep_generators(d, kinds[i]). Immutable after
/// construction; all application paths are read-only.
class OperatorSet {
public:
    /// Builds the set; dense matrices are materialized when dim <= max_dense_dim(),
    /// otherwise only the matrix-free applier is available.
    static OperatorSet build(const SiteConfig& config);

    const SiteConfig& config() const { return config_; }
    int generator_count() const { return static_cast<int>(site_gens_f_.size()); }
    bool dense_available() const { return !dense_.empty(); }

    /// Dense collective generator; throws std::length_error when the space
    /// exceeds the dense bound (use apply instead).
    const Eigen::MatrixXcd& op(int alpha) const;

    /// Matrix-free application of S^alpha (Kronecker-sum contraction).
    Eigen::VectorXcd apply(int alpha, const Eigen::VectorXcd& v) const;

    /// Matrix-free application of sum_a a_alpha S^alpha.
    Eigen::VectorXcd apply_error(std::span<const double> a, const Eigen::VectorXcd& v) const;

    /// Dense Hermitian generic error sum_a a_alpha S^alpha.
    Eigen::MatrixXcd error_operator(std::span<const double> a) const;

private:
    SiteConfig config_;
    std::vector<Eigen::MatrixXcd> site_gens_f_;   // fundamental single-site generators
    std::vector<Eigen::MatrixXcd> site_gens_a_;   // antifundamental
    std::vector<Eigen::MatrixXcd> dense_;         // empty when above the dense bound

    const Eigen::MatrixXcd& site_gen(int alpha, int site) const;
};

OperatorSet collective_set(const SiteConfig& config);

/// Dense Kronecker sum over sites of a single-site operator m, transformed
/// per site kind (m on fundamental sites, -m^T on antifundamental ones).
/// Requires dim <= max_dense_dim().
Eigen::MatrixXcd collective_one_site_operator(const SiteConfig& config,
                                              const Eigen::MatrixXcd& m);

/// exp(-i t sum_a a_alpha S^alpha) |psi>. Full Hermitian eigendecomposition
/// below dimension 1000, Lanczos application above; unitarity defect < 1e-10.
StateVector evolve(const StateVector& state, const OperatorSet& set,
                   std::span<const double> a, double t);

}  // namespace qdk::collective
