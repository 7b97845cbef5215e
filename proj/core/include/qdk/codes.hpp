#pragma once

#include <Eigen/Dense>
#include <array>
#include <span>
#include <string>
#include <vector>

#include "qdk/collective.hpp"
#include "qdk/dfs_finder.hpp"

namespace qdk::codes {

/// One basis vector of a code, with its CSCO labels.
struct LabeledState {
    collective::StateVector state;
    dfs::QuantumNumbers labels;
    std::string name;
};

/// Ordered orthonormal basis of the full n-site space for a reference code:
/// the two degenerate logical blocks first (lambda = 0 then lambda = 1),
/// then the remaining sectors.
struct CodeBasis {
    std::string id;                                // "qubit3" or "qutrit3"
    collective::SiteConfig config;
    std::vector<LabeledState> vectors;             // complete: d^n entries
    std::array<std::vector<int>, 2> logical_blocks;   // lambda -> vector indices
    std::string ordering_note;

    int block_size() const { return static_cast<int>(logical_blocks[0].size()); }
};

/// The eight-state basis of three qubits: two degenerate J=1/2 doublets
/// carrying the logical qubit, then the J=3/2 quadruplet.
CodeBasis three_qubit_code();

/// The 27-state basis of three qutrits: two degenerate octets carrying the
/// logical qubit, the antisymmetric singlet, then the symmetric decuplet.
CodeBasis three_qutrit_code();

/// Look up a code by id; throws std::invalid_argument for unknown ids.
CodeBasis code_by_id(const std::string& id);

/// The fully antisymmetric three-qutrit singlet (six kets, 1/sqrt(6) each);
/// annihilated by all eight collective generators.
collective::StateVector qutrit_singlet();

/// Five-ket truncation of the antisymmetric singlet (the |201> term
/// dropped), renormalized to unit norm. Not a singlet; kept as a negative
/// control for the annihilation tests.
collective::StateVector qutrit_singlet_truncated();

/// Logical qubit amplitudes plus the within-block gauge vector; the gauge
/// carries no logical information.
struct LogicalState {
    Eigen::Vector2cd c;          // logical amplitudes, |c0|^2+|c1|^2 = 1
    Eigen::VectorXcd gauge;      // unit vector of block amplitudes
};

/// sum_mu gauge_mu (c0 psi^{lambda=0}_mu + c1 psi^{lambda=1}_mu).
collective::StateVector encode(const CodeBasis& code, const LogicalState& logical);

/// Projection onto the two degenerate blocks with the gauge index traced
/// out; leakage is the weight outside the blocks (reported, never thrown).
struct DecodeResult {
    Eigen::Matrix2cd rho;
    double leakage = 0.0;
};
DecodeResult decode(const CodeBasis& code, const collective::StateVector& state);

/// V S V^dagger with V built from the code's basis vectors in order;
/// block-diagonal for any collective error coefficients a.
Eigen::MatrixXcd sdfs_matrix(const CodeBasis& code, std::span<const double> a);

/// Rows/columns of a matrix restricted to the given basis indices.
Eigen::MatrixXcd extract_block(const Eigen::MatrixXcd& m, const std::vector<int>& indices);

/// Closed-form 8x8 matrix of the collective error sum_a a_alpha S^alpha on
/// the three-qubit code basis: two identical 2x2 logical blocks followed by
/// the tridiagonal J=3/2 block. Traceless by construction.
Eigen::MatrixXcd qubit3_sdfs_reference(std::span<const double> a);

/// Closed-form 8x8 octet block of a collective error on the three-qutrit
/// code; both degenerate octets produce this same matrix.
Eigen::MatrixXcd qutrit3_octet_reference(std::span<const double> a);

/// Singlet test and irrep content of an arbitrary state: is_singlet iff
/// every collective generator annihilates it below 1e-10; content from
/// projecting onto the numerically decomposed sectors; for weight vectors
/// the raising chain is climbed to the extremal weight and (p,q) read off.
struct Discrimination {
    bool is_singlet = false;
    double max_generator_norm = 0.0;
    bool is_weight_vector = false;
    double t3 = 0.0, y = 0.0;
    std::vector<std::pair<tableaux::DynkinLabel, double>> content;   // sector -> weight
    bool has_ladder_terminus = false;
    tableaux::DynkinLabel ladder_terminus;
};
Discrimination discriminate(const collective::StateVector& state);

}  // namespace qdk::codes
