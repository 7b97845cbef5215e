#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qdk/collective.hpp"
#include "qdk/tableaux.hpp"

namespace qdk::dfs {

/// Full CSCO label of a basis state: principal labels (p,q) naming the
/// irrep (for d=2, p = 2j and q = 0), the degeneracy index lambda, and the
/// secondary labels t, t3, y. Extremal weights satisfy t3 = (p+q)/2,
/// y = (p-q)/3.
struct QuantumNumbers {
    int p = 0;
    int q = 0;
    int lambda = 0;
    double t = 0.0;
    double t3 = 0.0;
    double y = 0.0;
};

/// Result of the numerical Hilbert-space decomposition into irrep sectors.
/// v_dfs rows are the new basis bras, ordered sector by sector with all
/// lambda copies of each sector consecutive; sectors are ordered by
/// descending multiplicity, then ascending dimension.
struct DecompositionReport {
    struct Sector {
        tableaux::DynkinLabel label;
        std::int64_t dim = 0;
        int multiplicity = 0;
        int row_offset = 0;        // first row of the sector's lambda=0 copy
        double casimir2 = 0.0;
        double casimir3 = 0.0;     // zero when d != 3
    };

    collective::SiteConfig config;
    std::vector<Sector> sectors;
    Eigen::MatrixXcd v_dfs;                  // d^n x d^n, rows are basis bras
    std::vector<QuantumNumbers> labels;      // one entry per row of v_dfs

    struct Residuals {
        double unitarity = 0.0;              // max |V V^H - I|
        double weight_eigen = 0.0;           // max Cartan eigen-residual over rows
        double casimir_split = 0.0;          // max off-scalar part of cluster Casimirs
    } residuals;

    std::int64_t total_dimension() const;
    int copy_count() const;                  // sum of multiplicities
    std::int64_t commutant_dimension_expected() const;   // sum of n_J^2
};

/// Orthonormal basis (columns) of the joint kernel of the raising-direction
/// collective operators: {T+, V+, U-} for d=3, the collective raising
/// operator for d=2, all simple-root raisings for d>3. Its dimension equals
/// the number of irrep copies. Throws on numerical rank ambiguity
/// (singular values within 10x of the rank threshold).
Eigen::MatrixXcd highest_weight_subspace(const collective::OperatorSet& set);

/// Dynkin label of the irrep containing a highest-weight vector, read off
/// the extremal weight: for d=3, p = t3 + 3y/2 and q = t3 - 3y/2. The
/// vector must be a joint Cartan eigenvector and the labels must come out
/// as non-negative integers within 1e-8, else std::domain_error.
tableaux::DynkinLabel identify_irrep(const Eigen::VectorXcd& hw,
                                     const collective::OperatorSet& set);

/// Ordered orthonormal bases (columns) for every copy in a degenerate
/// highest-weight cluster. One breadth-first word sequence over the
/// lowering-direction operators is generated from the first copy and reused
/// for all of them, with shared orthonormalization coefficients, so the
/// per-copy matrix blocks of any collective operator agree entrywise.
std::vector<Eigen::MatrixXcd> generate_copy_bases(const Eigen::MatrixXcd& hw_columns,
                                                  const collective::OperatorSet& set);

/// Single-copy convenience overload.
Eigen::MatrixXcd generate_copy_basis(const Eigen::VectorXcd& hw,
                                     const collective::OperatorSet& set);

/// Full pipeline: collective set, highest-weight kernel, splitting by
/// (T3, Y, C2, C3), lambda assignment, copy-basis generation, assembly of
/// v_dfs with per-row labels.
DecompositionReport decompose_hilbert_space(const collective::SiteConfig& config);

/// Diagnostics from conjugating a generic collective error into the DFS
/// basis: largest matrix element outside the sector blocks, and the largest
/// entrywise mismatch between lambda copies of the same sector.
struct BlockVerification {
    double off_block_max = 0.0;
    double copy_mismatch_max = 0.0;
    double tolerance = 0.0;
    bool ok = false;
};
BlockVerification verify_block_structure(const DecompositionReport& report,
                                         std::span<const double> a, double tol);

/// Dimension of {X : [X, S^alpha] = 0 for all alpha} by a null-space solve
/// of the commutator linear map, reduced to the Cartan-weight block
/// structure. Equals sum n_J^2 over the decomposition; computed without it.
int commutant_dimension(const collective::OperatorSet& set);

}  // namespace qdk::dfs
