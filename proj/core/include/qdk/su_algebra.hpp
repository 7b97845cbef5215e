#pragma once

#include <Eigen/Dense>
#include <vector>

namespace qdk::su {

using Matrix = Eigen::MatrixXcd;

/// Which of the two inequivalent fundamental irreps of SU(d) a site carries.
/// Antifundamental generators are -transpose of the fundamental ones, so a
/// group element acts by the complex-conjugate matrix U*.
enum class RepKind { Fundamental, Antifundamental };

/// The d^2-1 generalized Gell-Mann generators, Hermitian and traceless with
/// Tr(g_a g_b) = 2 delta_ab.
///
/// d=2 gives the three Pauli matrices; d=3 the Gell-Mann matrices lambda_1..
/// lambda_8 in the conventional order. For d>3 the ordering is frozen as:
/// symmetric pairs (j<k) first, then antisymmetric pairs, then diagonals.
std::vector<Matrix> generators(int d);

/// generators(d) for a fundamental site, their negated transposes for an
/// antifundamental one. Both satisfy the same commutation relations.
std::vector<Matrix> rep_generators(int d, RepKind kind);

/// Single-site SU(3) ladder and Cartan operators built from the Gell-Mann
/// matrices: T+- = (g1 +- i g2)/2, V+- = (g4 +- i g5)/2,
/// U+- = (g6 +- i g7)/2, T3 = g3/2, Y = g8/sqrt(3),
/// T^2 = (g1^2 + g2^2 + g3^2)/4.
struct LadderOps {
    Matrix t_plus, t_minus;
    Matrix v_plus, v_minus;
    Matrix u_plus, u_minus;
    Matrix t3, y, t2;
};
LadderOps ladder_ops();

/// Quadratic Casimir sum of squares over a generator set; commutes with
/// every generator in the set.
Matrix casimir2(const std::vector<Matrix>& generator_set);

/// Cubic SU(3) Casimir sum_{ijk} d_ijk g_i g_j g_k over an 8-element
/// generator set (the d-symbols are representation independent). Its sign
/// distinguishes the fundamental from the antifundamental.
Matrix casimir3(const std::vector<Matrix>& generator_set);
Matrix casimir3();   // on the d=3 fundamental

/// Totally symmetric d-symbol of su(3),
/// d_ijk = (1/4) Tr([g_i g_j + g_j g_i] g_k), indices 1..8.
double d_symbol(int i, int j, int k);

/// Dimension of {X : X A_a = B_a X for all a}, by a null-space solve of the
/// stacked linear map. Positive with an invertible solution iff the irreps
/// are equivalent; rank is decided at singular values > 1e-10 * largest.
int intertwiner_dimension(const std::vector<Matrix>& rep_a, const std::vector<Matrix>& rep_b);

}  // namespace qdk::su
