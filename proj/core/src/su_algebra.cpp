#include "qdk/su_algebra.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qdk::su {

using namespace std::complex_literals;

std::vector<Matrix> generators(int d) {
    if (d < 2) throw std::invalid_argument("generators: d must be >= 2");
    std::vector<Matrix> out;
    out.reserve(d * d - 1);

    if (d == 3) {
        // Gell-Mann order: lambda_1 .. lambda_8
        auto add = [&](std::initializer_list<std::initializer_list<std::complex<double>>> rows) {
            Matrix m(3, 3);
            int r = 0;
            for (auto& row : rows) {
                int c = 0;
                for (auto v : row) m(r, c++) = v;
                ++r;
            }
            out.push_back(m);
        };
        add({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
        add({{0, -1i, 0}, {1i, 0, 0}, {0, 0, 0}});
        add({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
        add({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
        add({{0, 0, -1i}, {0, 0, 0}, {1i, 0, 0}});
        add({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}});
        add({{0, 0, 0}, {0, 0, -1i}, {0, 1i, 0}});
        Matrix l8 = Matrix::Zero(3, 3);
        l8(0, 0) = l8(1, 1) = 1.0 / std::sqrt(3.0);
        l8(2, 2) = -2.0 / std::sqrt(3.0);
        out.push_back(l8);
        return out;
    }

    if (d == 2) {
        // Pauli x, y, z
        Matrix sx = Matrix::Zero(2, 2), sy = Matrix::Zero(2, 2), sz = Matrix::Zero(2, 2);
        sx(0, 1) = sx(1, 0) = 1;
        sy(0, 1) = -1i;
        sy(1, 0) = 1i;
        sz(0, 0) = 1;
        sz(1, 1) = -1;
        return {sx, sy, sz};
    }

    // general d: symmetric pairs, antisymmetric pairs, diagonals
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix m = Matrix::Zero(d, d);
            m(j, k) = m(k, j) = 1;
            out.push_back(m);
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix m = Matrix::Zero(d, d);
            m(j, k) = -1i;
            m(k, j) = 1i;
            out.push_back(m);
        }
    for (int l = 1; l < d; ++l) {
        Matrix m = Matrix::Zero(d, d);
        for (int i = 0; i < l; ++i) m(i, i) = 1;
        m(l, l) = -l;
        out.push_back(m * std::sqrt(2.0 / (l * (l + 1.0))));
    }
    return out;
}

std::vector<Matrix> rep_generators(int d, RepKind kind) {
    auto gens = generators(d);
    if (kind == RepKind::Antifundamental)
        for (auto& g : gens) g = (-g.transpose()).eval();
    return gens;
}

LadderOps ladder_ops() {
    auto g = generators(3);
    LadderOps ops;
    ops.t_plus = (g[0] + 1i * g[1]) / 2.0;
    ops.t_minus = (g[0] - 1i * g[1]) / 2.0;
    ops.v_plus = (g[3] + 1i * g[4]) / 2.0;
    ops.v_minus = (g[3] - 1i * g[4]) / 2.0;
    ops.u_plus = (g[5] + 1i * g[6]) / 2.0;
    ops.u_minus = (g[5] - 1i * g[6]) / 2.0;
    ops.t3 = g[2] / 2.0;
    ops.y = g[7] / std::sqrt(3.0);
    ops.t2 = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]) / 4.0;
    return ops;
}

Matrix casimir2(const std::vector<Matrix>& generator_set) {
    if (generator_set.empty()) throw std::invalid_argument("casimir2: empty generator set");
    const auto n = generator_set.front().rows();
    Matrix c = Matrix::Zero(n, n);
    for (const auto& g : generator_set) {
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("casimir2: mismatched dimensions");
        c += g * g;
    }
    return c;
}

namespace {

const std::array<double, 8 * 8 * 8>& d_symbol_table() {
    static const std::array<double, 8 * 8 * 8> table = [] {
        std::array<double, 8 * 8 * 8> t{};
        auto g = generators(3);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                for (int k = 0; k < 8; ++k) {
                    std::complex<double> tr = ((g[i] * g[j] + g[j] * g[i]) * g[k]).trace();
                    t[(i * 8 + j) * 8 + k] = 0.25 * tr.real();
                }
        return t;
    }();
    return table;
}

}  // namespace

double d_symbol(int i, int j, int k) {
    if (i < 1 || i > 8 || j < 1 || j > 8 || k < 1 || k > 8)
        throw std::out_of_range("d_symbol: indices must be in 1..8");
    return d_symbol_table()[((i - 1) * 8 + (j - 1)) * 8 + (k - 1)];
}

Matrix casimir3(const std::vector<Matrix>& generator_set) {
    if (generator_set.size() != 8)
        throw std::invalid_argument("casimir3: needs an 8-element su(3) generator set");
    const auto n = generator_set.front().rows();
    Matrix c = Matrix::Zero(n, n);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Matrix gij = generator_set[i] * generator_set[j];
            for (int k = 0; k < 8; ++k) {
                double dijk = d_symbol(i + 1, j + 1, k + 1);
                if (dijk != 0.0) c += dijk * (gij * generator_set[k]);
            }
        }
    return c;
}

Matrix casimir3() { return casimir3(generators(3)); }

int intertwiner_dimension(const std::vector<Matrix>& rep_a, const std::vector<Matrix>& rep_b) {
    if (rep_a.size() != rep_b.size())
        throw std::invalid_argument("intertwiner_dimension: generator counts differ");
    if (rep_a.empty()) throw std::invalid_argument("intertwiner_dimension: empty sets");
    const auto n = rep_a.front().rows();
    for (const auto& m : rep_a)
        if (m.rows() != n) throw std::invalid_argument("intertwiner_dimension: dimension mismatch");
    for (const auto& m : rep_b)
        if (m.rows() != n) throw std::invalid_argument("intertwiner_dimension: dimension mismatch");

    // vec(X A) = (A^T kron I) vec(X), vec(B X) = (I kron B) vec(X)
    const auto n2 = n * n;
    Matrix stacked(static_cast<Eigen::Index>(rep_a.size()) * n2, n2);
    Matrix id = Matrix::Identity(n, n);
    for (std::size_t a = 0; a < rep_a.size(); ++a) {
        Matrix block = Matrix::Zero(n2, n2);
        // (A^T kron I) - (I kron B)
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                block.block(i * n, j * n, n, n) = rep_a[a].transpose()(i, j) * id;
            }
        for (Eigen::Index i = 0; i < n; ++i)
            block.block(i * n, i * n, n, n) -= rep_b[a];
        stacked.middleRows(static_cast<Eigen::Index>(a) * n2, n2) = block;
    }
    Eigen::JacobiSVD<Matrix> svd(stacked);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return static_cast<int>(n2);
    const double thresh = 1e-10 * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++rank;
    return static_cast<int>(n2) - rank;
}

}  // namespace qdk::su
