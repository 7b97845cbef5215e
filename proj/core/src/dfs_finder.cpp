#include "qdk/dfs_finder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qdk/su_algebra.hpp"

namespace qdk::dfs {

using Cx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

constexpr double kRankThreshold = 1e-10;   // relative singular-value cutoff
constexpr double kClusterTol = 1e-8;       // eigenvalue clustering width

MatrixXcd matrix_unit(int d, int r, int c) {
    MatrixXcd m = MatrixXcd::Zero(d, d);
    m(r, c) = 1.0;
    return m;
}

/// Collective ladder structure. For d=3 the raising set is {T+, V+, U-},
/// whose joint kernel carries the extremal weight with t3 = (p+q)/2,
/// y = (p-q)/3; lowering is the complement {T-, V-, U+}. d=2 uses J+/J-,
/// d>3 the simple-root operators.
struct Ladders {
    std::vector<MatrixXcd> raising;
    std::vector<MatrixXcd> lowering;
    std::vector<MatrixXcd> cartans;
    MatrixXcd t2;          // collective isospin Casimir; only built for d<=3
    bool has_t2 = false;
};

Ladders build_ladders(const collective::OperatorSet& set) {
    const auto& config = set.config();
    const int d = config.d;
    Ladders lad;
    if (d == 3) {
        MatrixXcd tp = collective::collective_one_site_operator(config, matrix_unit(3, 0, 1));
        MatrixXcd vp = collective::collective_one_site_operator(config, matrix_unit(3, 0, 2));
        MatrixXcd um = collective::collective_one_site_operator(config, matrix_unit(3, 2, 1));
        lad.raising = {tp, vp, um};
        lad.lowering = {tp.adjoint(), vp.adjoint(), um.adjoint()};
        lad.cartans = {set.op(2) / 2.0, set.op(7) / std::sqrt(3.0)};
        lad.t2 = (set.op(0) * set.op(0) + set.op(1) * set.op(1) + set.op(2) * set.op(2)) / 4.0;
        lad.has_t2 = true;
    } else if (d == 2) {
        MatrixXcd jp = collective::collective_one_site_operator(config, matrix_unit(2, 0, 1));
        lad.raising = {jp};
        lad.lowering = {jp.adjoint()};
        lad.cartans = {set.op(2) / 2.0};
        lad.t2 = (set.op(0) * set.op(0) + set.op(1) * set.op(1) + set.op(2) * set.op(2)) / 4.0;
        lad.has_t2 = true;
    } else {
        for (int l = 0; l + 1 < d; ++l) {
            MatrixXcd e = collective::collective_one_site_operator(config, matrix_unit(d, l, l + 1));
            lad.raising.push_back(e);
            lad.lowering.push_back(e.adjoint());
        }
        for (int l = 0; l + 1 < d; ++l) {
            MatrixXcd h = matrix_unit(d, l, l) - matrix_unit(d, l + 1, l + 1);
            lad.cartans.push_back(collective::collective_one_site_operator(config, h));
        }
        lad.has_t2 = false;
    }
    return lad;
}

MatrixXcd stacked_kernel(const std::vector<MatrixXcd>& ops) {
    const Eigen::Index n = ops.front().cols();
    MatrixXcd stacked(static_cast<Eigen::Index>(ops.size()) * n, n);
    for (std::size_t i = 0; i < ops.size(); ++i)
        stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) = ops[i];
    Eigen::BDCSVD<MatrixXcd> svd(stacked, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    const double thresh = kRankThreshold * std::max(smax, 1.0);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > thresh) ++rank;
        if (sv(i) > thresh / 10 && sv(i) < thresh * 10)
            throw std::runtime_error("highest_weight_subspace: numerical rank ambiguity, "
                                     "singular value within 10x of threshold");
    }
    return svd.matrixV().rightCols(n - rank);
}

struct Cluster {
    MatrixXcd basis;                  // N x m orthonormal columns
    std::vector<double> eigenvalues;  // accumulated split eigenvalues
};

/// Splits every cluster by the eigenvalues of an operator restricted to it.
/// Restrictions are diagonalized per cluster, never across clusters, so
/// degenerate eigenvalues in different clusters cannot mix.
std::vector<Cluster> split_clusters(const std::vector<Cluster>& clusters,
                                    const std::function<MatrixXcd(const MatrixXcd&)>& apply_op,
                                    double* invariance_residual) {
    std::vector<Cluster> out;
    for (const auto& cl : clusters) {
        const Eigen::Index m = cl.basis.cols();
        MatrixXcd image = apply_op(cl.basis);
        MatrixXcd restricted = cl.basis.adjoint() * image;
        restricted = ((restricted + restricted.adjoint()) / 2.0).eval();
        if (invariance_residual) {
            double r = (image - cl.basis * restricted).cwiseAbs().maxCoeff();
            *invariance_residual = std::max(*invariance_residual, r);
        }
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(restricted);
        MatrixXcd rotated = cl.basis * es.eigenvectors();
        Eigen::Index i = 0;
        while (i < m) {
            Eigen::Index j = i;
            while (j + 1 < m && es.eigenvalues()(j + 1) - es.eigenvalues()(i) < kClusterTol) ++j;
            Cluster sub;
            sub.basis = rotated.middleCols(i, j - i + 1);
            sub.eigenvalues = cl.eigenvalues;
            sub.eigenvalues.push_back(es.eigenvalues().segment(i, j - i + 1).mean());
            out.push_back(std::move(sub));
            i = j + 1;
        }
    }
    return out;
}

tableaux::DynkinLabel label_from_weight(int d, std::span<const double> weight) {
    auto as_int = [](double x) {
        double r = std::round(x);
        if (std::abs(x - r) > 1e-8 || r < -1e-9)
            throw std::domain_error("identify_irrep: extremal weight does not give "
                                    "non-negative integer Dynkin labels (mis-clustered eigenvalue?)");
        return static_cast<int>(r);
    };
    if (d == 3) {
        // t3 = (p+q)/2, y = (p-q)/3 inverted
        double t3 = weight[0], y = weight[1];
        return {as_int(t3 + 1.5 * y), as_int(t3 - 1.5 * y)};
    }
    if (d == 2) return {as_int(2.0 * weight[0])};
    tableaux::DynkinLabel label;
    for (int l = 0; l < d - 1; ++l) label.push_back(as_int(weight[l]));
    return label;
}

void fix_global_phase(VectorXcd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-9) {
            v *= std::conj(v(i)) / std::abs(v(i));
            return;
        }
    }
}

struct GeneratedCopies {
    std::vector<MatrixXcd> copies;      // per lambda, N x d_J orthonormal columns
    std::vector<QuantumNumbers> labels; // per column; lambda filled by caller
};

GeneratedCopies generate_copies_impl(const MatrixXcd& hw_in, const Ladders& lad) {
    const Eigen::Index n_copies = hw_in.cols();
    if (n_copies == 0) throw std::invalid_argument("generate_copy_bases: no highest-weight vectors");
    const Eigen::Index space_dim = hw_in.rows();
    const std::size_t n_cartans = lad.cartans.size();

    MatrixXcd hw = hw_in;
    for (Eigen::Index c = 0; c < n_copies; ++c) {
        VectorXcd col = hw.col(c);
        fix_global_phase(col);
        hw.col(c) = col;
    }

    // Breadth-first word acceptance against the first copy.
    struct Word {
        int parent;
        int op;
    };
    std::vector<VectorXcd> gen0{hw.col(0)};
    std::vector<Word> words{{-1, -1}};
    MatrixXcd ortho = hw.col(0);
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int fi : frontier) {
            for (std::size_t oi = 0; oi < lad.lowering.size(); ++oi) {
                VectorXcd v = lad.lowering[oi] * gen0[fi];
                const double nv = v.norm();
                if (nv < 1e-9) continue;
                VectorXcd resid = v - ortho * (ortho.adjoint() * v);
                if (resid.norm() > 1e-7 * nv) {
                    gen0.push_back(v);
                    words.push_back({fi, static_cast<int>(oi)});
                    ortho.conservativeResize(Eigen::NoChange, ortho.cols() + 1);
                    ortho.col(ortho.cols() - 1) = resid / resid.norm();
                    next.push_back(static_cast<int>(gen0.size()) - 1);
                }
            }
        }
        frontier = std::move(next);
    }
    const Eigen::Index dim_j = static_cast<Eigen::Index>(gen0.size());

    // Shared orthonormalization: the Gram matrix of word vectors is copy
    // independent, so V_generated * U^{-1} (G = U^H U) yields bases whose
    // per-copy operator blocks agree entrywise.
    MatrixXcd vgen0(space_dim, dim_j);
    for (Eigen::Index i = 0; i < dim_j; ++i) vgen0.col(i) = gen0[i];
    MatrixXcd gram = vgen0.adjoint() * vgen0;
    Eigen::LLT<MatrixXcd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("generate_copy_bases: generated span is rank deficient "
                                 "(basis incomplete for the sector)");
    MatrixXcd uinv = llt.matrixU().solve(MatrixXcd::Identity(dim_j, dim_j));

    GeneratedCopies out;
    out.copies.reserve(n_copies);
    for (Eigen::Index c = 0; c < n_copies; ++c) {
        MatrixXcd vgen(space_dim, dim_j);
        vgen.col(0) = hw.col(c);
        for (Eigen::Index i = 1; i < dim_j; ++i)
            vgen.col(i) = lad.lowering[words[i].op] * vgen.col(words[i].parent);
        out.copies.push_back(vgen * uinv);
    }

    // Cartan weights per column (copy independent).
    std::vector<std::vector<double>> weight(dim_j, std::vector<double>(n_cartans, 0.0));
    for (Eigen::Index i = 0; i < dim_j; ++i) {
        const VectorXcd v = out.copies[0].col(i);
        for (std::size_t c = 0; c < n_cartans; ++c)
            weight[i][c] = std::real(v.dot(lad.cartans[c] * v));
    }
    std::map<std::vector<std::int64_t>, std::vector<Eigen::Index>> groups;
    for (Eigen::Index i = 0; i < dim_j; ++i) {
        std::vector<std::int64_t> key(n_cartans);
        for (std::size_t c = 0; c < n_cartans; ++c) key[c] = std::llround(weight[i][c] * 1e6);
        groups[key].push_back(i);
    }

    // Rotate degenerate weight groups onto T^2 eigenvectors (d<=3), with the
    // same rotation applied to every copy, so (t, t3, y) labels each state.
    std::vector<double> t_value(dim_j, 0.0);
    for (auto& [key, idxs] : groups) {
        (void)key;
        if (!lad.has_t2) continue;
        MatrixXcd sub(space_dim, idxs.size());
        for (std::size_t k = 0; k < idxs.size(); ++k) sub.col(k) = out.copies[0].col(idxs[k]);
        MatrixXcd restricted = sub.adjoint() * (lad.t2 * sub);
        restricted = ((restricted + restricted.adjoint()) / 2.0).eval();
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(restricted);
        if (idxs.size() > 1) {
            MatrixXcd rot = es.eigenvectors().rowwise().reverse();   // descending t
            for (auto& copy : out.copies) {
                MatrixXcd subc(space_dim, idxs.size());
                for (std::size_t k = 0; k < idxs.size(); ++k) subc.col(k) = copy.col(idxs[k]);
                subc = (subc * rot).eval();
                for (std::size_t k = 0; k < idxs.size(); ++k) copy.col(idxs[k]) = subc.col(k);
            }
        }
        for (std::size_t k = 0; k < idxs.size(); ++k) {
            const Eigen::Index pos = idxs.size() > 1
                                         ? static_cast<Eigen::Index>(idxs.size()) - 1 -
                                               static_cast<Eigen::Index>(k)
                                         : 0;
            double t2 = es.eigenvalues()(pos);
            t_value[idxs[k]] = (-1.0 + std::sqrt(1.0 + 4.0 * std::max(0.0, t2))) / 2.0;
        }
    }

    // Phase convention: the first nonzero amplitude of every lambda=0 basis
    // vector is made real positive; the same per-column phases are applied
    // to the other copies so the copy blocks stay entrywise equal.
    for (Eigen::Index i = 0; i < dim_j; ++i) {
        const VectorXcd& v0 = out.copies[0].col(i);
        Cx phase = 1.0;
        for (Eigen::Index r = 0; r < space_dim; ++r) {
            if (std::abs(v0(r)) > 1e-9) {
                phase = std::conj(v0(r)) / std::abs(v0(r));
                break;
            }
        }
        for (auto& copy : out.copies) copy.col(i) *= phase;
    }

    // Canonical column order: descending y, then t3, then t.
    std::vector<Eigen::Index> order(dim_j);
    std::iota(order.begin(), order.end(), 0);
    auto weight_of = [&](Eigen::Index i, std::size_t c) {
        return c < n_cartans ? weight[i][c] : 0.0;
    };
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        const double ya = weight_of(a, 1), yb = weight_of(b, 1);
        if (std::abs(ya - yb) > 1e-7) return ya > yb;
        if (std::abs(weight[a][0] - weight[b][0]) > 1e-7) return weight[a][0] > weight[b][0];
        if (std::abs(t_value[a] - t_value[b]) > 1e-7) return t_value[a] > t_value[b];
        return a < b;
    });
    for (auto& copy : out.copies) {
        MatrixXcd permuted(copy.rows(), dim_j);
        for (Eigen::Index i = 0; i < dim_j; ++i) permuted.col(i) = copy.col(order[i]);
        copy = std::move(permuted);
    }

    out.labels.resize(dim_j);
    for (Eigen::Index i = 0; i < dim_j; ++i) {
        const Eigen::Index src = order[i];
        QuantumNumbers qn;
        qn.t = t_value[src];
        qn.t3 = weight[src][0];
        qn.y = n_cartans > 1 ? weight[src][1] : 0.0;
        out.labels[i] = qn;
    }
    return out;
}

}  // namespace

std::int64_t DecompositionReport::total_dimension() const {
    std::int64_t total = 0;
    for (const auto& s : sectors) total += s.dim * s.multiplicity;
    return total;
}

int DecompositionReport::copy_count() const {
    int total = 0;
    for (const auto& s : sectors) total += s.multiplicity;
    return total;
}

std::int64_t DecompositionReport::commutant_dimension_expected() const {
    std::int64_t total = 0;
    for (const auto& s : sectors) total += static_cast<std::int64_t>(s.multiplicity) * s.multiplicity;
    return total;
}

MatrixXcd highest_weight_subspace(const collective::OperatorSet& set) {
    Ladders lad = build_ladders(set);
    return stacked_kernel(lad.raising);
}

tableaux::DynkinLabel identify_irrep(const VectorXcd& hw, const collective::OperatorSet& set) {
    Ladders lad = build_ladders(set);
    std::vector<double> weight;
    for (const auto& cartan : lad.cartans) {
        VectorXcd cv = cartan * hw;
        double ev = std::real(hw.dot(cv));
        if ((cv - ev * hw).norm() > 1e-8)
            throw std::domain_error("identify_irrep: vector is not a joint Cartan eigenvector");
        weight.push_back(ev);
    }
    return label_from_weight(set.config().d, weight);
}

std::vector<MatrixXcd> generate_copy_bases(const MatrixXcd& hw_columns,
                                           const collective::OperatorSet& set) {
    Ladders lad = build_ladders(set);
    auto out = generate_copies_impl(hw_columns, lad).copies;
    // the extremal weight pins the irrep dimension; an incomplete span is an error
    tableaux::DynkinLabel label = identify_irrep(hw_columns.col(0), set);
    const auto expected =
        tableaux::dimension_closed_form(tableaux::YoungDiagram::from_dynkin(label, set.config().d));
    if (out.front().cols() != expected)
        throw std::runtime_error("generate_copy_bases: basis incomplete, generated " +
                                 std::to_string(out.front().cols()) + " of " +
                                 std::to_string(expected) + " states");
    return out;
}

MatrixXcd generate_copy_basis(const VectorXcd& hw, const collective::OperatorSet& set) {
    return generate_copy_bases(hw, set).front();
}

DecompositionReport decompose_hilbert_space(const collective::SiteConfig& config) {
    const std::int64_t dim = config.dim();
    if (dim > collective::max_dense_dim())
        throw std::length_error("decompose_hilbert_space: d^n exceeds the dense bound");

    collective::OperatorSet set = collective::OperatorSet::build(config);
    Ladders lad = build_ladders(set);
    const int d = config.d;

    DecompositionReport report;
    report.config = config;

    // Highest-weight kernel, split hierarchically by the CSCO: Cartans first
    // (these determine the Dynkin label), then collective C2 and, for d=3,
    // C3, which separates conjugate sectors sharing C2.
    MatrixXcd kernel = stacked_kernel(lad.raising);
    std::vector<Cluster> clusters{{kernel, {}}};
    for (const auto& cartan : lad.cartans)
        clusters = split_clusters(
            clusters, [&](const MatrixXcd& b) { return (cartan * b).eval(); },
            &report.residuals.casimir_split);

    auto apply_c2 = [&](const MatrixXcd& b) {
        MatrixXcd out = MatrixXcd::Zero(b.rows(), b.cols());
        for (int alpha = 0; alpha < set.generator_count(); ++alpha)
            out += set.op(alpha) * (set.op(alpha) * b);
        return out;
    };
    clusters = split_clusters(clusters, apply_c2, &report.residuals.casimir_split);

    if (d == 3) {
        auto apply_c3 = [&](const MatrixXcd& b) {
            MatrixXcd out = MatrixXcd::Zero(b.rows(), b.cols());
            std::vector<MatrixXcd> first(8);
            for (int k = 0; k < 8; ++k) first[k] = set.op(k) * b;
            for (int j = 0; j < 8; ++j) {
                std::vector<MatrixXcd> second(8);
                for (int k = 0; k < 8; ++k) second[k] = set.op(j) * first[k];
                for (int i = 0; i < 8; ++i)
                    for (int k = 0; k < 8; ++k) {
                        const double w = su::d_symbol(i + 1, j + 1, k + 1);
                        if (w != 0.0) out += w * (set.op(i) * second[k]);
                    }
            }
            return out;
        };
        clusters = split_clusters(clusters, apply_c3, &report.residuals.casimir_split);
    }

    const std::size_t n_cartans = lad.cartans.size();
    struct SectorAccum {
        tableaux::DynkinLabel label;
        MatrixXcd hw;
        double c2 = 0.0, c3 = 0.0;
    };
    std::vector<SectorAccum> accum;
    for (const auto& cl : clusters) {
        std::span<const double> weight(cl.eigenvalues.data(), n_cartans);
        tableaux::DynkinLabel label = label_from_weight(d, weight);
        auto it = std::find_if(accum.begin(), accum.end(),
                               [&](const SectorAccum& s) { return s.label == label; });
        if (it == accum.end()) {
            SectorAccum s;
            s.label = label;
            s.hw = cl.basis;
            s.c2 = cl.eigenvalues[n_cartans];
            s.c3 = d == 3 ? cl.eigenvalues[n_cartans + 1] : 0.0;
            accum.push_back(std::move(s));
        } else {
            MatrixXcd joined(it->hw.rows(), it->hw.cols() + cl.basis.cols());
            joined << it->hw, cl.basis;
            it->hw = std::move(joined);
        }
    }
    // sector order: descending multiplicity, ascending dimension, then label
    std::sort(accum.begin(), accum.end(), [&](const SectorAccum& a, const SectorAccum& b) {
        if (a.hw.cols() != b.hw.cols()) return a.hw.cols() > b.hw.cols();
        auto da = tableaux::dimension_closed_form(tableaux::YoungDiagram::from_dynkin(a.label, d));
        auto db = tableaux::dimension_closed_form(tableaux::YoungDiagram::from_dynkin(b.label, d));
        if (da != db) return da < db;
        return a.label < b.label;
    });

    report.v_dfs = MatrixXcd::Zero(dim, dim);
    Eigen::Index row = 0;
    for (auto& sec : accum) {
        GeneratedCopies copies = generate_copies_impl(sec.hw, lad);
        const Eigen::Index dim_j = copies.copies.front().cols();

        DecompositionReport::Sector sector;
        sector.label = sec.label;
        sector.dim = dim_j;
        sector.multiplicity = static_cast<int>(copies.copies.size());
        sector.row_offset = static_cast<int>(row);
        sector.casimir2 = sec.c2;
        sector.casimir3 = sec.c3;
        report.sectors.push_back(sector);

        for (std::size_t lambda = 0; lambda < copies.copies.size(); ++lambda) {
            for (Eigen::Index i = 0; i < dim_j; ++i) {
                QuantumNumbers qn = copies.labels[i];
                qn.lambda = static_cast<int>(lambda);
                qn.p = sec.label[0];
                qn.q = d == 3 ? sec.label[1] : 0;
                report.labels.push_back(qn);
                report.v_dfs.row(row) = copies.copies[lambda].col(i).adjoint();
                ++row;
            }
        }
    }
    if (row != dim)
        throw std::runtime_error("decompose_hilbert_space: basis incomplete (generated " +
                                 std::to_string(row) + " of " + std::to_string(dim) + " rows)");

    report.residuals.unitarity =
        (report.v_dfs * report.v_dfs.adjoint() - MatrixXcd::Identity(dim, dim))
            .cwiseAbs()
            .maxCoeff();
    double weight_resid = 0.0;
    for (Eigen::Index r = 0; r < dim; ++r) {
        VectorXcd v = report.v_dfs.row(r).adjoint();
        weight_resid =
            std::max(weight_resid, (lad.cartans[0] * v - report.labels[r].t3 * v).norm());
        if (n_cartans > 1)
            weight_resid =
                std::max(weight_resid, (lad.cartans[1] * v - report.labels[r].y * v).norm());
    }
    report.residuals.weight_eigen = weight_resid;
    return report;
}

BlockVerification verify_block_structure(const DecompositionReport& report,
                                         std::span<const double> a, double tol) {
    collective::OperatorSet set = collective::OperatorSet::build(report.config);
    MatrixXcd s = set.error_operator(a);
    MatrixXcd m = report.v_dfs * s * report.v_dfs.adjoint();

    const Eigen::Index dim = m.rows();
    Eigen::MatrixXd block_mask = Eigen::MatrixXd::Zero(dim, dim);
    BlockVerification v;
    v.tolerance = tol;
    for (const auto& sec : report.sectors) {
        for (int lambda = 0; lambda < sec.multiplicity; ++lambda) {
            const int off = sec.row_offset + lambda * static_cast<int>(sec.dim);
            block_mask.block(off, off, sec.dim, sec.dim).setOnes();
            if (lambda > 0) {
                MatrixXcd diff = m.block(off, off, sec.dim, sec.dim) -
                                 m.block(sec.row_offset, sec.row_offset, sec.dim, sec.dim);
                v.copy_mismatch_max = std::max(v.copy_mismatch_max, diff.cwiseAbs().maxCoeff());
            }
        }
    }
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            if (block_mask(i, j) == 0.0)
                v.off_block_max = std::max(v.off_block_max, std::abs(m(i, j)));
    v.ok = v.off_block_max < tol && v.copy_mismatch_max < tol;
    return v;
}

int commutant_dimension(const collective::OperatorSet& set) {
    const auto& config = set.config();
    const std::int64_t dim = config.dim();
    if (!set.dense_available())
        throw std::length_error("commutant_dimension: dense representation unavailable");
    const int d = config.d;
    const int n = config.sites();

    // Commuting with the Cartan forces X block-diagonal over the exact
    // integer weight groups (per site, h_l = E_ll - E_{l+1,l+1}, negated on
    // antifundamental sites); the remaining constraints are the simple-root
    // ladder commutators, solved as one stacked null-space problem.
    std::vector<std::vector<int>> weight(dim, std::vector<int>(d - 1, 0));
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        std::int64_t rem = idx;
        for (int site = n - 1; site >= 0; --site) {
            const int digit = static_cast<int>(rem % d);
            rem /= d;
            const int sign = config.kinds[site] == su::RepKind::Fundamental ? 1 : -1;
            for (int l = 0; l < d - 1; ++l)
                weight[idx][l] += sign * ((digit == l ? 1 : 0) - (digit == l + 1 ? 1 : 0));
        }
    }
    std::map<std::vector<int>, std::vector<std::int64_t>> groups;
    for (std::int64_t idx = 0; idx < dim; ++idx) groups[weight[idx]].push_back(idx);
    std::vector<std::vector<std::int64_t>> glist;
    glist.reserve(groups.size());
    for (auto& [key, members] : groups) glist.push_back(std::move(members));

    std::int64_t unknowns = 0;
    std::vector<std::int64_t> offset(glist.size());
    for (std::size_t g = 0; g < glist.size(); ++g) {
        offset[g] = unknowns;
        unknowns += static_cast<std::int64_t>(glist[g].size()) * glist[g].size();
    }

    std::vector<MatrixXcd> ladders;
    for (int l = 0; l + 1 < d; ++l) {
        MatrixXcd e = collective::collective_one_site_operator(config, matrix_unit(d, l, l + 1));
        ladders.push_back(e);
        ladders.push_back(e.adjoint());
    }

    struct PairBlock {
        std::size_t ga, gb;
        MatrixXcd e;
    };
    std::vector<PairBlock> blocks;
    std::int64_t rows = 0;
    for (const auto& e : ladders) {
        for (std::size_t ga = 0; ga < glist.size(); ++ga)
            for (std::size_t gb = 0; gb < glist.size(); ++gb) {
                MatrixXcd sub(glist[ga].size(), glist[gb].size());
                for (std::size_t i = 0; i < glist[ga].size(); ++i)
                    for (std::size_t j = 0; j < glist[gb].size(); ++j)
                        sub(i, j) = e(glist[ga][i], glist[gb][j]);
                if (sub.cwiseAbs().maxCoeff() > 1e-14) {
                    rows += static_cast<std::int64_t>(glist[ga].size()) * glist[gb].size();
                    blocks.push_back({ga, gb, std::move(sub)});
                }
            }
    }

    MatrixXcd a_mat = MatrixXcd::Zero(rows, unknowns);
    std::int64_t r0 = 0;
    for (const auto& pb : blocks) {
        const auto ma = static_cast<std::int64_t>(glist[pb.ga].size());
        const auto mb = static_cast<std::int64_t>(glist[pb.gb].size());
        for (std::int64_t i = 0; i < ma; ++i)
            for (std::int64_t j = 0; j < mb; ++j) {
                const std::int64_t r = r0 + i * mb + j;
                // (E X_bb - X_aa E)_{ij} = 0; unknowns are row-major blocks
                for (std::int64_t k = 0; k < mb; ++k)
                    a_mat(r, offset[pb.gb] + k * mb + j) += pb.e(i, k);
                for (std::int64_t k = 0; k < ma; ++k)
                    a_mat(r, offset[pb.ga] + i * ma + k) -= pb.e(k, j);
            }
        r0 += ma * mb;
    }

    Eigen::BDCSVD<MatrixXcd> svd(a_mat);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    const double thresh = kRankThreshold * std::max(smax, 1.0);
    std::int64_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > thresh) ++rank;
        if (sv(i) > thresh / 10 && sv(i) < thresh * 10)
            throw std::runtime_error("commutant_dimension: numerical rank ambiguity");
    }
    return static_cast<int>(unknowns - rank);
}

}  // namespace qdk::dfs
