#include <doctest.h>

#include <cmath>
#include <map>

#include "qdk/dfs_finder.hpp"
#include "qdk/rng.hpp"
#include "qdk/tableaux.hpp"

using namespace qdk;
using namespace qdk::dfs;
using collective::OperatorSet;
using collective::SiteConfig;
using su::RepKind;

namespace {

SiteConfig config_of(int d, const std::string& kinds) {
    std::vector<RepKind> k;
    for (char c : kinds)
        k.push_back(c == 'f' ? RepKind::Fundamental : RepKind::Antifundamental);
    return SiteConfig(d, k);
}

std::map<tableaux::DynkinLabel, int> sector_map(const DecompositionReport& report) {
    std::map<tableaux::DynkinLabel, int> m;
    for (const auto& s : report.sectors) m[s.label] += s.multiplicity;
    return m;
}

std::map<tableaux::DynkinLabel, int> tableaux_map(int d, const std::string& kinds) {
    std::vector<tableaux::FactorKind> factors;
    for (char c : kinds)
        factors.push_back(c == 'f' ? tableaux::FactorKind::Fundamental
                                   : tableaux::FactorKind::Antifundamental);
    auto dec = tableaux::decompose_chain(factors, d);
    std::map<tableaux::DynkinLabel, int> m;
    for (const auto& t : dec.terms()) m[t.diagram.dynkin()] += static_cast<int>(t.multiplicity);
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("dfs_finder");

TEST_CASE("highest-weight kernel dimensions") {
    CHECK(highest_weight_subspace(OperatorSet::build(config_of(2, "fff"))).cols() == 3);
    CHECK(highest_weight_subspace(OperatorSet::build(config_of(3, "fff"))).cols() == 4);
    CHECK(highest_weight_subspace(OperatorSet::build(config_of(3, "fa"))).cols() == 2);
}

TEST_CASE("identify_irrep on single sites") {
    auto set_f = OperatorSet::build(config_of(3, "f"));
    CHECK(identify_irrep(Eigen::Vector3cd::Unit(0), set_f) == tableaux::DynkinLabel{1, 0});

    auto set_a = OperatorSet::build(config_of(3, "a"));
    CHECK(identify_irrep(Eigen::Vector3cd::Unit(1), set_a) == tableaux::DynkinLabel{0, 1});

    // |1> of the fundamental is a weight vector but not extremal; labels
    // would come out negative
    CHECK_THROWS_AS(identify_irrep(Eigen::Vector3cd::Unit(1), set_f), std::domain_error);
    // a non-weight vector is rejected
    Eigen::Vector3cd mixed = (Eigen::Vector3cd::Unit(0) + Eigen::Vector3cd::Unit(2)) / std::sqrt(2.0);
    CHECK_THROWS_AS(identify_irrep(mixed, set_f), std::domain_error);
}

TEST_CASE("three-qutrit singlet identifies as (0,0)") {
    auto config = config_of(3, "fff");
    auto set = OperatorSet::build(config);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(27);
    const double s6 = std::sqrt(6.0);
    v(5) = 1 / s6;    // |012>
    v(7) = -1 / s6;   // |021>
    v(11) = -1 / s6;  // |102>
    v(15) = 1 / s6;   // |120>
    v(19) = 1 / s6;   // |201>
    v(21) = -1 / s6;  // |210>
    CHECK(identify_irrep(v, set) == tableaux::DynkinLabel{0, 0});
}

TEST_CASE("decompose_hilbert_space worked examples") {
    auto r2 = decompose_hilbert_space(config_of(2, "fff"));
    REQUIRE(r2.sectors.size() == 2);
    CHECK(r2.sectors[0].label == tableaux::DynkinLabel{1});
    CHECK(r2.sectors[0].multiplicity == 2);
    CHECK(r2.sectors[0].dim == 2);
    CHECK(r2.sectors[1].label == tableaux::DynkinLabel{3});
    CHECK(r2.sectors[1].multiplicity == 1);
    CHECK(r2.sectors[1].dim == 4);

    auto r3 = decompose_hilbert_space(config_of(3, "fff"));
    REQUIRE(r3.sectors.size() == 3);
    CHECK(r3.sectors[0].label == tableaux::DynkinLabel{1, 1});
    CHECK(r3.sectors[0].multiplicity == 2);
    CHECK(r3.sectors[1].label == tableaux::DynkinLabel{0, 0});
    CHECK(r3.sectors[2].label == tableaux::DynkinLabel{3, 0});
    CHECK(r3.total_dimension() == 27);
    // collective casimir eigenvalues tag the sectors
    CHECK(std::abs(r3.sectors[0].casimir2 - 12.0) < 1e-9);
    CHECK(std::abs(r3.sectors[2].casimir2 - 24.0) < 1e-9);
    CHECK(std::abs(r3.sectors[2].casimir3 - 72.0) < 1e-6);

    auto rff = decompose_hilbert_space(config_of(3, "ff"));
    auto m = sector_map(rff);
    CHECK(m[tableaux::DynkinLabel{0, 1}] == 1);
    CHECK(m[tableaux::DynkinLabel{2, 0}] == 1);
    CHECK(m.count(tableaux::DynkinLabel{0, 0}) == 0);
}

TEST_CASE("numerical sectors match the tableaux arithmetic") {
    // includes d=4, which runs in weight-only labeling mode
    for (auto [d, kinds] : std::vector<std::pair<int, std::string>>{
             {2, "ff"}, {2, "fff"}, {3, "ff"}, {3, "af"}, {3, "fff"}, {3, "aff"},
             {4, "ff"}, {4, "fff"}}) {
        auto report = decompose_hilbert_space(config_of(d, kinds));
        CHECK(sector_map(report) == tableaux_map(d, kinds));
        CHECK(report.total_dimension() == report.config.dim());
        CHECK(report.residuals.unitarity < 1e-10);
        CHECK(report.residuals.weight_eigen < 1e-9);
    }
}

TEST_CASE("sector content is independent of which site carries the conjugate rep") {
    auto reference = sector_map(decompose_hilbert_space(config_of(3, "aff")));
    CHECK(sector_map(decompose_hilbert_space(config_of(3, "faf"))) == reference);
    CHECK(sector_map(decompose_hilbert_space(config_of(3, "ffa"))) == reference);
}

TEST_CASE("the decomposition is deterministic") {
    auto r1 = decompose_hilbert_space(config_of(3, "fff"));
    auto r2 = decompose_hilbert_space(config_of(3, "fff"));
    CHECK((r1.v_dfs - r2.v_dfs).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(r1.labels.size() == r2.labels.size());
    for (std::size_t i = 0; i < r1.labels.size(); ++i) {
        CHECK(r1.labels[i].t3 == r2.labels[i].t3);
        CHECK(r1.labels[i].lambda == r2.labels[i].lambda);
    }
}

TEST_CASE("labels are joint Cartan eigenvectors with extremal-weight consistency") {
    auto report = decompose_hilbert_space(config_of(3, "fff"));
    // recorded per-row labels obey |t3| <= t and weight additivity bounds
    for (const auto& qn : report.labels) {
        CHECK(qn.t3 <= qn.t + 1e-9);
        CHECK(-qn.t - 1e-9 <= qn.t3);
    }
    // extremal weight of each sector satisfies t3=(p+q)/2, y=(p-q)/3
    for (const auto& sec : report.sectors) {
        const auto& qn = report.labels[sec.row_offset];
        bool found = false;
        for (int r = sec.row_offset; r < sec.row_offset + sec.dim; ++r) {
            const auto& l = report.labels[r];
            if (std::abs(l.t3 - (qn.p + qn.q) / 2.0) < 1e-8 &&
                std::abs(l.y - (qn.p - qn.q) / 3.0) < 1e-8)
                found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("block structure for random collective errors") {
    rng::SplitMix64 r(33);
    for (auto [d, kinds] :
         std::vector<std::pair<int, std::string>>{{2, "fff"}, {3, "fff"}, {3, "aff"}}) {
        auto report = decompose_hilbert_space(config_of(d, kinds));
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<double> a(d * d - 1);
            for (auto& x : a) x = r.gaussian();
            auto v = verify_block_structure(report, a, 1e-10);
            CHECK(v.ok);
            CHECK(v.off_block_max < 1e-10);
            CHECK(v.copy_mismatch_max < 1e-10);
        }
    }
}

TEST_CASE("every single generator is block diagonal with equal copy blocks") {
    for (auto [d, kinds] : std::vector<std::pair<int, std::string>>{{2, "fff"}, {3, "fff"}}) {
        auto report = decompose_hilbert_space(config_of(d, kinds));
        for (int alpha = 0; alpha < d * d - 1; ++alpha) {
            std::vector<double> a(d * d - 1, 0.0);
            a[alpha] = 1.0;
            auto v = verify_block_structure(report, a, 1e-10);
            CHECK(v.off_block_max < 1e-10);
            CHECK(v.copy_mismatch_max < 1e-10);
        }
    }
}

TEST_CASE("copy bases from a degenerate cluster have identical operator blocks") {
    auto config = config_of(3, "fff");
    auto set = OperatorSet::build(config);
    Eigen::MatrixXcd hw = highest_weight_subspace(set);
    // pick out the two octet highest-weight vectors: the (t3, y) = (1, 0) pair
    Eigen::MatrixXcd t3 = set.op(2) / 2.0;
    std::vector<Eigen::Index> octet_cols;
    Eigen::MatrixXcd restricted = hw.adjoint() * t3 * hw;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(restricted);
    Eigen::MatrixXcd rotated = hw * es.eigenvectors();
    for (Eigen::Index i = 0; i < rotated.cols(); ++i)
        if (std::abs(es.eigenvalues()(i) - 1.0) < 1e-8) octet_cols.push_back(i);
    REQUIRE(octet_cols.size() == 2);
    Eigen::MatrixXcd cluster(27, 2);
    cluster << rotated.col(octet_cols[0]), rotated.col(octet_cols[1]);

    auto copies = generate_copy_bases(cluster, set);
    REQUIRE(copies.size() == 2);
    CHECK(copies[0].cols() == 8);
    rng::SplitMix64 r(44);
    std::vector<double> a(8);
    for (auto& x : a) x = r.gaussian();
    Eigen::MatrixXcd s = set.error_operator(a);
    Eigen::MatrixXcd m0 = copies[0].adjoint() * s * copies[0];
    Eigen::MatrixXcd m1 = copies[1].adjoint() * s * copies[1];
    CHECK((m0 - m1).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("the two j=1/2 copies of three qubits give two-vector logical blocks") {
    auto config = config_of(2, "fff");
    auto set = OperatorSet::build(config);
    Eigen::MatrixXcd hw = highest_weight_subspace(set);
    REQUIRE(hw.cols() == 3);
    // the doublet cluster sits at m = +1/2
    Eigen::MatrixXcd restricted = hw.adjoint() * (set.op(2) / 2.0) * hw;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(restricted);
    Eigen::MatrixXcd rotated = hw * es.eigenvectors();
    std::vector<Eigen::Index> doublet_cols;
    for (Eigen::Index i = 0; i < 3; ++i)
        if (std::abs(es.eigenvalues()(i) - 0.5) < 1e-8) doublet_cols.push_back(i);
    REQUIRE(doublet_cols.size() == 2);
    Eigen::MatrixXcd cluster(8, 2);
    cluster << rotated.col(doublet_cols[0]), rotated.col(doublet_cols[1]);
    auto copies = generate_copy_bases(cluster, set);
    REQUIRE(copies.size() == 2);
    for (const auto& copy : copies) {
        CHECK(copy.cols() == 2);
        CHECK((copy.adjoint() * copy - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <
              1e-12);
    }
    // the two copies respond to a collective error with the same 2x2 block
    std::vector<double> a = {0.4, -0.9, 1.3};
    Eigen::MatrixXcd s = set.error_operator(a);
    Eigen::MatrixXcd m0 = copies[0].adjoint() * s * copies[0];
    Eigen::MatrixXcd m1 = copies[1].adjoint() * s * copies[1];
    CHECK((m0 - m1).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("singlet copy basis is annihilated") {
    auto config = config_of(3, "fa");
    auto set = OperatorSet::build(config);
    Eigen::MatrixXcd hw = highest_weight_subspace(set);
    REQUIRE(hw.cols() == 2);
    for (Eigen::Index c = 0; c < 2; ++c) {
        if (identify_irrep(hw.col(c), set) == tableaux::DynkinLabel{0, 0}) {
            auto basis = generate_copy_basis(hw.col(c), set);
            REQUIRE(basis.cols() == 1);
            for (int alpha = 0; alpha < 8; ++alpha)
                CHECK((set.op(alpha) * basis.col(0)).norm() < 1e-10);
        }
    }
}

TEST_CASE("commutant dimension equals the multiplicity sum of squares") {
    auto set2 = OperatorSet::build(config_of(2, "fff"));
    CHECK(commutant_dimension(set2) == 5);

    auto set3 = OperatorSet::build(config_of(3, "fff"));
    CHECK(commutant_dimension(set3) == 6);

    auto set1 = OperatorSet::build(config_of(3, "f"));
    CHECK(commutant_dimension(set1) == 1);
    auto set1b = OperatorSet::build(config_of(4, "f"));
    CHECK(commutant_dimension(set1b) == 1);

    for (auto [d, kinds] :
         std::vector<std::pair<int, std::string>>{{2, "ff"}, {3, "ff"}, {3, "fa"}, {3, "aff"}}) {
        auto report = decompose_hilbert_space(config_of(d, kinds));
        auto set = OperatorSet::build(config_of(d, kinds));
        CHECK(commutant_dimension(set) == report.commutant_dimension_expected());
    }
}

TEST_CASE("oversized spaces are rejected") {
    CHECK_THROWS_AS(decompose_hilbert_space(SiteConfig::all_fundamental(3, 8)),
                    std::length_error);
}

TEST_SUITE_END();
