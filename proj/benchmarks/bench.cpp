#include <benchmark/benchmark.h>

#include "qdk/codes.hpp"
#include "qdk/collective.hpp"
#include "qdk/dfs_finder.hpp"
#include "qdk/noise_sim.hpp"
#include "qdk/rng.hpp"
#include "qdk/tableaux.hpp"

namespace {

using namespace qdk;

static void BM_DecomposeChain(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<tableaux::FactorKind> factors(n, tableaux::FactorKind::Fundamental);
    for (auto _ : state) {
        auto dec = tableaux::decompose_chain(factors, 3);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_DecomposeChain)->DenseRange(3, 8);

static void BM_CollectiveSet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto config = collective::SiteConfig::all_fundamental(3, n);
    for (auto _ : state) {
        auto set = collective::OperatorSet::build(config);
        benchmark::DoNotOptimize(set);
    }
}
BENCHMARK(BM_CollectiveSet)->DenseRange(2, 5);

static void BM_DecomposeHilbertSpace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto config = collective::SiteConfig::all_fundamental(3, n);
    for (auto _ : state) {
        auto report = dfs::decompose_hilbert_space(config);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_DecomposeHilbertSpace)->DenseRange(2, 4);

static void BM_CommutantDimension(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto set = collective::OperatorSet::build(collective::SiteConfig::all_fundamental(3, n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dfs::commutant_dimension(set));
    }
}
BENCHMARK(BM_CommutantDimension)->DenseRange(2, 4);

static void BM_EvolveQutritCode(benchmark::State& state) {
    auto code = codes::three_qutrit_code();
    auto set = collective::OperatorSet::build(code.config);
    rng::SplitMix64 r(1);
    std::vector<double> a(8);
    for (auto& x : a) x = r.gaussian();
    codes::LogicalState l;
    l.c << 0.6, 0.8;
    l.gauge = Eigen::VectorXcd::Unit(8, 0);
    auto psi = codes::encode(code, l);
    for (auto _ : state) {
        auto out = collective::evolve(psi, set, a, 1.0);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_EvolveQutritCode);

static void BM_SdfsMatrix(benchmark::State& state) {
    auto code = codes::three_qutrit_code();
    rng::SplitMix64 r(2);
    std::vector<double> a(8);
    for (auto& x : a) x = r.gaussian();
    for (auto _ : state) {
        auto m = codes::sdfs_matrix(code, a);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_SdfsMatrix);

static void BM_TwirlTwoQutrits(benchmark::State& state) {
    auto set = collective::OperatorSet::build(collective::SiteConfig::all_fundamental(3, 2));
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(9, 9) / 9.0;
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto out = sim::twirl(rho, set, samples, 7);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_TwirlTwoQutrits)->Arg(100)->Arg(1000);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
