#include <benchmark/benchmark.h>

#include <pseudoval/literals.hpp>
#include <pseudoval/metrics.hpp>
#include <pseudoval/residue_zar.hpp>

using namespace pseudoval;

namespace {

const FieldConfig kDyadicQ = FieldConfig::parse("dyadic-q");

void BM_ElementArithmetic(benchmark::State& state) {
    FieldElem a = parseElement(kDyadicQ, "1*t^(1/2) + 2*t^(3/4) + 3");
    FieldElem b = parseElement(kDyadicQ, "(1*t^(1) + 1)/(2*t^(1/4))");
    for (auto _ : state) {
        FieldElem c = a * b + a;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ElementArithmetic);

void BM_Materialize(benchmark::State& state) {
    SeqSpec e = zConstruct(FieldElem::zero(kDyadicQ), ExtRat(Rat(1, 3)));
    const std::size_t depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        FieldElem s = e.materialize(depth);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_Materialize)->Arg(8)->Arg(32)->Arg(128);

void BM_RingMembership(benchmark::State& state) {
    SeqSpec e = zConstruct(FieldElem::zero(kDyadicQ), ExtRat(1));
    RatFunc phi = RatFunc::factored(parseElement(kDyadicQ, "(1)/(1*t^(1/2))"),
                                    {{parseElement(kDyadicQ, "0"), 1},
                                     {parseElement(kDyadicQ, "1*t^(-1)"), 2}});
    for (auto _ : state) {
        Verdict v = ringContains(e, phi);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_RingMembership);

void BM_DistDeltaWindow(benchmark::State& state) {
    ExtRing w1(zConstruct(FieldElem::zero(kDyadicQ), ExtRat(1)));
    ExtRing w2(zConstruct(parseElement(kDyadicQ, "1*t^(1/4)"), ExtRat(1)));
    for (auto _ : state) {
        DistWindowResult r = distDeltaWindow(w1, w2);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_DistDeltaWindow);

void BM_MonicIrreducibles(benchmark::State& state) {
    for (auto _ : state) {
        auto v = monicIrreducibles(BaseK{5}, static_cast<long>(state.range(0)));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_MonicIrreducibles)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
