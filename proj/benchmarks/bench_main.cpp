#include <benchmark/benchmark.h>

#include "cbkap/attack.hpp"
#include "cbkap/codec.hpp"

namespace {

using namespace cbkap;

PublicParams make_params(MMode mode, std::uint64_t seed = 7) {
    ParamsConfig cfg;
    cfg.m_mode = mode;
    cfg.seed = seed;
    return ttp_setup(cfg);
}

void BM_MatMul(benchmark::State& state) {
    const Field f(251);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    Matrix a(f, n, n), b(f, n, n);
    for (auto& e : a.entries()) e = rng.element(f);
    for (auto& e : b.entries()) e = rng.element(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_MatMul)->Arg(8)->Arg(16)->Arg(32);

void BM_EMulWord(benchmark::State& state) {
    const PublicParams params = make_params(MMode::defended);
    const PrivateKey sk = keygen(params, Side::bob, 11);
    const EState start{Matrix::identity(params.field, params.n),
                       Permutation::identity(params.n)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(e_mul_word(start, sk.word, params.tau));
    }
    state.counters["letters"] = static_cast<double>(sk.word.letters.size());
}
BENCHMARK(BM_EMulWord);

void BM_KernelBasis(benchmark::State& state) {
    const PublicParams params = make_params(MMode::baseline);
    const PrivateKey bob = keygen(params, Side::bob, 11);
    const PublicKey pub_b = public_key(params, bob);
    const auto equations =
        assemble_equations(params, pub_b, gen_spurious(params, 10, 13));
    for (auto _ : state) {
        benchmark::DoNotOptimize(recover_space(equations, params.n));
    }
}
BENCHMARK(BM_KernelBasis);

void BM_AttackPipeline(benchmark::State& state) {
    const PublicParams params = make_params(MMode::baseline);
    const PrivateKey bob = keygen(params, Side::bob, 11);
    const PublicKey pub_b = public_key(params, bob);
    for (auto _ : state) {
        const auto spurious = gen_spurious(params, 10, 13);
        const auto equations = assemble_equations(params, pub_b, spurious);
        const auto basis = recover_space(equations, params.n);
        benchmark::DoNotOptimize(attack_report(params, basis, &bob));
    }
}
BENCHMARK(BM_AttackPipeline);

void BM_SerializeParams(benchmark::State& state) {
    const PublicParams params = make_params(MMode::defended);
    for (auto _ : state) {
        benchmark::DoNotOptimize(serialize(params));
    }
}
BENCHMARK(BM_SerializeParams);

} // namespace

BENCHMARK_MAIN();
