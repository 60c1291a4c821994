// Times the OpenMP kernels against their serial twins.
#include <hypermatch/census.hpp>
#include <hypermatch/tensor.hpp>
#include <hypermatch/verify.hpp>
#include <hypermatch/walktree.hpp>

#include <chrono>
#include <cstdlib>
#include <algorithm>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hypermatch;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main() {
    // idle workers must block, not spin, or they distort the serial timings
    setenv("OMP_WAIT_POLICY", "passive", 0);
    setenv("GOMP_SPINCOUNT", "0", 1);
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "openmp");

    {
        CactusCensus c1 = enumerate_census(3, 5, 1, false);
        CactusCensus warm1 = c1, warm2 = c1;
        census_lambdas_serial(warm1); // allocator warmup, both paths
        census_lambdas(warm2);
        CactusCensus c2 = c1;
        double ts = time_ms([&] { census_lambdas_serial(c1, Rat(1, Int(1) << 80)); });
        double tp = time_ms([&] { census_lambdas(c2, Rat(1, Int(1) << 80)); });
        row("census lambdas Ca_3(5,1)", ts, tp);
    }
    {
        double ts = time_ms(
            [&] { verify_shift_monotonicity_serial(300, 3, 7, kDefaultSeed); });
        double tp =
            time_ms([&] { verify_shift_monotonicity(300, 3, 7, kDefaultSeed); });
        row("shift sweep (300 inst.)", ts, tp);
    }
    {
        double ts = time_ms(
            [&] { verify_ordering_lemmas_serial(120, kDefaultSeed); });
        double tp = time_ms([&] { verify_ordering_lemmas(120, kDefaultSeed); });
        row("ordering sweep (120 inst.)", ts, tp);
    }
    {
        // a large k-tree keeps the apply kernel busy
        Rng rng = rng_for_instance(kDefaultSeed, 99);
        Hypergraph t = random_ktree(3, 40000, rng);
        std::vector<double> x(t.n, 1.0);
        double ts = time_ms([&] {
            for (int i = 0; i < 50; ++i) {
                auto y = tensor_apply_serial(t, x);
                x.swap(y);
                double mx = 0;
                for (double v : x) mx = std::max(mx, v);
                for (double& v : x) v /= mx;
            }
        });
        std::vector<double> z(t.n, 1.0);
        double tp = time_ms([&] {
            for (int i = 0; i < 50; ++i) {
                auto y = tensor_apply(t, z);
                z.swap(y);
                double mx = 0;
                for (double v : z) mx = std::max(mx, v);
                for (double& v : z) v /= mx;
            }
        });
        std::printf("# k-tree: %d vertices, %d edges\n", t.n, t.m());
        row("tensor apply x50", ts, tp);
    }
    return 0;
}
