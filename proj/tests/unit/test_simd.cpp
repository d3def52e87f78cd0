#include <doctest.h>

#include <cmath>
#include <vector>

#include "renorm/core/random.hpp"
#include "renorm/simd/kernels.hpp"

using namespace renorm;
using namespace renorm::simd;

namespace {

std::vector<double> sample(std::size_t n, std::uint64_t seed, double scale) {
    Rng rng(seed);
    std::vector<double> v(n);
    for (double& x : v) x = scale * rng.normal();
    return v;
}

}  // namespace

TEST_CASE("scalar and AVX2 kernels agree") {
    const KernelTable* avx = avx2_kernels();
    if (avx == nullptr || !cpu_has_avx2()) {
        MESSAGE("AVX2 variant unavailable; equivalence not exercised");
        return;
    }
    const KernelTable& sc = scalar_kernels();
    // Odd lengths exercise the remainder loops.
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u, 1001u, 65536u}) {
        for (double scale : {0.3, 1.0, 5.0, 1e3}) {
            const auto v = sample(n, n * 31 + 7, scale);
            const auto w = sample(n, n * 17 + 3, 1.0);
            const double tol = 1e-13 * (1.0 + static_cast<double>(n));
            for (double s : {0.25, 1.0, 3.0}) {
                const double a = sc.modular_sum(v.data(), n, s), b = avx->modular_sum(v.data(), n, s);
                CHECK(std::abs(a - b) <= tol * std::max(1.0, std::abs(a)));
                const double c = sc.modular_derivative_dot(v.data(), w.data(), n, s);
                const double d = avx->modular_derivative_dot(v.data(), w.data(), n, s);
                CHECK(std::abs(c - d) <= tol * std::max(1.0, std::abs(c)));
            }
            const double a1 = sc.abs_sum(v.data(), n), b1 = avx->abs_sum(v.data(), n);
            CHECK(std::abs(a1 - b1) <= tol * std::max(1.0, a1));
            for (double t : {0.0, 0.5, 2.0}) {
                const double a = sc.tail_sum(v.data(), n, t), b = avx->tail_sum(v.data(), n, t);
                CHECK(std::abs(a - b) <= tol * std::max(1.0, a));
                CHECK(sc.count_above(v.data(), n, t) == avx->count_above(v.data(), n, t));
            }
            auto y1 = w, y2 = w;
            sc.axpy(0.75, v.data(), y1.data(), n);
            avx->axpy(0.75, v.data(), y2.data(), n);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-15 * (1.0 + std::abs(y1[i])));
        }
    }
}

TEST_CASE("AVX2 log path is accurate across magnitudes") {
    const KernelTable* avx = avx2_kernels();
    if (avx == nullptr || !cpu_has_avx2()) return;
    for (double x : {1.0000001, 1.5, 2.0, 17.0, 1e3, 1e8, 1e15}) {
        const double v[4] = {x, -x, x, -x};
        const double a = scalar_kernels().modular_sum(v, 4, 1.0);
        const double b = avx->modular_sum(v, 4, 1.0);
        CHECK(b == doctest::Approx(a).epsilon(1e-15));
    }
}

TEST_CASE("force_isa switches the active table and falls back to scalar") {
    const Isa before = active_isa();
    force_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    CHECK(&kernels() == &scalar_kernels());
    force_isa(Isa::avx2);
    CHECK(((active_isa() == Isa::avx2) == (avx2_kernels() != nullptr && cpu_has_avx2())));
    force_isa(before);
    CHECK(isa_name(Isa::scalar) == "scalar");
}
