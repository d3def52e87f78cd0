#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops over dyadic cell values. Every kernel has a scalar
// reference implementation; an AVX2+FMA variant is compiled separately and
// chosen at runtime when the CPU supports it. RENORM_SIMD=scalar forces the
// reference path.

namespace renorm::simd {

enum class Isa { scalar, avx2 };

struct KernelTable {
    /// sum_i M(v_i * scale)
    double (*modular_sum)(const double* v, std::size_t n, double scale);
    /// sum_i |v_i|
    double (*abs_sum)(const double* v, std::size_t n);
    /// sum_i max(|v_i| - t, 0)
    double (*tail_sum)(const double* v, std::size_t n, double t);
    /// #{i : |v_i| > t}
    std::size_t (*count_above)(const double* v, std::size_t n, double t);
    /// y += a * x
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    /// sum_i M'(v_i * scale) * w_i
    double (*modular_derivative_dot)(const double* v, const double* w, std::size_t n, double scale);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant was not built.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();
Isa active_isa();
std::string_view isa_name(Isa isa);
/// Override the runtime choice (tests, benchmarking). Falls back to scalar
/// when AVX2 is requested but unavailable.
void force_isa(Isa isa);

const KernelTable& kernels();

inline double modular_sum(std::span<const double> v, double scale) {
    return kernels().modular_sum(v.data(), v.size(), scale);
}
inline double abs_sum(std::span<const double> v) { return kernels().abs_sum(v.data(), v.size()); }
inline double tail_sum(std::span<const double> v, double t) { return kernels().tail_sum(v.data(), v.size(), t); }
inline std::size_t count_above(std::span<const double> v, double t) {
    return kernels().count_above(v.data(), v.size(), t);
}
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
    kernels().axpy(a, x.data(), y.data(), x.size());
}
inline double modular_derivative_dot(std::span<const double> v, std::span<const double> w, double scale) {
    return kernels().modular_derivative_dot(v.data(), w.data(), v.size(), scale);
}

}  // namespace renorm::simd
