#include "renorm/simd/kernels.hpp"

#include <cmath>

namespace renorm::simd {
namespace {

// Same closed form as orlicz_value(); duplicated so the kernel TU has no
// dependency on the orlicz module.
inline double orlicz(double y) {
    y = std::abs(y);
    if (y <= 1.0) return y * y;
    return 6.0 * y - 5.0 - 8.0 * std::log(0.5 * (1.0 + y));
}

inline double orlicz_derivative(double y) {
    const double a = std::abs(y);
    const double d = a <= 1.0 ? 2.0 * a : 6.0 - 8.0 / (1.0 + a);
    return y < 0 ? -d : d;
}

double modular_sum(const double* v, std::size_t n, double scale) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += orlicz(v[i] * scale);
    return s;
}

double abs_sum(const double* v, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::abs(v[i]);
    return s;
}

double tail_sum(const double* v, std::size_t n, double t) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = std::abs(v[i]) - t;
        if (e > 0.0) s += e;
    }
    return s;
}

std::size_t count_above(const double* v, std::size_t n, double t) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::abs(v[i]) > t ? 1 : 0;
    return c;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double modular_derivative_dot(const double* v, const double* w, std::size_t n, double scale) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += orlicz_derivative(v[i] * scale) * w[i];
    return s;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{modular_sum, abs_sum, tail_sum, count_above, axpy, modular_derivative_dot};
    return table;
}

}  // namespace renorm::simd
