// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "renorm/simd/kernels.hpp"

#include <immintrin.h>

#include <bit>
#include <cmath>
#include <cstdint>

namespace renorm::simd {
namespace {

constexpr int kWidth = 4;

inline __m256d vabs(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

inline double hsum(__m256d v) {
    alignas(32) double lanes[kWidth];
    _mm256_store_pd(lanes, v);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

// Natural log for positive normal inputs. z = 2^e * m with m in [sqrt(1/2),
// sqrt(2)); ln m = 2 atanh(s), s = (m-1)/(m+1), |s| <= 0.1716, series
// truncated after s^23 (remainder < 1e-19 relative).
inline __m256d vlog(__m256d z) {
    const __m256i bits = _mm256_castpd_si256(z);
    const __m256i exp_bits = _mm256_sub_epi64(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(1023));
    const __m256i magic_i = _mm256_set1_epi64x(0x4338000000000000LL);
    const __m256d magic_d = _mm256_castsi256_pd(magic_i);
    __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(exp_bits, magic_i)), magic_d);

    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

    const __m256d sqrt2 = _mm256_set1_pd(1.4142135623730951);
    const __m256d big = _mm256_cmp_pd(m, sqrt2, _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
    e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d s2 = _mm256_mul_pd(s, s);
    __m256d p = _mm256_set1_pd(1.0 / 23.0);
    for (int k = 10; k >= 0; --k) p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / (2.0 * k + 1.0)));
    const __m256d ln_m = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(2.0), s), p);

    const __m256d ln2_hi = _mm256_set1_pd(0.693147180369123816490);
    const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
    return _mm256_fmadd_pd(e, ln2_hi, _mm256_fmadd_pd(e, ln2_lo, ln_m));
}

inline double orlicz_scalar(double y) {
    y = std::abs(y);
    if (y <= 1.0) return y * y;
    return 6.0 * y - 5.0 - 8.0 * std::log(0.5 * (1.0 + y));
}

inline __m256d vorlicz(__m256d y) {
    const __m256d quad = _mm256_mul_pd(y, y);
    const __m256d arg = _mm256_mul_pd(_mm256_set1_pd(0.5), _mm256_add_pd(_mm256_set1_pd(1.0), y));
    const __m256d lin = _mm256_fnmadd_pd(_mm256_set1_pd(8.0), vlog(arg),
                                         _mm256_fmsub_pd(_mm256_set1_pd(6.0), y, _mm256_set1_pd(5.0)));
    const __m256d small = _mm256_cmp_pd(y, _mm256_set1_pd(1.0), _CMP_LE_OQ);
    return _mm256_blendv_pd(lin, quad, small);
}

double modular_sum(const double* v, std::size_t n, double scale) {
    const __m256d vs = _mm256_set1_pd(scale);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d y = vabs(_mm256_mul_pd(_mm256_loadu_pd(v + i), vs));
        acc = _mm256_add_pd(acc, vorlicz(y));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += orlicz_scalar(v[i] * scale);
    return s;
}

double abs_sum(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) acc = _mm256_add_pd(acc, vabs(_mm256_loadu_pd(v + i)));
    double s = hsum(acc);
    for (; i < n; ++i) s += std::abs(v[i]);
    return s;
}

double tail_sum(const double* v, std::size_t n, double t) {
    const __m256d vt = _mm256_set1_pd(t);
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc = zero;
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d e = _mm256_sub_pd(vabs(_mm256_loadu_pd(v + i)), vt);
        acc = _mm256_add_pd(acc, _mm256_max_pd(e, zero));
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        const double e = std::abs(v[i]) - t;
        if (e > 0.0) s += e;
    }
    return s;
}

std::size_t count_above(const double* v, std::size_t n, double t) {
    const __m256d vt = _mm256_set1_pd(t);
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d gt = _mm256_cmp_pd(vabs(_mm256_loadu_pd(v + i)), vt, _CMP_GT_OQ);
        c += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(gt))));
    }
    for (; i < n; ++i) c += std::abs(v[i]) > t ? 1 : 0;
    return c;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

double modular_derivative_dot(const double* v, const double* w, std::size_t n, double scale) {
    const __m256d vs = _mm256_set1_pd(scale);
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + kWidth <= n; i += kWidth) {
        const __m256d y = _mm256_mul_pd(_mm256_loadu_pd(v + i), vs);
        const __m256d a = vabs(y);
        const __m256d quad = _mm256_add_pd(a, a);
        const __m256d lin = _mm256_sub_pd(_mm256_set1_pd(6.0), _mm256_div_pd(_mm256_set1_pd(8.0), _mm256_add_pd(one, a)));
        const __m256d d = _mm256_blendv_pd(lin, quad, _mm256_cmp_pd(a, one, _CMP_LE_OQ));
        const __m256d signed_d = _mm256_or_pd(d, _mm256_and_pd(y, sign_mask));
        acc = _mm256_fmadd_pd(signed_d, _mm256_loadu_pd(w + i), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        const double y = v[i] * scale;
        const double a = std::abs(y);
        const double d = a <= 1.0 ? 2.0 * a : 6.0 - 8.0 / (1.0 + a);
        s += (y < 0 ? -d : d) * w[i];
    }
    return s;
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{modular_sum, abs_sum, tail_sum, count_above, axpy, modular_derivative_dot};
    return &table;
}

}  // namespace renorm::simd
