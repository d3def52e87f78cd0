#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace renorm {

/// Truncated Taylor series in a scaled local variable: coefficient n is
/// g^(n)(x0) * scale^n / n!, where the jet represents g(x0 + scale * e).
inline constexpr std::size_t kJetOrder = 12;

struct Jet {
    std::array<double, kJetOrder + 1> c{};

    double operator[](std::size_t i) const { return c[i]; }
    double& operator[](std::size_t i) { return c[i]; }

    static Jet constant(double v) {
        Jet j;
        j.c[0] = v;
        return j;
    }
    static Jet variable(double x0, double scale) {
        Jet j;
        j.c[0] = x0;
        j.c[1] = scale;
        return j;
    }
};

inline Jet operator+(Jet a, const Jet& b) {
    for (std::size_t i = 0; i <= kJetOrder; ++i) a.c[i] += b.c[i];
    return a;
}
inline Jet operator-(Jet a, const Jet& b) {
    for (std::size_t i = 0; i <= kJetOrder; ++i) a.c[i] -= b.c[i];
    return a;
}
inline Jet operator*(Jet a, double s) {
    for (auto& v : a.c) v *= s;
    return a;
}
inline Jet operator+(Jet a, double s) {
    a.c[0] += s;
    return a;
}

inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t n = 0; n <= kJetOrder; ++n) {
        double s = 0.0;
        for (std::size_t k = 0; k <= n; ++k) s += a.c[k] * b.c[n - k];
        r.c[n] = s;
    }
    return r;
}

inline Jet reciprocal(const Jet& a) {
    Jet r;
    r.c[0] = 1.0 / a.c[0];
    for (std::size_t n = 1; n <= kJetOrder; ++n) {
        double s = 0.0;
        for (std::size_t k = 1; k <= n; ++k) s += a.c[k] * r.c[n - k];
        r.c[n] = -s * r.c[0];
    }
    return r;
}

inline Jet log(const Jet& a) {
    Jet r;
    r.c[0] = std::log(a.c[0]);
    for (std::size_t n = 1; n <= kJetOrder; ++n) {
        double s = static_cast<double>(n) * a.c[n];
        for (std::size_t k = 1; k < n; ++k) s -= static_cast<double>(k) * r.c[k] * a.c[n - k];
        r.c[n] = s / (static_cast<double>(n) * a.c[0]);
    }
    return r;
}

inline Jet exp(const Jet& a) {
    Jet r;
    r.c[0] = std::exp(a.c[0]);
    for (std::size_t n = 1; n <= kJetOrder; ++n) {
        double s = 0.0;
        for (std::size_t k = 1; k <= n; ++k) s += static_cast<double>(k) * a.c[k] * r.c[n - k];
        r.c[n] = s / static_cast<double>(n);
    }
    return r;
}

inline Jet tanh(const Jet& a) {
    Jet e = exp(a * 2.0);
    return (e + (-1.0)) * reciprocal(e + 1.0);
}

}  // namespace renorm
