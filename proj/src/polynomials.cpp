#include "expsum/polynomials.hpp"

#include <cmath>

namespace expsum {

double Polynomial::operator()(double x) const {
    double v = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    if (coeffs.size() <= 1) {
        d.coeffs = {0.0};
        return d;
    }
    d.coeffs.resize(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.coeffs[k - 1] = k * coeffs[k];
    return d;
}

double legendre_at_zero(int k) {
    if (k < 0) throw ArgumentError("index must be >= 0");
    double p0 = 1.0, p1 = 0.0;  // P_0(0), P_1(0)
    if (k == 0) return p0;
    if (k == 1) return p1;
    for (int j = 1; j < k; ++j) {
        const double p2 = (-j * p0) / (j + 1.0);  // (j+1)P_{j+1}(0) = -j P_{j-1}(0)
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

LegendreValues legendre_shifted(int k) {
    if (k < 0) throw ArgumentError("index must be >= 0");
    LegendreValues v;
    v.value_at_1 = std::sqrt(2.0 * k + 1.0);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    v.deriv_at_0 = sign * k * (k + 1.0) * std::sqrt(2.0 * k + 1.0);
    const double p0 = legendre_at_zero(k);
    v.sq_at_0_sym = (2.0 * k + 1.0) / 2.0 * p0 * p0;
    return v;
}

namespace {

// Three-term recurrence on coefficient vectors with argument u = 2x - 1:
// next = (a * (2x-1) * cur + b * prev).
std::vector<double> shifted_step(double a, const std::vector<double>& cur, double b,
                                 const std::vector<double>& prev) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
        next[i + 1] += 2.0 * a * cur[i];
        next[i] -= a * cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] += b * prev[i];
    return next;
}

}  // namespace

Polynomial shifted_legendre(int k) {
    if (k < 0) throw ArgumentError("index must be >= 0");
    std::vector<double> prev = {1.0};
    if (k == 0) return {prev};
    std::vector<double> cur = {-1.0, 2.0};  // P_1(2x-1)
    for (int j = 1; j < k; ++j) {
        // (j+1) P_{j+1} = (2j+1) u P_j - j P_{j-1}
        std::vector<double> next =
            shifted_step((2.0 * j + 1.0) / (j + 1.0), cur, -static_cast<double>(j) / (j + 1.0), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {cur};
}

Polynomial shifted_chebyshev(int n) {
    if (n < 0) throw ArgumentError("index must be >= 0");
    std::vector<double> prev = {1.0};
    if (n == 0) return {prev};
    std::vector<double> cur = {-1.0, 2.0};  // T_1(2x-1)
    for (int j = 1; j < n; ++j) {
        std::vector<double> next = shifted_step(2.0, cur, -1.0, prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {cur};
}

void chebyshev_eval(int n, double u, double& value, double& deriv) {
    if (n < 0) throw ArgumentError("index must be >= 0");
    double t0 = 1.0, d0 = 0.0;  // T_0
    double t1 = u, d1 = 1.0;    // T_1
    if (n == 0) {
        value = t0;
        deriv = d0;
        return;
    }
    for (int j = 1; j < n; ++j) {
        const double t2 = 2.0 * u * t1 - t0;
        const double d2 = 2.0 * t1 + 2.0 * u * d1 - d0;
        t0 = t1;
        d0 = d1;
        t1 = t2;
        d1 = d2;
    }
    value = t1;
    deriv = d1;
}

}  // namespace expsum
