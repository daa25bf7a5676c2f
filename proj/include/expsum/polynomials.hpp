#pragma once

#include <vector>

#include "expsum/core.hpp"

namespace expsum {

// Real polynomial in the monomial basis, p(x) = Σ c_k x^k.
struct Polynomial {
    std::vector<double> coeffs;  // coeffs[k] multiplies x^k

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const;
    Polynomial derivative() const;
};

// Endpoint and centre data of the orthonormal Legendre systems.
//   value_at_1:  k-th orthonormal shifted Legendre on [0,1] at x = 1, sqrt(2k+1).
//   deriv_at_0:  its derivative at 0 with the alternating sign convention,
//                (-1)^k k (k+1) sqrt(2k+1).
//   sq_at_0_sym: square at 0 of the k-th orthonormal Legendre on [-1,1]
//                (standard convention: zero for odd k), by recurrence.
struct LegendreValues {
    double value_at_1 = 0.0;
    double deriv_at_0 = 0.0;
    double sq_at_0_sym = 0.0;
};

LegendreValues legendre_shifted(int k);

// Classic (unnormalized) Legendre P_k at 0, by the three-term recurrence.
double legendre_at_zero(int k);

// Coefficients of the classic Legendre polynomial composed with 2x-1
// (shifted to [0,1]), by coefficient recurrence.
Polynomial shifted_legendre(int k);

// Coefficients of T_n(2x-1), the Chebyshev polynomial shifted to [0,1].
Polynomial shifted_chebyshev(int n);

// T_n(u) and T_n'(u) by the coupled recurrence; stable for |u| <= 1.
void chebyshev_eval(int n, double u, double& value, double& deriv);

}  // namespace expsum
