#include <cmath>
#include <numbers>

#include "expsum/quad.hpp"
#include "expsum/theorems.hpp"

namespace expsum {

namespace {

const cplx I(0.0, 1.0);

// Kernel witness on the integer-power space, as coefficient polynomial.
WitnessResult polynomial_kernel_witness(int n, const Functional& fn, double bound) {
    std::vector<cplx> powers(n);
    for (int j = 0; j < n; ++j) powers[j] = cplx(static_cast<double>(j));
    const MonomialSystem sys{powers};
    const ExtremalResult r = christoffel_sup(sys, fn);
    WitnessResult w;
    Polynomial p;
    p.coeffs.resize(n);
    for (int j = 0; j < n; ++j) p.coeffs[j] = r.witness_coeffs[j].real();
    w.poly_witness = std::move(p);
    w.achieved_ratio = r.value;
    w.bound = bound;
    return w;
}

// sin(λt) as a two-term sum with purely imaginary exponents.
ExpSum sine_sum(double lambda) {
    const cplx c = 1.0 / (2.0 * I);
    return ExpSum({I * lambda, -I * lambda}, {c, -c});
}

// T_m(sin(εt)/ε) expanded over the odd harmonics of εt.  With T_m(y) =
// Σ_j t_j y^j (odd j) and sin^j x = 2^{1-j} Σ_{odd k<=j} (-1)^{(j-k)/2}
// C(j,(j-k)/2) sin(kx), the result stays inside the purely-imaginary class.
ExpSum chebyshev_sine_sum(int m, double eps) {
    Polynomial tm;
    {
        // Chebyshev coefficients in the monomial basis via the recurrence.
        std::vector<double> prev = {1.0};
        std::vector<double> cur = {0.0, 1.0};
        for (int j = 1; j < m; ++j) {
            std::vector<double> next(cur.size() + 1, 0.0);
            for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
            for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
            prev = std::move(cur);
            cur = std::move(next);
        }
        tm.coeffs = (m == 0) ? prev : cur;
    }
    // Collect sine amplitudes d_k of T_m(sin(x)/eps), odd k only.
    std::vector<double> d(m + 1, 0.0);
    auto binom = [](int a, int b) {
        double v = 1.0;
        for (int i = 0; i < b; ++i) v = v * (a - i) / (i + 1.0);
        return v;
    };
    for (int j = 1; j <= m; j += 2) {
        const double tj = (j < static_cast<int>(tm.coeffs.size())) ? tm.coeffs[j] : 0.0;
        if (tj == 0.0) continue;
        const double scale = tj * std::pow(eps, -j) * std::pow(2.0, 1.0 - j);
        for (int k = 1; k <= j; k += 2) {
            const int half = (j - k) / 2;
            const int parity = (j - 1) / 2 + half;
            const double sign = (parity % 2 == 0) ? 1.0 : -1.0;
            d[k] += scale * sign * binom(j, half);
        }
    }
    std::vector<cplx> exps, coeffs;
    for (int k = 1; k <= m; k += 2) {
        // d_k sin(k eps t) = d_k/(2i) e^{ik eps t} - d_k/(2i) e^{-ik eps t}
        const cplx c = d[k] / (2.0 * I);
        exps.push_back(I * (k * eps));
        coeffs.push_back(c);
        exps.push_back(-I * (k * eps));
        coeffs.push_back(-c);
    }
    return ExpSum(std::move(exps), std::move(coeffs));
}

}  // namespace

WitnessResult witness(TheoremId id, int n, const Extras& extras) {
    if (n < 1) throw ArgumentError("n must be >= 1");
    switch (id) {
        case TheoremId::T2_6:
            return polynomial_kernel_witness(n, Functional::point(0.0),
                                             rhs_bound(TheoremId::T2_6, n));
        case TheoremId::T5_3:
        case TheoremId::T6_1:
            return polynomial_kernel_witness(n, Functional::deriv(0.0),
                                             rhs_bound(TheoremId::T5_3, n));
        case TheoremId::T7_1: {
            // Centre kernel of the orthonormal Legendre system, shifted to
            // [0,1]; odd indices vanish at the centre.
            WitnessResult w;
            Polynomial q{{0.0}};
            double diag = 0.0;
            for (int k = 0; k < n; ++k) {
                const double pk0 = legendre_at_zero(k);
                if (pk0 == 0.0) continue;
                const Polynomial pk = shifted_legendre(k);
                const double scale = (2.0 * k + 1.0) / 2.0 * pk0;
                if (q.coeffs.size() < pk.coeffs.size()) q.coeffs.resize(pk.coeffs.size(), 0.0);
                for (std::size_t i = 0; i < pk.coeffs.size(); ++i)
                    q.coeffs[i] += scale * pk.coeffs[i];
                diag += legendre_shifted(k).sq_at_0_sym;
            }
            w.poly_witness = std::move(q);
            w.achieved_ratio = std::sqrt(2.0 * diag);
            Extras lower = extras;
            lower.lower = true;
            if (!lower.y) lower.y = 0.5;
            w.bound = rhs_bound(TheoremId::T7_1, n, nullptr, lower);
            return w;
        }
        case TheoremId::T8_1: {
            const double lambda = extras.lambda.value_or(5.0);
            if (!(lambda > 0.0)) throw ArgumentError("lambda must be positive");
            WitnessResult w;
            ExpSum f = [&]() {
                if (n == 1) return ExpSum({I * lambda}, {cplx(1.0)});
                if (lambda >= n || n < 3) return sine_sum(lambda);
                int m = (n - 1) / 2;  // largest odd m with 2m+1 <= n
                if (m % 2 == 0) --m;
                return chebyshev_sine_sum(m, 1e-3);
            }();
            const double deriv0 = std::abs(eval(differentiate(f), 0.0));
            const double sup = sup_norm(f, -1.0, 1.0).value;
            w.achieved_ratio = deriv0 / sup;
            const double lambda_eff = f.exponents().max_abs();
            w.bound = 0.25 * (std::max(lambda, lambda_eff) + n - 3.0);
            w.exp_witness = std::move(f);
            return w;
        }
        case TheoremId::T9_2: {
            WitnessResult w;
            w.poly_witness = shifted_chebyshev(n);
            double t, dt;
            chebyshev_eval(n, -1.0, t, dt);
            auto abs_q = [&](double x) {
                double v, dv;
                chebyshev_eval(n, 2.0 * x - 1.0, v, dv);
                return std::abs(v);
            };
            const double sup = sup_norm(abs_q, 0.0, 1.0).value;
            w.achieved_ratio = 2.0 * std::abs(dt) / sup;
            w.bound = rhs_bound(TheoremId::T9_2, n);
            return w;
        }
        default:
            throw ArgumentError("no witness construction for " + to_string(id));
    }
}

}  // namespace expsum
