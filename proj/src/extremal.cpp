#include "expsum/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "expsum/quad.hpp"

namespace expsum {

namespace {

constexpr double kExpGuard = 700.0;  // past this, e^x overflows double range

void require_q2(const NormSpec& spec) {
    if (spec.q != 2.0)
        throw ArgumentError("Gram matrices are defined for q = 2 norms only");
}

}  // namespace

HermitianMatrix gram(const ExponentSet& exps, const NormSpec& spec) {
    require_q2(spec);
    const int n = static_cast<int>(exps.size());
    const double c = spec.weight_rate;
    HermitianMatrix g(n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            const cplx mu = exps[j] + std::conj(exps[k]) - c;
            const cplx v = spec.half_line ? exp_moment_halfline(mu)
                                          : exp_moment(mu, spec.a, spec.b);
            g.set(j, k, std::conj(v));
        }
    }
    return g;
}

HermitianMatrix monomial_gram(const std::vector<cplx>& powers) {
    const int n = static_cast<int>(powers.size());
    if (n == 0) throw ArgumentError("empty power set");
    HermitianMatrix g(n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            const cplx denom = powers[j] + std::conj(powers[k]) + 1.0;
            if (denom.real() <= 0.0)
                throw DivergentIntegral("monomial Gram requires Re(λ_j + conj λ_k) > -1");
            g.set(j, k, std::conj(1.0 / denom));
        }
    }
    return g;
}

std::vector<cplx> dual_vector(const ExponentSet& exps, const Functional& fn) {
    const double y = fn.y;
    std::vector<cplx> v(exps.size());
    for (std::size_t j = 0; j < exps.size(); ++j) {
        const cplx lam = exps[j];
        if (fn.kind == Functional::Kind::PointEval) {
            if (lam.real() * y > kExpGuard)
                throw OverflowGuard("point functional entry exceeds e^700");
            v[j] = std::exp(lam * y);
        } else {
            if (lam == cplx(0.0)) {
                v[j] = 0.0;
                continue;
            }
            if (std::log(std::abs(lam)) + lam.real() * y > kExpGuard)
                throw OverflowGuard("derivative functional entry exceeds e^700");
            v[j] = lam * std::exp(lam * y);
        }
    }
    return v;
}

std::vector<cplx> dual_vector(const MonomialSystem& sys, const Functional& fn) {
    const double y = fn.y;
    if (y < 0.0) throw ArgumentError("Müntz functionals are defined for y >= 0");
    std::vector<cplx> v(sys.powers.size());
    for (std::size_t j = 0; j < sys.powers.size(); ++j) {
        const cplx lam = sys.powers[j];
        if (fn.kind == Functional::Kind::PointEval) {
            if (y == 0.0) {
                // x^λ at 0: 1 for the constant, 0 for Re λ > 0.
                if (lam == cplx(0.0))
                    v[j] = 1.0;
                else if (lam.real() > 0.0)
                    v[j] = 0.0;
                else
                    throw ArgumentError("x^λ unbounded at 0 for Re λ < 0");
                continue;
            }
            const double logmag = lam.real() * std::log(y);
            if (logmag > kExpGuard) throw OverflowGuard("point functional entry exceeds e^700");
            v[j] = std::exp(lam * std::log(y));
        } else {
            if (lam == cplx(0.0)) {
                v[j] = 0.0;
                continue;
            }
            if (y == 0.0) {
                // λ x^{λ-1} at 0.
                if (lam == cplx(1.0))
                    v[j] = 1.0;
                else if (lam.real() > 1.0)
                    v[j] = 0.0;
                else
                    throw ArgumentError("derivative of x^λ unbounded at 0 for Re λ < 1");
                continue;
            }
            const double logmag = std::log(std::abs(lam)) + (lam.real() - 1.0) * std::log(y);
            if (logmag > kExpGuard)
                throw OverflowGuard("derivative functional entry exceeds e^700");
            v[j] = lam * std::exp((lam - 1.0) * std::log(y));
        }
    }
    return v;
}

ExtremalResult christoffel_sup(const HermitianMatrix& g, const std::vector<cplx>& dual) {
    ExtremalResult r;
    r.gram_condition = condition(g);
    // L(f) = Σ a_j v_j is linear, not conjugate-linear, so the kernel value
    // is u* G^{-1} u with u the conjugated dual vector.
    std::vector<cplx> u(dual.size());
    for (std::size_t i = 0; i < dual.size(); ++i) u[i] = std::conj(dual[i]);
    std::vector<cplx> c;
    const double k = quad_form_inv(g, u, &c);
    r.value = std::sqrt(k);
    // Normalize the witness to unit norm, a*Ga = 1.
    double cgc = 0.0;
    const int n = g.dim();
    for (int i = 0; i < n; ++i) {
        cplx row = 0.0;
        for (int j = 0; j < n; ++j) row += g(i, j) * c[j];
        cgc += (std::conj(c[i]) * row).real();
    }
    r.witness_coeffs.assign(c.begin(), c.end());
    if (cgc > 0.0) {
        const double scale = 1.0 / std::sqrt(cgc);
        for (cplx& z : r.witness_coeffs) z *= scale;
    }
    return r;
}

ExtremalResult christoffel_sup(const ExponentSet& exps, const NormSpec& spec,
                               const Functional& fn) {
    return christoffel_sup(gram(exps, spec), dual_vector(exps, fn));
}

ExtremalResult christoffel_sup(const MonomialSystem& sys, const Functional& fn) {
    return christoffel_sup(monomial_gram(sys.powers), dual_vector(sys, fn));
}

namespace {

ExtremalResult markov_from_gram(const HermitianMatrix& g, const std::vector<cplx>& lambdas) {
    const int n = g.dim();
    std::vector<cplx> entries(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            entries[static_cast<std::size_t>(j) * n + k] =
                std::conj(lambdas[j]) * g(j, k) * lambdas[k];
    const HermitianMatrix a = HermitianMatrix::from_entries(n, entries, "derivative energy");
    const GenEigenResult ge = gen_eigen_max(a, g);
    ExtremalResult r;
    r.value = std::sqrt(std::max(ge.value, 0.0));
    r.gram_condition = condition(g);
    r.witness_coeffs = ge.vector;
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
        cplx row = 0.0;
        for (int j = 0; j < n; ++j) row += g(i, j) * r.witness_coeffs[j];
        norm2 += (std::conj(r.witness_coeffs[i]) * row).real();
    }
    if (norm2 > 0.0) {
        const double scale = 1.0 / std::sqrt(norm2);
        for (cplx& z : r.witness_coeffs) z *= scale;
    }
    return r;
}

}  // namespace

ExtremalResult markov_sup(const ExponentSet& exps, const NormSpec& spec) {
    return markov_from_gram(gram(exps, spec), exps.values());
}

ExtremalResult markov_sup_monomial(const MonomialSystem& sys) {
    return markov_from_gram(monomial_gram(sys.powers), sys.powers);
}

double truncation_sup(const ExponentSet& exps, double t_horizon) {
    if (!(t_horizon > 0.0)) throw ArgumentError("truncation horizon must be positive");
    if (!classify(exps).en_minus)
        throw WrongClass("truncation ratio requires Re λ_j <= 0 for every exponent");
    const HermitianMatrix g_inf = gram(exps, NormSpec::halfline(1.0));
    const HermitianMatrix g_fin = gram(exps, NormSpec::interval(0.0, t_horizon, 1.0));
    return gen_eigen_max(g_inf, g_fin).value;
}

std::vector<std::vector<cplx>> orthonormal_basis(const HermitianMatrix& g) {
    const CholeskyFactor f = cholesky(g);
    guard_condition(g);
    const int n = g.dim();
    // C = L^{-1} by forward substitution on the identity, one column at a time.
    std::vector<std::vector<cplx>> rows(n, std::vector<cplx>(n, cplx(0.0)));
    for (int j = 0; j < n; ++j) {
        std::vector<cplx> e(n, cplx(0.0));
        e[j] = 1.0;
        const std::vector<cplx> col = f.solve_lower(e);
        for (int i = 0; i < n; ++i) rows[i][j] = col[i];
    }
    return rows;
}

double point_bound_closed(const MonomialSystem& sys) {
    double s = 0.0;
    for (const cplx& lam : sys.powers) {
        if (!(lam.real() > -0.5))
            throw ArgumentError("closed point bound requires Re λ > -1/2");
        s += 1.0 + 2.0 * lam.real();
    }
    return std::sqrt(s);
}

double point_bound_closed(const ExponentSet& exps) {
    double s = 0.0;
    for (const cplx& lam : exps.values()) {
        if (!(lam.real() < 0.5))
            throw ArgumentError("closed point bound requires Re λ < 1/2");
        s += 1.0 - 2.0 * lam.real();
    }
    return std::sqrt(s);
}

double deriv_bound_closed(const MonomialSystem& sys) {
    double s = 0.0;
    double prefix = 0.0;  // Σ_{j<k} (1 + 2 Re λ_j)
    for (const cplx& lam : sys.powers) {
        if (!(lam.real() > -0.5))
            throw ArgumentError("closed derivative bound requires Re λ > -1/2");
        s += (1.0 + 2.0 * lam.real()) * std::norm(lam + prefix);
        prefix += 1.0 + 2.0 * lam.real();
    }
    return std::sqrt(s);
}

double deriv_bound_closed(const ExponentSet& exps) {
    // Image of the Müntz form under x = e^{-t}; powers are -λ_j.
    double s = 0.0;
    double prefix = 0.0;
    for (const cplx& lam : exps.values()) {
        if (!(lam.real() < 0.5))
            throw ArgumentError("closed derivative bound requires Re λ < 1/2");
        s += (1.0 - 2.0 * lam.real()) * std::norm(-lam + prefix);
        prefix += 1.0 - 2.0 * lam.real();
    }
    return std::sqrt(s);
}

double markov_bound_closed(MarkovVariant variant, const std::vector<cplx>& lambdas) {
    const std::size_t n = lambdas.size();
    if (n == 0) throw ArgumentError("empty exponent list");
    double max_abs = 0.0;
    for (const cplx& z : lambdas) max_abs = std::max(max_abs, std::abs(z));

    auto cross_sum = [&](auto weight) {
        // Σ_j w_j Σ_{k>j} w_k via suffix sums.
        double total = 0.0;
        double suffix = 0.0;
        for (std::size_t j = n; j-- > 0;) {
            total += weight(lambdas[j]) * suffix;
            suffix += weight(lambdas[j]);
        }
        return total;
    };

    switch (variant) {
        case MarkovVariant::LaguerreComplex: {
            for (const cplx& z : lambdas)
                if (!(z.real() < 0.5))
                    throw ArgumentError("Laguerre Markov bound requires Re λ < 1/2");
            return max_abs + std::sqrt(cross_sum([](const cplx& z) {
                       return 1.0 - 2.0 * z.real();
                   }));
        }
        case MarkovVariant::LaguerreImaginary: {
            for (const cplx& z : lambdas)
                if (std::abs(z.real()) > kImagTol)
                    throw ArgumentError("this Markov bound requires purely imaginary exponents");
            const double nn = static_cast<double>(n);
            return max_abs + std::sqrt(nn * (nn - 1.0) / 2.0);
        }
        case MarkovVariant::HalflinePlain: {
            for (const cplx& z : lambdas)
                if (!(z.real() < 0.0))
                    throw ArgumentError("plain half-line Markov bound requires Re λ < 0");
            double max_shift = 0.0;
            for (const cplx& z : lambdas)
                max_shift = std::max(max_shift, std::abs(z + 0.5));
            return 0.5 + max_shift +
                   2.0 * std::sqrt(cross_sum([](const cplx& z) { return z.real(); }));
        }
        case MarkovVariant::MuntzSum: {
            double sq = 0.0;
            for (const cplx& z : lambdas) {
                if (!(z.real() > -0.5))
                    throw ArgumentError("Müntz Markov bound requires Re λ > -1/2");
                sq += std::norm(z);
            }
            return std::sqrt(sq + cross_sum([](const cplx& z) {
                       return 1.0 + 2.0 * z.real();
                   }));
        }
        case MarkovVariant::MuntzSplit: {
            for (const cplx& z : lambdas)
                if (!(z.real() > -0.5))
                    throw ArgumentError("Müntz Markov bound requires Re λ > -1/2");
            return max_abs + std::sqrt(cross_sum([](const cplx& z) {
                       return 1.0 + 2.0 * z.real();
                   }));
        }
    }
    throw ArgumentError("unknown Markov variant");
}

}  // namespace expsum
