#include <doctest.h>

#include <cmath>
#include <random>

#include "expsum/extremal.hpp"
#include "expsum/quad.hpp"

using namespace expsum;

namespace {

const cplx I(0.0, 1.0);

double gram_norm(const HermitianMatrix& g, const std::vector<cplx>& a) {
    double s = 0.0;
    for (int i = 0; i < g.dim(); ++i) {
        cplx row = 0.0;
        for (int j = 0; j < g.dim(); ++j) row += g(i, j) * a[j];
        s += (std::conj(a[i]) * row).real();
    }
    return std::sqrt(std::max(s, 0.0));
}

ExponentSet random_tn(std::mt19937_64& rng, int n, double range) {
    std::uniform_real_distribution<double> u(-range, range);
    while (true) {
        std::vector<double> im(n);
        for (double& x : im) x = u(rng);
        std::sort(im.begin(), im.end());
        bool ok = true;
        for (int j = 1; j < n; ++j)
            if (im[j] - im[j - 1] < 1e-2) ok = false;
        if (!ok) continue;
        std::vector<cplx> e(n);
        for (int j = 0; j < n; ++j) e[j] = cplx(0.0, im[j]);
        return ExponentSet(std::move(e));
    }
}

std::vector<cplx> random_coeffs(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> a(n);
    for (cplx& z : a) z = cplx(g(rng), g(rng));
    return a;
}

}  // namespace

TEST_CASE("gram entries") {
    const HermitianMatrix g1 = gram(ExponentSet({cplx(0.0)}), NormSpec::interval(0, 1));
    CHECK(g1.dim() == 1);
    CHECK(g1(0, 0).real() == doctest::Approx(1.0));

    const HermitianMatrix g3 =
        gram(ExponentSet({cplx(0.0), cplx(1.0), cplx(2.0)}), NormSpec::interval(0, 1));
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            const double s = j + k;
            const double expect = (s == 0.0) ? 1.0 : (std::exp(s) - 1.0) / s;
            CHECK(g3(j, k).real() == doctest::Approx(expect).epsilon(1e-14));
            CHECK(g3(j, k).imag() == 0.0);
        }

    // Purely imaginary exponents, half-line with the e^{-t} weight:
    // a Cauchy-type matrix on the imaginary gaps.
    const double mu[3] = {1.0, 2.0, 4.0};
    const ExponentSet tn({I * mu[0], I * mu[1], I * mu[2]});
    const HermitianMatrix gh = gram(tn, NormSpec::halfline(1.0));
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            const cplx expect = 1.0 / (cplx(1.0) + I * (mu[j] - mu[k]));
            CHECK(std::abs(gh(j, k) - expect) <= 1e-15);
        }

    // Divergent half-line request.
    CHECK_THROWS_AS(gram(ExponentSet({cplx(1.0)}), NormSpec::halfline(1.0)),
                    DivergentIntegral);
}

TEST_CASE("gram realizes the weighted L2 norm") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        const ExponentSet exps = random_tn(rng, 4, 10.0);
        const std::vector<cplx> a = random_coeffs(rng, 4);
        const ExpSum f(exps, a);
        for (double c : {0.0, 3.0}) {
            const NormSpec spec = NormSpec::interval(0.0, 1.0, c, 2.0);
            const double via_quad = lq_norm(f, spec);
            const double via_gram = gram_norm(gram(exps, spec), a);
            CHECK(via_quad == doctest::Approx(via_gram).epsilon(1e-9));
        }
    }
}

TEST_CASE("monomial gram") {
    const HermitianMatrix h = monomial_gram({cplx(0.0), cplx(1.0), cplx(2.0)});
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            CHECK(h(j, k).real() == doctest::Approx(1.0 / (j + k + 1.0)));

    const HermitianMatrix one = monomial_gram({cplx(0.0)});
    CHECK(one(0, 0).real() == doctest::Approx(1.0));

    const HermitianMatrix gi = monomial_gram({I, -I});
    CHECK(std::abs(gi(1, 0) - 1.0 / cplx(1.0, 2.0)) <= 1e-15);
    CHECK(std::abs(gi(0, 1) - 1.0 / cplx(1.0, -2.0)) <= 1e-15);

    CHECK_THROWS_AS(monomial_gram({cplx(-0.6), cplx(0.0)}), DivergentIntegral);
}

TEST_CASE("christoffel point and derivative kernels on polynomial spaces") {
    const ExtremalResult c1 = christoffel_sup(ExponentSet({cplx(0.0)}),
                                              NormSpec::interval(0, 1),
                                              Functional::point(0.5));
    CHECK(c1.value == doctest::Approx(1.0));

    const MonomialSystem p3{{cplx(0.0), cplx(1.0), cplx(2.0)}};
    CHECK(christoffel_sup(p3, Functional::point(1.0)).value ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(christoffel_sup(p3, Functional::deriv(0.0)).value ==
          doctest::Approx(std::sqrt(192.0)).epsilon(1e-12));
}

TEST_CASE("kernel dominance and witness achievement on complex systems") {
    std::mt19937_64 rng(13);
    const ExponentSet exps = random_tn(rng, 4, 8.0);
    const NormSpec spec = NormSpec::interval(0.0, 1.0);
    const Functional fn = Functional::point(0.3);
    const HermitianMatrix g = gram(exps, spec);
    const ExtremalResult r = christoffel_sup(exps, spec, fn);

    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<cplx> a = random_coeffs(rng, 4);
        const ExpSum f(exps, a);
        const double lhs = std::abs(eval(f, fn.y));
        CHECK(lhs <= r.value * gram_norm(g, a) * (1.0 + 1e-9));
    }

    // The witness is unit norm and attains the ratio.
    CHECK(gram_norm(g, r.witness_coeffs) == doctest::Approx(1.0).epsilon(1e-10));
    const ExpSum w(exps, r.witness_coeffs);
    CHECK(std::abs(eval(w, fn.y)) == doctest::Approx(r.value).epsilon(1e-8));
}

TEST_CASE("kernel scaling law under linear substitution") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 5; ++trial) {
        const ExponentSet exps = random_tn(rng, 3, 5.0);
        const double L = 3.0;
        std::vector<cplx> scaled(exps.size());
        for (std::size_t j = 0; j < exps.size(); ++j) scaled[j] = L * exps[j];
        const double lhs =
            christoffel_sup(exps, NormSpec::interval(0.0, L), Functional::point(0.0)).value;
        const double rhs = christoffel_sup(ExponentSet(scaled), NormSpec::interval(0.0, 1.0),
                                           Functional::point(0.0))
                               .value /
                           std::sqrt(L);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
}

TEST_CASE("markov ratios") {
    CHECK(markov_sup(ExponentSet({5.0 * I}), NormSpec::interval(0, 1)).value ==
          doctest::Approx(5.0).epsilon(1e-12));
    CHECK(markov_sup(ExponentSet({cplx(-2.0)}), NormSpec::halfline(1.0)).value ==
          doctest::Approx(2.0).epsilon(1e-12));

    // Two-exponent case against a dense sweep of coefficient ratios.
    const ExponentSet e2({I, -I});
    const NormSpec spec = NormSpec::interval(0.0, 1.0);
    const double computed = markov_sup(e2, spec).value;
    // |f|^2 integrals have a closed scalar form: f = a1 e^{-it} + a2 e^{it}.
    auto ratio = [&](cplx a1, cplx a2) {
        auto norm2 = [&](cplx b1, cplx b2) {
            const cplx cross = b1 * std::conj(b2) * exp_moment(-2.0 * I, 0.0, 1.0);
            return std::norm(b1) + std::norm(b2) + 2.0 * cross.real();
        };
        return std::sqrt(norm2(-I * a1, I * a2) / norm2(a1, a2));
    };
    double best = 0.0;
    const int grid = 314;
    for (int i = 0; i <= grid; ++i) {
        const double theta = i * std::numbers::pi / (2.0 * grid);
        for (int j = 0; j < 2 * grid; ++j) {
            const double phi = j * std::numbers::pi / grid;
            best = std::max(best, ratio(std::cos(theta),
                                        std::sin(theta) * std::exp(I * phi)));
        }
    }
    CHECK(computed == doctest::Approx(best).epsilon(1e-4));
    CHECK(computed >= best - 1e-12);
}

TEST_CASE("truncation ratio") {
    const ExponentSet zero({cplx(0.0)});
    CHECK(truncation_sup(zero, 9.0) ==
          doctest::Approx(1.0 / (1.0 - std::exp(-9.0))).epsilon(1e-10));
    CHECK(truncation_sup(zero, 200.0) == doctest::Approx(1.0).epsilon(1e-12));

    const ExponentSet e3({cplx(0.0), cplx(-1.0), cplx(-2.0)});
    const double v = truncation_sup(e3, 27.0);
    CHECK(v >= 1.0 - 1e-12);
    CHECK(v <= 1.0 + 8190.0 * std::exp(-0.3));

    // Non-increasing in the horizon.
    double prev = truncation_sup(e3, 5.0);
    for (double t : {10.0, 20.0, 40.0, 80.0}) {
        const double cur = truncation_sup(e3, t);
        CHECK(cur <= prev * (1.0 + 1e-12));
        prev = cur;
    }

    CHECK_THROWS_AS(truncation_sup(ExponentSet({cplx(0.5)}), 9.0), WrongClass);
}

TEST_CASE("orthonormal basis") {
    HermitianMatrix id(3);
    for (int i = 0; i < 3; ++i) id.set(i, i, 1.0);
    const auto rows_id = orthonormal_basis(id);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(rows_id[i][j] - (i == j ? cplx(1.0) : cplx(0.0))) <= 1e-15);

    const auto rows01 = orthonormal_basis(monomial_gram({cplx(0.0), cplx(1.0)}));
    CHECK(rows01[1][0].real() == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
    CHECK(rows01[1][1].real() == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));

    // Shifted Legendre endpoint values: row sums are sqrt(2k+1).
    const int n = 6;
    std::vector<cplx> powers(n);
    for (int j = 0; j < n; ++j) powers[j] = cplx(static_cast<double>(j));
    const HermitianMatrix g = monomial_gram(powers);
    const auto rows = orthonormal_basis(g);
    for (int k = 0; k < n; ++k) {
        cplx at_one = 0.0;
        for (int j = 0; j < n; ++j) at_one += rows[k][j];
        CHECK(std::abs(at_one) == doctest::Approx(std::sqrt(2.0 * k + 1.0)).epsilon(1e-9));
        CHECK(rows[k][k].real() > 0.0);
        for (int j = k + 1; j < n; ++j) CHECK(std::abs(rows[k][j]) <= 1e-12);
    }

    // C G C* = I.
    double err = 0.0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            cplx s = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    s += rows[k][i] * g(i, j) * std::conj(rows[l][j]);
            s -= (k == l) ? 1.0 : 0.0;
            err += std::norm(s);
        }
    CHECK(std::sqrt(err) <= 1e-10);

    // Kernel diagonal identity at the right endpoint.
    double diag = 0.0;
    for (int k = 0; k < n; ++k) {
        cplx at_one = 0.0;
        for (int j = 0; j < n; ++j) at_one += std::conj(rows[k][j]);
        diag += std::norm(at_one);
    }
    const double closed = point_bound_closed(MonomialSystem{powers});
    CHECK(diag == doctest::Approx(closed * closed).epsilon(1e-8));
}

TEST_CASE("closed point bounds match the kernel at the sharp point") {
    CHECK(point_bound_closed(MonomialSystem{{cplx(0.0), cplx(1.0), cplx(2.0)}}) ==
          doctest::Approx(3.0));
    CHECK(point_bound_closed(MonomialSystem{{cplx(0.0)}}) == doctest::Approx(1.0));

    // Purely imaginary exponents: sqrt(n) in the half-line weighted norm.
    const ExponentSet tn({I, 2.0 * I, 5.0 * I, 7.0 * I});
    CHECK(point_bound_closed(tn) == doctest::Approx(2.0));

    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> ure(-0.4, 1.5), uim(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<cplx> powers(4);
        for (cplx& z : powers) z = cplx(ure(rng), uim(rng));
        const MonomialSystem sys{powers};
        double closed;
        try {
            closed = point_bound_closed(sys);
        } catch (const ArgumentError&) {
            continue;
        }
        const double kernel = christoffel_sup(sys, Functional::point(1.0)).value;
        CHECK(kernel == doctest::Approx(closed).epsilon(1e-8));
    }

    CHECK_THROWS_AS(point_bound_closed(MonomialSystem{{cplx(-0.6)}}), ArgumentError);
    CHECK_THROWS_AS(point_bound_closed(ExponentSet({cplx(0.7)})), ArgumentError);
}

TEST_CASE("closed derivative bounds match the kernel at the sharp point") {
    CHECK(deriv_bound_closed(MonomialSystem{{cplx(0.0), cplx(1.0), cplx(2.0)}}) ==
          doctest::Approx(std::sqrt(192.0)));
    CHECK(deriv_bound_closed(MonomialSystem{{cplx(0.0)}}) == doctest::Approx(0.0));
    CHECK(deriv_bound_closed(MonomialSystem{{cplx(0.0), cplx(1.0)}}) ==
          doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ure(-0.3, 1.5), uim(-1.5, 1.5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<cplx> powers(3);
        for (cplx& z : powers) z = cplx(ure(rng), uim(rng));
        const MonomialSystem sys{powers};
        double closed;
        try {
            closed = deriv_bound_closed(sys);
        } catch (const ArgumentError&) {
            continue;
        }
        const double kernel = christoffel_sup(sys, Functional::deriv(1.0)).value;
        CHECK(kernel == doctest::Approx(closed).epsilon(1e-8));
    }
}

TEST_CASE("closed Markov bounds") {
    CHECK(markov_bound_closed(MarkovVariant::LaguerreImaginary,
                              {-2.0 * I, cplx(0.0), 2.0 * I}) ==
          doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-14));
    CHECK(markov_bound_closed(MarkovVariant::LaguerreImaginary, {7.0 * I}) ==
          doctest::Approx(7.0));
    CHECK(markov_bound_closed(MarkovVariant::LaguerreComplex, {cplx(0.0), cplx(0.25)}) ==
          doctest::Approx(0.25 + std::sqrt(0.5)).epsilon(1e-14));

    // Exact Markov ratios never exceed the closed bounds.
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> ure(-2.0, 0.4), uim(-5.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<cplx> e(3);
        for (cplx& z : e) z = cplx(ure(rng), uim(rng));
        ExponentSet exps(e);
        const double sup = markov_sup(exps, NormSpec::halfline(1.0)).value;
        const double bound =
            markov_bound_closed(MarkovVariant::LaguerreComplex, exps.values());
        CHECK(sup <= bound * (1.0 + 1e-9));
    }
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<cplx> p(3);
        std::uniform_real_distribution<double> upw(-0.4, 2.0);
        for (cplx& z : p) z = cplx(upw(rng), uim(rng));
        MonomialSystem sys{p};
        double sup;
        try {
            sup = markov_sup_monomial(sys).value;
        } catch (const Error&) {
            continue;
        }
        CHECK(sup <= markov_bound_closed(MarkovVariant::MuntzSum, p) * (1.0 + 1e-9));
        CHECK(sup <= markov_bound_closed(MarkovVariant::MuntzSplit, p) * (1.0 + 1e-9));
    }
}

TEST_CASE("comparison monotonicity at exterior points") {
    // Componentwise larger real exponent sets win at the right-exterior
    // point and lose at the left one.
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> base(-1.5, 1.0), shift(0.1, 0.8);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<cplx> lo(3), hi(3);
        double x = base(rng);
        for (int j = 0; j < 3; ++j) {
            x += 0.4 + shift(rng);
            lo[j] = cplx(x);
            hi[j] = cplx(x + shift(rng));
        }
        const NormSpec spec = NormSpec::interval(0.0, 0.5);
        const double right_lo =
            christoffel_sup(ExponentSet(lo), spec, Functional::point(1.0)).value;
        const double right_hi =
            christoffel_sup(ExponentSet(hi), spec, Functional::point(1.0)).value;
        CHECK(right_lo <= right_hi * (1.0 + 1e-8));
        const double left_lo =
            christoffel_sup(ExponentSet(lo), spec, Functional::point(0.0)).value;
        const double left_hi =
            christoffel_sup(ExponentSet(hi), spec, Functional::point(0.0)).value;
        CHECK(left_lo >= left_hi * (1.0 - 1e-8));
    }
}

TEST_CASE("degenerate derivative functional on constants") {
    // A single zero exponent has derivative zero everywhere: value 0, no error.
    const ExtremalResult r = christoffel_sup(ExponentSet({cplx(0.0)}),
                                             NormSpec::interval(0.0, 1.0),
                                             Functional::deriv(0.0));
    CHECK(r.value == doctest::Approx(0.0));
}

TEST_CASE("functional overflow guard") {
    const ExponentSet e({cplx(1.0)});
    CHECK_THROWS_AS(dual_vector(e, Functional::point(800.0)), OverflowGuard);
    const ExponentSet d({cplx(2.0)});
    CHECK_THROWS_AS(dual_vector(d, Functional::deriv(400.0)), OverflowGuard);
    // Derivative of constants is 0, not an error.
    const std::vector<cplx> v = dual_vector(ExponentSet({cplx(0.0)}), Functional::deriv(0.0));
    CHECK(v[0] == cplx(0.0));
}
