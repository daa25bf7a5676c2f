#include <doctest.h>

#include <cmath>
#include <random>

#include "expsum/linalg.hpp"

using namespace expsum;

namespace {

HermitianMatrix hilbert(int n) {
    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) h.set(i, j, 1.0 / (i + j + 1.0));
    return h;
}

HermitianMatrix random_hermitian(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> e(static_cast<std::size_t>(n) * n);
    for (cplx& z : e) z = cplx(g(rng), g(rng));
    return HermitianMatrix::from_entries(n, e);
}

HermitianMatrix random_spd(std::mt19937_64& rng, int n) {
    // B = M M* + I keeps the condition moderate.
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<std::vector<cplx>> m(n, std::vector<cplx>(n));
    for (auto& row : m)
        for (cplx& z : row) z = cplx(g(rng), g(rng));
    std::vector<cplx> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = (i == j) ? cplx(1.0) : cplx(0.0);
            for (int k = 0; k < n; ++k) s += m[i][k] * std::conj(m[j][k]);
            e[static_cast<std::size_t>(i) * n + j] = s;
        }
    return HermitianMatrix::from_entries(n, e);
}

double rayleigh(const HermitianMatrix& a, const std::vector<cplx>& u) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        cplx row = 0.0;
        for (int j = 0; j < a.dim(); ++j) row += a(i, j) * u[j];
        s += (std::conj(u[i]) * row).real();
    }
    return s;
}

}  // namespace

TEST_CASE("cholesky") {
    HermitianMatrix id(3);
    for (int i = 0; i < 3; ++i) id.set(i, i, 1.0);
    const CholeskyFactor f = cholesky(id);
    for (int i = 0; i < 3; ++i) CHECK(f.l[static_cast<std::size_t>(i) * 3 + i] == cplx(1.0));

    HermitianMatrix m(2);
    m.set(0, 0, 2.0);
    m.set(0, 1, 1.0);
    m.set(1, 1, 2.0);
    const CholeskyFactor g = cholesky(m);
    CHECK(g.l[0].real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(g.l[2].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(g.l[3].real() == doctest::Approx(std::sqrt(1.5)));

    // Reconstruction of the 3x3 Hilbert matrix.
    const HermitianMatrix h = hilbert(3);
    const CholeskyFactor fh = cholesky(h);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 3; ++k)
                s += fh.l[static_cast<std::size_t>(i) * 3 + k] *
                     std::conj(fh.l[static_cast<std::size_t>(j) * 3 + k]);
            CHECK(std::abs(s - h(i, j)) <= 1e-14);
        }

    HermitianMatrix bad(2);
    bad.set(0, 0, 1.0);
    bad.set(0, 1, 2.0);
    bad.set(1, 1, 1.0);
    CHECK_THROWS_AS(cholesky(bad), NotPositiveDefinite);
}

TEST_CASE("quad_form_inv on the Hilbert matrix") {
    HermitianMatrix id(3);
    for (int i = 0; i < 3; ++i) id.set(i, i, 1.0);
    const std::vector<cplx> ones = {1.0, 1.0, 1.0};
    CHECK(quad_form_inv(id, ones) == doctest::Approx(3.0));

    const HermitianMatrix h = hilbert(3);
    CHECK(quad_form_inv(h, ones) == doctest::Approx(9.0).epsilon(1e-12));
    const std::vector<cplx> e1 = {0.0, 1.0, 0.0};
    CHECK(quad_form_inv(h, e1) == doctest::Approx(192.0).epsilon(1e-12));

    std::vector<cplx> c;
    quad_form_inv(h, ones, &c);
    CHECK(c[0].real() == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(c[1].real() == doctest::Approx(-24.0).epsilon(1e-9));
    CHECK(c[2].real() == doctest::Approx(30.0).epsilon(1e-9));
}

TEST_CASE("quad_form_inv is the Cauchy-Schwarz extremum") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g(0.0, 1.0);
    const int n = 5;
    const HermitianMatrix G = random_spd(rng, n);
    std::vector<cplx> v(n);
    for (cplx& z : v) z = cplx(g(rng), g(rng));
    std::vector<cplx> c;
    const double k = quad_form_inv(G, v, &c);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<cplx> u(n);
        for (cplx& z : u) z = cplx(g(rng), g(rng));
        cplx vu = 0.0;
        for (int i = 0; i < n; ++i) vu += std::conj(v[i]) * u[i];
        const double bound = std::norm(vu) / rayleigh(G, u);
        CHECK(k >= bound * (1.0 - 1e-9));
    }
    cplx vc = 0.0;
    for (int i = 0; i < n; ++i) vc += std::conj(v[i]) * c[i];
    CHECK(std::norm(vc) / rayleigh(G, c) == doctest::Approx(k).epsilon(1e-9));
}

TEST_CASE("eigen_hermitian") {
    HermitianMatrix d(3);
    d.set(0, 0, 3.0);
    d.set(1, 1, 1.0);
    d.set(2, 2, 2.0);
    const EigenResult e = eigen_hermitian(d);
    CHECK(e.values[0] == doctest::Approx(1.0));
    CHECK(e.values[1] == doctest::Approx(2.0));
    CHECK(e.values[2] == doctest::Approx(3.0));

    HermitianMatrix x(2);
    x.set(0, 1, 1.0);
    const EigenResult e2 = eigen_hermitian(x);
    CHECK(e2.values[0] == doctest::Approx(-1.0));
    CHECK(e2.values[1] == doctest::Approx(1.0));

    // Largest Hilbert eigenvalue against a characteristic-polynomial oracle.
    const HermitianMatrix h = hilbert(3);
    auto det = [&](double lam) {
        const double a = h(0, 0).real() - lam, b = h(0, 1).real(), c = h(0, 2).real();
        const double d2 = h(1, 1).real() - lam, e3 = h(1, 2).real();
        const double f = h(2, 2).real() - lam;
        return a * (d2 * f - e3 * e3) - b * (b * f - e3 * c) + c * (b * e3 - d2 * c);
    };
    double lo = 1.0, hi = 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (det(lo) * det(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    const double oracle = 0.5 * (lo + hi);
    CHECK(eigen_hermitian(h).values[2] == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(oracle == doctest::Approx(1.408319).epsilon(1e-6));
}

TEST_CASE("eigen reconstruction and unitary invariance") {
    std::mt19937_64 rng(31);
    for (int n : {2, 5, 8}) {
        const HermitianMatrix a = random_hermitian(rng, n);
        const EigenResult e = eigen_hermitian(a);
        // Reconstruct V D V*.
        double err = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx s = 0.0;
                for (int k = 0; k < n; ++k)
                    s += e.vectors[k][i] * e.values[k] * std::conj(e.vectors[k][j]);
                err += std::norm(s - a(i, j));
            }
        CHECK(std::sqrt(err) <= 1e-12 * a.frob_norm());

        // Conjugating by the eigenvector unitary of another matrix leaves
        // eigenvalues unchanged.
        const EigenResult u = eigen_hermitian(random_hermitian(rng, n));
        std::vector<cplx> entries(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx s = 0.0;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        s += std::conj(u.vectors[i][p]) * a(p, q) * u.vectors[j][q];
                entries[static_cast<std::size_t>(i) * n + j] = s;
            }
        const EigenResult e2 = eigen_hermitian(HermitianMatrix::from_entries(n, entries));
        for (int k = 0; k < n; ++k)
            CHECK(e2.values[k] == doctest::Approx(e.values[k]).epsilon(1e-10));
    }
}

TEST_CASE("gen_eigen_max") {
    std::mt19937_64 rng(41);
    const HermitianMatrix a5 = random_hermitian(rng, 5);
    HermitianMatrix id(5);
    for (int i = 0; i < 5; ++i) id.set(i, i, 1.0);
    CHECK(gen_eigen_max(a5, id).value ==
          doctest::Approx(eigen_hermitian(a5).values.back()).epsilon(1e-12));

    HermitianMatrix da(2), db(2);
    da.set(0, 0, 1.0);
    da.set(1, 1, 4.0);
    db.set(0, 0, 1.0);
    db.set(1, 1, 2.0);
    CHECK(gen_eigen_max(da, db).value == doctest::Approx(2.0));

    HermitianMatrix a(2), b(2);
    a.set(0, 0, 2.0);
    a.set(0, 1, 1.0);
    a.set(1, 1, 2.0);
    b.set(0, 0, 1.0);
    b.set(1, 1, 2.0);
    const GenEigenResult ge = gen_eigen_max(a, b);
    CHECK(ge.value == doctest::Approx((3.0 + std::sqrt(3.0)) / 2.0).epsilon(1e-12));

    // Residual bound on the well-conditioned pair.
    double resid = 0.0, na = 0.0, nb = 0.0;
    for (int i = 0; i < 2; ++i) {
        cplx ra = 0.0, rb = 0.0;
        for (int j = 0; j < 2; ++j) {
            ra += a(i, j) * ge.vector[j];
            rb += b(i, j) * ge.vector[j];
        }
        resid += std::norm(ra - ge.value * rb);
    }
    na = a.frob_norm();
    nb = b.frob_norm();
    CHECK(std::sqrt(resid) <= 1e-10 * (na + ge.value * nb) *
                                  std::sqrt(std::norm(ge.vector[0]) + std::norm(ge.vector[1])));
}

TEST_CASE("gen_eigen_max dominates Rayleigh quotients") {
    std::mt19937_64 rng(43);
    std::normal_distribution<double> g(0.0, 1.0);
    const int n = 6;
    const HermitianMatrix a = random_hermitian(rng, n);
    const HermitianMatrix b = random_spd(rng, n);
    const double top = gen_eigen_max(a, b).value;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<cplx> u(n);
        for (cplx& z : u) z = cplx(g(rng), g(rng));
        CHECK(top >= rayleigh(a, u) / rayleigh(b, u) - 1e-9 * std::abs(top));
    }
}

TEST_CASE("condition") {
    HermitianMatrix id(3);
    for (int i = 0; i < 3; ++i) id.set(i, i, 1.0);
    CHECK(condition(id) == doctest::Approx(1.0));

    HermitianMatrix d(2);
    d.set(0, 0, 1.0);
    d.set(1, 1, 1e-6);
    CHECK(condition(d) == doctest::Approx(1e6).epsilon(1e-10));

    CHECK(condition(hilbert(6)) == doctest::Approx(1.4951e7).epsilon(1e-3));

    HermitianMatrix z(2);
    z.set(0, 0, 1.0);
    z.set(1, 1, -1.0);
    CHECK(std::isinf(condition(z)));

    // The guard trips past 1e12.
    HermitianMatrix bad(2);
    bad.set(0, 0, 1.0);
    bad.set(1, 1, 1e-13);
    CHECK_THROWS_AS(quad_form_inv(bad, {1.0, 1.0}), ConditionExceeded);
    try {
        quad_form_inv(bad, {1.0, 1.0});
    } catch (const ConditionExceeded& e) {
        CHECK(e.condition == doctest::Approx(1e13).epsilon(1e-6));
    }
}
