#include "expsum/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace expsum {

HermitianMatrix::HermitianMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, cplx(0.0)) {
    if (n < 1) throw ArgumentError("matrix dimension must be >= 1");
}

HermitianMatrix HermitianMatrix::from_entries(int n, const std::vector<cplx>& entries,
                                              std::string meta) {
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw ArgumentError("entry count does not match dimension");
    HermitianMatrix m(n);
    m.meta_ = std::move(meta);
    for (int i = 0; i < n; ++i) {
        m.a_[static_cast<std::size_t>(i) * n + i] =
            cplx(entries[static_cast<std::size_t>(i) * n + i].real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cplx up = entries[static_cast<std::size_t>(i) * n + j];
            const cplx lo = entries[static_cast<std::size_t>(j) * n + i];
            const cplx v = 0.5 * (up + std::conj(lo));
            m.a_[static_cast<std::size_t>(i) * n + j] = v;
            m.a_[static_cast<std::size_t>(j) * n + i] = std::conj(v);
        }
    }
    return m;
}

void HermitianMatrix::set(int i, int j, cplx v) {
    if (i == j) {
        a_[static_cast<std::size_t>(i) * n_ + i] = cplx(v.real(), 0.0);
    } else {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = std::conj(v);
    }
}

double HermitianMatrix::frob_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

CholeskyFactor cholesky(const HermitianMatrix& g) {
    const int n = g.dim();
    CholeskyFactor f;
    f.n = n;
    f.l.assign(static_cast<std::size_t>(n) * n, cplx(0.0));
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, g(i, i).real());
    auto L = [&](int i, int j) -> cplx& { return f.l[static_cast<std::size_t>(i) * n + j]; };
    for (int j = 0; j < n; ++j) {
        double d = g(j, j).real();
        for (int k = 0; k < j; ++k) d -= std::norm(L(j, k));
        if (d <= 0.0 || d < 1e-14 * max_diag) {
            std::ostringstream os;
            os << "pivot " << d << " at column " << j
               << " (matrix numerically singular; over-degenerate exponent set)";
            throw NotPositiveDefinite(os.str());
        }
        const double dj = std::sqrt(d);
        L(j, j) = dj;
        for (int i = j + 1; i < n; ++i) {
            cplx s = g(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * std::conj(L(j, k));
            L(i, j) = s / dj;
        }
    }
    return f;
}

std::vector<cplx> CholeskyFactor::solve_lower(const std::vector<cplx>& rhs) const {
    std::vector<cplx> y(rhs);
    for (int i = 0; i < n; ++i) {
        cplx s = y[i];
        for (int k = 0; k < i; ++k) s -= l[static_cast<std::size_t>(i) * n + k] * y[k];
        y[i] = s / l[static_cast<std::size_t>(i) * n + i];
    }
    return y;
}

std::vector<cplx> CholeskyFactor::solve_adjoint(const std::vector<cplx>& rhs) const {
    std::vector<cplx> x(rhs);
    for (int i = n - 1; i >= 0; --i) {
        cplx s = x[i];
        for (int k = i + 1; k < n; ++k)
            s -= std::conj(l[static_cast<std::size_t>(k) * n + i]) * x[k];
        x[i] = s / l[static_cast<std::size_t>(i) * n + i];
    }
    return x;
}

std::vector<cplx> CholeskyFactor::solve(const std::vector<cplx>& rhs) const {
    return solve_adjoint(solve_lower(rhs));
}

EigenResult eigen_hermitian(const HermitianMatrix& a_in) {
    const int n = a_in.dim();
    std::vector<cplx> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = a_in(i, j);
    std::vector<cplx> v(static_cast<std::size_t>(n) * n, cplx(0.0));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto A = [&](int i, int j) -> cplx& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> cplx& { return v[static_cast<std::size_t>(i) * n + j]; };

    const double norm_a = a_in.frob_norm();
    const double stop = 1e-14 * norm_a;

    bool converged = (norm_a == 0.0) || (n == 1);
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = A(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const cplx e = apq / mag;  // phase of the pivot
                const double tau = (A(q, q).real() - A(p, p).real()) / (2.0 * mag);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx se = s * e;
                const cplx se_conj = s * std::conj(e);
                // A <- G* A G  with  G(p,p)=c, G(p,q)=s e, G(q,p)=-s conj(e), G(q,q)=c.
                for (int k = 0; k < n; ++k) {
                    const cplx akp = A(k, p);
                    const cplx akq = A(k, q);
                    A(k, p) = c * akp - se_conj * akq;
                    A(k, q) = se * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = A(p, k);
                    const cplx aqk = A(q, k);
                    A(p, k) = c * apk - se * aqk;
                    A(q, k) = se_conj * apk + c * aqk;
                }
                A(p, q) = cplx(0.0);
                A(q, p) = cplx(0.0);
                A(p, p) = cplx(A(p, p).real(), 0.0);
                A(q, q) = cplx(A(q, q).real(), 0.0);
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = V(k, p);
                    const cplx vkq = V(k, q);
                    V(k, p) = c * vkp - se_conj * vkq;
                    V(k, q) = se * vkp + c * vkq;
                }
            }
        }
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * std::norm(A(i, j));
        converged = std::sqrt(off) < stop;
    }
    if (!converged) throw EigenFailure("Jacobi iteration did not converge in 100 sweeps");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return A(i, i).real() < A(j, j).real(); });

    EigenResult r;
    r.values.resize(n);
    r.vectors.assign(n, std::vector<cplx>(n));
    for (int k = 0; k < n; ++k) {
        r.values[k] = A(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) r.vectors[k][i] = V(i, order[k]);
    }
    return r;
}

double condition(const HermitianMatrix& g) {
    const EigenResult e = eigen_hermitian(g);
    const double lo = e.values.front();
    const double hi = e.values.back();
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

double guard_condition(const HermitianMatrix& g) {
    const double cond = condition(g);
    if (!(cond <= kConditionLimit)) {
        std::ostringstream os;
        os << "condition " << cond << " exceeds the trusted limit " << kConditionLimit;
        throw ConditionExceeded(os.str(), cond);
    }
    return cond;
}

double quad_form_inv(const HermitianMatrix& g, const std::vector<cplx>& v,
                     std::vector<cplx>* solution) {
    const int n = g.dim();
    if (v.size() != static_cast<std::size_t>(n))
        throw ArgumentError("vector length does not match matrix dimension");
    const CholeskyFactor f = cholesky(g);
    guard_condition(g);
    std::vector<cplx> c = f.solve(v);
    // One refinement pass, then the Gauss functional 2 Re(c*v) - c*Gc.
    std::vector<cplx> r(v);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] -= g(i, j) * c[j];
    const std::vector<cplx> dc = f.solve(r);
    for (int i = 0; i < n; ++i) c[i] += dc[i];

    cplx cv = 0.0;
    for (int i = 0; i < n; ++i) cv += std::conj(c[i]) * v[i];
    double cgc = 0.0;
    for (int i = 0; i < n; ++i) {
        cplx row = 0.0;
        for (int j = 0; j < n; ++j) row += g(i, j) * c[j];
        cgc += (std::conj(c[i]) * row).real();
    }
    const double value = 2.0 * cv.real() - cgc;
    if (solution) *solution = std::move(c);
    return std::max(value, 0.0);
}

GenEigenResult gen_eigen_max(const HermitianMatrix& a, const HermitianMatrix& b) {
    const int n = a.dim();
    if (b.dim() != n) throw ArgumentError("matrix dimensions differ");
    const CholeskyFactor f = cholesky(b);
    guard_condition(b);
    // C = L^{-1} A L^{-*}: forward-solve the columns of A, then the rows.
    std::vector<std::vector<cplx>> m(n, std::vector<cplx>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<cplx> col(n);
        for (int i = 0; i < n; ++i) col[i] = a(i, j);
        col = f.solve_lower(col);
        for (int i = 0; i < n; ++i) m[i][j] = col[i];
    }
    HermitianMatrix c(n);
    std::vector<cplx> entries(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        std::vector<cplx> row(n);
        for (int j = 0; j < n; ++j) row[j] = std::conj(m[i][j]);
        row = f.solve_lower(row);
        for (int j = 0; j < n; ++j)
            entries[static_cast<std::size_t>(i) * n + j] = std::conj(row[j]);
    }
    c = HermitianMatrix::from_entries(n, entries);
    const EigenResult e = eigen_hermitian(c);
    GenEigenResult r;
    r.value = e.values.back();
    r.vector = f.solve_adjoint(e.vectors.back());
    return r;
}

}  // namespace expsum
