#include <algorithm>
#include <cmath>
#include <numbers>

#include "expsum/linalg.hpp"
#include "expsum/theorems.hpp"

namespace expsum {

double sigma_closed(int k) {
    if (k < 1) throw ArgumentError("k must be >= 1");
    const double angle = std::numbers::pi / (2.0 * (k + 1.0));
    return std::pow(1.0 / std::cos(angle), k + 1.0);
}

SigmaResult sigma_minimax(int k, int grid) {
    if (k < 1) throw ArgumentError("k must be >= 1");
    if (grid < 64 * (k + 1)) throw ArgumentError("grid must be at least 64 (k+1)");

    const int m = grid;
    std::vector<cplx> z(m);
    for (int i = 0; i < m; ++i) {
        const double t = 2.0 * std::numbers::pi * i / m;
        z[i] = cplx(std::cos(t), std::sin(t));
    }
    // P(z) = (1-z) Q(z), Q(0) = 1: basis columns phi_j = (1-z) z^j with the
    // j = 0 coefficient pinned to 1 and j = 1..k-1 free.
    std::vector<std::vector<cplx>> phi(k, std::vector<cplx>(m));
    for (int i = 0; i < m; ++i) {
        cplx p = 1.0 - z[i];
        for (int j = 0; j < k; ++j) {
            phi[j][i] = p;
            p *= z[i];
        }
    }

    SigmaResult out;
    auto pack_coeffs = [&](const std::vector<cplx>& q) {
        // P = (1-z)(1 + q_1 z + ... + q_{k-1} z^{k-1}).
        std::vector<cplx> full(k, cplx(0.0));
        full[0] = 1.0;
        for (int j = 1; j < k; ++j) full[j] = q[j - 1];
        std::vector<cplx> p(k + 1, cplx(0.0));
        for (int j = 0; j < k; ++j) {
            p[j] += full[j];
            p[j + 1] -= full[j];
        }
        return p;
    };

    if (k == 1) {
        out.value = 0.0;
        for (int i = 0; i < m; ++i) out.value = std::max(out.value, std::abs(1.0 - z[i]));
        out.coeffs = pack_coeffs({});
        out.converged = true;
        out.iterations = 0;
        return out;
    }

    const int unknowns = k - 1;
    std::vector<double> w(m, 1.0 / m);
    std::vector<cplx> q(unknowns, cplx(0.0));
    std::vector<double> absr(m, 0.0);

    double best = std::numeric_limits<double>::infinity();
    std::vector<cplx> best_q(q);
    double prev_obj = std::numeric_limits<double>::infinity();
    int flat = 0, stalled = 0;
    const int max_iter = 2000;
    bool converged = false;
    int iter = 0;

    for (iter = 1; iter <= max_iter; ++iter) {
        // Weighted least squares with the pinned column as right-hand side.
        std::vector<cplx> entries(static_cast<std::size_t>(unknowns) * unknowns, cplx(0.0));
        std::vector<cplx> rhs(unknowns, cplx(0.0));
        for (int i = 0; i < m; ++i) {
            const double wi = w[i];
            for (int a = 0; a < unknowns; ++a) {
                const cplx pa = std::conj(phi[a + 1][i]);
                rhs[a] -= wi * pa * phi[0][i];
                for (int b = a; b < unknowns; ++b)
                    entries[static_cast<std::size_t>(a) * unknowns + b] +=
                        wi * pa * phi[b + 1][i];
            }
        }
        for (int a = 0; a < unknowns; ++a)
            for (int b = 0; b < a; ++b)
                entries[static_cast<std::size_t>(a) * unknowns + b] =
                    std::conj(entries[static_cast<std::size_t>(b) * unknowns + a]);
        const HermitianMatrix M = HermitianMatrix::from_entries(unknowns, entries);
        q = cholesky(M).solve(rhs);

        double emax = 0.0, ew2 = 0.0, wsum = 0.0;
        for (int i = 0; i < m; ++i) {
            cplx r = phi[0][i];
            for (int a = 0; a < unknowns; ++a) r += q[a] * phi[a + 1][i];
            absr[i] = std::abs(r);
            emax = std::max(emax, absr[i]);
            ew2 += w[i] * absr[i] * absr[i];
            wsum += w[i];
        }
        const double ew = std::sqrt(ew2 / wsum);
        if (emax < best) {
            best = emax;
            best_q = q;
        }
        // The weighted mean error rises to the minimax value while the max
        // falls, so their gap bounds the suboptimality of the current
        // iterate; 1e-3 sits two orders inside the accuracy target.
        if (emax - ew <= 1e-3 * emax) {
            converged = true;
            break;
        }
        const double step = std::abs(emax - prev_obj);
        if (step <= 1e-12 * emax) ++flat; else flat = 0;
        if (step < 1e-14 * emax) ++stalled; else stalled = 0;
        if (flat >= 50) {
            converged = true;  // objective settled
            break;
        }
        if (stalled >= 50) break;  // stalled without weight convergence
        prev_obj = emax;

        double total = 0.0;
        for (int i = 0; i < m; ++i) {
            w[i] = std::max(w[i] * absr[i], 1e-300);
            total += w[i];
        }
        for (int i = 0; i < m; ++i) w[i] /= total;
    }

    out.value = best;
    out.coeffs = pack_coeffs(best_q);
    out.converged = converged;
    out.iterations = iter;
    return out;
}

}  // namespace expsum
