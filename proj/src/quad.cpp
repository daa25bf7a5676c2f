#include "expsum/quad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace expsum {

namespace {

// e^z - 1 without cancellation for small z.
cplx cexpm1(cplx z) {
    const double ex = std::exp(z.real());
    const double s = std::sin(0.5 * z.imag());
    return cplx(std::expm1(z.real()) - ex * 2.0 * s * s, ex * std::sin(z.imag()));
}

// φ(z) = (e^z - 1)/z = Σ z^k/(k+1)!  for |z| < 1e-4; eight terms reach
// full double precision well before that radius.
cplx phi1_series(cplx z) {
    cplx sum = 1.0;
    cplx term = 1.0;
    for (int k = 1; k < 8; ++k) {
        term *= z / static_cast<double>(k + 1);
        sum += term;
    }
    return sum;
}

std::map<int, std::pair<std::vector<double>, std::vector<double>>> g_gauss_cache;
std::mutex g_gauss_mutex;

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 2) throw ArgumentError("gauss_legendre order must be >= 2");
    {
        std::lock_guard<std::mutex> lock(g_gauss_mutex);
        auto it = g_gauss_cache.find(n);
        if (it != g_gauss_cache.end()) {
            nodes = it->second.first;
            weights = it->second.second;
            return;
        }
    }
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_n with the Chebyshev initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    std::lock_guard<std::mutex> lock(g_gauss_mutex);
    g_gauss_cache[n] = {nodes, weights};
}

cplx exp_moment(cplx mu, double a, double b) {
    if (!(a <= b)) throw ArgumentError("exp_moment requires a <= b");
    const double len = b - a;
    const cplx z = mu * len;
    const cplx front = std::exp(mu * a);
    if (std::abs(z) < 1e-4) return front * len * phi1_series(z);
    return front * cexpm1(z) / mu;
}

cplx exp_moment_halfline(cplx mu) {
    if (!(mu.real() < 0.0)) {
        std::ostringstream os;
        os << "half-line moment diverges: Re mu = " << mu.real() << " >= 0";
        throw DivergentIntegral(os.str());
    }
    return -1.0 / mu;
}

namespace {

double composite_gauss(const std::function<double(double)>& f, double a, double b,
                       int panels, const std::vector<double>& x,
                       const std::vector<double>& w) {
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(mid + 0.5 * h * x[i]);
        total += 0.5 * h * s;
    }
    return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadConfig& cfg) {
    if (!(a < b)) throw ArgumentError("integrate requires a < b");
    if (!(cfg.rel_tol > 0.0)) throw ArgumentError("rel_tol must be positive");
    std::vector<double> x, w;
    gauss_legendre(cfg.gauss_order, x, w);
    double prev = composite_gauss(f, a, b, 1, x, w);
    for (int panels = 2; panels <= cfg.max_panels; panels *= 2) {
        const double cur = composite_gauss(f, a, b, panels, x, w);
        if (std::abs(cur - prev) <= cfg.rel_tol * std::abs(cur)) return cur;
        prev = cur;
    }
    std::ostringstream os;
    os << "quadrature did not converge to rel_tol " << cfg.rel_tol << " within "
       << cfg.max_panels << " panels";
    throw QuadratureFailure(os.str());
}

double lq_norm(const ExpSum& f, const NormSpec& spec, const QuadConfig& cfg) {
    if (spec.half_line)
        throw ArgumentError("lq_norm handles finite domains only; half-line norms "
                            "come from the Gram closed form");
    const double c = spec.weight_rate;
    if (std::isinf(spec.q)) {
        auto weighted = [&](double t) {
            return std::abs(eval(f, t)) * std::exp(-c * t);
        };
        return sup_norm(weighted, spec.a, spec.b, cfg).value;
    }
    const double q = spec.q;
    auto integrand = [&](double t) {
        const double m2 = std::norm(eval(f, t));
        const double power = (q == 2.0) ? m2 : std::pow(m2, 0.5 * q);
        return power * std::exp(-c * t);
    };
    const double integral = integrate(integrand, spec.a, spec.b, cfg);
    return std::pow(integral, 1.0 / q);
}

SupResult sup_norm(const std::function<double(double)>& abs_f, double a, double b,
                   const QuadConfig& cfg) {
    if (!(a < b)) throw ArgumentError("sup_norm requires a < b");
    const int n = std::max(cfg.sup_grid, 8);
    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i <= n; ++i) {
        const double t = a + (b - a) * i / n;
        const double v = abs_f(t);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    // Golden-section refinement of the squared objective inside the
    // bracketing cells.  |f| of a complex sum is not smooth at zeros, so
    // sampling plus local search is more robust than derivative roots.
    double lo = a + (b - a) * std::max(best_i - 1, 0) / n;
    double hi = a + (b - a) * std::min(best_i + 1, n) / n;
    auto g = [&](double t) {
        const double v = abs_f(t);
        return v * v;
    };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double g1 = g(x1), g2 = g(x2);
    while (hi - lo > 1e-12) {
        if (g1 < g2) {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = g(x1);
        }
    }
    SupResult r;
    r.value = best;
    r.argmax = a + (b - a) * best_i / n;
    for (double t : {0.5 * (lo + hi), lo, hi}) {
        const double v = abs_f(t);
        if (v > r.value) {
            r.value = v;
            r.argmax = t;
        }
    }
    return r;
}

SupResult sup_norm(const ExpSum& f, double a, double b, const QuadConfig& cfg) {
    auto abs_f = [&](double t) { return std::abs(eval(f, t)); };
    return sup_norm(abs_f, a, b, cfg);
}

}  // namespace expsum
