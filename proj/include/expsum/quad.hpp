#pragma once

#include <functional>

#include "expsum/core.hpp"

namespace expsum {

struct QuadConfig {
    double rel_tol = 1e-10;
    int max_panels = 1 << 16;
    int gauss_order = 16;
    int sup_grid = 4096;
};

// Integral of exp(μt) over [a,b].  Uses a power series in μ(b-a) when
// |μ|(b-a) < 1e-4 to avoid cancellation in (e^{μb}-e^{μa})/μ.
cplx exp_moment(cplx mu, double a, double b);

// Integral of exp(μt) over [0,∞); requires Re μ < 0.
cplx exp_moment_halfline(cplx mu);

// (∫ |f(t)|^q e^{-ct} dt)^{1/q} over the spec's domain, c = spec.weight_rate.
// The weight enters once, as part of the measure, so for q = 2 this is the
// quadratic form of the Gram matrix built from the same spec.  q = ∞ routes
// to sup_norm with the weight folded into the integrand.  Composite
// Gauss-Legendre with panel doubling until successive estimates agree to
// cfg.rel_tol relative.
double lq_norm(const ExpSum& f, const NormSpec& spec, const QuadConfig& cfg = {});

struct SupResult {
    double value = 0.0;
    double argmax = 0.0;
};

// Sup of |f| on [a,b]: dense grid of cfg.sup_grid cells, then golden-section
// refinement of |f|^2 around the best cell to width 1e-12.  The value is a
// certified lower bound of the true sup.
SupResult sup_norm(const ExpSum& f, double a, double b, const QuadConfig& cfg = {});

// Same search for an arbitrary nonnegative objective (|f| of anything).
SupResult sup_norm(const std::function<double(double)>& abs_f, double a, double b,
                   const QuadConfig& cfg = {});

// Adaptive composite Gauss-Legendre for a real integrand on [a,b]; panels
// are summed in ascending index order, so results are reproducible.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadConfig& cfg = {});

// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace expsum
