#pragma once

#include "expsum/core.hpp"
#include "expsum/linalg.hpp"

namespace expsum {

// Point or derivative evaluation at y.  y may lie outside the norm domain;
// dual-vector entries are guarded against overflow past e^700.
struct Functional {
    enum class Kind { PointEval, DerivEval };
    Kind kind = Kind::PointEval;
    double y = 0.0;

    static Functional point(double y) { return {Kind::PointEval, y}; }
    static Functional deriv(double y) { return {Kind::DerivEval, y}; }
};

// Müntz system span{x^{λ_1}, ..., x^{λ_n}} on [0,1].
struct MonomialSystem {
    std::vector<cplx> powers;
};

struct ExtremalResult {
    double value = 0.0;                // the sup ratio
    std::vector<cplx> witness_coeffs;  // in the system's basis, unit norm: a*Ga = 1
    double gram_condition = 0.0;
};

// Gram matrix of {e^{λ_j t}} under the spec's weighted L2 inner product:
// G_jk = ∫ e^{(λ_j + conj(λ_k) - c) t} dt over the domain, c = weight_rate.
// Half-line entries must decay or DivergentIntegral is raised.
HermitianMatrix gram(const ExponentSet& exps, const NormSpec& spec);

// Gram matrix of {x^{λ_j}} in L2[0,1]: G_jk = 1/(λ_j + conj(λ_k) + 1);
// integer powers 0..n-1 give the n-by-n Hilbert matrix.
HermitianMatrix monomial_gram(const std::vector<cplx>& powers);

// Dual vector of the functional in the given system; the weight never
// enters here, only the norm side is weighted.
std::vector<cplx> dual_vector(const ExponentSet& exps, const Functional& fn);
std::vector<cplx> dual_vector(const MonomialSystem& sys, const Functional& fn);

// sup |L(f)| / ||f|| over the span: sqrt(v* G^{-1} v) with v the dual
// vector; the witness is proportional to G^{-1} v.
ExtremalResult christoffel_sup(const HermitianMatrix& g, const std::vector<cplx>& dual);
ExtremalResult christoffel_sup(const ExponentSet& exps, const NormSpec& spec,
                               const Functional& fn);
ExtremalResult christoffel_sup(const MonomialSystem& sys, const Functional& fn);

// sup ||f'|| / ||f|| over the span, both norms from the spec:
// sqrt of the largest generalized eigenvalue of (Λ* G Λ, G), Λ = diag(λ_j).
ExtremalResult markov_sup(const ExponentSet& exps, const NormSpec& spec);

// sup ||x P'(x)|| / ||P|| on L2[0,1] over a Müntz system (same mechanism;
// x P' has coefficients λ_j a_j on the same powers).
ExtremalResult markov_sup_monomial(const MonomialSystem& sys);

// Worst ratio of the half-line e^{-t}-weighted energy to the [0,T] part,
// over the span of an exponent set with Re λ_j <= 0.
double truncation_sup(const ExponentSet& exps, double t_horizon);

// Rows are coefficients of an orthonormal basis in the original system,
// lower triangular with positive diagonal (Gram-Schmidt in canonical
// order); C G C* = I.  This reproduces the Müntz-Legendre system up to
// sign convention.
std::vector<std::vector<cplx>> orthonormal_basis(const HermitianMatrix& g);

// sqrt(Σ (1 + 2 Re λ_j)) — sharp point bound at y = 1 for Müntz systems
// on [0,1]; requires Re λ_j > -1/2.
double point_bound_closed(const MonomialSystem& sys);
// sqrt(Σ (1 - 2 Re λ_j)) — same bound at t = 0 under the half-line
// e^{-t}-weighted norm; requires Re λ_j < 1/2.
double point_bound_closed(const ExponentSet& exps);

// sqrt(Σ_k (1 + 2 Re λ_k) |λ_k + Σ_{j<k} (1 + 2 Re λ_j)|^2) — sharp
// derivative bound at y = 1 for Müntz systems; requires Re λ_j > -1/2.
double deriv_bound_closed(const MonomialSystem& sys);
// Exponential analogue at t = 0 in the half-line weighted norm,
// requires Re λ_j < 1/2.
double deriv_bound_closed(const ExponentSet& exps);

enum class MarkovVariant {
    LaguerreComplex,   // max|λ| + sqrt(ΣΣ (1-2Re λ_j)(1-2Re λ_k)), Re λ < 1/2
    LaguerreImaginary, // max|λ| + sqrt(n(n-1)/2), purely imaginary exponents
    HalflinePlain,     // 1/2 + max|λ+1/2| + 2 sqrt(ΣΣ Re λ_j Re λ_k), Re λ < 0
    MuntzSum,          // sqrt(Σ|λ|^2 + ΣΣ (1+2Re λ_j)(1+2Re λ_k)), Re λ > -1/2
    MuntzSplit,        // max|λ| + sqrt(ΣΣ (1+2Re λ_j)(1+2Re λ_k)), Re λ > -1/2
};

// Closed-form Markov bounds; λ are exponents (Laguerre/halfline variants)
// or Müntz powers (Muntz variants), in canonical order.
double markov_bound_closed(MarkovVariant variant, const std::vector<cplx>& lambdas);

}  // namespace expsum
