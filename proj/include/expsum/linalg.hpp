#pragma once

#include <string>
#include <vector>

#include "expsum/core.hpp"

namespace expsum {

// Solves on matrices with condition beyond this raise ConditionExceeded:
// double precision leaves no trusted digits past it.
inline constexpr double kConditionLimit = 1e12;

// Dense Hermitian matrix.  Hermiticity is enforced at construction by
// averaging the two triangles; the diagonal is kept real.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int n);
    // Row-major n*n entries, hermitized.
    static HermitianMatrix from_entries(int n, const std::vector<cplx>& entries,
                                        std::string meta = {});

    int dim() const { return n_; }
    cplx operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    // Sets (i,j) and the conjugate at (j,i); diagonal imaginary parts are dropped.
    void set(int i, int j, cplx v);

    double frob_norm() const;
    const std::string& meta() const { return meta_; }

private:
    int n_;
    std::vector<cplx> a_;
    std::string meta_;
};

// Lower-triangular Cholesky factor, L L* = G.
struct CholeskyFactor {
    int n = 0;
    std::vector<cplx> l;  // row-major, upper part unused

    std::vector<cplx> solve_lower(const std::vector<cplx>& rhs) const;   // L y = rhs
    std::vector<cplx> solve_adjoint(const std::vector<cplx>& rhs) const; // L* x = rhs
    std::vector<cplx> solve(const std::vector<cplx>& rhs) const;         // G x = rhs
};

// Throws NotPositiveDefinite when a pivot is <= 0 or below 1e-14 times the
// largest diagonal entry (an over-degenerate exponent set).
CholeskyFactor cholesky(const HermitianMatrix& g);

// v* G^{-1} v (real, >= 0) via triangular solves; assembled in the Gauss
// functional form 2 Re(c*v) - c*Gc, which is insensitive to first-order
// error in the computed c.  Optionally returns c = G^{-1} v.
// Raises ConditionExceeded when cond(G) > kConditionLimit.
double quad_form_inv(const HermitianMatrix& g, const std::vector<cplx>& v,
                     std::vector<cplx>* solution = nullptr);

struct EigenResult {
    std::vector<double> values;              // ascending
    std::vector<std::vector<cplx>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi with complex rotations; runs until the off-diagonal
// Frobenius mass drops below 1e-14 * ||A||.
EigenResult eigen_hermitian(const HermitianMatrix& a);

struct GenEigenResult {
    double value = 0.0;
    std::vector<cplx> vector;
};

// Largest λ with A v = λ B v for Hermitian A and positive definite B,
// via B = LL* and a standard eigenproblem on L^{-1} A L^{-*}.
GenEigenResult gen_eigen_max(const HermitianMatrix& a, const HermitianMatrix& b);

// λ_max / λ_min, infinity when λ_min <= 0.
double condition(const HermitianMatrix& g);

// Verifies cond(G) <= kConditionLimit, returning the measured condition.
double guard_condition(const HermitianMatrix& g);

}  // namespace expsum
