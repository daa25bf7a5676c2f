#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "expsum/errors.hpp"

namespace expsum {

using cplx = std::complex<double>;

// Exponents closer than this (in absolute value of the difference) are
// rejected as duplicates.  Gram matrices become numerically singular long
// before this limit; the conditioning guard in linalg is the real gate.
inline constexpr double kDistinctTol = 1e-9;

// |Re λ| at or below this counts as purely imaginary, so exact 0.0 real
// parts survive representation noise.
inline constexpr double kImagTol = 1e-12;

// Ordered set of distinct complex exponents.  Canonical order: ascending by
// real part, ties broken by imaginary part.
class ExponentSet {
public:
    explicit ExponentSet(std::vector<cplx> exponents);

    std::size_t size() const { return exps_.size(); }
    const std::vector<cplx>& values() const { return exps_; }
    cplx operator[](std::size_t j) const { return exps_[j]; }

    // Largest |λ_j|.
    double max_abs() const;

    // JSON array of {"re": x, "im": y} objects.
    static ExponentSet from_json_string(const std::string& text);
    static ExponentSet load(const std::string& path);
    std::string to_json_string() const;
    void save(const std::string& path) const;

private:
    std::vector<cplx> exps_;
};

// Class membership flags.  en is always true; tn implies en_plus and
// en_minus (purely imaginary exponents pass both sign tests).
struct ExpClass {
    bool en = true;
    bool en_plus = false;
    bool en_minus = false;
    bool tn = false;
};

ExpClass classify(const ExponentSet& exps);

// f(t) = sum_j a_j exp(λ_j t).  Coefficients are stored in the canonical
// order of the exponent set; zero coefficients are kept so the span stays
// closed under differentiation.
class ExpSum {
public:
    // Parallel vectors; reordered jointly into canonical order.
    ExpSum(std::vector<cplx> exponents, std::vector<cplx> coefficients);
    // Coefficients already in the canonical order of `exps`.
    ExpSum(ExponentSet exps, std::vector<cplx> coefficients);

    const ExponentSet& exponents() const { return exps_; }
    const std::vector<cplx>& coefficients() const { return coeffs_; }
    std::size_t terms() const { return coeffs_.size(); }

private:
    ExponentSet exps_;
    std::vector<cplx> coeffs_;
};

cplx eval(const ExpSum& f, cplx t);

// Same exponents, coefficients λ_j a_j.
ExpSum differentiate(const ExpSum& f);

// g(t) = f(αt + β): exponents αλ_j, coefficients a_j exp(λ_j β).
ExpSum substitute_linear(const ExpSum& f, double alpha, double beta);

// g(t) = f(-t), reordered canonically.
ExpSum reflect(const ExpSum& f);

// Integration domain, weight rate and norm exponent.  weight_rate c means
// the measure carries the factor e^{-ct}; see quad.hpp for how each norm
// consumes it.  Half-line domains are restricted to q = 2.
struct NormSpec {
    double a = 0.0;
    double b = 1.0;
    bool half_line = false;
    double weight_rate = 0.0;
    double q = 2.0;

    static NormSpec interval(double a, double b, double weight_rate = 0.0,
                             double q = 2.0);
    static NormSpec halfline(double weight_rate);
};

}  // namespace expsum
