#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "expsum/core.hpp"
#include "expsum/extremal.hpp"
#include "expsum/polynomials.hpp"

namespace expsum {

// Registry of the quantitative statements the laboratory checks.  Ids name
// the inequality family and its position in the catalog; see README for
// what each one asserts.
enum class TheoremId {
    T2_1, T2_3, T2_4, T2_5, T2_6, T2_7, T2_9, T2_10,
    T3_1, T3_2,
    T4_1,
    T5_1, T5_2, T5_3,
    T6_1,
    T7_1, T7_2,
    T8_1,
    T9_1, T9_2,
    T10_1, T10_2,
    T11_1,
    L12_1, L12_5,
    SIGMA_K,
};

std::string to_string(TheoremId id);
TheoremId theorem_id_from_string(const std::string& name);
const std::vector<TheoremId>& all_theorem_ids();

// Optional parameters consumed by rhs_bound and the checks; each id
// documents which ones it reads.  `lower` selects the lower constant where
// a statement carries both bounds.
struct Extras {
    std::optional<double> q;
    std::optional<double> p;
    std::optional<double> y;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> horizon;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> delta;
    std::optional<double> lambda;
    bool lower = false;
    double tol = 1e-9;
};

enum class CheckStatus { Holds, Violated, Inconclusive };
std::string to_string(CheckStatus s);

// One verdict: margin = rhs - lhs, Holds iff margin >= -tol |rhs|.
// Dominance checks put the computed quantity in lhs and the bound in rhs;
// achievement checks put the bound in lhs and the achieved value in rhs.
struct CheckReport {
    TheoremId theorem = TheoremId::T2_1;
    int n = 0;
    std::uint64_t seed = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    CheckStatus status = CheckStatus::Inconclusive;
    std::optional<ExpSum> witness;
};

// Sampling model for the random experiments.  Imaginary parts are uniform
// on [-R, R] with R = imag_range (default 5n), sorted, pairwise gaps at
// least min_gap; coefficients are complex standard normal.
struct RandomModel {
    int n = 2;
    double imag_range = 0.0;  // 0 means the 5n default
    double real_range = 2.0;
    double min_gap = 1e-2;
    std::uint64_t seed = 42;

    double effective_imag_range() const {
        return imag_range > 0.0 ? imag_range : 5.0 * n;
    }
};

// Per-sample RNG stream, independent of scheduling.
std::uint64_t stream_seed(std::uint64_t seed, int n, int sample_index);

// Class samplers used by the experiments (exposed for the CLI and tests).
ExponentSet sample_tn(std::mt19937_64& rng, const RandomModel& m);
ExponentSet sample_en(std::mt19937_64& rng, const RandomModel& m);         // arbitrary complex
ExponentSet sample_en_plus(std::mt19937_64& rng, const RandomModel& m);    // Re >= 0
ExponentSet sample_en_minus(std::mt19937_64& rng, const RandomModel& m);   // Re <= 0
ExponentSet sample_en_neg(std::mt19937_64& rng, const RandomModel& m);     // Re < 0 strictly
ExponentSet sample_laguerre(std::mt19937_64& rng, const RandomModel& m);   // Re < 1/2
ExponentSet sample_real_nonneg(std::mt19937_64& rng, const RandomModel& m);
std::vector<cplx> sample_coeffs(std::mt19937_64& rng, int n);

// The printed right-hand constant of a statement, as a pure function of
// its inputs (norm factors are not included).  Ids with per-exponent sums
// require `exps`; missing required extras raise ArgumentError.
double rhs_bound(TheoremId id, int n, const ExponentSet* exps = nullptr,
                 const Extras& extras = {});

// Exact verdict for ids whose extremal side is computable in closed L2
// form (point kernels, Markov ratios, truncation ratios).
CheckReport check_exact(TheoremId id, const ExponentSet& exps, const Extras& extras = {});

// Random-sample verdicts for the remaining inequalities; deterministic
// given the model seed.  Numerical failures surface as Inconclusive rows.
std::vector<CheckReport> check_random(TheoremId id, const RandomModel& model, int samples);

// One sample with an explicit stream seed; every Violated report is
// reproducible from (id, model, report.seed).
CheckReport run_single(TheoremId id, const RandomModel& model, std::uint64_t sseed);

// Unified runner: exact ids draw random admissible exponent sets and run
// check_exact per set, random ids run the sampling check.
std::vector<CheckReport> run_samples(TheoremId id, const RandomModel& model, int samples);

// Cross product of n_list x samples, rows ordered by (n, sample index).
std::vector<CheckReport> sweep(TheoremId id, const std::vector<int>& n_list,
                               const RandomModel& tmpl, int samples);

// Per-n aggregate of a sweep: worst margin and status counts.
struct SweepSummary {
    int n = 0;
    double min_margin = 0.0;
    int holds = 0;
    int violated = 0;
    int inconclusive = 0;
};

std::vector<SweepSummary> summarize_sweep(const std::vector<CheckReport>& rows);

// Extremal objects from the sharpness constructions.
struct WitnessResult {
    std::optional<ExpSum> exp_witness;
    std::optional<Polynomial> poly_witness;
    double achieved_ratio = 0.0;  // ratio realized by the returned object
    double bound = 0.0;           // the lower bound it must meet
};

// Supported ids: T2_6, T5_3, T6_1, T7_1, T8_1 (reads extras.lambda,
// default 5), T9_2.
WitnessResult witness(TheoremId id, int n, const Extras& extras = {});

// sec(pi / (2(k+1)))^{k+1}: the minimal sup over the unit circle of a
// degree-k polynomial with P(0) = 1, P(1) = 0.
double sigma_closed(int k);

struct SigmaResult {
    double value = 0.0;
    std::vector<cplx> coeffs;  // of P, constant term first
    bool converged = false;
    int iterations = 0;
};

// Discrete minimax on a uniform circle grid via Lawson-weighted least
// squares on P(z) = (1-z) Q(z), Q(0) = 1.  The discrete value can
// undershoot the closed form by the grid gap; accuracy target is 1e-2.
SigmaResult sigma_minimax(int k, int grid = 4096);

// Report serialization; the CSV header is
// theorem,n,seed,lhs,rhs,margin,status and JSON uses the same field names.
std::string to_csv(const std::vector<CheckReport>& reports);
std::string to_json_text(const std::vector<CheckReport>& reports);

// Worker pool size: EXPSUM_THREADS caps it, 0 or unset means auto.
int worker_count();
void parallel_for(int count, const std::function<void(int)>& fn);

// Shared ε-quantities of the bounds.
double infinite_finite_factor_sq(int n);   // 1 + 8190 e^{-n/10}
double infinite_finite_factor(int n);      // its square root
double point_weighted_factor(int n);       // sqrt(8) (1 + 2 e^{-2n})^{1/2}
double legendre_deriv_sq_sum(int n);       // Σ_{k<n} k^2 (k+1)^2 (2k+1)

}  // namespace expsum
