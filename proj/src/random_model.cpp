#include <algorithm>
#include <cmath>

#include "expsum/theorems.hpp"

namespace expsum {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr int kMaxResample = 2000;

std::vector<double> sorted_gapped(std::mt19937_64& rng, int n, double lo, double hi,
                                  double min_gap) {
    std::uniform_real_distribution<double> u(lo, hi);
    for (int tries = 0; tries < kMaxResample; ++tries) {
        std::vector<double> x(n);
        for (double& v : x) v = u(rng);
        std::sort(x.begin(), x.end());
        bool ok = true;
        for (int j = 1; j < n; ++j)
            if (x[j] - x[j - 1] < min_gap) ok = false;
        if (ok) return x;
    }
    throw ArgumentError("could not sample a gapped set; min_gap too large for the range");
}

ExponentSet sample_box(std::mt19937_64& rng, const RandomModel& m, double re_lo,
                       double re_hi) {
    const double R = m.effective_imag_range();
    std::uniform_real_distribution<double> ure(re_lo, re_hi), uim(-R, R);
    for (int tries = 0; tries < kMaxResample; ++tries) {
        std::vector<cplx> e(m.n);
        for (cplx& z : e) z = cplx(ure(rng), uim(rng));
        bool ok = true;
        for (int j = 0; j < m.n && ok; ++j)
            for (int k = j + 1; k < m.n; ++k)
                if (std::abs(e[j] - e[k]) < m.min_gap) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        return ExponentSet(std::move(e));
    }
    throw ArgumentError("could not sample a separated exponent set");
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, int n, int sample_index) {
    return splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(n)) ^
                      static_cast<std::uint64_t>(sample_index));
}

ExponentSet sample_tn(std::mt19937_64& rng, const RandomModel& m) {
    const double R = m.effective_imag_range();
    const std::vector<double> im = sorted_gapped(rng, m.n, -R, R, m.min_gap);
    std::vector<cplx> e(m.n);
    for (int j = 0; j < m.n; ++j) e[j] = cplx(0.0, im[j]);
    return ExponentSet(std::move(e));
}

ExponentSet sample_en(std::mt19937_64& rng, const RandomModel& m) {
    return sample_box(rng, m, -m.real_range, m.real_range);
}

ExponentSet sample_en_plus(std::mt19937_64& rng, const RandomModel& m) {
    return sample_box(rng, m, 0.0, m.real_range);
}

ExponentSet sample_en_minus(std::mt19937_64& rng, const RandomModel& m) {
    return sample_box(rng, m, -m.real_range, 0.0);
}

ExponentSet sample_en_neg(std::mt19937_64& rng, const RandomModel& m) {
    return sample_box(rng, m, -m.real_range, -0.05);
}

ExponentSet sample_laguerre(std::mt19937_64& rng, const RandomModel& m) {
    return sample_box(rng, m, -m.real_range, 0.45);
}

ExponentSet sample_real_nonneg(std::mt19937_64& rng, const RandomModel& m) {
    // Real exponentials on [0,1] correlate strongly and the Gram condition
    // grows about a hundredfold per added term; this spread keeps n <= 5
    // comfortably inside the trusted range (n = 6 sits near its edge and
    // may surface as Inconclusive).
    const double range = 1.7 * m.n + 2.0;
    const std::vector<double> re =
        sorted_gapped(rng, m.n, 0.0, range, std::max(m.min_gap, range / (3.0 * m.n)));
    std::vector<cplx> e(m.n);
    for (int j = 0; j < m.n; ++j) e[j] = cplx(re[j], 0.0);
    return ExponentSet(std::move(e));
}

std::vector<cplx> sample_coeffs(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> a(n);
    for (cplx& z : a) z = cplx(g(rng), g(rng));
    return a;
}

}  // namespace expsum
