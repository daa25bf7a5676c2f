#include "expsum/core.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace expsum {

namespace {

// Real part with the purely-imaginary tolerance snapped to zero.
double snapped_re(const cplx& z) {
    return std::abs(z.real()) <= kImagTol ? 0.0 : z.real();
}

// Canonical order compares snapped real parts so that noise-level real
// parts tie and fall back to the imaginary part.
bool canonical_less(const cplx& x, const cplx& y) {
    const double rx = snapped_re(x), ry = snapped_re(y);
    if (rx != ry) return rx < ry;
    return x.imag() < y.imag();
}

}  // namespace

ExponentSet::ExponentSet(std::vector<cplx> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw ArgumentError("exponent set must be non-empty");
    std::sort(exps_.begin(), exps_.end(), canonical_less);
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        for (std::size_t k = j + 1; k < exps_.size(); ++k) {
            if (std::abs(exps_[j] - exps_[k]) <= kDistinctTol) {
                std::ostringstream os;
                os << "exponents " << j << " and " << k
                   << " closer than the degeneracy threshold " << kDistinctTol;
                throw ArgumentError(os.str());
            }
        }
    }
}

double ExponentSet::max_abs() const {
    double m = 0.0;
    for (const cplx& z : exps_) m = std::max(m, std::abs(z));
    return m;
}

ExponentSet ExponentSet::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array()) throw ArgumentError("exponent file must be a JSON array");
    std::vector<cplx> exps;
    exps.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("re") || !item.contains("im"))
            throw ArgumentError("exponent entries must be objects with re and im");
        exps.emplace_back(item["re"].get<double>(), item["im"].get<double>());
    }
    return ExponentSet(std::move(exps));
}

ExponentSet ExponentSet::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open exponent file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_string(buf.str());
}

std::string ExponentSet::to_json_string() const {
    nlohmann::json j = nlohmann::json::array();
    for (const cplx& z : exps_) j.push_back({{"re", z.real()}, {"im", z.imag()}});
    return j.dump();
}

void ExponentSet::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write exponent file: " + path);
    out << to_json_string() << '\n';
}

ExpClass classify(const ExponentSet& exps) {
    ExpClass c;
    c.en = true;
    c.en_plus = true;
    c.en_minus = true;
    bool all_imag = true;
    for (const cplx& z : exps.values()) {
        const double re = snapped_re(z);
        if (re < 0.0) c.en_plus = false;
        if (re > 0.0) c.en_minus = false;
        if (re != 0.0) all_imag = false;
    }
    bool increasing = true;
    for (std::size_t j = 1; j < exps.size(); ++j)
        if (exps[j].imag() <= exps[j - 1].imag()) increasing = false;
    c.tn = all_imag && increasing;
    return c;
}

namespace {

std::vector<cplx> permuted_coeffs(const std::vector<cplx>& exponents,
                                  const std::vector<cplx>& coefficients) {
    if (exponents.size() != coefficients.size())
        throw ArgumentError("exponent and coefficient counts differ");
    std::vector<std::size_t> order(exponents.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return canonical_less(exponents[i], exponents[j]);
    });
    std::vector<cplx> a;
    a.reserve(order.size());
    for (std::size_t i : order) a.push_back(coefficients[i]);
    return a;
}

}  // namespace

ExpSum::ExpSum(std::vector<cplx> exponents, std::vector<cplx> coefficients)
    : exps_(exponents), coeffs_(permuted_coeffs(exponents, coefficients)) {}

ExpSum::ExpSum(ExponentSet exps, std::vector<cplx> coefficients)
    : exps_(std::move(exps)), coeffs_(std::move(coefficients)) {
    if (exps_.size() != coeffs_.size())
        throw ArgumentError("exponent and coefficient counts differ");
}

cplx eval(const ExpSum& f, cplx t) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < f.terms(); ++j)
        s += f.coefficients()[j] * std::exp(f.exponents()[j] * t);
    return s;
}

ExpSum differentiate(const ExpSum& f) {
    std::vector<cplx> a(f.terms());
    for (std::size_t j = 0; j < f.terms(); ++j)
        a[j] = f.exponents()[j] * f.coefficients()[j];
    return ExpSum(f.exponents(), std::move(a));
}

ExpSum substitute_linear(const ExpSum& f, double alpha, double beta) {
    if (alpha == 0.0) throw ArgumentError("substitute_linear requires alpha != 0");
    std::vector<cplx> e(f.terms()), a(f.terms());
    for (std::size_t j = 0; j < f.terms(); ++j) {
        e[j] = alpha * f.exponents()[j];
        a[j] = f.coefficients()[j] * std::exp(f.exponents()[j] * beta);
    }
    return ExpSum(std::move(e), std::move(a));
}

ExpSum reflect(const ExpSum& f) {
    std::vector<cplx> e(f.terms()), a(f.terms());
    for (std::size_t j = 0; j < f.terms(); ++j) {
        e[j] = -f.exponents()[j];
        a[j] = f.coefficients()[j];
    }
    return ExpSum(std::move(e), std::move(a));
}

NormSpec NormSpec::interval(double a, double b, double weight_rate, double q) {
    if (!(a < b)) throw ArgumentError("norm domain requires a < b");
    if (weight_rate < 0.0) throw ArgumentError("weight rate must be >= 0");
    if (!(q > 0.0)) throw ArgumentError("norm exponent q must be positive");
    NormSpec s;
    s.a = a;
    s.b = b;
    s.half_line = false;
    s.weight_rate = weight_rate;
    s.q = q;
    return s;
}

NormSpec NormSpec::halfline(double weight_rate) {
    if (weight_rate < 0.0) throw ArgumentError("weight rate must be >= 0");
    NormSpec s;
    s.a = 0.0;
    s.b = std::numeric_limits<double>::infinity();
    s.half_line = true;
    s.weight_rate = weight_rate;
    s.q = 2.0;
    return s;
}

}  // namespace expsum
