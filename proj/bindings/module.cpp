#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "expsum/acceptance.hpp"
#include "expsum/quad.hpp"
#include "expsum/theorems.hpp"

namespace py = pybind11;
using namespace expsum;

namespace {

std::vector<std::vector<cplx>> matrix_rows(const HermitianMatrix& g) {
    std::vector<std::vector<cplx>> rows(g.dim(), std::vector<cplx>(g.dim()));
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j) rows[i][j] = g(i, j);
    return rows;
}

MarkovVariant variant_from_string(const std::string& name) {
    if (name == "laguerre_complex") return MarkovVariant::LaguerreComplex;
    if (name == "laguerre_imaginary") return MarkovVariant::LaguerreImaginary;
    if (name == "halfline_plain") return MarkovVariant::HalflinePlain;
    if (name == "muntz_sum") return MarkovVariant::MuntzSum;
    if (name == "muntz_split") return MarkovVariant::MuntzSplit;
    throw ArgumentError("unknown Markov variant: " + name);
}

}  // namespace

PYBIND11_MODULE(_expsum, m) {
    m.doc() = "extremal constants and inequality checks for exponential sums";

    py::register_exception<Error>(m, "ExpsumError");

    py::class_<ExponentSet>(m, "ExponentSet")
        .def(py::init<std::vector<cplx>>(), py::arg("exponents"))
        .def("__len__", &ExponentSet::size)
        .def("values", &ExponentSet::values)
        .def("max_abs", &ExponentSet::max_abs)
        .def("to_json", &ExponentSet::to_json_string)
        .def_static("from_json", &ExponentSet::from_json_string)
        .def_static("load", &ExponentSet::load)
        .def("save", &ExponentSet::save);

    py::class_<ExpClass>(m, "ExpClass")
        .def_readonly("en", &ExpClass::en)
        .def_readonly("en_plus", &ExpClass::en_plus)
        .def_readonly("en_minus", &ExpClass::en_minus)
        .def_readonly("tn", &ExpClass::tn);

    m.def("classify", &classify, py::arg("exponents"));

    py::class_<ExpSum>(m, "ExpSum")
        .def(py::init<std::vector<cplx>, std::vector<cplx>>(), py::arg("exponents"),
             py::arg("coefficients"))
        .def_property_readonly("exponents", &ExpSum::exponents)
        .def_property_readonly("coefficients", &ExpSum::coefficients)
        .def("__len__", &ExpSum::terms);

    m.def("eval", [](const ExpSum& f, cplx t) { return eval(f, t); }, py::arg("f"),
          py::arg("t"));
    m.def("differentiate", &differentiate, py::arg("f"));
    m.def("substitute_linear", &substitute_linear, py::arg("f"), py::arg("alpha"),
          py::arg("beta"));
    m.def("reflect", &reflect, py::arg("f"));

    py::class_<NormSpec>(m, "NormSpec")
        .def_static("interval", &NormSpec::interval, py::arg("a"), py::arg("b"),
                    py::arg("weight_rate") = 0.0, py::arg("q") = 2.0)
        .def_static("halfline", &NormSpec::halfline, py::arg("weight_rate"))
        .def_readonly("a", &NormSpec::a)
        .def_readonly("b", &NormSpec::b)
        .def_readonly("half_line", &NormSpec::half_line)
        .def_readonly("weight_rate", &NormSpec::weight_rate)
        .def_readonly("q", &NormSpec::q);

    py::class_<QuadConfig>(m, "QuadConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &QuadConfig::rel_tol)
        .def_readwrite("max_panels", &QuadConfig::max_panels)
        .def_readwrite("gauss_order", &QuadConfig::gauss_order)
        .def_readwrite("sup_grid", &QuadConfig::sup_grid);

    m.def("exp_moment", &exp_moment, py::arg("mu"), py::arg("a"), py::arg("b"));
    m.def("exp_moment_halfline", &exp_moment_halfline, py::arg("mu"));
    m.def("lq_norm",
          [](const ExpSum& f, const NormSpec& spec) { return lq_norm(f, spec); },
          py::arg("f"), py::arg("spec"));
    m.def("sup_norm",
          [](const ExpSum& f, double a, double b) {
              const SupResult r = sup_norm(f, a, b);
              return py::make_tuple(r.value, r.argmax);
          },
          py::arg("f"), py::arg("a"), py::arg("b"));

    py::class_<Functional>(m, "Functional")
        .def_static("point", &Functional::point, py::arg("y"))
        .def_static("deriv", &Functional::deriv, py::arg("y"));

    py::class_<ExtremalResult>(m, "ExtremalResult")
        .def_readonly("value", &ExtremalResult::value)
        .def_readonly("witness_coeffs", &ExtremalResult::witness_coeffs)
        .def_readonly("gram_condition", &ExtremalResult::gram_condition);

    m.def("gram",
          [](const ExponentSet& e, const NormSpec& s) { return matrix_rows(gram(e, s)); },
          py::arg("exponents"), py::arg("spec"));
    m.def("monomial_gram",
          [](const std::vector<cplx>& p) { return matrix_rows(monomial_gram(p)); },
          py::arg("powers"));
    m.def("christoffel_sup",
          [](const ExponentSet& e, const NormSpec& s, const Functional& fn) {
              return christoffel_sup(e, s, fn);
          },
          py::arg("exponents"), py::arg("spec"), py::arg("functional"));
    m.def("christoffel_sup_monomial",
          [](const std::vector<cplx>& powers, const Functional& fn) {
              return christoffel_sup(MonomialSystem{powers}, fn);
          },
          py::arg("powers"), py::arg("functional"));
    m.def("markov_sup",
          [](const ExponentSet& e, const NormSpec& s) { return markov_sup(e, s); },
          py::arg("exponents"), py::arg("spec"));
    m.def("markov_sup_monomial",
          [](const std::vector<cplx>& powers) {
              return markov_sup_monomial(MonomialSystem{powers});
          },
          py::arg("powers"));
    m.def("truncation_sup", &truncation_sup, py::arg("exponents"), py::arg("horizon"));
    m.def("orthonormal_basis",
          [](const std::vector<std::vector<cplx>>& entries) {
              const int n = static_cast<int>(entries.size());
              std::vector<cplx> flat;
              for (const auto& row : entries) {
                  if (static_cast<int>(row.size()) != n)
                      throw ArgumentError("matrix must be square");
                  flat.insert(flat.end(), row.begin(), row.end());
              }
              return orthonormal_basis(HermitianMatrix::from_entries(n, flat));
          },
          py::arg("gram_rows"));
    m.def("point_bound_closed_monomial",
          [](const std::vector<cplx>& p) { return point_bound_closed(MonomialSystem{p}); },
          py::arg("powers"));
    m.def("point_bound_closed",
          [](const ExponentSet& e) { return point_bound_closed(e); }, py::arg("exponents"));
    m.def("deriv_bound_closed_monomial",
          [](const std::vector<cplx>& p) { return deriv_bound_closed(MonomialSystem{p}); },
          py::arg("powers"));
    m.def("deriv_bound_closed",
          [](const ExponentSet& e) { return deriv_bound_closed(e); }, py::arg("exponents"));
    m.def("markov_bound_closed",
          [](const std::string& variant, const std::vector<cplx>& lambdas) {
              return markov_bound_closed(variant_from_string(variant), lambdas);
          },
          py::arg("variant"), py::arg("lambdas"));

    py::class_<Extras>(m, "Extras")
        .def(py::init<>())
        .def_readwrite("q", &Extras::q)
        .def_readwrite("p", &Extras::p)
        .def_readwrite("y", &Extras::y)
        .def_readwrite("a", &Extras::a)
        .def_readwrite("b", &Extras::b)
        .def_readwrite("horizon", &Extras::horizon)
        .def_readwrite("alpha", &Extras::alpha)
        .def_readwrite("beta", &Extras::beta)
        .def_readwrite("delta", &Extras::delta)
        .def_readwrite("lambda_", &Extras::lambda)
        .def_readwrite("lower", &Extras::lower)
        .def_readwrite("tol", &Extras::tol);

    py::class_<RandomModel>(m, "RandomModel")
        .def(py::init<>())
        .def_readwrite("n", &RandomModel::n)
        .def_readwrite("imag_range", &RandomModel::imag_range)
        .def_readwrite("real_range", &RandomModel::real_range)
        .def_readwrite("min_gap", &RandomModel::min_gap)
        .def_readwrite("seed", &RandomModel::seed);

    py::class_<CheckReport>(m, "CheckReport")
        .def_property_readonly("theorem",
                               [](const CheckReport& r) { return to_string(r.theorem); })
        .def_readonly("n", &CheckReport::n)
        .def_readonly("seed", &CheckReport::seed)
        .def_readonly("lhs", &CheckReport::lhs)
        .def_readonly("rhs", &CheckReport::rhs)
        .def_readonly("margin", &CheckReport::margin)
        .def_property_readonly("status",
                               [](const CheckReport& r) { return to_string(r.status); });

    m.def("theorem_ids", []() {
        std::vector<std::string> names;
        for (TheoremId id : all_theorem_ids()) names.push_back(to_string(id));
        return names;
    });
    m.def("rhs_bound",
          [](const std::string& id, int n, const std::optional<ExponentSet>& exps,
             const Extras& extras) {
              return rhs_bound(theorem_id_from_string(id), n, exps ? &*exps : nullptr,
                               extras);
          },
          py::arg("theorem"), py::arg("n"), py::arg("exponents") = std::nullopt,
          py::arg("extras") = Extras{});
    m.def("check_exact",
          [](const std::string& id, const ExponentSet& exps, const Extras& extras) {
              return check_exact(theorem_id_from_string(id), exps, extras);
          },
          py::arg("theorem"), py::arg("exponents"), py::arg("extras") = Extras{});
    m.def("check_random",
          [](const std::string& id, const RandomModel& model, int samples) {
              return check_random(theorem_id_from_string(id), model, samples);
          },
          py::arg("theorem"), py::arg("model"), py::arg("samples"));
    m.def("run_samples",
          [](const std::string& id, const RandomModel& model, int samples) {
              return run_samples(theorem_id_from_string(id), model, samples);
          },
          py::arg("theorem"), py::arg("model"), py::arg("samples"));
    m.def("sweep",
          [](const std::string& id, const std::vector<int>& n_list, const RandomModel& tmpl,
             int samples) {
              return sweep(theorem_id_from_string(id), n_list, tmpl, samples);
          },
          py::arg("theorem"), py::arg("n_list"), py::arg("model"), py::arg("samples"));

    py::class_<SweepSummary>(m, "SweepSummary")
        .def_readonly("n", &SweepSummary::n)
        .def_readonly("min_margin", &SweepSummary::min_margin)
        .def_readonly("holds", &SweepSummary::holds)
        .def_readonly("violated", &SweepSummary::violated)
        .def_readonly("inconclusive", &SweepSummary::inconclusive);

    m.def("summarize_sweep", &summarize_sweep, py::arg("reports"));

    py::class_<Polynomial>(m, "Polynomial")
        .def_readonly("coeffs", &Polynomial::coeffs)
        .def("__call__", [](const Polynomial& p, double x) { return p(x); });

    py::class_<WitnessResult>(m, "WitnessResult")
        .def_readonly("exp_witness", &WitnessResult::exp_witness)
        .def_readonly("poly_witness", &WitnessResult::poly_witness)
        .def_readonly("achieved_ratio", &WitnessResult::achieved_ratio)
        .def_readonly("bound", &WitnessResult::bound);

    m.def("witness",
          [](const std::string& id, int n, const Extras& extras) {
              return witness(theorem_id_from_string(id), n, extras);
          },
          py::arg("theorem"), py::arg("n"), py::arg("extras") = Extras{});

    py::class_<LegendreValues>(m, "LegendreValues")
        .def_readonly("value_at_1", &LegendreValues::value_at_1)
        .def_readonly("deriv_at_0", &LegendreValues::deriv_at_0)
        .def_readonly("sq_at_0_sym", &LegendreValues::sq_at_0_sym);

    m.def("legendre_shifted", &legendre_shifted, py::arg("k"));
    m.def("sigma_closed", &sigma_closed, py::arg("k"));

    py::class_<SigmaResult>(m, "SigmaResult")
        .def_readonly("value", &SigmaResult::value)
        .def_readonly("coeffs", &SigmaResult::coeffs)
        .def_readonly("converged", &SigmaResult::converged)
        .def_readonly("iterations", &SigmaResult::iterations);

    m.def("sigma_minimax", &sigma_minimax, py::arg("k"), py::arg("grid") = 4096);

    m.def("to_csv", &to_csv, py::arg("reports"));
    m.def("to_json", &to_json_text, py::arg("reports"));

    m.def("run_acceptance", []() {
        std::ostringstream os;
        const bool ok = run_acceptance(os);
        return py::make_tuple(ok, os.str());
    });
}
