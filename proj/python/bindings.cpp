#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blochlab/campaign.hpp"

namespace py = pybind11;
using namespace blochlab;

namespace {

// Bound analytic functions are held through the shared_ptr the C++ side uses,
// wrapped so pybind never needs a const holder type.
struct PyAnalytic {
    AnalyticPtr fn;
};

DiskPoint as_point(Complex z) { return DiskPoint(z); }

CampaignOptions make_options(const SupConfig& sup, double k, int max_degree, double scale,
                             int threads, bool keep_trials) {
    CampaignOptions opts;
    opts.sup = sup;
    opts.k = k;
    opts.max_degree = max_degree;
    opts.scale = scale;
    opts.threads = threads;
    opts.keep_trials = keep_trials;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bloch-type seminorms, disk geometry, and Lipschitz-bound certification "
              "for harmonic maps on the unit disk";
    m.attr("__version__") = "0.1.0";

    // disk geometry
    m.def("mobius_apply", [](Complex w, Complex z) { return MobiusTransform(as_point(w)).apply(z); },
          py::arg("w"), py::arg("z"), "phi_w(z) = (w - z) / (1 - conj(w) z)");
    m.def("mobius_derivative",
          [](Complex w, Complex z) { return MobiusTransform(as_point(w)).derivative(z); },
          py::arg("w"), py::arg("z"));
    m.def("mobius_second_derivative",
          [](Complex w, Complex z) { return MobiusTransform(as_point(w)).second_derivative(z); },
          py::arg("w"), py::arg("z"));
    m.def("pseudo_distance",
          [](Complex z, Complex w) { return pseudo_distance(as_point(z), as_point(w)); },
          py::arg("z"), py::arg("w"));
    m.def("one_minus_rho_sq",
          [](Complex z, Complex w) { return one_minus_rho_sq(as_point(z), as_point(w)); },
          py::arg("z"), py::arg("w"));

    // analytic functions
    py::class_<PyAnalytic>(m, "AnalyticFunction")
        .def("eval", [](const PyAnalytic& f, Complex z) { return f.fn->eval(z); })
        .def("deriv", [](const PyAnalytic& f, Complex z) { return f.fn->deriv(z); })
        .def("deriv2", [](const PyAnalytic& f, Complex z) { return f.fn->deriv2(z); })
        .def("coefficients", [](const PyAnalytic& f) {
            const auto* p = dynamic_cast<const Polynomial*>(f.fn.get());
            if (!p) throw std::runtime_error("not a polynomial");
            return p->coefficients();
        });
    m.def("polynomial",
          [](std::vector<Complex> coeffs) { return PyAnalytic{make_polynomial(std::move(coeffs))}; },
          py::arg("coefficients"), "Polynomial from constant-first coefficients");
    m.def("log_fixture", [] { return PyAnalytic{make_log_fixture()}; },
          "h(z) = log(1 - z^2), principal branch");
    m.def("compose_with_mobius",
          [](const PyAnalytic& f, Complex w) { return PyAnalytic{compose_with_mobius(f.fn, as_point(w))}; },
          py::arg("f"), py::arg("w"));

    // harmonic maps
    py::class_<DerivativeBundle>(m, "DerivativeBundle")
        .def_readonly("fz", &DerivativeBundle::fz)
        .def_readonly("fzbar", &DerivativeBundle::fzbar)
        .def_readonly("big_lambda", &DerivativeBundle::big_lambda)
        .def_readonly("small_lambda", &DerivativeBundle::small_lambda)
        .def_readonly("jacobian", &DerivativeBundle::jacobian)
        .def_readonly("dilatation_modulus", &DerivativeBundle::dilatation_modulus)
        .def_readonly("has_dilatation", &DerivativeBundle::has_dilatation);

    py::class_<HarmonicMap>(m, "HarmonicMap")
        .def(py::init([](const PyAnalytic& h, const PyAnalytic& g) {
                 return HarmonicMap(h.fn, g.fn);
             }),
             py::arg("h"), py::arg("g"))
        .def_static("log_fixture", &HarmonicMap::log_fixture)
        .def_property_readonly("h", [](const HarmonicMap& f) { return PyAnalytic{f.h_ptr()}; })
        .def_property_readonly("g", [](const HarmonicMap& f) { return PyAnalytic{f.g_ptr()}; })
        .def("eval", [](const HarmonicMap& f, Complex z) { return f.eval(z); })
        .def("bundle_at", [](const HarmonicMap& f, Complex z) { return bundle_at(f, as_point(z)); })
        .def("directional_derivative",
             [](const HarmonicMap& f, Complex z, double alpha) {
                 return directional_derivative(f, as_point(z), alpha);
             },
             py::arg("z"), py::arg("alpha"))
        .def("quasiregularity_pointwise",
             [](const HarmonicMap& f, Complex z) { return quasiregularity_pointwise(f, as_point(z)); })
        .def("compose_with_mobius",
             [](const HarmonicMap& f, Complex w) { return compose_with_mobius(f, as_point(w)); })
        .def("to_json", [](const HarmonicMap& f) { return harmonic_map_to_json(f).dump(); });
    m.def("harmonic_map_from_json",
          [](const std::string& text) { return harmonic_map_from_json(Json::parse(text)); });

    // seminorms
    py::class_<SupConfig>(m, "SupConfig")
        .def(py::init<>())
        .def_readwrite("n_radial", &SupConfig::n_radial)
        .def_readwrite("n_angular", &SupConfig::n_angular)
        .def_readwrite("r_max", &SupConfig::r_max)
        .def_readwrite("refine_top", &SupConfig::refine_top)
        .def_readwrite("refine_tol", &SupConfig::refine_tol);
    py::class_<SupEstimate>(m, "SupEstimate")
        .def_readonly("value", &SupEstimate::value)
        .def_readonly("argmax", &SupEstimate::argmax)
        .def_readonly("grid_value", &SupEstimate::grid_value)
        .def_readonly("refined", &SupEstimate::refined)
        .def_readonly("tolerance", &SupEstimate::tolerance)
        .def("__repr__", [](const SupEstimate& e) {
            return "SupEstimate(value=" + std::to_string(e.value) + ")";
        });
    m.def("bloch_seminorm",
          [](const PyAnalytic& h, const SupConfig& cfg) { return bloch_seminorm(*h.fn, cfg); },
          py::arg("h"), py::arg("cfg") = SupConfig{});
    m.def("bloch_norm",
          [](const PyAnalytic& h, const SupConfig& cfg) { return bloch_norm(*h.fn, cfg); },
          py::arg("h"), py::arg("cfg") = SupConfig{});
    m.def("harmonic_bloch_seminorm", &harmonic_bloch_seminorm, py::arg("f"),
          py::arg("cfg") = SupConfig{});
    m.def("bloch_type_seminorm", &bloch_type_seminorm, py::arg("f"), py::arg("cfg") = SupConfig{});
    m.def("quasiregularity_constant", &quasiregularity_constant, py::arg("f"),
          py::arg("cfg") = SupConfig{});
    m.def("dilatation_sup", &dilatation_sup, py::arg("f"), py::arg("n_boundary"),
          py::arg("r_max") = 1.0 - 1e-9, py::arg("check_interior") = false);

    // constants and scalar bounds
    m.def("psi", &psi, py::arg("r"));
    m.def("minimize_psi",
          [](double tol) {
              const PsiMinimum p = minimize_psi(tol);
              return py::make_tuple(p.r_star, p.c1);
          },
          py::arg("tol") = 1e-12);
    py::class_<ConstantSet>(m, "ConstantSet")
        .def_readonly("c1", &ConstantSet::c1)
        .def_readonly("r_star", &ConstantSet::r_star)
        .def_readonly("c2", &ConstantSet::c2)
        .def_readonly("c3", &ConstantSet::c3)
        .def_readonly("theorem_a_constant", &ConstantSet::theorem_a_constant);
    m.def("constant_set", &constant_set, py::arg("tol") = 1e-12);
    m.def("second_derivative_bound", &second_derivative_bound, py::arg("r"), py::arg("w_mod"));
    m.def("log_displacement_inequality",
          [](double t) {
              const ScalarInequality s = log_displacement_inequality(t);
              return py::make_tuple(s.lhs, s.rhs);
          },
          py::arg("t"));
    m.def("lemma23_pair",
          [](const PyAnalytic& h, Complex w, Complex zeta, double h_seminorm) {
              const ScalarInequality s =
                  lemma23_pair(*h.fn, as_point(w), as_point(zeta), h_seminorm);
              return py::make_tuple(s.lhs, s.rhs);
          },
          py::arg("h"), py::arg("w"), py::arg("zeta"), py::arg("h_seminorm"));

    // campaigns
    py::class_<CampaignReport>(m, "CampaignReport")
        .def_readonly("campaign_name", &CampaignReport::campaign_name)
        .def_readonly("seed", &CampaignReport::seed)
        .def_readonly("n_trials", &CampaignReport::n_trials)
        .def_readonly("bound", &CampaignReport::bound)
        .def_readonly("max_quotient", &CampaignReport::max_quotient)
        .def_readonly("max_quotient_raw", &CampaignReport::max_quotient_raw)
        .def_readonly("n_errors", &CampaignReport::n_errors)
        .def_readonly("n_violations", &CampaignReport::n_violations)
        .def_readonly("runtime_ms", &CampaignReport::runtime_ms)
        .def("to_json", [](const CampaignReport& r, bool include_timing) {
                 return r.to_json(include_timing).dump(2);
             },
             py::arg("include_timing") = false)
        .def("to_csv", &CampaignReport::to_csv);
    m.def("gen_polynomial",
          [](std::uint64_t seed, int degree, double scale) {
              return PyAnalytic{std::make_shared<Polynomial>(gen_polynomial(seed, degree, scale))};
          },
          py::arg("seed"), py::arg("degree"), py::arg("scale") = 1.0);
    m.def("gen_quasiregular", &gen_quasiregular, py::arg("seed"), py::arg("degree"), py::arg("k"));
    m.def("theorem1_quotient",
          [](const HarmonicMap& f, double norm_bh, Complex z, Complex w) {
              return theorem1_quotient(f, norm_bh, as_point(z), as_point(w));
          },
          py::arg("f"), py::arg("norm_bh"), py::arg("z"), py::arg("w"));
    m.def("theorem2_quotient",
          [](const HarmonicMap& f, double norm_bhstar, double K, Complex z, Complex w) {
              return theorem2_quotient(f, norm_bhstar, K, as_point(z), as_point(w));
          },
          py::arg("f"), py::arg("norm_bhstar"), py::arg("K"), py::arg("z"), py::arg("w"));
    m.def("run_campaign",
          [](const std::string& kind, std::uint64_t seed, std::uint64_t n_trials,
             const SupConfig& sup, double k, int max_degree, double scale, int threads,
             bool keep_trials) {
              const auto parsed = campaign_kind_from_string(kind);
              if (!parsed) throw std::invalid_argument("unknown campaign kind '" + kind + "'");
              return run_campaign(*parsed, seed, n_trials,
                                  make_options(sup, k, max_degree, scale, threads, keep_trials));
          },
          py::arg("kind"), py::arg("seed") = 42, py::arg("n_trials") = 1000,
          py::arg("sup") = SupConfig{}, py::arg("k") = 0.5, py::arg("max_degree") = 8,
          py::arg("scale") = 1.0, py::arg("threads") = 0, py::arg("keep_trials") = false);
    m.def("sharpness_search",
          [](const std::string& kind, std::uint64_t seed, std::uint64_t budget,
             const SupConfig& sup, double k, int max_degree, double scale) {
              const auto parsed = campaign_kind_from_string(kind);
              if (!parsed) throw std::invalid_argument("unknown campaign kind '" + kind + "'");
              return sharpness_search(*parsed, seed, budget,
                                      make_options(sup, k, max_degree, scale, 0, false));
          },
          py::arg("kind"), py::arg("seed") = 42, py::arg("budget") = 10000,
          py::arg("sup") = SupConfig{}, py::arg("k") = 0.5, py::arg("max_degree") = 8,
          py::arg("scale") = 1.0);
    m.def("non_lipschitz_witness",
          [](double x, double t) {
              const WitnessPair wp = non_lipschitz_witness(x, t);
              return py::make_tuple(wp.quotient, wp.reference);
          },
          py::arg("x"), py::arg("t"));
}
