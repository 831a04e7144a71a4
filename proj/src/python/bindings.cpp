// Python surface of the library: dimension series, exact moments, rate
// samples, distribution fits, and key-size profiles. Mirrors the CLI
// subcommands; heavy lifting stays in the C++ core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermlab/agcodes.hpp"
#include "hermlab/distfit.hpp"
#include "hermlab/keysize.hpp"
#include "hermlab/rate_stats.hpp"
#include "hermlab/rational.hpp"
#include "hermlab/store.hpp"

namespace py = pybind11;
using namespace hermlab;

PYBIND11_MODULE(hermlab, m) {
  m.doc() = "Hermitian-curve evaluation codes: subfield subcode dimension "
            "series, exact rate moments, distribution fits, key-size profiles";

  py::class_<Rational>(m, "Rational")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den") = 1)
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("to_double", &Rational::to_double)
      .def("render", &Rational::render, py::arg("decimals"),
           "exact fixed-point rendering, round-half-to-even")
      .def("__str__", &Rational::to_string)
      .def("__repr__",
           [](const Rational& r) { return "Rational(" + r.to_string() + ")"; })
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__float__", &Rational::to_double);

  py::enum_<Gamma>(m, "Gamma")
      .value("one_point", Gamma::one_point)
      .value("degree_three", Gamma::degree_three);
  m.def("gamma_token", &gamma_token);
  m.def("gamma_from_token", [](const std::string& tok) {
    auto g = gamma_from_token(tok);
    if (!g) throw py::value_error("unknown gamma token: " + tok);
    return *g;
  });

  py::class_<DimRecord>(m, "DimRecord")
      .def_readonly("s", &DimRecord::s)
      .def_readonly("k", &DimRecord::k)
      .def_readonly("subdim", &DimRecord::subdim)
      .def("__repr__", [](const DimRecord& r) {
        return "DimRecord(s=" + std::to_string(r.s) + ", k=" + std::to_string(r.k) +
               ", subdim=" + std::to_string(r.subdim) + ")";
      });

  py::class_<RateSeries>(m, "RateSeries")
      .def_readonly("q", &RateSeries::q)
      .def_readonly("r", &RateSeries::r)
      .def_readonly("gamma", &RateSeries::gamma)
      .def_readonly("n", &RateSeries::n)
      .def_readonly("deg_g", &RateSeries::deg_g)
      .def_readonly("genus", &RateSeries::genus)
      .def_readonly("dims", &RateSeries::dims)
      .def("alpha", &RateSeries::alpha)
      .def("rate", &RateSeries::rate, py::arg("s"),
           "CDF value at s, exact: 0 below the grid, 1 at and above alpha");

  m.def(
      "dim_series",
      [](std::uint32_t q, std::uint32_t r, Gamma gamma, unsigned jobs) {
        return CodeFamily(q, r, gamma).dim_series(jobs);
      },
      py::arg("q"), py::arg("r"), py::arg("gamma"), py::arg("jobs") = 1,
      "per-s code and subfield subcode dimensions, s = 0..alpha",
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "rate_series",
      [](std::uint32_t q, std::uint32_t r, Gamma gamma, unsigned jobs) {
        std::vector<DimRecord> recs;
        {
          py::gil_scoped_release release;
          recs = CodeFamily(q, r, gamma).dim_series(jobs);
        }
        return RateSeries::from_records(q, r, gamma, recs);
      },
      py::arg("q"), py::arg("r"), py::arg("gamma"), py::arg("jobs") = 1);
  m.def(
      "cached_rate_series",
      [](std::uint32_t q, std::uint32_t r, Gamma gamma, const std::string& cache_root,
         unsigned jobs) {
        return SeriesStore(cache_root).get(CodeFamily(q, r, gamma), jobs);
      },
      py::arg("q"), py::arg("r"), py::arg("gamma"), py::arg("cache_root") = "cache",
      py::arg("jobs") = 1, "rate series through the on-disk store");

  py::class_<MomentSummary>(m, "MomentSummary")
      .def_readonly("mean", &MomentSummary::mean)
      .def_readonly("second", &MomentSummary::second)
      .def_readonly("variance", &MomentSummary::variance)
      .def_readonly("stddev", &MomentSummary::stddev);
  m.def("moments", &moments, py::arg("series"));
  m.def("mean_ratio", &mean_ratio, py::arg("series"), py::arg("moments"));
  m.def("stddev_ratio", &stddev_ratio, py::arg("series"), py::arg("moments"));

  py::enum_<SampleMode>(m, "SampleMode")
      .value("jumps", SampleMode::jumps)
      .value("jumps_positive", SampleMode::jumps_positive);
  m.def("empirical_sample", &empirical_sample, py::arg("series"), py::arg("mode"));

  py::enum_<DistFamily>(m, "DistFamily")
      .value("extreme_value", DistFamily::extreme_value)
      .value("gamma", DistFamily::gamma)
      .value("weibull", DistFamily::weibull)
      .value("lognormal", DistFamily::lognormal)
      .value("logistic", DistFamily::logistic)
      .value("normal", DistFamily::normal)
      .value("exponential", DistFamily::exponential)
      .value("rayleigh", DistFamily::rayleigh)
      .value("uniform", DistFamily::uniform);
  m.def("family_token", &family_token);

  py::class_<DistParams>(m, "DistParams")
      .def(py::init([](double p1, double p2) { return DistParams{p1, p2}; }),
           py::arg("p1"), py::arg("p2") = 0.0)
      .def_readwrite("p1", &DistParams::p1)
      .def_readwrite("p2", &DistParams::p2);

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("family", &FitResult::family)
      .def_readonly("applicable", &FitResult::applicable)
      .def_readonly("params", &FitResult::params)
      .def_readonly("loglik", &FitResult::loglik)
      .def_readonly("aic", &FitResult::aic)
      .def_readonly("converged", &FitResult::converged)
      .def_readonly("iterations", &FitResult::iterations)
      .def("__repr__", [](const FitResult& f) {
        return "FitResult(" + family_token(f.family) +
               (f.applicable ? ", aic=" + std::to_string(f.aic) : ", inapplicable") +
               ")";
      });
  m.def("rank_by_aic", &rank_by_aic, py::arg("sample"),
        "maximum-likelihood fit of all nine families, ascending AIC");
  m.def(
      "moment_fit",
      [](DistFamily f, double mean, double var) -> py::object {
        auto p = moment_fit(f, mean, var);
        return p ? py::cast(*p) : py::none();
      },
      py::arg("family"), py::arg("mean"), py::arg("var"));
  m.def(
      "mle_fit",
      [](DistFamily f, const std::vector<double>& xs) -> py::object {
        auto p = mle_fit(f, xs);
        return p ? py::cast(*p) : py::none();
      },
      py::arg("family"), py::arg("sample"));
  m.def("log_pdf", &log_pdf, py::arg("family"), py::arg("params"), py::arg("x"));
  m.def("dist_cdf", &dist_cdf, py::arg("family"), py::arg("params"), py::arg("x"));
  m.def("loglik", &loglik, py::arg("family"), py::arg("params"), py::arg("sample"));

  py::class_<KeySizePoint>(m, "KeySizePoint")
      .def_readonly("s", &KeySizePoint::s)
      .def_readonly("rate", &KeySizePoint::rate)
      .def_readonly("exact_bits", &KeySizePoint::exact_bits)
      .def_readonly("cdf", &KeySizePoint::cdf)
      .def_readonly("estimated_bits", &KeySizePoint::estimated_bits);
  py::class_<KeySizeProfile>(m, "KeySizeProfile")
      .def_readonly("q", &KeySizeProfile::q)
      .def_readonly("r", &KeySizeProfile::r)
      .def_readonly("gamma", &KeySizeProfile::gamma)
      .def_readonly("model", &KeySizeProfile::model)
      .def_readonly("points", &KeySizeProfile::points)
      .def("csv", [](const KeySizeProfile& p) { return profile_csv(p); });
  m.def("key_bits", &key_bits, py::arg("r"), py::arg("n"), py::arg("k"));
  m.def("keysize_profile",
        py::overload_cast<const RateSeries&>(&keysize_profile), py::arg("series"));
  m.def("keysize_profile",
        py::overload_cast<const RateSeries&, const DistParams&>(&keysize_profile),
        py::arg("series"), py::arg("model"));
  m.def("estimated_peak_location", &estimated_peak_location, py::arg("model"));
}
