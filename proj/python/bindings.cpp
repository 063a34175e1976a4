#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "starorder/automorphism.hpp"
#include "starorder/errors.hpp"
#include "starorder/harness/hasse.hpp"
#include "starorder/harness/io.hpp"
#include "starorder/harness/oracle.hpp"
#include "starorder/harness/suites.hpp"
#include "starorder/numerics.hpp"
#include "starorder/penrose.hpp"
#include "starorder/report.hpp"
#include "starorder/scalar_map.hpp"
#include "starorder/spectral_model.hpp"
#include "starorder/star_order.hpp"

namespace py = pybind11;
using namespace starorder;
using py::arg;

namespace {

Variant parse_variant(const std::string& v) {
    if (v == "direct") return Variant::direct;
    if (v == "adjoint") return Variant::adjoint;
    throw ContractError("variant must be 'direct' or 'adjoint'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Star partial order on complex matrices";
    m.attr("__version__") = "0.1.0";

    auto base = py::register_exception<Error>(m, "StarOrderError");
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<MapDomainError>(m, "MapDomainError", domain.ptr());
    py::register_exception<ContractError>(m, "ContractError", base.ptr());
    py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
    py::register_exception<NumericFailure>(m, "NumericFailure", base.ptr());

    py::class_<ToleranceConfig>(m, "ToleranceConfig")
        .def(py::init([](double eq, double rank, double group) {
                 ToleranceConfig t{eq, rank, group};
                 t.validate();
                 return t;
             }),
             arg("eq_tol") = 1e-9, arg("rank_tol") = 1e-10, arg("group_tol") = 1e-8)
        .def_readwrite("eq_tol", &ToleranceConfig::eq_tol)
        .def_readwrite("rank_tol", &ToleranceConfig::rank_tol)
        .def_readwrite("group_tol", &ToleranceConfig::group_tol)
        .def("__repr__", [](const ToleranceConfig& t) {
            return "ToleranceConfig(eq_tol=" + std::to_string(t.eq_tol) +
                   ", rank_tol=" + std::to_string(t.rank_tol) +
                   ", group_tol=" + std::to_string(t.group_tol) + ")";
        });
    const ToleranceConfig dflt{};

    // numerics
    m.def("svd", [](const ComplexMatrix& a, const ToleranceConfig& tol) {
        const SvdResult s = svd(a, tol);
        return py::make_tuple(s.u, s.sigma, s.v);
    }, arg("a"), arg("tol") = dflt, "Returns (U, sigma descending, V) with A = U diag(sigma) V*.");
    m.def("polar", [](const ComplexMatrix& a, const ToleranceConfig& tol) {
        const PolarParts p = polar(a, tol);
        return py::make_tuple(p.w, p.p);
    }, arg("a"), arg("tol") = dflt, "Support polar decomposition (W, |A|).");
    m.def("rank", &rank, arg("a"), arg("tol") = dflt);
    m.def("approx_eq", &approx_eq, arg("a"), arg("b"), arg("tol") = dflt);
    m.def("digest", &digest, arg("a"));

    // order layer
    m.def("star_leq", &star_leq, arg("a"), arg("b"), arg("tol") = dflt);
    m.def("orthogonal", &orthogonal, arg("a"), arg("b"), arg("tol") = dflt);
    m.def("block_witness", [](const ComplexMatrix& a, const ComplexMatrix& b,
                              const ToleranceConfig& tol) -> py::object {
        const auto w = block_witness(a, b, tol);
        if (!w) return py::none();
        py::dict d;
        d["p_h1"] = w->p_h1;
        d["p_h2"] = w->p_h2;
        d["p_k1"] = w->p_k1;
        d["p_k2"] = w->p_k2;
        return d;
    }, arg("a"), arg("b"), arg("tol") = dflt);
    m.def("try_join", &try_join, arg("a"), arg("b"), arg("tol") = dflt);
    m.def("supremum_with_bound", &supremum_with_bound, arg("family"), arg("bound"),
          arg("tol") = dflt);

    // Penrose decomposition
    py::class_<PenroseTerm>(m, "PenroseTerm")
        .def(py::init<double, ComplexMatrix>(), arg("value"), arg("isometry"))
        .def_readwrite("value", &PenroseTerm::value)
        .def_readwrite("isometry", &PenroseTerm::isometry);
    py::class_<PenroseDecomposition>(m, "PenroseDecomposition")
        .def(py::init([](Eigen::Index dim, std::vector<PenroseTerm> terms) {
                 return PenroseDecomposition{dim, std::move(terms), {}};
             }),
             arg("dim"), arg("terms"))
        .def_readonly("dim", &PenroseDecomposition::dim)
        .def_readonly("terms", &PenroseDecomposition::terms)
        .def_readonly("warnings", &PenroseDecomposition::warnings)
        .def("values", [](const PenroseDecomposition& pd) {
            std::vector<double> v;
            for (const auto& t : pd.terms) v.push_back(t.value);
            return v;
        });
    m.def("penrose_decompose", &penrose_decompose, arg("a"), arg("tol") = dflt);
    m.def("reconstruct", &reconstruct, arg("pd"), arg("tol") = dflt);
    m.def("pd_star_leq", &pd_star_leq, arg("lhs"), arg("rhs"), arg("tol") = dflt);
    m.def("is_partial_isometry", &is_partial_isometry, arg("a"), arg("tol") = dflt);
    m.def("rank_one", &rank_one, arg("x"), arg("y"));

    // spectral models
    py::class_<SpectralModel>(m, "SpectralModel")
        .def(py::init([](const std::vector<std::tuple<double, std::string, int>>& atoms,
                         const std::vector<std::tuple<double, double, std::string>>& bands) {
                 std::vector<Atom> a;
                 for (const auto& [v, l, k] : atoms) a.push_back({v, l, k});
                 std::vector<Band> b;
                 for (const auto& [lo, hi, l] : bands) b.push_back({lo, hi, l});
                 return SpectralModel(std::move(a), std::move(b));
             }),
             arg("atoms") = std::vector<std::tuple<double, std::string, int>>{},
             arg("bands") = std::vector<std::tuple<double, double, std::string>>{})
        .def_property_readonly("atoms", [](const SpectralModel& s) {
            std::vector<std::tuple<double, std::string, int>> out;
            for (const auto& a : s.atoms()) out.emplace_back(a.value, a.label, a.multiplicity);
            return out;
        })
        .def_property_readonly("bands", [](const SpectralModel& s) {
            std::vector<std::tuple<double, double, std::string>> out;
            for (const auto& b : s.bands()) out.emplace_back(b.lo, b.hi, b.label);
            return out;
        })
        .def("__eq__", [](const SpectralModel& a, const SpectralModel& b) { return a == b; })
        .def("__repr__", [](const SpectralModel& s) { return harness::dump_model(s); });
    m.def("model_type_split", [](const SpectralModel& s) {
        const TypeSplit t = model_type_split(s);
        return py::make_tuple(t.type1, t.type2);
    }, arg("model"));
    m.def("model_merge", &model_merge, arg("m1"), arg("m2"));
    m.def("model_star_leq", &model_star_leq, arg("lhs"), arg("rhs"));
    m.def("discretize", [](const SpectralModel& s, const std::vector<double>& partition,
                           Eigen::Index dim_per_cell, const ToleranceConfig& tol) {
        const Discretization d = discretize(s, partition, dim_per_cell, std::nullopt, tol);
        std::vector<std::pair<double, double>> adj;
        for (const auto& a : d.adjustments) adj.emplace_back(a.original, a.adjusted);
        return py::make_tuple(d.decomposition, adj);
    }, arg("model"), arg("partition"), arg("dim_per_cell") = 1, arg("tol") = dflt,
       "Returns (PenroseDecomposition, [(original, adjusted) value shifts]).");

    // scalar maps and automorphisms
    py::class_<ScalarMap>(m, "ScalarMap")
        .def_static("identity", &ScalarMap::identity)
        .def_static("power", &ScalarMap::power, arg("exponent"))
        .def_static("scale", &ScalarMap::scale, arg("factor"))
        .def_static("phase_power", &ScalarMap::phase_power, arg("exponent"), arg("phase"))
        .def_static("piecewise_linear", &ScalarMap::piecewise_linear, arg("breakpoints"))
        .def_property_readonly("kind", [](const ScalarMap& h) { return to_string(h.kind()); })
        .def("__call__", &ScalarMap::operator(), arg("x"))
        .def("continuous_at_zero", &ScalarMap::continuous_at_zero)
        .def("__eq__", [](const ScalarMap& a, const ScalarMap& b) { return a == b; })
        .def("__repr__", [](const ScalarMap& h) { return harness::dump_scalar_map(h); });

    py::class_<AutomorphismSpec>(m, "AutomorphismSpec")
        .def(py::init([](double alpha, const ComplexMatrix& s, const ComplexMatrix& t,
                         const ScalarMap& h, const std::string& variant, bool anti,
                         const ToleranceConfig& tol) {
                 return AutomorphismSpec(alpha, {s, anti}, {t, anti}, h, parse_variant(variant), tol);
             }),
             arg("alpha"), arg("s"), arg("t"), arg("h") = ScalarMap::identity(),
             arg("variant") = "direct", arg("antiunitary") = false, arg("tol") = dflt)
        .def_static("identity", &AutomorphismSpec::identity, arg("dim"))
        .def_property_readonly("alpha", &AutomorphismSpec::alpha)
        .def_property_readonly("s", [](const AutomorphismSpec& a) { return a.s().matrix; })
        .def_property_readonly("t", [](const AutomorphismSpec& a) { return a.t().matrix; })
        .def_property_readonly("h", &AutomorphismSpec::h)
        .def_property_readonly("variant", [](const AutomorphismSpec& a) { return to_string(a.variant()); })
        .def_property_readonly("antiunitary", &AutomorphismSpec::antiunitary)
        .def_property_readonly("dim", &AutomorphismSpec::dim);
    m.def("apply", &apply, arg("spec"), arg("a"), arg("tol") = dflt);
    m.def("apply_continuous", &apply_continuous, arg("spec"), arg("a"), arg("tol") = dflt);
    m.def("apply_model", &apply_model, arg("f"), arg("g"), arg("model"), arg("tol") = dflt);
    m.def("compose", &compose, arg("first"), arg("second"), "Spec of A -> first(second(A)).");
    m.def("invert", &invert, arg("spec"));
    m.def("verify_automorphism", [](const AutomorphismSpec& s, std::size_t trials, std::uint64_t seed,
                                    const ToleranceConfig& tol) {
        harness::GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.tol = tol;
        const VerificationReport r =
            verify_automorphism(s, harness::mixed_pair_sampler(s.dim(), cfg), trials, tol);
        return py::make_tuple(r.passed(), render(r));
    }, arg("spec"), arg("trials") = 200, arg("seed") = 1, arg("tol") = dflt,
       "Returns (passed, rendered report).");

    // harness
    m.def("suite_names", &harness::suite_names);
    m.def("run_suite", [](const std::string& name, std::uint64_t seed, int dim_min, int dim_max,
                          const ToleranceConfig& tol) {
        harness::GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.dim_min = dim_min;
        cfg.dim_max = dim_max;
        cfg.tol = tol;
        const VerificationReport r = harness::run_suite(name, cfg);
        return py::make_tuple(r.passed(), render(r));
    }, arg("name"), arg("seed") = 1, arg("dim_min") = 1, arg("dim_max") = 8, arg("tol") = dflt,
       "Returns (passed, rendered report).");
    m.def("oracle_join", [](const ComplexMatrix& a, const ComplexMatrix& b, std::size_t budget,
                            std::uint64_t seed, const ToleranceConfig& tol) {
        const harness::OracleResult r = harness::oracle_join(a, b, budget, seed, tol);
        return py::make_tuple(std::string(harness::to_string(r.status)), r.join);
    }, arg("a"), arg("b"), arg("budget") = 16, arg("seed") = 1, arg("tol") = dflt,
       "Returns (status, join) with status 'found', 'none' or 'inconclusive'.");
    m.def("hasse_dot", [](const std::vector<ComplexMatrix>& nodes, std::vector<std::string> labels,
                          const ToleranceConfig& tol) {
        return harness::emit_dot(harness::hasse(nodes, tol, std::move(labels)));
    }, arg("nodes"), arg("labels") = std::vector<std::string>{}, arg("tol") = dflt);
}
