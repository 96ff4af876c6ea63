// Python bindings: fields cross the boundary as 1-D numpy complex128 arrays of
// Fourier coefficients; everything else maps structs and enums one to one.
#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <complex>
#include <vector>

#include "qzak/conservation.hpp"
#include "qzak/dynamics.hpp"
#include "qzak/estimates.hpp"
#include "qzak/grid.hpp"
#include "qzak/limits.hpp"
#include "qzak/norms.hpp"
#include "qzak/quadrature.hpp"
#include "qzak/rng.hpp"
#include "qzak/runner.hpp"
#include "qzak/state.hpp"
#include "qzak/symbols.hpp"

namespace py = pybind11;
using namespace qzak;

namespace pybind11 {
namespace detail {

// FourierField <-> numpy complex128 (copies both ways; fields are small).
template <>
struct type_caster<FourierField> {
    PYBIND11_TYPE_CASTER(FourierField, const_name("numpy.ndarray[complex128]"));

    bool load(handle src, bool) {
        auto arr = array_t<std::complex<double>, array::c_style | array::forcecast>::ensure(src);
        if (!arr || arr.ndim() != 1) return false;
        value.c.assign(arr.data(), arr.data() + arr.shape(0));
        return true;
    }

    static handle cast(const FourierField& f, return_value_policy, handle) {
        array_t<std::complex<double>> arr(static_cast<py::ssize_t>(f.c.size()));
        std::copy(f.c.begin(), f.c.end(), arr.mutable_data());
        return arr.release();
    }
};

}  // namespace detail
}  // namespace pybind11

namespace {

py::array_t<std::complex<double>> to_numpy(const std::vector<cplx>& v) {
    py::array_t<std::complex<double>> arr(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), arr.mutable_data());
    return arr;
}

}  // namespace

PYBIND11_MODULE(_qzak, m) {
    m.doc() = "Pseudospectral solver and estimate lab for the quantum Zakharov system";
    m.attr("__version__") = qzak_version();

    // ---- quadrature options (registered first: used in default arguments) ----
    py::class_<QuadOptions>(m, "QuadOptions")
        .def(py::init<>())
        .def_readwrite("rel_tol", &QuadOptions::rel_tol)
        .def_readwrite("abs_tol", &QuadOptions::abs_tol)
        .def_readwrite("max_intervals", &QuadOptions::max_intervals);

    // ---- grid and operators -------------------------------------------------
    py::class_<SpectralGrid>(m, "SpectralGrid")
        .def_readonly("n", &SpectralGrid::n)
        .def_readonly("length", &SpectralGrid::length)
        .def_readonly("xi", &SpectralGrid::xi)
        .def_readonly("dealias_keep", &SpectralGrid::dealias_keep)
        .def("dx", &SpectralGrid::dx)
        .def("node", &SpectralGrid::node, py::arg("m"))
        .def("mode_index", &SpectralGrid::mode_index, py::arg("k"))
        .def("wavenumber", &SpectralGrid::wavenumber, py::arg("j"));
    m.def("make_grid", &make_grid, py::arg("n"), py::arg("length"));

    py::class_<DispersionSymbols>(m, "DispersionSymbols")
        .def_readonly("eps", &DispersionSymbols::eps)
        .def_readonly("phi", &DispersionSymbols::phi)
        .def_readonly("sqrt_phi", &DispersionSymbols::sqrt_phi);
    m.def("make_symbols", &make_symbols, py::arg("grid"), py::arg("eps"));
    m.def("phi_eps", &phi_eps, py::arg("xi"), py::arg("eps"));

    py::enum_<Symbol>(m, "Symbol")
        .value("delta_eps", Symbol::delta_eps)
        .value("lambda_", Symbol::lambda)
        .value("lambda_inv", Symbol::lambda_inv)
        .value("lambda_inv_delta", Symbol::lambda_inv_delta)
        .value("d_eps", Symbol::d_eps)
        .value("dx", Symbol::dx)
        .value("dx_inv", Symbol::dx_inv)
        .value("laplacian", Symbol::laplacian);
    m.def("apply_symbol", &apply_symbol, py::arg("grid"), py::arg("symbols"), py::arg("which"),
          py::arg("field"), py::arg("alpha") = 0.0);

    m.def("field_from_physical",
          [](const SpectralGrid& g, const std::vector<cplx>& phys) {
              return field_from_physical(g, phys);
          },
          py::arg("grid"), py::arg("samples"));
    m.def("to_physical",
          [](const SpectralGrid& g, const FourierField& f) { return to_numpy(to_physical(g, f)); },
          py::arg("grid"), py::arg("field"));
    m.def("dealias",
          [](const SpectralGrid& g, FourierField f) {
              apply_dealias(g, f);
              return f;
          },
          py::arg("grid"), py::arg("field"), "Copy of the field with the 2/3 rule applied.");
    m.def("dealiased_product", &dealiased_product, py::arg("grid"), py::arg("a"), py::arg("b"));
    m.def("dealiased_modulus_squared", &dealiased_modulus_squared, py::arg("grid"), py::arg("e"));
    m.def("is_conjugate_symmetric", &is_conjugate_symmetric, py::arg("grid"), py::arg("field"),
          py::arg("tol"));
    m.def("conjugate_symmetrize",
          [](const SpectralGrid& g, FourierField f) {
              make_conjugate_symmetric(g, f);
              return f;
          },
          py::arg("grid"), py::arg("field"));
    m.def("linf_coefficient_distance", &linf_coefficient_distance, py::arg("a"), py::arg("b"));
    m.def("l2_distance", &l2_distance, py::arg("grid"), py::arg("a"), py::arg("b"));

    // ---- rng and initial-data profiles --------------------------------------
    py::class_<CounterRng>(m, "CounterRng")
        .def(py::init<uint64_t, uint64_t>(), py::arg("seed"), py::arg("stream"))
        .def("next_u64", &CounterRng::next_u64)
        .def("next_double", &CounterRng::next_double)
        .def("uniform", &CounterRng::uniform, py::arg("lo"), py::arg("hi"));

    m.def("gaussian_profile", &gaussian_profile, py::arg("grid"), py::arg("amplitude"),
          py::arg("width"), py::arg("center"));
    m.def("sech_profile", &sech_profile, py::arg("grid"), py::arg("amplitude"), py::arg("width"),
          py::arg("center"));
    m.def("plane_wave", &plane_wave, py::arg("grid"), py::arg("wavenumber"));
    m.def("cosine_profile", &cosine_profile, py::arg("grid"), py::arg("amplitude"),
          py::arg("wavenumber"));
    m.def("random_sobolev_data", &random_sobolev_data, py::arg("grid"), py::arg("s"),
          py::arg("amplitude"), py::arg("real_field"), py::arg("rng"));

    // ---- states and dynamics ------------------------------------------------
    py::class_<PrimalState>(m, "PrimalState")
        .def(py::init<>())
        .def_readwrite("E", &PrimalState::E)
        .def_readwrite("n", &PrimalState::n)
        .def_readwrite("nt", &PrimalState::nt)
        .def_readwrite("t", &PrimalState::t);
    py::class_<SplitState>(m, "SplitState")
        .def(py::init<>())
        .def_readwrite("E", &SplitState::E)
        .def_readwrite("n_plus", &SplitState::n_plus)
        .def_readwrite("n_minus", &SplitState::n_minus)
        .def_readwrite("t", &SplitState::t);
    m.def("split_state", &split_state, py::arg("grid"), py::arg("symbols"), py::arg("state"));
    m.def("unsplit_state", &unsplit_state, py::arg("grid"), py::arg("symbols"), py::arg("state"));

    py::register_exception<BlowupError>(m, "BlowupError");

    m.def("free_evolve", &free_evolve, py::arg("grid"), py::arg("symbols"), py::arg("state"),
          py::arg("t"));
    py::class_<SplitTendency>(m, "SplitTendency")
        .def_readonly("dE", &SplitTendency::dE)
        .def_readonly("dn_plus", &SplitTendency::dn_plus)
        .def_readonly("dn_minus", &SplitTendency::dn_minus);
    m.def("nonlinear_rhs", &nonlinear_rhs, py::arg("grid"), py::arg("symbols"), py::arg("state"));
    m.def("step_strang", &step_strang, py::arg("grid"), py::arg("symbols"), py::arg("state"),
          py::arg("dt"));

    py::class_<PicardResult>(m, "PicardResult")
        .def_readonly("times", &PicardResult::times)
        .def_readonly("iterates", &PicardResult::iterates)
        .def_readonly("residuals", &PicardResult::residuals)
        .def_readonly("diverged", &PicardResult::diverged);
    m.def("picard_iterate", &picard_iterate, py::arg("grid"), py::arg("symbols"), py::arg("s0"),
          py::arg("t_final"), py::arg("n_time_nodes"), py::arg("n_iters"),
          py::call_guard<py::gil_scoped_release>());

    py::enum_<Integrator>(m, "Integrator")
        .value("strang", Integrator::strang)
        .value("picard", Integrator::picard);
    py::enum_<ProfileKind>(m, "ProfileKind")
        .value("zero", ProfileKind::zero)
        .value("gaussian", ProfileKind::gaussian)
        .value("soliton", ProfileKind::soliton)
        .value("plane_wave", ProfileKind::plane_wave)
        .value("cosine", ProfileKind::cosine)
        .value("random_sobolev", ProfileKind::random_sobolev)
        .value("adiabatic", ProfileKind::adiabatic);
    py::class_<ProfileSpec>(m, "ProfileSpec")
        .def(py::init<>())
        .def_readwrite("kind", &ProfileSpec::kind)
        .def_readwrite("amplitude", &ProfileSpec::amplitude)
        .def_readwrite("width", &ProfileSpec::width)
        .def_readwrite("center", &ProfileSpec::center)
        .def_readwrite("wavenumber", &ProfileSpec::wavenumber)
        .def_readwrite("exponent", &ProfileSpec::exponent);
    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("n", &SimConfig::n)
        .def_readwrite("length", &SimConfig::length)
        .def_readwrite("eps", &SimConfig::eps)
        .def_readwrite("dt", &SimConfig::dt)
        .def_readwrite("t_final", &SimConfig::t_final)
        .def_readwrite("integrator", &SimConfig::integrator)
        .def_readwrite("e0", &SimConfig::e0)
        .def_readwrite("n0", &SimConfig::n0)
        .def_readwrite("nt0", &SimConfig::nt0)
        .def_readwrite("record_stride", &SimConfig::record_stride)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("picard_nodes", &SimConfig::picard_nodes)
        .def_readwrite("picard_iters", &SimConfig::picard_iters);

    py::class_<Frame>(m, "Frame")
        .def_readonly("t", &Frame::t)
        .def_readonly("state", &Frame::state)
        .def_readonly("mass", &Frame::mass)
        .def_readonly("hamiltonian", &Frame::hamiltonian)
        .def_property_readonly("h_terms", [](const Frame& f) {
            return std::vector<double>(f.h_terms, f.h_terms + 6);
        });
    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("frames", &Trajectory::frames)
        .def_readonly("blew_up", &Trajectory::blew_up)
        .def_readonly("blowup_time", &Trajectory::blowup_time);

    m.def("make_initial_state", &make_initial_state, py::arg("grid"), py::arg("symbols"),
          py::arg("config"));
    m.def("simulate", &simulate, py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("validate_sim_config", [](const SimConfig& cfg) { validate(cfg); }, py::arg("config"));

    // ---- conserved quantities ----------------------------------------------
    m.def("mass", &mass, py::arg("grid"), py::arg("state"));
    py::class_<ConservationReport>(m, "ConservationReport")
        .def_readonly("mass", &ConservationReport::mass)
        .def_readonly("hamiltonian", &ConservationReport::hamiltonian)
        .def_readonly("momentum", &ConservationReport::momentum)
        .def_readonly("h_terms", &ConservationReport::h_terms);
    m.def("conservation_report", &conservation_report, py::arg("grid"), py::arg("symbols"),
          py::arg("state"));
    py::class_<MomentumDensities>(m, "MomentumDensities")
        .def_readonly("rho", &MomentumDensities::rho)
        .def_readonly("j", &MomentumDensities::j)
        .def_readonly("j_q", &MomentumDensities::j_q);
    m.def("momentum_densities", &momentum_densities, py::arg("grid"), py::arg("symbols"),
          py::arg("state"));
    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("mass_sup", &ResidualReport::mass_sup)
        .def_readonly("mass_l2", &ResidualReport::mass_l2)
        .def_readonly("momentum_sup", &ResidualReport::momentum_sup)
        .def_readonly("momentum_l2", &ResidualReport::momentum_l2);
    m.def("local_conservation_residual", &local_conservation_residual, py::arg("grid"),
          py::arg("symbols"), py::arg("trajectory"));
    py::class_<FrameResiduals>(m, "FrameResiduals")
        .def_readonly("mass_l2", &FrameResiduals::mass_l2)
        .def_readonly("momentum_l2", &FrameResiduals::momentum_l2);
    m.def("frame_residuals", &frame_residuals, py::arg("grid"), py::arg("symbols"),
          py::arg("trajectory"));

    // ---- norms --------------------------------------------------------------
    m.def("sobolev_norm", &sobolev_norm, py::arg("grid"), py::arg("field"), py::arg("s"));
    py::enum_<Phase>(m, "Phase")
        .value("schrodinger", Phase::schrodinger)
        .value("wave_plus", Phase::wave_plus)
        .value("wave_minus", Phase::wave_minus);
    m.def("bourgain_norm", &bourgain_norm, py::arg("grid"), py::arg("symbols"), py::arg("frames"),
          py::arg("window_T"), py::arg("s"), py::arg("b"), py::arg("phase"));

    // ---- singular limits ----------------------------------------------------
    m.def("adiabatic_density", &adiabatic_density, py::arg("grid"), py::arg("e"), py::arg("eps"));
    py::enum_<NlsVariant>(m, "NlsVariant")
        .value("cubic", NlsVariant::cubic)
        .value("quantum_perturbed", NlsVariant::quantum_perturbed);
    m.def("solve_nls_family", &solve_nls_family, py::arg("grid"), py::arg("e0"), py::arg("eps"),
          py::arg("variant"), py::arg("t_final"), py::arg("dt"), py::arg("record_stride"),
          py::call_guard<py::gil_scoped_release>());
    py::class_<LimitRow>(m, "LimitRow")
        .def_readonly("eps", &LimitRow::eps)
        .def_readonly("norm_name", &LimitRow::norm_name)
        .def_readonly("value", &LimitRow::value)
        .def_readonly("runtime_seconds", &LimitRow::runtime_seconds);
    py::class_<LimitExperimentConfig>(m, "LimitExperimentConfig")
        .def(py::init<>())
        .def_readwrite("eps_sequence", &LimitExperimentConfig::eps_sequence)
        .def_readwrite("n", &LimitExperimentConfig::n)
        .def_readwrite("length", &LimitExperimentConfig::length)
        .def_readwrite("dt", &LimitExperimentConfig::dt)
        .def_readwrite("t_compare", &LimitExperimentConfig::t_compare)
        .def_readwrite("sobolev_orders", &LimitExperimentConfig::sobolev_orders)
        .def_readwrite("seed", &LimitExperimentConfig::seed)
        .def_readwrite("classical_comparison", &LimitExperimentConfig::classical_comparison)
        .def_readwrite("adiabatic_tracking", &LimitExperimentConfig::adiabatic_tracking)
        .def_readwrite("e0_amplitude", &LimitExperimentConfig::e0_amplitude)
        .def_readwrite("e0_width", &LimitExperimentConfig::e0_width);
    m.def("validate_limit_config", [](const LimitExperimentConfig& cfg) { validate(cfg); },
          py::arg("config"));
    m.def("limit_experiment", &limit_experiment, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    // ---- estimate lab -------------------------------------------------------
    py::enum_<KernelKind>(m, "KernelKind")
        .value("C1", KernelKind::C1)
        .value("C2", KernelKind::C2)
        .value("C3", KernelKind::C3);
    m.def("kernel_name", &kernel_name, py::arg("kind"));
    py::class_<EstimateConfig>(m, "EstimateConfig")
        .def(py::init<>())
        .def_readwrite("theta", &EstimateConfig::theta)
        .def_readwrite("k", &EstimateConfig::k)
        .def_readwrite("l", &EstimateConfig::l)
        .def_readwrite("eps", &EstimateConfig::eps)
        .def("b", &EstimateConfig::b)
        .def("b1", &EstimateConfig::b1)
        .def("b_prime", &EstimateConfig::b_prime)
        .def("b1_prime", &EstimateConfig::b1_prime)
        .def("c", &EstimateConfig::c)
        .def("c1", &EstimateConfig::c1)
        .def("big_b1", &EstimateConfig::big_b1)
        .def("big_b2", &EstimateConfig::big_b2)
        .def("big_b", &EstimateConfig::big_b);
    m.def("validate_estimate_config", &validate_estimate_config, py::arg("config"),
          py::arg("kind"));

    m.def("resonance_cubic", &resonance_cubic, py::arg("tau"), py::arg("xi"), py::arg("eta"),
          py::arg("eps"));
    m.def("resonance_direct", &resonance_direct, py::arg("tau"), py::arg("xi"), py::arg("eta"),
          py::arg("eps"));

    py::class_<TauIntegral>(m, "TauIntegral")
        .def_readonly("value", &TauIntegral::value)
        .def_readonly("bound_ratio", &TauIntegral::bound_ratio)
        .def_readonly("alpha", &TauIntegral::alpha)
        .def_readonly("evaluations", &TauIntegral::evaluations)
        .def_readonly("converged", &TauIntegral::converged);
    m.def("weighted_tau_integral", &weighted_tau_integral, py::arg("a_minus"), py::arg("a_plus"),
          py::arg("s1"), py::arg("s2"), py::arg("opt") = QuadOptions{},
          py::call_guard<py::gil_scoped_release>());
    py::class_<TauProfile>(m, "TauProfile")
        .def(py::init<double, double>(), py::arg("a_minus"), py::arg("a_plus"))
        .def("__call__", &TauProfile::operator(), py::arg("distance"))
        .def("at_zero", &TauProfile::at_zero)
        .def("a_minus", &TauProfile::a_minus)
        .def("a_plus", &TauProfile::a_plus);

    py::class_<EtaIntegral>(m, "EtaIntegral")
        .def_readonly("tau", &EtaIntegral::tau)
        .def_readonly("xi", &EtaIntegral::xi)
        .def_readonly("lhs", &EtaIntegral::lhs)
        .def_readonly("rhs", &EtaIntegral::rhs)
        .def_readonly("ratio", &EtaIntegral::ratio)
        .def_readonly("evaluations", &EtaIntegral::evaluations);
    m.def("eta_integral_bound", &eta_integral_bound, py::arg("tau"), py::arg("xi"), py::arg("eps"),
          py::arg("big_b"), py::arg("opt") = QuadOptions{},
          py::call_guard<py::gil_scoped_release>());

    py::class_<ScanPoint>(m, "ScanPoint")
        .def_readonly("tau", &ScanPoint::tau)
        .def_readonly("xi", &ScanPoint::xi)
        .def_readonly("kernel_value", &ScanPoint::kernel_value)
        .def_readonly("prefactor", &ScanPoint::prefactor)
        .def_readonly("product", &ScanPoint::product);
    py::class_<ScanConfig>(m, "ScanConfig")
        .def(py::init<>())
        .def_readwrite("kind", &ScanConfig::kind)
        .def_readwrite("est", &ScanConfig::est)
        .def_readwrite("n_tau", &ScanConfig::n_tau)
        .def_readwrite("n_xi", &ScanConfig::n_xi)
        .def_readwrite("tau_abs_min", &ScanConfig::tau_abs_min)
        .def_readwrite("tau_abs_max", &ScanConfig::tau_abs_max)
        .def_readwrite("xi_min", &ScanConfig::xi_min)
        .def_readwrite("xi_max", &ScanConfig::xi_max)
        .def_readwrite("include_case_boundaries", &ScanConfig::include_case_boundaries)
        .def_readwrite("threads", &ScanConfig::threads);
    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("config", &ScanResult::config)
        .def_readonly("points", &ScanResult::points)
        .def_readonly("supremum", &ScanResult::supremum)
        .def_readonly("argmax_tau", &ScanResult::argmax_tau)
        .def_readonly("argmax_xi", &ScanResult::argmax_xi)
        .def_readonly("xi_series", &ScanResult::xi_series)
        .def_readonly("sup_per_xi", &ScanResult::sup_per_xi)
        .def_readonly("slope", &ScanResult::slope)
        .def_readonly("seconds", &ScanResult::seconds)
        .def_readonly("warnings", &ScanResult::warnings);
    m.def("kernel_sup_scan", &kernel_sup_scan, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("log_log_slope", &log_log_slope, py::arg("x"), py::arg("y"));

    py::enum_<PhaseBranch>(m, "PhaseBranch")
        .value("schro_schro", PhaseBranch::schro_schro)
        .value("wave_plus", PhaseBranch::wave_plus)
        .value("wave_minus", PhaseBranch::wave_minus)
        .value("wave_plus_far", PhaseBranch::wave_plus_far)
        .value("wave_minus_far", PhaseBranch::wave_minus_far);
    m.def("phase_branch_name", &phase_branch_name, py::arg("branch"));
    py::class_<ResonanceGeometry>(m, "ResonanceGeometry")
        .def_readonly("tau", &ResonanceGeometry::tau)
        .def_readonly("xi", &ResonanceGeometry::xi)
        .def_readonly("eps", &ResonanceGeometry::eps)
        .def_readonly("gamma", &ResonanceGeometry::gamma)
        .def_readonly("a_scale", &ResonanceGeometry::a_scale)
        .def_readonly("branch", &ResonanceGeometry::branch)
        .def_readonly("a_m", &ResonanceGeometry::a_m)
        .def_readonly("m", &ResonanceGeometry::m)
        .def_readonly("lambda_plus", &ResonanceGeometry::lambda_plus)
        .def_readonly("lambda_minus", &ResonanceGeometry::lambda_minus)
        .def_readonly("lambda_plus_order_one", &ResonanceGeometry::lambda_plus_order_one)
        .def_readonly("lambda_minus_order_one", &ResonanceGeometry::lambda_minus_order_one)
        .def_readonly("root_r", &ResonanceGeometry::root_r)
        .def_readonly("a2", &ResonanceGeometry::a2)
        .def_readonly("min_f_second", &ResonanceGeometry::min_f_second)
        .def_readonly("convex_certified", &ResonanceGeometry::convex_certified);
    m.def("stationary_points", &stationary_points, py::arg("tau"), py::arg("xi"), py::arg("eps"),
          py::arg("branch"));
    m.def("wave_phase_value", &wave_phase_value, py::arg("tau"), py::arg("xi"), py::arg("eps"),
          py::arg("branch"), py::arg("xi1"));
    m.def("wave_phase_second_derivative", &wave_phase_second_derivative, py::arg("xi"),
          py::arg("eps"), py::arg("branch"), py::arg("xi1"));

    py::class_<RegionCheck>(m, "RegionCheck")
        .def_readonly("inside", &RegionCheck::inside)
        .def_readonly("active_constraints", &RegionCheck::active_constraints);
    m.def("region_membership", &region_membership, py::arg("k"), py::arg("l"));
    m.def("region_boundary_polyline", &region_boundary_polyline, py::arg("k_max") = 3.0);

    py::class_<AroundXiIntegral>(m, "AroundXiIntegral")
        .def_readonly("tau", &AroundXiIntegral::tau)
        .def_readonly("xi", &AroundXiIntegral::xi)
        .def_readonly("value", &AroundXiIntegral::value)
        .def_readonly("bound_ratio", &AroundXiIntegral::bound_ratio)
        .def_readonly("evaluations", &AroundXiIntegral::evaluations);
    m.def("around_xi_integral", &around_xi_integral, py::arg("tau"), py::arg("xi"), py::arg("eps"),
          py::arg("k"), py::arg("l"), py::arg("big_b"), py::arg("opt") = QuadOptions{},
          py::call_guard<py::gil_scoped_release>());

    py::class_<ProfilePoint>(m, "ProfilePoint")
        .def_readonly("xi1", &ProfilePoint::xi1)
        .def_readonly("f_value", &ProfilePoint::f_value);
    m.def("phase_profile", &phase_profile, py::arg("tau"), py::arg("xi"), py::arg("eps"),
          py::arg("branch"), py::arg("hi"), py::arg("samples"));
}
