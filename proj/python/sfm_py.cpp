#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sfm/parse.hpp"
#include "sfm/qchar.hpp"
#include "sfm/stokes.hpp"
#include "sfm/virasoro.hpp"

namespace py = pybind11;
using namespace sfm;

namespace {

// Config from a path, or the zero connection when none is given.
Config config_of(const std::optional<std::string>& path) { return path ? load_config(*path) : Config{}; }

std::string integer_str(const Integer& z) { return z.get_str(); }

}  // namespace

PYBIND11_MODULE(sfmode, m) {
    m.doc() = "Semi-infinite Fock modules: Clifford action, twisted Virasoro operators, characters";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

    m.def(
        "act",
        [](const std::string& op, const std::string& vector, const std::optional<std::string>& config) {
            Config cfg = config_of(config);
            return vector_str(apply_expr(parse_expr(op, &cfg.symbols), parse_vector(vector, &cfg.symbols), cfg.C));
        },
        py::arg("op"), py::arg("vector") = "1*<vacuum>", py::arg("config") = py::none(),
        "Apply an operator expression such as \"L[0] L[0]\" to a module vector; returns its text form.");

    m.def(
        "bracket",
        [](const std::string& a, int mm, const std::string& b, int n, const std::optional<std::string>& config) {
            auto species = [](const std::string& s) {
                if (s == "+") return Species::Plus;
                if (s == "-") return Species::Minus;
                throw std::invalid_argument("species must be '+' or '-'");
            };
            Config cfg = config_of(config);
            return anticommutator({species(a), mm}, {species(b), n}, cfg.C).str();
        },
        py::arg("a"), py::arg("m"), py::arg("b"), py::arg("n"), py::arg("config") = py::none(),
        "Anticommutator {psi^a_m, psi^b_n} as a scalar string.");

    m.def(
        "c_const",
        [](int n, const std::optional<std::string>& config) { return c_const(n, config_of(config).C).str(); },
        py::arg("n"), py::arg("config") = py::none(), "Normal-ordering constant c_n.");

    m.def(
        "check_virasoro",
        [](int mm, int n, int cutoff, const std::optional<std::string>& config) {
            CheckReport r = virasoro_commutator_check(mm, n, cutoff, config_of(config).C);
            return py::dict(py::arg("ok") = r.ok, py::arg("checked") = r.checked, py::arg("detail") = r.detail);
        },
        py::arg("m"), py::arg("n"), py::arg("cutoff") = 8, py::arg("config") = py::none(),
        "[L_m, L_n] against (m-n) L_{m+n} plus the central term on the truncated basis.");

    m.def(
        "whittaker",
        [](int k, const std::string& config) {
            Config cfg = load_config(config);
            WhittakerData w = whittaker_solve(k, cfg.C);
            return py::dict(py::arg("k") = w.k, py::arg("a1") = w.a1.str(), py::arg("a2") = w.a2.str(),
                            py::arg("w") = vector_str(w.w), py::arg("unknowns") = w.unknowns);
        },
        py::arg("k"), py::arg("config"), "Whittaker vector with leading term v_k for a rational connection.");

    m.def(
        "descendant_rank",
        [](int k, int deg, const std::string& config) {
            RankReport r = descendant_rank_check(k, deg, load_config(config).C);
            return py::dict(py::arg("ok") = r.ok, py::arg("monomials") = r.monomials, py::arg("rank") = r.rank,
                            py::arg("module_dim") = r.module_dim, py::arg("detail") = r.detail);
        },
        py::arg("k"), py::arg("vir_deg_max"), py::arg("config"));

    m.def(
        "gauss_binomial",
        [](int T, int K) {
            std::vector<std::string> out;
            for (const auto& c : gauss_binomial(T, K).coeffs()) out.push_back(integer_str(c));
            return out;
        },
        py::arg("T"), py::arg("K"), "Coefficients of (T choose K)_q as decimal strings, q^0 first.");

    m.def(
        "identity_check",
        [](const std::string& which, int k, int M, int N) {
            IdentityReport r;
            if (which == "sum")
                r = identity_sum_check(k, M, N);
            else if (which == "split")
                r = identity_split_check(k, M, N);
            else
                throw std::invalid_argument("identity must be 'sum' or 'split'");
            return py::dict(py::arg("pass") = r.pass, py::arg("lhs") = r.lhs.str(), py::arg("rhs") = r.rhs.str());
        },
        py::arg("identity"), py::arg("k"), py::arg("M"), py::arg("N"));

    m.def("bijection_forward", [](const Partition& X, int k, int M, int N) {
        Split s = bijection_forward(X, k, M, N);
        return py::make_tuple(s.x, s.left, s.right);
    });
    m.def("bijection_inverse", [](int x, const Partition& left, const Partition& right, int k, int M, int N) {
        return bijection_inverse(Split{x, left, right}, k, M, N);
    });

    m.def(
        "schur",
        [](const Partition& lambda, const std::string& vector) {
            return vector_str(apply_symmetric(schur_to_power_sums(lambda), parse_vector(vector)));
        },
        py::arg("lambda_"), py::arg("vector"), "Apply the Schur function s_lambda (p_n = Shift[-n]).");
    m.def("schur_power_sums", [](const Partition& lambda) { return symmetric_str(schur_to_power_sums(lambda)); });

    m.def(
        "phi_b",
        [](int n, const std::string& xi, const std::string& eps, const std::string& tau) {
            auto phi = phi_recursion(n, parse_rational(xi), parse_rational(eps), parse_rational(tau));
            return to_string(phi.back().b);
        },
        py::arg("n"), py::arg("xi"), py::arg("eps"), py::arg("tau"),
        "Upper-right entry of Phi_n from the recursion, exact.");

    m.def(
        "stokes_probe",
        [](long n, double xi, double eps, double tau) { return stokes_limit_probe(n, xi, eps, tau).m[0][1]; },
        py::arg("n"), py::arg("xi"), py::arg("eps"), py::arg("tau"));
    m.def("stokes_reference", &stokes_reference, py::arg("eps"), py::arg("tau"));
    m.def("inc_gamma_upper", &inc_gamma_upper, py::arg("s"), py::arg("x"));
    m.def("ode_residual_B", &ode_residual_B, py::arg("z"), py::arg("xi"), py::arg("eps"), py::arg("tau"));
}
