// sfm: command-line front end for the semi-infinite Fock module toolkit.
// Machine-readable JSON goes to stdout, human-readable tables to stderr.
// Exit codes: 0 verified, 1 verification failure, 2 input error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sfm/clifford.hpp"
#include "sfm/connection.hpp"
#include "sfm/fockmod.hpp"
#include "sfm/parse.hpp"
#include "sfm/qchar.hpp"
#include "sfm/stokes.hpp"
#include "sfm/virasoro.hpp"

using json = nlohmann::ordered_json;
using namespace sfm;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// caret_message without its leading "error: ", which main adds back
std::string caret(std::string_view text, const parse_error& e) {
    std::string s = caret_message(text, e);
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s.rfind("error: ", 0) == 0 ? s.substr(7) : s;
}

Config load_cfg(const std::string& path) {
    if (path.empty()) return Config{};  // zero connection
    const std::string text = read_file(path);
    try {
        return parse_config(text);
    } catch (const parse_error& e) {
        throw InputError(path + ":\n" + caret(text, e));
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

template <class F>
auto with_caret(const std::string& flag, const std::string& text, F&& f) {
    try {
        return f();
    } catch (const parse_error& e) {
        throw InputError(flag + ": " + caret(text, e));
    }
}

std::pair<int, int> parse_range(const std::string& flag, const std::string& s) {
    auto colon = s.find(':');
    auto num = [&](std::string_view t) {
        int v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size() || t.empty())
            throw InputError(flag + ": expected a:b with integers, got '" + s + "'");
        return v;
    };
    std::string_view sv(s);
    if (colon == std::string::npos) {
        int v = num(sv);
        return {v, v};
    }
    int a = num(sv.substr(0, colon)), b = num(sv.substr(colon + 1));
    if (a > b) throw InputError(flag + ": empty range '" + s + "'");
    return {a, b};
}

Species parse_species(const std::string& flag, const std::string& s) {
    if (s == "+") return Species::Plus;
    if (s == "-") return Species::Minus;
    throw InputError(flag + ": expected + or -");
}

json vector_json(const Vector& v) {
    json terms = json::array();
    for (const auto& [m, c] : v.terms()) terms.push_back({{"monomial", monomial_str(m)}, {"coef", c.str()}});
    return terms;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_out(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << body << "\n";
}

int cmd_bracket(const std::string& cfg_path, const std::string& a, int m, const std::string& b, int n) {
    Config cfg = load_cfg(cfg_path);
    Generator g{parse_species("--a", a), m}, h{parse_species("--b", b), n};
    Scalar ac = anticommutator(g, h, cfg.C);
    Connection A = cfg.A ? *cfg.A : c_to_a(cfg.C);
    Scalar res = residue_bracket(basis_section(g), basis_section(h), A);
    const bool pass = ac == res;
    emit(json{{"command", "bracket"},
              {"a", generator_str(g)},
              {"b", generator_str(h)},
              {"anticommutator", ac.str()},
              {"residue", res.str()},
              {"pass", pass}});
    std::cerr << "{" << generator_str(g) << ", " << generator_str(h) << "} = " << ac.str()
              << (pass ? "  (residue agrees)" : "  (residue DISAGREES: " + res.str() + ")") << "\n";
    return pass ? 0 : 1;
}

int cmd_act(const std::string& cfg_path, const std::string& op, const std::string& vec) {
    Config cfg = load_cfg(cfg_path);
    ExprAst e = with_caret("--op", op, [&] { return parse_expr(op, &cfg.symbols); });
    Vector v = with_caret("--vector", vec, [&] { return parse_vector(vec, &cfg.symbols); });
    Vector r = apply_expr(e, v, cfg.C);
    emit(json{{"command", "act"},
              {"op", expr_str(e)},
              {"vector", vector_str(v)},
              {"result", vector_str(r)},
              {"terms", vector_json(r)}});
    std::cerr << vector_str(r) << "\n";
    return 0;
}

int cmd_check_virasoro(const std::string& cfg_path, int cutoff, const std::string& mr,
                       const std::string& nr) {
    Config cfg = load_cfg(cfg_path);
    auto [m0, m1] = parse_range("--m-range", mr);
    auto [n0, n1] = parse_range("--n-range", nr);
    if (cutoff < 0) throw InputError("--cutoff must be >= 0");
    json pairs = json::array();
    bool all = true;
    std::cerr << "   m    n  checked  status\n";
    for (int m = m0; m <= m1; ++m)
        for (int n = n0; n <= n1; ++n) {
            CheckReport r = virasoro_commutator_check(m, n, cutoff, cfg.C);
            all = all && r.ok;
            json p{{"m", m}, {"n", n}, {"checked", r.checked}, {"ok", r.ok}};
            if (!r.ok) {
                p["detail"] = r.detail;
                p["lhs"] = vector_str(r.lhs);
                p["rhs"] = vector_str(r.rhs);
            }
            pairs.push_back(p);
            std::cerr << std::setw(4) << m << " " << std::setw(4) << n << " " << std::setw(8)
                      << r.checked << "  " << (r.ok ? "ok" : "FAIL " + r.detail) << "\n";
        }
    emit(json{{"command", "check-virasoro"}, {"cutoff", cutoff}, {"pass", all}, {"pairs", pairs}});
    return all ? 0 : 1;
}

int cmd_whittaker(const std::string& cfg_path, int k, const std::string& out) {
    Config cfg = load_cfg(cfg_path);
    WhittakerData d;
    if (cfg.C.all_constant()) {
        try {
            d = whittaker_solve(k, cfg.C);
        } catch (const std::domain_error& e) {
            emit(json{{"command", "whittaker"}, {"k", k}, {"verified", false}, {"error", e.what()}});
            std::cerr << e.what() << "\n";
            return 1;
        }
    } else {
        // symbolic parameters: test the leading vector itself
        d.k = k;
        d.a1 = whittaker_a1(k, cfg.C);
        d.a2 = c_const(2, cfg.C);
        d.w = Vector::of(v_k(k));
    }
    bool ok = true;
    const int top = degrees(v_k(k)).vert + 4;
    for (int n = 1; n <= top && ok; ++n) {
        Vector r = act_L(n, d.w, cfg.C);
        if (n == 1) r.add(d.w, -d.a1);
        if (n == 2) r.add(d.w, -d.a2);
        ok = r.is_zero();
    }
    json j{{"command", "whittaker"}, {"k", k},         {"a1", d.a1.str()},
           {"a2", d.a2.str()},       {"unknowns", d.unknowns}, {"w", vector_str(d.w)},
           {"terms", vector_json(d.w)}, {"verified", ok}};
    emit(j);
    if (!out.empty()) write_out(out, j.dump(2));
    std::cerr << "w_" << k << " = " << vector_str(d.w) << "\nL_1 eigenvalue " << d.a1.str()
              << ", L_2 eigenvalue " << d.a2.str() << (ok ? "" : "  (eigen-equations FAIL)") << "\n";
    return ok ? 0 : 1;
}

int cmd_character(const std::string& cfg_path, const std::string& kr, int cutoff, bool csv) {
    Config cfg = load_cfg(cfg_path);
    auto [k0, k1] = parse_range("--k-range", kr);
    if (cutoff < 0) throw InputError("--cutoff must be >= 0");
    CharacterTable t = module_character(cfg.C, k0, k1, cutoff);
    json rows = json::array();
    bool all = true;
    std::ostringstream table;
    table << "horiz,offset,module_dim,whittaker_dim\n";
    for (int k = k0; k <= k1; ++k) {
        auto wc = whittaker_character(k, cutoff);
        for (int d = 0; d <= cutoff; ++d) {
            auto it = t.find({k, d});
            std::size_t md = it == t.end() ? 0 : it->second;
            all = all && md == wc[d];
            rows.push_back({{"horiz", k}, {"offset", d}, {"module_dim", md}, {"whittaker_dim", wc[d]}});
            table << k << "," << d << "," << md << "," << wc[d] << "\n";
        }
    }
    if (csv) {
        std::cout << table.str();
    } else {
        emit(json{{"command", "character"}, {"cutoff", cutoff}, {"match", all}, {"rows", rows}});
        std::cerr << table.str();
    }
    return all ? 0 : 1;
}

int cmd_gauge(const std::string& cfg_path, const std::string& gauge_path, const std::string& out) {
    Config cfg = load_cfg(cfg_path);
    const std::string text = read_file(gauge_path);
    GaugeElement F = [&] {
        try {
            return parse_gauge(text, &cfg.symbols);
        } catch (const parse_error& e) {
            throw InputError(gauge_path + ":\n" + caret(text, e));
        } catch (const std::invalid_argument& e) {
            throw InputError(gauge_path + ": " + e.what());
        }
    }();
    Connection A = cfg.A ? *cfg.A : c_to_a(cfg.C);
    Connection B = gauge_transform(F, A);
    bool traceless = true;
    for (const auto& [k, a] : B.coeffs()) traceless = traceless && a.is_traceless();
    json images = json::array();
    for (Species s : {Species::Minus, Species::Plus}) {
        json img = json::array();
        for (const auto& t : gauge_on_generators(F, s, 0))
            img.push_back({{"generator", generator_str(Generator{t.species, t.index})}, {"coef", t.coef.str()}});
        images.push_back({{"generator", generator_str(Generator{s, 0})}, {"image", img}});
    }
    const std::string conn = connection_json(B, cfg.symbols);
    emit(json{{"command", "gauge"},
              {"connection", json::parse(conn)},
              {"traceless", traceless},
              {"generator_images", images}});
    if (!out.empty()) write_out(out, conn);
    for (const auto& [k, a] : B.coeffs())
        std::cerr << "A_" << k << " = [[" << a.pp.str() << ", " << a.pm.str() << "], [" << a.mp.str()
                  << ", " << a.mm.str() << "]]\n";
    return traceless ? 0 : 1;
}

int cmd_qident(const std::string& which, const std::string& kr, int M, int N) {
    if (which != "sum" && which != "split") throw InputError("--identity: expected sum or split");
    auto [k0, k1] = parse_range("--k-range", kr);
    if (M < 0 || N < 0 || k0 < 0 || k1 > M) throw InputError("need M, N >= 0 and 0 <= k <= M");
    json reps = json::array();
    bool all = true;
    for (int k = k0; k <= k1; ++k) {
        IdentityReport r = which == "sum" ? identity_sum_check(k, M, N) : identity_split_check(k, M, N);
        all = all && r.pass;
        reps.push_back({{"identity", which}, {"k", k}, {"M", M}, {"N", N}, {"pass", r.pass}, {"diff", r.diff.str()}});
        std::cerr << which << " k=" << k << " M=" << M << " N=" << N << ": "
                  << (r.pass ? "pass" : "FAIL diff " + r.diff.str()) << "\n";
    }
    emit(json{{"command", "qident"}, {"pass", all}, {"reports", reps}});
    return all ? 0 : 1;
}

int cmd_stokes(const std::string& xs, const std::string& es, const std::string& ts, long n, bool grid) {
    auto rat = [](const std::string& flag, const std::string& s) {
        return with_caret(flag, s, [&] { return parse_rational(s); });
    };
    const Rational xq = rat("--xi", xs), eq = rat("--eps", es), tq = rat("--tau", ts);
    if (xq == 0) throw InputError("--xi must be nonzero");
    if (n < 2) throw InputError("--n must be >= 2");
    const double xi = xq.get_d(), eps = eq.get_d(), tau = tq.get_d();
    const double ref = stokes_reference(eps, tau);
    ProbeResult p = stokes_limit_probe(n, xi, eps, tau);
    const double probe = p.m[0][1];
    emit(json{{"command", "stokes"},
              {"xi", to_string(xq)},
              {"eps", to_string(eq)},
              {"tau", to_string(tq)},
              {"n", n},
              {"probe", probe},
              {"reference", ref},
              {"abs_error", std::fabs(probe - ref)},
              {"overflow", p.overflow}});
    if (grid) {
        std::cerr << "n,probe,abs_error\n";
        for (long m = 10; m <= n; m *= 10) {
            double v = stokes_limit_probe(m, xi, eps, tau).m[0][1];
            std::cerr << m << "," << std::setprecision(12) << v << "," << std::fabs(v - ref) << "\n";
        }
    }
    return 0;
}

int cmd_schur(const std::string& cfg_path, const std::string& lam, const std::string& vec) {
    Config cfg = load_cfg(cfg_path);
    Partition lambda;
    std::stringstream ss(lam);
    std::string part;
    while (std::getline(ss, part, ',')) {
        int v = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || p != part.data() + part.size() || v <= 0)
            throw InputError("--lambda: expected positive integers a,b,c");
        lambda.push_back(v);
    }
    if (!is_partition(lambda)) throw InputError("--lambda: parts must be non-increasing");
    Vector v = with_caret("--vector", vec, [&] { return parse_vector(vec, &cfg.symbols); });
    SymmetricExpr s = schur_to_power_sums(lambda);
    Vector r = apply_symmetric(s, v);
    emit(json{{"command", "schur"},
              {"lambda", partition_str(lambda)},
              {"power_sums", symmetric_str(s)},
              {"vector", vector_str(v)},
              {"result", vector_str(r)},
              {"terms", vector_json(r)}});
    std::cerr << "s" << partition_str(lambda) << " = " << symmetric_str(s) << "\n" << vector_str(r) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-infinite Fock modules, Virasoro actions and Whittaker vectors"};
    app.require_subcommand(1);

    std::string config, a = "+", b = "+", op, vec = "1*<vacuum>", mr, nr, kr = "0:0", out, gauge, identity, lam;
    std::string xs, es = "0", ts = "1";
    int m = 0, n = 0, cutoff = 8, k = 0, M = 0, N = 0;
    long probe_n = 100000;
    bool csv = false, grid = false;

    auto* br = app.add_subcommand("bracket", "Anticommutator of two generators, checked against the residue pairing");
    br->add_option("--config", config, "Connection config (JSON)")->check(CLI::ExistingFile);
    br->add_option("--a", a, "Species of the first generator (+ or -)")->required();
    br->add_option("--m", m, "Index of the first generator")->required();
    br->add_option("--b", b, "Species of the second generator (+ or -)")->required();
    br->add_option("--n", n, "Index of the second generator")->required();

    auto* act = app.add_subcommand("act", "Apply an operator expression to a module vector");
    act->add_option("--config", config, "Connection config (JSON)")->check(CLI::ExistingFile);
    act->add_option("--op", op, "Operator expression, e.g. \"L[0] L[0]\"")->required();
    act->add_option("--vector", vec, "Module vector, e.g. \"1*<vacuum>\"")->capture_default_str();

    auto* cv = app.add_subcommand("check-virasoro", "Verify the Virasoro commutators on a truncated basis");
    cv->add_option("--config", config, "Connection config (JSON)")->check(CLI::ExistingFile);
    cv->add_option("--cutoff", cutoff, "Largest total2 degree of basis vectors");
    cv->add_option("--m-range", mr, "Range a:b for m")->required();
    cv->add_option("--n-range", nr, "Range a:b for n")->required();

    auto* wh = app.add_subcommand("whittaker", "Solve for the Whittaker vector with leading term v_k");
    wh->add_option("--config", config, "Connection config (JSON)")->check(CLI::ExistingFile)->required();
    wh->add_option("--k", k, "Horizontal charge")->required();
    wh->add_option("--out", out, "Also write the report to this file");

    auto* ch = app.add_subcommand("character", "Compare module and Whittaker characters");
    ch->add_option("--config", config, "Connection config (JSON)")->check(CLI::ExistingFile);
    ch->add_option("--k-range", kr, "Range a:b of horizontal charges");
    ch->add_option("--cutoff", cutoff, "Largest degree offset");
    ch->add_flag("--csv", csv, "Print CSV to stdout instead of JSON");

    auto* ga = app.add_subcommand("gauge", "Gauge transform a connection");
    ga->add_option("--config", config, "Connection config (JSON)")->check(CLI::ExistingFile)->required();
    ga->add_option("--gauge", gauge, "Gauge element file (JSON)")->check(CLI::ExistingFile)->required();
    ga->add_option("--out", out, "Write the transformed connection config here");

    auto* qi = app.add_subcommand("qident", "Check the Gaussian binomial character identities");
    qi->add_option("--identity", identity, "sum (with the q^x factor) or split")->required();
    qi->add_option("--k-range", kr, "Range a:b of k");
    qi->add_option("--M", M, "M >= 0")->required();
    qi->add_option("--N", N, "N >= 0")->required();

    auto* st = app.add_subcommand("stokes", "Stokes factor probe against tau/Gamma(2 eps + 1)");
    st->add_option("--xi", xs, "xi (rational literal)")->required();
    st->add_option("--eps", es, "eps (rational literal)");
    st->add_option("--tau", ts, "tau (rational literal)");
    st->add_option("--n", probe_n, "Order of the probe");
    st->add_flag("--grid", grid, "Print a CSV convergence table over decades to stderr");

    auto* sc = app.add_subcommand("schur", "Apply a Schur function (as power sums, p_n = Shift[-n]) to a vector");
    sc->add_option("--lambda", lam, "Partition a,b,c")->required();
    sc->add_option("--config", config, "Connection config (JSON)")->check(CLI::ExistingFile);
    sc->add_option("--vector", vec, "Module vector")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*br) return cmd_bracket(config, a, m, b, n);
        if (*act) return cmd_act(config, op, vec);
        if (*cv) return cmd_check_virasoro(config, cutoff, mr, nr);
        if (*wh) return cmd_whittaker(config, k, out);
        if (*ch) return cmd_character(config, kr, cutoff, csv);
        if (*ga) return cmd_gauge(config, gauge, out);
        if (*qi) return cmd_qident(identity, kr, M, N);
        if (*st) return cmd_stokes(xs, es, ts, probe_n, grid);
        if (*sc) return cmd_schur(config, lam, vec);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
