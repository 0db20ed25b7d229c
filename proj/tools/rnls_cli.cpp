// Command-line surface: catalog evaluation, verification suites, reduced-ODE
// and blow-up integration, all exported as plot-ready CSV.
//
// Exit codes: 0 pass, 1 check failure, 2 usage/constraint error,
// 3 internal numeric error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rnls/catalog.hpp"
#include "rnls/conserve.hpp"
#include "rnls/core.hpp"
#include "rnls/reduce.hpp"
#include "rnls/verify.hpp"

namespace {

using namespace rnls;

// shortest round-trip decimal; locale-independent by construction
std::string fmt(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// stdout or --out FILE
struct Sink {
    std::ofstream file;
    std::ostream& stream() { return file.is_open() ? file : std::cout; }
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);  // LF line endings everywhere
        if (!file)
            throw Error(ErrorKind::parse, "cannot open output file " + path);
    }
};

struct Defaults {
    std::string fixtures = "data/family_witnesses.txt";
    double tol = -1.0;  // < 0: per-command default
    int points = 20;
    int jobs = 1;
};

// Plain `key = value` config, from --config PATH or RADIAL_NLS_CONFIG.
// Flags given on the command line override these values.
Defaults load_defaults(int argc, char** argv) {
    Defaults d;
    std::string path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") path = argv[i + 1];
    if (path.empty())
        if (const char* env = std::getenv("RADIAL_NLS_CONFIG")) path = env;
    if (path.empty()) return d;

    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse, "cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string()
                                          : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "fixtures")
            d.fixtures = val;
        else if (key == "tol")
            d.tol = std::stod(val);
        else if (key == "points")
            d.points = std::stoi(val);
        else if (key == "jobs")
            d.jobs = std::stoi(val);
        else
            throw Error(ErrorKind::parse, "unknown config key '" + key + "'");
    }
    return d;
}

catalog::FamilyConstants parse_consts(const std::vector<std::string>& kvs) {
    catalog::FamilyConstants c;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::parse, "--const expects key=value, got '" +
                                              kv + "'");
        c.values[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return c;
}

catalog::Witness find_witness(const std::string& fixtures,
                              const std::string& id) {
    for (const auto& w : catalog::load_witnesses(fixtures))
        if (w.id == id) return w;
    throw Error(ErrorKind::constraint,
                "no fixture for family '" + id + "' in " + fixtures);
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) throw Error(ErrorKind::constraint, "sample count < 1");
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i)
        xs[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return xs;
}

// ---- commands ---------------------------------------------------------------------

int cmd_catalog_list(Sink& sink) {
    auto& os = sink.stream();
    os << "id,constraint,behaviour,summary\n";
    for (const auto& d : catalog::registry())
        os << d.id << ',' << csv_quote(d.constraint) << ','
           << catalog::behaviour_name(d.behaviour) << ','
           << csv_quote(d.summary) << '\n';
    return 0;
}

int cmd_catalog_eval(Sink& sink, const std::string& family,
                     const Parameters& pr,
                     const catalog::FamilyConstants& consts,
                     const std::vector<double>& grid) {
    if (grid.size() != 6)
        throw Error(ErrorKind::parse, "--grid expects t0,t1,nt,r0,r1,nr");
    int nt = int(grid[2]), nr = int(grid[5]);
    Solution s = catalog::instantiate(family, pr, consts);
    auto& os = sink.stream();
    os << "t,r,u_re,u_im,u_abs\n";
    for (double t : linspace(grid[0], grid[1], nt))
        for (double r : linspace(grid[3], grid[4], nr)) {
            if (!s.valid_at(t, r)) continue;
            Complex u = s.eval(t, r);
            os << fmt(t) << ',' << fmt(r) << ',' << fmt(u.real()) << ','
               << fmt(u.imag()) << ',' << fmt(std::abs(u)) << '\n';
        }
    return 0;
}

int cmd_verify_residual(Sink& sink, const Defaults& cfg,
                        const std::string& family) {
    catalog::Witness w = find_witness(cfg.fixtures, family);
    if (cfg.tol > 0.0) w.tol = cfg.tol;
    Solution s = catalog::instantiate(w);
    auto rep =
        verify::residual_scan(s, w.t0, w.r_lo, w.r_hi, cfg.points, 1e-4);
    bool ok = rep.points == std::size_t(cfg.points) && rep.max_rel <= w.tol;
    auto& os = sink.stream();
    os << "fixture,check,status,max_defect\n";
    os << w.id << ",residual," << (ok ? "pass" : "fail") << ','
       << fmt(rep.max_rel) << '\n';
    return ok ? 0 : 1;
}

int cmd_verify_orbit(Sink& sink, const Defaults& cfg,
                     const std::string& family) {
    catalog::Witness w = find_witness(cfg.fixtures, family);
    double tol = cfg.tol > 0.0 ? cfg.tol : 1e-5;
    Solution s = catalog::instantiate(w);
    struct Act {
        symmetry::ActionKind kind;
        const char* name;
        std::vector<double> eps;  // small, O(1), large-but-domain-safe
        bool critical_only;
    };
    const std::vector<Act> acts = {
        {symmetry::ActionKind::phase, "orbit_phase", {0.05, 1.0, 3.0}, false},
        {symmetry::ActionKind::translate,
         "orbit_translate",
         {0.01, 0.1, 0.3},
         false},
        {symmetry::ActionKind::scale, "orbit_scale", {1.02, 1.25, 2.0}, false},
        {symmetry::ActionKind::invert, "orbit_invert", {0.01, 0.05, 0.1}, true},
    };
    auto& os = sink.stream();
    os << "fixture,check,status,max_defect\n";
    bool all = true;
    for (const Act& a : acts) {
        if (a.critical_only && !w.params.critical()) continue;
        double worst = 0.0;
        std::string status = "pass";
        try {
            for (double e : a.eps)
                worst = std::max(worst,
                                 verify::orbit_residual(s, a.kind, e, w.t0,
                                                        w.r_lo, w.r_hi,
                                                        cfg.points, 1e-4));
            if (worst > tol) {
                status = "fail";
                all = false;
            }
        } catch (const Error&) {
            status = "skip";
        }
        os << w.id << ',' << a.name << ',' << status << ',' << fmt(worst)
           << '\n';
    }
    return all ? 0 : 1;
}

int cmd_verify_conserve(Sink& sink, const Defaults& cfg,
                        const std::string& family, const std::string& row) {
    catalog::Witness w = find_witness(cfg.fixtures, family);
    double tol = cfg.tol > 0.0 ? cfg.tol : 1e-5;
    Solution s = catalog::instantiate(w);
    auto& os = sink.stream();
    os << "family,row,t,r,defect,scale\n";
    bool all = true;
    for (const conserve::CurrentPair* cur : conserve::currents(w.params)) {
        if (row != "all" && row != cur->name) continue;
        for (double f : {0.25, 0.5, 0.75}) {
            double r = w.r_lo + f * (w.r_hi - w.r_lo);
            auto d = conserve::local_defect(*cur, s, w.t0, r, 5e-4);
            all = all && d.defect <= tol * d.scale;
            os << w.id << ',' << cur->name << ',' << fmt(w.t0) << ','
               << fmt(r) << ',' << fmt(d.defect) << ',' << fmt(d.scale)
               << '\n';
        }
    }
    return all ? 0 : 1;
}

int cmd_verify_suite(Sink& sink, const Defaults& cfg,
                     const std::string& filter) {
    auto witnesses = catalog::load_witnesses(cfg.fixtures);
    auto rows = verify::full_suite(witnesses, filter, cfg.points, cfg.jobs);
    if (rows.empty())
        std::cerr << "warning: filter '" << filter
                  << "' matched no fixtures\n";
    auto& os = sink.stream();
    os << "fixture,check,status,max_defect\n";
    for (const auto& r : rows)
        os << r.fixture << ',' << r.check << ',' << r.status << ','
           << fmt(r.max_defect) << '\n';
    return verify::all_passed(rows) ? 0 : 1;
}

int cmd_reduce_integrate(Sink& sink, const std::string& subgroup,
                         const Parameters& pr, double sub, double xi0,
                         double xi1, int samples,
                         const std::vector<double>& init) {
    if (init.size() != 4)
        throw Error(ErrorKind::parse, "--init expects u_re,u_im,up_re,up_im");
    if (xi0 == 0.0 || xi1 == 0.0 || (xi0 < 0.0) != (xi1 < 0.0)) {
        std::cerr << "error: integration interval crosses the singular point "
                     "xi = 0\n";
        return 1;
    }
    symmetry::Frame frame;
    if (subgroup == "trans")
        frame = symmetry::Frame::trans_phase;
    else if (subgroup == "scal")
        frame = symmetry::Frame::scal_phase;
    else if (subgroup == "conf")
        frame = symmetry::Frame::conf_phase;
    else
        throw Error(ErrorKind::parse, "subgroup must be trans, scal or conf");
    symmetry::ReductionFrame fr{frame, pr, sub};

    auto xs = linspace(xi0, xi1, samples);
    std::vector<reduce::State> traj;
    try {
        traj = reduce::integrate_profile(fr, {init[0], init[1]},
                                         {init[2], init[3]}, xs);
    } catch (const Error& e) {
        std::cerr << "error: integration failed (" << e.what() << ")\n";
        return 1;
    }
    auto& os = sink.stream();
    os << "xi,u_re,u_im,a,phi,c1\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Complex U = traj[i][0], Up = traj[i][1];
        os << fmt(xs[i]) << ',' << fmt(U.real()) << ',' << fmt(U.imag()) << ','
           << fmt(std::abs(U)) << ',' << fmt(std::arg(U)) << ','
           << fmt(reduce::first_integral_C1(fr, xs[i], U, Up)) << '\n';
    }
    return 0;
}

int cmd_reduce_blowup(Sink& sink, const std::string& regime,
                      const Parameters& pr, double omega, double xi0,
                      double xi1, int samples, const std::vector<double>& init) {
    if (init.size() != 4)
        throw Error(ErrorKind::parse, "--init expects u_re,u_im,up_re,up_im");
    if (xi0 == 0.0 || xi1 == 0.0 || (xi0 < 0.0) != (xi1 < 0.0)) {
        std::cerr << "error: integration interval crosses the singular point "
                     "xi = 0\n";
        return 1;
    }
    reduce::BlowupKind kind;
    if (regime == "critical")
        kind = reduce::BlowupKind::critical;
    else if (regime == "supercritical")
        kind = reduce::BlowupKind::supercritical;
    else
        throw Error(ErrorKind::parse,
                    "regime must be critical or supercritical");

    auto xs = linspace(xi0, xi1, samples);
    auto rhs = [&](double x, const reduce::State& y) {
        return reduce::State{y[1],
                             reduce::blowup_rhs(kind, pr, omega, x, y[0], y[1])};
    };
    std::vector<reduce::State> traj;
    try {
        traj = reduce::integrate_ode(rhs, {{init[0], init[1]},
                                           {init[2], init[3]}},
                                     xs);
    } catch (const Error& e) {
        std::cerr << "error: integration failed (" << e.what() << ")\n";
        return 1;
    }
    auto& os = sink.stream();
    os << "xi,u_re,u_im,a,phi\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Complex U = traj[i][0];
        os << fmt(xs[i]) << ',' << fmt(U.real()) << ',' << fmt(U.imag()) << ','
           << fmt(std::abs(U)) << ',' << fmt(std::arg(U)) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Defaults cfg;
    try {
        cfg = load_defaults(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    CLI::App app{"group-invariant radial Schrodinger solutions: evaluate, "
                 "verify, reduce"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path,
                   "key = value config file (also via RADIAL_NLS_CONFIG)");

    std::string family, out, filter, row = "all", subgroup, regime;
    std::string grid_spec = "0,0,1,1,2,3", init_spec = "1,0,0,0";
    std::vector<std::string> consts;
    Parameters pr{1.0, 1.0, 1.0};
    double sub = 0.0, omega = -1.0, xi0 = 1.0, xi1 = 2.0;
    int samples = 50;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--out", out, "write CSV here instead of stdout");
        c->add_option("--fixtures", cfg.fixtures, "witness fixture file");
        c->add_option("--tol", cfg.tol, "override check tolerance");
        c->add_option("--points", cfg.points, "sample points per scan");
        // the config file is applied during the pre-scan; accept the flag
        // after the subcommand as well
        c->add_option("--config", config_path);
    };

    auto* cat = app.add_subcommand("catalog", "solution family registry");
    auto* cat_list = cat->add_subcommand("list", "print the registry table");
    cat_list->add_option("--out", out);
    auto* cat_eval = cat->add_subcommand("eval", "evaluate a family on a grid");
    cat_eval->add_option("--family", family)->required();
    cat_eval->add_option("--n", pr.n)->required();
    cat_eval->add_option("--p", pr.p)->required();
    cat_eval->add_option("--k", pr.k)->required();
    cat_eval->add_option("--const", consts, "family constant key=value");
    cat_eval->add_option("--grid", grid_spec, "t0,t1,nt,r0,r1,nr");
    cat_eval->add_option("--out", out);

    auto* ver = app.add_subcommand("verify", "numerical checks");
    auto* v_res = ver->add_subcommand("residual", "PDE residual of a fixture");
    v_res->add_option("--family", family)->required();
    add_common(v_res);
    auto* v_orb = ver->add_subcommand("orbit", "group-orbit closure");
    v_orb->add_option("--family", family)->required();
    add_common(v_orb);
    auto* v_con = ver->add_subcommand("conserve", "conservation-law defects");
    v_con->add_option("--family", family)->required();
    v_con->add_option("--row", row,
                      "charge|energy|dilation_energy|"
                      "pseudoconformal_energy|all");
    add_common(v_con);
    auto* v_suite = ver->add_subcommand("suite", "full fixture/check matrix");
    v_suite->add_option("--filter", filter, "substring fixture filter");
    v_suite->add_option("--jobs", cfg.jobs, "worker threads");
    add_common(v_suite);

    auto* red = app.add_subcommand("reduce", "reduced-ODE integration");
    auto* r_int = red->add_subcommand("integrate", "integrate a reduced ODE");
    r_int->add_option("--subgroup", subgroup, "trans|scal|conf")->required();
    r_int->add_option("--n", pr.n)->required();
    r_int->add_option("--p", pr.p)->required();
    r_int->add_option("--k", pr.k)->required();
    r_int->add_option("--nu", sub, "frequency (trans)");
    r_int->add_option("--mu", sub, "phase slope (scal)");
    r_int->add_option("--kappa", sub, "phase slope (conf)");
    r_int->add_option("--xi0", xi0)->required();
    r_int->add_option("--xiend", xi1)->required();
    r_int->add_option("--samples", samples);
    r_int->add_option("--init", init_spec, "u_re,u_im,up_re,up_im");
    r_int->add_option("--out", out);
    auto* r_blow = red->add_subcommand("blowup", "self-similar blow-up profile");
    r_blow->add_option("--regime", regime, "critical|supercritical")
        ->required();
    r_blow->add_option("--n", pr.n)->required();
    r_blow->add_option("--p", pr.p)->required();
    r_blow->add_option("--k", pr.k)->required();
    r_blow->add_option("--omega", omega)->required();
    r_blow->add_option("--xi0", xi0)->required();
    r_blow->add_option("--xiend", xi1)->required();
    r_blow->add_option("--samples", samples);
    r_blow->add_option("--init", init_spec, "u_re,u_im,up_re,up_im");
    r_blow->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto parse_list = [](const std::string& spec) {
        std::vector<double> xs;
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) xs.push_back(std::stod(tok));
        return xs;
    };

    try {
        Sink sink;
        sink.open(out);
        if (cat_list->parsed()) return cmd_catalog_list(sink);
        if (cat_eval->parsed())
            return cmd_catalog_eval(sink, family, pr, parse_consts(consts),
                                    parse_list(grid_spec));
        if (v_res->parsed()) return cmd_verify_residual(sink, cfg, family);
        if (v_orb->parsed()) return cmd_verify_orbit(sink, cfg, family);
        if (v_con->parsed()) return cmd_verify_conserve(sink, cfg, family, row);
        if (v_suite->parsed()) return cmd_verify_suite(sink, cfg, filter);
        if (r_int->parsed())
            return cmd_reduce_integrate(sink, subgroup, pr, sub, xi0, xi1,
                                        samples, parse_list(init_spec));
        if (r_blow->parsed())
            return cmd_reduce_blowup(sink, regime, pr, omega, xi0, xi1, samples,
                                     parse_list(init_spec));
        std::cerr << "error: no command\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::constraint:
            case ErrorKind::parse:
                return 2;
            default:
                return 3;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
