#include "dc/cli_app.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "dc/complexfn.hpp"
#include "dc/errors.hpp"
#include "dc/manifold.hpp"
#include "dc/mixedbc.hpp"
#include "dc/numerics.hpp"
#include "dc/resolvent.hpp"
#include "dc/scattering.hpp"
#include "dc/solutions.hpp"
#include "dc/spectra.hpp"
#include "dc/whittaker.hpp"

namespace dc::cli {

using json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
    char buf[40];
    auto r = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

json cjson(Cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

void write_file(const std::string& path, const std::string& payload) {
    FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) throw DomainError("cannot open output file: " + path);
    std::fwrite(payload.data(), 1, payload.size(), fp);
    std::fclose(fp);
}

double default_tol() {
    if (const char* env = std::getenv("DC_TOL")) return std::atof(env);
    return 1e-8;
}

struct PointFlags {
    double omega_re = 0, omega_im = 0;
    double lambda_re = 0, lambda_im = 0;
    double mu_re = 0, mu_im = 0;
    double a_re = 0, a_im = 0, b_re = 0, b_im = 0;
    bool ray_given = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--omega-re", omega_re);
        cmd->add_option("--omega-im", omega_im);
        cmd->add_option("--lambda-re", lambda_re);
        cmd->add_option("--lambda-im", lambda_im);
        cmd->add_option("--mu-re", mu_re);
        cmd->add_option("--mu-im", mu_im);
        cmd->add_option("--a-re", a_re);
        cmd->add_option("--a-im", a_im);
        cmd->add_option("--b-re", b_re);
        cmd->add_option("--b-im", b_im);
        cmd->add_flag("--ray", ray_given, "interpret --a-*/--b-* as a zero-fiber ray");
    }
    manifold::ManifoldPoint make() const {
        if (ray_given) return manifold::point_zero_fiber({a_re, a_im}, {b_re, b_im});
        return manifold::point_from_triple({omega_re, omega_im}, {lambda_re, lambda_im},
                                           {mu_re, mu_im});
    }
    json echo() const {
        json j;
        if (ray_given) {
            j["ray"] = {{"a", cjson({a_re, a_im})}, {"b", cjson({b_re, b_im})}};
        } else {
            j["omega"] = cjson({omega_re, omega_im});
            j["lambda"] = cjson({lambda_re, lambda_im});
            j["mu"] = cjson({mu_re, mu_im});
        }
        return j;
    }
};

json report_head(const std::string& command, const json& params) {
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["parameters"] = params;
    j["tolerance"] = default_tol();
    return j;
}

// ---- fn -------------------------------------------------------------------

int cmd_fn(const std::string& name, Cplx a, Cplx b, Cplx c, Cplx z, Cplx beta, Cplx m, double v,
           double s, int hsign, bool verify, std::string& out) {
    using namespace dc::complexfn;
    using namespace dc::whittaker;
    Cplx value;
    double residual = 0.0;
    const WhittakerParams wp{beta, m};
    if (name == "gamma") {
        value = gamma(z);
        if (verify) residual = std::abs(value * rgamma(z) - 1.0);
    } else if (name == "digamma") {
        value = digamma(z);
        if (verify) {
            // recurrence psi(z+1) = psi(z) + 1/z
            residual = std::abs(digamma(z + 1.0) - value - 1.0 / z) / (1.0 + std::abs(value));
        }
    } else if (name == "1f1") {
        value = reg_1F1(a, c, z);
        if (verify && std::abs(z) <= 0.8)
            residual = std::abs(numerics::series_1F1(a, c, z) - value) / (1.0 + std::abs(value));
    } else if (name == "2f1") {
        value = reg_2F1(a, b, c, z);
        if (verify && std::abs(z) <= 0.8)
            residual = std::abs(numerics::series_2F1(a, b, c, z) - value) / (1.0 + std::abs(value));
    } else if (name == "whittaker-i") {
        value = whittaker_I(wp, z);
        if (verify) {
            // the two sign choices of the defining formula agree
            Cplx alt = cpow(z, 0.5 + m) * std::exp(0.5 * z) * reg_1F1(0.5 + m + beta, 1.0 + 2.0 * m, -z);
            residual = std::abs(alt - value) / (1.0 + std::abs(value));
        }
    } else if (name == "whittaker-k") {
        value = whittaker_K(wp, z);
        if (verify) {
            Cplx wr = whittaker_I(wp, z) * whittaker_K_deriv(wp, z) -
                      whittaker_I_deriv(wp, z) * value;
            residual = std::abs(wr + rgamma(0.5 + m - beta));
        }
    } else if (name == "trig-j") {
        value = trig_J(wp, z);
        if (verify) {
            Cplx hp = trig_H(wp, z, Sign::Plus), hm = trig_H(wp, z, Sign::Minus);
            Cplx conn = std::exp(-pi * beta) *
                        (hp * rgamma(0.5 + m + iu * beta) + hm * rgamma(0.5 + m - iu * beta));
            residual = std::abs(conn - value) / (1.0 + std::abs(value));
        }
    } else if (name == "trig-h") {
        value = trig_H(wp, z, hsign >= 0 ? Sign::Plus : Sign::Minus);
    } else if (name == "mellin-j") {
        value = mellin_J(wp, v, s);  // internal two-prescription agreement
    } else {
        throw DomainError("unknown function name: " + name);
    }
    json j = report_head("fn", {{"name", name}, {"z", cjson(z)}});
    j["result"] = cjson(value);
    j["error_estimate"] = residual;
    if (verify) j["residual"] = residual;
    out = j.dump(2) + "\n";
    return verify && residual > default_tol() ? 3 : 0;
}

// ---- kernel / density ------------------------------------------------------

std::vector<double> lin_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
    return g;
}

std::string grid_csv(const resolvent::KernelGrid& g) {
    std::string s = "x,y,g11_re,g11_im,g12_re,g12_im,g21_re,g21_im,g22_re,g22_im\n";
    for (size_t i = 0; i < g.xs.size(); ++i) {
        for (size_t j = 0; j < g.ys.size(); ++j) {
            const Mat2& m = g.at(i, j);
            s += fmt17(g.xs[i]) + "," + fmt17(g.ys[j]);
            for (int e = 0; e < 4; ++e) {
                s += "," + fmt17(m.a[e].real()) + "," + fmt17(m.a[e].imag());
            }
            s += "\n";
        }
    }
    return s;
}

json grid_json(const resolvent::KernelGrid& g) {
    json rows = json::array();
    for (size_t i = 0; i < g.xs.size(); ++i)
        for (size_t j = 0; j < g.ys.size(); ++j) {
            const Mat2& m = g.at(i, j);
            rows.push_back({{"x", g.xs[i]},
                            {"y", g.ys[j]},
                            {"g11", cjson(m(0, 0))},
                            {"g12", cjson(m(0, 1))},
                            {"g21", cjson(m(1, 0))},
                            {"g22", cjson(m(1, 1))}});
        }
    return rows;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string& out) {
    CLI::App app{"Dirac-Coulomb spectral toolbox"};
    app.require_subcommand(1);

    // fn
    auto* fn = app.add_subcommand("fn", "evaluate a special function");
    std::string fn_name;
    double z_re = 0, z_im = 0, a_re = 0, a_im = 0, b_re = 0, b_im = 0, c_re = 0, c_im = 0;
    double beta_re = 0, beta_im = 0, m_re = 0, m_im = 0, fv = 1, fs = 0;
    int hsign = 1;
    bool fn_verify = false;
    fn->add_option("--name", fn_name)->required();
    fn->add_option("--z-re,--z", z_re);
    fn->add_option("--z-im", z_im);
    fn->add_option("--a-re,--a", a_re);
    fn->add_option("--a-im", a_im);
    fn->add_option("--b-re,--b", b_re);
    fn->add_option("--b-im", b_im);
    fn->add_option("--c-re,--c", c_re);
    fn->add_option("--c-im", c_im);
    fn->add_option("--beta-re,--beta", beta_re);
    fn->add_option("--beta-im", beta_im);
    fn->add_option("--m-re,--m", m_re);
    fn->add_option("--m-im", m_im);
    fn->add_option("--v", fv);
    fn->add_option("--s", fs);
    fn->add_option("--sign", hsign);
    fn->add_flag("--verify", fn_verify);

    // kernel
    auto* kernel = app.add_subcommand("kernel", "Green's kernel grid");
    PointFlags kp;
    kp.attach(kernel);
    double k_re = 0, k_im = 0, x_min = 0.5, x_max = 5, y_min = 0.5, y_max = 5;
    int nx = 6, ny = 6, side_flag = 1;
    std::string format = "csv";
    bool kernel_verify = false;
    kernel->add_option("--k-re", k_re);
    kernel->add_option("--k-im", k_im);
    kernel->add_option("--x-min", x_min);
    kernel->add_option("--x-max", x_max);
    kernel->add_option("--y-min", y_min);
    kernel->add_option("--y-max", y_max);
    kernel->add_option("--nx", nx);
    kernel->add_option("--ny", ny);
    kernel->add_option("--side", side_flag, "boundary side for real k: +1 or -1");
    kernel->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    std::string kernel_out;
    kernel->add_option("--out", kernel_out, "write the payload to a file instead of stdout");
    kernel->add_flag("--verify", kernel_verify);

    // classify
    auto* classify = app.add_subcommand("classify", "spectral classification report");
    PointFlags cp;
    cp.attach(classify);
    bool classify_verify = false;
    classify->add_flag("--verify", classify_verify);

    // eigs
    auto* eigs = app.add_subcommand("eigs", "mixed-boundary eigenvalue loci");
    PointFlags ep;
    ep.attach(eigs);
    double kappa_re = 0, kappa_im = 0, nu_re = 0, nu_im = 0;
    double wre_min = -10, wre_max = 10, wim_min = -10, wim_max = 10;
    bool use_nu = false, eigs_verify = false;
    int mu0_sign = 1;
    eigs->add_option("--kappa-re", kappa_re);
    eigs->add_option("--kappa-im", kappa_im);
    eigs->add_option("--nu-re", nu_re);
    eigs->add_option("--nu-im", nu_im);
    eigs->add_flag("--mu0", use_nu, "use the mu = 0 logarithmic case with --nu-*");
    eigs->add_option("--omega-eq-lambda", mu0_sign, "+1: omega = lambda, -1: omega = -lambda");
    eigs->add_option("--re-min", wre_min);
    eigs->add_option("--re-max", wre_max);
    eigs->add_option("--im-min", wim_min);
    eigs->add_option("--im-max", wim_max);
    eigs->add_flag("--verify", eigs_verify);

    // channels
    auto* channels = app.add_subcommand("channels", "radial channel omegas");
    int ch_dim = 3;
    long ch_ell = 1;
    channels->add_option("--dim", ch_dim)->required();
    channels->add_option("--ell", ch_ell)->required();

    // scatter
    auto* scatter = app.add_subcommand("scatter", "full scattering amplitude");
    PointFlags sp;
    sp.attach(scatter);
    int sc_eps = 1;
    bool scatter_verify = false;
    scatter->add_option("--eps", sc_eps);
    scatter->add_flag("--verify", scatter_verify);

    // density
    auto* density = app.add_subcommand("density", "spectral density grid");
    PointFlags dp;
    dp.attach(density);
    double dk = 1.0;
    double dx_min = 0.5, dx_max = 5, dy_min = 0.5, dy_max = 5;
    int dnx = 5, dny = 5;
    std::string dformat = "csv";
    bool density_verify = false;
    density->add_option("--k", dk);
    density->add_option("--x-min", dx_min);
    density->add_option("--x-max", dx_max);
    density->add_option("--y-min", dy_min);
    density->add_option("--y-max", dy_max);
    density->add_option("--nx", dnx);
    density->add_option("--ny", dny);
    density->add_option("--format", dformat)->check(CLI::IsMember({"csv", "json"}));
    std::string density_out;
    density->add_option("--out", density_out, "write the payload to a file instead of stdout");
    density->add_flag("--verify", density_verify);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        json j{{"schema", kSchemaVersion}, {"error", std::string("parse: ") + e.what()}};
        out = j.dump(2) + "\n";
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (fn->parsed()) {
            return cmd_fn(fn_name, {a_re, a_im}, {b_re, b_im}, {c_re, c_im}, {z_re, z_im},
                          {beta_re, beta_im}, {m_re, m_im}, fv, fs, hsign, fn_verify, out);
        }
        if (kernel->parsed()) {
            auto p = kp.make();
            const Cplx k(k_re, k_im);
            auto xs = lin_grid(x_min, x_max, nx), ys = lin_grid(y_min, y_max, ny);
            auto eval = [&](double x, double y) {
                if (k.imag() == 0.0)
                    return resolvent::green_boundary(p, k.real(),
                                                     side_flag >= 0 ? Sign::Plus : Sign::Minus, x, y);
                return resolvent::green_kernel(p, solutions::EnergyContext(k), x, y);
            };
            auto grid = resolvent::fill_grid(eval, xs, ys);
            double residual = 0;
            if (kernel_verify) {
                // transpose-exchange symmetry off the diagonal (the kernel is
                // defined a.e.; the x = y convention breaks pointwise symmetry)
                for (size_t i = 0; i < xs.size(); ++i)
                    for (size_t j = 0; j < ys.size(); ++j) {
                        if (std::abs(xs[i] - ys[j]) <= 1e-12 * (xs[i] + ys[j])) continue;
                        Mat2 gt = eval(ys[j], xs[i]).transpose();
                        residual = std::max(residual, frob(grid.at(i, j) - gt) /
                                                          std::max(1.0, frob(grid.at(i, j))));
                    }
            }
            if (format == "csv") {
                out = grid_csv(grid);
            } else {
                json j = report_head("kernel", kp.echo());
                j["k"] = cjson(k);
                j["grid"] = grid_json(grid);
                if (kernel_verify) j["residual"] = residual;
                out = j.dump(2) + "\n";
            }
            if (!kernel_out.empty()) {
                write_file(kernel_out, out);
                out = "";
            }
            return kernel_verify && residual > default_tol() ? 3 : 0;
        }
        if (classify->parsed()) {
            auto p = cp.make();
            auto r = spectra::classify(p);
            json j = report_head("classify", cp.echo());
            json rep;
            rep["params_real"] = r.params_real;
            if (r.params_real) {
                rep["region"] = spectra::to_string(r.region);
                rep["deficiency"] = {r.deficiency.first, r.deficiency.second};
                rep["homogeneous_extensions"] = spectra::to_string(r.homogeneous);
            }
            rep["essential_spectrum"] = r.essential;
            rep["point_spectrum_min"] = spectra::to_string(r.point_min);
            rep["point_spectrum_max"] = spectra::to_string(r.point_max);
            rep["point_spectrum_dp"] = spectra::to_string(r.point_dp);
            rep["spectrum_dp"] = spectra::to_string(r.spectrum_dp);
            rep["domain_gap"] = r.domain_gap;
            rep["numerical_range_min"] = spectra::to_string(r.numrange_min);
            rep["numerical_range_dp"] = spectra::to_string(r.numrange_dp);
            rep["dissipative_plus"] = r.dissipative_plus;
            rep["dissipative_minus"] = r.dissipative_minus;
            j["report"] = rep;
            double residual = 0;
            if (classify_verify) {
                // tag cross-check: point spectrum of D_p matches exceptional membership
                bool ep = manifold::in_exceptional(p, Sign::Plus);
                bool em = manifold::in_exceptional(p, Sign::Minus);
                bool ok = (r.point_dp == spectra::PointSet::UpperHalf) == ep &&
                          (r.point_dp == spectra::PointSet::LowerHalf) == em;
                residual = ok ? 0.0 : 1.0;
                j["residual"] = residual;
            }
            out = j.dump(2) + "\n";
            return classify_verify && residual > default_tol() ? 3 : 0;
        }
        if (eigs->parsed()) {
            json j = report_head("eigs", ep.echo());
            json list = json::array();
            double worst = 0;
            if (use_nu) {
                auto evs = mixedbc::eigenvalues_mu0(mu0_sign >= 0 ? Sign::Plus : Sign::Minus,
                                                    {ep.lambda_re, ep.lambda_im}, {nu_re, nu_im});
                for (auto& e : evs) {
                    list.push_back({{"k", cjson(e.k)},
                                    {"half_plane", sgn_of(e.sign)},
                                    {"residual", e.residual}});
                    worst = std::max(worst, e.residual);
                }
            } else {
                mixedbc::MixedBoundaryData data{ep.make(), {kappa_re, kappa_im}};
                mixedbc::Window w{wre_min, wre_max, wim_min, wim_max};
                auto evs = mixedbc::eigenvalues(data, w);
                for (auto& e : evs.entries) {
                    double res = e.residual;
                    if (eigs_verify) res = std::max(res, mixedbc::matching_residual(data, e.k, e.sign));
                    list.push_back(
                        {{"k", cjson(e.k)}, {"half_plane", sgn_of(e.sign)}, {"residual", res}});
                    worst = std::max(worst, res);
                }
                j["geometry"] = evs.geometry == mixedbc::LocusGeometry::Circle
                                    ? "circle"
                                    : (evs.geometry == mixedbc::LocusGeometry::HalfLineDiscrete
                                           ? "half-line"
                                           : "spiral");
                j["finite_locus"] = evs.finite;
            }
            j["eigenvalues"] = list;
            out = j.dump(2) + "\n";
            return eigs_verify && worst > 1e-6 ? 3 : 0;
        }
        if (channels->parsed()) {
            auto ws = spectra::channel_omegas(ch_dim, ch_ell);
            json j = report_head("channels", {{"dim", ch_dim}, {"ell", ch_ell}});
            j["omegas"] = ws;
            out = j.dump(2) + "\n";
            return 0;
        }
        if (scatter->parsed()) {
            auto p = sp.make();
            auto val = scattering::scattering_value(p, sc_eps >= 0 ? Sign::Plus : Sign::Minus);
            json j = report_head("scatter", sp.echo());
            switch (val.kind) {
                case manifold::ProjectiveValue::Kind::Finite:
                    j["amplitude"] = cjson(val.value);
                    break;
                case manifold::ProjectiveValue::Kind::Zero:
                    j["amplitude"] = "zero";
                    break;
                case manifold::ProjectiveValue::Kind::Inf:
                    j["amplitude"] = "infinity";
                    break;
                case manifold::ProjectiveValue::Kind::Indeterminate:
                    j["amplitude"] = "indeterminate";
                    break;
            }
            double residual = 0;
            if (scatter_verify && val.kind == manifold::ProjectiveValue::Kind::Finite) {
                auto other = scattering::scattering_value(p.conj(), sc_eps >= 0 ? Sign::Plus : Sign::Minus);
                if (other.kind == manifold::ProjectiveValue::Kind::Finite)
                    residual = std::abs(std::conj(other.value) * val.value - 1.0);
                j["residual"] = residual;
            }
            out = j.dump(2) + "\n";
            return scatter_verify && residual > default_tol() ? 3 : 0;
        }
        if (density->parsed()) {
            auto p = dp.make();
            auto xs = lin_grid(dx_min, dx_max, dnx), ys = lin_grid(dy_min, dy_max, dny);
            auto eval = [&](double x, double y) { return resolvent::spectral_density(p, dk, x, y); };
            auto grid = resolvent::fill_grid(eval, xs, ys);
            double residual = 0;
            if (density_verify) {
                // boundary-kernel difference check at the grid corner
                const double x = xs.front(), y = ys.front();
                auto diff = [&](double epsv) {
                    Mat2 gp = resolvent::green_kernel(p, solutions::EnergyContext(Cplx(dk, epsv)), x, y);
                    Mat2 gm = resolvent::green_kernel(p, solutions::EnergyContext(Cplx(dk, -epsv)), x, y);
                    return (gp - gm) * (1.0 / (2.0 * pi * iu));
                };
                Mat2 d1 = diff(1e-3), d2 = diff(5e-4);
                Mat2 lim;
                for (int e = 0; e < 4; ++e) lim.a[e] = numerics::richardson(d1.a[e], d2.a[e]);
                residual = frob(lim - eval(x, y)) / std::max(1.0, frob(lim));
            }
            if (dformat == "csv") {
                out = grid_csv(grid);
            } else {
                json j = report_head("density", dp.echo());
                j["k"] = dk;
                j["grid"] = grid_json(grid);
                if (density_verify) j["residual"] = residual;
                out = j.dump(2) + "\n";
            }
            if (!density_out.empty()) {
                write_file(density_out, out);
                out = "";
            }
            return density_verify && residual > 1e-4 ? 3 : 0;
        }
    } catch (const Error& e) {
        json j{{"schema", kSchemaVersion}, {"error", e.what()}};
        out = j.dump(2) + "\n";
        return 2;
    }
    return 2;
}

}  // namespace dc::cli
