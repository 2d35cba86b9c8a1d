#include "phasecat/cli_runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "phasecat/cat.hpp"
#include "phasecat/errors.hpp"
#include "phasecat/gaussian.hpp"
#include "phasecat/kerr.hpp"
#include "phasecat/lindblad.hpp"
#include "phasecat/oracle.hpp"
#include "phasecat/semiclassical.hpp"
#include "phasecat/verify.hpp"

namespace phasecat::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

void write_text_atomic(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

Vec parse_vec(const json& j, const char* field) {
    if (!j.is_array()) throw ConfigError(std::string("field '") + field + "' must be an array");
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v(i) = j[i].get<double>();
    return v;
}

Mat parse_mat(const json& j, const char* field) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw ConfigError(std::string("field '") + field + "' must be a nested array (rows)");
    const std::size_t rows = j.size(), cols = j[0].size();
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols)
            throw ConfigError(std::string("field '") + field + "': ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
    }
    return m;
}

Complex parse_complex(const json& j, const char* field) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return Complex(j[0].get<double>(), j[1].get<double>());
    throw ConfigError(std::string("field '") + field + "' must be a number or [re, im]");
}

AxisSpec parse_axis(const json& j, const char* field) {
    if (!j.is_array() || j.size() != 3)
        throw ConfigError(std::string("axis '") + field + "' must be [min, max, count]");
    AxisSpec a{j[0].get<double>(), j[1].get<double>(), j[2].get<int>()};
    if (a.count < 2 || a.max <= a.min)
        throw ConfigError(std::string("axis '") + field + "': need max > min and count >= 2");
    return a;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

std::pair<AxisSpec, AxisSpec> grid_axes(const json& config) {
    AxisSpec q{-5.0, 5.0, 101}, p{-5.0, 5.0, 101};
    if (config.contains("grid")) {
        const json& g = config["grid"];
        if (g.contains("q")) q = parse_axis(g["q"], "q");
        if (g.contains("p")) p = parse_axis(g["p"], "p");
    }
    return {q, p};
}

std::string grid_csv(const GaussianSumState& state, const AxisSpec& qa, const AxisSpec& pa,
                     const std::string& descriptor) {
    std::string out;
    out += "# q: min=" + num(qa.min) + " max=" + num(qa.max) + " count=" + std::to_string(qa.count) +
           "; p: min=" + num(pa.min) + " max=" + num(pa.max) + " count=" + std::to_string(pa.count) +
           "; rows=p cols=q\n";
    out += "# schema=" + std::string(kGridSchema) + " version=" + kVersion +
           " hbar=" + num(state.hbar) + " state=" + descriptor + "\n";
    Vec x(2);
    for (int ip = 0; ip < pa.count; ++ip) {
        const double p = pa.min + (pa.max - pa.min) * ip / (pa.count - 1);
        for (int iq = 0; iq < qa.count; ++iq) {
            const double q = qa.min + (qa.max - qa.min) * iq / (qa.count - 1);
            x << q, p;
            out += num(eval_state(state, x));
            out += (iq + 1 == qa.count) ? '\n' : ',';
        }
    }
    return out;
}

PureCat cat_from_config(const json& config) {
    const double hbar = config.value("hbar", 1.0);
    PureCat cat;
    try {
        cat.g1 = make_gaussian_pure(parse_mat(config.at("U"), "U"), parse_vec(config.at("u"), "u"),
                                    hbar);
        cat.g2 = make_gaussian_pure(parse_mat(config.at("V"), "V"), parse_vec(config.at("v"), "v"),
                                    hbar);
    } catch (const NotSymplectic&) {
        throw ConfigError("U/V failed symplectic validation at load");
    }
    cat.a = parse_complex(config.value("a", json(1.0)), "a");
    cat.b = parse_complex(config.value("b", json(1.0)), "b");
    return cat;
}

LindbladChannel channel_from_config(const json& config, double hbar) {
    const json& ch = config.at("channel");
    LindbladChannel channel;
    channel.hbar = hbar;
    channel.b = parse_mat(ch.at("B"), "channel.B");
    if (symmetry_defect(channel.b) > 1e-10)
        throw ConfigError("channel.B failed symmetry validation at load");
    for (const auto& lam : ch.at("lambdas")) {
        CVec v(lam.size());
        for (std::size_t i = 0; i < lam.size(); ++i)
            v(i) = parse_complex(lam[i], "channel.lambdas[]");
        channel.lambdas.push_back(v);
    }
    return channel;
}

json cat_report(const PureCat& cat, const GaussianSumState& state) {
    const InterferenceTerm it = interference_term(cat);
    const NormalForm nf = normal_form(cat.g1.s, cat.g2.s);
    json rep;
    rep["schema"] = kReportSchema;
    rep["version"] = kVersion;
    rep["hbar"] = cat.g1.hbar;
    rep["k_magnitude"] = it.k_magnitude;
    rep["global_phase"] = it.global_phase;
    rep["eta"] = vec_to_json(it.eta);
    rep["zeta"] = vec_to_json(it.zeta_rel);
    rep["thetas"] = nf.thetas;
    rep["classification"] =
        classify_fringes(nf) == FringeClass::Linear ? "Linear" : "Hyperbolic";
    rep["envelope_covariance"] = mat_to_json(it.g.real().inverse());
    rep["normal_form"] = {{"transform", mat_to_json(nf.transform)},
                          {"base_change", mat_to_json(nf.base_change)},
                          {"residual", nf.residual}};
    rep["integral"] = state_integral(state).real();
    rep["purity"] = state_purity(state);
    return rep;
}

}  // namespace

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path);
    json config;
    try {
        config = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return apply_preset(config);
}

json apply_preset(json config) {
    if (!config.contains("preset")) return config;
    const std::string name = config["preset"].get<std::string>();
    json base;
    const json eye = {{1.0, 0.0}, {0.0, 1.0}};
    const json squeeze2 = {{2.0, 0.0}, {0.0, 0.5}};
    const json squeeze2t = {{0.5, 0.0}, {0.0, 2.0}};
    if (name == "coherent_pair") {
        base = {{"U", eye}, {"V", eye}, {"u", {1.8, 0.0}}, {"v", {-1.8, 0.0}},
                {"a", 1.0},  {"b", 1.0}};
    } else if (name == "coherent_squeezed") {
        base = {{"U", squeeze2}, {"V", eye}, {"u", {1.8, 0.0}}, {"v", {-1.8, 0.0}},
                {"a", 1.0},      {"b", 1.0}};
    } else if (name == "orthogonal_squeezed") {
        base = {{"U", squeeze2}, {"V", squeeze2t}, {"u", {0.0, 0.0}}, {"v", {0.0, 0.0}},
                {"a", 1.0},      {"b", 1.0}};
    } else if (name == "damped_cat") {
        base = {{"U", squeeze2},
                {"V", eye},
                {"u", {1.8, 0.0}},
                {"v", {-1.8, 0.0}},
                {"a", 1.0},
                {"b", 1.0},
                {"channel",
                 {{"B", eye},
                  {"lambdas", {{{0.4472135954999579, 0.0}, {0.0, 0.4472135954999579}}}}}},
                {"times", {0.0, 0.1, 0.25, 0.5, 1.0, 2.0}}};
    } else if (name == "compass") {
        base = {{"mu", 1}, {"nu", 8}, {"nbar", 0.5}, {"displacement", {2.0, 0.0}},
                {"nbar_sweep", {0.0, 0.5, 1.0, 2.0}}};
    } else if (name == "binary") {
        base = {{"mu", 1}, {"nu", 4}, {"nbar", 0.5}, {"displacement", {2.0, 0.0}},
                {"nbar_sweep", {0.0, 0.5, 1.0, 2.0}}};
    } else if (name == "kho_paper") {
        base = {{"K", 2.0},      {"tau", M_PI / 3.0},      {"hbar", 0.0128},
                {"kicks", 2},    {"squeeze", 10.0},        {"grid_count", 8192},
                {"grid_half", 7.225663103256524},          {"section_q", -2.0},
                {"section_p", {-4.0, 4.0, 161}}};
    } else {
        throw ConfigError("unknown preset: " + name);
    }
    base.merge_patch(config);
    base.erase("preset");
    return base;
}

int run_cat(const json& config, const std::string& out_dir) {
    const PureCat cat = cat_from_config(config);
    const GaussianSumState state = cat_wigner(cat);
    const auto [qa, pa] = grid_axes(config);
    write_text_atomic(fs::path(out_dir) / "cat_grid.csv", grid_csv(state, qa, pa, "pure-cat"));
    write_text_atomic(fs::path(out_dir) / "cat_report.json", cat_report(cat, state).dump(2) + "\n");
    return 0;
}

int run_decohere(const json& config, const std::string& out_dir) {
    const PureCat cat = cat_from_config(config);
    const double hbar = cat.g1.hbar;
    const LindbladChannel channel = channel_from_config(config, hbar);
    std::vector<double> times;
    for (const auto& t : config.at("times")) times.push_back(t.get<double>());

    const GaussianSumState initial = cat_wigner(cat);
    const auto [qa, pa] = grid_axes(config);

    // Signature bookkeeping for the four covariance matrices of the cat.
    const auto [k_mag, g] = interference_matrices(cat.g1.s, cat.g2.s);
    (void)k_mag;
    std::vector<CMat> covariances{
        (0.5 * hbar) * (cat.g1.s * cat.g1.s.transpose()).cast<Complex>(),
        (0.5 * hbar) * (cat.g2.s * cat.g2.s.transpose()).cast<Complex>(),
        (0.5 * hbar) * g.inverse(), (0.5 * hbar) * g.inverse().conjugate()};

    json rep;
    rep["schema"] = kReportSchema;
    rep["version"] = kVersion;
    rep["hbar"] = hbar;
    rep["times"] = times;
    json sig_table = json::array();
    bool signatures_constant = true;
    std::vector<double> positive_times(times.begin(), times.end());
    positive_times.erase(std::remove_if(positive_times.begin(), positive_times.end(),
                                        [](double t) { return t <= 0.0; }),
                         positive_times.end());
    for (std::size_t c = 0; c < covariances.size(); ++c) {
        const CMat sym = (0.5 * (covariances[c] + covariances[c].transpose())).eval();
        const SignatureReport sub = check_signature_preservation(sym, channel, positive_times);
        json entry;
        entry["covariance"] = static_cast<int>(c);
        entry["constant"] = sub.signatures_constant;
        entry["re_positive"] = sub.re_positive_throughout;
        json snaps = json::array();
        for (const auto& s : sub.snapshots) {
            snaps.push_back({{"t", s.time},
                             {"re_inv", {s.re_inv.n_plus, s.re_inv.n_minus, s.re_inv.n_zero}},
                             {"im_inv", {s.im_inv.n_plus, s.im_inv.n_minus, s.im_inv.n_zero}}});
        }
        entry["snapshots"] = snaps;
        sig_table.push_back(entry);
        if (!sub.signatures_constant) signatures_constant = false;
    }
    rep["signature_table"] = sig_table;
    rep["signatures_constant"] = signatures_constant;

    std::vector<double> ratio_series;
    for (std::size_t idx = 0; idx < times.size(); ++idx) {
        const double t = times[idx];
        const GaussianSumState evolved = t == 0.0 ? initial : evolve_state(initial, channel, t);
        write_text_atomic(fs::path(out_dir) / ("decohere_t" + std::to_string(idx) + ".csv"),
                          grid_csv(evolved, qa, pa, "decohered-cat t=" + num(t)));
        const double hill_peak = std::max(term_abs_peak(evolved.terms[0]).magnitude,
                                          term_abs_peak(evolved.terms[1]).magnitude);
        const double fringe_peak = 2.0 * term_abs_peak(evolved.terms[2]).magnitude;
        ratio_series.push_back(fringe_peak / hill_peak);
    }
    rep["envelope_hill_ratio"] = ratio_series;
    bool monotone = true;
    for (std::size_t i = 1; i < ratio_series.size(); ++i)
        if (ratio_series[i] > ratio_series[i - 1] + 1e-12) monotone = false;
    rep["ratio_monotone_nonincreasing"] = monotone;

    write_text_atomic(fs::path(out_dir) / "decohere_report.json", rep.dump(2) + "\n");
    return 0;
}

int run_kerr(const json& config, const std::string& out_dir) {
    const double hbar = config.value("hbar", 1.0);
    const int mu = config.value("mu", 1);
    const int nu = config.value("nu", 8);
    const double nbar = config.value("nbar", 0.5);
    const Vec displacement = config.contains("displacement")
                                 ? parse_vec(config["displacement"], "displacement")
                                 : Vec::Zero(2);

    GaussianMixed rho0;
    if (config.contains("squeeze")) {
        const double s = config["squeeze"].get<double>();
        Mat sq(2, 2);
        sq << s, 0.0, 0.0, 1.0 / s;
        rho0 = squeezed_thermal(nbar, sq, displacement, hbar);
    } else {
        rho0 = to_mixed(ThermalState{nbar, displacement, hbar});
    }

    const KerrCoefficients kc = kerr_coefficients(mu, nu);
    const GaussianSumState state = kerr_cat(rho0, mu, nu);
    const auto [qa, pa] = grid_axes(config);
    write_text_atomic(fs::path(out_dir) / "kerr_grid.csv",
                      grid_csv(state, qa, pa,
                               "kerr-cat mu=" + std::to_string(mu) + " nu=" + std::to_string(nu)));

    json rep;
    rep["schema"] = kReportSchema;
    rep["version"] = kVersion;
    rep["hbar"] = hbar;
    rep["mu"] = mu;
    rep["nu"] = nu;
    rep["period"] = kc.period;
    rep["component_count"] = kc.component_count;
    json coeffs = json::array();
    for (const auto& c : kc.coeffs)
        coeffs.push_back({{"re", c.real()}, {"im", c.imag()}, {"modulus", std::abs(c)}});
    rep["coefficients"] = coeffs;
    rep["integral"] = state_integral(state).real();
    rep["purity"] = state_purity(state);

    // Hill centers and fringe geometry of the replica pairs.
    json hills = json::array();
    for (const auto& term : state.terms)
        if (term.matrix.imag().cwiseAbs().maxCoeff() < 1e-9 &&
            term.center.imag().cwiseAbs().maxCoeff() < 1e-9)
            hills.push_back(vec_to_json(term.center.real()));
    rep["hill_centers"] = hills;

    const auto class_name = [](CrossFringeClass c) {
        switch (c) {
            case CrossFringeClass::Linear: return "Linear";
            case CrossFringeClass::Elliptic: return "Elliptic";
            default: return "Hyperbolic";
        }
    };
    {
        json geometry = json::array();
        std::vector<int> live;
        double cmax = 0.0;
        for (const auto& c : kc.coeffs) cmax = std::max(cmax, std::abs(c));
        for (int k = 0; k < kc.period; ++k)
            if (std::abs(kc.coeffs[k]) > 1e-12 * cmax) live.push_back(k);
        for (std::size_t a = 0; a < live.size(); ++a) {
            for (std::size_t b = a + 1; b < live.size(); ++b) {
                const double ta = 2.0 * M_PI * live[a] / kc.period;
                const double tb = 2.0 * M_PI * live[b] / kc.period;
                const auto term = cross_term_symbol(rotation_op(ta), rho0, rotation_op(tb));
                geometry.push_back({{"k", live[a]},
                                    {"j", live[b]},
                                    {"angle_degrees", (tb - ta) * 180.0 / M_PI},
                                    {"class", class_name(classify_cross_term(term))}});
            }
        }
        rep["fringe_geometry"] = geometry;
    }

    if (config.contains("nbar_sweep")) {
        std::vector<double> fwhm;
        json sweep = json::array();
        for (const auto& jn : config["nbar_sweep"]) {
            const double nb = jn.get<double>();
            const GaussianSumState st = binary_kerr_state(ThermalState{nb, displacement, hbar});
            Eigen::SelfAdjointEigenSolver<Mat> es(st.terms[2].matrix.real(),
                                                  Eigen::EigenvaluesOnly);
            const double width = 2.0 * std::sqrt(hbar * std::log(2.0) /
                                                 es.eigenvalues().minCoeff());
            fwhm.push_back(width);
            sweep.push_back({{"nbar", nb}, {"fringe_fwhm", width}});
        }
        bool decreasing = true;
        for (std::size_t i = 1; i < fwhm.size(); ++i)
            if (fwhm[i] >= fwhm[i - 1]) decreasing = false;
        rep["nbar_sweep"] = sweep;
        rep["fwhm_strictly_decreasing"] = decreasing;
    }

    write_text_atomic(fs::path(out_dir) / "kerr_report.json", rep.dump(2) + "\n");
    return 0;
}

int run_kho(const json& config, const std::string& out_dir) {
    kho::KHOParams params;
    params.kick = config.value("K", 2.0);
    params.tau = config.value("tau", M_PI / 3.0);
    params.hbar = config.value("hbar", 0.0128);
    params.kicks = config.value("kicks", 2);
    const double squeeze = config.value("squeeze", 10.0);
    const int grid_count = config.value("grid_count", 8192);
    const double grid_half = config.value("grid_half", 7.225663103256524);
    const double section_q = config.value("section_q", -2.0);
    const AxisSpec section_p = config.contains("section_p")
                                   ? parse_axis(config["section_p"], "section_p")
                                   : AxisSpec{-4.0, 4.0, 161};
    const bool frozen = config.value("frozen", false);

    Mat s(2, 2);
    s << squeeze, 0.0, 0.0, 1.0 / squeeze;
    const GaussianPure psi0{s, Vec::Zero(2), params.hbar};

    const oracle::GridWavefunction grid0 =
        kho::sample_squeezed(psi0, -grid_half, grid_half, grid_count);
    const oracle::GridWavefunction exact =
        oracle::split_operator_kho(grid0, params.kick, params.tau, params.kicks);

    kho::Swarm swarm = kho::decompose_squeezed(psi0);
    const double residual = swarm.residual;
    swarm = kho::propagate_swarm(swarm, params, frozen);
    const oracle::GridWavefunction approx = kho::swarm_wavefunction(swarm, grid0);

    Complex inner = 0.0;
    for (int i = 0; i < exact.size(); ++i) inner += std::conj(exact.psi(i)) * approx.psi(i);
    inner *= exact.dq;
    const double fidelity =
        std::norm(inner) / (std::pow(exact.norm(), 2) * std::pow(approx.norm(), 2));

    std::string section;
    section += "# section q=" + num(section_q) + "; p: min=" + num(section_p.min) +
               " max=" + num(section_p.max) + " count=" + std::to_string(section_p.count) + "\n";
    section += "# schema=" + std::string(kGridSchema) + " version=" + kVersion +
               " hbar=" + num(params.hbar) + " state=kho-section columns=p,W_exact,W_swarm\n";
    double num_l2 = 0.0, den_l2 = 0.0;
    for (int i = 0; i < section_p.count; ++i) {
        const double p =
            section_p.min + (section_p.max - section_p.min) * i / (section_p.count - 1);
        const double we = oracle::quadrature_wigner(exact, section_q, p);
        const double ws = oracle::quadrature_wigner(approx, section_q, p);
        num_l2 += (we - ws) * (we - ws);
        den_l2 += we * we;
        section += num(p) + "," + num(we) + "," + num(ws) + "\n";
    }
    const double l2 = std::sqrt(num_l2 / den_l2);
    write_text_atomic(fs::path(out_dir) / "kho_section.csv", section);

    std::string manifold;
    manifold += "# columns=node_q,center_q,center_p\n";
    manifold += "# schema=" + std::string(kGridSchema) + " version=" + kVersion +
                " hbar=" + num(params.hbar) + " state=kho-branch-manifold\n";
    for (std::size_t j = 0; j < swarm.branches.size(); ++j)
        manifold += num(swarm.nodes[j]) + "," + num(swarm.branches[j].center(0)) + "," +
                    num(swarm.branches[j].center(1)) + "\n";
    write_text_atomic(fs::path(out_dir) / "kho_manifold.csv", manifold);

    json rep;
    rep["schema"] = kReportSchema;
    rep["version"] = kVersion;
    rep["params"] = {{"K", params.kick}, {"tau", params.tau},   {"hbar", params.hbar},
                     {"kicks", params.kicks}, {"squeeze", squeeze}, {"frozen", frozen}};
    rep["fidelity"] = fidelity;
    rep["section_l2_discrepancy"] = l2;
    rep["reconstruction_residual"] = residual;
    rep["exact_norm"] = exact.norm();
    rep["swarm_norm"] = approx.norm();
    rep["branches"] = swarm.branches.size();
    write_text_atomic(fs::path(out_dir) / "kho_report.json", rep.dump(2) + "\n");
    return 0;
}

int run_verify(const json& config, const std::string& out_dir, std::uint64_t seed) {
    const std::uint64_t used_seed = seed != 0 ? seed : config.value("seed", kDefaultSeed);
    json rep;
    rep["schema"] = kReportSchema;
    rep["version"] = kVersion;
    rep["seed"] = used_seed;
    json items = json::array();
    bool all = true;
    const auto results = verify::run_all(used_seed, [&](const verify::CriterionResult& r) {
        std::cout << r.id << (r.passed ? " PASS  " : " FAIL  ") << r.detail << std::endl;
    });
    for (const auto& r : results) {
        items.push_back({{"id", r.id}, {"passed", r.passed}, {"detail", r.detail}});
        if (!r.passed) all = false;
    }
    rep["criteria"] = items;
    rep["all_passed"] = all;
    write_text_atomic(fs::path(out_dir) / "verify_report.json", rep.dump(2) + "\n");
    return all ? 0 : 1;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"phasecat: phase-space structure of generalized Gaussian cat states"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;

    const auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* opt = sub->add_option("--config", config_path, "JSON run configuration");
        if (config_required) opt->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "PRNG seed override");
    };
    add_common(app.add_subcommand("cat", "pure Gaussian cat Wigner function and fringe report"),
               true);
    add_common(app.add_subcommand("decohere", "evolve a cat under a linear Lindblad channel"),
               true);
    add_common(app.add_subcommand("kerr", "Kerr fractional-revival mixed cats"), true);
    add_common(app.add_subcommand("kho", "kicked harmonic oscillator semiclassics"), true);
    add_common(app.add_subcommand("verify", "run the full oracle-comparison suite"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const json config = config_path.empty() ? json::object() : load_config(config_path);
        if (app.got_subcommand("cat")) return run_cat(config, out_dir);
        if (app.got_subcommand("decohere")) return run_decohere(config, out_dir);
        if (app.got_subcommand("kerr")) return run_kerr(config, out_dir);
        if (app.got_subcommand("kho")) return run_kho(config, out_dir);
        if (app.got_subcommand("verify")) return run_verify(config, out_dir, seed);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << std::endl;
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}

}  // namespace phasecat::cli
