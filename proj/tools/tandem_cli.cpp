// Command line front end: exact counting, series coefficients, closed forms,
// the walk/orientation bijection, samplers, asymptotics, and the acceptance
// verifier. Exit codes: 0 success, 1 domain error, 2 usage error.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tandem/accept.hpp"
#include "tandem/bipolar.hpp"
#include "tandem/closed_forms.hpp"
#include "tandem/kmsw.hpp"
#include "tandem/oracle.hpp"
#include "tandem/sampler.hpp"
#include "tandem/series.hpp"
#include "tandem/stochastics.hpp"

using namespace tandem;

namespace {

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::pair<long, long> parse_point(const std::string& csv) {
    auto comma = csv.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("expected 'x,y'");
    return {std::stol(csv.substr(0, comma)), std::stol(csv.substr(comma + 1))};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

nlohmann::json poly_to_json(const LaurentPoly& c) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [key, v] : c.terms()) obj[std::to_string(key.first)] = rat_to_string(v);
    return obj;
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(15);
    os << x;
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tandem walks in the quadrant and plane bipolar orientations"};
    app.require_subcommand(1);

    // ---- count ----
    auto* count = app.add_subcommand("count", "exact weighted walk counts (DP oracle)");
    int c_p = 1;
    std::string c_z = "0,1", c_zse = "1", c_from = "0,0", c_to = "0,0", c_region = "quadrant";
    long c_len = 0;
    bool c_refine = false;
    count->add_option("--p", c_p, "maximal face-step level");
    count->add_option("--z", c_z, "comma list z_0..z_p (rationals)");
    count->add_option("--zse", c_zse, "SE step weight");
    count->add_option("--from", c_from, "start point 'a,b'");
    count->add_option("--to", c_to, "end point 'c,d' or 'any'");
    count->add_option("--len", c_len, "number of steps")->required();
    count->add_option("--region", c_region, "quadrant|upper|none");
    count->add_flag("--refine", c_refine, "refine by level profile (n <= 14)");

    // ---- series ----
    auto* series = app.add_subcommand("series", "generating-function coefficients");
    std::string s_formula;
    int s_order = 10, s_p = 1;
    std::string s_z = "0,1", s_zse = "1";
    long s_a = 0, s_b = 0, s_d = -1;
    series->add_option("--formula", s_formula, "q0b-x0|q0b-ct|q11|w|y1|oned|invariant")->required();
    series->add_option("--order", s_order, "truncation order in t (exclusive)");
    series->add_option("--p", s_p, "maximal level");
    series->add_option("--z", s_z, "comma list z_0..z_p");
    series->add_option("--zse", s_zse, "SE step weight (oned only)");
    series->add_option("--a", s_a, "parameter a");
    series->add_option("--b", s_b, "parameter b");
    series->add_option("--d", s_d, "endpoint height d (q0b-x0 slice)");

    // ---- closed-form ----
    auto* closed = app.add_subcommand("closed-form", "printed exact formulas and recurrences");
    closed->require_subcommand(1);
    auto* cf_tutte = closed->add_subcommand("tutte");
    long t_k = 0;
    cf_tutte->add_option("--k", t_k)->required();
    auto* cf_baxter = closed->add_subcommand("baxter");
    long bx_n = 1;
    cf_baxter->add_option("--n", bx_n)->required();
    auto* cf_dang = closed->add_subcommand("dang");
    int dg_p = 1;
    long dg_kmax = 10;
    cf_dang->add_option("--p", dg_p)->required();
    cf_dang->add_option("--kmax", dg_kmax);
    auto* cf_lgv = closed->add_subcommand("lgv");
    long lg_n = 1, lg_k = 0, lg_a = 0, lg_b = 0, lg_c = 0, lg_d = 0;
    bool lg_tilde = false;
    cf_lgv->add_option("--n", lg_n)->required();
    cf_lgv->add_option("--k", lg_k)->required();
    cf_lgv->add_option("--a", lg_a);
    cf_lgv->add_option("--b", lg_b);
    cf_lgv->add_option("--c", lg_c);
    cf_lgv->add_option("--d", lg_d);
    cf_lgv->add_flag("--tilde", lg_tilde, "inclusion-exclusion variant (marked orientations)");
    auto* cf_p1 = closed->add_subcommand("p1-endpoint");
    long p1_n = 0, p1_i = 0, p1_j = 0;
    cf_p1->add_option("--n", p1_n)->required();
    cf_p1->add_option("--i", p1_i)->required();
    cf_p1->add_option("--j", p1_j)->required();

    // ---- bijection ----
    auto* bij = app.add_subcommand("bijection", "the walk/orientation bijection and involutions");
    bij->require_subcommand(1);
    std::string b_in = "-", b_out = "-";
    for (const char* name : {"phi", "phi-inverse", "sigma", "rho"}) {
        auto* sub = bij->add_subcommand(name);
        sub->add_option("--in", b_in, "input file or '-'");
        sub->add_option("--out", b_out, "output file or '-'");
    }

    // ---- validate ----
    auto* val = app.add_subcommand("validate", "check a marked bipolar orientation");
    std::string v_in = "-";
    val->add_option("--in", v_in, "map JSON file or '-'");

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "seeded random generation");
    sample->require_subcommand(1);
    long sm_n = 6;
    uint64_t sm_seed = 1;
    int sm_p = 1;
    std::string sm_z = "1/3", sm_zr = "0,1/3", sm_emit;
    for (const char* name : {"halfplane", "quadrant", "excursion-p1", "excursion-window"}) {
        auto* sub = sample->add_subcommand(name);
        sub->add_option("--n", sm_n, "length parameter")->required();
        sub->add_option("--seed", sm_seed, "RNG seed (std::mt19937_64)");
        sub->add_option("--p", sm_p, "maximal level");
        sub->add_option("--z", sm_z, "SE probability (rational)");
        sub->add_option("--zr", sm_zr, "comma list z_0..z_p (rationals)");
        sub->add_option("--emit", sm_emit, "walk.json | walk.svg | map.dot output path");
    }

    // ---- asymptotics ----
    auto* asym = app.add_subcommand("asymptotics", "growth constants for weighted counts");
    std::string as_omega, as_w;
    long as_a = 0, as_b = 0, as_c = 0, as_d = 0;
    asym->add_option("--omega", as_omega, "face degrees, e.g. '3' or '3,4'");
    asym->add_option("--w", as_w, "level weights w_0..w_p (doubles)");
    asym->add_option("--a", as_a);
    asym->add_option("--b", as_b);
    asym->add_option("--c", as_c);
    asym->add_option("--d", as_d);

    // ---- harmonic ----
    auto* harm = app.add_subcommand("harmonic", "discrete harmonic function values");
    int h_p = 1;
    std::string h_z, h_zr;
    long h_a = 0, h_b = 0;
    harm->add_option("--p", h_p, "maximal level (default distribution: single top level)");
    harm->add_option("--z", h_z, "SE probability");
    harm->add_option("--zr", h_zr, "comma list z_0..z_p");
    harm->add_option("--a", h_a)->required();
    harm->add_option("--b", h_b)->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    std::string vf_suite = "all";
    bool vf_fast = false;
    int vf_order = 10;
    verify->add_option("suite", vf_suite, "bijection|series|asymptotics|sampler|all");
    verify->add_flag("--fast", vf_fast, "reduced sample counts");
    verify->add_option("--order", vf_order, "series truncation order");

    // ---- render ----
    auto* render = app.add_subcommand("render", "emit SVG for walks or DOT for orientations");
    std::string r_in = "-", r_out = "-", r_start = "0,0";
    bool r_svg = false, r_dot = false;
    render->add_option("--in", r_in, "input JSON (walk or map)");
    render->add_option("--out", r_out, "output path or '-'");
    render->add_option("--start", r_start, "embedding start for walks");
    render->add_flag("--svg", r_svg, "render a walk as SVG");
    render->add_flag("--dot", r_dot, "render an orientation as DOT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) {
            CountQuery q;
            q.spec = WeightSpec(c_p, parse_rat_list(c_z), rat_from_string(c_zse));
            q.start = parse_point(c_from);
            if (c_to != "any") q.end = parse_point(c_to);
            q.n = c_len;
            q.region = c_region == "quadrant" ? Region::Quadrant
                       : c_region == "upper"  ? Region::UpperHalfPlane
                       : c_region == "none"   ? Region::None
                                              : throw std::invalid_argument("bad region " + c_region);
            if (c_refine) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& [prof, w] : count_walks_refined(q)) {
                    nlohmann::json row;
                    row["levels"] = prof;
                    row["count"] = rat_to_string(w);
                    out.push_back(std::move(row));
                }
                std::cout << out.dump() << "\n";
            } else {
                std::cout << rat_to_string(count_walks(q)) << "\n";
            }
            return 0;
        }

        if (series->parsed()) {
            WeightSpec spec(s_p, parse_rat_list(s_z));
            nlohmann::json out = nlohmann::json::array();
            if (s_formula == "q0b-x0" || s_formula == "q0b-ct") {
                TSeries s = s_formula == "q0b-x0"
                                ? (s_d >= 0 ? q0b_y_slice(spec, s_b, s_d, s_order) : q0b_x0(spec, s_b, s_order))
                                : q0b_constant_term(spec, s_b, s_order);
                for (int n = 0; n < s_order; ++n) {
                    nlohmann::json row = nlohmann::json::array();
                    for (int c = 0; c <= s.coeff(n).max_exponent(0); ++c)
                        row.push_back(rat_to_string(s.coeff(n).coeff(c, 0)));
                    out.push_back(std::move(row));
                }
            } else if (s_formula == "q11") {
                TSeries s = q11_series(spec, s_a, s_b, s_order);
                for (int n = 0; n < s_order; ++n) out.push_back(rat_to_string(s.coeff(n).constant()));
            } else if (s_formula == "w") {
                TSeries s = w_series(spec, s_order);
                for (int n = 0; n < s_order; ++n) out.push_back(rat_to_string(s.coeff(n).constant()));
            } else if (s_formula == "y1") {
                TSeries s = y1_series(spec, s_order);
                for (int n = 0; n < s_order; ++n) out.push_back(poly_to_json(s.coeff(n)));
            } else if (s_formula == "oned") {
                OneDWeights w = oned_tandem_specialization(spec, true);
                auto rep = oned_identities(w, s_order, 3, 3);
                nlohmann::json obj;
                obj["ok"] = rep.ok;
                obj["detail"] = rep.detail;
                std::cout << obj.dump() << "\n";
                return rep.ok ? 0 : 1;
            } else if (s_formula == "invariant") {
                StepDistribution dist(s_p, rat_from_string(s_zse), parse_rat_list(s_z));
                for (const Rat& r : invariant_identity_residual(dist, s_order)) out.push_back(rat_to_string(r));
            } else {
                throw std::invalid_argument("unknown formula " + s_formula);
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (closed->parsed()) {
            if (cf_tutte->parsed()) std::cout << tutte_a(t_k).get_str() << "\n";
            if (cf_baxter->parsed()) std::cout << baxter_b(bx_n).get_str() << "\n";
            if (cf_dang->parsed()) {
                nlohmann::json out = nlohmann::json::array();
                for (const BigInt& v : dangulation_sequence(dg_p, dg_kmax)) out.push_back(v.get_str());
                std::cout << out.dump() << "\n";
            }
            if (cf_lgv->parsed())
                std::cout << (lg_tilde ? marked_qnk_tilde(lg_n, lg_k, lg_a, lg_b, lg_c, lg_d)
                                       : lgv_qnk(lg_n, lg_k, lg_a, lg_b, lg_c, lg_d))
                                 .get_str()
                          << "\n";
            if (cf_p1->parsed()) std::cout << exact_p1_endpoint(p1_n, p1_i, p1_j).get_str() << "\n";
            return 0;
        }

        if (bij->parsed()) {
            std::string input = read_input(b_in);
            std::string output;
            if (bij->get_subcommand("phi")->parsed())
                output = bipolar_to_json(phi(walk_from_json(input)));
            else if (bij->get_subcommand("phi-inverse")->parsed())
                output = walk_to_json(phi_inverse(bipolar_from_json(input)));
            else if (bij->get_subcommand("sigma")->parsed())
                output = bipolar_to_json(sigma(bipolar_from_json(input)));
            else
                output = bipolar_to_json(rho(bipolar_from_json(input)));
            write_output(b_out, output);
            return 0;
        }

        if (val->parsed()) {
            auto rep = validate(bipolar_from_json(read_input(v_in)));
            std::cout << (rep.ok ? "pass" : "fail: " + rep.message) << "\n";
            return rep.ok ? 0 : 1;
        }

        if (sample->parsed()) {
            StepDistribution dist(sm_p, rat_from_string(sm_z), parse_rat_list(sm_zr));
            TandemWalk w;
            if (sample->get_subcommand("halfplane")->parsed())
                w = sample_halfplane(dist, sm_n, sm_seed);
            else if (sample->get_subcommand("quadrant")->parsed())
                w = sample_quadrant(dist, sm_n, sm_seed);
            else if (sample->get_subcommand("excursion-p1")->parsed())
                w = sample_excursion_p1(sm_n, sm_seed);
            else {
                auto res = sample_excursion_windowed(dist, sm_n, sm_seed);
                w = res.walk;
                std::cerr << "m=" << res.m << " w2_retries=" << res.w2_retries
                          << " rejections=" << res.rejections << "\n";
            }
            if (!sm_emit.empty()) {
                if (sm_emit.size() >= 4 && sm_emit.substr(sm_emit.size() - 4) == ".svg")
                    write_output(sm_emit, walk_to_svg(w, {0, 0}));
                else if (sm_emit.size() >= 4 && sm_emit.substr(sm_emit.size() - 4) == ".dot")
                    write_output(sm_emit, bipolar_to_dot(phi(w)));
                else
                    write_output(sm_emit, walk_to_json(w));
            }
            std::cout << walk_to_json(w) << "\n";
            return 0;
        }

        if (asym->parsed()) {
            AsymptoticProfile prof;
            if (!as_omega.empty()) {
                std::vector<int> omega;
                for (double x : parse_double_list(as_omega)) omega.push_back(static_cast<int>(x));
                prof = kappa_profile_bipolar(omega, as_b, as_c);
            } else if (!as_w.empty()) {
                prof = kappa_profile(parse_double_list(as_w), as_a, as_b, as_c, as_d);
            } else {
                throw std::invalid_argument("asymptotics: need --omega or --w");
            }
            nlohmann::json out;
            out["iota"] = prof.iota;
            out["alpha"] = format_double(prof.alpha);
            out["gamma"] = format_double(prof.gamma);
            out["sigma2"] = format_double(prof.sigma2);
            out["kappa"] = format_double(prof.kappa);
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (harm->parsed()) {
            StepDistribution dist = StepDistribution::uniform_top_level(h_p);
            if (!h_z.empty() && !h_zr.empty()) dist = StepDistribution(h_p, rat_from_string(h_z), parse_rat_list(h_zr));
            auto v = harmonic_V(dist, h_a, h_b);
            double sigma2 = to_double(drift_and_covariance(dist).sigma2);
            nlohmann::json out;
            out["rational_over_sigma"] = rat_to_string(v.rational_part);
            out["value"] = format_double(v.value(std::sqrt(sigma2)));
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (verify->parsed()) {
            AcceptOptions opts;
            opts.fast = vf_fast;
            opts.series_order = vf_order;
            auto results = run_acceptance(vf_suite, opts);
            bool ok = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
                if (!r.detail.empty()) std::cout << " : " << r.detail;
                std::cout << "\n";
                ok = ok && r.pass;
            }
            if (results.empty()) throw std::invalid_argument("unknown suite " + vf_suite);
            return ok ? 0 : 1;
        }

        if (render->parsed()) {
            std::string input = read_input(r_in);
            if (r_svg)
                write_output(r_out, walk_to_svg(walk_from_json(input), parse_point(r_start)));
            else if (r_dot)
                write_output(r_out, bipolar_to_dot(bipolar_from_json(input)));
            else
                throw std::invalid_argument("render: choose --svg or --dot");
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
