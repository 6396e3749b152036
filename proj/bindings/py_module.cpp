#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tandem/accept.hpp"
#include "tandem/bipolar.hpp"
#include "tandem/closed_forms.hpp"
#include "tandem/kmsw.hpp"
#include "tandem/oracle.hpp"
#include "tandem/sampler.hpp"
#include "tandem/series.hpp"
#include "tandem/stochastics.hpp"

namespace py = pybind11;
using namespace tandem;

namespace {

WeightSpec make_spec(int p, const std::vector<std::string>& z, const std::string& z_se) {
    std::vector<Rat> zr;
    for (const auto& s : z) zr.push_back(rat_from_string(s));
    return WeightSpec(p, zr, rat_from_string(z_se));
}

StepDistribution make_dist(int p, const std::string& z, const std::vector<std::string>& z_r) {
    std::vector<Rat> zr;
    for (const auto& s : z_r) zr.push_back(rat_from_string(s));
    return StepDistribution(p, rat_from_string(z), zr);
}

// Steps come in as [] for SE or [i, j] for a face step.
TandemWalk walk_from_steps(const std::vector<std::vector<int>>& steps) {
    TandemWalk w;
    for (const auto& s : steps) {
        if (s.empty())
            w.steps.push_back(Step::se());
        else if (s.size() == 2)
            w.steps.push_back(Step::face(s.at(0), s.at(1)));
        else
            throw std::invalid_argument("steps must be [] (SE) or [i, j] (face step)");
    }
    return w;
}

std::vector<std::vector<int>> steps_of(const TandemWalk& w) {
    std::vector<std::vector<int>> out;
    for (const Step& s : w.steps) {
        if (s.is_se())
            out.push_back({});
        else
            out.push_back({s.i, s.j});
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tandem walks, plane bipolar orientations, and their enumeration";

    m.def("count_walks",
          [](int p, const std::vector<std::string>& z, const std::string& z_se, std::pair<long, long> start,
             std::optional<std::pair<long, long>> end, long n, const std::string& region) {
              CountQuery q;
              q.spec = make_spec(p, z, z_se);
              q.start = start;
              q.end = end;
              q.n = n;
              q.region = region == "quadrant"  ? Region::Quadrant
                         : region == "upper"   ? Region::UpperHalfPlane
                                               : Region::None;
              return rat_to_string(count_walks(q));
          },
          py::arg("p"), py::arg("z"), py::arg("z_se") = "1", py::arg("start") = std::make_pair(0L, 0L),
          py::arg("end") = std::nullopt, py::arg("n") = 0, py::arg("region") = "quadrant");

    m.def("tutte_a", [](long k) { return tutte_a(k).get_str(); });
    m.def("baxter_b", [](long n) { return baxter_b(n).get_str(); });
    m.def("dangulation_sequence", [](int p, long kmax) {
        std::vector<std::string> out;
        for (const BigInt& v : dangulation_sequence(p, kmax)) out.push_back(v.get_str());
        return out;
    });
    m.def("lgv_qnk",
          [](long n, long k, long a, long b, long c, long d) { return lgv_qnk(n, k, a, b, c, d).get_str(); });
    m.def("marked_qnk_tilde", [](long n, long k, long a, long b, long c, long d) {
        return marked_qnk_tilde(n, k, a, b, c, d).get_str();
    });
    m.def("exact_p1_endpoint", [](long n, long i, long j) { return exact_p1_endpoint(n, i, j).get_str(); });

    m.def("walk_stats", [](const std::vector<std::vector<int>>& steps) {
        auto st = walk_stats(walk_from_steps(steps));
        return std::make_tuple(st.a, st.b, st.c, st.d);
    });
    m.def("phi", [](const std::vector<std::vector<int>>& steps) { return bipolar_to_json(phi(walk_from_steps(steps))); });
    m.def("phi_inverse", [](const std::string& json) { return steps_of(phi_inverse(bipolar_from_json(json))); });
    m.def("sigma_on_walks",
          [](const std::vector<std::vector<int>>& steps) { return steps_of(sigma_on_walks(walk_from_steps(steps))); });
    m.def("rho_on_walks",
          [](const std::vector<std::vector<int>>& steps) { return steps_of(rho_on_walks(walk_from_steps(steps))); });
    m.def("validate_map", [](const std::string& json) {
        auto rep = validate(bipolar_from_json(json));
        return std::make_tuple(rep.ok, rep.message);
    });

    m.def("q0b_x0_coeffs", [](int p, const std::vector<std::string>& z, long b, int order) {
        TSeries s = q0b_x0(make_spec(p, z, "1"), b, order);
        std::vector<std::vector<std::string>> out;
        for (int n = 0; n < order; ++n) {
            std::vector<std::string> row;
            for (int c = 0; c <= s.coeff(n).max_exponent(0); ++c)
                row.push_back(rat_to_string(s.coeff(n).coeff(c, 0)));
            out.push_back(std::move(row));
        }
        return out;
    });
    m.def("q11_coeffs", [](int p, const std::vector<std::string>& z, long a, long b, int order) {
        TSeries s = q11_series(make_spec(p, z, "1"), a, b, order);
        std::vector<std::string> out;
        for (int n = 0; n < order; ++n) out.push_back(rat_to_string(s.coeff(n).constant()));
        return out;
    });

    m.def("harmonic_v", [](int p, const std::string& z, const std::vector<std::string>& z_r, long a, long b) {
        auto dist = make_dist(p, z, z_r);
        auto v = harmonic_V(dist, a, b);
        double sigma2 = to_double(drift_and_covariance(dist).sigma2);
        return std::make_tuple(rat_to_string(v.rational_part), v.value(std::sqrt(sigma2)));
    });
    m.def("kappa_bipolar", [](const std::vector<int>& omega, long b, long c) {
        auto prof = kappa_profile_bipolar(omega, b, c);
        return std::make_tuple(prof.iota, prof.alpha, prof.gamma, prof.sigma2, prof.kappa);
    });

    m.def("sample_quadrant", [](int p, const std::string& z, const std::vector<std::string>& z_r, long n,
                                uint64_t seed) { return steps_of(sample_quadrant(make_dist(p, z, z_r), n, seed)); });
    m.def("sample_excursion_p1", [](long n, uint64_t seed) { return steps_of(sample_excursion_p1(n, seed)); });

    m.def("run_acceptance", [](const std::string& suite, bool fast) {
        AcceptOptions opts;
        opts.fast = fast;
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : run_acceptance(suite, opts)) out.emplace_back(r.name, r.pass, r.detail);
        return out;
    });
}
