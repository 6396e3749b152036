#include "tandem/steps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vendor_json.hpp"

namespace tandem {

Step Step::face(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("face step needs i,j >= 0");
    return Step{Kind::Face, i, j};
}

std::pair<int, int> step_vector(const Step& s) {
    if (s.is_se()) return {1, -1};
    return {-s.i, s.j};
}

WeightSpec::WeightSpec(int p_, std::vector<Rat> z_, Rat zse) : p(p_), z_se(std::move(zse)), z(std::move(z_)) {
    if (p < 0) throw std::invalid_argument("WeightSpec: p must be >= 0");
    if (static_cast<int>(z.size()) != p + 1) throw std::invalid_argument("WeightSpec: need p+1 level weights");
    for (const Rat& w : z)
        if (w < 0) throw std::invalid_argument("WeightSpec: negative weight");
    if (z_se < 0) throw std::invalid_argument("WeightSpec: negative SE weight");
}

WeightSpec WeightSpec::unit(int p) { return WeightSpec(p, std::vector<Rat>(p + 1, Rat(1))); }

Rat WeightSpec::weight_of(const Step& s) const {
    if (s.is_se()) return z_se;
    int r = s.level();
    if (r > p) return Rat(0);
    return z[r];
}

Rat WeightSpec::total_step_weight() const {
    Rat t = z_se;
    for (int r = 0; r <= p; ++r) t += Rat(r + 1) * z[r];
    return t;
}

bool StepDistribution::normalized() const {
    if (p < 0 || static_cast<int>(z_r.size()) != p + 1) return false;
    if (z < 0) return false;
    Rat total = z;
    for (int r = 0; r <= p; ++r) {
        if (z_r[r] < 0) return false;
        total += Rat(r + 1) * z_r[r];
    }
    return total == 1;
}

bool StepDistribution::zero_drift() const {
    Rat lhs = z, rhs = 0;
    for (int r = 1; r <= p; ++r) rhs += z_r[r] * Rat(r * (r + 1) / 2);
    return lhs == rhs;
}

StepDistribution StepDistribution::uniform_top_level(int p) {
    // z_p = 2/((p+1)(p+2)), z = p/(p+2), other levels zero
    std::vector<Rat> zr(static_cast<size_t>(p) + 1, Rat(0));
    zr[static_cast<size_t>(p)] = frac(2, (p + 1) * (p + 2));
    return StepDistribution(p, frac(p, p + 2), std::move(zr));
}

WalkBoundaryStats walk_stats(const TandemWalk& w) {
    long x = 0, y = 0, xmin = 0, ymin = 0;
    for (const Step& s : w.steps) {
        auto [dx, dy] = step_vector(s);
        x += dx;
        y += dy;
        xmin = std::min(xmin, x);
        ymin = std::min(ymin, y);
    }
    return WalkBoundaryStats{-xmin, -ymin, x - xmin, y - ymin};
}

bool is_confined(const TandemWalk& w, std::pair<long, long> start, Region region) {
    if (region == Region::None) return true;
    long x = start.first, y = start.second;
    auto ok = [&](long xx, long yy) {
        if (region == Region::Quadrant) return xx >= 0 && yy >= 0;
        return yy >= 0; // upper half-plane
    };
    if (!ok(x, y)) return false;
    for (const Step& s : w.steps) {
        auto [dx, dy] = step_vector(s);
        x += dx;
        y += dy;
        if (!ok(x, y)) return false;
    }
    return true;
}

bool Periodicity::reachable(long n, long i, long j) const {
    long m = static_cast<long>(iota);
    return ((i - j - 2 * n) % m + m) % m == 0;
}

Periodicity periodicity(const std::vector<unsigned>& levels) {
    if (levels.empty()) throw std::invalid_argument("periodicity: empty level set");
    if (levels.size() == 1 && levels[0] == 0) throw std::invalid_argument("periodicity: level set {0}");
    unsigned g = 0;
    for (unsigned r : levels) g = std::gcd(g, r + 2);
    Periodicity res;
    res.iota = g;
    res.period = (g % 2 == 1) ? g : g / 2;
    res.lattice = (g % 2 == 1) ? Lattice::Full : Lattice::EvenSum;
    return res;
}

std::vector<unsigned> support_levels(const WeightSpec& spec) {
    std::vector<unsigned> d;
    for (int r = 0; r <= spec.p; ++r)
        if (spec.z[r] > 0) d.push_back(static_cast<unsigned>(r));
    return d;
}

std::string walk_to_json(const TandemWalk& w) {
    nlohmann::json steps = nlohmann::json::array();
    for (const Step& s : w.steps) {
        if (s.is_se())
            steps.push_back(nlohmann::json::array({"SE"}));
        else
            steps.push_back(nlohmann::json::array({"F", s.i, s.j}));
    }
    nlohmann::json out;
    out["steps"] = std::move(steps);
    return out.dump();
}

TandemWalk walk_from_json(const std::string& text) {
    nlohmann::json in = nlohmann::json::parse(text);
    TandemWalk w;
    for (const auto& item : in.at("steps")) {
        std::string tag = item.at(0).get<std::string>();
        if (tag == "SE")
            w.steps.push_back(Step::se());
        else if (tag == "F")
            w.steps.push_back(Step::face(item.at(1).get<int>(), item.at(2).get<int>()));
        else
            throw std::invalid_argument("walk JSON: unknown step tag " + tag);
    }
    return w;
}

std::vector<std::pair<long, long>> walk_points(const TandemWalk& w, std::pair<long, long> start) {
    std::vector<std::pair<long, long>> pts;
    pts.reserve(w.size() + 1);
    long x = start.first, y = start.second;
    pts.emplace_back(x, y);
    for (const Step& s : w.steps) {
        auto [dx, dy] = step_vector(s);
        x += dx;
        y += dy;
        pts.emplace_back(x, y);
    }
    return pts;
}

std::string walk_to_svg(const TandemWalk& w, std::pair<long, long> start) {
    auto pts = walk_points(w, start);
    long xmin = pts[0].first, xmax = pts[0].first, ymin = pts[0].second, ymax = pts[0].second;
    for (auto [x, y] : pts) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    const int u = 20, pad = 10;
    auto X = [&](long x) { return pad + u * (x - xmin); };
    auto Y = [&](long y) { return pad + u * (ymax - y); }; // flip: y up
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (2 * pad + u * (xmax - xmin))
        << "\" height=\"" << (2 * pad + u * (ymax - ymin)) << "\">\n";
    for (long x = xmin; x <= xmax; ++x)
        svg << "<line x1=\"" << X(x) << "\" y1=\"" << Y(ymin) << "\" x2=\"" << X(x) << "\" y2=\"" << Y(ymax)
            << "\" stroke=\"#ddd\"/>\n";
    for (long y = ymin; y <= ymax; ++y)
        svg << "<line x1=\"" << X(xmin) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(xmax) << "\" y2=\"" << Y(y)
            << "\" stroke=\"#ddd\"/>\n";
    svg << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
    for (auto [x, y] : pts) svg << X(x) << "," << Y(y) << " ";
    svg << "\"/>\n";
    svg << "<circle cx=\"" << X(pts.front().first) << "\" cy=\"" << Y(pts.front().second)
        << "\" r=\"4\" fill=\"#2a7\"/>\n";
    svg << "<circle cx=\"" << X(pts.back().first) << "\" cy=\"" << Y(pts.back().second)
        << "\" r=\"4\" fill=\"#c33\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tandem
