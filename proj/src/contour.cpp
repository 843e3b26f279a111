#include "amo/contour.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "amo/univariate.hpp"

namespace amo {

std::vector<ProjectiveDirection> circle_directions(int steps) {
    if (steps < 1) throw std::invalid_argument("steps must be positive");
    std::vector<ProjectiveDirection> out;
    for (int k = 0; k < steps; ++k) {
        double t = M_PI * k / steps;
        double c = std::cos(t), s = std::sin(t);
        std::vector<Rational> q(2, Rational(0));
        for (int i = 0; i < 2; ++i) {
            double v = i == 0 ? c : s;
            if (std::abs(v) < 1e-12) continue;
            auto r = reconstruct_rational(v, 4096, 1e-3);
            q[(size_t)i] = r ? *r : Rational((long)std::lround(v * 4096), 4096);
        }
        if (q[0] == 0 && q[1] == 0) continue;
        ProjectiveDirection d = ProjectiveDirection::of(q);
        if (out.empty() || !(out.back().coords == d.coords)) out.push_back(d);
    }
    return out;
}

ContourResult contour_points(const LaurentPoly& f,
                             const std::vector<ProjectiveDirection>& dirs) {
    ContourResult out;
    for (auto& q : dirs) {
        try {
            FiberResult fr = fiber(f, q);
            for (auto& p : fr.points) {
                LogPoint lp;
                for (auto& c : p.coords)
                    lp.x.push_back(std::log(std::abs(c.value())));
                bool finite = true;
                for (double v : lp.x) finite = finite && std::isfinite(v);
                if (!finite) continue;
                lp.pleat = p.multiplicity >= 2;
                lp.has_direction = true;
                lp.dir = q;
                out.points.push_back(std::move(lp));
            }
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "direction";
            for (auto& c : q.coords) msg << " " << to_string(c);
            msg << ": " << e.what();
            out.failures.push_back(msg.str());
        }
    }
    return out;
}

std::vector<LogPoint> amoeba_samples(const LaurentPoly& f,
                                     const AmoebaGrid& grid) {
    if (f.arity() != 2) throw std::domain_error("two variables only");
    std::vector<LogPoint> out;
    int low = f.low_degree_in(1);
    int high = f.degree_in(1);
    // coefficients of f as a polynomial in z2 (shifted to clear negatives)
    std::vector<LaurentPoly> coeff((size_t)(high - low + 1), LaurentPoly(1));
    for (auto& [e, c] : f.terms()) {
        LaurentPoly& slot = coeff[(size_t)(e[1] - low)];
        slot.add_term({e[0]}, c);
    }
    for (int it = 0; it < grid.t_steps; ++it) {
        double t = grid.t_min +
                   (grid.t_max - grid.t_min) * it / (grid.t_steps - 1.0);
        for (int ia = 0; ia < grid.angle_steps; ++ia) {
            double phi = M_PI * ia / grid.angle_steps;
            Complex z1 = std::exp(Complex(t, phi));
            std::vector<Complex> cs;
            for (auto& cp : coeff) cs.push_back(eval_complex(cp, {z1}).value);
            while (!cs.empty() && std::abs(cs.back()) < 1e-13) cs.pop_back();
            size_t lead0 = 0;
            while (lead0 < cs.size() && std::abs(cs[lead0]) < 1e-13) ++lead0;
            cs.erase(cs.begin(), cs.begin() + (long)lead0);
            if (cs.size() < 2) continue;
            std::vector<Complex> roots;
            try {
                roots = aberth_roots(cs);
            } catch (...) {
                continue;
            }
            for (auto& z2 : roots) {
                if (std::abs(z2) < 1e-12) continue;
                LogPoint lp;
                lp.x = {t, std::log(std::abs(z2))};
                if (std::isfinite(lp.x[1])) out.push_back(std::move(lp));
            }
        }
    }
    return out;
}

Raster rasterize(const std::vector<LogPoint>& samples, double lo1, double lo2,
                 double hi1, double hi2, int res, double dilate) {
    Raster r;
    r.lo1 = lo1;
    r.lo2 = lo2;
    r.hi1 = hi1;
    r.hi2 = hi2;
    r.res = res;
    r.occupied.assign((size_t)res * (size_t)res, 0);
    double w1 = (hi1 - lo1) / res, w2 = (hi2 - lo2) / res;
    for (auto& p : samples) {
        if (p.x.size() != 2) continue;
        if (p.x[0] < lo1 || p.x[0] > hi1 || p.x[1] < lo2 || p.x[1] > hi2)
            continue;
        int c1 = std::min(res - 1, (int)((p.x[0] - lo1) / w1));
        int c2 = std::min(res - 1, (int)((p.x[1] - lo2) / w2));
        int rad = (int)std::ceil(dilate);
        for (int d1 = -rad; d1 <= rad; ++d1)
            for (int d2 = -rad; d2 <= rad; ++d2) {
                if (d1 * d1 + d2 * d2 > dilate * dilate) continue;
                int a = c1 + d1, b = c2 + d2;
                if (a < 0 || b < 0 || a >= res || b >= res) continue;
                r.occupied[(size_t)b * (size_t)res + (size_t)a] = 1;
            }
    }
    // flood fill the complement, 4-connected
    r.label.assign(r.occupied.size(), -1);
    for (int b = 0; b < res; ++b)
        for (int a = 0; a < res; ++a) {
            size_t idx = (size_t)b * (size_t)res + (size_t)a;
            if (r.occupied[idx] || r.label[idx] >= 0) continue;
            int id = r.components++;
            bool touches_edge = false;
            std::vector<std::pair<int, int>> stack{{a, b}};
            r.label[idx] = id;
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                if (x == 0 || y == 0 || x == res - 1 || y == res - 1)
                    touches_edge = true;
                const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    int nx = x + dx[k], ny = y + dy[k];
                    if (nx < 0 || ny < 0 || nx >= res || ny >= res) continue;
                    size_t ni = (size_t)ny * (size_t)res + (size_t)nx;
                    if (r.occupied[ni] || r.label[ni] >= 0) continue;
                    r.label[ni] = id;
                    stack.push_back({nx, ny});
                }
            }
            r.bounded.push_back(!touches_edge);
        }
    return r;
}

ComponentCount complement_components(const std::vector<LogPoint>& samples,
                                     int resolution, double pad) {
    ComponentCount out;
    if (samples.empty()) {
        out.total = 1;
        out.bounded = 0;
        out.stable = true;
        out.raster = rasterize({}, 0, 0, 1, 1, std::max(resolution, 2));
        return out;
    }
    double lo1 = samples[0].x[0], hi1 = lo1;
    double lo2 = samples[0].x[1], hi2 = lo2;
    for (auto& p : samples) {
        lo1 = std::min(lo1, p.x[0]);
        hi1 = std::max(hi1, p.x[0]);
        lo2 = std::min(lo2, p.x[1]);
        hi2 = std::max(hi2, p.x[1]);
    }
    // clip inward so unbounded tentacles cross the box edges; otherwise the
    // complement is always connected around their sampled tips
    double m1 = std::min(pad, (hi1 - lo1) / 4);
    double m2 = std::min(pad, (hi2 - lo2) / 4);
    lo1 += m1;
    hi1 -= m1;
    lo2 += m2;
    hi2 -= m2;
    // the dilation radius scales with the resolution so that the dilated
    // footprint keeps a fixed width in log coordinates
    auto count = [&](int res, double dilate) {
        Raster r = rasterize(samples, lo1, lo2, hi1, hi2, res, dilate);
        int b = 0;
        for (bool x : r.bounded)
            if (x) ++b;
        return std::tuple<int, int, Raster>(r.components, b, std::move(r));
    };
    auto [t1, b1, r1] = count(resolution, 1.5);
    auto [t2, b2, r2] = count(2 * resolution, 3.0);
    out.total = t1;
    out.bounded = b1;
    out.stable = t1 == t2 && b1 == b2;
    out.raster = std::move(r1);
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string to_csv(const std::vector<LogPoint>& pts) {
    std::ostringstream os;
    for (auto& p : pts) {
        for (size_t i = 0; i < p.x.size(); ++i) os << fmt(p.x[i]) << ",";
        os << (p.pleat ? "pleat" : p.has_direction ? "contour" : "sample");
        os << ",";
        if (p.has_direction) {
            for (size_t i = 0; i < p.dir.coords.size(); ++i) {
                if (i) os << ":";
                os << to_string(p.dir.coords[i]);
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string to_svg(const Raster& r, const std::vector<LogPoint>& contour) {
    const double W = 800.0;
    double span1 = r.hi1 - r.lo1, span2 = r.hi2 - r.lo2;
    auto px = [&](double x) { return W * (x - r.lo1) / span1; };
    auto py = [&](double y) { return W * (r.hi2 - y) / span2; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
          "height=\"800\" viewBox=\"0 0 800 800\">\n";
    os << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    if (r.res > 0) {
        double cw = W / r.res;
        os << "<g fill=\"#c8c8c8\">\n";
        for (int b = 0; b < r.res; ++b)
            for (int a = 0; a < r.res; ++a)
                if (r.occupied[(size_t)b * (size_t)r.res + (size_t)a])
                    os << "<rect x=\"" << fmt(a * cw) << "\" y=\""
                       << fmt(W - (b + 1) * cw) << "\" width=\"" << fmt(cw)
                       << "\" height=\"" << fmt(cw) << "\"/>\n";
        os << "</g>\n";
    }
    os << "<g>\n";
    for (auto& p : contour) {
        if (p.x.size() != 2 || p.pleat) continue;
        double hue = 0.0;
        if (p.has_direction && p.dir.coords.size() == 2)
            hue = std::fmod(std::atan2(p.dir.coords[1].get_d(),
                                       p.dir.coords[0].get_d()) /
                                    M_PI * 360.0 +
                                360.0,
                            360.0);
        os << "<circle cx=\"" << fmt(px(p.x[0])) << "\" cy=\""
           << fmt(py(p.x[1])) << "\" r=\"1.5\" fill=\"hsl(" << fmt(hue)
           << ",90%,45%)\"/>\n";
    }
    for (auto& p : contour) {
        if (p.x.size() != 2 || !p.pleat) continue;
        os << "<circle cx=\"" << fmt(px(p.x[0])) << "\" cy=\""
           << fmt(py(p.x[1])) << "\" r=\"4\" fill=\"black\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace amo
