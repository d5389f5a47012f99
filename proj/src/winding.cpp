#include "hkit/winding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hkit/errors.hpp"
#include "hkit/parallel.hpp"
#include "hkit/young.hpp"

namespace hkit {

namespace {

double seg_distance(double px, double py, double qx, double qy, double zx,
                    double zy) {
    double dx = qx - px, dy = qy - py;
    double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((zx - px) * dx + (zy - py) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    double ex = px + t * dx - zx, ey = py + t * dy - zy;
    return std::sqrt(ex * ex + ey * ey);
}

} // namespace

ClosedCurve2D::ClosedCurve2D(SampledPath path) : path_(std::move(path)) {
    path_.validate();
    if (path_.dim() != 2)
        throw std::invalid_argument("ClosedCurve2D needs a planar path");
    double x0, y0, x1, y1;
    x0 = x1 = path_.values[0][0];
    y0 = y1 = path_.values[0][1];
    for (const auto& row : path_.values) {
        x0 = std::min(x0, row[0]); x1 = std::max(x1, row[0]);
        y0 = std::min(y0, row[1]); y1 = std::max(y1, row[1]);
    }
    diameter_ = std::hypot(x1 - x0, y1 - y0);
    double gap = std::hypot(path_.values.front()[0] - path_.values.back()[0],
                            path_.values.front()[1] - path_.values.back()[1]);
    if (gap > 1e-9 * std::max(diameter_, 1e-12))
        throw std::invalid_argument("ClosedCurve2D: endpoints do not match");
}

void ClosedCurve2D::bounding_box(double& x0, double& y0, double& x1,
                                 double& y1) const {
    x0 = x1 = px(0);
    y0 = y1 = py(0);
    for (int i = 0; i < path_.size(); ++i) {
        x0 = std::min(x0, px(i)); x1 = std::max(x1, px(i));
        y0 = std::min(y0, py(i)); y1 = std::max(y1, py(i));
    }
}

double ClosedCurve2D::distance_to(double x, double y) const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < segments(); ++i)
        best = std::min(best, seg_distance(px(i), py(i), px(i + 1), py(i + 1),
                                           x, y));
    return best;
}

int winding_number(const ClosedCurve2D& curve, double zx, double zy,
                   double guard) {
    if (guard < 0.0) guard = 1e-12 * std::max(curve.diameter(), 1.0);
    if (curve.distance_to(zx, zy) <= guard)
        throw on_curve_error("winding_number: point inside the guard band");
    double angle = 0.0;
    for (int i = 0; i < curve.segments(); ++i) {
        double ax = curve.px(i) - zx, ay = curve.py(i) - zy;
        double bx = curve.px(i + 1) - zx, by = curve.py(i + 1) - zy;
        angle += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    }
    return (int)std::lround(angle / 6.283185307179586476925286766559);
}

WindingField::WindingField(const ClosedCurve2D& curve, int resolution) {
    if (resolution < 16)
        throw std::invalid_argument("winding_field: resolution must be >= 16");
    nx_ = ny_ = resolution;
    double bx0, by0, bx1, by1;
    curve.bounding_box(bx0, by0, bx1, by1);
    double ext_x = std::max(bx1 - bx0, 1e-9);
    double ext_y = std::max(by1 - by0, 1e-9);
    // the field covers the bounding box inflated by exactly one cell
    hx_ = ext_x / (resolution - 2);
    hy_ = ext_y / (resolution - 2);
    x0_ = bx0 - hx_;
    y0_ = by0 - hy_;

    w_.assign((size_t)nx_ * ny_, 0);
    mask_.assign((size_t)nx_ * ny_, 0);

    const int nseg = curve.segments();
    // crossing sweep, one row of cell centers at a time
    parallel_for(0, ny_, [&](std::int64_t iy) {
        double y = cell_y((int)iy);
        std::vector<std::pair<double, int>> crossings;
        for (int s = 0; s < nseg; ++s) {
            double py0 = curve.py(s), py1 = curve.py(s + 1);
            bool below0 = py0 <= y, below1 = py1 <= y;
            if (below0 == below1) continue;
            double t = (y - py0) / (py1 - py0);
            double xc = curve.px(s) + t * (curve.px(s + 1) - curve.px(s));
            crossings.emplace_back(xc, py1 > py0 ? 1 : -1);
        }
        std::sort(crossings.begin(), crossings.end());
        // accumulate from the right: w(z) counts signed crossings of the
        // rightward ray
        int acc = 0;
        int ci = (int)crossings.size() - 1;
        for (int ix = nx_ - 1; ix >= 0; --ix) {
            double x = cell_x(ix);
            while (ci >= 0 && crossings[ci].first > x) {
                acc += crossings[ci].second;
                --ci;
            }
            w_[idx(ix, (int)iy)] = acc;
        }
    });

    // mask: cell centers within one cell diagonal of the polyline
    const double diag = std::hypot(hx_, hy_);
    for (int s = 0; s < nseg; ++s) {
        double sx0 = std::min(curve.px(s), curve.px(s + 1)) - diag;
        double sx1 = std::max(curve.px(s), curve.px(s + 1)) + diag;
        double sy0 = std::min(curve.py(s), curve.py(s + 1)) - diag;
        double sy1 = std::max(curve.py(s), curve.py(s + 1)) + diag;
        int ix0 = std::max(0, (int)std::floor((sx0 - x0_) / hx_ - 0.5));
        int ix1 = std::min(nx_ - 1, (int)std::ceil((sx1 - x0_) / hx_));
        int iy0 = std::max(0, (int)std::floor((sy0 - y0_) / hy_ - 0.5));
        int iy1 = std::min(ny_ - 1, (int)std::ceil((sy1 - y0_) / hy_));
        for (int iy = iy0; iy <= iy1; ++iy)
            for (int ix = ix0; ix <= ix1; ++ix) {
                if (mask_[idx(ix, iy)]) continue;
                if (seg_distance(curve.px(s), curve.py(s), curve.px(s + 1),
                                 curve.py(s + 1), cell_x(ix),
                                 cell_y(iy)) < diag)
                    mask_[idx(ix, iy)] = 1;
            }
    }
}

double WindingField::mask_area() const {
    long long count = 0;
    for (auto m : mask_) count += m;
    return (double)count * cell_area();
}

std::int32_t WindingField::max_abs_winding() const {
    std::int32_t m = 0;
    for (auto v : w_) m = std::max(m, std::abs(v));
    return m;
}

double WindingField::integral() const {
    long long s = 0;
    for (auto v : w_) s += v;
    return (double)s * cell_area();
}

double WindingField::integral_unmasked() const {
    long long s = 0;
    for (size_t i = 0; i < w_.size(); ++i)
        if (!mask_[i]) s += w_[i];
    return (double)s * cell_area();
}

double WindingField::lp_norm(double p) const {
    double s = 0.0;
    for (auto v : w_)
        if (v != 0) s += std::pow((double)std::abs(v), p);
    return std::pow(s * cell_area(), 1.0 / p);
}

double WindingField::integral_against(
    const std::function<double(double, double)>& v,
    const ClosedCurve2D& curve) const {
    std::vector<double> xs((size_t)curve.path().size());
    std::vector<double> ys((size_t)curve.path().size());
    for (int i = 0; i < curve.path().size(); ++i) {
        xs[(size_t)i] = curve.px(i);
        ys[(size_t)i] = curve.py(i);
    }
    std::vector<double> partial((size_t)ny_, 0.0);
    parallel_for(0, ny_, [&](std::int64_t iy) {
        double acc = 0.0;
        for (int ix = 0; ix < nx_; ++ix) {
            size_t id = idx(ix, (int)iy);
            double cx = cell_x(ix), cy = cell_y((int)iy);
            if (!mask_[id]) {
                if (w_[id] != 0) acc += v(cx, cy) * w_[id] * cell_area();
            } else {
                double overlap = polygon_area_in_box(
                    xs, ys, x0_ + ix * hx_, y0_ + iy * hy_,
                    x0_ + (ix + 1) * hx_, y0_ + (iy + 1) * hy_);
                acc += v(cx, cy) * overlap;
            }
        }
        partial[(size_t)iy] = acc;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

ClosedCurve2D close_curve(const SampledPath& path) {
    path.validate();
    if (path.dim() != 2)
        throw std::invalid_argument("close_curve needs a planar path");
    const double a = path.a(), b = path.b();
    int per_unit = std::max<int>(
        2, (int)std::lround(1.0 / std::max(path.mean_dt(), 1e-12)));

    SampledPath out;
    out.declared_gamma = path.declared_gamma;
    auto push = [&out](double t, double x, double y) {
        out.times.push_back(t);
        out.values.push_back({x, y});
    };
    // 0 -> path(a) on [a-1, a]
    for (int i = 0; i < per_unit; ++i) {
        double s = (double)i / per_unit;
        push(a - 1.0 + s, s * path.values.front()[0],
             s * path.values.front()[1]);
    }
    for (int i = 0; i < path.size(); ++i)
        push(path.times[i], path.values[i][0], path.values[i][1]);
    // path(b) -> 0 on [b, b+1]
    for (int i = 1; i <= per_unit; ++i) {
        double s = (double)i / per_unit;
        push(b + s, (1.0 - s) * path.values.back()[0],
             (1.0 - s) * path.values.back()[1]);
    }
    return ClosedCurve2D(std::move(out));
}

double oriented_area_green(const ClosedCurve2D& curve) {
    bool estimated = false;
    double alpha = effective_exponent(curve.path(), estimated);
    if (!(alpha > 0.5))
        throw young_condition_error(
            "oriented_area_green needs alpha > 1/2 on the components");
    SampledPath x = curve.path().component(0);
    SampledPath y = curve.path().component(1);
    return 0.5 * (stieltjes_trapezoid(x, y) - stieltjes_trapezoid(y, x));
}

LpReport winding_lp_norm(const ClosedCurve2D& curve, double p,
                         int resolution) {
    if (p < 1.0)
        throw std::invalid_argument("winding_lp_norm: p must be >= 1");
    LpReport rep;
    bool estimated = false;
    double gamma = effective_exponent(curve.path(), estimated);
    rep.p_in_range = p < 2.0 * gamma;
    WindingField field(curve, resolution);
    rep.value = field.lp_norm(p);
    return rep;
}

double polygon_area_in_box(const std::vector<double>& xs,
                           const std::vector<double>& ys, double bx0,
                           double by0, double bx1, double by1) {
    // Sutherland-Hodgman against the four half-planes; the subject need not
    // be convex, the shoelace of the clipped chain still integrates the
    // winding number over the box as long as the curve is simple nearby.
    thread_local std::vector<double> bufx[2], bufy[2];
    int cur = 0;
    bufx[cur].assign(xs.begin(), xs.end());
    bufy[cur].assign(ys.begin(), ys.end());
    // drop the duplicate closing vertex; stages re-close implicitly
    if (bufx[cur].size() >= 2 && bufx[cur].front() == bufx[cur].back() &&
        bufy[cur].front() == bufy[cur].back()) {
        bufx[cur].pop_back();
        bufy[cur].pop_back();
    }

    struct Plane { int axis; double c; int side; };
    const Plane planes[4] = {
        {0, bx0, +1}, {0, bx1, -1}, {1, by0, +1}, {1, by1, -1}};
    for (const Plane& pl : planes) {
        const std::vector<double>& ix = bufx[cur];
        const std::vector<double>& iy = bufy[cur];
        std::vector<double>& ox = bufx[1 - cur];
        std::vector<double>& oy = bufy[1 - cur];
        ox.clear();
        oy.clear();
        const size_t n = ix.size();
        if (n == 0) return 0.0;
        auto inside = [&](double x, double y) {
            double v = pl.axis == 0 ? x : y;
            return pl.side > 0 ? v >= pl.c : v <= pl.c;
        };
        for (size_t i = 0; i < n; ++i) {
            size_t j = (i + 1) % n;
            double xi = ix[i], yi = iy[i], xj = ix[j], yj = iy[j];
            bool in_i = inside(xi, yi), in_j = inside(xj, yj);
            if (in_i) {
                ox.push_back(xi);
                oy.push_back(yi);
            }
            if (in_i != in_j) {
                double t = pl.axis == 0 ? (pl.c - xi) / (xj - xi)
                                        : (pl.c - yi) / (yj - yi);
                ox.push_back(xi + t * (xj - xi));
                oy.push_back(yi + t * (yj - yi));
            }
        }
        cur = 1 - cur;
    }
    const std::vector<double>& fx = bufx[cur];
    const std::vector<double>& fy = bufy[cur];
    double area = 0.0;
    for (size_t i = 0; i < fx.size(); ++i) {
        size_t j = (i + 1) % fx.size();
        area += fx[i] * fy[j] - fx[j] * fy[i];
    }
    return 0.5 * area;
}

} // namespace hkit
