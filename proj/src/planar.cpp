#include "hkit/planar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hkit/errors.hpp"
#include "hkit/parallel.hpp"

namespace hkit {

namespace {

/// S(x) = int_0^x sqrt(R^2 - t^2) dt, clamped to [-R, R].
double circle_antiderivative(double x, double r) {
    x = std::clamp(x, -r, r);
    return 0.5 * (x * std::sqrt(std::max(0.0, r * r - x * x)) +
                  r * r * std::asin(x / r));
}

/// int_{x0}^{x1} clamp(c, -s(x), s(x)) dx with s(x) = sqrt(max(0, R^2-x^2)).
double clamped_strip(double x0, double x1, double c, double r) {
    if (x1 <= x0) return 0.0;
    double xc = (std::abs(c) < r) ? std::sqrt(r * r - c * c) : 0.0;
    double mid_lo = std::clamp(x0, -xc, xc);
    double mid_hi = std::clamp(x1, -xc, xc);
    double inner = c * (mid_hi - mid_lo);
    double sgn = c >= 0.0 ? 1.0 : -1.0;
    // |x| > xc: the clamp saturates at sign(c) s(x)
    double left = circle_antiderivative(std::min(x1, -xc), r) -
                  circle_antiderivative(std::min(x0, -xc), r);
    double right = circle_antiderivative(std::max(x1, xc), r) -
                   circle_antiderivative(std::max(x0, xc), r);
    return inner + sgn * (left + right);
}

} // namespace

double disk_cell_overlap(double x0, double y0, double x1, double y1,
                         double radius) {
    // area = int_{x0}^{x1} ( clamp(y1,-s,s) - clamp(y0,-s,s) ) dx
    return clamped_strip(x0, x1, y1, radius) -
           clamped_strip(x0, x1, y0, radius);
}

namespace {

double grid_node(const GridMap& g, int ix, int iy) {
    return g.at((long long)ix * g.shape[1] + iy, 0);
}

/// Stieltjes loop integral of g1 dg2 around an axis-aligned node rectangle,
/// counterclockwise, trapezoid form on the grid nodes.
double boundary_loop(const GridMap& g1, const GridMap& g2, int ix0, int iy0,
                     int ix1, int iy1) {
    double sum = 0.0;
    auto edge = [&](int ax, int ay, int bx, int by) {
        double f0 = grid_node(g1, ax, ay), f1 = grid_node(g1, bx, by);
        double h0 = grid_node(g2, ax, ay), h1 = grid_node(g2, bx, by);
        sum += 0.5 * (f0 + f1) * (h1 - h0);
    };
    for (int i = ix0; i < ix1; ++i) edge(i, iy0, i + 1, iy0);
    for (int j = iy0; j < iy1; ++j) edge(ix1, j, ix1, j + 1);
    for (int i = ix1; i > ix0; --i) edge(i, iy1, i - 1, iy1);
    for (int j = iy1; j > iy0; --j) edge(ix0, j, ix0, j - 1);
    return sum;
}

} // namespace

ZustResult zust_jacobian_square(const GridMap& f, const GridMap& g1,
                                const GridMap& g2, int k_levels, double alpha,
                                double beta) {
    f.validate();
    g1.validate();
    g2.validate();
    if (f.dims() != 2 || g1.dims() != 2 || g2.dims() != 2 || f.comps != 1 ||
        g1.comps != 1 || g2.comps != 1)
        throw std::invalid_argument("zust_jacobian_square expects 2-D scalar grids");
    if (f.shape != g1.shape || f.shape != g2.shape)
        throw std::invalid_argument("zust_jacobian_square expects a common grid");
    if (!(alpha + 2.0 * beta > 2.0))
        throw young_condition_error(
            "Young condition violated: alpha + 2 beta <= 2");
    if (k_levels < 1) throw std::invalid_argument("k_levels must be >= 1");
    const int n0 = f.shape[0] - 1;
    if (n0 != f.shape[1] - 1)
        throw std::invalid_argument("zust_jacobian_square expects a square grid");
    if (n0 % (1 << k_levels) != 0)
        throw std::invalid_argument(
            "grid does not align with the requested subdivision depth");

    ZustResult out;
    for (int level = 1; level <= k_levels; ++level) {
        const int k = 1 << level;
        const int stride = n0 / k;
        double total = 0.0;
        for (int bi = 0; bi < k; ++bi) {
            for (int bj = 0; bj < k; ++bj) {
                int ix0 = bi * stride, iy0 = bj * stride;
                int ix1 = ix0 + stride, iy1 = iy0 + stride;
                double cx = f.lo[0] + 0.5 * (ix0 + ix1) * f.spacing(0);
                double cy = f.lo[1] + 0.5 * (iy0 + iy1) * f.spacing(1);
                double fc = f.eval({cx, cy})[0];
                total += fc * boundary_loop(g1, g2, ix0, iy0, ix1, iy1);
            }
        }
        out.levels.push_back(k);
        out.level_values.push_back(total);
    }
    out.value = out.level_values.back();
    out.error_estimate =
        out.level_values.size() >= 2
            ? std::abs(out.level_values.back() -
                       out.level_values[out.level_values.size() - 2])
            : 0.0;
    return out;
}

ChangeOfVariablesReport change_of_variables_check(
    const GridMap& f, const std::function<double(double, double)>& v,
    std::vector<double> eps_sequence, double gamma,
    const MollifierKernel& kernel, int winding_resolution,
    int boundary_samples) {
    f.validate();
    if (f.dims() != 2 || f.comps != 2)
        throw std::invalid_argument(
            "change_of_variables_check expects a planar map grid");
    if (!(gamma > 0.5))
        throw young_condition_error(
            "change of variables needs gamma > 1/2");
    if (eps_sequence.size() < 2)
        throw std::invalid_argument("need >= 2 eps levels");
    for (size_t i = 1; i < eps_sequence.size(); ++i)
        if (!(eps_sequence[i] < eps_sequence[i - 1]))
            throw std::invalid_argument("eps sequence must strictly decrease");
    if (f.lo[0] > -1.0 || f.hi[0] < 1.0 || f.lo[1] > -1.0 || f.hi[1] < 1.0)
        throw std::invalid_argument("grid must contain the unit disk");

    ChangeOfVariablesReport rep;
    const double h = f.spacing(0);

    for (double eps : eps_sequence) {
        GridMap fe = mollify(f, eps, kernel);
        GridMap grad = mollify_derivative(f, eps, kernel); // 4 comps: xx xy yx yy
        // cell quadrature over the disk with exact circle clipping; the
        // Jacobian at a cell center comes from the mollified gradient
        const int ncx = f.shape[0] - 1, ncy = f.shape[1] - 1;
        std::vector<double> rows((size_t)ncx, 0.0);
        parallel_for(0, ncx, [&](std::int64_t ci) {
            double acc = 0.0;
            for (int cj = 0; cj < ncy; ++cj) {
                double x0 = f.lo[0] + ci * h, x1 = x0 + h;
                double y0 = f.lo[1] + cj * f.spacing(1),
                       y1 = y0 + f.spacing(1);
                double area = disk_cell_overlap(x0, y0, x1, y1, 1.0);
                if (area == 0.0) continue;
                double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
                std::vector<double> g = grad.eval({cx, cy});
                double jac = g[0] * g[3] - g[1] * g[2];
                std::vector<double> fv = fe.eval({cx, cy});
                acc += v(fv[0], fv[1]) * jac * area;
            }
            rows[(size_t)ci] = acc;
        });
        double val = 0.0;
        for (double r : rows) val += r;
        rep.eps_levels.push_back(eps);
        rep.lhs_levels.push_back(val);
    }

    // Richardson along the eps ladder at the mollification rate, then one
    // more order; for smooth data the levels are already flat
    double rate = std::max(0.3, 2.0 * gamma - 1.0);
    std::vector<double> r1;
    for (size_t i = 0; i + 1 < rep.lhs_levels.size(); ++i) {
        double rho = rep.eps_levels[i] / rep.eps_levels[i + 1];
        r1.push_back(rep.lhs_levels[i + 1] +
                     (rep.lhs_levels[i + 1] - rep.lhs_levels[i]) /
                         (std::pow(rho, rate) - 1.0));
    }
    std::vector<double> r2;
    for (size_t i = 0; i + 1 < r1.size(); ++i) {
        double rho = rep.eps_levels[i] / rep.eps_levels[i + 1];
        r2.push_back(r1[i + 1] +
                     (r1[i + 1] - r1[i]) / (std::pow(rho, rate + 1.0) - 1.0));
    }
    rep.lhs = !r2.empty() ? r2.back() : (!r1.empty() ? r1.back() : rep.lhs_levels.back());

    // boundary restriction: f interpolated along the unit circle
    SampledPath boundary;
    boundary.declared_gamma = gamma;
    boundary.times.resize((size_t)boundary_samples + 1);
    boundary.values.resize((size_t)boundary_samples + 1);
    for (int i = 0; i <= boundary_samples; ++i) {
        double s = (double)i / boundary_samples;
        double ang = 6.283185307179586476925286766559 * s;
        std::vector<double> val =
            f.eval({std::cos(ang), std::sin(ang)});
        boundary.times[(size_t)i] = s;
        boundary.values[(size_t)i] = {val[0], val[1]};
    }
    boundary.values.back() = boundary.values.front(); // exact closure
    ClosedCurve2D curve(std::move(boundary));
    WindingField field(curve, winding_resolution);
    rep.rhs = field.integral_against(v, curve);
    rep.mask_bound = field.mask_area() * std::max(1, (int)field.max_abs_winding());
    rep.gap = std::abs(rep.lhs - rep.rhs);
    return rep;
}

} // namespace hkit
