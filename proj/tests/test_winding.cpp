#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hkit/errors.hpp"
#include "hkit/holder.hpp"
#include "hkit/planar.hpp"
#include "hkit/winding.hpp"

using namespace hkit;

namespace {

const double kPi = 3.14159265358979323846;

SampledPath circle_path(int n, double radius = 1.0, int loops = 1,
                        bool reverse = false) {
    SampledPath p;
    p.declared_gamma = 1.0;
    for (int i = 0; i <= n; ++i) {
        double s = (double)i / n;
        double ang = 2.0 * kPi * loops * s * (reverse ? -1.0 : 1.0);
        p.times.push_back(s);
        p.values.push_back({radius * std::cos(ang), radius * std::sin(ang)});
    }
    p.values.back() = p.values.front();
    return p;
}

SampledPath perturbed_circle(double gamma, int n, double amp,
                             std::uint64_t seed) {
    SampledPath radial = weierstrass_path(gamma, 2, 16, n, 1, seed);
    // periodic by construction, so the closed curve stays closed
    SampledPath p;
    p.declared_gamma = gamma;
    for (int i = 0; i <= n; ++i) {
        double s = (double)i / n;
        double r = 1.0 + amp * radial.values[i][0];
        p.times.push_back(s);
        p.values.push_back(
            {r * std::cos(2.0 * kPi * s), r * std::sin(2.0 * kPi * s)});
    }
    p.values.back() = p.values.front();
    return p;
}

double shoelace(const SampledPath& p) {
    double a = 0.0;
    for (size_t i = 0; i + 1 < p.values.size(); ++i)
        a += p.values[i][0] * p.values[i + 1][1] -
             p.values[i + 1][0] * p.values[i][1];
    return 0.5 * a;
}

} // namespace

TEST_CASE("winding number point queries") {
    ClosedCurve2D circle(circle_path(4096));
    CHECK(winding_number(circle, 0.0, 0.0) == 1);
    CHECK(winding_number(circle, 3.0, 0.0) == 0);
    CHECK(winding_number(circle, 0.7, 0.0) == 1);
    ClosedCurve2D doubled(circle_path(8192, 1.0, 2));
    CHECK(winding_number(doubled, 0.0, 0.0) == 2);
    ClosedCurve2D reversed(circle_path(4096, 1.0, 1, true));
    CHECK(winding_number(reversed, 0.0, 0.0) == -1);
    CHECK_THROWS_AS(winding_number(circle, 1.0, 0.0, 0.01), on_curve_error);
}

TEST_CASE("winding number is invariant under resampling and translation") {
    SampledPath fine = circle_path(8192);
    SampledPath coarse = circle_path(512);
    for (auto& row : coarse.values) {
        row[0] += 0.0;
    }
    ClosedCurve2D a(fine), b(coarse);
    CHECK(winding_number(a, 0.3, -0.2) == winding_number(b, 0.3, -0.2));
    SampledPath moved = fine;
    for (auto& row : moved.values) {
        row[0] += 5.0;
        row[1] -= 2.0;
    }
    ClosedCurve2D c(moved);
    CHECK(winding_number(c, 5.3, -2.2) == winding_number(a, 0.3, -0.2));
}

TEST_CASE("winding field of a circle") {
    ClosedCurve2D circle(circle_path(4096));
    WindingField field(circle, 128);
    int inside_checked = 0, outside_checked = 0;
    for (int iy = 0; iy < field.res_y(); iy += 5) {
        for (int ix = 0; ix < field.res_x(); ix += 5) {
            if (field.masked(ix, iy)) continue;
            double r = std::hypot(field.cell_x(ix), field.cell_y(iy));
            if (r < 0.95) {
                CHECK(field.value(ix, iy) == 1);
                ++inside_checked;
            } else if (r > 1.05) {
                CHECK(field.value(ix, iy) == 0);
                ++outside_checked;
            }
        }
    }
    CHECK(inside_checked > 50);
    CHECK(outside_checked > 50);
    CHECK(field.integral() == doctest::Approx(kPi).epsilon(0.01));
    // mask shrinks under refinement
    WindingField fine(circle, 512);
    CHECK(fine.mask_area() < field.mask_area());
}

TEST_CASE("figure eight gets +1/-1 lobes") {
    SampledPath p;
    p.declared_gamma = 1.0;
    const int n = 8192;
    for (int i = 0; i <= n; ++i) {
        double s = 2.0 * kPi * i / n;
        // lemniscate-like: left lobe ccw, right lobe cw
        p.times.push_back((double)i / n);
        p.values.push_back({std::sin(s), std::sin(s) * std::cos(s)});
    }
    p.values.back() = p.values.front();
    ClosedCurve2D eight(std::move(p));
    CHECK(winding_number(eight, 0.5, 0.0) == -1);
    CHECK(winding_number(eight, -0.5, 0.0) == 1);
    WindingField field(eight, 128);
    CHECK(field.integral() == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("close_curve completions") {
    // already-closed path through the origin keeps its area
    SampledPath tri;
    tri.declared_gamma = 1.0;
    std::vector<std::pair<double, double>> pts = {
        {0, 0}, {1, 0}, {0, 1}, {0, 0}};
    for (size_t i = 0; i < pts.size(); ++i) {
        tri.times.push_back((double)i);
        tri.values.push_back({pts[i].first, pts[i].second});
    }
    ClosedCurve2D closed = close_curve(tri);
    CHECK(oriented_area_green(closed) == doctest::Approx(0.5).epsilon(1e-12));

    // segment (1,0) -> (0,1): triangle 0,(1,0),(0,1), area 1/2
    SampledPath seg;
    seg.declared_gamma = 1.0;
    seg.times = {0.0, 1.0};
    seg.values = {{1.0, 0.0}, {0.0, 1.0}};
    ClosedCurve2D segc = close_curve(seg);
    CHECK(oriented_area_green(segc) == doctest::Approx(0.5).epsilon(1e-12));

    // constant path: zero-area spur
    SampledPath point;
    point.declared_gamma = 1.0;
    point.times = {0.0, 1.0};
    point.values = {{1.0, 0.0}, {1.0, 0.0}};
    CHECK(oriented_area_green(close_curve(point)) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("green area basics") {
    ClosedCurve2D circle(circle_path(1 << 16));
    double area = oriented_area_green(circle);
    CHECK(std::abs(area - kPi) < 1e-8);
    ClosedCurve2D rev(circle_path(1 << 16, 1.0, 1, true));
    CHECK(std::abs(oriented_area_green(rev) + kPi) < 1e-8);

    // polygon area equals the shoelace value exactly
    SampledPath poly;
    poly.declared_gamma = 1.0;
    std::vector<std::pair<double, double>> pts = {
        {0.2, -0.1}, {1.3, 0.4}, {0.8, 1.2}, {-0.4, 0.9}, {0.2, -0.1}};
    for (size_t i = 0; i < pts.size(); ++i) {
        poly.times.push_back((double)i);
        poly.values.push_back({pts[i].first, pts[i].second});
    }
    ClosedCurve2D pc(poly);
    CHECK(oriented_area_green(pc) ==
          doctest::Approx(shoelace(poly)).epsilon(1e-10));

    // alpha <= 1/2 is refused
    SampledPath rough = circle_path(256);
    rough.declared_gamma = 0.4;
    CHECK_THROWS_AS(oriented_area_green(ClosedCurve2D(rough)),
                    young_condition_error);
}

TEST_CASE("green value matches the winding field integral") {
    SampledPath wav = perturbed_circle(0.8, 1 << 14, 0.12, 2025);
    ClosedCurve2D curve(wav);
    double green = oriented_area_green(curve);
    WindingField field(curve, 1 << 10);
    double quad = field.integral();
    CHECK(std::abs(green - quad) / std::abs(green) < 1e-2);
    // and the rate improves with resolution
    WindingField coarse(curve, 1 << 7);
    double gap_c = std::abs(green - coarse.integral());
    double gap_f = std::abs(green - quad);
    CHECK(gap_f < gap_c);
}

TEST_CASE("lp norms of the circle winding") {
    ClosedCurve2D circle(circle_path(1 << 13));
    LpReport l1 = winding_lp_norm(circle, 1.0, 512);
    CHECK(l1.value == doctest::Approx(kPi).epsilon(5e-3));
    LpReport l2 = winding_lp_norm(circle, 2.0, 512);
    CHECK(l2.value == doctest::Approx(std::sqrt(kPi)).epsilon(5e-3));
    CHECK_FALSE(l2.p_in_range); // the valid range p < 2 gamma is open
    LpReport l15 = winding_lp_norm(circle, 1.5, 512);
    CHECK(l15.p_in_range);
    LpReport l3 = winding_lp_norm(circle, 2.5, 512);
    CHECK_FALSE(l3.p_in_range);
    CHECK(l3.value > 0.0);
}

TEST_CASE("winding lp ratio bounded across fractal seeds") {
    const double gamma = 0.8, p = 1.2;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        SampledPath wav = perturbed_circle(gamma, 1 << 12, 0.15, seed);
        ClosedCurve2D curve(wav);
        const double inf = std::numeric_limits<double>::infinity();
        double sem = holder_seminorm(curve.path(), gamma, inf) +
                     curve.path().max_abs();
        LpReport lp = winding_lp_norm(curve, p, 256);
        worst = std::max(worst, lp.value / std::pow(sem, 2.0 / p));
    }
    CHECK(worst < 2.0);
    CHECK(worst > 0.0);
}

TEST_CASE("polygon clipping area is exact") {
    // unit square polygon clipped to quadrant boxes
    std::vector<double> xs = {0, 1, 1, 0}, ys = {0, 0, 1, 1};
    CHECK(polygon_area_in_box(xs, ys, -1, -1, 2, 2) == doctest::Approx(1.0));
    CHECK(polygon_area_in_box(xs, ys, 0.25, 0.25, 0.75, 0.75) ==
          doctest::Approx(0.25));
    CHECK(polygon_area_in_box(xs, ys, 0.5, -1, 2, 2) == doctest::Approx(0.5));
    CHECK(polygon_area_in_box(xs, ys, 2, 2, 3, 3) == doctest::Approx(0.0));
    // orientation carries sign
    std::vector<double> xr = {0, 0, 1, 1}, yr = {0, 1, 1, 0};
    CHECK(polygon_area_in_box(xr, yr, -1, -1, 2, 2) == doctest::Approx(-1.0));
}

TEST_CASE("disk cell overlap quadrature") {
    // whole disk split into cells sums to pi exactly
    const int n = 64;
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double x0 = -1.5 + 3.0 * i / n, x1 = -1.5 + 3.0 * (i + 1) / n;
            double y0 = -1.5 + 3.0 * j / n, y1 = -1.5 + 3.0 * (j + 1) / n;
            total += disk_cell_overlap(x0, y0, x1, y1, 1.0);
        }
    CHECK(total == doctest::Approx(kPi).epsilon(1e-12));
    // cell fully inside / outside
    CHECK(disk_cell_overlap(-0.1, -0.1, 0.1, 0.1, 1.0) ==
          doctest::Approx(0.04).epsilon(1e-13));
    CHECK(disk_cell_overlap(2.0, 2.0, 3.0, 3.0, 1.0) == 0.0);
}
