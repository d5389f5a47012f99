#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hkit/sampling.hpp"

namespace hkit {

/// Closed polyline in R^2; endpoints must match within 1e-9 of the
/// diameter. Winding quantities treat it as the sampled curve itself.
class ClosedCurve2D {
public:
    explicit ClosedCurve2D(SampledPath path);

    const SampledPath& path() const { return path_; }
    int segments() const { return path_.size() - 1; }
    double px(int i) const { return path_.values[i][0]; }
    double py(int i) const { return path_.values[i][1]; }
    double diameter() const { return diameter_; }

    void bounding_box(double& x0, double& y0, double& x1, double& y1) const;
    double distance_to(double x, double y) const;

private:
    SampledPath path_;
    double diameter_ = 0.0;
};

/// Total signed angle / 2 pi, rounded to the nearest integer. Throws
/// on_curve_error when z is closer to the polyline than `guard`
/// (default: 1e-12 of the diameter).
int winding_number(const ClosedCurve2D& curve, double zx, double zy,
                   double guard = -1.0);

/// Integer winding values on a cell grid covering the curve's bounding box
/// inflated by one cell. Values are computed at every cell center by a
/// crossing sweep (exact for the polyline); cells whose center lies within
/// one cell diagonal of the curve are flagged in the mask, and integral
/// users add the mask bound to their reported gap.
class WindingField {
public:
    WindingField(const ClosedCurve2D& curve, int resolution);

    int res_x() const { return nx_; }
    int res_y() const { return ny_; }
    double cell_area() const { return hx_ * hy_; }
    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double cell_x(int ix) const { return x0_ + (ix + 0.5) * hx_; }
    double cell_y(int iy) const { return y0_ + (iy + 0.5) * hy_; }

    std::int32_t value(int ix, int iy) const { return w_[idx(ix, iy)]; }
    bool masked(int ix, int iy) const { return mask_[idx(ix, iy)] != 0; }

    double mask_area() const;
    std::int32_t max_abs_winding() const;

    /// sum w * cell_area over all cells / over unmasked cells only.
    double integral() const;
    double integral_unmasked() const;
    /// (sum |w|^p cell_area)^{1/p} over all cells.
    double lp_norm(double p) const;

    /// Quadrature of v against the winding measure. Unmasked cells use the
    /// midpoint value; masked cells use the exact cell overlap of the
    /// polyline (clip + shoelace), so the result is exact for v = 1 when
    /// the curve is simple within each masked cell.
    double integral_against(const std::function<double(double, double)>& v,
                            const ClosedCurve2D& curve) const;

private:
    size_t idx(int ix, int iy) const { return (size_t)iy * nx_ + ix; }
    int nx_ = 0, ny_ = 0;
    double x0_ = 0, y0_ = 0, hx_ = 0, hy_ = 0;
    std::vector<std::int32_t> w_;
    std::vector<std::uint8_t> mask_;
};

/// Closing completion: straight segment from the origin to path(a), the
/// path itself, then straight back to the origin.
ClosedCurve2D close_curve(const SampledPath& path);

/// Half the Stieltjes loop integral of x dy - y dx; requires a declared
/// Hoelder exponent above 1/2 on the components.
double oriented_area_green(const ClosedCurve2D& curve);

struct LpReport {
    double value = 0.0;
    bool p_in_range = true; // 1 <= p < 2 gamma
};

LpReport winding_lp_norm(const ClosedCurve2D& curve, double p,
                         int resolution = 1024);

/// Signed area of `poly` clipped to an axis box (Sutherland-Hodgman).
/// Exact integral of the winding number over the box for curve pieces that
/// are simple near the box.
double polygon_area_in_box(const std::vector<double>& xs,
                           const std::vector<double>& ys, double bx0,
                           double by0, double bx1, double by1);

} // namespace hkit
