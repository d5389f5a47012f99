#pragma once

#include <vector>

#include "hkit/exterior.hpp"

namespace hkit {

/// Point (z, t) of H^n = R^{2n+1}. Planar coordinates are interleaved as
/// (x1, y1, ..., xn, yn); this layout is the single wire order used by the
/// CSV/JSON formats as well.
class HPoint {
public:
    HPoint() = default;
    HPoint(std::vector<double> z, double t);
    static HPoint origin(int n);

    int n() const { return static_cast<int>(z_.size()) / 2; }
    const std::vector<double>& z() const { return z_; }
    double t() const { return t_; }

    double x(int j) const { return z_[2 * (j - 1)]; }     // 1-based
    double y(int j) const { return z_[2 * (j - 1) + 1]; }

    /// Coordinates as a flat vector (x1, y1, ..., xn, yn, t).
    std::vector<double> flat() const;

private:
    std::vector<double> z_;
    double t_ = 0.0;
};

struct HMetricReport {
    double euclid = 0.0;  // |p - q| in R^{2n+1}
    double koranyi = 0.0; // (|dz|^4 + phi^2)^{1/4}
    double phi = 0.0;     // skew term of the group difference
};

HPoint group_mul(const HPoint& p, const HPoint& q);
HPoint group_inv(const HPoint& p);

/// Koranyi distance together with the Euclidean distance and the skew
/// term phi(p, q) = t - t' + 2 sum(x'_j y_j - x_j y'_j).
HMetricReport koranyi_dist(const HPoint& p, const HPoint& q);

/// delta_r(z, t) = (r z, r^2 t); r must be nonnegative.
HPoint dilate(const HPoint& p, double r);

/// alpha(p) = dt + 2 sum(x_j dy_j - y_j dx_j) as a 1-covector on R^{2n+1}.
Covector contact_form_at(const HPoint& p);

/// Empirical best constants for
///   c_lower |p-q|  <=  d_K(p,q)  <=  c_upper |p-q|^{1/2}
/// over all pairs of the given cloud (exhaustive scan).
struct MetricComparison {
    double c_lower = 0.0;
    double c_upper = 0.0;
};

MetricComparison metric_comparison_check(const std::vector<HPoint>& points);

} // namespace hkit
