#include "hkit/heisenberg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hkit {

HPoint::HPoint(std::vector<double> z, double t) : z_(std::move(z)), t_(t) {
    if (z_.empty() || z_.size() % 2 != 0)
        throw std::invalid_argument("HPoint needs 2n planar coordinates, n >= 1");
    for (double v : z_)
        if (!std::isfinite(v))
            throw std::invalid_argument("HPoint coordinates must be finite");
    if (!std::isfinite(t_))
        throw std::invalid_argument("HPoint height must be finite");
}

HPoint HPoint::origin(int n) {
    return HPoint(std::vector<double>(2 * n, 0.0), 0.0);
}

std::vector<double> HPoint::flat() const {
    std::vector<double> out = z_;
    out.push_back(t_);
    return out;
}

HPoint group_mul(const HPoint& p, const HPoint& q) {
    if (p.n() != q.n())
        throw std::invalid_argument("group_mul: dimension mismatch");
    const int n = p.n();
    std::vector<double> z(2 * n);
    double skew = 0.0;
    for (int j = 1; j <= n; ++j) {
        z[2 * (j - 1)] = p.x(j) + q.x(j);
        z[2 * (j - 1) + 1] = p.y(j) + q.y(j);
        skew += p.y(j) * q.x(j) - p.x(j) * q.y(j);
    }
    return HPoint(std::move(z), p.t() + q.t() + 2.0 * skew);
}

HPoint group_inv(const HPoint& p) {
    std::vector<double> z(p.z().size());
    for (size_t i = 0; i < z.size(); ++i) z[i] = -p.z()[i];
    return HPoint(std::move(z), -p.t());
}

HMetricReport koranyi_dist(const HPoint& p, const HPoint& q) {
    if (p.n() != q.n())
        throw std::invalid_argument("koranyi_dist: dimension mismatch");
    const int n = p.n();
    HMetricReport rep;
    double dz2 = 0.0;
    double phi = p.t() - q.t();
    for (int j = 1; j <= n; ++j) {
        double dx = p.x(j) - q.x(j);
        double dy = p.y(j) - q.y(j);
        dz2 += dx * dx + dy * dy;
        phi += 2.0 * (q.x(j) * p.y(j) - p.x(j) * q.y(j));
    }
    rep.phi = phi;
    rep.euclid = std::sqrt(dz2 + (p.t() - q.t()) * (p.t() - q.t()));
    rep.koranyi = std::pow(dz2 * dz2 + phi * phi, 0.25);
    return rep;
}

HPoint dilate(const HPoint& p, double r) {
    if (r < 0.0) throw std::invalid_argument("dilate: r must be nonnegative");
    std::vector<double> z(p.z().size());
    for (size_t i = 0; i < z.size(); ++i) z[i] = r * p.z()[i];
    return HPoint(std::move(z), r * r * p.t());
}

Covector contact_form_at(const HPoint& p) {
    const int n = p.n();
    Covector alpha(2 * n + 1, 1);
    alpha.set_coeff({2 * n + 1}, 1.0);
    for (int j = 1; j <= n; ++j) {
        alpha.set_coeff({2 * j - 1}, -2.0 * p.y(j));
        alpha.set_coeff({2 * j}, 2.0 * p.x(j));
    }
    return alpha;
}

MetricComparison metric_comparison_check(const std::vector<HPoint>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("metric_comparison_check needs >= 2 points");
    MetricComparison mc;
    mc.c_lower = std::numeric_limits<double>::infinity();
    mc.c_upper = 0.0;
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            HMetricReport rep = koranyi_dist(points[i], points[j]);
            if (rep.euclid == 0.0) continue;
            mc.c_lower = std::min(mc.c_lower, rep.koranyi / rep.euclid);
            mc.c_upper = std::max(mc.c_upper, rep.koranyi / std::sqrt(rep.euclid));
        }
    }
    return mc;
}

} // namespace hkit
