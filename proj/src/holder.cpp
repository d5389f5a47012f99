#include "hkit/holder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hkit/heisenberg.hpp"
#include "hkit/parallel.hpp"
#include "hkit/rng.hpp"

namespace hkit {

namespace {

double pair_dist(const SampledPath& f, int i, int j, TargetMetric metric) {
    if (metric == TargetMetric::koranyi) {
        const auto& a = f.values[i];
        const auto& b = f.values[j];
        HPoint p(std::vector<double>(a.begin(), a.end() - 1), a.back());
        HPoint q(std::vector<double>(b.begin(), b.end() - 1), b.back());
        return koranyi_dist(p, q).koranyi;
    }
    double s = 0.0;
    for (size_t c = 0; c < f.values[i].size(); ++c) {
        double d = f.values[i][c] - f.values[j][c];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace

double holder_seminorm(const SampledPath& f, double gamma, double scale_eps,
                       TargetMetric metric) {
    f.validate();
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("holder_seminorm: gamma must be in (0,1]");
    const int N = f.size();

    if (f.uniform_spacing(1e-9) && metric == TargetMetric::euclidean) {
        // uniform fast path: one weight per lag
        const double dt = f.mean_dt();
        int max_lag = N - 1;
        if (std::isfinite(scale_eps)) {
            max_lag = (int)std::ceil(scale_eps / dt) - 1;
            while (max_lag >= 1 && max_lag * dt >= scale_eps) --max_lag;
        }
        if (max_lag < 1)
            throw std::invalid_argument(
                "holder_seminorm: scale_eps admits no sample pair");
        const int d = f.dim();
        std::vector<double> lag_best((size_t)max_lag, 0.0);
        parallel_for(1, max_lag + 1, [&](std::int64_t lag) {
            double best = 0.0;
            for (int i = 0; i + lag < N; ++i) {
                double s = 0.0;
                for (int c = 0; c < d; ++c) {
                    double diff = f.values[i + lag][c] - f.values[i][c];
                    s += diff * diff;
                }
                best = std::max(best, s);
            }
            lag_best[lag - 1] = std::sqrt(best) / std::pow(lag * dt, gamma);
        });
        double sup = 0.0;
        for (double v : lag_best) sup = std::max(sup, v);
        return sup;
    }

    double sup = 0.0;
    bool any = false;
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            double dt = f.times[j] - f.times[i];
            if (dt <= 0.0 || dt >= scale_eps) continue;
            any = true;
            sup = std::max(sup, pair_dist(f, i, j, metric) / std::pow(dt, gamma));
        }
    }
    if (!any)
        throw std::invalid_argument(
            "holder_seminorm: scale_eps admits no sample pair");
    return sup;
}

double holder_seminorm(const GridMap& f, double gamma, double scale_eps) {
    f.validate();
    const long long total = f.nodes();
    long long stride = 1;
    while ((total / stride) > 12000) ++stride; // cap the pair scan
    std::vector<long long> nodes;
    for (long long i = 0; i < total; i += stride) nodes.push_back(i);

    double sup = 0.0;
    bool any = false;
    const int m = f.dims();
    for (size_t a = 0; a < nodes.size(); ++a) {
        std::vector<int> na = f.unindex(nodes[a]);
        std::vector<double> xa = f.coord(na);
        for (size_t b = a + 1; b < nodes.size(); ++b) {
            std::vector<int> nb = f.unindex(nodes[b]);
            std::vector<double> xb = f.coord(nb);
            double dx2 = 0.0;
            for (int k = 0; k < m; ++k)
                dx2 += (xa[k] - xb[k]) * (xa[k] - xb[k]);
            double dist = std::sqrt(dx2);
            if (dist <= 0.0 || dist >= scale_eps) continue;
            double dv2 = 0.0;
            for (int c = 0; c < f.comps; ++c) {
                double d = f.at(nodes[a], c) - f.at(nodes[b], c);
                dv2 += d * d;
            }
            any = true;
            sup = std::max(sup, std::sqrt(dv2) / std::pow(dist, gamma));
        }
    }
    if (!any)
        throw std::invalid_argument(
            "holder_seminorm: scale_eps admits no sample pair");
    return sup;
}

double estimate_holder_exponent(const SampledPath& f) {
    f.validate();
    const int N = f.size();
    std::vector<double> xs, ys;
    // cap lags at a quarter of the span: periodic data has zero oscillation
    // at the full period, which would poison the fit
    for (int lag = 1; lag * 4 < N; lag *= 2) {
        double osc = 0.0;
        for (int i = 0; i + lag < N; ++i) {
            double s = 0.0;
            for (int c = 0; c < f.dim(); ++c) {
                double d = f.values[i + lag][c] - f.values[i][c];
                s += d * d;
            }
            osc = std::max(osc, std::sqrt(s));
        }
        if (osc <= 0.0) continue;
        xs.push_back(std::log(f.times[lag] - f.times[0]));
        ys.push_back(std::log(osc));
    }
    if (xs.size() < 2) return 1.0; // constant path: any exponent works
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
    mx /= xs.size(); my /= ys.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = num / den;
    return std::clamp(slope, 0.01, 1.0);
}

double ConcaveModulus::operator()(double t) const {
    if (t <= knots.front()) return values.front();
    if (t >= knots.back()) return values.back();
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    size_t i = (size_t)(it - knots.begin()) - 1;
    double w = (t - knots[i]) / (knots[i + 1] - knots[i]);
    return (1.0 - w) * values[i] + w * values[i + 1];
}

ConcaveModulus concave_modulus(const std::vector<double>& t,
                               const std::vector<double>& omega1) {
    if (t.size() != omega1.size() || t.empty())
        throw std::invalid_argument("concave_modulus: bad sample arrays");
    for (size_t i = 1; i < t.size(); ++i) {
        if (!(t[i] > t[i - 1]))
            throw std::invalid_argument("concave_modulus: t must increase");
        if (omega1[i] < omega1[i - 1] - 1e-14)
            throw std::invalid_argument("concave_modulus: input must be nondecreasing");
    }
    // upper convex hull of {(0,0)} u graph (Andrew scan)
    std::vector<double> px, py;
    if (t.front() > 0.0) { px.push_back(0.0); py.push_back(0.0); }
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0.0)
            throw std::invalid_argument("concave_modulus: t must be >= 0");
        px.push_back(t[i]);
        py.push_back(omega1[i]);
    }
    std::vector<size_t> hull;
    for (size_t i = 0; i < px.size(); ++i) {
        while (hull.size() >= 2) {
            size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            double cross = (px[b] - px[a]) * (py[i] - py[a]) -
                           (py[b] - py[a]) * (px[i] - px[a]);
            if (cross >= 0.0) // b below the chord a-i: drop it
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    ConcaveModulus out;
    for (size_t i : hull) {
        out.knots.push_back(px[i]);
        out.values.push_back(py[i]);
    }
    return out;
}

double extension_cutoff(double s) {
    if (s <= 0.5) return 1.0;
    if (s >= 0.75) return 0.0;
    double u = (s - 0.5) / 0.25;
    double step = u * u * u * (u * (6.0 * u - 15.0) + 10.0); // quintic smoothstep
    return 1.0 - step;
}

GagliardoExtension gagliardo_extend(const SampledPath& f, double r_cut,
                                    const MollifierKernel& kernel,
                                    int s_levels) {
    f.validate();
    if (!(r_cut > 0.0))
        throw std::invalid_argument("gagliardo_extend: r_cut must be positive");
    if (f.dim() != 1)
        throw std::invalid_argument("gagliardo_extend expects a scalar path");
    const double h = f.mean_dt();

    GagliardoExtension out;
    double scale = std::max(1.0, f.max_abs());
    if (std::abs(f.values.front()[0]) > 1e-9 * scale ||
        std::abs(f.values.back()[0]) > 1e-9 * scale)
        out.support_warning = true;

    const int nx = f.size();
    const int ns = s_levels;
    out.grid = GridMap::make({f.a(), h}, {f.b(), r_cut}, {nx, ns}, 1);
    for (int j = 0; j < ns; ++j) {
        double s = h + (r_cut - h) * j / (double)(ns - 1);
        double psi = extension_cutoff(s / r_cut);
        if (psi == 0.0) continue;
        SampledPath layer = mollify(f, std::max(s, h), kernel);
        for (int i = 0; i < nx; ++i)
            out.grid.at((long long)i * ns + j, 0) = psi * layer.values[i][0];
    }
    return out;
}

SampledPath weierstrass_path(double gamma, int a_base, int terms, int n_samples,
                             int dim, std::uint64_t seed) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("weierstrass_path: gamma must be in (0,1)");
    if (a_base < 2 || terms < 1 || n_samples < 2 || dim < 1)
        throw std::invalid_argument("weierstrass_path: bad shape parameters");

    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> phases((size_t)dim,
                                            std::vector<double>((size_t)terms));
    for (int c = 0; c < dim; ++c)
        for (int k = 0; k < terms; ++k)
            phases[c][k] = rand_uniform(rng, 0.0, 6.283185307179586);

    SampledPath out;
    out.declared_gamma = gamma;
    out.times.resize((size_t)n_samples + 1);
    out.values.assign((size_t)n_samples + 1, std::vector<double>((size_t)dim));
    const double two_pi = 6.283185307179586476925286766559;
    parallel_for(0, n_samples + 1, [&](std::int64_t i) {
        double x = (double)i / n_samples;
        out.times[i] = x;
        for (int c = 0; c < dim; ++c) {
            double acc = 0.0;
            double freq = 1.0;
            double amp = 1.0;
            for (int k = 0; k < terms; ++k) {
                acc += amp * std::cos(two_pi * freq * x + phases[c][k]);
                freq *= a_base;
                amp *= std::pow((double)a_base, -gamma);
            }
            out.values[i][c] = acc;
        }
    });
    return out;
}

} // namespace hkit
