#include "hkit/mollify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hkit/parallel.hpp"

namespace hkit {

namespace {

double bump(double r) {
    double r2 = r * r;
    if (r2 >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - r2));
}

double bump_derivative(double r) {
    double r2 = r * r;
    if (r2 >= 1.0) return 0.0;
    double d = 1.0 - r2;
    return bump(r) * (-2.0 * r / (d * d));
}

int stencil_radius(double eps, double h) {
    if (eps < h)
        throw std::invalid_argument("mollify: eps must be at least one grid cell");
    // offsets with |i*h| < eps
    int K = (int)std::floor(eps / h);
    if (std::abs(K * h - eps) < 1e-12 * eps) --K; // open support
    return std::max(K, 1);
}

} // namespace

MollifierKernel::MollifierKernel(int resolution) {
    if (resolution < 3 || resolution % 2 == 0)
        throw std::invalid_argument("kernel resolution must be odd and >= 3");
    profile_.resize(resolution);
    for (int i = 0; i < resolution; ++i) {
        double r = -1.0 + 2.0 * i / (resolution - 1);
        profile_[i] = bump(r);
    }
}

double MollifierKernel::profile(double r) const {
    // exact bump; the tabulated samples exist for serialization and plots,
    // interpolating them would inject noise into the stencil weights
    return bump(r);
}

double MollifierKernel::profile_derivative(double r) const {
    return bump_derivative(r);
}

std::vector<double> MollifierKernel::stencil1(double eps, double h) const {
    int K = stencil_radius(eps, h);
    std::vector<double> w(2 * K + 1);
    double mass = 0.0;
    for (int i = -K; i <= K; ++i) {
        w[i + K] = profile((i * h) / eps);
        mass += w[i + K];
    }
    for (double& v : w) v /= mass;
    return w;
}

std::vector<double> MollifierKernel::stencil1_derivative(double eps,
                                                         double h) const {
    int K = stencil_radius(eps, h);
    std::vector<double> w(2 * K + 1);
    for (int i = -K; i <= K; ++i)
        w[i + K] = profile_derivative((i * h) / eps);
    // pin the first moment so linear data gets exactly unit slope; odd
    // symmetry already kills constants
    double moment = 0.0;
    for (int i = -K; i <= K; ++i) moment += w[i + K] * (-i * h);
    if (!(moment > 0.0))
        throw std::invalid_argument(
            "mollify_derivative: eps too close to the grid cell, stencil degenerate");
    for (double& v : w) v /= moment;
    return w;
}

std::vector<double> MollifierKernel::stencil(int m, double eps, double h,
                                             int& K) const {
    K = stencil_radius(eps, h);
    const int side = 2 * K + 1;
    long long count = 1;
    for (int a = 0; a < m; ++a) count *= side;
    std::vector<double> w((size_t)count);
    double mass = 0.0;
    std::vector<int> off(m);
    for (long long c = 0; c < count; ++c) {
        long long rem = c;
        double r2 = 0.0;
        for (int a = m - 1; a >= 0; --a) {
            off[a] = (int)(rem % side) - K;
            rem /= side;
            r2 += (off[a] * h) * (off[a] * h);
        }
        w[(size_t)c] = profile(std::sqrt(r2) / eps);
        mass += w[(size_t)c];
    }
    if (mass <= 0.0) throw std::invalid_argument("mollify: empty stencil");
    for (double& v : w) v /= mass;
    return w;
}

SampledPath mollify(const SampledPath& f, double eps,
                    const MollifierKernel& kernel) {
    f.validate();
    if (!f.uniform_spacing(1e-6))
        throw std::invalid_argument("mollify expects uniform path spacing");
    const double h = f.mean_dt();
    const std::vector<double> w = kernel.stencil1(eps, h);
    const int K = ((int)w.size() - 1) / 2;
    const int N = f.size();
    const int d = f.dim();

    SampledPath out;
    out.times = f.times;
    out.declared_gamma = f.declared_gamma;
    out.values.assign((size_t)N, std::vector<double>(d, 0.0));
    parallel_for(0, N, [&](std::int64_t j) {
        for (int c = 0; c < d; ++c) {
            double acc = 0.0;
            for (int i = -K; i <= K; ++i) {
                int src = std::clamp((int)j - i, 0, N - 1); // constant extension
                acc += w[i + K] * f.values[src][c];
            }
            out.values[j][c] = acc;
        }
    });
    return out;
}

SampledPath mollify_derivative(const SampledPath& f, double eps,
                               const MollifierKernel& kernel) {
    f.validate();
    if (!f.uniform_spacing(1e-6))
        throw std::invalid_argument("mollify expects uniform path spacing");
    const double h = f.mean_dt();
    const std::vector<double> w = kernel.stencil1_derivative(eps, h);
    const int K = ((int)w.size() - 1) / 2;
    const int N = f.size();
    const int d = f.dim();

    SampledPath out;
    out.times = f.times;
    out.declared_gamma = f.declared_gamma;
    out.values.assign((size_t)N, std::vector<double>(d, 0.0));
    parallel_for(0, N, [&](std::int64_t j) {
        for (int c = 0; c < d; ++c) {
            double fj = f.values[j][c];
            double acc = 0.0;
            for (int i = -K; i <= K; ++i) {
                int src = std::clamp((int)j - i, 0, N - 1);
                acc += w[i + K] * (f.values[src][c] - fj);
            }
            out.values[j][c] = acc;
        }
    });
    return out;
}

GridMap mollify(const GridMap& f, double eps, const MollifierKernel& kernel) {
    f.validate();
    const int m = f.dims();
    double h = f.spacing(0);
    for (int a = 1; a < m; ++a)
        if (std::abs(f.spacing(a) - h) > 1e-9 * h)
            throw std::invalid_argument("grid mollify expects equal spacing per axis");
    int K = 0;
    const std::vector<double> w = kernel.stencil(m, eps, h, K);
    const int side = 2 * K + 1;

    GridMap out = f;
    const long long total = f.nodes();
    parallel_for(0, total, [&](std::int64_t idx) {
        std::vector<int> node = f.unindex(idx);
        std::vector<int> src(m);
        std::vector<double> acc((size_t)f.comps, 0.0);
        for (size_t c = 0; c < w.size(); ++c) {
            long long rem = (long long)c;
            for (int a = m - 1; a >= 0; --a) {
                int off = (int)(rem % side) - K;
                rem /= side;
                src[a] = std::clamp(node[a] - off, 0, f.shape[a] - 1);
            }
            long long sidx = f.index(src);
            for (int k = 0; k < f.comps; ++k) acc[k] += w[c] * f.at(sidx, k);
        }
        for (int k = 0; k < f.comps; ++k) out.at(idx, k) = acc[k];
    });
    return out;
}

GridMap mollify_derivative(const GridMap& f, double eps,
                           const MollifierKernel& kernel) {
    f.validate();
    const int m = f.dims();
    double h = f.spacing(0);
    for (int a = 1; a < m; ++a)
        if (std::abs(f.spacing(a) - h) > 1e-9 * h)
            throw std::invalid_argument("grid mollify expects equal spacing per axis");
    int K = 0;
    std::vector<double> w0 = kernel.stencil(m, eps, h, K); // validates eps
    const int side = 2 * K + 1;

    // gradient of the radial kernel: grad eta_eps(x) = eta'(|x|/eps) x/(|x| eps);
    // normalize by the first moment so linear data gets an exact gradient
    double moment = 0.0;
    {
        std::vector<int> off(m);
        for (size_t c = 0; c < w0.size(); ++c) {
            long long rem = (long long)c;
            double r2 = 0.0;
            for (int a = m - 1; a >= 0; --a) {
                off[a] = (int)(rem % side) - K;
                rem /= side;
                r2 += (off[a] * h) * (off[a] * h);
            }
            double r = std::sqrt(r2);
            if (r == 0.0 || off[0] == 0) continue;
            double raw0 = kernel.profile_derivative(r / eps) * (off[0] * h) / r;
            moment += raw0 * (-off[0] * h);
        }
        if (!(moment > 0.0))
            throw std::invalid_argument(
                "mollify_derivative: eps too close to the grid cell, stencil degenerate");
    }

    GridMap out = GridMap::make(f.lo, f.hi, f.shape, f.comps * m);
    const long long total = f.nodes();
    parallel_for(0, total, [&](std::int64_t idx) {
        std::vector<int> node = f.unindex(idx);
        std::vector<int> src(m);
        std::vector<int> off(m);
        long long count = (long long)w0.size();
        std::vector<double> acc((size_t)(f.comps * m), 0.0);
        for (long long c = 0; c < count; ++c) {
            long long rem = c;
            double r2 = 0.0;
            for (int a = m - 1; a >= 0; --a) {
                off[a] = (int)(rem % side) - K;
                rem /= side;
                r2 += (off[a] * h) * (off[a] * h);
            }
            double r = std::sqrt(r2);
            double dp = kernel.profile_derivative(r / eps);
            if (dp == 0.0) continue;
            for (int a = 0; a < m; ++a)
                src[a] = std::clamp(node[a] - off[a], 0, f.shape[a] - 1);
            long long sidx = f.index(src);
            for (int a = 0; a < m; ++a) {
                if (off[a] == 0) continue;
                double gw = dp * (off[a] * h) / (std::max(r, 1e-300) * moment);
                for (int k = 0; k < f.comps; ++k)
                    acc[(size_t)(k * m + a)] +=
                        gw * (f.at(sidx, k) - f.at(idx, k));
            }
        }
        for (int k = 0; k < f.comps * m; ++k) out.at(idx, k) = acc[k];
    });
    return out;
}

} // namespace hkit
