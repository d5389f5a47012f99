#include "hkit/young.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>

#include "hkit/errors.hpp"
#include "hkit/holder.hpp"

namespace hkit {

namespace {

void check_scalar_common_domain(const SampledPath& f, const SampledPath& g) {
    f.validate();
    g.validate();
    if (f.dim() != 1 || g.dim() != 1)
        throw std::invalid_argument("young integral expects scalar paths");
    double span = std::max(f.b() - f.a(), g.b() - g.a());
    if (std::abs(f.a() - g.a()) > 1e-9 * span ||
        std::abs(f.b() - g.b()) > 1e-9 * span)
        throw std::invalid_argument("young integral expects a common domain");
}

void check_young_condition(const SampledPath& f, const SampledPath& g,
                           bool& estimated) {
    bool ef = false, eg = false;
    double alpha = effective_exponent(f, ef);
    double beta = effective_exponent(g, eg);
    estimated = ef || eg;
    if (!(alpha + beta > 1.0))
        throw young_condition_error(
            "Young condition violated: alpha + beta <= 1 (alpha=" +
            std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")");
}

/// Monotone interpolation cursor over a path; amortized O(1) per query
/// for increasing query sequences.
struct Cursor {
    const SampledPath& p;
    size_t seg = 0;
    explicit Cursor(const SampledPath& path) : p(path) {}
    double operator()(double t) {
        if (t <= p.times.front()) return p.values.front()[0];
        if (t >= p.times.back()) return p.values.back()[0];
        while (p.times[seg + 1] < t) ++seg;
        while (seg > 0 && p.times[seg] > t) --seg;
        double w = (t - p.times[seg]) / (p.times[seg + 1] - p.times[seg]);
        return (1.0 - w) * p.values[seg][0] + w * p.values[seg + 1][0];
    }
};

double dyadic_sum(const SampledPath& f, const SampledPath& g, int level,
                  SumTag tag) {
    const double a = f.a();
    const double b = f.b();
    const long long cells = 1LL << level;
    const double dt = (b - a) / (double)cells;
    Cursor cf(f), cg(g), cmid(f);
    double sum = 0.0;
    double g_prev = cg(a);
    double f_prev = cf(a);
    for (long long k = 1; k <= cells; ++k) {
        double t = (k == cells) ? b : a + dt * (double)k;
        double g_cur = cg(t);
        double f_cur = cf(t);
        double tag_value;
        switch (tag) {
            case SumTag::left: tag_value = f_prev; break;
            case SumTag::midpoint: tag_value = cmid(t - 0.5 * dt); break;
            default: tag_value = 0.5 * (f_prev + f_cur); break;
        }
        sum += tag_value * (g_cur - g_prev);
        g_prev = g_cur;
        f_prev = f_cur;
    }
    return sum;
}

} // namespace

double effective_exponent(const SampledPath& f, bool& estimated) {
    if (f.declared_gamma) {
        estimated = false;
        return *f.declared_gamma;
    }
    estimated = true;
    return estimate_holder_exponent(f);
}

double richardson_extrapolate(const std::vector<double>& keys,
                              const std::vector<double>& values,
                              double& error, int max_stages) {
    std::vector<double> cur = values;
    error = cur.size() >= 2 ? std::abs(cur[cur.size() - 1] - cur[cur.size() - 2])
                            : 0.0;
    for (int stage = 0; stage < max_stages; ++stage) {
        const size_t m = cur.size();
        if (m < 3) break;
        double rho = keys[m - 3] / keys[m - 2]; // ladder ratio (typically 2)
        double d1 = cur[m - 2] - cur[m - 3];
        double d2 = cur[m - 1] - cur[m - 2];
        double scale = std::max({std::abs(cur[m - 1]), 1e-300});
        if (std::abs(d2) < 1e-14 * scale) break; // already converged
        double q = d1 / d2;
        if (!(q > 1.05)) break; // not decreasing geometrically
        double rate = std::log(q) / std::log(rho);
        // orders of clean expansions are (half-)integers: snap when close,
        // leaving the raw estimate would leak a first-order residual
        double snapped = std::round(rate * 2.0) / 2.0;
        if (std::abs(rate - snapped) < 0.06 && snapped > 0.0) rate = snapped;
        // require the rate seen one level earlier to agree before trusting it
        if (m >= 4) {
            double d0 = cur[m - 3] - cur[m - 4];
            if (std::abs(d1) < 1e-14 * scale) break;
            double q0 = d0 / d1;
            if (!(q0 > 1.05)) break;
            double rate0 = std::log(q0) / std::log(rho);
            if (std::abs(rate - rate0) > 0.4) break;
        } else if (stage > 0) {
            break; // short ladders only get one guarded stage
        }
        std::vector<double> next;
        for (size_t i = 0; i + 1 < m; ++i) {
            double r = keys[i] / keys[i + 1];
            double factor = std::pow(r, rate) - 1.0;
            next.push_back(cur[i + 1] + (cur[i + 1] - cur[i]) / factor);
        }
        cur = std::move(next);
        if (cur.size() >= 2)
            error = std::abs(cur[cur.size() - 1] - cur[cur.size() - 2]);
    }
    return cur.back();
}

YoungResult young_rs(const SampledPath& f, const SampledPath& g, int depth,
                     SumTag tag) {
    check_scalar_common_domain(f, g);
    YoungResult out;
    check_young_condition(f, g, out.exponents_estimated);
    if (depth < 2) depth = 2;

    out.method = YoungMethod::riemann_stieltjes;
    for (int level = 1; level <= depth; ++level) {
        out.level_keys.push_back((double)level);
        out.level_values.push_back(dyadic_sum(f, g, level, tag));
    }
    out.value = out.level_values.back();
    const size_t m = out.level_values.size();
    double d1 = std::abs(out.level_values[m - 1] - out.level_values[m - 2]);
    double d2 = m >= 3
                    ? std::abs(out.level_values[m - 2] - out.level_values[m - 3])
                    : d1;
    out.error_estimate = std::max(d1, d2);
    return out;
}

double stieltjes_trapezoid(const SampledPath& f, const SampledPath& g) {
    check_scalar_common_domain(f, g);
    // merged breakpoints: on each segment both interpolants are linear and
    // the Stieltjes integral is the trapezoid term exactly
    std::vector<double> knots;
    knots.reserve(f.times.size() + g.times.size());
    std::merge(f.times.begin(), f.times.end(), g.times.begin(), g.times.end(),
               std::back_inserter(knots));
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    Cursor cf(f), cg(g);
    double sum = 0.0;
    double fp = cf(knots[0]), gp = cg(knots[0]);
    for (size_t i = 1; i < knots.size(); ++i) {
        double fc = cf(knots[i]), gc = cg(knots[i]);
        sum += 0.5 * (fp + fc) * (gc - gp);
        fp = fc;
        gp = gc;
    }
    return sum;
}

namespace {

SampledPath supersample_linear(const SampledPath& p, int factor) {
    if (factor <= 1) return p;
    SampledPath out;
    out.declared_gamma = p.declared_gamma;
    const int N = p.size();
    out.times.reserve((size_t)(N - 1) * factor + 1);
    out.values.reserve((size_t)(N - 1) * factor + 1);
    for (int i = 0; i + 1 < N; ++i) {
        for (int s = 0; s < factor; ++s) {
            double w = (double)s / factor;
            out.times.push_back(p.times[i] +
                                w * (p.times[i + 1] - p.times[i]));
            std::vector<double> row(p.values[i].size());
            for (size_t c = 0; c < row.size(); ++c)
                row[c] = (1.0 - w) * p.values[i][c] + w * p.values[i + 1][c];
            out.values.push_back(std::move(row));
        }
    }
    out.times.push_back(p.times.back());
    out.values.push_back(p.values.back());
    return out;
}

} // namespace

YoungResult young_mollified(const SampledPath& f, const SampledPath& g,
                            std::vector<double> eps_sequence,
                            const MollifierKernel& kernel) {
    check_scalar_common_domain(f, g);
    YoungResult out;
    out.method = YoungMethod::mollified;
    check_young_condition(f, g, out.exponents_estimated);

    if (eps_sequence.size() < 2)
        throw std::invalid_argument("young_mollified needs >= 2 eps levels");
    for (size_t i = 1; i < eps_sequence.size(); ++i)
        if (!(eps_sequence[i] < eps_sequence[i - 1]))
            throw std::invalid_argument("eps sequence must strictly decrease");

    bool ef = false, eg = false;
    const double alpha = effective_exponent(f, ef);
    const double beta = effective_exponent(g, eg);
    const double rate = std::clamp(alpha + beta - 1.0, 0.05, 1.5);

    if (!f.uniform_spacing(1e-6) || !g.uniform_spacing(1e-6))
        throw std::invalid_argument("young_mollified expects uniform sampling");
    const double h0 = f.mean_dt();

    // the data is linear below the sample scale, so eps may descend under h
    // as long as the evaluation grid is refined with it
    int factor = 1;
    while (eps_sequence.back() < 4.0 * (h0 / factor) && factor < 64)
        factor *= 2;
    if (eps_sequence.back() < 2.0 * (h0 / factor))
        throw std::invalid_argument(
            "young_mollified: eps below the evaluation grid cell");
    const SampledPath ff = supersample_linear(f, factor);
    const SampledPath gg = supersample_linear(g, factor);
    const int N = ff.size();
    const double h = ff.mean_dt();

    std::vector<double> raw;
    for (double eps : eps_sequence) {
        SampledPath fe = mollify(ff, eps, kernel);
        SampledPath ge = mollify_derivative(gg, eps, kernel);
        // composite Simpson (trapezoid on a trailing odd interval)
        double integral = 0.0;
        int limit = N - 1 - ((N - 1) % 2);
        for (int i = 0; i + 2 <= limit; i += 2) {
            double y0 = fe.values[i][0] * ge.values[i][0];
            double y1 = fe.values[i + 1][0] * ge.values[i + 1][0];
            double y2 = fe.values[i + 2][0] * ge.values[i + 2][0];
            integral += h / 3.0 * (y0 + 4.0 * y1 + y2);
        }
        if (limit < N - 1) {
            double y0 = fe.values[N - 2][0] * ge.values[N - 2][0];
            double y1 = fe.values[N - 1][0] * ge.values[N - 1][0];
            integral += 0.5 * h * (y0 + y1);
        }
        raw.push_back(integral);
        out.level_keys.push_back(eps);
    }
    out.level_values = raw;
    (void)rate; // the stage rates are estimated from the ladder itself
    out.value = richardson_extrapolate(out.level_keys, raw, out.error_estimate);
    return out;
}

YoungBound young_bound_check(const SampledPath& f, const SampledPath& g,
                             double alpha, double beta) {
    check_scalar_common_domain(f, g);
    if (!(alpha + beta > 1.0))
        throw young_condition_error("Young condition violated");
    double scale = std::max(1e-300, f.max_abs());
    double vanish = std::abs(f.values[0][0]);
    for (const auto& row : f.values)
        vanish = std::min(vanish, std::abs(row[0]));
    if (vanish > 1e-9 * scale)
        throw std::invalid_argument("young_bound_check: f has no vanishing point");

    YoungBound out;
    SampledPath fa = f;
    fa.declared_gamma = alpha;
    SampledPath gb = g;
    gb.declared_gamma = beta;
    // the refinement limit of the Stieltjes sums, exact on sampled data
    out.lhs = std::abs(stieltjes_trapezoid(fa, gb));
    const double inf = std::numeric_limits<double>::infinity();
    double sf = holder_seminorm(f, alpha, inf);
    double sg = holder_seminorm(g, beta, inf);
    out.rhs = std::pow(f.b() - f.a(), alpha + beta) * sf * sg;
    out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
    return out;
}

namespace {
std::mutex g_fftw_mutex; // FFTW planner is not thread safe
}

std::vector<FourierBlock> fourier_block_bounds(const SampledPath& f,
                                               double alpha) {
    f.validate();
    const int d = f.dim();
    double scale = std::max(1e-300, f.max_abs());
    for (int c = 0; c < d; ++c)
        if (std::abs(f.values.front()[c] - f.values.back()[c]) > 1e-6 * scale)
            throw std::invalid_argument(
                "fourier_block_bounds: endpoints do not match (non-periodic)");

    const int N = f.size() - 1; // drop the repeated endpoint
    if (N < 4 || (N & (N - 1)) != 0)
        throw std::invalid_argument("fourier_block_bounds: N must be a power of two");

    const double inf = std::numeric_limits<double>::infinity();
    const double seminorm = holder_seminorm(f, alpha, inf);

    std::vector<double> energy((size_t)(N / 2 + 1), 0.0);
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        std::vector<double> in((size_t)N);
        std::vector<std::complex<double>> spec((size_t)(N / 2 + 1));
        fftw_plan plan = fftw_plan_dft_r2c_1d(
            N, in.data(), reinterpret_cast<fftw_complex*>(spec.data()),
            FFTW_ESTIMATE);
        for (int c = 0; c < d; ++c) {
            for (int i = 0; i < N; ++i) in[(size_t)i] = f.values[i][c];
            fftw_execute(plan);
            for (int n = 0; n <= N / 2; ++n) {
                double mag = std::abs(spec[(size_t)n]) / (double)N;
                // +-n both contribute except the endpoints of the spectrum
                double mult = (n == 0 || n == N / 2) ? 1.0 : 2.0;
                energy[(size_t)n] += mult * mag * mag;
            }
        }
        fftw_destroy_plan(plan);
    }

    std::vector<FourierBlock> out;
    for (int k = 0; (2 << k) <= N / 2; ++k) {
        FourierBlock blk;
        blk.k = k;
        for (int n = 1 << k; n < (2 << k); ++n)
            blk.block_energy += energy[(size_t)n];
        blk.bound = seminorm * seminorm * std::pow(2.0, -2.0 * k * alpha);
        out.push_back(blk);
    }
    return out;
}

} // namespace hkit
