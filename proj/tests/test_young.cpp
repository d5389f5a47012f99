#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hkit/errors.hpp"
#include "hkit/holder.hpp"
#include "hkit/young.hpp"

using namespace hkit;

namespace {

SampledPath sample_function(double (*fn)(double), int n, double gamma) {
    SampledPath p;
    p.declared_gamma = gamma;
    for (int i = 0; i <= n; ++i) {
        double x = (double)i / n;
        p.times.push_back(x);
        p.values.push_back({fn(x)});
    }
    return p;
}

std::vector<double> eps_ladder(int hi, int lo) { // 2^-hi .. 2^-lo, hi < lo
    std::vector<double> out;
    for (int k = hi; k <= lo; ++k) out.push_back(std::pow(2.0, -k));
    return out;
}

} // namespace

TEST_CASE("classical cases for the Stieltjes realization") {
    SampledPath x = sample_function([](double t) { return t; }, 1 << 12, 1.0);
    YoungResult r = young_rs(x, x, 14);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(r.error_estimate < 1e-3);

    // f = 1: telescoping, exact at every level
    SampledPath one = sample_function([](double) { return 1.0; }, 256, 1.0);
    SampledPath g = sample_function([](double t) { return std::sin(3.0 * t); },
                                    256, 1.0);
    YoungResult rt = young_rs(one, g, 6);
    CHECK(rt.value == doctest::Approx(std::sin(3.0) - 0.0).epsilon(1e-14));
    for (double v : rt.level_values)
        CHECK(v == doctest::Approx(rt.value).epsilon(1e-14));
}

TEST_CASE("young condition is enforced") {
    SampledPath f = weierstrass_path(0.4, 2, 10, 1024, 1, 1);
    SampledPath g = weierstrass_path(0.5, 2, 10, 1024, 1, 2);
    CHECK_THROWS_AS(young_rs(f, g, 8), young_condition_error);
    MollifierKernel kernel;
    CHECK_THROWS_AS(young_mollified(f, g, eps_ladder(4, 8), kernel),
                    young_condition_error);
    // monotone eps enforced
    SampledPath a = weierstrass_path(0.7, 2, 10, 1024, 1, 3);
    SampledPath b = weierstrass_path(0.7, 2, 10, 1024, 1, 4);
    CHECK_THROWS_AS(young_mollified(a, b, {0.1, 0.2}, kernel),
                    std::invalid_argument);
}

TEST_CASE("mollified method matches the classical integral on smooth data") {
    // int_0^1 sin(2 pi x) d cos(2 pi x) = -pi
    SampledPath f = sample_function(
        [](double t) { return std::sin(6.283185307179586 * t); }, 1 << 17, 1.0);
    SampledPath g = sample_function(
        [](double t) { return std::cos(6.283185307179586 * t); }, 1 << 17, 1.0);
    MollifierKernel kernel;
    YoungResult r = young_mollified(f, g, eps_ladder(5, 11), kernel);
    CHECK(std::abs(r.value - (-3.14159265358979324)) < 1e-8);

    // polynomial case: int_0^1 x^2 d(x^3) = 3/5; non-matching endpoints put
    // a boundary collar in every level, which caps the attainable accuracy
    SampledPath p = sample_function([](double t) { return t * t; }, 1 << 17, 1.0);
    SampledPath q = sample_function([](double t) { return t * t * t; }, 1 << 17, 1.0);
    YoungResult rp = young_mollified(p, q, eps_ladder(5, 11), kernel);
    CHECK(std::abs(rp.value - 0.6) < 1e-7);
}

TEST_CASE("cross-method agreement on weierstrass pairs") {
    MollifierKernel kernel;
    for (std::uint64_t seed : {101, 202, 303}) {
        SampledPath f = weierstrass_path(0.6, 2, 18, 1 << 14, 1, seed);
        SampledPath g = weierstrass_path(0.6, 2, 18, 1 << 14, 1, seed + 7);
        YoungResult rs = young_rs(f, g, 26);
        const double h = f.mean_dt();
        std::vector<double> ladder;
        for (double m : {8.0, 4.0, 2.0, 1.0, 0.5, 0.25, 0.125})
            ladder.push_back(m * h);
        YoungResult mol = young_mollified(f, g, ladder, kernel);
        double scale = std::max({1e-3, std::abs(rs.value)});
        CHECK(std::abs(rs.value - mol.value) / scale < 1e-3);
    }
}

TEST_CASE("tag independence under the young condition") {
    SampledPath f = weierstrass_path(0.7, 2, 16, 1 << 13, 1, 5);
    SampledPath g = weierstrass_path(0.7, 2, 16, 1 << 13, 1, 6);
    YoungResult left = young_rs(f, g, 15);
    YoungResult mid = young_rs(f, g, 15, SumTag::midpoint);
    YoungResult trap = young_rs(f, g, 15, SumTag::trapezoid);
    double cauchy = left.error_estimate + mid.error_estimate +
                    trap.error_estimate;
    CHECK(std::abs(left.value - mid.value) < 8.0 * cauchy + 1e-9);
    CHECK(std::abs(left.value - trap.value) < 8.0 * cauchy + 1e-9);
}

TEST_CASE("bilinearity, integration by parts, additivity") {
    SampledPath f = weierstrass_path(0.7, 2, 14, 1 << 12, 1, 8);
    SampledPath g = weierstrass_path(0.7, 2, 14, 1 << 12, 1, 9);
    SampledPath h = weierstrass_path(0.7, 2, 14, 1 << 12, 1, 10);

    // bilinearity of the exact trapezoid limit
    SampledPath combo = f;
    for (int i = 0; i < combo.size(); ++i)
        combo.values[i][0] = 2.0 * f.values[i][0] - 3.0 * h.values[i][0];
    double lhs = stieltjes_trapezoid(combo, g);
    double rhs = 2.0 * stieltjes_trapezoid(f, g) -
                 3.0 * stieltjes_trapezoid(h, g);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));

    // integration by parts is exact in trapezoid form
    double parts = stieltjes_trapezoid(f, g) + stieltjes_trapezoid(g, f);
    double boundary = f.values.back()[0] * g.values.back()[0] -
                      f.values.front()[0] * g.values.front()[0];
    CHECK(parts == doctest::Approx(boundary).epsilon(1e-10));

    // additivity over subintervals
    SampledPath f1 = f.slice(0.0, 0.37), f2 = f.slice(0.37, 1.0);
    SampledPath g1 = g.slice(0.0, 0.37), g2 = g.slice(0.37, 1.0);
    double whole = stieltjes_trapezoid(f, g);
    double split = stieltjes_trapezoid(f1, g1) + stieltjes_trapezoid(f2, g2);
    CHECK(whole == doctest::Approx(split).epsilon(1e-10));
}

TEST_CASE("perturbation bound in the data (eq-49 shape)") {
    MollifierKernel kernel;
    SampledPath f = weierstrass_path(0.65, 2, 14, 1 << 12, 1, 21);
    SampledPath g = weierstrass_path(0.65, 2, 14, 1 << 12, 1, 22);
    SampledPath ftil = f, gtil = g;
    for (int i = 0; i < f.size(); ++i) {
        double bump = 0.05 * std::sin(9.0 * f.times[i]);
        ftil.values[i][0] += bump;
        gtil.values[i][0] += 0.5 * bump;
    }
    double base = stieltjes_trapezoid(f, g);
    double pert = stieltjes_trapezoid(ftil, gtil);
    const double inf = std::numeric_limits<double>::infinity();
    double sg = holder_seminorm(g, 0.65, inf);
    double dg = 0.0; // [g - gtil]_beta
    {
        SampledPath diff = g;
        for (int i = 0; i < g.size(); ++i)
            diff.values[i][0] -= gtil.values[i][0];
        dg = holder_seminorm(diff, 0.65, inf);
    }
    double nf = 0.0, df = 0.0;
    {
        SampledPath diff = f;
        for (int i = 0; i < f.size(); ++i)
            diff.values[i][0] -= ftil.values[i][0];
        df = holder_seminorm(diff, 0.65, inf) + diff.max_abs();
        nf = holder_seminorm(ftil, 0.65, inf) + ftil.max_abs();
    }
    // |I(f,g) - I(ftil, gtil)| <= C (|f-ftil|_{C^a} [g]_b + |ftil|_{C^a} [g-gtil]_b)
    double bound_shape = df * sg + nf * dg;
    double fitted_c = std::abs(base - pert) / bound_shape;
    CHECK(fitted_c < 1.0); // a single modest constant covers the corpus
}

TEST_CASE("vanishing-point bound") {
    SampledPath f = weierstrass_path(0.6, 2, 12, 4096, 1, 31);
    double f0 = f.values[1000][0];
    for (auto& row : f.values) row[0] -= f0; // force a vanishing point
    SampledPath g = weierstrass_path(0.6, 2, 12, 4096, 1, 32);
    YoungBound yb = young_bound_check(f, g, 0.6, 0.6);
    CHECK(yb.ratio >= 0.0);
    CHECK(yb.ratio < 3.0);
    CHECK(yb.rhs > 0.0);

    // f == 0: ratio 0
    SampledPath zero = f;
    for (auto& row : zero.values) row[0] = 0.0;
    CHECK(young_bound_check(zero, g, 0.6, 0.6).ratio == 0.0);

    // odd symmetry: f = x - 1/2 against g = x gives lhs = 0
    SampledPath xs = sample_function([](double t) { return t - 0.5; }, 4096, 1.0);
    SampledPath id = sample_function([](double t) { return t; }, 4096, 1.0);
    YoungBound sym = young_bound_check(xs, id, 1.0, 1.0);
    CHECK(std::abs(sym.lhs) < 1e-9);

    // no vanishing point is an error
    SampledPath pos = sample_function([](double) { return 1.0; }, 64, 1.0);
    CHECK_THROWS_AS(young_bound_check(pos, id, 1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("fourier blocks: single mode, constant, weierstrass") {
    // cos(2 pi 8 x): all energy in block k = 3
    SampledPath c;
    c.declared_gamma = 1.0;
    int N = 1 << 10;
    for (int i = 0; i <= N; ++i) {
        double x = (double)i / N;
        c.times.push_back(x);
        c.values.push_back({std::cos(6.283185307179586 * 8.0 * x)});
    }
    auto blocks = fourier_block_bounds(c, 0.5);
    for (const auto& b : blocks) {
        if (b.k == 3)
            CHECK(b.block_energy == doctest::Approx(0.5).epsilon(1e-10));
        else
            CHECK(b.block_energy < 1e-20);
    }

    SampledPath cst;
    for (int i = 0; i <= 64; ++i) {
        cst.times.push_back(i / 64.0);
        cst.values.push_back({1.0});
    }
    for (const auto& b : fourier_block_bounds(cst, 0.5))
        CHECK(b.block_energy < 1e-24);

    // base-2 weierstrass at alpha = 1/2: ratios bounded by 4 through k = 10
    SampledPath w = weierstrass_path(0.5, 2, 16, 1 << 12, 1, 404);
    auto wb = fourier_block_bounds(w, 0.5);
    int checked = 0;
    for (const auto& b : wb) {
        if (b.k > 10) continue;
        CHECK(b.block_energy <= 4.0 * b.bound);
        ++checked;
    }
    CHECK(checked >= 10);

    // non-periodic input is rejected
    SampledPath lin = sample_function([](double t) { return t; }, 256, 1.0);
    CHECK_THROWS_AS(fourier_block_bounds(lin, 0.5), std::invalid_argument);
}
