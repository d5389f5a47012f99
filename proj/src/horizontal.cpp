#include "hkit/horizontal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "hkit/errors.hpp"
#include "hkit/holder.hpp"
#include "hkit/parallel.hpp"
#include "hkit/winding.hpp"
#include "hkit/young.hpp"

namespace hkit {

namespace {

void check_alpha(const SampledPath& planar) {
    bool estimated = false;
    double alpha = effective_exponent(planar, estimated);
    if (!(alpha > 0.5))
        throw young_condition_error(
            "horizontal operations need alpha > 1/2 on the planar part");
}

/// Trapezoid increment of sum_j (x_j dy_j - y_j dx_j) over one sample
/// segment; exact for the polyline.
double segment_increment(const std::vector<double>& u,
                         const std::vector<double>& v, int n) {
    double s = 0.0;
    for (int j = 0; j < n; ++j)
        s += u[2 * j] * v[2 * j + 1] - v[2 * j] * u[2 * j + 1];
    return s;
}

} // namespace

SampledPath HPath::planar_pair(int j) const {
    return path.components(2 * (j - 1), 2);
}

void HPath::validate() const {
    path.validate();
    if (path.dim() < 3 || path.dim() % 2 == 0)
        throw std::invalid_argument("HPath needs 2n+1 components");
}

double height_change(const SampledPath& planar, double a, double b) {
    planar.validate();
    if (planar.dim() % 2 != 0)
        throw std::invalid_argument("height_change expects 2n planar components");
    check_alpha(planar);
    if (!(a < b)) return a == b ? 0.0 : -height_change(planar, b, a);
    SampledPath cut = planar.slice(a, b);
    const int n = planar.dim() / 2;
    double total = 0.0;
    for (int i = 0; i + 1 < cut.size(); ++i)
        total += segment_increment(cut.values[i], cut.values[i + 1], n);
    return -2.0 * total;
}

double horizontality_residual(const HPath& curve) {
    curve.validate();
    SampledPath planar = curve.planar();
    check_alpha(planar);
    const int n = curve.n();
    const int tcomp = 2 * n;
    double cum = 0.0;
    double residual = 0.0;
    const double t0 = curve.path.values[0][tcomp];
    for (int i = 0; i + 1 < curve.path.size(); ++i) {
        cum += segment_increment(curve.path.values[i], curve.path.values[i + 1], n);
        double predicted = t0 - 2.0 * cum;
        residual = std::max(residual,
                            std::abs(curve.path.values[i + 1][tcomp] - predicted));
    }
    return residual;
}

HPath horizontal_lift_curve(const SampledPath& planar, double t0) {
    planar.validate();
    if (planar.dim() % 2 != 0)
        throw std::invalid_argument("horizontal_lift_curve expects 2n components");
    check_alpha(planar);
    const int n = planar.dim() / 2;
    HPath out;
    out.path.times = planar.times;
    out.path.declared_gamma = planar.declared_gamma;
    out.path.values.resize(planar.values.size());
    double cum = 0.0;
    for (int i = 0; i < planar.size(); ++i) {
        if (i > 0)
            cum += segment_increment(planar.values[i - 1], planar.values[i], n);
        std::vector<double> row = planar.values[i];
        row.push_back(t0 - 2.0 * cum);
        out.path.values[i] = std::move(row);
    }
    return out;
}

double loop_area_sum(const GridMap& f, const ProbeLoop& loop) {
    loop.validate();
    if (loop.dim() != f.dims() || f.dims() != 2)
        throw std::invalid_argument("probe loop must live in the 2-D domain");
    const int n = f.comps / 2;
    // image of the loop under grid interpolation
    SampledPath image;
    image.times = loop.times;
    image.declared_gamma = 0.9; // piecewise smooth probe composed with f
    image.values.resize(loop.values.size());
    for (size_t i = 0; i < loop.values.size(); ++i)
        image.values[i] = f.eval(loop.values[i]);

    double total = 0.0;
    for (int j = 1; j <= n; ++j) {
        SampledPath pair = image.components(2 * (j - 1), 2);
        ClosedCurve2D completed = close_curve(pair);
        total += oriented_area_green(completed);
    }
    return total;
}

std::variant<LiftMapResult, ObstructionReport> lift_map(
    const GridMap& f, double t0, const std::vector<ProbeLoop>& probe_loops,
    std::optional<double> loop_tolerance) {
    f.validate();
    if (f.dims() != 2 || f.comps % 2 != 0)
        throw std::invalid_argument("lift_map expects a 2-D grid into R^{2n}");
    const int n = f.comps / 2;
    const int sx = f.shape[0], sy = f.shape[1];

    double tol;
    if (loop_tolerance) {
        tol = *loop_tolerance;
    } else {
        // discrete Lipschitz constant over grid edges as the seminorm proxy
        double lip = 0.0;
        for (int i = 0; i < sx; ++i)
            for (int j = 0; j < sy; ++j) {
                long long id = (long long)i * sy + j;
                for (int a = 0; a < 2; ++a) {
                    int ni = i + (a == 0), nj = j + (a == 1);
                    if (ni >= sx || nj >= sy) continue;
                    long long nid = (long long)ni * sy + nj;
                    double d2 = 0.0;
                    for (int c = 0; c < f.comps; ++c) {
                        double d = f.at(nid, c) - f.at(id, c);
                        d2 += d * d;
                    }
                    lip = std::max(lip, std::sqrt(d2) / f.spacing(a));
                }
            }
        double domain_area = (f.hi[0] - f.lo[0]) * (f.hi[1] - f.lo[1]);
        tol = 1e-6 * domain_area * lip * lip;
    }

    auto edge_term = [&](long long u, long long v) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            s += f.at(u, 2 * j) * f.at(v, 2 * j + 1) -
                 f.at(v, 2 * j) * f.at(u, 2 * j + 1);
        return s;
    };

    // fundamental loops: every grid plaquette, counterclockwise
    double worst_plaquette = 0.0;
    for (int i = 0; i + 1 < sx; ++i) {
        for (int j = 0; j + 1 < sy; ++j) {
            long long a = (long long)i * sy + j;
            long long b = (long long)(i + 1) * sy + j;
            long long c = (long long)(i + 1) * sy + (j + 1);
            long long d = (long long)i * sy + (j + 1);
            double loop = edge_term(a, b) + edge_term(b, c) + edge_term(c, d) +
                          edge_term(d, a);
            worst_plaquette = std::max(worst_plaquette, std::abs(0.5 * loop));
        }
    }
    if (worst_plaquette > tol) {
        ObstructionReport rep;
        rep.worst_loop_area = worst_plaquette;
        rep.worst_loop = -1;
        rep.tolerance = tol;
        return rep;
    }
    for (size_t li = 0; li < probe_loops.size(); ++li) {
        double area = loop_area_sum(f, probe_loops[li]);
        if (std::abs(area) > std::max(tol, 1e-9)) {
            ObstructionReport rep;
            rep.worst_loop_area = area;
            rep.worst_loop = (int)li;
            rep.tolerance = std::max(tol, 1e-9);
            return rep;
        }
    }

    // integrate tau over two different spanning trees
    auto integrate = [&](bool row_major) {
        std::vector<double> tau((size_t)sx * sy,
                                std::numeric_limits<double>::quiet_NaN());
        std::deque<long long> queue;
        tau[0] = t0;
        queue.push_back(0);
        while (!queue.empty()) {
            long long u = queue.front();
            queue.pop_front();
            int i = (int)(u / sy), j = (int)(u % sy);
            const int di[4] = {1, -1, 0, 0};
            const int dj[4] = {0, 0, 1, -1};
            for (int k = 0; k < 4; ++k) {
                int order = row_major ? k : 3 - k;
                int ni = i + di[order], nj = j + dj[order];
                if (ni < 0 || nj < 0 || ni >= sx || nj >= sy) continue;
                long long v = (long long)ni * sy + nj;
                if (!std::isnan(tau[(size_t)v])) continue;
                tau[(size_t)v] = tau[(size_t)u] - 2.0 * edge_term(u, v);
                queue.push_back(v);
            }
        }
        return tau;
    };
    std::vector<double> tau1 = integrate(true);
    std::vector<double> tau2 = integrate(false);

    LiftMapResult res;
    res.max_plaquette = worst_plaquette;
    for (size_t i = 0; i < tau1.size(); ++i)
        res.tree_disagreement =
            std::max(res.tree_disagreement, std::abs(tau1[i] - tau2[i]));
    res.lifted = GridMap::make(f.lo, f.hi, f.shape, f.comps + 1);
    for (long long i = 0; i < f.nodes(); ++i) {
        for (int c = 0; c < f.comps; ++c) res.lifted.at(i, c) = f.at(i, c);
        res.lifted.at(i, f.comps) = tau1[(size_t)i];
    }
    return res;
}

namespace {

GridMap pullback_impl(const GridMap& f, const std::vector<double>& kappa,
                      bool contact, double eps, const MollifierKernel& kernel,
                      std::optional<double> margin_opt) {
    f.validate();
    if (f.comps % 2 != 1)
        throw std::invalid_argument("pullback expects a map into R^{2n+1}");
    const int n = f.comps / 2;
    const int m = f.dims();
    const double h = f.spacing(0);
    const double margin = margin_opt.value_or(eps + h);
    for (int a = 0; a < m; ++a)
        if (f.hi[a] - f.lo[a] <= 2.0 * margin)
            throw std::invalid_argument("pullback margin leaves no interior");

    GridMap fe = mollify(f, eps, kernel);
    GridMap grad = mollify_derivative(f, eps, kernel);

    GridMap out = GridMap::make(f.lo, f.hi, f.shape, m);
    parallel_for(0, f.nodes(), [&](std::int64_t idx) {
        std::vector<int> node = f.unindex(idx);
        for (int a = 0; a < m; ++a) {
            double x = f.lo[a] + node[a] * f.spacing(a);
            if (x < f.lo[a] + margin || x > f.hi[a] - margin) return;
        }
        for (int a = 0; a < m; ++a) {
            double val = 0.0;
            if (contact) {
                val = grad.at(idx, (2 * n) * m + a); // dt component
                for (int j = 0; j < n; ++j) {
                    double xj = fe.at(idx, 2 * j);
                    double yj = fe.at(idx, 2 * j + 1);
                    val += 2.0 * (xj * grad.at(idx, (2 * j + 1) * m + a) -
                                  yj * grad.at(idx, (2 * j) * m + a));
                }
            } else {
                for (int c = 0; c < f.comps; ++c)
                    if (kappa[(size_t)c] != 0.0)
                        val += kappa[(size_t)c] * grad.at(idx, c * m + a);
            }
            out.at(idx, a) = val;
        }
    });
    return out;
}

} // namespace

GridMap pullback_alpha_mollified(const GridMap& f, double eps,
                                 const MollifierKernel& kernel,
                                 std::optional<double> margin) {
    return pullback_impl(f, {}, true, eps, kernel, margin);
}

GridMap pullback_constant_form_mollified(const GridMap& f,
                                         const std::vector<double>& kappa,
                                         double eps,
                                         const MollifierKernel& kernel,
                                         std::optional<double> margin) {
    if ((int)kappa.size() != f.comps)
        throw std::invalid_argument("kappa must have one coefficient per target axis");
    return pullback_impl(f, kappa, false, eps, kernel, margin);
}

DecayReport decay_exponent_fit(const GridMap& f, DecayForm form,
                               const std::vector<double>& eps_grid,
                               double gamma_declared,
                               const MollifierKernel& kernel,
                               const std::vector<double>& kappa) {
    if (eps_grid.size() < 4)
        throw std::invalid_argument("decay fit needs >= 4 eps levels");
    for (size_t i = 1; i < eps_grid.size(); ++i)
        if (!(eps_grid[i] < eps_grid[i - 1]))
            throw std::invalid_argument("eps grid must strictly decrease");
    if (!(eps_grid.front() / eps_grid.back() >= 100.0 * 0.99))
        throw std::invalid_argument("eps grid must span >= 2 decades");

    DecayReport rep;
    for (double eps : eps_grid) {
        GridMap pb = form == DecayForm::contact_alpha
                         ? pullback_alpha_mollified(f, eps, kernel)
                         : pullback_constant_form_mollified(f, kappa, eps, kernel);
        double sup = 0.0;
        for (double v : pb.data) sup = std::max(sup, std::abs(v));
        rep.eps_values.push_back(eps);
        rep.sup_norms.push_back(sup);
    }
    double floor = 0.0;
    for (double s : rep.sup_norms) floor = std::max(floor, s);
    if (floor < 1e-14)
        throw std::invalid_argument("decay fit degenerate: pullback is zero");

    double mx = 0, my = 0;
    const size_t m = rep.eps_values.size();
    for (size_t i = 0; i < m; ++i) {
        mx += std::log(rep.eps_values[i]);
        my += std::log(std::max(rep.sup_norms[i], 1e-300));
    }
    mx /= (double)m;
    my /= (double)m;
    double num = 0, den = 0;
    for (size_t i = 0; i < m; ++i) {
        double dx = std::log(rep.eps_values[i]) - mx;
        num += dx * (std::log(std::max(rep.sup_norms[i], 1e-300)) - my);
        den += dx * dx;
    }
    rep.fitted_slope = num / den;

    if (form == DecayForm::contact_alpha) {
        rep.reference_slope = 2.0 * gamma_declared - 1.0;
        rep.within_reference = rep.fitted_slope >= rep.reference_slope - 0.1;
        rep.note = "contact: decay at least eps^(2 gamma - 1) expected";
    } else {
        rep.reference_slope = -(1.0 - gamma_declared);
        rep.within_reference = rep.fitted_slope >= rep.reference_slope - 0.1;
        rep.note = "generic 1-form: blow-up no worse than eps^-(1 - gamma)";
    }
    rep.note +=
        "; finite data cannot distinguish rate-free decay from slow blow-up";
    return rep;
}

} // namespace hkit
