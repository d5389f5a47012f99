#include "hkit/hodge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hkit/rng.hpp"

namespace hkit {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

FourierForm::FourierForm(int torus_dim, int degree, int mode_cutoff)
    : k_(torus_dim), l_(degree), m_(mode_cutoff) {
    if (k_ < 1 || k_ > 3)
        throw std::invalid_argument("FourierForm supports torus dim 1..3");
    if (l_ < 0 || l_ > k_)
        throw std::invalid_argument("form degree must lie in [0, k]");
    if (m_ < 1) throw std::invalid_argument("mode cutoff must be >= 1");
    basis_ = multi_index_basis(k_, l_);
    data_.assign(basis_.size(),
                 std::vector<std::complex<double>>((size_t)lattice_size()));
}

long long FourierForm::lattice_size() const {
    long long s = 1;
    for (int a = 0; a < k_; ++a) s *= lattice_side();
    return s;
}

long long FourierForm::mode_index(const std::vector<int>& xi) const {
    long long idx = 0;
    for (int a = 0; a < k_; ++a) {
        if (xi[a] < -m_ || xi[a] > m_)
            throw std::invalid_argument("mode outside the lattice cube");
        idx = idx * lattice_side() + (xi[a] + m_);
    }
    return idx;
}

std::vector<int> FourierForm::mode_at(long long idx) const {
    std::vector<int> xi(k_);
    for (int a = k_ - 1; a >= 0; --a) {
        xi[a] = (int)(idx % lattice_side()) - m_;
        idx /= lattice_side();
    }
    return xi;
}

double FourierForm::conjugate_symmetry_defect() const {
    double defect = 0.0;
    for (int c = 0; c < component_count(); ++c) {
        for (long long i = 0; i < lattice_size(); ++i) {
            std::vector<int> xi = mode_at(i);
            for (int& v : xi) v = -v;
            std::complex<double> mirrored = coeff(c, mode_index(xi));
            defect = std::max(defect,
                              std::abs(mirrored - std::conj(coeff(c, i))));
        }
    }
    return defect;
}

void FourierForm::symmetrize() {
    for (int c = 0; c < component_count(); ++c) {
        for (long long i = 0; i < lattice_size(); ++i) {
            std::vector<int> xi = mode_at(i);
            for (int& v : xi) v = -v;
            long long j = mode_index(xi);
            if (j < i) continue;
            std::complex<double> avg =
                0.5 * (coeff(c, i) + std::conj(coeff(c, j)));
            set_coeff(c, i, avg);
            set_coeff(c, j, std::conj(avg));
        }
    }
}

std::vector<double> FourierForm::eval_at(const std::vector<double>& x) const {
    std::vector<double> out((size_t)component_count(), 0.0);
    for (int c = 0; c < component_count(); ++c) {
        std::complex<double> acc = 0.0;
        for (long long i = 0; i < lattice_size(); ++i) {
            std::complex<double> v = coeff(c, i);
            if (v == std::complex<double>(0.0, 0.0)) continue;
            std::vector<int> xi = mode_at(i);
            double phase = 0.0;
            for (int a = 0; a < k_; ++a) phase += xi[a] * x[a];
            acc += v * std::polar(1.0, kTwoPi * phase);
        }
        out[(size_t)c] = acc.real();
    }
    return out;
}

double FourierForm::l2_norm_sq() const {
    double s = 0.0;
    for (const auto& comp : data_)
        for (const auto& v : comp) s += std::norm(v);
    return s;
}

double FourierForm::l2_inner(const FourierForm& a, const FourierForm& b) {
    if (a.k_ != b.k_ || a.l_ != b.l_ || a.m_ != b.m_)
        throw std::invalid_argument("l2_inner: incompatible forms");
    std::complex<double> s = 0.0;
    for (size_t c = 0; c < a.data_.size(); ++c)
        for (size_t i = 0; i < a.data_[c].size(); ++i)
            s += a.data_[c][i] * std::conj(b.data_[c][i]);
    return s.real();
}

double FourierForm::gradient_l2_norm() const {
    double s = 0.0;
    for (int c = 0; c < component_count(); ++c) {
        for (long long i = 0; i < lattice_size(); ++i) {
            std::vector<int> xi = mode_at(i);
            double xi2 = 0.0;
            for (int a = 0; a < k_; ++a) xi2 += (double)xi[a] * xi[a];
            s += kTwoPi * kTwoPi * xi2 * std::norm(coeff(c, i));
        }
    }
    return std::sqrt(s);
}

double FourierForm::sobolev_norm() const {
    return std::sqrt(l2_norm_sq()) + gradient_l2_norm();
}

FourierForm FourierForm::operator+(const FourierForm& o) const {
    FourierForm out = *this;
    for (size_t c = 0; c < data_.size(); ++c)
        for (size_t i = 0; i < data_[c].size(); ++i)
            out.data_[c][i] += o.data_[c][i];
    return out;
}

FourierForm FourierForm::operator-(const FourierForm& o) const {
    FourierForm out = *this;
    for (size_t c = 0; c < data_.size(); ++c)
        for (size_t i = 0; i < data_[c].size(); ++i)
            out.data_[c][i] -= o.data_[c][i];
    return out;
}

FourierForm FourierForm::operator*(double s) const {
    FourierForm out = *this;
    for (auto& comp : out.data_)
        for (auto& v : comp) v *= s;
    return out;
}

FourierForm FourierForm::harmonic_part() const {
    FourierForm out(k_, l_, m_);
    long long zero = mode_index(std::vector<int>(k_, 0));
    for (int c = 0; c < component_count(); ++c)
        out.set_coeff(c, zero, coeff(c, zero));
    return out;
}

void FourierForm::remove_harmonic_part() {
    long long zero = mode_index(std::vector<int>(k_, 0));
    for (int c = 0; c < component_count(); ++c)
        set_coeff(c, zero, 0.0);
}

FourierForm FourierForm::random_real(int torus_dim, int degree,
                                     int mode_cutoff, std::uint64_t seed,
                                     double decay) {
    FourierForm out(torus_dim, degree, mode_cutoff);
    std::mt19937_64 rng(seed);
    for (int c = 0; c < out.component_count(); ++c) {
        for (long long i = 0; i < out.lattice_size(); ++i) {
            std::vector<int> xi = out.mode_at(i);
            double xi2 = 0.0;
            for (int v : xi) xi2 += (double)v * v;
            double amp = std::pow(1.0 + xi2, -decay * 0.5);
            out.set_coeff(
                c, i,
                std::complex<double>(amp * rand_normal(rng),
                                     amp * rand_normal(rng)));
        }
    }
    out.symmetrize();
    return out;
}

FourierForm d_spectral(const FourierForm& w) {
    if (w.degree() >= w.torus_dim())
        throw std::invalid_argument("d on a top-degree form");
    FourierForm out(w.torus_dim(), w.degree() + 1, w.cutoff());
    const auto& in_basis = w.basis();
    // positions for output accumulation
    std::map<MultiIndex, int> pos;
    for (int c = 0; c < out.component_count(); ++c) pos[out.basis()[c]] = c;

    for (int c = 0; c < w.component_count(); ++c) {
        const MultiIndex& I = in_basis[c];
        for (int j = 1; j <= w.torus_dim(); ++j) {
            if (std::find(I.begin(), I.end(), j) != I.end()) continue;
            // dx_j ^ dx_I with j inserted in order
            int swaps = 0;
            MultiIndex J;
            J.reserve(I.size() + 1);
            bool inserted = false;
            for (int v : I) {
                if (!inserted && v > j) {
                    J.push_back(j);
                    inserted = true;
                }
                if (!inserted) ++swaps;
                J.push_back(v);
            }
            if (!inserted) J.push_back(j);
            double sign = (swaps % 2 == 0) ? 1.0 : -1.0;
            int oc = pos.at(J);
            for (long long i = 0; i < w.lattice_size(); ++i) {
                std::complex<double> v = w.coeff(c, i);
                if (v == std::complex<double>(0.0, 0.0)) continue;
                std::vector<int> xi = w.mode_at(i);
                std::complex<double> factor(0.0,
                                            sign * kTwoPi * xi[(size_t)j - 1]);
                out.set_coeff(oc, i, out.coeff(oc, i) + factor * v);
            }
        }
    }
    return out;
}

FourierForm star_spectral(const FourierForm& w) {
    FourierForm out(w.torus_dim(), w.torus_dim() - w.degree(), w.cutoff());
    std::map<MultiIndex, int> pos;
    for (int c = 0; c < out.component_count(); ++c) pos[out.basis()[c]] = c;
    const int n = w.torus_dim();
    for (int c = 0; c < w.component_count(); ++c) {
        const MultiIndex& I = w.basis()[c];
        std::vector<bool> used((size_t)n + 1, false);
        for (int i : I) used[(size_t)i] = true;
        MultiIndex J;
        for (int i = 1; i <= n; ++i)
            if (!used[(size_t)i]) J.push_back(i);
        MultiIndex full = I;
        full.insert(full.end(), J.begin(), J.end());
        MultiIndex sorted;
        int sign = sort_sign(full, sorted);
        int oc = pos.at(J);
        for (long long i = 0; i < w.lattice_size(); ++i)
            out.set_coeff(oc, i, (double)sign * w.coeff(c, i));
    }
    return out;
}

FourierForm delta_spectral(const FourierForm& w) {
    if (w.degree() <= 0)
        throw std::invalid_argument("delta on a 0-form");
    const int n = w.torus_dim();
    const int l = w.degree();
    // delta = (-1)^{n(l-1)+1} * d *
    FourierForm out = star_spectral(d_spectral(star_spectral(w)));
    double sign = ((n * (l - 1) + 1) % 2 == 0) ? 1.0 : -1.0;
    return out * sign;
}

LaplaceSolution laplace_solve(const FourierForm& w) {
    LaplaceSolution sol;
    sol.harmonic = w.harmonic_part();
    sol.eta = FourierForm(w.torus_dim(), w.degree(), w.cutoff());
    for (int c = 0; c < w.component_count(); ++c) {
        for (long long i = 0; i < w.lattice_size(); ++i) {
            std::vector<int> xi = w.mode_at(i);
            double xi2 = 0.0;
            for (int v : xi) xi2 += (double)v * v;
            if (xi2 == 0.0) continue; // harmonic modes are never divided
            sol.eta.set_coeff(c, i,
                              w.coeff(c, i) / (kTwoPi * kTwoPi * xi2));
        }
    }
    return sol;
}

HodgeSplit hodge_decompose(const FourierForm& w) {
    HodgeSplit split;
    LaplaceSolution sol = laplace_solve(w);
    split.harmonic = sol.harmonic;
    const int l = w.degree();
    if (l > 0) {
        split.omega1 = delta_spectral(sol.eta);
        split.d_part = d_spectral(split.omega1);
    } else {
        split.omega1 = FourierForm(); // no degree -1 potentials
        split.d_part = FourierForm(w.torus_dim(), 0, w.cutoff());
    }
    if (l < w.torus_dim()) {
        split.omega2 = d_spectral(sol.eta);
        split.delta_part = delta_spectral(split.omega2);
    } else {
        split.omega2 = FourierForm();
        split.delta_part = FourierForm(w.torus_dim(), l, w.cutoff());
    }
    return split;
}

GaffneyReport gaffney_check(const std::vector<FourierForm>& corpus) {
    if (corpus.empty())
        throw std::invalid_argument("gaffney_check: empty corpus");
    GaffneyReport rep;
    rep.gaffney_min = rep.poincare_min = std::numeric_limits<double>::infinity();
    for (const FourierForm& w : corpus) {
        if (std::sqrt(w.harmonic_part().l2_norm_sq()) >
            1e-12 * std::max(1.0, std::sqrt(w.l2_norm_sq()))) {
            ++rep.flagged_harmonic;
            continue;
        }
        double l2 = std::sqrt(w.l2_norm_sq());
        double dn = w.degree() < w.torus_dim()
                        ? std::sqrt(d_spectral(w).l2_norm_sq())
                        : 0.0;
        double deltan =
            w.degree() > 0 ? std::sqrt(delta_spectral(w).l2_norm_sq()) : 0.0;
        double sobolev = w.sobolev_norm();
        double gaffney = (l2 + dn + deltan) / sobolev;
        double poincare = sobolev / (dn + deltan);
        rep.gaffney_min = std::min(rep.gaffney_min, gaffney);
        rep.gaffney_max = std::max(rep.gaffney_max, gaffney);
        rep.poincare_min = std::min(rep.poincare_min, poincare);
        rep.poincare_max = std::max(rep.poincare_max, poincare);
    }
    return rep;
}

} // namespace hkit
