#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hkit/exterior.hpp"

namespace hkit {

/// Differential l-form on the flat torus T^k (k = 2 or 3) stored by
/// complex Fourier coefficients per basis component dx_I over the
/// frequency cube [-M, M]^k. Real-valued forms keep conjugate symmetry
/// c_I(-xi) = conj(c_I(xi)).
class FourierForm {
public:
    FourierForm() = default;
    FourierForm(int torus_dim, int degree, int mode_cutoff);

    int torus_dim() const { return k_; }
    int degree() const { return l_; }
    int cutoff() const { return m_; }
    int lattice_side() const { return 2 * m_ + 1; }
    long long lattice_size() const;
    int component_count() const { return (int)basis_.size(); }
    const std::vector<MultiIndex>& basis() const { return basis_; }

    long long mode_index(const std::vector<int>& xi) const;
    std::vector<int> mode_at(long long idx) const;

    std::complex<double> coeff(int comp, long long mode) const {
        return data_[(size_t)comp][(size_t)mode];
    }
    void set_coeff(int comp, long long mode, std::complex<double> v) {
        data_[(size_t)comp][(size_t)mode] = v;
    }
    const std::vector<std::complex<double>>& component(int comp) const {
        return data_[(size_t)comp];
    }
    std::vector<std::complex<double>>& component(int comp) {
        return data_[(size_t)comp];
    }

    /// Max |c_I(-xi) - conj(c_I(xi))| (0 for exactly real forms).
    double conjugate_symmetry_defect() const;
    /// Force exact conjugate symmetry by averaging.
    void symmetrize();

    /// Evaluate all components at a point of [0,1)^k (test helper).
    std::vector<double> eval_at(const std::vector<double>& x) const;

    double l2_norm_sq() const;
    /// L2 pairing (flat metric, dx_I orthonormal, Parseval).
    static double l2_inner(const FourierForm& a, const FourierForm& b);

    /// Sobolev W^{1,2} norm: l2 + full-gradient l2.
    double sobolev_norm() const;
    double gradient_l2_norm() const;

    FourierForm operator+(const FourierForm& o) const;
    FourierForm operator-(const FourierForm& o) const;
    FourierForm operator*(double s) const;

    /// Zero-frequency part (the harmonic forms of the torus).
    FourierForm harmonic_part() const;
    void remove_harmonic_part();

    static FourierForm random_real(int torus_dim, int degree, int mode_cutoff,
                                   std::uint64_t seed, double decay = 1.5);

private:
    int k_ = 0, l_ = 0, m_ = 0;
    std::vector<MultiIndex> basis_;
    std::vector<std::vector<std::complex<double>>> data_;
};

FourierForm d_spectral(const FourierForm& w);
FourierForm delta_spectral(const FourierForm& w);
/// Flat Hodge star applied per basis component (constant coefficients).
FourierForm star_spectral(const FourierForm& w);

/// Solve Laplace-de Rham Delta eta = w - harmonic(w) per mode
/// (division by 4 pi^2 |xi|^2); returns eta and the removed harmonic part.
struct LaplaceSolution {
    FourierForm eta;
    FourierForm harmonic;
};

LaplaceSolution laplace_solve(const FourierForm& w);

struct HodgeSplit {
    FourierForm d_part;     // d omega1, exact
    FourierForm delta_part; // delta omega2, co-exact
    FourierForm harmonic;   // frequency-0 part
    FourierForm omega1;     // potential, degree l-1 (zero harmonic gauge)
    FourierForm omega2;     // potential, degree l+1 (zero harmonic gauge)
};

/// w = d omega1 + delta omega2 + h with delta omega1 = 0, d omega2 = 0;
/// the three parts are L2-orthogonal and d/delta parts are unique.
HodgeSplit hodge_decompose(const FourierForm& w);

struct GaffneyReport {
    double gaffney_min = 0.0;  // (|w| + |dw| + |delta w|) / |w|_{1,2}
    double gaffney_max = 0.0;
    double poincare_min = 0.0; // |w|_{1,2} / (|dw| + |delta w|)
    double poincare_max = 0.0;
    int flagged_harmonic = 0;  // inputs rejected: nonzero harmonic part
};

/// Ratio scan across a corpus of mean-zero forms. Forms with a harmonic
/// component make the Poincare ratio meaningless and are counted in
/// `flagged_harmonic` instead of the ratios.
GaffneyReport gaffney_check(const std::vector<FourierForm>& corpus);

} // namespace hkit
