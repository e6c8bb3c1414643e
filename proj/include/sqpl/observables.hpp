#ifndef SQPL_OBSERVABLES_HPP
#define SQPL_OBSERVABLES_HPP

// Physical quantities reported by the simulator: phonon statistics, gain/loss
// expectations, linewidth, spectra, quadrature variances, Wigner functions and
// squeezed-frame moments.

#include <vector>

#include "sqpl/lindblad.hpp"
#include "sqpl/model.hpp"

namespace sqpl {

// Rate normalization of the gain/decay operators.  Adiabatic elimination of a
// resonantly coupled, decaying ion gives the phonon amplitude equation
// da/dt = (1/2)(G - K) a with G = -(4 g1^2/gamma_1) sigma_1z and
// K = -(4 g2^2/gamma_2) sigma_2z; the constant is validated against the
// fitted width of the quantum-regression spectrum in the gamma >> g regime.
inline constexpr double kGainLossCalibration = 4.0;

double mean_phonon(const DenseMat& rho, const HilbertSpace& space);
double g2_zero(const DenseMat& rho, const HilbertSpace& space);  // throws on vacuum

struct GainLoss {
    double gain;  // <G>
    double loss;  // <K>
};
GainLoss gain_loss_expect(const DenseMat& rho, const EffectiveParams& p, const DecayRates& g,
                          const HilbertSpace& space);

// Gamma = <K> - <G>; negative values occur above gain clamping and are the
// caller's cue that the adiabatic formula no longer bounds the actual width.
double linewidth(double gain, double loss);

struct SpectrumResult {
    RealVec omega;         // symmetric grid around 0, units of gamma_1
    RealVec s;             // spectral density
    double n_ss = 0;       // steady-state phonon number (= C(0))
    double gamma = 0;      // linewidth estimate attached to this spectrum
    bool truncated_window = false;
};

SpectrumResult lorentzian_spectrum(double n_ss, double gamma, const RealVec& omega);

struct SpectrumOptions {
    double tau_max = 400.0;
    int n_tau = 2048;
    double omega_max = 0.0;  // <= 0: choose 20x the estimated half width ... x2
    int n_omega = 801;
    double decay_threshold = 1e-3;  // |C(tau_max)|/|C(0)| above this -> truncated window
    IntegratorOptions integ{};
};

// Fourier transform of <a^dag(tau) a(0)> over the steady state, symmetrized by
// C(-tau) = C(tau)^*.  gamma is seeded by a log-linear fit of |C|; use
// analytics::fit_lorentzian for the refined spectral fit.
SpectrumResult spectrum_numeric(const DenseMat& rho_ss, const Superoperator& lv,
                                const HilbertSpace& space, const SpectrumOptions& opts = {});

// Var X_phi with X_phi = a e^{-i phi} + a^dag e^{i phi}; vacuum level is 1.
double quadrature_variance(const DenseMat& rho, double phi, const HilbertSpace& space);
// Same observable evaluated through the squeezed frame: the state is
// rho_sq = S rho S^dag and the operator is pulled back by S X_phi S^dag.
double quadrature_variance_pulled(const DenseMat& rho_sq, double phi, double r, double theta,
                                  const HilbertSpace& space);

struct WignerGrid {
    RealVec x;  // Re alpha
    RealVec p;  // Im alpha
    Eigen::MatrixXd w;  // w(i,j) = W(x_i + i p_j); real
    double riemann_sum = 0;
    bool coverage_ok = true;
};

// W(alpha) = (2/pi) Tr[rho_mode D(alpha) Pi D^dag(alpha)], normalized so that
// the integral over the complex plane is 1 and the vacuum peak is 2/pi.
WignerGrid wigner(const DenseMat& rho, const HilbertSpace& space, const RealVec& x,
                  const RealVec& p);
WignerGrid wigner_mode(const DenseMat& rho_mode, const RealVec& x, const RealVec& p);

struct FrameMoments {
    double n_b;  // <b^dag b>, the |alpha_s|^2 estimator
    cxd b;       // <b>
    cxd b2;      // <b^2>
};

// Moments of the squeezed mode b = S^dag a S, i.e. bare-mode moments of the
// frame state rho_sq = S rho S^dag, evaluated through the exact Bogoliubov
// combination.  Warns when rho carries weight near the Fock cutoff.
FrameMoments squeezed_frame_moments(const DenseMat& rho, double r, double theta,
                                    const HilbertSpace& space);

}  // namespace sqpl

#endif
