#ifndef SQPL_MODEL_HPP
#define SQPL_MODEL_HPP

// Drive parameters -> Hamiltonians and collapse operators.
//
// The lab-frame interaction is
//   H = sum_i ( g_{i,b} a^dag sigma_i^+  +  g_{i,r} a sigma_i^+  + h.c. ),
// with complex couplings g = |g| e^{-i phi}.  Both sidebands resonant, no
// free term; gamma_1 = 1 sets the time unit.
//
// Squeezing convention (fixed here, used by every module):
//   S(r,theta) = exp[(r/2)(e^{-i theta} a^2 - e^{i theta} a^dag^2)]
// (squeeze_op), so that  S a S^dag = cosh(r) a + e^{i theta} sinh(r) a^dag.
// The model's effective lasing mode is
//   b = S^dag a S = cosh(r) a - e^{i theta} sinh(r) a^dag,
// and the reparameterized Hamiltonian is exactly the bare laser written in b:
//   H_reparam = g1 b^dag sigma_1^+ + g2 b sigma_2^+ + h.c.
// It follows that  S H_reparam S^dag = H_sq = g1 a^dag sigma_1^+ + g2 a sigma_2^+ + h.c.
// and the squeezed-frame state is rho_sq = S rho S^dag (b-moments of rho equal
// a-moments of rho_sq).  The spin dissipators commute with S, so the full
// Liouvillian conjugates the same way; solving in the squeezed frame and
// conjugating back is exact up to truncation.
//
// With this convention the phase extracted from the lab sidebands is
//   tanh(r) = |g_{1,r}/g_{1,b}| = |g_{2,b}/g_{2,r}|,
//   theta   = (phi_{1,r} - phi_{1,b}) + pi  =  (phi_{2,r} - phi_{2,b}) + pi   (mod 2 pi),
// and the drive matching condition reads
//   tanh(r) = g_d2/g_d1,   theta = -phi_1 - phi_2 + pi   (mod 2 pi).
// The pi offsets relative to the bare phase differences are what make the
// conjugation identity S H_reparam S^dag = H_sq hold with S as defined above;
// at theta = 0 the below-threshold dark state S^dag|0> is squeezed along the
// P quadrature, which puts the driven-state variance minima at phi_1 = pi/2
// and 3 pi/2.

#include <utility>
#include <vector>

#include "sqpl/fock.hpp"
#include "sqpl/types.hpp"

namespace sqpl {

struct SidebandCouplings {
    // magnitudes (units of gamma_1) and phases, per ion and sideband
    double g1b = 0, g1r = 0, g2b = 0, g2r = 0;
    double phi1b = 0, phi1r = 0, phi2b = 0, phi2r = 0;

    void validate() const;  // magnitudes >= 0, |g1r|<|g1b|, |g2b|<|g2r|
};

struct EffectiveParams {
    double g1 = 0;     // effective heating coupling
    double g2 = 0;     // effective cooling coupling
    double r = 0;      // squeezing amplitude
    double theta = 0;  // squeezing phase, in [0, 2 pi)

    void validate() const;
};

struct DecayRates {
    double gamma1 = 1.0;
    double gamma2 = 1.0;
    void validate() const;
};

struct DriveParams {
    double gd1 = 0, gd2 = 0;  // tone amplitudes
    double phi1 = 0, phi2 = 0;
    void validate() const;
};

// Map lab sideband couplings to (g1, g2, r, theta); throws RatioMismatchError /
// PhaseMismatchError when the two ions are inconsistent with a single (r, theta).
EffectiveParams effective_params(const SidebandCouplings& c, double tol = 1e-9);

// Inverse of effective_params up to the gauge freedom of the absorbed spin
// phases (phi1b = phi2r = 0).  Round-trips magnitudes exactly.
SidebandCouplings sideband_from_effective(const EffectiveParams& p);

// (r, theta) matched by a two-tone drive; throws when gd2 >= gd1.
std::pair<double, double> drive_matching(const DriveParams& d);

SpMat lab_hamiltonian(const SidebandCouplings& c, const HilbertSpace& space);
SpMat reparam_hamiltonian(const EffectiveParams& p, const HilbertSpace& space);
// Bare laser Hamiltonian g1 a^dag sigma_1^+ + g2 a sigma_2^+ + h.c. (the
// squeezed-frame image of reparam_hamiltonian).
SpMat squeezed_frame_hamiltonian(const EffectiveParams& p, const HilbertSpace& space);
SpMat drive_hamiltonian(const DriveParams& d, const HilbertSpace& space);
std::vector<SpMat> collapse_ops(const DecayRates& g, const HilbertSpace& space);

// The mode operator b = S^dag a S = cosh(r) a - e^{i theta} sinh(r) a^dag
// on the composite space (exact Bogoliubov combination, no truncation beyond
// the ladder operators themselves).
SpMat squeezed_mode_op(double r, double theta, const HilbertSpace& space);

// Pullback of a lab mode operator into the squeezed frame: S a S^dag as a
// sparse Bogoliubov combination, for evaluating lab observables on rho_sq.
SpMat frame_image_of_a(double r, double theta, const HilbertSpace& space);

// Amplitude eps of the drive in the squeezed frame: S H_d S^dag = eps a + eps^* a^dag.
cxd frame_drive_amplitude(const DriveParams& d, double r, double theta);
SpMat frame_drive_hamiltonian(const DriveParams& d, double r, double theta,
                              const HilbertSpace& space);

}  // namespace sqpl

#endif
