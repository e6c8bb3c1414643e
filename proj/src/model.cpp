#include "sqpl/model.hpp"

#include <cmath>

namespace sqpl {

void SidebandCouplings::validate() const {
    if (g1b < 0 || g1r < 0 || g2b < 0 || g2r < 0)
        throw Error("SidebandCouplings: magnitudes must be >= 0");
    if (!(g1r < g1b)) throw Error("SidebandCouplings: requires |g1r| < |g1b|");
    if (!(g2b < g2r)) throw Error("SidebandCouplings: requires |g2b| < |g2r|");
}

void EffectiveParams::validate() const {
    if (!(g1 > 0) || !(g2 > 0)) throw Error("EffectiveParams: g1, g2 must be > 0");
    if (r < 0) throw Error("EffectiveParams: r must be >= 0");
}

void DecayRates::validate() const {
    if (!(gamma1 > 0) || !(gamma2 > 0)) throw Error("DecayRates: rates must be > 0");
}

void DriveParams::validate() const {
    if (gd1 < 0 || gd2 < 0) throw Error("DriveParams: amplitudes must be >= 0");
}

EffectiveParams effective_params(const SidebandCouplings& c, double tol) {
    c.validate();
    const double ratio1 = c.g1r / c.g1b;
    const double ratio2 = c.g2b / c.g2r;
    const double scale = std::max(ratio1, ratio2);
    if (std::abs(ratio1 - ratio2) > tol * std::max(1.0, scale))
        throw RatioMismatchError("effective_params: |g1r/g1b| and |g2b/g2r| disagree, no single r");

    EffectiveParams p;
    p.r = std::atanh(ratio1);
    p.g1 = std::sqrt(c.g1b * c.g1b - c.g1r * c.g1r);
    p.g2 = std::sqrt(c.g2r * c.g2r - c.g2b * c.g2b);
    if (p.r > 0) {
        const double d1 = c.phi1r - c.phi1b;
        const double d2 = c.phi2r - c.phi2b;
        double mis = wrap_angle(d1 - d2);
        if (mis > PI) mis = 2.0 * PI - mis;
        if (mis > tol)
            throw PhaseMismatchError("effective_params: sideband phase differences disagree, no single theta");
        p.theta = wrap_angle(d1 + PI);
    } else {
        p.theta = 0.0;
    }
    return p;
}

SidebandCouplings sideband_from_effective(const EffectiveParams& p) {
    p.validate();
    SidebandCouplings c;
    c.g1b = p.g1 * std::cosh(p.r);
    c.g1r = p.g1 * std::sinh(p.r);
    c.g2r = p.g2 * std::cosh(p.r);
    c.g2b = p.g2 * std::sinh(p.r);
    c.phi1b = 0.0;
    c.phi2r = 0.0;
    c.phi1r = p.r > 0 ? wrap_angle(p.theta - PI) : 0.0;
    c.phi2b = p.r > 0 ? wrap_angle(PI - p.theta) : 0.0;
    return c;
}

std::pair<double, double> drive_matching(const DriveParams& d) {
    d.validate();
    if (!(d.gd2 < d.gd1))
        throw Error("drive_matching: requires gd2 < gd1 (tanh r < 1)");
    const double r = std::atanh(d.gd2 / d.gd1);
    const double theta = wrap_angle(-d.phi1 - d.phi2 + PI);
    return {r, theta};
}

static SpMat hermitize(const SpMat& half) {
    SpMat h = half;
    h += SpMat(half.adjoint());
    h.makeCompressed();
    return h;
}

SpMat lab_hamiltonian(const SidebandCouplings& c, const HilbertSpace& space) {
    const SpMat a = annihilation_op(space);
    const SpMat ad = SpMat(a.adjoint());
    const SpinOps s1 = spin_ops(space, 1);
    const SpinOps s2 = spin_ops(space, 2);
    auto g = [](double mag, double phi) { return mag * std::exp(cxd(0, -phi)); };
    SpMat half = SpMat(g(c.g1b, c.phi1b) * (ad * s1.raise) + g(c.g1r, c.phi1r) * (a * s1.raise) +
                       g(c.g2b, c.phi2b) * (ad * s2.raise) + g(c.g2r, c.phi2r) * (a * s2.raise));
    return hermitize(half);
}

SpMat reparam_hamiltonian(const EffectiveParams& p, const HilbertSpace& space) {
    const SpMat b = squeezed_mode_op(p.r, p.theta, space);
    const SpMat bd = SpMat(b.adjoint());
    const SpinOps s1 = spin_ops(space, 1);
    const SpinOps s2 = spin_ops(space, 2);
    SpMat half = SpMat(p.g1 * (bd * s1.raise) + p.g2 * (b * s2.raise));
    return hermitize(half);
}

SpMat squeezed_frame_hamiltonian(const EffectiveParams& p, const HilbertSpace& space) {
    const SpMat a = annihilation_op(space);
    const SpMat ad = SpMat(a.adjoint());
    const SpinOps s1 = spin_ops(space, 1);
    const SpinOps s2 = spin_ops(space, 2);
    SpMat half = SpMat(p.g1 * (ad * s1.raise) + p.g2 * (a * s2.raise));
    return hermitize(half);
}

SpMat drive_hamiltonian(const DriveParams& d, const HilbertSpace& space) {
    const SpMat a = annihilation_op(space);
    SpMat half = SpMat((d.gd1 * std::exp(cxd(0, d.phi1)) + d.gd2 * std::exp(cxd(0, d.phi2))) * a);
    return hermitize(half);
}

std::vector<SpMat> collapse_ops(const DecayRates& g, const HilbertSpace& space) {
    g.validate();
    const SpinOps s1 = spin_ops(space, 1);
    const SpinOps s2 = spin_ops(space, 2);
    return {SpMat(std::sqrt(g.gamma1) * s1.lower), SpMat(std::sqrt(g.gamma2) * s2.lower)};
}

SpMat squeezed_mode_op(double r, double theta, const HilbertSpace& space) {
    const SpMat a = annihilation_op(space);
    return SpMat(std::cosh(r) * a - std::sinh(r) * std::exp(cxd(0, theta)) * SpMat(a.adjoint()));
}

SpMat frame_image_of_a(double r, double theta, const HilbertSpace& space) {
    const SpMat a = annihilation_op(space);
    return SpMat(std::cosh(r) * a + std::sinh(r) * std::exp(cxd(0, theta)) * SpMat(a.adjoint()));
}

cxd frame_drive_amplitude(const DriveParams& d, double r, double theta) {
    // S H_d S^dag with a -> cosh(r) a + e^{i theta} sinh(r) a^dag collects to
    // eps a + eps^* a^dag with
    auto tone = [&](double gd, double phi) {
        return gd * (std::cosh(r) * std::exp(cxd(0, phi)) +
                     std::sinh(r) * std::exp(cxd(0, -theta - phi)));
    };
    return tone(d.gd1, d.phi1) + tone(d.gd2, d.phi2);
}

SpMat frame_drive_hamiltonian(const DriveParams& d, double r, double theta,
                              const HilbertSpace& space) {
    const SpMat a = annihilation_op(space);
    const cxd eps = frame_drive_amplitude(d, r, theta);
    return hermitize(SpMat(eps * a));
}

}  // namespace sqpl
