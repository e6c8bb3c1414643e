#include "sqpl/observables.hpp"

#include <cmath>
#include <cstdio>

namespace sqpl {

double mean_phonon(const DenseMat& rho, const HilbertSpace& space) {
    const SpMat a = annihilation_op(space);
    const SpMat n = SpMat(SpMat(a.adjoint()) * a);
    const cxd v = expectation(n, rho);
    return v.real();
}

double g2_zero(const DenseMat& rho, const HilbertSpace& space) {
    const SpMat a = annihilation_op(space);
    const SpMat ad = SpMat(a.adjoint());
    const double n = expectation(SpMat(ad * a), rho).real();
    if (n <= 1e-12) throw Error("g2_zero: undefined for vacuum (zero mean phonon number)");
    const double n4 = expectation(SpMat(ad * SpMat(ad * SpMat(a * a))), rho).real();
    return n4 / (n * n);
}

GainLoss gain_loss_expect(const DenseMat& rho, const EffectiveParams& p, const DecayRates& g,
                          const HilbertSpace& space) {
    const SpinOps s1 = spin_ops(space, 1);
    const SpinOps s2 = spin_ops(space, 2);
    const double sz1 = expectation(s1.sz, rho).real();
    const double sz2 = expectation(s2.sz, rho).real();
    GainLoss gl;
    gl.gain = -kGainLossCalibration * p.g1 * p.g1 / g.gamma1 * sz1;
    gl.loss = -kGainLossCalibration * p.g2 * p.g2 / g.gamma2 * sz2;
    return gl;
}

double linewidth(double gain, double loss) { return loss - gain; }

SpectrumResult lorentzian_spectrum(double n_ss, double gamma, const RealVec& omega) {
    if (!(gamma > 0)) throw Error("lorentzian_spectrum: gamma must be > 0");
    SpectrumResult res;
    res.omega = omega;
    res.s.resize(omega.size());
    for (int k = 0; k < omega.size(); ++k)
        res.s(k) = n_ss / (omega(k) * omega(k) + 0.25 * gamma * gamma);
    res.n_ss = n_ss;
    res.gamma = gamma;
    return res;
}

SpectrumResult spectrum_numeric(const DenseMat& rho_ss, const Superoperator& lv,
                                const HilbertSpace& space, const SpectrumOptions& opts) {
    const SpMat a = annihilation_op(space);
    const SpMat ad = SpMat(a.adjoint());

    std::vector<double> tau(opts.n_tau);
    const double dtau = opts.tau_max / (opts.n_tau - 1);
    for (int j = 0; j < opts.n_tau; ++j) tau[j] = j * dtau;

    CorrelationSeries cs = two_time_corr(ad, a, rho_ss, lv, tau, opts.integ);

    SpectrumResult res;
    res.n_ss = cs.value.front().real();
    const double c0 = std::abs(cs.value.front());
    const double ctail = std::abs(cs.value.back());
    if (c0 > 0 && ctail > opts.decay_threshold * c0) {
        res.truncated_window = true;
        std::fprintf(stderr,
                     "sqpl warning: correlation window truncated, |C(tau_max)|/|C(0)| = %.2e\n",
                     ctail / c0);
    }

    // seed linewidth from the decay of |C| over the outer half of the window
    double gamma_est = 0.0;
    {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int cnt = 0;
        for (int j = opts.n_tau / 4; j < opts.n_tau; ++j) {
            const double c = std::abs(cs.value[j]);
            if (c < 1e-14 * c0) break;
            const double y = std::log(c);
            sx += tau[j];
            sy += y;
            sxx += tau[j] * tau[j];
            sxy += tau[j] * y;
            ++cnt;
        }
        if (cnt >= 2) {
            const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
            gamma_est = std::max(0.0, -2.0 * slope);
        }
    }
    res.gamma = gamma_est;

    double omega_max = opts.omega_max;
    if (omega_max <= 0) {
        const double half = gamma_est > 0 ? 0.5 * gamma_est : 2.0 * PI / opts.tau_max;
        omega_max = std::max(40.0 * half, 20.0 * PI / opts.tau_max);
    }
    const int nw = opts.n_omega | 1;  // odd, so 0 is on the grid
    res.omega.resize(nw);
    res.s.resize(nw);
    for (int k = 0; k < nw; ++k) {
        const double w = -omega_max + 2.0 * omega_max * k / (nw - 1);
        res.omega(k) = w;
        // S(w) = 2 Re int_0^inf C(tau) e^{i w tau} dtau (trapezoid rule)
        cxd acc = 0.5 * cs.value.front();
        for (int j = 1; j < opts.n_tau - 1; ++j)
            acc += cs.value[j] * std::exp(cxd(0, w * tau[j]));
        acc += 0.5 * cs.value.back() * std::exp(cxd(0, w * opts.tau_max));
        res.s(k) = 2.0 * (acc * dtau).real();
    }
    return res;
}

double quadrature_variance(const DenseMat& rho, double phi, const HilbertSpace& space) {
    const SpMat a = annihilation_op(space);
    const SpMat x = SpMat(std::exp(cxd(0, -phi)) * a + std::exp(cxd(0, phi)) * SpMat(a.adjoint()));
    const cxd m1 = expectation(x, rho);
    const cxd m2 = expectation(SpMat(x * x), rho);
    return (m2 - m1 * m1).real();
}

double quadrature_variance_pulled(const DenseMat& rho_sq, double phi, double r, double theta,
                                  const HilbertSpace& space) {
    const SpMat ap = frame_image_of_a(r, theta, space);  // S a S^dag
    const SpMat x = SpMat(std::exp(cxd(0, -phi)) * ap + std::exp(cxd(0, phi)) * SpMat(ap.adjoint()));
    const cxd m1 = expectation(x, rho_sq);
    const cxd m2 = expectation(SpMat(x * x), rho_sq);
    return (m2 - m1 * m1).real();
}

WignerGrid wigner_mode(const DenseMat& rho_mode, const RealVec& x, const RealVec& p) {
    const int m = int(rho_mode.rows());
    WignerGrid grid;
    grid.x = x;
    grid.p = p;
    grid.w.resize(x.size(), p.size());

    // Displaced-parity evaluation through the stable two-index recurrence over
    // the matrix elements of |m><n| Wigner kernels; everything carries the
    // Gaussian damping so no intermediate overflows.
    std::vector<double> sq(m);
    for (int k = 0; k < m; ++k) sq[k] = std::sqrt(double(k));

    std::vector<cxd> wl(m);
    for (int ix = 0; ix < x.size(); ++ix) {
        for (int ip = 0; ip < p.size(); ++ip) {
            const cxd alpha(x(ix), p(ip));
            wl[0] = std::exp(-2.0 * std::norm(alpha)) / PI;
            double wsum = rho_mode(0, 0).real() * wl[0].real();
            for (int n = 1; n < m; ++n) {
                wl[n] = (2.0 * alpha * wl[n - 1]) / sq[n];
                wsum += 2.0 * (rho_mode(0, n) * wl[n]).real();
            }
            for (int row = 1; row < m; ++row) {
                cxd temp = wl[row];
                wl[row] = (2.0 * std::conj(alpha) * temp - sq[row] * wl[row - 1]) / sq[row];
                wsum += (rho_mode(row, row) * wl[row]).real();
                for (int n = row + 1; n < m; ++n) {
                    const cxd t2 = (2.0 * alpha * wl[n - 1] - sq[row] * temp) / std::sqrt(double(n - row));
                    temp = wl[n];
                    wl[n] = t2;
                    wsum += 2.0 * (rho_mode(row, n) * wl[n]).real();
                }
            }
            grid.w(ix, ip) = 2.0 * wsum;
        }
    }

    if (x.size() > 1 && p.size() > 1) {
        const double dx = x(1) - x(0);
        const double dp = p(1) - p(0);
        grid.riemann_sum = grid.w.sum() * dx * dp;
    }
    grid.coverage_ok = grid.riemann_sum > 0.99;
    if (!grid.coverage_ok)
        std::fprintf(stderr, "sqpl warning: wigner grid captures only %.4f of the state\n",
                     grid.riemann_sum);
    return grid;
}

WignerGrid wigner(const DenseMat& rho, const HilbertSpace& space, const RealVec& x,
                  const RealVec& p) {
    return wigner_mode(reduce_to_mode(rho, space), x, p);
}

FrameMoments squeezed_frame_moments(const DenseMat& rho, double r, double theta,
                                    const HilbertSpace& space) {
    const int n = space.n_max();
    DenseMat mode = reduce_to_mode(rho, space);
    double edge = 0.0;
    for (int k = std::max(0, n - 3); k < n; ++k) edge += mode(k, k).real();
    if (edge > 1e-6)
        std::fprintf(stderr,
                     "sqpl warning: squeezed_frame_moments sees %.2e population near cutoff\n",
                     edge);

    const SpMat b = squeezed_mode_op(r, theta, space);
    const SpMat bd = SpMat(b.adjoint());
    FrameMoments fm;
    fm.n_b = expectation(SpMat(bd * b), rho).real();
    fm.b = expectation(b, rho);
    fm.b2 = expectation(SpMat(b * b), rho);
    return fm;
}

}  // namespace sqpl
