#include "sqpl/lindblad.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>

namespace sqpl {

double Superoperator::trace_preservation_defect() const {
    const int d = dim;
    Vec tr_vec = Vec::Zero(d * d);
    for (int k = 0; k < d; ++k) tr_vec(k + k * d) = 1.0;
    Vec res = mat.adjoint() * tr_vec;  // rows of L contracted with vec(1)
    return res.cwiseAbs().maxCoeff();
}

Superoperator liouvillian(const SpMat& h, const std::vector<SpMat>& collapse,
                          const std::string& provenance) {
    const int d = int(h.rows());
    if (h.cols() != d) throw DimensionMismatchError("liouvillian: H must be square");
    SpMat id(d, d);
    id.setIdentity();

    SpMat l = Eigen::kroneckerProduct(id, h).eval() * cxd(0, -1);
    l += Eigen::kroneckerProduct(SpMat(h.transpose()), id).eval() * cxd(0, 1);

    for (const auto& c : collapse) {
        if (c.rows() != d || c.cols() != d)
            throw DimensionMismatchError("liouvillian: collapse operator dimension mismatch");
        SpMat cdc = SpMat(c.adjoint() * c);
        l += Eigen::kroneckerProduct(SpMat(c.conjugate()), c).eval();
        l -= 0.5 * Eigen::kroneckerProduct(id, cdc).eval();
        l -= 0.5 * Eigen::kroneckerProduct(SpMat(cdc.transpose()), id).eval();
    }
    l.makeCompressed();
    Superoperator out;
    out.mat = std::move(l);
    out.dim = d;
    out.provenance = provenance;
    return out;
}

namespace {

// Bordered matrix: row 0 of L replaced by the trace functional.
SpMat bordered_matrix(const SpMat& l, int d) {
    std::vector<Eigen::Triplet<cxd>> trip;
    trip.reserve(l.nonZeros() + d);
    for (int k = 0; k < l.outerSize(); ++k)
        for (SpMat::InnerIterator it(l, k); it; ++it)
            if (it.row() != 0) trip.emplace_back(int(it.row()), int(it.col()), it.value());
    for (int k = 0; k < d; ++k) trip.emplace_back(0, k + k * d, cxd(1.0, 0.0));
    SpMat m(d * d, d * d);
    m.setFromTriplets(trip.begin(), trip.end());
    m.makeCompressed();
    return m;
}

double trace_component(const Vec& v, int d) {
    cxd tr = 0.0;
    for (int k = 0; k < d; ++k) tr += v(k + k * d);
    return std::abs(tr);
}

}  // namespace

SteadyStateResult steady_state(const Superoperator& lv, const SteadyStateOptions& opts) {
    const int d = lv.dim;
    const int n2 = d * d;
    SpMat m = bordered_matrix(lv.mat, d);

    Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(m);
    lu.factorize(m);
    if (lu.info() != Eigen::Success)
        throw SingularSteadyStateError("steady_state: factorization of the bordered Liouvillian failed");

    Vec rhs = Vec::Zero(n2);
    rhs(0) = 1.0;
    Vec x = lu.solve(rhs);

    DenseMat rho = Eigen::Map<DenseMat>(x.data(), d, d);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();

    Vec xh = Eigen::Map<Vec>(rho.data(), n2);
    const double residual = (lv.mat * xh).cwiseAbs().maxCoeff();
    if (residual > opts.residual_tol)
        throw SingularSteadyStateError("steady_state: residual " + std::to_string(residual) +
                                       " exceeds tolerance (kernel missing or degenerate)");

    double gap = std::numeric_limits<double>::quiet_NaN();
    if (opts.check_uniqueness) {
        // Deflated inverse power iteration with the bordered factorization:
        // on the trace-zero complement the bordered solve acts as L^{-1}, so
        // the growth rate of ||M^{-1} v|| estimates 1/|lambda_2|.
        std::mt19937 rng(12345);
        std::normal_distribution<double> nd;
        Vec v(n2);
        for (int k = 0; k < n2; ++k) v(k) = cxd(nd(rng), nd(rng));
        auto deflate = [&](Vec& w) {
            cxd tr = 0.0;
            for (int k = 0; k < d; ++k) tr += w(k + k * d);
            w -= tr * xh;  // xh has unit trace
        };
        deflate(v);
        v.normalize();
        double growth = 0.0;
        for (int it = 0; it < opts.power_iters; ++it) {
            Vec w = lu.solve(v);
            deflate(w);
            growth = w.norm();
            if (growth == 0.0) break;
            v = w / growth;
        }
        gap = growth > 0 ? 1.0 / growth : 0.0;
        if (gap < opts.degenerate_tol)
            throw SingularSteadyStateError(
                "steady_state: subdominant eigenvalue estimate " + std::to_string(gap) +
                " below degeneracy tolerance (kernel not unique)");
    }

    SteadyStateResult out;
    out.rho = std::move(rho);
    out.residual = residual;
    out.gap_estimate = gap;
    return out;
}

namespace {

// Dormand-Prince 5(4) with standard step-size control on vec(rho).
void dopri5(const SpMatRM& l, Vec& y, double t_end, const IntegratorOptions& opts) {
    static const double c2 = 1. / 5, c3 = 3. / 10, c4 = 4. / 5, c5 = 8. / 9;
    static const double a21 = 1. / 5;
    static const double a31 = 3. / 40, a32 = 9. / 40;
    static const double a41 = 44. / 45, a42 = -56. / 15, a43 = 32. / 9;
    static const double a51 = 19372. / 6561, a52 = -25360. / 2187, a53 = 64448. / 6561,
                        a54 = -212. / 729;
    static const double a61 = 9017. / 3168, a62 = -355. / 33, a63 = 46732. / 5247,
                        a64 = 49. / 176, a65 = -5103. / 18656;
    static const double b1 = 35. / 384, b3 = 500. / 1113, b4 = 125. / 192, b5 = -2187. / 6784,
                        b6 = 11. / 84;
    static const double e1 = 71. / 57600, e3 = -71. / 16695, e4 = 71. / 1920,
                        e5 = -17253. / 339200, e6 = 22. / 525, e7 = -1. / 40;

    double t = 0.0;
    double dt = std::min(opts.initial_dt, t_end);
    Vec k1 = l * y;
    long long steps = 0;
    while (t < t_end) {
        if (t + dt > t_end) dt = t_end - t;
        Vec k2 = l * Vec(y + dt * (a21 * k1));
        Vec k3 = l * Vec(y + dt * (a31 * k1 + a32 * k2));
        Vec k4 = l * Vec(y + dt * (a41 * k1 + a42 * k2 + a43 * k3));
        Vec k5 = l * Vec(y + dt * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        Vec k6 = l * Vec(y + dt * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        Vec y5 = y + dt * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        Vec k7 = l * y5;
        Vec err_v = dt * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double sc = opts.atol + opts.rtol * std::max(y.cwiseAbs().maxCoeff(),
                                                           y5.cwiseAbs().maxCoeff());
        const double err = err_v.cwiseAbs().maxCoeff() / sc;

        if (err <= 1.0) {
            t += dt;
            y.swap(y5);
            k1.swap(k7);  // FSAL
        }
        double fac = 0.9 * std::pow(err > 1e-30 ? err : 1e-30, -0.2);
        fac = std::min(5.0, std::max(0.2, fac));
        dt = std::min(dt * fac, opts.max_dt);
        if (dt < 1e-14 * std::max(1.0, t_end))
            throw IntegrationError("propagate: step size underflow at t=" + std::to_string(t));
        if (++steps > opts.max_steps)
            throw IntegrationError("propagate: step budget exhausted at t=" + std::to_string(t));
    }
}

}  // namespace

DenseMat propagate(const DenseMat& rho0, const Superoperator& lv, double t,
                   const IntegratorOptions& opts) {
    const int d = lv.dim;
    if (rho0.rows() != d || rho0.cols() != d)
        throw DimensionMismatchError("propagate: state dimension mismatch");
    if (t < 0) throw Error("propagate: t must be >= 0");
    if (t == 0) return rho0;
    SpMatRM lrm(lv.mat);
    Vec y = Eigen::Map<const Vec>(rho0.data(), d * d);
    dopri5(lrm, y, t, opts);
    return Eigen::Map<DenseMat>(y.data(), d, d);
}

CorrelationSeries two_time_corr(const SpMat& a_op, const SpMat& b_op, const DenseMat& rho_ss,
                                const Superoperator& lv, const std::vector<double>& tau_grid,
                                const IntegratorOptions& opts) {
    const int d = lv.dim;
    if (tau_grid.empty() || tau_grid.front() != 0.0)
        throw Error("two_time_corr: tau grid must start at 0");
    for (size_t i = 1; i < tau_grid.size(); ++i)
        if (tau_grid[i] <= tau_grid[i - 1]) throw Error("two_time_corr: tau grid must increase");

    DenseMat x = b_op * rho_ss;
    Vec y = Eigen::Map<Vec>(x.data(), d * d);
    SpMatRM lrm(lv.mat);

    CorrelationSeries cs;
    cs.tau = tau_grid;
    cs.value.resize(tau_grid.size());
    auto record = [&](size_t i) {
        DenseMat xt = Eigen::Map<DenseMat>(y.data(), d, d);
        cs.value[i] = expectation(a_op, xt);
    };
    record(0);
    for (size_t i = 1; i < tau_grid.size(); ++i) {
        dopri5(lrm, y, tau_grid[i] - tau_grid[i - 1], opts);
        record(i);
    }
    return cs;
}

CutoffResult choose_cutoff(const std::function<Superoperator(const HilbertSpace&)>& build,
                           double target_tail, const CutoffSearchOptions& opts) {
    if (!(target_tail > 0 && target_tail < 1))
        throw Error("choose_cutoff: target_tail must lie in (0,1)");
    CutoffResult res;
    for (int n = opts.start; n <= opts.hard_cap; n += opts.step) {
        HilbertSpace space(n);
        Superoperator lv = build(space);
        SteadyStateOptions sopts;
        sopts.check_uniqueness = false;  // the final caller re-solves with full checks
        SteadyStateResult ss = steady_state(lv, sopts);
        ++res.solves;
        DenseMat mode = reduce_to_mode(ss.rho, space);
        double tail = 0.0;
        for (int k = std::max(0, n - opts.top_levels); k < n; ++k) tail += mode(k, k).real();
        if (tail < target_tail) {
            res.cutoff = FockCutoff{n, -1};
            res.tail = tail;
            return res;
        }
    }
    throw CutoffSearchError("choose_cutoff: no cutoff below hard cap " +
                            std::to_string(opts.hard_cap) + " meets the tail target");
}

double trace_distance(const DenseMat& rho, const DenseMat& sigma) {
    DenseMat diff = 0.5 * (rho - sigma + (rho - sigma).adjoint());
    Eigen::SelfAdjointEigenSolver<DenseMat> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace sqpl
