#include "sqpl/fock.hpp"

#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace sqpl {

SpMat mode_annihilation(int n) {
    SpMat a(n, n);
    a.reserve(Eigen::VectorXi::Constant(n, 1));
    for (int k = 1; k < n; ++k) a.insert(k - 1, k) = std::sqrt(double(k));
    a.makeCompressed();
    return a;
}

SpMat mode_parity(int n) {
    SpMat p(n, n);
    p.reserve(Eigen::VectorXi::Constant(n, 1));
    for (int k = 0; k < n; ++k) p.insert(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    p.makeCompressed();
    return p;
}

DenseMat mode_squeeze(double r, double theta, int n, int margin) {
    if (r < 0) throw Error("mode_squeeze: r must be >= 0");
    const int ne = n + margin;
    if (r == 0.0) return DenseMat::Identity(n, n);
    DenseMat a = DenseMat(mode_annihilation(ne));
    DenseMat gen = 0.5 * r *
        (std::exp(cxd(0, -theta)) * (a * a) - std::exp(cxd(0, theta)) * (a.adjoint() * a.adjoint()));
    DenseMat s_ext = gen.exp();
    DenseMat s = s_ext.topLeftCorner(n, n);
    const double defect = interior_unitarity_defect(s, n / 2);
    if (defect > 1e-6) {
        std::fprintf(stderr,
                     "sqpl warning: squeeze(r=%.3f) margin %d too small, interior unitarity defect %.2e\n",
                     r, margin, defect);
    }
    return s;
}

DenseMat mode_displacement(cxd alpha, int n, int margin) {
    const int ne = n + margin;
    if (alpha == cxd(0, 0)) return DenseMat::Identity(n, n);
    if (std::norm(alpha) > 0.25 * n) {
        std::fprintf(stderr,
                     "sqpl warning: displacement |alpha|^2=%.2f exceeds n_max/4=%.1f, truncation suspect\n",
                     std::norm(alpha), 0.25 * n);
    }
    DenseMat a = DenseMat(mode_annihilation(ne));
    DenseMat gen = alpha * a.adjoint() - std::conj(alpha) * a;
    DenseMat d_ext = gen.exp();
    return d_ext.topLeftCorner(n, n);
}

SpMat embed_mode(const SpMat& m, const HilbertSpace& space) {
    if (m.rows() != space.n_max() || m.cols() != space.n_max())
        throw DimensionMismatchError("embed_mode: operator does not match mode cutoff");
    SpMat id4(4, 4);
    id4.setIdentity();
    return Eigen::kroneckerProduct(id4, m).eval();
}

SpMat embed_mode(const DenseMat& m, const HilbertSpace& space) {
    return embed_mode(SpMat(m.sparseView()), space);
}

static SpMat embed_spin(const Eigen::Matrix2cd& m, const HilbertSpace& space, int ion) {
    const int n = space.n_max();
    SpMat idn(n, n);
    idn.setIdentity();
    SpMat id2(2, 2);
    id2.setIdentity();
    SpMat ms = m.sparseView();
    if (ion == 1) {
        SpMat tail = Eigen::kroneckerProduct(id2, idn).eval();
        return Eigen::kroneckerProduct(ms, tail).eval();
    }
    SpMat head = Eigen::kroneckerProduct(ms, idn).eval();
    return Eigen::kroneckerProduct(id2, head).eval();
}

SpMat identity_op(const HilbertSpace& space) {
    SpMat id(space.dim(), space.dim());
    id.setIdentity();
    return id;
}

SpMat annihilation_op(const HilbertSpace& space) {
    return embed_mode(mode_annihilation(space.n_max()), space);
}

SpinOps spin_ops(const HilbertSpace& space, int ion) {
    if (ion != 1 && ion != 2) throw Error("spin_ops: ion index must be 1 or 2");
    Eigen::Matrix2cd raise = Eigen::Matrix2cd::Zero();
    raise(1, 0) = 1.0;  // |e><g|
    Eigen::Matrix2cd lower = Eigen::Matrix2cd::Zero();
    lower(0, 1) = 1.0;
    Eigen::Matrix2cd sz = Eigen::Matrix2cd::Zero();
    sz(0, 0) = -1.0;
    sz(1, 1) = 1.0;
    return SpinOps{embed_spin(raise, space, ion), embed_spin(lower, space, ion),
                   embed_spin(sz, space, ion)};
}

SpMat squeeze_op(double r, double theta, const HilbertSpace& space) {
    return embed_mode(mode_squeeze(r, theta, space.n_max(), space.margin()), space);
}

SpMat displacement_op(cxd alpha, const HilbertSpace& space) {
    return embed_mode(mode_displacement(alpha, space.n_max(), space.margin()), space);
}

SpMat parity_op(const HilbertSpace& space) {
    return embed_mode(mode_parity(space.n_max()), space);
}

cxd expectation(const SpMat& op, const DenseMat& rho) {
    if (op.rows() != rho.rows() || op.cols() != rho.cols())
        throw DimensionMismatchError("expectation: operator/state dimension mismatch");
    // tr(op rho) = sum_{ij} op_{ij} rho_{ji}
    cxd tr = 0.0;
    for (int k = 0; k < op.outerSize(); ++k)
        for (SpMat::InnerIterator it(op, k); it; ++it) tr += it.value() * rho(it.col(), it.row());
    return tr;
}

cxd expectation(const DenseMat& op, const DenseMat& rho) {
    if (op.rows() != rho.rows() || op.cols() != rho.cols())
        throw DimensionMismatchError("expectation: operator/state dimension mismatch");
    return (op * rho).trace();
}

DenseMat basis_state(const HilbertSpace& space, int s1, int s2, int n) {
    DenseMat rho = DenseMat::Zero(space.dim(), space.dim());
    const int i = space.index(s1, s2, n);
    rho(i, i) = 1.0;
    return rho;
}

DenseMat vacuum_state(const HilbertSpace& space) { return basis_state(space, 0, 0, 0); }

Vec squeezed_vacuum_mode(double r, double theta, int n, int margin) {
    DenseMat s = mode_squeeze(r, theta, n, margin);
    Vec v0 = Vec::Zero(n);
    v0(0) = 1.0;
    Vec v = s.adjoint() * v0;
    v.normalize();  // projection from the enlarged space loses ~1e-12 of norm
    return v;
}

DenseMat squeezed_vacuum_state(double r, double theta, const HilbertSpace& space) {
    Vec vm = squeezed_vacuum_mode(r, theta, space.n_max(), space.margin());
    Vec full = Vec::Zero(space.dim());
    full.segment(0, space.n_max()) = vm;  // spins in |g,g>, block (0,0)
    return full * full.adjoint();
}

DenseMat reduce_to_mode(const DenseMat& rho, const HilbertSpace& space) {
    const int n = space.n_max();
    DenseMat out = DenseMat::Zero(n, n);
    for (int s = 0; s < 4; ++s) out += rho.block(s * n, s * n, n, n);
    return out;
}

DenseMat reduce_to_spins(const DenseMat& rho, const HilbertSpace& space) {
    const int n = space.n_max();
    DenseMat out = DenseMat::Zero(4, 4);
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) out(s, t) = rho.block(s * n, t * n, n, n).trace();
    return out;
}

double hermiticity_defect(const SpMat& m) {
    SpMat d = SpMat(m - SpMat(m.adjoint()));
    double mx = 0.0;
    for (int k = 0; k < d.outerSize(); ++k)
        for (SpMat::InnerIterator it(d, k); it; ++it) mx = std::max(mx, std::abs(it.value()));
    return mx;
}

double hermiticity_defect(const DenseMat& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

DensityCheck check_density(const DenseMat& rho) {
    DensityCheck c{};
    c.trace_error = std::abs(rho.trace() - cxd(1.0, 0.0));
    c.hermiticity = hermiticity_defect(rho);
    Eigen::SelfAdjointEigenSolver<DenseMat> es(0.5 * (rho + rho.adjoint()),
                                               Eigen::EigenvaluesOnly);
    c.min_eigenvalue = es.eigenvalues().minCoeff();
    c.ok = c.trace_error < 1e-9 && c.hermiticity < 1e-9 && c.min_eigenvalue > -1e-7;
    return c;
}

double interior_unitarity_defect(const DenseMat& u, int n_interior) {
    DenseMat g = u.adjoint() * u;
    DenseMat blk = g.topLeftCorner(n_interior, n_interior) -
                   DenseMat::Identity(n_interior, n_interior);
    return blk.cwiseAbs().maxCoeff();
}

}  // namespace sqpl
