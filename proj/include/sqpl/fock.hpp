#ifndef SQPL_FOCK_HPP
#define SQPL_FOCK_HPP

// Truncated-Fock / two-level operator algebra on the composite space of the
// two-ion + one-mode system.
//
// Factor ordering is fixed once and for all as (ion 1, ion 2, mode) with
// basis index  idx(s1, s2, n) = (s1*2 + s2)*n_max + n,  where s = 0 is the
// internal ground state and s = 1 the excited state.  All operators returned
// by this module are built against that ordering.
//
// Unitaries generated by quadratic mode operators (squeeze, displacement)
// are constructed by dense matrix exponential at an enlarged cutoff
// n_max + margin and projected back to n_max, which keeps the edge artifacts
// of the truncated generator away from the physically used levels.

#include <vector>

#include "sqpl/types.hpp"

namespace sqpl {

struct FockCutoff {
    int n_max = 32;   // Fock levels |0> .. |n_max-1>
    int margin = -1;  // extra levels for unitary construction; <0 means n_max/2

    int effective_margin() const { return margin < 0 ? n_max / 2 : margin; }
    void validate() const {
        if (n_max < 4) throw Error("FockCutoff: n_max must be >= 4");
        if (margin >= 0 && margin < 0) throw Error("FockCutoff: margin must be >= 0");
    }
};

class HilbertSpace {
public:
    explicit HilbertSpace(int n_max, int margin = -1)
        : cutoff_{n_max, margin} {
        cutoff_.validate();
    }
    explicit HilbertSpace(FockCutoff c) : cutoff_(c) { cutoff_.validate(); }

    int n_max() const { return cutoff_.n_max; }
    int margin() const { return cutoff_.effective_margin(); }
    int dim() const { return 4 * cutoff_.n_max; }
    const FockCutoff& cutoff() const { return cutoff_; }

    // composite index of |s1, s2, n>
    int index(int s1, int s2, int n) const { return (s1 * 2 + s2) * n_max() + n; }

private:
    FockCutoff cutoff_;
};

struct SpinOps {
    SpMat raise;  // sigma^+
    SpMat lower;  // sigma^-
    SpMat sz;     // sigma_z = sigma^+ sigma^- - sigma^- sigma^+
};

// ---- mode-space building blocks (dimension n x n, mode factor only) ----

SpMat mode_annihilation(int n);
SpMat mode_parity(int n);
// S(r,theta) = exp[ (r/2)(e^{-i theta} a^2 - e^{i theta} a^dag^2) ],
// built at cutoff n + margin, projected back to n.
DenseMat mode_squeeze(double r, double theta, int n, int margin);
// D(alpha) = exp(alpha a^dag - alpha^* a), margin-and-project as above.
DenseMat mode_displacement(cxd alpha, int n, int margin);

// Embed an n_max x n_max mode-factor operator into the composite space.
SpMat embed_mode(const SpMat& m, const HilbertSpace& space);
SpMat embed_mode(const DenseMat& m, const HilbertSpace& space);

// ---- composite-space operators ----

SpMat identity_op(const HilbertSpace& space);
SpMat annihilation_op(const HilbertSpace& space);
SpinOps spin_ops(const HilbertSpace& space, int ion);  // ion in {1,2}
SpMat squeeze_op(double r, double theta, const HilbertSpace& space);
SpMat displacement_op(cxd alpha, const HilbertSpace& space);
SpMat parity_op(const HilbertSpace& space);

cxd expectation(const SpMat& op, const DenseMat& rho);
cxd expectation(const DenseMat& op, const DenseMat& rho);

// ---- states ----

DenseMat basis_state(const HilbertSpace& space, int s1, int s2, int n);
DenseMat vacuum_state(const HilbertSpace& space);  // |g,g,0><g,g,0|

// Mode-space squeezed vacuum: the state annihilated by the model's squeezed
// mode b(r,theta) (see model.hpp), i.e. S(r,theta)^dag |0>.
Vec squeezed_vacuum_mode(double r, double theta, int n, int margin);
// Same state embedded on the composite space with both ions in the ground state.
DenseMat squeezed_vacuum_state(double r, double theta, const HilbertSpace& space);

// ---- reductions / checks ----

DenseMat reduce_to_mode(const DenseMat& rho, const HilbertSpace& space);   // trace out spins
DenseMat reduce_to_spins(const DenseMat& rho, const HilbertSpace& space);  // trace out mode

double hermiticity_defect(const SpMat& m);
double hermiticity_defect(const DenseMat& m);

struct DensityCheck {
    double trace_error;
    double hermiticity;
    double min_eigenvalue;
    bool ok;
};
DensityCheck check_density(const DenseMat& rho);

// Unitarity defect of U restricted to the interior subspace n < n_interior
// (mode-space matrix): max |(U^dag U - 1)_{jk}| over the restricted block.
double interior_unitarity_defect(const DenseMat& u, int n_interior);

}  // namespace sqpl

#endif
