#ifndef SQPL_LINDBLAD_HPP
#define SQPL_LINDBLAD_HPP

// Liouvillian construction, steady states, time propagation and two-time
// correlation functions.
//
// Density matrices are vectorized by column stacking, vec(rho)_{i + j*d} =
// rho_{ij}, so vec(A X B) = (B^T kron A) vec(X) and the Lindblad generator is
//   L = -i[(1 kron H) - (H^T kron 1)]
//       + sum_c [ conj(c) kron c - (1 kron c^dag c + (c^dag c)^T kron 1)/2 ].
// Trace preservation means vec(1) is a left null vector of L.

#include <functional>
#include <string>
#include <vector>

#include "sqpl/fock.hpp"
#include "sqpl/types.hpp"

namespace sqpl {

struct Superoperator {
    SpMat mat;               // d^2 x d^2
    int dim = 0;             // d
    std::string provenance;  // labels of H and collapse operators

    // max |vec(1)^T L| column residual; should be ~0 for any Lindblad form
    double trace_preservation_defect() const;
};

Superoperator liouvillian(const SpMat& h, const std::vector<SpMat>& collapse,
                          const std::string& provenance = "");

struct SteadyStateOptions {
    double residual_tol = 1e-10;
    bool check_uniqueness = true;
    double degenerate_tol = 1e-8;  // subdominant-magnitude estimate below this -> degenerate
    int power_iters = 12;
};

struct SteadyStateResult {
    DenseMat rho;
    double residual;       // max |L vec(rho)|
    double gap_estimate;   // magnitude of the subdominant eigenvalue of L (deflated inverse power)
};

SteadyStateResult steady_state(const Superoperator& lv, const SteadyStateOptions& opts = {});

struct IntegratorOptions {
    double rtol = 1e-8;
    double atol = 1e-12;
    double initial_dt = 1e-3;
    double max_dt = 1.0e3;
    long long max_steps = 200000000;
};

DenseMat propagate(const DenseMat& rho0, const Superoperator& lv, double t,
                   const IntegratorOptions& opts = {});

struct CorrelationSeries {
    std::vector<double> tau;
    std::vector<cxd> value;  // <A(tau) B(0)>
};

// Quantum regression: <A(tau)B(0)> = tr[A exp(L tau)(B rho_ss)].
CorrelationSeries two_time_corr(const SpMat& a_op, const SpMat& b_op, const DenseMat& rho_ss,
                                const Superoperator& lv, const std::vector<double>& tau_grid,
                                const IntegratorOptions& opts = {});

struct CutoffSearchOptions {
    int start = 16;
    int step = 8;
    int hard_cap = 256;
    int top_levels = 5;  // tail measured over this many topmost Fock levels
};

struct CutoffResult {
    FockCutoff cutoff;
    double tail;      // achieved top-level population
    int solves = 0;   // steady-state solves used
};

// Smallest n_max (stepping by `step`) whose steady state keeps the population
// of the top Fock levels below target_tail.  `build` maps a Hilbert space to
// the Liouvillian of the model under study.
CutoffResult choose_cutoff(const std::function<Superoperator(const HilbertSpace&)>& build,
                           double target_tail = 1e-6, const CutoffSearchOptions& opts = {});

double trace_distance(const DenseMat& rho, const DenseMat& sigma);

}  // namespace sqpl

#endif
