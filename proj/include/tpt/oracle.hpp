#pragma once
// Independent finite-difference validator: the singular cores are cut
// off at radius R and replaced by the Robin boundary values they
// renormalize to; low-lying levels come from a symmetric tridiagonal
// discretization with Sturm bisection and two-grid Richardson.

#include "tpt/spectra.hpp"

namespace tpt {

struct RegulatedProblem {
    PotentialSpec spec;
    double R_s = 1e-4;  // cutoff at the sin end, alpha*R <= 1e-3
    double R_c = 1e-4;  // cutoff at the cos end
    double robin_s = 0; // R * psi'/psi at u = R_s (u = distance to core)
    double robin_c = 0;
    int grid_n = 40000;

    void validate() const;
};

// R * F(R), the k-independent Robin datum of one end.  Throws when R
// lands within 0.1 rad of a cotangent pole (imaginary nu) or on the
// log zero (critical); the caller perturbs R.
double robin_value(const NuValue& nu, const EndDatum& datum, double alpha,
                   double R);

// largest cutoff <= 1e-4/alpha whose phase stays >= 0.1 rad away from
// the nearest cotangent pole (deterministic; trivial for real nu)
double pick_cutoff(const NuValue& nu, const EndDatum& datum, double alpha);

// assemble a regulated problem from a renormalization datum
RegulatedProblem regulate(const PotentialSpec& spec, const RenormData& renorm,
                          int grid_n = 40000);

// lowest `count` eigenvalues as EnergyPoints (negative branch first,
// energy ascending); Richardson-extrapolated over grids n and 2n.
// Throws when the two grids disagree beyond `tol` (relative, on k or
// kappa).
std::vector<EnergyLevel> eigen_low(const RegulatedProblem& problem, int count,
                                   double tol = 1e-2);

} // namespace tpt
