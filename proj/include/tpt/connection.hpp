#pragma once
// Connection coefficients between the two singular endpoints and the
// spectral residual functions whose zeros are the eigenvalues.
//
// Everything is assembled from log-gamma sums; phases come out as
// imaginary parts and get wrapped to [-pi, pi).  Magnitude ratios are
// exponentials of real-part differences, so nothing overflows at large
// |Im| arguments.

#include "tpt/model.hpp"

#include <vector>

namespace tpt {

struct ConnectionCoeffs {
    cplx m1, m2, m3, m4;
    cplx det() const { return m1 * m4 - m2 * m3; }
};

// The four Moebius coefficients relating alpha^{2nu_c} B_c/A_c to
// alpha^{2nu_s} B_s/A_s.  det = -nu_s/nu_c.
ConnectionCoeffs mobius_coeffs(const NuValue& nu_s, const NuValue& nu_c,
                               const EnergyPoint& e);

// Phase condition for sin-end strong-attractive against a conformal
// cos end (B_c = 0 forced): returns Theta1(k) in [-pi, pi).
// Eigenvalues solve Theta1(k) = theta_s.
double theta1(double nu_s_mag, double nu_c, const EnergyPoint& e);
// log |RHS| of the same condition; 0 up to rounding (unit modulus).
double theta1_abs_log(double nu_s_mag, double nu_c, const EnergyPoint& e);

// Phase condition with a weak-medium cos end carrying scale_term
// = epsilon (alpha L)^{2 nu_c}.  scale_term = 0 reduces to theta1.
double theta2(double nu_s_mag, double nu_c, double scale_term,
              const EnergyPoint& e);
double theta2_abs_log(double nu_s_mag, double nu_c, double scale_term,
                      const EnergyPoint& e);

// Doubly strong-attractive residual.  The defining condition is the
// unimodular equality e^{-i bar-theta} = e^{-i(Sigma - zeta2)} with
// sin Sigma = Im(M1 e^{i d-theta}) / |M2|; Sigma has two branches
// (asin and pi - asin), scanned separately.  Returns the wrapped phase
// difference, or NaN where |sin Sigma| >= 1 (no solution possible).
double green_residual(double nu_s_mag, double nu_c_mag, double theta_s,
                      double theta_c, const EnergyPoint& e, int branch);

// |M1|^2 - |M2|^2 + |nu_s|/|nu_c| diagnostic for the constraint that
// keeps |sin Sigma| < 1 (should be ~0 ... the constraint is exact).
double green_constraint_defect(double nu_s_mag, double nu_c_mag,
                               const EnergyPoint& e);

// The scale epsilon (alpha L_{nu_c})^{2 nu_c} implied by the sin-end
// boundary datum at energy e (real by conjugate pairing; the real part
// is returned).  This is the Moebius image of the sin-end ratio.
double weak_scale_ratio(const NuValue& nu_s, double nu_c,
                        const EndDatum& boundary_s, const EnergyPoint& e);

// Critical line g_s = -1/4 with a strong-attractive cos end: wrapped
// difference between theta_c and the phase of the discretizing
// constraint, parametrized by the log-slope datum D.  D = 0 routes to
// the pure-log (B0 = 0) branch.
double critical_residual(double nu_c_mag, double D, double theta_c,
                         const EnergyPoint& e);

// Gamma-pole positions of the real-nu ratio conditions on the positive
// energy axis: k/alpha where Gamma((1 + a)/2 - k/2a) hits a pole, for
// a in `offsets`, within (0, k_max].  (Imaginary-nu phase conditions
// have no real poles: their Gamma arguments never reach the real axis.)
std::vector<double> ratio_pole_lattice(const std::vector<double>& offsets,
                                       double k_max);

double wrap_phase(double t);

} // namespace tpt
