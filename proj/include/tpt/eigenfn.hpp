#pragma once
// Eigenfunction evaluation, boundary coefficients, node counting and
// L2 normalization.

#include "tpt/spectra.hpp"

namespace tpt {

struct BoundaryCoefficients {
    cplx A_s{1.0, 0.0}, B_s{0.0, 0.0};
};

struct WaveSample {
    std::vector<double> x;
    std::vector<double> psi;
    int node_count = 0;
    double mask_radius = 1e-5; // excluded core |distance to singularity|
};

// sin-end coefficients realizing the renormalization datum (unit scale)
BoundaryCoefficients coefficients_from_renorm(const PotentialSpec& spec,
                                              const RenormData& renorm,
                                              const EnergyPoint& e);

// cos-end coefficients (A_c, B_c) obtained from (A_s, B_s) through the
// endpoint connection (the linear map behind mobius_coeffs)
std::pair<cplx, cplx> cos_end_coefficients(const PotentialSpec& spec,
                                           const BoundaryCoefficients& bc,
                                           const EnergyPoint& e);

// evaluate psi on a grid strictly inside (0, pi/2a); switches between
// the sin-end and cos-end hypergeometric representations at the
// midpoint region.  When the cos-end datum is supplied, a fixed point
// there zeroes the forbidden branch exactly instead of relying on the
// root finder's residual cancellation.
WaveSample psi_eval(const PotentialSpec& spec, const BoundaryCoefficients& bc,
                    const EnergyPoint& e, const std::vector<double>& grid,
                    const EndDatum* cos_datum = nullptr);

// strict sign changes away from the masked cores and endpoints
int node_count(const WaveSample& sample);

// trapezoid L2 normalization over the sampled (unmasked) domain;
// throws on a norm that keeps growing under margin refinement
WaveSample normalize(const PotentialSpec& spec, WaveSample sample);

// cosine-clustered grid on (margin, pi/2a - margin)
std::vector<double> clustered_grid(const PotentialSpec& spec, double margin,
                                   int n);

// double-well extension: mirror an even or odd sample through x = 0
WaveSample mirror_extend(const WaveSample& half, Parity parity);

} // namespace tpt
