#pragma once
// Symmetric double well on (-pi/2a, pi/2a) with the central singular
// core: parity spectra in all cos-end regimes, plus the exceptional
// g_s = g_c line with its ordering anomaly.

#include "tpt/spectra.hpp"

namespace tpt {

enum class CosEndPoint { UVc, IRc };

struct ParitySpectra {
    std::vector<EnergyLevel> even;
    std::vector<EnergyLevel> odd;

    // merged, energy-ordered view with parity labels attached
    std::vector<EnergyLevel> merged() const;
};

struct OrderingReport {
    std::vector<Parity> order;     // parity sequence of the merged spectrum
    bool anomaly = false;          // true when it is not strict alternation
    std::vector<int> expected_nodes; // node counts per merged level
};

// closed forms at the conformal points of the cos end;
// even modes ride the A_{nu_s} = 0 sin-end branch, odd modes B = 0
ParitySpectra even_odd_closed(double nu_s, double nu_c, CosEndPoint point,
                              int n_max);

// weak-medium cos end with scale_term = epsilon (alpha L)^{2 nu_c}
ParitySpectra even_odd_scale(double nu_s, double nu_c, double scale_term,
                             const ScanConfig& cfg);

// exceptional line g_s = g_c, 0 < nu < 1; even sector uses the IR-type
// closed form, odd the UV-type; the 1/2 < nu < 1 window reorders
ParitySpectra exceptional_line(double nu, int n_max);
OrderingReport exceptional_ordering(double nu, int n_max);

// strong-attractive cos end: phase conditions for each parity
ParitySpectra even_odd_attractive(double nu_s, double nu_c_mag, double theta_c,
                                  const ScanConfig& cfg);

} // namespace tpt
