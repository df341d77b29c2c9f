#pragma once
// Root-finding engine over energy and the regime dispatcher for the
// single well on (0, pi/2a).

#include "tpt/connection.hpp"

#include <functional>
#include <optional>
#include <string>

namespace tpt {

enum class Parity { Even, Odd };

struct EnergyLevel {
    int index = 0;
    EnergyPoint point;
    std::optional<Parity> parity;
    double residual_at_root = 0.0;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    bool threshold_flag = false; // root at (or pushed against) k = 0
};

struct ScanConfig {
    double window_min = 1e-3;
    double window_max = 20.0;   // positive-branch upper edge (k/alpha)
    double grid_step = 1e-3;    // uniform step up to k = 20
    double bisect_tol = 1e-10;
    double kappa_cap = 500.0;   // negative-branch upper edge

    void validate() const;
};

// One scan: every sign change of `f` between adjacent non-pole grid
// points is refined by bisection.  Grid: uniform `grid_step` up to 20,
// then geometric with ratio 1.0005.  Sign changes whose values jump by
// more than `jump_threshold` (wrap discontinuities, log poles) are
// discarded, as are brackets within 2*step of a listed pole.
std::vector<EnergyLevel> find_roots(const std::function<double(double)>& f,
                                    const ScanConfig& cfg, double lo, double hi,
                                    const std::vector<double>& poles = {},
                                    double jump_threshold = 1.0);

struct EfimovEntry {
    double ratio;        // kappa_{n+1} / kappa_n
    double predicted;    // nearest e^{pi/|nu|}-type value
    std::string label;   // which prediction was nearest
    double deviation;
};

struct SpectrumReport {
    std::vector<EnergyLevel> levels;        // ordered by energy
    std::vector<EfimovEntry> efimov_ratios; // from the negative branch
    std::pair<CouplingRegime, CouplingRegime> regime;
    RenormData renorm;

    std::vector<double> negative_kappas() const; // ascending
    std::vector<double> positive_ks() const;     // ascending
};

// k_n/alpha = nu_s + nu_c + 2n + 1 (both ends conformal UV)
std::vector<EnergyLevel> susy_spectrum(double nu_s, double nu_c, int n_max);

// dispatch on the coupling regimes; renorm data must match
SpectrumReport solve_spectrum(const PotentialSpec& spec, const RenormData& renorm,
                              const ScanConfig& cfg);

std::vector<EfimovEntry> efimov_diagnostics(const std::vector<double>& kappas,
                                            const NuValue& nu_s,
                                            const NuValue& nu_c);

// number of worker threads (TPT_THREADS env var, default hw concurrency)
int thread_budget();

} // namespace tpt
