#pragma once
// Potential definition, order parameters, coupling-space classification
// and the SUSY structures (superpotential, partner shift).

#include "tpt/specfun.hpp"

#include <optional>
#include <stdexcept>

namespace tpt {

class regime_error : public std::runtime_error {
public:
    explicit regime_error(const std::string& what) : std::runtime_error(what) {}
};

class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct PotentialSpec {
    double alpha = 1.0; // inverse length, > 0
    double g_s = 0.0;
    double g_c = 0.0;
};

enum class NuKind { RealPositive, Zero, Imaginary };

struct NuValue {
    NuKind kind = NuKind::RealPositive;
    double magnitude = 0.5; // >= 0

    // nu as a complex number: real, 0, or i*magnitude
    cplx as_complex() const {
        switch (kind) {
        case NuKind::RealPositive: return {magnitude, 0.0};
        case NuKind::Zero: return {0.0, 0.0};
        default: return {0.0, magnitude};
        }
    }
    bool is_real() const { return kind != NuKind::Imaginary; }
};

enum class CouplingRegime {
    StrongRepulsive, // g >= 3/4
    WeakMedium,      // -1/4 < g < 3/4
    CriticalBF,      // g == -1/4
    StrongAttractive // g < -1/4
};

// nu = sqrt(1/4 + g), continued to i*sqrt(|g| - 1/4) below the
// stability threshold g = -1/4.
NuValue nu_from_g(double g);

CouplingRegime regime_of(double g);

inline std::pair<CouplingRegime, CouplingRegime> classify(const PotentialSpec& s) {
    return {regime_of(s.g_s), regime_of(s.g_c)};
}

// alpha^2 (g_s / sin^2(alpha x) + g_c / cos^2(alpha x)); open interval only
double potential_value(const PotentialSpec& s, double x);

// W(x) = -alpha (nu_s + 1/2) cot(alpha x) + alpha (nu_c + 1/2) tan(alpha x);
// requires both couplings above -1/4.
double superpotential_value(const PotentialSpec& s, double x);

// k0^2 = alpha^2 (nu_s + nu_c + 1)^2: the ground-state energy and
// the constant completing W^2 - W' + k0^2 = V.
double susy_ground_k2(const PotentialSpec& s);

// couplings shifted by nu -> nu + 1 at both ends
PotentialSpec susy_partner(const PotentialSpec& s);

// Per-endpoint renormalization datum.
struct EndDatum {
    enum class Kind {
        FixedPointUV,  // L = 0, B = 0
        FixedPointIR,  // L = infinity, A = 0
        Scale,         // weak-medium: epsilon (alpha L)^{2 nu}
        Phase,         // strong-attractive: theta in [-pi, pi)
        CriticalPair   // g = -1/4: (D, theta is unused here)
    };
    Kind kind = Kind::FixedPointUV;
    double L = 0.0;       // >= 0, Scale only
    int epsilon = 1;      // +-1, Scale only
    double theta = 0.0;   // radians, Phase only
    double D = 0.0;       // CriticalPair only

    static EndDatum uv() { return {Kind::FixedPointUV}; }
    static EndDatum ir() { return {Kind::FixedPointIR}; }
    static EndDatum scale(double L, int eps) {
        EndDatum d; d.kind = Kind::Scale; d.L = L; d.epsilon = eps; return d;
    }
    static EndDatum phase(double th) {
        EndDatum d; d.kind = Kind::Phase; d.theta = wrap_angle(th); return d;
    }
    static EndDatum critical(double D) {
        EndDatum d; d.kind = Kind::CriticalPair; d.D = D; return d;
    }

    // the single number epsilon (alpha L)^{2 nu} entering the equations
    double scale_term(double nu, double alpha) const;

    static double wrap_angle(double t);
};

struct RenormData {
    EndDatum sin_end;
    EndDatum cos_end;
};

// Is the datum variant allowed for the coupling regime?
bool datum_matches(const EndDatum& d, CouplingRegime r);

enum class EnergySign { Positive, Negative };

struct EnergyPoint {
    EnergySign sign = EnergySign::Positive;
    double magnitude = 1.0; // k/alpha for Positive, kappa/alpha for Negative

    // k/alpha as a complex number, k -> i kappa for negative energies
    cplx k_over_alpha() const {
        return sign == EnergySign::Positive ? cplx(magnitude, 0.0)
                                            : cplx(0.0, magnitude);
    }
};

} // namespace tpt
