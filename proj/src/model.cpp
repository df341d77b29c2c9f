#include "tpt/model.hpp"

#include <cmath>

namespace tpt {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kBF = -0.25;
constexpr double kBFTol = 1e-12;
} // namespace

NuValue nu_from_g(double g) {
    if (!std::isfinite(g)) throw domain_error("nu_from_g: g not finite");
    if (std::abs(g - kBF) < kBFTol) return {NuKind::Zero, 0.0};
    if (g > kBF) return {NuKind::RealPositive, std::sqrt(0.25 + g)};
    return {NuKind::Imaginary, std::sqrt(-g - 0.25)};
}

CouplingRegime regime_of(double g) {
    if (g >= 0.75) return CouplingRegime::StrongRepulsive;
    if (std::abs(g - kBF) < kBFTol) return CouplingRegime::CriticalBF;
    if (g > kBF) return CouplingRegime::WeakMedium;
    return CouplingRegime::StrongAttractive;
}

double potential_value(const PotentialSpec& s, double x) {
    const double top = kPi / (2.0 * s.alpha);
    if (!(x > 0.0 && x < top))
        throw domain_error("potential_value: x outside (0, pi/2a)");
    double sn = std::sin(s.alpha * x), cs = std::cos(s.alpha * x);
    return s.alpha * s.alpha * (s.g_s / (sn * sn) + s.g_c / (cs * cs));
}

double superpotential_value(const PotentialSpec& s, double x) {
    NuValue ns = nu_from_g(s.g_s), nc = nu_from_g(s.g_c);
    if (!ns.is_real() || !nc.is_real())
        throw regime_error("superpotential: needs g >= -1/4 at both ends");
    const double top = kPi / (2.0 * s.alpha);
    if (!(x > 0.0 && x < top))
        throw domain_error("superpotential: x outside (0, pi/2a)");
    double t = std::tan(s.alpha * x);
    return -s.alpha * (ns.magnitude + 0.5) / t + s.alpha * (nc.magnitude + 0.5) * t;
}

double susy_ground_k2(const PotentialSpec& s) {
    NuValue ns = nu_from_g(s.g_s), nc = nu_from_g(s.g_c);
    if (!ns.is_real() || !nc.is_real())
        throw regime_error("susy_ground_k2: needs g >= -1/4 at both ends");
    double m = ns.magnitude + nc.magnitude + 1.0;
    return s.alpha * s.alpha * m * m;
}

PotentialSpec susy_partner(const PotentialSpec& s) {
    NuValue ns = nu_from_g(s.g_s), nc = nu_from_g(s.g_c);
    if (!ns.is_real() || !nc.is_real())
        throw regime_error("susy_partner: needs g >= -1/4 at both ends");
    auto lift = [](double nu) { return (nu + 1.0) * (nu + 1.0) - 0.25; };
    return {s.alpha, lift(ns.magnitude), lift(nc.magnitude)};
}

double EndDatum::wrap_angle(double t) {
    double y = std::fmod(t + kPi, 2.0 * kPi);
    if (y < 0) y += 2.0 * kPi;
    return y - kPi;
}

double EndDatum::scale_term(double nu, double alpha) const {
    switch (kind) {
    case Kind::FixedPointUV: return 0.0;
    case Kind::Scale: return epsilon * std::pow(alpha * L, 2.0 * nu);
    default:
        throw regime_error("scale_term: datum has no finite scale");
    }
}

bool datum_matches(const EndDatum& d, CouplingRegime r) {
    switch (r) {
    case CouplingRegime::StrongRepulsive:
        return d.kind == EndDatum::Kind::FixedPointUV;
    case CouplingRegime::WeakMedium:
        return d.kind == EndDatum::Kind::FixedPointUV ||
               d.kind == EndDatum::Kind::FixedPointIR ||
               d.kind == EndDatum::Kind::Scale;
    case CouplingRegime::CriticalBF:
        return d.kind == EndDatum::Kind::CriticalPair ||
               d.kind == EndDatum::Kind::FixedPointUV;
    case CouplingRegime::StrongAttractive:
        return d.kind == EndDatum::Kind::Phase;
    }
    return false;
}

} // namespace tpt
