#include "tpt/connection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tpt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
const cplx I(0.0, 1.0);

// log Gamma(1/2 + sn*nus/2 + sc*nuc/2 + k/2) + (k -> -k), the pair that
// shows up in every coefficient
cplx lg_pair(int sn, int sc, cplx nus, cplx nuc, cplx k) {
    cplx base = 0.5 + 0.5 * double(sn) * nus + 0.5 * double(sc) * nuc;
    return log_gamma(base + 0.5 * k) + log_gamma(base - 0.5 * k);
}

} // namespace

double wrap_phase(double t) {
    double y = std::fmod(t + kPi, 2.0 * kPi);
    if (y < 0) y += 2.0 * kPi;
    return y - kPi;
}

ConnectionCoeffs mobius_coeffs(const NuValue& nu_s, const NuValue& nu_c,
                               const EnergyPoint& e) {
    if (nu_s.kind == NuKind::Zero)
        throw regime_error("mobius_coeffs: nu_s = 0 handled by the critical branch");
    cplx ns = nu_s.as_complex(), nc = nu_c.as_complex(), k = e.k_over_alpha();
    ConnectionCoeffs m;
    m.m1 = std::exp(log_gamma(nc) + log_gamma(1.0 - ns) - lg_pair(-1, +1, ns, nc, k));
    m.m2 = -std::exp(log_gamma(nc) + log_gamma(1.0 + ns) - lg_pair(+1, +1, ns, nc, k));
    m.m3 = -std::exp(log_gamma(-nc) + log_gamma(1.0 - ns) - lg_pair(-1, -1, ns, nc, k));
    m.m4 = std::exp(log_gamma(-nc) + log_gamma(1.0 + ns) - lg_pair(+1, -1, ns, nc, k));
    return m;
}

namespace {

// complex log of the Theta1 unimodular right-hand side
cplx theta1_log_rhs(double ns, double nuc, cplx k) {
    cplx ins = I * ns;
    return log_gamma(1.0 - ins) - log_gamma(1.0 + ins) +
           lg_pair(+1, +1, ins, nuc, k) - lg_pair(-1, +1, ins, nuc, k);
}

} // namespace

double theta1(double nu_s_mag, double nu_c, const EnergyPoint& e) {
    return wrap_phase(theta1_log_rhs(nu_s_mag, nu_c, e.k_over_alpha()).imag());
}

double theta1_abs_log(double nu_s_mag, double nu_c, const EnergyPoint& e) {
    return theta1_log_rhs(nu_s_mag, nu_c, e.k_over_alpha()).real();
}

namespace {

// N and D of the Theta2 condition, jointly rescaled so neither
// overflows; e^{i Theta2} = conj(N)/... -- Theta2 = -arg(N/D).
void theta2_parts(double ns, double nuc, double s, cplx k, cplx& N, cplx& D) {
    cplx ins = I * ns;
    auto G = [&](int sn, int sc) {
        return log_gamma(cplx(double(sc)) * nuc) +
               log_gamma(1.0 + double(sn) * ins) -
               lg_pair(sn, sc, ins, cplx(nuc), k);
    };
    cplx t1 = G(+1, -1), t2 = G(+1, +1), b1 = G(-1, -1), b2 = G(-1, +1);
    double m = std::max(std::max(t1.real(), t2.real()),
                        std::max(b1.real(), b2.real()));
    N = s * std::exp(t1 - m) + std::exp(t2 - m);
    D = s * std::exp(b1 - m) + std::exp(b2 - m);
    if (std::abs(N) < 1e-14 && std::abs(D) < 1e-14)
        throw pole_error("theta2: numerator and denominator both vanish");
}

} // namespace

double theta2(double nu_s_mag, double nu_c, double scale_term,
              const EnergyPoint& e) {
    cplx N, D;
    theta2_parts(nu_s_mag, nu_c, scale_term, e.k_over_alpha(), N, D);
    return wrap_phase(-std::arg(N / D));
}

double theta2_abs_log(double nu_s_mag, double nu_c, double scale_term,
                      const EnergyPoint& e) {
    cplx N, D;
    theta2_parts(nu_s_mag, nu_c, scale_term, e.k_over_alpha(), N, D);
    return std::log(std::abs(N / D));
}

double green_residual(double nu_s_mag, double nu_c_mag, double theta_s,
                      double theta_c, const EnergyPoint& e, int branch) {
    cplx ins = I * nu_s_mag, inc = I * nu_c_mag, k = e.k_over_alpha();
    cplx lM1 = log_gamma(inc) + log_gamma(1.0 - ins) - lg_pair(-1, +1, ins, inc, k);
    cplx lM2 = log_gamma(inc) + log_gamma(1.0 + ins) - lg_pair(+1, +1, ins, inc, k);
    double bar = 0.5 * (theta_c + theta_s), dth = 0.5 * (theta_c - theta_s);
    // M1 e^{i dth} / |M2|, computed in log space
    cplx m1 = std::exp(lM1 - lM2.real() + I * dth);
    double s = m1.imag();
    if (std::abs(s) >= 1.0)
        return std::numeric_limits<double>::quiet_NaN();
    double Sigma = (branch == 0) ? std::asin(s) : kPi - std::asin(s);
    return wrap_phase(Sigma - lM2.imag() - bar);
}

double green_constraint_defect(double nu_s_mag, double nu_c_mag,
                               const EnergyPoint& e) {
    NuValue ns{NuKind::Imaginary, nu_s_mag}, nc{NuKind::Imaginary, nu_c_mag};
    ConnectionCoeffs m = mobius_coeffs(ns, nc, e);
    return std::norm(m.m1) - std::norm(m.m2) + nu_s_mag / nu_c_mag;
}

double weak_scale_ratio(const NuValue& nu_s, double nu_c,
                        const EndDatum& boundary_s, const EnergyPoint& e) {
    cplx ns = nu_s.as_complex(), nc(nu_c), k = e.k_over_alpha();
    // numerator = Gamma(nu_c)  [e^{a1} r_s + e^{a2}]
    // denominator = Gamma(-nu_c)[e^{b1} r_s + e^{b2}]
    cplx a1 = log_gamma(1.0 - ns) - lg_pair(-1, +1, ns, nc, k);
    cplx a2 = log_gamma(1.0 + ns) - lg_pair(+1, +1, ns, nc, k);
    cplx b1 = log_gamma(1.0 - ns) - lg_pair(-1, -1, ns, nc, k);
    cplx b2 = log_gamma(1.0 + ns) - lg_pair(+1, -1, ns, nc, k);
    cplx pre = std::exp(log_gamma(nc) - log_gamma(-nc));
    cplx num, den;
    switch (boundary_s.kind) {
    case EndDatum::Kind::FixedPointUV: // r_s = 0
        num = std::exp(a2 - b2);
        den = 1.0;
        break;
    case EndDatum::Kind::FixedPointIR: // r_s -> infinity
        num = std::exp(a1 - b1);
        den = 1.0;
        break;
    default: {
        cplx rs;
        if (boundary_s.kind == EndDatum::Kind::Scale)
            rs = boundary_s.scale_term(nu_s.magnitude, 1.0);
        else if (boundary_s.kind == EndDatum::Kind::Phase)
            rs = -std::exp(-I * boundary_s.theta);
        else
            throw regime_error("weak_scale_ratio: unsupported sin-end datum");
        double m = std::max(std::max(a1.real(), a2.real()),
                            std::max(b1.real(), b2.real()));
        num = rs * std::exp(a1 - m) + std::exp(a2 - m);
        den = rs * std::exp(b1 - m) + std::exp(b2 - m);
        break;
    }
    }
    cplx r = pre * num / den;
    return r.real();
}

double critical_residual(double nu_c_mag, double D, double theta_c,
                         const EnergyPoint& e) {
    const double nc = nu_c_mag;
    cplx k = e.k_over_alpha();
    const cplx ap = 0.5 + 0.5 * I * nc;  // 1/2 + i|nu_c|/2
    const cplx am = 0.5 - 0.5 * I * nc;

    // X(k; sigma i|nu_c|) = Gamma(1/2 + sigma i nc/2 + k/2)/Gamma(1/2 - sigma i nc/2 + k/2)
    auto X = [&](int sigma, cplx kk) {
        cplx top = (sigma > 0 ? ap : am), bot = (sigma > 0 ? am : ap);
        return std::exp(log_gamma(top + 0.5 * kk) - log_gamma(bot + 0.5 * kk));
    };

    const double ePp = std::exp(0.5 * kPi * nc), ePm = std::exp(-0.5 * kPi * nc);

    cplx EX_p, EX_m, EX_p_star, EX_m_star; // E X(k;+), E X(k;-), and their "stars"
    double logscale; // common factor exp(logscale) removed from all four
    if (e.sign == EnergySign::Positive) {
        cplx E = std::exp(-0.5 * I * kPi * k); // unimodular
        EX_p = E * X(+1, k);
        EX_m = E * X(-1, k);
        EX_p_star = std::conj(EX_p);
        EX_m_star = std::conj(EX_m);
        logscale = 0.0;
    } else {
        // k = i kappa: substitute first, then conjugate.  E = e^{pi kappa/2}
        // is factored out of everything to keep magnitudes tame.
        double kap = e.magnitude;
        EX_p = X(+1, I * kap);
        EX_m = X(-1, I * kap);
        EX_p_star = X(-1, -I * kap);
        EX_m_star = X(+1, -I * kap);
        logscale = 0.5 * kPi * kap;
    }

    // xi(k;|nu_c|) = gamma_E + Re[psi(ap + k/2) + psi(am + k/2)]/2
    double xi = kEulerGamma + 0.5 * (digamma(ap + 0.5 * k).real() +
                                     digamma(am + 0.5 * k).real());

    // c P(+-) with the same factor exp(logscale) removed
    cplx Pm = std::exp(-log_gamma(am + 0.5 * k) - log_gamma(am - 0.5 * k) - logscale);
    cplx Pp = std::exp(-log_gamma(ap + 0.5 * k) - log_gamma(ap - 0.5 * k) - logscale);

    cplx N, Dd;
    const cplx quart = 1.0 / (4.0 * I);
    if (D == 0.0) {
        // pure-log boundary, B0 = 0: A0-only condition
        N = Pm;
        Dd = Pp;
    } else {
        double c = xi + 1.0 / D;
        N = c * Pm - quart * (ePp * EX_p - ePm * EX_m_star);
        Dd = c * Pp - quart * (ePp * EX_p_star - ePm * EX_m);
    }
    cplx rhs = -std::exp(log_gamma(-I * nc) - log_gamma(I * nc)) * N / Dd;
    return wrap_phase(std::arg(rhs) - theta_c);
}

std::vector<double> ratio_pole_lattice(const std::vector<double>& offsets,
                                       double k_max) {
    std::vector<double> poles;
    for (double a : offsets) {
        for (double k = 1.0 + a;; k += 2.0) {
            if (k > k_max) break;
            if (k > 0.0) poles.push_back(k);
        }
        // mirror branch: (1+a)/2 + k/2 = -m only reaches k > 0 when a < -1
        for (double k = -(1.0 + a); k > 0.0; k -= 2.0) {
            if (k <= k_max) poles.push_back(k);
        }
    }
    std::sort(poles.begin(), poles.end());
    return poles;
}

} // namespace tpt
