#include "tpt/eigenfn.hpp"

#include <algorithm>
#include <cmath>

namespace tpt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
const cplx I(0.0, 1.0);

cplx lg_pair2(int sn, int sc, cplx nus, cplx nuc, cplx k) {
    cplx base = 0.5 + 0.5 * double(sn) * nus + 0.5 * double(sc) * nuc;
    return log_gamma(base + 0.5 * k) + log_gamma(base - 0.5 * k);
}

} // namespace

BoundaryCoefficients coefficients_from_renorm(const PotentialSpec& spec,
                                              const RenormData& renorm,
                                              const EnergyPoint& e) {
    NuValue ns = nu_from_g(spec.g_s);
    const EndDatum& d = renorm.sin_end;
    BoundaryCoefficients bc;
    switch (d.kind) {
    case EndDatum::Kind::FixedPointUV:
        bc = {1.0, 0.0};
        break;
    case EndDatum::Kind::FixedPointIR:
        bc = {0.0, 1.0};
        break;
    case EndDatum::Kind::Scale:
        bc.A_s = 1.0;
        bc.B_s = d.scale_term(ns.magnitude, spec.alpha) *
                 std::pow(spec.alpha, -2.0 * ns.magnitude);
        break;
    case EndDatum::Kind::Phase: {
        // A/B = -alpha^{2i|nu|} e^{i theta}, rotated to make psi real
        cplx a = std::exp(I * (0.5 * d.theta + ns.magnitude * std::log(spec.alpha)));
        bc.A_s = a / (2.0 * I);
        bc.B_s = std::conj(bc.A_s);
        break;
    }
    case EndDatum::Kind::CriticalPair: {
        // A0/B0 = xi(k) + 1/D (energy dependent); D = 0 is the pure
        // power branch
        if (d.D == 0.0) { bc = {1.0, 0.0}; break; }
        NuValue nc = nu_from_g(spec.g_c);
        cplx k = e.k_over_alpha();
        cplx ap = 0.5 + 0.5 * I * nc.magnitude, am = std::conj(ap);
        double xi = kEulerGamma + 0.5 * (digamma(ap + 0.5 * k).real() +
                                         digamma(am + 0.5 * k).real());
        bc.A_s = xi + 1.0 / d.D;
        bc.B_s = 1.0;
        break;
    }
    }
    return bc;
}

std::pair<cplx, cplx> cos_end_coefficients(const PotentialSpec& spec,
                                           const BoundaryCoefficients& bc,
                                           const EnergyPoint& e) {
    NuValue nsv = nu_from_g(spec.g_s), ncv = nu_from_g(spec.g_c);
    if (nsv.kind == NuKind::Zero || ncv.kind == NuKind::Zero)
        throw regime_error("cos_end_coefficients: critical end handled separately");
    cplx ns = nsv.as_complex(), nc = ncv.as_complex(), k = e.k_over_alpha();
    double la = std::log(spec.alpha);
    cplx as = bc.A_s * std::exp(-ns * la), bs = bc.B_s * std::exp(ns * la);
    // a Gamma pole in the denominator pair kills the term (1/Gamma -> 0);
    // this is exactly how quantization zeroes a coefficient
    auto term = [&](cplx coeff, cplx num, int sn, int sc) -> cplx {
        if (coeff == 0.0) return 0.0;
        try {
            return coeff * std::exp(num - lg_pair2(sn, sc, ns, nc, k));
        } catch (const pole_error&) {
            return 0.0;
        }
    };
    cplx Ac = term(as, log_gamma(-nc) + log_gamma(1.0 + ns), +1, -1) +
              term(bs, log_gamma(-nc) + log_gamma(1.0 - ns), -1, -1);
    cplx Bc = term(as, log_gamma(nc) + log_gamma(1.0 + ns), +1, +1) +
              term(bs, log_gamma(nc) + log_gamma(1.0 - ns), -1, +1);
    return {Ac * std::exp(nc * la), Bc * std::exp(-nc * la)};
}

namespace {

// sin-end Frobenius branch: (tan)^{1/2+nu}(cos)^{-k/a} 2F1(.., -tan^2)
cplx sin_branch(cplx nu_lead, cplx nu_other, cplx k, double ax, double alpha) {
    double t2 = std::tan(ax) * std::tan(ax);
    cplx a = 0.5 + 0.5 * nu_lead - 0.5 * nu_other + 0.5 * k;
    cplx b = 0.5 + 0.5 * nu_lead + 0.5 * nu_other + 0.5 * k;
    cplx F = hyp2f1({a, b, 1.0 + nu_lead, -t2});
    cplx pre = std::exp((0.5 + nu_lead) * std::log(std::tan(ax)) -
                        k * std::log(std::cos(ax)) -
                        (0.5 + nu_lead) * std::log(alpha));
    return pre * F;
}

cplx cos_branch(cplx nu_lead, cplx nu_other, cplx k, double ax, double alpha) {
    // mirror image x -> pi/2a - x
    return sin_branch(nu_lead, nu_other, k, 0.5 * kPi - ax, alpha);
}

// critical sin end (nu_s = 0): regular + logarithmic pair
cplx critical_psi(const PotentialSpec& spec, const BoundaryCoefficients& bc,
                  const EnergyPoint& e, double x) {
    NuValue ncv = nu_from_g(spec.g_c);
    cplx k = e.k_over_alpha();
    double ax = spec.alpha * x;
    cplx common = std::sqrt(cplx(std::tan(ax) / spec.alpha));
    cplx braces;
    if (ncv.kind == NuKind::Imaginary) {
        cplx inc = I * ncv.magnitude;
        cplx a = 0.5 - 0.5 * inc + 0.5 * k, b = 0.5 + 0.5 * inc + 0.5 * k;
        double t2 = std::tan(ax) * std::tan(ax);
        cplx cospow = std::exp(-k * std::log(std::cos(ax)));
        braces = bc.A_s * cospow * hyp2f1({a, b, 1.0, -t2});
        if (std::abs(bc.B_s) > 0.0) {
            double z = std::sin(ax) * std::sin(ax);
            if (z >= 0.30) {
                double sec2 = 1.0 / (std::cos(ax) * std::cos(ax));
                cplx pre = std::exp(log_gamma(a) + log_gamma(b) -
                                    log_gamma(1.0 + k));
                cplx F = hyp2f1({a, b, 1.0 + k, sec2});
                braces += 0.5 * bc.B_s * (pre * cospow * F).real();
            } else {
                // leading log behaviour with the digamma constant
                cplx ap = 0.5 + 0.5 * I * ncv.magnitude, am = std::conj(ap);
                double xi = kEulerGamma +
                            0.5 * (digamma(ap + 0.5 * k).real() +
                                   digamma(am + 0.5 * k).real());
                braces += -bc.B_s * (xi + std::log(spec.alpha * x));
            }
        }
    } else {
        // nu_c >= 0: only the regular solution is admissible
        if (std::abs(bc.B_s) > 0.0)
            throw regime_error("critical psi: log branch only below the "
                               "cos-end stability threshold");
        cplx nc = ncv.as_complex();
        cplx a = 0.5 - 0.5 * nc + 0.5 * k, b = 0.5 + 0.5 * nc + 0.5 * k;
        double t2 = std::tan(ax) * std::tan(ax);
        braces = bc.A_s * std::exp(-k * std::log(std::cos(ax))) *
                 hyp2f1({a, b, 1.0, -t2});
    }
    return common * braces;
}

} // namespace

WaveSample psi_eval(const PotentialSpec& spec, const BoundaryCoefficients& bc,
                    const EnergyPoint& e, const std::vector<double>& grid,
                    const EndDatum* cos_datum) {
    NuValue nsv = nu_from_g(spec.g_s), ncv = nu_from_g(spec.g_c);
    const double top = kPi / (2.0 * spec.alpha);
    WaveSample ws;
    ws.x = grid;
    ws.psi.resize(grid.size());
    ws.mask_radius = 1e-5 / spec.alpha;

    bool critical = nsv.kind == NuKind::Zero;
    cplx ns = nsv.as_complex(), nc = ncv.as_complex(), k = e.k_over_alpha();
    cplx Ac, Bc;
    bool have_cos = false;

    for (size_t i = 0; i < grid.size(); ++i) {
        double x = grid[i];
        if (!(x > 0.0 && x < top))
            throw domain_error("psi_eval: grid point outside the open interval");
        cplx v;
        if (critical) {
            v = critical_psi(spec, bc, e, x);
        } else {
            double ax = spec.alpha * x;
            double z = std::sin(ax) * std::sin(ax);
            if (z <= 0.55) {
                v = 0.0;
                if (bc.A_s != 0.0)
                    v += bc.A_s * sin_branch(ns, nc, k, ax, spec.alpha);
                if (bc.B_s != 0.0)
                    v += bc.B_s * sin_branch(-ns, nc, k, ax, spec.alpha);
            } else {
                if (!have_cos) {
                    std::tie(Ac, Bc) = cos_end_coefficients(spec, bc, e);
                    if (cos_datum) {
                        if (cos_datum->kind == EndDatum::Kind::FixedPointUV)
                            Bc = 0.0;
                        else if (cos_datum->kind == EndDatum::Kind::FixedPointIR)
                            Ac = 0.0;
                    }
                    have_cos = true;
                }
                v = 0.0;
                if (Ac != 0.0) v += Ac * cos_branch(nc, ns, k, ax, spec.alpha);
                if (Bc != 0.0) v += Bc * cos_branch(-nc, ns, k, ax, spec.alpha);
            }
        }
        ws.psi[i] = v.real();
    }
    ws.node_count = node_count(ws);
    return ws;
}

int node_count(const WaveSample& sample) {
    double mx = 0.0;
    for (double v : sample.psi) mx = std::max(mx, std::abs(v));
    if (mx == 0.0) return 0;
    int count = 0, last = 0;
    for (double v : sample.psi) {
        if (std::abs(v) < 1e-9 * mx) continue;
        int s = v > 0 ? 1 : -1;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

WaveSample normalize(const PotentialSpec& spec, WaveSample sample) {
    const size_t n = sample.x.size();
    if (n < 3) throw domain_error("normalize: sample too small");
    // local growth exponents at the two ends flag non-normalizable tails;
    // only meaningful for real-nu power behaviour (imaginary nu ends keep
    // the integrable sqrt(u) envelope and just oscillate in log u)
    const double top = kPi / (2.0 * spec.alpha);
    auto exponent = [&](size_t i0, size_t i1, bool from_right) {
        double u0 = from_right ? top - sample.x[i0] : sample.x[i0];
        double u1 = from_right ? top - sample.x[i1] : sample.x[i1];
        double p0 = std::abs(sample.psi[i0]), p1 = std::abs(sample.psi[i1]);
        if (p0 == 0.0 || p1 == 0.0) return 0.0;
        return std::log(p1 / p0) / std::log(u1 / u0);
    };
    bool bad_s = nu_from_g(spec.g_s).kind == NuKind::RealPositive &&
                 exponent(0, 1, false) <= -0.5;
    bool bad_c = nu_from_g(spec.g_c).kind == NuKind::RealPositive &&
                 exponent(n - 1, n - 2, true) <= -0.5;
    if (bad_s || bad_c)
        throw domain_error("normalize: divergent norm (non-normalizable branch)");

    double s = 0.0;
    for (size_t i = 0; i + 1 < n; ++i) {
        double dx = sample.x[i + 1] - sample.x[i];
        s += 0.5 * dx * (sample.psi[i] * sample.psi[i] +
                         sample.psi[i + 1] * sample.psi[i + 1]);
    }
    if (!(s > 0.0)) throw domain_error("normalize: zero norm");
    double f = 1.0 / std::sqrt(s);
    for (double& v : sample.psi) v *= f;
    return sample;
}

std::vector<double> clustered_grid(const PotentialSpec& spec, double margin,
                                   int n) {
    const double top = kPi / (2.0 * spec.alpha);
    if (!(margin > 0.0 && 2.0 * margin < top))
        throw domain_error("clustered_grid: bad margin");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        double t = double(i) / (n - 1);
        g[i] = margin + (top - 2.0 * margin) * 0.5 * (1.0 - std::cos(kPi * t));
    }
    return g;
}

WaveSample mirror_extend(const WaveSample& half, Parity parity) {
    WaveSample full;
    full.mask_radius = half.mask_radius;
    for (size_t i = half.x.size(); i-- > 0;) {
        full.x.push_back(-half.x[i]);
        full.psi.push_back(parity == Parity::Even ? half.psi[i] : -half.psi[i]);
    }
    full.x.insert(full.x.end(), half.x.begin(), half.x.end());
    full.psi.insert(full.psi.end(), half.psi.begin(), half.psi.end());
    full.node_count = node_count(full);
    return full;
}

} // namespace tpt
