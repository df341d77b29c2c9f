#include "tpt/doublewell.hpp"

#include <algorithm>
#include <cmath>

namespace tpt {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx I(0.0, 1.0);

void check_sin_weak(double nu_s) {
    if (!(nu_s > 0.0 && nu_s < 1.0))
        throw regime_error("double well: parity construction needs 0 < nu_s < 1");
}

EnergyLevel closed_level(int n, double k, Parity p) {
    EnergyLevel lv;
    lv.index = n;
    lv.point = {EnergySign::Positive, k};
    lv.parity = p;
    lv.threshold_flag = k == 0.0;
    return lv;
}

double energy_key(const EnergyLevel& lv) {
    double m = lv.point.magnitude;
    return lv.point.sign == EnergySign::Positive ? m * m : -m * m;
}

} // namespace

std::vector<EnergyLevel> ParitySpectra::merged() const {
    std::vector<EnergyLevel> all = even;
    all.insert(all.end(), odd.begin(), odd.end());
    std::stable_sort(all.begin(), all.end(), [](auto& a, auto& b) {
        return energy_key(a) < energy_key(b);
    });
    return all;
}

ParitySpectra even_odd_closed(double nu_s, double nu_c, CosEndPoint point,
                              int n_max) {
    check_sin_weak(nu_s);
    if (nu_c < 0.0) throw regime_error("even_odd_closed: nu_c must be real");
    ParitySpectra ps;
    for (int n = 0; n <= n_max; ++n) {
        double ke, ko;
        if (point == CosEndPoint::UVc) {
            ke = 2.0 * n + 1.0 - nu_s + nu_c;
            ko = 2.0 * n + 1.0 + nu_s + nu_c;
        } else {
            ke = (n == 0) ? std::abs(1.0 - nu_s - nu_c)
                          : 2.0 * n + 1.0 - nu_s - nu_c;
            ko = 2.0 * n + 1.0 + nu_s - nu_c;
        }
        ps.even.push_back(closed_level(n, ke, Parity::Even));
        ps.odd.push_back(closed_level(n, ko, Parity::Odd));
    }
    return ps;
}

ParitySpectra even_odd_scale(double nu_s, double nu_c, double scale_term,
                             const ScanConfig& cfg) {
    check_sin_weak(nu_s);
    if (!(nu_c > 0.0 && nu_c < 1.0))
        throw regime_error("even_odd_scale: needs 0 < nu_c < 1");
    cfg.validate();
    NuValue ns{NuKind::RealPositive, nu_s};

    auto scan = [&](const EndDatum& sin_datum, double pole_offset, Parity p) {
        auto res = [&, sin_datum](EnergySign sg) {
            return [&, sin_datum, sg](double m) {
                return weak_scale_ratio(ns, nu_c, sin_datum, {sg, m}) - scale_term;
            };
        };
        auto poles = ratio_pole_lattice({pole_offset}, cfg.window_max);
        auto pos = find_roots(res(EnergySign::Positive), cfg, cfg.window_min,
                              cfg.window_max, poles, 1e12);
        auto neg = find_roots(res(EnergySign::Negative), cfg, cfg.window_min,
                              cfg.kappa_cap, {}, 1e12);
        for (auto& lv : pos) { lv.parity = p; lv.point.sign = EnergySign::Positive; }
        for (auto& lv : neg) { lv.parity = p; lv.point.sign = EnergySign::Negative; }
        pos.insert(pos.end(), neg.begin(), neg.end());
        for (size_t i = 0; i < pos.size(); ++i) pos[i].index = int(i);
        return pos;
    };

    ParitySpectra ps;
    ps.even = scan(EndDatum::ir(), -nu_s - nu_c, Parity::Even);
    ps.odd = scan(EndDatum::uv(), nu_s - nu_c, Parity::Odd);
    return ps;
}

ParitySpectra exceptional_line(double nu, int n_max) {
    if (!(nu > 0.0 && nu < 1.0))
        throw domain_error("exceptional_line: needs 0 < nu < 1");
    ParitySpectra ps;
    for (int n = 0; n <= n_max; ++n) {
        double ke = (n == 0) ? std::abs(1.0 - 2.0 * nu) : 2.0 * n + 1.0 - 2.0 * nu;
        double ko = 2.0 * n + 1.0 + 2.0 * nu;
        ps.even.push_back(closed_level(n, ke, Parity::Even));
        ps.odd.push_back(closed_level(n, ko, Parity::Odd));
    }
    return ps;
}

OrderingReport exceptional_ordering(double nu, int n_max) {
    ParitySpectra ps = exceptional_line(nu, n_max);
    OrderingReport rep;
    auto all = ps.merged();
    for (auto& lv : all) rep.order.push_back(*lv.parity);
    for (size_t i = 0; i + 1 < rep.order.size(); ++i)
        if (rep.order[i] == rep.order[i + 1]) rep.anomaly = true;
    for (size_t i = 0; i < all.size(); ++i) {
        if (!rep.anomaly) {
            rep.expected_nodes.push_back(int(i));
        } else {
            // reordered window: psi_{2n} carries 2n-1 nodes, psi_{2n-1}
            // carries 2n (ground state keeps 0)
            if (i == 0) rep.expected_nodes.push_back(0);
            else if (i % 2 == 0) rep.expected_nodes.push_back(int(i) - 1);
            else rep.expected_nodes.push_back(int(i) + 1);
        }
    }
    return rep;
}

ParitySpectra even_odd_attractive(double nu_s, double nu_c_mag, double theta_c,
                                  const ScanConfig& cfg) {
    check_sin_weak(nu_s);
    if (!(nu_c_mag > 0.0))
        throw regime_error("even_odd_attractive: needs |nu_c| > 0");
    cfg.validate();

    // e^{-i theta_c} = -X(k) with X a unimodular Gamma ratio; the wrapped
    // residual is arg(-X) + theta_c
    auto residual = [&](int sgn) { // -1 even (A_{nu_s}=0), +1 odd
        return [=](const EnergyPoint& e) {
            cplx k = e.k_over_alpha();
            cplx inc = I * nu_c_mag;
            cplx base = 0.5 * (1.0 + double(sgn) * nu_s);
            cplx ph = log_gamma(inc) - log_gamma(-inc) +
                      log_gamma(base - 0.5 * inc + 0.5 * k) +
                      log_gamma(base - 0.5 * inc - 0.5 * k) -
                      log_gamma(base + 0.5 * inc + 0.5 * k) -
                      log_gamma(base + 0.5 * inc - 0.5 * k);
            return wrap_phase(kPi + ph.imag() + theta_c);
        };
    };
    auto scan = [&](int sgn, Parity p) {
        auto res = residual(sgn);
        auto on = [&res](EnergySign sg) {
            return [&res, sg](double m) { return res({sg, m}); };
        };
        auto pos = find_roots(on(EnergySign::Positive), cfg, cfg.window_min,
                              cfg.window_max);
        auto neg = find_roots(on(EnergySign::Negative), cfg, cfg.window_min,
                              cfg.kappa_cap);
        for (auto& lv : pos) { lv.parity = p; lv.point.sign = EnergySign::Positive; }
        for (auto& lv : neg) { lv.parity = p; lv.point.sign = EnergySign::Negative; }
        pos.insert(pos.end(), neg.begin(), neg.end());
        for (size_t i = 0; i < pos.size(); ++i) pos[i].index = int(i);
        return pos;
    };
    ParitySpectra ps;
    ps.even = scan(-1, Parity::Even);
    ps.odd = scan(+1, Parity::Odd);
    return ps;
}

} // namespace tpt
