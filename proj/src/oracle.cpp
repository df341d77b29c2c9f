#include "tpt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace tpt {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

void RegulatedProblem::validate() const {
    if (!(spec.alpha > 0.0)) throw domain_error("regulated: alpha must be > 0");
    if (!(spec.alpha * R_s <= 1e-3 && spec.alpha * R_c <= 1e-3))
        throw domain_error("regulated: need alpha*R <= 1e-3");
    if (grid_n < 10000) throw domain_error("regulated: grid_n >= 10000");
    if (!(R_s > 0.0 && R_c > 0.0 && R_s + R_c < kPi / (2.0 * spec.alpha)))
        throw domain_error("regulated: cutoffs overlap");
}

double robin_value(const NuValue& nu, const EndDatum& datum, double alpha,
                   double R) {
    if (!(R > 0.0)) throw domain_error("robin_value: R must be > 0");
    const double lar = std::log(alpha * R);
    switch (datum.kind) {
    case EndDatum::Kind::FixedPointUV:
        if (!nu.is_real()) throw regime_error("robin_value: UV needs real nu");
        return 0.5 + nu.magnitude;
    case EndDatum::Kind::FixedPointIR:
        if (!nu.is_real()) throw regime_error("robin_value: IR needs real nu");
        return 0.5 - nu.magnitude;
    case EndDatum::Kind::Scale: {
        if (nu.kind != NuKind::RealPositive)
            throw regime_error("robin_value: Scale needs 0 < nu < 1");
        // t = (B/A) R^{-2nu}
        double t = datum.scale_term(nu.magnitude, alpha) *
                   std::pow(alpha * R, -2.0 * nu.magnitude);
        return 0.5 + nu.magnitude * (1.0 - t) / (1.0 + t);
    }
    case EndDatum::Kind::Phase: {
        if (nu.kind != NuKind::Imaginary)
            throw regime_error("robin_value: Phase needs imaginary nu");
        // psi_0 ~ u^{1/2} sin(|nu| ln(alpha u) + theta/2)
        double phase = nu.magnitude * lar + 0.5 * datum.theta;
        double dist = std::abs(std::remainder(phase, kPi));
        if (dist < 0.1)
            throw domain_error("robin_value: cutoff sits on a cotangent pole");
        return 0.5 + nu.magnitude / std::tan(phase);
    }
    case EndDatum::Kind::CriticalPair: {
        if (nu.kind != NuKind::Zero)
            throw regime_error("robin_value: CriticalPair needs nu = 0");
        // psi_0 ~ u^{1/2} (1 - D ln(alpha u))
        double den = 1.0 - datum.D * lar;
        if (std::abs(den) < 1e-3)
            throw domain_error("robin_value: cutoff sits on the log zero");
        return 0.5 - datum.D / den;
    }
    }
    throw domain_error("robin_value: unreachable");
}

double pick_cutoff(const NuValue& nu, const EndDatum& datum, double alpha) {
    double R = 1e-4 / alpha;
    for (int i = 0; i < 64; ++i) {
        try {
            (void)robin_value(nu, datum, alpha, R);
            return R;
        } catch (const domain_error&) {
            R *= 0.9; // step down deterministically until clear of the pole
        }
    }
    throw domain_error("pick_cutoff: no admissible cutoff found");
}

RegulatedProblem regulate(const PotentialSpec& spec, const RenormData& renorm,
                          int grid_n) {
    RegulatedProblem p;
    p.spec = spec;
    p.grid_n = grid_n;
    NuValue ns = nu_from_g(spec.g_s), nc = nu_from_g(spec.g_c);
    p.R_s = pick_cutoff(ns, renorm.sin_end, spec.alpha);
    p.R_c = pick_cutoff(nc, renorm.cos_end, spec.alpha);
    p.robin_s = robin_value(ns, renorm.sin_end, spec.alpha, p.R_s);
    p.robin_c = robin_value(nc, renorm.cos_end, spec.alpha, p.R_c);
    p.validate();
    return p;
}

namespace {

// Sturm count: number of eigenvalues of the symmetric tridiagonal
// (diag, off) strictly below lambda
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off,
                double lambda) {
    int count = 0;
    double d = 1.0;
    const double tiny = 1e-300;
    for (size_t i = 0; i < diag.size(); ++i) {
        double b2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
        d = diag[i] - lambda - b2 / d;
        if (d == 0.0) d = tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

// j-th (0-based) eigenvalue by bisection on the Sturm count
double sturm_eigenvalue(const std::vector<double>& diag,
                        const std::vector<double>& off, int j) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (size_t i = 0; i < diag.size(); ++i) {
        double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                   (i + 1 < diag.size() ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + std::abs(lo)); ++it) {
        double mid = 0.5 * (lo + hi);
        if (sturm_count(diag, off, mid) <= j) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

// lowest `count` eigenvalues at one grid resolution
std::vector<double> eigen_grid(const RegulatedProblem& p, int n, int count) {
    const double a = p.R_s;
    const double b = kPi / (2.0 * p.spec.alpha) - p.R_c;
    const double h = (b - a) / n;
    const double F_s = p.robin_s / p.R_s; // psi'/psi at the left edge
    const double F_c = p.robin_c / p.R_c; // wrt distance from the cos core
    std::vector<double> diag(n + 1), off(n);
    for (int i = 0; i <= n; ++i)
        diag[i] = 2.0 / (h * h) + potential_value(p.spec, a + i * h);
    // ghost elimination for the Robin rows, then the diag(1/sqrt2,..)
    // similarity that restores symmetry
    diag[0] += 2.0 * F_s / h;
    diag[n] += 2.0 * F_c / h;
    for (int i = 0; i < n; ++i) off[i] = -1.0 / (h * h);
    off[0] *= std::sqrt(2.0);
    off[n - 1] *= std::sqrt(2.0);

    std::vector<double> ev(count);
    int workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (int j = 0; j < count; ++j) ev[j] = sturm_eigenvalue(diag, off, j);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int j = w; j < count; j += workers)
                    ev[j] = sturm_eigenvalue(diag, off, j);
            });
        for (auto& t : pool) t.join();
    }
    return ev;
}

} // namespace

std::vector<EnergyLevel> eigen_low(const RegulatedProblem& problem, int count,
                                   double tol) {
    problem.validate();
    if (count < 1) throw domain_error("eigen_low: count must be >= 1");
    auto e1 = eigen_grid(problem, problem.grid_n, count);
    auto e2 = eigen_grid(problem, 2 * problem.grid_n, count);
    std::vector<EnergyLevel> out;
    const double a2 = problem.spec.alpha * problem.spec.alpha;
    for (int j = 0; j < count; ++j) {
        double e = (4.0 * e2[j] - e1[j]) / 3.0;
        double scale = std::max(std::abs(e), a2);
        if (std::abs(e2[j] - e1[j]) > tol * scale)
            throw domain_error("eigen_low: grid too coarse for level " +
                               std::to_string(j));
        EnergyLevel lv;
        lv.index = j;
        lv.point.sign = e >= 0.0 ? EnergySign::Positive : EnergySign::Negative;
        lv.point.magnitude = std::sqrt(std::abs(e)) / problem.spec.alpha;
        lv.threshold_flag = std::abs(e) < 1e-10 * a2;
        out.push_back(lv);
    }
    return out;
}

} // namespace tpt
