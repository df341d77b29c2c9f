#pragma once
// Complex special-function kernels: log-gamma, digamma, Gauss 2F1.
// Everything downstream builds phases out of log-gamma sums, so the
// contract here is: principal branch, ~1e-13 relative for |z| <= 50,
// loud errors at the poles instead of silent NaNs.

#include <complex>
#include <stdexcept>
#include <string>

namespace tpt {

using cplx = std::complex<double>;

class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, int terms, double last)
        : std::runtime_error(what + " (terms=" + std::to_string(terms) +
                             ", last=" + std::to_string(last) + ")"),
          terms_used(terms), last_term(last) {}
    int terms_used;
    double last_term;
};

class branch_error : public std::runtime_error {
public:
    explicit branch_error(const std::string& what) : std::runtime_error(what) {}
};

// Principal branch of log Gamma(z).  Throws pole_error at non-positive
// integers.
cplx log_gamma(cplx z);

inline cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

// psi(z) = d/dz log Gamma(z).
cplx digamma(cplx z);

struct Hyp2F1Params {
    cplx a, b, c;
    double z;   // real argument; branches below
};

// 2F1(a,b;c;z) for real z in the supported branches:
//   z in [0, ~0.95)          direct series
//   z < 0                    Pfaff map w = z/(z-1), needs w < ~0.95
//   z > 1                    connection through 1/z (b-a non-integer);
//                            value on the principal branch approached
//                            from Im z > 0 -- callers wanting a real
//                            eigenfunction take the real part.
cplx hyp2f1(const Hyp2F1Params& p);

} // namespace tpt
