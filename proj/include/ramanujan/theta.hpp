#pragma once

#include <vector>

#include "ramanujan/exactnum.hpp"
#include "ramanujan/qseries.hpp"
#include "ramanujan/report.hpp"

namespace ramanujan {

struct ZeroTheta : std::domain_error {
    explicit ZeroTheta(const std::string& what) : std::domain_error(what) {}
};

/// Theta(chi;q) = sum_{n>=1} chi(n) n^{a_chi} q^{n^2}; the exponent rule is
/// always n -> n^2, recorded here with the producing character so the
/// coefficients can be recomputed from the table at any time.
struct ThetaSeries {
    CharacterSpec character;
    QSeries series;
};

ThetaSeries theta(const CharacterSpec& chi, int N);

/// D^t(Theta(chi;q)) = sum_{n>=1} chi(n) n^{2t+a_chi} q^{n^2}, built by direct
/// summation (not by iterating the operator).
QSeries theta_iterated_d(const CharacterSpec& chi, int t, int N);

/// Numerator sum_{n>=0} (-1)^n (2n+1)^{2t+1} q^{n(n+1)/2} and denominator
/// sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2} of the U quotient, by direct summation.
QSeries u_numerator(int t, int N);
QSeries u_denominator(int N);

/// Bilateral sums over all integers n with n(3n+1)/2 <= N for the V quotient.
QSeries v_numerator(int t, int N);
QSeries v_denominator(int N);

/// U_{2t} to order N as the exact quotient of the defining theta sums.
/// This is the brute-force oracle the trace formulas are tested against.
QSeries oracle_u(int t, int N);

/// V_{2t} to order N, same construction from the bilateral sums.
QSeries oracle_v(int t, int N);

/// R_{2t}(chi;q) = D^t(Theta)/Theta to order N. The common leading power of
/// q is divided out of both sides before inversion, so the quotient lives in
/// nonnegative powers. Throws ZeroTheta when Theta vanishes through order N.
QSeries r_series(const CharacterSpec& chi, int t, int N);

/// Checks eta(q^8)^3 = Theta(chi_-4;q) (Jacobi) and eta(q^24) = Theta(chi_12;q)
/// (pentagonal number theorem), both to order N.
std::vector<CheckReport> verify_classical_identities(int N);

}  // namespace ramanujan
