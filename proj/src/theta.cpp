#include "ramanujan/theta.hpp"

#include <stdexcept>
#include <string>

namespace ramanujan {

namespace {

void check_order(int N, const char* who) {
    if (N < 0) throw std::invalid_argument(std::string(who) + ": negative order");
}

}  // namespace

ThetaSeries theta(const CharacterSpec& chi, int N) {
    return {chi, theta_iterated_d(chi, 0, N)};
}

QSeries theta_iterated_d(const CharacterSpec& chi, int t, int N) {
    check_order(N, "theta_iterated_d");
    if (t < 0) throw std::invalid_argument("theta_iterated_d: negative t");
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    const unsigned e = static_cast<unsigned>(2 * t + chi.a_chi());
    for (long n = 1; n * n <= N; ++n) {
        const Rational& v = chi(n);
        if (v == 0) continue;
        c[static_cast<size_t>(n * n)] += v * Rational(int_pow(Integer(n), e));
    }
    return QSeries(std::move(c));
}

QSeries u_numerator(int t, int N) {
    check_order(N, "u_numerator");
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (long n = 0; n * (n + 1) / 2 <= N; ++n) {
        const Integer term = int_pow(Integer(2 * n + 1), static_cast<unsigned>(2 * t + 1));
        c[static_cast<size_t>(n * (n + 1) / 2)] += Rational(n % 2 == 0 ? term : -term);
    }
    return QSeries(std::move(c));
}

QSeries u_denominator(int N) { return u_numerator(0, N); }

namespace {

// Adds (-1)^n (6n+1)^{2t} q^{n(3n+1)/2} for one signed index n if the
// exponent fits; returns whether it did.
bool add_v_term(std::vector<Rational>& c, long n, int t, int N) {
    const long e = n * (3 * n + 1) / 2;
    if (e < 0 || e > N) return false;
    const Integer base = Integer(6 * n + 1);
    Integer term = int_pow(base, static_cast<unsigned>(2 * t));
    const bool negative = ((n % 2) + 2) % 2 == 1;
    c[static_cast<size_t>(e)] += Rational(negative ? -term : term);
    return true;
}

}  // namespace

QSeries v_numerator(int t, int N) {
    check_order(N, "v_numerator");
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    add_v_term(c, 0, t, N);
    for (long n = 1;; ++n) {
        const bool pos = add_v_term(c, n, t, N);
        const bool neg = add_v_term(c, -n, t, N);
        if (!pos && !neg) break;
    }
    return QSeries(std::move(c));
}

QSeries v_denominator(int N) { return v_numerator(0, N); }

QSeries oracle_u(int t, int N) {
    if (t < 0) throw std::invalid_argument("oracle_u: negative t");
    return u_numerator(t, N) * invert(u_denominator(N));
}

QSeries oracle_v(int t, int N) {
    if (t < 0) throw std::invalid_argument("oracle_v: negative t");
    return v_numerator(t, N) * invert(v_denominator(N));
}

QSeries r_series(const CharacterSpec& chi, int t, int N) {
    check_order(N, "r_series");
    if (t < 0) throw std::invalid_argument("r_series: negative t");
    const int v = theta_iterated_d(chi, 0, N).valuation();
    if (v < 0)
        throw ZeroTheta("r_series: Theta(" + chi.name() + ") vanishes through order " +
                        std::to_string(N));
    // Rebuild both sums at order N+v so the quotient is exact through q^N.
    const QSeries den = theta_iterated_d(chi, 0, N + v).shifted_down(v);
    const QSeries num = theta_iterated_d(chi, t, N + v).shifted_down(v);
    return num * invert(den);
}

namespace {

CheckReport identity_report(const std::string& name, const QSeries& lhs, const QSeries& rhs,
                            int N) {
    CheckReport r{name, true, -1, N, ""};
    for (int i = 0; i <= N; ++i) {
        if (lhs[i] != rhs[i]) {
            r.passed = false;
            r.detail = "first discrepancy at q^" + std::to_string(i) + ": lhs=" +
                       lhs[i].get_str() + ", rhs=" + rhs[i].get_str();
            return r;
        }
    }
    r.detail = "identical through q^" + std::to_string(N);
    return r;
}

}  // namespace

std::vector<CheckReport> verify_classical_identities(int N) {
    check_order(N, "verify_classical_identities");
    return {
        identity_report("eta(q^8)^3 = Theta(chi_-4)", eta_power(8, 3, N),
                        theta(CharacterSpec::chi_minus4(), N).series, N),
        identity_report("eta(q^24) = Theta(chi_12)", eta_power(24, 1, N),
                        theta(CharacterSpec::chi_12(), N).series, N),
    };
}

}  // namespace ramanujan
