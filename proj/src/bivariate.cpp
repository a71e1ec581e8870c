#include "ramanujan/bivariate.hpp"

#include <stdexcept>
#include <string>

#include "ramanujan/quasimodular.hpp"
#include "ramanujan/theta.hpp"

namespace ramanujan {

XSeries::XSeries(int xorder, int qorder) {
    if (xorder < 0) throw std::invalid_argument("XSeries: negative xorder");
    xc_.assign(static_cast<size_t>(xorder) + 1, QSeries(qorder));
}

XSeries::XSeries(std::vector<QSeries> xcoeffs) : xc_(std::move(xcoeffs)) {
    if (xc_.empty()) throw std::invalid_argument("XSeries: no coefficients");
    for (const auto& c : xc_)
        if (c.order() != xc_.front().order())
            throw std::invalid_argument("XSeries: mixed q-orders");
}

XSeries XSeries::from_qseries(const QSeries& a, int xorder) {
    XSeries r(xorder, a.order());
    r.xc_[0] = a;
    return r;
}

void XSeries::set_coeff(int k, QSeries c) {
    if (c.order() != qorder())
        throw std::invalid_argument("XSeries::set_coeff: q-order mismatch");
    xc_.at(static_cast<size_t>(k)) = std::move(c);
}

XSeries& XSeries::operator+=(const XSeries& rhs) { return *this = *this + rhs; }
XSeries& XSeries::operator-=(const XSeries& rhs) { return *this = *this - rhs; }

namespace {

XSeries combine(const XSeries& a, const XSeries& b, int sign) {
    const int M = std::min(a.xorder(), b.xorder());
    const int N = std::min(a.qorder(), b.qorder());
    std::vector<QSeries> c;
    c.reserve(static_cast<size_t>(M) + 1);
    for (int k = 0; k <= M; ++k) {
        QSeries s = sign > 0 ? a.coeff(k).truncated(N) + b.coeff(k).truncated(N)
                             : a.coeff(k).truncated(N) - b.coeff(k).truncated(N);
        c.push_back(std::move(s));
    }
    return XSeries(std::move(c));
}

}  // namespace

XSeries operator+(const XSeries& a, const XSeries& b) { return combine(a, b, +1); }
XSeries operator-(const XSeries& a, const XSeries& b) { return combine(a, b, -1); }

XSeries x_mul(const XSeries& a, const XSeries& b) {
    const int M = std::min(a.xorder(), b.xorder());
    const int N = std::min(a.qorder(), b.qorder());
    XSeries r(M, N);
    for (int i = 0; i <= M; ++i) {
        if (a.coeff(i).is_zero()) continue;
        const QSeries ai = a.coeff(i).truncated(N);
        for (int j = 0; i + j <= M; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + ai * b.coeff(j).truncated(N));
        }
    }
    return r;
}

XSeries operator*(const QSeries& c, const XSeries& a) {
    const int N = std::min(c.order(), a.qorder());
    XSeries r(a.xorder(), N);
    const QSeries cc = c.truncated(N);
    for (int k = 0; k <= a.xorder(); ++k) {
        if (a.coeff(k).is_zero()) continue;
        r.set_coeff(k, cc * a.coeff(k).truncated(N));
    }
    return r;
}

XSeries operator*(const Rational& c, const XSeries& a) {
    XSeries r = a;
    for (int k = 0; k <= a.xorder(); ++k) r.set_coeff(k, c * a.coeff(k));
    return r;
}

bool operator==(const XSeries& a, const XSeries& b) {
    if (a.xorder() != b.xorder() || a.qorder() != b.qorder()) return false;
    for (int k = 0; k <= a.xorder(); ++k)
        if (!(a.coeff(k) == b.coeff(k))) return false;
    return true;
}

XSeries x_exp(const XSeries& a) {
    if (!a.coeff(0).is_zero())
        throw NonzeroConstant("x_exp: nonzero X^0 coefficient");
    const int M = a.xorder();
    XSeries r = XSeries::from_qseries(QSeries::constant(1, a.qorder()), M);
    XSeries term = r;
    for (int k = 1; k <= M; ++k) {
        term = x_mul(term, a);
        bool vanished = true;
        for (int i = 0; i <= M && vanished; ++i) vanished = term.coeff(i).is_zero();
        if (vanished) break;  // a^k has X-valuation k*val(a) > M from here on
        r += frac(Integer(1), factorial(static_cast<unsigned>(k))) * term;
    }
    return r;
}

XSeries trig(Trig kind, long n, int xorder, int qorder) {
    XSeries r(xorder, qorder);
    const int start = kind == Trig::sin ? 1 : 0;
    for (int k = start; k <= xorder; k += 2) {
        // X^k coefficient: (-1)^{k/2 (cos) or (k-1)/2 (sin)} n^k / k!
        const int half = kind == Trig::sin ? (k - 1) / 2 : k / 2;
        Integer nk = int_pow(Integer(n), static_cast<unsigned>(k));
        if (half % 2 == 1) nk = -nk;
        r.set_coeff(k, QSeries::constant(frac(nk, factorial(static_cast<unsigned>(k))), qorder));
    }
    return r;
}

namespace {

Rational sign_t(int t) { return Rational(t % 2 == 0 ? 1 : -1); }

// (S / den) with the common leading power of q divided out of both sides;
// every X-coefficient of S must vanish below the valuation of den. The
// result's q-order drops by that valuation.
XSeries divide_xseries(const XSeries& S, const QSeries& den) {
    const int v = den.valuation();
    if (v < 0) throw std::domain_error("divide_xseries: zero denominator");
    const QSeries inv = invert(den.shifted_down(v));
    XSeries r(S.xorder(), S.qorder() - v);
    for (int k = 0; k <= S.xorder(); ++k)
        r.set_coeff(k, S.coeff(k).shifted_down(v) * inv);
    return r;
}

CheckReport compare_xseries(std::string name, const XSeries& lhs, const XSeries& rhs, int M,
                            int N) {
    CheckReport rep{std::move(name), true, M, N, ""};
    for (int k = 0; k <= M; ++k) {
        for (int i = 0; i <= N; ++i) {
            if (lhs.coeff(k)[i] != rhs.coeff(k)[i]) {
                rep.passed = false;
                rep.detail = "first discrepancy at X^" + std::to_string(k) + " q^" +
                             std::to_string(i) + ": lhs=" + lhs.coeff(k)[i].get_str() +
                             ", rhs=" + rhs.coeff(k)[i].get_str();
                return rep;
            }
        }
    }
    rep.detail = "identical through X^" + std::to_string(M) + ", q^" + std::to_string(N);
    return rep;
}

void check_orders(int M, int N, const char* who) {
    if (M < 0 || N < 0)
        throw std::invalid_argument(std::string(who) + ": negative truncation order");
}

// sum over n >= 1 of chi(n) * scale(n) * q^{exponent(n)} * trig(kind, n),
// for all n with a nonzero character value and exponent(n) <= qorder.
template <typename ExpFn, typename ScaleFn>
XSeries character_trig_sum(const CharacterSpec& chi, Trig kind, ExpFn exponent, ScaleFn scale,
                           int xorder, int qorder) {
    XSeries S(xorder, qorder);
    for (long n = 1; exponent(n) <= qorder; ++n) {
        const Rational& cv = chi(n);
        if (cv == 0) continue;
        const Rational c = cv * scale(n);
        S += QSeries::monomial(c, static_cast<int>(exponent(n)), qorder) *
             trig(kind, n, xorder, qorder);
    }
    return S;
}

}  // namespace

CheckReport check_genfun(Series s, int M, int N) {
    check_orders(M, N, "check_genfun");
    const bool isU = s == Series::U;
    const int rescale = isU ? 8 : 24;

    // Alternating exponential sum of the oracle series, in the rescaled variable.
    XSeries lhs(M, N);
    for (int t = 0; (isU ? 2 * t + 1 : 2 * t) <= M; ++t) {
        const int xpow = isU ? 2 * t + 1 : 2 * t;
        const Rational c =
            sign_t(t) / Rational(factorial(static_cast<unsigned>(xpow)));
        lhs.set_coeff(xpow, c * substitute_power(isU ? oracle_u(t, N) : oracle_v(t, N),
                                                 rescale, N));
    }

    // Theta-times-trig sum over the eta power, built one q-order higher so the
    // leading-power cancellation still yields full order N.
    const CharacterSpec& chi = isU ? CharacterSpec::chi_minus4() : CharacterSpec::chi_12();
    const XSeries sum = character_trig_sum(
        chi, isU ? Trig::sin : Trig::cos, [](long n) { return n * n; },
        [](long) { return Rational(1); }, M, N + 1);
    const QSeries eta = isU ? eta_power(8, 3, N + 1) : eta_power(24, 1, N + 1);
    const XSeries rhs = divide_xseries(sum, eta);

    return compare_xseries(std::string("genfun ") + series_name(s), lhs, rhs, M, N);
}

CheckReport check_lemma_genfun(const CharacterSpec& chi, int M, int N) {
    check_orders(M, N, "check_lemma_genfun");
    XSeries lhs(M, N);
    for (int t = 0; 2 * t + 1 <= M; ++t) {
        const Rational c =
            sign_t(t) / Rational(factorial(static_cast<unsigned>(2 * t + 1)));
        lhs.set_coeff(2 * t + 1, c * r_series(chi, t, N));
    }

    const QSeries th0 = theta_iterated_d(chi, 0, N);
    const int v = th0.valuation();
    if (v < 0)
        throw ZeroTheta("check_lemma_genfun: Theta(" + chi.name() +
                        ") vanishes through order " + std::to_string(N));
    const bool odd = chi.parity() == Parity::odd;
    const XSeries sum = character_trig_sum(
        chi, Trig::sin, [](long n) { return n * n; },
        [odd](long n) { return odd ? Rational(1) : frac(1, n); }, M, N + v);
    const XSeries rhs = divide_xseries(sum, theta_iterated_d(chi, 0, N + v));

    return compare_xseries("lemma genfun " + chi.name(), lhs, rhs, M, N);
}

CheckReport check_jacobi_products(int part, int M, int N) {
    check_orders(M, N, "check_jacobi_products");
    if (part != 1 && part != 2)
        throw std::invalid_argument("check_jacobi_products: part must be 1 or 2");

    if (part == 1) {
        // Sine sum over chi_-4 with exponent (n^2-1)/8 against
        // sin X * prod (1-q^j)(1-2cos(2X)q^j+q^{2j}).
        const XSeries lhs = character_trig_sum(
            CharacterSpec::chi_minus4(), Trig::sin, [](long n) { return (n * n - 1) / 8; },
            [](long) { return Rational(1); }, M, N);
        XSeries rhs = trig(Trig::sin, 1, M, N);
        const XSeries cos2 = trig(Trig::cos, 2, M, N);
        const QSeries one = QSeries::constant(1, N);
        for (int j = 1; j <= N; ++j) {
            rhs = x_mul(rhs, XSeries::from_qseries(one - QSeries::monomial(1, j, N), M));
            XSeries factor = XSeries::from_qseries(
                2 * j <= N ? one + QSeries::monomial(1, 2 * j, N) : one, M);
            factor -= QSeries::monomial(2, j, N) * cos2;
            rhs = x_mul(rhs, factor);
        }
        return compare_xseries("jacobi product 1 (chi_-4 sine sum)", lhs, rhs, M, N);
    }

    // Cosine sum over chi_12 with exponent (n^2-1)/24 against
    // cos X * prod (1-q^n)(1+2cos(2X)q^n+q^{2n})(1-2cos(4X)q^{2n-1}+q^{4n-2}).
    const XSeries lhs = character_trig_sum(
        CharacterSpec::chi_12(), Trig::cos, [](long n) { return (n * n - 1) / 24; },
        [](long) { return Rational(1); }, M, N);
    XSeries rhs = trig(Trig::cos, 1, M, N);
    const XSeries cos2 = trig(Trig::cos, 2, M, N);
    const XSeries cos4 = trig(Trig::cos, 4, M, N);
    QSeries one = QSeries::constant(1, N);
    for (int n = 1; n <= N; ++n) {
        XSeries f1 = XSeries::from_qseries(one - QSeries::monomial(1, n, N), M);
        rhs = x_mul(rhs, f1);
        XSeries f2 = XSeries::from_qseries(
            2 * n <= N ? one + QSeries::monomial(1, 2 * n, N) : one, M);
        f2 += QSeries::monomial(2, n, N) * cos2;
        rhs = x_mul(rhs, f2);
        if (2 * n - 1 <= N) {
            XSeries f3 = XSeries::from_qseries(
                4 * n - 2 <= N ? one + QSeries::monomial(1, 4 * n - 2, N) : one, M);
            f3 -= QSeries::monomial(2, 2 * n - 1, N) * cos4;
            rhs = x_mul(rhs, f3);
        }
    }
    return compare_xseries("jacobi product 2 (chi_12 cosine sum)", lhs, rhs, M, N);
}

namespace {

// q^{j}/(1 -+ q^{j})^2 = sum_{k>=1} (+-1)^{k-1} k q^{jk}, at order N.
QSeries geometric_square(int j, bool alternating, int N) {
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (int k = 1; j * k <= N; ++k) {
        const long v = (alternating && k % 2 == 0) ? -k : k;
        c[static_cast<size_t>(j) * static_cast<size_t>(k)] = Rational(v);
    }
    return QSeries(std::move(c));
}

// Alternating exponential generating sum of the oracle series, unrescaled.
XSeries oracle_genfun(Series s, int M, int N) {
    const bool isU = s == Series::U;
    XSeries lhs(M, N);
    for (int t = 0; (isU ? 2 * t + 1 : 2 * t) <= M; ++t) {
        const int xpow = isU ? 2 * t + 1 : 2 * t;
        const Rational c = sign_t(t) / Rational(factorial(static_cast<unsigned>(xpow)));
        lhs.set_coeff(xpow, c * (isU ? oracle_u(t, N) : oracle_v(t, N)));
    }
    return lhs;
}

}  // namespace

CheckReport check_product_theorem(Series s, int M, int N) {
    check_orders(M, N, "check_product_theorem");
    const XSeries lhs = oracle_genfun(s, M, N);
    const XSeries one = XSeries::from_qseries(QSeries::constant(1, N), M);

    if (s == Series::U) {
        const XSeries sin1 = trig(Trig::sin, 1, M, N);
        const XSeries sinsq = x_mul(sin1, sin1);
        XSeries rhs = sin1;
        for (int j = 1; j <= N; ++j) {
            const XSeries factor =
                one + (Rational(4) * geometric_square(j, false, N)) * sinsq;
            rhs = x_mul(rhs, factor);
        }
        return compare_xseries("product theorem U", lhs, rhs, M, N);
    }

    const XSeries sin1 = trig(Trig::sin, 1, M, N);
    const XSeries sinsq = x_mul(sin1, sin1);
    const XSeries sin2 = trig(Trig::sin, 2, M, N);
    const XSeries sin2sq = x_mul(sin2, sin2);
    XSeries rhs = trig(Trig::cos, 1, M, N);
    for (int j = 1; j <= N; ++j) {
        const XSeries f1 = one - (Rational(4) * geometric_square(j, true, N)) * sinsq;
        rhs = x_mul(rhs, f1);
        if (2 * j - 1 <= N) {
            const XSeries f2 =
                one + (Rational(4) * geometric_square(2 * j - 1, false, N)) * sin2sq;
            rhs = x_mul(rhs, f2);
        }
    }
    return compare_xseries("product theorem V", lhs, rhs, M, N);
}

std::vector<CheckReport> check_key_identity(int M, int N) {
    check_orders(M, N, "check_key_identity");

    // U generating function = sin X * exp(-2 sum_r S_{2r-1}(q) (-4X^2)^r / (2r)!).
    const XSeries lhs = oracle_genfun(Series::U, M, N);
    XSeries arg(M, N);
    Rational minus4r = 1;
    for (int r = 1; 2 * r <= M; ++r) {
        minus4r *= -4;
        const Rational c =
            Rational(-2) * minus4r / Rational(factorial(static_cast<unsigned>(2 * r)));
        arg.set_coeff(2 * r, c * lambert_s(2 * r - 1, N));
    }
    const XSeries rhs = x_mul(trig(Trig::sin, 1, M, N), x_exp(arg));
    CheckReport key = compare_xseries("key identity (U exponential form)", lhs, rhs, M, N);

    // q-free specialization: exp(-sum_k (-4)^k B_{2k} X^{2k}/((2k)(2k)!)) * sinc X = 1.
    const int Ms = 12;
    XSeries sarg(Ms, 0);
    Rational m4k = 1;
    for (int k = 1; 2 * k <= Ms; ++k) {
        m4k *= -4;
        const Rational c = -m4k * bernoulli(static_cast<unsigned>(2 * k)) /
                           Rational(Integer(2 * k) * factorial(static_cast<unsigned>(2 * k)));
        sarg.set_coeff(2 * k, QSeries::constant(c, 0));
    }
    XSeries sinc(Ms, 0);
    for (int t = 0; 2 * t <= Ms; ++t)
        sinc.set_coeff(2 * t, QSeries::constant(
                                  sign_t(t) / Rational(factorial(static_cast<unsigned>(2 * t + 1))),
                                  0));
    const XSeries prod = x_mul(x_exp(sarg), sinc);
    const XSeries unit = XSeries::from_qseries(QSeries::constant(1, 0), Ms);
    CheckReport sincrep = compare_xseries("sinc/Bernoulli identity", prod, unit, Ms, 0);

    return {key, sincrep};
}

}  // namespace ramanujan
