#include "ramanujan/qseries.hpp"

#include <algorithm>
#include <string>

namespace ramanujan {

QSeries QSeries::constant(const Rational& c, int order) {
    QSeries r(order);
    r.coeffs_[0] = c;
    return r;
}

QSeries QSeries::monomial(const Rational& c, int exponent, int order) {
    if (exponent < 0) throw std::invalid_argument("QSeries::monomial: negative exponent");
    if (exponent > order)
        throw std::invalid_argument("QSeries::monomial: exponent exceeds order");
    QSeries r(order);
    r.coeffs_[static_cast<size_t>(exponent)] = c;
    return r;
}

bool QSeries::is_zero() const { return valuation() < 0; }

int QSeries::valuation() const {
    for (int i = 0; i <= order(); ++i)
        if (coeffs_[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

QSeries QSeries::truncated(int N) const {
    if (N < 0 || N > order())
        throw std::invalid_argument("QSeries::truncated: order " + std::to_string(N) +
                                    " not within 0.." + std::to_string(order()));
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + N + 1);
    return QSeries(std::move(c));
}

QSeries QSeries::shifted_down(int v) const {
    if (v < 0 || v > order())
        throw std::invalid_argument("QSeries::shifted_down: bad shift");
    for (int i = 0; i < v; ++i)
        if (coeffs_[static_cast<size_t>(i)] != 0)
            throw std::domain_error("QSeries::shifted_down: nonzero coefficient below q^" +
                                    std::to_string(v));
    std::vector<Rational> c(coeffs_.begin() + v, coeffs_.end());
    return QSeries(std::move(c));
}

QSeries QSeries::shifted_up(int v) const {
    if (v < 0) throw std::invalid_argument("QSeries::shifted_up: negative shift");
    std::vector<Rational> c(coeffs_.size() + static_cast<size_t>(v));
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + v);
    return QSeries(std::move(c));
}

QSeries& QSeries::operator+=(const QSeries& rhs) { return *this = *this + rhs; }
QSeries& QSeries::operator-=(const QSeries& rhs) { return *this = *this - rhs; }

QSeries& QSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a[i] + b[i];
    return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a[i] - b[i];
    return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& x : c) x = -x;
    return QSeries(std::move(c));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j + i <= n; ++j) {
            if (b[j] == 0) continue;
            c[static_cast<size_t>(i + j)] += a[i] * b[j];
        }
    }
    return QSeries(std::move(c));
}

QSeries operator*(const Rational& c, const QSeries& a) {
    QSeries r = a;
    r *= c;
    return r;
}

QSeries operator*(const QSeries& a, const Rational& c) { return c * a; }

bool operator==(const QSeries& a, const QSeries& b) {
    return a.order() == b.order() && a.coeffs() == b.coeffs();
}

bool equal_through(const QSeries& a, const QSeries& b, int N) {
    if (a.order() < N || b.order() < N)
        throw std::invalid_argument("equal_through: operand order below comparison order");
    for (int i = 0; i <= N; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

QSeries invert(const QSeries& a) {
    if (a[0] == 0) throw ZeroConstantTerm("invert: zero constant term");
    const int n = a.order();
    std::vector<Rational> b(static_cast<size_t>(n) + 1);
    const Rational inv0 = Rational(1) / a[0];
    b[0] = inv0;
    for (int i = 1; i <= n; ++i) {
        Rational s = 0;
        for (int j = 1; j <= i; ++j) {
            if (a[j] == 0) continue;
            s += a[j] * b[static_cast<size_t>(i - j)];
        }
        b[static_cast<size_t>(i)] = -s * inv0;
    }
    return QSeries(std::move(b));
}

QSeries power(const QSeries& a, int k) {
    if (k < 0) return invert(power(a, -k));
    QSeries r = QSeries::constant(1, a.order());
    QSeries base = a;
    unsigned e = static_cast<unsigned>(k);
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

QSeries q_derivative(const QSeries& a) {
    std::vector<Rational> c(a.coeffs());
    for (int i = 0; i <= a.order(); ++i) c[static_cast<size_t>(i)] *= i;
    return QSeries(std::move(c));
}

QSeries substitute_power(const QSeries& a, int m, int N) {
    if (m < 1) throw std::invalid_argument("substitute_power: m must be >= 1");
    if (N > m * (a.order() + 1) - 1)
        throw std::invalid_argument(
            "substitute_power: requested order " + std::to_string(N) +
            " exceeds what order-" + std::to_string(a.order()) + " input determines");
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (int i = 0; i <= a.order() && static_cast<long>(m) * i <= N; ++i)
        c[static_cast<size_t>(m * i)] = a[i];
    return QSeries(std::move(c));
}

namespace {

// In-place multiplication by (1 - q^j)^{sign} with sign = +1; O(N) per factor.
void mul_one_minus_qj(std::vector<Rational>& c, int j) {
    const int n = static_cast<int>(c.size()) - 1;
    for (int i = n; i >= j; --i) c[static_cast<size_t>(i)] -= c[static_cast<size_t>(i - j)];
}

}  // namespace

QSeries pochhammer_inf(int N) { return euler_product_pow(1, 1, N); }

QSeries euler_product_pow(int m, int k, int N) {
    if (m < 1) throw std::invalid_argument("euler_product_pow: m must be >= 1");
    if (N < 0) throw std::invalid_argument("euler_product_pow: negative order");
    const int kk = k < 0 ? -k : k;
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    c[0] = 1;
    for (int n = 1; static_cast<long>(m) * n <= N; ++n)
        for (int rep = 0; rep < kk; ++rep) mul_one_minus_qj(c, m * n);
    QSeries r{std::move(c)};
    return k < 0 ? invert(r) : r;
}

QSeries eta_power(int m, int k, int N) {
    if (m < 1) throw std::invalid_argument("eta_power: m must be >= 1");
    const long mk = static_cast<long>(m) * k;
    if (mk % 24 != 0)
        throw FractionalExponent("eta_power: q-exponent " + std::to_string(mk) +
                                 "/24 is not an integer");
    if (mk < 0)
        throw std::domain_error("eta_power: negative leading exponent q^" +
                                std::to_string(mk / 24) +
                                " is not representable as a power series");
    const int e = static_cast<int>(mk / 24);
    if (e > N)
        throw std::invalid_argument("eta_power: leading exponent exceeds order");
    return euler_product_pow(m, k, N - e).shifted_up(e);
}

}  // namespace ramanujan
