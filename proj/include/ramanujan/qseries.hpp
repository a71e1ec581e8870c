#pragma once

#include <stdexcept>
#include <vector>

#include "ramanujan/exactnum.hpp"

namespace ramanujan {

struct ZeroConstantTerm : std::domain_error {
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct FractionalExponent : std::domain_error {
    explicit FractionalExponent(const std::string& what) : std::domain_error(what) {}
};

/// Truncated power series in q with exact rational coefficients.
///
/// A QSeries of order N holds the coefficients of q^0..q^N; nothing is known
/// beyond q^N. Binary operations truncate to the minimum operand order, so
/// precision loss is always explicit in the result's order. Values are
/// immutable after construction.
class QSeries {
  public:
    /// Zero series of order 0.
    QSeries() : coeffs_(1) {}
    /// Zero series of the given order.
    explicit QSeries(int order) : coeffs_(static_cast<size_t>(check_order(order)) + 1) {}
    /// Series with the given coefficients; order = coeffs.size()-1.
    explicit QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.emplace_back();
    }

    static QSeries constant(const Rational& c, int order);
    /// c * q^e, order >= e required.
    static QSeries monomial(const Rational& c, int exponent, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// Smallest exponent with a nonzero coefficient, or -1 for the zero series.
    int valuation() const;

    /// Restriction to order N (N <= order()).
    QSeries truncated(int N) const;
    /// Division by q^v; requires every coefficient below q^v to vanish.
    /// The result has order order()-v.
    QSeries shifted_down(int v) const;
    /// Multiplication by q^v; the result has order order()+v.
    QSeries shifted_up(int v) const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const Rational& c);

  private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("QSeries: negative order");
        return order;
    }
    std::vector<Rational> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);
QSeries operator*(const QSeries& a, const Rational& c);

/// Exact equality: same order and identical coefficients.
bool operator==(const QSeries& a, const QSeries& b);

/// Coefficientwise equality through q^N (both operands must have order >= N).
bool equal_through(const QSeries& a, const QSeries& b, int N);

/// Multiplicative inverse: a * invert(a) = 1 + O(q^{N+1}).
/// Throws ZeroConstantTerm when a has no constant term.
QSeries invert(const QSeries& a);

/// a^k for k >= 0 (k < 0: inverse of the positive power).
QSeries power(const QSeries& a, int k);

/// The operator D = q d/dq: coefficient of q^n becomes n*a_n. Order preserved.
QSeries q_derivative(const QSeries& a);

/// a(q^m) truncated at order N. Requires m >= 1 and
/// N <= m*(order(a)+1)-1, i.e. enough of a must be known to fill q^0..q^N.
QSeries substitute_power(const QSeries& a, int m, int N);

/// prod_{n=1}^{N} (1 - q^n) at order N; factors beyond q^N are identity.
QSeries pochhammer_inf(int N);

/// prod_{n>=1} (1 - q^{mn})^k at order N, for any integer k
/// (negative k inverts the positive power).
QSeries euler_product_pow(int m, int k, int N);

/// q^{mk/24} * prod_{n>=1} (1 - q^{mn})^k at order N.
/// Throws FractionalExponent unless 24 | m*k, and std::domain_error when
/// m*k < 0 (the leading exponent would be negative, which a truncated
/// power series cannot carry).
QSeries eta_power(int m, int k, int N);

}  // namespace ramanujan
