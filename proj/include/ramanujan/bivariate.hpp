#pragma once

#include <vector>

#include "ramanujan/exactnum.hpp"
#include "ramanujan/qseries.hpp"
#include "ramanujan/report.hpp"

namespace ramanujan {

struct NonzeroConstant : std::domain_error {
    explicit NonzeroConstant(const std::string& what) : std::domain_error(what) {}
};

/// Which of Ramanujan's two series families an operation refers to.
enum class Series { U, V };

inline const char* series_name(Series s) { return s == Series::U ? "U" : "V"; }

/// Truncated series in X whose coefficients are QSeries: index k holds the
/// coefficient of X^k. All coefficients share one q-order. This is the
/// carrier for every sin/cos/exp generating-function identity.
class XSeries {
  public:
    /// Zero series with the given truncation orders.
    XSeries(int xorder, int qorder);
    /// Coefficients of X^0..X^M; every entry must have the same q-order.
    explicit XSeries(std::vector<QSeries> xcoeffs);

    /// A q-series placed at X^0.
    static XSeries from_qseries(const QSeries& a, int xorder);

    int xorder() const { return static_cast<int>(xc_.size()) - 1; }
    int qorder() const { return xc_.front().order(); }
    const QSeries& coeff(int k) const { return xc_[static_cast<size_t>(k)]; }

    /// Replaces the coefficient of X^k (the q-order must match).
    void set_coeff(int k, QSeries c);

    XSeries& operator+=(const XSeries& rhs);
    XSeries& operator-=(const XSeries& rhs);

  private:
    std::vector<QSeries> xc_;
};

/// Orders truncate to the minimum of the operands, in both variables.
XSeries operator+(const XSeries& a, const XSeries& b);
XSeries operator-(const XSeries& a, const XSeries& b);
XSeries x_mul(const XSeries& a, const XSeries& b);
inline XSeries operator*(const XSeries& a, const XSeries& b) { return x_mul(a, b); }
XSeries operator*(const QSeries& c, const XSeries& a);
XSeries operator*(const Rational& c, const XSeries& a);

bool operator==(const XSeries& a, const XSeries& b);

/// exp(a) = sum a^k/k!, truncated in X. Requires the X^0 coefficient of a to
/// be the zero QSeries (throws NonzeroConstant otherwise), which makes the
/// sum finite.
XSeries x_exp(const XSeries& a);

enum class Trig { sin, cos };

/// Taylor series of sin(nX) or cos(nX) to X^xorder; coefficients are
/// rational constants embedded at q-order qorder.
XSeries trig(Trig kind, long n, int xorder, int qorder);

/// Generating-function identity for U or V: the alternating exponential sum
/// of the oracle series against the theta-times-trig sum divided by the eta
/// power, in the rescaled variable (q -> q^8 for U, q -> q^24 for V).
CheckReport check_genfun(Series s, int M, int N);

/// The general theta generating-function identity for any even or odd
/// periodic table: sum_t (-1)^t R_{2t}(chi;q) X^{2t+1}/(2t+1)! =
/// (1/Theta) sum_{n>=1} chi(n) n^{a_chi - 1} q^{n^2} sin(nX).
CheckReport check_lemma_genfun(const CharacterSpec& chi, int M, int N);

/// Triple-product expansions of the two theta sums (part 1: the sin/chi_-4
/// sum, part 2: the cos/chi_12 sum) against their trigonometric products.
CheckReport check_jacobi_products(int part, int M, int N);

/// The sin^2/cos product forms of the U and V generating functions, stated
/// directly in integer powers of q.
CheckReport check_product_theorem(Series s, int M, int N);

/// The Lambert-series exponential form of the U generating function, plus the
/// q-free sinc/Bernoulli identity it rests on (verified to X^12).
std::vector<CheckReport> check_key_identity(int M, int N);

}  // namespace ramanujan
