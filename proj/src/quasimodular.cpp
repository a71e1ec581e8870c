#include "ramanujan/quasimodular.hpp"

#include <stdexcept>

namespace ramanujan {

QSeries eisenstein(int k, int N) {
    if (k < 1) throw std::invalid_argument("eisenstein: k must be >= 1");
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    c[0] = 1;
    const Rational pref = Rational(-4 * k) / bernoulli(static_cast<unsigned>(2 * k));
    for (int n = 1; n <= N; ++n)
        c[static_cast<size_t>(n)] = pref * Rational(sigma(static_cast<unsigned>(2 * k - 1), n));
    return QSeries(std::move(c));
}

QSeries partition_eisenstein(const Partition& lambda, int N) {
    QSeries r = QSeries::constant(1, N);
    for (int k = 1; k <= lambda.max_part(); ++k) {
        const int mk = lambda.multiplicity(k);
        if (mk == 0) continue;
        r = r * power(eisenstein(k, N), mk);
    }
    return r;
}

namespace {

// Shared product over parts: prod_k (1/m_k!) (g(k)/((2k)(2k)!))^{m_k}.
Rational weight_product(const Partition& lambda,
                        const std::function<Rational(int)>& numerator) {
    Rational r = 1;
    for (int k = 1; k <= lambda.max_part(); ++k) {
        const int mk = lambda.multiplicity(k);
        if (mk == 0) continue;
        const Rational base =
            numerator(k) / Rational(Integer(2 * k) * factorial(static_cast<unsigned>(2 * k)));
        r *= rat_pow(base, static_cast<unsigned>(mk)) /
             Rational(factorial(static_cast<unsigned>(mk)));
    }
    return r;
}

}  // namespace

Rational phi_u(const Partition& lambda) {
    const unsigned n = static_cast<unsigned>(lambda.n());
    const Rational front =
        Rational(Integer(int_pow(Integer(4), n) * factorial(2 * n + 1)));
    return front * weight_product(lambda, [](int k) -> Rational {
        return bernoulli(static_cast<unsigned>(2 * k));
    });
}

Rational phi_v(const Partition& lambda) {
    const unsigned n = static_cast<unsigned>(lambda.n());
    const Rational front = Rational(Integer(int_pow(Integer(4), n) * factorial(2 * n)));
    return front * weight_product(lambda, [](int k) -> Rational {
        // Explicit Rational return: a deduced gmp expression template would
        // dangle once the operands go out of scope.
        return Rational(int_pow(Integer(4), static_cast<unsigned>(k)) - 1) *
               bernoulli(static_cast<unsigned>(2 * k));
    });
}

int QuasimodularPoly::check_t(int t) {
    if (t < 0) throw std::invalid_argument("QuasimodularPoly: negative t");
    return t;
}

QuasimodularPoly::QuasimodularPoly(int t, TermMap terms) : t_(check_t(t)) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.n() != t_)
            throw std::invalid_argument("QuasimodularPoly: key does not partition t");
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    }
    terms_ = std::move(terms);
}

Rational QuasimodularPoly::coefficient(const Partition& lambda) const {
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

QuasimodularPoly trace(const PartitionWeight& phi, int t) {
    QuasimodularPoly::TermMap terms;
    for (const auto& lambda : enumerate_partitions(t)) {
        Rational w = phi.eval(lambda);
        if (w != 0) terms.emplace(lambda, std::move(w));
    }
    return QuasimodularPoly(t, std::move(terms));
}

QSeries expand(const QuasimodularPoly& p, int N) {
    QSeries r(N);
    for (const auto& [lambda, coeff] : p.terms())
        r += coeff * partition_eisenstein(lambda, N);
    return r;
}

namespace {

void require_odd_positive(int j, const char* who) {
    if (j < 1 || j % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": j must be odd and positive");
}

}  // namespace

QSeries lambert_s(int j, int N) {
    require_odd_positive(j, "lambert_s");
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (int n = 1; n <= N; ++n)
        c[static_cast<size_t>(n)] = Rational(sigma(static_cast<unsigned>(j), n));
    return QSeries(std::move(c));
}

QSeries lambert_a(int j, int N) {
    require_odd_positive(j, "lambert_a");
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (int k = 1; k <= N; ++k) {
        const Integer term = (k % 2 == 0 ? -1 : 1) * int_pow(Integer(k), static_cast<unsigned>(j));
        for (int n = k; n <= N; n += k) c[static_cast<size_t>(n)] += Rational(term);
    }
    return QSeries(std::move(c));
}

namespace {

CheckReport ode_report(const std::string& name, const QSeries& lhs, const QSeries& rhs, int N) {
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

std::vector<CheckReport> verify_ramanujan_odes(int N) {
    if (N < 0) throw std::invalid_argument("verify_ramanujan_odes: negative order");
    const QSeries e2 = eisenstein(1, N), e4 = eisenstein(2, N), e6 = eisenstein(3, N);
    const Rational twelfth = frac(1, 12), third = frac(1, 3), half = frac(1, 2);
    return {
        ode_report("D(E2) = (E2^2 - E4)/12", q_derivative(e2), twelfth * (e2 * e2 - e4), N),
        ode_report("D(E4) = (E2*E4 - E6)/3", q_derivative(e4), third * (e2 * e4 - e6), N),
        ode_report("D(E6) = (E2*E6 - E4^2)/2", q_derivative(e6), half * (e2 * e6 - e4 * e4), N),
    };
}

}  // namespace ramanujan
