#include "ramanujan/exactnum.hpp"

#include <mutex>
#include <utility>

namespace ramanujan {

Rational frac(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("frac: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational frac(long num, long den) { return frac(Integer(num), Integer(den)); }

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer int_pow(const Integer& base, unsigned exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational rat_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

Rational bernoulli(unsigned k) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= k) {
        const unsigned m = static_cast<unsigned>(cache.size());
        // B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(s / Rational(-(static_cast<long>(m) + 1)));
    }
    return cache[k];
}

Integer sigma(unsigned v, long n) {
    if (n <= 0) throw std::domain_error("sigma: n must be positive");
    Integer s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += int_pow(Integer(d), v);
        const long e = n / d;
        if (e != d) s += int_pow(Integer(e), v);
    }
    return s;
}

CharacterSpec::CharacterSpec(std::vector<Rational> values, Parity parity, std::string name)
    : values_(std::move(values)), parity_(parity), name_(std::move(name)) {
    if (values_.empty()) throw std::domain_error("CharacterSpec: empty period table");
    const int n = period();
    const int sign = parity_ == Parity::odd ? -1 : 1;
    for (int r = 0; r < n; ++r) {
        if (values_[(n - r) % n] != sign * values_[r])
            throw ParityUndefined("CharacterSpec: table of '" + name_ +
                                  "' is not " + (sign < 0 ? "odd" : "even") +
                                  " at residue " + std::to_string(r));
    }
}

const Rational& CharacterSpec::operator()(long n) const {
    long r = n % period();
    if (r < 0) r += period();
    return values_[static_cast<size_t>(r)];
}

const CharacterSpec& CharacterSpec::chi_minus4() {
    static const CharacterSpec chi({Rational(0), Rational(1), Rational(0), Rational(-1)},
                                   Parity::odd, "chi_-4");
    return chi;
}

const CharacterSpec& CharacterSpec::chi_12() {
    static const CharacterSpec chi(
        {Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(-1),
         Rational(0), Rational(-1), Rational(0), Rational(0), Rational(0), Rational(1)},
        Parity::even, "chi_12");
    return chi;
}

}  // namespace ramanujan
