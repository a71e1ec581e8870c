#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ramanujan {

/// Exact arbitrary-precision integer and rational number types.
/// Rational values are always canonical: lowest terms, denominator > 0,
/// zero stored as 0/1. gmpxx guarantees this for arithmetic results;
/// frac() guarantees it for values built from a numerator/denominator pair.
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den reduced to canonical form. Throws std::domain_error if den == 0.
Rational frac(const Integer& num, const Integer& den);
Rational frac(long num, long den);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer int_pow(const Integer& base, unsigned exp);
Rational rat_pow(const Rational& base, unsigned exp);

/// Bernoulli number B_k with the B_1 = -1/2 convention, via the defining
/// convolution recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0. Memoized.
Rational bernoulli(unsigned k);

/// Sum of v-th powers of the positive divisors of n. Throws on n <= 0.
Integer sigma(unsigned v, long n);

enum class Parity { even, odd };

/// A periodic function table that is neither even nor odd cannot be used
/// as a theta-function character.
struct ParityUndefined : std::domain_error {
    explicit ParityUndefined(const std::string& what) : std::domain_error(what) {}
};

/// A periodic function Z -> Q given by its value table on residues 0..N-1,
/// together with its parity. Covers the Jacobi-Kronecker characters the
/// theta machinery needs as well as arbitrary hand-built odd/even tables.
class CharacterSpec {
  public:
    /// Validates the parity claim against the table: for every residue r,
    /// values[(N-r) mod N] must equal +values[r] (even) or -values[r] (odd).
    /// Throws ParityUndefined otherwise.
    CharacterSpec(std::vector<Rational> values, Parity parity, std::string name = "");

    int period() const { return static_cast<int>(values_.size()); }
    Parity parity() const { return parity_; }
    /// 0 for even, 1 for odd.
    int a_chi() const { return parity_ == Parity::odd ? 1 : 0; }
    const std::string& name() const { return name_; }

    /// Value at n mod period, defined for every integer n.
    const Rational& operator()(long n) const;

    /// The odd character mod 4: 0,1,0,-1 on residues 0..3.
    static const CharacterSpec& chi_minus4();
    /// The even character with conductor 12: +1 at 1,11; -1 at 5,7; 0 elsewhere.
    static const CharacterSpec& chi_12();

  private:
    std::vector<Rational> values_;
    Parity parity_;
    std::string name_;
};

inline const Rational& character_value(const CharacterSpec& chi, long n) { return chi(n); }

}  // namespace ramanujan
