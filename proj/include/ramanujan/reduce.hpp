#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "ramanujan/bivariate.hpp"
#include "ramanujan/quasimodular.hpp"

namespace ramanujan {

struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationFailed : std::runtime_error {
    explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};

/// E_{2k} expressed in the weight-2k monomials E_4^a E_6^b (4a + 6b = 2k).
struct ModularRelation {
    int k = 0;
    /// (a, b) -> coefficient of E_4^a E_6^b.
    std::map<std::pair<int, int>, Rational> combo;
};

/// Derives the relation for E_{2k}, k >= 4, by exact Gaussian elimination on
/// q-expansion coefficients: the solve window is the number of monomials plus
/// window_margin rows (overdetermined consistency is part of the solve), and
/// the result is then re-verified through order nverify. Memoized per (k,
/// margin). Throws SingularSystem when the window does not determine a unique
/// combination, VerificationFailed when the combination breaks past the window.
ModularRelation modular_relation(int k, int nverify, int window_margin = 5);

/// Exponent triples (l, m, n) for E_2^l E_4^m E_6^n, ordered lexicographically
/// decreasing so higher E_2 powers render first.
struct E246Less {
    bool operator()(const std::array<int, 3>& a, const std::array<int, 3>& b) const {
        return b < a;
    }
};

/// A weight-homogeneous polynomial in E_2, E_4, E_6: every key satisfies
/// l + 2m + 3n = t. Zero coefficients are never stored.
class E246Poly {
  public:
    using TermMap = std::map<std::array<int, 3>, Rational, E246Less>;

    explicit E246Poly(int t) : t_(t) {}
    /// Throws std::invalid_argument when a key violates weight homogeneity.
    E246Poly(int t, TermMap terms);

    int t() const { return t_; }
    int weight() const { return 2 * t_; }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const std::array<int, 3>& key) const;

    friend bool operator==(const E246Poly&, const E246Poly&) = default;

  private:
    int t_ = 0;
    TermMap terms_;
};

/// q-expansion of an E246Poly to order N.
QSeries expand_e246(const E246Poly& p, int N);

/// Rewrites a partition-keyed polynomial into the E_2,E_4,E_6 basis by
/// substituting the solver's relation for every part k >= 4, then verifies
/// that the q-expansion is unchanged through order nverify.
E246Poly to_e246(const QuasimodularPoly& p, int nverify);

/// The K-coefficient table of U_{2t} or V_{2t}: to_e246(trace(phi, t)).
E246Poly k_table(Series s, int t, int nverify);

}  // namespace ramanujan
