#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ramanujan/partitions.hpp"
#include "ramanujan/qseries.hpp"
#include "ramanujan/report.hpp"

namespace ramanujan {

/// The normalized Eisenstein series E_{2k} = 1 - (4k/B_{2k}) sum sigma_{2k-1}(n) q^n
/// to order N.
QSeries eisenstein(int k, int N);

/// E_lambda = prod_k E_{2k}^{m_k} to order N; the empty partition gives 1.
QSeries partition_eisenstein(const Partition& lambda, int N);

/// The U-series weight: phi_U(lambda) = 4^n (2n+1)! prod_k (1/m_k!) (B_{2k}/((2k)(2k)!))^{m_k}.
Rational phi_u(const Partition& lambda);

/// The V-series weight: phi_V(lambda) = 4^n (2n)! prod_k (1/m_k!) ((4^k-1)B_{2k}/((2k)(2k)!))^{m_k}.
Rational phi_v(const Partition& lambda);

/// A named evaluation rule on partitions. The built-ins cover the U and V
/// weights; any callable defined on every partition of the requested size
/// works, so other weight families can be explored through the same trace.
struct PartitionWeight {
    std::string name;
    std::function<Rational(const Partition&)> eval;

    static PartitionWeight phi_u_weight() { return {"phi_U", phi_u}; }
    static PartitionWeight phi_v_weight() { return {"phi_V", phi_v}; }
};

/// A formal rational combination of partition Eisenstein series, keyed by
/// the partitions of a fixed t (part k stands for E_{2k}); the weight is 2t.
/// Zero coefficients are never stored.
class QuasimodularPoly {
  public:
    using TermMap = std::map<Partition, Rational, PartitionLess>;

    /// The zero polynomial of weight 2t.
    explicit QuasimodularPoly(int t) : t_(check_t(t)) {}
    /// Throws std::invalid_argument if any key does not partition t.
    QuasimodularPoly(int t, TermMap terms);

    int t() const { return t_; }
    int weight() const { return 2 * t_; }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Partition& lambda) const;

    friend bool operator==(const QuasimodularPoly&, const QuasimodularPoly&) = default;

  private:
    static int check_t(int t);
    int t_ = 0;
    TermMap terms_;
};

/// Tr_t(phi) = sum_{lambda |- t} phi(lambda) [lambda], as a symbolic polynomial.
QuasimodularPoly trace(const PartitionWeight& phi, int t);

/// q-expansion of a symbolic polynomial to order N.
QSeries expand(const QuasimodularPoly& p, int N);

/// Lambert series S_j = sum_{m>=1} m^j q^m/(1-q^m) to order N, computed per
/// coefficient as the divisor sum sigma_j(n). Requires odd j >= 1.
QSeries lambert_s(int j, int N);

/// Alternating Lambert series A_j = sum_{k>=1} (-1)^{k-1} k^j q^k/(1-q^k)
/// to order N. Requires odd j >= 1.
QSeries lambert_a(int j, int N);

/// Checks the three Ramanujan differential equations for E_2, E_4, E_6
/// with D = q d/dq, each to order N. One report per identity.
std::vector<CheckReport> verify_ramanujan_odes(int N);

}  // namespace ramanujan
