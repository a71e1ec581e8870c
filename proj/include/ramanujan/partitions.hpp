#pragma once

#include <map>
#include <vector>

#include "ramanujan/exactnum.hpp"

namespace ramanujan {

/// An integer partition stored as a multiplicity vector: multiplicities()[k-1]
/// is the multiplicity of the part k. Trailing zero multiplicities are trimmed,
/// so equal partitions compare equal regardless of how they were built.
class Partition {
  public:
    /// The empty partition of 0.
    Partition() = default;
    explicit Partition(std::vector<int> multiplicities);
    static Partition from_parts(const std::vector<int>& parts);

    /// The partitioned integer, sum of k * m_k.
    int n() const;
    /// Number of parts, sum of m_k.
    int length() const;
    int max_part() const { return static_cast<int>(mult_.size()); }
    /// Multiplicity of the part k (0 when k exceeds the largest part).
    int multiplicity(int k) const;
    const std::vector<int>& multiplicities() const { return mult_; }
    /// Parts as a nonincreasing sequence.
    std::vector<int> parts() const;
    bool empty() const { return mult_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<int> mult_;
};

/// Canonical enumeration order: partitions of smaller integers first; within
/// one integer, nonincreasing part sequences in decreasing lexicographic
/// order, i.e. (4), (3,1), (2,2), (2,1,1), (1,1,1,1). This is the order
/// enumerate_partitions produces and the order every keyed output renders in.
bool canonical_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_less(a, b);
    }
};

/// All partitions of n, each exactly once, in canonical order.
std::vector<Partition> enumerate_partitions(int n);

/// z_lambda = prod k^{m_k} * m_k!, the centralizer order of a permutation
/// of cycle type lambda.
Integer z_stat(const Partition& lambda);

/// Cycle index of the symmetric group S_t: the monomial x_lambda is
/// identified with its partition key; the coefficient is 1/z_lambda.
std::map<Partition, Rational, PartitionLess> cycle_index(int t);

}  // namespace ramanujan
