#include "ramanujan/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramanujan {

namespace {

void trim(std::vector<int>& mult) {
    while (!mult.empty() && mult.back() == 0) mult.pop_back();
}

}  // namespace

Partition::Partition(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    for (int m : mult_)
        if (m < 0) throw std::invalid_argument("Partition: negative multiplicity");
    trim(mult_);
}

Partition Partition::from_parts(const std::vector<int>& parts) {
    std::vector<int> mult;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (p > static_cast<int>(mult.size())) mult.resize(static_cast<size_t>(p));
        ++mult[static_cast<size_t>(p - 1)];
    }
    return Partition(std::move(mult));
}

int Partition::n() const {
    int s = 0;
    for (int k = 1; k <= max_part(); ++k) s += k * mult_[static_cast<size_t>(k - 1)];
    return s;
}

int Partition::length() const {
    int s = 0;
    for (int m : mult_) s += m;
    return s;
}

int Partition::multiplicity(int k) const {
    if (k < 1) throw std::invalid_argument("Partition::multiplicity: part must be positive");
    return k <= max_part() ? mult_[static_cast<size_t>(k - 1)] : 0;
}

std::vector<int> Partition::parts() const {
    std::vector<int> p;
    for (int k = max_part(); k >= 1; --k)
        p.insert(p.end(), static_cast<size_t>(mult_[static_cast<size_t>(k - 1)]), k);
    return p;
}

bool canonical_less(const Partition& a, const Partition& b) {
    const int na = a.n(), nb = b.n();
    if (na != nb) return na < nb;
    // Decreasing lexicographic on the nonincreasing part sequences.
    const auto pa = a.parts(), pb = b.parts();
    return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& parts,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_parts(parts));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        enumerate_rec(remaining - p, p, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> parts;
    enumerate_rec(n, n, parts, out);
    return out;
}

Integer z_stat(const Partition& lambda) {
    Integer z = 1;
    for (int k = 1; k <= lambda.max_part(); ++k) {
        const int mk = lambda.multiplicity(k);
        if (mk == 0) continue;
        z *= int_pow(Integer(k), static_cast<unsigned>(mk));
        z *= factorial(static_cast<unsigned>(mk));
    }
    return z;
}

std::map<Partition, Rational, PartitionLess> cycle_index(int t) {
    std::map<Partition, Rational, PartitionLess> z;
    for (const auto& lambda : enumerate_partitions(t))
        z.emplace(lambda, frac(Integer(1), z_stat(lambda)));
    return z;
}

}  // namespace ramanujan
