#include <doctest.h>

#include <random>

#include "ramanujan/bivariate.hpp"
#include "ramanujan/partitions.hpp"

using namespace ramanujan;

namespace {

// p(n) by the pentagonal-number recurrence, independent of the enumerator.
std::vector<Integer> partition_counts(int nmax) {
    std::vector<Integer> p(static_cast<size_t>(nmax) + 1);
    p[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        Integer s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            const int sign = k % 2 == 1 ? 1 : -1;
            if (g1 <= n) s += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) s += sign * p[static_cast<size_t>(n - g2)];
        }
        p[static_cast<size_t>(n)] = s;
    }
    return p;
}

}  // namespace

TEST_CASE("enumerate base cases and canonical order") {
    const auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());
    CHECK(p0[0].n() == 0);

    const auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition::from_parts({4}));
    CHECK(p4[1] == Partition::from_parts({3, 1}));
    CHECK(p4[2] == Partition::from_parts({2, 2}));
    CHECK(p4[3] == Partition::from_parts({2, 1, 1}));
    CHECK(p4[4] == Partition::from_parts({1, 1, 1, 1}));

    CHECK(enumerate_partitions(5).size() == 7);
}

TEST_CASE("enumeration is sorted and duplicate-free under canonical_less") {
    for (int n = 0; n <= 12; ++n) {
        const auto ps = enumerate_partitions(n);
        for (size_t i = 0; i + 1 < ps.size(); ++i) {
            CHECK(canonical_less(ps[i], ps[i + 1]));
            CHECK(!canonical_less(ps[i + 1], ps[i]));
        }
        for (const auto& p : ps) CHECK(p.n() == n);
    }
}

TEST_CASE("partition counts match the pentagonal recurrence") {
    const auto counts = partition_counts(40);
    for (int n = 0; n <= 40; ++n)
        CHECK(Integer(static_cast<long>(enumerate_partitions(n).size())) ==
              counts[static_cast<size_t>(n)]);
}

TEST_CASE("multiplicity and parts views agree") {
    const Partition lam = Partition::from_parts({5, 3, 3, 1});
    CHECK(lam.n() == 12);
    CHECK(lam.length() == 4);
    CHECK(lam.multiplicity(3) == 2);
    CHECK(lam.multiplicity(2) == 0);
    CHECK(lam.multiplicity(9) == 0);
    CHECK(lam.parts() == std::vector<int>{5, 3, 3, 1});
    CHECK(lam == Partition({1, 0, 2, 0, 1}));
}

TEST_CASE("z statistic") {
    CHECK(z_stat(Partition::from_parts({1, 1, 1})) == 6);
    CHECK(z_stat(Partition::from_parts({3})) == 3);
    CHECK(z_stat(Partition()) == 1);
}

TEST_CASE("cycle types partition the symmetric group") {
    for (int t = 0; t <= 12; ++t) {
        Integer total = 0;
        const Integer tfact = factorial(static_cast<unsigned>(t));
        for (const auto& lam : enumerate_partitions(t)) {
            const Integer z = z_stat(lam);
            CHECK(tfact % z == 0);
            total += tfact / z;
        }
        CHECK(total == tfact);
    }
}

TEST_CASE("cycle index tables") {
    const auto z0 = cycle_index(0);
    REQUIRE(z0.size() == 1);
    CHECK(z0.at(Partition()) == Rational(1));

    const auto z2 = cycle_index(2);
    REQUIRE(z2.size() == 2);
    CHECK(z2.at(Partition::from_parts({1, 1})) == frac(1, 2));
    CHECK(z2.at(Partition::from_parts({2})) == frac(1, 2));

    const auto z3 = cycle_index(3);
    REQUIRE(z3.size() == 3);
    CHECK(z3.at(Partition::from_parts({1, 1, 1})) == frac(1, 6));
    CHECK(z3.at(Partition::from_parts({2, 1})) == frac(1, 2));
    CHECK(z3.at(Partition::from_parts({3})) == frac(1, 3));
}

TEST_CASE("cycle index generating function") {
    // sum_t Z(S_t) y^t = exp(sum_k x_k y^k / k) through y^10, with the formal
    // markers given random rational values; the y-series is carried in the
    // X slot of an XSeries with q-order 0.
    std::mt19937 rng(1009);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    const int M = 10;
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<Rational> x(static_cast<size_t>(M) + 1);
        for (int k = 1; k <= M; ++k) x[static_cast<size_t>(k)] = frac(num(rng), den(rng));

        XSeries arg(M, 0);
        for (int k = 1; k <= M; ++k)
            arg.set_coeff(k, QSeries::constant(x[static_cast<size_t>(k)] / Rational(k), 0));
        const XSeries rhs = x_exp(arg);

        XSeries lhs(M, 0);
        for (int t = 0; t <= M; ++t) {
            Rational zt = 0;
            for (const auto& [lam, c] : cycle_index(t)) {
                Rational mono = c;
                for (int part : lam.parts()) mono *= x[static_cast<size_t>(part)];
                zt += mono;
            }
            lhs.set_coeff(t, QSeries::constant(zt, 0));
        }
        CHECK(lhs == rhs);
    }
}
