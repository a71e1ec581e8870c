// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "ramanujan/bivariate.hpp"
#include "ramanujan/quasimodular.hpp"
#include "ramanujan/reduce.hpp"
#include "ramanujan/theta.hpp"

using namespace ramanujan;

namespace {

struct Criterion {
    int number;
    const char* description;
    std::function<bool()> run;
    double budget_seconds;  // 0 = no stated budget
};

const CharacterSpec& chi_minus8() {
    static const CharacterSpec chi(
        {Rational(0), Rational(1), Rational(0), Rational(1), Rational(0), Rational(-1),
         Rational(0), Rational(-1)},
        Parity::odd, "chi_-8");
    return chi;
}

bool criterion_main_theorem() {
    for (int t = 1; t <= 8; ++t) {
        if (!(expand(trace(PartitionWeight::phi_u_weight(), t), 50) == oracle_u(t, 50)))
            return false;
        if (!(expand(trace(PartitionWeight::phi_v_weight(), t), 50) == oracle_v(t, 50)))
            return false;
    }
    return true;
}

bool criterion_printed_traces() {
    const auto u6 = trace(PartitionWeight::phi_u_weight(), 3);
    if (u6.terms().size() != 3) return false;
    if (u6.coefficient(Partition::from_parts({3})) != frac(16, 9)) return false;
    if (u6.coefficient(Partition::from_parts({2, 1})) != frac(-42, 9)) return false;
    if (u6.coefficient(Partition::from_parts({1, 1, 1})) != frac(35, 9)) return false;

    const auto v8 = trace(PartitionWeight::phi_v_weight(), 4);
    if (v8.terms().size() != 5) return false;
    return v8.coefficient(Partition::from_parts({4})) == Rational(-272) &&
           v8.coefficient(Partition::from_parts({3, 1})) == Rational(448) &&
           v8.coefficient(Partition::from_parts({2, 2})) == Rational(140) &&
           v8.coefficient(Partition::from_parts({2, 1, 1})) == Rational(-420) &&
           v8.coefficient(Partition::from_parts({1, 1, 1, 1})) == Rational(105);
}

bool criterion_weight14_traces() {
    // Printed coefficient vectors of the weight-14 examples, in canonical
    // partition order. The U vector is printed with a cleared prefactor:
    // multiplying the trace coefficients by 27 reproduces it exactly.
    const std::vector<std::pair<std::vector<int>, long>> u14{
        {{7}, 552960},          {{6, 1}, -1061376},      {{5, 2}, -419328},
        {{5, 1, 1}, 1048320},   {{4, 3}, -329472},       {{4, 2, 1}, 864864},
        {{4, 1, 1, 1}, -720720}, {{3, 3, 1}, 366080},    {{3, 2, 2}, 192192},
        {{3, 2, 1, 1}, -960960}, {{3, 1, 1, 1, 1}, 400400}, {{2, 2, 2, 1}, -168168},
        {{2, 2, 1, 1, 1}, 420420}, {{2, 1, 1, 1, 1, 1}, -210210},
        {{1, 1, 1, 1, 1, 1, 1}, 25025}};
    const std::vector<std::pair<std::vector<int>, long>> v14{
        {{7}, 22368256},        {{6, 1}, -32195072},     {{5, 2}, -15887872},
        {{5, 1, 1}, 23831808},  {{4, 3}, -13069056},     {{4, 2, 1}, 24504480},
        {{4, 1, 1, 1}, -12252240}, {{3, 3, 1}, 10762752}, {{3, 2, 2}, 6726720},
        {{3, 2, 1, 1}, -20180160}, {{3, 1, 1, 1, 1}, 5045040}, {{2, 2, 2, 1}, -4204200},
        {{2, 2, 1, 1, 1}, 6306300}, {{2, 1, 1, 1, 1, 1}, -1891890},
        {{1, 1, 1, 1, 1, 1, 1}, 135135}};

    const auto tu = trace(PartitionWeight::phi_u_weight(), 7);
    if (tu.terms().size() != u14.size()) return false;
    for (const auto& [parts, printed] : u14)
        if (Rational(27) * tu.coefficient(Partition::from_parts(parts)) != Rational(printed))
            return false;

    const auto tv = trace(PartitionWeight::phi_v_weight(), 7);
    if (tv.terms().size() != v14.size()) return false;
    for (const auto& [parts, printed] : v14)
        if (tv.coefficient(Partition::from_parts(parts)) != Rational(printed)) return false;
    return true;
}

bool criterion_odes() { return all_passed(verify_ramanujan_odes(100)); }

bool criterion_genfun() {
    return check_genfun(Series::U, 11, 30).passed && check_genfun(Series::V, 10, 30).passed;
}

bool criterion_lemma() {
    return check_lemma_genfun(CharacterSpec::chi_minus4(), 9, 30).passed &&
           check_lemma_genfun(CharacterSpec::chi_12(), 9, 30).passed &&
           check_lemma_genfun(chi_minus8(), 9, 30).passed;
}

bool criterion_products() {
    return check_jacobi_products(1, 9, 25).passed && check_jacobi_products(2, 9, 25).passed &&
           check_product_theorem(Series::U, 9, 25).passed &&
           check_product_theorem(Series::V, 9, 25).passed;
}

bool criterion_key_identity() { return all_passed(check_key_identity(9, 20)); }

bool criterion_lambert_closed_form() {
    for (int j : {1, 3, 5, 7, 9}) {
        const Rational c = bernoulli(static_cast<unsigned>(j) + 1) / Rational(2 * (j + 1));
        const QSeries rhs = c * (QSeries::constant(1, 50) - eisenstein((j + 1) / 2, 50));
        if (!(lambert_s(j, 50) == rhs)) return false;
    }
    return true;
}

bool criterion_classical_theta() { return all_passed(verify_classical_identities(500)); }

bool criterion_modular_relations() {
    for (int k = 4; k <= 7; ++k) modular_relation(k, 60);  // throws on failure
    const auto r7 = modular_relation(7, 60);
    if (r7.combo.size() != 1 || r7.combo.at({2, 1}) != Rational(1)) return false;
    for (int t = 1; t <= 7; ++t) {
        if (!(expand_e246(k_table(Series::U, t, 40), 40) == oracle_u(t, 40))) return false;
        if (!(expand_e246(k_table(Series::V, t, 40), 40) == oracle_v(t, 40))) return false;
    }
    return true;
}

bool criterion_phi_v_integrality() {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : enumerate_partitions(n))
            if (phi_v(lam).get_den() != 1) return false;
    return true;
}

bool criterion_property_suites() {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    const auto rnd = [&] { return frac(num(rng), den(rng)); };

    // Ring axioms on random rational triples.
    for (int i = 0; i < 100; ++i) {
        const Rational a = rnd(), b = rnd(), c = rnd();
        if ((a + b) + c != a + (b + c)) return false;
        if (a * (b + c) != a * b + a * c) return false;
        if (a != 0 && a * (Rational(1) / a) != Rational(1)) return false;
    }

    // Leibniz rule and inversion round-trips on random series.
    for (int i = 0; i < 10; ++i) {
        std::vector<Rational> ca(31), cb(31);
        for (auto& x : ca) x = rnd();
        for (auto& x : cb) x = rnd();
        if (ca[0] == 0) ca[0] = 1;
        const QSeries a{std::move(ca)}, b{std::move(cb)};
        if (!(q_derivative(a * b) == q_derivative(a) * b + a * q_derivative(b))) return false;
        if (!(a * invert(a) == QSeries::constant(1, 30))) return false;
    }

    // p(n) counts against the pentagonal recurrence.
    std::vector<long> p(41);
    p[0] = 1;
    for (int n = 1; n <= 40; ++n) {
        long s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            const int sign = k % 2 == 1 ? 1 : -1;
            if (g1 <= n) s += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) s += sign * p[static_cast<size_t>(n - g2)];
        }
        p[static_cast<size_t>(n)] = s;
    }
    for (int n = 0; n <= 40; ++n)
        if (static_cast<long>(enumerate_partitions(n).size()) != p[static_cast<size_t>(n)])
            return false;

    // Cycle types partition the symmetric group.
    for (int t = 0; t <= 12; ++t) {
        Integer total = 0;
        const Integer tf = factorial(static_cast<unsigned>(t));
        for (const auto& lam : enumerate_partitions(t)) total += tf / z_stat(lam);
        if (total != tf) return false;
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "main theorem: expand(trace) == oracle for t=1..8 at order 50, both series",
         criterion_main_theorem, 30.0},
        {2, "printed trace coefficients for U_6 and V_8", criterion_printed_traces, 0},
        {3, "weight-14 trace forms match the printed coefficient vectors",
         criterion_weight14_traces, 0},
        {4, "Ramanujan ODEs hold identically to order 100", criterion_odes, 5.0},
        {5, "generating functions: genfun(U,11,30) and genfun(V,10,30)", criterion_genfun,
         60.0},
        {6, "lemma generating function for chi_-4, chi_12, and a period-8 odd table",
         criterion_lemma, 0},
        {7, "product identities at M=9, N=25 (all four checks)", criterion_products, 0},
        {8, "key identity at (9,20) and sinc/Bernoulli identity to X^12",
         criterion_key_identity, 0},
        {9, "Lambert closed form for j in {1,3,5,7,9} at order 50",
         criterion_lambert_closed_form, 0},
        {10, "classical theta identities at order 500", criterion_classical_theta, 0},
        {11, "modular relations k=4..7 at order 60; reductions q-expand to the oracle",
         criterion_modular_relations, 0},
        {12, "phi_V integrality for all partitions of n <= 12", criterion_phi_v_integrality,
         0},
        {13, "property suites: ring axioms, Leibniz, inversion, p(n), cycle index",
         criterion_property_suites, 0},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && elapsed > c.budget_seconds) ok = false;
        all_ok = all_ok && ok;
        std::printf("%s  %2d. %s  (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.description, elapsed, error.empty() ? "" : "  error: ",
                    error.c_str());
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                               : "acceptance: CRITERIA FAILED");
    return all_ok ? 0 : 1;
}
