#include "ramanujan/reduce.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <vector>

namespace ramanujan {

namespace {

// Weight-2k monomials E_4^a E_6^b, i.e. solutions of 2a + 3b = k, b ascending.
std::vector<std::pair<int, int>> weight_monomials(int k) {
    std::vector<std::pair<int, int>> ms;
    for (int b = 0; 3 * b <= k; ++b)
        if ((k - 3 * b) % 2 == 0) ms.emplace_back((k - 3 * b) / 2, b);
    return ms;
}

QSeries monomial_series(int a, int b, int N) {
    return power(eisenstein(2, N), a) * power(eisenstein(3, N), b);
}

// Exact Gaussian elimination on an overdetermined system; returns the unique
// solution or throws SingularSystem (rank deficiency or inconsistent rows).
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> aug, size_t cols,
                                  const std::string& context) {
    const size_t rows = aug.size();
    size_t row = 0;
    std::vector<size_t> pivot_rows;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && aug[piv][col] == 0) ++piv;
        if (piv == rows)
            throw SingularSystem(context + ": no pivot for column " + std::to_string(col));
        std::swap(aug[piv], aug[row]);
        const Rational inv = Rational(1) / aug[row][col];
        for (size_t j = col; j <= cols; ++j) aug[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            const Rational f = aug[i][col];
            for (size_t j = col; j <= cols; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_rows.push_back(row);
        ++row;
    }
    if (row < cols)
        throw SingularSystem(context + ": rank " + std::to_string(row) + " below " +
                             std::to_string(cols));
    for (size_t i = row; i < rows; ++i)
        if (aug[i][cols] != 0)
            throw SingularSystem(context + ": inconsistent row " + std::to_string(i));
    std::vector<Rational> x(cols);
    for (size_t i = 0; i < cols; ++i) x[i] = aug[i][cols];
    return x;
}

}  // namespace

namespace {

ModularRelation solve_relation(int k, int window_margin) {
    const auto monomials = weight_monomials(k);
    const size_t d = monomials.size();
    const int window = static_cast<int>(d) + window_margin;
    const int N = window - 1;

    const QSeries target = eisenstein(k, N);
    std::vector<QSeries> cols;
    cols.reserve(d);
    for (const auto& [a, b] : monomials) cols.push_back(monomial_series(a, b, N));

    std::vector<std::vector<Rational>> aug(static_cast<size_t>(window),
                                           std::vector<Rational>(d + 1));
    for (int i = 0; i < window; ++i) {
        for (size_t j = 0; j < d; ++j) aug[static_cast<size_t>(i)][j] = cols[j][i];
        aug[static_cast<size_t>(i)][d] = target[i];
    }
    const auto x =
        solve_exact(std::move(aug), d, "modular_relation(E_" + std::to_string(2 * k) + ")");

    ModularRelation rel;
    rel.k = k;
    for (size_t j = 0; j < d; ++j)
        if (x[j] != 0) rel.combo.emplace(monomials[j], x[j]);
    return rel;
}

}  // namespace

ModularRelation modular_relation(int k, int nverify, int window_margin) {
    if (k < 4) throw std::invalid_argument("modular_relation: k must be >= 4");
    if (window_margin < 0) throw std::invalid_argument("modular_relation: negative margin");

    static std::map<std::pair<int, int>, ModularRelation> cache;
    static std::mutex mtx;
    ModularRelation rel;
    {
        std::lock_guard<std::mutex> lock(mtx);
        const auto it = cache.find({k, window_margin});
        if (it != cache.end()) rel = it->second;
    }
    if (rel.combo.empty()) {
        rel = solve_relation(k, window_margin);
        std::lock_guard<std::mutex> lock(mtx);
        cache.insert({{k, window_margin}, rel});
    }

    // Verify far past the solve window, on every call.
    QSeries rebuilt(nverify);
    for (const auto& [ab, c] : rel.combo)
        rebuilt += c * monomial_series(ab.first, ab.second, nverify);
    const QSeries target = eisenstein(k, nverify);
    for (int i = 0; i <= nverify; ++i)
        if (rebuilt[i] != target[i])
            throw VerificationFailed("modular_relation(E_" + std::to_string(2 * k) +
                                     "): mismatch at q^" + std::to_string(i));
    return rel;
}

E246Poly::E246Poly(int t, TermMap terms) : t_(t) {
    for (auto it = terms.begin(); it != terms.end();) {
        const auto& [l, m, n] = it->first;
        if (l < 0 || m < 0 || n < 0 || l + 2 * m + 3 * n != t_)
            throw std::invalid_argument("E246Poly: key violates weight homogeneity");
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    }
    terms_ = std::move(terms);
}

Rational E246Poly::coefficient(const std::array<int, 3>& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

QSeries expand_e246(const E246Poly& p, int N) {
    QSeries r(N);
    for (const auto& [key, c] : p.terms()) {
        std::vector<int> mult{key[0], key[1], key[2]};
        r += c * partition_eisenstein(Partition(std::move(mult)), N);
    }
    return r;
}

namespace {

using TripleMap = E246Poly::TermMap;

TripleMap multiply(const TripleMap& a, const TripleMap& b) {
    TripleMap r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const std::array<int, 3> key{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
            auto [it, inserted] = r.emplace(key, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

}  // namespace

E246Poly to_e246(const QuasimodularPoly& p, int nverify) {
    TripleMap acc;
    for (const auto& [lambda, coeff] : p.terms()) {
        TripleMap term{{{lambda.multiplicity(1), lambda.multiplicity(2), lambda.multiplicity(3)},
                        coeff}};
        // Substitute the E_4/E_6 relation for every part k >= 4, largest first.
        for (int k = lambda.max_part(); k >= 4; --k) {
            const int mk = lambda.multiplicity(k);
            if (mk == 0) continue;
            const ModularRelation rel = modular_relation(k, nverify);
            TripleMap relmap;
            for (const auto& [ab, c] : rel.combo)
                relmap.emplace(std::array<int, 3>{0, ab.first, ab.second}, c);
            for (int rep = 0; rep < mk; ++rep) term = multiply(term, relmap);
        }
        for (const auto& [key, c] : term) {
            auto [it, inserted] = acc.emplace(key, c);
            if (!inserted) it->second += c;
        }
    }
    E246Poly result(p.t(), std::move(acc));

    const QSeries before = expand(p, nverify);
    const QSeries after = expand_e246(result, nverify);
    for (int i = 0; i <= nverify; ++i)
        if (before[i] != after[i])
            throw VerificationFailed("to_e246: q-expansion changed at q^" + std::to_string(i));
    return result;
}

E246Poly k_table(Series s, int t, int nverify) {
    if (t < 1) throw std::invalid_argument("k_table: t must be >= 1");
    const PartitionWeight phi = s == Series::U ? PartitionWeight::phi_u_weight()
                                               : PartitionWeight::phi_v_weight();
    return to_e246(trace(phi, t), nverify);
}

}  // namespace ramanujan
