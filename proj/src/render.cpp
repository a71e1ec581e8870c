#include "ramanujan/render.hpp"

#include <sstream>

namespace ramanujan {

std::string rational_str(const Rational& r) { return r.get_str(); }

std::string monomial_str(const Partition& lambda) {
    if (lambda.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int k = 1; k <= lambda.max_part(); ++k) {
        const int mk = lambda.multiplicity(k);
        if (mk == 0) continue;
        if (!first) os << "*";
        os << "E" << 2 * k;
        if (mk > 1) os << "^" << mk;
        first = false;
    }
    return os.str();
}

std::string monomial_str(const std::array<int, 3>& key) {
    std::vector<int> mult{key[0], key[1], key[2]};
    return monomial_str(Partition(std::move(mult)));
}

namespace {

// coefficient*monomial terms joined with signed separators.
std::string joined_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, mono] : terms) {
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mag != 1 || mono == "1") {
            os << mag.get_str();
            if (mono != "1") os << "*";
        }
        if (mono != "1") os << mono;
    }
    return os.str();
}

}  // namespace

std::string trace_text(Series s, const QuasimodularPoly& p) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [lambda, c] : p.terms()) terms.emplace_back(c, monomial_str(lambda));
    std::ostringstream os;
    os << series_name(s) << "_" << p.weight() << " = " << joined_terms(terms);
    return os.str();
}

ordered_json trace_json(Series s, const QuasimodularPoly& p) {
    ordered_json j;
    j["series"] = series_name(s);
    j["t"] = p.t();
    j["weight"] = p.weight();
    j["terms"] = ordered_json::array();
    for (const auto& [lambda, c] : p.terms()) {
        ordered_json term;
        term["partition"] = lambda.parts();
        term["coefficient"] = rational_str(c);
        j["terms"].push_back(std::move(term));
    }
    return j;
}

std::string reduce_text(const E246Poly& p) {
    std::ostringstream os;
    for (const auto& [key, c] : p.terms())
        os << "(" << key[0] << "," << key[1] << "," << key[2] << ") = " << rational_str(c)
           << "\n";
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [key, c] : p.terms()) terms.emplace_back(c, monomial_str(key));
    os << "polynomial: " << joined_terms(terms);
    return os.str();
}

ordered_json reduce_json(const E246Poly& p) {
    ordered_json j;
    j["monomials"] = ordered_json::array();
    for (const auto& [key, c] : p.terms()) {
        ordered_json m;
        m["l"] = key[0];
        m["m"] = key[1];
        m["n"] = key[2];
        m["K"] = rational_str(c);
        j["monomials"].push_back(std::move(m));
    }
    return j;
}

namespace {

std::string coeff_row(const QSeries& a) {
    std::ostringstream os;
    for (int i = 0; i <= a.order(); ++i) {
        if (i > 0) os << " ";
        os << rational_str(a[i]);
    }
    return os.str();
}

}  // namespace

std::string qexpand_text(const QSeries& oracle, const QSeries& traced, bool equal) {
    std::ostringstream os;
    os << "oracle: " << coeff_row(oracle) << "\n";
    os << "trace:  " << coeff_row(traced) << "\n";
    os << "equal: " << (equal ? "true" : "false");
    return os.str();
}

ordered_json qexpand_json(const QSeries& oracle, bool equal) {
    ordered_json j;
    j["coeffs"] = ordered_json::array();
    for (int i = 0; i <= oracle.order(); ++i) j["coeffs"].push_back(rational_str(oracle[i]));
    j["equal"] = equal;
    return j;
}

std::string verify_text(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  [";
        if (r.xorder >= 0) os << "xorder=" << r.xorder << ", ";
        os << "qorder=" << r.qorder << "]";
        if (!r.detail.empty()) os << "  " << r.detail;
        os << "\n";
    }
    os << (all_passed(reports) ? "all checks passed" : "CHECKS FAILED");
    return os.str();
}

ordered_json verify_json(const std::vector<CheckReport>& reports) {
    ordered_json j;
    j["checks"] = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json c;
        c["name"] = r.name;
        c["passed"] = r.passed;
        if (r.xorder >= 0) c["xorder"] = r.xorder;
        c["qorder"] = r.qorder;
        c["detail"] = r.detail;
        j["checks"].push_back(std::move(c));
    }
    j["all_passed"] = all_passed(reports);
    return j;
}

}  // namespace ramanujan
