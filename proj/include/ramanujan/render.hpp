#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ramanujan/qseries.hpp"
#include "ramanujan/quasimodular.hpp"
#include "ramanujan/reduce.hpp"
#include "ramanujan/report.hpp"

namespace ramanujan {

using ordered_json = nlohmann::ordered_json;

/// Lowest-terms "p/q"; integers render without the "/1".
std::string rational_str(const Rational& r);

/// "E2^3*E4" for (1^3, 2); "1" for the empty partition.
std::string monomial_str(const Partition& lambda);
/// "E2^l*E4^m*E6^n" for an exponent triple; "1" for (0,0,0).
std::string monomial_str(const std::array<int, 3>& key);

std::string trace_text(Series s, const QuasimodularPoly& p);
ordered_json trace_json(Series s, const QuasimodularPoly& p);

std::string reduce_text(const E246Poly& p);
ordered_json reduce_json(const E246Poly& p);

std::string qexpand_text(const QSeries& oracle, const QSeries& traced, bool equal);
ordered_json qexpand_json(const QSeries& oracle, bool equal);

std::string verify_text(const std::vector<CheckReport>& reports);
ordered_json verify_json(const std::vector<CheckReport>& reports);

}  // namespace ramanujan
