#pragma once

#include <string>

#include "json.hpp"
#include "dreg/regularity.hpp"

namespace dreg {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

// Rationals are strings "p/q" (or "p"), so documents stay exact.
Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const std::vector<MultiPoly>& polys);
Json to_json(const RankResult& r);
Json to_json(const ComponentRecord& r);
Json to_json(const Divisor& d);
Json to_json(const SingularLocus& s);
Json to_json(const RegularityReport& r);

// Keys sorted, two-space indent, trailing newline, "schema" added.
std::string emit(Json doc);

std::string emit_report(const RegularityReport& report);
std::string emit_report(const Divisor& divisor);
std::string emit_report(const RankResult& rank);

}  // namespace dreg
