#pragma once

#include "wopt/model.hpp"
#include "wopt/weak_optimality.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace wopt {

// Malformed input. The message names the offending field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

// Instance file:
//   {"version": "1", "dims": {"k":..,"l":..,"m":..,"n":..},
//    "Af": [[iv, ..], ..], "An": .., "Bf": .., "Bn": ..,
//    "a": [iv, ..], "b": .., "cf": .., "cn": ..,
//    "point": {"xf": [r, ..], "xn": [r, ..]}}
// A rational r is a string "p", "p/q", a decimal string, or a JSON integer.
// An interval iv is [lo, hi] or a single rational. Absent blocks are crisp
// zero blocks of the inferred shape; "dims" is optional.
struct Instance {
    std::string version = kFormatVersion;
    IlpData data;
    std::optional<Point> point;
};

// Interval system Bf xf <= b, as read by `reduce`: {"Bf": .., "b": ..}.
struct IntervalSystem {
    IntervalMatrix Bf;
    IntervalVector b;
};

struct Report {
    VerdictTag verdict = VerdictTag::NotWeaklyOptimal;
    Point point;
    std::optional<Witness> witness;
    DecisionStats stats;
    std::optional<double> wall_time_ms;
    std::vector<SignVector> feasible_orthants;
    bool exhaustive = false;
};

Rational rational_from_json(const Json& j, const std::string& field);
Json to_json(const Rational& value);
Interval interval_from_json(const Json& j, const std::string& field);
Json to_json(const Interval& value);

Instance instance_from_json(const Json& j);
Json to_json(const Instance& instance);
Json to_json(const IlpData& data);

Point point_from_json(const Json& j, const std::string& field = "point");
Json to_json(const Point& x);

IntervalSystem interval_system_from_json(const Json& j);

// Empty blocks are reshaped to the shapes of data.
Scenario scenario_from_json(const Json& j, const IlpData& data, const std::string& field = "scenario");
Json to_json(const Scenario& s);
Witness witness_from_json(const Json& j, const IlpData& data);
Json to_json(const Witness& w);

Report report_from_json(const Json& j, const IlpData& data);
Json to_json(const Report& report);

// Parses text, turning syntax errors into InputError with line/column.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

} // namespace wopt
