#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "glc/filter.hpp"
#include "glc/glc.hpp"

namespace glc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCurveSchema = "glc-curve/1";
inline constexpr const char* kReportSchema = "glc-report/1";

/// Terms n_i [P_i - infinity] with P_i in input coordinates.
struct GeneratorSpec {
    std::vector<std::pair<RationalPoint, long long>> terms;
};

/// Exact rational point, or affine Z_p-point given by little-endian base-p digits.
struct CandidateSpec {
    std::string label;
    bool rational = false;
    RationalPoint point;
    std::vector<u64> x, y;
    bool negate_y = false;
};

/// Finite lifts are affine digit lists (input coordinates); infinity lifts give t = x^g / y.
struct LiftPointSpec {
    std::vector<u64> x, y, t;
};

struct LiftSpec {
    bool infinity = false;
    u64 x = 0, y = 0;  // disk center in input coordinates
    LiftPointSpec q0, q1;
};

struct RunOptions {
    int precision = 1;
    u64 aux_prime_bound = 100;
    u64 cap = 1000000;
    int filter_precision_cap = 2;
};

struct CurveDescription {
    std::string label;
    std::vector<Rational> f, h;
    u64 p = 0;
    RationalPoint basepoint = RationalPoint::at_infinity();
    std::vector<RationalPoint> known_points;
    std::vector<GeneratorSpec> generators;
    std::vector<CandidateSpec> candidates;
    std::vector<LiftSpec> lifts;
    RunOptions options;
};

/// Throws ParseError naming the offending field as a JSON pointer.
CurveDescription parse_description(const Json& doc);
/// Parses text; syntax errors report line and column.
CurveDescription parse_description_text(const std::string& text);
CurveDescription read_description(const std::string& path);
Json to_json(const CurveDescription& d);

/// Validated curve with every point converted to model coordinates.
struct Problem {
    CurveDescription description;
    HyperellipticCurve curve;
    RationalPoint basepoint;
    std::vector<RationalPoint> known_points;
    std::vector<FormalClass> generators;
    std::vector<Candidate> candidates;
    std::map<FpPoint, DiskLifts> lifts;
};

/// Throws NotOnCurve / InvalidInput with the field path in the message.
Problem build_problem(const CurveDescription& d);

/// Model F_p-point to input coordinates and back.
FpPoint fp_to_input(const HyperellipticCurve& c, const FpPoint& model);
FpPoint fp_from_input(const HyperellipticCurve& c, const FpPoint& input);

Json point_json(const RationalPoint& p);
Json fp_point_json(const HyperellipticCurve& c, const FpPoint& model);
Json log_json(const LogVector& v);
Json error_json(const GlcError& e);

Json validate_report(const Problem& pr);
Json points_report(const Problem& pr);
Json order_report(const Problem& pr);
Json sieve_report(const Problem& pr, const GlcSetup& s);
Json glc_report(const Problem& pr, const GlcSetup& s, const GlcReport& r);
Json filter_report(const Problem& pr, const std::vector<FilterResult>& results);
Json saturation_json(const SaturationReport& r);

/// Report envelope: schema, command, input echo, then the body fields.
Json wrap_report(const std::string& command, const Problem& pr, const Json& body);

}  // namespace glc
