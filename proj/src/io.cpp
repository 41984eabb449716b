#include "glc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace glc {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
    fail(ErrorCode::ParseError, (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void require_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) parse_fail(path, "expected an object");
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) parse_fail(child(path, k), "unknown field");
    }
}

const Json& require_field(const Json& j, const std::string& path, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) parse_fail(child(path, key), "missing field");
    return *it;
}

Rational parse_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(BigInt(j.dump()));
    if (!j.is_string()) parse_fail(path, "expected a rational as a string such as \"-1/2\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const GlcError& e) {
        parse_fail(path, e.what());
    }
}

long long parse_int(const Json& j, const std::string& path, long long lo, long long hi) {
    if (!j.is_number_integer()) parse_fail(path, "expected an integer");
    long long v = j.get<long long>();
    if (v < lo || v > hi) parse_fail(path, "value " + std::to_string(v) + " out of range");
    return v;
}

std::vector<Rational> parse_coeffs(const Json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected a list of coefficients, constant term first");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_rational(j[i], child(path, i)));
    return out;
}

RationalPoint parse_point(const Json& j, const std::string& path) {
    if (j.is_string() && j.get<std::string>() == "infinity") return RationalPoint::at_infinity();
    if (!j.is_object()) parse_fail(path, "expected \"infinity\" or {\"x\": ..., \"y\": ...}");
    require_object(j, path, {"x", "y"});
    return RationalPoint{false, parse_rational(require_field(j, path, "x"), child(path, "x")),
                         parse_rational(require_field(j, path, "y"), child(path, "y"))};
}

std::vector<u64> parse_digits(const Json& j, const std::string& path, u64 p) {
    if (!j.is_array() || j.empty()) parse_fail(path, "expected a nonempty list of base-p digits, least significant first");
    std::vector<u64> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(static_cast<u64>(parse_int(j[i], child(path, i), 0, static_cast<long long>(p) - 1)));
    return out;
}

GeneratorSpec parse_generator(const Json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected a list of {\"point\": ..., \"coeff\": n} terms");
    GeneratorSpec g;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string tp = child(path, i);
        require_object(j[i], tp, {"point", "coeff"});
        long long n = 1;
        if (j[i].contains("coeff")) n = parse_int(j[i]["coeff"], child(tp, "coeff"), -(1LL << 40), 1LL << 40);
        g.terms.emplace_back(parse_point(require_field(j[i], tp, "point"), child(tp, "point")), n);
    }
    return g;
}

CandidateSpec parse_candidate(const Json& j, const std::string& path, u64 p) {
    require_object(j, path, {"label", "point", "x", "y", "negate_y"});
    CandidateSpec c;
    const Json& label = require_field(j, path, "label");
    if (!label.is_string()) parse_fail(child(path, "label"), "expected a string");
    c.label = label.get<std::string>();
    if (j.contains("point")) {
        if (j.contains("x") || j.contains("y") || j.contains("negate_y"))
            parse_fail(path, "give either \"point\" or digit lists \"x\", \"y\", not both");
        c.rational = true;
        c.point = parse_point(j["point"], child(path, "point"));
        return c;
    }
    c.x = parse_digits(require_field(j, path, "x"), child(path, "x"), p);
    c.y = parse_digits(require_field(j, path, "y"), child(path, "y"), p);
    if (j.contains("negate_y")) {
        if (!j["negate_y"].is_boolean()) parse_fail(child(path, "negate_y"), "expected true or false");
        c.negate_y = j["negate_y"].get<bool>();
    }
    return c;
}

LiftPointSpec parse_lift_point(const Json& j, const std::string& path, u64 p, bool infinity) {
    LiftPointSpec q;
    if (infinity) {
        require_object(j, path, {"t"});
        q.t = parse_digits(require_field(j, path, "t"), child(path, "t"), p);
    } else {
        require_object(j, path, {"x", "y"});
        q.x = parse_digits(require_field(j, path, "x"), child(path, "x"), p);
        q.y = parse_digits(require_field(j, path, "y"), child(path, "y"), p);
    }
    return q;
}

LiftSpec parse_lift(const Json& j, const std::string& path, u64 p) {
    require_object(j, path, {"disk", "q0", "q1"});
    LiftSpec l;
    const Json& disk = require_field(j, path, "disk");
    std::string dp = child(path, "disk");
    if (disk.is_string() && disk.get<std::string>() == "infinity") {
        l.infinity = true;
    } else {
        require_object(disk, dp, {"x", "y"});
        long long top = static_cast<long long>(p) - 1;
        l.x = static_cast<u64>(parse_int(require_field(disk, dp, "x"), child(dp, "x"), 0, top));
        l.y = static_cast<u64>(parse_int(require_field(disk, dp, "y"), child(dp, "y"), 0, top));
    }
    l.q0 = parse_lift_point(require_field(j, path, "q0"), child(path, "q0"), p, l.infinity);
    l.q1 = parse_lift_point(require_field(j, path, "q1"), child(path, "q1"), p, l.infinity);
    return l;
}

RunOptions parse_options(const Json& j, const std::string& path) {
    require_object(j, path, {"precision", "aux_prime_bound", "cap", "filter_precision_cap"});
    RunOptions o;
    if (j.contains("precision")) o.precision = static_cast<int>(parse_int(j["precision"], child(path, "precision"), 1, 60));
    if (j.contains("aux_prime_bound"))
        o.aux_prime_bound = static_cast<u64>(parse_int(j["aux_prime_bound"], child(path, "aux_prime_bound"), 3, 1LL << 20));
    if (j.contains("cap")) o.cap = static_cast<u64>(parse_int(j["cap"], child(path, "cap"), 1, 1LL << 40));
    if (j.contains("filter_precision_cap"))
        o.filter_precision_cap = static_cast<int>(parse_int(j["filter_precision_cap"], child(path, "filter_precision_cap"), 2, 60));
    return o;
}

Json rational_json(const Rational& r) { return r.str(); }

Json coeffs_json(const std::vector<Rational>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(rational_json(c));
    return a;
}

Json digits_json(const std::vector<u64>& d) { return Json(d); }

Json bigint_json(const BigInt& n) {
    if (n.fits_slong_p()) return Json(n.get_si());
    return n.get_str();
}

Json row_json(const IntRow& r) {
    Json a = Json::array();
    for (const auto& x : r) a.push_back(bigint_json(x));
    return a;
}

Json lift_point_json(const LiftPointSpec& q, bool infinity) {
    Json o = Json::object();
    if (infinity) {
        o["t"] = digits_json(q.t);
    } else {
        o["x"] = digits_json(q.x);
        o["y"] = digits_json(q.y);
    }
    return o;
}

PadicResidue h_at(const HyperellipticCurve& c, const PadicResidue& x) {
    if (c.h_input().coeffs().empty()) return x.zero();
    u64 p = c.prime();
    int N = x.precision();
    return c.h_input().map([&](const Rational& a) { return PadicResidue::from_rational(p, N, a); }).eval(x);
}

/// Affine point from input-coordinate digits, in model coordinates.
LocalPoint digits_to_local(const HyperellipticCurve& c, const std::vector<u64>& xd, const std::vector<u64>& yd, bool negate_y,
                           const std::string& path) {
    u64 p = c.prime();
    int N = static_cast<int>(std::min(xd.size(), yd.size()));
    PadicResidue X = PadicResidue::from_digits(p, xd).reduce(N), Y = PadicResidue::from_digits(p, yd).reduce(N);
    if (negate_y) Y = -Y;
    try {
        return local_point(c, X, Y + h_at(c, X) * X.of(2).inv());
    } catch (const GlcError& e) {
        fail(e.code(), path + ": " + e.what());
    }
}

LocalPoint lift_to_local(const HyperellipticCurve& c, const ResidueDisk& d, const LiftPointSpec& q, const std::string& path) {
    if (d.kind == DiskKind::Infinity) {
        PadicResidue t = PadicResidue::from_digits(c.prime(), q.t);
        if (t.is_unit() || t.precision() < 2) fail(ErrorCode::InvalidInput, path + ": t must be divisible by p with at least 2 digits");
        return LocalPoint{d, t, std::nullopt, std::nullopt};
    }
    LocalPoint L = digits_to_local(c, q.x, q.y, false, path);
    if (!(L.disk == d)) fail(ErrorCode::DistinctDisks, path + ": lift does not reduce to the stated disk");
    if (L.precision() < 2) fail(ErrorCode::InsufficientPrecision, path + ": lifts need at least 2 digits");
    return L;
}

RationalPoint checked_model_point(const HyperellipticCurve& c, const RationalPoint& input, const std::string& path) {
    if (input.infinity) return input;
    RationalPoint m = c.to_model(input);
    if (!c.on_curve(m)) fail(ErrorCode::NotOnCurve, path + ": point is not on the curve");
    return m;
}

Json l_polynomial_json(const LPolynomial& L) {
    Json a = Json::array();
    for (const auto& x : L.coeffs) a.push_back(bigint_json(x));
    return a;
}

Json order_fields(const Problem& pr, const LPolynomial& L) {
    Json o = Json::object();
    BigInt n = L.at_one();
    o["jacobian_order"] = bigint_json(n);
    o["l_polynomial"] = l_polynomial_json(L);
    o["p_divides_order"] = n % pr.curve.prime() == 0;
    return o;
}

}  // namespace

CurveDescription parse_description(const Json& doc) {
    require_object(doc, "", {"schema", "label", "f", "h", "p", "basepoint", "known_points", "generators", "candidates", "lifts",
                              "options"});
    CurveDescription d;
    if (doc.contains("schema")) {
        if (!doc["schema"].is_string() || doc["schema"].get<std::string>() != kCurveSchema)
            parse_fail("/schema", std::string("expected \"") + kCurveSchema + "\"");
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) parse_fail("/label", "expected a string");
        d.label = doc["label"].get<std::string>();
    }
    d.f = parse_coeffs(require_field(doc, "", "f"), "/f");
    if (doc.contains("h")) d.h = parse_coeffs(doc["h"], "/h");
    d.p = static_cast<u64>(parse_int(require_field(doc, "", "p"), "/p", 2, 1LL << 31));
    if (doc.contains("basepoint")) d.basepoint = parse_point(doc["basepoint"], "/basepoint");
    if (doc.contains("known_points")) {
        const Json& k = doc["known_points"];
        if (!k.is_array()) parse_fail("/known_points", "expected a list of points");
        for (std::size_t i = 0; i < k.size(); ++i) d.known_points.push_back(parse_point(k[i], child("/known_points", i)));
    }
    if (doc.contains("generators")) {
        const Json& g = doc["generators"];
        if (!g.is_array()) parse_fail("/generators", "expected a list of generators");
        for (std::size_t i = 0; i < g.size(); ++i) d.generators.push_back(parse_generator(g[i], child("/generators", i)));
    }
    if (doc.contains("candidates")) {
        const Json& c = doc["candidates"];
        if (!c.is_array()) parse_fail("/candidates", "expected a list of candidates");
        for (std::size_t i = 0; i < c.size(); ++i) d.candidates.push_back(parse_candidate(c[i], child("/candidates", i), d.p));
    }
    if (doc.contains("lifts")) {
        const Json& l = doc["lifts"];
        if (!l.is_array()) parse_fail("/lifts", "expected a list of disk lifts");
        for (std::size_t i = 0; i < l.size(); ++i) d.lifts.push_back(parse_lift(l[i], child("/lifts", i), d.p));
    }
    if (doc.contains("options")) d.options = parse_options(doc["options"], "/options");
    return d;
}

CurveDescription parse_description_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
    return parse_description(doc);
}

CurveDescription read_description(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_description_text(buf.str());
}

Json point_json(const RationalPoint& p) {
    if (p.infinity) return "infinity";
    return Json{{"x", rational_json(p.x)}, {"y", rational_json(p.y)}};
}

Json to_json(const CurveDescription& d) {
    Json o = Json::object();
    o["schema"] = kCurveSchema;
    o["label"] = d.label;
    o["f"] = coeffs_json(d.f);
    o["h"] = coeffs_json(d.h);
    o["p"] = d.p;
    o["basepoint"] = point_json(d.basepoint);
    Json known = Json::array();
    for (const auto& k : d.known_points) known.push_back(point_json(k));
    o["known_points"] = known;
    Json gens = Json::array();
    for (const auto& g : d.generators) {
        Json terms = Json::array();
        for (const auto& [pt, n] : g.terms) terms.push_back(Json{{"point", point_json(pt)}, {"coeff", n}});
        gens.push_back(terms);
    }
    o["generators"] = gens;
    Json cands = Json::array();
    for (const auto& c : d.candidates) {
        Json e = Json::object();
        e["label"] = c.label;
        if (c.rational) {
            e["point"] = point_json(c.point);
        } else {
            e["x"] = digits_json(c.x);
            e["y"] = digits_json(c.y);
            e["negate_y"] = c.negate_y;
        }
        cands.push_back(e);
    }
    o["candidates"] = cands;
    Json lifts = Json::array();
    for (const auto& l : d.lifts) {
        Json e = Json::object();
        e["disk"] = l.infinity ? Json("infinity") : Json{{"x", l.x}, {"y", l.y}};
        e["q0"] = lift_point_json(l.q0, l.infinity);
        e["q1"] = lift_point_json(l.q1, l.infinity);
        lifts.push_back(e);
    }
    o["lifts"] = lifts;
    o["options"] = Json{{"precision", d.options.precision},
                        {"aux_prime_bound", d.options.aux_prime_bound},
                        {"cap", d.options.cap},
                        {"filter_precision_cap", d.options.filter_precision_cap}};
    return o;
}

FpPoint fp_to_input(const HyperellipticCurve& c, const FpPoint& model) {
    if (model.infinity) return model;
    PadicResidue X(c.prime(), 1, model.x);
    PadicResidue y = PadicResidue(c.prime(), 1, model.y) - h_at(c, X) * X.of(2).inv();
    return FpPoint{false, model.x, y.value()};
}

FpPoint fp_from_input(const HyperellipticCurve& c, const FpPoint& input) {
    if (input.infinity) return input;
    PadicResidue X(c.prime(), 1, input.x);
    PadicResidue y = PadicResidue(c.prime(), 1, input.y) + h_at(c, X) * X.of(2).inv();
    return FpPoint{false, input.x, y.value()};
}

Problem build_problem(const CurveDescription& d) {
    Problem pr{d, HyperellipticCurve::validate(d.f, d.h, d.p), {}, {}, {}, {}, {}};
    const HyperellipticCurve& c = pr.curve;
    pr.basepoint = checked_model_point(c, d.basepoint, "/basepoint");
    for (std::size_t i = 0; i < d.known_points.size(); ++i)
        pr.known_points.push_back(checked_model_point(c, d.known_points[i], child("/known_points", i)));
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
        FormalClass g;
        for (std::size_t j = 0; j < d.generators[i].terms.size(); ++j) {
            const auto& [pt, n] = d.generators[i].terms[j];
            std::string path = child(child(child("/generators", i), j), "point");
            g = g + FormalClass::point(ClassPoint::of(checked_model_point(c, pt, path)), n);
        }
        pr.generators.push_back(g);
    }
    for (std::size_t i = 0; i < d.candidates.size(); ++i) {
        const CandidateSpec& cs = d.candidates[i];
        std::string path = child("/candidates", i);
        if (cs.rational)
            pr.candidates.push_back(Candidate{cs.label, ClassPoint::of(checked_model_point(c, cs.point, child(path, "point")))});
        else
            pr.candidates.push_back(Candidate{cs.label, ClassPoint::of(digits_to_local(c, cs.x, cs.y, cs.negate_y, path))});
    }
    for (std::size_t i = 0; i < d.lifts.size(); ++i) {
        const LiftSpec& l = d.lifts[i];
        std::string path = child("/lifts", i);
        FpPoint center = l.infinity ? FpPoint::at_infinity() : fp_from_input(c, FpPoint{false, l.x, l.y});
        if (!center.infinity && !c.on_curve_mod_p(center)) fail(ErrorCode::NotOnCurve, child(path, "disk") + ": not a point mod p");
        ResidueDisk disk = disk_of(c, center);
        if (pr.lifts.count(center)) fail(ErrorCode::InvalidInput, child(path, "disk") + ": disk listed twice");
        pr.lifts[center] = DiskLifts{lift_to_local(c, disk, l.q0, child(path, "q0")), lift_to_local(c, disk, l.q1, child(path, "q1"))};
    }
    return pr;
}

Json fp_point_json(const HyperellipticCurve& c, const FpPoint& model) {
    if (model.infinity) return "infinity";
    FpPoint in = fp_to_input(c, model);
    return Json{{"x", in.x}, {"y", in.y}};
}

Json log_json(const LogVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.value());
    return a;
}

Json error_json(const GlcError& e) {
    return Json{{"schema", kReportSchema}, {"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
}

Json wrap_report(const std::string& command, const Problem& pr, const Json& body) {
    Json o = Json::object();
    o["schema"] = kReportSchema;
    o["command"] = command;
    o["input"] = to_json(pr.description);
    for (const auto& [k, v] : body.items()) o[k] = v;
    return o;
}

Json validate_report(const Problem& pr) {
    const HyperellipticCurve& c = pr.curve;
    Json o = Json::object();
    o["valid"] = true;
    o["genus"] = c.genus();
    o["p"] = c.prime();
    o["model_f"] = coeffs_json(c.f().coeffs());
    o["known_points"] = pr.known_points.size();
    o["generators"] = pr.generators.size();
    o["candidates"] = pr.candidates.size();
    o["lifts"] = pr.lifts.size();
    return o;
}

Json points_report(const Problem& pr) {
    const HyperellipticCurve& c = pr.curve;
    Json pts = Json::array();
    for (const auto& Q : enumerate_points(c)) {
        Json e = Json::object();
        e["point"] = fp_point_json(c, Q);
        e["kind"] = disk_kind_name(disk_of(c, Q).kind);
        pts.push_back(e);
    }
    Json o = Json::object();
    o["count"] = pts.size();
    o["points"] = pts;
    return o;
}

Json order_report(const Problem& pr) {
    const HyperellipticCurve& c = pr.curve;
    LPolynomial L = count_and_lpoly(c, pr.description.options.cap);
    Json o = order_fields(pr, L);
    BigInt n = L.at_one();
    Json factors = Json::array();
    for (const auto& [q, e] : factorize(n.get_ui())) factors.push_back(Json::array({q, e}));
    o["factorization"] = factors;
    FpJacobian J = fp_jacobian(c);
    Json orders = Json::array();
    for (const auto& g : pr.generators) orders.push_back(element_order(J, reduce_mod_p(c, J, g), n.get_ui()));
    o["generator_orders"] = orders;
    return o;
}

Json sieve_report(const Problem& pr, const GlcSetup& s) {
    const HyperellipticCurve& c = pr.curve;
    Json rows = Json::array();
    std::size_t pass = 0;
    for (const auto& e : sieve_at_p(s)) {
        Json r = Json::object();
        r["disk"] = fp_point_json(c, e.disk);
        r["pass"] = e.pass;
        r["witness"] = e.pass ? row_json(e.witness) : Json(nullptr);
        rows.push_back(r);
        pass += e.pass;
    }
    Json o = Json::object();
    o["subgroup_order"] = s.table->size();
    o["passing"] = pass;
    o["sieve"] = rows;
    return o;
}

Json glc_report(const Problem& pr, const GlcSetup& s, const GlcReport& r) {
    const HyperellipticCurve& c = pr.curve;
    Json o = order_fields(pr, count_and_lpoly(c, pr.description.options.cap));
    Json sieve = Json::array();
    for (const auto& e : r.sieve) {
        sieve.push_back(Json{{"disk", fp_point_json(c, e.disk)}, {"pass", e.pass},
                             {"witness", e.pass ? row_json(e.witness) : Json(nullptr)}});
    }
    o["subgroup_order"] = s.table->size();
    o["sieve"] = sieve;
    Json rows = Json::array(), cols = Json::array();
    for (const auto& k : r.mbar.kernel_rows) rows.push_back(row_json(k));
    for (const auto& col : r.mbar.columns) cols.push_back(log_json(col));
    o["mbar0"] = Json{{"kernel_rows", rows}, {"columns", cols}, {"rank", r.mbar.rank}, {"reduction", reduction_name(r.mbar.flag)}};
    Json disks = Json::array();
    Json points = Json::array(), unresolved = Json::array(), undetermined = Json::array();
    for (const auto& d : r.disks) {
        Json e = Json::object();
        e["disk"] = fp_point_json(c, d.disk);
        e["kind"] = disk_kind_name(disk_of(c, d.disk).kind);
        e["verdict"] = verdict_name(d.outcome);
        if (d.outcome != Verdict::SieveFail) {
            e["witness"] = row_json(d.witness);
            if (!d.phi.empty()) {
                e["d_column"] = log_json(d.d_column);
                Json phi = Json::array();
                for (const auto& col : d.phi) phi.push_back(log_json(col));
                e["phi_columns"] = phi;
                e["v"] = log_json(d.v);
                e["phi_rank"] = d.phi_rank;
            }
            e["lambda"] = d.lambda ? Json(*d.lambda) : Json(nullptr);
        }
        e["known_point"] = d.known_point ? point_json(c.to_input(*d.known_point)) : Json(nullptr);
        if (!d.diagnostic.empty()) e["diagnostic"] = d.diagnostic;
        if (d.outcome == Verdict::AtMostOne) (d.known_point ? points : unresolved).push_back(fp_point_json(c, d.disk));
        if (d.outcome == Verdict::Undetermined) undetermined.push_back(fp_point_json(c, d.disk));
        disks.push_back(e);
    }
    o["precision"] = pr.description.options.precision;
    o["disks"] = disks;
    Json known = Json::array();
    for (const auto& d : r.disks)
        if (d.outcome == Verdict::AtMostOne && d.known_point) known.push_back(point_json(c.to_input(*d.known_point)));
    o["summary"] = Json{{"conclusive", r.conclusive},
                        {"bound", r.conclusive ? Json(r.bound) : Json(nullptr)},
                        {"at_most_one_disks", r.bound},
                        {"surviving_disks", r.surviving.size()},
                        {"known_points_certified", known},
                        {"unresolved_disks", unresolved},
                        {"undetermined_disks", undetermined}};
    return o;
}

Json filter_report(const Problem& pr, const std::vector<FilterResult>& results) {
    const HyperellipticCurve& c = pr.curve;
    Json rows = Json::array(), retained = Json::array();
    for (const auto& r : results) {
        Json e = Json::object();
        e["label"] = r.candidate.label;
        e["disk"] = fp_point_json(c, r.disk);
        e["classification"] = classification_name(r.classification);
        Json cert = Json::object();
        cert["precision"] = r.certificate.precision;
        if (r.classification != Classification::Condition1) {
            cert["witness"] = row_json(r.certificate.witness);
            cert["log"] = log_json(r.certificate.log);
            Json res = Json::array();
            for (const auto& x : r.certificate.residual) res.push_back(x.value());
            cert["residual"] = res;
        }
        if (!r.certificate.note.empty()) cert["note"] = r.certificate.note;
        e["certificate"] = cert;
        rows.push_back(e);
        if (r.classification == Classification::Retained) retained.push_back(r.candidate.label);
    }
    Json o = Json::object();
    o["saturation_shortcut"] = saturation_shortcut_check(c);
    o["results"] = rows;
    o["retained"] = retained;
    return o;
}

Json saturation_json(const SaturationReport& r) {
    return Json{{"ell", r.ell},
                {"outcome", r.outcome == SaturationOutcome::Saturated ? "Saturated" : "Inconclusive"},
                {"primes_used", r.primes_used},
                {"kernel_dimension", r.kernel_dimension},
                {"note", r.note}};
}

}  // namespace glc
