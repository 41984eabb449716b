#include "glc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "glc/io.hpp"

namespace glc {

namespace {

const std::vector<std::string> kCommands{"validate", "points", "order", "sieve", "glc", "filter", "saturate"};

struct Flags {
    std::string command;
    std::string file;
    std::optional<int> precision;
    std::optional<u64> aux_prime_bound;
    bool json = false;
    bool allow_unsaturated = false;
    bool order_primes = false;
};

bool is_input_error(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidInput:
        case ErrorCode::ParseError:
        case ErrorCode::BadReduction:
        case ErrorCode::EvenDegree:
        case ErrorCode::PrimeTwo:
        case ErrorCode::UnsupportedGenus:
        case ErrorCode::DistinctDisks:
        case ErrorCode::NotOnCurve:
            return true;
        default:
            return false;
    }
}

std::string text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string disk_text(const Json& d) {
    if (d.is_string()) return "(1:0:0)";
    return "(" + text(d["x"]) + ":" + text(d["y"]) + ":1)";
}

/// Primes other than p that can divide [im M : im G] in J(F_p).
std::vector<u64> sieve_primes(const Problem& pr, const GlcSetup& s) {
    u64 order = count_and_lpoly(pr.curve, pr.description.options.cap).at_one().get_ui();
    std::vector<u64> out;
    for (const auto& [q, e] : factorize(order / s.table->size()))
        if (q != pr.curve.prime()) out.push_back(q);
    return out;
}

/// Saturation at p is always required; saturation at the sieve primes only when
/// some disk or candidate was removed by the sieve.
Json check_saturation(const Problem& pr, const GlcSetup& s, u64 aux, bool sieve_used) {
    Json reps = Json::array();
    std::vector<u64> ells{pr.curve.prime()};
    if (sieve_used)
        for (u64 q : sieve_primes(pr, s)) ells.push_back(q);
    for (u64 ell : ells) {
        SaturationReport rep = saturation_check(pr.curve, pr.generators, ell, aux, pr.description.options.cap);
        if (rep.outcome != SaturationOutcome::Saturated)
            fail(ErrorCode::Unsaturated, "generators not shown saturated at " + std::to_string(ell) + " (" + rep.note +
                                             "); pass --allow-unsaturated to proceed");
        reps.push_back(saturation_json(rep));
    }
    return reps;
}

void render_text(const std::string& cmd, const Json& r, std::ostream& out) {
    if (!r["input"]["label"].get<std::string>().empty()) out << "curve " << text(r["input"]["label"]) << "\n";
    if (cmd == "validate") {
        out << "valid: genus " << r["genus"] << " at p = " << r["p"] << "\n";
    } else if (cmd == "points") {
        out << "#C(F_p) = " << r["count"] << "\n";
        for (const auto& e : r["points"]) out << "  " << disk_text(e["point"]) << "  " << text(e["kind"]) << "\n";
    } else if (cmd == "order") {
        out << "#J(F_p) = " << r["jacobian_order"] << "\n";
        out << "L-polynomial coefficients: " << r["l_polynomial"].dump() << "\n";
        for (std::size_t i = 0; i < r["generator_orders"].size(); ++i)
            out << "order of generator " << i + 1 << " mod p: " << r["generator_orders"][i] << "\n";
    } else if (cmd == "sieve") {
        out << "subgroup of order " << r["subgroup_order"] << ", " << r["passing"] << " disks pass\n";
        for (const auto& e : r["sieve"])
            out << "  " << disk_text(e["disk"]) << "  " << (e["pass"].get<bool>() ? "pass  T = " + e["witness"].dump() : "fail")
                << "\n";
    } else if (cmd == "glc") {
        out << "#J(F_p) = " << r["jacobian_order"] << "\n";
        out << "mbar0 columns " << r["mbar0"]["columns"].dump() << ", reduction " << text(r["mbar0"]["reduction"]) << "\n";
        for (const auto& d : r["disks"]) {
            out << "  " << disk_text(d["disk"]) << "  " << text(d["verdict"]);
            if (d.contains("d_column")) out << "  D = " << d["d_column"].dump() << "  v = " << d["v"].dump();
            if (!d["known_point"].is_null()) out << "  known " << d["known_point"].dump();
            out << "\n";
        }
        const Json& s = r["summary"];
        if (s["conclusive"].get<bool>())
            out << "bound: #C(Q) <= " << s["bound"] << "\n";
        else
            out << "inconclusive: " << s["undetermined_disks"].size() << " undetermined disk(s)\n";
    } else if (cmd == "filter") {
        for (const auto& e : r["results"])
            out << "  " << text(e["label"]) << "  " << disk_text(e["disk"]) << "  " << text(e["classification"]) << "\n";
        out << "retained: " << r["retained"].dump() << "\n";
    } else if (cmd == "saturate") {
        for (const auto& e : r["saturation"])
            out << "  ell = " << e["ell"] << "  " << text(e["outcome"]) << (text(e["note"]).empty() ? "" : "  " + text(e["note"]))
                << "\n";
    }
}

Json execute(const Flags& fl, const Problem& pr) {
    const std::string& cmd = fl.command;
    const RunOptions& opt = pr.description.options;
    u64 aux = fl.aux_prime_bound.value_or(opt.aux_prime_bound);
    if (cmd == "validate") return validate_report(pr);
    if (cmd == "points") return points_report(pr);
    if (cmd == "order") return order_report(pr);
    if (cmd == "saturate") {
        std::vector<u64> ells{pr.curve.prime()};
        if (fl.order_primes) {
            u64 n = count_and_lpoly(pr.curve, opt.cap).at_one().get_ui();
            for (const auto& [q, e] : factorize(n))
                if (std::find(ells.begin(), ells.end(), q) == ells.end()) ells.push_back(q);
        }
        Json reps = Json::array();
        bool all = true;
        for (u64 ell : ells) {
            SaturationReport rep = saturation_check(pr.curve, pr.generators, ell, aux, opt.cap);
            all = all && rep.outcome == SaturationOutcome::Saturated;
            reps.push_back(saturation_json(rep));
        }
        return Json{{"saturation", reps}, {"outcome", all ? "Saturated" : "Inconclusive"}};
    }
    GlcSetup s = GlcSetup::make(pr.curve, pr.generators, pr.basepoint, opt.cap);
    if (cmd == "sieve") return sieve_report(pr, s);
    Json body;
    bool sieve_used = false;
    if (cmd == "glc") {
        GlcReport r = glc_curve(s, pr.known_points, pr.lifts, opt.precision);
        for (const auto& d : r.disks) sieve_used = sieve_used || d.outcome == Verdict::SieveFail;
        body = glc_report(pr, s, r);
    } else {
        int cap = fl.precision ? *fl.precision + 1 : opt.filter_precision_cap;
        auto res = filter_candidates(s, pr.candidates, FilterOptions{cap});
        for (const auto& r : res) sieve_used = sieve_used || r.classification == Classification::Condition1;
        body = filter_report(pr, res);
    }
    body["saturation"] = fl.allow_unsaturated ? Json("skipped") : check_saturation(pr, s, aux, sieve_used);
    return body;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mod-p geometric linear Chabauty for odd-degree hyperelliptic curves", "glc"};
    Flags fl;
    app.add_option("command", fl.command, "validate | points | order | sieve | glc | filter | saturate")
        ->required()
        ->check(CLI::IsMember(kCommands));
    app.add_option("curve", fl.file, "curve description (JSON)")->required();
    app.add_option("--precision", fl.precision, "log precision M: vectors are reported modulo p^M")->check(CLI::Range(1, 60));
    app.add_flag("--json", fl.json, "machine-readable report on stdout");
    app.add_option("--aux-prime-bound", fl.aux_prime_bound, "largest auxiliary prime for saturation checks")
        ->check(CLI::Range(3, 1 << 20));
    app.add_flag("--allow-unsaturated", fl.allow_unsaturated, "skip the saturation check at p");
    app.add_flag("--primes-dividing-order", fl.order_primes, "saturate: also check every prime dividing #J(F_p)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        CurveDescription d = read_description(fl.file);
        if (fl.precision) d.options.precision = *fl.precision;
        if (fl.aux_prime_bound) d.options.aux_prime_bound = *fl.aux_prime_bound;
        Problem pr = build_problem(d);
        Json report = wrap_report(fl.command, pr, execute(fl, pr));
        if (fl.json)
            out << report.dump(2) << "\n";
        else
            render_text(fl.command, report, out);
        return kExitOk;
    } catch (const GlcError& e) {
        if (fl.json)
            out << error_json(e).dump(2) << "\n";
        else
            err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return is_input_error(e.code()) ? kExitInput : kExitComputation;
    }
}

}  // namespace glc
