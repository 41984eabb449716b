#include "glc/filter.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "glc/modlinalg.hpp"

namespace glc {

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::Retained: return "Retained";
        case Classification::Condition1: return "Condition1";
        case Classification::Condition2: return "Condition2";
    }
    return "?";
}

bool saturation_shortcut_check(const HyperellipticCurve& c) {
    return count_and_lpoly(c).at_one() % static_cast<unsigned long>(c.prime()) != 0;
}

std::vector<FilterResult> filter_candidates(const GlcSetup& s, const std::vector<Candidate>& candidates,
                                            const FilterOptions& opt) {
    const HyperellipticCurve& c = s.curve;
    std::vector<IntRow> rows = kernel_of_reduction_basis(*s.table).basis;
    std::map<int, std::vector<ModVector>> kernel_logs;
    auto logs_at = [&](int M) -> const std::vector<ModVector>& {
        auto it = kernel_logs.find(M);
        if (it != kernel_logs.end()) return it->second;
        std::vector<ModVector> cols;
        for (const auto& row : rows) cols.push_back(kernel_log(c, combine(s.generators, row), {M}));
        return kernel_logs.emplace(M, std::move(cols)).first->second;
    };
    bool shortcut = saturation_shortcut_check(c);

    std::vector<FilterResult> out;
    for (const auto& cand : candidates) {
        FilterResult r;
        r.candidate = cand;
        const ClassPoint& P = cand.point;
        if (P.is_rational && !P.rational.infinity && !c.on_curve(P.rational))
            fail(ErrorCode::NotOnCurve, "candidate " + cand.label + " is not on the curve");
        int m = P.is_rational ? INT_MAX : P.local.precision();
        if (m < 2) fail(ErrorCode::InsufficientPrecision, "candidate " + cand.label + " needs at least 2 p-adic digits");
        r.disk = reduction(c, P);
        SieveEntry e = sieve_disk(s, r.disk);
        if (!e.pass) {
            r.classification = Classification::Condition1;
            r.certificate.note = "the class of the reduction minus the basepoint is outside the image of the generators";
            out.push_back(std::move(r));
            continue;
        }
        int N = std::min(m, opt.precision_cap);
        if (N < 2) fail(ErrorCode::InsufficientPrecision, "working precision must be at least 2");
        int M = N - 1;
        r.certificate.precision = N;
        r.certificate.witness = e.witness;
        r.certificate.log = kernel_log(c, s.minus_basepoint(P) - combine(s.generators, e.witness), {M});
        const auto& cols = logs_at(M);
        SpanTest t = cols.empty() ? SpanTest{std::all_of(r.certificate.log.begin(), r.certificate.log.end(),
                                                         [](const PadicResidue& x) { return x.is_zero(); }),
                                             r.certificate.log, {}}
                                  : span_membership(cols, r.certificate.log);
        if (t.member) {
            r.classification = Classification::Retained;
            r.certificate.note = "not refuted modulo p^" + std::to_string(M);
        } else {
            r.classification = Classification::Condition2;
            r.certificate.residual = t.residual;
            r.certificate.note = "log(R - b - T) is outside the span of the kernel logs modulo p^" + std::to_string(M);
            if (shortcut) r.certificate.note += "; since p does not divide |J(F_p)|, equivalently log(R - b) is not in log M";
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace glc
