#include "glc/glc.hpp"

#include "glc/modlinalg.hpp"

namespace glc {

GlcSetup GlcSetup::make(const HyperellipticCurve& c, std::vector<FormalClass> gens, const RationalPoint& b, u64 cap) {
    if (!b.infinity && !c.on_curve(b)) fail(ErrorCode::NotOnCurve, "basepoint is not on the curve");
    GlcSetup s;
    s.curve = c;
    s.generators = std::move(gens);
    s.basepoint = b;
    auto J = std::make_shared<FpJacobian>(fp_jacobian(c));
    std::vector<FpDivisor> images;
    for (const auto& g : s.generators) images.push_back(reduce_mod_p(c, *J, g));
    s.table = std::make_shared<SubgroupTable>(*J, std::move(images), cap);
    s.jac = std::move(J);
    return s;
}

FormalClass GlcSetup::minus_basepoint(const ClassPoint& P) const {
    return FormalClass::point(P) - FormalClass::point(ClassPoint::of(basepoint));
}

SieveEntry sieve_disk(const GlcSetup& s, const FpPoint& Q) {
    const FpJacobian& J = *s.jac;
    FpDivisor target = J.sub(point_class(J, Q), point_class(J, s.curve.reduce(s.basepoint)));
    SieveEntry e;
    e.disk = Q;
    if (auto w = s.table->canonical_word(target)) {
        e.pass = true;
        e.witness = *w;
    }
    return e;
}

std::vector<SieveEntry> sieve_at_p(const GlcSetup& s) {
    std::vector<SieveEntry> out;
    for (const auto& Q : enumerate_points(s.curve)) out.push_back(sieve_disk(s, Q));
    return out;
}

const char* reduction_name(Reduction r) { return r == Reduction::Good ? "Good" : "Bad"; }

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SieveFail: return "SieveFail";
        case Verdict::LinearFail: return "LinearFail";
        case Verdict::AtMostOne: return "AtMostOne";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

ModVector mod_p(const LogVector& v) {
    ModVector out;
    for (const auto& x : v) out.push_back(x.reduce(1));
    return out;
}

}  // namespace

MbarZero mbar0(const GlcSetup& s, int precision) {
    MbarZero mb;
    mb.kernel_rows = kernel_of_reduction_basis(*s.table).basis;
    std::vector<ModVector> cols;
    for (const auto& row : mb.kernel_rows) {
        mb.columns.push_back(kernel_log(s.curve, combine(s.generators, row), {precision}));
        cols.push_back(mod_p(mb.columns.back()));
    }
    std::size_t g = static_cast<std::size_t>(s.curve.genus());
    mb.rank = cols.empty() ? 0 : rank_mod_p(from_columns(cols, g, PadicResidue(s.curve.prime(), 1, 0)));
    mb.flag = mb.rank == static_cast<int>(mb.kernel_rows.size()) ? Reduction::Good : Reduction::Bad;
    return mb;
}

DiskLifts default_lifts(const HyperellipticCurve& c, const FpPoint& Q, int precision) {
    ResidueDisk d = disk_of(c, Q);
    return {canonical_lift(c, d, 0LL, precision + 1), canonical_lift(c, d, 1LL, precision + 1)};
}

DiskVerdict glc_disk(const GlcSetup& s, const MbarZero& mb, const SieveEntry& sieve,
                     const std::optional<DiskLifts>& lifts, int precision) {
    DiskVerdict out;
    out.disk = sieve.disk;
    out.witness = sieve.witness;
    if (!sieve.pass) {
        out.outcome = Verdict::SieveFail;
        return out;
    }
    const HyperellipticCurve& c = s.curve;
    DiskLifts L = lifts ? *lifts : default_lifts(c, sieve.disk, precision);
    if (!(L.q0.disk.center == sieve.disk) || !(L.q1.disk.center == sieve.disk))
        fail(ErrorCode::DistinctDisks, "supplied lifts do not reduce to the disk");
    try {
        ClassPoint q0 = ClassPoint::of(L.q0), q1 = ClassPoint::of(L.q1);
        out.d_column = kernel_log(c, FormalClass::point(q1) - FormalClass::point(q0), {precision});
        FormalClass T = combine(s.generators, sieve.witness);
        out.v = kernel_log(c, s.minus_basepoint(q0) - T, {precision});
    } catch (const GlcError& e) {
        out.outcome = Verdict::Undetermined;
        out.diagnostic = std::string(error_code_name(e.code())) + ": " + e.what();
        return out;
    }
    out.phi.push_back(out.d_column);
    for (const auto& col : mb.columns) out.phi.push_back(col);

    std::vector<ModVector> cols;
    for (const auto& col : out.phi) cols.push_back(mod_p(col));
    std::size_t g = static_cast<std::size_t>(c.genus());
    PadicResidue zero(c.prime(), 1, 0);
    out.phi_rank = rank_mod_p(from_columns(cols, g, zero));
    ModVector target;
    for (const auto& x : mod_p(out.v)) target.push_back(-x);
    SpanTest t = span_membership(cols, target);
    if (!t.member) {
        out.outcome = Verdict::LinearFail;
    } else if (out.phi_rank == static_cast<int>(cols.size())) {
        out.outcome = Verdict::AtMostOne;
        out.lambda = t.solution.at(0).value();
    } else {
        out.outcome = Verdict::Undetermined;
        out.diagnostic = "solution space of dimension " + std::to_string(cols.size() - static_cast<std::size_t>(out.phi_rank)) +
                         " over F_p";
    }
    return out;
}

GlcReport glc_curve(const GlcSetup& s, const std::vector<RationalPoint>& known,
                    const std::map<FpPoint, DiskLifts>& lifts, int precision) {
    GlcReport r;
    r.sieve = sieve_at_p(s);
    r.mbar = mbar0(s, precision);
    r.conclusive = true;
    for (const auto& e : r.sieve) {
        auto it = lifts.find(e.disk);
        std::optional<DiskLifts> L;
        if (it != lifts.end()) L = it->second;
        DiskVerdict v = glc_disk(s, r.mbar, e, L, precision);
        for (const auto& P : known)
            if (s.curve.reduce(P) == e.disk) v.known_point = P;
        if (v.known_point && (v.outcome == Verdict::SieveFail || v.outcome == Verdict::LinearFail))
            v.diagnostic = "a known rational point lies in a disk ruled out; generators are likely not saturated";
        if (v.outcome == Verdict::Undetermined) r.conclusive = false;
        if (v.outcome == Verdict::AtMostOne || v.outcome == Verdict::Undetermined) r.surviving.push_back(e.disk);
        if (v.outcome == Verdict::AtMostOne) ++r.bound;
        r.disks.push_back(std::move(v));
    }
    return r;
}

}  // namespace glc
