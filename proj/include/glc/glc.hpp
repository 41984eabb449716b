#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glc/coleman.hpp"
#include "glc/jacobian.hpp"

namespace glc {

/// Curve, generators G_i of the Mordell-Weil subgroup, basepoint b, and the
/// subgroup of J(F_p) they generate.
struct GlcSetup {
    HyperellipticCurve curve;
    std::vector<FormalClass> generators;
    RationalPoint basepoint;
    std::shared_ptr<const FpJacobian> jac;
    std::shared_ptr<const SubgroupTable> table;

    static GlcSetup make(const HyperellipticCurve& c, std::vector<FormalClass> gens, const RationalPoint& b,
                         u64 cap = 1000000);
    /// [P - infinity] - [b - infinity].
    FormalClass minus_basepoint(const ClassPoint& P) const;
};

struct SieveEntry {
    FpPoint disk;
    bool pass = false;
    IntRow witness;  // T = sum witness_i G_i when pass
};

/// Disks in C(F_p) order; Pass iff Q - b lies in the image of the generators.
std::vector<SieveEntry> sieve_at_p(const GlcSetup& s);
SieveEntry sieve_disk(const GlcSetup& s, const FpPoint& Q);

enum class Reduction { Good, Bad };
const char* reduction_name(Reduction r);

struct MbarZero {
    std::vector<IntRow> kernel_rows;
    std::vector<LogVector> columns;  // kernel_log of each row
    int rank = 0;
    Reduction flag = Reduction::Bad;
};

MbarZero mbar0(const GlcSetup& s, int precision = 1);

enum class Verdict { SieveFail, LinearFail, AtMostOne, Undetermined };
const char* verdict_name(Verdict v);

struct DiskLifts {
    LocalPoint q0, q1;
};

struct DiskVerdict {
    FpPoint disk;
    Verdict outcome = Verdict::SieveFail;
    IntRow witness;
    LogVector d_column;
    std::vector<LogVector> phi;  // columns: D, then the mbar0 columns
    LogVector v;
    int phi_rank = 0;
    /// Solution of phi x = -v when unique; x[0] = lambda along q0 -> q1.
    std::optional<u64> lambda;
    std::optional<RationalPoint> known_point;
    std::string diagnostic;
};

/// Default lifts: canonical lifts with mu = 0 and mu = 1 at precision M + 1.
DiskLifts default_lifts(const HyperellipticCurve& c, const FpPoint& Q, int precision = 1);

DiskVerdict glc_disk(const GlcSetup& s, const MbarZero& mb, const SieveEntry& sieve,
                     const std::optional<DiskLifts>& lifts = std::nullopt, int precision = 1);

struct GlcReport {
    std::vector<SieveEntry> sieve;
    MbarZero mbar;
    std::vector<DiskVerdict> disks;
    bool conclusive = false;
    std::size_t bound = 0;  // number of AtMostOne disks when conclusive
    std::vector<FpPoint> surviving;
};

GlcReport glc_curve(const GlcSetup& s, const std::vector<RationalPoint>& known,
                    const std::map<FpPoint, DiskLifts>& lifts = {}, int precision = 1);

}  // namespace glc
