#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glc/curve.hpp"
#include "glc/lattice.hpp"
#include "glc/mumford.hpp"

namespace glc {

using FpDivisor = Mumford<PadicResidue>;
using FpJacobian = Jacobian<PadicResidue>;
using QDivisor = Mumford<Rational>;
using QJacobian = Jacobian<Rational>;
using DivisorKey = std::vector<u64>;

FpJacobian fp_jacobian(const HyperellipticCurve& c);
QJacobian q_jacobian(const HyperellipticCurve& c);
DivisorKey divisor_key(const FpDivisor& d);
/// [P - infinity] for an F_p-point (identity for infinity).
FpDivisor point_class(const FpJacobian& J, const FpPoint& pt);

/// A point of a formal class: exact rational, or a Z_p-point at finite precision.
struct ClassPoint {
    bool is_rational = true;
    RationalPoint rational;
    LocalPoint local;

    static ClassPoint of(const RationalPoint& p) { return ClassPoint{true, p, LocalPoint{}}; }
    static ClassPoint of(const LocalPoint& p) { return ClassPoint{false, RationalPoint{}, p}; }
};

FpPoint reduction(const HyperellipticCurve& c, const ClassPoint& pt);
ClassPoint involution(const HyperellipticCurve& c, const ClassPoint& pt);

/// sum_i n_i [P_i - infinity].
struct FormalClass {
    std::vector<std::pair<ClassPoint, long long>> terms;

    static FormalClass point(const ClassPoint& p, long long n = 1) { return FormalClass{{{p, n}}}; }
    FormalClass scaled(long long n) const;
    FormalClass operator-() const { return scaled(-1); }
    friend FormalClass operator+(const FormalClass& a, const FormalClass& b);
    friend FormalClass operator-(const FormalClass& a, const FormalClass& b) { return a + (-b); }
    bool all_rational() const;
};

/// Integer combination of formal classes.
FormalClass combine(const std::vector<FormalClass>& gens, const std::vector<long long>& coeffs);
FormalClass combine(const std::vector<FormalClass>& gens, const IntRow& coeffs);

/// Image in J(F_p) (Cantor sum of the reductions).
FpDivisor reduce_mod_p(const HyperellipticCurve& c, const FpJacobian& J, const FormalClass& fc);

struct QReduction {
    QDivisor divisor;
    bool p_integral = false;
    std::optional<FpDivisor> reduction;
};

/// Exact Mumford form over Q and its reduction when p-integral.
QReduction reduce_formal(const HyperellipticCurve& c, const FormalClass& fc);

/// Order of a class dividing group_order.
u64 element_order(const FpJacobian& J, const FpDivisor& d, u64 group_order);

/// Places of degree <= g over F_q as classes [P - deg(P) infinity], in a fixed
/// order (degree, then x-code). The visitor returns false to stop.
void visit_places(const HyperellipticCurve& c, const std::function<bool(const FpDivisor&)>& visit, u64 cap = 1000000);

/// Exponent of J(F_p) as the lcm of the orders of a generating set of places.
u64 group_exponent(const HyperellipticCurve& c, u64 group_order, u64 cap = 1000000);

/// |J(F_p)| by enumerating all Mumford pairs.
u64 brute_force_jacobian_order(const HyperellipticCurve& c);

/// Subgroup of J(F_p) generated by the given images, with a coefficient word for
/// every element and the relation lattice {c : sum c_i gen_i = 0}.
class SubgroupTable {
  public:
    SubgroupTable(const FpJacobian& J, std::vector<FpDivisor> gens, u64 cap = 1000000);

    std::size_t size() const { return elements_.size(); }
    const std::vector<FpDivisor>& elements() const { return elements_; }
    const std::vector<FpDivisor>& generators() const { return gens_; }
    const IntegerLattice& kernel() const { return kernel_; }

    std::optional<IntRow> word(const FpDivisor& target) const;
    /// Word reduced modulo the kernel lattice (pivot coordinates in [0, pivot)).
    std::optional<IntRow> canonical_word(const FpDivisor& target) const;
    /// The element named by a word.
    FpDivisor evaluate(const IntRow& word) const;

  private:
    const FpJacobian* J_;
    std::vector<FpDivisor> gens_;
    std::vector<FpDivisor> elements_;
    std::vector<IntRow> words_;
    std::map<DivisorKey, std::size_t> index_;
    IntegerLattice kernel_;
};

/// Kernel of reduction of the generators: {c : sum c_i G_i reduces to 0}.
IntegerLattice kernel_of_reduction_basis(const SubgroupTable& table);

enum class SaturationOutcome { Saturated, Inconclusive };

struct SaturationReport {
    SaturationOutcome outcome = SaturationOutcome::Inconclusive;
    u64 ell = 0;
    std::vector<u64> primes_used;
    /// Dimension over F_ell of the kernel of G/ell G -> prod J(F_q)/ell J(F_q).
    int kernel_dimension = -1;
    std::string note;
};

/// Checks that the subgroup generated by rational formal classes has index prime to ell,
/// using auxiliary primes q <= bound of good reduction with ell | |J(F_q)|.
SaturationReport saturation_check(const HyperellipticCurve& c, const std::vector<FormalClass>& gens, u64 ell,
                                  u64 aux_bound, u64 cap = 1000000);

}  // namespace glc
