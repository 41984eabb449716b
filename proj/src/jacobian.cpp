#include "glc/jacobian.hpp"

#include <numeric>
#include <set>

#include "glc/modlinalg.hpp"

namespace glc {

FpJacobian fp_jacobian(const HyperellipticCurve& c) { return FpJacobian(c.f_mod(1), c.genus()); }
QJacobian q_jacobian(const HyperellipticCurve& c) { return QJacobian(c.f(), c.genus()); }

DivisorKey divisor_key(const FpDivisor& d) {
    DivisorKey k;
    k.push_back(static_cast<u64>(d.u.degree()));
    for (const auto& a : d.u.coeffs()) k.push_back(a.value());
    for (int i = 0; i < d.u.degree(); ++i) k.push_back(d.v[i].value());
    return k;
}

FpDivisor point_class(const FpJacobian& J, const FpPoint& pt) {
    if (pt.infinity) return J.identity();
    PadicResidue z = J.zero();
    return J.point(z.of(static_cast<long long>(pt.x)), z.of(static_cast<long long>(pt.y)));
}

FpPoint reduction(const HyperellipticCurve& c, const ClassPoint& pt) {
    return pt.is_rational ? c.reduce(pt.rational) : pt.local.disk.center;
}

ClassPoint involution(const HyperellipticCurve& c, const ClassPoint& pt) {
    if (pt.is_rational) return ClassPoint::of(c.involution(pt.rational));
    return ClassPoint::of(involution(c, pt.local));
}

FormalClass FormalClass::scaled(long long n) const {
    FormalClass r;
    for (const auto& [p, m] : terms)
        if (m * n != 0) r.terms.emplace_back(p, m * n);
    return r;
}

FormalClass operator+(const FormalClass& a, const FormalClass& b) {
    FormalClass r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

bool FormalClass::all_rational() const {
    for (const auto& t : terms)
        if (!t.first.is_rational) return false;
    return true;
}

FormalClass combine(const std::vector<FormalClass>& gens, const std::vector<long long>& coeffs) {
    FormalClass r;
    for (std::size_t i = 0; i < gens.size() && i < coeffs.size(); ++i) r = r + gens[i].scaled(coeffs[i]);
    return r;
}

FormalClass combine(const std::vector<FormalClass>& gens, const IntRow& coeffs) {
    std::vector<long long> c;
    for (const auto& x : coeffs) {
        if (!x.fits_slong_p()) fail(ErrorCode::InvalidInput, "coefficient too large");
        c.push_back(x.get_si());
    }
    return combine(gens, c);
}

FpDivisor reduce_mod_p(const HyperellipticCurve& c, const FpJacobian& J, const FormalClass& fc) {
    FpDivisor acc = J.identity();
    for (const auto& [pt, n] : fc.terms) acc = J.add(acc, J.mul(point_class(J, reduction(c, pt)), n));
    return acc;
}

QReduction reduce_formal(const HyperellipticCurve& c, const FormalClass& fc) {
    if (!fc.all_rational()) fail(ErrorCode::InvalidInput, "exact reduction needs rational points");
    QJacobian J = q_jacobian(c);
    QDivisor acc = J.identity();
    for (const auto& [pt, n] : fc.terms) {
        if (pt.rational.infinity) continue;
        if (!c.on_curve(pt.rational)) fail(ErrorCode::NotOnCurve, "point of a formal class is not on the curve");
        acc = J.add(acc, J.mul(J.point(pt.rational.x, pt.rational.y), n));
    }
    QReduction out{acc, true, std::nullopt};
    u64 p = c.prime();
    auto integral = [&](const RationalPoly& f) {
        for (const auto& a : f.coeffs())
            if (!a.is_zero() && a.valuation(p) < 0) return false;
        return true;
    };
    out.p_integral = integral(acc.u) && integral(acc.v);
    if (out.p_integral) {
        auto to_fp = [&](const Rational& a) { return PadicResidue::from_rational(p, 1, a); };
        PadicResidue z(p, 1, 0);
        FpDivisor d{acc.u.map(to_fp), acc.v.map(to_fp)};
        if (d.u.is_zero()) d.u = PadicPoly(z);
        if (d.v.is_zero()) d.v = PadicPoly(z);
        out.reduction = d;
    }
    return out;
}

u64 element_order(const FpJacobian& J, const FpDivisor& d, u64 group_order) {
    u64 ord = group_order;
    for (auto [ell, e] : factorize(group_order)) {
        (void)e;
        while (ord % ell == 0 && J.is_identity(J.mul(d, static_cast<long long>(ord / ell)))) ord /= ell;
    }
    return ord;
}

void visit_places(const HyperellipticCurve& c, const std::function<bool(const FpDivisor&)>& visit, u64 cap) {
    FpJacobian J = fp_jacobian(c);
    u64 q = c.prime();
    for (const auto& pt : enumerate_points(c))
        if (!pt.infinity && !visit(point_class(J, pt))) return;
    PadicResidue z(q, 1, 0);
    for (int d = 2; d <= c.genus(); ++d) {
        u64 size = prime_power(q, d);
        if (size > cap) fail(ErrorCode::CapExceeded, "place enumeration exceeds the cap");
        RingPtr ring = UnramifiedRing::make(q, 1, d);
        auto f = c.f_mod(1).map([&](const PadicResidue& a) { return UnramifiedElement::from_base(ring, a); });
        std::set<DivisorKey> seen;
        for (u64 code = 0; code < size; ++code) {
            auto x = UnramifiedElement::from_code(ring, code);
            if (x.in_base()) continue;
            auto fx = f.eval(x);
            std::vector<UnramifiedElement> ys;
            if (fx.is_zero()) {
                ys.push_back(fx);
            } else if (fx.quadratic_character() == 1) {
                auto y = field_sqrt(fx);
                ys.push_back(y);
                ys.push_back(-y);
            }
            if (ys.empty()) continue;
            std::vector<ModVector> cols;
            auto xi = x.one();
            for (int i = 0; i < d; ++i) {
                cols.push_back(xi.coeffs());
                xi = xi * x;
            }
            auto mp = span_membership(cols, (-xi).coeffs());
            std::vector<PadicResidue> uc = mp.solution;
            uc.push_back(z.one());
            PadicPoly u(std::move(uc), z);
            for (const auto& y : ys) {
                auto vs = span_membership(cols, y.coeffs());
                FpDivisor D{u, PadicPoly(vs.solution, z)};
                if (!seen.insert(divisor_key(D)).second) continue;
                if (!visit(D)) return;
            }
        }
    }
}

u64 group_exponent(const HyperellipticCurve& c, u64 group_order, u64 cap) {
    FpJacobian J = fp_jacobian(c);
    u64 m = 1;
    visit_places(c, [&](const FpDivisor& D) {
        m = std::lcm(m, element_order(J, D, group_order));
        return m != group_order;
    }, cap);
    return m;
}

u64 brute_force_jacobian_order(const HyperellipticCurve& c) {
    u64 p = c.prime();
    int g = c.genus();
    FpJacobian J = fp_jacobian(c);
    PadicResidue z(p, 1, 0);
    auto poly_of = [&](u64 code, int len, bool monic) {
        std::vector<PadicResidue> cs;
        for (int i = 0; i < len; ++i) {
            cs.push_back(PadicResidue(p, 1, code % p));
            code /= p;
        }
        if (monic) cs.push_back(z.one());
        return PadicPoly(std::move(cs), z);
    };
    u64 count = 0;
    for (int k = 0; k <= g; ++k) {
        u64 n = prime_power(p, k);
        for (u64 uc = 0; uc < n; ++uc) {
            PadicPoly u = poly_of(uc, k, true);
            for (u64 vc = 0; vc < n; ++vc) {
                FpDivisor D{u, poly_of(vc, k, false)};
                if (J.is_valid(D)) ++count;
            }
        }
    }
    return count;
}

SubgroupTable::SubgroupTable(const FpJacobian& J, std::vector<FpDivisor> gens, u64 cap)
    : J_(&J), gens_(std::move(gens)) {
    std::size_t r = gens_.size();
    kernel_.dimension = static_cast<int>(r);
    elements_.push_back(J.identity());
    words_.push_back(IntRow(r, BigInt(0)));
    index_[divisor_key(elements_[0])] = 0;
    std::vector<FpDivisor> negs;
    for (const auto& g : gens_) negs.push_back(J.neg(g));
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            for (int sign : {1, -1}) {
                FpDivisor e = J.add(elements_[i], sign > 0 ? gens_[j] : negs[j]);
                IntRow w = words_[i];
                w[j] += sign;
                auto key = divisor_key(e);
                auto it = index_.find(key);
                if (it == index_.end()) {
                    if (elements_.size() >= cap) fail(ErrorCode::CapExceeded, "subgroup exceeds the enumeration cap");
                    index_[key] = elements_.size();
                    elements_.push_back(std::move(e));
                    words_.push_back(std::move(w));
                    continue;
                }
                const IntRow& other = words_[it->second];
                for (std::size_t k = 0; k < r; ++k) w[k] -= other[k];
                if (!kernel_.contains(w)) {
                    auto rows = kernel_.basis;
                    rows.push_back(std::move(w));
                    kernel_ = hermite_normal_form(std::move(rows), static_cast<int>(r));
                }
            }
        }
    }
}

std::optional<IntRow> SubgroupTable::word(const FpDivisor& target) const {
    auto it = index_.find(divisor_key(target));
    if (it == index_.end()) return std::nullopt;
    return words_[it->second];
}

std::optional<IntRow> SubgroupTable::canonical_word(const FpDivisor& target) const {
    auto w = word(target);
    if (!w) return w;
    return kernel_.reduce(*w);
}

FpDivisor SubgroupTable::evaluate(const IntRow& word) const {
    FpDivisor acc = J_->identity();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        BigInt m = word.at(i);
        acc = J_->add(acc, J_->mul(gens_[i], m.get_si()));
    }
    return acc;
}

IntegerLattice kernel_of_reduction_basis(const SubgroupTable& table) { return table.kernel(); }

namespace {

// Subgroup generated by the given elements (closure under addition).
struct Closure {
    const FpJacobian& J;
    std::vector<FpDivisor> elems;
    std::set<DivisorKey> keys;

    explicit Closure(const FpJacobian& jac) : J(jac) {
        elems.push_back(J.identity());
        keys.insert(divisor_key(elems[0]));
    }
    bool contains(const FpDivisor& d) const { return keys.count(divisor_key(d)) > 0; }
    void adjoin(const FpDivisor& z, u64 cap) {
        if (contains(z)) return;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            FpDivisor e = J.add(elems[i], z);
            if (keys.insert(divisor_key(e)).second) {
                if (elems.size() >= cap) fail(ErrorCode::CapExceeded, "subgroup exceeds the enumeration cap");
                elems.push_back(std::move(e));
            }
        }
    }
};

}  // namespace

SaturationReport saturation_check(const HyperellipticCurve& c, const std::vector<FormalClass>& gens, u64 ell,
                                  u64 aux_bound, u64 cap) {
    SaturationReport rep;
    rep.ell = ell;
    if (!is_prime(ell)) fail(ErrorCode::InvalidInput, "saturation prime must be prime");
    std::size_t r = gens.size();
    for (const auto& g : gens)
        if (!g.all_rational()) fail(ErrorCode::InvalidInput, "saturation needs rational generators");
    if (prime_power(ell, static_cast<int>(r)) > cap) fail(ErrorCode::CapExceeded, "too many coefficient vectors");
    // nonzero candidates c in F_ell^r still in the kernel
    std::vector<std::vector<long long>> cand;
    u64 total = prime_power(ell, static_cast<int>(r));
    for (u64 code = 1; code < total; ++code) {
        std::vector<long long> v;
        u64 t = code;
        for (std::size_t i = 0; i < r; ++i) {
            v.push_back(static_cast<long long>(t % ell));
            t /= ell;
        }
        cand.push_back(std::move(v));
    }
    auto finish = [&]() {
        u64 size = cand.size() + 1;
        int dim = 0;
        while (size > 1) {
            size /= ell;
            ++dim;
        }
        rep.kernel_dimension = dim;
    };
    for (u64 q = 3; q <= aux_bound && !cand.empty(); q += 2) {
        if (!is_prime(q)) continue;
        HyperellipticCurve cq = [&] {
            try {
                return std::optional<HyperellipticCurve>(c.with_prime(q));
            } catch (const GlcError&) {
                return std::optional<HyperellipticCurve>();
            }
        }().value_or(HyperellipticCurve());
        if (cq.prime() != q) continue;
        BigInt order = count_and_lpoly(cq, cap).at_one();
        if (order % BigInt(static_cast<unsigned long>(ell)) != 0) continue;
        if (!order.fits_ulong_p()) continue;
        u64 n = order.get_ui(), ell_part = 1;
        while (n % ell == 0) {
            n /= ell;
            ell_part *= ell;
        }
        FpJacobian J = fp_jacobian(cq);
        Closure sylow(J);
        visit_places(cq, [&](const FpDivisor& D) {
            sylow.adjoin(J.mul(D, static_cast<long long>(n)), cap);
            return sylow.elems.size() < ell_part;
        }, cap);
        if (sylow.elems.size() != ell_part) fail(ErrorCode::Internal, "places did not generate the Sylow subgroup");
        Closure ell_multiples(J);
        for (const auto& e : sylow.elems) {
            FpDivisor m = J.mul(e, static_cast<long long>(ell));
            if (ell_multiples.keys.insert(divisor_key(m)).second) ell_multiples.elems.push_back(m);
        }
        std::vector<FpDivisor> images;
        for (const auto& g : gens) images.push_back(J.mul(reduce_mod_p(cq, J, g), static_cast<long long>(n)));
        std::erase_if(cand, [&](const std::vector<long long>& v) {
            FpDivisor s = J.identity();
            for (std::size_t i = 0; i < r; ++i) s = J.add(s, J.mul(images[i], v[i]));
            return !ell_multiples.contains(s);
        });
        rep.primes_used.push_back(q);
    }
    finish();
    if (cand.empty()) {
        rep.outcome = SaturationOutcome::Saturated;
        rep.note = "kernel is trivial";
    } else if (rep.primes_used.empty()) {
        rep.note = "no auxiliary prime q <= " + std::to_string(aux_bound) + " with ell | #J(F_q)";
    } else {
        rep.note = "kernel of dimension " + std::to_string(rep.kernel_dimension) + " survives all auxiliary primes";
    }
    return rep;
}

}  // namespace glc
