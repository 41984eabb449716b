#pragma once

#include <utility>
#include <vector>

#include "glc/padic.hpp"
#include "glc/poly.hpp"

namespace glc {

using PadicPoly = Poly<PadicResidue>;

/// Polynomial over Z/p^N from integer coefficients (ascending).
PadicPoly make_padic_poly(u64 p, int precision, const std::vector<long long>& coeffs);

/// Coefficientwise reduction / lift of the representatives.
PadicPoly reduce_poly(const PadicPoly& f, int precision);
PadicPoly lift_poly(const PadicPoly& f, int precision);

/// Ben-Or irreducibility test over F_p (f over N = 1).
bool is_irreducible_mod_p(const PadicPoly& f);

/// The monic irreducible of degree d over F_p whose coefficient vector
/// (c_0, ..., c_{d-1}), read as the base-p integer c_0 + c_1 p + ..., is least.
PadicPoly smallest_irreducible(u64 p, int degree);

struct FpFactor {
    PadicPoly factor;  // monic irreducible over F_p
    int multiplicity;
};

/// Complete factorization of a nonzero polynomial over F_p (monic factors,
/// ordered by degree then coefficients). The leading coefficient is dropped.
std::vector<FpFactor> factor_mod_p(const PadicPoly& f);

/// All roots in F_p, ascending.
std::vector<u64> roots_mod_p(const PadicPoly& f);

}  // namespace glc
