#pragma once

#include <memory>
#include <ostream>
#include <vector>

#include "glc/fp_poly.hpp"
#include "glc/padic.hpp"

namespace glc {

/// Z_q / p^N with q = p^d, presented as (Z/p^N)[t] / mu(t).
struct UnramifiedRing {
    u64 p;
    int precision;
    int degree;
    PadicPoly modulus;           // monic, irreducible mod p
    std::vector<PadicResidue> traces;  // Tr(t^i), i < 2d

    /// Modulus = lift of the smallest irreducible of the given degree.
    static std::shared_ptr<const UnramifiedRing> make(u64 p, int precision, int degree);
    static std::shared_ptr<const UnramifiedRing> with_modulus(const PadicPoly& mu);

    u64 residue_field_size() const { return prime_power(p, degree); }
};

using RingPtr = std::shared_ptr<const UnramifiedRing>;

class UnramifiedElement {
  public:
    UnramifiedElement() = default;
    UnramifiedElement(RingPtr ring, std::vector<PadicResidue> coeffs);

    static UnramifiedElement from_base(RingPtr ring, const PadicResidue& a);
    static UnramifiedElement from_int(RingPtr ring, long long a);
    /// Element whose F_p-coordinates are the base-p digits of `code` (N = 1 enumeration).
    static UnramifiedElement from_code(RingPtr ring, u64 code);
    /// The class of t.
    static UnramifiedElement generator(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<PadicResidue>& coeffs() const { return c_; }
    u64 prime() const { return ring_->p; }
    int precision() const { return ring_->precision; }

    bool is_zero() const;
    bool is_unit() const;
    bool in_base() const;
    /// Minimum coefficient valuation (precision for zero).
    int valuation() const;

    UnramifiedElement zero() const { return from_int(ring_, 0); }
    UnramifiedElement one() const { return from_int(ring_, 1); }
    UnramifiedElement of(long long v) const { return from_int(ring_, v); }

    UnramifiedElement inv() const;
    UnramifiedElement pow(u64 e) const;
    UnramifiedElement divide_by_p() const;

    PadicResidue trace() const;
    PadicResidue norm() const;
    /// Quadratic character of a nonzero element of the residue field (N = 1).
    int quadratic_character() const;

    UnramifiedElement operator-() const;
    friend UnramifiedElement operator+(const UnramifiedElement& a, const UnramifiedElement& b);
    friend UnramifiedElement operator-(const UnramifiedElement& a, const UnramifiedElement& b);
    friend UnramifiedElement operator*(const UnramifiedElement& a, const UnramifiedElement& b);
    friend bool operator==(const UnramifiedElement& a, const UnramifiedElement& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UnramifiedElement& a, const UnramifiedElement& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const UnramifiedElement& a);

  private:
    RingPtr ring_;
    std::vector<PadicResidue> c_;
};

/// Square root in a finite field F_q (N = 1); throws InvalidInput for non-squares.
UnramifiedElement field_sqrt(const UnramifiedElement& a);

}  // namespace glc
