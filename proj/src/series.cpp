#include "glc/series.hpp"

#include <string>

namespace glc {

PadicFraction PadicFraction::divide_by_int(long long n) const {
    if (n == 0) fail(ErrorCode::Internal, "division by zero");
    u64 p = m_.prime();
    int v = 0;
    while (n % static_cast<long long>(p) == 0) {
        n /= static_cast<long long>(p);
        ++v;
    }
    return PadicFraction(m_ * m_.of(n).inv(), shift_ + v);
}

PadicFraction PadicFraction::times(const PadicResidue& a) const {
    int prec = std::min(m_.precision(), a.precision());
    return PadicFraction(m_.reduce(prec) * a.reduce(prec), shift_);
}

PadicFraction operator+(const PadicFraction& a, const PadicFraction& b) {
    const PadicFraction& lo = a.shift_ <= b.shift_ ? a : b;
    const PadicFraction& hi = a.shift_ <= b.shift_ ? b : a;
    int gap = hi.shift_ - lo.shift_;
    int prec = std::min(lo.m_.precision() + gap, hi.m_.precision());
    PadicResidue scaled = lo.m_.lift(prec) * PadicResidue(lo.m_.prime(), prec, prime_power(lo.m_.prime(), std::min(gap, prec)));
    if (gap >= prec) scaled = scaled.zero();
    return PadicFraction(scaled + hi.m_.reduce(prec), hi.shift_);
}

PadicFraction operator-(const PadicFraction& a, const PadicFraction& b) { return a + (-b); }

PadicResidue PadicFraction::to_residue(int M) const {
    if (M > absolute_precision())
        fail(ErrorCode::InsufficientPrecision,
             "need " + std::to_string(M) + " digits but only " + std::to_string(absolute_precision()) + " are known");
    PadicResidue m = m_;
    int s = shift_;
    if (s < 0) {
        m = m.lift(m.precision() - s) * PadicResidue(m.prime(), m.precision() - s, prime_power(m.prime(), -s));
        s = 0;
    }
    for (int i = 0; i < s; ++i) {
        if (m.is_unit()) fail(ErrorCode::InvalidInput, "p-adic value is not integral");
        m = m.divide_by_p();
    }
    return m.reduce(M);
}

}  // namespace glc
