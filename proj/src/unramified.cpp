#include "glc/unramified.hpp"

#include <functional>

namespace glc {

namespace {

PadicResidue laplace_det(const std::vector<std::vector<PadicResidue>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    PadicResidue acc = m[0][0].zero();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<PadicResidue>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<PadicResidue> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        PadicResidue term = m[0][j] * laplace_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

RingPtr UnramifiedRing::make(u64 p, int precision, int degree) {
    return with_modulus(lift_poly(smallest_irreducible(p, degree), precision));
}

RingPtr UnramifiedRing::with_modulus(const PadicPoly& mu) {
    if (!mu.is_monic() || mu.degree() < 1) fail(ErrorCode::InvalidInput, "extension modulus must be monic");
    if (!is_irreducible_mod_p(reduce_poly(mu, 1)))
        fail(ErrorCode::InvalidInput, "extension modulus is reducible mod p");
    auto r = std::make_shared<UnramifiedRing>();
    r->p = mu.proto().prime();
    r->precision = mu.proto().precision();
    r->degree = mu.degree();
    r->modulus = mu;
    // Newton identities for the power sums of the roots of mu
    int d = r->degree;
    const PadicResidue z = mu.proto();
    std::vector<PadicResidue> ps(static_cast<std::size_t>(2 * d), z);
    ps[0] = z.of(d);
    for (int n = 1; n < 2 * d; ++n) {
        PadicResidue s = z;
        for (int i = 1; i < n && i <= d; ++i) s += mu[d - i] * ps[static_cast<std::size_t>(n - i)];
        if (n <= d) s += z.of(n) * mu[d - n];
        ps[static_cast<std::size_t>(n)] = -s;
    }
    r->traces = std::move(ps);
    return r;
}

UnramifiedElement::UnramifiedElement(RingPtr ring, std::vector<PadicResidue> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != ring_->degree) fail(ErrorCode::Internal, "wrong coefficient count");
}

UnramifiedElement UnramifiedElement::from_base(RingPtr ring, const PadicResidue& a) {
    std::vector<PadicResidue> c(static_cast<std::size_t>(ring->degree), a.zero());
    c[0] = a;
    return UnramifiedElement(std::move(ring), std::move(c));
}

UnramifiedElement UnramifiedElement::from_int(RingPtr ring, long long a) {
    PadicResidue v = PadicResidue::from_int(ring->p, ring->precision, a);
    return from_base(std::move(ring), v);
}

UnramifiedElement UnramifiedElement::from_code(RingPtr ring, u64 code) {
    std::vector<PadicResidue> c;
    for (int i = 0; i < ring->degree; ++i) {
        c.push_back(PadicResidue(ring->p, ring->precision, code % ring->p));
        code /= ring->p;
    }
    return UnramifiedElement(std::move(ring), std::move(c));
}

UnramifiedElement UnramifiedElement::generator(RingPtr ring) {
    if (ring->degree == 1) return from_base(ring, -ring->modulus[0]);
    UnramifiedElement e = from_int(ring, 0);
    e.c_[1] = e.c_[1].one();
    return e;
}

bool UnramifiedElement::is_zero() const {
    for (const auto& a : c_)
        if (!a.is_zero()) return false;
    return true;
}

bool UnramifiedElement::is_unit() const {
    for (const auto& a : c_)
        if (a.is_unit()) return true;
    return false;
}

bool UnramifiedElement::in_base() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

int UnramifiedElement::valuation() const {
    int v = ring_->precision;
    for (const auto& a : c_) v = std::min(v, a.valuation());
    return v;
}

UnramifiedElement UnramifiedElement::operator-() const {
    UnramifiedElement r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

UnramifiedElement operator+(const UnramifiedElement& a, const UnramifiedElement& b) {
    UnramifiedElement r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

UnramifiedElement operator-(const UnramifiedElement& a, const UnramifiedElement& b) {
    UnramifiedElement r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

UnramifiedElement operator*(const UnramifiedElement& a, const UnramifiedElement& b) {
    const auto& ring = *a.ring_;
    int d = ring.degree;
    const PadicResidue z = a.c_[0].zero();
    std::vector<PadicResidue> prod(static_cast<std::size_t>(2 * d - 1), z);
    for (int i = 0; i < d; ++i) {
        if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < d; ++j)
            prod[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    for (int k = 2 * d - 2; k >= d; --k) {
        PadicResidue c = prod[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        for (int j = 0; j < d; ++j) prod[static_cast<std::size_t>(k - d + j)] -= c * ring.modulus[j];
    }
    prod.resize(static_cast<std::size_t>(d));
    return UnramifiedElement(a.ring_, std::move(prod));
}

UnramifiedElement UnramifiedElement::pow(u64 e) const {
    UnramifiedElement r = one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

UnramifiedElement UnramifiedElement::inv() const {
    if (!is_unit()) fail(ErrorCode::InvalidInput, "inverse of a non-unit in Z_q");
    UnramifiedElement x = pow(ring_->residue_field_size() - 2);
    UnramifiedElement two = of(2);
    for (int prec = 1; prec < ring_->precision; prec *= 2) x = x * (two - *this * x);
    return x;
}

UnramifiedElement UnramifiedElement::divide_by_p() const {
    std::vector<PadicResidue> c;
    for (const auto& a : c_) c.push_back(a.divide_by_p().lift(ring_->precision));
    UnramifiedElement r(ring_, std::move(c));
    return r;
}

PadicResidue UnramifiedElement::trace() const {
    PadicResidue s = c_[0].zero();
    for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * ring_->traces[i];
    return s;
}

PadicResidue UnramifiedElement::norm() const {
    int d = ring_->degree;
    std::vector<std::vector<PadicResidue>> m(static_cast<std::size_t>(d));
    UnramifiedElement col = *this;
    UnramifiedElement t = generator(ring_);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)].push_back(col.c_[static_cast<std::size_t>(i)]);
        col = col * t;
    }
    return laplace_det(m);
}

int UnramifiedElement::quadratic_character() const {
    if (precision() != 1) fail(ErrorCode::Internal, "quadratic character needs a residue field");
    return legendre(norm().value(), prime());
}

std::ostream& operator<<(std::ostream& os, const UnramifiedElement& a) {
    os << "(";
    for (std::size_t i = 0; i < a.c_.size(); ++i) os << (i ? ", " : "") << a.c_[i].value();
    return os << ") mod " << a.prime() << "^" << a.precision();
}

UnramifiedElement field_sqrt(const UnramifiedElement& a) {
    if (a.is_zero()) return a;
    if (a.quadratic_character() != 1) fail(ErrorCode::InvalidInput, "not a square in F_q");
    u64 q = a.ring()->residue_field_size();
    u64 Q = q - 1;
    int s = 0;
    while (Q % 2 == 0) {
        Q /= 2;
        ++s;
    }
    UnramifiedElement z = a.one();
    for (u64 code = 2; code < q; ++code) {
        z = UnramifiedElement::from_code(a.ring(), code);
        if (z.quadratic_character() == -1) break;
    }
    UnramifiedElement one = a.one();
    UnramifiedElement c = z.pow(Q), x = a.pow((Q + 1) / 2), t = a.pow(Q);
    int m = s;
    while (t != one) {
        int i = 0;
        UnramifiedElement tt = t;
        while (tt != one) {
            tt = tt * tt;
            ++i;
        }
        UnramifiedElement b = c;
        for (int j = 0; j < m - i - 1; ++j) b = b * b;
        x = x * b;
        c = b * b;
        t = t * c;
        m = i;
    }
    return x;
}

}  // namespace glc
