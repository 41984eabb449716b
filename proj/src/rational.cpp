#include "glc/rational.hpp"

#include <climits>

#include "glc/errors.hpp"

namespace glc {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::PrecisionOverflow: return "PrecisionOverflow";
        case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorCode::NonSimpleRoot: return "NonSimpleRoot";
        case ErrorCode::InseparableConfiguration: return "InseparableConfiguration";
        case ErrorCode::BadReduction: return "BadReduction";
        case ErrorCode::EvenDegree: return "EvenDegree";
        case ErrorCode::PrimeTwo: return "PrimeTwo";
        case ErrorCode::UnsupportedGenus: return "UnsupportedGenus";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::DistinctDisks: return "DistinctDisks";
        case ErrorCode::NotInKernel: return "NotInKernel";
        case ErrorCode::RamifiedConfiguration: return "RamifiedConfiguration";
        case ErrorCode::NoFunctionFound: return "NoFunctionFound";
        case ErrorCode::NotOnCurve: return "NotOnCurve";
        case ErrorCode::Unsaturated: return "Unsaturated";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) fail(ErrorCode::InvalidInput, "zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string s) {
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return s;
    };
    auto slash = text.find('/');
    std::string a = text.substr(0, slash);
    std::string b = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_int(a) || !is_int(b) || b[0] == '-' || b[0] == '+')
        fail(ErrorCode::ParseError, "not a rational number: '" + text + "'");
    BigInt n(strip_plus(a)), d(b);
    if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(n, d);
}

Rational Rational::inv() const {
    if (is_zero()) fail(ErrorCode::InvalidInput, "inverse of zero rational");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::InvalidInput, "division by zero rational");
    q_ /= o.q_;
    return *this;
}

int valuation(const BigInt& n, std::uint64_t p) {
    if (n == 0) return INT_MAX;
    BigInt m = abs(n);
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

int Rational::valuation(std::uint64_t p) const {
    if (is_zero()) return INT_MAX;
    return glc::valuation(num(), p) - glc::valuation(den(), p);
}

}  // namespace glc
