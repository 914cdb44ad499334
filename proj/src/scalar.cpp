#include "mhl/errors.hpp"
#include "mhl/scalar.hpp"

#include <cctype>

namespace mhl {

const char* error_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorCode::NonSplitSpectrum: return "NonSplitSpectrum";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::FiltrationNotPreserved: return "FiltrationNotPreserved";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotICSum: return "NotICSum";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::NotOrbit: return "NotOrbit";
    case ErrorCode::InvalidFiltration: return "InvalidFiltration";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Schema: return "SchemaError";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Internal: return "InternalError";
    }
    return "Unknown";
}

std::string to_string(const Rational& x)
{
    mpq_class y(x);
    y.canonicalize();
    return y.get_str();
}

std::string to_string(const Gaussian& z)
{
    if (sgn(z.im) == 0)
        return to_string(z.re);
    std::string im = to_string(z.im);
    if (sgn(z.re) == 0)
        return im + "i";
    return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + im + "i";
}

static bool all_digits(const std::string& s, std::size_t from)
{
    if (from >= s.size())
        return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (!all_digits(num, start))
        throw Error(ErrorCode::Parse, "malformed rational '" + s + "'");
    if (num[0] == '+')
        num = num.substr(1);
    mpz_class p(num), q(1);
    if (slash != std::string::npos) {
        std::string den = s.substr(slash + 1);
        if (!all_digits(den, 0))
            throw Error(ErrorCode::Parse, "malformed rational '" + s + "'");
        q = mpz_class(den);
        if (q == 0)
            throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

} // namespace mhl
