#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace mhl {

using Rational = mpq_class;

inline Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// Element re + i*im of Q(i).
struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(const Rational& r) : re(r), im(0) {}
    Gaussian(long r) : re(r), im(0) {}
    Gaussian(const Rational& r, const Rational& i) : re(r), im(i) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o)
    {
        Rational r = re * o.re - im * o.im;
        Rational s = re * o.im + im * o.re;
        re = r;
        im = s;
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o)
    {
        Rational n = o.re * o.re + o.im * o.im;
        Rational r = (re * o.re + im * o.im) / n;
        Rational s = (im * o.re - re * o.im) / n;
        re = r;
        im = s;
        return *this;
    }
};

inline Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
inline Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
inline Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
inline Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
inline Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re, -a.im); }
inline bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

inline Rational conj(const Rational& x) { return x; }
inline Gaussian conj(const Gaussian& z) { return Gaussian(z.re, -z.im); }

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Gaussian& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

inline bool is_real(const Rational&) { return true; }
inline bool is_real(const Gaussian& z) { return sgn(z.im) == 0; }
inline Rational real_part(const Rational& x) { return x; }
inline Rational real_part(const Gaussian& z) { return z.re; }

// i^k for integer k.
inline Gaussian i_pow(long k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return Gaussian(1);
    case 1: return Gaussian(Rational(0), Rational(1));
    case 2: return Gaussian(-1);
    default: return Gaussian(Rational(0), Rational(-1));
    }
}

std::string to_string(const Rational& x);
std::string to_string(const Gaussian& z);
// Accepts "p", "-p", "p/q"; throws Error(Parse) otherwise.
Rational parse_rational(const std::string& s);

inline std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

template <class T> struct FieldTraits;
template <> struct FieldTraits<Rational> {
    static constexpr const char* name = "Q";
};
template <> struct FieldTraits<Gaussian> {
    static constexpr const char* name = "Q(i)";
};

} // namespace mhl
