#pragma once

#include "mhl/linalg.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>

namespace tst {

using mhl::Gaussian;
using mhl::Matrix;
using mhl::Rational;
using mhl::Subspace;
using mhl::Vec;
using RM = Matrix<Rational>;
using GM = Matrix<Gaussian>;
using RS = Subspace<Rational>;
using GS = Subspace<Gaussian>;

inline RM qm(std::initializer_list<std::initializer_list<Rational>> rows)
{
    std::vector<Vec<Rational>> r;
    for (auto& row : rows)
        r.emplace_back(row);
    return RM::from_rows(r, r.empty() ? 0 : r[0].size());
}

inline GM gm(std::initializer_list<std::initializer_list<Gaussian>> rows)
{
    std::vector<Vec<Gaussian>> r;
    for (auto& row : rows)
        r.emplace_back(row);
    return GM::from_rows(r, r.empty() ? 0 : r[0].size());
}

inline Gaussian G(long re, long im = 0) { return Gaussian(Rational(re), Rational(im)); }
inline Rational Q(long p, long q = 1) { return mhl::frac(p, q); }

inline Vec<Rational> e(std::size_t n, std::size_t i)
{
    Vec<Rational> v(n, Rational(0));
    v[i] = 1;
    return v;
}

inline RS span(std::initializer_list<Vec<Rational>> vs, std::size_t n) { return RS::span(std::vector<Vec<Rational>>(vs), n); }

// Deterministic integers from a seed; modulo mapping keeps results identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    long uniform(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Rational rational(long num = 5, long den = 3)
    {
        return mhl::frac(uniform(-num, num), uniform(1, den));
    }
    Rational positive(long num = 7, long den = 5) { return mhl::frac(uniform(1, num), uniform(1, den)); }
    bool coin() { return (g_() & 1) != 0; }

private:
    std::mt19937_64 g_;
};

inline RM random_matrix(Rng& r, std::size_t rows, std::size_t cols, long range = 3)
{
    RM m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Rational(r.uniform(-range, range));
    return m;
}

// Random invertible matrix: product of unit triangular factors and a permutation.
inline RM random_invertible(Rng& r, std::size_t n, long range = 2)
{
    RM lower = RM::identity(n), upper = RM::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j)
                lower(i, j) = Rational(r.uniform(-range, range));
            if (i < j)
                upper(i, j) = Rational(r.uniform(-range, range));
        }
    RM perm(n, n);
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(p[i - 1], p[static_cast<std::size_t>(r.uniform(0, static_cast<long>(i) - 1))]);
    for (std::size_t i = 0; i < n; ++i)
        perm(i, p[i]) = 1;
    return lower * perm * upper;
}

// Nilpotent matrix of the given Jordan type, conjugated by a random invertible matrix.
inline RM random_nilpotent(Rng& r, const std::vector<std::size_t>& blocks, bool conjugate = true)
{
    std::size_t n = 0;
    for (auto b : blocks)
        n += b;
    RM J(n, n);
    std::size_t off = 0;
    for (auto b : blocks) {
        for (std::size_t i = 0; i + 1 < b; ++i)
            J(off + i, off + i + 1) = 1;
        off += b;
    }
    if (!conjugate)
        return J;
    RM P = random_invertible(r, n);
    return P * J * *mhl::inverse(P);
}

inline std::vector<std::size_t> random_partition(Rng& r, std::size_t n)
{
    std::vector<std::size_t> parts;
    std::size_t left = n;
    while (left > 0) {
        std::size_t b = static_cast<std::size_t>(r.uniform(1, static_cast<long>(left)));
        parts.push_back(b);
        left -= b;
    }
    return parts;
}

inline RS random_subspace(Rng& r, std::size_t n, std::size_t k)
{
    return RS::span_rows(random_matrix(r, k, n));
}

} // namespace tst
