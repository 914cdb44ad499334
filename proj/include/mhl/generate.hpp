#pragma once

#include "specseq.hpp"
#include "vfilt.hpp"

#include <cstdint>
#include <random>

namespace mhl {

// Integers from mt19937_64 by modulo mapping, so a seed gives the same instance everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    long uniform(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(g_() % n); }
    bool coin() { return (g_() & 1) != 0; }
    Rational rational(long num = 3, long den = 2) { return frac(uniform(-num, num), uniform(1, den)); }
    Rational positive(long num = 5, long den = 3) { return frac(uniform(1, num), uniform(1, den)); }

private:
    std::mt19937_64 g_;
};

RMatrix gen_invertible(Rng& r, std::size_t n, long range = 2);
// Jordan type is a random partition of n.
RMatrix gen_nilpotent(Rng& r, std::size_t n);

// Pure nilpotent orbit of weight m in nvars variables, dim <= max_dim.
NilpotentOrbitData gen_pure_orbit(Rng& r, std::size_t max_dim, std::size_t nvars, int m);
// Mixed nilpotent orbit with at most max_steps weights, rejection-sampled until it passes.
MixedNilpotentOrbitData gen_mixed_orbit(Rng& r, std::size_t max_dim, std::size_t nvars, int max_steps);

MixedHodgeData gen_mhs(Rng& r, std::size_t max_dim);
struct MhsMorphism {
    MixedHodgeData A, B;
    RMatrix f;
};
MhsMorphism gen_mhs_morphism(Rng& r, std::size_t max_dim);
PolarizedCandidate gen_polarized(Rng& r, std::size_t max_dim);

// Sum of local-system quivers in distinct sectors, in random bases.
PerverseQuiver1D gen_quiver_1d(Rng& r, std::size_t max_dim);
// From commuting invertible T1, T2 (c = T_i - I, v = id), optionally plus a skyscraper
// at V22, with every vertex in a random basis.
PerverseQuiver2D gen_quiver_2d(Rng& r, std::size_t max_dim);
// Jordan matrix with rational eigenvalues; in (-1, 0] when in_window, else in [-2, 2].
RMatrix gen_jordan(Rng& r, std::size_t n, bool in_window);
// Filtered complex built from random intervals (x at level a, dx at level b >= a) and
// cycles, in a random basis. At most max_dim per degree and `levels` filtration steps.
FilteredComplex gen_filtered_complex(Rng& r, std::size_t max_dim, int levels, bool with_w = false);
// B = A plus filtered-acyclic pieces in a random basis; to = inclusion, from = projection.
struct FilteredQuasiIso {
    FilteredComplex A, B;
    std::vector<RMatrix> to, from;
};
FilteredQuasiIso gen_filtered_quasi_iso(Rng& r, std::size_t max_dim, int levels);
// Rows b = 0..rows-1 are random complexes in a = 0..cols-1, d_v = 0.
DoubleComplex gen_split_double(Rng& r, std::size_t rows, std::size_t cols, std::size_t max_dim);
// Commuting pair of invertible matrices.
std::pair<RMatrix, RMatrix> gen_commuting_pair(Rng& r, std::size_t n);

} // namespace mhl
