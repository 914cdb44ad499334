#pragma once

#include "check.hpp"
#include "monodromy.hpp"

#include <map>
#include <optional>

namespace mhl {

using RQuotient = Quotient<Rational>;

// Bounded cochain complex A^n, n in [n_min, n_min + dims.size() - 1], with a decreasing
// filtration F per degree and an optional increasing W.
struct FilteredComplex {
    int n_min = 0;
    std::vector<std::size_t> dims;
    std::vector<RMatrix> d; // d[i] : A^{n_min+i} -> A^{n_min+i+1}; dims.size() - 1 entries
    std::vector<RFiltration> F;
    std::optional<std::vector<RFiltration>> W;

    int n_max() const { return n_min + static_cast<int>(dims.size()) - 1; }
    std::size_t dim(int n) const;
    // Zero outside the range.
    RMatrix diff(int n) const;
    RSubspace Fp(int n, int p) const;
    // Smallest and largest p with Gr_F^p nonzero somewhere; p_min > p_max for the zero complex.
    int p_min() const;
    int p_max() const;
    // Number of filtration steps p_max - p_min + 1.
    int length() const;
};

// Throws DimensionMismatch on shapes, WellDefinednessViolation on d d != 0 or F, W not preserved.
void validate(const FilteredComplex& c);
CheckResult check_complex(const FilteredComplex& c);

struct SpectralPage {
    int r = 0;
    // E_r^{pq} as Z_r / D_r in A^{p+q}; keyed by (p, q).
    std::map<std::pair<int, int>, RQuotient> E;
    // d_r : E_r^{pq} -> E_r^{p+r, q-r+1}, in the quotient coordinates.
    std::map<std::pair<int, int>, RMatrix> d;

    std::size_t dim(int p, int q) const;
};

SpectralPage page(const FilteredComplex& c, int r);
SpectralPage e_infinity(const FilteredComplex& c);

struct Abutment {
    int n = 0;
    RQuotient H;   // ker d^n / im d^{n-1}
    RFiltration F; // decreasing, in coordinates of H
};
std::vector<Abutment> abutment_filtration(const FilteredComplex& c);

// Dec(F)^p A^n = F^{p+n} A^n ∩ d^{-1}(F^{p+n+1} A^{n+1}). E_1^{pq}(Dec F) ≅ E_2^{2p+q, -p}(F).
FilteredComplex decalage(const FilteredComplex& c);
std::pair<int, int> decalage_reindex(int p, int q);

// F^p = tau_{<= -p}: all of A^n for n < -p, cocycles for n = -p, zero above.
FilteredComplex truncation_filtration(const FilteredComplex& c);

// C^{a,b} with d_h : C^{a,b} -> C^{a+1,b} and d_v : C^{a,b} -> C^{a,b+1}, commuting.
// Rows b are the complexes computing cohomology of the b-th direct image; a is the base degree.
struct DoubleComplex {
    int a_min = 0, b_min = 0;
    std::vector<std::vector<std::size_t>> dims; // dims[a][b]
    std::vector<std::vector<RMatrix>> dh;       // dh[a][b], for a + 1 in range
    std::vector<std::vector<RMatrix>> dv;       // dv[a][b], for b + 1 in range

    std::size_t na() const { return dims.size(); }
    std::size_t nb() const { return dims.empty() ? 0 : dims[0].size(); }
};

// Total complex with d = d_h + (-1)^a d_v, filtered by F^p = tau_{<= -p} taken in the b direction
// (rows below -p, d_v-cocycles in row -p). Each degree is ordered by a, then b.
FilteredComplex total_truncated(const DoubleComplex& k);
// Coordinates of C^{a,b} inside the total degree a + b.
RSubspace total_block(const DoubleComplex& k, int a, int b);

// The map H^i(F^p Gr^W_k A) -> H^i(Gr^W_k A) is injective for every i, p, k.
// Needs W; throws Schema if absent.
CheckResult strictness_check(const FilteredComplex& c);

// f[i] : A^{n_min+i} -> B^{n_min+i}. Checks chain map, F preserved, and iso on H(Gr_F^p) for all p.
CheckResult check_filtered_quasi_iso(const std::vector<RMatrix>& f, const FilteredComplex& A, const FilteredComplex& B);

} // namespace mhl
