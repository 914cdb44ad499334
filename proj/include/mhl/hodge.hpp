#pragma once

#include "check.hpp"
#include "monodromy.hpp"

#include <map>

namespace mhl {

using GMatrix = Matrix<Gaussian>;
using GSubspace = Subspace<Gaussian>;
using GFiltration = Filtration<Gaussian>;

struct MixedHodgeData {
    std::size_t dim = 0;
    RFiltration W;  // increasing, rational
    GFiltration F;  // decreasing, on Q(i)^dim
    int twist = 0;  // Tate twist counter; the factor (2πi)^twist is never evaluated
};

// Pure weight-m data: W has its only jump at m.
MixedHodgeData pure_hodge_data(std::size_t dim, int m, const GFiltration& F, int twist = 0);

struct Bigrading {
    bool ok = false;
    std::string failure;
    std::map<std::pair<int, int>, GSubspace> pieces; // H^{pq}
};

// F^p ⊕ conj F^{m-p+1} = H for every p; on success the pieces H^{pq} = F^p ∩ conj F^q.
Bigrading hodge_decomposition(const GFiltration& F, int m);
bool check_pure(const GFiltration& F, int m);
bool check_pure(const MixedHodgeData& H, int m);
bool check_mhs(const MixedHodgeData& H);
CheckResult check_mhs_detail(const MixedHodgeData& H);

struct PolarizedCandidate {
    MixedHodgeData hodge;
    RMatrix Q;
    int m = 0;
};

// Hodge-Riemann relations. Throws ParityViolation when Q(u,v) != (-1)^m Q(v,u).
bool check_polarization(const PolarizedCandidate& c);
bool check_polarization(const GFiltration& F, const RMatrix& Q, int m);
CheckResult check_polarization_detail(const GFiltration& F, const RMatrix& Q, int m);

// H(j): W'_k = W_{k+2j}, F'^p = F^{p+j}.
MixedHodgeData tate_twist(const MixedHodgeData& H, int j);

struct NilpotentOrbitData {
    MixedHodgeData H; // only F is used
    int m = 0;
    std::vector<RMatrix> Ns;
    RMatrix Q;
};

// Clause (1) samples t over {1, 2, 1/2, 3, 1/3}^n.
CheckResult is_nilpotent_orbit(const NilpotentOrbitData& d);

struct MixedNilpotentOrbitData {
    MixedHodgeData H;
    std::vector<RMatrix> Ns;
    std::map<int, RMatrix> graded_forms; // form on Gr^W_k in quotient coordinates
};

CheckResult is_mixed_nilpotent_orbit(const MixedNilpotentOrbitData& d);

struct MorphismCheck {
    bool is_morphism = false;
    bool strict_F = false;
    bool strict_W = false;
};
MorphismCheck morphism_check(const RMatrix& f, const MixedHodgeData& A, const MixedHodgeData& B);

// Kernel and cokernel with induced filtrations (kernel in echelon coordinates of ker f).
MixedHodgeData kernel_mhs(const RMatrix& f, const MixedHodgeData& A);
MixedHodgeData cokernel_mhs(const RMatrix& f, const MixedHodgeData& B);
// Image of a filtration-preserving map with the image filtrations f(W), f(F).
MixedHodgeData image_data(const RMatrix& f, const MixedHodgeData& A);
// Graded piece Gr^W_k with induced F, in quotient coordinates.
MixedHodgeData graded_data(const MixedHodgeData& H, int k);

// Sum of sums of t_i N_i over the sample set used by clause (1).
std::vector<std::vector<Rational>> orbit_sample_weights(std::size_t n);

} // namespace mhl
