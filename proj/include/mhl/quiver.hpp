#pragma once

#include "hodge.hpp"

#include <array>

namespace mhl {

// Part of psi and phi on which monodromy has eigenvalue e(-alpha).
struct Sector {
    Rational alpha;
    RSubspace psi;
    RSubspace phi;
};

// psi --c--> phi, phi --v--> psi.
struct PerverseQuiver1D {
    std::size_t psi = 0, phi = 0;
    RMatrix c; // phi x psi
    RMatrix v; // psi x phi
    std::vector<Sector> sectors; // empty means ungraded
};

// Vertices 0..3 are V11, V12, V21, V22. Edge e runs from edge_source(e) to edge_target(e):
// 0: 11->12, 1: 21->22 (horizontal), 2: 11->21, 3: 12->22 (vertical).
// c[e] goes along the edge, v[e] back.
struct PerverseQuiver2D {
    std::array<std::size_t, 4> dim{};
    std::array<RMatrix, 4> c, v;
};

int edge_source(int e);
int edge_target(int e);
const char* vertex_name(int i);

CheckResult validate(const PerverseQuiver1D& q);
CheckResult validate(const PerverseQuiver2D& q);
// T = id + v c on psi.
RMatrix monodromy(const PerverseQuiver1D& q);

enum class LocalSystemVariant { FullDirectImage, MiddleExtension };
PerverseQuiver1D from_local_system(const RMatrix& T, LocalSystemVariant variant);

bool is_ic_sum(const PerverseQuiver1D& q);
bool is_ic_sum(const PerverseQuiver2D& q);

struct Summand {
    int type = 1; // 1: psi -> im c, 0: 0 -> ker v
    PerverseQuiver1D q;
    RMatrix psi_incl, phi_incl; // columns embed the summand into the input
};
// Throws NotICSum unless phi = im c + ker v. Zero summands are dropped.
std::vector<Summand> decompose_1d(const PerverseQuiver1D& q);

struct Cohomology1D {
    RSubspace h_minus1;          // ker c
    Quotient<Rational> h0;       // coker c
};
Cohomology1D cohomology_1d(const PerverseQuiver1D& q);

PerverseQuiver1D restrict_to_sector(const PerverseQuiver1D& q, const Rational& alpha);
PerverseQuiver1D direct_sum(const PerverseQuiver1D& a, const PerverseQuiver1D& b);

// Hodge quivers. Vertex W is the weight (monodromy) filtration; v lands in psi(-1).
struct HodgeVertex {
    MixedHodgeData H;
    std::optional<RMatrix> Q; // polarization of the vertex orbit, when known
};

struct HodgeQuiver1D {
    HodgeVertex psi, phi;
    RMatrix c, v;
};

struct HodgeQuiver2D {
    std::array<HodgeVertex, 4> V;
    std::array<RMatrix, 4> c, v;
};

PerverseQuiver1D underlying(const HodgeQuiver1D& q);
PerverseQuiver2D underlying(const HodgeQuiver2D& q);

// 1D: psi = H with M(N)[m], phi = im N with the image filtrations, k = m + 1.
// 2D: vertices H, N1 H, N2 H, N1 N2 H, k = m + 2. Throws NotOrbit when d fails.
HodgeQuiver1D hodge_quiver_from_orbit_1d(const NilpotentOrbitData& d);
HodgeQuiver2D hodge_quiver_from_orbit_2d(const NilpotentOrbitData& d);

// Vertex weights: psi at k-1, phi at k; in 2D 11 at k-2, 12 and 21 at k-1, 22 at k.
CheckResult check_pure_hodge_quiver(const HodgeQuiver1D& q, int k);
CheckResult check_pure_hodge_quiver(const HodgeQuiver2D& q, int k);

// Filtered Hodge quivers: each vertex also carries the auxiliary filtration tilde W.
struct FilteredVertex {
    MixedHodgeData H;           // F and the weight filtration M
    RFiltration aux;            // tilde W
    std::map<int, RMatrix> forms; // polarization of Gr^{tilde W}_k, keyed by k
};

struct FilteredHodgeQuiver1D {
    FilteredVertex psi, phi;
    RMatrix c, v;
};

struct FilteredHodgeQuiver2D {
    std::array<FilteredVertex, 4> V;
    std::array<RMatrix, 4> c, v;
};

// psi: tilde W_k = W_{k-1}; phi: tilde W_k = (N_*W)_{k-2}. nullopt when a relative
// monodromy filtration does not exist.
std::optional<FilteredHodgeQuiver1D> tilde_w_1d(const MixedNilpotentOrbitData& d);
// Vertices W_{k-2}, (N1*W)_{k-3}, (N2*W)_{k-3}, (N1*N2*W)_{k-4}.
std::optional<FilteredHodgeQuiver2D> tilde_w_2d(const MixedNilpotentOrbitData& d);
// N1*(N2*W) == N2*(N1*W). False when either side does not exist.
bool check_push_symmetry(const MixedNilpotentOrbitData& d);

HodgeQuiver1D graded_quiver(const FilteredHodgeQuiver1D& q, int k);
HodgeQuiver2D graded_quiver(const FilteredHodgeQuiver2D& q, int k);

CheckResult check_tilde_w_purity(const FilteredHodgeQuiver1D& q);
CheckResult check_tilde_w_purity(const FilteredHodgeQuiver2D& q);

} // namespace mhl
