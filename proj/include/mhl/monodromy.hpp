#pragma once

#include "filtration.hpp"

namespace mhl {

using RFiltration = Filtration<Rational>;
using RMatrix = Matrix<Rational>;
using RSubspace = Subspace<Rational>;

struct FilteredSpaceWithNilpotent {
    RFiltration W;
    RMatrix N;
};

// M(N)[m]: N M_k ⊆ M_{k-2} and N^k : Gr_{m+k} ≅ Gr_{m-k}.
RFiltration monodromy_filtration(const RMatrix& N, int m);
// Checks the two characterizing properties of M(N)[m].
bool is_monodromy_filtration(const RMatrix& N, int m, const RFiltration& M);

struct PrimitivePart {
    int k;                  // P lives in Gr_{m+k}
    Quotient<Rational> gr;  // Gr^M_{m+k}
    RSubspace P;            // in coordinates of gr
};
std::vector<PrimitivePart> primitive_decomposition(const RMatrix& N, int m);

// Relative monodromy filtration of (W, N) or nullopt when none exists.
std::optional<RFiltration> relative_monodromy_filtration(const FilteredSpaceWithNilpotent& x);
// N M_k ⊆ M_{k-2} and M induces M(Gr^W_j N)[j] on every Gr^W_j.
bool is_relative_monodromy(const RMatrix& N, const RFiltration& W, const RFiltration& M);

// N_*W, from (N_*W)_{k-1} = N W_k + M_{k-1} ∩ W_{k-1}.
RFiltration push_weight(const RMatrix& N, const RFiltration& W, const RFiltration& M);
// Convenience: computes M first; nullopt when M does not exist.
std::optional<RFiltration> push_weight(const RMatrix& N, const RFiltration& W);

} // namespace mhl
