#pragma once

#include "quiver.hpp"

namespace mhl {

// Connection d/dt + A dt/t on O^n[1/t]. A needs rational eigenvalues.
struct VModel {
    RMatrix A;
    int period_window = 0; // jumps are listed in [-w, w]; 0 picks max|eigenvalue| + 1
};

struct Jump {
    Rational alpha;
    std::size_t multiplicity = 0;
};

// Gr^V_alpha is spanned by t^{-alpha-a} e over eigenvectors e with eigenvalue a,
// a + alpha in Z. All sectors are written in coordinates of the subspace
// U_alpha = sum of generalized eigenspaces of A at -alpha + Z, in which t is the identity.
struct VSector {
    Rational alpha;
    RSubspace space; // U_alpha
    RMatrix tdt;     // t d/dt = -alpha + N
    RMatrix N;       // nilpotent part
};

int window(const VModel& m);
std::vector<Jump> jump_set(const VModel& m);
VSector gr_v(const VModel& m, const Rational& alpha);
// d/dt : Gr_alpha -> Gr_{alpha+1}.
RMatrix can_map(const VModel& m, const Rational& alpha);
// t : Gr_{alpha+1} -> Gr_alpha.
RMatrix var_map(const VModel& m, const Rational& alpha);

// Var = v g(c v) with g(x) = log(1+x)/x. Throws NotUnipotent unless c v is nilpotent.
RMatrix var_adjust(const RMatrix& c, const RMatrix& v);
// Inverse of var_adjust: var = Var h(c Var) with h(x) = (e^x - 1)/x.
RMatrix var_unadjust(const RMatrix& c, const RMatrix& Var);
// log(1 + x) for nilpotent x.
RMatrix log_unipotent(const RMatrix& x);

// Rational stand-in for e(alpha), alpha in [0,1): exact for 0 and 1/2, 1 + alpha otherwise.
Rational monodromy_label(const Rational& alpha);

// psi = sum of Gr_alpha, phi = sum of Gr_{alpha+1}, alpha in [0,1), one sector each.
// c = d/dt; on alpha = 0, var is the unadjusted t so that T = exp(N); elsewhere
// var makes T = label(alpha) exp(N).
PerverseQuiver1D to_quiver(const VModel& m);

// F[alpha] is an increasing filtration F_p of Gr_alpha (sector coordinates).
// Checks t(F_p Gr_alpha) = F_p Gr_{alpha-1} for alpha < 1 and
// d/dt(F_p Gr_alpha) = F_{p+1} Gr_{alpha+1} for alpha >= 0, wherever both sectors are given.
CheckResult check_filtered_regular(const VModel& m, const std::map<Rational, RFiltration>& F);

} // namespace mhl
