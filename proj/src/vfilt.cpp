#include "mhl/vfilt.hpp"

#include <algorithm>

namespace mhl {

namespace {

Rational frac_part(const Rational& x)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(f);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::vector<Rational> eigenvalues(const VModel& m)
{
    require(m.A.rows() == m.A.cols(), ErrorCode::DimensionMismatch, "A must be square");
    return rational_eigenvalues(m.A);
}

// Polynomial sum of c_j x^j for j below the nilpotency index of x.
RMatrix series(const RMatrix& x, const std::function<Rational(unsigned)>& coef)
{
    std::size_t n = x.rows();
    RMatrix out(n, n), p = RMatrix::identity(n);
    for (unsigned j = 0; j <= n; ++j) {
        if (p.is_zero())
            break;
        out += coef(j) * p;
        p = p * x;
    }
    return out;
}

Rational factorial(unsigned j)
{
    mpz_class f = 1;
    for (unsigned i = 2; i <= j; ++i)
        f *= i;
    return Rational(f);
}

} // namespace

int window(const VModel& m)
{
    if (m.period_window > 0)
        return m.period_window;
    Rational mx = 0;
    for (const auto& a : eigenvalues(m))
        mx = std::max(mx, Rational(abs(a)));
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    return static_cast<int>(c.get_si()) + 1;
}

std::vector<Jump> jump_set(const VModel& m)
{
    auto ev = eigenvalues(m);
    int w = window(m);
    std::map<Rational, std::size_t> classes; // alpha mod 1 -> multiplicity
    for (const auto& a : ev) {
        std::size_t d = generalized_eigenspace(m.A, a).dim();
        classes[frac_part(-a)] += d;
    }
    std::vector<Jump> out;
    for (int k = -w - 1; k <= w; ++k)
        for (const auto& [a0, d] : classes) {
            Rational alpha = a0 + k;
            if (alpha >= -w && alpha <= w)
                out.push_back({alpha, d});
        }
    std::sort(out.begin(), out.end(), [](const Jump& x, const Jump& y) { return x.alpha < y.alpha; });
    return out;
}

VSector gr_v(const VModel& m, const Rational& alpha)
{
    std::size_t n = m.A.rows();
    RSubspace U = RSubspace::zero(n);
    for (const auto& a : eigenvalues(m))
        if (is_integer(a + alpha))
            U = sum(U, generalized_eigenspace(m.A, a));
    auto [S, N] = jordan_chevalley(m.A);
    (void)S;
    VSector s;
    s.alpha = alpha;
    s.space = U;
    s.N = restrict_map(N, U, U);
    s.tdt = s.N - alpha * RMatrix::identity(U.dim());
    return s;
}

RMatrix can_map(const VModel& m, const Rational& alpha)
{
    // d/dt (t^j e) = t^{j-1}(j + A) e, which is N - alpha in sector coordinates
    return gr_v(m, alpha).tdt;
}

RMatrix var_map(const VModel& m, const Rational& alpha) { return RMatrix::identity(gr_v(m, alpha).space.dim()); }

RMatrix log_unipotent(const RMatrix& x)
{
    require(is_nilpotent(x), ErrorCode::NotUnipotent, "log needs a unipotent argument");
    return series(x, [](unsigned j) { return j == 0 ? Rational(0) : frac((j % 2 ? 1 : -1), static_cast<long>(j)); });
}

RMatrix var_adjust(const RMatrix& c, const RMatrix& v)
{
    require(c.rows() == v.cols() && c.cols() == v.rows(), ErrorCode::DimensionMismatch, "c and v do not compose");
    RMatrix cv = c * v;
    require(is_nilpotent(cv), ErrorCode::NotUnipotent, "id + c v is not unipotent");
    // log(1+x)/x = sum (-1)^j x^j / (j+1)
    return v * series(cv, [](unsigned j) { return frac((j % 2 ? -1 : 1), static_cast<long>(j) + 1); });
}

RMatrix var_unadjust(const RMatrix& c, const RMatrix& Var)
{
    require(c.rows() == Var.cols() && c.cols() == Var.rows(), ErrorCode::DimensionMismatch, "c and Var do not compose");
    RMatrix cv = c * Var;
    require(is_nilpotent(cv), ErrorCode::NotUnipotent, "c Var is not nilpotent");
    // (e^x - 1)/x = sum x^j / (j+1)!
    return Var * series(cv, [](unsigned j) { return Rational(1 / factorial(j + 1)); });
}

Rational monodromy_label(const Rational& alpha)
{
    if (alpha == 0)
        return 1;
    if (alpha == frac(1, 2))
        return -1;
    return 1 + alpha;
}

PerverseQuiver1D to_quiver(const VModel& m)
{
    std::map<Rational, std::size_t> seen;
    for (const auto& a : eigenvalues(m))
        seen[frac_part(-a)] = 0;
    PerverseQuiver1D q;
    q.c = RMatrix(0, 0);
    q.v = RMatrix(0, 0);
    std::vector<std::pair<Rational, std::size_t>> blocks;
    for (const auto& [alpha, unused] : seen) {
        (void)unused;
        VSector s = gr_v(m, alpha);
        std::size_t d = s.space.dim();
        RMatrix c = s.tdt;
        RMatrix v;
        if (alpha == 0) {
            v = var_unadjust(c, RMatrix::identity(d));
        } else {
            RMatrix T = monodromy_label(alpha) * exp_nilpotent(s.N);
            v = (T - RMatrix::identity(d)) * *inverse(c);
        }
        PerverseQuiver1D b;
        b.psi = b.phi = d;
        b.c = c;
        b.v = v;
        q = direct_sum(q, b);
        blocks.push_back({alpha, d});
    }
    std::size_t off = 0;
    for (const auto& [alpha, d] : blocks) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < d; ++i)
            idx.push_back(off + i);
        off += d;
        RSubspace s = RSubspace::coordinate(q.psi, idx);
        q.sectors.push_back({alpha, s, RSubspace::coordinate(q.phi, idx)});
    }
    return q;
}

CheckResult check_filtered_regular(const VModel& m, const std::map<Rational, RFiltration>& F)
{
    CheckResult r;
    for (const auto& [alpha, Fa] : F) {
        VSector s = gr_v(m, alpha);
        if (Fa.ambient() != s.space.dim()) {
            r.add("dimensions alpha=" + to_string(alpha), false, "filtration does not match the sector");
            continue;
        }
        auto below = F.find(alpha - 1);
        if (alpha < 1 && below != F.end()) {
            // t is the identity in sector coordinates
            bool ok = true;
            for (int p = std::min(Fa.lo(), below->second.lo()) - 1; p <= std::max(Fa.hi(), below->second.hi()) + 1; ++p)
                ok = ok && Fa.at(p) == below->second.at(p);
            r.add("t F_p Gr_" + to_string(alpha), ok);
        }
        auto above = F.find(alpha + 1);
        if (alpha >= 0 && above != F.end()) {
            RMatrix d = can_map(m, alpha);
            bool ok = true;
            for (int p = std::min(Fa.lo(), above->second.lo()) - 2; p <= std::max(Fa.hi(), above->second.hi()) + 1; ++p)
                ok = ok && apply(d, Fa.at(p)) == above->second.at(p + 1);
            r.add("d/dt F_p Gr_" + to_string(alpha), ok);
        }
    }
    return r;
}

} // namespace mhl
