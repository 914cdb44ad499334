#include "doctest.h"
#include "support.hpp"

#include "mhl/generate.hpp"
#include "mhl/hodge.hpp"

using namespace mhl;
using namespace tst;

namespace {

using GStep = GFiltration::Step;

GFiltration decr(std::size_t n, std::vector<GStep> steps) { return GFiltration::from_steps(n, Direction::Decreasing, steps); }
GS gspan(std::vector<Vec<Gaussian>> vs, std::size_t n) { return GS::span(vs, n); }
RFiltration incr(std::size_t n, std::vector<std::pair<int, RS>> steps) { return RFiltration::from_steps(n, Direction::Increasing, steps); }
RM neg(const RM& m) { return Rational(-1) * m; }
RM J() { return qm({{0, 1}, {-1, 0}}); }

// Opposedness by a rank count of stacked bases.
bool opposed(const GFiltration& F, int m)
{
    std::size_t n = F.ambient();
    for (int p = F.lo() - 1; p <= F.hi() + 1; ++p) {
        GS a = F.at(p), b = conj(F.at(m - p + 1));
        if (a.dim() + b.dim() != n)
            return false;
        if (rank(vstack(a.basis(), b.basis())) != n)
            return false;
    }
    return true;
}

Gaussian form(const RM& Q, const Vec<Gaussian>& u, const Vec<Gaussian>& v)
{
    GM Qc = complexify(Q);
    Gaussian s(0);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            s += u[i] * Qc(i, j) * v[j];
    return s;
}

Vec<Gaussian> conjv(Vec<Gaussian> v)
{
    for (auto& x : v)
        x = mhl::conj(x);
    return v;
}

MixedHodgeData q_sum(bool good)
{
    RFiltration W = incr(2, {{0, span({e(2, 0)}, 2)}, {2, RS::full(2)}});
    GFiltration F = decr(2, {{0, GS::full(2)}, {1, complexify(span({e(2, good ? 1 : 0)}, 2))}});
    return {2, W, F, 0};
}

} // namespace

TEST_CASE("pure hodge structure examples")
{
    GFiltration f0 = decr(1, {{0, GS::full(1)}});
    CHECK(check_pure(f0, 0));
    CHECK(check_pure(pure_hodge_data(1, 0, f0), 0));

    GFiltration ell = decr(2, {{0, GS::full(2)}, {1, gspan({{G(1), G(0, 1)}}, 2)}});
    CHECK(check_pure(ell, 1));
    Bigrading b = hodge_decomposition(ell, 1);
    REQUIRE(b.ok);
    CHECK(b.pieces.at({1, 0}).dim() == 1);
    CHECK(b.pieces.at({0, 1}).dim() == 1);
    CHECK(b.pieces.at({0, 1}) == conj(b.pieces.at({1, 0})));
    CHECK_FALSE(check_pure(ell, 2));

    GFiltration bad = decr(2, {{0, GS::full(2)}, {1, complexify(span({e(2, 0)}, 2))}});
    CHECK_FALSE(check_pure(bad, 1));
    CHECK_FALSE(hodge_decomposition(bad, 1).ok);
}

TEST_CASE("mixed hodge structure examples")
{
    CHECK(check_mhs(q_sum(true)));
    CHECK_FALSE(check_mhs(q_sum(false)));
    CheckResult r = check_mhs_detail(q_sum(false));
    CHECK_FALSE(r.ok);

    GFiltration ell = decr(2, {{0, GS::full(2)}, {1, gspan({{G(1), G(0, 1)}}, 2)}});
    for (int m : {0, 1, 2}) {
        MixedHodgeData h = pure_hodge_data(2, m, ell);
        CHECK(check_mhs(h) == check_pure(ell, m));
    }
    // W with two jumps is not pure at any weight
    CHECK_FALSE(check_pure(q_sum(true), 0));
}

TEST_CASE("polarization examples")
{
    GFiltration f11 = decr(1, {{1, GS::full(1)}});
    CHECK(check_polarization(f11, qm({{1}}), 2));
    CHECK_FALSE(check_polarization(f11, qm({{-1}}), 2));

    // u = e1 + i e2: i Q(u, conj u) = i (-i - i) = 2 for Q = J.
    Vec<Gaussian> u = {G(1), G(0, 1)};
    CHECK(Gaussian::i() * form(J(), u, conjv(u)) == G(2));
    GFiltration ell = decr(2, {{0, GS::full(2)}, {1, gspan({u}, 2)}});
    CHECK(check_polarization(ell, J(), 1));
    CHECK_FALSE(check_polarization(ell, neg(J()), 1));
    PolarizedCandidate c{pure_hodge_data(2, 1, ell), J(), 1};
    CHECK(check_polarization(c));

    try {
        check_polarization(ell, RM::identity(2), 1);
        FAIL("expected parity violation");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::ParityViolation);
    }
    // orthogonality: symmetric form pairing H^{20} with itself
    GFiltration k3 = decr(2, {{-1, GS::full(2)}, {1, gspan({{G(1), G(0, 1)}}, 2)}});
    CHECK(check_polarization(k3, qm({{-1, 0}, {0, -1}}), 0));
    CHECK_FALSE(check_polarization(k3, qm({{-1, 0}, {0, -2}}), 0));
}

TEST_CASE("tate twist examples")
{
    GFiltration f0 = decr(1, {{0, GS::full(1)}});
    MixedHodgeData q0 = pure_hodge_data(1, 0, f0);
    MixedHodgeData t0 = tate_twist(q0, 0);
    CHECK(t0.W == q0.W);
    CHECK(t0.F == q0.F);
    MixedHodgeData q1 = tate_twist(q0, 1);
    CHECK(q1.twist == 1);
    CHECK(q1.W.jumps() == std::vector<int>{-2});
    CHECK(q1.F.at(-1).dim() == 1);
    CHECK(q1.F.at(0).dim() == 0);
    CHECK(check_pure(q1, -2));
    MixedHodgeData back = tate_twist(tate_twist(q_sum(true), 3), -3);
    CHECK(back.W == q_sum(true).W);
    CHECK(back.F == q_sum(true).F);
    CHECK(back.twist == 0);
}

TEST_CASE("nilpotent orbit examples")
{
    GFiltration ell = decr(2, {{0, GS::full(2)}, {1, gspan({{G(1), G(0, 1)}}, 2)}});
    CHECK(is_nilpotent_orbit(NilpotentOrbitData{pure_hodge_data(2, 1, ell), 1, {RM(2, 2)}, J()}).ok);
    CHECK(is_nilpotent_orbit(NilpotentOrbitData{pure_hodge_data(2, 1, ell), 1, {}, J()}).ok);

    RM N = qm({{0, 1}, {0, 0}});
    GFiltration f2 = decr(2, {{0, GS::full(2)}, {1, complexify(span({e(2, 1)}, 2))}});
    // Gr^M_2 = <e2>, Gr^M_0 = <e1>; Q(e2, N e2) = Q(e2, e1) must be positive, so Q = -J.
    CHECK(is_nilpotent_orbit(NilpotentOrbitData{pure_hodge_data(2, 1, f2), 1, {N}, neg(J())}).ok);
    CheckResult wrong_sign = is_nilpotent_orbit(NilpotentOrbitData{pure_hodge_data(2, 1, f2), 1, {N}, J()});
    CHECK_FALSE(wrong_sign.ok);
    CHECK(wrong_sign.first_failure()->name.find("polarization") != std::string::npos);

    GFiltration f1 = decr(2, {{0, GS::full(2)}, {1, complexify(span({e(2, 0)}, 2))}});
    CheckResult r = is_nilpotent_orbit(NilpotentOrbitData{pure_hodge_data(2, 1, f1), 1, {N}, neg(J())});
    CHECK_FALSE(r.ok);
    CHECK(r.first_failure()->name.find("limit") != std::string::npos);
}

TEST_CASE("mixed nilpotent orbit examples")
{
    RM N = qm({{0, 1}, {0, 0}});
    GFiltration f = decr(2, {{0, GS::full(2)}});
    RFiltration W01 = incr(2, {{0, span({e(2, 0)}, 2)}, {1, RS::full(2)}});
    // N maps weight 1 into weight 0; no relative monodromy filtration
    MixedHodgeData h{2, W01, decr(2, {{0, GS::full(2)}, {1, complexify(span({e(2, 1)}, 2))}}), 0};
    MixedNilpotentOrbitData d{h, {N}, {}};
    CHECK_FALSE(is_mixed_nilpotent_orbit(d).ok);

    // single jump reduces to a pure orbit
    GFiltration f2 = decr(2, {{0, GS::full(2)}, {1, complexify(span({e(2, 1)}, 2))}});
    MixedNilpotentOrbitData p{pure_hodge_data(2, 1, f2), {N}, {{1, neg(J())}}};
    CHECK(is_mixed_nilpotent_orbit(p).ok);
    p.graded_forms[1] = J();
    CHECK_FALSE(is_mixed_nilpotent_orbit(p).ok);

    // no N: check_mhs plus graded polarizations
    MixedNilpotentOrbitData q{q_sum(true), {}, {{0, qm({{1}})}, {2, qm({{1}})}}};
    CHECK(is_mixed_nilpotent_orbit(q).ok);
    q.graded_forms[2] = qm({{-1}});
    CHECK_FALSE(is_mixed_nilpotent_orbit(q).ok);
    (void)f;
}

TEST_CASE("morphism examples")
{
    MixedHodgeData A = q_sum(true);
    MorphismCheck id = morphism_check(RM::identity(2), A, A);
    CHECK(id.is_morphism);
    CHECK(id.strict_F);
    CHECK(id.strict_W);
    MorphismCheck z = morphism_check(RM(2, 2), A, A);
    CHECK(z.is_morphism);
    CHECK(z.strict_F);
    CHECK(z.strict_W);
    MixedHodgeData q0 = pure_hodge_data(1, 0, decr(1, {{0, GS::full(1)}}));
    MorphismCheck inc = morphism_check(qm({{1}, {0}}), q0, A);
    CHECK(inc.is_morphism);
    CHECK(inc.strict_F);
    CHECK(inc.strict_W);
    // into the Q(-1) summand does not preserve W
    CHECK_FALSE(morphism_check(qm({{0}, {1}}), q0, A).is_morphism);
    // Q(-1) -> Q(0) by e2 -> e1 in A: preserves W but not F
    MorphismCheck swap = morphism_check(qm({{0, 1}, {0, 0}}), A, A);
    CHECK_FALSE(swap.is_morphism);
}

TEST_CASE("property: bigrading and purity")
{
    mhl::Rng r(11);
    for (int it = 0; it < 120; ++it) {
        PolarizedCandidate c = gen_polarized(r, 5);
        const GFiltration& F = c.hodge.F;
        std::size_t n = F.ambient();
        bool pure = check_pure(F, c.m);
        CHECK(pure);
        CHECK(opposed(F, c.m) == pure);
        Bigrading b = hodge_decomposition(F, c.m);
        REQUIRE(b.ok);
        std::vector<Vec<Gaussian>> all;
        std::size_t total = 0;
        for (const auto& [pq, s] : b.pieces) {
            CHECK(pq.first + pq.second == c.m);
            total += s.dim();
            for (std::size_t i = 0; i < s.dim(); ++i)
                all.push_back(s.vector(i));
            auto it2 = b.pieces.find({pq.second, pq.first});
            std::size_t dual = it2 == b.pieces.end() ? 0 : it2->second.dim();
            CHECK(dual == s.dim());
            if (s.dim())
                CHECK(conj(s) == it2->second);
        }
        CHECK(total == n);
        CHECK(GS::span(all, n).dim() == n);
        // wrong weight is never pure unless the space is zero
        if (n > 0)
            CHECK_FALSE(check_pure(F, c.m + 1));
    }
}

TEST_CASE("property: polarization sign and sampled positivity")
{
    mhl::Rng r(12);
    for (int it = 0; it < 120; ++it) {
        PolarizedCandidate c = gen_polarized(r, 5);
        REQUIRE(check_polarization(c));
        if (c.hodge.dim > 0)
            CHECK_FALSE(check_polarization(c.hodge.F, Rational(-1) * c.Q, c.m));
        Bigrading b = hodge_decomposition(c.hodge.F, c.m);
        for (const auto& [pq, s] : b.pieces) {
            for (int t = 0; t < 20 && s.dim(); ++t) {
                Vec<Gaussian> u(s.ambient(), Gaussian(0));
                bool nz = false;
                for (std::size_t i = 0; i < s.dim(); ++i) {
                    Gaussian a(r.rational(), r.rational());
                    nz = nz || !is_zero(a);
                    for (std::size_t j = 0; j < u.size(); ++j)
                        u[j] += a * s.vector(i)[j];
                }
                if (!nz)
                    continue;
                Gaussian v = i_pow(pq.first - pq.second) * form(c.Q, u, conjv(u));
                CHECK(is_real(v));
                CHECK(real_part(v) > 0);
            }
        }
    }
}

TEST_CASE("property: tate twist")
{
    mhl::Rng r(13);
    for (int it = 0; it < 80; ++it) {
        MixedHodgeData h = gen_mhs(r, 5);
        int j = static_cast<int>(r.uniform(-3, 3));
        MixedHodgeData t = tate_twist(h, j);
        CHECK(check_mhs(h));
        CHECK(check_mhs(t));
        CHECK(t.twist == h.twist + j);
        for (int k : h.W.jumps())
            CHECK(graded_data(h, k).dim == graded_data(t, k - 2 * j).dim);
        // a broken F stays broken
        MixedHodgeData broken = h;
        if (h.dim >= 2) {
            broken.F = decr(h.dim, {{0, GS::full(h.dim)}, {1, complexify(RS::coordinate(h.dim, {0}))}});
            CHECK(check_mhs(broken) == check_mhs(tate_twist(broken, j)));
        }
        PolarizedCandidate c = gen_polarized(r, 4);
        MixedHodgeData ct = tate_twist(c.hodge, j);
        CHECK(check_pure(ct, c.m - 2 * j));
        CHECK(check_polarization(ct.F, c.Q, c.m - 2 * j));
    }
}

TEST_CASE("property: kernels and cokernels of morphisms")
{
    mhl::Rng r(14);
    int nontrivial = 0;
    for (int it = 0; it < 80; ++it) {
        MhsMorphism m = gen_mhs_morphism(r, 5);
        REQUIRE(check_mhs(m.A));
        REQUIRE(check_mhs(m.B));
        MorphismCheck mc = morphism_check(m.f, m.A, m.B);
        REQUIRE(mc.is_morphism);
        CHECK(mc.strict_F);
        CHECK(mc.strict_W);
        MixedHodgeData k = kernel_mhs(m.f, m.A), c = cokernel_mhs(m.f, m.B);
        CHECK(k.dim + rank(m.f) == m.A.dim);
        CHECK(c.dim + rank(m.f) == m.B.dim);
        CHECK(check_mhs(k));
        CHECK(check_mhs(c));
        CHECK(check_mhs(image_data(m.f, m.A)));
        if (rank(m.f) > 0 && k.dim > 0)
            ++nontrivial;
    }
    CHECK(nontrivial > 5);
}

TEST_CASE("property: nilpotent orbits")
{
    mhl::Rng r(15);
    for (int it = 0; it < 60; ++it) {
        std::size_t nvars = 1 + static_cast<std::size_t>(it % 2);
        int m = static_cast<int>(r.uniform(-1, 2));
        NilpotentOrbitData d = gen_pure_orbit(r, 6, nvars, m);
        CheckResult res = is_nilpotent_orbit(d);
        CHECK_MESSAGE(res.ok, (res.first_failure() ? res.first_failure()->name : std::string()));
        NilpotentOrbitData scaled = d;
        Rational t = r.positive();
        for (auto& N : scaled.Ns)
            N = t * N;
        CHECK(is_nilpotent_orbit(scaled).ok == res.ok);

        // M is the same for random positive weights
        RM base(d.H.dim, d.H.dim);
        for (const auto& N : d.Ns)
            base += N;
        RFiltration M = monodromy_filtration(base, m);
        for (int s = 0; s < 20; ++s) {
            RM sum(d.H.dim, d.H.dim);
            for (const auto& N : d.Ns)
                sum += r.positive() * N;
            CHECK(monodromy_filtration(sum, m) == M);
        }
        if (d.H.dim > 0) {
            NilpotentOrbitData neg = d;
            neg.Q = Rational(-1) * d.Q;
            CHECK_FALSE(is_nilpotent_orbit(neg).ok);
        }
    }
}

TEST_CASE("property: mixed nilpotent orbits")
{
    mhl::Rng r(16);
    for (int it = 0; it < 40; ++it) {
        std::size_t nvars = 1 + static_cast<std::size_t>(it % 2);
        MixedNilpotentOrbitData d = gen_mixed_orbit(r, 6, nvars, 3);
        // the limit (W relative) filtration with F is mixed Hodge
        RM total(d.H.dim, d.H.dim);
        for (const auto& N : d.Ns)
            total += N;
        auto M = relative_monodromy_filtration({d.H.W, total});
        REQUIRE(M.has_value());
        CHECK(check_mhs({d.H.dim, *M, d.H.F, 0}));
        CheckResult res = is_mixed_nilpotent_orbit(d);
        CHECK(res.ok);
        for (const auto& N : d.Ns) {
            CHECK(is_nilpotent(N));
            CHECK(d.H.W.preserved_by(N, d.H.W));
        }
        // each single N gives a relative monodromy filtration
        for (const auto& N : d.Ns)
            CHECK(relative_monodromy_filtration({d.H.W, N}).has_value());
    }
}
