#include "doctest.h"
#include "support.hpp"

using namespace mhl;
using namespace tst;

TEST_CASE("kernel and image")
{
    CHECK(kernel(RM::identity(3)).dim() == 0);
    CHECK(image(RM(2, 2)).is_zero());
    RM n = qm({{0, 1}, {0, 0}});
    CHECK(kernel(n) == span({e(2, 0)}, 2));
    CHECK(image(n) == span({e(2, 0)}, 2));

    GM g = gm({{G(1), G(0, 1)}, {G(0, 1), G(-1)}});
    GS k = kernel(g);
    REQUIRE(k.dim() == 1);
    CHECK(is_zero((g * k.vector(0))[0]));
    CHECK(is_zero((g * k.vector(0))[1]));
}

TEST_CASE("sum, intersect, preimage")
{
    CHECK(sum(span({e(2, 0)}, 2), span({e(2, 1)}, 2)).is_full());
    Rng r(11);
    RS s = random_subspace(r, 5, 3);
    CHECK(intersect(s, s) == s);
    CHECK(preimage(qm({{0, 1}, {0, 0}}), span({e(2, 0)}, 2)).is_full());
    CHECK_THROWS_AS(sum(RS::full(2), RS::full(3)), Error);
}

TEST_CASE("induced maps")
{
    Quotient<Rational> q(RS::full(2), span({e(2, 0)}, 2));
    CHECK(induced_map(RM::identity(2), q, q) == RM::identity(1));

    RM n = qm({{0, 1}, {0, 0}});
    RS k = kernel(n);
    Quotient<Rational> top(RS::full(2), k), bot(k, RS::zero(2));
    CHECK(induced_map(n, top, bot) == qm({{1}}));
    CHECK(induced_map(n, top, top).is_zero());

    // size-3 block: M_{-2} = im N^2 = M_{-1}, M_0 = M_1 = ker N^2 ... Gr_2 -> Gr_{-2} via N^2
    RM j3 = qm({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    Quotient<Rational> g2(RS::full(3), kernel(power(j3, 2))), g0(image(power(j3, 2)), RS::zero(3));
    RM f = induced_map(power(j3, 2), g2, g0);
    CHECK(f.rows() == 1);
    CHECK(rank(f) == 1);

    try {
        induced_map(RM::identity(2), Quotient<Rational>(RS::full(2), RS::zero(2)), Quotient<Rational>(k, RS::zero(2)));
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::WellDefinednessViolation);
    }
}

TEST_CASE("generalized eigenspaces")
{
    CHECK(generalized_eigenspace(RM(3, 3), Rational(0)).is_full());
    RM a = qm({{Q(1, 2), 1}, {0, Q(1, 2)}});
    CHECK(generalized_eigenspace(a, Q(1, 2)).is_full());
    RM b = qm({{0, 0}, {0, Q(1, 3)}});
    CHECK(generalized_eigenspace(b, Q(1, 3)) == span({e(2, 1)}, 2));
}

TEST_CASE("jordan-chevalley examples")
{
    RM n = qm({{0, 1}, {0, 0}});
    auto [s0, n0] = jordan_chevalley(n);
    CHECK(s0.is_zero());
    CHECK(n0 == n);
    RM d = qm({{Q(1, 3), 0}, {0, -2}});
    auto [s1, n1] = jordan_chevalley(d);
    CHECK(s1 == d);
    CHECK(n1.is_zero());
    auto [s2, n2] = jordan_chevalley(qm({{Q(1, 2), 1}, {0, Q(1, 2)}}));
    CHECK(s2 == Q(1, 2) * RM::identity(2));
    CHECK(n2 == n);
    CHECK_THROWS_AS(jordan_chevalley(qm({{0, -1}, {1, 0}})), Error);
    CHECK_THROWS_AS(jordan_chevalley(qm({{0, 2}, {1, 0}})), Error);
}

TEST_CASE("hermitian positivity examples")
{
    CHECK(hermitian_is_positive_definite(GM::identity(3)));
    CHECK_FALSE(hermitian_is_positive_definite(gm({{G(1), G(0)}, {G(0), G(-1)}})));
    CHECK(hermitian_is_positive_definite(gm({{G(2), G(0, 1)}, {G(0, -1), G(1)}})));
    CHECK_THROWS_AS(hermitian_is_positive_definite(gm({{G(1), G(0, 1)}, {G(0, 1), G(1)}})), Error);
}

TEST_CASE("property: canonical subspace representation")
{
    Rng r(1);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = static_cast<std::size_t>(r.uniform(1, 7));
        std::size_t k = static_cast<std::size_t>(r.uniform(0, static_cast<long>(n)));
        RS s = random_subspace(r, n, k);
        // another basis: random invertible recombination of the rows
        RM b = random_invertible(r, s.dim()) * s.basis();
        CHECK(RS::span_rows(b) == s);
        CHECK(RS::span_rows(vstack(b, random_matrix(r, 2, s.dim()) * s.basis())) == s);
    }
}

TEST_CASE("property: dimension formula and adjunction")
{
    Rng r(2);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = static_cast<std::size_t>(r.uniform(1, 7));
        RS s = random_subspace(r, n, static_cast<std::size_t>(r.uniform(0, static_cast<long>(n))));
        RS t = random_subspace(r, n, static_cast<std::size_t>(r.uniform(0, static_cast<long>(n))));
        CHECK(sum(s, t).dim() + intersect(s, t).dim() == s.dim() + t.dim());
        CHECK(s.contains(intersect(s, t)));
        CHECK(sum(s, t).contains(t));

        std::size_t m = static_cast<std::size_t>(r.uniform(1, 6));
        RM f = random_matrix(r, m, n, 1);
        if (r.coin())
            f = random_matrix(r, m, 2) * random_matrix(r, 2, n);
        RS T = random_subspace(r, m, static_cast<std::size_t>(r.uniform(0, static_cast<long>(m))));
        CHECK(T.contains(image(f)) == preimage(f, T).is_full());
        RS p = preimage(f, T);
        CHECK(T.contains(apply(f, p)));
        CHECK(kernel(f).dim() + rank(f) == n);
    }
}

TEST_CASE("property: quotient coordinates")
{
    Rng r(3);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = static_cast<std::size_t>(r.uniform(1, 7));
        RS a = random_subspace(r, n, static_cast<std::size_t>(r.uniform(0, static_cast<long>(n))));
        RS b = RS::span_rows(random_matrix(r, static_cast<std::size_t>(r.uniform(0, static_cast<long>(a.dim()))), a.dim()) * a.basis());
        Quotient<Rational> q(a, b);
        CHECK(q.dim() == a.dim() - b.dim());
        CHECK(q.projection() * q.lift() == RM::identity(q.dim()));
        for (std::size_t i = 0; i < b.dim(); ++i)
            CHECK(RS::span({q.projection() * b.vector(i)}, q.dim()).is_zero());
        CHECK(q.lift(q.coords(a)) == a);
        CHECK(q.coords(b).is_zero());
    }
}

TEST_CASE("property: jordan-chevalley")
{
    Rng r(4);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = static_cast<std::size_t>(r.uniform(1, 6));
        RM J(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            J(i, i) = mhl::frac(r.uniform(-3, 3), r.uniform(1, 3));
            if (i > 0 && r.coin())
                J(i - 1, i + 0) = 1, J(i, i) = J(i - 1, i - 1);
        }
        RM P = random_invertible(r, n);
        RM A = P * J * *inverse(P);
        auto [S, N] = jordan_chevalley(A);
        CHECK(S + N == A);
        CHECK(S * N == N * S);
        CHECK(power(N, static_cast<unsigned>(n)).is_zero());
        for (const auto& lam : rational_eigenvalues(A)) {
            CHECK(generalized_eigenspace(A, lam) == kernel(S - lam * RM::identity(n)));
        }
        std::size_t total = 0;
        for (const auto& lam : rational_eigenvalues(A))
            total += kernel(S - lam * RM::identity(n)).dim();
        CHECK(total == n);
    }
}

TEST_CASE("property: hermitian positivity against sampled vectors")
{
    Rng r(5);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = static_cast<std::size_t>(r.uniform(1, 4));
        GM B(n, n);
        RM Br = random_invertible(r, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                B(i, j) = Gaussian(Br(i, j), Rational(r.uniform(-1, 1)));
        if (!inverse(B))
            continue;
        GM D(n, n);
        for (std::size_t i = 0; i < n; ++i)
            D(i, i) = Gaussian(Rational(r.uniform(-1, 4)));
        GM H = B.adjoint() * D * B;
        bool pd = hermitian_is_positive_definite(H);
        // witness vectors B^{-1} e_i give v*Hv = D_ii, plus 1000 random vectors
        GM Binv = *inverse(B);
        bool all_positive = true;
        auto test_vec = [&](const Vec<Gaussian>& v) {
            Vec<Gaussian> hv = H * v;
            Gaussian s(0);
            for (std::size_t i = 0; i < n; ++i)
                s += conj(v[i]) * hv[i];
            REQUIRE(is_real(s));
            if (sgn(s.re) <= 0)
                all_positive = false;
        };
        for (std::size_t i = 0; i < n; ++i)
            test_vec(Binv.col(i));
        for (int k = 0; k < 1000; ++k) {
            Vec<Gaussian> v(n);
            bool nz = false;
            for (auto& x : v) {
                x = Gaussian(Rational(r.uniform(-3, 3)), Rational(r.uniform(-3, 3)));
                nz = nz || !is_zero(x);
            }
            if (nz)
                test_vec(v);
        }
        CHECK(pd == all_positive);
    }
}
