#include "doctest.h"
#include "support.hpp"

#include "mhl/monodromy.hpp"

using namespace mhl;
using namespace tst;

namespace {

// Second construction: M_{m+k} = sum over j >= max(0,-k) of ker N^{j+k+1} ∩ im N^j.
RFiltration ladder(const RM& N, int m)
{
    std::size_t n = N.rows();
    int e = static_cast<int>(n) + 1;
    return RFiltration::build(n, Direction::Increasing, m - e, m + e, [&](int mk) {
        int k = mk - m;
        RS acc = RS::zero(n);
        for (int j = std::max(0, -k); j <= e; ++j) {
            if (j + k + 1 < 0)
                continue;
            acc = sum(acc, intersect(kernel(power(N, static_cast<unsigned>(j + k + 1))), image(power(N, static_cast<unsigned>(j)))));
        }
        return acc;
    });
}

bool characterizes(const RM& N, int m, const RFiltration& M)
{
    for (int k = M.lo() - 2; k <= M.hi() + 2; ++k)
        if (!maps_into(N, M.at(k), M.at(k - 2)))
            return false;
    for (int k = 0; k <= static_cast<int>(N.rows()); ++k) {
        Quotient<Rational> a = M.graded(m + k), b = M.graded(m - k);
        if (a.dim() != b.dim())
            return false;
        if (a.dim() && rank(induced_map(power(N, static_cast<unsigned>(k)), a, b)) != a.dim())
            return false;
    }
    return true;
}

RFiltration incr(std::size_t n, std::vector<std::pair<int, RS>> steps) { return RFiltration::from_steps(n, Direction::Increasing, steps); }

} // namespace

TEST_CASE("filtration basics")
{
    auto t = RFiltration::trivial(3, Direction::Increasing, 4);
    CHECK(t.graded_dim(4) == 3);
    CHECK(t.graded_dim(3) == 0);
    CHECK(t.at(3).is_zero());
    CHECK(t.at(100).is_full());
    auto w = incr(2, {{0, span({e(2, 0)}, 2)}, {1, RS::full(2)}});
    CHECK(w.graded_dim(0) == 1);
    CHECK(w.graded_dim(1) == 1);
    CHECK_THROWS_AS(incr(2, {{0, span({e(2, 0)}, 2)}, {1, span({e(2, 1)}, 2)}}), Error);
    CHECK_THROWS_AS(incr(2, {{0, span({e(2, 0)}, 2)}}), Error);

    auto f = Filtration<Rational>::from_steps(2, Direction::Decreasing, {{0, RS::full(2)}, {1, span({e(2, 1)}, 2)}});
    CHECK(f.at(-5).is_full());
    CHECK(f.at(1).dim() == 1);
    CHECK(f.at(2).is_zero());
    CHECK(f.lo() == 0);
    CHECK(f.hi() == 1);
    CHECK(f.shifted(1).at(0).dim() == 1);

    Rng r(9);
    for (int it = 0; it < 50; ++it) {
        std::size_t n = static_cast<std::size_t>(r.uniform(0, 6));
        std::vector<std::pair<int, RS>> steps;
        RM P = random_invertible(r, n);
        std::size_t d = 0;
        int k = static_cast<int>(r.uniform(-3, 0));
        while (d < n) {
            d += static_cast<std::size_t>(r.uniform(0, static_cast<long>(n - d)));
            if (r.coin())
                d = n;
            std::vector<std::size_t> cols;
            for (std::size_t i = 0; i < d; ++i)
                cols.push_back(i);
            steps.emplace_back(k, image(select_cols(P, cols)));
            k += static_cast<int>(r.uniform(1, 2));
        }
        if (n == 0)
            steps.emplace_back(0, RS::zero(0));
        auto W = incr(n, steps);
        std::size_t total = 0;
        for (int j = W.lo(); j <= W.hi(); ++j)
            total += W.graded_dim(j);
        CHECK(total == n);
    }
}

TEST_CASE("monodromy filtration examples")
{
    auto M0 = monodromy_filtration(RM(3, 3), 5);
    CHECK(M0.at(4).is_zero());
    CHECK(M0.at(5).is_full());

    RM n2 = qm({{0, 1}, {0, 0}});
    auto M = monodromy_filtration(n2, 0);
    CHECK(M.at(-2).is_zero());
    CHECK(M.at(-1) == kernel(n2));
    CHECK(M.at(0) == kernel(n2));
    CHECK(M.at(1).is_full());

    Rng r(1);
    RM n31 = random_nilpotent(r, {3, 1});
    auto M31 = monodromy_filtration(n31, 0);
    CHECK(M31.graded_dim(-2) == 1);
    CHECK(M31.graded_dim(0) == 2);
    CHECK(M31.graded_dim(2) == 1);
    CHECK(M31.graded_dim(-1) == 0);
    CHECK(M31.graded_dim(1) == 0);
    CHECK(characterizes(n31, 0, M31));

    CHECK_THROWS_AS(monodromy_filtration(qm({{1}}), 0), Error);
}

TEST_CASE("primitive decomposition examples")
{
    auto p0 = primitive_decomposition(RM(2, 2), 3);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].k == 0);
    CHECK(p0[0].P.dim() == 2);

    Rng r(2);
    for (std::size_t n = 1; n <= 5; ++n) {
        auto parts = primitive_decomposition(random_nilpotent(r, {n}), 0);
        for (const auto& p : parts)
            CHECK(p.P.dim() == (p.k == static_cast<int>(n) - 1 ? 1u : 0u));
    }
    auto p22 = primitive_decomposition(random_nilpotent(r, {2, 2}), 0);
    REQUIRE(p22.size() == 2);
    CHECK(p22[1].k == 1);
    CHECK(p22[1].P.dim() == 2);
    CHECK(p22[0].P.dim() == 0);
}

TEST_CASE("property: monodromy filtration")
{
    Rng r(3);
    for (int it = 0; it < 150; ++it) {
        std::size_t n = static_cast<std::size_t>(r.uniform(0, 8));
        RM N = random_nilpotent(r, random_partition(r, n));
        int m = static_cast<int>(r.uniform(-3, 3));
        auto M = monodromy_filtration(N, m);
        CHECK(characterizes(N, m, M));
        CHECK(is_monodromy_filtration(N, m, M));
        CHECK(M == ladder(N, m));
        CHECK(M == monodromy_filtration(r.positive() * N, m));

        // Uniqueness: moving a single step breaks the characterization.
        auto steps = M.steps();
        if (steps.size() >= 2) {
            std::size_t i = static_cast<std::size_t>(r.uniform(0, static_cast<long>(steps.size()) - 2));
            bool moved = true;
            if (steps[i].first + 1 < steps[i + 1].first)
                steps[i].first += 1;
            else if (i == 0 || steps[i].first - 1 > steps[i - 1].first)
                steps[i].first -= 1;
            else
                moved = false;
            if (moved) {
                auto bad = incr(n, steps);
                CHECK_FALSE(characterizes(N, m, bad));
                CHECK_FALSE(is_monodromy_filtration(N, m, bad));
            }
        }

        // dim Gr_j = sum_{i >= max(0, m-j)} dim PGr_{j+2i}
        auto parts = primitive_decomposition(N, m);
        for (int j = m - static_cast<int>(n) - 1; j <= m + static_cast<int>(n) + 1; ++j) {
            std::size_t total = 0;
            for (const auto& p : parts)
                for (int i = std::max(0, m - j); j + 2 * i <= m + p.k; ++i)
                    if (j + 2 * i == m + p.k)
                        total += p.P.dim();
            CHECK(total == M.graded_dim(j));
        }
    }
}

TEST_CASE("relative monodromy examples")
{
    Rng r(4);
    RM N = random_nilpotent(r, {3, 2});
    auto W = RFiltration::trivial(5, Direction::Increasing, 2);
    auto M = relative_monodromy_filtration({W, N});
    REQUIRE(M.has_value());
    CHECK(*M == monodromy_filtration(N, 2));

    RM n2 = qm({{0, 1}, {0, 0}});
    auto W01 = incr(2, {{0, span({e(2, 0)}, 2)}, {1, RS::full(2)}});
    CHECK_FALSE(relative_monodromy_filtration({W01, n2}).has_value());

    auto Mz = relative_monodromy_filtration({W01, RM(2, 2)});
    REQUIRE(Mz.has_value());
    CHECK(*Mz == W01);

    auto W02 = incr(2, {{0, span({e(2, 0)}, 2)}, {2, RS::full(2)}});
    auto M02 = relative_monodromy_filtration({W02, n2});
    REQUIRE(M02.has_value());
    CHECK(*M02 == W02);

    CHECK_THROWS_AS(relative_monodromy_filtration({W01, qm({{0, 0}, {1, 0}})}), Error);
    CHECK_THROWS_AS(relative_monodromy_filtration({W01, qm({{1, 0}, {0, 0}})}), Error);
}

TEST_CASE("push weight examples")
{
    Rng r(5);
    RM N = random_nilpotent(r, {3, 1});
    auto W = RFiltration::trivial(4, Direction::Increasing, 1);
    auto P = push_weight(N, W);
    REQUIRE(P.has_value());
    CHECK(P->at(0) == image(N));
    CHECK(P->at(-1).is_zero());
    CHECK(P->at(1) == sum(image(N), monodromy_filtration(N, 1).at(1)));

    RM n2 = qm({{0, 1}, {0, 0}});
    auto W02 = incr(2, {{0, span({e(2, 0)}, 2)}, {2, RS::full(2)}});
    auto Z = push_weight(RM(2, 2), W02);
    REQUIRE(Z.has_value());
    CHECK(*Z == W02);

    auto W01 = incr(2, {{0, span({e(2, 0)}, 2)}, {1, RS::full(2)}});
    CHECK_FALSE(push_weight(n2, W01).has_value());
}
