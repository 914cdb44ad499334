#include "mhl/generate.hpp"

#include <algorithm>

namespace mhl {

namespace {

using GStep = GFiltration::Step;

GFiltration decreasing(std::size_t n, std::vector<GStep> steps)
{
    if (n == 0)
        return GFiltration::trivial(0, Direction::Decreasing, 0);
    return GFiltration::from_steps(n, Direction::Decreasing, std::move(steps));
}

// Piece of a pure orbit in split coordinates.
struct Block {
    std::size_t dim = 0;
    int weight = 0;
    GFiltration F;
    std::vector<RMatrix> N;
    RMatrix Q;
    std::vector<int> src_level; // largest p with the coordinate appearing in F^p
    std::vector<int> tgt_level; // largest p with the coordinate vector inside F^p
};

Block chain(int w, int l, const std::vector<Rational>& scale)
{
    Block b;
    std::size_t n = static_cast<std::size_t>(l + 1);
    b.dim = n;
    b.weight = w;
    RMatrix N(n, n);
    for (std::size_t i = 1; i < n; ++i)
        N(i - 1, i) = 1;
    for (const auto& s : scale)
        b.N.push_back(s * N);
    b.Q = RMatrix(n, n);
    int base = (w - l) / 2;
    std::vector<GStep> steps;
    for (std::size_t i = 0; i < n; ++i) {
        b.Q(i, n - 1 - i) = ((l + static_cast<int>(i)) % 2 == 0) ? 1 : -1;
        std::vector<std::size_t> idx;
        for (std::size_t j = i; j < n; ++j)
            idx.push_back(j);
        steps.emplace_back(base + static_cast<int>(i), GSubspace::coordinate(n, idx));
        b.src_level.push_back(base + static_cast<int>(i));
        b.tgt_level.push_back(base + static_cast<int>(i));
    }
    b.F = decreasing(n, steps);
    return b;
}

// Weight 2a+1, F^{a+1} = span(e1 + tau e2) with Im tau > 0, Q = [[0,1],[-1,0]].
Block elliptic(int a, const Gaussian& tau, std::size_t nvars)
{
    Block b;
    b.dim = 2;
    b.weight = 2 * a + 1;
    b.F = decreasing(2, {{a, GSubspace::full(2)}, {a + 1, GSubspace::span({{Gaussian(1), tau}}, 2)}});
    b.N.assign(nvars, RMatrix(2, 2));
    b.Q = RMatrix(2, 2);
    b.Q(0, 1) = 1;
    b.Q(1, 0) = -1;
    b.src_level = {a + 1, a + 1};
    b.tgt_level = {a, a};
    return b;
}

// Even weight 2a with types (a+1,a-1), (a-1,a+1): F^{a+1} = span(e1 + iy e2), Q = -diag(y^2, 1).
Block k3_type(int a, const Rational& y)
{
    Block b;
    b.dim = 2;
    b.weight = 2 * a;
    GSubspace line = GSubspace::span({{Gaussian(1), Gaussian(Rational(0), y)}}, 2);
    b.F = decreasing(2, {{a - 1, GSubspace::full(2)}, {a + 1, line}});
    b.Q = RMatrix(2, 2);
    b.Q(0, 0) = -y * y;
    b.Q(1, 1) = -1;
    b.src_level = {a + 1, a + 1};
    b.tgt_level = {a - 1, a - 1};
    return b;
}

GFiltration tensor_filtration(const GFiltration& A, const GFiltration& B)
{
    std::size_t n = A.ambient() * B.ambient();
    std::vector<GStep> steps;
    for (int p = A.lo() + B.lo(); p <= A.hi() + B.hi(); ++p) {
        std::vector<Vec<Gaussian>> vs;
        for (int i = A.lo(); i <= A.hi(); ++i) {
            GSubspace a = A.at(i), b = B.at(p - i);
            for (std::size_t x = 0; x < a.dim(); ++x)
                for (std::size_t y = 0; y < b.dim(); ++y) {
                    GMatrix k = kron(GMatrix::from_columns({a.vector(x)}, a.ambient()), GMatrix::from_columns({b.vector(y)}, b.ambient()));
                    vs.push_back(k.col(0));
                }
        }
        steps.emplace_back(p, GSubspace::span(vs, n));
    }
    return decreasing(n, steps);
}

// split: N1 from a, N2 from b. Otherwise each variable acts on both factors.
Block tensor(const Block& a, const Block& b, bool split)
{
    Block t;
    t.dim = a.dim * b.dim;
    t.weight = a.weight + b.weight;
    t.F = tensor_filtration(a.F, b.F);
    t.Q = kron(a.Q, b.Q);
    RMatrix Ia = RMatrix::identity(a.dim), Ib = RMatrix::identity(b.dim);
    if (split) {
        t.N = {kron(a.N[0], Ib), kron(Ia, b.N[0])};
    } else {
        for (std::size_t i = 0; i < a.N.size(); ++i)
            t.N.push_back(kron(a.N[i], Ib) + kron(Ia, b.N[i]));
    }
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) {
            t.src_level.push_back(a.src_level[i] + b.src_level[j]);
            t.tgt_level.push_back(a.tgt_level[i] + b.tgt_level[j]);
        }
    return t;
}

Gaussian random_tau(Rng& r) { return Gaussian(r.rational(2, 2), r.positive(3, 2)); }

std::vector<Rational> random_scale(Rng& r, std::size_t nvars)
{
    std::vector<Rational> s;
    for (std::size_t i = 0; i < nvars; ++i)
        s.push_back(r.uniform(0, 3) == 0 ? Rational(0) : r.positive(3, 2));
    // a chain with l > 0 is only pure in the limit if some N_i acts
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](const Rational& x) { return sgn(x) == 0; }))
        s[r.index(s.size())] = r.positive(3, 2);
    return s;
}

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Random pure block of weight m with dim <= budget.
std::optional<Block> random_block(Rng& r, int m, std::size_t nvars, std::size_t budget)
{
    if (budget == 0)
        return std::nullopt;
    bool odd = (m % 2 != 0);
    for (int attempt = 0; attempt < 8; ++attempt) {
        switch (r.uniform(0, 4)) {
        case 0:
        case 1: {
            int maxl = static_cast<int>(budget) - 1;
            std::vector<int> ls;
            for (int l = 0; l <= std::min(maxl, 4); ++l)
                if ((l % 2 != 0) == odd)
                    ls.push_back(l);
            if (ls.empty())
                break;
            return chain(m, ls[r.index(ls.size())], random_scale(r, nvars));
        }
        case 2:
            if (budget < 2)
                break;
            if (odd)
                return elliptic(floor_div2(m - 1), random_tau(r), nvars);
            {
                Block b = k3_type(m / 2, r.positive(3, 2));
                b.N.assign(nvars, RMatrix(2, 2));
                return b;
            }
        case 3: {
            // elliptic curve tensor a chain with l >= 1
            if (budget < 4)
                break;
            int a = static_cast<int>(r.uniform(-1, 1));
            int w = m - 2 * a - 1;
            std::vector<int> ls;
            for (int l = 1; 2 * (l + 1) <= static_cast<int>(budget) && l <= 2; ++l)
                if ((w - l) % 2 == 0)
                    ls.push_back(l);
            if (ls.empty())
                break;
            Block e = elliptic(a, random_tau(r), nvars);
            Block c = chain(w, ls[r.index(ls.size())], random_scale(r, nvars));
            for (auto& N : e.N)
                N = RMatrix(2, 2);
            return tensor(e, c, false);
        }
        case 4: {
            if (nvars != 2 || budget < 4)
                break;
            int w1 = static_cast<int>(r.uniform(m - 2, m + 2));
            int w2 = m - w1;
            int l1 = (w1 % 2 == 0) ? 0 : 1, l2 = (w2 % 2 == 0) ? 0 : 1;
            if (r.coin() && static_cast<std::size_t>((l1 + 3) * (l2 + 1)) <= budget)
                l1 += 2;
            if (static_cast<std::size_t>((l1 + 1) * (l2 + 1)) > budget || l1 + l2 == 0)
                break;
            Block a = chain(w1, l1, {Rational(1)}), b = chain(w2, l2, {Rational(1)});
            return tensor(a, b, true);
        }
        }
    }
    if (!odd)
        return chain(m, 0, random_scale(r, nvars));
    if (budget >= 2)
        return chain(m, 1, random_scale(r, nvars));
    return std::nullopt;
}

struct Assembled {
    std::size_t dim = 0;
    std::vector<int> weight; // per coordinate
    GFiltration F;
    std::vector<RMatrix> N;
    RMatrix Q;
    std::vector<int> src_level, tgt_level;
    std::vector<std::size_t> block_of;
};

Assembled assemble(const std::vector<Block>& blocks, std::size_t nvars)
{
    Assembled a;
    for (const auto& b : blocks)
        a.dim += b.dim;
    std::size_t n = a.dim;
    a.N.assign(nvars, RMatrix(n, n));
    a.Q = RMatrix(n, n);
    std::map<int, std::vector<Vec<Gaussian>>> fsteps;
    int plo = 0, phi = 0;
    bool first = true;
    for (const auto& b : blocks) {
        if (b.dim == 0)
            continue;
        if (first || b.F.lo() < plo)
            plo = b.F.lo();
        if (first || b.F.hi() > phi)
            phi = b.F.hi();
        first = false;
    }
    std::size_t off = 0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const Block& b = blocks[bi];
        for (std::size_t i = 0; i < b.dim; ++i) {
            a.weight.push_back(b.weight);
            a.src_level.push_back(b.src_level[i]);
            a.tgt_level.push_back(b.tgt_level[i]);
            a.block_of.push_back(bi);
            for (std::size_t j = 0; j < b.dim; ++j) {
                a.Q(off + i, off + j) = b.Q(i, j);
                for (std::size_t v = 0; v < nvars; ++v)
                    a.N[v](off + i, off + j) = b.N[v](i, j);
            }
        }
        for (int p = plo; p <= phi; ++p) {
            GSubspace s = b.F.at(p);
            for (std::size_t x = 0; x < s.dim(); ++x) {
                Vec<Gaussian> v(n, Gaussian(0));
                for (std::size_t i = 0; i < b.dim; ++i)
                    v[off + i] = s.vector(x)[i];
                fsteps[p].push_back(v);
            }
        }
        off += b.dim;
    }
    std::vector<GStep> steps;
    for (int p = plo; p <= phi; ++p)
        steps.emplace_back(p, GSubspace::span(fsteps[p], n));
    a.F = decreasing(n, steps);
    return a;
}

GFiltration transform(const GFiltration& F, const RMatrix& h)
{
    GMatrix hc = complexify(h);
    std::vector<GStep> steps;
    for (const auto& [p, s] : F.steps())
        steps.emplace_back(p, apply(hc, s));
    return decreasing(F.ambient(), steps);
}

RFiltration transform(const RFiltration& W, const RMatrix& h)
{
    std::vector<RFiltration::Step> steps;
    for (const auto& [k, s] : W.steps())
        steps.emplace_back(k, apply(h, s));
    if (steps.empty())
        return W;
    return RFiltration::from_steps(W.ambient(), Direction::Increasing, steps);
}

RMatrix exp_of_sum(Rng& r, const std::vector<RMatrix>& Ns, std::size_t n)
{
    RMatrix X(n, n);
    for (const auto& N : Ns)
        if (r.coin())
            X += r.rational(2, 2) * N;
    return exp_nilpotent(X);
}

RFiltration weight_filtration(const std::vector<int>& weight)
{
    std::size_t n = weight.size();
    if (n == 0)
        return RFiltration::trivial(0, Direction::Increasing, 0);
    std::vector<RFiltration::Step> steps;
    for (int k : weight) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (weight[i] <= k)
                idx.push_back(i);
        steps.emplace_back(k, RSubspace::coordinate(n, idx));
    }
    return RFiltration::from_steps(n, Direction::Increasing, steps);
}

} // namespace

RMatrix gen_invertible(Rng& r, std::size_t n, long range)
{
    RMatrix lower = RMatrix::identity(n), upper = RMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j)
                lower(i, j) = Rational(r.uniform(-range, range));
            if (i < j)
                upper(i, j) = Rational(r.uniform(-range, range));
        }
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(p[i - 1], p[r.index(i)]);
    RMatrix perm(n, n);
    for (std::size_t i = 0; i < n; ++i)
        perm(i, p[i]) = 1;
    return lower * perm * upper;
}

RMatrix gen_nilpotent(Rng& r, std::size_t n)
{
    RMatrix J(n, n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t b = 1 + r.index(n - i);
        for (std::size_t k = 0; k + 1 < b; ++k)
            J(i + k, i + k + 1) = 1;
        i += b;
    }
    RMatrix P = gen_invertible(r, n);
    return P * J * *inverse(P);
}

NilpotentOrbitData gen_pure_orbit(Rng& r, std::size_t max_dim, std::size_t nvars, int m)
{
    std::vector<Block> blocks;
    std::size_t used = 0;
    std::size_t target = 1 + r.index(std::max<std::size_t>(max_dim, 1));
    while (used < target) {
        auto b = random_block(r, m, nvars, max_dim - used);
        if (!b)
            break;
        used += b->dim;
        blocks.push_back(*b);
        if (r.uniform(0, 2) == 0)
            break;
    }
    Assembled a = assemble(blocks, nvars);
    std::size_t n = a.dim;
    RMatrix g = exp_of_sum(r, a.N, n);
    RMatrix h = gen_invertible(r, n);
    RMatrix hinv = *inverse(h);
    NilpotentOrbitData d;
    d.m = m;
    d.H = pure_hodge_data(n, m, transform(a.F, h * g));
    for (const auto& N : a.N)
        d.Ns.push_back(h * N * hinv);
    d.Q = hinv.transpose() * a.Q * hinv;
    return d;
}

MixedNilpotentOrbitData gen_mixed_orbit(Rng& r, std::size_t max_dim, std::size_t nvars, int max_steps)
{
    for (int attempt = 0;; ++attempt) {
        bool perturb = attempt < 60;
        int steps = static_cast<int>(r.uniform(1, std::max(1, max_steps)));
        std::vector<int> weights;
        int w = static_cast<int>(r.uniform(-1, 1));
        for (int s = 0; s < steps; ++s) {
            weights.push_back(w);
            w += static_cast<int>(r.uniform(1, 2));
        }
        std::vector<Block> blocks;
        std::size_t used = 0;
        for (std::size_t s = 0; s < weights.size(); ++s) {
            std::size_t reserve = weights.size() - s - 1;
            if (used + reserve >= max_dim)
                break;
            std::size_t budget = std::min<std::size_t>(max_dim - used - reserve, 4);
            auto b = random_block(r, weights[s], nvars, 1 + r.index(budget));
            if (!b)
                b = random_block(r, weights[s], nvars, budget);
            if (!b)
                continue;
            used += b->dim;
            blocks.push_back(*b);
        }
        Assembled a = assemble(blocks, nvars);
        std::size_t n = a.dim;
        std::vector<RMatrix> Ns = a.N;
        if (perturb && n > 1) {
            int count = static_cast<int>(r.uniform(1, 3));
            for (int c = 0; c < count; ++c) {
                std::size_t s = r.index(n), t = r.index(n);
                if (a.weight[t] >= a.weight[s] || a.tgt_level[t] < a.src_level[s] - 1)
                    continue;
                Ns[r.index(nvars)](t, s) += r.rational(2, 2);
            }
        }
        RMatrix g = exp_of_sum(r, Ns, n);
        RMatrix h = gen_invertible(r, n);
        RMatrix hinv = *inverse(h);
        MixedNilpotentOrbitData d;
        RFiltration W = weight_filtration(a.weight);
        d.H = {n, transform(W, h), transform(a.F, h * g), 0};
        for (const auto& N : Ns)
            d.Ns.push_back(h * N * hinv);
        for (int k : W.jumps()) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (a.weight[i] == k)
                    idx.push_back(i);
            Quotient<Rational> q = d.H.W.graded(k);
            RMatrix G = q.projection() * h * select_cols(RMatrix::identity(n), idx);
            RMatrix Qk = select_cols(select_rows(a.Q, idx), idx);
            RMatrix Ginv = *inverse(G);
            d.graded_forms[k] = Ginv.transpose() * Qk * Ginv;
        }
        if (is_mixed_nilpotent_orbit(d).ok)
            return d;
    }
}

namespace {

struct MhsBlocks {
    std::vector<Block> blocks;
};

Block tate(int a)
{
    Block b = chain(2 * a, 0, {});
    return b;
}

std::vector<Block> random_mhs_blocks(Rng& r, std::size_t max_dim, bool fixed_tau)
{
    std::vector<Block> blocks;
    std::size_t used = 0, target = 1 + r.index(std::max<std::size_t>(max_dim, 1));
    while (used < target) {
        int a = static_cast<int>(r.uniform(-1, 2));
        if (max_dim - used >= 2 && r.coin()) {
            blocks.push_back(elliptic(a, fixed_tau ? Gaussian::i() : random_tau(r), 0));
            used += 2;
        } else {
            blocks.push_back(tate(a));
            used += 1;
        }
    }
    std::stable_sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.weight < y.weight; });
    return blocks;
}

// Rational map acting as the identity on Gr^W.
RMatrix w_unipotent(Rng& r, const std::vector<int>& weight)
{
    std::size_t n = weight.size();
    RMatrix g = RMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (weight[i] < weight[j] && r.coin())
                g(i, j) = r.rational(2, 2);
    return g;
}

MixedHodgeData realize(const Assembled& a, const RMatrix& g, const RMatrix& h)
{
    return {a.dim, transform(weight_filtration(a.weight), h), transform(a.F, h * g), 0};
}

} // namespace

MixedHodgeData gen_mhs(Rng& r, std::size_t max_dim)
{
    Assembled a = assemble(random_mhs_blocks(r, max_dim, false), 0);
    return realize(a, w_unipotent(r, a.weight), gen_invertible(r, a.dim));
}

MhsMorphism gen_mhs_morphism(Rng& r, std::size_t max_dim)
{
    auto ba = random_mhs_blocks(r, max_dim, true);
    auto bb = random_mhs_blocks(r, max_dim, true);
    Assembled a = assemble(ba, 0), b = assemble(bb, 0);
    RMatrix f0(b.dim, a.dim);
    std::size_t oa = 0;
    for (const auto& x : ba) {
        std::size_t ob = 0;
        for (const auto& y : bb) {
            if (x.dim == y.dim && x.weight == y.weight && r.uniform(0, 2) != 0) {
                if (x.dim == 1) {
                    f0(ob, oa) = r.rational(3, 2);
                } else {
                    Rational p = r.rational(2, 2), q = r.rational(2, 2);
                    f0(ob, oa) = p;
                    f0(ob, oa + 1) = -q;
                    f0(ob + 1, oa) = q;
                    f0(ob + 1, oa + 1) = p;
                }
            }
            ob += y.dim;
        }
        oa += x.dim;
    }
    RMatrix ga = w_unipotent(r, a.weight), gb = w_unipotent(r, b.weight);
    RMatrix ha = gen_invertible(r, a.dim), hb = gen_invertible(r, b.dim);
    MhsMorphism m;
    m.A = realize(a, ga, ha);
    m.B = realize(b, gb, hb);
    m.f = hb * gb * f0 * *inverse(ga) * *inverse(ha);
    return m;
}

PolarizedCandidate gen_polarized(Rng& r, std::size_t max_dim)
{
    int m = static_cast<int>(r.uniform(-1, 3));
    std::vector<Block> blocks;
    std::size_t used = 0, target = 1 + r.index(std::max<std::size_t>(max_dim, 1));
    while (used < target) {
        if (m % 2 != 0) {
            if (max_dim - used < 2)
                break;
            blocks.push_back(elliptic(floor_div2(m - 1), random_tau(r), 0));
            used += 2;
        } else if (max_dim - used >= 2 && r.coin()) {
            blocks.push_back(k3_type(m / 2, r.positive(3, 2)));
            used += 2;
        } else {
            blocks.push_back(tate(m / 2));
            used += 1;
        }
    }
    Assembled a = assemble(blocks, 0);
    RMatrix h = gen_invertible(r, a.dim);
    RMatrix hinv = *inverse(h);
    PolarizedCandidate c;
    c.m = m;
    c.hodge = pure_hodge_data(a.dim, m, transform(a.F, h));
    c.Q = hinv.transpose() * a.Q * hinv;
    return c;
}

} // namespace mhl

namespace mhl {

std::pair<RMatrix, RMatrix> gen_commuting_pair(Rng& r, std::size_t n)
{
    RMatrix A(n, n), B(n, n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t b = 1 + r.index(std::min<std::size_t>(n - i, 3));
        RMatrix J(b, b);
        for (std::size_t k = 0; k + 1 < b; ++k)
            J(k, k + 1) = 1;
        // polynomials in one Jordan block commute
        auto poly = [&](void) {
            Rational lam = r.positive(3, 2);
            if (r.coin())
                lam = -lam;
            RMatrix p = lam * RMatrix::identity(b);
            RMatrix Jp = J;
            for (std::size_t d = 1; d < b; ++d) {
                if (r.coin())
                    p += Rational(r.uniform(-2, 2)) * Jp;
                Jp = Jp * J;
            }
            return p;
        };
        RMatrix a = poly(), c = poly();
        for (std::size_t x = 0; x < b; ++x)
            for (std::size_t y = 0; y < b; ++y) {
                A(i + x, i + y) = a(x, y);
                B(i + x, i + y) = c(x, y);
            }
        i += b;
    }
    RMatrix P = gen_invertible(r, n);
    RMatrix Pinv = *inverse(P);
    return {P * A * Pinv, P * B * Pinv};
}

PerverseQuiver1D gen_quiver_1d(Rng& r, std::size_t max_dim)
{
    static const long kAlpha[][2] = {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 4}};
    std::size_t count = 1 + r.index(3);
    std::vector<std::size_t> used;
    PerverseQuiver1D q;
    q.c = RMatrix(0, 0);
    q.v = RMatrix(0, 0);
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    std::vector<Rational> alphas;
    std::size_t budget = std::max<std::size_t>(max_dim, 1);
    for (std::size_t s = 0; s < count && budget > 0; ++s) {
        std::size_t a = r.index(5);
        if (std::find(used.begin(), used.end(), a) != used.end())
            continue;
        used.push_back(a);
        std::size_t n = 1 + r.index(std::min<std::size_t>(budget, 3));
        budget -= n;
        RMatrix T = gen_invertible(r, n);
        if (r.coin()) {
            // unipotent or scalar pieces make c degenerate more often
            T = RMatrix::identity(n);
            for (std::size_t k = 0; k + 1 < n; ++k)
                if (r.coin())
                    T(k, k + 1) = 1;
        }
        PerverseQuiver1D piece = from_local_system(T, r.coin() ? LocalSystemVariant::FullDirectImage : LocalSystemVariant::MiddleExtension);
        if (r.uniform(0, 3) == 0) {
            PerverseQuiver1D sky;
            sky.phi = 1;
            sky.c = RMatrix(1, 0);
            sky.v = RMatrix(0, 1);
            piece = direct_sum(piece, sky);
        }
        sizes.push_back({piece.psi, piece.phi});
        alphas.push_back(frac(kAlpha[a][0], kAlpha[a][1]));
        q = direct_sum(q, piece);
    }
    RMatrix hp = gen_invertible(r, q.psi), hf = gen_invertible(r, q.phi);
    q.c = hf * q.c * *inverse(hp);
    q.v = hp * q.v * *inverse(hf);
    std::size_t op = 0, of = 0;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        std::vector<std::size_t> ip, iF;
        for (std::size_t k = 0; k < sizes[s].first; ++k)
            ip.push_back(op + k);
        for (std::size_t k = 0; k < sizes[s].second; ++k)
            iF.push_back(of + k);
        op += sizes[s].first;
        of += sizes[s].second;
        q.sectors.push_back({alphas[s], apply(hp, RSubspace::coordinate(q.psi, ip)), apply(hf, RSubspace::coordinate(q.phi, iF))});
    }
    return q;
}

PerverseQuiver2D gen_quiver_2d(Rng& r, std::size_t max_dim)
{
    std::size_t n = 1 + r.index(std::max<std::size_t>(max_dim, 1));
    auto [T1, T2] = gen_commuting_pair(r, n);
    RMatrix I = RMatrix::identity(n);
    PerverseQuiver2D q;
    q.dim = {n, n, n, n};
    q.c = {T1 - I, T1 - I, T2 - I, T2 - I};
    q.v = {I, I, I, I};
    if (r.coin()) {
        std::size_t s = 1 + r.index(2);
        q.dim[3] += s;
        // edges into 22: 1 (from 21) and 3 (from 12)
        for (int e : {1, 3}) {
            q.c[static_cast<std::size_t>(e)] = vstack(q.c[static_cast<std::size_t>(e)], RMatrix(s, n));
            q.v[static_cast<std::size_t>(e)] = hstack(q.v[static_cast<std::size_t>(e)], RMatrix(n, s));
        }
    }
    std::array<RMatrix, 4> h, hinv;
    for (std::size_t i = 0; i < 4; ++i) {
        h[i] = gen_invertible(r, q.dim[i]);
        hinv[i] = *inverse(h[i]);
    }
    for (std::size_t e = 0; e < 4; ++e) {
        std::size_t s = static_cast<std::size_t>(edge_source(static_cast<int>(e))), t = static_cast<std::size_t>(edge_target(static_cast<int>(e)));
        q.c[e] = h[t] * q.c[e] * hinv[s];
        q.v[e] = h[s] * q.v[e] * hinv[t];
    }
    return q;
}

} // namespace mhl

namespace mhl {

RMatrix gen_jordan(Rng& r, std::size_t n, bool in_window)
{
    static const long kDen[] = {1, 2, 3, 4, 6};
    RMatrix A(n, n);
    std::size_t i = 0;
    std::vector<Rational> used;
    while (i < n) {
        std::size_t b = 1 + r.index(std::min<std::size_t>(n - i, 3));
        Rational lam;
        if (!used.empty() && r.uniform(0, 2) == 0) {
            lam = used[r.index(used.size())];
        } else {
            long d = kDen[r.index(5)];
            lam = in_window ? frac(-static_cast<long>(r.index(static_cast<std::size_t>(d))), d) : frac(r.uniform(-2 * d, 2 * d), d);
            used.push_back(lam);
        }
        for (std::size_t k = 0; k < b; ++k) {
            A(i + k, i + k) = lam;
            if (k + 1 < b)
                A(i + k, i + k + 1) = 1;
        }
        i += b;
    }
    return A;
}

} // namespace mhl

namespace mhl {

namespace {

struct Cell {
    int level = 0, weight = 0;
};

// Adapted bases per degree and the interval differential.
struct Intervals {
    std::vector<std::vector<Cell>> cells;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> arrows; // degree n: (source, target in n+1)
};

Intervals random_intervals(Rng& r, std::size_t degrees, std::size_t max_dim, int levels, bool acyclic_gr)
{
    Intervals iv;
    iv.cells.resize(degrees);
    iv.arrows.resize(degrees);
    std::size_t pieces = 1 + r.index(degrees * max_dim);
    for (std::size_t k = 0; k < pieces; ++k) {
        std::size_t n = r.index(degrees);
        bool pair = (acyclic_gr || r.uniform(0, 2) > 0) && n + 1 < degrees;
        if (acyclic_gr && !pair)
            continue;
        if (iv.cells[n].size() >= max_dim || (pair && iv.cells[n + 1].size() >= max_dim))
            continue;
        int a = static_cast<int>(r.uniform(0, levels - 1));
        int w = static_cast<int>(r.uniform(0, 2));
        iv.cells[n].push_back({a, w});
        if (pair) {
            int b = acyclic_gr ? a : static_cast<int>(r.uniform(a, levels - 1));
            int wb = static_cast<int>(r.uniform(0, w));
            iv.arrows[n].push_back({iv.cells[n].size() - 1, iv.cells[n + 1].size()});
            iv.cells[n + 1].push_back({b, wb});
        }
    }
    return iv;
}

RFiltration level_filtration(const std::vector<Cell>& cells, const RMatrix& P, bool weight)
{
    std::size_t m = cells.size();
    int lo = 0, hi = 3;
    for (const auto& c : cells) {
        int x = weight ? c.weight : c.level;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    Direction dir = weight ? Direction::Increasing : Direction::Decreasing;
    return RFiltration::build(m, dir, lo - 1, hi + 1, [&](int k) {
        std::vector<Vec<Rational>> vs;
        for (std::size_t i = 0; i < m; ++i) {
            bool in = weight ? cells[i].weight <= k : cells[i].level >= k;
            if (in)
                vs.push_back(P.col(i));
        }
        return RSubspace::span(vs, m);
    });
}

FilteredComplex realize_intervals(const Intervals& iv, int n_min, const std::vector<RMatrix>& P, bool with_w)
{
    FilteredComplex c;
    c.n_min = n_min;
    std::size_t K = iv.cells.size();
    for (std::size_t n = 0; n < K; ++n)
        c.dims.push_back(iv.cells[n].size());
    for (std::size_t n = 0; n + 1 < K; ++n) {
        RMatrix d(c.dims[n + 1], c.dims[n]);
        for (auto [s, t] : iv.arrows[n])
            d(t, s) = 1;
        c.d.push_back(P[n + 1] * d * *inverse(P[n]));
    }
    for (std::size_t n = 0; n < K; ++n)
        c.F.push_back(level_filtration(iv.cells[n], P[n], false));
    if (with_w) {
        c.W.emplace();
        for (std::size_t n = 0; n < K; ++n)
            c.W->push_back(level_filtration(iv.cells[n], P[n], true));
    }
    validate(c);
    return c;
}

} // namespace

FilteredComplex gen_filtered_complex(Rng& r, std::size_t max_dim, int levels, bool with_w)
{
    std::size_t K = 2 + r.index(3);
    Intervals iv = random_intervals(r, K, max_dim, levels, false);
    std::vector<RMatrix> P;
    for (const auto& cells : iv.cells)
        P.push_back(gen_invertible(r, cells.size()));
    return realize_intervals(iv, static_cast<int>(r.uniform(-1, 0)), P, with_w);
}

FilteredQuasiIso gen_filtered_quasi_iso(Rng& r, std::size_t max_dim, int levels)
{
    std::size_t K = 2 + r.index(3);
    int n_min = static_cast<int>(r.uniform(-1, 0));
    Intervals a = random_intervals(r, K, max_dim, levels, false);
    Intervals e = random_intervals(r, K, max_dim, levels, true);
    Intervals b = a;
    for (std::size_t n = 0; n < K; ++n) {
        std::size_t off = a.cells[n].size(), off1 = n + 1 < K ? a.cells[n + 1].size() : 0;
        b.cells[n].insert(b.cells[n].end(), e.cells[n].begin(), e.cells[n].end());
        for (auto [s, t] : e.arrows[n])
            b.arrows[n].push_back({off + s, off1 + t});
    }
    std::vector<RMatrix> Pa, Pb;
    for (std::size_t n = 0; n < K; ++n) {
        Pa.push_back(gen_invertible(r, a.cells[n].size()));
        Pb.push_back(gen_invertible(r, b.cells[n].size()));
    }
    FilteredQuasiIso q;
    q.A = realize_intervals(a, n_min, Pa, false);
    q.B = realize_intervals(b, n_min, Pb, false);
    for (std::size_t n = 0; n < K; ++n) {
        std::size_t da = a.cells[n].size(), db = b.cells[n].size();
        RMatrix inc(db, da), proj(da, db);
        for (std::size_t i = 0; i < da; ++i)
            inc(i, i) = proj(i, i) = 1;
        RMatrix ia = *inverse(Pa[n]), ib = *inverse(Pb[n]);
        q.to.push_back(Pb[n] * inc * ia);
        q.from.push_back(Pa[n] * proj * ib);
    }
    return q;
}

DoubleComplex gen_split_double(Rng& r, std::size_t rows, std::size_t cols, std::size_t max_dim)
{
    DoubleComplex k;
    k.dims.assign(cols, std::vector<std::size_t>(rows, 0));
    k.dh.assign(cols > 0 ? cols - 1 : 0, std::vector<RMatrix>(rows));
    k.dv.assign(cols, std::vector<RMatrix>(rows > 0 ? rows - 1 : 0));
    for (std::size_t b = 0; b < rows; ++b) {
        Intervals iv = random_intervals(r, cols, max_dim, 1, false);
        std::vector<RMatrix> P;
        for (const auto& cells : iv.cells)
            P.push_back(gen_invertible(r, cells.size()));
        FilteredComplex row = realize_intervals(iv, 0, P, false);
        for (std::size_t a = 0; a < cols; ++a)
            k.dims[a][b] = row.dims[a];
        for (std::size_t a = 0; a + 1 < cols; ++a)
            k.dh[a][b] = row.d[a];
    }
    for (std::size_t a = 0; a < cols; ++a)
        for (std::size_t b = 0; b + 1 < rows; ++b)
            k.dv[a][b] = RMatrix(k.dims[a][b + 1], k.dims[a][b]);
    return k;
}

} // namespace mhl
