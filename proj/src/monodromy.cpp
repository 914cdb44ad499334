#include "mhl/monodromy.hpp"

#include <map>

namespace mhl {

namespace {

void check_nilpotent(const RMatrix& N)
{
    require(N.square(), ErrorCode::DimensionMismatch, "N must be square");
    if (!is_nilpotent(N))
        throw Error(ErrorCode::NotNilpotent, "N is not nilpotent");
}

void mono_rec(const RMatrix& N, const RSubspace& top, const RSubspace& bot, int m, std::map<int, RSubspace>& out)
{
    if (top == bot)
        return;
    // l + 1 = least j with N^j(top) ⊆ bot
    int l = -1;
    RSubspace cur = top;
    while (!bot.contains(cur)) {
        cur = apply(N, cur);
        ++l;
    }
    out[m + l] = top;
    out[m - l - 1] = bot;
    if (l == 0)
        return;
    RMatrix Nl = power(N, static_cast<unsigned>(l));
    RSubspace K = intersect(top, preimage(Nl, bot));
    RSubspace I = sum(apply(Nl, top), bot);
    out[m - l] = I;
    out[m + l - 1] = K;
    mono_rec(N, K, I, m, out);
}

RFiltration from_map(std::size_t n, const std::map<int, RSubspace>& m)
{
    std::vector<RFiltration::Step> steps(m.begin(), m.end());
    if (steps.empty())
        return RFiltration::trivial(n, Direction::Increasing, 0);
    return RFiltration::from_steps(n, Direction::Increasing, steps);
}

// Jordan chain tops of a nilpotent map, grouped by chain length.
std::vector<std::pair<unsigned, Vec<Rational>>> chain_tops(const RMatrix& N)
{
    std::size_t n = N.rows();
    std::vector<std::pair<unsigned, Vec<Rational>>> tops;
    if (n == 0)
        return tops;
    unsigned e = nilpotency_index(N);
    std::vector<RSubspace> K(e + 2);
    for (unsigned i = 0; i <= e + 1; ++i)
        K[i] = kernel(power(N, i));
    for (unsigned i = e; i >= 1; --i) {
        RSubspace below = sum(K[i - 1], apply(N, K[i + 1]));
        Quotient<Rational> q(K[i], below);
        RMatrix L = q.lift();
        for (std::size_t c = 0; c < L.cols(); ++c)
            tops.emplace_back(i, L.col(c));
    }
    return tops;
}

} // namespace

RFiltration monodromy_filtration(const RMatrix& N, int m)
{
    check_nilpotent(N);
    std::size_t n = N.rows();
    std::map<int, RSubspace> out;
    mono_rec(N, RSubspace::full(n), RSubspace::zero(n), m, out);
    return from_map(n, out);
}

bool is_monodromy_filtration(const RMatrix& N, int m, const RFiltration& M)
{
    if (M.ambient() != N.rows() || !M.increasing())
        return false;
    for (int k = M.lo(); k <= M.hi() + 2; ++k)
        if (!maps_into(N, M.at(k), M.at(k - 2)))
            return false;
    int reach = std::max(M.hi() - m, m - M.lo());
    for (int k = 0; k <= reach; ++k) {
        Quotient<Rational> a = M.graded(m + k), b = M.graded(m - k);
        if (a.dim() != b.dim())
            return false;
        RMatrix f = induced_map(power(N, static_cast<unsigned>(k)), a, b);
        if (rank(f) != a.dim())
            return false;
    }
    return true;
}

std::vector<PrimitivePart> primitive_decomposition(const RMatrix& N, int m)
{
    RFiltration M = monodromy_filtration(N, m);
    std::vector<PrimitivePart> out;
    int top = M.hi() - m;
    for (int k = 0; k <= std::max(top, 0); ++k) {
        Quotient<Rational> g = M.graded(m + k);
        Quotient<Rational> h = M.graded(m - k - 2);
        RMatrix f = induced_map(power(N, static_cast<unsigned>(k + 1)), g, h);
        out.push_back({k, g, kernel(f)});
    }
    // dim Gr_j = sum over i >= max(0, m - j) of dim PGr_{j + 2i}
    for (int j = M.lo(); j <= M.hi(); ++j) {
        std::size_t total = 0;
        for (const auto& p : out) {
            int d = m + p.k - j;
            if (d >= 0 && d % 2 == 0 && j >= m - p.k)
                total += p.P.dim();
        }
        require(total == M.graded_dim(j), ErrorCode::Internal, "primitive decomposition dimension mismatch");
    }
    return out;
}

std::optional<RFiltration> relative_monodromy_filtration(const FilteredSpaceWithNilpotent& x)
{
    const RMatrix& N = x.N;
    const RFiltration& W = x.W;
    check_nilpotent(N);
    require(W.ambient() == N.rows() && W.increasing(), ErrorCode::DimensionMismatch, "W must be an increasing filtration on the space of N");
    if (!W.preserved_by(N, W))
        throw Error(ErrorCode::FiltrationNotPreserved, "N does not preserve W");
    std::size_t n = N.rows();

    // Weighted basis; M_k is spanned by the vectors of weight <= k.
    std::vector<std::pair<int, Vec<Rational>>> basis;
    auto M_at = [&](int k) {
        std::vector<Vec<Rational>> vs;
        for (const auto& [w, v] : basis)
            if (w <= k)
                vs.push_back(v);
        return RSubspace::span(vs, n);
    };

    for (int j : W.jumps()) {
        Quotient<Rational> q = W.graded(j);
        RMatrix Nbar = induced_map(N, q, q);
        RMatrix L = q.lift();
        RSubspace B = q.quot();
        std::vector<std::pair<int, Vec<Rational>>> added;
        for (const auto& [len, top] : chain_tops(Nbar)) {
            int l = static_cast<int>(len) - 1;
            Vec<Rational> xr = L * top;
            RMatrix Np = power(N, len);
            // N^{l+1}(xr + u) ∈ M'_{j-l-2} with u ∈ B: solve Np*Bu - Mb*c = -Np*xr.
            RSubspace target = M_at(j - l - 2);
            RMatrix A = hstack(Np * B.basis_cols(), -target.basis_cols());
            Vec<Rational> rhs = Np * xr;
            for (auto& r : rhs)
                r = -r;
            auto sol = solve(A, rhs);
            if (!sol)
                return std::nullopt;
            Vec<Rational> xt = xr;
            for (std::size_t i = 0; i < B.dim(); ++i)
                for (std::size_t t = 0; t < n; ++t)
                    xt[t] += (*sol)[i] * B.basis()(i, t);
            Vec<Rational> v = xt;
            for (int i = 0; i <= l; ++i) {
                added.emplace_back(j + l - 2 * i, v);
                v = N * v;
            }
        }
        basis.insert(basis.end(), added.begin(), added.end());
    }

    std::map<int, RSubspace> steps;
    for (const auto& [w, v] : basis)
        steps[w] = RSubspace();
    for (auto& [w, s] : steps)
        s = M_at(w);
    RFiltration M = from_map(n, steps);
    if (!is_relative_monodromy(N, W, M))
        return std::nullopt;
    return M;
}

bool is_relative_monodromy(const RMatrix& N, const RFiltration& W, const RFiltration& M)
{
    if (M.ambient() != N.rows() || !M.increasing())
        return false;
    for (int k = M.lo(); k <= M.hi() + 2; ++k)
        if (!maps_into(N, M.at(k), M.at(k - 2)))
            return false;
    for (int j : W.jumps()) {
        Quotient<Rational> q = W.graded(j);
        if (q.dim() == 0)
            continue;
        RMatrix Nbar = induced_map(N, q, q);
        if (M.induced(q) != monodromy_filtration(Nbar, j))
            return false;
    }
    return true;
}

RFiltration push_weight(const RMatrix& N, const RFiltration& W, const RFiltration& M)
{
    std::size_t n = N.rows();
    require(W.ambient() == n && M.ambient() == n, ErrorCode::DimensionMismatch, "push_weight: dims");
    if (n == 0)
        return RFiltration::trivial(0, Direction::Increasing, 0);
    int a = W.lo() - 2;
    int b = std::max(W.hi(), M.hi()) + 1;
    return RFiltration::build(n, Direction::Increasing, a, b, [&](int k) {
        return sum(apply(N, W.at(k + 1)), intersect(M.at(k), W.at(k)));
    });
}

std::optional<RFiltration> push_weight(const RMatrix& N, const RFiltration& W)
{
    auto M = relative_monodromy_filtration({W, N});
    if (!M)
        return std::nullopt;
    return push_weight(N, W, *M);
}

} // namespace mhl
