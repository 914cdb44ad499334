#include "mhl/specseq.hpp"

#include <algorithm>

namespace mhl {

std::size_t FilteredComplex::dim(int n) const
{
    if (n < n_min || n > n_max())
        return 0;
    return dims[static_cast<std::size_t>(n - n_min)];
}

RMatrix FilteredComplex::diff(int n) const
{
    if (n < n_min || n + 1 > n_max())
        return RMatrix(dim(n + 1), dim(n));
    return d[static_cast<std::size_t>(n - n_min)];
}

RSubspace FilteredComplex::Fp(int n, int p) const
{
    if (n < n_min || n > n_max())
        return RSubspace::zero(0);
    return F[static_cast<std::size_t>(n - n_min)].at(p);
}

int FilteredComplex::p_min() const
{
    int lo = 1;
    bool any = false;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] > 0) {
            lo = any ? std::min(lo, F[i].lo()) : F[i].lo();
            any = true;
        }
    return any ? lo : 1;
}

int FilteredComplex::p_max() const
{
    int hi = 0;
    bool any = false;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] > 0) {
            hi = any ? std::max(hi, F[i].hi()) : F[i].hi();
            any = true;
        }
    return any ? hi : 0;
}

int FilteredComplex::length() const { return std::max(0, p_max() - p_min() + 1); }

CheckResult check_complex(const FilteredComplex& c)
{
    CheckResult r;
    std::size_t k = c.dims.size();
    bool shapes = c.F.size() == k && (k == 0 ? c.d.empty() : c.d.size() == k - 1) && (!c.W || c.W->size() == k);
    for (std::size_t i = 0; shapes && i < k; ++i) {
        shapes = shapes && c.F[i].ambient() == c.dims[i] && !c.F[i].increasing();
        if (c.W)
            shapes = shapes && (*c.W)[i].ambient() == c.dims[i] && (*c.W)[i].increasing();
        if (i + 1 < k)
            shapes = shapes && c.d[i].rows() == c.dims[i + 1] && c.d[i].cols() == c.dims[i];
    }
    r.add("shapes", shapes);
    if (!shapes)
        return r;
    bool dd = true, fok = true, wok = true;
    for (int n = c.n_min; n <= c.n_max(); ++n) {
        dd = dd && (c.diff(n + 1) * c.diff(n)).is_zero();
        if (n < c.n_max()) {
            std::size_t i = static_cast<std::size_t>(n - c.n_min);
            fok = fok && c.F[i].preserved_by(c.d[i], c.F[i + 1]);
            if (c.W)
                wok = wok && (*c.W)[i].preserved_by(c.d[i], (*c.W)[i + 1]);
        }
    }
    r.add("d squared zero", dd);
    r.add("d preserves F", fok);
    if (c.W)
        r.add("d preserves W", wok);
    return r;
}

void validate(const FilteredComplex& c)
{
    CheckResult r = check_complex(c);
    if (!r.ok) {
        const Clause* f = r.first_failure();
        throw Error(f->name == "shapes" ? ErrorCode::DimensionMismatch : ErrorCode::WellDefinednessViolation, "filtered complex: " + f->name);
    }
}

std::size_t SpectralPage::dim(int p, int q) const
{
    auto it = E.find({p, q});
    return it == E.end() ? 0 : it->second.dim();
}

SpectralPage page(const FilteredComplex& c, int r)
{
    require(r >= 0, ErrorCode::Schema, "page index must be nonnegative");
    validate(c);
    SpectralPage s;
    s.r = r;
    int lo = c.p_min(), hi = c.p_max();
    for (int n = c.n_min; n <= c.n_max(); ++n) {
        RMatrix d = c.diff(n), dprev = c.diff(n - 1);
        for (int p = lo; p <= hi; ++p) {
            RSubspace up = preimage(d, c.Fp(n + 1, p + r));
            RSubspace Z = intersect(c.Fp(n, p), up);
            RSubspace D = sum(intersect(c.Fp(n, p + 1), up), intersect(apply(dprev, c.Fp(n - 1, p - r + 1)), c.Fp(n, p)));
            s.E.emplace(std::make_pair(p, n - p), RQuotient(Z, D));
        }
    }
    for (const auto& [key, src] : s.E) {
        auto [p, q] = key;
        auto tgt = s.E.find({p + r, q - r + 1});
        if (tgt == s.E.end())
            continue;
        s.d.emplace(key, induced_map(c.diff(p + q), src, tgt->second));
    }
    return s;
}

SpectralPage e_infinity(const FilteredComplex& c) { return page(c, c.length()); }

std::vector<Abutment> abutment_filtration(const FilteredComplex& c)
{
    validate(c);
    std::vector<Abutment> out;
    int lo = c.p_min(), hi = c.p_max();
    for (int n = c.n_min; n <= c.n_max(); ++n) {
        RQuotient H(kernel(c.diff(n)), image(c.diff(n - 1)));
        Abutment a{n, H, RFiltration::trivial(H.dim(), Direction::Decreasing, 0)};
        if (lo <= hi)
            a.F = RFiltration::build(H.dim(), Direction::Decreasing, lo, hi + 1, [&](int p) { return H.coords(c.Fp(n, p)); });
        out.push_back(std::move(a));
    }
    return out;
}

std::pair<int, int> decalage_reindex(int p, int q) { return {2 * p + q, -p}; }

FilteredComplex decalage(const FilteredComplex& c)
{
    validate(c);
    FilteredComplex out = c;
    int lo = c.p_min(), hi = c.p_max();
    if (lo > hi) {
        lo = 0;
        hi = -1;
    }
    for (int n = c.n_min; n <= c.n_max(); ++n) {
        RMatrix d = c.diff(n);
        out.F[static_cast<std::size_t>(n - c.n_min)] = RFiltration::build(c.dim(n), Direction::Decreasing, lo - n - 1, hi - n + 1, [&](int p) {
            return intersect(c.Fp(n, p + n), preimage(d, c.Fp(n + 1, p + n + 1)));
        });
    }
    validate(out);
    return out;
}

FilteredComplex truncation_filtration(const FilteredComplex& c)
{
    FilteredComplex out = c;
    out.F.clear();
    for (int n = c.n_min; n <= c.n_max(); ++n) {
        RSubspace z = kernel(c.diff(n));
        std::size_t m = c.dim(n);
        out.F.push_back(RFiltration::build(m, Direction::Decreasing, -n - 1, -n + 1, [&](int p) {
            if (p < -n)
                return RSubspace::full(m);
            return p == -n ? z : RSubspace::zero(m);
        }));
    }
    validate(out);
    return out;
}

namespace {

struct TotalLayout {
    int n_min = 0;
    std::vector<std::size_t> dims;
    std::map<std::pair<int, int>, std::size_t> offset; // (a, b) -> offset inside degree a + b
};

TotalLayout layout(const DoubleComplex& k)
{
    TotalLayout t;
    t.n_min = k.a_min + k.b_min;
    std::size_t span = k.na() + k.nb() == 0 ? 0 : k.na() + k.nb() - 1;
    t.dims.assign(span, 0);
    for (std::size_t a = 0; a < k.na(); ++a)
        for (std::size_t b = 0; b < k.nb(); ++b) {
            std::size_t n = a + b;
            t.offset[{k.a_min + static_cast<int>(a), k.b_min + static_cast<int>(b)}] = t.dims[n];
            t.dims[n] += k.dims[a][b];
        }
    return t;
}

void check_double(const DoubleComplex& k)
{
    for (const auto& row : k.dims)
        require(row.size() == k.nb(), ErrorCode::DimensionMismatch, "double complex: ragged dims");
    for (std::size_t a = 0; a < k.na(); ++a)
        for (std::size_t b = 0; b < k.nb(); ++b) {
            if (a + 1 < k.na()) {
                const RMatrix& h = k.dh.at(a).at(b);
                require(h.rows() == k.dims[a + 1][b] && h.cols() == k.dims[a][b], ErrorCode::DimensionMismatch, "double complex: d_h shape");
                if (a + 2 < k.na())
                    require((k.dh[a + 1][b] * h).is_zero(), ErrorCode::WellDefinednessViolation, "double complex: d_h d_h != 0");
            }
            if (b + 1 < k.nb()) {
                const RMatrix& v = k.dv.at(a).at(b);
                require(v.rows() == k.dims[a][b + 1] && v.cols() == k.dims[a][b], ErrorCode::DimensionMismatch, "double complex: d_v shape");
                if (b + 2 < k.nb())
                    require((k.dv[a][b + 1] * v).is_zero(), ErrorCode::WellDefinednessViolation, "double complex: d_v d_v != 0");
                if (a + 1 < k.na())
                    require(k.dh[a][b + 1] * v == k.dv[a + 1][b] * k.dh[a][b], ErrorCode::WellDefinednessViolation, "double complex: d_h and d_v do not commute");
            }
        }
}

void place(RMatrix& m, std::size_t r0, std::size_t c0, const RMatrix& blk, const Rational& s)
{
    for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j)
            m(r0 + i, c0 + j) = s * blk(i, j);
}

} // namespace

RSubspace total_block(const DoubleComplex& k, int a, int b)
{
    TotalLayout t = layout(k);
    std::size_t n = static_cast<std::size_t>(a + b - t.n_min);
    std::size_t off = t.offset.at({a, b});
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k.dims[static_cast<std::size_t>(a - k.a_min)][static_cast<std::size_t>(b - k.b_min)]; ++i)
        idx.push_back(off + i);
    return RSubspace::coordinate(t.dims[n], idx);
}

FilteredComplex total_truncated(const DoubleComplex& k)
{
    check_double(k);
    TotalLayout t = layout(k);
    FilteredComplex c;
    c.n_min = t.n_min;
    c.dims = t.dims;
    for (std::size_t n = 0; n + 1 < t.dims.size(); ++n)
        c.d.emplace_back(t.dims[n + 1], t.dims[n]);
    for (std::size_t a = 0; a < k.na(); ++a)
        for (std::size_t b = 0; b < k.nb(); ++b) {
            int A = k.a_min + static_cast<int>(a), B = k.b_min + static_cast<int>(b);
            std::size_t n = a + b, off = t.offset[{A, B}];
            if (a + 1 < k.na())
                place(c.d[n], t.offset[{A + 1, B}], off, k.dh[a][b], 1);
            if (b + 1 < k.nb())
                place(c.d[n], t.offset[{A, B + 1}], off, k.dv[a][b], A % 2 == 0 ? 1 : -1);
        }
    int b_lo = k.b_min, b_hi = k.b_min + static_cast<int>(k.nb()) - 1;
    for (std::size_t n = 0; n < t.dims.size(); ++n) {
        std::size_t m = t.dims[n];
        c.F.push_back(RFiltration::build(m, Direction::Decreasing, -b_hi - 1, -b_lo + 1, [&](int p) {
            std::vector<Vec<Rational>> vs;
            for (std::size_t b = 0; b < k.nb(); ++b) {
                if (n < b || n - b >= k.na())
                    continue;
                std::size_t a = n - b;
                int B = k.b_min + static_cast<int>(b);
                std::size_t off = t.offset[{k.a_min + static_cast<int>(a), B}];
                std::size_t w = k.dims[a][b];
                if (B > -p || w == 0)
                    continue;
                RSubspace part = B < -p || b + 1 >= k.nb() ? RSubspace::full(w) : kernel(k.dv[a][b]);
                for (std::size_t j = 0; j < part.dim(); ++j) {
                    Vec<Rational> v(m, Rational(0));
                    for (std::size_t i = 0; i < w; ++i)
                        v[off + i] = part.basis()(j, i);
                    vs.push_back(v);
                }
            }
            return RSubspace::span(vs, m);
        }));
    }
    validate(c);
    return c;
}

namespace {

// Graded complex Gr_k of an increasing filtration per degree, or Gr^p of a decreasing one.
struct Graded {
    std::vector<RQuotient> q; // indexed by n - n_min + 1, padded by one on each side
    std::vector<RMatrix> d;   // d[j] : q[j] -> q[j+1]
};

Graded graded_complex(const FilteredComplex& c, const std::vector<RFiltration>& G, int k)
{
    Graded g;
    int lo = c.n_min - 1, hi = c.n_max() + 1;
    for (int n = lo; n <= hi; ++n) {
        if (n < c.n_min || n > c.n_max())
            g.q.emplace_back(RSubspace::zero(0), RSubspace::zero(0));
        else
            g.q.push_back(G[static_cast<std::size_t>(n - c.n_min)].graded(k));
    }
    for (int n = lo; n < hi; ++n) {
        std::size_t j = static_cast<std::size_t>(n - lo);
        g.d.push_back(induced_map(c.diff(n), g.q[j], g.q[j + 1]));
    }
    return g;
}

std::string nk(const char* a, int x, const char* b, int y) { return std::string(a) + std::to_string(x) + b + std::to_string(y); }

} // namespace

CheckResult strictness_check(const FilteredComplex& c)
{
    require(c.W.has_value(), ErrorCode::Schema, "strictness needs a weight filtration");
    validate(c);
    CheckResult r;
    const auto& W = *c.W;
    int klo = 0, khi = -1;
    bool any = false;
    for (std::size_t i = 0; i < c.dims.size(); ++i)
        if (c.dims[i] > 0) {
            klo = any ? std::min(klo, W[i].lo()) : W[i].lo();
            khi = any ? std::max(khi, W[i].hi()) : W[i].hi();
            any = true;
        }
    int plo = c.p_min(), phi = c.p_max();
    for (int k = klo; k <= khi; ++k) {
        Graded g = graded_complex(c, W, k);
        for (int n = c.n_min; n <= c.n_max(); ++n) {
            std::size_t j = static_cast<std::size_t>(n - c.n_min + 1);
            RFiltration Fn = c.F[j - 1].induced(g.q[j]);
            std::optional<RFiltration> Fprev;
            if (n > c.n_min)
                Fprev = c.F[j - 2].induced(g.q[j - 1]);
            RSubspace B = image(g.d[j - 1]);
            std::string bad;
            for (int p = plo + 1; p <= phi; ++p) {
                RSubspace Z = intersect(Fn.at(p), kernel(g.d[j]));
                RSubspace Bp = Fprev ? apply(g.d[j - 1], Fprev->at(p)) : RSubspace::zero(g.q[j].dim());
                if (intersect(Z, B) != Bp)
                    bad += (bad.empty() ? "p=" : ",") + std::to_string(p);
            }
            r.add(nk("H^", n, " F Gr^W_", k) + " injective", bad.empty(), bad);
        }
    }
    return r;
}

CheckResult check_filtered_quasi_iso(const std::vector<RMatrix>& f, const FilteredComplex& A, const FilteredComplex& B)
{
    validate(A);
    validate(B);
    CheckResult r;
    bool shapes = A.n_min == B.n_min && A.dims.size() == B.dims.size() && f.size() == A.dims.size();
    for (std::size_t i = 0; shapes && i < f.size(); ++i)
        shapes = f[i].rows() == B.dims[i] && f[i].cols() == A.dims[i];
    r.add("shapes", shapes);
    if (!shapes)
        return r;
    bool chain = true, filt = true;
    for (int n = A.n_min; n <= A.n_max(); ++n) {
        std::size_t i = static_cast<std::size_t>(n - A.n_min);
        if (n < A.n_max())
            chain = chain && B.d[i] * f[i] == f[i + 1] * A.d[i];
        filt = filt && A.F[i].preserved_by(f[i], B.F[i]);
    }
    r.add("chain map", chain);
    r.add("preserves F", filt);
    if (!chain || !filt)
        return r;
    int lo = std::min(A.p_min(), B.p_min()), hi = std::max(A.p_max(), B.p_max());
    for (int p = lo; p <= hi; ++p) {
        Graded ga = graded_complex(A, A.F, p), gb = graded_complex(B, B.F, p);
        bool iso = true;
        for (std::size_t j = 1; j + 1 < ga.q.size(); ++j) {
            RQuotient Ha(kernel(ga.d[j]), image(ga.d[j - 1])), Hb(kernel(gb.d[j]), image(gb.d[j - 1]));
            RMatrix fb = induced_map(f[j - 1], ga.q[j], gb.q[j]);
            RMatrix h = induced_map(fb, Ha, Hb);
            iso = iso && Ha.dim() == Hb.dim() && rank(h) == Ha.dim();
        }
        r.add("iso on H Gr_F^" + std::to_string(p), iso);
    }
    return r;
}

} // namespace mhl
