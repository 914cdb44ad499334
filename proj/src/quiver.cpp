#include "mhl/quiver.hpp"

#include <sstream>

namespace mhl {

namespace {

const int kSrc[4] = {0, 2, 0, 1};
const int kTgt[4] = {1, 3, 2, 3};
const char* kNames[4] = {"11", "12", "21", "22"};

bool invertible(const RMatrix& m) { return m.rows() == 0 || sgn(determinant(m)) != 0; }

bool direct_sum_of(const RSubspace& a, const RSubspace& b, std::size_t n)
{
    return a.dim() + b.dim() == n && sum(a, b).dim() == n;
}

void check_shape(const RMatrix& m, std::size_t rows, std::size_t cols, const std::string& what)
{
    require(m.rows() == rows && m.cols() == cols, ErrorCode::DimensionMismatch, what + " has the wrong shape");
}

std::string dims(std::size_t a, std::size_t b)
{
    return std::to_string(a) + "+" + std::to_string(b);
}

// Sectors form a direct sum decomposition of both vertices preserved by c and v.
void check_sectors(const PerverseQuiver1D& q, CheckResult& r)
{
    if (q.sectors.empty())
        return;
    std::vector<Vec<Rational>> ps, fs;
    std::size_t dp = 0, df = 0;
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < q.sectors.size(); ++i) {
        const Sector& s = q.sectors[i];
        if (s.psi.ambient() != q.psi || s.phi.ambient() != q.phi) {
            ok = false;
            w = "sector ambient dimension";
            break;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (q.sectors[j].alpha == s.alpha) {
                ok = false;
                w = "repeated alpha " + to_string(s.alpha);
            }
        if (!maps_into(q.c, s.psi, s.phi) || !maps_into(q.v, s.phi, s.psi)) {
            ok = false;
            w = "alpha " + to_string(s.alpha) + " not preserved";
        }
        for (std::size_t k = 0; k < s.psi.dim(); ++k)
            ps.push_back(s.psi.vector(k));
        for (std::size_t k = 0; k < s.phi.dim(); ++k)
            fs.push_back(s.phi.vector(k));
        dp += s.psi.dim();
        df += s.phi.dim();
    }
    if (ok && (dp != q.psi || RSubspace::span(ps, q.psi).dim() != q.psi || df != q.phi ||
               RSubspace::span(fs, q.phi).dim() != q.phi)) {
        ok = false;
        w = "sectors do not decompose psi and phi";
    }
    r.add("sectors", ok, w);
}

} // namespace

int edge_source(int e) { return kSrc[e]; }
int edge_target(int e) { return kTgt[e]; }
const char* vertex_name(int i) { return kNames[i]; }

CheckResult validate(const PerverseQuiver1D& q)
{
    check_shape(q.c, q.phi, q.psi, "c");
    check_shape(q.v, q.psi, q.phi, "v");
    CheckResult r;
    RMatrix T = monodromy(q);
    bool a = invertible(T);
    bool b = invertible(RMatrix::identity(q.phi) + q.c * q.v);
    r.add("invertibility", a && b, "T = id + vc: " + std::string(a ? "invertible" : "singular"));
    check_sectors(q, r);
    return r;
}

CheckResult validate(const PerverseQuiver2D& q)
{
    for (int e = 0; e < 4; ++e) {
        std::string n = std::string("edge ") + kNames[kSrc[e]] + "-" + kNames[kTgt[e]];
        check_shape(q.c[e], q.dim[kTgt[e]], q.dim[kSrc[e]], "c on " + n);
        check_shape(q.v[e], q.dim[kSrc[e]], q.dim[kTgt[e]], "v on " + n);
    }
    CheckResult r;
    for (int e = 0; e < 4; ++e) {
        bool ok = invertible(RMatrix::identity(q.dim[kSrc[e]]) + q.v[e] * q.c[e]) &&
                  invertible(RMatrix::identity(q.dim[kTgt[e]]) + q.c[e] * q.v[e]);
        r.add(std::string("invertibility ") + kNames[kSrc[e]] + "-" + kNames[kTgt[e]], ok);
    }
    // edges: 0 top, 1 bottom, 2 left, 3 right
    bool cc = q.c[3] * q.c[0] == q.c[1] * q.c[2];
    bool vv = q.v[0] * q.v[3] == q.v[2] * q.v[1];
    bool cv = q.c[2] * q.v[0] == q.v[1] * q.c[3];
    bool vc = q.c[0] * q.v[2] == q.v[3] * q.c[1];
    std::string w;
    if (!cc)
        w = "c c square";
    else if (!vv)
        w = "v v square";
    else if (!cv)
        w = "square 12-11-21";
    else if (!vc)
        w = "square 21-11-12";
    r.add("commutativity", cc && vv && cv && vc, w);
    return r;
}

RMatrix monodromy(const PerverseQuiver1D& q) { return RMatrix::identity(q.psi) + q.v * q.c; }

PerverseQuiver1D from_local_system(const RMatrix& T, LocalSystemVariant variant)
{
    require(T.rows() == T.cols(), ErrorCode::DimensionMismatch, "T must be square");
    require(invertible(T), ErrorCode::NotInvertible, "monodromy must be invertible");
    std::size_t n = T.rows();
    RMatrix c = T - RMatrix::identity(n);
    PerverseQuiver1D q;
    q.psi = n;
    if (variant == LocalSystemVariant::FullDirectImage) {
        q.phi = n;
        q.c = c;
        q.v = RMatrix::identity(n);
        return q;
    }
    RSubspace im = image(c);
    q.phi = im.dim();
    q.v = im.basis_cols();
    q.c = restrict_map(c, RSubspace::full(n), im);
    return q;
}

bool is_ic_sum(const PerverseQuiver1D& q) { return direct_sum_of(image(q.c), kernel(q.v), q.phi); }

bool is_ic_sum(const PerverseQuiver2D& q)
{
    for (int e = 0; e < 4; ++e)
        if (!direct_sum_of(image(q.c[e]), kernel(q.v[e]), q.dim[kTgt[e]]))
            return false;
    return true;
}

std::vector<Summand> decompose_1d(const PerverseQuiver1D& q)
{
    require(is_ic_sum(q), ErrorCode::NotICSum, "phi is not im c + ker v");
    std::vector<Summand> out;
    RSubspace im = image(q.c), ker = kernel(q.v);
    if (q.psi > 0 || im.dim() > 0) {
        Summand s;
        s.type = 1;
        s.q.psi = q.psi;
        s.q.phi = im.dim();
        s.q.c = restrict_map(q.c, RSubspace::full(q.psi), im);
        s.q.v = q.v * im.basis_cols();
        s.psi_incl = RMatrix::identity(q.psi);
        s.phi_incl = im.basis_cols();
        out.push_back(s);
    }
    if (ker.dim() > 0) {
        Summand s;
        s.type = 0;
        s.q.psi = 0;
        s.q.phi = ker.dim();
        s.q.c = RMatrix(ker.dim(), 0);
        s.q.v = RMatrix(0, ker.dim());
        s.psi_incl = RMatrix(q.psi, 0);
        s.phi_incl = ker.basis_cols();
        out.push_back(s);
    }
    return out;
}

Cohomology1D cohomology_1d(const PerverseQuiver1D& q)
{
    return {kernel(q.c), Quotient<Rational>(RSubspace::full(q.phi), image(q.c))};
}

PerverseQuiver1D restrict_to_sector(const PerverseQuiver1D& q, const Rational& alpha)
{
    for (const auto& s : q.sectors) {
        if (s.alpha != alpha)
            continue;
        PerverseQuiver1D r;
        r.psi = s.psi.dim();
        r.phi = s.phi.dim();
        r.c = restrict_map(q.c, s.psi, s.phi);
        r.v = restrict_map(q.v, s.phi, s.psi);
        r.sectors.push_back({alpha, RSubspace::full(r.psi), RSubspace::full(r.phi)});
        return r;
    }
    PerverseQuiver1D r;
    r.c = RMatrix(0, 0);
    r.v = RMatrix(0, 0);
    return r;
}

PerverseQuiver1D direct_sum(const PerverseQuiver1D& a, const PerverseQuiver1D& b)
{
    PerverseQuiver1D r;
    r.psi = a.psi + b.psi;
    r.phi = a.phi + b.phi;
    r.c = mhl::direct_sum(a.c, b.c);
    r.v = mhl::direct_sum(a.v, b.v);
    return r;
}

// Hodge quivers

PerverseQuiver1D underlying(const HodgeQuiver1D& q)
{
    PerverseQuiver1D p;
    p.psi = q.psi.H.dim;
    p.phi = q.phi.H.dim;
    p.c = q.c;
    p.v = q.v;
    return p;
}

PerverseQuiver2D underlying(const HodgeQuiver2D& q)
{
    PerverseQuiver2D p;
    for (int i = 0; i < 4; ++i)
        p.dim[static_cast<std::size_t>(i)] = q.V[static_cast<std::size_t>(i)].H.dim;
    p.c = q.c;
    p.v = q.v;
    return p;
}

namespace {

// Image data of f with the form Q(x, f y) transported to im f.
HodgeVertex image_vertex(const RMatrix& f, const MixedHodgeData& H, const RMatrix& Q)
{
    HodgeVertex out;
    out.H = image_data(f, H);
    RSubspace im = image(f);
    std::size_t d = im.dim();
    RMatrix form(d, d);
    std::vector<Vec<Rational>> pre;
    for (std::size_t i = 0; i < d; ++i)
        pre.push_back(*solve(f, im.vector(i)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational s = 0;
            Vec<Rational> qy = Q * im.vector(j);
            for (std::size_t a = 0; a < qy.size(); ++a)
                s += pre[i][a] * qy[a];
            form(i, j) = s;
        }
    out.Q = form;
    return out;
}

void require_orbit(const NilpotentOrbitData& d, std::size_t nvars)
{
    require(d.Ns.size() == nvars, ErrorCode::DimensionMismatch, "wrong number of nilpotent maps");
    CheckResult r = is_nilpotent_orbit(d);
    const Clause* bad = r.first_failure();
    require(r.ok, ErrorCode::NotOrbit, bad ? "not a nilpotent orbit: " + bad->name : "not a nilpotent orbit");
}

} // namespace

HodgeQuiver1D hodge_quiver_from_orbit_1d(const NilpotentOrbitData& d)
{
    require_orbit(d, 1);
    std::size_t n = d.H.dim;
    const RMatrix& N = d.Ns[0];
    MixedHodgeData psi{n, monodromy_filtration(N, d.m), d.H.F, d.H.twist};
    HodgeQuiver1D q;
    q.psi = {psi, d.Q};
    q.phi = image_vertex(N, psi, d.Q);
    RSubspace im = image(N);
    q.c = restrict_map(N, RSubspace::full(n), im);
    q.v = im.basis_cols();
    return q;
}

HodgeQuiver2D hodge_quiver_from_orbit_2d(const NilpotentOrbitData& d)
{
    require_orbit(d, 2);
    std::size_t n = d.H.dim;
    const RMatrix &N1 = d.Ns[0], &N2 = d.Ns[1];
    MixedHodgeData h{n, monodromy_filtration(N1 + N2, d.m), d.H.F, d.H.twist};
    std::array<RMatrix, 4> maps = {RMatrix::identity(n), N1, N2, N1 * N2};
    std::array<RSubspace, 4> sp;
    HodgeQuiver2D q;
    for (std::size_t i = 0; i < 4; ++i) {
        sp[i] = image(maps[i]);
        q.V[i] = i == 0 ? HodgeVertex{h, d.Q} : image_vertex(maps[i], h, d.Q);
    }
    std::array<const RMatrix*, 4> along = {&N1, &N1, &N2, &N2};
    for (std::size_t e = 0; e < 4; ++e) {
        const RSubspace &s = sp[static_cast<std::size_t>(kSrc[e])], &t = sp[static_cast<std::size_t>(kTgt[e])];
        q.c[e] = restrict_map(*along[e], s, t);
        q.v[e] = restrict_map(RMatrix::identity(n), t, s);
    }
    return q;
}

namespace {

std::string clause_witness(const CheckResult& r)
{
    const Clause* bad = r.first_failure();
    if (!bad)
        return "";
    return bad->name + (bad->witness.empty() ? "" : ": " + bad->witness);
}

// (H, F, W, Ns) comes from a pure nilpotent orbit of weight wt.
void vertex_orbit(CheckResult& r, const std::string& name, const HodgeVertex& v, const std::vector<RMatrix>& Ns, int wt)
{
    const MixedHodgeData& H = v.H;
    if (H.dim == 0) {
        r.add(name + " orbit", true, "zero");
        return;
    }
    RMatrix N(H.dim, H.dim);
    bool nil = true, griffiths = true;
    for (const auto& Ni : Ns) {
        N += Ni;
        nil = nil && is_nilpotent(Ni);
        GMatrix Nc = complexify(Ni);
        for (int p = H.F.lo(); p <= H.F.hi() + 1; ++p)
            griffiths = griffiths && maps_into(Nc, H.F.at(p), H.F.at(p - 1));
    }
    r.add(name + " nilpotent", nil);
    if (!nil)
        return;
    r.add(name + " griffiths", griffiths);
    bool weight = H.W == monodromy_filtration(N, wt);
    r.add(name + " weight", weight, weight ? "" : "W is not M(N)[" + std::to_string(wt) + "]");
    CheckResult lim = check_mhs_detail(H);
    r.add(name + " limit-mhs", lim.ok, clause_witness(lim));
    if (v.Q) {
        if (v.Q->rows() != H.dim || v.Q->cols() != H.dim) {
            r.add(name + " polarized-orbit", false, "form has the wrong size");
            return;
        }
        CheckResult o = is_nilpotent_orbit({pure_hodge_data(H.dim, wt, H.F), wt, Ns, *v.Q});
        r.add(name + " polarized-orbit", o.ok, clause_witness(o));
    }
}

// f: A -> B(twist) preserves W and F.
bool is_morphism(const RMatrix& f, const MixedHodgeData& A, const MixedHodgeData& B, int twist)
{
    MixedHodgeData Bt = tate_twist(B, twist);
    if (f.rows() != B.dim || f.cols() != A.dim)
        return false;
    return A.W.preserved_by(f, Bt.W) && A.F.preserved_by(complexify(f), Bt.F);
}

} // namespace

CheckResult check_pure_hodge_quiver(const HodgeQuiver1D& q, int k)
{
    CheckResult r;
    PerverseQuiver1D p = underlying(q);
    if (q.c.rows() != p.phi || q.c.cols() != p.psi || q.v.rows() != p.psi || q.v.cols() != p.phi) {
        r.add("dimensions", false, "maps do not match vertex dimensions");
        return r;
    }
    r.merge("", validate(p));
    r.add("ic-sum", is_ic_sum(p), "phi = " + dims(image(q.c).dim(), kernel(q.v).dim()) + " of " + std::to_string(p.phi));
    r.add("c morphism", is_morphism(q.c, q.psi.H, q.phi.H, 0));
    r.add("v morphism", is_morphism(q.v, q.phi.H, q.psi.H, -1));
    vertex_orbit(r, "psi", q.psi, {q.v * q.c}, k - 1);
    vertex_orbit(r, "phi", q.phi, {q.c * q.v}, k);
    return r;
}

CheckResult check_pure_hodge_quiver(const HodgeQuiver2D& q, int k)
{
    CheckResult r;
    PerverseQuiver2D p = underlying(q);
    for (int e = 0; e < 4; ++e) {
        std::size_t s = p.dim[static_cast<std::size_t>(kSrc[e])], t = p.dim[static_cast<std::size_t>(kTgt[e])];
        if (q.c[e].rows() != t || q.c[e].cols() != s || q.v[e].rows() != s || q.v[e].cols() != t) {
            r.add("dimensions", false, "maps do not match vertex dimensions");
            return r;
        }
    }
    r.merge("", validate(p));
    r.add("ic-sum", is_ic_sum(p));
    for (int e = 0; e < 4; ++e) {
        std::string n = std::string(kNames[kSrc[e]]) + "-" + kNames[kTgt[e]];
        const MixedHodgeData &s = q.V[static_cast<std::size_t>(kSrc[e])].H, &t = q.V[static_cast<std::size_t>(kTgt[e])].H;
        r.add("c morphism " + n, is_morphism(q.c[e], s, t, 0));
        r.add("v morphism " + n, is_morphism(q.v[e], t, s, -1));
    }
    // N1 goes around a horizontal edge, N2 around a vertical one.
    std::array<RMatrix, 4> N1 = {q.v[0] * q.c[0], q.c[0] * q.v[0], q.v[1] * q.c[1], q.c[1] * q.v[1]};
    std::array<RMatrix, 4> N2 = {q.v[2] * q.c[2], q.v[3] * q.c[3], q.c[2] * q.v[2], q.c[3] * q.v[3]};
    const int shift[4] = {-2, -1, -1, 0};
    for (std::size_t i = 0; i < 4; ++i)
        vertex_orbit(r, kNames[i], q.V[i], {N1[i], N2[i]}, k + shift[i]);
    return r;
}

// tilde W

namespace {

FilteredVertex filtered_vertex(std::size_t n, const RFiltration& aux_src, const GFiltration& F, const RMatrix& N, int twist,
                               int aux_shift, bool& ok)
{
    FilteredVertex v;
    auto M = relative_monodromy_filtration({aux_src, N});
    if (!M) {
        ok = false;
        return v;
    }
    v.H = tate_twist(MixedHodgeData{n, *M, F, 0}, twist);
    v.aux = aux_src.shifted(aux_shift);
    return v;
}

} // namespace

std::optional<FilteredHodgeQuiver1D> tilde_w_1d(const MixedNilpotentOrbitData& d)
{
    require(d.Ns.size() == 1, ErrorCode::DimensionMismatch, "tilde W in one variable needs one N");
    std::size_t n = d.H.dim;
    const RMatrix& N = d.Ns[0];
    auto pushed = push_weight(N, d.H.W);
    if (!pushed)
        return std::nullopt;
    bool ok = true;
    FilteredHodgeQuiver1D q;
    q.psi = filtered_vertex(n, d.H.W, d.H.F, N, 0, -1, ok);
    q.phi = filtered_vertex(n, *pushed, d.H.F, N, -1, -2, ok);
    if (!ok)
        return std::nullopt;
    for (const auto& [k, Q] : d.graded_forms)
        q.psi.forms[k + 1] = Q;
    q.c = N;
    q.v = RMatrix::identity(n);
    return q;
}

std::optional<FilteredHodgeQuiver2D> tilde_w_2d(const MixedNilpotentOrbitData& d)
{
    require(d.Ns.size() == 2, ErrorCode::DimensionMismatch, "tilde W in two variables needs two N");
    std::size_t n = d.H.dim;
    const RMatrix &N1 = d.Ns[0], &N2 = d.Ns[1];
    RMatrix N = N1 + N2;
    auto w1 = push_weight(N1, d.H.W);
    auto w2 = push_weight(N2, d.H.W);
    if (!w1 || !w2)
        return std::nullopt;
    auto w12 = push_weight(N1, *w2);
    if (!w12)
        return std::nullopt;
    bool ok = true;
    FilteredHodgeQuiver2D q;
    q.V[0] = filtered_vertex(n, d.H.W, d.H.F, N, 0, -2, ok);
    q.V[1] = filtered_vertex(n, *w1, d.H.F, N, -1, -3, ok);
    q.V[2] = filtered_vertex(n, *w2, d.H.F, N, -1, -3, ok);
    q.V[3] = filtered_vertex(n, *w12, d.H.F, N, -2, -4, ok);
    if (!ok)
        return std::nullopt;
    for (const auto& [k, Q] : d.graded_forms)
        q.V[0].forms[k + 2] = Q;
    q.c = {N1, N1, N2, N2};
    for (auto& v : q.v)
        v = RMatrix::identity(n);
    return q;
}

bool check_push_symmetry(const MixedNilpotentOrbitData& d)
{
    require(d.Ns.size() == 2, ErrorCode::DimensionMismatch, "symmetry needs two N");
    const RMatrix &N1 = d.Ns[0], &N2 = d.Ns[1];
    auto w1 = push_weight(N1, d.H.W), w2 = push_weight(N2, d.H.W);
    if (!w1 || !w2)
        return false;
    auto a = push_weight(N1, *w2), b = push_weight(N2, *w1);
    return a && b && *a == *b;
}

namespace {

HodgeVertex graded_vertex(const FilteredVertex& v, int k)
{
    Quotient<Rational> q = v.aux.graded(k);
    HodgeVertex out;
    out.H = {q.dim(), v.H.W.induced(q), v.H.F.induced(complexify(q)), v.H.twist};
    auto it = v.forms.find(k);
    if (it != v.forms.end())
        out.Q = it->second;
    return out;
}

bool preserves(const RMatrix& f, const FilteredVertex& s, const FilteredVertex& t)
{
    return s.aux.preserved_by(f, t.aux);
}

} // namespace

HodgeQuiver1D graded_quiver(const FilteredHodgeQuiver1D& q, int k)
{
    HodgeQuiver1D g;
    g.psi = graded_vertex(q.psi, k);
    g.phi = graded_vertex(q.phi, k);
    Quotient<Rational> a = q.psi.aux.graded(k), b = q.phi.aux.graded(k);
    g.c = induced_map(q.c, a, b);
    g.v = induced_map(q.v, b, a);
    return g;
}

HodgeQuiver2D graded_quiver(const FilteredHodgeQuiver2D& q, int k)
{
    HodgeQuiver2D g;
    std::array<Quotient<Rational>, 4> gr;
    for (std::size_t i = 0; i < 4; ++i) {
        g.V[i] = graded_vertex(q.V[i], k);
        gr[i] = q.V[i].aux.graded(k);
    }
    for (std::size_t e = 0; e < 4; ++e) {
        const auto &s = gr[static_cast<std::size_t>(kSrc[e])], &t = gr[static_cast<std::size_t>(kTgt[e])];
        g.c[e] = induced_map(q.c[e], s, t);
        g.v[e] = induced_map(q.v[e], t, s);
    }
    return g;
}

namespace {

int range_lo(const std::vector<const RFiltration*>& fs)
{
    int lo = 0;
    bool first = true;
    for (auto f : fs)
        if (f->ambient() > 0 && (first || f->lo() < lo)) {
            lo = f->lo();
            first = false;
        }
    return lo;
}

int range_hi(const std::vector<const RFiltration*>& fs)
{
    int hi = -1;
    bool first = true;
    for (auto f : fs)
        if (f->ambient() > 0 && (first || f->hi() > hi)) {
            hi = f->hi();
            first = false;
        }
    return hi;
}

} // namespace

CheckResult check_tilde_w_purity(const FilteredHodgeQuiver1D& q)
{
    CheckResult r;
    std::size_t n = q.psi.H.dim;
    bool pres = preserves(q.c, q.psi, q.phi) && preserves(q.v, q.phi, q.psi);
    r.add("maps preserve tilde W", pres);
    if (!pres)
        return r;
    RMatrix N = q.v * q.c;
    const RFiltration& M = q.psi.H.W;
    int lo = range_lo({&q.psi.aux, &q.phi.aux}), hi = range_hi({&q.psi.aux, &q.phi.aux});
    std::size_t total = 0;
    for (int k = lo; k <= hi; ++k) {
        HodgeQuiver1D g = graded_quiver(q, k);
        if (g.psi.H.dim == 0 && g.phi.H.dim == 0)
            continue;
        total += g.psi.H.dim;
        CheckResult gk = check_pure_hodge_quiver(g, k);
        r.add("pure Gr_" + std::to_string(k), gk.ok, clause_witness(gk));
        // expected summands: Gr^W_{k-1} -> N Gr^W_{k-1} and 0 -> Gr^M_{k-2}(W_{k-2}/N W_{k-2})
        RSubspace Wk1 = q.psi.aux.at(k), Wk2 = q.psi.aux.at(k - 1), Wk3 = q.psi.aux.at(k - 2);
        Quotient<Rational> grw(Wk1, Wk2);
        std::size_t a_phi = rank(induced_map(N, grw, grw));
        Quotient<Rational> wq(Wk2, apply(N, Wk2));
        RFiltration Mq = M.induced(wq);
        std::size_t b_phi = Mq.graded_dim(k - 2);
        (void)Wk3;
        std::size_t imc = image(g.c).dim(), kerv = kernel(g.v).dim();
        std::ostringstream w;
        w << "psi " << g.psi.H.dim << " -> im c " << imc << ", ker v " << kerv << "; expected " << grw.dim() << " -> " << a_phi
          << ", " << b_phi;
        bool shape = g.psi.H.dim == grw.dim() && imc == a_phi && kerv == b_phi && imc + kerv == g.phi.H.dim;
        r.add("summands Gr_" + std::to_string(k), shape, w.str());
    }
    r.add("psi total", total == n, std::to_string(total) + " of " + std::to_string(n));
    return r;
}

CheckResult check_tilde_w_purity(const FilteredHodgeQuiver2D& q)
{
    CheckResult r;
    bool pres = true;
    for (std::size_t e = 0; e < 4; ++e) {
        const auto &s = q.V[static_cast<std::size_t>(kSrc[e])], &t = q.V[static_cast<std::size_t>(kTgt[e])];
        pres = pres && preserves(q.c[e], s, t) && preserves(q.v[e], t, s);
    }
    r.add("maps preserve tilde W", pres);
    if (!pres)
        return r;
    std::vector<const RFiltration*> fs;
    for (const auto& v : q.V)
        fs.push_back(&v.aux);
    for (int k = range_lo(fs); k <= range_hi(fs); ++k) {
        HodgeQuiver2D g = graded_quiver(q, k);
        bool empty = true;
        for (const auto& v : g.V)
            empty = empty && v.H.dim == 0;
        if (empty)
            continue;
        CheckResult gk = check_pure_hodge_quiver(g, k);
        r.add("pure Gr_" + std::to_string(k), gk.ok, clause_witness(gk));
    }
    return r;
}

} // namespace mhl
