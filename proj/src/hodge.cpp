#include "mhl/hodge.hpp"

#include <sstream>

namespace mhl {

namespace {

std::string pq(int p, int q)
{
    std::ostringstream os;
    os << "H^{" << p << "," << q << "}";
    return os.str();
}

} // namespace

MixedHodgeData pure_hodge_data(std::size_t dim, int m, const GFiltration& F, int twist)
{
    require(F.ambient() == dim, ErrorCode::DimensionMismatch, "F has wrong ambient dimension");
    return {dim, RFiltration::trivial(dim, Direction::Increasing, m), F, twist};
}

Bigrading hodge_decomposition(const GFiltration& F, int m)
{
    Bigrading out;
    std::size_t n = F.ambient();
    if (F.increasing()) {
        out.failure = "Hodge filtration must be decreasing";
        return out;
    }
    if (n == 0) {
        out.ok = true;
        return out;
    }
    GFiltration Fc = conj(F);
    int lo = std::min(F.lo(), m - F.hi() + 1) - 1;
    int hi = std::max(F.hi(), m - F.lo() + 1) + 1;
    for (int p = lo; p <= hi; ++p) {
        GSubspace a = F.at(p), b = Fc.at(m - p + 1);
        if (a.dim() + b.dim() != n || !intersect(a, b).is_zero()) {
            std::ostringstream os;
            os << "F^" << p << " and conj F^" << (m - p + 1) << " are not complementary";
            out.failure = os.str();
            return out;
        }
    }
    for (int p = F.lo(); p <= F.hi(); ++p) {
        GSubspace h = intersect(F.at(p), Fc.at(m - p));
        if (!h.is_zero())
            out.pieces.emplace(std::make_pair(p, m - p), h);
    }
    out.ok = true;
    return out;
}

bool check_pure(const GFiltration& F, int m) { return hodge_decomposition(F, m).ok; }

bool check_pure(const MixedHodgeData& H, int m)
{
    if (H.dim > 0 && (H.W.lo() != m || H.W.hi() != m))
        return false;
    return check_pure(H.F, m);
}

MixedHodgeData graded_data(const MixedHodgeData& H, int k)
{
    Quotient<Rational> q = H.W.graded(k);
    Quotient<Gaussian> qc = complexify(q);
    return {q.dim(), RFiltration::trivial(q.dim(), Direction::Increasing, k), H.F.induced(qc), H.twist};
}

CheckResult check_mhs_detail(const MixedHodgeData& H)
{
    CheckResult r;
    if (H.W.ambient() != H.dim || H.F.ambient() != H.dim) {
        r.add("dimensions", false, "W or F has the wrong ambient dimension");
        return r;
    }
    for (int k = H.W.lo(); k <= H.W.hi(); ++k) {
        if (H.W.graded_dim(k) == 0)
            continue;
        MixedHodgeData g = graded_data(H, k);
        Bigrading b = hodge_decomposition(g.F, k);
        r.add("pure Gr^W_" + std::to_string(k), b.ok, b.failure);
    }
    return r;
}

bool check_mhs(const MixedHodgeData& H) { return check_mhs_detail(H).ok; }

CheckResult check_polarization_detail(const GFiltration& F, const RMatrix& Q, int m)
{
    CheckResult r;
    std::size_t n = F.ambient();
    require(Q.rows() == n && Q.cols() == n, ErrorCode::DimensionMismatch, "form has wrong size");
    RMatrix sym = (m % 2 == 0) ? Q : -Q;
    if (Q.transpose() != sym)
        throw Error(ErrorCode::ParityViolation, "Q(u,v) != (-1)^m Q(v,u)");
    Bigrading b = hodge_decomposition(F, m);
    r.add("pure", b.ok, b.failure);
    if (!b.ok)
        return r;
    GMatrix Qc = complexify(Q);
    bool orth = true;
    std::string orth_w;
    for (const auto& [k1, s1] : b.pieces)
        for (const auto& [k2, s2] : b.pieces) {
            if (k1.first == k2.second && k1.second == k2.first)
                continue;
            if (!(s1.basis() * Qc * s2.basis_cols()).is_zero() && orth) {
                orth = false;
                orth_w = "Q(" + pq(k1.first, k1.second) + ", " + pq(k2.first, k2.second) + ") != 0";
            }
        }
    r.add("orthogonality", orth, orth_w);
    bool pos = true;
    std::string pos_w;
    for (const auto& [k, s] : b.pieces) {
        GMatrix G = i_pow(k.first - k.second) * (s.basis() * Qc * s.basis().conj().transpose());
        bool ok;
        try {
            ok = hermitian_is_positive_definite(G);
        } catch (const Error&) {
            ok = false;
        }
        if (!ok && pos) {
            pos = false;
            pos_w = "i^{p-q} Q(u, conj u) not positive definite on " + pq(k.first, k.second);
        }
    }
    r.add("positivity", pos, pos_w);
    return r;
}

bool check_polarization(const GFiltration& F, const RMatrix& Q, int m) { return check_polarization_detail(F, Q, m).ok; }

bool check_polarization(const PolarizedCandidate& c) { return check_polarization(c.hodge.F, c.Q, c.m); }

MixedHodgeData tate_twist(const MixedHodgeData& H, int j)
{
    return {H.dim, H.W.shifted(2 * j), H.F.shifted(j), H.twist + j};
}

std::vector<std::vector<Rational>> orbit_sample_weights(std::size_t n)
{
    const std::vector<Rational> base{Rational(1), Rational(2), frac(1, 2), Rational(3), frac(1, 3)};
    std::vector<std::vector<Rational>> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Rational>> next;
        for (const auto& w : out)
            for (const auto& t : base) {
                auto v = w;
                v.push_back(t);
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

namespace {

RMatrix weighted_sum(const std::vector<RMatrix>& Ns, const std::vector<Rational>& t, std::size_t n)
{
    RMatrix s(n, n);
    for (std::size_t i = 0; i < Ns.size(); ++i)
        s += t[i] * Ns[i];
    return s;
}

bool griffiths(const RMatrix& N, const GFiltration& F)
{
    GMatrix Nc = complexify(N);
    for (int p = F.lo(); p <= F.hi(); ++p)
        if (!maps_into(Nc, F.at(p), F.at(p - 1)))
            return false;
    return true;
}

} // namespace

CheckResult is_nilpotent_orbit(const NilpotentOrbitData& d)
{
    CheckResult r;
    std::size_t n = d.H.F.ambient();
    const GFiltration& F = d.H.F;
    bool shapes = d.Q.rows() == n && d.Q.cols() == n;
    for (const auto& N : d.Ns)
        shapes = shapes && N.rows() == n && N.cols() == n;
    r.add("dimensions", shapes);
    if (!shapes)
        return r;

    bool nil = true, comm = true, iso = true, grif = true;
    for (std::size_t i = 0; i < d.Ns.size(); ++i) {
        nil = nil && is_nilpotent(d.Ns[i]);
        iso = iso && (d.Ns[i].transpose() * d.Q + d.Q * d.Ns[i]).is_zero();
        grif = grif && griffiths(d.Ns[i], F);
        for (std::size_t j = i + 1; j < d.Ns.size(); ++j)
            comm = comm && d.Ns[i] * d.Ns[j] == d.Ns[j] * d.Ns[i];
    }
    r.add("nilpotent", nil);
    r.add("commuting", comm);
    r.add("isometry", iso, iso ? "" : "Q N + N^T Q != 0");
    r.add("griffiths", grif, grif ? "" : "N F^p not inside F^{p-1}");
    RMatrix sym = (d.m % 2 == 0) ? d.Q : -d.Q;
    bool parity = d.Q.transpose() == sym;
    r.add("parity", parity);
    if (!nil || !comm || !parity)
        return r;

    std::vector<Rational> ones(d.Ns.size(), Rational(1));
    RMatrix N = weighted_sum(d.Ns, ones, n);
    RFiltration M = monodromy_filtration(N, d.m);
    bool indep = true;
    std::string indep_w;
    for (const auto& t : orbit_sample_weights(d.Ns.size())) {
        if (monodromy_filtration(weighted_sum(d.Ns, t, n), d.m) != M) {
            indep = false;
            indep_w = "M(sum t_i N_i) depends on t at t = (";
            for (std::size_t i = 0; i < t.size(); ++i)
                indep_w += (i ? ", " : "") + to_string(t[i]);
            indep_w += ")";
            break;
        }
    }
    r.add("weight-independence", indep, indep_w);

    MixedHodgeData lim{n, M, F, d.H.twist};
    CheckResult mhs = check_mhs_detail(lim);
    const Clause* bad = mhs.first_failure();
    r.add("limit-mhs", mhs.ok, bad ? bad->name + ": " + bad->witness : "");
    if (!mhs.ok)
        return r;

    bool pol = true;
    std::string pol_w;
    for (const auto& part : primitive_decomposition(N, d.m)) {
        if (part.P.is_zero())
            continue;
        RMatrix B = part.gr.lift() * part.P.basis_cols();
        RMatrix Qk = B.transpose() * d.Q * power(N, static_cast<unsigned>(part.k)) * B;
        GFiltration Fg = F.induced(Quotient<Gaussian>(complexify(part.gr.sub()), complexify(part.gr.quot())));
        GFiltration Fp = Fg.restricted(complexify(part.P));
        bool ok;
        try {
            ok = check_polarization(Fp, Qk, d.m + part.k);
        } catch (const Error&) {
            ok = false;
        }
        if (!ok && pol) {
            pol = false;
            pol_w = "Q(., N^" + std::to_string(part.k) + " .) fails on PGr_" + std::to_string(d.m + part.k);
        }
    }
    r.add("primitive-polarization", pol, pol_w);
    return r;
}

CheckResult is_mixed_nilpotent_orbit(const MixedNilpotentOrbitData& d)
{
    CheckResult r;
    const MixedHodgeData& H = d.H;
    std::size_t n = H.dim;
    bool shapes = H.W.ambient() == n && H.F.ambient() == n;
    for (const auto& N : d.Ns)
        shapes = shapes && N.rows() == n && N.cols() == n;
    r.add("dimensions", shapes);
    if (!shapes)
        return r;
    bool nil = true, comm = true, grif = true, wpres = true;
    for (std::size_t i = 0; i < d.Ns.size(); ++i) {
        nil = nil && is_nilpotent(d.Ns[i]);
        grif = grif && griffiths(d.Ns[i], H.F);
        wpres = wpres && H.W.preserved_by(d.Ns[i], H.W);
        for (std::size_t j = i + 1; j < d.Ns.size(); ++j)
            comm = comm && d.Ns[i] * d.Ns[j] == d.Ns[j] * d.Ns[i];
    }
    r.add("nilpotent", nil);
    r.add("commuting", comm);
    r.add("griffiths", grif);
    r.add("preserves-W", wpres);
    if (!nil || !comm || !wpres)
        return r;

    for (int k = H.W.lo(); k <= H.W.hi(); ++k) {
        Quotient<Rational> q = H.W.graded(k);
        if (q.dim() == 0)
            continue;
        std::string name = "graded-orbit Gr^W_" + std::to_string(k);
        auto it = d.graded_forms.find(k);
        if (it == d.graded_forms.end() || it->second.rows() != q.dim() || it->second.cols() != q.dim()) {
            r.add(name, false, "no form of the right size for this weight");
            continue;
        }
        NilpotentOrbitData g;
        g.H = graded_data(H, k);
        g.m = k;
        g.Q = it->second;
        for (const auto& N : d.Ns)
            g.Ns.push_back(induced_map(N, q, q));
        CheckResult gr = is_nilpotent_orbit(g);
        const Clause* bad = gr.first_failure();
        r.add(name, gr.ok, bad ? bad->name + (bad->witness.empty() ? "" : ": " + bad->witness) : "");
    }

    std::size_t s = d.Ns.size();
    bool rel = true;
    std::string rel_w;
    for (std::size_t mask = 1; mask < (std::size_t(1) << s) && rel; ++mask) {
        RMatrix N(n, n);
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (std::size_t(1) << i))
                N += d.Ns[i];
        auto M = relative_monodromy_filtration({H.W, N});
        if (!M) {
            rel = false;
            rel_w = "no relative monodromy filtration for subset mask " + std::to_string(mask);
            break;
        }
        for (std::size_t i = 0; i < s; ++i) {
            if (!(mask & (std::size_t(1) << i)))
                continue;
            for (int k = M->lo(); k <= M->hi() + 2; ++k)
                if (!maps_into(d.Ns[i], M->at(k), M->at(k - 2))) {
                    rel = false;
                    rel_w = "N_" + std::to_string(i + 1) + " M_k not inside M_{k-2} for subset mask " + std::to_string(mask);
                    break;
                }
        }
    }
    r.add("relative-monodromy", rel, rel_w);
    return r;
}

MorphismCheck morphism_check(const RMatrix& f, const MixedHodgeData& A, const MixedHodgeData& B)
{
    require(f.cols() == A.dim && f.rows() == B.dim, ErrorCode::DimensionMismatch, "morphism has wrong shape");
    MorphismCheck out;
    GMatrix fc = complexify(f);
    RSubspace im = image(f);
    GSubspace imc = complexify(im);
    int wlo = std::min(A.W.lo(), B.W.lo()) - 1, whi = std::max(A.W.hi(), B.W.hi()) + 1;
    int flo = std::min(A.F.lo(), B.F.lo()) - 1, fhi = std::max(A.F.hi(), B.F.hi()) + 1;
    bool morph = true, sw = true, sf = true;
    for (int k = wlo; k <= whi; ++k) {
        RSubspace fw = apply(f, A.W.at(k));
        morph = morph && B.W.at(k).contains(fw);
        sw = sw && fw == intersect(im, B.W.at(k));
    }
    for (int p = flo; p <= fhi; ++p) {
        GSubspace ff = apply(fc, A.F.at(p));
        morph = morph && B.F.at(p).contains(ff);
        sf = sf && ff == intersect(imc, B.F.at(p));
    }
    out.is_morphism = morph;
    out.strict_W = morph && sw;
    out.strict_F = morph && sf;
    return out;
}

MixedHodgeData kernel_mhs(const RMatrix& f, const MixedHodgeData& A)
{
    RSubspace K = kernel(f);
    return {K.dim(), A.W.restricted(K), A.F.restricted(complexify(K)), A.twist};
}

MixedHodgeData cokernel_mhs(const RMatrix& f, const MixedHodgeData& B)
{
    Quotient<Rational> q(RSubspace::full(B.dim), image(f));
    return {q.dim(), B.W.induced(q), B.F.induced(complexify(q)), B.twist};
}

MixedHodgeData image_data(const RMatrix& f, const MixedHodgeData& A)
{
    RFiltration W = A.W.on_image(f);
    return {W.ambient(), W, A.F.on_image(complexify(f)), A.twist};
}

} // namespace mhl
