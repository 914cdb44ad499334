#include "mhl/problem.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace mhl {

using io::json;

const char* const kFormatVersion = "mhl/1";

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "not-exists";
    }
}

const std::vector<std::string>& problem_kinds()
{
    static const std::vector<std::string> k = {"mhs-check", "polarization", "monodromy-filtration", "relative-monodromy", "nilpotent-orbit",
                                               "mixed-orbit", "quiver", "tilde-w", "vfilt", "specseq"};
    return k;
}

bool is_input_error(ErrorCode c)
{
    return c == ErrorCode::Parse || c == ErrorCode::Schema || c == ErrorCode::DimensionMismatch || c == ErrorCode::InvalidFiltration ||
           c == ErrorCode::Unsupported;
}

namespace {

bool known_kind(const std::string& k)
{
    for (const auto& x : problem_kinds())
        if (x == k)
            return true;
    return false;
}

std::string dims_of(const RFiltration& f)
{
    std::string s;
    for (int k = f.lo(); k <= f.hi(); ++k)
        if (f.graded_dim(k)) {
            s += (s.empty() ? "" : " ") + std::string("Gr_") + std::to_string(k) + "=" + std::to_string(f.graded_dim(k));
        }
    return s.empty() ? "zero" : s;
}

void add_all(Report& rep, const std::string& prefix, const CheckResult& r)
{
    for (const auto& c : r.clauses)
        rep.clauses.push_back({prefix + c.name, c.ok, c.witness});
    if (r.clauses.empty() && !r.ok)
        rep.clauses.push_back({prefix + "check", false, ""});
}

void add(Report& rep, const std::string& name, bool ok, const std::string& w = "") { rep.clauses.push_back({name, ok, w}); }

void run_mhs(const json& p, Report& rep)
{
    MixedHodgeData H = io::mhs_from(p, "payload");
    add_all(rep, "", check_mhs_detail(H));
    json w = json::object();
    for (int k = H.W.lo(); k <= H.W.hi(); ++k)
        if (H.W.graded_dim(k))
            w[std::to_string(k)] = H.W.graded_dim(k);
    rep.result["weight_dims"] = w;
}

void run_polarization(const json& p, Report& rep)
{
    PolarizedCandidate c = io::polarized_from(p, "payload");
    add(rep, "pure of weight m", check_pure(c.hodge, c.m));
    add_all(rep, "", check_polarization_detail(c.hodge.F, c.Q, c.m));
}

void run_monodromy(const json& p, Report& rep)
{
    RMatrix N = io::rmatrix_from(io::field(p, "N", "payload"), "payload.N");
    require(N.square(), ErrorCode::DimensionMismatch, "payload.N: not square");
    int m = 0;
    if (const json* c = io::optional_field(p, "center"))
        m = c->get<int>();
    RFiltration M = monodromy_filtration(N, m);
    add(rep, "N M_k in M_{k-2} and N^k: Gr_{m+k} = Gr_{m-k}", is_monodromy_filtration(N, m, M), dims_of(M));
    if (const json* given = io::optional_field(p, "M")) {
        RFiltration G = io::rfiltration_from(*given, "payload.M");
        add(rep, "given M is the monodromy filtration", G == M, dims_of(G));
    }
    rep.result["M"] = io::to_json(M);
}

void run_relative(const json& p, Report& rep)
{
    RFiltration W = io::rfiltration_from(io::field(p, "W", "payload"), "payload.W");
    RMatrix N = io::rmatrix_from(io::field(p, "N", "payload"), "payload.N", W.ambient(), W.ambient());
    auto M = relative_monodromy_filtration({W, N});
    if (!M) {
        add(rep, "exists", false, "no filtration induces M(N) on every Gr^W_k");
        rep.verdict = Verdict::NotExists;
        return;
    }
    add(rep, "exists", true);
    add(rep, "N M_k in M_{k-2} and M induces M(N) on Gr^W", is_relative_monodromy(N, W, *M), dims_of(*M));
    rep.result["M"] = io::to_json(*M);
}

void run_orbit(const json& p, Report& rep) { add_all(rep, "", is_nilpotent_orbit(io::orbit_from(p, "payload"))); }

void run_mixed_orbit(const json& p, Report& rep) { add_all(rep, "", is_mixed_nilpotent_orbit(io::mixed_orbit_from(p, "payload"))); }

void run_quiver(const json& p, Report& rep)
{
    const json& v = io::field(p, "vertices", "payload");
    if (v.is_object() && v.contains("psi")) {
        PerverseQuiver1D q = io::quiver1d_from(p, "payload");
        CheckResult r = validate(q);
        add_all(rep, "", r);
        if (r.ok) {
            Cohomology1D h = cohomology_1d(q);
            rep.result["ic_sum"] = is_ic_sum(q);
            rep.result["h_minus1"] = h.h_minus1.dim();
            rep.result["h0"] = h.h0.dim();
        }
    } else {
        PerverseQuiver2D q = io::quiver2d_from(p, "payload");
        CheckResult r = validate(q);
        add_all(rep, "", r);
        if (r.ok)
            rep.result["ic_sum"] = is_ic_sum(q);
    }
}

void run_tilde_w(const json& p, Report& rep)
{
    MixedNilpotentOrbitData d = io::mixed_orbit_from(p, "payload");
    if (d.Ns.size() == 1) {
        auto t = tilde_w_1d(d);
        if (!t) {
            add(rep, "exists", false, "no relative monodromy filtration for N_*W");
            rep.verdict = Verdict::NotExists;
            return;
        }
        add(rep, "exists", true);
        add_all(rep, "", check_tilde_w_purity(*t));
        json dims = json::object();
        for (const auto& [name, vx] : std::vector<std::pair<std::string, const FilteredVertex*>>{{"psi", &t->psi}, {"phi", &t->phi}}) {
            json g = json::object();
            for (int k = vx->aux.lo(); k <= vx->aux.hi(); ++k)
                if (vx->aux.graded_dim(k))
                    g[std::to_string(k)] = vx->aux.graded_dim(k);
            dims[name] = g;
        }
        rep.result["tilde_w_dims"] = dims;
    } else if (d.Ns.size() == 2) {
        add(rep, "N1* N2* W = N2* N1* W", check_push_symmetry(d));
        auto t = tilde_w_2d(d);
        if (!t) {
            add(rep, "exists", false, "a pushed filtration has no relative monodromy filtration");
            rep.verdict = Verdict::NotExists;
            return;
        }
        add(rep, "exists", true);
        add_all(rep, "", check_tilde_w_purity(*t));
    } else {
        throw Error(ErrorCode::Schema, "payload.Ns: tilde-w takes one or two nilpotents");
    }
}

void run_vfilt(const json& p, Report& rep)
{
    VModel m = io::vmodel_from(p, "payload");
    auto js = jump_set(m);
    bool comm = true, tiso = true, nil = true;
    std::string wc, wt;
    json jumps = json::array();
    for (const auto& j : js) {
        VSector s = gr_v(m, j.alpha);
        std::size_t n = s.space.dim();
        RMatrix lhs = can_map(m, j.alpha - 1) * var_map(m, j.alpha - 1) - var_map(m, j.alpha) * can_map(m, j.alpha);
        if (lhs != RMatrix::identity(n) && comm) {
            comm = false;
            wc = "alpha=" + to_string(j.alpha);
        }
        if (j.alpha < 0 && rank(var_map(m, j.alpha - 1)) != n && tiso) {
            tiso = false;
            wt = "alpha=" + to_string(j.alpha);
        }
        nil = nil && is_nilpotent(RMatrix(s.tdt + j.alpha * RMatrix::identity(n)));
        jumps.push_back({{"alpha", to_string(j.alpha)}, {"multiplicity", j.multiplicity}});
    }
    add(rep, "[d/dt, t] = id", comm, wc);
    add(rep, "t iso for alpha < 0", tiso, wt);
    add(rep, "t d/dt + alpha nilpotent", nil);
    PerverseQuiver1D q = to_quiver(m);
    add_all(rep, "quiver ", validate(q));
    bool labels = true;
    for (const auto& sec : q.sectors) {
        PerverseQuiver1D s = restrict_to_sector(q, sec.alpha);
        RMatrix U = Rational(1 / monodromy_label(sec.alpha)) * monodromy(s) - RMatrix::identity(s.psi);
        labels = labels && is_nilpotent(U) && log_unipotent(U) == gr_v(m, sec.alpha).N;
    }
    add(rep, "sector monodromy labels", labels);
    if (const json* F = io::optional_field(p, "F")) {
        std::map<Rational, RFiltration> fm;
        if (!F->is_array())
            throw Error(ErrorCode::Schema, "payload.F: expected an array");
        for (std::size_t i = 0; i < F->size(); ++i) {
            std::string pi = "payload.F[" + std::to_string(i) + "]";
            fm[io::rational_from(io::field((*F)[i], "alpha", pi), pi + ".alpha")] = io::rfiltration_from(io::field((*F)[i], "filtration", pi), pi + ".filtration");
        }
        add_all(rep, "", check_filtered_regular(m, fm));
    }
    rep.result["jumps"] = jumps;
    rep.result["quiver"] = io::to_json(q);
}

json page_dims(const SpectralPage& s)
{
    json a = json::array();
    for (const auto& [k, q] : s.E)
        if (q.dim())
            a.push_back({k.first, k.second, q.dim()});
    return a;
}

void run_specseq(const json& p, Report& rep)
{
    FilteredComplex c = io::complex_from(p, "payload");
    CheckResult v = check_complex(c);
    add_all(rep, "", v);
    if (!v.ok)
        return;
    int L = c.length();
    SpectralPage a = page(c, L), b = page(c, L + 1);
    bool stable = true;
    for (const auto& [k, q] : a.E)
        stable = stable && q.sub() == b.E.at(k).sub() && q.quot() == b.E.at(k).quot();
    add(rep, "stabilization", stable, "r=" + std::to_string(L));
    bool euler = true;
    std::optional<long> chi;
    for (int r = 0; r <= L; ++r) {
        long x = 0;
        for (const auto& [k, q] : page(c, r).E)
            x += ((k.first + k.second) % 2 == 0 ? 1 : -1) * static_cast<long>(q.dim());
        euler = euler && (!chi || *chi == x);
        chi = x;
    }
    add(rep, "euler characteristic", euler);
    bool ab = true;
    for (const auto& h : abutment_filtration(c))
        for (int q = c.p_min(); q <= c.p_max(); ++q)
            ab = ab && h.F.graded_dim(q) == a.dim(q, h.n - q);
    add(rep, "Gr abutment = E_inf", ab);
    SpectralPage e1 = page(decalage(c), 1), e2 = page(c, 2);
    bool dec = true;
    std::size_t t1 = 0, t2 = 0;
    for (const auto& [k, q] : e1.E) {
        auto [pp, qq] = decalage_reindex(k.first, k.second);
        dec = dec && q.dim() == e2.dim(pp, qq);
        t1 += q.dim();
    }
    for (const auto& [k, q] : e2.E)
        t2 += q.dim();
    add(rep, "E_1(Dec F) = E_2(F)", dec && t1 == t2);
    if (c.W)
        add_all(rep, "strict ", strictness_check(c));
    rep.result["E1"] = page_dims(page(c, 1));
    rep.result["E2"] = page_dims(e2);
    rep.result["Einf"] = page_dims(a);
}

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

Problem parse_problem(const std::string& text)
{
    json j = io::parse_text(text);
    if (!j.is_object())
        throw Error(ErrorCode::Schema, "problem: expected an object");
    const json& v = io::field(j, "version", "problem");
    if (!v.is_string() || v.get<std::string>() != kFormatVersion)
        throw Error(ErrorCode::Schema, std::string("problem.version: expected \"") + kFormatVersion + "\"");
    const json& k = io::field(j, "kind", "problem");
    if (!k.is_string() || !known_kind(k.get<std::string>()))
        throw Error(ErrorCode::Schema, "problem.kind: unknown kind");
    for (const auto& [key, val] : j.items())
        if (key != "version" && key != "kind" && key != "payload")
            throw Error(ErrorCode::Schema, "problem: unexpected key \"" + key + "\"");
    return {k.get<std::string>(), io::field(j, "payload", "problem")};
}

json problem_json(const Problem& p) { return {{"version", kFormatVersion}, {"kind", p.kind}, {"payload", p.payload}}; }

std::string serialize_problem(const Problem& p) { return io::dump(problem_json(p)); }

std::string problem_digest(const Problem& p)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(serialize_problem(p))));
    return buf;
}

Report run_problem(const Problem& p, bool timing)
{
    Report rep;
    rep.kind = p.kind;
    rep.digest = problem_digest(p);
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (p.kind == "mhs-check")
            run_mhs(p.payload, rep);
        else if (p.kind == "polarization")
            run_polarization(p.payload, rep);
        else if (p.kind == "monodromy-filtration")
            run_monodromy(p.payload, rep);
        else if (p.kind == "relative-monodromy")
            run_relative(p.payload, rep);
        else if (p.kind == "nilpotent-orbit")
            run_orbit(p.payload, rep);
        else if (p.kind == "mixed-orbit")
            run_mixed_orbit(p.payload, rep);
        else if (p.kind == "quiver")
            run_quiver(p.payload, rep);
        else if (p.kind == "tilde-w")
            run_tilde_w(p.payload, rep);
        else if (p.kind == "vfilt")
            run_vfilt(p.payload, rep);
        else if (p.kind == "specseq")
            run_specseq(p.payload, rep);
        else
            throw Error(ErrorCode::Unsupported, "unknown kind " + p.kind);
    } catch (const Error& e) {
        if (is_input_error(e.code()))
            throw;
        rep.clauses.push_back({error_name(e.code()), false, e.what()});
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Schema, e.what());
    }
    if (rep.verdict != Verdict::NotExists) {
        bool ok = !rep.clauses.empty();
        for (const auto& c : rep.clauses)
            ok = ok && c.ok;
        rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
    }
    if (timing)
        rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Problem generate_problem(const std::string& kind, std::uint64_t seed, std::size_t dim)
{
    require(known_kind(kind), ErrorCode::Unsupported, "generate: unsupported kind " + kind);
    require(dim >= 1, ErrorCode::Schema, "generate: dim must be positive");
    Rng r(seed);
    Problem p{kind, json::object()};
    if (kind == "mhs-check") {
        p.payload = io::to_json(gen_mhs(r, dim));
    } else if (kind == "polarization") {
        p.payload = io::to_json(gen_polarized(r, dim));
    } else if (kind == "monodromy-filtration") {
        p.payload = {{"N", io::to_json(gen_nilpotent(r, 1 + r.index(dim)))}, {"center", r.uniform(-2, 2)}};
    } else if (kind == "relative-monodromy") {
        MixedNilpotentOrbitData d = gen_mixed_orbit(r, dim, 1, 3);
        p.payload = {{"N", io::to_json(d.Ns[0])}, {"W", io::to_json(d.H.W)}};
    } else if (kind == "nilpotent-orbit") {
        p.payload = io::to_json(gen_pure_orbit(r, dim, 1 + r.index(2), static_cast<int>(r.uniform(0, 3))));
    } else if (kind == "mixed-orbit") {
        p.payload = io::to_json(gen_mixed_orbit(r, dim, 1 + r.index(2), 3));
    } else if (kind == "quiver") {
        p.payload = io::to_json(gen_quiver_2d(r, dim));
    } else if (kind == "tilde-w") {
        p.payload = io::to_json(gen_mixed_orbit(r, dim, 1, 3));
    } else if (kind == "vfilt") {
        p.payload = io::to_json(VModel{gen_jordan(r, 1 + r.index(dim), r.coin()), 0});
    } else {
        p.payload = io::to_json(gen_filtered_complex(r, dim, 4, r.coin()));
    }
    return p;
}

std::string report_machine(const Report& r)
{
    json clauses = json::array();
    for (const auto& c : r.clauses)
        clauses.push_back({{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}});
    json j = {{"version", kFormatVersion}, {"kind", r.kind}, {"verdict", verdict_name(r.verdict)}, {"digest", r.digest}, {"clauses", clauses}, {"result", r.result}};
    if (r.timing_ms)
        j["timing_ms"] = *r.timing_ms;
    return io::dump(j);
}

std::string report_text(const Report& r, int verbosity)
{
    std::ostringstream os;
    os << r.kind << ": " << verdict_name(r.verdict) << "\n";
    if (verbosity >= 1) {
        os << "digest " << r.digest << "\n";
        for (const auto& c : r.clauses) {
            os << (c.ok ? "  ok    " : "  FAIL  ") << c.name;
            if (!c.witness.empty() && (!c.ok || verbosity >= 2))
                os << "  [" << c.witness << "]";
            os << "\n";
        }
    }
    if (verbosity >= 2 && !r.result.empty())
        os << "result " << r.result.dump() << "\n";
    if (r.timing_ms) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "time %.3f ms\n", *r.timing_ms);
        os << buf;
    }
    return os.str();
}

} // namespace mhl
