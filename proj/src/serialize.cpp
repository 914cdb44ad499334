#include "mhl/serialize.hpp"

namespace mhl::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) { throw Error(ErrorCode::Schema, path + ": " + what); }

long integer_from(const json& j, const std::string& path)
{
    if (!j.is_number_integer())
        schema(path, "expected an integer");
    return j.get<long>();
}

std::size_t size_from(const json& j, const std::string& path)
{
    long v = integer_from(j, path);
    if (v < 0)
        schema(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

template <class T> json matrix_json(const Matrix<T>& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(to_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

template <class T, class F>
Matrix<T> matrix_from(const json& j, const std::string& path, std::optional<std::size_t> rows, std::optional<std::size_t> cols, F entry)
{
    if (!j.is_array())
        schema(path, "expected a matrix (array of rows)");
    std::size_t r = j.size();
    if (rows && *rows != r)
        throw Error(ErrorCode::DimensionMismatch, path + ": expected " + std::to_string(*rows) + " rows, got " + std::to_string(r));
    std::size_t c = 0;
    if (r > 0) {
        if (!j[0].is_array())
            schema(path + "[0]", "expected an array");
        c = j[0].size();
    } else if (cols) {
        c = *cols;
    }
    if (cols && *cols != c)
        throw Error(ErrorCode::DimensionMismatch, path + ": expected " + std::to_string(*cols) + " columns, got " + std::to_string(c));
    Matrix<T> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        std::string pi = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array())
            schema(pi, "expected an array");
        if (j[i].size() != c)
            throw Error(ErrorCode::DimensionMismatch, pi + ": ragged row");
        for (std::size_t k = 0; k < c; ++k)
            m(i, k) = entry(j[i][k], pi + "[" + std::to_string(k) + "]");
    }
    return m;
}

template <class T> json filtration_json(const Filtration<T>& f)
{
    json steps = json::array();
    for (const auto& [k, s] : f.steps())
        steps.push_back({{"index", k}, {"basis", matrix_json(s.basis())}});
    return {{"dim", f.ambient()}, {"direction", f.increasing() ? "increasing" : "decreasing"}, {"steps", steps}};
}

template <class T, class M>
Filtration<T> filtration_from(const json& j, const std::string& path, M matrix)
{
    std::size_t n = size_from(field(j, "dim", path), path + ".dim");
    const json& dir = field(j, "direction", path);
    if (!dir.is_string() || (dir != "increasing" && dir != "decreasing"))
        schema(path + ".direction", "expected \"increasing\" or \"decreasing\"");
    const json& steps = field(j, "steps", path);
    if (!steps.is_array())
        schema(path + ".steps", "expected an array");
    std::vector<typename Filtration<T>::Step> out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::string ps = path + ".steps[" + std::to_string(i) + "]";
        int k = static_cast<int>(integer_from(field(steps[i], "index", ps), ps + ".index"));
        Matrix<T> b = matrix(field(steps[i], "basis", ps), ps + ".basis", std::optional<std::size_t>{}, std::optional<std::size_t>{n});
        out.emplace_back(k, Subspace<T>::span_rows(b));
    }
    if (out.empty())
        out.emplace_back(0, Subspace<T>::full(n));
    return Filtration<T>::from_steps(n, dir == "increasing" ? Direction::Increasing : Direction::Decreasing, out);
}

json matrices_json(const std::vector<RMatrix>& ms)
{
    json a = json::array();
    for (const auto& m : ms)
        a.push_back(to_json(m));
    return a;
}

const json& array_field(const json& j, const std::string& key, const std::string& path)
{
    const json& a = field(j, key, path);
    if (!a.is_array())
        schema(path + "." + key, "expected an array");
    return a;
}

const char* kEdgeNames[4] = {"11-12", "21-22", "11-21", "12-22"};

} // namespace

const json& field(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object())
        schema(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        schema(path, "missing \"" + key + "\"");
    return *it;
}

const json* optional_field(const json& j, const std::string& key)
{
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}


std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, "byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json to_json(const Rational& x) { return to_string(x); }

json to_json(const Gaussian& z)
{
    if (is_real(z))
        return to_string(z.re);
    return {{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

json to_json(const RMatrix& m) { return matrix_json(m); }
json to_json(const GMatrix& m) { return matrix_json(m); }
json to_json(const RFiltration& f) { return filtration_json(f); }
json to_json(const GFiltration& f) { return filtration_json(f); }

json to_json(const MixedHodgeData& h) { return {{"dim", h.dim}, {"W", to_json(h.W)}, {"F", to_json(h.F)}, {"twist", h.twist}}; }

json to_json(const PerverseQuiver1D& q)
{
    json j = {{"vertices", {{"psi", q.psi}, {"phi", q.phi}}}, {"c", to_json(q.c)}, {"v", to_json(q.v)}};
    if (!q.sectors.empty()) {
        json s = json::array();
        for (const auto& sec : q.sectors)
            s.push_back({{"alpha", to_json(sec.alpha)}, {"psi_basis", to_json(sec.psi.basis())}, {"phi_basis", to_json(sec.phi.basis())}});
        j["sectors"] = s;
    }
    return j;
}

json to_json(const PerverseQuiver2D& q)
{
    json v = json::object(), c = json::object(), w = json::object();
    for (int i = 0; i < 4; ++i)
        v[vertex_name(i)] = q.dim[static_cast<std::size_t>(i)];
    for (int e = 0; e < 4; ++e) {
        c[kEdgeNames[e]] = to_json(q.c[static_cast<std::size_t>(e)]);
        w[kEdgeNames[e]] = to_json(q.v[static_cast<std::size_t>(e)]);
    }
    return {{"vertices", v}, {"c", c}, {"v", w}};
}

json to_json(const VModel& m) { return {{"A", to_json(m.A)}, {"period_window", m.period_window}}; }

json to_json(const FilteredComplex& c)
{
    json F = json::array();
    for (const auto& f : c.F)
        F.push_back(to_json(f));
    json j = {{"degrees", {c.n_min, c.n_max()}}, {"dims", c.dims}, {"d", matrices_json(c.d)}, {"F", F}};
    if (c.W) {
        json W = json::array();
        for (const auto& f : *c.W)
            W.push_back(to_json(f));
        j["W"] = W;
    }
    return j;
}

json to_json(const NilpotentOrbitData& d)
{
    return {{"F", to_json(d.H.F)}, {"Ns", matrices_json(d.Ns)}, {"Q", to_json(d.Q)}, {"weight", d.m}};
}

json to_json(const MixedNilpotentOrbitData& d)
{
    json forms = json::array();
    for (const auto& [k, Q] : d.graded_forms)
        forms.push_back({{"weight", k}, {"Q", to_json(Q)}});
    return {{"hodge", to_json(d.H)}, {"Ns", matrices_json(d.Ns)}, {"graded_forms", forms}};
}

json to_json(const PolarizedCandidate& p) { return {{"hodge", to_json(p.hodge)}, {"Q", to_json(p.Q)}, {"weight", p.m}}; }

Rational rational_from(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        schema(path, "expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        schema(path, e.what());
    }
}

Gaussian gaussian_from(const json& j, const std::string& path)
{
    if (j.is_object())
        return Gaussian(rational_from(field(j, "re", path), path + ".re"), rational_from(field(j, "im", path), path + ".im"));
    return Gaussian(rational_from(j, path));
}

RMatrix rmatrix_from(const json& j, const std::string& path, std::optional<std::size_t> rows, std::optional<std::size_t> cols)
{
    return matrix_from<Rational>(j, path, rows, cols, rational_from);
}

GMatrix gmatrix_from(const json& j, const std::string& path, std::optional<std::size_t> rows, std::optional<std::size_t> cols)
{
    return matrix_from<Gaussian>(j, path, rows, cols, gaussian_from);
}

RFiltration rfiltration_from(const json& j, const std::string& path) { return filtration_from<Rational>(j, path, rmatrix_from); }
GFiltration gfiltration_from(const json& j, const std::string& path) { return filtration_from<Gaussian>(j, path, gmatrix_from); }

MixedHodgeData mhs_from(const json& j, const std::string& path)
{
    MixedHodgeData h;
    h.dim = size_from(field(j, "dim", path), path + ".dim");
    h.W = rfiltration_from(field(j, "W", path), path + ".W");
    h.F = gfiltration_from(field(j, "F", path), path + ".F");
    if (const json* t = optional_field(j, "twist"))
        h.twist = static_cast<int>(integer_from(*t, path + ".twist"));
    if (!h.W.increasing() || h.F.increasing())
        schema(path, "W must be increasing and F decreasing");
    if (h.W.ambient() != h.dim || h.F.ambient() != h.dim)
        throw Error(ErrorCode::DimensionMismatch, path + ": filtrations do not match dim");
    return h;
}

PerverseQuiver1D quiver1d_from(const json& j, const std::string& path)
{
    PerverseQuiver1D q;
    const json& v = field(j, "vertices", path);
    q.psi = size_from(field(v, "psi", path + ".vertices"), path + ".vertices.psi");
    q.phi = size_from(field(v, "phi", path + ".vertices"), path + ".vertices.phi");
    q.c = rmatrix_from(field(j, "c", path), path + ".c", q.phi, q.psi);
    q.v = rmatrix_from(field(j, "v", path), path + ".v", q.psi, q.phi);
    if (const json* s = optional_field(j, "sectors")) {
        if (!s->is_array())
            schema(path + ".sectors", "expected an array");
        for (std::size_t i = 0; i < s->size(); ++i) {
            std::string ps = path + ".sectors[" + std::to_string(i) + "]";
            const json& e = (*s)[i];
            Sector sec;
            sec.alpha = rational_from(field(e, "alpha", ps), ps + ".alpha");
            sec.psi = RSubspace::span_rows(rmatrix_from(field(e, "psi_basis", ps), ps + ".psi_basis", {}, q.psi));
            sec.phi = RSubspace::span_rows(rmatrix_from(field(e, "phi_basis", ps), ps + ".phi_basis", {}, q.phi));
            q.sectors.push_back(sec);
        }
    }
    return q;
}

PerverseQuiver2D quiver2d_from(const json& j, const std::string& path)
{
    PerverseQuiver2D q;
    const json& v = field(j, "vertices", path);
    for (int i = 0; i < 4; ++i)
        q.dim[static_cast<std::size_t>(i)] = size_from(field(v, vertex_name(i), path + ".vertices"), path + ".vertices." + vertex_name(i));
    const json& c = field(j, "c", path);
    const json& w = field(j, "v", path);
    for (int e = 0; e < 4; ++e) {
        std::size_t s = q.dim[static_cast<std::size_t>(edge_source(e))], t = q.dim[static_cast<std::size_t>(edge_target(e))];
        q.c[static_cast<std::size_t>(e)] = rmatrix_from(field(c, kEdgeNames[e], path + ".c"), path + ".c." + kEdgeNames[e], t, s);
        q.v[static_cast<std::size_t>(e)] = rmatrix_from(field(w, kEdgeNames[e], path + ".v"), path + ".v." + kEdgeNames[e], s, t);
    }
    return q;
}

VModel vmodel_from(const json& j, const std::string& path)
{
    VModel m;
    m.A = rmatrix_from(field(j, "A", path), path + ".A");
    if (m.A.rows() != m.A.cols())
        throw Error(ErrorCode::DimensionMismatch, path + ".A: not square");
    if (const json* w = optional_field(j, "period_window"))
        m.period_window = static_cast<int>(integer_from(*w, path + ".period_window"));
    if (m.period_window < 0)
        schema(path + ".period_window", "must be nonnegative");
    return m;
}

FilteredComplex complex_from(const json& j, const std::string& path)
{
    FilteredComplex c;
    const json& deg = array_field(j, "degrees", path);
    if (deg.size() != 2)
        schema(path + ".degrees", "expected [n_min, n_max]");
    c.n_min = static_cast<int>(integer_from(deg[0], path + ".degrees[0]"));
    long n_max = integer_from(deg[1], path + ".degrees[1]");
    if (n_max < c.n_min)
        schema(path + ".degrees", "n_max < n_min");
    std::size_t K = static_cast<std::size_t>(n_max - c.n_min + 1);
    const json& dims = array_field(j, "dims", path);
    if (dims.size() != K)
        throw Error(ErrorCode::DimensionMismatch, path + ".dims: one entry per degree");
    for (std::size_t i = 0; i < K; ++i)
        c.dims.push_back(size_from(dims[i], path + ".dims[" + std::to_string(i) + "]"));
    const json& d = array_field(j, "d", path);
    if (d.size() + 1 != K)
        throw Error(ErrorCode::DimensionMismatch, path + ".d: one map per consecutive pair of degrees");
    for (std::size_t i = 0; i + 1 < K; ++i)
        c.d.push_back(rmatrix_from(d[i], path + ".d[" + std::to_string(i) + "]", c.dims[i + 1], c.dims[i]));
    const json& F = array_field(j, "F", path);
    if (F.size() != K)
        throw Error(ErrorCode::DimensionMismatch, path + ".F: one filtration per degree");
    for (std::size_t i = 0; i < K; ++i) {
        std::string pi = path + ".F[" + std::to_string(i) + "]";
        c.F.push_back(rfiltration_from(F[i], pi));
        if (c.F.back().increasing())
            schema(pi, "F must be decreasing");
        if (c.F.back().ambient() != c.dims[i])
            throw Error(ErrorCode::DimensionMismatch, pi + ": dim");
    }
    if (const json* W = optional_field(j, "W")) {
        if (!W->is_array() || W->size() != K)
            throw Error(ErrorCode::DimensionMismatch, path + ".W: one filtration per degree");
        c.W.emplace();
        for (std::size_t i = 0; i < K; ++i) {
            std::string pi = path + ".W[" + std::to_string(i) + "]";
            c.W->push_back(rfiltration_from((*W)[i], pi));
            if (!c.W->back().increasing())
                schema(pi, "W must be increasing");
            if (c.W->back().ambient() != c.dims[i])
                throw Error(ErrorCode::DimensionMismatch, pi + ": dim");
        }
    }
    return c;
}

namespace {

std::vector<RMatrix> square_list(const json& j, const std::string& path, std::size_t n)
{
    std::vector<RMatrix> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rmatrix_from(j[i], path + "[" + std::to_string(i) + "]", n, n));
    return out;
}

} // namespace

NilpotentOrbitData orbit_from(const json& j, const std::string& path)
{
    NilpotentOrbitData d;
    GFiltration F = gfiltration_from(field(j, "F", path), path + ".F");
    if (F.increasing())
        schema(path + ".F", "F must be decreasing");
    std::size_t n = F.ambient();
    d.m = static_cast<int>(integer_from(field(j, "weight", path), path + ".weight"));
    d.H = pure_hodge_data(n, d.m, F);
    d.Ns = square_list(array_field(j, "Ns", path), path + ".Ns", n);
    d.Q = rmatrix_from(field(j, "Q", path), path + ".Q", n, n);
    return d;
}

MixedNilpotentOrbitData mixed_orbit_from(const json& j, const std::string& path)
{
    MixedNilpotentOrbitData d;
    d.H = mhs_from(field(j, "hodge", path), path + ".hodge");
    d.Ns = square_list(array_field(j, "Ns", path), path + ".Ns", d.H.dim);
    if (const json* g = optional_field(j, "graded_forms")) {
        if (!g->is_array())
            schema(path + ".graded_forms", "expected an array");
        for (std::size_t i = 0; i < g->size(); ++i) {
            std::string pi = path + ".graded_forms[" + std::to_string(i) + "]";
            int k = static_cast<int>(integer_from(field((*g)[i], "weight", pi), pi + ".weight"));
            std::size_t gk = d.H.W.graded_dim(k);
            d.graded_forms[k] = rmatrix_from(field((*g)[i], "Q", pi), pi + ".Q", gk, gk);
        }
    }
    return d;
}

PolarizedCandidate polarized_from(const json& j, const std::string& path)
{
    PolarizedCandidate p;
    p.hodge = mhs_from(field(j, "hodge", path), path + ".hodge");
    p.m = static_cast<int>(integer_from(field(j, "weight", path), path + ".weight"));
    p.Q = rmatrix_from(field(j, "Q", path), path + ".Q", p.hodge.dim, p.hodge.dim);
    return p;
}

} // namespace mhl::io
