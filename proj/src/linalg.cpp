#include "mhl/linalg.hpp"

#include <algorithm>
#include <functional>

namespace mhl {

template <class T> std::vector<std::size_t> rref_inplace(Matrix<T>& m)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class T> std::size_t rank(const Matrix<T>& m)
{
    Matrix<T> a = m;
    return rref_inplace(a).size();
}

template <class T> T determinant(const Matrix<T>& m)
{
    require(m.square(), ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    Matrix<T> a = m;
    std::size_t n = a.rows();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c)))
            ++p;
        if (p == n)
            return T(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(a(i, c)))
                continue;
            T f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

template <class T> std::optional<Matrix<T>> inverse(const Matrix<T>& m)
{
    require(m.square(), ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix<T> a = hstack(m, Matrix<T>::identity(n));
    auto piv = rref_inplace(a);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1))
        return std::nullopt;
    std::vector<std::size_t> right(n);
    for (std::size_t j = 0; j < n; ++j)
        right[j] = n + j;
    return select_cols(a, right);
}

template <class T> std::optional<Vec<T>> solve(const Matrix<T>& a, const Vec<T>& b)
{
    require(a.rows() == b.size(), ErrorCode::DimensionMismatch, "solve shape");
    Matrix<T> m = hstack(a, Matrix<T>::from_columns({b}, b.size()));
    auto piv = rref_inplace(m);
    Vec<T> x(a.cols(), T(0));
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == a.cols())
            return std::nullopt;
        x[piv[i]] = m(i, a.cols());
    }
    return x;
}

template <class T> Subspace<T> Subspace<T>::span_rows(const Matrix<T>& m)
{
    Matrix<T> a = m;
    auto piv = rref_inplace(a);
    Subspace s(m.cols());
    std::vector<std::size_t> top(piv.size());
    for (std::size_t i = 0; i < piv.size(); ++i)
        top[i] = i;
    s.basis_ = select_rows(a, top);
    s.piv_ = piv;
    return s;
}

template <class T> Subspace<T> Subspace<T>::span(const std::vector<Vec<T>>& vs, std::size_t n)
{
    Matrix<T> m(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        require(vs[i].size() == n, ErrorCode::DimensionMismatch, "span: vector length");
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = vs[i][j];
    }
    return span_rows(m);
}

template <class T> Subspace<T> Subspace<T>::coordinate(std::size_t n, const std::vector<std::size_t>& idx)
{
    Matrix<T> m(idx.size(), n);
    for (std::size_t i = 0; i < idx.size(); ++i)
        m(i, idx[i]) = T(1);
    return span_rows(m);
}

template <class T> Vec<T> Subspace<T>::reduce(Vec<T> v) const
{
    require(v.size() == n_, ErrorCode::DimensionMismatch, "reduce: vector length");
    for (std::size_t i = 0; i < piv_.size(); ++i) {
        T f = v[piv_[i]];
        if (mhl::is_zero(f))
            continue;
        for (std::size_t j = 0; j < n_; ++j)
            v[j] -= f * basis_(i, j);
    }
    return v;
}

template <class T> bool Subspace<T>::contains(const Vec<T>& v) const
{
    for (const T& x : reduce(v))
        if (!mhl::is_zero(x))
            return false;
    return true;
}

template <class T> bool Subspace<T>::contains(const Subspace& s) const
{
    require(s.n_ == n_, ErrorCode::DimensionMismatch, "containment: ambient dims differ");
    if (s.dim() > dim())
        return false;
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (!contains(s.vector(i)))
            return false;
    return true;
}

template <class T> Subspace<T> kernel(const Matrix<T>& f)
{
    Matrix<T> a = f;
    auto piv = rref_inplace(a);
    std::size_t n = f.cols();
    std::vector<bool> is_piv(n, false);
    for (auto p : piv)
        is_piv[p] = true;
    std::vector<Vec<T>> vs;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_piv[j])
            continue;
        Vec<T> x(n, T(0));
        x[j] = T(1);
        for (std::size_t i = 0; i < piv.size(); ++i)
            x[piv[i]] = -a(i, j);
        vs.push_back(std::move(x));
    }
    return Subspace<T>::span(vs, n);
}

template <class T> Subspace<T> image(const Matrix<T>& f) { return Subspace<T>::span_cols(f); }

template <class T> Subspace<T> sum(const Subspace<T>& s, const Subspace<T>& t)
{
    require(s.ambient() == t.ambient(), ErrorCode::DimensionMismatch, "sum: ambient dims differ");
    return Subspace<T>::span_rows(vstack(s.basis(), t.basis()));
}

template <class T> Matrix<T> annihilator(const Subspace<T>& s) { return kernel(s.basis()).basis(); }

template <class T> Subspace<T> intersect(const Subspace<T>& s, const Subspace<T>& t)
{
    require(s.ambient() == t.ambient(), ErrorCode::DimensionMismatch, "intersect: ambient dims differ");
    if (s.is_full())
        return t;
    if (t.is_full())
        return s;
    return kernel(vstack(annihilator(s), annihilator(t)));
}

template <class T> Subspace<T> preimage(const Matrix<T>& f, const Subspace<T>& s)
{
    require(f.rows() == s.ambient(), ErrorCode::DimensionMismatch, "preimage: target dim");
    return kernel(annihilator(s) * f);
}

template <class T> Subspace<T> apply(const Matrix<T>& f, const Subspace<T>& s)
{
    require(f.cols() == s.ambient(), ErrorCode::DimensionMismatch, "apply: source dim");
    return image(f * s.basis_cols());
}

template <class T> bool maps_into(const Matrix<T>& f, const Subspace<T>& s, const Subspace<T>& t)
{
    require(f.cols() == s.ambient() && f.rows() == t.ambient(), ErrorCode::DimensionMismatch,
        "maps_into: shapes");
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (!t.contains(f * s.vector(i)))
            return false;
    return true;
}

template <class T> Subspace<T> generalized_eigenspace(const Matrix<T>& a, const T& lam)
{
    require(a.square(), ErrorCode::DimensionMismatch, "generalized_eigenspace: non-square");
    Matrix<T> b = a - lam * Matrix<T>::identity(a.rows());
    return kernel(power(b, static_cast<unsigned>(a.rows())));
}

template <class T> bool is_nilpotent(const Matrix<T>& a)
{
    require(a.square(), ErrorCode::DimensionMismatch, "is_nilpotent: non-square");
    return power(a, static_cast<unsigned>(a.rows())).is_zero();
}

template <class T> unsigned nilpotency_index(const Matrix<T>& a)
{
    Matrix<T> p = Matrix<T>::identity(a.rows());
    unsigned j = 0;
    while (!p.is_zero()) {
        p = p * a;
        ++j;
        require(j <= a.rows(), ErrorCode::NotNilpotent, "map is not nilpotent");
    }
    return j;
}

Subspace<Gaussian> complexify(const Subspace<Rational>& s)
{
    return Subspace<Gaussian>::span_rows(complexify(s.basis()));
}

Subspace<Gaussian> conj(const Subspace<Gaussian>& s) { return Subspace<Gaussian>::span_rows(s.basis().conj()); }

template <class T> Quotient<T>::Quotient(const Subspace<T>& sub, const Subspace<T>& quot) : sub_(sub), quot_(quot)
{
    require(sub.contains(quot), ErrorCode::WellDefinednessViolation, "quotient: denominator not contained in numerator");
    std::size_t n = sub.ambient();
    std::vector<Vec<T>> red;
    for (std::size_t i = 0; i < sub.dim(); ++i)
        red.push_back(quot.reduce(sub.vector(i)));
    comp_ = Subspace<T>::span(red, n);
    Matrix<T> r = Matrix<T>::identity(n);
    for (std::size_t b = 0; b < quot.dim(); ++b) {
        std::size_t p = quot.pivots()[b];
        for (std::size_t i = 0; i < n; ++i)
            r(i, p) -= quot.basis()(b, i);
    }
    proj_ = select_rows(r, comp_.pivots());
}

template <class T> Subspace<T> Quotient<T>::coords(const Subspace<T>& s) const
{
    Subspace<T> t = intersect(s, sub_);
    return image(proj_ * t.basis_cols());
}

template <class T> Subspace<T> Quotient<T>::lift(const Subspace<T>& u) const
{
    require(u.ambient() == dim(), ErrorCode::DimensionMismatch, "quotient lift: dim");
    return sum(image(lift() * u.basis_cols()), quot_);
}

template <class T> Matrix<T> induced_map(const Matrix<T>& f, const Quotient<T>& src, const Quotient<T>& dst)
{
    require(f.cols() == src.ambient() && f.rows() == dst.ambient(), ErrorCode::DimensionMismatch, "induced_map: shapes");
    if (!maps_into(f, src.sub(), dst.sub()))
        throw Error(ErrorCode::WellDefinednessViolation, "induced_map: f(src_sub) not inside dst_sub");
    if (!maps_into(f, src.quot(), dst.quot()))
        throw Error(ErrorCode::WellDefinednessViolation, "induced_map: f(src_quot) not inside dst_quot");
    return dst.projection() * f * src.lift();
}

template <class T> Matrix<T> restrict_map(const Matrix<T>& f, const Subspace<T>& s, const Subspace<T>& t)
{
    if (!maps_into(f, s, t))
        throw Error(ErrorCode::WellDefinednessViolation, "restrict_map: f(s) not inside t");
    Matrix<T> img = f * s.basis_cols();
    return select_rows(img, t.pivots());
}

#define MHL_INSTANTIATE(T)                                                                   \
    template std::vector<std::size_t> rref_inplace(Matrix<T>&);                              \
    template std::size_t rank(const Matrix<T>&);                                             \
    template T determinant(const Matrix<T>&);                                                \
    template std::optional<Matrix<T>> inverse(const Matrix<T>&);                             \
    template std::optional<Vec<T>> solve(const Matrix<T>&, const Vec<T>&);                   \
    template class Subspace<T>;                                                              \
    template class Quotient<T>;                                                              \
    template Subspace<T> kernel(const Matrix<T>&);                                           \
    template Subspace<T> image(const Matrix<T>&);                                            \
    template Subspace<T> sum(const Subspace<T>&, const Subspace<T>&);                        \
    template Subspace<T> intersect(const Subspace<T>&, const Subspace<T>&);                  \
    template Subspace<T> preimage(const Matrix<T>&, const Subspace<T>&);                     \
    template Subspace<T> apply(const Matrix<T>&, const Subspace<T>&);                        \
    template Matrix<T> annihilator(const Subspace<T>&);                                      \
    template Subspace<T> generalized_eigenspace(const Matrix<T>&, const T&);                 \
    template bool maps_into(const Matrix<T>&, const Subspace<T>&, const Subspace<T>&);       \
    template bool is_nilpotent(const Matrix<T>&);                                            \
    template unsigned nilpotency_index(const Matrix<T>&);                                    \
    template Matrix<T> induced_map(const Matrix<T>&, const Quotient<T>&, const Quotient<T>&); \
    template Matrix<T> restrict_map(const Matrix<T>&, const Subspace<T>&, const Subspace<T>&);

MHL_INSTANTIATE(Rational)
MHL_INSTANTIATE(Gaussian)

bool hermitian_is_positive_definite(const Matrix<Gaussian>& g)
{
    require(g.square(), ErrorCode::DimensionMismatch, "hermitian form must be square");
    if (g != g.adjoint())
        throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
    // Elimination without row exchanges: the k-th pivot is the ratio of consecutive
    // leading principal minors, so all minors are positive iff all pivots are.
    Matrix<Gaussian> a = g;
    std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Gaussian& p = a(k, k);
        if (!is_real(p) || sgn(p.re) <= 0)
            return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(a(i, k)))
                continue;
            Gaussian f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

// ---- rational eigenvalues ----

namespace {

using Poly = std::vector<Rational>; // constant term first

void trim(Poly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

Rational eval(const Poly& p, const Rational& x)
{
    Rational r(0);
    for (std::size_t i = p.size(); i-- > 0;)
        r = r * x + p[i];
    return r;
}

Poly derivative(const Poly& p)
{
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Rational(static_cast<long>(i)));
    trim(d);
    return d;
}

// Remainder of a modulo b (b nonzero).
Poly poly_mod(Poly a, const Poly& b)
{
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Poly poly_div(Poly a, const Poly& b)
{
    trim(a);
    if (a.size() < b.size())
        return {};
    Poly q(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        trim(a);
    }
    return q;
}

Poly poly_gcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

int sign(const Rational& x) { return sgn(x) > 0 ? 1 : (sgn(x) < 0 ? -1 : 0); }

std::vector<Poly> sturm_chain(const Poly& p)
{
    std::vector<Poly> s{p, derivative(p)};
    while (!s.back().empty()) {
        Poly r = poly_mod(s[s.size() - 2], s.back());
        for (auto& c : r)
            c = -c;
        if (r.empty())
            break;
        s.push_back(r);
    }
    if (s.back().empty())
        s.pop_back();
    return s;
}

int sign_changes(const std::vector<Poly>& s, const Rational& x)
{
    int prev = 0, changes = 0;
    for (const auto& p : s) {
        int v = sign(eval(p, x));
        if (v == 0)
            continue;
        if (prev != 0 && v != prev)
            ++changes;
        prev = v;
    }
    return changes;
}

Rational floor_q(const Rational& x)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(f);
}

// Rational with the smallest denominator in [a, b].
Rational simplest_between(const Rational& a, const Rational& b)
{
    Rational fa = floor_q(a);
    if (fa == a)
        return a;
    if (fa + 1 <= b)
        return Rational(fa + 1);
    Rational lo = 1 / (b - fa), hi = 1 / (a - fa);
    return Rational(fa + 1 / simplest_between(lo, hi));
}

} // namespace

std::vector<Rational> charpoly(const Matrix<Rational>& a)
{
    require(a.square(), ErrorCode::DimensionMismatch, "charpoly of non-square matrix");
    // Faddeev-LeVerrier.
    std::size_t n = a.rows();
    Poly c(n + 1, Rational(0));
    c[n] = 1;
    Matrix<Rational> m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) += c[n - k + 1];
        Matrix<Rational> am = a * m;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i)
            tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

std::vector<Rational> rational_eigenvalues(const Matrix<Rational>& a)
{
    Poly f = charpoly(a);
    std::vector<Rational> roots;
    if (f.size() <= 1)
        return roots;
    Poly g = poly_div(f, poly_gcd(f, derivative(f)));
    // Strip the root 0 so the remaining bound is positive.
    if (sgn(g[0]) == 0) {
        roots.push_back(Rational(0));
        g.erase(g.begin());
    }
    std::size_t deg = g.size() - 1;
    if (deg == 0)
        return roots;
    // Clear denominators; L bounds every root denominator.
    mpz_class l = 1;
    for (auto& c : g)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (auto& c : g)
        c *= Rational(l);
    mpz_class lead = abs(g.back().get_num());
    Rational bound(1);
    for (std::size_t i = 0; i < deg; ++i) {
        Rational r = abs(g[i] / g.back());
        if (r + 1 > bound)
            bound = r + 1;
    }
    auto chain = sturm_chain(g);
    Rational sep = Rational(1) / Rational(mpz_class(2 * lead * lead));
    std::function<void(const Rational&, const Rational&, int)> isolate =
        [&](const Rational& lo, const Rational& hi, int count) {
            if (count == 0)
                return;
            if (count > 1 || hi - lo > sep) {
                if (count == 1 && sgn(eval(g, hi)) == 0) {
                    roots.push_back(hi);
                    return;
                }
                Rational mid = (lo + hi) / 2;
                int left = sign_changes(chain, lo) - sign_changes(chain, mid);
                isolate(lo, mid, left);
                isolate(mid, hi, count - left);
                return;
            }
            Rational cand = simplest_between(lo, hi);
            if (sgn(eval(g, cand)) != 0)
                throw Error(ErrorCode::NonSplitSpectrum, "eigenvalue is not rational");
            roots.push_back(cand);
        };
    Rational lo = -bound, hi = bound;
    int total = sign_changes(chain, lo) - sign_changes(chain, hi);
    if (total != static_cast<int>(deg))
        throw Error(ErrorCode::NonSplitSpectrum, "characteristic polynomial has non-real roots");
    isolate(lo, hi, total);
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
        throw Error(ErrorCode::NonSplitSpectrum, "eigenvalue is not rational");
    return roots;
}

std::pair<Matrix<Rational>, Matrix<Rational>> jordan_chevalley(const Matrix<Rational>& a)
{
    require(a.square(), ErrorCode::DimensionMismatch, "jordan_chevalley: non-square");
    std::size_t n = a.rows();
    auto eig = rational_eigenvalues(a);
    std::vector<Vec<Rational>> cols;
    std::vector<Rational> diag;
    for (const auto& lam : eig) {
        auto v = generalized_eigenspace(a, lam);
        for (std::size_t i = 0; i < v.dim(); ++i) {
            cols.push_back(v.vector(i));
            diag.push_back(lam);
        }
    }
    if (cols.size() != n)
        throw Error(ErrorCode::NonSplitSpectrum, "generalized eigenspaces do not fill the space");
    Matrix<Rational> p = Matrix<Rational>::from_columns(cols, n);
    Matrix<Rational> d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        d(i, i) = diag[i];
    auto pinv = inverse(p);
    require(pinv.has_value(), ErrorCode::Internal, "eigenbasis is singular");
    Matrix<Rational> s = p * d * *pinv;
    return {s, a - s};
}

} // namespace mhl

namespace mhl {

Quotient<Gaussian> complexify(const Quotient<Rational>& q) { return Quotient<Gaussian>(complexify(q.sub()), complexify(q.quot())); }

} // namespace mhl
