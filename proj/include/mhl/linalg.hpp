#pragma once

#include "matrix.hpp"

#include <optional>
#include <utility>

namespace mhl {

// Gauss-Jordan in place. Returns pivot columns; nonzero rows are moved to the top.
template <class T> std::vector<std::size_t> rref_inplace(Matrix<T>& m);
template <class T> std::size_t rank(const Matrix<T>& m);
template <class T> T determinant(const Matrix<T>& m);
template <class T> std::optional<Matrix<T>> inverse(const Matrix<T>& m);
// Some x with a*x = b, if one exists.
template <class T> std::optional<Vec<T>> solve(const Matrix<T>& a, const Vec<T>& b);

// Subspace of T^n. The basis is the reduced row echelon form of any spanning set,
// so two subspaces are equal exactly when their representations are.
template <class T> class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t n) : n_(n), basis_(0, n) {}
    // Span of the rows of m.
    static Subspace span_rows(const Matrix<T>& m);
    // Span of the columns of m.
    static Subspace span_cols(const Matrix<T>& m) { return span_rows(m.transpose()); }
    static Subspace span(const std::vector<Vec<T>>& vs, std::size_t n);
    static Subspace zero(std::size_t n) { return Subspace(n); }
    static Subspace full(std::size_t n) { return span_rows(Matrix<T>::identity(n)); }
    static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& idx);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == n_; }
    // Rows form the canonical basis.
    const Matrix<T>& basis() const { return basis_; }
    // n x dim matrix whose columns are the basis vectors.
    Matrix<T> basis_cols() const { return basis_.transpose(); }
    const std::vector<std::size_t>& pivots() const { return piv_; }
    Vec<T> vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec<T>& v) const;
    bool contains(const Subspace& s) const;
    // v minus its components along the basis pivots.
    Vec<T> reduce(Vec<T> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    Matrix<T> basis_;
    std::vector<std::size_t> piv_;
};

template <class T> Subspace<T> kernel(const Matrix<T>& f);
template <class T> Subspace<T> image(const Matrix<T>& f);
template <class T> Subspace<T> sum(const Subspace<T>& s, const Subspace<T>& t);
template <class T> Subspace<T> intersect(const Subspace<T>& s, const Subspace<T>& t);
template <class T> Subspace<T> preimage(const Matrix<T>& f, const Subspace<T>& s);
// f(S).
template <class T> Subspace<T> apply(const Matrix<T>& f, const Subspace<T>& s);
// Rows spanning the linear forms that vanish on s.
template <class T> Matrix<T> annihilator(const Subspace<T>& s);
template <class T> Subspace<T> generalized_eigenspace(const Matrix<T>& a, const T& lam);
template <class T> bool maps_into(const Matrix<T>& f, const Subspace<T>& s, const Subspace<T>& t);
template <class T> bool is_nilpotent(const Matrix<T>& a);
// Smallest j with a^j = 0 (a assumed nilpotent).
template <class T> unsigned nilpotency_index(const Matrix<T>& a);

Subspace<Gaussian> complexify(const Subspace<Rational>& s);
Subspace<Gaussian> conj(const Subspace<Gaussian>& s);

// sub/quot with quot contained in sub. Coordinates on the quotient come from the
// complement {x in sub : x vanishes at the pivots of quot}, in its echelon basis.
template <class T> class Quotient {
public:
    Quotient() = default;
    Quotient(const Subspace<T>& sub, const Subspace<T>& quot);

    std::size_t ambient() const { return sub_.ambient(); }
    std::size_t dim() const { return comp_.dim(); }
    const Subspace<T>& sub() const { return sub_; }
    const Subspace<T>& quot() const { return quot_; }
    // dim x ambient: coordinates of the class of a vector of sub.
    const Matrix<T>& projection() const { return proj_; }
    // ambient x dim: chosen representatives.
    Matrix<T> lift() const { return comp_.basis_cols(); }
    // Image of (S ∩ sub + quot)/quot in coordinates.
    Subspace<T> coords(const Subspace<T>& s) const;
    // Preimage in sub of a subspace of coordinates; always contains quot.
    Subspace<T> lift(const Subspace<T>& u) const;

private:
    Subspace<T> sub_, quot_, comp_;
    Matrix<T> proj_;
};

Quotient<Gaussian> complexify(const Quotient<Rational>& q);

// Matrix of f on src.sub/src.quot -> dst.sub/dst.quot. Throws WellDefinednessViolation
// unless f(src.sub) ⊆ dst.sub and f(src.quot) ⊆ dst.quot.
template <class T> Matrix<T> induced_map(const Matrix<T>& f, const Quotient<T>& src, const Quotient<T>& dst);
// f restricted to s, written in the echelon bases of s and t.
template <class T> Matrix<T> restrict_map(const Matrix<T>& f, const Subspace<T>& s, const Subspace<T>& t);

// A = S + N with S semisimple, N nilpotent, SN = NS. Needs all eigenvalues rational.
std::pair<Matrix<Rational>, Matrix<Rational>> jordan_chevalley(const Matrix<Rational>& a);
// Distinct rational eigenvalues of a, ascending. Throws NonSplitSpectrum if the
// characteristic polynomial does not split over Q.
std::vector<Rational> rational_eigenvalues(const Matrix<Rational>& a);
// Characteristic polynomial det(xI - a), coefficients from constant term upward.
std::vector<Rational> charpoly(const Matrix<Rational>& a);

bool hermitian_is_positive_definite(const Matrix<Gaussian>& g);

} // namespace mhl
