#pragma once

#include "errors.hpp"
#include "scalar.hpp"

#include <cstddef>
#include <vector>

namespace mhl {

template <class T> using Vec = std::vector<T>;

// Dense row-major matrix. A rows x cols matrix acts on column vectors of length cols.
template <class T> class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == cols, ErrorCode::DimensionMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            require(cols[j].size() == rows, ErrorCode::DimensionMismatch, "ragged matrix columns");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec<T> row(std::size_t i) const { return Vec<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    Vec<T> col(std::size_t j) const
    {
        Vec<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const
    {
        for (const T& x : a_)
            if (!mhl::is_zero(x))
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix conj() const
    {
        Matrix t(r_, c_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            t.a_[k] = mhl::conj(a_[k]);
        return t;
    }
    Matrix adjoint() const { return conj().transpose(); }

    Matrix& operator+=(const Matrix& o)
    {
        require(r_ == o.r_ && c_ == o.c_, ErrorCode::DimensionMismatch, "matrix sum shape");
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        require(r_ == o.r_ && c_ == o.c_, ErrorCode::DimensionMismatch, "matrix difference shape");
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const T& s)
    {
        for (T& x : a_)
            x *= s;
        return *this;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    const std::vector<T>& data() const { return a_; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

template <class T> Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) { return a += b; }
template <class T> Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) { return a -= b; }
template <class T> Matrix<T> operator*(const T& s, Matrix<T> a) { return a *= s; }
template <class T> Matrix<T> operator-(Matrix<T> a) { return a *= T(-1); }

template <class T> Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    require(a.cols() == b.rows(), ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix<T> m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& x = a(i, k);
            if (is_zero(x))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(i, j) += x * b(k, j);
        }
    return m;
}

template <class T> Vec<T> operator*(const Matrix<T>& a, const Vec<T>& v)
{
    require(a.cols() == v.size(), ErrorCode::DimensionMismatch, "matrix-vector shape");
    Vec<T> w(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!is_zero(v[k]))
                w[i] += a(i, k) * v[k];
    return w;
}

template <class T> Matrix<T> power(const Matrix<T>& a, unsigned k)
{
    require(a.square(), ErrorCode::DimensionMismatch, "power of non-square matrix");
    Matrix<T> r = Matrix<T>::identity(a.rows());
    for (unsigned i = 0; i < k; ++i)
        r = r * a;
    return r;
}

template <class T> Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b)
{
    require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "hstack rows");
    Matrix<T> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <class T> Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b)
{
    require(a.cols() == b.cols(), ErrorCode::DimensionMismatch, "vstack cols");
    Matrix<T> m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, j) = b(i, j);
    return m;
}

// Block diagonal matrix.
template <class T> Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

template <class T> Matrix<T> select_rows(const Matrix<T>& a, const std::vector<std::size_t>& idx)
{
    Matrix<T> m(idx.size(), a.cols());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(idx[i], j);
    return m;
}

template <class T> Matrix<T> select_cols(const Matrix<T>& a, const std::vector<std::size_t>& idx)
{
    Matrix<T> m(a.rows(), idx.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            m(i, j) = a(i, idx[j]);
    return m;
}

inline Matrix<Gaussian> complexify(const Matrix<Rational>& a)
{
    Matrix<Gaussian> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = Gaussian(a(i, j));
    return m;
}
inline Matrix<Gaussian> complexify(const Matrix<Gaussian>& a) { return a; }

inline bool is_rational(const Matrix<Gaussian>& a)
{
    for (const Gaussian& z : a.data())
        if (!is_real(z))
            return false;
    return true;
}

inline Matrix<Rational> real_part(const Matrix<Gaussian>& a)
{
    Matrix<Rational> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j).re;
    return m;
}

} // namespace mhl

namespace mhl {

template <class T> Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j)))
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

// exp of a nilpotent matrix (finite sum).
template <class T> Matrix<T> exp_nilpotent(const Matrix<T>& a)
{
    Matrix<T> r = Matrix<T>::identity(a.rows()), term = Matrix<T>::identity(a.rows());
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        term = term * a;
        term *= T(1) / T(static_cast<long>(k));
        if (term.is_zero())
            break;
        r += term;
    }
    return r;
}

} // namespace mhl
