#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "lywb/error.hpp"
#include "lywb/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<lywb::Rational> : GenericNumTraits<lywb::Rational> {
    using Real = lywb::Rational;
    using NonInteger = lywb::Rational;
    using Nested = lywb::Rational;
    using Literal = lywb::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 5,
        AddCost = 20,
        MulCost = 40
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<lywb::Gaussian> : GenericNumTraits<lywb::Gaussian> {
    using Real = lywb::Gaussian;
    using NonInteger = lywb::Gaussian;
    using Nested = lywb::Gaussian;
    using Literal = lywb::Gaussian;
    // Treated as an opaque field element; Eigen never conjugates it.
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 40,
        MulCost = 160
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace lywb {

template <Field S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <Field S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// T(i,j,k) is the coefficient of e_k in op(e_i, e_j).
template <Field S>
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int n) : n_(n), v_(static_cast<size_t>(n) * n * n, S(0)) {}

    int dim() const { return n_; }
    S& operator()(int i, int j, int k) { return v_[idx(i, j, k)]; }
    const S& operator()(int i, int j, int k) const { return v_[idx(i, j, k)]; }

    Vec<S> slice(int i, int j) const {
        Vec<S> out(n_);
        for (int k = 0; k < n_; ++k) out(k) = (*this)(i, j, k);
        return out;
    }
    void set_slice(int i, int j, const Vec<S>& v) {
        for (int k = 0; k < n_; ++k) (*this)(i, j, k) = v(k);
    }

    bool is_skew12() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    if (!is_zero((*this)(i, j, k) + (*this)(j, i, k))) return false;
        return true;
    }
    bool is_zero_tensor() const {
        for (const auto& s : v_)
            if (!is_zero(s)) return false;
        return true;
    }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    size_t idx(int i, int j, int k) const { return (static_cast<size_t>(i) * n_ + j) * n_ + k; }
    int n_ = 0;
    std::vector<S> v_;
};

// T(i,j,k,l) is the coefficient of e_l in op(e_i, e_j, e_k).
template <Field S>
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(int n) : n_(n), v_(static_cast<size_t>(n) * n * n * n, S(0)) {}

    int dim() const { return n_; }
    S& operator()(int i, int j, int k, int l) { return v_[idx(i, j, k, l)]; }
    const S& operator()(int i, int j, int k, int l) const { return v_[idx(i, j, k, l)]; }

    Vec<S> slice(int i, int j, int k) const {
        Vec<S> out(n_);
        for (int l = 0; l < n_; ++l) out(l) = (*this)(i, j, k, l);
        return out;
    }
    void set_slice(int i, int j, int k, const Vec<S>& v) {
        for (int l = 0; l < n_; ++l) (*this)(i, j, k, l) = v(l);
    }

    bool is_skew12() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    for (int l = 0; l < n_; ++l)
                        if (!is_zero((*this)(i, j, k, l) + (*this)(j, i, k, l))) return false;
        return true;
    }
    bool is_zero_tensor() const {
        for (const auto& s : v_)
            if (!is_zero(s)) return false;
        return true;
    }

    friend bool operator==(const Tensor4&, const Tensor4&) = default;

private:
    size_t idx(int i, int j, int k, int l) const {
        return ((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l;
    }
    int n_ = 0;
    std::vector<S> v_;
};

template <Field S>
Vec<S> unit(int n, int i) {
    Vec<S> v = Vec<S>::Zero(n);
    v(i) = S(1);
    return v;
}

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!is_zero(m.coeff(i, j))) return false;
    return true;
}

template <Field S>
bool is_symmetric(const Mat<S>& m) { return m.rows() == m.cols() && m == m.transpose(); }
template <Field S>
bool is_skew(const Mat<S>& m) { return m.rows() == m.cols() && all_zero(m + m.transpose()); }

// Contractions against structure constants; zero coordinates are skipped.
template <Field S>
Vec<S> contract(const Tensor3<S>& t, const Vec<S>& x, const Vec<S>& y);
template <Field S>
Vec<S> contract(const Tensor4<S>& t, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z);

template <Field S>
Mat<S> transpose(const Mat<S>& a) { return a.transpose(); }

template <Field S>
S det(const Mat<S>& a);
template <Field S>
long rank(const Mat<S>& a);
template <Field S>
Vec<S> solve(const Mat<S>& a, const Vec<S>& b);
template <Field S>
Mat<S> solve(const Mat<S>& a, const Mat<S>& b);
template <Field S>
Mat<S> invert(const Mat<S>& a);
// Columns form a basis of the null space.
template <Field S>
Mat<S> kernel(const Mat<S>& a);

// 0 when every leading principal minor is positive, else the 1-based order of the first that is not.
long first_nonpositive_minor(const Mat<Rational>& s);
bool is_positive_definite(const Mat<Rational>& s);

template <Field S>
Mat<S> block_diag(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> out = Mat<S>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

template <Field S>
Mat<S> hstack(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> out(a.rows(), a.cols() + b.cols());
    out << a, b;
    return out;
}

template <class Derived>
std::string format_vec(const Eigen::MatrixBase<Derived>& v) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v.coeff(i).str();
    return s + ")";
}

// Throws Degenerate listing a kernel basis when the square form f is singular.
template <Field S>
void require_nondegenerate(const Mat<S>& f, const std::string& what) {
    if (f.rows() != f.cols()) throw Error(ErrorKind::DimensionMismatch, what + ": form is not square");
    Mat<S> k = kernel<S>(f);
    if (k.cols() == 0) return;
    std::string msg = what + " is degenerate; kernel basis";
    for (Eigen::Index j = 0; j < k.cols(); ++j) msg += " " + format_vec(k.col(j));
    throw Error(ErrorKind::Degenerate, msg);
}

}  // namespace lywb
