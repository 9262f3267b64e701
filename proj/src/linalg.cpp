#include "lywb/linalg.hpp"

#include <utility>

namespace lywb {

template <Field S>
Vec<S> contract(const Tensor3<S>& t, const Vec<S>& x, const Vec<S>& y) {
    const int n = t.dim();
    if (x.size() != n || y.size() != n) throw Error(ErrorKind::DimensionMismatch, "contract: vector length");
    Vec<S> out = Vec<S>::Zero(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(x(i))) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(y(j))) continue;
            S c = x(i) * y(j);
            for (int k = 0; k < n; ++k)
                if (!is_zero(t(i, j, k))) out(k) += c * t(i, j, k);
        }
    }
    return out;
}

template <Field S>
Vec<S> contract(const Tensor4<S>& t, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
    const int n = t.dim();
    if (x.size() != n || y.size() != n || z.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "contract: vector length");
    Vec<S> out = Vec<S>::Zero(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(x(i))) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(y(j))) continue;
            S c2 = x(i) * y(j);
            for (int k = 0; k < n; ++k) {
                if (is_zero(z(k))) continue;
                S c = c2 * z(k);
                for (int l = 0; l < n; ++l)
                    if (!is_zero(t(i, j, k, l))) out(l) += c * t(i, j, k, l);
            }
        }
    }
    return out;
}

namespace {

// Fraction-free forward elimination on m (square part n×n, extra columns carried along).
// Returns false if a zero pivot column is met; m is then partially reduced.
template <Field S>
bool bareiss_forward(Mat<S>& m, int n, int& sign) {
    S prev(1);
    sign = 1;
    for (int k = 0; k < n; ++k) {
        if (is_zero(m(k, k))) {
            int p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) return false;
            m.row(k).swap(m.row(p));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < m.cols(); ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = S(0);
        }
        prev = m(k, k);
    }
    return true;
}

// Reduced row echelon form in place; returns pivot columns.
template <Field S>
std::vector<int> rref(Mat<S>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.row(r).swap(m.row(p));
        S inv = m(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            S f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

void require_square(long r, long c, const char* what) {
    if (r != c) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": matrix not square");
}

}  // namespace

template <Field S>
S det(const Mat<S>& a) {
    require_square(a.rows(), a.cols(), "det");
    const int n = static_cast<int>(a.rows());
    if (n == 0) return S(1);
    Mat<S> m = a;
    int sign = 1;
    if (!bareiss_forward(m, n, sign)) return S(0);
    return sign > 0 ? m(n - 1, n - 1) : S(-m(n - 1, n - 1));
}

template <Field S>
long rank(const Mat<S>& a) {
    Mat<S> m = a;
    return static_cast<long>(rref(m).size());
}

template <Field S>
Mat<S> solve(const Mat<S>& a, const Mat<S>& b) {
    require_square(a.rows(), a.cols(), "solve");
    if (b.rows() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs rows");
    const int n = static_cast<int>(a.rows());
    Mat<S> m = hstack<S>(a, b);
    int sign = 1;
    if (!bareiss_forward(m, n, sign)) throw SingularError(rank(a), n);
    Mat<S> x(n, b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        for (int i = n - 1; i >= 0; --i) {
            S acc = m(i, n + c);
            for (int j = i + 1; j < n; ++j) acc -= m(i, j) * x(j, c);
            x(i, c) = acc / m(i, i);
        }
    }
    if (!all_zero(a * x - b)) throw Error(ErrorKind::Internal, "solve: residual check failed");
    return x;
}

template <Field S>
Vec<S> solve(const Mat<S>& a, const Vec<S>& b) {
    Mat<S> bm = b;
    return solve<S>(a, bm).col(0);
}

template <Field S>
Mat<S> invert(const Mat<S>& a) {
    require_square(a.rows(), a.cols(), "invert");
    return solve<S>(a, Mat<S>(Mat<S>::Identity(a.rows(), a.rows())));
}

template <Field S>
Mat<S> kernel(const Mat<S>& a) {
    Mat<S> m = a;
    std::vector<int> piv = rref(m);
    const int n = static_cast<int>(a.cols());
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    Mat<S> basis(n, n - static_cast<int>(piv.size()));
    int col = 0;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Vec<S> v = Vec<S>::Zero(n);
        v(f) = S(1);
        for (size_t r = 0; r < piv.size(); ++r) v(piv[r]) = -m(static_cast<long>(r), f);
        basis.col(col++) = v;
    }
    return basis;
}

long first_nonpositive_minor(const Mat<Rational>& s) {
    if (!is_symmetric<Rational>(s)) throw Error(ErrorKind::NotSymmetric, "positive definiteness needs a symmetric matrix");
    for (long k = 1; k <= s.rows(); ++k) {
        Mat<Rational> lead = s.topLeftCorner(k, k);
        if (det<Rational>(lead).sign() <= 0) return k;
    }
    return 0;
}

bool is_positive_definite(const Mat<Rational>& s) { return first_nonpositive_minor(s) == 0; }

#define LYWB_INSTANTIATE(S)                                                              \
    template Vec<S> contract(const Tensor3<S>&, const Vec<S>&, const Vec<S>&);           \
    template Vec<S> contract(const Tensor4<S>&, const Vec<S>&, const Vec<S>&, const Vec<S>&); \
    template S det(const Mat<S>&);                                                       \
    template long rank(const Mat<S>&);                                                   \
    template Mat<S> solve(const Mat<S>&, const Mat<S>&);                                 \
    template Vec<S> solve(const Mat<S>&, const Vec<S>&);                                 \
    template Mat<S> invert(const Mat<S>&);                                               \
    template Mat<S> kernel(const Mat<S>&);

LYWB_INSTANTIATE(Rational)
LYWB_INSTANTIATE(Gaussian)

}  // namespace lywb
