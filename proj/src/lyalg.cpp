#include "lywb/lyalg.hpp"

namespace lywb {

template <Field S>
LyAlgebra<S>::LyAlgebra(Tensor3<S> c_, Tensor4<S> d_) : dim(c_.dim()), c(std::move(c_)), d(std::move(d_)) {
    if (d.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "binary and ternary constants differ in dimension");
    if (!c.is_skew12()) throw Error(ErrorKind::NotSkew, "binary bracket is not skew-symmetric");
    if (!d.is_skew12()) throw Error(ErrorKind::NotSkew, "ternary bracket is not skew in its first two arguments");
}

template <Field S>
Subspace<S>::Subspace(int ambient, Mat<S> basis) : ambient_(ambient), basis_(std::move(basis)) {
    if (basis_.cols() > 0 && basis_.rows() != ambient_)
        throw Error(ErrorKind::DimensionMismatch, "subspace basis has the wrong length");
    if (basis_.cols() == 0) basis_.resize(ambient_, 0);
    long r = rank<S>(basis_);
    if (r != basis_.cols()) throw SingularError(r, basis_.cols());
}

template <Field S>
Subspace<S> Subspace<S>::span(const std::vector<Vec<S>>& vectors) {
    if (vectors.empty()) throw Error(ErrorKind::DimensionMismatch, "span of nothing has no ambient dimension");
    Mat<S> b(vectors[0].size(), static_cast<long>(vectors.size()));
    for (size_t i = 0; i < vectors.size(); ++i) b.col(static_cast<long>(i)) = vectors[i];
    return Subspace(static_cast<int>(vectors[0].size()), b);
}

template <Field S>
Subspace<S> Subspace<S>::spanned_by(int ambient, const std::vector<Vec<S>>& vectors) {
    Subspace out(ambient, Mat<S>(ambient, 0));
    for (const auto& v : vectors) {
        if (out.contains(v)) continue;
        Mat<S> grown(ambient, out.dim() + 1);
        grown << out.basis_, v;
        out.basis_ = std::move(grown);
    }
    return out;
}

template <Field S>
bool Subspace<S>::contains(const Vec<S>& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient");
    if (all_zero(v)) return true;
    Mat<S> stacked(ambient_, basis_.cols() + 1);
    stacked << basis_, v;
    return rank<S>(stacked) == basis_.cols();
}

template <Field S>
Vec<S> bracket2(const LyAlgebra<S>& g, const Vec<S>& x, const Vec<S>& y) {
    return contract(g.c, x, y);
}

template <Field S>
Vec<S> bracket3(const LyAlgebra<S>& g, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
    return contract(g.d, x, y, z);
}

template <Field S>
CheckReport<S> check_ly(const LyAlgebra<S>& g) {
    const int n = g.dim;
    std::vector<Vec<S>> e;
    for (int i = 0; i < n; ++i) e.push_back(g.e(i));
    auto br = [&](const Vec<S>& x, const Vec<S>& y) { return bracket2(g, x, y); };
    auto tr = [&](const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) { return bracket3(g, x, y, z); };
    auto increasing3 = [](const std::vector<int>& t) { return t[0] < t[1] && t[1] < t[2]; };
    auto pairs_ordered = [](const std::vector<int>& t) { return t[0] < t[1] && t[2] < t[3]; };

    CheckReport<S> report;
    // Both residuals below are alternating, so strictly increasing triples suffice.
    sweep(report, "(2.1)", {n, n, n}, increasing3, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
        return Vec<S>(br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y) + tr(x, y, z) + tr(y, z, x) + tr(z, x, y));
    });
    sweep(report, "(2.2)", {n, n, n, n}, increasing3, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
        return Vec<S>(tr(br(x, y), z, w) + tr(br(y, z), x, w) + tr(br(z, x), y, w));
    });
    sweep(report, "(2.3)", {n, n, n, n}, pairs_ordered, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
        return Vec<S>(tr(x, y, br(z, w)) - br(tr(x, y, z), w) - br(z, tr(x, y, w)));
    });
    sweep(report, "(2.4)", {n, n, n, n, n}, pairs_ordered, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]], &u = e[t[4]];
        return Vec<S>(tr(x, y, tr(z, w, u)) - tr(tr(x, y, z), w, u) - tr(z, tr(x, y, w), u) - tr(z, w, tr(x, y, u)));
    });
    return report;
}

template <Field S>
LyAlgebra<S> from_lie(const Tensor3<S>& bracket) {
    const int n = bracket.dim();
    if (!bracket.is_skew12()) throw Error(ErrorKind::NotSkew, "Lie bracket is not skew-symmetric");
    auto br = [&](const Vec<S>& x, const Vec<S>& y) { return contract(bracket, x, y); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec<S> x = unit<S>(n, i), y = unit<S>(n, j), z = unit<S>(n, k);
                if (!all_zero(br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y)))
                    throw Error(ErrorKind::NotLie, "Jacobi identity fails at (" + std::to_string(i + 1) + "," +
                                                       std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
            }
    Tensor4<S> d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) d.set_slice(i, j, k, br(bracket.slice(i, j), unit<S>(n, k)));
    return LyAlgebra<S>(bracket, d);
}

template <Field S>
bool is_subalgebra(const LyAlgebra<S>& g, const Subspace<S>& u) {
    if (u.ambient() != g.dim) throw Error(ErrorKind::DimensionMismatch, "subspace lives in another dimension");
    const int k = u.dim();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (!u.contains(bracket2(g, u.vector(a), u.vector(b)))) return false;
            for (int c = 0; c < k; ++c)
                if (!u.contains(bracket3(g, u.vector(a), u.vector(b), u.vector(c)))) return false;
        }
    return true;
}

template <Field S>
bool is_abelian_on(const LyAlgebra<S>& g, const Subspace<S>& u) {
    if (u.ambient() != g.dim) throw Error(ErrorKind::DimensionMismatch, "subspace lives in another dimension");
    const int k = u.dim();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (!all_zero(bracket2(g, u.vector(a), u.vector(b)))) return false;
            for (int c = 0; c < k; ++c)
                if (!all_zero(bracket3(g, u.vector(a), u.vector(b), u.vector(c)))) return false;
        }
    return true;
}

template <Field S>
bool is_isotropic(const Mat<S>& f, const Subspace<S>& u) {
    if (f.rows() != u.ambient() || f.cols() != u.ambient())
        throw Error(ErrorKind::DimensionMismatch, "form and subspace dimensions differ");
    return all_zero(u.basis().transpose() * f * u.basis());
}

#define LYWB_INSTANTIATE(S)                                                                       \
    template struct LyAlgebra<S>;                                                                 \
    template class Subspace<S>;                                                                   \
    template Vec<S> bracket2(const LyAlgebra<S>&, const Vec<S>&, const Vec<S>&);                  \
    template Vec<S> bracket3(const LyAlgebra<S>&, const Vec<S>&, const Vec<S>&, const Vec<S>&);   \
    template CheckReport<S> check_ly(const LyAlgebra<S>&);                                        \
    template LyAlgebra<S> from_lie(const Tensor3<S>&);                                            \
    template bool is_subalgebra(const LyAlgebra<S>&, const Subspace<S>&);                         \
    template bool is_abelian_on(const LyAlgebra<S>&, const Subspace<S>&);                         \
    template bool is_isotropic(const Mat<S>&, const Subspace<S>&);

LYWB_INSTANTIATE(Rational)
LYWB_INSTANTIATE(Gaussian)

}  // namespace lywb
