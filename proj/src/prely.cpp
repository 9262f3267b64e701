#include "lywb/prely.hpp"

namespace lywb {

template <Field S>
PreLyAlgebra<S>::PreLyAlgebra(Tensor3<S> a_, Tensor4<S> b_) : dim(a_.dim()), a(std::move(a_)), b(std::move(b_)) {
    if (b.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "binary and ternary products differ in dimension");
}

template <Field S>
InvariantForm<S>::InvariantForm(Mat<S> b) : B(std::move(b)) {
    if (!is_symmetric<S>(B)) throw Error(ErrorKind::NotSymmetric, "invariant form must be symmetric");
    require_nondegenerate<S>(B, "invariant form");
}

template <Field S>
Vec<S> star(const PreLyAlgebra<S>& A, const Vec<S>& x, const Vec<S>& y) {
    return contract(A.a, x, y);
}

template <Field S>
Vec<S> brace(const PreLyAlgebra<S>& A, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
    return contract(A.b, x, y, z);
}

template <Field S>
Vec<S> associator(const PreLyAlgebra<S>& A, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
    return star(A, star(A, x, y), z) - star(A, x, star(A, y, z));
}

template <Field S>
Vec<S> brace_d(const PreLyAlgebra<S>& A, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
    return brace(A, z, y, x) - brace(A, z, x, y) + associator(A, y, x, z) - associator(A, x, y, z);
}

namespace {

template <Field S>
struct Ops {
    const PreLyAlgebra<S>& A;
    std::vector<Vec<S>> e;

    explicit Ops(const PreLyAlgebra<S>& a) : A(a) {
        for (int i = 0; i < a.dim; ++i) e.push_back(a.e(i));
    }
    Vec<S> st(const Vec<S>& x, const Vec<S>& y) const { return star(A, x, y); }
    Vec<S> br(const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) const { return brace(A, x, y, z); }
    Vec<S> bd(const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) const { return brace_d(A, x, y, z); }
    Vec<S> comm(const Vec<S>& x, const Vec<S>& y) const { return st(x, y) - st(y, x); }
};

}  // namespace

template <Field S>
CheckReport<S> check_prely(const PreLyAlgebra<S>& A) {
    const int n = A.dim;
    Ops<S> o(A);
    const auto& e = o.e;
    auto any = every_tuple();
    CheckReport<S> report;
    sweep(report, "pre.commutator-brace", {n, n, n, n}, any, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
        return Vec<S>(o.br(z, o.comm(x, y), w) - o.br(o.st(y, z), x, w) + o.br(o.st(x, z), y, w));
    });
    sweep(report, "pre.brace-commutator", {n, n, n, n}, any, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
        return Vec<S>(o.br(x, y, o.comm(z, w)) - o.st(z, o.br(x, y, w)) + o.st(w, o.br(x, y, z)));
    });
    sweep(report, "pre.brace-brace", {n, n, n, n, n}, any, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]], &u = e[t[4]];
        return Vec<S>(o.br(o.br(x, y, z), w, u) - o.br(o.br(x, y, w), z, u) - o.br(x, y, o.bd(z, w, u)) -
                      o.br(x, y, o.br(z, w, u)) + o.br(x, y, o.br(w, z, u)) + o.bd(z, w, o.br(x, y, u)));
    });
    sweep(report, "pre.brace-D", {n, n, n, n, n}, any, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]], &u = e[t[4]];
        Vec<S> lhs = o.br(z, o.bd(x, y, w), u) + o.br(z, o.br(x, y, w), u) - o.br(z, o.br(y, x, w), u) +
                     o.br(z, w, o.bd(x, y, u)) + o.br(z, w, o.br(x, y, u)) - o.br(z, w, o.br(y, x, u));
        Vec<S> rhs = o.bd(x, y, o.br(z, w, u)) - o.br(o.bd(x, y, z), w, u);
        return Vec<S>(lhs - rhs);
    });
    sweep(report, "pre.D-star", {n, n, n, n}, any, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
        Vec<S> lhs = o.st(o.bd(x, y, z), w) + o.st(o.br(x, y, z), w) - o.st(o.br(y, x, z), w);
        Vec<S> rhs = o.bd(x, y, o.st(z, w)) - o.st(z, o.bd(x, y, w));
        return Vec<S>(lhs - rhs);
    });
    return report;
}

template <Field S>
CheckReport<S> check_prely_consequences(const PreLyAlgebra<S>& A) {
    const int n = A.dim;
    Ops<S> o(A);
    const auto& e = o.e;
    auto any = every_tuple();
    CheckReport<S> report;
    sweep(report, "pre.derived.D-cyclic", {n, n, n, n}, any, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
        return Vec<S>(o.bd(o.comm(x, y), z, w) + o.bd(o.comm(y, z), x, w) + o.bd(o.comm(z, x), y, w));
    });
    sweep(report, "pre.derived.D-D", {n, n, n, n, n}, any, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]], &u = e[t[4]];
        return Vec<S>(o.bd(x, y, o.bd(z, w, u)) - o.bd(o.bd(x, y, z), w, u) - o.bd(o.br(x, y, z), w, u) +
                      o.bd(o.br(y, x, z), w, u) - o.bd(z, o.bd(x, y, w), u) - o.bd(z, o.br(x, y, w), u) +
                      o.bd(z, o.br(y, x, w), u) - o.bd(z, w, o.bd(x, y, u)));
    });
    return report;
}

template <Field S>
LyAlgebra<S> sub_adjacent(const PreLyAlgebra<S>& A) {
    if (!check_prely(A).passed()) throw Error(ErrorKind::InvalidPreLy, "sub-adjacent algebra needs a valid pre-LY algebra");
    const int n = A.dim;
    Ops<S> o(A);
    Tensor3<S> c(n);
    Tensor4<S> d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            c.set_slice(i, j, o.comm(o.e[i], o.e[j]));
            for (int k = 0; k < n; ++k) {
                const Vec<S>&x = o.e[i], &y = o.e[j], &z = o.e[k];
                d.set_slice(i, j, k, o.bd(x, y, z) + o.br(x, y, z) - o.br(y, x, z));
            }
        }
    return LyAlgebra<S>(c, d);
}

template <Field S>
Representation<S> lr_rep(const PreLyAlgebra<S>& A) {
    LyAlgebra<S> g = sub_adjacent(A);
    const int n = A.dim;
    std::vector<Mat<S>> rho(n, Mat<S>(n, n)), mu(static_cast<size_t>(n) * n, Mat<S>(n, n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) rho[i].col(k) = A.a.slice(i, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) mu[static_cast<size_t>(i) * n + j].col(k) = A.b.slice(k, i, j);
    return Representation<S>(g, n, rho, mu);
}

template <Field S>
CheckReport<S> check_invariant(const PreLyAlgebra<S>& A, const InvariantForm<S>& F) {
    const int n = A.dim;
    if (F.B.rows() != n) throw Error(ErrorKind::DimensionMismatch, "form and algebra dimensions differ");
    Ops<S> o(A);
    const auto& e = o.e;
    const Mat<S>& B = F.B;
    auto form = [&](const Vec<S>& x, const Vec<S>& y) {
        Vec<S> r(1);
        r(0) = x.dot(B * y);
        return r;
    };
    auto any = every_tuple();
    CheckReport<S> report;
    sweep(report, "inv.star", {n, n, n}, any, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
        return Vec<S>(form(o.st(x, y), z) + form(y, o.st(x, z)));
    });
    sweep(report, "inv.brace", {n, n, n, n}, any, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
        return Vec<S>(form(o.br(x, y, z), w) - form(x, o.br(w, z, y)));
    });
    sweep(report, "inv.brace-D", {n, n, n, n}, any, [&](const std::vector<int>& t) {
        const Vec<S>&x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
        return Vec<S>(form(o.bd(x, y, z), w) + form(z, o.bd(x, y, w)));
    });
    return report;
}

template <Field S>
Mat<S> b_sharp(const InvariantForm<S>& F) {
    require_nondegenerate<S>(F.B, "invariant form");
    return F.B;
}

#define LYWB_INSTANTIATE(S)                                                                          \
    template struct PreLyAlgebra<S>;                                                                 \
    template struct InvariantForm<S>;                                                                \
    template Vec<S> star(const PreLyAlgebra<S>&, const Vec<S>&, const Vec<S>&);                      \
    template Vec<S> brace(const PreLyAlgebra<S>&, const Vec<S>&, const Vec<S>&, const Vec<S>&);      \
    template Vec<S> associator(const PreLyAlgebra<S>&, const Vec<S>&, const Vec<S>&, const Vec<S>&); \
    template Vec<S> brace_d(const PreLyAlgebra<S>&, const Vec<S>&, const Vec<S>&, const Vec<S>&);    \
    template CheckReport<S> check_prely(const PreLyAlgebra<S>&);                                     \
    template CheckReport<S> check_prely_consequences(const PreLyAlgebra<S>&);                        \
    template LyAlgebra<S> sub_adjacent(const PreLyAlgebra<S>&);                                      \
    template Representation<S> lr_rep(const PreLyAlgebra<S>&);                                       \
    template CheckReport<S> check_invariant(const PreLyAlgebra<S>&, const InvariantForm<S>&);        \
    template Mat<S> b_sharp(const InvariantForm<S>&);

LYWB_INSTANTIATE(Rational)
LYWB_INSTANTIATE(Gaussian)

}  // namespace lywb
