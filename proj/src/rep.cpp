#include "lywb/rep.hpp"

namespace lywb {

template <Field S>
Representation<S>::Representation(LyAlgebra<S> base_, int mdim_, std::vector<Mat<S>> rho_, std::vector<Mat<S>> mu_)
    : base(std::move(base_)), mdim(mdim_), rho(std::move(rho_)), mu(std::move(mu_)) {
    const size_t n = static_cast<size_t>(base.dim);
    if (rho.size() != n || mu.size() != n * n)
        throw Error(ErrorKind::DimensionMismatch, "representation needs n matrices ρ and n² matrices μ");
    for (const auto* family : {&rho, &mu})
        for (const auto& m : *family)
            if (m.rows() != mdim || m.cols() != mdim)
                throw Error(ErrorKind::DimensionMismatch, "representation matrix is not mdim × mdim");
}

template <Field S>
Representation<S> Representation<S>::zero(const LyAlgebra<S>& g, int mdim) {
    const size_t n = static_cast<size_t>(g.dim);
    Mat<S> z = Mat<S>::Zero(mdim, mdim);
    return Representation(g, mdim, std::vector<Mat<S>>(n, z), std::vector<Mat<S>>(n * n, z));
}

template <Field S>
Mat<S> Representation<S>::rho_of(const Vec<S>& x) const {
    if (x.size() != base.dim) throw Error(ErrorKind::DimensionMismatch, "ρ argument length");
    Mat<S> out = Mat<S>::Zero(mdim, mdim);
    for (int i = 0; i < base.dim; ++i)
        if (!is_zero(x(i))) out += x(i) * rho[i];
    return out;
}

template <Field S>
Mat<S> Representation<S>::mu_of(const Vec<S>& x, const Vec<S>& y) const {
    if (x.size() != base.dim || y.size() != base.dim) throw Error(ErrorKind::DimensionMismatch, "μ argument length");
    Mat<S> out = Mat<S>::Zero(mdim, mdim);
    for (int i = 0; i < base.dim; ++i) {
        if (is_zero(x(i))) continue;
        for (int j = 0; j < base.dim; ++j)
            if (!is_zero(y(j))) out += (x(i) * y(j)) * mu_e(i, j);
    }
    return out;
}

template <Field S>
Mat<S> d_op(const Representation<S>& r, const Vec<S>& x, const Vec<S>& y) {
    Mat<S> rx = r.rho_of(x), ry = r.rho_of(y);
    return r.mu_of(y, x) - r.mu_of(x, y) + rx * ry - ry * rx - r.rho_of(bracket2(r.base, x, y));
}

template <Field S>
CheckReport<S> check_rep(const Representation<S>& r) {
    const LyAlgebra<S>& g = r.base;
    const int n = g.dim;
    std::vector<Vec<S>> e;
    for (int i = 0; i < n; ++i) e.push_back(g.e(i));
    std::vector<Mat<S>> dd(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dd[static_cast<size_t>(i) * n + j] = d_op(r, e[i], e[j]);
    auto D = [&](int i, int j) -> const Mat<S>& { return dd[static_cast<size_t>(i) * n + j]; };
    auto rho = [&](int i) -> const Mat<S>& { return r.rho_e(i); };
    auto mu = [&](int i, int j) -> const Mat<S>& { return r.mu_e(i, j); };
    auto br = [&](int i, int j) { return bracket2(g, e[i], e[j]); };
    auto tr = [&](int i, int j, int k) { return bracket3(g, e[i], e[j], e[k]); };
    auto all3 = std::vector<int>{n, n, n};
    auto all4 = std::vector<int>{n, n, n, n};
    auto any = every_tuple();

    CheckReport<S> report;
    sweep_operator(report, "rep.mu-bracket-first", all3, any, [&](const std::vector<int>& t) {
        int x = t[0], y = t[1], z = t[2];
        return Mat<S>(r.mu_of(br(x, y), e[z]) - mu(x, z) * rho(y) + mu(y, z) * rho(x));
    });
    sweep_operator(report, "rep.mu-bracket-second", all3, any, [&](const std::vector<int>& t) {
        int x = t[0], y = t[1], z = t[2];
        return Mat<S>(r.mu_of(e[x], br(y, z)) - rho(y) * mu(x, z) + rho(z) * mu(x, y));
    });
    sweep_operator(report, "rep.rho-ternary", all3, any, [&](const std::vector<int>& t) {
        int x = t[0], y = t[1], z = t[2];
        return Mat<S>(r.rho_of(tr(x, y, z)) - (D(x, y) * rho(z) - rho(z) * D(x, y)));
    });
    sweep_operator(report, "rep.mu-mu", all4, any, [&](const std::vector<int>& t) {
        int x = t[0], y = t[1], z = t[2], w = t[3];
        return Mat<S>(mu(z, w) * mu(x, y) - mu(y, w) * mu(x, z) - r.mu_of(e[x], tr(y, z, w)) + D(y, z) * mu(x, w));
    });
    sweep_operator(report, "rep.mu-ternary", all4, any, [&](const std::vector<int>& t) {
        int x = t[0], y = t[1], z = t[2], w = t[3];
        return Mat<S>(r.mu_of(tr(x, y, z), e[w]) + r.mu_of(e[z], tr(x, y, w)) -
                      (D(x, y) * mu(z, w) - mu(z, w) * D(x, y)));
    });
    // Consequences of the five identities, evaluated as corroboration.
    sweep_operator(report, "rep.derived.D-cyclic", all3, any, [&](const std::vector<int>& t) {
        int x = t[0], y = t[1], z = t[2];
        return Mat<S>(d_op(r, br(x, y), e[z]) + d_op(r, br(y, z), e[x]) + d_op(r, br(z, x), e[y]));
    });
    sweep_operator(report, "rep.derived.D-ternary", all4, any, [&](const std::vector<int>& t) {
        int x = t[0], y = t[1], z = t[2], w = t[3];
        return Mat<S>(d_op(r, tr(x, y, z), e[w]) + d_op(r, e[z], tr(x, y, w)) - (D(x, y) * D(z, w) - D(z, w) * D(x, y)));
    });
    sweep_operator(report, "rep.derived.mu-expansion", all4, any, [&](const std::vector<int>& t) {
        int x = t[0], y = t[1], z = t[2], w = t[3];
        return Mat<S>(r.mu_of(tr(x, y, z), e[w]) - mu(x, w) * mu(z, y) + mu(y, w) * mu(z, x) + mu(z, w) * D(x, y));
    });
    return report;
}

template <Field S>
Representation<S> adjoint(const LyAlgebra<S>& g) {
    if (!check_ly(g).passed()) throw Error(ErrorKind::InvalidAlgebra, "adjoint needs an algebra passing check_ly");
    const int n = g.dim;
    std::vector<Mat<S>> rho(n, Mat<S>(n, n)), mu(static_cast<size_t>(n) * n, Mat<S>(n, n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) rho[i].col(k) = g.c.slice(i, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) mu[static_cast<size_t>(i) * n + j].col(k) = g.d.slice(k, i, j);
    return Representation<S>(g, n, rho, mu);
}

template <Field S>
Representation<S> dual(const Representation<S>& r) {
    if (!check_rep(r).passed())
        throw Error(ErrorKind::InvalidRepresentation, "dual needs a representation passing check_rep");
    const int n = r.base.dim;
    std::vector<Mat<S>> rho(n), mu(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) rho[i] = -r.rho_e(i).transpose();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mu[static_cast<size_t>(i) * n + j] = r.mu_e(j, i).transpose();
    return Representation<S>(r.base, r.mdim, rho, mu);
}

template <Field S>
Representation<S> coadjoint(const LyAlgebra<S>& g) {
    return dual(adjoint(g));
}

template <Field S>
LyAlgebra<S> semidirect(const LyAlgebra<S>& g, const Representation<S>& r) {
    if (!(r.base == g)) throw Error(ErrorKind::InvalidRepresentation, "representation is over a different algebra");
    if (!check_rep(r).passed())
        throw Error(ErrorKind::InvalidRepresentation, "semidirect product needs a representation passing check_rep");
    const int n = g.dim, m = r.mdim, N = n + m;
    Tensor3<S> c(N);
    Tensor4<S> d(N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) c(i, j, k) = g.c(i, j, k);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) d(i, j, k, l) = g.d(i, j, k, l);
        }
    // [e_i, v_a] = ρ(e_i) v_a
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                c(i, n + a, n + b) = r.rho_e(i)(b, a);
                c(n + a, i, n + b) = -r.rho_e(i)(b, a);
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat<S> dij = d_op(r, g.e(i), g.e(j));
            const Mat<S>& muij = r.mu_e(i, j);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    d(i, j, n + a, n + b) = dij(b, a);       // ⟦x,y,w⟧ = D(x,y)w
                    d(n + a, i, j, n + b) = muij(b, a);      // ⟦u,y,z⟧ = μ(y,z)u
                    d(i, n + a, j, n + b) = -muij(b, a);     // ⟦x,v,z⟧ = −μ(x,z)v
                }
        }
    return LyAlgebra<S>(c, d);
}

#define LYWB_INSTANTIATE(S)                                                           \
    template struct Representation<S>;                                                \
    template Mat<S> d_op(const Representation<S>&, const Vec<S>&, const Vec<S>&);     \
    template CheckReport<S> check_rep(const Representation<S>&);                      \
    template Representation<S> adjoint(const LyAlgebra<S>&);                          \
    template Representation<S> dual(const Representation<S>&);                        \
    template Representation<S> coadjoint(const LyAlgebra<S>&);                        \
    template LyAlgebra<S> semidirect(const LyAlgebra<S>&, const Representation<S>&);

LYWB_INSTANTIATE(Rational)
LYWB_INSTANTIATE(Gaussian)

}  // namespace lywb
