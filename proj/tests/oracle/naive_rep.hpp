#pragma once

// Naive matrices (nested std::vector) for evaluating representation identities independently.

#include "lywb/rep.hpp"
#include "oracle/naive.hpp"

namespace oracle {

template <class S>
using NM = std::vector<std::vector<S>>;

template <class S>
NM<S> nm(const lywb::Mat<S>& m) {
    NM<S> out(m.rows(), std::vector<S>(m.cols()));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}
template <class S>
NM<S> mul(const NM<S>& a, const NM<S>& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    NM<S> out(n, std::vector<S>(m, S(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
    return out;
}
template <class S>
NM<S> lin(const NM<S>& a, const NM<S>& b, S s = S(1)) {
    NM<S> out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += s * b[i][j];
    return out;
}
template <class S>
bool zero(const NM<S>& a) {
    for (auto& row : a)
        for (auto& s : row)
            if (!lywb::is_zero(s)) return false;
    return true;
}

template <class S>
struct NaiveRep {
    const lywb::Representation<S>& r;
    int n() const { return r.base.dim; }
    NM<S> rho(const V<S>& x) const {
        NM<S> out(r.mdim, std::vector<S>(r.mdim, S(0)));
        for (int i = 0; i < n(); ++i) out = lin(out, nm(r.rho_e(i)), x[i]);
        return out;
    }
    NM<S> mu(const V<S>& x, const V<S>& y) const {
        NM<S> out(r.mdim, std::vector<S>(r.mdim, S(0)));
        for (int i = 0; i < n(); ++i)
            for (int j = 0; j < n(); ++j) out = lin(out, nm(r.mu_e(i, j)), x[i] * y[j]);
        return out;
    }
    NM<S> D(const V<S>& x, const V<S>& y) const {
        Algebra<S> g = wrap(r.base);
        NM<S> out = lin(mu(y, x), mu(x, y), S(-1));
        out = lin(out, mul(rho(x), rho(y)));
        out = lin(out, mul(rho(y), rho(x)), S(-1));
        return lin(out, rho(g.br(x, y)), S(-1));
    }
    // μ([x,y],z) − μ(x,z)ρ(y) + μ(y,z)ρ(x)
    NM<S> mu_bracket_first(int a, int b, int c) const {
        Algebra<S> g = wrap(r.base);
        auto x = g.e(a), y = g.e(b), z = g.e(c);
        NM<S> out = mu(g.br(x, y), z);
        out = lin(out, mul(mu(x, z), rho(y)), S(-1));
        return lin(out, mul(mu(y, z), rho(x)));
    }
    // μ(z,w)μ(x,y) − μ(y,w)μ(x,z) − μ(x,⟦y,z,w⟧) + D(y,z)μ(x,w)
    NM<S> mu_mu(int a, int b, int c, int d) const {
        Algebra<S> g = wrap(r.base);
        auto x = g.e(a), y = g.e(b), z = g.e(c), w = g.e(d);
        NM<S> out = mul(mu(z, w), mu(x, y));
        out = lin(out, mul(mu(y, w), mu(x, z)), S(-1));
        out = lin(out, mu(x, g.tr(y, z, w)), S(-1));
        return lin(out, mul(D(y, z), mu(x, w)));
    }
};

}  // namespace oracle
