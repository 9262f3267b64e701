#pragma once

#include <vector>

#include "lywb/lyalg.hpp"

namespace lywb {

// rho[i] = ρ(e_i) and mu[i*n+j] = μ(e_i,e_j), each mdim × mdim.
template <Field S>
struct Representation {
    LyAlgebra<S> base;
    int mdim = 0;
    std::vector<Mat<S>> rho;
    std::vector<Mat<S>> mu;

    Representation() = default;
    Representation(LyAlgebra<S> base_, int mdim_, std::vector<Mat<S>> rho_, std::vector<Mat<S>> mu_);
    static Representation zero(const LyAlgebra<S>& g, int mdim);

    const Mat<S>& rho_e(int i) const { return rho[i]; }
    const Mat<S>& mu_e(int i, int j) const { return mu[static_cast<size_t>(i) * base.dim + j]; }
    Mat<S> rho_of(const Vec<S>& x) const;
    Mat<S> mu_of(const Vec<S>& x, const Vec<S>& y) const;

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.base == b.base && a.mdim == b.mdim && a.rho == b.rho && a.mu == b.mu;
    }
};

// D(x,y) = μ(y,x) − μ(x,y) + [ρ(x),ρ(y)] − ρ([x,y]).
template <Field S>
Mat<S> d_op(const Representation<S>& r, const Vec<S>& x, const Vec<S>& y);

template <Field S>
CheckReport<S> check_rep(const Representation<S>& r);

template <Field S>
Representation<S> adjoint(const LyAlgebra<S>& g);
template <Field S>
Representation<S> dual(const Representation<S>& r);
template <Field S>
Representation<S> coadjoint(const LyAlgebra<S>& g);
template <Field S>
LyAlgebra<S> semidirect(const LyAlgebra<S>& g, const Representation<S>& r);

}  // namespace lywb
