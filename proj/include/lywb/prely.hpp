#pragma once

#include "lywb/rep.hpp"

namespace lywb {

// a(i,j,k): e_k-coefficient of e_i*e_j; b(i,j,k,l): e_l-coefficient of {e_i,e_j,e_k}. No symmetry.
template <Field S>
struct PreLyAlgebra {
    int dim = 0;
    Tensor3<S> a;
    Tensor4<S> b;

    PreLyAlgebra() = default;
    PreLyAlgebra(Tensor3<S> a_, Tensor4<S> b_);
    static PreLyAlgebra zero(int n) { return PreLyAlgebra(Tensor3<S>(n), Tensor4<S>(n)); }

    Vec<S> e(int i) const { return unit<S>(dim, i); }

    friend bool operator==(const PreLyAlgebra& x, const PreLyAlgebra& y) { return x.a == y.a && x.b == y.b; }
};

// Symmetric nondegenerate form on a pre-LY algebra.
template <Field S>
struct InvariantForm {
    Mat<S> B;
    explicit InvariantForm(Mat<S> b);
};

template <Field S>
Vec<S> star(const PreLyAlgebra<S>& A, const Vec<S>& x, const Vec<S>& y);
template <Field S>
Vec<S> brace(const PreLyAlgebra<S>& A, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z);
// (x*y)*z − x*(y*z)
template <Field S>
Vec<S> associator(const PreLyAlgebra<S>& A, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z);
// {z,y,x} − {z,x,y} + (y,x,z) − (x,y,z)
template <Field S>
Vec<S> brace_d(const PreLyAlgebra<S>& A, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z);

template <Field S>
CheckReport<S> check_prely(const PreLyAlgebra<S>& A);
// The two remarked consequences; corroboration only, never gating.
template <Field S>
CheckReport<S> check_prely_consequences(const PreLyAlgebra<S>& A);

template <Field S>
LyAlgebra<S> sub_adjacent(const PreLyAlgebra<S>& A);
// L_x z = x*z and ℛ(x,y)z = {z,x,y}, as a representation of sub_adjacent(A) on A.
template <Field S>
Representation<S> lr_rep(const PreLyAlgebra<S>& A);

template <Field S>
CheckReport<S> check_invariant(const PreLyAlgebra<S>& A, const InvariantForm<S>& F);
template <Field S>
Mat<S> b_sharp(const InvariantForm<S>& F);

}  // namespace lywb
