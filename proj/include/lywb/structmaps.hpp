#pragma once

#include <utility>

#include "lywb/prely.hpp"

namespace lywb {

// Matrices act on column coordinate vectors: column j is the image of e_j.
template <Field S>
struct ProductStructure {
    Mat<S> E;
};

template <Field S>
struct ComplexStructure {
    Mat<S> J;
};

// Ids: "E²≠Id" (per column), "E=±Id", "NI1" (x<y), "NI2" (x<y, all z).
template <Field S>
CheckReport<S> check_product(const LyAlgebra<S>& g, const Mat<S>& E);

// (g₊, g₋): kernels of E − Id and E + Id.
template <Field S>
std::pair<Subspace<S>, Subspace<S>> eigenspaces(const Mat<S>& E);

// These three throw NotProduct unless check_product passes.
template <Field S>
CheckReport<S> check_paracomplex(const LyAlgebra<S>& g, const Mat<S>& E);
// E⟦x,y,z⟧ = ⟦Ex,Ey,Ez⟧.
template <Field S>
CheckReport<S> check_perfect(const LyAlgebra<S>& g, const Mat<S>& E);
// Both brackets vanish on g₊ and on g₋; tuples are in eigenspace coordinates.
template <Field S>
CheckReport<S> check_abelian(const LyAlgebra<S>& g, const Mat<S>& E);

// Ids: "J²≠−Id" (per column), "ccom1" (x<y), "ccom2" (x<y, all z).
template <Field S>
CheckReport<S> check_complex(const LyAlgebra<S>& g, const Mat<S>& J);

// check_complex + check_product + "EJ=−JE" per column.
template <Field S>
CheckReport<S> check_complex_product(const LyAlgebra<S>& g, const Mat<S>& J, const Mat<S>& E);

// Conjugation x + iy ↦ x − iy of a complexified real space, in the real basis.
struct Conjugation {
    Vec<Gaussian> operator()(const Vec<Gaussian>& v) const { return v.unaryExpr([](const Gaussian& z) { return z.conj(); }); }
    Mat<Gaussian> operator()(const Mat<Gaussian>& m) const { return m.unaryExpr([](const Gaussian& z) { return z.conj(); }); }
    Subspace<Gaussian> operator()(const Subspace<Gaussian>& u) const { return Subspace<Gaussian>(u.ambient(), (*this)(u.basis())); }
};

Mat<Gaussian> to_gaussian(const Mat<Rational>& m);
Vec<Gaussian> to_gaussian(const Vec<Rational>& v);
Tensor3<Gaussian> to_gaussian(const Tensor3<Rational>& t);
Tensor4<Gaussian> to_gaussian(const Tensor4<Rational>& t);

std::pair<LyAlgebra<Gaussian>, Conjugation> complexify(const LyAlgebra<Rational>& g);
// Always throws FieldError.
std::pair<LyAlgebra<Gaussian>, Conjugation> complexify(const LyAlgebra<Gaussian>& g);

// Real form on the basis (e_1..e_n, ie_1..ie_n).
struct Realification {
    LyAlgebra<Rational> algebra;
    Mat<Rational> i;  // multiplication by i
};

Realification realify(const LyAlgebra<Gaussian>& g);
// [[Re, −Im], [Im, Re]]: the real matrix of a complex-linear map.
Mat<Rational> realify(const Mat<Gaussian>& m);
Vec<Rational> realify(const Vec<Gaussian>& v);

// (g_i, g_{−i}) = ({x − iJx}, {x + iJx}) inside complexify(g). Throws NotComplexStructure.
std::pair<Subspace<Gaussian>, Subspace<Gaussian>> decompose_pm_i(const LyAlgebra<Rational>& g, const Mat<Rational>& J);

// J = −iE. Throws NotProduct; the rational overload throws FieldError.
ComplexStructure<Gaussian> complex_from_product(const LyAlgebra<Gaussian>& g, const Mat<Gaussian>& E);
ComplexStructure<Gaussian> complex_from_product(const LyAlgebra<Rational>& g, const Mat<Rational>& E);

// E = −iJ_ℂ on complexify(g). Throws NotComplexStructure.
ProductStructure<Gaussian> para_from_complex(const LyAlgebra<Rational>& g, const Mat<Rational>& J);

// J(x + α) = −φ⁻¹(α) + φ(x) for x ∈ g₊, α ∈ g₋. φ is dim g₋ × dim g₊ in the bases from eigenspaces(E).
// Throws NotIso.
template <Field S>
ComplexStructure<S> j_from_phi(const Mat<S>& E, const Mat<S>& phi);

// Integrability of j_from_phi(E, φ) on g₊ tuples: "c.p" (pairs x<y), "c.p2" (x<y, all z),
// indices in g₊ coordinates. Throws NotPerfect unless E is a perfect paracomplex structure.
template <Field S>
CheckReport<S> check_phi(const LyAlgebra<S>& g, const Mat<S>& E, const Mat<S>& phi);

template <Field S>
struct SplitAlgebra {
    LyAlgebra<S> algebra;
    ProductStructure<S> E;
};

// A^c ⋉ A* via the dual of lr_rep(A), with E = diag(Id, −Id). Throws InvalidPreLy.
template <Field S>
SplitAlgebra<S> e_on_semidirect(const PreLyAlgebra<S>& A);

// J = [[0, −B⁻¹], [B, 0]] on e_on_semidirect(A). Throws NotInvariant.
template <Field S>
ComplexStructure<S> j_from_b(const PreLyAlgebra<S>& A, const InvariantForm<S>& F);

template <Field S>
struct AffAlgebra {
    LyAlgebra<S> algebra;
    ComplexStructure<S> J;
    ProductStructure<S> E;
};

// A^c ⋉ A via lr_rep(A) with J(x,y) = (−y,x), E(x,y) = (x,−y). Throws InvalidPreLy.
template <Field S>
AffAlgebra<S> aff(const PreLyAlgebra<S>& A);

}  // namespace lywb
