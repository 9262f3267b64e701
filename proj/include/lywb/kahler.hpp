#pragma once

#include "lywb/structmaps.hpp"

namespace lywb {

// Bilinear forms are matrices F with F(x,y) = xᵀ F y.

// Ids: "skew" (per column of W + Wᵀ), "nondegenerate" (residual: a kernel vector),
// "sym1" (x<y<z), "sym2" (x<y, z<w). Residuals of the identities are 1-vectors.
template <Field S>
CheckReport<S> check_symplectic(const LyAlgebra<S>& g, const Mat<S>& W);

// Ids: "symmetric", "nondegenerate", "invr1", "invr2", "invr3", and the intertwining of the
// adjoint and coadjoint representations by B: "iso.rho" (per x) and "iso.mu" (per x, y),
// one violation per nonzero column.
template <Field S>
CheckReport<S> check_quadratic(const LyAlgebra<S>& g, const Mat<S>& B);

// check_symplectic + check_product (+ check_paracomplex when E is a product structure)
// + "para": ω(Ex,Ey) = −ω(x,y) for x<y.
template <Field S>
CheckReport<S> check_para_kahler(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E);

// E = Id on U, −Id on V. Throws NotComplementary, NotSubalgebra, NotIsotropic.
template <Field S>
ProductStructure<S> para_from_isotropic(const LyAlgebra<S>& g, const Mat<S>& W, const Subspace<S>& U,
                                        const Subspace<S>& V);

// Checks the structure of a phase space: g₊ and g₋ isotropic ("isotropic.g+", "isotropic.g-") and
// paired nondegenerately by ω ("pairing"), so g₋ ≅ g₊*. Throws PreconditionFailed unless para-Kähler.
template <Field S>
CheckReport<S> check_phase_space_shape(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E);

template <Field S>
struct PhaseSpace {
    LyAlgebra<S> algebra;
    Mat<S> W;  // [[0, −I], [I, 0]]
    Mat<S> E;  // diag(I, −I)
};

// e_on_semidirect(A) with the canonical pairing form. Throws InvalidPreLy.
template <Field S>
PhaseSpace<S> phase_space(const PreLyAlgebra<S>& A);

// ω(x*y,z) = −ω(y,[x,z]) and ω({x,y,z},w) = ω(x,⟦w,z,y⟧), solved per basis tuple. Throws NotSymplectic.
template <Field S>
PreLyAlgebra<S> induced_prely(const LyAlgebra<S>& g, const Mat<S>& W);

// "induced.D": ω({x,y,z}_D,w) + ω(z,⟦x,y,w⟧) on all basis tuples (1-vector residuals).
template <Field S>
CheckReport<S> check_induced_d(const LyAlgebra<S>& g, const Mat<S>& W, const PreLyAlgebra<S>& A);

// On the induced pre-LY: "a1" E(x*y) = Ex*y, "a2" E{x,y,z} = −{Ex,y,z}+{x,Ey,z}+{x,y,Ez},
// "a2.D" E{x,y,z}_D = {Ex,y,z}_D+{x,Ey,z}_D−{x,y,Ez}_D.
// Throws PreconditionFailed naming "para-kahler", "abelian" or "perfect", checked in that order.
template <Field S>
CheckReport<S> check_perfect_abelian_identities(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E);

// "closure.g±.star", "closure.g±.brace": each eigenspace is closed under the induced products.
// Throws PreconditionFailed unless para-Kähler.
template <Field S>
CheckReport<S> isotropic_prely_closure(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E);

template <Field S>
struct Metric {
    Mat<S> S_;
    // Throws NotSymmetric, Degenerate.
    explicit Metric(Mat<S> s);
    const Mat<S>& matrix() const { return S_; }
};

// S = W·E, i.e. S(x,y) = ω(x,Ey). Throws NotKahlerPair unless E² = Id and ω(Ex,Ey) = −ω(x,y).
template <Field S>
Metric<S> metric_from_para(const Mat<S>& W, const Mat<S>& E);
// S = W·J. Throws NotKahlerPair unless J² = −Id and ω(Jx,Jy) = ω(x,y).
template <Field S>
Metric<S> metric_from_pseudo(const Mat<S>& W, const Mat<S>& J);

template <Field S>
struct LeviCivita {
    Tensor3<S> nabla;  // nabla(x,y,k): e_k-coefficient of ∇_{e_x} e_y
    Tensor4<S> delta;  // delta(x,y,z,k): e_k-coefficient of Δ_{e_x,e_y} e_z
};

// S(∇_x y,z) = S([x,y],z)+S([z,x],y)+S([z,y],x),
// 3S(Δ_{x,y}z,w) = S(⟦x,y,w⟧,z)+S(⟦x,y,z⟧,w)+S(⟦w,z,x⟧,y)+2S(⟦w,z,y⟧,x).
// Solved exactly and re-verified; a nonzero residual throws Internal.
template <Field S>
LeviCivita<S> levi_civita(const LyAlgebra<S>& g, const Metric<S>& metric);

// Residuals of the two defining identities: "lc.nabla" (x,y,z), "lc.delta" (x,y,z,w).
template <Field S>
CheckReport<S> check_levi_civita(const LyAlgebra<S>& g, const Metric<S>& metric, const LeviCivita<S>& lc);

// With S = W·E and the induced pre-LY: "lc.E-delta" EΔ_{x,y}z = Δ_{Ex,Ey}Ez (only when E is perfect);
// "lc.nabla.g±" ∇ = * and "lc.delta.g±" Δ = {·,·,·} on each eigenspace; "lc.delta-D.g±" Δ = {·,·,·}_D
// on each eigenspace, only when S is quadratic. Eigenspace tuples use eigenspace coordinates.
// Throws PreconditionFailed unless para-Kähler.
template <Field S>
CheckReport<S> check_lc_properties(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E);

// check_symplectic + check_complex + "pse": ω(Jx,Jy) = ω(x,y) for x<y.
template <Field S>
CheckReport<S> check_pseudo_kahler(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& J);

// check_pseudo_kahler + "kahler.minor": the first nonpositive leading minor of W·J
// (index in the tuple, minor in the residual).
CheckReport<Rational> check_kahler(const LyAlgebra<Rational>& g, const Mat<Rational>& W, const Mat<Rational>& J);

template <Field S>
struct KahlerTriple {
    LyAlgebra<S> algebra;
    Mat<S> W;
    Mat<S> J;
};

template <Field S>
struct ParaKahlerTriple {
    LyAlgebra<S> algebra;
    Mat<S> W;
    Mat<S> E;
};

// Re F on the real basis (e_1..e_n, ie_1..ie_n) of a bilinear form F over Q(i).
Mat<Rational> realify_form(const Mat<Gaussian>& f);

// (g_ℝ, Re ω, J = iE). Throws NotParaKahler.
KahlerTriple<Rational> pseudo_from_para(const LyAlgebra<Gaussian>& g, const Mat<Gaussian>& W, const Mat<Gaussian>& E);
// (g_ℂ, ω_ℂ, E = −iJ_ℂ). Throws NotPseudoKahler.
ParaKahlerTriple<Gaussian> para_from_pseudo(const LyAlgebra<Rational>& g, const Mat<Rational>& W,
                                            const Mat<Rational>& J);

// (phase space of A, W_p, −J) with J = j_from_b(A, F). Throws NotInvariant, NotPositiveDefinite.
KahlerTriple<Rational> kahler_on_phase_space(const PreLyAlgebra<Rational>& A, const InvariantForm<Rational>& F);

}  // namespace lywb
