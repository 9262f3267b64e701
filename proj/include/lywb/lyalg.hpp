#pragma once

#include "lywb/linalg.hpp"
#include "lywb/report.hpp"

namespace lywb {

// Structure constants of a Lie-Yamaguti algebra on basis e_1..e_n.
// c(i,j,k): [e_i,e_j] has e_k-coefficient c(i,j,k); d(i,j,k,l) likewise for the ternary bracket.
// Only skew symmetry is enforced here; the axioms are left to check_ly.
template <Field S>
struct LyAlgebra {
    int dim = 0;
    Tensor3<S> c;
    Tensor4<S> d;

    LyAlgebra() = default;
    LyAlgebra(Tensor3<S> c_, Tensor4<S> d_);

    Vec<S> e(int i) const { return unit<S>(dim, i); }

    friend bool operator==(const LyAlgebra& a, const LyAlgebra& b) { return a.c == b.c && a.d == b.d; }
};

template <Field S>
class Subspace {
public:
    Subspace(int ambient, Mat<S> basis);
    static Subspace span(const std::vector<Vec<S>>& vectors);
    // Keeps a maximal independent prefix-greedy subset; dependent input is fine.
    static Subspace spanned_by(int ambient, const std::vector<Vec<S>>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const Mat<S>& basis() const { return basis_; }
    Vec<S> vector(int i) const { return basis_.col(i); }
    bool contains(const Vec<S>& v) const;

private:
    int ambient_;
    Mat<S> basis_;
};

template <Field S>
Vec<S> bracket2(const LyAlgebra<S>& g, const Vec<S>& x, const Vec<S>& y);
template <Field S>
Vec<S> bracket3(const LyAlgebra<S>& g, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z);

template <Field S>
CheckReport<S> check_ly(const LyAlgebra<S>& g);

// Treats a Lie bracket as an LY algebra with the ternary bracket [[x,y],z].
template <Field S>
LyAlgebra<S> from_lie(const Tensor3<S>& bracket);

template <Field S>
bool is_subalgebra(const LyAlgebra<S>& g, const Subspace<S>& u);
template <Field S>
bool is_abelian_on(const LyAlgebra<S>& g, const Subspace<S>& u);
template <Field S>
bool is_isotropic(const Mat<S>& f, const Subspace<S>& u);

}  // namespace lywb
