#include "lywb/structmaps.hpp"

namespace lywb {

namespace {

bool before(const std::vector<int>& t) { return t[0] < t[1]; }

template <Field S>
void require_square(const LyAlgebra<S>& g, const Mat<S>& m, const char* what) {
    if (m.rows() != g.dim || m.cols() != g.dim)
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be " + std::to_string(g.dim) + "x" +
                                                      std::to_string(g.dim));
}

// Residuals of the two complex-structure integrability identities.
template <Field S>
Vec<S> ccom1(const LyAlgebra<S>& g, const Mat<S>& J, const Vec<S>& x, const Vec<S>& y) {
    Vec<S> jx = J * x, jy = J * y;
    return bracket2(g, jx, jy) - J * bracket2(g, jx, y) - J * bracket2(g, x, jy) - bracket2(g, x, y);
}

template <Field S>
Vec<S> ccom2(const LyAlgebra<S>& g, const Mat<S>& J, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
    Vec<S> jx = J * x, jy = J * y, jz = J * z;
    Vec<S> rhs = -bracket3(g, jx, jy, jz) + bracket3(g, jx, y, z) + bracket3(g, x, jy, z) + bracket3(g, x, y, jz) +
                 J * bracket3(g, jx, jy, z) + J * bracket3(g, jx, y, jz) + J * bracket3(g, x, jy, jz);
    return J * bracket3(g, x, y, z) - rhs;
}

template <Field S>
void require_product(const LyAlgebra<S>& g, const Mat<S>& E) {
    if (!check_product(g, E).passed()) throw Error(ErrorKind::NotProduct, "E is not a product structure");
}

template <Field S>
Mat<S> identity(long n) {
    return Mat<S>::Identity(n, n);
}

}  // namespace

template <Field S>
CheckReport<S> check_product(const LyAlgebra<S>& g, const Mat<S>& E) {
    require_square(g, E, "E");
    const int n = g.dim;
    const Mat<S> I = identity<S>(n);
    const Mat<S> sq = E * E - I;
    auto any = every_tuple();
    CheckReport<S> report;
    sweep(report, "E²≠Id", {n}, any, [&](const std::vector<int>& t) { return Vec<S>(sq.col(t[0])); });
    if (E == I || E == Mat<S>(-I)) report.add("E=±Id", {});
    sweep(report, "NI1", {n, n}, before, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), ex = E * x, ey = E * y;
        return Vec<S>(bracket2(g, ex, ey) - E * bracket2(g, ex, y) - E * bracket2(g, x, ey) + bracket2(g, x, y));
    });
    sweep(report, "NI2", {n, n, n}, before, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]), ex = E * x, ey = E * y, ez = E * z;
        Vec<S> rhs = E * bracket3(g, ex, ey, z) + E * bracket3(g, x, ey, ez) + E * bracket3(g, ex, y, ez) -
                     bracket3(g, ex, y, z) - bracket3(g, x, ey, z) - bracket3(g, x, y, ez) + E * bracket3(g, x, y, z);
        return Vec<S>(bracket3(g, ex, ey, ez) - rhs);
    });
    return report;
}

template <Field S>
std::pair<Subspace<S>, Subspace<S>> eigenspaces(const Mat<S>& E) {
    const long n = E.rows();
    if (E.cols() != n || E * E != identity<S>(n)) throw Error(ErrorKind::NotInvolution, "E² ≠ Id");
    const int m = static_cast<int>(n);
    return {Subspace<S>(m, kernel<S>(E - identity<S>(n))), Subspace<S>(m, kernel<S>(E + identity<S>(n)))};
}

template <Field S>
CheckReport<S> check_paracomplex(const LyAlgebra<S>& g, const Mat<S>& E) {
    require_product(g, E);
    auto [plus, minus] = eigenspaces(E);
    CheckReport<S> report;
    // The tuple carries the two dimensions.
    if (plus.dim() != minus.dim()) report.add("paracomplex.dims", {plus.dim(), minus.dim()});
    return report;
}

template <Field S>
CheckReport<S> check_perfect(const LyAlgebra<S>& g, const Mat<S>& E) {
    require_product(g, E);
    const int n = g.dim;
    CheckReport<S> report;
    sweep(report, "perfect", {n, n, n}, before, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]);
        return Vec<S>(E * bracket3(g, x, y, z) - bracket3(g, Vec<S>(E * x), Vec<S>(E * y), Vec<S>(E * z)));
    });
    return report;
}

template <Field S>
CheckReport<S> check_abelian(const LyAlgebra<S>& g, const Mat<S>& E) {
    require_product(g, E);
    auto [plus, minus] = eigenspaces(E);
    CheckReport<S> report;
    for (const auto& [name, u] : {std::pair{std::string("g+"), plus}, std::pair{std::string("g-"), minus}}) {
        const int k = u.dim();
        sweep(report, "abelian." + name + ".binary", {k, k}, before,
              [&](const std::vector<int>& t) { return bracket2(g, u.vector(t[0]), u.vector(t[1])); });
        sweep(report, "abelian." + name + ".ternary", {k, k, k}, before, [&](const std::vector<int>& t) {
            return bracket3(g, u.vector(t[0]), u.vector(t[1]), u.vector(t[2]));
        });
    }
    return report;
}

template <Field S>
CheckReport<S> check_complex(const LyAlgebra<S>& g, const Mat<S>& J) {
    require_square(g, J, "J");
    const int n = g.dim;
    const Mat<S> sq = J * J + identity<S>(n);
    auto any = every_tuple();
    CheckReport<S> report;
    sweep(report, "J²≠−Id", {n}, any, [&](const std::vector<int>& t) { return Vec<S>(sq.col(t[0])); });
    sweep(report, "ccom1", {n, n}, before,
          [&](const std::vector<int>& t) { return ccom1(g, J, g.e(t[0]), g.e(t[1])); });
    sweep(report, "ccom2", {n, n, n}, before,
          [&](const std::vector<int>& t) { return ccom2(g, J, g.e(t[0]), g.e(t[1]), g.e(t[2])); });
    return report;
}

template <Field S>
CheckReport<S> check_complex_product(const LyAlgebra<S>& g, const Mat<S>& J, const Mat<S>& E) {
    CheckReport<S> report = check_complex(g, J);
    report.append(check_product(g, E));
    const Mat<S> anti = E * J + J * E;
    sweep(report, "EJ=−JE", {g.dim}, every_tuple(), [&](const std::vector<int>& t) { return Vec<S>(anti.col(t[0])); });
    return report;
}

Mat<Gaussian> to_gaussian(const Mat<Rational>& m) { return m.cast<Gaussian>(); }
Vec<Gaussian> to_gaussian(const Vec<Rational>& v) { return v.cast<Gaussian>(); }

Tensor3<Gaussian> to_gaussian(const Tensor3<Rational>& t) {
    const int n = t.dim();
    Tensor3<Gaussian> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out(i, j, k) = Gaussian(t(i, j, k));
    return out;
}

Tensor4<Gaussian> to_gaussian(const Tensor4<Rational>& t) {
    const int n = t.dim();
    Tensor4<Gaussian> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) out(i, j, k, l) = Gaussian(t(i, j, k, l));
    return out;
}

std::pair<LyAlgebra<Gaussian>, Conjugation> complexify(const LyAlgebra<Rational>& g) {
    return {LyAlgebra<Gaussian>(to_gaussian(g.c), to_gaussian(g.d)), Conjugation{}};
}

std::pair<LyAlgebra<Gaussian>, Conjugation> complexify(const LyAlgebra<Gaussian>&) {
    throw Error(ErrorKind::FieldError, "algebra is already over Q(i)");
}

Vec<Rational> realify(const Vec<Gaussian>& v) {
    const long n = v.size();
    Vec<Rational> out(2 * n);
    for (long k = 0; k < n; ++k) {
        out(k) = v(k).re();
        out(n + k) = v(k).im();
    }
    return out;
}

Mat<Rational> realify(const Mat<Gaussian>& m) {
    const long r = m.rows(), c = m.cols();
    Mat<Rational> out(2 * r, 2 * c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) {
            out(i, j) = m(i, j).re();
            out(i, c + j) = -m(i, j).im();
            out(r + i, j) = m(i, j).im();
            out(r + i, c + j) = m(i, j).re();
        }
    return out;
}

Realification realify(const LyAlgebra<Gaussian>& g) {
    const int n = g.dim, N = 2 * n;
    // i^p for p = 0..3
    const Gaussian ipow[4] = {Gaussian(1), Gaussian::i(), Gaussian(-1), -Gaussian::i()};
    Tensor3<Rational> c(N);
    Tensor4<Rational> d(N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            int pab = a / n + b / n;
            c.set_slice(a, b, realify(Vec<Gaussian>(g.c.slice(a % n, b % n) * ipow[pab])));
            for (int k = 0; k < N; ++k)
                d.set_slice(a, b, k, realify(Vec<Gaussian>(g.d.slice(a % n, b % n, k % n) * ipow[pab + k / n])));
        }
    return {LyAlgebra<Rational>(c, d), realify(Mat<Gaussian>(Mat<Gaussian>::Identity(n, n) * Gaussian::i()))};
}

std::pair<Subspace<Gaussian>, Subspace<Gaussian>> decompose_pm_i(const LyAlgebra<Rational>& g, const Mat<Rational>& J) {
    if (!check_complex(g, J).passed()) throw Error(ErrorKind::NotComplexStructure, "J is not a complex structure");
    const int n = g.dim;
    const Mat<Gaussian> jc = to_gaussian(J);
    std::vector<Vec<Gaussian>> plus, minus;
    for (int k = 0; k < n; ++k) {
        Vec<Gaussian> x = unit<Gaussian>(n, k);
        plus.push_back(x - Gaussian::i() * (jc * x));
        minus.push_back(x + Gaussian::i() * (jc * x));
    }
    return {Subspace<Gaussian>::spanned_by(n, plus), Subspace<Gaussian>::spanned_by(n, minus)};
}

ComplexStructure<Gaussian> complex_from_product(const LyAlgebra<Gaussian>& g, const Mat<Gaussian>& E) {
    require_product(g, E);
    return {Mat<Gaussian>(-Gaussian::i() * E)};
}

ComplexStructure<Gaussian> complex_from_product(const LyAlgebra<Rational>&, const Mat<Rational>&) {
    throw Error(ErrorKind::FieldError, "J = −iE needs an algebra over Q(i)");
}

ProductStructure<Gaussian> para_from_complex(const LyAlgebra<Rational>& g, const Mat<Rational>& J) {
    if (!check_complex(g, J).passed()) throw Error(ErrorKind::NotComplexStructure, "J is not a complex structure");
    return {Mat<Gaussian>(-Gaussian::i() * to_gaussian(J))};
}

template <Field S>
ComplexStructure<S> j_from_phi(const Mat<S>& E, const Mat<S>& phi) {
    auto [plus, minus] = eigenspaces(E);
    const int p = plus.dim(), m = minus.dim();
    if (phi.rows() != m || phi.cols() != p || p != m || is_zero(det<S>(phi)))
        throw Error(ErrorKind::NotIso, "phi is not an isomorphism g+ -> g-");
    const Mat<S> P = hstack<S>(plus.basis(), minus.basis());
    Mat<S> M = Mat<S>::Zero(p + m, p + m);
    M.topRightCorner(p, m) = -invert<S>(phi);
    M.bottomLeftCorner(m, p) = phi;
    return {Mat<S>(P * M * invert<S>(P))};
}

template <Field S>
CheckReport<S> check_phi(const LyAlgebra<S>& g, const Mat<S>& E, const Mat<S>& phi) {
    require_square(g, E, "E");
    if (!check_product(g, E).passed() || !check_paracomplex(g, E).passed() || !check_perfect(g, E).passed())
        throw Error(ErrorKind::NotPerfect, "E is not a perfect paracomplex structure");
    const Mat<S> J = j_from_phi(E, phi).J;
    const Subspace<S> plus = eigenspaces(E).first;
    const int p = plus.dim();
    CheckReport<S> report;
    sweep(report, "c.p", {p, p}, before,
          [&](const std::vector<int>& t) { return ccom1(g, J, plus.vector(t[0]), plus.vector(t[1])); });
    sweep(report, "c.p2", {p, p, p}, before, [&](const std::vector<int>& t) {
        return ccom2(g, J, plus.vector(t[0]), plus.vector(t[1]), plus.vector(t[2]));
    });
    return report;
}

template <Field S>
SplitAlgebra<S> e_on_semidirect(const PreLyAlgebra<S>& A) {
    const int n = A.dim;
    LyAlgebra<S> g = sub_adjacent(A);
    return {semidirect(g, dual(lr_rep(A))), {block_diag<S>(identity<S>(n), Mat<S>(-identity<S>(n)))}};
}

template <Field S>
ComplexStructure<S> j_from_b(const PreLyAlgebra<S>& A, const InvariantForm<S>& F) {
    if (!check_invariant(A, F).passed()) throw Error(ErrorKind::NotInvariant, "form is not invariant");
    const int n = A.dim;
    const Mat<S> B = b_sharp(F);
    Mat<S> J = Mat<S>::Zero(2 * n, 2 * n);
    J.topRightCorner(n, n) = -invert<S>(B);
    J.bottomLeftCorner(n, n) = B;
    return {J};
}

template <Field S>
AffAlgebra<S> aff(const PreLyAlgebra<S>& A) {
    const int n = A.dim;
    LyAlgebra<S> g = sub_adjacent(A);
    Mat<S> J = Mat<S>::Zero(2 * n, 2 * n);
    J.topRightCorner(n, n) = -identity<S>(n);
    J.bottomLeftCorner(n, n) = identity<S>(n);
    return {semidirect(g, lr_rep(A)), {J}, {block_diag<S>(identity<S>(n), Mat<S>(-identity<S>(n)))}};
}

#define LYWB_INSTANTIATE(S)                                                                                   \
    template CheckReport<S> check_product(const LyAlgebra<S>&, const Mat<S>&);                                \
    template std::pair<Subspace<S>, Subspace<S>> eigenspaces(const Mat<S>&);                                  \
    template CheckReport<S> check_paracomplex(const LyAlgebra<S>&, const Mat<S>&);                            \
    template CheckReport<S> check_perfect(const LyAlgebra<S>&, const Mat<S>&);                                \
    template CheckReport<S> check_abelian(const LyAlgebra<S>&, const Mat<S>&);                                \
    template CheckReport<S> check_complex(const LyAlgebra<S>&, const Mat<S>&);                                \
    template CheckReport<S> check_complex_product(const LyAlgebra<S>&, const Mat<S>&, const Mat<S>&);         \
    template ComplexStructure<S> j_from_phi(const Mat<S>&, const Mat<S>&);                                    \
    template CheckReport<S> check_phi(const LyAlgebra<S>&, const Mat<S>&, const Mat<S>&);                     \
    template SplitAlgebra<S> e_on_semidirect(const PreLyAlgebra<S>&);                                         \
    template ComplexStructure<S> j_from_b(const PreLyAlgebra<S>&, const InvariantForm<S>&);                   \
    template AffAlgebra<S> aff(const PreLyAlgebra<S>&);

LYWB_INSTANTIATE(Rational)
LYWB_INSTANTIATE(Gaussian)

}  // namespace lywb
