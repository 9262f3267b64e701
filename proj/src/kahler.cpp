#include "lywb/kahler.hpp"

namespace lywb {

namespace {

bool before(const std::vector<int>& t) { return t[0] < t[1]; }
bool before_both(const std::vector<int>& t) { return t[0] < t[1] && t[2] < t[3]; }

template <Field S>
S form(const Mat<S>& f, const Vec<S>& x, const Vec<S>& y) {
    return (x.transpose() * f * y)(0, 0);
}

template <Field S>
Vec<S> scalar(const S& s) {
    Vec<S> v(1);
    v(0) = s;
    return v;
}

template <Field S>
Mat<S> identity(long n) {
    return Mat<S>::Identity(n, n);
}

template <Field S>
void require_form(const LyAlgebra<S>& g, const Mat<S>& f, const char* what) {
    if (f.rows() != g.dim || f.cols() != g.dim)
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be " + std::to_string(g.dim) + "x" +
                                                      std::to_string(g.dim));
}

template <Field S>
void require_para_kahler(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E) {
    if (!check_para_kahler(g, W, E).passed()) throw Error(ErrorKind::PreconditionFailed, "para-kahler");
}

// Nonzero kernel vectors of f, one violation each.
template <Field S>
void nondegeneracy(CheckReport<S>& report, const Mat<S>& f) {
    const Mat<S> k = kernel<S>(f);
    for (Eigen::Index j = 0; j < k.cols(); ++j) report.add("nondegenerate", {}, Vec<S>(k.col(j)));
}

}  // namespace

template <Field S>
CheckReport<S> check_symplectic(const LyAlgebra<S>& g, const Mat<S>& W) {
    require_form(g, W, "W");
    const int n = g.dim;
    const Mat<S> sym = W + W.transpose();
    CheckReport<S> report;
    sweep(report, "skew", {n}, every_tuple(), [&](const std::vector<int>& t) { return Vec<S>(sym.col(t[0])); });
    nondegeneracy(report, W);
    sweep(report, "sym1", {n, n, n}, [](const std::vector<int>& t) { return t[0] < t[1] && t[1] < t[2]; },
          [&](const std::vector<int>& t) {
              Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]);
              return scalar(form(W, x, bracket2(g, y, z)) + form(W, y, bracket2(g, z, x)) +
                            form(W, z, bracket2(g, x, y)));
          });
    sweep(report, "sym2", {n, n, n, n}, before_both, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]), w = g.e(t[3]);
        return scalar(form(W, z, bracket3(g, x, y, w)) - form(W, x, bracket3(g, w, z, y)) +
                      form(W, y, bracket3(g, w, z, x)) - form(W, w, bracket3(g, x, y, z)));
    });
    return report;
}

template <Field S>
CheckReport<S> check_quadratic(const LyAlgebra<S>& g, const Mat<S>& B) {
    require_form(g, B, "B");
    const int n = g.dim;
    const Mat<S> skew = B - B.transpose();
    auto any = every_tuple();
    CheckReport<S> report;
    sweep(report, "symmetric", {n}, any, [&](const std::vector<int>& t) { return Vec<S>(skew.col(t[0])); });
    nondegeneracy(report, B);
    sweep(report, "invr1", {n, n, n}, any, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]);
        return scalar(form(B, bracket2(g, x, y), z) + form(B, y, bracket2(g, x, z)));
    });
    sweep(report, "invr2", {n, n, n, n}, any, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]), w = g.e(t[3]);
        return scalar(form(B, bracket3(g, x, y, z), w) - form(B, x, bracket3(g, w, z, y)));
    });
    sweep(report, "invr3", {n, n, n, n}, any, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]), w = g.e(t[3]);
        return scalar(form(B, bracket3(g, x, y, z), w) + form(B, z, bracket3(g, x, y, w)));
    });
    const Representation<S> ad = adjoint(g), co = coadjoint(g);
    sweep_operator(report, "iso.rho", {n}, any,
                   [&](const std::vector<int>& t) { return Mat<S>(B * ad.rho_e(t[0]) - co.rho_e(t[0]) * B); });
    sweep_operator(report, "iso.mu", {n, n}, any, [&](const std::vector<int>& t) {
        return Mat<S>(B * ad.mu_e(t[0], t[1]) - co.mu_e(t[0], t[1]) * B);
    });
    return report;
}

template <Field S>
CheckReport<S> check_para_kahler(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E) {
    CheckReport<S> report = check_symplectic(g, W);
    CheckReport<S> product = check_product(g, E);
    const bool is_product = product.passed();
    report.append(product);
    if (is_product) report.append(check_paracomplex(g, E));
    sweep(report, "para", {g.dim, g.dim}, before, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]);
        return scalar(form(W, Vec<S>(E * x), Vec<S>(E * y)) + form(W, x, y));
    });
    return report;
}

template <Field S>
ProductStructure<S> para_from_isotropic(const LyAlgebra<S>& g, const Mat<S>& W, const Subspace<S>& U,
                                        const Subspace<S>& V) {
    require_form(g, W, "W");
    const int n = g.dim;
    if (U.ambient() != n || V.ambient() != n)
        throw Error(ErrorKind::DimensionMismatch, "subspaces must live in dimension " + std::to_string(n));
    const Mat<S> P = hstack<S>(U.basis(), V.basis());
    if (U.dim() + V.dim() != n || rank<S>(P) != n)
        throw Error(ErrorKind::NotComplementary, "dims " + std::to_string(U.dim()) + " + " + std::to_string(V.dim()));
    if (!is_subalgebra(g, U)) throw Error(ErrorKind::NotSubalgebra, "U");
    if (!is_subalgebra(g, V)) throw Error(ErrorKind::NotSubalgebra, "V");
    if (!is_isotropic(W, U)) throw Error(ErrorKind::NotIsotropic, "U");
    if (!is_isotropic(W, V)) throw Error(ErrorKind::NotIsotropic, "V");
    const Mat<S> D = block_diag<S>(identity<S>(U.dim()), Mat<S>(-identity<S>(V.dim())));
    return {Mat<S>(P * D * invert<S>(P))};
}

template <Field S>
CheckReport<S> check_phase_space_shape(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E) {
    require_para_kahler(g, W, E);
    auto [plus, minus] = eigenspaces(E);
    CheckReport<S> report;
    for (const auto& [name, u] : {std::pair{std::string("g+"), plus}, std::pair{std::string("g-"), minus}}) {
        const int k = u.dim();
        sweep(report, "isotropic." + name, {k, k}, before,
              [&](const std::vector<int>& t) { return scalar(form(W, u.vector(t[0]), u.vector(t[1]))); });
    }
    // ω pairs g₊ with g₋; a kernel vector (in g₋ coordinates) means g₋ ≇ g₊*.
    const Mat<S> pairing = plus.basis().transpose() * W * minus.basis();
    const Mat<S> k = kernel<S>(pairing);
    for (Eigen::Index j = 0; j < k.cols(); ++j) report.add("pairing", {}, Vec<S>(k.col(j)));
    return report;
}

template <Field S>
PhaseSpace<S> phase_space(const PreLyAlgebra<S>& A) {
    const int n = A.dim;
    SplitAlgebra<S> split = e_on_semidirect(A);
    Mat<S> W = Mat<S>::Zero(2 * n, 2 * n);
    W.topRightCorner(n, n) = -identity<S>(n);
    W.bottomLeftCorner(n, n) = identity<S>(n);
    return {std::move(split.algebra), W, std::move(split.E.E)};
}

template <Field S>
PreLyAlgebra<S> induced_prely(const LyAlgebra<S>& g, const Mat<S>& W) {
    if (!check_symplectic(g, W).passed()) throw Error(ErrorKind::NotSymplectic, "W is not a symplectic form");
    const int n = g.dim;
    const Mat<S> Wt = W.transpose();
    Tensor3<S> a(n);
    Tensor4<S> b(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Vec<S> r(n);
            for (int z = 0; z < n; ++z) r(z) = -form(W, g.e(y), bracket2(g, g.e(x), g.e(z)));
            a.set_slice(x, y, solve<S>(Wt, r));
            for (int z = 0; z < n; ++z) {
                Vec<S> s(n);
                for (int w = 0; w < n; ++w) s(w) = form(W, g.e(x), bracket3(g, g.e(w), g.e(z), g.e(y)));
                b.set_slice(x, y, z, solve<S>(Wt, s));
            }
        }
    return {a, b};
}

template <Field S>
CheckReport<S> check_induced_d(const LyAlgebra<S>& g, const Mat<S>& W, const PreLyAlgebra<S>& A) {
    require_form(g, W, "W");
    const int n = g.dim;
    if (A.dim != n) throw Error(ErrorKind::DimensionMismatch, "pre-LY algebra has the wrong dimension");
    CheckReport<S> report;
    sweep(report, "induced.D", {n, n, n, n}, every_tuple(), [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]), w = g.e(t[3]);
        return scalar(form(W, brace_d(A, x, y, z), w) + form(W, z, bracket3(g, x, y, w)));
    });
    return report;
}

template <Field S>
CheckReport<S> check_perfect_abelian_identities(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E) {
    require_para_kahler(g, W, E);
    if (!check_abelian(g, E).passed()) throw Error(ErrorKind::PreconditionFailed, "abelian");
    if (!check_perfect(g, E).passed()) throw Error(ErrorKind::PreconditionFailed, "perfect");
    const PreLyAlgebra<S> A = induced_prely(g, W);
    const int n = g.dim;
    auto any = every_tuple();
    CheckReport<S> report;
    sweep(report, "a1", {n, n}, any, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]);
        return Vec<S>(E * star(A, x, y) - star(A, Vec<S>(E * x), y));
    });
    sweep(report, "a2", {n, n, n}, any, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]), ex = E * x, ey = E * y, ez = E * z;
        return Vec<S>(E * brace(A, x, y, z) + brace(A, ex, y, z) - brace(A, x, ey, z) - brace(A, x, y, ez));
    });
    sweep(report, "a2.D", {n, n, n}, any, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]), ex = E * x, ey = E * y, ez = E * z;
        return Vec<S>(E * brace_d(A, x, y, z) - brace_d(A, ex, y, z) - brace_d(A, x, ey, z) + brace_d(A, x, y, ez));
    });
    return report;
}

template <Field S>
CheckReport<S> isotropic_prely_closure(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E) {
    require_para_kahler(g, W, E);
    const PreLyAlgebra<S> A = induced_prely(g, W);
    auto [plus, minus] = eigenspaces(E);
    auto any = every_tuple();
    CheckReport<S> report;
    for (const auto& [name, u] : {std::pair{std::string("g+"), plus}, std::pair{std::string("g-"), minus}}) {
        const int k = u.dim();
        // The residual is the product itself when it leaves the subspace.
        sweep(report, "closure." + name + ".star", {k, k}, any, [&](const std::vector<int>& t) {
            Vec<S> p = star(A, u.vector(t[0]), u.vector(t[1]));
            return u.contains(p) ? Vec<S>(Vec<S>::Zero(g.dim)) : p;
        });
        sweep(report, "closure." + name + ".brace", {k, k, k}, any, [&](const std::vector<int>& t) {
            Vec<S> p = brace(A, u.vector(t[0]), u.vector(t[1]), u.vector(t[2]));
            return u.contains(p) ? Vec<S>(Vec<S>::Zero(g.dim)) : p;
        });
    }
    return report;
}

template <Field S>
Metric<S>::Metric(Mat<S> s) : S_(std::move(s)) {
    if (!is_symmetric(S_)) throw Error(ErrorKind::NotSymmetric, "metric is not symmetric");
    require_nondegenerate(S_, "metric");
}

template <Field S>
Metric<S> metric_from_para(const Mat<S>& W, const Mat<S>& E) {
    const long n = W.rows();
    if (W.cols() != n || E.rows() != n || E.cols() != n || E * E != identity<S>(n) ||
        !all_zero(E.transpose() * W * E + W) || !is_skew(W))
        throw Error(ErrorKind::NotKahlerPair, "(W, E) is not a para-Kähler pair");
    try {
        return Metric<S>(W * E);
    } catch (const Error& e) {
        throw Error(ErrorKind::NotKahlerPair, e.what());
    }
}

template <Field S>
Metric<S> metric_from_pseudo(const Mat<S>& W, const Mat<S>& J) {
    const long n = W.rows();
    if (W.cols() != n || J.rows() != n || J.cols() != n || J * J != Mat<S>(-identity<S>(n)) ||
        J.transpose() * W * J != W || !is_skew(W))
        throw Error(ErrorKind::NotKahlerPair, "(W, J) is not a pseudo-Kähler pair");
    try {
        return Metric<S>(W * J);
    } catch (const Error& e) {
        throw Error(ErrorKind::NotKahlerPair, e.what());
    }
}

template <Field S>
LeviCivita<S> levi_civita(const LyAlgebra<S>& g, const Metric<S>& metric) {
    const Mat<S>& M = metric.matrix();
    require_form(g, M, "S");
    const int n = g.dim;
    LeviCivita<S> lc{Tensor3<S>(n), Tensor4<S>(n)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Vec<S> ex = g.e(x), ey = g.e(y);
            Vec<S> r(n);
            for (int z = 0; z < n; ++z) {
                Vec<S> ez = g.e(z);
                r(z) = form(M, bracket2(g, ex, ey), ez) + form(M, bracket2(g, ez, ex), ey) +
                       form(M, bracket2(g, ez, ey), ex);
            }
            lc.nabla.set_slice(x, y, solve<S>(M, r));
            for (int z = 0; z < n; ++z) {
                Vec<S> ez = g.e(z), s(n);
                for (int w = 0; w < n; ++w) {
                    Vec<S> ew = g.e(w);
                    s(w) = (form(M, bracket3(g, ex, ey, ew), ez) + form(M, bracket3(g, ex, ey, ez), ew) +
                            form(M, bracket3(g, ew, ez, ex), ey) + S(2) * form(M, bracket3(g, ew, ez, ey), ex)) /
                           S(3);
                }
                lc.delta.set_slice(x, y, z, solve<S>(M, s));
            }
        }
    if (!check_levi_civita(g, metric, lc).passed())
        throw Error(ErrorKind::Internal, "Levi-Civita solve left a nonzero residual");
    return lc;
}

template <Field S>
CheckReport<S> check_levi_civita(const LyAlgebra<S>& g, const Metric<S>& metric, const LeviCivita<S>& lc) {
    const Mat<S>& M = metric.matrix();
    require_form(g, M, "S");
    const int n = g.dim;
    auto any = every_tuple();
    CheckReport<S> report;
    sweep(report, "lc.nabla", {n, n, n}, any, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]);
        return scalar(form(M, lc.nabla.slice(t[0], t[1]), z) - form(M, bracket2(g, x, y), z) -
                      form(M, bracket2(g, z, x), y) - form(M, bracket2(g, z, y), x));
    });
    sweep(report, "lc.delta", {n, n, n, n}, any, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]), w = g.e(t[3]);
        return scalar(S(3) * form(M, lc.delta.slice(t[0], t[1], t[2]), w) - form(M, bracket3(g, x, y, w), z) -
                      form(M, bracket3(g, x, y, z), w) - form(M, bracket3(g, w, z, x), y) -
                      S(2) * form(M, bracket3(g, w, z, y), x));
    });
    return report;
}

template <Field S>
CheckReport<S> check_lc_properties(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& E) {
    require_para_kahler(g, W, E);
    const Metric<S> metric = metric_from_para(W, E);
    const LeviCivita<S> lc = levi_civita(g, metric);
    const PreLyAlgebra<S> A = induced_prely(g, W);
    const int n = g.dim;
    auto any = every_tuple();
    auto nabla = [&](const Vec<S>& x, const Vec<S>& y) { return contract(lc.nabla, x, y); };
    auto delta = [&](const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) { return contract(lc.delta, x, y, z); };
    CheckReport<S> report;
    if (check_perfect(g, E).passed())
        sweep(report, "lc.E-delta", {n, n, n}, any, [&](const std::vector<int>& t) {
            Vec<S> x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]);
            return Vec<S>(E * delta(x, y, z) - delta(Vec<S>(E * x), Vec<S>(E * y), Vec<S>(E * z)));
        });
    const bool quadratic = check_quadratic(g, metric.matrix()).passed();
    auto [plus, minus] = eigenspaces(E);
    for (const auto& [name, u] : {std::pair{std::string("g+"), plus}, std::pair{std::string("g-"), minus}}) {
        const int k = u.dim();
        sweep(report, "lc.nabla." + name, {k, k}, any, [&](const std::vector<int>& t) {
            Vec<S> x = u.vector(t[0]), y = u.vector(t[1]);
            return Vec<S>(nabla(x, y) - star(A, x, y));
        });
        sweep(report, "lc.delta." + name, {k, k, k}, any, [&](const std::vector<int>& t) {
            Vec<S> x = u.vector(t[0]), y = u.vector(t[1]), z = u.vector(t[2]);
            return Vec<S>(delta(x, y, z) - brace(A, x, y, z));
        });
        if (quadratic)
            sweep(report, "lc.delta-D." + name, {k, k, k}, any, [&](const std::vector<int>& t) {
                Vec<S> x = u.vector(t[0]), y = u.vector(t[1]), z = u.vector(t[2]);
                return Vec<S>(delta(x, y, z) - brace_d(A, x, y, z));
            });
    }
    return report;
}

template <Field S>
CheckReport<S> check_pseudo_kahler(const LyAlgebra<S>& g, const Mat<S>& W, const Mat<S>& J) {
    CheckReport<S> report = check_symplectic(g, W);
    report.append(check_complex(g, J));
    sweep(report, "pse", {g.dim, g.dim}, before, [&](const std::vector<int>& t) {
        Vec<S> x = g.e(t[0]), y = g.e(t[1]);
        return scalar(form(W, Vec<S>(J * x), Vec<S>(J * y)) - form(W, x, y));
    });
    return report;
}

CheckReport<Rational> check_kahler(const LyAlgebra<Rational>& g, const Mat<Rational>& W, const Mat<Rational>& J) {
    CheckReport<Rational> report = check_pseudo_kahler(g, W, J);
    const Mat<Rational> S = W * J;
    // An asymmetric W·J already fails "pse" or "J²≠−Id".
    if (!is_symmetric(S)) return report;
    if (long k = first_nonpositive_minor(S)) {
        Mat<Rational> lead = S.topLeftCorner(k, k);
        report.add("kahler.minor", {static_cast<int>(k)}, scalar(det<Rational>(lead)));
    }
    return report;
}

Mat<Rational> realify_form(const Mat<Gaussian>& f) {
    const long n = f.rows(), N = 2 * n;
    if (f.cols() != n) throw Error(ErrorKind::DimensionMismatch, "form is not square");
    const Gaussian ipow[3] = {Gaussian(1), Gaussian::i(), Gaussian(-1)};
    Mat<Rational> out(N, N);
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) out(a, b) = (f(a % n, b % n) * ipow[a / n + b / n]).re();
    return out;
}

KahlerTriple<Rational> pseudo_from_para(const LyAlgebra<Gaussian>& g, const Mat<Gaussian>& W, const Mat<Gaussian>& E) {
    if (!check_para_kahler(g, W, E).passed()) throw Error(ErrorKind::NotParaKahler, "(g, W, E) is not para-Kähler");
    return {realify(g).algebra, realify_form(W), realify(Mat<Gaussian>(Gaussian::i() * E))};
}

ParaKahlerTriple<Gaussian> para_from_pseudo(const LyAlgebra<Rational>& g, const Mat<Rational>& W,
                                            const Mat<Rational>& J) {
    if (!check_pseudo_kahler(g, W, J).passed())
        throw Error(ErrorKind::NotPseudoKahler, "(g, W, J) is not pseudo-Kähler");
    return {complexify(g).first, to_gaussian(W), Mat<Gaussian>(-Gaussian::i() * to_gaussian(J))};
}

KahlerTriple<Rational> kahler_on_phase_space(const PreLyAlgebra<Rational>& A, const InvariantForm<Rational>& F) {
    const Mat<Rational> J = j_from_b(A, F).J;
    if (!is_positive_definite(F.B)) throw Error(ErrorKind::NotPositiveDefinite, "invariant form is not positive definite");
    PhaseSpace<Rational> p = phase_space(A);
    return {std::move(p.algebra), std::move(p.W), Mat<Rational>(-J)};
}

#define LYWB_INSTANTIATE(S)                                                                                      \
    template CheckReport<S> check_symplectic(const LyAlgebra<S>&, const Mat<S>&);                                \
    template CheckReport<S> check_quadratic(const LyAlgebra<S>&, const Mat<S>&);                                 \
    template CheckReport<S> check_para_kahler(const LyAlgebra<S>&, const Mat<S>&, const Mat<S>&);                \
    template ProductStructure<S> para_from_isotropic(const LyAlgebra<S>&, const Mat<S>&, const Subspace<S>&,     \
                                                     const Subspace<S>&);                                        \
    template CheckReport<S> check_phase_space_shape(const LyAlgebra<S>&, const Mat<S>&, const Mat<S>&);          \
    template PhaseSpace<S> phase_space(const PreLyAlgebra<S>&);                                                  \
    template PreLyAlgebra<S> induced_prely(const LyAlgebra<S>&, const Mat<S>&);                                  \
    template CheckReport<S> check_induced_d(const LyAlgebra<S>&, const Mat<S>&, const PreLyAlgebra<S>&);         \
    template CheckReport<S> check_perfect_abelian_identities(const LyAlgebra<S>&, const Mat<S>&, const Mat<S>&); \
    template CheckReport<S> isotropic_prely_closure(const LyAlgebra<S>&, const Mat<S>&, const Mat<S>&);          \
    template struct Metric<S>;                                                                                   \
    template Metric<S> metric_from_para(const Mat<S>&, const Mat<S>&);                                           \
    template Metric<S> metric_from_pseudo(const Mat<S>&, const Mat<S>&);                                         \
    template LeviCivita<S> levi_civita(const LyAlgebra<S>&, const Metric<S>&);                                   \
    template CheckReport<S> check_levi_civita(const LyAlgebra<S>&, const Metric<S>&, const LeviCivita<S>&);      \
    template CheckReport<S> check_lc_properties(const LyAlgebra<S>&, const Mat<S>&, const Mat<S>&);              \
    template CheckReport<S> check_pseudo_kahler(const LyAlgebra<S>&, const Mat<S>&, const Mat<S>&);

LYWB_INSTANTIATE(Rational)
LYWB_INSTANTIATE(Gaussian)

}  // namespace lywb
