#include "lywb/catalog.hpp"

namespace lywb::catalog {

namespace {

using Q = Rational;

Mat<Q> eye(int n) { return Mat<Q>::Identity(n, n); }

// [[0, −I], [I, 0]], the pairing form of a phase space.
Mat<Q> pairing(int half) {
    Mat<Q> w = Mat<Q>::Zero(2 * half, 2 * half);
    w.topRightCorner(half, half) = -eye(half);
    w.bottomLeftCorner(half, half) = eye(half);
    return w;
}

LyAlgebra<Q> lie(int n, std::initializer_list<std::array<int, 4>> brackets) {
    Tensor3<Q> c(n);
    for (auto [i, j, k, v] : brackets) {
        c(i, j, k) = Q(v);
        c(j, i, k) = Q(-v);
    }
    return from_lie(c);
}

PreLyAlgebra<Q> direct_sum(const PreLyAlgebra<Q>& x, const PreLyAlgebra<Q>& y) {
    const int p = x.dim, n = x.dim + y.dim;
    Tensor3<Q> a(n);
    Tensor4<Q> b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i < p && j < p && k < p) a(i, j, k) = x.a(i, j, k);
                if (i >= p && j >= p && k >= p) a(i, j, k) = y.a(i - p, j - p, k - p);
                for (int l = 0; l < n; ++l) {
                    if (i < p && j < p && k < p && l < p) b(i, j, k, l) = x.b(i, j, k, l);
                    if (i >= p && j >= p && k >= p && l >= p) b(i, j, k, l) = y.b(i - p, j - p, k - p, l - p);
                }
            }
    return {a, b};
}

BundleT<Q> bundle(std::string name, int dim) {
    BundleT<Q> b;
    b.name = std::move(name);
    b.dim = dim;
    return b;
}

Entry make(BundleT<Q> b, std::string note, std::vector<std::string> checks) {
    std::string name = b.name;
    b.note = note;
    return {std::move(name), std::move(note), std::move(checks), Bundle(std::move(b))};
}

std::vector<Entry> build() {
    std::vector<Entry> out;

    for (long k : {1L, -1L}) {
        Example44 ex = example_4_4(Q(k));
        BundleT<Q> b = bundle(k == 1 ? "example-4.4" : "example-4.4-k-neg1", 2);
        b.ly = ex.algebra;
        b.matrices = {{"omega", ex.W}, {"E", ex.E}, {"J", ex.J}};
        if (k == 1)
            out.push_back(make(std::move(b), "two-dimensional para-Kähler and Kähler example, k = 1",
                               {"ly", "symplectic", "product", "paracomplex", "perfect", "abelian", "para-kahler",
                                "complex", "complex-product", "pseudo-kahler", "kahler"}));
        else
            out.push_back(make(std::move(b), "k = −1: pseudo-Kähler with negative definite metric",
                               {"ly", "para-kahler", "pseudo-kahler"}));
    }

    for (int n = 1; n <= 4; ++n) {
        BundleT<Q> b = bundle("abelian-" + std::to_string(n), n);
        b.ly = abelian(n);
        std::vector<std::string> checks = {"ly"};
        if (n % 2 == 0) {
            b.matrices = {{"omega", pairing(n / 2)},
                          {"E", block_diag<Q>(eye(n / 2), Mat<Q>(-eye(n / 2)))},
                          {"J", Mat<Q>(-pairing(n / 2))}};
            checks.insert(checks.end(), {"para-kahler", "complex-product", "kahler"});
        }
        out.push_back(make(std::move(b), "abelian", checks));
    }

    for (const auto& name : lie_names()) {
        BundleT<Q> b = bundle(name, 3);
        b.ly = lie_derived(name);
        b.dim = b.ly->dim;
        b.rep = adjoint(*b.ly);
        std::vector<std::string> checks = {"ly", "rep"};
        if (name == "so3") b.matrices["B"] = eye(3);
        if (name == "sl2") b.matrices["B"] = Mat<Q>((Mat<Q>(3, 3) << 2, 0, 0, 0, 0, 1, 0, 1, 0).finished());
        if (b.matrices.count("B")) checks.push_back("quadratic");
        out.push_back(make(std::move(b), "Lie algebra with its adjoint representation", checks));
    }

    for (const auto& [name, A] : prely_zoo()) {
        BundleT<Q> b = bundle(name, A.dim);
        b.prely = A;
        b.ly = sub_adjacent(A);
        b.rep = lr_rep(A);
        out.push_back(make(std::move(b), "pre-LY algebra with its sub-adjacent algebra and regular representation",
                           {"prely", "ly", "rep"}));

        PhaseSpace<Q> p = phase_space(A);
        BundleT<Q> ps = bundle("phase-space-" + name, 2 * A.dim);
        ps.ly = p.algebra;
        ps.matrices = {{"omega", p.W}, {"E", p.E}};
        out.push_back(make(std::move(ps), "phase space", {"ly", "para-kahler", "perfect"}));
    }

    {
        AffAlgebra<Q> a = aff(example_4_4_induced());
        BundleT<Q> b = bundle("aff-induced-4.4", 4);
        b.ly = a.algebra;
        b.matrices = {{"J", a.J.J}, {"E", a.E.E}};
        out.push_back(make(std::move(b), "complex product structure on the affine algebra", {"ly", "complex-product"}));
    }

    for (int n = 1; n <= 3; ++n) {
        KahlerTriple<Q> k = kahler_on_phase_space(PreLyAlgebra<Q>::zero(n), InvariantForm<Q>(eye(n)));
        BundleT<Q> b = bundle("kahler-phase-space-zero-" + std::to_string(n), 2 * n);
        b.ly = k.algebra;
        b.matrices = {{"omega", k.W}, {"J", k.J}};
        out.push_back(make(std::move(b), "Kähler structure on a phase space", {"ly", "pseudo-kahler", "kahler"}));
    }

    for (const auto& e : out)
        for (const auto& c : e.checks)
            if (!run_check(e.bundle, c).passed())
                throw Error(ErrorKind::Internal, "catalog entry " + e.name + " fails check " + c);
    return out;
}

}  // namespace

Example44 example_4_4(const Rational& k) {
    if (k.is_zero()) throw Error(ErrorKind::ZeroParameter, "k = 0 makes ω degenerate");
    Tensor3<Q> c(2);
    Tensor4<Q> d(2);
    c(0, 1, 0) = Q(1);
    c(1, 0, 0) = Q(-1);
    d(0, 1, 1, 0) = Q(1);
    d(1, 0, 1, 0) = Q(-1);
    Mat<Q> W(2, 2), E(2, 2), J(2, 2);
    W << Q(0), k, -k, Q(0);
    E << Q(1), Q(0), Q(0), Q(-1);
    J << Q(0), Q(-1), Q(1), Q(0);
    return {LyAlgebra<Q>(c, d), W, E, J};
}

PreLyAlgebra<Rational> example_4_4_induced() {
    Example44 ex = example_4_4(Q(1));
    return induced_prely(ex.algebra, ex.W);
}

LyAlgebra<Rational> abelian(int n) {
    if (n < 1) throw Error(ErrorKind::DimensionMismatch, "abelian(n) needs n ≥ 1");
    return {Tensor3<Q>(n), Tensor4<Q>(n)};
}

const std::vector<std::string>& lie_names() {
    static const std::vector<std::string> names = {"2dim-nonabelian", "so3", "heisenberg3", "sl2"};
    return names;
}

LyAlgebra<Rational> lie_derived(const std::string& name) {
    if (name == "2dim-nonabelian") return lie(2, {{0, 1, 0, 1}});
    if (name == "so3") return lie(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}});
    if (name == "heisenberg3") return lie(3, {{0, 1, 2, 1}});
    // (h, e, f): [h,e] = 2e, [h,f] = −2f, [e,f] = h.
    if (name == "sl2") return lie(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}});
    throw Error(ErrorKind::UnknownName, "Lie algebra \"" + name + "\"");
}

std::vector<Named<PreLyAlgebra<Rational>>> prely_zoo() {
    std::vector<Named<PreLyAlgebra<Q>>> zoo;
    for (int n = 1; n <= 3; ++n) zoo.push_back({"zero-prely-" + std::to_string(n), PreLyAlgebra<Q>::zero(n)});
    const PreLyAlgebra<Q> induced = example_4_4_induced();
    zoo.push_back({"induced-4.4", induced});
    zoo.push_back({"induced-4.4+zero-1", direct_sum(induced, PreLyAlgebra<Q>::zero(1))});
    return zoo;
}

std::vector<Named<Symplectic>> symplectic_algebras() {
    std::vector<Named<Symplectic>> out;
    for (long k : {1L, -1L, 2L}) {
        Example44 ex = example_4_4(Q(k));
        out.push_back({"example-4.4 k=" + std::to_string(k), {ex.algebra, ex.W}});
    }
    for (int n : {2, 4}) out.push_back({"abelian-" + std::to_string(n), {abelian(n), pairing(n / 2)}});
    for (const auto& [name, A] : prely_zoo()) {
        PhaseSpace<Q> p = phase_space(A);
        out.push_back({"phase-space-" + name, {p.algebra, p.W}});
    }
    return out;
}

std::vector<Named<Representation<Rational>>> representations() {
    std::vector<Named<Representation<Q>>> out;
    std::vector<Named<LyAlgebra<Q>>> algebras = {{"example-4.4", example_4_4(Q(1)).algebra}, {"abelian-2", abelian(2)}};
    for (const auto& name : lie_names()) algebras.push_back({name, lie_derived(name)});
    for (const auto& [name, g] : algebras) {
        out.push_back({"adjoint " + name, adjoint(g)});
        out.push_back({"coadjoint " + name, coadjoint(g)});
        out.push_back({"zero " + name, Representation<Q>::zero(g, 2)});
    }
    for (const auto& [name, A] : prely_zoo()) {
        Representation<Q> r = lr_rep(A);
        out.push_back({"regular " + name, r});
        out.push_back({"dual regular " + name, dual(r)});
    }
    return out;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all = build();
    return all;
}

const Entry& entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    throw Error(ErrorKind::UnknownName, "catalog entry \"" + name + "\"");
}

}  // namespace lywb::catalog
