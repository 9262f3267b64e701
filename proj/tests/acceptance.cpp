// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact (tolerance 0).
// Usage: acceptance <repo root> <lywb binary>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "lywb/catalog.hpp"
#include "oracle/naive_forms.hpp"

using namespace lywb;

namespace {

using Q = Rational;
using G = Gaussian;

struct Verdict {
    bool ok = true;
    std::string why;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

template <Field S>
std::string first_violation(const CheckReport<S>& r) {
    if (r.passed()) return "none";
    const auto& v = r.violations[0];
    std::string s = v.axiom + " @ (";
    for (size_t i = 0; i < v.indices.size(); ++i) s += (i ? "," : "") + std::to_string(v.indices[i]);
    return s + ") residual " + format_vec(v.residual);
}

template <Field S>
void passes(Verdict& v, const CheckReport<S>& r, const std::string& what) {
    v.require(r.passed(), what + ": " + first_violation(r));
}

const BundleT<Q>& rational(const Bundle& b) { return std::get<BundleT<Q>>(b); }

struct Run {
    int code;
    std::string out;
};

Run shell(const std::string& cmd) {
    Run r{-1, ""};
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Verdict c1(const std::string& root) {
    Verdict v;
    const Bundle file = read_bundle(root + "/data/example_4_4.lyb.json");
    const auto& b = rational(file);
    const auto& g = b.need_ly();
    const auto& W = b.need("omega");
    const auto& E = b.need("E");
    passes(v, check_ly(g), "check_ly");
    passes(v, check_symplectic(g, W), "check_symplectic");
    passes(v, check_paracomplex(g, E), "check_paracomplex");
    passes(v, check_perfect(g, E), "check_perfect");
    passes(v, check_abelian(g, E), "check_abelian");
    passes(v, check_para_kahler(g, W, E), "check_para_kahler");
    return v;
}

Verdict c2() {
    Verdict v;
    auto ex = catalog::example_4_4(Q(1));
    passes(v, check_complex(ex.algebra, ex.J), "check_complex");
    passes(v, check_pseudo_kahler(ex.algebra, ex.W, ex.J), "check_pseudo_kahler");
    passes(v, check_kahler(ex.algebra, ex.W, ex.J), "check_kahler k=1");
    v.require(metric_from_pseudo(ex.W, ex.J).matrix() == Mat<Q>(Mat<Q>::Identity(2, 2)), "S ≠ identity at k=1");
    auto neg = catalog::example_4_4(Q(-1));
    auto r = check_kahler(neg.algebra, neg.W, neg.J);
    v.require(r.violations.size() == 1 && r.violations[0].axiom == "kahler.minor" &&
                  r.violations[0].indices == std::vector<int>{1},
              "k=−1 should fail at minor 1, got " + first_violation(r));
    return v;
}

Verdict c3() {
    Verdict v;
    std::set<int> dims;
    for (const auto& [name, A] : catalog::prely_zoo()) {
        dims.insert(A.dim);
        LyAlgebra<Q> g = sub_adjacent(A);
        Representation<Q> lr = lr_rep(A), lrd = dual(lr);
        passes(v, check_ly(g), name + " sub_adjacent");
        passes(v, check_rep(lr), name + " lr_rep");
        passes(v, check_rep(lrd), name + " dual(lr_rep)");
        passes(v, check_ly(semidirect(g, lrd)), name + " semidirect with dual(lr_rep)");
        passes(v, check_ly(semidirect(g, lr)), name + " semidirect with lr_rep");
        SplitAlgebra<Q> s = e_on_semidirect(A);
        passes(v, check_perfect(s.algebra, s.E.E), name + " e_on_semidirect perfect");
        passes(v, check_paracomplex(s.algebra, s.E.E), name + " e_on_semidirect paracomplex");
        PhaseSpace<Q> p = phase_space(A);
        passes(v, check_para_kahler(p.algebra, p.W, p.E), name + " phase_space");
    }
    v.require(dims == std::set<int>{1, 2, 3}, "zoo does not cover dims 1-3");
    return v;
}

Verdict c4() {
    Verdict v;
    for (const auto& [name, r] : catalog::representations()) v.require(dual(dual(r)) == r, name);
    return v;
}

Verdict c5() {
    Verdict v;
    for (const auto& [name, s] : catalog::symplectic_algebras()) {
        PreLyAlgebra<Q> A = induced_prely(s.algebra, s.W);
        v.require(sub_adjacent(A) == s.algebra, name + ": sub_adjacent(induced_prely) ≠ g");
        passes(v, check_induced_d(s.algebra, s.W, A), name);
    }
    return v;
}

Verdict c6() {
    Verdict v;
    auto ex = catalog::example_4_4(Q(1));
    const auto& g = ex.algebra;
    Metric<Q> metric = metric_from_para(ex.W, ex.E);
    LeviCivita<Q> lc = levi_civita(g, metric);

    // Hand solve of S(∇_{e2}e1, z) = S([e2,e1],z)+S([z,e2],e1)+S([z,e1],e2) with S = [[0,−1],[−1,0]]:
    // z = e1 gives 0 = −u2, z = e2 gives 2 = −u1.
    Vec<Q> hand(2);
    hand << Q(-2), Q(0);
    v.require(Vec<Q>(lc.nabla.slice(1, 0)) == hand, "∇_{e2}e1 = " + format_vec(lc.nabla.slice(1, 0)) + ", hand (-2, 0)");

    auto og = oracle::wrap(g);
    auto nabla = [&](int a, int b) { return oracle::from_eigen(Vec<Q>(lc.nabla.slice(a, b))); };
    auto delta = [&](int a, int b, int c) { return oracle::from_eigen(Vec<Q>(lc.delta.slice(a, b, c))); };
    v.require(oracle::levi_civita_holds<Q>(og, metric.matrix(), nabla, delta),
              "defining identities have a nonzero residual");

    CheckReport<Q> props = check_lc_properties(g, ex.W, ex.E);
    for (const char* id : {"lc.E-delta", "lc.delta.g+", "lc.delta.g-", "lc.nabla.g+", "lc.nabla.g-"})
        for (const auto& x : props.violations)
            if (x.axiom == id) {
                PreLyAlgebra<Q> A = induced_prely(g, ex.W);
                auto [plus, minus] = eigenspaces(ex.E);
                const auto& u = std::string(id).back() == '+' ? plus : minus;
                Vec<Q> a = u.vector(x.indices[0] - 1), b = u.vector(x.indices[1] - 1);
                CheckReport<Q> one;
                one.violations.push_back(x);
                v.require(false, first_violation(one) + "; ∇ = " + format_vec(contract(lc.nabla, a, b)) +
                                     " against * = " + format_vec(star(A, a, b)));
            }
    return v;
}

Verdict c7() {
    Verdict v;
    auto ex = catalog::example_4_4(Q(1));
    ParaKahlerTriple<G> para = para_from_pseudo(ex.algebra, ex.W, ex.J);
    passes(v, check_ly(para.algebra), "complex triple check_ly");
    passes(v, check_para_kahler(para.algebra, para.W, para.E), "complex triple check_para_kahler");

    auto [gc, conj] = complexify(ex.algebra);
    KahlerTriple<Q> real = pseudo_from_para(gc, to_gaussian(ex.W), to_gaussian(ex.E));
    v.require(real.algebra.dim == 4, "real form is not 4-dimensional");
    passes(v, check_ly(real.algebra), "real triple check_ly");
    passes(v, check_pseudo_kahler(real.algebra, real.W, real.J), "real triple check_pseudo_kahler");

    KahlerTriple<Q> back = pseudo_from_para(para.algebra, para.W, para.E);
    v.require(Mat<Q>(back.W.topLeftCorner(2, 2)) == ex.W, "round trip changed W");
    v.require(Mat<Q>(back.J.topLeftCorner(2, 2)) == ex.J, "round trip changed J");
    return v;
}

Verdict c8(const std::string& root) {
    Verdict v;
    const Bundle file = read_bundle(root + "/data/corrupted.lyb.json");
    const auto& g = rational(file).need_ly();
    auto r = check_ly(g);
    Vec<Q> e1(2);
    e1 << Q(1), Q(0);
    v.require(r.violations.size() == 1, "expected exactly one violation, got " + std::to_string(r.violations.size()));
    if (v.ok) {
        const auto& x = r.violations[0];
        v.require(x.axiom == "(2.3)" && x.indices == std::vector<int>{1, 2, 1, 2} && x.residual == e1,
                  "got " + first_violation(r));
    }
    std::set<std::string> axioms;
    for (const auto& [axiom, tuples] : oracle::ly_failures(oracle::wrap(g))) axioms.insert(axiom);
    v.require(axioms == std::set<std::string>{"(2.3)"}, "brute-force oracle disagrees on the failing axioms");
    return v;
}

Verdict c9() {
    Verdict v;
    for (int n = 1; n <= 3; ++n) {
        const Mat<Q> I = Mat<Q>::Identity(n, n);
        KahlerTriple<Q> k = kahler_on_phase_space(PreLyAlgebra<Q>::zero(n), InvariantForm<Q>(I));
        passes(v, check_kahler(k.algebra, k.W, k.J), "dim " + std::to_string(n));
        v.require(is_positive_definite(metric_from_pseudo(k.W, k.J).matrix()), "metric not positive definite");
        try {
            kahler_on_phase_space(PreLyAlgebra<Q>::zero(n), InvariantForm<Q>(Mat<Q>(-I)));
            v.require(false, "B = −I accepted");
        } catch (const Error& e) {
            v.require(e.kind() == ErrorKind::NotPositiveDefinite, std::string("B = −I: ") + e.what());
        }
    }
    return v;
}

Verdict c10(const std::string& root, const std::string& bin) {
    Verdict v;
    const std::string data = root + "/data/";
    Run ok = shell(bin + " check para-kahler " + data + "example_4_4.lyb.json");
    v.require(ok.code == 0, "check para-kahler exit " + std::to_string(ok.code));
    Run bad = shell(bin + " check ly " + data + "corrupted.lyb.json");
    v.require(bad.code == 1 && bad.out.find("(2.3)") != std::string::npos,
              "check ly on corrupted exit " + std::to_string(bad.code));
    Run missing = shell(bin + " check kahler " + data + "example_4_4_no_j.lyb.json");
    v.require(missing.code == 2, "missing J exit " + std::to_string(missing.code));
    const std::string noisy = root + "/tests/data/noisy_4.lyb.json";
    std::string first;
    for (int t : {1, 2, 4, 8}) {
        Run r = shell("LYWB_THREADS=" + std::to_string(t) + " " + bin + " check ly " + noisy + " --all --json");
        if (t == 1) first = r.out;
        v.require(r.code == 1 && r.out == first, "output differs at LYWB_THREADS=" + std::to_string(t));
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <repo root> <lywb binary>\n";
        return 2;
    }
    const std::string root = argv[1], bin = argv[2];
    struct Criterion {
        std::string name;
        std::function<Verdict()> run;
    };
    std::vector<Criterion> criteria;
    criteria.push_back({"shipped two-dimensional example", [&] { return c1(root); }});
    criteria.push_back({"pseudo-Kähler and Kähler regression", c2});
    criteria.push_back({"construction closure over the pre-LY zoo", c3});
    criteria.push_back({"dual involution", c4});
    criteria.push_back({"induced-structure round trip", c5});
    criteria.push_back({"Levi-Civita correctness", c6});
    criteria.push_back({"para/pseudo conversion", c7});
    criteria.push_back({"failure localization", [&] { return c8(root); }});
    criteria.push_back({"Kähler phase space", c9});
    criteria.push_back({"CLI contract", [&] { return c10(root, bin); }});
    std::cout << "tolerance: exact, residual = 0\n";
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw ") + e.what()};
        }
        std::cout << (v.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name;
        if (!v.ok) std::cout << "  -- " << v.why;
        std::cout << "\n";
        failed += !v.ok;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
