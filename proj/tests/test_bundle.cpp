#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "lywb/catalog.hpp"

using namespace lywb;

namespace {

const BundleT<Rational>& rational(const Bundle& b) { return std::get<BundleT<Rational>>(b); }

Error caught(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e;
    }
    return Error(ErrorKind::Internal, "no throw");
}

const char* kCorrupted = R"({
  "field": "Q", "dim": 2,
  "c": [[["0","0"],["0","1"]],[["0","-1"],["0","0"]]],
  "d": [[[["0","0"],["0","0"]],[["0","0"],["1","0"]]],[[["0","0"],["-1","0"]],[["0","0"],["0","0"]]]]
})";

}  // namespace

TEST_CASE("every catalog entry survives a write-then-read round trip") {
    for (const auto& e : catalog::entries()) {
        const std::string text = dump_bundle(e.bundle);
        Bundle back = parse_bundle(text);
        CHECK_MESSAGE(dump_bundle(back) == text, e.name);
        const auto& a = rational(e.bundle);
        const auto& b = rational(back);
        CHECK(a.ly == b.ly);
        CHECK(a.prely == b.prely);
        CHECK(a.rep == b.rep);
        CHECK(a.matrices == b.matrices);
    }
}

TEST_CASE("Gaussian bundles round trip") {
    BuildResult r = run_build(catalog::entry("example-4.4").bundle, "para-from-pseudo");
    CHECK(r.verification.passed());
    const std::string text = dump_bundle(r.bundle);
    CHECK(text.find("\"Q(i)\"") != std::string::npos);
    Bundle back = parse_bundle(text);
    const auto& g = std::get<BundleT<Gaussian>>(back);
    CHECK(g.matrices == std::get<BundleT<Gaussian>>(r.bundle).matrices);
    CHECK(run_check(back, "para-kahler").passed());
}

TEST_CASE("parse errors carry a location") {
    auto e = caught([] { parse_bundle("{"); });
    CHECK(e.kind() == ErrorKind::ParseError);

    std::string bad = kCorrupted;
    bad.replace(bad.find("[\"1\",\"0\"]") + 1, 3, "\"x\"");
    e = caught([&] { parse_bundle(bad); });
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(e.detail().find("/d/0/1/1/0") != std::string::npos);

    e = caught([] { parse_bundle(R"({"field": "Q", "dim": 3, "c": [], "d": []})"); });
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
    e = caught([] { parse_bundle(R"({"field": "R", "dim": 1})"); });
    CHECK(e.kind() == ErrorKind::ParseError);
    e = caught([] { parse_bundle(R"({"field": "Q", "dim": 1, "omgea": [["0"]]})"); });
    CHECK(e.detail().find("/omgea") != std::string::npos);
    e = caught([] { parse_bundle(R"({"field": "Q", "dim": 2, "c": [[["0","1"],["0","0"]],[["0","0"],["0","0"]]],
                                    "d": [[[["0","0"],["0","0"]],[["0","0"],["0","0"]]],[[["0","0"],["0","0"]],[["0","0"],["0","0"]]]]})"); });
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(exit_code_for(e) == 2);
}

TEST_CASE("run_check") {
    Bundle ex = catalog::entry("example-4.4").bundle;
    CHECK(run_check(ex, "para-kahler").passed());

    auto corrupted = run_check(parse_bundle(kCorrupted), "ly");
    REQUIRE(corrupted.violations.size() == 1);
    CHECK(corrupted.violations[0].axiom == "(2.3)");
    CHECK(corrupted.violations[0].indices == std::vector<int>{1, 2, 1, 2});
    CHECK(corrupted.violations[0].residual == std::vector<std::string>{"1", "0"});

    auto no_j = rational(ex);
    no_j.matrices.erase("J");
    auto e = caught([&] { run_check(Bundle(no_j), "kahler"); });
    CHECK(e.kind() == ErrorKind::MissingObject);
    CHECK(e.detail() == "J");
    CHECK(exit_code_for(e) == 2);

    CHECK(caught([&] { run_check(ex, "hyperkahler"); }).kind() == ErrorKind::UnknownName);
    // The refined product checks report the product failure itself.
    auto id = rational(ex);
    id.matrices["E"] = Mat<Rational>::Identity(2, 2);
    CHECK(run_check(Bundle(id), "perfect").violations[0].axiom == "E=±Id");
}

TEST_CASE("run_build") {
    auto built = [](const std::string& entry, const std::string& what) {
        BuildResult r = run_build(catalog::entry(entry).bundle, what);
        CHECK_MESSAGE(r.verification.passed(), std::string(entry + " " + what));
        return r.bundle;
    };
    Bundle ps = built("induced-4.4", "phase-space");
    CHECK(run_check(ps, "para-kahler").passed());

    Bundle lc = built("example-4.4", "levi-civita");
    CHECK(rational(lc).lc->nabla.slice(1, 0) == fx::vec({-2, 0}));

    Bundle sub = built("zero-prely-2", "sub-adjacent");
    CHECK(*rational(sub).ly == fx::abelian(2));

    Bundle ind = built("example-4.4", "induced-prely");
    CHECK(*rational(ind).prely == fx::induced44());

    for (const char* what : {"adjoint", "coadjoint", "dual", "semidirect"}) built("sl2", what);
    for (const char* what : {"e-on-semidirect", "aff", "sub-adjacent"}) built("induced-4.4", what);

    Bundle withb = catalog::entry("zero-prely-2").bundle;
    std::get<BundleT<Rational>>(withb).matrices["B"] = Mat<Rational>::Identity(2, 2);
    CHECK(run_build(withb, "j-from-b").verification.passed());
    CHECK(run_check(run_build(withb, "kahler-phase-space").bundle, "kahler").passed());

    Bundle gc = built("example-4.4", "complexify");
    Bundle gr = run_build(gc, "realify").bundle;
    CHECK(rational(gr).dim == 4);
    CHECK(run_check(gr, "ly").passed());
    Bundle para = built("example-4.4", "para-from-pseudo");
    Bundle pseudo = run_build(para, "pseudo-from-para").bundle;
    CHECK(run_check(pseudo, "pseudo-kahler").passed());

    auto e = caught([&] { run_build(gc, "complexify"); });
    CHECK(e.kind() == ErrorKind::FieldError);
    e = caught([&] { run_build(catalog::entry("example-4.4").bundle, "phase-space"); });
    CHECK(e.kind() == ErrorKind::MissingObject);
    e = caught([&] { run_build(catalog::entry("example-4.4").bundle, "induced-prely-typo"); });
    CHECK(e.kind() == ErrorKind::UnknownName);
}
