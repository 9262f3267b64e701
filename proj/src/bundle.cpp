#include "lywb/bundle.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace lywb {

using nlohmann::json;

namespace {

const std::set<std::string> kForms = {"omega", "B", "S"};
const std::set<std::string> kMaps = {"E", "J", "phi"};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& array_of(const json& j, size_t len, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    if (j.size() != len)
        throw Error(ErrorKind::DimensionMismatch,
                    where + ": expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
    return j;
}

template <Field S>
S read_scalar(const json& j, const std::string& where) {
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_integer())
        text = std::to_string(j.get<long long>());
    else
        fail(where, "expected a scalar string");
    try {
        return parse_scalar<S>(text);
    } catch (const std::exception&) {
        fail(where, "cannot parse scalar \"" + text + "\"");
    }
}

template <Field S>
Mat<S> read_matrix(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    const long rows = static_cast<long>(j.size());
    if (rows && !j[0].is_array()) fail(where + "/0", "expected a row");
    const long cols = rows ? static_cast<long>(j[0].size()) : 0;
    Mat<S> m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const std::string row = where + "/" + std::to_string(i);
        const json& r = array_of(j[i], cols, row);
        for (long k = 0; k < cols; ++k) m(i, k) = read_scalar<S>(r[k], row + "/" + std::to_string(k));
    }
    return m;
}

template <Field S>
Tensor3<S> read_tensor3(const json& j, int n, const std::string& where) {
    array_of(j, n, where);
    Tensor3<S> t(n);
    for (int i = 0; i < n; ++i) {
        const std::string p = where + "/" + std::to_string(i);
        const json& ji = array_of(j[i], n, p);
        for (int k = 0; k < n; ++k) {
            const std::string q = p + "/" + std::to_string(k);
            const json& jk = array_of(ji[k], n, q);
            for (int l = 0; l < n; ++l) t(i, k, l) = read_scalar<S>(jk[l], q + "/" + std::to_string(l));
        }
    }
    return t;
}

template <Field S>
Tensor4<S> read_tensor4(const json& j, int n, const std::string& where) {
    array_of(j, n, where);
    Tensor4<S> t(n);
    for (int i = 0; i < n; ++i) {
        const std::string p = where + "/" + std::to_string(i);
        const json& ji = array_of(j[i], n, p);
        for (int k = 0; k < n; ++k) {
            const std::string q = p + "/" + std::to_string(k);
            const json& jk = array_of(ji[k], n, q);
            for (int l = 0; l < n; ++l) {
                const std::string r = q + "/" + std::to_string(l);
                const json& jl = array_of(jk[l], n, r);
                for (int m = 0; m < n; ++m) t(i, k, l, m) = read_scalar<S>(jl[m], r + "/" + std::to_string(m));
            }
        }
    }
    return t;
}

// Library constructors validate symmetry; their complaints become located parse errors.
template <class Fn>
auto located(const std::string& where, Fn fn) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::DimensionMismatch) throw;
        fail(where, e.what());
    }
}

template <Field S>
BundleT<S> read_typed(const json& j) {
    BundleT<S> b;
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
        fail("/dim", "expected a nonnegative integer");
    const int n = j["dim"].get<int>();
    b.dim = n;
    const std::set<std::string> known = {"field", "dim", "name", "note", "c", "d", "a", "b", "rep", "nabla", "delta"};
    for (const auto& [key, value] : j.items()) {
        if (known.count(key) || kForms.count(key) || kMaps.count(key)) continue;
        fail("/" + key, "unknown key");
    }
    if (j.contains("name")) b.name = j["name"].get<std::string>();
    if (j.contains("note")) b.note = j["note"].get<std::string>();
    auto pair_of = [&](const char* x, const char* y) {
        if (j.contains(x) != j.contains(y))
            fail(std::string("/") + (j.contains(x) ? y : x), std::string("\"") + x + "\" and \"" + y + "\" come together");
        return j.contains(x);
    };
    if (pair_of("c", "d"))
        b.ly = located("/c", [&] { return LyAlgebra<S>(read_tensor3<S>(j["c"], n, "/c"), read_tensor4<S>(j["d"], n, "/d")); });
    if (pair_of("a", "b"))
        b.prely = located("/a", [&] {
            return PreLyAlgebra<S>(read_tensor3<S>(j["a"], n, "/a"), read_tensor4<S>(j["b"], n, "/b"));
        });
    if (j.contains("rep")) {
        if (!b.ly) fail("/rep", "a representation needs the algebra tensors c and d");
        const json& r = j["rep"];
        if (!r.is_object() || !r.contains("dim") || !r["dim"].is_number_integer())
            fail("/rep/dim", "expected a nonnegative integer");
        const int m = r["dim"].get<int>();
        std::vector<Mat<S>> rho, mu;
        const json jr = r.value("rho", json());
        array_of(jr, n, "/rep/rho");
        for (int i = 0; i < n; ++i) rho.push_back(read_matrix<S>(jr[i], "/rep/rho/" + std::to_string(i)));
        const json jm = r.value("mu", json());
        array_of(jm, n, "/rep/mu");
        for (int i = 0; i < n; ++i) {
            const std::string p = "/rep/mu/" + std::to_string(i);
            const json& row = array_of(jm[i], n, p);
            for (int k = 0; k < n; ++k) mu.push_back(read_matrix<S>(row[k], p + "/" + std::to_string(k)));
        }
        b.rep = located("/rep", [&] { return Representation<S>(*b.ly, m, rho, mu); });
    }
    if (pair_of("nabla", "delta"))
        b.lc = LeviCivita<S>{read_tensor3<S>(j["nabla"], n, "/nabla"), read_tensor4<S>(j["delta"], n, "/delta")};
    for (const auto& key : kForms)
        if (j.contains(key)) b.matrices[key] = read_matrix<S>(j[key], "/" + key);
    for (const auto& key : kMaps)
        if (j.contains(key)) b.matrices[key] = read_matrix<S>(j[key], "/" + key);
    return b;
}

template <Field S>
json write_matrix(const Mat<S>& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (long k = 0; k < m.cols(); ++k) r.push_back(m(i, k).str());
        rows.push_back(std::move(r));
    }
    return rows;
}

template <Field S>
json write_tensor3(const Tensor3<S>& t) {
    const int n = t.dim();
    json out = json::array();
    for (int i = 0; i < n; ++i) {
        json a = json::array();
        for (int k = 0; k < n; ++k) {
            json v = json::array();
            for (int l = 0; l < n; ++l) v.push_back(t(i, k, l).str());
            a.push_back(std::move(v));
        }
        out.push_back(std::move(a));
    }
    return out;
}

template <Field S>
json write_tensor4(const Tensor4<S>& t) {
    const int n = t.dim();
    json out = json::array();
    for (int i = 0; i < n; ++i) {
        json a = json::array();
        for (int k = 0; k < n; ++k) {
            json b = json::array();
            for (int l = 0; l < n; ++l) {
                json v = json::array();
                for (int m = 0; m < n; ++m) v.push_back(t(i, k, l, m).str());
                b.push_back(std::move(v));
            }
            a.push_back(std::move(b));
        }
        out.push_back(std::move(a));
    }
    return out;
}

// One top-level key per line, each value on a single line.
template <Field S>
std::string dump_typed(const BundleT<S>& b) {
    std::vector<std::pair<std::string, json>> entries;
    entries.emplace_back("field", std::string(field_traits<S>::tag));
    entries.emplace_back("dim", b.dim);
    if (!b.name.empty()) entries.emplace_back("name", b.name);
    if (!b.note.empty()) entries.emplace_back("note", b.note);
    if (b.ly) {
        entries.emplace_back("c", write_tensor3(b.ly->c));
        entries.emplace_back("d", write_tensor4(b.ly->d));
    }
    if (b.prely) {
        entries.emplace_back("a", write_tensor3(b.prely->a));
        entries.emplace_back("b", write_tensor4(b.prely->b));
    }
    if (b.rep) {
        const int n = b.rep->base.dim;
        json rho = json::array(), mu = json::array();
        for (int i = 0; i < n; ++i) {
            rho.push_back(write_matrix(b.rep->rho_e(i)));
            json row = json::array();
            for (int k = 0; k < n; ++k) row.push_back(write_matrix(b.rep->mu_e(i, k)));
            mu.push_back(std::move(row));
        }
        entries.emplace_back("rep", json{{"dim", b.rep->mdim}, {"rho", rho}, {"mu", mu}});
    }
    for (const auto& [key, m] : b.matrices) entries.emplace_back(key, write_matrix(m));
    if (b.lc) {
        entries.emplace_back("nabla", write_tensor3(b.lc->nabla));
        entries.emplace_back("delta", write_tensor4(b.lc->delta));
    }
    std::string out = "{\n";
    for (size_t i = 0; i < entries.size(); ++i)
        out += "  " + json(entries[i].first).dump() + ": " + entries[i].second.dump() + (i + 1 < entries.size() ? ",\n" : "\n");
    return out + "}\n";
}

}  // namespace

template <Field S>
const LyAlgebra<S>& BundleT<S>::need_ly() const {
    if (!ly) throw Error(ErrorKind::MissingObject, "c");
    return *ly;
}

template <Field S>
const PreLyAlgebra<S>& BundleT<S>::need_prely() const {
    if (!prely) throw Error(ErrorKind::MissingObject, "a");
    return *prely;
}

template <Field S>
const Representation<S>& BundleT<S>::need_rep() const {
    if (!rep) throw Error(ErrorKind::MissingObject, "rep");
    return *rep;
}

template <Field S>
const Mat<S>& BundleT<S>::need(const std::string& key) const {
    auto it = matrices.find(key);
    if (it == matrices.end()) throw Error(ErrorKind::MissingObject, key);
    return it->second;
}

template struct BundleT<Rational>;
template struct BundleT<Gaussian>;

Bundle parse_bundle(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, "byte " + std::to_string(e.byte) + ": malformed JSON");
    }
    if (!j.is_object()) fail("", "expected an object");
    if (!j.contains("field") || !j["field"].is_string()) fail("/field", "expected \"Q\" or \"Q(i)\"");
    const std::string field = j["field"].get<std::string>();
    try {
        if (field == field_traits<Rational>::tag) return read_typed<Rational>(j);
        if (field == field_traits<Gaussian>::tag) return read_typed<Gaussian>(j);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    fail("/field", "unknown field \"" + field + "\"");
}

Bundle read_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_bundle(ss.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path + " " + e.detail());
    }
}

std::string dump_bundle(const Bundle& b) {
    return std::visit([](const auto& t) { return dump_typed(t); }, b);
}

void write_bundle(const std::string& path, const Bundle& b) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, path + ": cannot write");
    out << dump_bundle(b);
}

template <Field S>
Outcome to_outcome(std::string what, const CheckReport<S>& r) {
    Outcome o{std::move(what), {}};
    for (const auto& v : r.violations) {
        ReportLine line{v.axiom, v.indices, {}};
        for (Eigen::Index i = 0; i < v.residual.size(); ++i) line.residual.push_back(v.residual(i).str());
        o.violations.push_back(std::move(line));
    }
    return o;
}

template Outcome to_outcome(std::string, const CheckReport<Rational>&);
template Outcome to_outcome(std::string, const CheckReport<Gaussian>&);

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "ly",      "prely",   "rep",     "symplectic",      "quadratic",   "product",       "paracomplex",
        "perfect", "abelian", "complex", "complex-product", "para-kahler", "pseudo-kahler", "kahler"};
    return names;
}

const std::vector<std::string>& build_names() {
    static const std::vector<std::string> names = {
        "semidirect", "dual",       "adjoint",          "coadjoint",        "sub-adjacent",
        "phase-space", "e-on-semidirect", "aff",        "complexify",       "realify",
        "induced-prely", "levi-civita", "j-from-b",     "para-from-pseudo", "pseudo-from-para",
        "kahler-phase-space"};
    return names;
}

namespace {

template <Field S>
Outcome check_typed(const BundleT<S>& b, const std::string& what) {
    auto out = [&](const CheckReport<S>& r) { return to_outcome(what, r); };
    if (what == "ly") return out(check_ly(b.need_ly()));
    if (what == "prely") return out(check_prely(b.need_prely()));
    if (what == "rep") return out(check_rep(b.need_rep()));
    if (what == "symplectic") return out(check_symplectic(b.need_ly(), b.need("omega")));
    if (what == "quadratic") return out(check_quadratic(b.need_ly(), b.need("B")));
    if (what == "complex") return out(check_complex(b.need_ly(), b.need("J")));
    if (what == "complex-product") return out(check_complex_product(b.need_ly(), b.need("J"), b.need("E")));
    if (what == "para-kahler") return out(check_para_kahler(b.need_ly(), b.need("omega"), b.need("E")));
    if (what == "pseudo-kahler") return out(check_pseudo_kahler(b.need_ly(), b.need("omega"), b.need("J")));
    if (what == "product" || what == "paracomplex" || what == "perfect" || what == "abelian") {
        const auto& g = b.need_ly();
        const auto& E = b.need("E");
        // The refined checks presuppose a product structure; report that failure instead.
        CheckReport<S> product = check_product(g, E);
        if (what == "product" || !product.passed()) return out(product);
        if (what == "paracomplex") return out(check_paracomplex(g, E));
        if (what == "perfect") return out(check_perfect(g, E));
        return out(check_abelian(g, E));
    }
    if (what == "kahler") {
        if constexpr (std::same_as<S, Rational>) {
            const auto& g = b.need_ly();
            const auto& W = b.need("omega");
            return out(check_kahler(g, W, b.need("J")));
        } else {
            throw Error(ErrorKind::FieldError, "positivity needs an algebra over Q");
        }
    }
    throw Error(ErrorKind::UnknownName, "check \"" + what + "\"");
}

void merge(Outcome& into, const Outcome& more) {
    into.violations.insert(into.violations.end(), more.violations.begin(), more.violations.end());
}

Outcome verify(const Bundle& b, const std::string& what, std::initializer_list<const char*> checks) {
    Outcome o{what, {}};
    for (const char* c : checks) merge(o, run_check(b, c));
    return o;
}

template <Field S>
BundleT<S> derived(const BundleT<S>& in, int dim, const std::string& what) {
    BundleT<S> out;
    out.dim = dim;
    out.name = in.name.empty() ? what : what + " of " + in.name;
    return out;
}

template <Field S>
Representation<Gaussian> rep_to_gaussian(const Representation<S>& r, const LyAlgebra<Gaussian>& base) {
    std::vector<Mat<Gaussian>> rho, mu;
    for (const auto& m : r.rho) rho.push_back(m.template cast<Gaussian>());
    for (const auto& m : r.mu) mu.push_back(m.template cast<Gaussian>());
    return Representation<Gaussian>(base, r.mdim, rho, mu);
}

template <Field S>
Metric<S> metric_of(const BundleT<S>& b) {
    if (b.matrices.count("S")) return Metric<S>(b.need("S"));
    if (b.matrices.count("E")) return metric_from_para(b.need("omega"), b.need("E"));
    if (b.matrices.count("J")) return metric_from_pseudo(b.need("omega"), b.need("J"));
    throw Error(ErrorKind::MissingObject, "S");
}

template <Field S>
BuildResult build_typed(const BundleT<S>& in, const std::string& what) {
    const int n = in.dim;
    if (what == "adjoint" || what == "coadjoint" || what == "dual") {
        BundleT<S> out = derived(in, n, what);
        out.ly = in.need_ly();
        out.rep = what == "adjoint" ? adjoint(*out.ly) : what == "coadjoint" ? coadjoint(*out.ly) : dual(in.need_rep());
        Bundle b = out;
        return {b, verify(b, what, {"rep"})};
    }
    if (what == "semidirect") {
        const auto& r = in.need_rep();
        BundleT<S> out = derived(in, n + r.mdim, what);
        out.ly = semidirect(in.need_ly(), r);
        Bundle b = out;
        return {b, verify(b, what, {"ly"})};
    }
    if (what == "sub-adjacent") {
        BundleT<S> out = derived(in, n, what);
        out.ly = sub_adjacent(in.need_prely());
        Bundle b = out;
        return {b, verify(b, what, {"ly"})};
    }
    if (what == "phase-space") {
        PhaseSpace<S> p = phase_space(in.need_prely());
        BundleT<S> out = derived(in, 2 * n, what);
        out.ly = p.algebra;
        out.matrices = {{"omega", p.W}, {"E", p.E}};
        Bundle b = out;
        return {b, verify(b, what, {"ly", "para-kahler", "perfect"})};
    }
    if (what == "e-on-semidirect") {
        SplitAlgebra<S> s = e_on_semidirect(in.need_prely());
        BundleT<S> out = derived(in, 2 * n, what);
        out.ly = s.algebra;
        out.matrices = {{"E", s.E.E}};
        Bundle b = out;
        return {b, verify(b, what, {"ly", "paracomplex", "perfect"})};
    }
    if (what == "aff") {
        AffAlgebra<S> a = aff(in.need_prely());
        BundleT<S> out = derived(in, 2 * n, what);
        out.ly = a.algebra;
        out.matrices = {{"J", a.J.J}, {"E", a.E.E}};
        Bundle b = out;
        return {b, verify(b, what, {"ly", "complex-product"})};
    }
    if (what == "j-from-b") {
        const PreLyAlgebra<S>& A = in.need_prely();
        ComplexStructure<S> J = j_from_b(A, InvariantForm<S>(in.need("B")));
        SplitAlgebra<S> s = e_on_semidirect(A);
        BundleT<S> out = derived(in, 2 * n, what);
        out.ly = s.algebra;
        out.matrices = {{"J", J.J}, {"E", s.E.E}};
        Bundle b = out;
        return {b, verify(b, what, {"ly", "complex-product"})};
    }
    if (what == "induced-prely") {
        const LyAlgebra<S>& g = in.need_ly();
        const Mat<S>& W = in.need("omega");
        BundleT<S> out = derived(in, n, what);
        out.ly = g;
        out.prely = induced_prely(g, W);
        out.matrices = {{"omega", W}};
        Bundle b = out;
        Outcome o = verify(b, what, {"prely"});
        merge(o, to_outcome(what, check_induced_d(g, W, *out.prely)));
        if (!(sub_adjacent(*out.prely) == g)) o.violations.push_back({"sub-adjacent≠g", {}, {}});
        return {b, o};
    }
    if (what == "levi-civita") {
        const LyAlgebra<S>& g = in.need_ly();
        Metric<S> metric = metric_of(in);
        BundleT<S> out = derived(in, n, what);
        out.ly = g;
        out.lc = levi_civita(g, metric);
        out.matrices = {{"S", metric.matrix()}};
        Bundle b = out;
        return {b, to_outcome(what, check_levi_civita(g, metric, *out.lc))};
    }
    if (what == "complexify") {
        if constexpr (std::same_as<S, Rational>) {
            BundleT<Gaussian> out;
            out.dim = n;
            out.name = in.name.empty() ? what : what + " of " + in.name;
            if (in.ly) out.ly = complexify(*in.ly).first;
            if (in.prely) out.prely = PreLyAlgebra<Gaussian>(to_gaussian(in.prely->a), to_gaussian(in.prely->b));
            if (in.rep) out.rep = rep_to_gaussian(*in.rep, *out.ly);
            for (const auto& [k, m] : in.matrices) out.matrices[k] = to_gaussian(m);
            Bundle b = out;
            return {b, in.ly ? verify(b, what, {"ly"}) : Outcome{what, {}}};
        } else {
            throw Error(ErrorKind::FieldError, "bundle is already over Q(i)");
        }
    }
    if (what == "realify") {
        if constexpr (std::same_as<S, Gaussian>) {
            BundleT<Rational> out;
            out.dim = 2 * n;
            out.name = in.name.empty() ? what : what + " of " + in.name;
            out.ly = realify(in.need_ly()).algebra;
            for (const auto& [k, m] : in.matrices) out.matrices[k] = kForms.count(k) ? realify_form(m) : realify(m);
            Bundle b = out;
            return {b, verify(b, what, {"ly"})};
        } else {
            throw Error(ErrorKind::FieldError, "bundle is already over Q");
        }
    }
    if (what == "para-from-pseudo") {
        if constexpr (std::same_as<S, Rational>) {
            ParaKahlerTriple<Gaussian> t = para_from_pseudo(in.need_ly(), in.need("omega"), in.need("J"));
            BundleT<Gaussian> out;
            out.dim = n;
            out.name = in.name.empty() ? what : what + " of " + in.name;
            out.ly = t.algebra;
            out.matrices = {{"omega", t.W}, {"E", t.E}};
            Bundle b = out;
            return {b, verify(b, what, {"ly", "para-kahler"})};
        } else {
            throw Error(ErrorKind::FieldError, "para-from-pseudo takes an algebra over Q");
        }
    }
    if (what == "pseudo-from-para") {
        if constexpr (std::same_as<S, Gaussian>) {
            KahlerTriple<Rational> t = pseudo_from_para(in.need_ly(), in.need("omega"), in.need("E"));
            BundleT<Rational> out;
            out.dim = 2 * n;
            out.name = in.name.empty() ? what : what + " of " + in.name;
            out.ly = t.algebra;
            out.matrices = {{"omega", t.W}, {"J", t.J}};
            Bundle b = out;
            return {b, verify(b, what, {"ly", "pseudo-kahler"})};
        } else {
            throw Error(ErrorKind::FieldError, "pseudo-from-para takes an algebra over Q(i)");
        }
    }
    if (what == "kahler-phase-space") {
        if constexpr (std::same_as<S, Rational>) {
            KahlerTriple<Rational> t = kahler_on_phase_space(in.need_prely(), InvariantForm<Rational>(in.need("B")));
            BundleT<Rational> out = derived(in, 2 * n, what);
            out.ly = t.algebra;
            out.matrices = {{"omega", t.W}, {"J", t.J}};
            Bundle b = out;
            return {b, verify(b, what, {"ly", "kahler"})};
        } else {
            throw Error(ErrorKind::FieldError, "positivity needs an algebra over Q");
        }
    }
    throw Error(ErrorKind::UnknownName, "build \"" + what + "\"");
}

}  // namespace

Outcome run_check(const Bundle& b, const std::string& what) {
    return std::visit([&](const auto& t) { return check_typed(t, what); }, b);
}

BuildResult run_build(const Bundle& b, const std::string& what) {
    return std::visit([&](const auto& t) { return build_typed(t, what); }, b);
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::MissingObject:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::UnknownName:
        case ErrorKind::FieldError:
            return 2;
        default:
            return 1;
    }
}

}  // namespace lywb
