// Command-line front end: check and build .lyb.json bundles, browse the catalog.

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lywb/catalog.hpp"

using namespace lywb;
using nlohmann::ordered_json;

namespace {

constexpr size_t kDefaultCap = 25;

std::string tuple_text(const std::vector<int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

std::string residual_text(const std::vector<std::string>& r) {
    std::string s = "(";
    for (size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + r[i];
    return s + ")";
}

void print_outcome(std::ostream& os, const Outcome& o, const std::string& label, bool all, bool as_json) {
    const size_t total = o.violations.size();
    const size_t shown = all ? total : std::min(total, kDefaultCap);
    if (as_json) {
        ordered_json j;
        j["check"] = o.what;
        j["file"] = label;
        j["passed"] = o.passed();
        j["total"] = total;
        j["shown"] = shown;
        j["violations"] = ordered_json::array();
        for (size_t i = 0; i < shown; ++i) {
            const auto& v = o.violations[i];
            j["violations"].push_back({{"axiom", v.axiom}, {"tuple", v.indices}, {"residual", v.residual}});
        }
        os << j.dump(2) << "\n";
        return;
    }
    if (o.passed()) {
        os << o.what << ": PASS  " << label << "\n";
        return;
    }
    os << o.what << ": FAIL  " << label << "  (" << total << (total == 1 ? " violation)\n" : " violations)\n");
    for (size_t i = 0; i < shown; ++i) {
        const auto& v = o.violations[i];
        os << "  " << v.axiom << " @ " << tuple_text(v.indices);
        if (!v.residual.empty()) os << "  residual " << residual_text(v.residual);
        os << "\n";
    }
    if (shown < total) os << "  ... " << (total - shown) << " more; rerun with --all\n";
}

void emit(const Bundle& b, const std::string& out) {
    if (out.empty())
        std::cout << dump_bundle(b);
    else
        write_bundle(out, b);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks and constructions for Lie-Yamaguti algebras"};
    app.require_subcommand(1);

    bool all = false, as_json = false;
    std::string what, path, out, name;

    auto* check = app.add_subcommand("check", "Run a checker on a bundle; exit 0 pass, 1 fail, 2 bad input");
    check->add_option("what", what, "Checker")->required()->check(CLI::IsMember(check_names()));
    check->add_option("file", path, "Input .lyb.json bundle")->required();
    check->add_flag("--all", all, "List every violation instead of the first 25");
    check->add_flag("--json", as_json, "Machine-readable report");

    auto* build = app.add_subcommand("build", "Run a construction and write the resulting bundle");
    build->add_option("what", what, "Construction")->required()->check(CLI::IsMember(build_names()));
    build->add_option("file", path, "Input .lyb.json bundle")->required();
    build->add_option("--out", out, "Output path (default: stdout)");
    build->add_flag("--all", all, "List every violation if re-verification fails");
    build->add_flag("--json", as_json, "Machine-readable verification report on failure");

    auto* cat = app.add_subcommand("catalog", "Built-in verified examples");
    cat->require_subcommand(1);
    auto* list = cat->add_subcommand("list", "List catalog entries");
    list->add_flag("--json", as_json, "Machine-readable listing");
    auto* exp = cat->add_subcommand("export", "Write a catalog entry as a bundle");
    exp->add_option("name", name, "Entry name")->required();
    exp->add_option("--out", out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) {
            Outcome o = run_check(read_bundle(path), what);
            print_outcome(std::cout, o, path, all, as_json);
            return o.passed() ? 0 : 1;
        }
        if (*build) {
            BuildResult r = run_build(read_bundle(path), what);
            if (!r.verification.passed()) {
                print_outcome(std::cerr, r.verification, path, all, as_json);
                return 1;
            }
            emit(r.bundle, out);
            return 0;
        }
        if (*list) {
            ordered_json j = ordered_json::array();
            for (const auto& e : catalog::entries()) {
                if (as_json)
                    j.push_back({{"name", e.name}, {"note", e.note}, {"checks", e.checks}});
                else
                    std::cout << e.name << "  " << e.note << "\n";
            }
            if (as_json) std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*exp) {
            emit(catalog::entry(name).bundle, out);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
