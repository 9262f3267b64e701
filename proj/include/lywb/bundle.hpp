#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lywb/kahler.hpp"

namespace lywb {

// Everything a .lyb.json file can carry. Named matrices: omega, B, S (forms), E, J, phi (maps).
template <Field S>
struct BundleT {
    int dim = 0;
    std::string name;
    std::string note;
    std::optional<LyAlgebra<S>> ly;
    std::optional<PreLyAlgebra<S>> prely;
    std::optional<Representation<S>> rep;  // a module over *ly
    std::optional<LeviCivita<S>> lc;
    std::map<std::string, Mat<S>> matrices;

    const LyAlgebra<S>& need_ly() const;
    const PreLyAlgebra<S>& need_prely() const;
    const Representation<S>& need_rep() const;
    // Throws MissingObject(key).
    const Mat<S>& need(const std::string& key) const;
};

using Bundle = std::variant<BundleT<Rational>, BundleT<Gaussian>>;

// Throws ParseError with a JSON-pointer location, or DimensionMismatch.
Bundle parse_bundle(std::string_view text);
Bundle read_bundle(const std::string& path);
std::string dump_bundle(const Bundle& b);
void write_bundle(const std::string& path, const Bundle& b);

struct ReportLine {
    std::string axiom;
    std::vector<int> indices;
    std::vector<std::string> residual;
};

struct Outcome {
    std::string what;
    std::vector<ReportLine> violations;
    bool passed() const { return violations.empty(); }
};

template <Field S>
Outcome to_outcome(std::string what, const CheckReport<S>& r);

const std::vector<std::string>& check_names();
const std::vector<std::string>& build_names();

// Throws UnknownName for an unknown check, MissingObject when an input is absent.
Outcome run_check(const Bundle& b, const std::string& what);

struct BuildResult {
    Bundle bundle;
    Outcome verification;  // the result re-checked before it is handed out
};

BuildResult run_build(const Bundle& b, const std::string& what);

// 2 for malformed input (ParseError, MissingObject, DimensionMismatch, UnknownName, FieldError), else 1.
int exit_code_for(const Error& e);

}  // namespace lywb
