#pragma once

#include <string>
#include <vector>

#include "lywb/linalg.hpp"
#include "lywb/parallel.hpp"

namespace lywb {

template <Field S>
struct Violation {
    std::string axiom;
    std::vector<int> indices;  // 1-based basis labels
    Vec<S> residual;
};

template <Field S>
struct CheckReport {
    std::vector<Violation<S>> violations;

    bool passed() const { return violations.empty(); }
    explicit operator bool() const { return passed(); }

    void add(std::string axiom, std::vector<int> indices, Vec<S> residual = Vec<S>()) {
        violations.push_back({std::move(axiom), std::move(indices), std::move(residual)});
    }
    void append(const CheckReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    bool mentions(const std::string& axiom) const {
        for (const auto& v : violations)
            if (v.axiom == axiom) return true;
        return false;
    }
};

// Visits every tuple of the box dims[0] x dims[1] x ... whose first coordinate is `first`,
// in lexicographic order.
template <class Fn>
void for_each_tuple(const std::vector<int>& dims, int first, Fn fn) {
    for (size_t p = 1; p < dims.size(); ++p)
        if (dims[p] == 0) return;
    std::vector<int> t(dims.size(), 0);
    t[0] = first;
    for (;;) {
        fn(t);
        size_t p = dims.size();
        for (;;) {
            if (p == 1) return;
            --p;
            if (++t[p] < dims[p]) break;
            t[p] = 0;
        }
    }
}

// Evaluates `residual` on every tuple of the box dims[0] x dims[1] x ... accepted by `keep`,
// in lexicographic order, recording nonzero residuals under `axiom`. Tuples are 0-based
// internally and reported 1-based. The first coordinate is spread across workers.
template <Field S, class Keep, class Residual>
void sweep(CheckReport<S>& report, const std::string& axiom, const std::vector<int>& dims, Keep keep,
           Residual residual) {
    if (dims.empty() || dims[0] == 0) return;
    auto found = parallel_collect<Violation<S>>(dims[0], [&](int first, std::vector<Violation<S>>& out) {
        for_each_tuple(dims, first, [&](const std::vector<int>& t) {
            if (!keep(t)) return;
            Vec<S> r = residual(t);
            if (all_zero(r)) return;
            std::vector<int> label(t);
            for (int& x : label) ++x;
            out.push_back({axiom, std::move(label), std::move(r)});
        });
    });
    report.violations.insert(report.violations.end(), found.begin(), found.end());
}

// Same, for identities whose value is an operator on a module: one violation per nonzero
// column, with the module basis index appended to the tuple.
template <Field S, class Keep, class Residual>
void sweep_operator(CheckReport<S>& report, const std::string& axiom, const std::vector<int>& dims, Keep keep,
                    Residual residual) {
    if (dims.empty() || dims[0] == 0) return;
    auto found = parallel_collect<Violation<S>>(dims[0], [&](int first, std::vector<Violation<S>>& out) {
        for_each_tuple(dims, first, [&](const std::vector<int>& t) {
            if (!keep(t)) return;
            Mat<S> r = residual(t);
            for (int col = 0; col < r.cols(); ++col) {
                if (all_zero(r.col(col))) continue;
                std::vector<int> label(t);
                label.push_back(col);
                for (int& x : label) ++x;
                out.push_back({axiom, std::move(label), Vec<S>(r.col(col))});
            }
        });
    });
    report.violations.insert(report.violations.end(), found.begin(), found.end());
}

inline auto every_tuple() {
    return [](const std::vector<int>&) { return true; };
}

}  // namespace lywb
