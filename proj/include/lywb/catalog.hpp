#pragma once

#include <array>
#include <string>
#include <vector>

#include "lywb/bundle.hpp"

namespace lywb::catalog {

// [e1,e2] = e1, ⟦e1,e2,e2⟧ = e1 with ω = k e1*∧e2*, E = diag(1,−1) and J e1 = e2, J e2 = −e1.
struct Example44 {
    LyAlgebra<Rational> algebra;
    Mat<Rational> W;
    Mat<Rational> E;
    Mat<Rational> J;
};

// Throws ZeroParameter for k = 0.
Example44 example_4_4(const Rational& k);

// The pre-LY structure induced on example_4_4(1) by its symplectic form.
PreLyAlgebra<Rational> example_4_4_induced();

LyAlgebra<Rational> abelian(int n);

// Lie algebras with ⟦x,y,z⟧ = [[x,y],z]: "2dim-nonabelian", "so3", "heisenberg3", "sl2".
// Throws UnknownName.
LyAlgebra<Rational> lie_derived(const std::string& name);
const std::vector<std::string>& lie_names();

template <class T>
struct Named {
    std::string name;
    T value;
};

// Zero pre-LY algebras of dims 1-3 and the structures induced by symplectic catalog algebras of dim ≤ 3.
std::vector<Named<PreLyAlgebra<Rational>>> prely_zoo();

struct Symplectic {
    LyAlgebra<Rational> algebra;
    Mat<Rational> W;
};
std::vector<Named<Symplectic>> symplectic_algebras();

// Adjoint, coadjoint, zero and pre-LY regular representations together with their duals.
std::vector<Named<Representation<Rational>>> representations();

struct Entry {
    std::string name;
    std::string note;
    std::vector<std::string> checks;  // run_check names this entry passes
    Bundle bundle;
};

// Built on first use; every entry is run through its checks and a failure throws Internal.
const std::vector<Entry>& entries();
// Throws UnknownName.
const Entry& entry(const std::string& name);

}  // namespace lywb::catalog
