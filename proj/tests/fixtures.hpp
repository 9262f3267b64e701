#pragma once

// Hand-entered structure constants shared by the unit tests, independent of the catalog.

#include <array>

#include "lywb/prely.hpp"

namespace fx {

using lywb::Rational;

template <class S = Rational>
lywb::LyAlgebra<S> ex44() {
    lywb::Tensor3<S> c(2);
    lywb::Tensor4<S> d(2);
    c(0, 1, 0) = S(1);
    c(1, 0, 0) = S(-1);
    d(0, 1, 1, 0) = S(1);
    d(1, 0, 1, 0) = S(-1);
    return {c, d};
}

// [e1,e2] = e2 with ⟦e1,e2,e2⟧ = e1: violates the ternary-derivation axiom only.
inline lywb::LyAlgebra<Rational> corrupted() {
    lywb::Tensor3<Rational> c(2);
    lywb::Tensor4<Rational> d(2);
    c(0, 1, 1) = Rational(1);
    c(1, 0, 1) = Rational(-1);
    d(0, 1, 1, 0) = Rational(1);
    d(1, 0, 1, 0) = Rational(-1);
    return {c, d};
}

template <class S = Rational>
lywb::LyAlgebra<S> abelian(int n) {
    return {lywb::Tensor3<S>(n), lywb::Tensor4<S>(n)};
}

// Lie algebra from {i, j, k, v}: [e_i,e_j] = v e_k.
inline lywb::LyAlgebra<Rational> lie(int n, std::initializer_list<std::array<int, 4>> brackets) {
    lywb::Tensor3<Rational> c(n);
    for (auto [i, j, k, v] : brackets) {
        c(i, j, k) = Rational(v);
        c(j, i, k) = Rational(-v);
    }
    return lywb::from_lie(c);
}

inline lywb::LyAlgebra<Rational> so3() { return lie(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}); }
inline lywb::LyAlgebra<Rational> heisenberg() { return lie(3, {{0, 1, 2, 1}}); }
inline lywb::LyAlgebra<Rational> sl2() { return lie(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}); }

// Pre-LY structure induced on ex44 by ω = e1*∧e2*:
// e1*e2 = e1, e2*e2 = e2, {e2,e2,e1} = e1, {e2,e2,e2} = e2.
template <class S = Rational>
lywb::PreLyAlgebra<S> induced44() {
    lywb::Tensor3<S> a(2);
    lywb::Tensor4<S> b(2);
    a(0, 1, 0) = S(1);
    a(1, 1, 1) = S(1);
    b(1, 1, 0, 0) = S(1);
    b(1, 1, 1, 1) = S(1);
    return {a, b};
}

template <class S = Rational>
lywb::Mat<S> mat(std::initializer_list<std::initializer_list<long>> rows) {
    lywb::Mat<S> m(static_cast<long>(rows.size()), static_cast<long>(rows.begin()->size()));
    long i = 0;
    for (auto& r : rows) {
        long j = 0;
        for (long v : r) m(i, j++) = S(v);
        ++i;
    }
    return m;
}

template <class S = Rational>
lywb::Vec<S> vec(std::initializer_list<long> xs) {
    lywb::Vec<S> v(static_cast<long>(xs.size()));
    long i = 0;
    for (long x : xs) v(i++) = S(x);
    return v;
}

}  // namespace fx
