#pragma once

#include <map>
#include <set>
#include <string>

#include "lywb/prely.hpp"
#include "oracle/naive.hpp"

namespace oracle {

template <class S>
struct PreLy {
    int n;
    const lywb::PreLyAlgebra<S>& A;

    V<S> e(int i) const {
        V<S> v(n, S(0));
        v[i] = S(1);
        return v;
    }
    V<S> st(const V<S>& x, const V<S>& y) const {
        V<S> out(n, S(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) out[k] += x[i] * y[j] * A.a(i, j, k);
        return out;
    }
    V<S> br(const V<S>& x, const V<S>& y, const V<S>& z) const {
        V<S> out(n, S(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) out[l] += x[i] * y[j] * z[k] * A.b(i, j, k, l);
        return out;
    }
    V<S> assoc(const V<S>& x, const V<S>& y, const V<S>& z) const {
        return add(st(st(x, y), z), st(x, st(y, z)), S(-1));
    }
    V<S> bd(const V<S>& x, const V<S>& y, const V<S>& z) const {
        V<S> r = add(br(z, y, x), br(z, x, y), S(-1));
        r = add(r, assoc(y, x, z));
        return add(r, assoc(x, y, z), S(-1));
    }
    V<S> comm(const V<S>& x, const V<S>& y) const { return add(st(x, y), st(y, x), S(-1)); }

    // Names of the defining identities that fail somewhere.
    std::set<std::string> failures() const {
        std::set<std::string> out;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        auto x = e(a), y = e(b), z = e(c), w = e(d);
                        V<S> r2 = add(add(br(z, comm(x, y), w), br(st(y, z), x, w), S(-1)), br(st(x, z), y, w));
                        if (!zero(r2)) out.insert("pre.commutator-brace");
                        V<S> r4 = add(add(br(x, y, comm(z, w)), st(z, br(x, y, w)), S(-1)), st(w, br(x, y, z)));
                        if (!zero(r4)) out.insert("pre.brace-commutator");
                        V<S> l7 = add(add(st(bd(x, y, z), w), st(br(x, y, z), w)), st(br(y, x, z), w), S(-1));
                        V<S> r7 = add(bd(x, y, st(z, w)), st(z, bd(x, y, w)), S(-1));
                        if (!zero(add(l7, r7, S(-1)))) out.insert("pre.D-star");
                        for (int f = 0; f < n; ++f) {
                            auto t = e(f);
                            V<S> r5 = br(br(x, y, z), w, t);
                            r5 = add(r5, br(br(x, y, w), z, t), S(-1));
                            r5 = add(r5, br(x, y, bd(z, w, t)), S(-1));
                            r5 = add(r5, br(x, y, br(z, w, t)), S(-1));
                            r5 = add(r5, br(x, y, br(w, z, t)));
                            r5 = add(r5, bd(z, w, br(x, y, t)));
                            if (!zero(r5)) out.insert("pre.brace-brace");
                            V<S> l6 = br(z, bd(x, y, w), t);
                            l6 = add(l6, br(z, br(x, y, w), t));
                            l6 = add(l6, br(z, br(y, x, w), t), S(-1));
                            l6 = add(l6, br(z, w, bd(x, y, t)));
                            l6 = add(l6, br(z, w, br(x, y, t)));
                            l6 = add(l6, br(z, w, br(y, x, t)), S(-1));
                            V<S> r6 = add(bd(x, y, br(z, w, t)), br(bd(x, y, z), w, t), S(-1));
                            if (!zero(add(l6, r6, S(-1)))) out.insert("pre.brace-D");
                        }
                    }
        return out;
    }
};

}  // namespace oracle
