#pragma once

// Small algebras used across the test suites, built inline so the tests do
// not depend on the bundled data files.

#include "varietylab/algebra_core.hpp"

namespace vlab::testing {

// dim 2 over GF(2), basis e,f: ee=f, ef=0, fe=e, ff=e. Simple and minimal
// (every nonzero element generates), with trivial automorphism group.
inline Algebra alg_minrigid() {
    return algebra_from_table(Field(2), {{{0, 1}, {0, 0}}, {{1, 0}, {1, 0}}});
}

// dim 2 over GF(2), basis e,f: e^2=e, f^2=f, ef=fe=e+f. Simple, commutative,
// idempotent (x^2 = x holds), automorphisms permute the three nonzero
// elements freely.
inline Algebra alg_idem2() {
    return algebra_from_table(Field(2), {{{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}});
}

// dim 2 over GF(2), basis e,f: ee=f, all other products 0. Nilpotent of
// class 2.
inline Algebra alg_nil2() {
    return algebra_from_table(Field(2), {{{0, 1}, {0, 0}}, {{0, 0}, {0, 0}}});
}

// GF(2) viewed as a 1-dim algebra over itself: e^2 = e.
inline Algebra alg_gf2() { return algebra_from_table(Field(2), {{{1}}}); }

// dim 3 over GF(2), basis a,b,c: a^2=b, ab=ba=c, b^2=c, ac=ca=b, bc=cb=c,
// c^2=0. Solvable of length 3, not nilpotent; A^2 = <b,c>, (A^2)^2 = <c>.
inline Algebra alg_solv3() {
    return algebra_from_table(Field(2), {
                                            {{0, 1, 0}, {0, 0, 1}, {0, 1, 0}},
                                            {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}},
                                            {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
                                        });
}

} // namespace vlab::testing
