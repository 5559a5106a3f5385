#pragma once

// Nonassociative polynomials: binary-tree monomials with coefficients in a
// finite field, a text grammar for them, identity / quasi-identity checking
// by exhaustive evaluation, verbal ideals, and the standard identity
// families (bounded nilpotency class / depth, solvability).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "varietylab/algebra_core.hpp"

namespace vlab {

// Immutable monomial tree. A leaf holds a 0-based variable index; an inner
// node is the product of its children.
struct Monomial;
using MonPtr = std::shared_ptr<const Monomial>;

struct Monomial {
    int var = -1; // >= 0 for leaves
    MonPtr l, r;  // set for inner nodes
    bool is_leaf() const { return var >= 0; }
};

MonPtr mon_var(int index);
MonPtr mon_mul(MonPtr a, MonPtr b);
bool mon_equal(const MonPtr &a, const MonPtr &b);
// Canonical text: leaves "x1", "x2", ...; products "(u v)".
std::string mon_to_string(const MonPtr &m);

std::size_t mon_degree(const MonPtr &m);
// Leaf count per variable, indexed 0..nvars-1.
std::vector<std::size_t> mon_multidegree(const MonPtr &m, std::size_t nvars);
// depth(leaf) = 0, depth(uv) = max(depth u, depth v) + 1.
std::size_t mon_depth(const MonPtr &m);
// Sorted list of distinct variable indices appearing in m.
std::vector<int> mon_content(const MonPtr &m);

struct MonomialStats {
    std::size_t degree = 0;
    std::vector<std::size_t> multidegree;
    std::size_t depth = 0;
    std::vector<int> content;
};
MonomialStats monomial_stats(const MonPtr &m, std::size_t nvars);

// A normalized polynomial: distinct monomials with nonzero coefficients,
// sorted by (degree, canonical text). The empty term list is the zero
// polynomial. No degree-0 (constant) terms exist.
struct NAPoly {
    int field_q = 0;
    std::size_t nvars = 0; // 1 + max variable index used
    std::vector<std::pair<fel, MonPtr>> terms;

    bool is_zero() const { return terms.empty(); }
};

NAPoly make_poly(const Field &F, std::vector<std::pair<fel, MonPtr>> terms);
NAPoly poly_add(const Field &F, const NAPoly &a, const NAPoly &b);
NAPoly poly_mul(const Field &F, const NAPoly &a, const NAPoly &b);
std::string poly_to_string(const NAPoly &p);

// Grammar (whitespace and '#'-to-end-of-line comments ignored):
//   poly    := '-'? term (('+'|'-') term)*
//   term    := coeff? factor+        (juxtaposition, folded left-normed)
//   factor  := primary ('^' nat)?    (power = left-normed self-product)
//   primary := 'x' nat | '(' poly ')'
//   coeff   := nat                   (reduced mod the field characteristic)
// Variables are written 1-based ("x1"). A bare constant is rejected: every
// term must contain at least one variable.
NAPoly parse_poly(const Field &F, const std::string &text);

Vec evaluate(const NAPoly &p, const Algebra &A, const std::vector<Vec> &assignment);

// True iff p vanishes under every assignment; exhaustive over |A|^nvars
// tuples (capped by caps.tuple_eval).
bool is_identity(const Algebra &A, const NAPoly &p);

struct QuasiIdentity {
    std::vector<NAPoly> premises;
    NAPoly conclusion;
    std::size_t nvars = 0;
};

struct QuasiCheck {
    bool holds = true;
    std::vector<Vec> counterexample; // a tuple meeting all premises but not
                                     // the conclusion, when holds is false
};
QuasiCheck check_quasi_identity(const Algebra &A, const QuasiIdentity &qi);

// Ideal generated by all values of all the polynomials.
Subspace verbal_ideal(const Algebra &A, const std::vector<NAPoly> &polys);

enum class IdentityFamily { nilpotent_class, nilpotent_depth, solvable };

// nilpotent_class c: all bracketings of x1...x_{c+1} (Catalan(c) of them).
// nilpotent_depth d: the multilinear degree-(d+1) monomials of depth exactly
// d, variables labeled left to right (one labeling per tree shape suffices
// for an identity basis).
// solvable l: the single polynomial s_l, where s_1 = x1 x2 and s_k is the
// product of two s_{k-1} on disjoint fresh variables.
std::vector<NAPoly> identity_family(IdentityFamily kind, std::size_t param);

// Whether s_l = 0 holds in A, decided without enumerating 2^l-tuples: the
// value set V_1 = {ab} and V_k = {uv : u,v in V_{k-1}} satisfies
// "s_l vanishes iff V_l = {0}" because the variables of s_l are disjoint.
bool solvable_identity_holds(const Algebra &A, std::size_t level);

// Exact identity test over the 1-dim algebra GF(q) acting on itself, via
// reduced multidegrees: r_i = 0 when the variable is absent, otherwise
// 1 + ((d_i - 1) mod (q-1)), which distinguishes "absent" from "exponent
// divisible by q-1". p vanishes on GF(q) iff every reduced-profile group of
// terms has zero coefficient sum.
bool is_identity_of_ground_field(const Field &F, const NAPoly &p);
// Splits p into its reduced-profile groups.
std::vector<NAPoly> quasihomogeneous_components(const Field &F, const NAPoly &p);
bool is_quasihomogeneous(const Field &F, const NAPoly &p);

enum class OneDimKind { zero_mult, ground_field };

// Whether the variety generated by A contains the 1-dim algebra of the given
// kind; decided on the rank-1 free algebra of the variety.
bool variety_contains_one_dim(const Algebra &A, OneDimKind which);

} // namespace vlab
