#pragma once

// Homomorphisms between finite algebras: isomorphism search, automorphism
// groups, epimorphism enumeration, and the predicates built on top of them
// (residually-A, characteristic subspaces, CS/CW, full invariance, subideal
// depth, retracts, niceness, diagonal decompositions in direct powers).

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "varietylab/algebra_core.hpp"
#include "varietylab/caps.hpp"

namespace vlab {

// A linear map between algebras over one field. Row i of matrix is the image
// of the i-th source basis vector; elements map as v -> v * matrix. The
// source/target pointers are non-owning and must outlive the Morphism.
struct Morphism {
    const Algebra *source = nullptr;
    const Algebra *target = nullptr;
    Mat matrix; // (source->m) x (target->m)
};

Vec apply(const Morphism &f, const Vec &v);

// True iff f is multiplicative on all basis pairs (bilinearity covers the
// rest). Throws error on shape or field mismatch.
bool is_homomorphism(const Morphism &f);

// {v : f(v) = 0}; an ideal of the source whenever f is a homomorphism.
Subspace kernel(const Morphism &f);
// Row space of the matrix; a subalgebra of the target for homomorphisms.
Subspace image(const Morphism &f);

// The smallest subalgebra of A x B (componentwise product) containing the
// pairs (gens[i], images[i]), as a subspace of F^{mA+mB}. It is the graph of
// a homomorphism defined on the subalgebra generated by the gens iff it
// meets {0} x B trivially; that homomorphism is then unique.
struct GraphClosure {
    Subspace graph;             // RREF rows, A-coordinates first
    bool consistent = false;    // no nonzero element with zero A-part
    std::size_t domain_dim = 0; // dim of the projection to A
};
GraphClosure close_graph(const Algebra &A, const Algebra &B,
                         const std::vector<Vec> &gens,
                         const std::vector<Vec> &images);

// The homomorphism A -> B with gens[i] -> images[i], when one exists and the
// gens generate all of A; absent otherwise.
std::optional<Morphism> extend_hom(const Algebra &A, const std::vector<Vec> &gens,
                                   const Algebra &B, const std::vector<Vec> &images);

// Greedy minimal generating tuple: scan F^m in odometer order and keep each
// vector that enlarges the generated subalgebra.
std::vector<Vec> generating_tuple(const Algebra &A);

// Backtracking over images of a generating tuple of A, pruning prefixes whose
// graph closure is inconsistent or has a nonzero kernel.
std::optional<Morphism> find_isomorphism(const Algebra &A, const Algebra &B,
                                         Caps caps = Caps::from_env());

struct AutGroup {
    std::size_t order = 0;
    std::vector<Morphism> generators; // product closure is the full group
};
// Exact order and a generating set. Throws cap_exceeded when the image-tuple
// space |A|^{#gens} is larger than caps.tuple_eval.
AutGroup automorphism_group(const Algebra &A, Caps caps = Caps::from_env());

// Every surjective homomorphism B -> A, enumerated over the |A|^n image
// tuples of the given generating tuple of B. Tuples with index % nshards !=
// shard are skipped, so the tuple space can be split across workers. fn
// returning false stops the scan.
void for_each_epimorphism(const Algebra &B, const std::vector<Vec> &gens,
                          const Algebra &A,
                          const std::function<bool(const Morphism &)> &fn,
                          std::size_t shard = 0, std::size_t nshards = 1,
                          Caps caps = Caps::from_env());
std::vector<Morphism> epimorphisms(const Algebra &B, const std::vector<Vec> &gens,
                                   const Algebra &A, Caps caps = Caps::from_env());

// True iff the kernels of all epimorphisms B -> A intersect to zero. Tries
// randomly chosen image tuples first (any verified epimorphism set whose
// kernels meet in 0 certifies the answer), then falls back to the full scan.
bool is_residually(const Algebra &B, const std::vector<Vec> &gens,
                   const Algebra &A, Caps caps = Caps::from_env());

// S is invariant under every automorphism (generators suffice: invariance
// under a generating set of a finite group gives invariance under the group).
bool is_characteristic(const Algebra &A, const Subspace &S, const AutGroup &aut);
bool is_characteristic(const Algebra &A, const Subspace &S,
                       Caps caps = Caps::from_env());

// CS: no proper nonzero characteristic subalgebra. CW: no proper nonzero
// characteristic ideal.
bool is_CS(const Algebra &A, Caps caps = Caps::from_env());
bool is_CW(const Algebra &A, Caps caps = Caps::from_env());

// S is invariant under every endomorphism of A (enumerated by generating-
// tuple images; throws cap_exceeded past caps.tuple_eval).
bool is_fully_invariant(const Algebra &A, const Subspace &S,
                        Caps caps = Caps::from_env());

// Descending chain A_0 = A, A_{i+1} = smallest ideal of A_i containing B.
// This is the fastest-descending chain of subideals, so it reaches B iff any
// chain of successive ideals does: any witness chain B = C_s <| ... <| C_0 = A
// satisfies A_i <= C_i by induction. Returns the number of steps needed, or
// absent when the chain stabilizes above B. Requires B to be a subalgebra.
std::optional<std::size_t> subideal_depth(const Algebra &A, const Subspace &B);

// Some ideal I of A is a vector-space complement of the subalgebra S.
bool is_retract(const Algebra &A, const Subspace &S, Caps caps = Caps::from_env());
// Every ideal of every subalgebra B of A has a complementary subalgebra in B.
bool is_nice(const Algebra &A, Caps caps = Caps::from_env());

// Writes img <= S^k as an internal direct sum of twisted diagonals: returns
// disjoint index groups J_1, ..., J_t (factors with zero projection omitted)
// such that the part of img supported on each J_i projects bijectively onto
// every factor in J_i. Such a decomposition exists iff img is the image of an
// injective homomorphism from some direct power of S; absent otherwise.
// Requires S simple with S^2 != 0.
std::optional<std::vector<std::vector<std::size_t>>>
diagonal_decomposition(const Algebra &S, std::size_t k, const Subspace &img);

// k-fold direct sum of copies of S (k = 0 gives the zero-dimensional algebra).
Algebra direct_power(const Algebra &S, std::size_t k);

} // namespace vlab
