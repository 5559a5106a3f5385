#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "varietylab/algebra_core.hpp"
#include "varietylab/caps.hpp"

namespace vlab {

// |GL_m(F_q)| = q^(m^2) * prod_{i=1..m} (1 - q^-i), plus the partial product
// defect -log_q prod (the finite-m stand-in for the asymptotic constant).
struct GlInfo {
    std::uint64_t order = 0;
    double defect = 0.0;
};

GlInfo gl_order(std::size_t m, int q);

// All invertible m x m matrices, in odometer order of their entry vectors.
// Requires |GL_m(F_q)| <= caps.gl_order.
std::vector<Mat> invertible_matrices(const Field &F, std::size_t m,
                                     Caps caps = Caps::from_env());

// Lexicographically least structure tensor in the GL-orbit of A, in the
// fixed (i, j, l) flattening order. Two algebras are isomorphic exactly when
// their canonical tensors agree.
std::vector<fel> canonical_form(const Algebra &A, Caps caps = Caps::from_env());

// True when A is the direct sum of simple ideals: its minimal ideals are all
// simple and together span A.
bool is_direct_sum_of_simples(const Algebra &A);

// True when every subalgebra (including A itself) is a direct sum of simples.
bool is_inherently_semisimple(const Algebra &A);

struct CensusClass {
    std::vector<fel> tensor; // canonical representative
    std::uint64_t orbit_size = 0;
    std::uint64_t aut_order = 0; // stabilizer size, = gl_order / orbit_size
    bool simple = false;
    bool rigid = false; // aut_order == 1
    bool cyclic = false;
    bool nilpotent = false;
    bool solvable = false;
    bool minimal = false;
    bool no_proper_subalg_dim_gt_1 = false;
    bool inherently_semisimple = false;
};

struct CensusReport {
    std::size_t m = 0;
    int q = 0;
    std::uint64_t tensor_total = 0; // q^(m^3)
    std::uint64_t gl = 0;
    std::uint64_t phi = 0;            // number of isomorphism classes
    std::uint64_t orbit_size_sum = 0; // must equal tensor_total
    std::uint64_t n_simple = 0, n_rigid = 0, n_cyclic = 0, n_nilpotent = 0,
                  n_solvable = 0, n_minimal = 0, n_no_proper_subalg_dim_gt_1 = 0,
                  n_inherently_semisimple = 0;
    std::vector<CensusClass> classes; // sorted by canonical tensor
};

// Exhaustive isomorphism-class census: scan all q^(m^3) tensors, keep each
// tensor that is the least element of its own GL-orbit, and evaluate the
// properties once per class. Supported without force: (1,2), (1,3), (2,2),
// (2,3); the long (3,2) scan runs only when force is set. nshards > 1 splits
// the tensor space by index stride across threads; the merged report is
// identical for every shard count.
CensusReport enumerate_algebras(std::size_t m, int q, std::size_t nshards = 1,
                                bool force = false, Caps caps = Caps::from_env());

// q^((m-1)m(2m-1)/6): the number of structure tensors supported strictly
// below the diagonal in the sense c_ab^l = 0 unless l < min(a, b). For
// m <= 2 the tensors are also counted directly and the two must agree.
std::uint64_t count_nilpotent_flag_tuples(std::size_t m, int q);

// rho(m) = q^(2m^2 - 3m + 1) * rho(m-1), rho(1) = 1: tensors with
// c_ab^l = 0 unless l < max(a, b). Direct count check for m <= 2.
std::uint64_t count_solvable_flag_tuples(std::size_t m, int q);

struct PropertyFraction {
    std::string name;
    std::uint64_t count = 0;
    double fraction = 0.0;
};

// Per-property class fractions of a computed census. Only exact small-m
// values: no asymptotic claim is checked or implied.
std::vector<PropertyFraction> property_fractions(const CensusReport &r);

} // namespace vlab
