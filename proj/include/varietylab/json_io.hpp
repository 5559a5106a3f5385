#pragma once

// JSON serialization of algebras:
//   {"q": int, "p": int, "k": int, "dim": int, "table": [[[int,...],...],...]}
// where table[i][j] is the coordinate vector of e_i e_j and field elements
// are integers 0..q-1 (base-p polynomial encoding when k > 1).

#include <string>

#include "varietylab/algebra_core.hpp"

namespace vlab {

Algebra algebra_from_json_text(const std::string &text);
std::string algebra_to_json_text(const Algebra &A);

Algebra load_algebra_file(const std::string &path);
void save_algebra_file(const Algebra &A, const std::string &path);

} // namespace vlab
