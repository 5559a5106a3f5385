#pragma once

#include <cstdint>

namespace vlab {

// Size caps guarding the exhaustive-search operations. Callers that know
// what they are doing can raise them (the CLI honors the VARIETYLAB_CAP
// environment variable, which replaces every limit with one value).
struct Caps {
    std::uint64_t subspace_enum = std::uint64_t(1) << 16; // max q^m for element-seed scans
    std::uint64_t tuple_eval = std::uint64_t(1) << 24;    // max assignment tuples
    std::uint64_t ambient_dims = 4096;                    // max free-construction ambient dimension
    std::uint64_t gl_order = 10000;                       // max |GL_m(q)| traversed per tensor

    // Reads VARIETYLAB_CAP; when set to a positive integer, every limit
    // above is replaced by that value. Documented as unsafe.
    static Caps from_env();
};

} // namespace vlab
