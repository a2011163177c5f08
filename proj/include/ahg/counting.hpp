#pragma once

#include "ahg/cochain.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ahg {

/// A requested brute-force computation is larger than the configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A coboundary map reduced to machine integers, as the linear system
/// behind brute-force kernel counting over the flat coordinates.
struct FlatMap {
    int rows = 0;
    int cols = 0;
    std::vector<long long> mat;        // row-major, entries in [0, tgt_moduli[r])
    std::vector<long long> src_moduli; // cyclic order of each source coordinate
    std::vector<long long> tgt_moduli;

    /// The coboundary at degree p of the hom-complex.
    static FlatMap from(const HomComplex& h, int p);

    /// Number of source tuples, as an exact integer.
    Int domain_size() const;
};

/// |ker| by evaluating the full product over every source tuple.
/// Plain per-index decode and matrix-vector product; the serial reference.
long long count_kernel_reference(const FlatMap& m);

/// Same count; walks the tuples with incremental column updates and
/// splits the index range across OpenMP threads.
long long count_kernel_parallel(const FlatMap& m);

struct CountingReport {
    Int hom0;    // |hom^0|
    Int homm1;   // |hom^{-1}|
    Int ker_d0;  // |ker delta^0|
    Int ker_dm1; // |ker delta^{-1}|
    Int gsd;     // ker_d0 * ker_dm1 / homm1
};

/// Ground-state degeneracy by pure counting. Enumerates hom^0 and hom^{-1};
/// throws CapExceeded when either enumeration is larger than max_count.
CountingReport counting_gsd(const HomComplex& h, const Int& max_count = Int(1) << 20,
                            bool parallel = true);

} // namespace ahg
