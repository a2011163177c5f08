#pragma once

#include "ahg/chain_complex.hpp"

#include <map>
#include <vector>

namespace ahg {

/// Degree-p element of the graded hom-complex hom(C,G): a value in G_{n-p}
/// for every n-cell, stored as one flat coordinate vector. Block order is
/// ascending cell degree, then cell index, then invariant-factor index of
/// the value group.
struct Cochain {
    int p = 0;
    std::vector<Int> flat;

    bool operator==(const Cochain&) const = default;
};

/// Character of the degree-p hom-group: one exponent per flat coordinate,
/// exponent i taken mod the flat modulus d_i. Pairs with a Cochain in Q/Z.
struct DualCochain {
    int p = 0;
    std::vector<Int> exponents;

    bool operator==(const DualCochain&) const = default;
};

/// Flat coordinate system of hom(C,G)^p.
struct CochainSpace {
    struct Block {
        int degree = 0;       // cell degree n
        int cells = 0;        // |K_n|
        AbelianGroup values;  // G_{n-p}
        int coords_per_cell = 0;
        int offset = 0;       // first flat coordinate of this block
    };

    int p = 0;
    std::vector<Block> blocks;  // ascending degree; only nontrivial blocks
    std::vector<Int> moduli;    // flat moduli, one per coordinate
    AbelianGroup group;         // canonical form; flat = presentation coords

    int dim() const { return int(moduli.size()); }
    Int order() const;
    const Block* block_at_degree(int n) const;  // nullptr when absent
    /// First flat coordinate of the given cell, -1 when the block is absent.
    int offset_of(int n, int cell) const;
};

/// H^p(C,G) = ker(delta^p) / im(delta^{p-1}) with exact class and
/// representative maps in flat cochain coordinates.
class CohomologyClassSet {
public:
    int p() const { return p_; }
    const AbelianGroup& group() const { return subq_.group(); }

    /// Class of a cocycle; throws std::invalid_argument when delta(f) != 0.
    GroupElement class_of(const Cochain& f) const;
    /// A cocycle representing the class; class_of(representative(c)) == c.
    Cochain representative(const GroupElement& cls) const;

private:
    friend class HomComplex;
    CohomologyClassSet(int p, CochainSpace space, Subquotient subq);

    int p_;
    CochainSpace space_;
    Subquotient subq_;
};

/// The graded complex hom(C,G)^* for a free geometric complex C and a finite
/// gauge complex G, with the coboundary delta^p, dual (adjoint) maps,
/// pairings, localized cochains and cohomology.
///
/// Accessors build and cache spaces and matrices lazily; warm the degrees you
/// need before sharing one instance across threads.
class HomComplex {
public:
    HomComplex(GeometricComplex space, ChainComplex gauge);

    const GeometricComplex& space() const { return space_; }
    const ChainComplex& gauge() const { return gauge_; }

    /// Degrees outside [p_min, p_max] have trivial cochain spaces.
    int p_min() const { return p_lo_; }
    int p_max() const { return p_hi_; }

    const CochainSpace& cochain_space(int p) const;
    /// Matrix of delta^p : hom^p -> hom^{p+1} in flat coordinates.
    const IntMatrix& delta_matrix(int p) const;
    /// The same map between the canonical presentations of the two groups.
    const Homomorphism& delta_hom(int p) const;

    Cochain zero_cochain(int p) const;
    Cochain cochain_from_flat(int p, std::vector<Int> flat) const;
    Cochain add(const Cochain& f, const Cochain& g) const;
    Cochain sub(const Cochain& f, const Cochain& g) const;
    Cochain neg(const Cochain& f) const;
    bool is_zero(const Cochain& f) const;

    /// Value of f at the given cell, as an element of G_{n-p}.
    GroupElement component(const Cochain& f, int n, int cell) const;
    void set_component(Cochain& f, int n, int cell, const GroupElement& g) const;

    /// (delta^p f)_n = f_{n-1} d_n - (-1)^p dG_{n-p} f_n.
    Cochain delta(const Cochain& f) const;
    /// Adjoint map on characters: pair(delta_dual(m), f) == pair(m, delta(f)).
    DualCochain delta_dual(const DualCochain& m) const;
    /// chi_m(f) in Q/Z; bilinear and non-degenerate.
    RationalPhase pair(const DualCochain& m, const Cochain& f) const;

    /// Cochain supported on the single cell x with value g in G_{n-p}.
    Cochain local_map(int p, int n, int cell, const GroupElement& g) const;
    /// Character supported on the single cell x: f |-> r(f_n(x)).
    DualCochain local_dual(int p, int n, int cell, const Character& r) const;

    bool is_flat(const Cochain& f) const;  // delta(f) == 0
    /// Whether f - g lies in the image of delta^{p-1} (lattice membership).
    bool gauge_equivalent(const Cochain& f, const Cochain& g) const;

    const CohomologyClassSet& cohomology(int p) const;

private:
    CochainSpace build_space(int p) const;
    IntMatrix build_delta(int p) const;

    GeometricComplex space_;
    ChainComplex gauge_;
    int p_lo_ = 0, p_hi_ = -1;

    mutable std::map<int, CochainSpace> spaces_;
    mutable std::map<int, IntMatrix> deltas_;
    mutable std::map<int, Homomorphism> delta_homs_;
    mutable std::map<int, CohomologyClassSet> cohoms_;
};

} // namespace ahg
