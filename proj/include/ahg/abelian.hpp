#pragma once

#include "ahg/int_matrix.hpp"
#include "ahg/numeric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ahg {

class AbelianGroup;

/// Element of a finitely generated abelian group in canonical coordinates
/// (coordinate i lives in Z_{d_i}, or in Z when d_i == 0).
struct GroupElement {
    std::vector<Int> coords;

    bool operator==(const GroupElement& o) const = default;
};

/// Finitely generated abelian group presented by generators and relations,
/// held in canonical form: invariant factors d_1 | d_2 | ... (each >= 2)
/// followed by one 0 per free rank. Transition matrices between presentation
/// and canonical coordinates are kept for lifting and coordinate changes.
class AbelianGroup {
public:
    AbelianGroup(); // trivial group

    /// relations: one column per relation, num_generators rows.
    static AbelianGroup from_presentation(int num_generators, const IntMatrix& relations);
    /// Convenience for a product of cyclic groups given by the diagonal
    /// presentation diag(factors); factor 0 means a Z summand.
    static AbelianGroup from_factors(const std::vector<Int>& factors);

    int num_coords() const;
    const std::vector<Int>& moduli() const;
    int free_rank() const;
    bool is_trivial() const;
    bool is_finite() const;
    Int order() const; // throws std::domain_error when infinite

    int presentation_gens() const;
    const IntMatrix& to_canonical() const;   // num_coords x presentation_gens
    const IntMatrix& from_canonical() const; // presentation_gens x num_coords

    bool same_shape(const AbelianGroup& o) const { return moduli() == o.moduli(); }
    std::string render() const; // "0", "Z", "Z^2 + Z_2 + Z_4", ...

    GroupElement zero() const;
    GroupElement element(std::vector<Int> coords) const;
    GroupElement reduce(std::vector<Int> coords) const;
    GroupElement from_presentation_coords(const std::vector<Int>& x) const;
    std::vector<Int> to_presentation_coords(const GroupElement& e) const; // an integer lift

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(const GroupElement& a, const Int& k) const;
    bool is_zero(const GroupElement& a) const;
    Int element_order(const GroupElement& a) const;

    /// All elements in lexicographic coordinate order (finite groups only).
    std::vector<GroupElement> all_elements() const;

private:
    struct Data {
        std::vector<Int> moduli;
        int presentation_gens = 0;
        IntMatrix to_canon, from_canon;
    };
    std::shared_ptr<const Data> d_;
};

/// Homomorphism between groups in canonical coordinates: matrix has
/// target.num_coords() rows and source.num_coords() columns.
class Homomorphism {
public:
    Homomorphism(AbelianGroup source, AbelianGroup target, IntMatrix matrix);
    static Homomorphism zero(AbelianGroup source, AbelianGroup target);
    static Homomorphism identity(AbelianGroup g);
    /// Matrix given in presentation coordinates of both sides.
    static Homomorphism from_presentation_matrix(const AbelianGroup& source,
                                                 const AbelianGroup& target,
                                                 const IntMatrix& m);

    const AbelianGroup& source() const { return src_; }
    const AbelianGroup& target() const { return tgt_; }
    const IntMatrix& matrix() const& { return m_; }
    // on a temporary, hand out a copy so callers cannot keep a dangling reference
    IntMatrix matrix() && { return std::move(m_); }

    GroupElement apply(const GroupElement& x) const;
    Homomorphism after(const Homomorphism& inner) const; // this ∘ inner
    Homomorphism plus(const Homomorphism& o) const;
    Homomorphism negated() const;
    bool is_zero() const { return m_.is_zero(); }
    bool operator==(const Homomorphism& o) const;

    /// Some x with f(x) == y, or nullopt when y is not in the image.
    std::optional<GroupElement> preimage(const GroupElement& y) const;

private:
    AbelianGroup src_, tgt_;
    IntMatrix m_; // entries reduced mod target moduli
};

struct Subgroup {
    AbelianGroup group;
    Homomorphism inclusion; // group -> ambient, injective
};

struct QuotientGroup {
    AbelianGroup group;
    Homomorphism projection; // ambient -> group, surjective
};

Subgroup kernel(const Homomorphism& f);
Subgroup image(const Homomorphism& f);
/// Quotient of `ambient` by the image of `into_ambient`.
QuotientGroup quotient(const AbelianGroup& ambient, const Homomorphism& into_ambient);

/// Hom(A, B) as a group together with the dictionary between its elements
/// and actual homomorphisms.
struct HomGroup {
    AbelianGroup group;
    AbelianGroup src, tgt;
    struct Factor {
        int src_coord, tgt_coord;
        Int modulus;   // order of this cyclic block (0 for a Z block)
        Int gen_value; // matrix entry of the block's generator hom
    };
    std::vector<Factor> factors; // presentation coordinates of `group`

    Homomorphism hom_of(const GroupElement& e) const;
    GroupElement element_of(const Homomorphism& f) const;
};

HomGroup hom_group(const AbelianGroup& A, const AbelianGroup& B);

/// Ext^1(A, B) for finite B.
AbelianGroup ext_group(const AbelianGroup& A, const AbelianGroup& B);

/// ker(out_map) / im(in_map) with exact class and representative maps.
/// Requires out_map ∘ in_map == 0; both are maps through the same middle group.
struct Subquotient {
    AbelianGroup ambient;          // the middle group
    Subgroup cycles;               // ker(out_map) together with its inclusion
    Homomorphism image_in_cycles;  // in_map's image expressed inside cycles.group
    QuotientGroup quot;            // cycles.group / image

    const AbelianGroup& group() const { return quot.group; }

    /// Class of an ambient element; throws std::invalid_argument unless it is a cycle.
    GroupElement class_of(const GroupElement& x) const;
    /// A cycle in ambient coordinates representing the class (transition-matrix
    /// lift, no search); class_of(representative(c)) == c.
    GroupElement representative(const GroupElement& cls) const;
};

Subquotient subquotient(const Homomorphism& out_map, const Homomorphism& in_map);

/// Character of a finite group: x |-> sum_i exponents[i] * x_i / d_i in Q/Z.
struct Character {
    std::vector<Int> exponents; // exponent i taken mod d_i

    RationalPhase evaluate(const AbelianGroup& g, const GroupElement& x) const;
};

/// The dual group of a finite group has the same invariant factors; elements
/// of the dual are exponent vectors, i.e. Characters.
AbelianGroup dual_group(const AbelianGroup& g);

/// f: A -> B induces dual(B) -> dual(A), rho |-> rho ∘ f.
Homomorphism dual_of_hom(const Homomorphism& f);

} // namespace ahg
