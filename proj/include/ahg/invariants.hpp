#pragma once

#include "ahg/cochain.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ahg {

/// hom(C, S placed at degree 0): degree-n cochains are S-valued functions on
/// n-cells and the coboundary is f |-> f ∘ d_{n+1}.
HomComplex coefficient_complex(const GeometricComplex& c, const AbelianGroup& s);

/// H^n(C, S) for a finite coefficient group S.
AbelianGroup cohomology_with_coefficients(const GeometricComplex& c, const AbelianGroup& s,
                                          int n);

/// Per-degree sections phi_n : H_n(G) -> G_n of the homology projection,
/// with image inside ker dG_n. Only degrees with nontrivial homology appear.
struct Splitting {
    std::map<int, Homomorphism> phi;

    bool has(int n) const { return phi.count(n) != 0; }
    const Homomorphism& at(int n) const;
};

/// Lifts canonical generators of H_n(G) to cycles and corrects each lift by a
/// boundary until the lift map is a homomorphism; certifies pi ∘ phi = id and
/// dG ∘ phi = 0 before returning. Throws std::runtime_error when some degree
/// admits no section (the cycle group need not split over homology).
Splitting build_splitting(const ChainComplex& g);

/// The splitting above plus a second one that differs wherever a different
/// section exists; used to certify splitting-independence of the Brown map.
std::pair<Splitting, Splitting> build_splitting_pair(const ChainComplex& g);

/// The ground-state degeneracy computed three ways.
struct GsdReport {
    Int direct = 1;                                 // |H^0(C,G)|
    std::map<int, Int> brown_factors;               // |H^n(C, H_n(G))| per degree
    std::map<int, std::pair<Int, Int>> uct_factors; // (|Hom|, |Ext|) per degree
    Int brown_product = 1;
    Int uct_product = 1;
    bool brown_agrees = false;
    bool uct_agrees = false;

    bool all_agree() const { return brown_agrees && uct_agrees; }
};

GsdReport gsd(const GeometricComplex& c, const ChainComplex& g);

/// (Hom(H_n(C), H_n(G)), Ext(H_{n-1}(C), H_n(G))).
std::pair<AbelianGroup, AbelianGroup> uct_decomposition(const GeometricComplex& c,
                                                        const ChainComplex& g, int n);

/// Bundles hom(C,G) with the gauge homology groups and the coefficient
/// complexes hom(C, H_n(G)), and evaluates the Brown map
/// (alpha_phi(f))_n = phi_n ∘ f_n on representative cocycles.
class BrownContext {
public:
    BrownContext(GeometricComplex space, ChainComplex gauge);

    HomComplex& main() { return main_; }
    const HomComplex& main() const { return main_; }

    /// Gauge degrees with nontrivial homology, ascending.
    const std::vector<int>& degrees() const { return degrees_; }
    const AbelianGroup& gauge_homology(int n) const;
    HomComplex& coefficients(int n);
    const CohomologyClassSet& coefficient_classes(int n); // H^n(C, H_n(G))

    /// One term of the Brown map: phi_n ∘ f_n as a degree-0 cochain supported
    /// on n-cells. Throws std::invalid_argument when f_n is not a cocycle.
    Cochain alpha_term(int n, const Cochain& fn, const Splitting& phi);
    /// alpha_phi of per-degree cocycles (missing degrees mean zero).
    Cochain alpha(const std::map<int, Cochain>& cocycles, const Splitting& phi);
    /// Class-level Brown map into H^0(C,G); inputs are classes in the
    /// coefficient cohomology H^n(C, H_n(G)) per degree (missing means zero).
    GroupElement alpha_class(const std::map<int, GroupElement>& classes, const Splitting& phi);

private:
    HomComplex main_;
    std::vector<int> degrees_;
    std::map<int, Subquotient> homology_;
    std::map<int, HomComplex> coeff_;
};

} // namespace ahg
