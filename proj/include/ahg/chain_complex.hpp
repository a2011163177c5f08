#pragma once

#include "ahg/abelian.hpp"

#include <map>
#include <string>
#include <vector>

namespace ahg {

/// Chain complex of finitely generated abelian groups with finite support.
/// Degrees outside the stored range carry the trivial group and zero maps.
class ChainComplex {
public:
    ChainComplex() = default;

    void set_group(int degree, AbelianGroup g);
    /// Boundary C_degree -> C_{degree-1} in canonical coordinates.
    void set_boundary(int degree, IntMatrix m);

    const AbelianGroup& group_at(int degree) const;
    Homomorphism boundary_at(int degree) const;

    /// Degrees with a nontrivial group, ascending. Empty for the zero complex.
    std::vector<int> degrees() const;

    /// Shapes, well-definedness and ∂∂ == 0; throws naming the first bad degree.
    void validate() const;

private:
    std::map<int, AbelianGroup> groups_;
    std::map<int, IntMatrix> bnd_;
};

/// Ordered cell labels per degree; fixes the coordinate order of a geometric
/// complex once and for all.
struct CellBasis {
    std::map<int, std::vector<std::string>> labels;

    int count(int degree) const;
    const std::vector<std::string>& at(int degree) const;
    /// -1 when absent.
    int index_of(int degree, const std::string& label) const;
    std::vector<int> degrees() const;
};

/// Free chain complex of a cell structure: C_n = Z^{|K_n|} with the cell order
/// of `cells` as basis.
struct GeometricComplex {
    CellBasis cells;
    ChainComplex complex;

    Int euler_characteristic() const;
};

/// Simplices as strictly increasing tuples of vertex indices, grouped by
/// dimension. The vertex order fixes orientation signs.
struct SimplicialComplex {
    std::vector<std::string> vertex_labels;
    std::map<int, std::vector<std::vector<int>>> by_dim;

    /// Tuples strictly increasing, dimensions consistent, all faces present.
    void validate() const;
};

/// Downward closure of the given facets (tuples of vertex indices).
SimplicialComplex simplicial_closure(std::vector<std::string> vertex_labels,
                                     const std::vector<std::vector<int>>& facets);

/// Alternating-sign boundary; cell labels are comma-joined vertex labels.
GeometricComplex from_simplicial(const SimplicialComplex& s);

GeometricComplex build_interval();
GeometricComplex build_circle(int L);
/// Boundary of the (d+1)-simplex.
GeometricComplex build_sphere(int d);
/// Cubical d-torus, side L: (d choose k) * L^d cells in degree k.
GeometricComplex build_torus(int d, int L);

AbelianGroup homology(const ChainComplex& c, int n);
Subquotient homology_at(const ChainComplex& c, int n);

} // namespace ahg
