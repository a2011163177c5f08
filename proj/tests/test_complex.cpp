#include "ahg/chain_complex.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace ahg;

namespace {

std::vector<Int> hgroups(const GeometricComplex& gc, int lo, int hi) {
    std::vector<Int> orders;
    for (int n = lo; n <= hi; ++n) {
        AbelianGroup h = homology(gc.complex, n);
        orders.push_back(h.is_finite() ? h.order() : Int(-h.free_rank()));
    }
    return orders;
}

// encode Z^r as -r, finite order as positive

} // namespace

TEST_CASE("interval: two vertices, one edge, contractible") {
    GeometricComplex gc = build_interval();
    CHECK(gc.cells.count(0) == 2);
    CHECK(gc.cells.count(1) == 1);
    CHECK(gc.euler_characteristic() == 1);
    gc.complex.validate();
    CHECK(homology(gc.complex, 0).render() == "Z");
    CHECK(homology(gc.complex, 1).is_trivial());
}

TEST_CASE("circle: cell counts scale with L, homology does not") {
    for (int L : {1, 2, 3, 5}) {
        GeometricComplex gc = build_circle(L);
        CHECK(gc.cells.count(0) == L);
        CHECK(gc.cells.count(1) == L);
        CHECK(gc.euler_characteristic() == 0);
        gc.complex.validate();
        CHECK(homology(gc.complex, 0).render() == "Z");
        CHECK(homology(gc.complex, 1).render() == "Z");
        CHECK(homology(gc.complex, 2).is_trivial());
    }
}

TEST_CASE("sphere S^2 as boundary of the 3-simplex") {
    GeometricComplex gc = build_sphere(2);
    CHECK(gc.cells.count(0) == 4);
    CHECK(gc.cells.count(1) == 6);
    CHECK(gc.cells.count(2) == 4);
    CHECK(gc.euler_characteristic() == 2);
    gc.complex.validate();
    CHECK(homology(gc.complex, 0).render() == "Z");
    CHECK(homology(gc.complex, 1).is_trivial());
    CHECK(homology(gc.complex, 2).render() == "Z");
}

TEST_CASE("spheres in other dimensions") {
    for (int d : {1, 3, 4}) {
        GeometricComplex gc = build_sphere(d);
        gc.complex.validate();
        CHECK(gc.euler_characteristic() == (d % 2 == 0 ? 2 : 0));
        CHECK(homology(gc.complex, 0).render() == "Z");
        CHECK(homology(gc.complex, d).render() == "Z");
        for (int n = 1; n < d; ++n) CHECK(homology(gc.complex, n).is_trivial());
    }
}

TEST_CASE("torus T^2 with L=1: one cell per direction subset, zero boundaries") {
    GeometricComplex gc = build_torus(2, 1);
    CHECK(gc.cells.count(0) == 1);
    CHECK(gc.cells.count(1) == 2);
    CHECK(gc.cells.count(2) == 1);
    gc.complex.validate();
    CHECK(gc.complex.boundary_at(1).is_zero());
    CHECK(gc.complex.boundary_at(2).is_zero());
}

TEST_CASE("torus T^2: counts at L=2 and homology Z, Z^2, Z for all L") {
    GeometricComplex g2 = build_torus(2, 2);
    CHECK(g2.cells.count(0) == 4);
    CHECK(g2.cells.count(1) == 8);
    CHECK(g2.cells.count(2) == 4);
    for (int L : {1, 2, 3}) {
        GeometricComplex gc = build_torus(2, L);
        gc.complex.validate();
        CHECK(gc.euler_characteristic() == 0);
        CHECK(homology(gc.complex, 0).render() == "Z");
        CHECK(homology(gc.complex, 1).render() == "Z^2");
        CHECK(homology(gc.complex, 2).render() == "Z");
    }
}

TEST_CASE("torus T^3 at L=2: counts 8/24/24/8 and homology Z, Z^3, Z^3, Z") {
    GeometricComplex gc = build_torus(3, 2);
    CHECK(gc.cells.count(0) == 8);
    CHECK(gc.cells.count(1) == 24);
    CHECK(gc.cells.count(2) == 24);
    CHECK(gc.cells.count(3) == 8);
    CHECK(gc.euler_characteristic() == 0);
    gc.complex.validate();
    CHECK(hgroups(gc, 0, 3) == std::vector<Int>{-1, -3, -3, -1});
}

TEST_CASE("torus labels carry coordinates and direction letters") {
    GeometricComplex gc = build_torus(2, 2);
    CellBasis& cb = gc.cells;
    CHECK(cb.index_of(2, "0.0|xy") == 0);
    CHECK(cb.index_of(1, "1.0|x") >= 0);
    CHECK(cb.index_of(0, "1.1") >= 0);
    CHECK(cb.index_of(0, "2.0") == -1);
}

TEST_CASE("simplicial closure fills in all faces and validates") {
    SimplicialComplex sc = simplicial_closure({"a", "b", "c"}, {{0, 1, 2}});
    CHECK(sc.by_dim.at(0).size() == 3);
    CHECK(sc.by_dim.at(1).size() == 3);
    CHECK(sc.by_dim.at(2).size() == 1);
    sc.validate();
    GeometricComplex gc = from_simplicial(sc);
    CHECK(gc.cells.index_of(1, "a,b") >= 0);
    CHECK(homology(gc.complex, 0).render() == "Z");
    CHECK(homology(gc.complex, 1).is_trivial());
}

TEST_CASE("from_simplicial rejects a missing face") {
    SimplicialComplex sc;
    sc.vertex_labels = {"a", "b", "c"};
    sc.by_dim[1] = {{0, 1}};  // references vertices that are not listed as 0-cells
    CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
    sc.by_dim[0] = {{0}, {1}, {2}};
    sc.by_dim[2] = {{0, 1, 2}};  // edges 0-2 and 1-2 missing
    CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
}

TEST_CASE("validate names the first degree where d d != 0") {
    ChainComplex cx;
    cx.set_group(0, AbelianGroup::from_factors({Int(0)}));
    cx.set_group(1, AbelianGroup::from_factors({Int(0)}));
    cx.set_group(2, AbelianGroup::from_factors({Int(0)}));
    IntMatrix one(1, 1);
    one.at(0, 0) = 1;
    cx.set_boundary(1, one);
    cx.set_boundary(2, one);  // d1 after d2 = 1 != 0, reported at the upper degree
    try {
        cx.validate();
        FAIL("expected validate() to throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("degree 2") != std::string::npos);
    }
}

TEST_CASE("gauge-style complex of finite groups: Z4 at 2 mapping onto Z2 at 1") {
    ChainComplex g;
    g.set_group(2, AbelianGroup::from_factors({Int(4)}));
    g.set_group(1, AbelianGroup::from_factors({Int(2)}));
    IntMatrix m(1, 1);
    m.at(0, 0) = 1;
    g.set_boundary(2, m);
    g.validate();
    AbelianGroup h2 = homology(g, 2);
    AbelianGroup h1 = homology(g, 1);
    CHECK(h2.moduli() == std::vector<Int>{2});  // ker(Z4 -> Z2) = {0,2}
    CHECK(h1.is_trivial());                     // map is onto
    CHECK(homology(g, 0).is_trivial());
}

TEST_CASE("random downward-closed subcomplexes of the 5-simplex validate") {
    std::mt19937_64 rng(424242);
    std::vector<std::string> labels = {"0", "1", "2", "3", "4", "5"};
    for (int iter = 0; iter < 12; ++iter) {
        // pick random facets among subsets of {0..5} of size >= 2
        std::vector<std::vector<int>> facets;
        std::uniform_int_distribution<int> nf(1, 4);
        std::uniform_int_distribution<int> mask(3, 62);
        int k = nf(rng);
        for (int i = 0; i < k; ++i) {
            int m = mask(rng);
            std::vector<int> f;
            for (int b = 0; b < 6; ++b)
                if (m & (1 << b)) f.push_back(b);
            if (f.size() >= 2) facets.push_back(f);
        }
        if (facets.empty()) continue;
        SimplicialComplex sc = simplicial_closure(labels, facets);
        sc.validate();
        GeometricComplex gc = from_simplicial(sc);
        gc.complex.validate();  // checks dd == 0 everywhere
        // H_0 = Z^{#components}; components of a closure of facets is
        // at most the number of facets, and at least 1
        AbelianGroup h0 = homology(gc.complex, 0);
        CHECK(h0.free_rank() >= 1);
        CHECK(h0.free_rank() <= int(facets.size() + 6));
    }
}
