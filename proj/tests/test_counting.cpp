#include "ahg/counting.hpp"

#include "ahg/invariants.hpp"
#include "doctest.h"

#include <random>

using namespace ahg;

namespace {

ChainComplex gauge_cyclic_at(int degree, int n) {
    ChainComplex g;
    g.set_group(degree, AbelianGroup::from_factors({Int(n)}));
    return g;
}

ChainComplex gauge_z4_z2() {
    ChainComplex g;
    g.set_group(2, AbelianGroup::from_factors({Int(4)}));
    g.set_group(1, AbelianGroup::from_factors({Int(2)}));
    IntMatrix d(1, 1);
    d.at(0, 0) = 1;
    g.set_boundary(2, d);
    return g;
}

/// Kernel size counted in the test itself, with none of the library kernels.
long long brute_count(const FlatMap& m) {
    long long total = 1;
    for (long long d : m.src_moduli) total *= d;
    long long count = 0;
    for (long long index = 0; index < total; ++index) {
        long long rest = index;
        std::vector<long long> digits(m.cols);
        for (int j = m.cols - 1; j >= 0; --j) {
            digits[j] = rest % m.src_moduli[j];
            rest /= m.src_moduli[j];
        }
        bool zero = true;
        for (int r = 0; r < m.rows && zero; ++r) {
            long long acc = 0;
            for (int j = 0; j < m.cols; ++j)
                acc += m.mat[static_cast<std::size_t>(r) * m.cols + j] * digits[j];
            zero = acc % m.tgt_moduli[r] == 0;
        }
        if (zero) ++count;
    }
    return count;
}

/// |ker delta^p| through the canonical-form algebra: |hom^p| / |im delta^p|.
Int algebraic_kernel_order(const HomComplex& h, int p) {
    Int total = h.cochain_space(p).order();
    Int img = image(h.delta_hom(p)).group.order();
    return total / img;
}

} // namespace

TEST_CASE("reference, parallel and test-local counts agree on random systems") {
    std::mt19937 rng(77);
    std::vector<long long> mods{2, 3, 4, 6};
    for (int it = 0; it < 30; ++it) {
        FlatMap m;
        m.rows = int(rng() % 4);
        m.cols = int(rng() % 6);
        for (int j = 0; j < m.cols; ++j) m.src_moduli.push_back(mods[rng() % mods.size()]);
        for (int r = 0; r < m.rows; ++r) m.tgt_moduli.push_back(mods[rng() % mods.size()]);
        m.mat.resize(static_cast<std::size_t>(m.rows) * m.cols);
        for (auto& v : m.mat) v = static_cast<long long>(rng() % 6);
        for (int r = 0; r < m.rows; ++r)
            for (int j = 0; j < m.cols; ++j) m.mat[static_cast<std::size_t>(r) * m.cols + j] %= m.tgt_moduli[r];
        long long expect = brute_count(m);
        CHECK(count_kernel_reference(m) == expect);
        CHECK(count_kernel_parallel(m) == expect);
    }
}

TEST_CASE("kernel counts match the canonical-form algebra") {
    struct Case {
        GeometricComplex space;
        ChainComplex gauge;
        int p;
    };
    std::vector<Case> cases;
    cases.push_back({build_torus(2, 2), gauge_cyclic_at(1, 2), 0});
    cases.push_back({build_torus(2, 2), gauge_cyclic_at(1, 2), -1});
    cases.push_back({build_sphere(2), gauge_z4_z2(), 0});
    cases.push_back({build_sphere(2), gauge_z4_z2(), -1});
    cases.push_back({build_circle(3), gauge_cyclic_at(1, 3), 0});
    cases.push_back({build_interval(), gauge_cyclic_at(0, 2), 0});
    for (const auto& c : cases) {
        HomComplex h(c.space, c.gauge);
        FlatMap m = FlatMap::from(h, c.p);
        Int expect = algebraic_kernel_order(h, c.p);
        CHECK(Int(count_kernel_reference(m)) == expect);
        CHECK(Int(count_kernel_parallel(m)) == expect);
    }
}

TEST_CASE("toric counting values are pinned") {
    HomComplex h(build_torus(2, 2), gauge_cyclic_at(1, 2));
    CountingReport rep = counting_gsd(h);
    CHECK(rep.hom0 == 256);
    CHECK(rep.homm1 == 16);
    CHECK(rep.ker_d0 == 32);
    CHECK(rep.ker_dm1 == 2);
    CHECK(rep.gsd == 4);
}

TEST_CASE("counting route equals the cohomological ground-state count") {
    std::vector<GeometricComplex> spaces;
    spaces.push_back(build_interval());
    spaces.push_back(build_circle(3));
    spaces.push_back(build_sphere(2));
    spaces.push_back(build_torus(2, 1));
    spaces.push_back(build_torus(2, 2));
    std::vector<ChainComplex> gauges;
    gauges.push_back(gauge_cyclic_at(1, 2));
    gauges.push_back(gauge_cyclic_at(1, 3));
    gauges.push_back(gauge_z4_z2());
    gauges.push_back(gauge_cyclic_at(0, 2));
    for (const auto& s : spaces) {
        for (const auto& g : gauges) {
            HomComplex h(s, g);
            CountingReport rep = counting_gsd(h);
            CHECK(rep.gsd == gsd(s, g).direct);
        }
    }
}

TEST_CASE("a larger torus still counts, serial and parallel alike") {
    HomComplex h(build_torus(2, 3), gauge_cyclic_at(1, 2));
    CHECK(h.cochain_space(0).order() == Int(1) << 18);
    FlatMap d0 = FlatMap::from(h, 0);
    long long serial = count_kernel_reference(d0);
    long long parallel = count_kernel_parallel(d0);
    CHECK(serial == parallel);
    CHECK(Int(serial) == algebraic_kernel_order(h, 0));
    CountingReport rep = counting_gsd(h);
    CHECK(rep.gsd == 4);
}

TEST_CASE("counting refuses to run past the cap") {
    HomComplex big(build_torus(3, 2), gauge_cyclic_at(1, 2));
    CHECK(big.cochain_space(0).order() == Int(1) << 24);
    CHECK_THROWS_AS(counting_gsd(big), CapExceeded);
    HomComplex small(build_torus(2, 1), gauge_cyclic_at(1, 2));
    CHECK_THROWS_AS(counting_gsd(small, Int(2)), CapExceeded);
}

TEST_CASE("trivial gauge counts a single state") {
    HomComplex h(build_torus(2, 2), ChainComplex());
    CountingReport rep = counting_gsd(h);
    CHECK(rep.hom0 == 1);
    CHECK(rep.homm1 == 1);
    CHECK(rep.gsd == 1);
}
