#include "ahg/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace ahg {

HomComplex coefficient_complex(const GeometricComplex& c, const AbelianGroup& s) {
    ChainComplex gauge;
    gauge.set_group(0, s);
    return HomComplex(c, std::move(gauge));
}

AbelianGroup cohomology_with_coefficients(const GeometricComplex& c, const AbelianGroup& s,
                                          int n) {
    return coefficient_complex(c, s).cohomology(n).group();
}

const Homomorphism& Splitting::at(int n) const {
    auto it = phi.find(n);
    if (it == phi.end()) {
        std::ostringstream os;
        os << "splitting has no section at degree " << n;
        throw std::out_of_range(os.str());
    }
    return it->second;
}

namespace {

// A section column for generator i: a cycle lift of e_i, corrected by a
// boundary so that h_i times it vanishes in G_n. Throws when impossible.
std::vector<Int> section_column(const Subquotient& sq, const IntMatrix& bnd_next,
                                const AbelianGroup& gn, int degree, int i) {
    const AbelianGroup& h = sq.group();
    GroupElement gen = h.zero();
    gen.coords[i] = 1;
    GroupElement lift = sq.representative(gen);
    const Int& order = h.moduli()[i];

    IntMatrix scaled = bnd_next;
    for (int r = 0; r < scaled.rows(); ++r)
        for (int c = 0; c < scaled.cols(); ++c) scaled.at(r, c) *= order;
    std::vector<Int> rhs(gn.num_coords());
    for (int r = 0; r < gn.num_coords(); ++r) rhs[r] = -order * lift.coords[r];
    auto y = solve_mod(scaled, gn.moduli(), rhs);
    if (!y) {
        std::ostringstream os;
        os << "no splitting exists at degree " << degree << ": generator " << i
           << " of the homology group admits no section through the cycle group";
        throw std::runtime_error(os.str());
    }
    std::vector<Int> col = bnd_next.apply(*y);
    for (int r = 0; r < gn.num_coords(); ++r)
        col[r] = mod_floor(col[r] + lift.coords[r], gn.moduli()[r]);
    return col;
}

void certify_splitting(const ChainComplex& g, int n, const Subquotient& sq,
                       const Homomorphism& phi) {
    if (!g.boundary_at(n).after(phi).is_zero())
        throw std::logic_error("splitting certificate failed: dG ∘ phi != 0");
    const AbelianGroup& h = sq.group();
    for (int i = 0; i < h.num_coords(); ++i) {
        GroupElement gen = h.zero();
        gen.coords[i] = 1;
        if (!(sq.class_of(phi.apply(gen)) == gen))
            throw std::logic_error("splitting certificate failed: pi ∘ phi != id");
    }
}

} // namespace

Splitting build_splitting(const ChainComplex& g) {
    Splitting out;
    for (int n : g.degrees()) {
        Subquotient sq = homology_at(g, n);
        const AbelianGroup& h = sq.group();
        if (h.is_trivial()) continue;
        const AbelianGroup& gn = g.group_at(n);
        IntMatrix bnd_next = g.boundary_at(n + 1).matrix();
        std::vector<std::vector<Int>> cols;
        for (int i = 0; i < h.num_coords(); ++i)
            cols.push_back(section_column(sq, bnd_next, gn, n, i));
        Homomorphism phi(h, gn, IntMatrix::from_columns(gn.num_coords(), cols));
        certify_splitting(g, n, sq, phi);
        out.phi.emplace(n, std::move(phi));
    }
    return out;
}

std::pair<Splitting, Splitting> build_splitting_pair(const ChainComplex& g) {
    Splitting first = build_splitting(g);
    Splitting second = first;
    for (auto& [n, phi] : second.phi) {
        Subquotient sq = homology_at(g, n);
        const AbelianGroup& h = sq.group();
        const AbelianGroup& gn = g.group_at(n);
        IntMatrix bnd_next = g.boundary_at(n + 1).matrix();
        // look for a boundary that a generator's order kills: adding it to the
        // section column gives a different, equally valid section
        for (int i = 0; i < h.num_coords() && second.phi.at(n) == first.phi.at(n); ++i) {
            IntMatrix scaled = bnd_next;
            for (int r = 0; r < scaled.rows(); ++r)
                for (int c = 0; c < scaled.cols(); ++c) scaled.at(r, c) *= h.moduli()[i];
            IntMatrix ys = lattice_kernel(scaled, gn.moduli());
            for (int k = 0; k < ys.cols(); ++k) {
                GroupElement cand = gn.reduce(bnd_next.apply(ys.column(k)));
                if (gn.is_zero(cand)) continue;
                IntMatrix m = phi.matrix();
                for (int r = 0; r < gn.num_coords(); ++r)
                    m.at(r, i) = mod_floor(m.at(r, i) + cand.coords[r], gn.moduli()[r]);
                Homomorphism alt(h, gn, std::move(m));
                certify_splitting(g, n, sq, alt);
                phi = std::move(alt);
                break;
            }
        }
    }
    return {std::move(first), std::move(second)};
}

GsdReport gsd(const GeometricComplex& c, const ChainComplex& g) {
    GsdReport r;
    HomComplex h(c, g);
    r.direct = h.cohomology(0).group().order();
    for (int n : g.degrees()) {
        AbelianGroup hn = homology(g, n);
        if (hn.is_trivial()) continue;
        r.brown_factors[n] = cohomology_with_coefficients(c, hn, n).order();
        Int hom_part = hom_group(homology(c.complex, n), hn).group.order();
        Int ext_part = ext_group(homology(c.complex, n - 1), hn).order();
        r.uct_factors[n] = {hom_part, ext_part};
    }
    for (const auto& [n, f] : r.brown_factors) r.brown_product *= f;
    for (const auto& [n, he] : r.uct_factors) r.uct_product *= he.first * he.second;
    r.brown_agrees = (r.direct == r.brown_product);
    r.uct_agrees = (r.direct == r.uct_product);
    return r;
}

std::pair<AbelianGroup, AbelianGroup> uct_decomposition(const GeometricComplex& c,
                                                        const ChainComplex& g, int n) {
    AbelianGroup hn = homology(g, n);
    return {hom_group(homology(c.complex, n), hn).group,
            ext_group(homology(c.complex, n - 1), hn)};
}

BrownContext::BrownContext(GeometricComplex space, ChainComplex gauge)
    : main_(std::move(space), std::move(gauge)) {
    for (int n : main_.gauge().degrees()) {
        Subquotient sq = homology_at(main_.gauge(), n);
        if (sq.group().is_trivial()) continue;
        degrees_.push_back(n);
        coeff_.emplace(n, coefficient_complex(main_.space(), sq.group()));
        homology_.emplace(n, std::move(sq));
    }
}

const AbelianGroup& BrownContext::gauge_homology(int n) const {
    return homology_.at(n).group();
}

HomComplex& BrownContext::coefficients(int n) { return coeff_.at(n); }

const CohomologyClassSet& BrownContext::coefficient_classes(int n) {
    return coeff_.at(n).cohomology(n);
}

Cochain BrownContext::alpha_term(int n, const Cochain& fn, const Splitting& phi) {
    HomComplex& cx = coeff_.at(n);
    if (fn.p != n) throw std::invalid_argument("brown: cocycle degree mismatch");
    if (!cx.is_flat(fn)) throw std::invalid_argument("brown: input is not a cocycle");
    const Homomorphism& section = phi.at(n);
    Cochain out = main_.zero_cochain(0);
    for (int x = 0; x < main_.space().cells.count(n); ++x)
        main_.set_component(out, n, x, section.apply(cx.component(fn, n, x)));
    return out;
}

Cochain BrownContext::alpha(const std::map<int, Cochain>& cocycles, const Splitting& phi) {
    Cochain out = main_.zero_cochain(0);
    for (const auto& [n, fn] : cocycles) out = main_.add(out, alpha_term(n, fn, phi));
    return out;
}

GroupElement BrownContext::alpha_class(const std::map<int, GroupElement>& classes,
                                       const Splitting& phi) {
    std::map<int, Cochain> cocycles;
    for (int n : degrees_) {
        const AbelianGroup& hn = coefficient_classes(n).group(); // H^n(C, H_n(G))
        auto it = classes.find(n);
        GroupElement e = it == classes.end() ? hn.zero() : hn.element(it->second.coords);
        cocycles.emplace(n, coefficient_classes(n).representative(e));
    }
    return main_.cohomology(0).class_of(alpha(cocycles, phi));
}

} // namespace ahg
