#include "ahg/cochain.hpp"

#include <sstream>
#include <stdexcept>

namespace ahg {

Int CochainSpace::order() const {
    Int n = 1;
    for (const Int& d : moduli) n *= d;
    return n;
}

const CochainSpace::Block* CochainSpace::block_at_degree(int n) const {
    for (const auto& b : blocks)
        if (b.degree == n) return &b;
    return nullptr;
}

int CochainSpace::offset_of(int n, int cell) const {
    const Block* b = block_at_degree(n);
    if (!b) return -1;
    if (cell < 0 || cell >= b->cells) throw std::out_of_range("CochainSpace: cell index");
    return b->offset + cell * b->coords_per_cell;
}

CohomologyClassSet::CohomologyClassSet(int p, CochainSpace space, Subquotient subq)
    : p_(p), space_(std::move(space)), subq_(std::move(subq)) {}

GroupElement CohomologyClassSet::class_of(const Cochain& f) const {
    if (f.p != p_) throw std::invalid_argument("class_of: cochain degree mismatch");
    return subq_.class_of(space_.group.from_presentation_coords(f.flat));
}

Cochain CohomologyClassSet::representative(const GroupElement& cls) const {
    GroupElement amb = subq_.representative(cls);
    std::vector<Int> flat = space_.group.to_presentation_coords(amb);
    for (size_t i = 0; i < flat.size(); ++i) flat[i] = mod_floor(flat[i], space_.moduli[i]);
    return Cochain{p_, std::move(flat)};
}

HomComplex::HomComplex(GeometricComplex space, ChainComplex gauge)
    : space_(std::move(space)), gauge_(std::move(gauge)) {
    for (int d : gauge_.degrees()) {
        if (!gauge_.group_at(d).is_finite())
            throw std::invalid_argument("HomComplex: gauge complex must be finite");
    }
    std::vector<int> cd = space_.cells.degrees();
    std::vector<int> gd = gauge_.degrees();
    if (!cd.empty() && !gd.empty()) {
        p_lo_ = cd.front() - gd.back();
        p_hi_ = cd.back() - gd.front();
    }
}

CochainSpace HomComplex::build_space(int p) const {
    CochainSpace s;
    s.p = p;
    int offset = 0;
    for (int n : space_.cells.degrees()) {
        const AbelianGroup& values = gauge_.group_at(n - p);
        int cells = space_.cells.count(n);
        if (cells == 0 || values.is_trivial()) continue;
        CochainSpace::Block b;
        b.degree = n;
        b.cells = cells;
        b.values = values;
        b.coords_per_cell = values.num_coords();
        b.offset = offset;
        offset += cells * b.coords_per_cell;
        for (int x = 0; x < cells; ++x)
            for (const Int& d : values.moduli()) s.moduli.push_back(d);
        s.blocks.push_back(std::move(b));
    }
    s.group = AbelianGroup::from_factors(s.moduli);
    return s;
}

const CochainSpace& HomComplex::cochain_space(int p) const {
    auto it = spaces_.find(p);
    if (it == spaces_.end()) it = spaces_.emplace(p, build_space(p)).first;
    return it->second;
}

IntMatrix HomComplex::build_delta(int p) const {
    const CochainSpace& src = cochain_space(p);
    const CochainSpace& dst = cochain_space(p + 1);
    IntMatrix m(dst.dim(), src.dim());
    Int sign = (mod_floor(Int(p), 2) == 0) ? -1 : 1;  // -(-1)^p
    for (const auto& db : dst.blocks) {
        int n = db.degree;
        int vc = db.coords_per_cell;
        // f_{n-1} composed with the geometric boundary d_n
        const CochainSpace::Block* sb = src.block_at_degree(n - 1);
        if (sb) {
            IntMatrix B = space_.complex.boundary_at(n).matrix();
            for (int x = 0; x < db.cells; ++x)
                for (int y = 0; y < sb->cells; ++y) {
                    const Int& c = B.at(y, x);
                    if (c == 0) continue;
                    for (int k = 0; k < vc; ++k)
                        m.at(db.offset + x * vc + k, sb->offset + y * vc + k) += c;
                }
        }
        // -(-1)^p dG_{n-p} applied to f_n
        const CochainSpace::Block* tb = src.block_at_degree(n);
        if (tb) {
            IntMatrix R = gauge_.boundary_at(n - p).matrix();
            for (int x = 0; x < db.cells; ++x)
                for (int i = 0; i < vc; ++i)
                    for (int j = 0; j < tb->coords_per_cell; ++j) {
                        if (R.at(i, j) == 0) continue;
                        m.at(db.offset + x * vc + i, tb->offset + x * tb->coords_per_cell + j) +=
                            sign * R.at(i, j);
                    }
        }
    }
    return m;
}

const IntMatrix& HomComplex::delta_matrix(int p) const {
    auto it = deltas_.find(p);
    if (it == deltas_.end()) it = deltas_.emplace(p, build_delta(p)).first;
    return it->second;
}

const Homomorphism& HomComplex::delta_hom(int p) const {
    auto it = delta_homs_.find(p);
    if (it == delta_homs_.end()) {
        Homomorphism h = Homomorphism::from_presentation_matrix(
            cochain_space(p).group, cochain_space(p + 1).group, delta_matrix(p));
        it = delta_homs_.emplace(p, std::move(h)).first;
    }
    return it->second;
}

Cochain HomComplex::zero_cochain(int p) const {
    return Cochain{p, std::vector<Int>(cochain_space(p).dim(), Int(0))};
}

Cochain HomComplex::cochain_from_flat(int p, std::vector<Int> flat) const {
    const CochainSpace& s = cochain_space(p);
    if (int(flat.size()) != s.dim()) throw std::invalid_argument("cochain: wrong length");
    for (int i = 0; i < s.dim(); ++i) flat[i] = mod_floor(flat[i], s.moduli[i]);
    return Cochain{p, std::move(flat)};
}

Cochain HomComplex::add(const Cochain& f, const Cochain& g) const {
    if (f.p != g.p) throw std::invalid_argument("cochain add: degree mismatch");
    std::vector<Int> out(f.flat.size());
    const CochainSpace& s = cochain_space(f.p);
    for (size_t i = 0; i < out.size(); ++i) out[i] = mod_floor(f.flat[i] + g.flat[i], s.moduli[i]);
    return Cochain{f.p, std::move(out)};
}

Cochain HomComplex::sub(const Cochain& f, const Cochain& g) const {
    if (f.p != g.p) throw std::invalid_argument("cochain sub: degree mismatch");
    std::vector<Int> out(f.flat.size());
    const CochainSpace& s = cochain_space(f.p);
    for (size_t i = 0; i < out.size(); ++i) out[i] = mod_floor(f.flat[i] - g.flat[i], s.moduli[i]);
    return Cochain{f.p, std::move(out)};
}

Cochain HomComplex::neg(const Cochain& f) const {
    std::vector<Int> out(f.flat.size());
    const CochainSpace& s = cochain_space(f.p);
    for (size_t i = 0; i < out.size(); ++i) out[i] = mod_floor(-f.flat[i], s.moduli[i]);
    return Cochain{f.p, std::move(out)};
}

bool HomComplex::is_zero(const Cochain& f) const {
    for (const Int& v : f.flat)
        if (v != 0) return false;
    return true;
}

GroupElement HomComplex::component(const Cochain& f, int n, int cell) const {
    const CochainSpace& s = cochain_space(f.p);
    const AbelianGroup& values = gauge_.group_at(n - f.p);
    int off = s.offset_of(n, cell);
    if (off < 0) return values.zero();
    std::vector<Int> coords(f.flat.begin() + off, f.flat.begin() + off + values.num_coords());
    return values.element(std::move(coords));
}

void HomComplex::set_component(Cochain& f, int n, int cell, const GroupElement& g) const {
    const CochainSpace& s = cochain_space(f.p);
    const AbelianGroup& values = gauge_.group_at(n - f.p);
    if (int(g.coords.size()) != values.num_coords())
        throw std::invalid_argument("set_component: value has wrong coordinate count");
    int off = s.offset_of(n, cell);
    if (off < 0) {
        if (!values.is_zero(values.element(g.coords))) {
            std::ostringstream os;
            os << "set_component: no coordinates at degree " << n;
            throw std::invalid_argument(os.str());
        }
        return;
    }
    GroupElement r = values.reduce(g.coords);
    for (int k = 0; k < values.num_coords(); ++k) f.flat[off + k] = r.coords[k];
}

Cochain HomComplex::delta(const Cochain& f) const {
    const IntMatrix& d = delta_matrix(f.p);
    return cochain_from_flat(f.p + 1, d.apply(f.flat));
}

DualCochain HomComplex::delta_dual(const DualCochain& m) const {
    int p = m.p;
    const CochainSpace& up = cochain_space(p);
    const CochainSpace& down = cochain_space(p - 1);
    if (int(m.exponents.size()) != up.dim())
        throw std::invalid_argument("delta_dual: wrong exponent length");
    const IntMatrix& D = delta_matrix(p - 1);  // up.dim() x down.dim()
    DualCochain out{p - 1, std::vector<Int>(down.dim(), Int(0))};
    for (int i = 0; i < down.dim(); ++i) {
        Int acc = 0;
        for (int l = 0; l < up.dim(); ++l) {
            if (D.at(l, i) == 0 || m.exponents[l] == 0) continue;
            Int num = down.moduli[i] * D.at(l, i);
            if (num % up.moduli[l] != 0)
                throw std::logic_error("delta_dual: coboundary matrix not well defined");
            acc += (num / up.moduli[l]) * m.exponents[l];
        }
        out.exponents[i] = mod_floor(acc, down.moduli[i]);
    }
    return out;
}

RationalPhase HomComplex::pair(const DualCochain& m, const Cochain& f) const {
    if (m.p != f.p) throw std::invalid_argument("pair: degree mismatch");
    const CochainSpace& s = cochain_space(f.p);
    if (int(m.exponents.size()) != s.dim() || int(f.flat.size()) != s.dim())
        throw std::invalid_argument("pair: wrong length");
    RationalPhase acc;
    for (int i = 0; i < s.dim(); ++i)
        acc = acc + RationalPhase(m.exponents[i] * f.flat[i], s.moduli[i]);
    return acc;
}

Cochain HomComplex::local_map(int p, int n, int cell, const GroupElement& g) const {
    Cochain f = zero_cochain(p);
    set_component(f, n, cell, g);
    return f;
}

DualCochain HomComplex::local_dual(int p, int n, int cell, const Character& r) const {
    const CochainSpace& s = cochain_space(p);
    const AbelianGroup& values = gauge_.group_at(n - p);
    if (int(r.exponents.size()) != values.num_coords())
        throw std::invalid_argument("local_dual: character has wrong coordinate count");
    DualCochain m{p, std::vector<Int>(s.dim(), Int(0))};
    int off = s.offset_of(n, cell);
    if (off < 0) {
        bool zero = true;
        for (const Int& e : r.exponents)
            if (e != 0) zero = false;
        if (!zero) {
            std::ostringstream os;
            os << "local_dual: no coordinates at degree " << n;
            throw std::invalid_argument(os.str());
        }
        return m;
    }
    for (int k = 0; k < values.num_coords(); ++k)
        m.exponents[off + k] = mod_floor(r.exponents[k], values.moduli()[k]);
    return m;
}

bool HomComplex::is_flat(const Cochain& f) const { return is_zero(delta(f)); }

bool HomComplex::gauge_equivalent(const Cochain& f, const Cochain& g) const {
    if (f.p != g.p) throw std::invalid_argument("gauge_equivalent: degree mismatch");
    const CochainSpace& s = cochain_space(f.p);
    std::vector<Int> diff(f.flat.size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = f.flat[i] - g.flat[i];
    return solve_mod(delta_matrix(f.p - 1), s.moduli, diff).has_value();
}

const CohomologyClassSet& HomComplex::cohomology(int p) const {
    auto it = cohoms_.find(p);
    if (it == cohoms_.end()) {
        Subquotient sq = subquotient(delta_hom(p), delta_hom(p - 1));
        it = cohoms_.emplace(p, CohomologyClassSet(p, cochain_space(p), std::move(sq))).first;
    }
    return it->second;
}

} // namespace ahg
