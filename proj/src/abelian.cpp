#include "ahg/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace ahg {

AbelianGroup::AbelianGroup() {
    auto d = std::make_shared<Data>();
    d->moduli = {};
    d->presentation_gens = 0;
    d->to_canon = IntMatrix(0, 0);
    d->from_canon = IntMatrix(0, 0);
    d_ = std::move(d);
}

AbelianGroup AbelianGroup::from_presentation(int num_generators, const IntMatrix& relations) {
    if (relations.rows() != num_generators)
        throw std::invalid_argument("relations must have one row per generator");
    SmithResult s = smith_normal_form(relations);
    const int n = num_generators;
    std::vector<Int> diag(n, Int(0));
    for (int i = 0; i < std::min(n, relations.cols()); ++i) diag[i] = s.D.at(i, i);

    std::vector<int> kept;
    std::vector<Int> moduli;
    for (int i = 0; i < n; ++i) {
        if (diag[i] == 1) continue;
        kept.push_back(i);
        moduli.push_back(diag[i]);
    }
    auto d = std::make_shared<Data>();
    d->moduli = std::move(moduli);
    d->presentation_gens = n;
    d->to_canon = s.U.select_rows(kept);
    d->from_canon = s.U_inv.select_columns(kept);
    AbelianGroup g;
    g.d_ = std::move(d);
    return g;
}

AbelianGroup AbelianGroup::from_factors(const std::vector<Int>& factors) {
    return from_presentation(int(factors.size()), IntMatrix::diagonal(factors));
}

int AbelianGroup::num_coords() const { return int(d_->moduli.size()); }
const std::vector<Int>& AbelianGroup::moduli() const { return d_->moduli; }

int AbelianGroup::free_rank() const {
    int r = 0;
    for (const auto& m : d_->moduli)
        if (m == 0) ++r;
    return r;
}

bool AbelianGroup::is_trivial() const { return d_->moduli.empty(); }
bool AbelianGroup::is_finite() const { return free_rank() == 0; }

Int AbelianGroup::order() const {
    if (!is_finite()) throw std::domain_error("order of an infinite group");
    Int o = 1;
    for (const auto& m : d_->moduli) o *= m;
    return o;
}

int AbelianGroup::presentation_gens() const { return d_->presentation_gens; }
const IntMatrix& AbelianGroup::to_canonical() const { return d_->to_canon; }
const IntMatrix& AbelianGroup::from_canonical() const { return d_->from_canon; }

std::string AbelianGroup::render() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    int r = free_rank();
    if (r == 1) { os << "Z"; first = false; }
    else if (r > 1) { os << "Z^" << r; first = false; }
    for (const auto& m : d_->moduli) {
        if (m == 0) continue;
        os << (first ? "" : " + ") << "Z_" << m.str();
        first = false;
    }
    return os.str();
}

GroupElement AbelianGroup::zero() const { return GroupElement{std::vector<Int>(num_coords())}; }

GroupElement AbelianGroup::element(std::vector<Int> coords) const {
    if (int(coords.size()) != num_coords())
        throw std::invalid_argument("element: coordinate count mismatch");
    return reduce(std::move(coords));
}

GroupElement AbelianGroup::reduce(std::vector<Int> coords) const {
    for (int i = 0; i < num_coords(); ++i) coords[i] = mod_floor(coords[i], d_->moduli[i]);
    return GroupElement{std::move(coords)};
}

GroupElement AbelianGroup::from_presentation_coords(const std::vector<Int>& x) const {
    return reduce(d_->to_canon.apply(x));
}

std::vector<Int> AbelianGroup::to_presentation_coords(const GroupElement& e) const {
    return d_->from_canon.apply(e.coords);
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    std::vector<Int> c(num_coords());
    for (int i = 0; i < num_coords(); ++i) c[i] = a.coords[i] + b.coords[i];
    return reduce(std::move(c));
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    std::vector<Int> c(num_coords());
    for (int i = 0; i < num_coords(); ++i) c[i] = a.coords[i] - b.coords[i];
    return reduce(std::move(c));
}

GroupElement AbelianGroup::neg(const GroupElement& a) const {
    std::vector<Int> c(num_coords());
    for (int i = 0; i < num_coords(); ++i) c[i] = -a.coords[i];
    return reduce(std::move(c));
}

GroupElement AbelianGroup::scale(const GroupElement& a, const Int& k) const {
    std::vector<Int> c(num_coords());
    for (int i = 0; i < num_coords(); ++i) c[i] = a.coords[i] * k;
    return reduce(std::move(c));
}

bool AbelianGroup::is_zero(const GroupElement& a) const {
    for (const auto& v : a.coords)
        if (v != 0) return false;
    return true;
}

Int AbelianGroup::element_order(const GroupElement& a) const {
    Int o = 1;
    for (int i = 0; i < num_coords(); ++i) {
        if (a.coords[i] == 0) continue;
        const Int& m = d_->moduli[i];
        if (m == 0) throw std::domain_error("element of infinite order");
        o = lcm(o, m / gcd(m, a.coords[i]));
    }
    return o;
}

std::vector<GroupElement> AbelianGroup::all_elements() const {
    Int n = order();
    if (n > 1000000) throw std::domain_error("all_elements: group too large to enumerate");
    std::vector<GroupElement> out;
    out.reserve(size_t(n));
    std::vector<Int> cur(num_coords(), Int(0));
    for (;;) {
        out.push_back(GroupElement{cur});
        int i = num_coords() - 1;
        while (i >= 0) {
            if (++cur[i] < d_->moduli[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

Homomorphism::Homomorphism(AbelianGroup source, AbelianGroup target, IntMatrix matrix)
    : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(matrix)) {
    if (m_.rows() != tgt_.num_coords() || m_.cols() != src_.num_coords())
        throw std::invalid_argument("homomorphism matrix shape mismatch");
    const auto& am = src_.moduli();
    const auto& bm = tgt_.moduli();
    for (int i = 0; i < m_.rows(); ++i)
        for (int j = 0; j < m_.cols(); ++j) {
            m_.at(i, j) = mod_floor(m_.at(i, j), bm[i]);
            if (am[j] != 0 && mod_floor(am[j] * m_.at(i, j), bm[i]) != 0)
                throw std::invalid_argument("matrix does not define a homomorphism");
        }
}

Homomorphism Homomorphism::zero(AbelianGroup source, AbelianGroup target) {
    IntMatrix m(target.num_coords(), source.num_coords());
    return Homomorphism(std::move(source), std::move(target), std::move(m));
}

Homomorphism Homomorphism::identity(AbelianGroup g) {
    IntMatrix m = IntMatrix::identity(g.num_coords());
    return Homomorphism(g, g, std::move(m));
}

Homomorphism Homomorphism::from_presentation_matrix(const AbelianGroup& source,
                                                    const AbelianGroup& target,
                                                    const IntMatrix& m) {
    if (m.rows() != target.presentation_gens() || m.cols() != source.presentation_gens())
        throw std::invalid_argument("presentation matrix shape mismatch");
    return Homomorphism(source, target, target.to_canonical() * m * source.from_canonical());
}

GroupElement Homomorphism::apply(const GroupElement& x) const {
    return tgt_.reduce(m_.apply(x.coords));
}

Homomorphism Homomorphism::after(const Homomorphism& inner) const {
    if (!inner.tgt_.same_shape(src_)) throw std::invalid_argument("composition shape mismatch");
    return Homomorphism(inner.src_, tgt_, m_ * inner.m_);
}

Homomorphism Homomorphism::plus(const Homomorphism& o) const {
    IntMatrix m(m_.rows(), m_.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m_.at(i, j) + o.m_.at(i, j);
    return Homomorphism(src_, tgt_, std::move(m));
}

Homomorphism Homomorphism::negated() const { return Homomorphism(src_, tgt_, -m_); }

bool Homomorphism::operator==(const Homomorphism& o) const {
    return src_.same_shape(o.src_) && tgt_.same_shape(o.tgt_) && m_ == o.m_;
}

std::optional<GroupElement> Homomorphism::preimage(const GroupElement& y) const {
    auto x = solve_mod(m_, tgt_.moduli(), y.coords);
    if (!x) return std::nullopt;
    return src_.reduce(std::move(*x));
}

Subgroup kernel(const Homomorphism& f) {
    // integer vectors mapping into the target relation lattice, then reduced
    // modulo the source relations
    IntMatrix gen = lattice_kernel(f.matrix(), f.target().moduli());
    IntMatrix rel = lattice_kernel(gen, f.source().moduli());
    AbelianGroup K = AbelianGroup::from_presentation(gen.cols(), rel);
    IntMatrix incl = gen * K.from_canonical();
    return Subgroup{K, Homomorphism(K, f.source(), std::move(incl))};
}

Subgroup image(const Homomorphism& f) {
    IntMatrix gen = f.matrix();
    IntMatrix rel = lattice_kernel(gen, f.target().moduli());
    AbelianGroup I = AbelianGroup::from_presentation(gen.cols(), rel);
    IntMatrix incl = gen * I.from_canonical();
    return Subgroup{I, Homomorphism(I, f.target(), std::move(incl))};
}

QuotientGroup quotient(const AbelianGroup& ambient, const Homomorphism& into_ambient) {
    if (!into_ambient.target().same_shape(ambient))
        throw std::invalid_argument("quotient: map does not land in the ambient group");
    std::vector<Int> nonzero;
    for (const auto& m : ambient.moduli())
        if (m != 0) nonzero.push_back(m);
    IntMatrix diag(ambient.num_coords(), int(nonzero.size()));
    {
        int c = 0;
        for (int i = 0; i < ambient.num_coords(); ++i)
            if (ambient.moduli()[i] != 0) diag.at(i, c++) = ambient.moduli()[i];
    }
    IntMatrix rel = IntMatrix::hstack(diag, into_ambient.matrix());
    AbelianGroup Q = AbelianGroup::from_presentation(ambient.num_coords(), rel);
    Homomorphism proj(ambient, Q, Q.to_canonical());
    return QuotientGroup{Q, std::move(proj)};
}

GroupElement Subquotient::class_of(const GroupElement& x) const {
    auto y = cycles.inclusion.preimage(x);
    if (!y) throw std::invalid_argument("class_of: element is not a cycle");
    return quot.projection.apply(*y);
}

GroupElement Subquotient::representative(const GroupElement& cls) const {
    GroupElement y = cycles.group.reduce(quot.group.from_canonical().apply(cls.coords));
    return cycles.inclusion.apply(y);
}

Subquotient subquotient(const Homomorphism& out_map, const Homomorphism& in_map) {
    if (!in_map.target().same_shape(out_map.source()))
        throw std::invalid_argument("subquotient: maps do not share the middle group");
    if (!out_map.after(in_map).is_zero())
        throw std::invalid_argument("subquotient: out_map ∘ in_map != 0");
    Subgroup ker = kernel(out_map);
    Subgroup im = image(in_map);
    // express each image generator inside the kernel subgroup
    IntMatrix cols(ker.group.num_coords(), im.group.num_coords());
    for (int j = 0; j < im.group.num_coords(); ++j) {
        std::vector<Int> e(im.group.num_coords());
        e[j] = 1;
        auto y = ker.inclusion.preimage(im.inclusion.apply(im.group.element(e)));
        if (!y) throw std::logic_error("subquotient: image escapes the kernel");
        for (int i = 0; i < ker.group.num_coords(); ++i) cols.at(i, j) = y->coords[i];
    }
    Homomorphism img(im.group, ker.group, std::move(cols));
    QuotientGroup q = quotient(ker.group, img);
    return Subquotient{out_map.source(), std::move(ker), std::move(img), std::move(q)};
}

HomGroup hom_group(const AbelianGroup& A, const AbelianGroup& B) {
    const auto& am = A.moduli();
    const auto& bm = B.moduli();
    HomGroup hg;
    hg.src = A;
    hg.tgt = B;
    std::vector<Int> factors;
    for (int j = 0; j < A.num_coords(); ++j)
        for (int i = 0; i < B.num_coords(); ++i) {
            Int modulus, gen_value;
            if (am[j] == 0) { // Hom(Z, Z_b) = Z_b, Hom(Z, Z) = Z
                modulus = bm[i];
                gen_value = 1;
            } else if (bm[i] == 0) { // Hom(Z_a, Z) = 0
                continue;
            } else {
                Int g = gcd(am[j], bm[i]); // Hom(Z_a, Z_b) = Z_gcd
                if (g == 1) continue;
                modulus = g;
                gen_value = bm[i] / g;
            }
            hg.factors.push_back(HomGroup::Factor{j, i, modulus, gen_value});
            factors.push_back(modulus);
        }
    hg.group = AbelianGroup::from_factors(factors);
    return hg;
}

Homomorphism HomGroup::hom_of(const GroupElement& e) const {
    std::vector<Int> p = group.to_presentation_coords(e);
    IntMatrix m(tgt.num_coords(), src.num_coords());
    for (size_t l = 0; l < factors.size(); ++l)
        m.at(factors[l].tgt_coord, factors[l].src_coord) = p[l] * factors[l].gen_value;
    return Homomorphism(src, tgt, std::move(m));
}

GroupElement HomGroup::element_of(const Homomorphism& f) const {
    if (!f.source().same_shape(src) || !f.target().same_shape(tgt))
        throw std::invalid_argument("element_of: hom between different groups");
    std::vector<Int> p(factors.size());
    for (size_t l = 0; l < factors.size(); ++l) {
        const Int& v = f.matrix().at(factors[l].tgt_coord, factors[l].src_coord);
        if (v % factors[l].gen_value != 0)
            throw std::invalid_argument("element_of: matrix entry off the generator lattice");
        p[l] = v / factors[l].gen_value;
    }
    return group.from_presentation_coords(p);
}

AbelianGroup ext_group(const AbelianGroup& A, const AbelianGroup& B) {
    if (!B.is_finite()) throw std::invalid_argument("ext_group requires finite B");
    std::vector<Int> factors;
    for (int j = 0; j < A.num_coords(); ++j) {
        if (A.moduli()[j] == 0) continue; // Ext(Z, B) = 0
        for (int i = 0; i < B.num_coords(); ++i) {
            Int g = gcd(A.moduli()[j], B.moduli()[i]); // Ext(Z_a, Z_b) = Z_gcd
            if (g > 1) factors.push_back(g);
        }
    }
    return AbelianGroup::from_factors(factors);
}

RationalPhase Character::evaluate(const AbelianGroup& g, const GroupElement& x) const {
    if (!g.is_finite()) throw std::invalid_argument("characters defined on finite groups only");
    RationalPhase phi;
    for (int i = 0; i < g.num_coords(); ++i)
        phi = phi + RationalPhase(exponents[i] * x.coords[i], g.moduli()[i]);
    return phi;
}

AbelianGroup dual_group(const AbelianGroup& g) {
    if (!g.is_finite()) throw std::invalid_argument("dual of an infinite group");
    return AbelianGroup::from_factors(g.moduli());
}

Homomorphism dual_of_hom(const Homomorphism& f) {
    const auto& am = f.source().moduli();
    const auto& bm = f.target().moduli();
    IntMatrix m(f.source().num_coords(), f.target().num_coords());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            // well-definedness of f gives bm[j] | am[i] * F(j, i)
            m.at(i, j) = am[i] * f.matrix().at(j, i) / bm[j];
        }
    return Homomorphism(dual_group(f.target()), dual_group(f.source()), std::move(m));
}

} // namespace ahg
