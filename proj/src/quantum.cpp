#include "ahg/quantum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ahg {
namespace {

constexpr long long kEncodeLimit = 1LL << 62;

long long small(const Int& v, const char* what) {
    if (v < 0 || v > kEncodeLimit) throw CapExceeded(std::string(what) + " does not fit 63 bits");
    return static_cast<long long>(v);
}

} // namespace

BasisSpace::BasisSpace(const std::vector<Int>& moduli, const Int& max_states) {
    Int total = 1;
    for (const Int& d : moduli) {
        if (d <= 0) throw std::invalid_argument("BasisSpace: moduli must be finite and positive");
        total *= d;
    }
    if (total > max_states)
        throw CapExceeded("basis of size " + total.str() + " exceeds the cap " + max_states.str());
    dim_ = small(total, "basis size");
    radices_.reserve(moduli.size());
    for (const Int& d : moduli) radices_.push_back(small(d, "basis modulus"));
    strides_.assign(moduli.size(), 1);
    for (int i = static_cast<int>(moduli.size()) - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * radices_[i + 1];
}

long long BasisSpace::encode(const std::vector<Int>& flat) const {
    if (flat.size() != radices_.size()) throw std::invalid_argument("encode: coordinate count mismatch");
    long long index = 0;
    for (std::size_t i = 0; i < flat.size(); ++i)
        index += static_cast<long long>(mod_floor(flat[i], Int(radices_[i]))) * strides_[i];
    return index;
}

std::vector<Int> BasisSpace::decode(long long index) const {
    if (index < 0 || index >= dim_) throw std::out_of_range("decode: index out of range");
    std::vector<Int> flat(radices_.size());
    for (int i = static_cast<int>(radices_.size()) - 1; i >= 0; --i) {
        flat[i] = index % radices_[i];
        index /= radices_[i];
    }
    return flat;
}

MonomialOperator MonomialOperator::identity(long long dim) {
    MonomialOperator op;
    op.perm.resize(dim);
    for (long long i = 0; i < dim; ++i) op.perm[i] = i;
    op.phase.assign(dim, RationalPhase());
    return op;
}

MonomialOperator MonomialOperator::after(const MonomialOperator& inner) const {
    if (dim() != inner.dim()) throw std::invalid_argument("after: dimension mismatch");
    MonomialOperator out;
    out.perm.resize(perm.size());
    out.phase.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.perm[i] = perm[inner.perm[i]];
        out.phase[i] = inner.phase[i] + phase[inner.perm[i]];
    }
    return out;
}

MonomialOperator MonomialOperator::scaled(const RationalPhase& global) const {
    MonomialOperator out = *this;
    for (RationalPhase& p : out.phase) p = p + global;
    return out;
}

std::pair<long long, RationalPhase> MonomialOperator::apply(long long index) const {
    return {perm[index], phase[index]};
}

QuantumModel::QuantumModel(const HomComplex& h, Int max_count, Int max_dim)
    : h_(&h), max_count_(std::move(max_count)), max_dim_(std::move(max_dim)) {
    basis_ = BasisSpace(h.cochain_space(0).moduli, max_count_);
    d0_ = FlatMap::from(h, 0);
    Int e = 1;
    for (int n : h.gauge().degrees())
        for (const Int& d : h.gauge().group_at(n).moduli()) e = lcm(e, d);
    if (e > (Int(1) << 30)) throw CapExceeded("cyclotomic order too large");
    cyclo_order_ = static_cast<int>(e);
}

void QuantumModel::require_dense(const char* what) const {
    if (Int(basis_.dim()) > max_dim_)
        throw CapExceeded(std::string(what) + ": dimension " + std::to_string(basis_.dim()) +
                          " exceeds the cap " + max_dim_.str());
}

std::vector<Int> QuantumModel::add_flat(const std::vector<Int>& a, const std::vector<Int>& b) const {
    const std::vector<Int>& moduli = h_->cochain_space(0).moduli;
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_floor(a[i] + b[i], moduli[i]);
    return c;
}

Cochain QuantumModel::state_cochain(long long index) const {
    return h_->cochain_from_flat(0, basis_.decode(index));
}

long long QuantumModel::state_index(const Cochain& f) const {
    if (f.p != 0) throw std::invalid_argument("state_index: cochain degree must be 0");
    return basis_.encode(f.flat);
}

MonomialOperator QuantumModel::shift(const Cochain& t) const {
    if (t.p != 0) throw std::invalid_argument("shift: cochain degree must be 0");
    const std::vector<long long>& rad = basis_.radices();
    const std::vector<long long>& str = basis_.strides();
    int k = basis_.coords();
    if (static_cast<int>(t.flat.size()) != k) throw std::invalid_argument("shift: dimension mismatch");
    std::vector<long long> tt(k);
    for (int j = 0; j < k; ++j) tt[j] = static_cast<long long>(mod_floor(t.flat[j], Int(rad[j])));
    MonomialOperator op;
    op.perm.resize(basis_.dim());
    op.phase.assign(basis_.dim(), RationalPhase());
    std::vector<long long> digits(k, 0);
    for (long long i = 0; i < basis_.dim(); ++i) {
        long long target = 0;
        for (int j = 0; j < k; ++j) {
            long long v = digits[j] + tt[j];
            if (v >= rad[j]) v -= rad[j];
            target += v * str[j];
        }
        op.perm[i] = target;
        for (int j = k - 1; j >= 0; --j) {
            if (++digits[j] < rad[j]) break;
            digits[j] = 0;
        }
    }
    return op;
}

MonomialOperator QuantumModel::clock(const DualCochain& m) const {
    if (m.p != 0) throw std::invalid_argument("clock: character degree must be 0");
    const std::vector<long long>& rad = basis_.radices();
    int k = basis_.coords();
    if (static_cast<int>(m.exponents.size()) != k)
        throw std::invalid_argument("clock: dimension mismatch");
    std::vector<RationalPhase> step(k);
    for (int j = 0; j < k; ++j) step[j] = RationalPhase(m.exponents[j], Int(rad[j]));
    MonomialOperator op;
    op.perm.resize(basis_.dim());
    op.phase.resize(basis_.dim());
    // phases advance with the digit odometer: a wrap of digit j changes the
    // phase by -(rad_j - 1) step_j == +step_j in Q/Z, so every touched digit
    // just adds its step
    RationalPhase cur;
    std::vector<long long> digits(k, 0);
    for (long long i = 0; i < basis_.dim(); ++i) {
        op.perm[i] = i;
        op.phase[i] = cur;
        for (int j = k - 1; j >= 0; --j) {
            cur = cur + step[j];
            if (++digits[j] < rad[j]) break;
            digits[j] = 0;
        }
    }
    return op;
}

MonomialOperator QuantumModel::gauge_op(const Cochain& t) const {
    if (t.p != -1) throw std::invalid_argument("gauge_op: cochain degree must be -1");
    return shift(h_->delta(t));
}

MonomialOperator QuantumModel::holonomy_op(const DualCochain& m) const {
    if (m.p != 1) throw std::invalid_argument("holonomy_op: character degree must be 1");
    return clock(h_->delta_dual(m));
}

bool QuantumModel::flat_index(long long index) const {
    std::vector<Int> flat = basis_.decode(index);
    for (int r = 0; r < d0_.rows; ++r) {
        long long acc = 0;
        for (int j = 0; j < d0_.cols; ++j)
            acc = (acc + d0_.mat[static_cast<std::size_t>(r) * d0_.cols + j] *
                             static_cast<long long>(flat[j])) %
                  d0_.tgt_moduli[r];
        if (acc != 0) return false;
    }
    return true;
}

GroupElement QuantumModel::flux_at(long long index, int n, int cell) const {
    Cochain d = h_->delta(state_cochain(index));
    return h_->component(d, n, cell);
}

const std::vector<long long>& QuantumModel::gauge_orbit() const {
    if (!orbit_.empty()) return orbit_;
    require_dense("gauge orbit");
    const IntMatrix& d = h_->delta_matrix(-1);
    std::vector<std::vector<Int>> gens;
    for (int j = 0; j < d.cols(); ++j) {
        std::vector<Int> col(d.rows());
        for (int i = 0; i < d.rows(); ++i) col[i] = d.at(i, j);
        gens.push_back(std::move(col));
    }
    std::set<long long> seen;
    std::vector<long long> queue;
    seen.insert(0);
    queue.push_back(0);
    while (!queue.empty()) {
        long long x = queue.back();
        queue.pop_back();
        std::vector<Int> flat = basis_.decode(x);
        for (const std::vector<Int>& g : gens) {
            long long y = basis_.encode(add_flat(flat, g));
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    orbit_.assign(seen.begin(), seen.end());
    orbit_shifts_.clear();
    orbit_shifts_.reserve(orbit_.size());
    for (long long x : orbit_) orbit_shifts_.push_back(basis_.decode(x));
    return orbit_;
}

SparseVec QuantumModel::basis_state(long long index) const {
    require_dense("basis state");
    return SparseVec{{index, Rational(1)}};
}

SparseVec QuantumModel::apply_A0(const SparseVec& v) const {
    gauge_orbit();
    Rational w(Int(1), Int(static_cast<long long>(orbit_.size())));
    SparseVec out;
    for (const auto& [i, c] : v) {
        std::vector<Int> flat = basis_.decode(i);
        for (const std::vector<Int>& s : orbit_shifts_) out[basis_.encode(add_flat(flat, s))] += c * w;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

SparseVec QuantumModel::apply_B0(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, c] : v)
        if (flat_index(i)) out[i] = c;
    return out;
}

SparseVec QuantumModel::apply_Pi0(const SparseVec& v) const { return apply_A0(apply_B0(v)); }

Rational QuantumModel::trace_A0() const {
    require_dense("trace of A0");
    Rational t(0);
    for (long long i = 0; i < basis_.dim(); ++i) {
        SparseVec col = apply_A0(basis_state(i));
        auto it = col.find(i);
        if (it != col.end()) t += it->second;
    }
    return t;
}

Rational QuantumModel::trace_Pi0() const {
    require_dense("trace of Pi0");
    gauge_orbit();
    Rational t(0);
    for (long long i = 0; i < basis_.dim(); ++i) {
        if (!flat_index(i)) continue;
        std::vector<Int> flat = basis_.decode(i);
        for (const std::vector<Int>& s : orbit_shifts_)
            if (basis_.encode(add_flat(flat, s)) == i) t += Rational(Int(1), Int(static_cast<long long>(orbit_.size())));
    }
    return t;
}

CycloVec QuantumModel::apply_local_A(int n, int cell, const Character& r, const CycloVec& v) const {
    const CochainSpace& sm1 = h_->cochain_space(-1);
    const CochainSpace::Block* b = sm1.block_at_degree(n);
    if (b == nullptr) {
        for (const Int& e : r.exponents)
            if (e != 0) throw std::invalid_argument("apply_local_A: nontrivial character of a trivial group");
        return v;
    }
    if (cell < 0 || cell >= b->cells) throw std::invalid_argument("apply_local_A: cell out of range");
    const AbelianGroup& g = b->values;
    Rational w(Int(1), g.order());
    CycloVec out;
    for (const GroupElement& x : g.all_elements()) {
        // conjugated character weight, forced by the exchange law with clocks
        Cyclotomic coef = Cyclotomic::from_phase(cyclo_order_, -r.evaluate(g, x)).scaled(w);
        std::vector<Int> u = h_->delta(h_->local_map(-1, n, cell, x)).flat;
        for (const auto& [i, c] : v) {
            long long j = basis_.encode(add_flat(basis_.decode(i), u));
            auto it = out.find(j);
            if (it == out.end())
                out.emplace(j, c * coef);
            else
                it->second = it->second + c * coef;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

CycloVec QuantumModel::apply_local_B(int n, int cell, const GroupElement& g, const CycloVec& v) const {
    const CochainSpace& s1 = h_->cochain_space(1);
    const CochainSpace::Block* b = s1.block_at_degree(n);
    if (b == nullptr) {
        if (!g.coords.empty()) throw std::invalid_argument("apply_local_B: element of a trivial group");
        return v;
    }
    if (cell < 0 || cell >= b->cells) throw std::invalid_argument("apply_local_B: cell out of range");
    CycloVec out;
    for (const auto& [i, c] : v)
        if (flux_at(i, n, cell) == g) out.emplace(i, c);
    return out;
}

CycloVec QuantumModel::apply_H(const CycloVec& v) const {
    const CochainSpace& sm1 = h_->cochain_space(-1);
    const CochainSpace& s1 = h_->cochain_space(1);
    CycloVec out;
    auto subtract = [&](const CycloVec& term) {
        for (const auto& [i, c] : term) {
            auto it = out.find(i);
            if (it == out.end())
                out.emplace(i, Cyclotomic::zero(cyclo_order_) - c);
            else
                it->second = it->second - c;
        }
    };
    for (int n : h_->space().cells.degrees()) {
        int cnt = h_->space().cells.count(n);
        const CochainSpace::Block* ba = sm1.block_at_degree(n);
        const CochainSpace::Block* bb = s1.block_at_degree(n);
        for (int cell = 0; cell < cnt; ++cell) {
            if (ba != nullptr) {
                Character trivial{std::vector<Int>(ba->values.num_coords(), Int(0))};
                subtract(apply_local_A(n, cell, trivial, v));
            } else {
                subtract(v);
            }
            if (bb != nullptr) {
                subtract(apply_local_B(n, cell, bb->values.zero(), v));
            } else {
                subtract(v);
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

int QuantumModel::hamiltonian_terms() const {
    int cells = 0;
    for (int n : h_->space().cells.degrees()) cells += h_->space().cells.count(n);
    return 2 * cells;
}

SpectrumReport QuantumModel::hamiltonian_spectrum(double tol) const {
    require_dense("Hamiltonian spectrum");
    long long n = basis_.dim();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (long long j = 0; j < n; ++j) {
        CycloVec col = apply_H(CycloVec{{j, Cyclotomic::one(cyclo_order_)}});
        for (const auto& [i, c] : col) {
            std::optional<Rational> r = c.as_rational();
            if (!r) throw std::logic_error("hamiltonian_spectrum: non-rational entry");
            m(i, j) = r->convert_to<double>();
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    SpectrumReport rep;
    rep.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    rep.ground_energy = rep.eigenvalues.empty() ? 0.0 : rep.eigenvalues.front();
    rep.ground_multiplicity = 0;
    for (double e : rep.eigenvalues)
        if (e <= rep.ground_energy + tol) ++rep.ground_multiplicity;
    rep.num_terms = hamiltonian_terms();
    return rep;
}

GroundBasis QuantumModel::ground_basis() const {
    require_dense("ground basis");
    const CohomologyClassSet& h0 = h_->cohomology(0);
    GroundBasis gb;
    for (const GroupElement& cls : h0.group().all_elements()) {
        Cochain rep = h0.representative(cls);
        gb.classes.push_back(cls);
        gb.representatives.push_back(rep);
        gb.states.push_back(apply_A0(basis_state(state_index(rep))));
    }
    return gb;
}

DualCochain QuantumModel::measurement_cochain(const GroupElement& dual_class) const {
    const CochainSpace& s0 = h_->cochain_space(0);
    const CohomologyClassSet& h0 = h_->cohomology(0);
    const AbelianGroup& q = h0.group();
    if (static_cast<int>(dual_class.coords.size()) != q.num_coords())
        throw std::invalid_argument("measurement_cochain: dual class has wrong coordinate count");

    Int big = 1;
    for (const Int& d : s0.moduli) big = lcm(big, d);
    for (const Int& d : q.moduli()) big = lcm(big, d);

    const IntMatrix& dm1 = h_->delta_matrix(-1);
    int dim0 = s0.dim();
    int rows_a = dm1.cols();
    int rows_b = q.num_coords();
    IntMatrix a(rows_a + rows_b, dim0);
    std::vector<Int> b(rows_a + rows_b, Int(0));
    // rows (a): the character kills the image of delta^{-1}
    for (int j = 0; j < rows_a; ++j)
        for (int i = 0; i < dim0; ++i) a.at(j, i) = (big / s0.moduli[i]) * dm1.at(i, j);
    // rows (b): on representatives of the class-group generators, the
    // character takes the values prescribed by the dual class
    std::vector<Cochain> reps;
    for (int l = 0; l < rows_b; ++l) {
        std::vector<Int> coords(rows_b, Int(0));
        coords[l] = 1;
        Cochain rep = h0.representative(q.element(coords));
        for (int i = 0; i < dim0; ++i) a.at(rows_a + l, i) = (big / s0.moduli[i]) * rep.flat[i];
        const Int& hl = q.moduli()[l];
        if (big % hl != 0) throw std::logic_error("measurement_cochain: class modulus does not divide the lcm");
        b[rows_a + l] = (big / hl) * dual_class.coords[l];
        reps.push_back(std::move(rep));
    }
    std::vector<Int> moduli(rows_a + rows_b, big);
    std::optional<std::vector<Int>> x = solve_mod(a, moduli, b);
    if (!x) throw std::logic_error("measurement_cochain: no character extension found");
    DualCochain m{0, std::vector<Int>(dim0)};
    for (int i = 0; i < dim0; ++i) m.exponents[i] = mod_floor((*x)[i], s0.moduli[i]);

    // certificates: m is closed, and it measures the prescribed values
    DualCochain down = h_->delta_dual(m);
    for (const Int& e : down.exponents)
        if (e != 0) throw std::logic_error("measurement_cochain: certificate failed, delta_0 m != 0");
    for (int l = 0; l < rows_b; ++l)
        if (!(h_->pair(m, reps[l]) == RationalPhase(dual_class.coords[l], q.moduli()[l])))
            throw std::logic_error("measurement_cochain: certificate failed, wrong class values");
    return m;
}

MonomialOperator QuantumModel::measurement_op(const GroupElement& dual_class) const {
    return clock(measurement_cochain(dual_class));
}

RationalPhase QuantumModel::dual_pairing(const GroupElement& dual_class, const GroupElement& cls) const {
    Character c{dual_class.coords};
    return c.evaluate(h_->cohomology(0).group(), cls);
}

Cyclotomic QuantumModel::selector_eigenvalue(const GroupElement& select, const GroupElement& cls) const {
    const AbelianGroup& q = h_->cohomology(0).group();
    AbelianGroup dual = dual_group(q);
    Cyclotomic acc = Cyclotomic::zero(cyclo_order_);
    for (const GroupElement& w : dual.all_elements())
        acc = acc + Cyclotomic::from_phase(cyclo_order_, dual_pairing(w, cls) - dual_pairing(w, select));
    return acc.scaled(Rational(Int(1), q.order()));
}

std::map<int, MonomialOperator> QuantumModel::string_factorization(
    BrownContext& bc, const std::map<int, Cochain>& cocycles, const Splitting& phi) const {
    if (!(bc.main().cochain_space(0).moduli == h_->cochain_space(0).moduli))
        throw std::invalid_argument("string_factorization: context built over a different model");
    std::map<int, MonomialOperator> out;
    for (const auto& [n, fn] : cocycles) out.emplace(n, shift(bc.alpha_term(n, fn, phi)));
    return out;
}

SparseVec apply_monomial(const MonomialOperator& op, const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) {
        if (!op.phase[i].is_zero())
            throw std::logic_error("apply_monomial: nonzero phase on a rational state");
        out[op.perm[i]] += c;
    }
    return out;
}

CycloVec apply_monomial(const MonomialOperator& op, const CycloVec& v, int cyclo_order) {
    CycloVec out;
    for (const auto& [i, c] : v) {
        Cyclotomic term = c * Cyclotomic::from_phase(cyclo_order, op.phase[i]);
        auto it = out.find(op.perm[i]);
        if (it == out.end())
            out.emplace(op.perm[i], term);
        else
            it->second = it->second + term;
    }
    return out;
}

} // namespace ahg
