#pragma once

#include "ahg/counting.hpp"
#include "ahg/cyclotomic.hpp"
#include "ahg/invariants.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ahg {

/// Mixed-radix bijection between basis states |f> of a flat coordinate
/// system and the integers [0, dim); the first coordinate is the most
/// significant digit, so the order is lexicographic in the coordinates.
class BasisSpace {
public:
    BasisSpace() = default;
    BasisSpace(const std::vector<Int>& moduli, const Int& max_states);

    long long dim() const { return dim_; }
    int coords() const { return static_cast<int>(radices_.size()); }
    const std::vector<long long>& radices() const { return radices_; }
    const std::vector<long long>& strides() const { return strides_; }

    long long encode(const std::vector<Int>& flat) const;
    std::vector<Int> decode(long long index) const;

private:
    std::vector<long long> radices_, strides_;
    long long dim_ = 1;
};

/// Operator of the form O|i> = exp(2 pi i phase[i]) |perm[i]> with perm a
/// permutation; closed under products, and every P_t, Q_m, A_t, B_m is one.
struct MonomialOperator {
    std::vector<long long> perm;
    std::vector<RationalPhase> phase;

    static MonomialOperator identity(long long dim);

    long long dim() const { return static_cast<long long>(perm.size()); }
    /// this ∘ inner (inner acts first).
    MonomialOperator after(const MonomialOperator& inner) const;
    /// The same operator scaled by a global phase.
    MonomialOperator scaled(const RationalPhase& global) const;
    /// Image of a basis state: O|i> = exp(2 pi i .second) |.first>.
    std::pair<long long, RationalPhase> apply(long long index) const;

    bool operator==(const MonomialOperator& o) const = default;
};

/// States and operators with exact rational amplitudes.
using SparseVec = std::map<long long, Rational>;
/// ... and with exact cyclotomic amplitudes, for character-weighted sums.
using CycloVec = std::map<long long, Cyclotomic>;

struct SpectrumReport {
    std::vector<double> eigenvalues; // ascending
    double ground_energy = 0.0;
    int ground_multiplicity = 0;
    int num_terms = 0; // local Hamiltonian terms, one A and one B per cell
};

struct GroundBasis {
    std::vector<GroupElement> classes;  // elements of H^0(C,G), all of them
    std::vector<Cochain> representatives;
    std::vector<SparseVec> states;      // A0 |representative>, unnormalized
};

/// Brute-force quantum model of the gauge theory on the full Hilbert space
/// spanned by hom^0. Operator tables are gated by max_count; whole-space
/// scans, orbits, states and spectra by max_dim. Caps throw CapExceeded.
class QuantumModel {
public:
    explicit QuantumModel(const HomComplex& h, Int max_count = Int(1) << 20,
                          Int max_dim = 4096);
    // pinned to the lifetime and address of h
    QuantumModel(const QuantumModel&) = delete;
    QuantumModel& operator=(const QuantumModel&) = delete;

    const HomComplex& hom() const { return *h_; }
    const BasisSpace& basis() const { return basis_; }
    long long dim() const { return basis_.dim(); }
    /// lcm of the gauge moduli: every phase in the model is an E-th root of 1.
    int cyclotomic_order() const { return cyclo_order_; }

    Cochain state_cochain(long long index) const;
    long long state_index(const Cochain& f) const;

    MonomialOperator shift(const Cochain& t) const;            // P_t, t in hom^0
    MonomialOperator clock(const DualCochain& m) const;        // Q_m, m dual at p = 0
    MonomialOperator gauge_op(const Cochain& t) const;         // A_t = P_{delta t}, t in hom^{-1}
    MonomialOperator holonomy_op(const DualCochain& m) const;  // B_m = Q_{delta_dual m}, p = 1

    bool flat_index(long long index) const; // is |index> in ker(delta^0)
    /// Local flux (delta^0 f)_n(x) as an element of G_{n-1}.
    GroupElement flux_at(long long index, int n, int cell) const;

    // States and exact projectors; these need the gauge orbit and are gated
    // by max_dim.
    SparseVec basis_state(long long index) const;
    /// Encoded elements of im(delta^{-1}), ascending.
    const std::vector<long long>& gauge_orbit() const;
    SparseVec apply_A0(const SparseVec& v) const;   // gauge average
    SparseVec apply_B0(const SparseVec& v) const;   // flatness indicator
    SparseVec apply_Pi0(const SparseVec& v) const;  // A0 B0
    Rational trace_A0() const;   // = |hom^0| / |im delta^{-1}|
    Rational trace_Pi0() const;  // = GSD, by whole-space scan

    // Local operators, applied pointwise with exact cyclotomic amplitudes.
    // Cell x of degree n; r is a character of G_{n+1}, g an element of G_{n-1}.
    CycloVec apply_local_A(int n, int cell, const Character& r, const CycloVec& v) const;
    CycloVec apply_local_B(int n, int cell, const GroupElement& g, const CycloVec& v) const;
    /// H = -sum_x A_x^0 - sum_x B_x^0 over all cells (absent blocks mean
    /// identity terms), by lazy columns.
    CycloVec apply_H(const CycloVec& v) const;
    int hamiltonian_terms() const;

    /// Dense spectrum of H; gated by max_dim.
    SpectrumReport hamiltonian_spectrum(double tol = 1e-8) const;

    /// One exact ground state per cohomology class, A0 |representative>.
    GroundBasis ground_basis() const;

    /// Lift of a character of H^0(C,G) to a concrete m in ker(delta_0) whose
    /// clock operator measures the class of every flat state. The lift is
    /// certified; a failed certificate throws std::logic_error (a bug, not
    /// a user error).
    DualCochain measurement_cochain(const GroupElement& dual_class) const;
    MonomialOperator measurement_op(const GroupElement& dual_class) const;
    /// chi_{dual_class}(cls) for classes of H^0(C,G).
    RationalPhase dual_pairing(const GroupElement& dual_class, const GroupElement& cls) const;
    /// Exact eigenvalue of the averaged selector for class `select` on the
    /// ground state of class `cls`: 1 when equal, 0 otherwise.
    Cyclotomic selector_eigenvalue(const GroupElement& select, const GroupElement& cls) const;

    /// Per-degree string operators P_{phi_n ∘ f_n} of a Brown tuple; their
    /// product moves the trivial ground state into the class alpha_phi(f).
    std::map<int, MonomialOperator> string_factorization(BrownContext& bc,
                                                         const std::map<int, Cochain>& cocycles,
                                                         const Splitting& phi) const;

private:
    void require_dense(const char* what) const;
    std::vector<Int> add_flat(const std::vector<Int>& a, const std::vector<Int>& b) const;

    const HomComplex* h_;
    Int max_count_, max_dim_;
    BasisSpace basis_;
    FlatMap d0_;        // flatness test in machine integers
    int cyclo_order_ = 1;
    mutable std::vector<long long> orbit_;        // encoded im(delta^{-1})
    mutable std::vector<std::vector<Int>> orbit_shifts_; // the same, decoded
};

/// Apply a monomial operator to an exact rational state; every phase met on
/// the support must vanish (shift operators), else std::logic_error.
SparseVec apply_monomial(const MonomialOperator& op, const SparseVec& v);
/// Apply a monomial operator to a cyclotomic state.
CycloVec apply_monomial(const MonomialOperator& op, const CycloVec& v, int cyclo_order);

} // namespace ahg
