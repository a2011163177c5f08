#include "ahg/jobspec.hpp"

#include "ahg/counting.hpp"
#include "ahg/invariants.hpp"
#include "ahg/json_io.hpp"
#include "ahg/quantum.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace ahg {
namespace {

using Json = nlohmann::ordered_json;

int parse_int_token(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": bad integer '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t at = s.find(sep, start);
        out.push_back(s.substr(start, at - start));
        if (at == std::string::npos) break;
        start = at + 1;
    }
    return out;
}

} // namespace

GeometricComplex parse_space(const std::string& name) {
    std::vector<std::string> parts = split(name, ':');
    if (parts[0] == "interval" && parts.size() == 1) return build_interval();
    if (parts[0] == "circle" && parts.size() == 2)
        return build_circle(parse_int_token(parts[1], "circle"));
    if (parts[0] == "sphere" && parts.size() == 2)
        return build_sphere(parse_int_token(parts[1], "sphere"));
    if (parts[0] == "torus" && parts.size() == 3)
        return build_torus(parse_int_token(parts[1], "torus"),
                           parse_int_token(parts[2], "torus"));
    throw std::invalid_argument(
        "space: unknown name '" + name +
        "' (expected interval, circle:L, sphere:d or torus:d:L)");
}

ChainComplex parse_gauge(const std::string& name) {
    if (name == "z4-z2") {
        ChainComplex g;
        g.set_group(2, AbelianGroup::from_factors({Int(4)}));
        g.set_group(1, AbelianGroup::from_factors({Int(2)}));
        IntMatrix d(1, 1);
        d.at(0, 0) = 1;
        g.set_boundary(2, d);
        return g;
    }
    // zN-at-k: the cyclic group Z_N placed at degree k
    if (name.size() > 1 && name[0] == 'z') {
        std::size_t at = name.find("-at-");
        if (at != std::string::npos) {
            int n = parse_int_token(name.substr(1, at - 1), "gauge");
            int k = parse_int_token(name.substr(at + 4), "gauge");
            if (n < 1) throw std::invalid_argument("gauge: cyclic order must be positive");
            ChainComplex g;
            g.set_group(k, AbelianGroup::from_factors({Int(n)}));
            return g;
        }
    }
    throw std::invalid_argument("gauge: unknown name '" + name +
                                "' (expected zN-at-k or z4-z2)");
}

GeometricComplex JobSpec::space() const {
    if (!space_file.empty()) return parse_geometric_json(read_file(space_file));
    return parse_space(space_name);
}

ChainComplex JobSpec::gauge() const {
    if (!gauge_file.empty()) return parse_gauge_json(read_file(gauge_file));
    return parse_gauge(gauge_name);
}

namespace {

std::string int_str(const Int& x) { return x.str(); }

/// All degrees a homology table should cover.
std::pair<int, int> table_range(const GeometricComplex& c, const ChainComplex& g) {
    int lo = 0, hi = 0;
    for (int n : c.cells.degrees()) {
        lo = std::min(lo, n);
        hi = std::max(hi, n);
    }
    for (int n : g.degrees()) {
        lo = std::min(lo, n);
        hi = std::max(hi, n);
    }
    return {lo, hi};
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

/// Iterates f over every tuple drawn from the per-degree element lists.
void for_each_tuple(const std::vector<int>& degrees,
                    const std::vector<std::vector<GroupElement>>& lists,
                    const std::function<void(const std::map<int, GroupElement>&)>& f) {
    std::vector<std::size_t> idx(lists.size(), 0);
    while (true) {
        std::map<int, GroupElement> tuple;
        for (std::size_t i = 0; i < lists.size(); ++i) tuple[degrees[i]] = lists[i][idx[i]];
        f(tuple);
        std::size_t j = 0;
        for (; j < idx.size(); ++j) {
            if (++idx[j] < lists[j].size()) break;
            idx[j] = 0;
        }
        if (j == idx.size()) break;
    }
}

GroupElement random_element(const AbelianGroup& g, std::mt19937& rng) {
    std::vector<Int> coords(g.num_coords());
    for (int i = 0; i < g.num_coords(); ++i)
        coords[i] = Int(static_cast<long long>(
            rng() % static_cast<unsigned long>(static_cast<long long>(g.moduli()[i]))));
    return g.element(coords);
}

Cochain random_cochain(const HomComplex& h, int p, std::mt19937& rng) {
    const CochainSpace& s = h.cochain_space(p);
    std::vector<Int> flat(s.dim());
    for (int i = 0; i < s.dim(); ++i)
        flat[i] = Int(static_cast<long long>(
            rng() % static_cast<unsigned long>(static_cast<long long>(s.moduli[i]))));
    return h.cochain_from_flat(p, flat);
}

DualCochain random_dual(const HomComplex& h, int p, std::mt19937& rng) {
    const CochainSpace& s = h.cochain_space(p);
    DualCochain m{p, std::vector<Int>(s.dim())};
    for (int i = 0; i < s.dim(); ++i)
        m.exponents[i] = Int(static_cast<long long>(
            rng() % static_cast<unsigned long>(static_cast<long long>(s.moduli[i]))));
    return m;
}

DualCochain dual_sum(const DualCochain& a, const DualCochain& b) {
    DualCochain c{a.p, a.exponents};
    for (std::size_t i = 0; i < c.exponents.size(); ++i) c.exponents[i] += b.exponents[i];
    return c;
}

bool cyclo_equal(const CycloVec& a, const CycloVec& b) {
    for (const auto& [i, c] : a) {
        auto it = b.find(i);
        Cyclotomic diff = it == b.end() ? c : c - it->second;
        if (!diff.is_zero()) return false;
    }
    for (const auto& [i, c] : b)
        if (a.find(i) == a.end() && !c.is_zero()) return false;
    return true;
}

void cyclo_add(CycloVec& v, long long i, const Cyclotomic& c) {
    auto it = v.find(i);
    if (it == v.end())
        v.emplace(i, c);
    else
        it->second = it->second + c;
}

struct PropertyList {
    std::ostream& out;
    bool json;
    Json props = Json::object();
    bool all = true;

    void add(const std::string& name, bool pass) {
        all = all && pass;
        if (json)
            props[name] = pass;
        else
            out << name << ": " << (pass ? "pass" : "FAIL") << "\n";
    }
};

int verify_brown(const JobSpec& spec, std::ostream& out) {
    GeometricComplex space = spec.space();
    ChainComplex gauge = spec.gauge();
    BrownContext bc(space, gauge);
    HomComplex& h = bc.main();
    auto [phi1, phi2] = build_splitting_pair(gauge);
    std::vector<int> degrees = bc.degrees();

    Int tuple_count = 1;
    for (int n : degrees) tuple_count *= bc.coefficient_classes(n).group().order();
    bool exhaustive = tuple_count <= 64;

    std::vector<std::vector<GroupElement>> lists;
    if (exhaustive) {
        for (int n : degrees) lists.push_back(bc.coefficient_classes(n).group().all_elements());
    } else {
        std::mt19937 rng(spec.seed);
        lists.assign(degrees.size(), {});
        for (int sample = 0; sample < 100; ++sample)
            for (std::size_t i = 0; i < degrees.size(); ++i)
                lists[i].push_back(
                    random_element(bc.coefficient_classes(degrees[i]).group(), rng));
        // turn the per-degree samples into aligned single-element tuples
    }

    bool flat_ok = true, indep_ok = true;
    std::set<std::vector<Int>> images;
    Int seen = 0;
    auto probe = [&](const std::map<int, GroupElement>& tuple) {
        std::map<int, Cochain> cocycles;
        for (const auto& [n, cls] : tuple)
            cocycles[n] = bc.coefficient_classes(n).representative(cls);
        Cochain a = bc.alpha(cocycles, phi1);
        flat_ok = flat_ok && h.is_zero(h.delta(a));
        GroupElement c1 = bc.alpha_class(tuple, phi1);
        GroupElement c2 = bc.alpha_class(tuple, phi2);
        indep_ok = indep_ok && c1 == c2;
        images.insert(c1.coords);
        seen += 1;
    };
    if (exhaustive) {
        for_each_tuple(degrees, lists, probe);
    } else {
        for (std::size_t k = 0; k < 100; ++k) {
            std::map<int, GroupElement> tuple;
            for (std::size_t i = 0; i < degrees.size(); ++i) tuple[degrees[i]] = lists[i][k];
            probe(tuple);
        }
    }

    PropertyList props{out, spec.json};
    props.add("alpha images are flat", flat_ok);
    props.add("splitting independence", indep_ok);
    if (exhaustive) {
        props.add("class map injective", Int(static_cast<long long>(images.size())) == seen);
        props.add("class map onto H0",
                  Int(static_cast<long long>(images.size())) ==
                      h.cohomology(0).group().order());
    }
    if (spec.json) {
        Json j;
        j["suite"] = "brown";
        j["exhaustive"] = exhaustive;
        j["properties"] = std::move(props.props);
        j["pass"] = props.all;
        emit_json(out, j);
    } else {
        out << "verdict: " << (props.all ? "pass" : "FAIL") << "\n";
    }
    return props.all ? kOk : kMismatch;
}

int verify_uct(const JobSpec& spec, std::ostream& out) {
    GsdReport r = gsd(spec.space(), spec.gauge());
    PropertyList props{out, spec.json};
    for (const auto& [n, factor] : r.brown_factors) {
        const auto& [hom, ext] = r.uct_factors.at(n);
        props.add("degree " + std::to_string(n) + ": |H^n| = " + int_str(factor) +
                      " equals |Hom| * |Ext| = " + int_str(hom) + " * " + int_str(ext),
                  factor == hom * ext);
    }
    props.add("brown product equals direct GSD", r.brown_agrees);
    props.add("uct product equals direct GSD", r.uct_agrees);
    if (spec.json) {
        Json j;
        j["suite"] = "uct";
        j["properties"] = std::move(props.props);
        j["pass"] = props.all;
        emit_json(out, j);
    } else {
        out << "verdict: " << (props.all ? "pass" : "FAIL") << "\n";
    }
    return props.all ? kOk : kMismatch;
}

int verify_algebra(const JobSpec& spec, std::ostream& out) {
    GeometricComplex space = spec.space();
    ChainComplex gauge = spec.gauge();
    HomComplex h(space, gauge);
    QuantumModel qm(h, spec.max_count, spec.max_dim);
    const int kInstances = 100;
    int e = qm.cyclotomic_order();

    PropertyList props{out, spec.json};
    {
        std::mt19937 rng(spec.seed + 1);
        bool shift_law = true, clock_law = true, exchange = true;
        for (int it = 0; it < kInstances; ++it) {
            Cochain t1 = random_cochain(h, 0, rng), t2 = random_cochain(h, 0, rng);
            DualCochain m1 = random_dual(h, 0, rng), m2 = random_dual(h, 0, rng);
            MonomialOperator p1 = qm.shift(t1), p2 = qm.shift(t2);
            MonomialOperator q1 = qm.clock(m1), q2 = qm.clock(m2);
            shift_law = shift_law && p1.after(p2) == qm.shift(h.add(t1, t2));
            clock_law = clock_law && q1.after(q2) == qm.clock(dual_sum(m1, m2));
            exchange = exchange && q1.after(p1) == p1.after(q1).scaled(h.pair(m1, t1));
        }
        props.add("shift operators multiply by cochain addition", shift_law);
        props.add("clock operators multiply by character addition", clock_law);
        props.add("clock-shift exchange picks up the pairing phase", exchange);
    }
    {
        std::mt19937 rng(spec.seed + 2);
        bool a_law = true, b_law = true, commute = true;
        for (int it = 0; it < kInstances; ++it) {
            Cochain t1 = random_cochain(h, -1, rng), t2 = random_cochain(h, -1, rng);
            DualCochain m1 = random_dual(h, 1, rng), m2 = random_dual(h, 1, rng);
            MonomialOperator a1 = qm.gauge_op(t1), a2 = qm.gauge_op(t2);
            MonomialOperator b1 = qm.holonomy_op(m1), b2 = qm.holonomy_op(m2);
            a_law = a_law && a1.after(a2) == qm.gauge_op(h.add(t1, t2));
            b_law = b_law && b1.after(b2) == qm.holonomy_op(dual_sum(m1, m2));
            commute = commute && a1.after(b1) == b1.after(a1);
        }
        props.add("gauge operators multiply by cochain addition", a_law);
        props.add("holonomy operators multiply by character addition", b_law);
        props.add("gauge and holonomy operators commute", commute);
    }
    {
        std::mt19937 rng(spec.seed + 3);
        bool lemma = true;
        for (int it = 0; it < kInstances; ++it) {
            DualCochain s = random_dual(h, -1, rng);
            DualCochain m = random_dual(h, 0, rng);
            Cochain t = random_cochain(h, -1, rng);
            MonomialOperator at = qm.gauge_op(t);
            MonomialOperator q = qm.clock(m);
            DualCochain s_shift = dual_sum(s, h.delta_dual(m));
            lemma = lemma && at.after(q).scaled(-h.pair(s, t)) ==
                                 q.after(at).scaled(-h.pair(s_shift, t));
        }
        props.add("clocks exchange with character-weighted gauge terms", lemma);
    }
    {
        std::mt19937 rng(spec.seed + 4);
        bool ortho = true, complete = true;
        const CochainSpace& sm1 = h.cochain_space(-1);
        for (const CochainSpace::Block& blk : sm1.blocks) {
            AbelianGroup dual = dual_group(blk.values);
            std::vector<Character> chars;
            for (const GroupElement& r : dual.all_elements()) chars.push_back(Character{r.coords});
            for (int it = 0; it < 20; ++it) {
                int cell = int(rng() % static_cast<unsigned long>(blk.cells));
                long long j =
                    static_cast<long long>(rng() % static_cast<unsigned long>(qm.dim()));
                CycloVec base{{j, Cyclotomic::one(e)}};
                CycloVec total;
                for (std::size_t a = 0; a < chars.size(); ++a) {
                    CycloVec pa = qm.apply_local_A(blk.degree, cell, chars[a], base);
                    for (const auto& [i, c] : pa) cyclo_add(total, i, c);
                    for (std::size_t b = 0; b < chars.size(); ++b) {
                        CycloVec pab = qm.apply_local_A(
                            blk.degree, cell, chars[a],
                            qm.apply_local_A(blk.degree, cell, chars[b], base));
                        ortho = ortho && cyclo_equal(pab, a == b ? pa : CycloVec{});
                    }
                }
                complete = complete && cyclo_equal(total, base);
            }
        }
        props.add("local projectors are orthogonal", ortho);
        props.add("local projectors sum to the identity", complete);
    }
    {
        std::mt19937 rng(spec.seed + 5);
        bool commute = true;
        const CochainSpace& sm1 = h.cochain_space(-1);
        const CochainSpace& s1 = h.cochain_space(1);
        for (int it = 0; it < 20; ++it) {
            long long j = static_cast<long long>(rng() % static_cast<unsigned long>(qm.dim()));
            CycloVec base{{j, Cyclotomic::one(e)}};
            CycloVec hbase = qm.apply_H(base);
            for (const CochainSpace::Block& blk : sm1.blocks) {
                int cell = int(rng() % static_cast<unsigned long>(blk.cells));
                std::vector<GroupElement> rs = dual_group(blk.values).all_elements();
                Character r{rs[rng() % rs.size()].coords};
                commute = commute &&
                          cyclo_equal(qm.apply_H(qm.apply_local_A(blk.degree, cell, r, base)),
                                      qm.apply_local_A(blk.degree, cell, r, hbase));
            }
            for (const CochainSpace::Block& blk : s1.blocks) {
                int cell = int(rng() % static_cast<unsigned long>(blk.cells));
                std::vector<GroupElement> gs = blk.values.all_elements();
                const GroupElement& g = gs[rng() % gs.size()];
                commute = commute &&
                          cyclo_equal(qm.apply_H(qm.apply_local_B(blk.degree, cell, g, base)),
                                      qm.apply_local_B(blk.degree, cell, g, hbase));
            }
        }
        props.add("local projectors commute with the hamiltonian", commute);
    }
    if (spec.json) {
        Json j;
        j["suite"] = "algebra";
        j["seed"] = spec.seed;
        j["instances"] = kInstances;
        j["properties"] = std::move(props.props);
        j["pass"] = props.all;
        emit_json(out, j);
    } else {
        out << "verdict: " << (props.all ? "pass" : "FAIL") << "\n";
    }
    return props.all ? kOk : kMismatch;
}

int verify_spectrum(const JobSpec& spec, std::ostream& out) {
    GeometricComplex space = spec.space();
    ChainComplex gauge = spec.gauge();
    HomComplex h(space, gauge);
    QuantumModel qm(h, spec.max_count, spec.max_dim);
    SpectrumReport rep = qm.hamiltonian_spectrum();
    Int direct = gsd(space, gauge).direct;
    bool mult_ok = Int(rep.ground_multiplicity) == direct;
    bool energy_ok = std::abs(rep.ground_energy + rep.num_terms) <= 1e-8;
    if (spec.json) {
        Json j;
        j["suite"] = "spectrum";
        j["dimension"] = qm.dim();
        j["num_terms"] = rep.num_terms;
        j["ground_energy"] = rep.ground_energy;
        j["ground_multiplicity"] = rep.ground_multiplicity;
        j["gsd"] = direct.str();
        j["eigenvalues"] = rep.eigenvalues;
        Json props = Json::object();
        props["ground multiplicity equals GSD"] = mult_ok;
        props["ground energy is minus the term count"] = energy_ok;
        j["properties"] = std::move(props);
        j["pass"] = mult_ok && energy_ok;
        emit_json(out, j);
    } else {
        out << "dimension: " << qm.dim() << "\n";
        out << "local terms: " << rep.num_terms << "\n";
        out << "ground energy: " << rep.ground_energy << "\n";
        out << "ground multiplicity: " << rep.ground_multiplicity << "\n";
        out << "GSD: " << direct.str() << "\n";
        out << "ground multiplicity equals GSD: " << (mult_ok ? "pass" : "FAIL") << "\n";
        out << "ground energy is minus the term count: " << (energy_ok ? "pass" : "FAIL")
            << "\n";
        out << "verdict: " << (mult_ok && energy_ok ? "pass" : "FAIL") << "\n";
    }
    return (mult_ok && energy_ok) ? kOk : kMismatch;
}

} // namespace

int cmd_homology(const JobSpec& spec, std::ostream& out) {
    GeometricComplex space = spec.space();
    ChainComplex gauge = spec.gauge();
    auto [lo, hi] = table_range(space, gauge);
    if (spec.json) {
        Json j;
        Json hs = Json::object(), hg = Json::object();
        for (int n = lo; n <= hi; ++n) {
            hs[std::to_string(n)] = homology(space.complex, n).render();
            hg[std::to_string(n)] = homology(gauge, n).render();
        }
        j["space"] = std::move(hs);
        j["gauge"] = std::move(hg);
        emit_json(out, j);
        return kOk;
    }
    std::vector<std::array<std::string, 3>> rows;
    rows.push_back({"degree", "H_n(C)", "H_n(G)"});
    for (int n = lo; n <= hi; ++n)
        rows.push_back({std::to_string(n), homology(space.complex, n).render(),
                        homology(gauge, n).render()});
    std::array<std::size_t, 3> width{0, 0, 0};
    for (const auto& r : rows)
        for (int c = 0; c < 3; ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : rows) {
        for (int c = 0; c < 3; ++c) {
            out << (c ? "  " : "") << r[c];
            if (c < 2) out << std::string(width[c] - r[c].size(), ' ');
        }
        out << "\n";
    }
    return kOk;
}

int cmd_gsd(const JobSpec& spec, std::ostream& out) {
    GsdReport r = gsd(spec.space(), spec.gauge());
    if (spec.json) {
        out << render_gsd_json(r) << "\n";
    } else {
        out << "GSD (direct |H^0(C,G)|): " << int_str(r.direct) << "\n";
        out << "Brown factors |H^n(C,H_n(G))|:\n";
        for (const auto& [n, v] : r.brown_factors)
            out << "  degree " << n << ": " << int_str(v) << "\n";
        out << "Brown product: " << int_str(r.brown_product) << "\n";
        out << "UCT factors:\n";
        for (const auto& [n, he] : r.uct_factors)
            out << "  degree " << n << ": Hom " << int_str(he.first) << ", Ext "
                << int_str(he.second) << "\n";
        out << "UCT product: " << int_str(r.uct_product) << "\n";
        out << "verdict: " << (r.all_agree() ? "agree" : "DISAGREE") << "\n";
    }
    return r.all_agree() ? kOk : kMismatch;
}

int cmd_oracle(const JobSpec& spec, std::ostream& out) {
    GeometricComplex space = spec.space();
    ChainComplex gauge = spec.gauge();
    HomComplex h(space, gauge);
    CountingReport counting = counting_gsd(h, spec.max_count);
    QuantumModel qm(h, spec.max_count, spec.max_dim);
    Rational trace = qm.trace_Pi0();
    Int direct = gsd(space, gauge).direct;
    bool trace_integral = denominator(trace) == 1;
    bool agree = trace_integral && counting.gsd == direct && numerator(trace) == direct;
    if (spec.json) {
        Json j;
        j["counting"] = counting.gsd.str();
        j["trace"] = trace.str();
        j["cohomological"] = direct.str();
        j["agree"] = agree;
        emit_json(out, j);
    } else {
        out << "counting GSD: " << counting.gsd.str() << " (|hom^0| = " << counting.hom0.str()
            << ", |ker d^0| = " << counting.ker_d0.str()
            << ", |ker d^-1| = " << counting.ker_dm1.str()
            << ", |hom^-1| = " << counting.homm1.str() << ")\n";
        out << "trace GSD: " << trace.str() << "\n";
        out << "cohomological GSD: " << direct.str() << "\n";
        out << "verdict: " << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? kOk : kMismatch;
}

int cmd_verify(const JobSpec& spec, const std::string& which, std::ostream& out) {
    if (which == "brown") return verify_brown(spec, out);
    if (which == "uct") return verify_uct(spec, out);
    if (which == "algebra") return verify_algebra(spec, out);
    if (which == "spectrum") return verify_spectrum(spec, out);
    throw std::invalid_argument("verify: unknown suite '" + which +
                                "' (expected brown, uct, algebra or spectrum)");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of abelian higher gauge theories on cell complexes"};
    app.require_subcommand(1);
    JobSpec spec;
    std::string which;
    long long max_dim = 4096;
    long long max_count = 1LL << 20;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--space", spec.space_name, "builtin space name");
        cmd->add_option("--space-file", spec.space_file, "geometric complex JSON file");
        cmd->add_option("--gauge", spec.gauge_name, "builtin gauge name");
        cmd->add_option("--gauge-file", spec.gauge_file, "gauge complex JSON file");
        cmd->add_flag("--json", spec.json, "emit JSON instead of a table");
        cmd->add_option("--seed", spec.seed, "seed for randomized suites");
        cmd->add_option("--max-dim", max_dim, "cap for dense state-space scans");
        cmd->add_option("--max-count", max_count, "cap for configuration counting");
    };
    CLI::App* hom = app.add_subcommand("homology", "homology of both complexes");
    CLI::App* gsd_cmd = app.add_subcommand("gsd", "ground-state degeneracy, three routes");
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-checks of the GSD");
    CLI::App* verify = app.add_subcommand("verify", "property suites");
    verify->add_option("which", which, "brown | uct | algebra | spectrum")
        ->required()
        ->check(CLI::IsMember({"brown", "uct", "algebra", "spectrum"}));
    for (CLI::App* cmd : {hom, gsd_cmd, oracle, verify}) add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }
    if (spec.space_name.empty() == spec.space_file.empty()) {
        err << "usage error: give exactly one of --space or --space-file\n";
        return kUsage;
    }
    if (spec.gauge_name.empty() == spec.gauge_file.empty()) {
        err << "usage error: give exactly one of --gauge or --gauge-file\n";
        return kUsage;
    }
    if (max_dim <= 0 || max_count <= 0) {
        err << "usage error: caps must be positive\n";
        return kUsage;
    }
    spec.max_dim = Int(max_dim);
    spec.max_count = Int(max_count);

    try {
        if (hom->parsed()) return cmd_homology(spec, out);
        if (gsd_cmd->parsed()) return cmd_gsd(spec, out);
        if (oracle->parsed()) return cmd_oracle(spec, out);
        return cmd_verify(spec, which, out);
    } catch (const CapExceeded& e) {
        err << "resource cap exceeded: " << e.what() << "\n";
        return kCapped;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace ahg
