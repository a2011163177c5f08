#include "ahg/chain_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ahg {

namespace {
const AbelianGroup kTrivial{};
}

void ChainComplex::set_group(int degree, AbelianGroup g) {
    if (g.is_trivial()) return;
    groups_[degree] = std::move(g);
}

void ChainComplex::set_boundary(int degree, IntMatrix m) {
    if (m.rows() == 0 && m.cols() == 0) return;
    bnd_[degree] = std::move(m);
}

const AbelianGroup& ChainComplex::group_at(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? kTrivial : it->second;
}

Homomorphism ChainComplex::boundary_at(int degree) const {
    auto it = bnd_.find(degree);
    if (it == bnd_.end()) return Homomorphism::zero(group_at(degree), group_at(degree - 1));
    return Homomorphism(group_at(degree), group_at(degree - 1), it->second);
}

std::vector<int> ChainComplex::degrees() const {
    std::vector<int> out;
    for (const auto& [deg, g] : groups_) out.push_back(deg);
    return out;
}

void ChainComplex::validate() const {
    for (const auto& [deg, m] : bnd_) {
        if (m.rows() != group_at(deg - 1).num_coords() || m.cols() != group_at(deg).num_coords()) {
            std::ostringstream os;
            os << "boundary at degree " << deg << " has wrong shape";
            throw std::invalid_argument(os.str());
        }
    }
    std::vector<int> degs = degrees();
    if (degs.empty()) return;
    for (int n = degs.front(); n <= degs.back() + 1; ++n) {
        try {
            Homomorphism b = boundary_at(n);
            if (!boundary_at(n - 1).after(b).is_zero()) {
                std::ostringstream os;
                os << "∂∂ != 0 entering degree " << n;
                throw std::invalid_argument(os.str());
            }
        } catch (const std::invalid_argument& e) {
            std::ostringstream os;
            os << "degree " << n << ": " << e.what();
            throw std::invalid_argument(os.str());
        }
    }
}

int CellBasis::count(int degree) const {
    auto it = labels.find(degree);
    return it == labels.end() ? 0 : int(it->second.size());
}

const std::vector<std::string>& CellBasis::at(int degree) const {
    static const std::vector<std::string> empty;
    auto it = labels.find(degree);
    return it == labels.end() ? empty : it->second;
}

int CellBasis::index_of(int degree, const std::string& label) const {
    const auto& v = at(degree);
    auto it = std::find(v.begin(), v.end(), label);
    return it == v.end() ? -1 : int(it - v.begin());
}

std::vector<int> CellBasis::degrees() const {
    std::vector<int> out;
    for (const auto& [deg, v] : labels)
        if (!v.empty()) out.push_back(deg);
    return out;
}

Int GeometricComplex::euler_characteristic() const {
    Int chi = 0;
    for (int deg : cells.degrees()) chi += (deg % 2 == 0 ? 1 : -1) * Int(cells.count(deg));
    return chi;
}

void SimplicialComplex::validate() const {
    const int nv = int(vertex_labels.size());
    std::set<std::vector<int>> present;
    for (const auto& [dim, list] : by_dim)
        for (const auto& t : list) {
            if (int(t.size()) != dim + 1)
                throw std::invalid_argument("simplex tuple size does not match its dimension");
            for (size_t i = 0; i < t.size(); ++i) {
                if (t[i] < 0 || t[i] >= nv) throw std::invalid_argument("vertex index out of range");
                if (i > 0 && t[i] <= t[i - 1])
                    throw std::invalid_argument("simplex tuple not strictly increasing");
            }
            if (!present.insert(t).second) throw std::invalid_argument("duplicate simplex");
        }
    for (const auto& [dim, list] : by_dim) {
        if (dim == 0) continue;
        for (const auto& t : list)
            for (size_t drop = 0; drop < t.size(); ++drop) {
                std::vector<int> face;
                for (size_t i = 0; i < t.size(); ++i)
                    if (i != drop) face.push_back(t[i]);
                if (!present.count(face)) throw std::invalid_argument("missing face of a simplex");
            }
    }
}

SimplicialComplex simplicial_closure(std::vector<std::string> vertex_labels,
                                     const std::vector<std::vector<int>>& facets) {
    std::set<std::vector<int>> all;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        if (f.empty()) throw std::invalid_argument("empty facet");
        // all nonempty subsets
        int n = int(f.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) sub.push_back(f[i]);
            all.insert(sub);
        }
    }
    SimplicialComplex s;
    s.vertex_labels = std::move(vertex_labels);
    for (const auto& t : all) s.by_dim[int(t.size()) - 1].push_back(t);
    s.validate();
    return s;
}

GeometricComplex from_simplicial(const SimplicialComplex& s) {
    s.validate();
    GeometricComplex g;
    std::map<int, std::map<std::vector<int>, int>> index; // dim -> tuple -> cell index
    for (const auto& [dim, list] : s.by_dim) {
        auto sorted = list;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& t : sorted) {
            index[dim][t] = int(g.cells.labels[dim].size());
            std::string label;
            for (size_t i = 0; i < t.size(); ++i)
                label += (i ? "," : "") + s.vertex_labels[t[i]];
            g.cells.labels[dim].push_back(label);
        }
    }
    for (const auto& [dim, idx] : index) {
        std::vector<Int> free_factors(idx.size(), Int(0));
        g.complex.set_group(dim, AbelianGroup::from_factors(free_factors));
        if (dim == 0) continue;
        IntMatrix b(int(index.at(dim - 1).size()), int(idx.size()));
        for (const auto& [t, j] : idx)
            for (size_t drop = 0; drop < t.size(); ++drop) {
                std::vector<int> face;
                for (size_t i = 0; i < t.size(); ++i)
                    if (i != drop) face.push_back(t[i]);
                int i = index.at(dim - 1).at(face);
                b.at(i, j) += (drop % 2 == 0 ? 1 : -1);
            }
        g.complex.set_boundary(dim, std::move(b));
    }
    g.complex.validate();
    return g;
}

GeometricComplex build_interval() {
    return from_simplicial(simplicial_closure({"0", "1"}, {{0, 1}}));
}

GeometricComplex build_circle(int L) {
    if (L < 1) throw std::invalid_argument("circle: L must be >= 1");
    GeometricComplex g;
    for (int i = 0; i < L; ++i) g.cells.labels[0].push_back("v" + std::to_string(i));
    for (int i = 0; i < L; ++i) g.cells.labels[1].push_back("e" + std::to_string(i));
    g.complex.set_group(0, AbelianGroup::from_factors(std::vector<Int>(L, Int(0))));
    g.complex.set_group(1, AbelianGroup::from_factors(std::vector<Int>(L, Int(0))));
    IntMatrix b(L, L);
    for (int i = 0; i < L; ++i) {
        b.at((i + 1) % L, i) += 1; // head
        b.at(i, i) += -1;          // tail; cancels at L == 1
    }
    g.complex.set_boundary(1, std::move(b));
    g.complex.validate();
    return g;
}

GeometricComplex build_sphere(int d) {
    if (d < 1 || d > 6) throw std::invalid_argument("sphere: d must be in 1..6");
    std::vector<std::string> verts;
    for (int i = 0; i <= d + 1; ++i) verts.push_back(std::to_string(i));
    std::vector<std::vector<int>> facets;
    // all (d+1)-element subsets of {0..d+1}
    for (int skip = 0; skip <= d + 1; ++skip) {
        std::vector<int> f;
        for (int i = 0; i <= d + 1; ++i)
            if (i != skip) f.push_back(i);
        facets.push_back(f);
    }
    return from_simplicial(simplicial_closure(std::move(verts), facets));
}

namespace {

// axis subsets of {0..d-1} with k elements, lexicographic
std::vector<std::vector<int>> axis_subsets(int d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int a = start; a < d; ++a) {
            cur.push_back(a);
            self(self, a + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

GeometricComplex build_torus(int d, int L) {
    if (d < 1 || d > 3) throw std::invalid_argument("torus: d must be in 1..3");
    if (L < 1) throw std::invalid_argument("torus: L must be >= 1");
    const char axis_letter[3] = {'x', 'y', 'z'};
    long vol = 1;
    for (int i = 0; i < d; ++i) vol *= L;

    auto vertex_rank = [&](const std::vector<int>& v) {
        long r = 0;
        for (int i = 0; i < d; ++i) r = r * L + v[i];
        return r;
    };
    auto vertex_of_rank = [&](long r) {
        std::vector<int> v(d);
        for (int i = d - 1; i >= 0; --i) {
            v[i] = int(r % L);
            r /= L;
        }
        return v;
    };

    GeometricComplex g;
    std::map<int, std::vector<std::vector<int>>> subsets; // degree -> axis subsets
    for (int k = 0; k <= d; ++k) subsets[k] = axis_subsets(d, k);

    for (int k = 0; k <= d; ++k) {
        for (const auto& S : subsets[k])
            for (long r = 0; r < vol; ++r) {
                std::vector<int> v = vertex_of_rank(r);
                std::string label;
                for (int i = 0; i < d; ++i) label += (i ? "." : "") + std::to_string(v[i]);
                if (!S.empty()) {
                    label += "|";
                    for (int a : S) label += axis_letter[a];
                }
                g.cells.labels[k].push_back(label);
            }
        g.complex.set_group(k, AbelianGroup::from_factors(
                                   std::vector<Int>(subsets[k].size() * vol, Int(0))));
    }

    auto subset_rank = [&](int k, const std::vector<int>& S) {
        const auto& list = subsets[k];
        return long(std::lower_bound(list.begin(), list.end(), S) - list.begin());
    };
    auto cell_index = [&](int k, const std::vector<int>& S, const std::vector<int>& v) {
        return subset_rank(k, S) * vol + vertex_rank(v);
    };

    // ∂(v, S) = sum_i (-1)^i [ (v + e_{a_i}, S \ a_i) - (v, S \ a_i) ], a_i ascending
    for (int k = 1; k <= d; ++k) {
        IntMatrix b(int(subsets[k - 1].size() * vol), int(subsets[k].size() * vol));
        for (const auto& S : subsets[k])
            for (long r = 0; r < vol; ++r) {
                std::vector<int> v = vertex_of_rank(r);
                long col = cell_index(k, S, v);
                for (size_t i = 0; i < S.size(); ++i) {
                    std::vector<int> T;
                    for (size_t q = 0; q < S.size(); ++q)
                        if (q != i) T.push_back(S[q]);
                    int sign = (i % 2 == 0) ? 1 : -1;
                    std::vector<int> w = v;
                    w[S[i]] = (w[S[i]] + 1) % L;
                    b.at(int(cell_index(k - 1, T, w)), int(col)) += sign;
                    b.at(int(cell_index(k - 1, T, v)), int(col)) += -sign;
                }
            }
        g.complex.set_boundary(k, std::move(b));
    }
    g.complex.validate();
    return g;
}

AbelianGroup homology(const ChainComplex& c, int n) { return homology_at(c, n).group(); }

Subquotient homology_at(const ChainComplex& c, int n) {
    return subquotient(c.boundary_at(n), c.boundary_at(n + 1));
}

} // namespace ahg
