#include "ahg/json_io.hpp"

#include "json.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ahg {
namespace {

using Json = nlohmann::ordered_json;

long long to_int64(const Int& x, const char* what) {
    if (x > Int(std::numeric_limits<long long>::max()) ||
        x < Int(std::numeric_limits<long long>::min()))
        throw std::invalid_argument(std::string(what) + ": integer out of range");
    return static_cast<long long>(x);
}

int parse_degree(const std::string& key, const char* what) {
    try {
        std::size_t used = 0;
        int d = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return d;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": bad degree key '" + key + "'");
    }
}

IntMatrix parse_matrix(const Json& rows, int want_rows, int want_cols, const std::string& where) {
    if (!rows.is_array())
        throw std::invalid_argument(where + ": matrix must be an array of rows");
    if (int(rows.size()) != want_rows)
        throw std::invalid_argument(where + ": expected " + std::to_string(want_rows) +
                                    " rows, got " + std::to_string(rows.size()));
    IntMatrix m(want_rows, want_cols);
    for (int r = 0; r < want_rows; ++r) {
        const Json& row = rows[r];
        if (!row.is_array() || int(row.size()) != want_cols)
            throw std::invalid_argument(where + ": row " + std::to_string(r) + " must have " +
                                        std::to_string(want_cols) + " entries");
        for (int c = 0; c < want_cols; ++c) {
            if (!row[c].is_number_integer())
                throw std::invalid_argument(where + ": entry (" + std::to_string(r) + "," +
                                            std::to_string(c) + ") is not an integer");
            m.at(r, c) = Int(row[c].get<long long>());
        }
    }
    return m;
}

Json render_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_int64(m.at(r, c), "matrix"));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json parse_text(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

} // namespace

GeometricComplex parse_geometric_json(const std::string& text) {
    Json j = parse_text(text, "geometric complex");
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_object())
        throw std::invalid_argument("geometric complex: missing 'cells' object");
    GeometricComplex g;
    for (const auto& [key, value] : j["cells"].items()) {
        int degree = parse_degree(key, "cells");
        if (degree < 0) throw std::invalid_argument("cells: negative degree");
        if (!value.is_array()) throw std::invalid_argument("cells: labels must be an array");
        std::vector<std::string>& labels = g.cells.labels[degree];
        for (const Json& name : value) {
            if (!name.is_string()) throw std::invalid_argument("cells: labels must be strings");
            labels.push_back(name.get<std::string>());
        }
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = a + 1; b < labels.size(); ++b)
                if (labels[a] == labels[b])
                    throw std::invalid_argument("cells: duplicate label '" + labels[a] +
                                                "' in degree " + key);
        if (labels.empty()) g.cells.labels.erase(degree);
    }
    for (int degree : g.cells.degrees())
        g.complex.set_group(degree,
                            AbelianGroup::from_factors(std::vector<Int>(
                                static_cast<std::size_t>(g.cells.count(degree)), Int(0))));
    if (j.contains("boundary")) {
        if (!j["boundary"].is_object())
            throw std::invalid_argument("boundary: must be an object");
        for (const auto& [key, value] : j["boundary"].items()) {
            int degree = parse_degree(key, "boundary");
            g.complex.set_boundary(degree,
                                   parse_matrix(value, g.cells.count(degree - 1),
                                                g.cells.count(degree), "boundary " + key));
        }
    }
    g.complex.validate();
    return g;
}

std::string render_geometric_json(const GeometricComplex& c) {
    Json j;
    Json cells = Json::object();
    for (int degree : c.cells.degrees()) {
        Json labels = Json::array();
        for (const std::string& name : c.cells.at(degree)) labels.push_back(name);
        cells[std::to_string(degree)] = std::move(labels);
    }
    j["cells"] = std::move(cells);
    Json boundary = Json::object();
    for (int degree : c.cells.degrees()) {
        if (c.cells.count(degree - 1) == 0 || c.cells.count(degree) == 0) continue;
        Homomorphism d = c.complex.boundary_at(degree);
        boundary[std::to_string(degree)] = render_matrix(d.matrix());
    }
    j["boundary"] = std::move(boundary);
    return j.dump(2);
}

ChainComplex parse_gauge_json(const std::string& text) {
    Json j = parse_text(text, "gauge complex");
    if (!j.is_object() || !j.contains("groups") || !j["groups"].is_object())
        throw std::invalid_argument("gauge complex: missing 'groups' object");
    ChainComplex g;
    std::map<int, std::size_t> listed; // degree -> number of listed factors
    for (const auto& [key, value] : j["groups"].items()) {
        int degree = parse_degree(key, "groups");
        if (!value.is_array()) throw std::invalid_argument("groups: factors must be an array");
        std::vector<Int> factors;
        for (const Json& f : value) {
            if (!f.is_number_integer() || f.get<long long>() < 0)
                throw std::invalid_argument("groups: factors must be non-negative integers");
            factors.push_back(Int(f.get<long long>()));
        }
        listed[degree] = factors.size();
        g.set_group(degree, AbelianGroup::from_factors(factors));
    }
    if (j.contains("boundary")) {
        if (!j["boundary"].is_object())
            throw std::invalid_argument("boundary: must be an object");
        for (const auto& [key, value] : j["boundary"].items()) {
            int degree = parse_degree(key, "boundary");
            auto src = listed.find(degree);
            auto tgt = listed.find(degree - 1);
            IntMatrix m = parse_matrix(value, tgt == listed.end() ? 0 : int(tgt->second),
                                       src == listed.end() ? 0 : int(src->second),
                                       "boundary " + key);
            Homomorphism d = Homomorphism::from_presentation_matrix(
                g.group_at(degree), g.group_at(degree - 1), m);
            g.set_boundary(degree, d.matrix());
        }
    }
    g.validate();
    return g;
}

std::string render_gauge_json(const ChainComplex& g) {
    Json j;
    Json groups = Json::object();
    std::vector<int> degrees = g.degrees();
    for (int degree : degrees) {
        Json factors = Json::array();
        for (const Int& d : g.group_at(degree).moduli())
            factors.push_back(to_int64(d, "groups"));
        groups[std::to_string(degree)] = std::move(factors);
    }
    j["groups"] = std::move(groups);
    Json boundary = Json::object();
    for (int degree : degrees) {
        if (g.group_at(degree - 1).num_coords() == 0) continue;
        // canonical coordinates double as the presentation of a rendered group
        boundary[std::to_string(degree)] = render_matrix(g.boundary_at(degree).matrix());
    }
    j["boundary"] = std::move(boundary);
    return j.dump(2);
}

Cochain parse_cochain_json(const HomComplex& h, const std::string& text) {
    Json j = parse_text(text, "cochain");
    if (!j.is_object() || !j.contains("p") || !j["p"].is_number_integer())
        throw std::invalid_argument("cochain: missing integer 'p'");
    int p = j["p"].get<int>();
    Cochain f = h.zero_cochain(p);
    const CochainSpace& s = h.cochain_space(p);
    if (!j.contains("components")) return f;
    if (!j["components"].is_object())
        throw std::invalid_argument("cochain: 'components' must be an object");
    for (const auto& [key, value] : j["components"].items()) {
        std::size_t slash = key.find('/');
        if (slash == std::string::npos)
            throw std::invalid_argument("cochain: component key '" + key +
                                        "' is not '<degree>/<cell-label>'");
        int degree = parse_degree(key.substr(0, slash), "components");
        std::string label = key.substr(slash + 1);
        int cell = h.space().cells.index_of(degree, label);
        if (cell < 0)
            throw std::invalid_argument("cochain: unknown cell '" + label + "' in degree " +
                                        std::to_string(degree));
        const CochainSpace::Block* blk = s.block_at_degree(degree);
        if (blk == nullptr)
            throw std::invalid_argument("cochain: degree " + std::to_string(degree) +
                                        " carries no value group at p=" + std::to_string(p));
        if (!value.is_array() || int(value.size()) != blk->values.num_coords())
            throw std::invalid_argument("cochain: component '" + key + "' must have " +
                                        std::to_string(blk->values.num_coords()) + " coordinates");
        std::vector<Int> coords;
        for (const Json& x : value) {
            if (!x.is_number_integer())
                throw std::invalid_argument("cochain: coordinates must be integers");
            coords.push_back(Int(x.get<long long>()));
        }
        h.set_component(f, degree, cell, blk->values.element(coords));
    }
    return f;
}

std::string render_cochain_json(const HomComplex& h, const Cochain& f) {
    Json j;
    j["p"] = f.p;
    Json components = Json::object();
    const CochainSpace& s = h.cochain_space(f.p);
    for (const CochainSpace::Block& blk : s.blocks) {
        for (int cell = 0; cell < blk.cells; ++cell) {
            GroupElement g = h.component(f, blk.degree, cell);
            if (blk.values.is_zero(g)) continue;
            Json coords = Json::array();
            for (const Int& x : g.coords) coords.push_back(to_int64(x, "cochain"));
            components[std::to_string(blk.degree) + "/" +
                       h.space().cells.at(blk.degree)[cell]] = std::move(coords);
        }
    }
    j["components"] = std::move(components);
    return j.dump(2);
}

std::string render_gsd_json(const GsdReport& r) {
    Json j;
    j["direct"] = r.direct.str();
    Json brown = Json::object();
    for (const auto& [n, v] : r.brown_factors) brown[std::to_string(n)] = v.str();
    j["brown_factors"] = std::move(brown);
    j["brown_product"] = r.brown_product.str();
    Json uct = Json::object();
    for (const auto& [n, he] : r.uct_factors) {
        Json pair = Json::object();
        pair["hom"] = he.first.str();
        pair["ext"] = he.second.str();
        uct[std::to_string(n)] = std::move(pair);
    }
    j["uct_factors"] = std::move(uct);
    j["uct_product"] = r.uct_product.str();
    j["brown_agrees"] = r.brown_agrees;
    j["uct_agrees"] = r.uct_agrees;
    return j.dump(2);
}

GsdReport parse_gsd_json(const std::string& text) {
    Json j = parse_text(text, "gsd report");
    GsdReport r;
    r.direct = Int(j.at("direct").get<std::string>());
    for (const auto& [key, value] : j.at("brown_factors").items())
        r.brown_factors[parse_degree(key, "brown_factors")] = Int(value.get<std::string>());
    r.brown_product = Int(j.at("brown_product").get<std::string>());
    for (const auto& [key, value] : j.at("uct_factors").items())
        r.uct_factors[parse_degree(key, "uct_factors")] = {
            Int(value.at("hom").get<std::string>()), Int(value.at("ext").get<std::string>())};
    r.uct_product = Int(j.at("uct_product").get<std::string>());
    r.brown_agrees = j.at("brown_agrees").get<bool>();
    r.uct_agrees = j.at("uct_agrees").get<bool>();
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace ahg
