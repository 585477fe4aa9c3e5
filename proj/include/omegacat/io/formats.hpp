#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>
#include "omegacat/descent/presheaf.hpp"
#include "omegacat/omega/finite_omega_cat.hpp"
#include "omegacat/simplicial/simplicial_group.hpp"

namespace omegacat::io {

using nlohmann::json;

// Integers are JSON numbers, or decimal strings when they do not fit.
inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

inline json integer_to_json(const Integer& x) {
    if (x >= Integer(std::numeric_limits<long long>::min()) && x <= Integer(std::numeric_limits<long long>::max()))
        return static_cast<long long>(x);
    return to_string(x);
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

// Matrix: array of rows. {"rows": r, "cols": c, "data": [...]} is accepted for empty shapes.
inline IntMatrix matrix_from_json(const json& j) {
    if (j.is_object()) {
        const auto r = field(j, "rows").get<std::size_t>(), c = field(j, "cols").get<std::size_t>();
        IntMatrix m(r, c);
        if (j.contains("data")) {
            const json& rows = j.at("data");
            if (!rows.is_array() || rows.size() != r) throw ParseError("matrix data does not match its shape");
            for (std::size_t i = 0; i < r; ++i) {
                if (!rows[i].is_array() || rows[i].size() != c) throw ParseError("matrix row " + std::to_string(i) + " has the wrong length");
                for (std::size_t k = 0; k < c; ++k) m(i, k) = integer_from_json(rows[i][k]);
            }
        }
        return m;
    }
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    if (j.empty()) return IntMatrix(0, 0);
    const std::size_t c = j[0].is_array() ? j[0].size() : 0;
    IntMatrix m(j.size(), c);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != c) throw ParseError("ragged matrix row " + std::to_string(i));
        for (std::size_t k = 0; k < c; ++k) m(i, k) = integer_from_json(j[i][k]);
    }
    return m;
}

inline json matrix_to_json(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return json{{"rows", m.rows()}, {"cols", m.cols()}};
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Group: list of cyclic orders (0 = Z), or {"generators": g, "relations": matrix with g rows}.
inline FgAbGroup group_from_json(const json& j) {
    if (j.is_array()) {
        std::vector<Integer> orders;
        for (const auto& x : j) {
            Integer o = integer_from_json(x);
            if (o < 0) throw ParseError("negative cyclic order");
            orders.push_back(o);
        }
        return FgAbGroup::from_orders(orders);
    }
    if (j.is_object()) {
        const auto g = field(j, "generators").get<std::size_t>();
        IntMatrix rel = j.contains("relations") ? matrix_from_json(j.at("relations")) : IntMatrix(g, 0);
        if (rel.rows() == 0 && rel.cols() == 0) rel = IntMatrix(g, 0);
        if (rel.rows() != g) throw ParseError("relation matrix needs one row per generator");
        return FgAbGroup(std::move(rel));
    }
    throw ParseError("group must be a list of orders or an object");
}

inline json group_to_json(const FgAbGroup& g) {
    return json{{"generators", g.num_generators()}, {"relations", matrix_to_json(g.relations())}, {"invariants", g.describe()}};
}

// Complex: {"min_degree": m, "groups": [...], "differentials": [d_{m+1}, ...]}.
inline ChainComplex complex_from_json(const json& j) {
    const int lo = j.contains("min_degree") ? j.at("min_degree").get<int>() : 0;
    std::vector<FgAbGroup> groups;
    for (const auto& g : field(j, "groups")) groups.push_back(group_from_json(g));
    std::vector<IntMatrix> ds;
    if (j.contains("differentials"))
        for (const auto& d : j.at("differentials")) ds.push_back(matrix_from_json(d));
    for (std::size_t i = 0; i < ds.size() && i + 1 < groups.size(); ++i)
        if (ds[i].rows() == 0 && ds[i].cols() == 0)
            ds[i] = IntMatrix(groups[i].num_generators(), groups[i + 1].num_generators());
    try {
        return ChainComplex(lo, std::move(groups), std::move(ds));
    } catch (const ShapeMismatch& e) {
        throw ParseError(std::string("complex: ") + e.what());
    } catch (const IllDefinedHom& e) {
        throw ParseError(std::string("complex: ") + e.what());
    }
}

inline json complex_to_json(const ChainComplex& c) {
    json groups = json::array(), ds = json::array();
    for (int n = c.min_degree(); n <= c.max_degree() && !c.empty(); ++n) groups.push_back(group_to_json(c.group(n)));
    for (int n = c.min_degree() + 1; n <= c.max_degree() && !c.empty(); ++n) ds.push_back(matrix_to_json(c.d(n).matrix()));
    return json{{"min_degree", c.min_degree()}, {"groups", groups}, {"differentials", ds}};
}

// Chain map: {"source": complex, "target": complex, "from": n, "components": [f_n, f_{n+1}, ...]}.
inline ChainMap chain_map_from_json(const json& j) {
    ChainComplex a = complex_from_json(field(j, "source")), b = complex_from_json(field(j, "target"));
    const int from = j.contains("from") ? j.at("from").get<int>() : a.min_degree();
    std::vector<IntMatrix> ms;
    for (const auto& m : field(j, "components")) {
        const int n = from + static_cast<int>(ms.size());
        IntMatrix x = matrix_from_json(m);
        if (x.rows() == 0 && x.cols() == 0) x = IntMatrix(b.group(n).num_generators(), a.group(n).num_generators());
        ms.push_back(std::move(x));
    }
    try {
        return ChainMap::from_matrices(std::move(a), std::move(b), from, ms);
    } catch (const Error& e) {
        throw ParseError(std::string("chain map: ") + e.what());
    }
}

// Omega-category table: {"size": n, "levels": N, "s": [[...] per level], "t": [...],
// "compose": [[[x, y, z], ...] per level], "names": [...]}.
inline FiniteOmegaCat omega_from_json(const json& j) {
    const auto n = field(j, "size").get<std::size_t>();
    const int N = field(j, "levels").get<int>();
    FiniteOmegaCat a(n, N);
    auto table = [&](const char* key, auto setter) {
        const json& t = field(j, key);
        if (!t.is_array() || t.size() != static_cast<std::size_t>(N + 1)) throw ParseError(std::string(key) + " needs one row per level");
        for (int k = 0; k <= N; ++k) {
            const json& row = t[static_cast<std::size_t>(k)];
            if (!row.is_array() || row.size() != n) throw ParseError(std::string(key) + " row has the wrong length");
            for (std::size_t x = 0; x < n; ++x) {
                int v = row[x].get<int>();
                if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError(std::string(key) + " value out of range");
                setter(k, static_cast<int>(x), v);
            }
        }
    };
    table("s", [&](int k, int x, int v) { a.set_s(k, x, v); });
    table("t", [&](int k, int x, int v) { a.set_t(k, x, v); });
    const json& comp = field(j, "compose");
    if (!comp.is_array() || comp.size() != static_cast<std::size_t>(N + 1)) throw ParseError("compose needs one list per level");
    for (int k = 0; k <= N; ++k)
        for (const auto& e : comp[static_cast<std::size_t>(k)]) {
            if (!e.is_array() || e.size() != 3) throw ParseError("composition entries are [x, y, x*y]");
            int x = e[0].get<int>(), y = e[1].get<int>(), z = e[2].get<int>();
            for (int v : {x, y, z})
                if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError("composition entry out of range");
            a.set_compose(k, x, y, z);
        }
    if (j.contains("names"))
        for (std::size_t x = 0; x < n && x < j.at("names").size(); ++x) a.set_name(static_cast<int>(x), j.at("names")[x].get<std::string>());
    return a;
}

inline json omega_to_json(const FiniteOmegaCat& a) {
    const int n = static_cast<int>(a.size());
    json s = json::array(), t = json::array(), comp = json::array();
    for (int k = 0; k <= a.stabilization(); ++k) {
        json sr = json::array(), tr = json::array(), cr = json::array();
        for (int x = 0; x < n; ++x) {
            sr.push_back(a.s(k, x));
            tr.push_back(a.t(k, x));
            for (int y = 0; y < n; ++y)
                if (int z = a.compose(k, x, y); z >= 0) cr.push_back(json::array({x, y, z}));
        }
        s.push_back(sr);
        t.push_back(tr);
        comp.push_back(cr);
    }
    return json{{"size", n}, {"levels", a.stabilization()}, {"s", s}, {"t", t}, {"compose", comp}, {"names", a.names()}};
}

// Simplicial group: {"levels": [group...], "faces": [[d_0..d_n] for n = 1..T], "degeneracies": [[s_0..s_n] for n = 0..T-1]}.
inline SimplicialAbGroup simplicial_from_json(const json& j) {
    std::vector<FgAbGroup> levels;
    for (const auto& g : field(j, "levels")) levels.push_back(group_from_json(g));
    std::vector<std::vector<GroupHom>> faces, degens;
    try {
        std::size_t n = 1;
        for (const auto& row : field(j, "faces")) {
            faces.emplace_back();
            for (const auto& m : row) faces.back().emplace_back(levels.at(n), levels.at(n - 1), matrix_from_json(m));
            ++n;
        }
        n = 0;
        for (const auto& row : field(j, "degeneracies")) {
            degens.emplace_back();
            for (const auto& m : row) degens.back().emplace_back(levels.at(n), levels.at(n + 1), matrix_from_json(m));
            ++n;
        }
        return SimplicialAbGroup(std::move(levels), std::move(faces), std::move(degens));
    } catch (const std::out_of_range&) {
        throw ParseError("simplicial group has more face/degeneracy rows than levels");
    } catch (const Error& e) {
        if (e.kind() == "ParseError") throw;
        throw ParseError(std::string("simplicial group: ") + e.what());
    }
}

inline json simplicial_to_json(const SimplicialAbGroup& g) {
    json levels = json::array(), faces = json::array(), degens = json::array();
    for (int n = 0; n <= g.truncation(); ++n) levels.push_back(group_to_json(g.level(n)));
    for (int n = 1; n <= g.truncation(); ++n) {
        json row = json::array();
        for (int i = 0; i <= n; ++i) row.push_back(matrix_to_json(g.face(n, i).matrix()));
        faces.push_back(row);
    }
    for (int n = 0; n < g.truncation(); ++n) {
        json row = json::array();
        for (int i = 0; i <= n; ++i) row.push_back(matrix_to_json(g.degeneracy(n, i).matrix()));
        degens.push_back(row);
    }
    return json{{"levels", levels}, {"faces", faces}, {"degeneracies", degens}};
}

// Site: {"opens": [...], "leq": [[a, b], ...], "covers": {open: [[members], ...]}, "empty": name}.
inline FiniteSite site_from_json(const json& j) {
    FiniteSite s;
    for (const auto& name : field(j, "opens")) s.add_open(name.get<std::string>());
    auto id = [&](const json& name) {
        int i = s.find(name.get<std::string>());
        if (i < 0) throw ParseError("unknown open " + name.dump());
        return i;
    };
    try {
        if (j.contains("leq"))
            for (const auto& p : j.at("leq")) {
                if (!p.is_array() || p.size() != 2) throw ParseError("leq entries are [smaller, larger]");
                s.add_leq(id(p[0]), id(p[1]));
            }
        if (j.contains("empty")) s.set_empty(id(j.at("empty")));
        if (j.contains("covers"))
            for (const auto& [open, covers] : j.at("covers").items())
                for (const auto& cover : covers) {
                    std::vector<int> members;
                    for (const auto& m : cover) members.push_back(id(m));
                    s.add_cover(id(json(open)), members);
                }
    } catch (const PreconditionViolated& e) {
        throw ParseError(std::string("site: ") + e.what());
    }
    return s;
}

inline json site_to_json(const FiniteSite& s) {
    json opens = json::array(), leq = json::array(), covers = json::object();
    for (int a = 0; a < static_cast<int>(s.size()); ++a) opens.push_back(s.name(a));
    for (auto [a, b] : s.covering_relations()) leq.push_back(json::array({s.name(a), s.name(b)}));
    for (int v = 0; v < static_cast<int>(s.size()); ++v) {
        if (s.covers(v).empty()) continue;
        json list = json::array();
        for (const auto& u : s.covers(v)) {
            json members = json::array();
            for (int m : u) members.push_back(s.name(m));
            list.push_back(members);
        }
        covers[s.name(v)] = list;
    }
    json out{{"opens", opens}, {"leq", leq}, {"covers", covers}};
    if (s.empty_open() >= 0) out["empty"] = s.name(s.empty_open());
    return out;
}

// Presheaf: {"site": site, "complexes": {open: complex}, "restrictions": {"a<=b": [matrix per degree from 0]}}.
// Opens without a complex carry the zero complex.
inline Presheaf presheaf_from_json(const json& j) {
    auto site = std::make_shared<const FiniteSite>(site_from_json(field(j, "site")));
    std::vector<ChainComplex> cs(site->size());
    if (j.contains("complexes"))
        for (const auto& [open, c] : j.at("complexes").items()) {
            int i = site->find(open);
            if (i < 0) throw ParseError("complex given for unknown open " + open);
            cs[static_cast<std::size_t>(i)] = complex_from_json(c);
        }
    std::map<std::pair<int, int>, ChainMap> given;
    if (j.contains("restrictions"))
        for (const auto& [key, ms] : j.at("restrictions").items()) {
            auto pos = key.find("<=");
            std::size_t len = 2;
            if (pos == std::string::npos) {
                pos = key.find("≤");
                len = std::string("≤").size();
            }
            if (pos == std::string::npos) throw ParseError("restriction key must look like \"a<=b\": " + key);
            int a = site->find(key.substr(0, pos)), b = site->find(key.substr(pos + len));
            if (a < 0 || b < 0) throw ParseError("restriction between unknown opens: " + key);
            if (!site->leq(a, b)) throw ParseError("restriction key is not an inclusion: " + key);
            std::vector<IntMatrix> mats;
            for (const auto& m : ms) {
                const int n = static_cast<int>(mats.size());
                IntMatrix x = matrix_from_json(m);
                if (x.rows() == 0 && x.cols() == 0)
                    x = IntMatrix(cs[static_cast<std::size_t>(a)].group(n).num_generators(), cs[static_cast<std::size_t>(b)].group(n).num_generators());
                mats.push_back(std::move(x));
            }
            try {
                given.emplace(std::pair{a, b}, ChainMap::from_matrices(cs[static_cast<std::size_t>(b)], cs[static_cast<std::size_t>(a)], 0, mats));
            } catch (const Error& e) {
                throw ParseError("restriction " + key + ": " + e.what());
            }
        }
    try {
        return Presheaf(site, std::move(cs), given);
    } catch (const PreconditionViolated& e) {
        throw ParseError(std::string("presheaf: ") + e.what());
    }
}

inline json presheaf_to_json(const Presheaf& f) {
    const FiniteSite& s = f.site();
    json complexes = json::object(), restrictions = json::object();
    for (int a = 0; a < static_cast<int>(s.size()); ++a)
        if (!f.at(a).empty()) complexes[s.name(a)] = complex_to_json(f.at(a));
    for (auto [a, b] : s.covering_relations()) {
        json ms = json::array();
        ChainMap r = f.restriction(a, b);
        for (int n = 0; n <= f.max_degree(); ++n) ms.push_back(matrix_to_json(r.at(n).matrix()));
        restrictions[s.name(a) + "<=" + s.name(b)] = ms;
    }
    return json{{"site", site_to_json(s)}, {"complexes", complexes}, {"restrictions", restrictions}};
}

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

}  // namespace omegacat::io
