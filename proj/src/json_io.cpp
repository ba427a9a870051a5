#include "orbjac/json_io.hpp"

namespace orbjac {

Json cyc_to_json(const CycNum& v) {
    if (!v.field())
        throw InternalError("UnboundScalar", "serializing a scalar with no field attached");
    Json terms = Json::array();
    for (size_t k = 0; k < v.coeffs().size(); ++k) {
        if (v.coeffs()[k] == 0) continue;
        terms.push_back({{"power", k}, {"coeff", rat_to_string(v.coeffs()[k])}});
    }
    return Json{{"conductor", v.field()->conductor()}, {"terms", std::move(terms)}};
}

CycNum cyc_from_json(const Json& j, const FieldPtr& fld) {
    if (j.at("conductor").get<int>() != fld->conductor())
        throw InputError("ConductorMismatch", "serialized conductor differs from the field");
    std::vector<Rat> c(fld->degree(), Rat(0));
    for (const auto& t : j.at("terms")) {
        size_t k = t.at("power").get<size_t>();
        if (k >= c.size())
            throw InputError("ShapeMismatch", "power outside the reduced representation");
        c[k] = rat_from_string(t.at("coeff").get<std::string>());
    }
    return CycNum(fld, std::move(c));
}

std::string monomial_key(const Monomial& m, const VarSet& vs) {
    std::string s;
    for (int v = 0; v < vs.total(); ++v) {
        if (m.e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += vs.name(v);
        if (m.e[v] > 1) s += "^" + std::to_string(m.e[v]);
    }
    return s.empty() ? "1" : s;
}

Monomial monomial_from_key(const std::string& key, const VarSet& vs) {
    Monomial m(vs.total());
    if (key == "1") return m;
    // the key is a single term of the input grammar
    size_t pos = 0;
    while (pos < key.size()) {
        if (key[pos] != 'x')
            throw InputError("SyntaxError", "bad monomial key '" + key + "'");
        ++pos;
        size_t start = pos;
        while (pos < key.size() && isdigit(static_cast<unsigned char>(key[pos]))) ++pos;
        int idx = std::stoi(key.substr(start, pos - start)) - 1;
        int exp = 1;
        if (pos < key.size() && key[pos] == '^') {
            ++pos;
            start = pos;
            while (pos < key.size() && isdigit(static_cast<unsigned char>(key[pos]))) ++pos;
            exp = std::stoi(key.substr(start, pos - start));
        }
        if (idx < 0 || idx >= vs.total())
            throw InputError("UnknownVariable", "monomial key names " + key);
        m.e[idx] += exp;
        if (pos < key.size()) {
            if (key[pos] != '*') throw InputError("SyntaxError", "bad monomial key '" + key + "'");
            ++pos;
        }
    }
    return m;
}

Json class_to_json(const AlgebraClass& cls) {
    Json j = Json::object();
    for (const auto& [m, v] : cls.c)
        j[monomial_key(m, cls.sector->varset())] = cyc_to_json(v);
    return j;
}

AlgebraClass class_from_json(const Json& j, const SectorAlgebra& sector) {
    AlgebraClass cls{&sector, {}};
    for (const auto& [key, val] : j.items())
        cls.add(monomial_from_key(key, sector.varset()), cyc_from_json(val, sector.field()));
    return cls;
}

Json element_to_json(const GroupElement& g) {
    Json a = Json::array();
    for (const auto& x : g.alphas()) a.push_back(rat_to_string(x));
    return a;
}

Json group_to_json(const Group& g) {
    Json elems = Json::array();
    for (const auto& e : g) {
        elems.push_back({{"alphas", element_to_json(e)},
                         {"age", rat_to_string(e.age())},
                         {"moved", e.moved()},
                         {"codim", e.codim()}});
    }
    return Json{{"order", g.order()}, {"elements", std::move(elems)}};
}

Json analyze_to_json(const InvertiblePolynomial& ip) {
    Json atoms = Json::array();
    for (const auto& a : ip.atoms) {
        Json vars = Json::array();
        for (int v : a.vars) vars.push_back(v + 1);
        atoms.push_back({{"kind", a.kind == Atom::Kind::Chain ? "chain" : "loop"},
                         {"vars", std::move(vars)},
                         {"exps", a.exps}});
    }
    return Json{{"n", ip.n},
                {"exponent_matrix", ip.rows},
                {"det", ip.det.get_str()},
                {"weights", ip.weights},
                {"degree", ip.degree},
                {"atoms", std::move(atoms)},
                {"symmetry_order", abs(ip.det).get_str()}};
}

Json sector_to_json(const SectorAlgebra& s) {
    Json basis = Json::array();
    for (const auto& m : s.basis()) basis.push_back(monomial_key(m, s.varset()));
    return Json{{"restriction", s.restricted().str()},
                {"milnor_number", s.milnor_number()},
                {"top_degree", s.top_degree()},
                {"basis", std::move(basis)},
                {"hessian_class", class_to_json(s.hessian_class())}};
}

Json table_to_json(const ProductTable& t) {
    Json pairs = Json::array();
    const Group& g = t.group();
    for (size_t i = 0; i < g.order(); ++i) {
        for (size_t j = 0; j < g.order(); ++j) {
            Json entry{{"g", element_to_json(g[i])}, {"h", element_to_json(g[j])}};
            if (t.entry_is_zero(i, j))
                entry["class"] = "zero";
            else
                entry["class"] = class_to_json(*t.entry(i, j));
            pairs.push_back(std::move(entry));
        }
    }
    return Json{{"side", t.side()}, {"pairs", std::move(pairs)}};
}

Json invariants_to_json(const Workspace& ws, const Group& group, const InvariantAlgebra& inv) {
    Json basis = Json::array();
    for (const auto& [g, m] : inv.basis)
        basis.push_back({{"sector", element_to_json(g)}, {"monomial", monomial_key(m, ws.vs())}});
    Json table = Json::array();
    for (size_t i = 0; i < inv.basis.size(); ++i)
        for (size_t j = 0; j < inv.basis.size(); ++j) {
            Json prods = Json::array();
            for (const auto& [k, c] : inv.table[i][j])
                prods.push_back({{"index", k}, {"coeff", cyc_to_json(c)}});
            table.push_back({{"i", i}, {"j", j}, {"value", std::move(prods)}});
        }
    return Json{{"group_order", group.order()},
                {"dimension", inv.basis.size()},
                {"basis", std::move(basis)},
                {"table", std::move(table)}};
}

Json report_to_json(const ComparisonReport& r) {
    Json pairs = Json::array();
    for (size_t i = 0; i < r.group.order(); ++i) {
        for (size_t j = 0; j < r.group.order(); ++j) {
            const auto& p = r.pairs[i][j];
            Json e{{"g", element_to_json(r.group[i])}, {"h", element_to_json(r.group[j])}};
            switch (p.status) {
                case ComparisonReport::Status::BothZero: e["status"] = "both-zero"; break;
                case ComparisonReport::Status::Match: e["status"] = "exact-match-after-rescale"; break;
                case ComparisonReport::Status::Mismatch: e["status"] = "MISMATCH"; break;
            }
            if (p.ratio) e["ratio"] = cyc_to_json(*p.ratio);
            pairs.push_back(std::move(e));
        }
    }
    Json halfs = Json::array();
    for (size_t i = 0; i < r.group.order(); ++i)
        halfs.push_back({{"g", element_to_json(r.group[i])},
                         {"half_angle_product", cyc_to_json(r.half_angle_product[i])}});
    return Json{{"verdict", r.pass() ? "PASS" : "MISMATCH"},
                {"zero_pattern_ok", r.zero_pattern_ok},
                {"proportional_ok", r.proportional_ok},
                {"units_ok", r.units_ok},
                {"closed_form_ok", r.closed_form_ok},
                {"inverse_symmetry_ok", r.inverse_symmetry_ok},
                {"cocycle_ok", r.cocycle_ok},
                {"pairs", std::move(pairs)},
                {"ratios", std::move(halfs)}};
}

}  // namespace orbjac
