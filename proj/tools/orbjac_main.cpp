#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "orbjac/json_io.hpp"
#include "orbjac/selftest.hpp"

using namespace orbjac;

namespace {

Group resolve_group(const Workspace& ws, const std::string& spec) {
    if (spec == "maximal") return ws.maximal();
    if (spec == "sl") return sl_filter(ws.maximal());
    std::vector<GroupElement> gens;
    std::string cur;
    for (char c : spec + ";") {
        if (c == ';') {
            if (!cur.empty()) gens.push_back(GroupElement::from_string(cur, ws.n()));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return generated_subgroup(gens, ws.ip());
}

void emit(const Json& j, bool json_mode, const std::string& text) {
    if (json_mode)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string group_text(const Group& g) {
    std::ostringstream os;
    os << "order " << g.order() << "\n";
    for (const auto& e : g) {
        os << "  (" << e.str() << ")  age=" << rat_to_string(e.age()) << "  moved={";
        for (size_t i = 0; i < e.moved().size(); ++i)
            os << (i ? "," : "") << e.moved()[i] + 1;
        os << "}  d=" << e.codim() << "\n";
    }
    return os.str();
}

std::string table_text(const ProductTable& t) {
    std::ostringstream os;
    const Group& g = t.group();
    os << t.side() << " structure constants, |G| = " << g.order() << "\n";
    for (size_t i = 0; i < g.order(); ++i)
        for (size_t j = 0; j < g.order(); ++j) {
            os << "  (" << g[i].str() << ") * (" << g[j].str() << ") -> ";
            if (t.entry_is_zero(i, j))
                os << "0\n";
            else
                os << t.entry(i, j)->str() << "\n";
        }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbjac: exact orbifold Jacobian algebras and Hochschild cup products of invertible polynomials"};
    app.require_subcommand(1);

    std::string poly_text, group_spec = "maximal", side = "orbifold", sector_spec, subgroup_spec;
    bool json_mode = false, sl_only = false;
    std::optional<int> conductor;
    uint64_t seed = 20240501;

    auto add_common = [&](CLI::App* cmd, bool needs_poly = true) {
        if (needs_poly) cmd->add_option("poly", poly_text, "polynomial, e.g. \"x1^2*x2 + x2^3\"")->required();
        cmd->add_flag("--json", json_mode, "emit JSON on stdout");
        cmd->add_option("--conductor", conductor,
                        "cyclotomic conductor override (multiple of the minimal one)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "exponent matrix, weights and atom decomposition");
    add_common(analyze);

    CLI::App* group_cmd = app.add_subcommand("group", "list diagonal symmetries");
    add_common(group_cmd);
    group_cmd->add_flag("--sl", sl_only, "keep only integer-age elements");
    group_cmd->add_option("--subgroup", subgroup_spec, "generators \"a/b,c/d;...\"");

    CLI::App* jacobian = app.add_subcommand("jacobian", "sector Jacobian algebra data");
    add_common(jacobian);
    jacobian->add_option("--sector", sector_spec, "sector label \"a/b,c/d,...\" (default identity)");

    CLI::App* product = app.add_subcommand("product", "full structure-constant table of one side");
    add_common(product);
    product->add_option("--group", group_spec, "maximal | sl | generator list");
    product->add_option("--side", side, "orbifold | hochschild")
        ->check(CLI::IsMember({"orbifold", "hochschild"}));

    CLI::App* compare_cmd = app.add_subcommand("compare", "verify the two sides are isomorphic");
    add_common(compare_cmd);
    compare_cmd->add_option("--group", group_spec, "maximal | sl | generator list");

    CLI::App* invariants = app.add_subcommand("invariants", "G-invariant subalgebra of one side");
    add_common(invariants);
    invariants->add_option("--group", group_spec, "maximal | sl | generator list");
    invariants->add_option("--side", side, "orbifold | hochschild")
        ->check(CLI::IsMember({"orbifold", "hochschild"}));

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in verification catalog");
    selftest->add_option("--seed", seed, "seed for the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (app.got_subcommand(selftest)) {
            bool all_ok = true;
            for (const auto& res : selftest::run_all(seed)) {
                std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.name << " (" << res.detail
                          << ")\n";
                all_ok &= res.pass;
            }
            return all_ok ? 0 : 2;
        }

        Workspace ws(classify(parse(poly_text)), conductor);

        if (app.got_subcommand(analyze)) {
            Json j = analyze_to_json(ws.ip());
            std::ostringstream os;
            os << "n = " << ws.ip().n << ", det E = " << ws.ip().det.get_str() << ", d = "
               << ws.ip().degree << ", weights = (";
            for (size_t i = 0; i < ws.ip().weights.size(); ++i)
                os << (i ? "," : "") << ws.ip().weights[i];
            os << "), |G_f| = " << ws.maximal().order() << "\n";
            for (const auto& a : ws.ip().atoms) {
                os << "  " << (a.kind == Atom::Kind::Chain ? "chain" : "loop") << " vars=(";
                for (size_t i = 0; i < a.vars.size(); ++i) os << (i ? "," : "") << a.vars[i] + 1;
                os << ") exps=(";
                for (size_t i = 0; i < a.exps.size(); ++i) os << (i ? "," : "") << a.exps[i];
                os << ")\n";
            }
            emit(j, json_mode, os.str());
        } else if (app.got_subcommand(group_cmd)) {
            Group g = subgroup_spec.empty() ? ws.maximal() : resolve_group(ws, subgroup_spec);
            if (sl_only) g = sl_filter(g);
            emit(group_to_json(g), json_mode, group_text(g));
        } else if (app.got_subcommand(jacobian)) {
            GroupElement g = sector_spec.empty() ? GroupElement::identity(ws.n())
                                                 : GroupElement::from_string(sector_spec, ws.n());
            if (!ws.maximal().contains(g))
                throw InputError("NotASymmetry", "sector label is not a symmetry of f");
            const SectorAlgebra& sec = ws.sector(g);
            std::ostringstream os;
            os << "f^g = " << sec.restricted().str() << "\nmu = " << sec.milnor_number()
               << ", top weighted degree = " << sec.top_degree() << "\nbasis:";
            for (const auto& m : sec.basis()) os << " " << monomial_key(m, ws.vs());
            os << "\nhessian class = " << sec.hessian_class().str() << "\n";
            emit(sector_to_json(sec), json_mode, os.str());
        } else if (app.got_subcommand(product)) {
            Group g = resolve_group(ws, group_spec);
            ProductTable t = side == "orbifold" ? build_orbifold_table(ws, g)
                                                : build_hochschild_table(ws, g);
            emit(table_to_json(t), json_mode, table_text(t));
        } else if (app.got_subcommand(compare_cmd)) {
            Group g = resolve_group(ws, group_spec);
            ComparisonReport rep = compare(ws, g);
            std::ostringstream os;
            os << rep.summary();
            for (const auto& row : rescaling_table(ws, g))
                os << "  rescale (" << row.g.str() << "): prod 2sin = " << row.sin_product
                   << ", scale = " << row.scale.real() << (row.scale.imag() < 0 ? " - " : " + ")
                   << std::abs(row.scale.imag()) << "i\n";
            emit(report_to_json(rep), json_mode, os.str());
            if (!rep.pass()) return 2;
        } else if (app.got_subcommand(invariants)) {
            Group g = resolve_group(ws, group_spec);
            ProductTable t = side == "orbifold" ? build_orbifold_table(ws, g)
                                                : build_hochschild_table(ws, g);
            ProductTable other = side == "orbifold" ? build_hochschild_table(ws, g)
                                                    : build_orbifold_table(ws, g);
            InvariantAlgebra inv = invariant_subalgebra(t);
            InvariantAlgebra inv_other = invariant_subalgebra(other);
            std::ostringstream os;
            os << "dim = " << inv.basis.size() << " (" << side << "), other side "
               << inv_other.basis.size() << ", Burnside average "
               << rat_to_string(burnside_dimension(ws, g)) << "\n";
            for (const auto& [ge, m] : inv.basis)
                os << "  [" << monomial_key(m, ws.vs()) << "] @ (" << ge.str() << ")\n";
            Json j = invariants_to_json(ws, g, inv);
            j["side"] = side;
            j["other_side_dimension"] = inv_other.basis.size();
            emit(j, json_mode, os.str());
            if (inv.basis.size() != inv_other.basis.size()) return 2;
        }
        return 0;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
