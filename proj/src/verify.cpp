#include "orbjac/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace orbjac {

namespace {

// (-1)^{d(d-1)/2} e[-age(g)/2] / P_g * [H], the exact square-root-free form
// of the paired structure class on the cup side
AlgebraClass predicted_pair_class(const Workspace& ws, const GroupElement& g,
                                  const CycNum& half_angle_product) {
    const auto& hf = ws.hessian_factor(g);
    CycNum s = ws.root(mod1(-g.age() / 2)) * half_angle_product.inverse();
    int d = g.codim();
    if ((d * (d - 1) / 2) % 2 != 0) s = -s;
    return hf.cls * s;
}

}  // namespace

ComparisonReport compare(const Workspace& ws, const Group& group) {
    ComparisonReport rep;
    rep.group = group;
    size_t order = group.order();

    ProductTable orb = build_orbifold_table(ws, group);
    ProductTable cup = build_hochschild_table(ws, group);

    const FieldPtr& fld = ws.field();
    CycNum one = CycNum::one(fld);

    for (size_t gi = 0; gi < order; ++gi) {
        CycNum p = one;
        for (int i : group[gi].moved())
            p *= ws.root(mod1(group[gi].alpha(i) / 2)) - ws.root(mod1(-group[gi].alpha(i) / 2));
        rep.half_angle_product.push_back(p);
    }

    rep.pairs.assign(order, std::vector<ComparisonReport::Pair>(order));
    for (size_t i = 0; i < order; ++i) {
        for (size_t j = 0; j < order; ++j) {
            bool z1 = orb.entry_is_zero(i, j), z2 = cup.entry_is_zero(i, j);
            auto& pr = rep.pairs[i][j];
            if (z1 && z2) {
                pr.status = ComparisonReport::Status::BothZero;
                continue;
            }
            if (z1 != z2) {
                pr.status = ComparisonReport::Status::Mismatch;
                rep.zero_pattern_ok = false;
                continue;
            }
            try {
                pr.ratio = socle_ratio(*orb.entry(i, j), *cup.entry(i, j));
                pr.status = ComparisonReport::Status::Match;
            } catch (const Error&) {
                pr.status = ComparisonReport::Status::Mismatch;
                rep.proportional_ok = false;
            }
        }
    }

    size_t idi = group.index_of(GroupElement::identity(ws.n()));
    for (size_t i = 0; i < order; ++i) {
        const auto& row = rep.pairs[idi][i];
        const auto& col = rep.pairs[i][idi];
        if (row.status == ComparisonReport::Status::Match && !(*row.ratio == one))
            rep.units_ok = false;
        if (col.status == ComparisonReport::Status::Match && !(*col.ratio == one))
            rep.units_ok = false;
        if (row.status == ComparisonReport::Status::Mismatch ||
            col.status == ComparisonReport::Status::Mismatch)
            rep.units_ok = false;
    }

    // exact closed form of every paired entry on the cup side
    for (size_t gi = 0; gi < order; ++gi) {
        const GroupElement& g = group[gi];
        if (g.is_identity()) continue;
        size_t inv = group.index_of(g.inverse());
        const auto& entry = cup.entry(gi, inv);
        if (!entry || entry->is_zero() ||
            !(*entry == predicted_pair_class(ws, g, rep.half_angle_product[gi]))) {
            rep.closed_form_ok = false;
            continue;
        }
        // equivalently, the orbifold/cup ratio on the paired entry
        const auto& pr = rep.pairs[gi][inv];
        if (pr.status != ComparisonReport::Status::Match ||
            !(*pr.ratio == rep.half_angle_product[gi]))
            rep.closed_form_ok = false;
    }

    for (size_t gi = 0; gi < order; ++gi) {
        size_t inv = group.index_of(group[gi].inverse());
        if (!(rep.half_angle_product[gi] == rep.half_angle_product[inv]))
            rep.inverse_symmetry_ok = false;
    }

    // ratio^2 = P_g P_h / P_gh on every nonzero pair, and the cocycle
    // identity on every fully defined triple
    auto ratio_of = [&](size_t i, size_t j) -> const std::optional<CycNum>& {
        return rep.pairs[i][j].ratio;
    };
    for (size_t i = 0; i < order && rep.cocycle_ok; ++i) {
        for (size_t j = 0; j < order; ++j) {
            if (!ratio_of(i, j)) continue;
            size_t ij = group.index_of(group[i] * group[j]);
            CycNum lhs = *ratio_of(i, j) * *ratio_of(i, j) * rep.half_angle_product[ij];
            CycNum rhs = rep.half_angle_product[i] * rep.half_angle_product[j];
            if (!(lhs == rhs)) {
                rep.cocycle_ok = false;
                break;
            }
        }
    }
    for (size_t i = 0; i < order && rep.cocycle_ok; ++i) {
        for (size_t j = 0; j < order && rep.cocycle_ok; ++j) {
            if (!ratio_of(i, j)) continue;
            size_t ij = group.index_of(group[i] * group[j]);
            for (size_t k = 0; k < order; ++k) {
                if (!ratio_of(ij, k) || !ratio_of(j, k)) continue;
                size_t jk = group.index_of(group[j] * group[k]);
                if (!ratio_of(i, jk)) continue;
                CycNum lhs = *ratio_of(i, j) * *ratio_of(ij, k);
                CycNum rhs = *ratio_of(j, k) * *ratio_of(i, jk);
                if (!(lhs == rhs)) {
                    rep.cocycle_ok = false;
                    break;
                }
            }
        }
    }

    return rep;
}

std::string ComparisonReport::summary() const {
    std::ostringstream os;
    auto line = [&](const char* name, bool ok) {
        os << "  " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
    };
    os << (pass() ? "PASS" : "MISMATCH") << " (|G| = " << group.order() << ")\n";
    line("zero patterns agree", zero_pattern_ok);
    line("entries proportional", proportional_ok);
    line("unit rows", units_ok);
    line("paired-entry closed form", closed_form_ok);
    line("inverse symmetry of half-angle products", inverse_symmetry_ok);
    line("rescaling cocycle", cocycle_ok);
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = 0; j < pairs.size(); ++j)
            if (pairs[i][j].status == Status::Mismatch)
                os << "  mismatch at g = " << group[i].str() << ", h = " << group[j].str()
                   << "\n";
    return os.str();
}

std::vector<RescalingRow> rescaling_table(const Workspace& ws, const Group& group) {
    std::vector<RescalingRow> rows;
    for (const auto& g : group) {
        double prod = 1.0;
        for (int i : g.moved())
            prod *= 2.0 * std::sin(std::numbers::pi * g.alpha(i).get_d());
        double phase = -std::numbers::pi * g.codim() / 4.0;
        std::complex<double> scale =
            std::polar(1.0 / std::sqrt(prod), phase);
        rows.push_back(RescalingRow{g, prod, scale});
    }
    return rows;
}

}  // namespace orbjac
