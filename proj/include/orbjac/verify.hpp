#pragma once

#include <complex>

#include "orbjac/hochschild.hpp"

namespace orbjac {

// Outcome of comparing the orbifold table against the cup-product table
// for one (f, G). The isomorphism is certified through exact ratio and
// cocycle conditions in Q(zeta_M); no square roots are ever extracted.
struct ComparisonReport {
    enum class Status { BothZero, Match, Mismatch };

    struct Pair {
        Status status;
        std::optional<CycNum> ratio;  // orbifold entry / cup entry when both nonzero
    };

    Group group;
    std::vector<std::vector<Pair>> pairs;
    std::vector<CycNum> half_angle_product;  // per element: prod over moved i of
                                             // (e[a_i/2] - e[-a_i/2])

    bool zero_pattern_ok = true;   // the two tables vanish on the same pairs
    bool proportional_ok = true;   // every nonzero pair of entries is proportional
    bool units_ok = true;          // identity rows and columns have ratio 1
    bool closed_form_ok = true;    // cup (g, g^{-1}) entries match the exact closed form
    bool inverse_symmetry_ok = true;  // half-angle product invariant under g -> g^{-1}
    bool cocycle_ok = true;        // ratio^2 = P_g P_h / P_gh and the 2-cocycle identity

    bool pass() const {
        return zero_pattern_ok && proportional_ok && units_ok && closed_form_ok &&
               inverse_symmetry_ok && cocycle_ok;
    }
    std::string summary() const;
};

/// Build both product tables over G and check the main-theorem conditions.
ComparisonReport compare(const Workspace& ws, const Group& group);

// Floating-point display of the generator rescaling; never feeds back into
// the exact pipeline.
struct RescalingRow {
    GroupElement g;
    double sin_product;            // prod over moved i of 2 sin(pi a_i)
    std::complex<double> scale;    // e[-d_g/8] * sin_product^{-1/2}
};

std::vector<RescalingRow> rescaling_table(const Workspace& ws, const Group& group);

}  // namespace orbjac
