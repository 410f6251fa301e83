// Smallest N certified non-binding for the 0-model, next to the closed-form
// thresholds, over a small (Z, B) grid.

#include <cmath>
#include <cstdio>

#include "landau1d/landau1d.hpp"

int main() {
    using namespace landau1d;
    BoundParams const params;
    auto const m0 = make_m_model(0);
    std::printf("%6s %10s %12s %14s %14s\n", "Z", "B", "first_N", "theorem2", "corollary3");
    for (double Z : {1.0, 2.0, 5.0, 10.0})
        for (double p : {3.0, 4.0}) {
            double const B = std::pow(Z == 1.0 ? 10.0 : Z, p);
            int lo = 1, hi = 1;
            while (!no_binding_certificate(hi, Z, B, m0, params).verdict) {
                lo = hi;
                hi *= 2;
                if (hi > (1 << 28)) break;
            }
            while (hi - lo > 1) {
                int const mid = lo + (hi - lo) / 2;
                (no_binding_certificate(mid, Z, B, m0, params).verdict ? hi : lo) = mid;
            }
            auto const rows = theorem_thresholds(Z, B, m0, params);
            std::printf("%6g %10g %12d %14.1f %14.1f\n", Z, B, hi, rows[1].N_threshold, rows[2].N_threshold);
        }
}
