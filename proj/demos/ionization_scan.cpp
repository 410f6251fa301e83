// Maximum negative ionization of the 0-model and the Slater model at a few
// field strengths, from Hartree sweeps.

#include <cstdio>

#include "landau1d/landau1d.hpp"

int main() {
    using namespace landau1d;
    double const Z = 1.0;
    for (double B : {1e2, 1e3}) {
        auto const m0 = make_m_model(0);
        auto const grid = default_grid(Z, B, m0);
        auto const scan = nmax_scan(Z, B, m0, 6, grid);
        std::printf("0-model  Z=%g B=%g  n_max=%d\n", Z, B, scan.n_max);
        for (auto const& r : scan.rows)
            std::printf("   N=%d  E=%.10f  full=%.6f  %s\n", r.N, r.energy, full_energy(r.energy, r.N, B),
                        r.bound ? "bound" : "unbound");

        auto const sl = nmax_scan(Z, B, slater_family(), 6, default_grid(Z, B, make_slater_model(6)));
        std::printf("slater   Z=%g B=%g  n_max=%d\n", Z, B, sl.n_max);
    }
}
