#pragma once

#include "prym/lattice.hpp"

namespace prym {

// Numeric consequences of an involution on a simply-connected-type surface
// (trivial first homology), keyed by the items (i)-(vi) of the classification
// so single claims can be targeted by tests.
struct SurfaceInvariantReport {
    long h2 = 0;
    std::optional<long> r; // fixed-point count; nullopt = free action
    long r0 = 0;
    std::array<FinAbGroup, 5> homology;   // H_0(Y) .. H_4(Y)
    std::array<FinAbGroup, 5> cohomology; // H^0(Y) .. H^4(Y)
    FinAbGroup m_group, n_group, coker_pullback;
    FinAbGroup h1_g, h2_g; // H^1(G, H^2(S)), H^2(G, H^2(S))
    std::string decomposition;

    Report to_report() const;
};

SurfaceInvariantReport surface_structure_fixed_points(long h2, long r);
SurfaceInvariantReport surface_structure_free(long h2);

// Rank-2 sublattice of algebraic classes on the line surface of a cubic
// fourfold: Gram [[1,4],[4,1]], sigma the swap, plus the derived facts that
// every report about it relies on.
struct CubicPreset {
    InvolutionLattice lattice;
    Int det_value;
    GModuleDecomposition decomp;
    DiscriminantGModule disc;
    Int g_self_pairing; // the class 2*C + sigma(C) paired with itself

    Report to_report() const;
};

CubicPreset cubic_fourfold_M();

// Rank-3 Picard lattice family A(m, d) with sigma = swap + sign.
struct Picard3Preset {
    long m = 0, d = 0;
    InvolutionLattice lattice;
    Int det_value;
    GModuleDecomposition decomp;
    DiscriminantGModule disc;
    bool three_divides_m = false;
    Int n_value; // |3d + 2m^2| when 3 does not divide m, |d + 6 m0^2| otherwise

    Report to_report() const;
};

Picard3Preset cubic_picard3(long m, long d);

// Rank-23 hyperkaehler-type form: the even unimodular rank-22 lattice
// (three hyperbolic planes, two negative E8 blocks) extended by <-2>,
// with the distinguished class lambda0 = 2l - 5delta, l of square 14.
// Construction self-validates; failure aborts with a diagnostic.
struct BeauvilleDonagiData {
    BilinearLattice b;         // rank 23
    std::vector<Int> lambda0;
    BilinearLattice b0;        // -(minus-modification of b by lambda0)
    Report validation;
};

BeauvilleDonagiData beauville_donagi();

// Parity data for a rank-2 regular G-module inside a conic-bundle lattice:
// q' = (sigma(x) - x)^2 = 2(x^2 - x.sigma x) is always even, which makes the
// Prym determinant 2 q^2 / q' odd whenever q is odd.
Report conic_bundle_prym_parity(const Int& x_sq, const Int& x_sigma_x);

} // namespace prym
