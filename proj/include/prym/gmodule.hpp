#pragma once

#include "prym/report.hpp"
#include "prym/sublattice.hpp"

namespace prym {

// Free Z-module of finite rank with an action of the order-2 group {1, sigma}.
struct FreeGModule {
    int rank = 0;
    IntMat sigma;

    FreeGModule() = default;
    FreeGModule(int rank_, IntMat sigma_);

    // swap blocks for each Z[G] summand, then +1 entries, then -1 entries
    static FreeGModule canonical(int r0, int r_plus, int r_minus);
};

IntMat canonical_block_sigma(int r0, int r_plus, int r_minus);

// Invariants of the canonical splitting Z[G]^r0 + Z_+^r_plus + Z_-^r_minus,
// together with a unimodular basis realizing it:
//   adapted_basis^-1 * sigma * adapted_basis = canonical block matrix.
struct GModuleDecomposition {
    int r0 = 0;
    int r_plus = 0;
    int r_minus = 0;
    IntMat adapted_basis;

    std::string str() const; // e.g. "Z[G]^3 + Z+^2 + Z-"
};

GModuleDecomposition decompose(const FreeGModule& m);

// H^0 = invariants; odd i: ker(sigma+1)/im(sigma-1); even i>0:
// ker(sigma-1)/im(sigma+1). 2-torsion for all i > 0.
FinAbGroup group_cohomology(const FreeGModule& m, long degree);

// Finite(ly generated) module presented on the generators of its group:
// free generators first, then one generator per invariant factor. The action
// matrix is taken modulo the relations.
struct FiniteGModule {
    FinAbGroup group;
    IntMat sigma_action;

    FiniteGModule() = default;
    FiniteGModule(FinAbGroup g, IntMat action);

    int num_generators() const;
    IntMat relation_lattice() const; // columns d_i * e_i for torsion generators
};

FinAbGroup group_cohomology(const FiniteGModule& m, long degree);

// Canonical basis of the image sublattice (sigma - 1)M.
IntMat prym_part(const FreeGModule& m);

// Saturated canonical bases of ker(sigma - 1) and ker(sigma + 1).
IntMat invariants(const FreeGModule& m);
IntMat anti_invariants(const FreeGModule& m);

// Checks, inside M (x) (1/n)Z/Z, that the anti-invariant part of M tensored
// with Z/n equals the n-torsion of the Prym part of M (x) Q/Z. The divisible
// side is modelled at level 2n so that its n-torsion is exact.
Report torsion_prym_check(const FreeGModule& m, long n);

} // namespace prym
