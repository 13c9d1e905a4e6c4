#pragma once

#include <optional>

#include "prym/gmodule.hpp"

namespace prym {

// Free Z-module with an integral symmetric bilinear form.
struct BilinearLattice {
    int rank = 0;
    IntMat gram;

    BilinearLattice() = default;
    BilinearLattice(int rank_, IntMat gram_);

    Int pair(const std::vector<Int>& x, const std::vector<Int>& y) const;
};

// Lattice with an involutive isometry.
struct InvolutionLattice {
    BilinearLattice base;
    IntMat sigma;

    InvolutionLattice() = default;
    InvolutionLattice(BilinearLattice base_, IntMat sigma_);

    int rank() const { return base.rank; }
    FreeGModule gmodule() const { return FreeGModule(base.rank, sigma); }
};

Int determinant(const BilinearLattice& l);

// gcd of the pairings of x against the whole lattice; 0 iff x is in the
// kernel of the form.
Int scale(const BilinearLattice& l, const std::vector<Int>& x);

enum class ModSign { plus, minus };

// Rank-one modification b2 = b1 +- (1/s^2) b1(x,.) b1(x,.). Integral because
// s divides every pairing against x. Throws on zero scale.
BilinearLattice modify(const BilinearLattice& l, const std::vector<Int>& x, ModSign sign);

// Saturated canonical basis of {v : b(v, s) = 0 for all s in span(sub)}.
IntMat orthogonal_complement(const BilinearLattice& l, const IntMat& sub);

// Finite quotient M*/M of a nondegenerate sublattice, with the involution
// induced on its generators. The +-1 eigen-split is computed only when the
// order is odd; over even groups no canonical split exists and the action
// matrix alone is reported.
struct DiscriminantGModule {
    FinAbGroup group;
    IntMat sigma_action; // on the generators of the nontrivial factors
    std::optional<FinAbGroup> plus_part;
    std::optional<FinAbGroup> minus_part;

    std::string str() const;
};

DiscriminantGModule discriminant_group(const InvolutionLattice& l, const IntMat& m);

// Sublattice (sigma-1)(M-perp) together with half the restricted form, which
// is integral on it.
struct PrymLattice {
    IntMat basis; // columns in ambient coordinates
    IntMat halved_gram;

    int rank() const { return basis.cols(); }
    BilinearLattice lattice() const { return BilinearLattice(basis.cols(), halved_gram); }
};

PrymLattice prym_lattice(const InvolutionLattice& l, const IntMat& m);

// fixed-point mode carries the number of fixed points; free mode carries none
struct SurfaceMode {
    std::optional<long> fixed_points;

    static SurfaceMode fixed(long r) { return {r}; }
    static SurfaceMode free_action() { return {std::nullopt}; }
    bool is_fixed() const { return fixed_points.has_value(); }
};

Report verify_rank_formula(const InvolutionLattice& l, const IntMat& m, const SurfaceMode& mode);
Report verify_det_formula(const InvolutionLattice& l, const IntMat& m, const SurfaceMode& mode);

Report verify_prym_correspondence(const BilinearLattice& lambda_x, const InvolutionLattice& w,
                                  const IntMat& m, const IntMat& phi, const IntMat& psi);

// K = coker{ H^1(G, L) -> H^1(G, L/Hdg) } for a saturated sigma-stable Hdg.
FinAbGroup brauer_K(const InvolutionLattice& l, const IntMat& hdg);

Report verify_brauer_sequences(const InvolutionLattice& l, const IntMat& hdg, const IntMat& m,
                               long n);

// Restriction of sigma to a stable sublattice, in the basis of `sub`.
IntMat restrict_involution(const InvolutionLattice& l, const IntMat& sub);

// Gram matrix of the form restricted to the sublattice basis.
IntMat restrict_gram(const BilinearLattice& l, const IntMat& sub);

} // namespace prym
