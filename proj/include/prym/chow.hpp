#pragma once

#include <array>

#include "prym/report.hpp"
#include "prym/integers.hpp"

namespace prym {

// Chern data of the ambient rank-3 bundle E over the 3-dimensional projective
// base, c_i(E) = gamma_i h^i, plus a twisting line bundle with c_1(L) =
// lambda h.
struct AmbientData {
    Int gamma1 = 0, gamma2 = 0, gamma3 = 0;
    Int lambda = 0;
};

// Normal-form element of the intersection ring of the relative Grassmannian
// of lines: Z[h, eta] / (h^4, eta^3 - gamma1 h eta^2 + gamma2 h^2 eta -
// gamma3 h^3), monomials h^a eta^b with a <= 3, b <= 2.
struct RingElement {
    std::array<std::array<Int, 3>, 4> c{}; // c[a][b] * h^a eta^b

    bool operator==(const RingElement&) const = default;
    bool is_zero() const;
    std::string str() const;
};

class ChowRing {
  public:
    explicit ChowRing(AmbientData amb) : amb_(std::move(amb)) {}

    const AmbientData& ambient() const { return amb_; }

    RingElement zero() const { return {}; }
    RingElement one() const { return monomial(0, 0); }
    RingElement h() const { return monomial(1, 0); }
    RingElement eta() const { return monomial(0, 1); }
    // reduced class of h^a eta^b for any exponents
    RingElement monomial(int a, int b) const;

    RingElement add(const RingElement& x, const RingElement& y) const;
    RingElement sub(const RingElement& x, const RingElement& y) const;
    RingElement mul(const RingElement& x, const RingElement& y) const;
    RingElement scale(const RingElement& x, const Int& s) const;

    // degree map: coefficient of h^3 eta^2
    Int integrate(const RingElement& x) const;

    // c1, c2 of the tautological rank-2 subbundle
    std::pair<RingElement, RingElement> chern_V2() const;
    // total Chern class 1 + c1 + c2 as one inhomogeneous element
    RingElement total_chern_V2() const;
    RingElement total_chern_E() const;

    // Chern classes of Sym^2 of the dual of a rank-2 bundle with classes
    // (c1, c2): s1 = 3c1*, s2 = 2c1*^2 + 4c2*, s3 = 4c1* c2*.
    std::array<RingElement, 3> sym2_dual_chern(const RingElement& c1,
                                               const RingElement& c2) const;

    // degree-3 class of the degeneration surface inside the Grassmannian
    RingElement class_of_S() const;
    // class of the degeneration divisor on the base: (-2 gamma1 + 3 lambda) h
    RingElement degeneration_class() const;
    // its degree: -2 gamma1 + 3 lambda
    Int degeneration_degree() const;

    // N = integral of [S] (c1(E) - eta) (2 c1(E) - c1(L)); claim N = lambda^3
    // mod 2, so N is odd exactly when the degeneration degree argument needs
    Report parity_check() const;

  private:
    AmbientData amb_;
};

} // namespace prym
