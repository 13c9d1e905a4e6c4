#include "prym/chow.hpp"

#include <sstream>

namespace prym {

bool RingElement::is_zero() const {
    for (const auto& row : c)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

std::string RingElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 3; ++b) {
            const Int& v = c[a][b];
            if (v == 0) continue;
            if (!first) os << (v > 0 ? " + " : " - ");
            else if (v < 0) os << "-";
            first = false;
            Int av = abs_val(v);
            bool unit = av == 1 && (a + b > 0);
            if (!unit) os << av.str();
            if (a > 0) {
                os << (unit ? "" : "*") << "h";
                if (a > 1) os << "^" << a;
                unit = false;
            }
            if (b > 0) {
                os << (unit ? "" : "*") << "eta";
                if (b > 1) os << "^" << b;
            }
        }
    if (first) os << "0";
    return os.str();
}

RingElement ChowRing::monomial(int a, int b) const {
    RingElement r;
    if (a >= 4) return r; // h^4 = 0
    if (b <= 2) {
        r.c[a][b] = 1;
        return r;
    }
    // eta^3 = gamma1 h eta^2 - gamma2 h^2 eta + gamma3 h^3
    RingElement e2 = monomial(a + 1, b - 1);
    RingElement e1 = monomial(a + 2, b - 2);
    RingElement e0 = monomial(a + 3, b - 3);
    return add(sub(scale(e2, amb_.gamma1), scale(e1, amb_.gamma2)), scale(e0, amb_.gamma3));
}

RingElement ChowRing::add(const RingElement& x, const RingElement& y) const {
    RingElement r = x;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 3; ++b) r.c[a][b] += y.c[a][b];
    return r;
}

RingElement ChowRing::sub(const RingElement& x, const RingElement& y) const {
    RingElement r = x;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 3; ++b) r.c[a][b] -= y.c[a][b];
    return r;
}

RingElement ChowRing::scale(const RingElement& x, const Int& s) const {
    RingElement r = x;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 3; ++b) r.c[a][b] *= s;
    return r;
}

RingElement ChowRing::mul(const RingElement& x, const RingElement& y) const {
    RingElement r;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 3; ++b) {
            if (x.c[a][b] == 0) continue;
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 3; ++b2) {
                    if (y.c[a2][b2] == 0) continue;
                    RingElement mono = monomial(a + a2, b + b2);
                    r = add(r, scale(mono, x.c[a][b] * y.c[a2][b2]));
                }
        }
    return r;
}

Int ChowRing::integrate(const RingElement& x) const { return x.c[3][2]; }

std::pair<RingElement, RingElement> ChowRing::chern_V2() const {
    // 0 -> V2 -> E -> O(eta) -> 0 gives c1 = c1(E) - eta and
    // c2 = c2(E) - c1(E) eta + eta^2.
    RingElement c1 = sub(scale(h(), amb_.gamma1), eta());
    RingElement c2 = add(sub(scale(monomial(2, 0), amb_.gamma2),
                             scale(monomial(1, 1), amb_.gamma1)),
                         monomial(0, 2));
    return {c1, c2};
}

RingElement ChowRing::total_chern_V2() const {
    auto [c1, c2] = chern_V2();
    return add(add(one(), c1), c2);
}

RingElement ChowRing::total_chern_E() const {
    RingElement r = one();
    r = add(r, scale(monomial(1, 0), amb_.gamma1));
    r = add(r, scale(monomial(2, 0), amb_.gamma2));
    r = add(r, scale(monomial(3, 0), amb_.gamma3));
    return r;
}

std::array<RingElement, 3> ChowRing::sym2_dual_chern(const RingElement& c1,
                                                     const RingElement& c2) const {
    RingElement c1d = sub(zero(), c1); // dual: c1* = -c1, c2* = c2
    std::array<RingElement, 3> s;
    s[0] = scale(c1d, 3);
    s[1] = add(scale(mul(c1d, c1d), 2), scale(c2, 4));
    s[2] = scale(mul(c1d, c2), 4);
    return s;
}

RingElement ChowRing::class_of_S() const {
    // c3 of the twist of the rank-3 bundle Sym^2(V2*) by L:
    // s3 + s2 c1(L) + s1 c1(L)^2 + c1(L)^3
    auto [c1, c2] = chern_V2();
    auto s = sym2_dual_chern(c1, c2);
    RingElement cl = scale(h(), amb_.lambda);
    RingElement r = s[2];
    r = add(r, mul(s[1], cl));
    r = add(r, mul(s[0], mul(cl, cl)));
    r = add(r, mul(cl, mul(cl, cl)));
    return r;
}

RingElement ChowRing::degeneration_class() const { return scale(h(), degeneration_degree()); }

Int ChowRing::degeneration_degree() const { return Int(-2) * amb_.gamma1 + Int(3) * amb_.lambda; }

Report ChowRing::parity_check() const {
    Report rep;
    rep.title = "conic-bundle intersection parity";
    rep.add("gamma", "c(E) coefficients",
            "(" + amb_.gamma1.str() + "," + amb_.gamma2.str() + "," + amb_.gamma3.str() + ")");
    rep.add("lambda", "c1(L) coefficient", amb_.lambda.str());
    Int deg = degeneration_degree();
    rep.add("delta-degree", "degeneration divisor degree -2 gamma1 + 3 lambda", deg.str());

    RingElement a1_factor = sub(scale(h(), amb_.gamma1), eta());
    RingElement a2_factor = scale(h(), Int(2) * amb_.gamma1 - amb_.lambda);
    RingElement prod = mul(class_of_S(), mul(a1_factor, a2_factor));
    Int n = integrate(prod);
    rep.add("N", "integral of [S].(c1 E - eta).(2 c1 E - c1 L)", n.str());
    Int l3 = amb_.lambda * amb_.lambda * amb_.lambda;
    bool cong = is_even(n - l3);
    rep.check("congruence", "N = lambda^3 mod 2", cong ? "yes" : "no", cong);
    if (is_odd(amb_.lambda))
        rep.check("odd", "lambda odd forces N odd", is_odd(n) ? "N odd" : "N even", is_odd(n));
    else
        rep.add("odd", "lambda even", "N even: " + std::string(is_even(n) ? "yes" : "no"));
    return rep;
}

} // namespace prym
