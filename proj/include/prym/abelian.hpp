#pragma once

#include <string>
#include <vector>

#include "prym/integers.hpp"

namespace prym {

// Finitely generated abelian group in invariant-factor normal form:
//   Z^free_rank + Z/d1 + ... + Z/dk   with 2 <= d1 | d2 | ... | dk.
struct FinAbGroup {
    long free_rank = 0;
    std::vector<Int> factors;

    static FinAbGroup trivial() { return {}; }
    static FinAbGroup free_of_rank(long r);
    static FinAbGroup cyclic(const Int& d);
    static FinAbGroup two_torsion(long k); // (Z/2)^k

    // Accepts divisors in any order (1s allowed, dropped) and rewrites them
    // into a divisibility chain by gcd/lcm exchanges. No factoring needed.
    static FinAbGroup normalized(long free_rank, std::vector<Int> divisors);

    bool is_trivial() const { return free_rank == 0 && factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const; // throws if infinite
    std::string str() const;

    bool operator==(const FinAbGroup&) const = default;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

} // namespace prym
