#include "prym/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace prym {

FinAbGroup FinAbGroup::free_of_rank(long r) {
    FinAbGroup g;
    g.free_rank = r;
    return g;
}

FinAbGroup FinAbGroup::cyclic(const Int& d) { return normalized(0, {d}); }

FinAbGroup FinAbGroup::two_torsion(long k) {
    FinAbGroup g;
    g.factors.assign(static_cast<size_t>(k), Int(2));
    return g;
}

FinAbGroup FinAbGroup::normalized(long free_rank, std::vector<Int> divisors) {
    for (auto& d : divisors) d = abs_val(d);
    std::erase_if(divisors, [](const Int& d) { return d == 1; });
    if (std::find(divisors.begin(), divisors.end(), Int(0)) != divisors.end())
        throw std::logic_error("FinAbGroup: zero divisor; free parts must be counted separately");
    // gcd/lcm exchange until every adjacent pair divides. Each exchange keeps
    // the product and strictly refines, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            for (size_t j = i + 1; j < divisors.size(); ++j) {
                if (divisors[j] % divisors[i] != 0) {
                    Int g = gcd(divisors[i], divisors[j]);
                    Int l = divisors[i] / g * divisors[j];
                    divisors[i] = g;
                    divisors[j] = l;
                    changed = true;
                }
            }
        }
        std::erase_if(divisors, [](const Int& d) { return d == 1; });
    }
    std::sort(divisors.begin(), divisors.end());
    FinAbGroup out;
    out.free_rank = free_rank;
    out.factors = std::move(divisors);
    return out;
}

Int FinAbGroup::order() const {
    if (!is_finite()) throw std::logic_error("FinAbGroup::order on infinite group");
    Int o = 1;
    for (const auto& d : factors) o *= d;
    return o;
}

std::string FinAbGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    // group equal factors as Z/d^k
    size_t i = 0;
    while (i < factors.size()) {
        size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        sep();
        os << "Z/" << factors[i].str();
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<Int> all = a.factors;
    all.insert(all.end(), b.factors.begin(), b.factors.end());
    return FinAbGroup::normalized(a.free_rank + b.free_rank, std::move(all));
}

} // namespace prym
