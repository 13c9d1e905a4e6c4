#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prym/integers.hpp"

namespace prym {

// Direct sum of line bundles on the projective line, recorded by its multiset
// of degrees (kept sorted).
struct SplitBundle {
    std::vector<long long> degrees;

    explicit SplitBundle(std::vector<long long> d);
    int rank() const { return static_cast<int>(degrees.size()); }
    long long degree() const;
    std::string str() const;
    bool operator==(const SplitBundle&) const = default;
};

SplitBundle dual(const SplitBundle& e);
SplitBundle tensor(const SplitBundle& e, const SplitBundle& f);
SplitBundle twist(const SplitBundle& e, long long k);
SplitBundle sym(const SplitBundle& e, int m);

long long h0(const SplitBundle& e);
long long h1(const SplitBundle& e);

// h^0 of the m-th relative hyperplane power twisted by k on the
// projectivization of E: sections push forward to Sym^m of the dual bundle.
long long projective_bundle_h0(const SplitBundle& e, int m, long long k);

} // namespace prym
