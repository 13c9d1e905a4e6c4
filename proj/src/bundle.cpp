#include "prym/bundle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace prym {

SplitBundle::SplitBundle(std::vector<long long> d) : degrees(std::move(d)) {
    if (degrees.empty()) throw InputError("SplitBundle: rank must be at least 1");
    std::sort(degrees.begin(), degrees.end());
}

long long SplitBundle::degree() const {
    long long s = 0;
    for (long long d : degrees) s += d;
    return s;
}

std::string SplitBundle::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (i) os << ",";
        os << degrees[i];
    }
    os << ")";
    return os.str();
}

SplitBundle dual(const SplitBundle& e) {
    std::vector<long long> d;
    d.reserve(e.degrees.size());
    for (long long v : e.degrees) d.push_back(-v);
    return SplitBundle(std::move(d));
}

SplitBundle tensor(const SplitBundle& e, const SplitBundle& f) {
    std::vector<long long> d;
    d.reserve(e.degrees.size() * f.degrees.size());
    for (long long a : e.degrees)
        for (long long b : f.degrees) d.push_back(a + b);
    return SplitBundle(std::move(d));
}

SplitBundle twist(const SplitBundle& e, long long k) {
    std::vector<long long> d = e.degrees;
    for (long long& v : d) v += k;
    return SplitBundle(std::move(d));
}

SplitBundle sym(const SplitBundle& e, int m) {
    if (m < 0) throw InputError("sym: exponent must be >= 0");
    // all monomials of degree m in the line-bundle factors
    std::vector<long long> out;
    std::vector<int> idx(static_cast<size_t>(m), 0);
    const int r = e.rank();
    std::function<void(int, int, long long)> rec = [&](int pos, int start, long long sum) {
        if (pos == m) {
            out.push_back(sum);
            return;
        }
        for (int i = start; i < r; ++i) rec(pos + 1, i, sum + e.degrees[i]);
    };
    rec(0, 0, 0);
    return SplitBundle(std::move(out));
}

long long h0(const SplitBundle& e) {
    long long s = 0;
    for (long long d : e.degrees) s += std::max(0LL, d + 1);
    return s;
}

long long h1(const SplitBundle& e) {
    long long s = 0;
    for (long long d : e.degrees) s += std::max(0LL, -d - 1);
    return s;
}

long long projective_bundle_h0(const SplitBundle& e, int m, long long k) {
    return h0(twist(sym(dual(e), m), k));
}

} // namespace prym
