#pragma once

#include <random>

#include "prym/lattice.hpp"

namespace prym::testutil {

using Rng = std::mt19937_64;

inline long rand_range(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Product of a few elementary operations; entries stay small.
inline IntMat random_unimodular(Rng& rng, int n, int ops = -1) {
    IntMat u = IntMat::identity(n);
    if (n <= 1) return u;
    if (ops < 0) ops = 3 * n;
    for (int k = 0; k < ops; ++k) {
        int i = static_cast<int>(rand_range(rng, 0, n - 1));
        int j = static_cast<int>(rand_range(rng, 0, n - 1));
        if (i == j) continue;
        switch (rand_range(rng, 0, 3)) {
            case 0: u.add_row(i, j, Int(rand_range(rng, -1, 1))); break;
            case 1: u.add_col(i, j, Int(rand_range(rng, -1, 1))); break;
            case 2: u.swap_rows(i, j); break;
            default: u.negate_row(i); break;
        }
    }
    return u;
}

inline IntMat random_matrix(Rng& rng, int rows, int cols, long lo = -5, long hi = 5) {
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rand_range(rng, lo, hi);
    return m;
}

inline IntMat random_symmetric(Rng& rng, int n, long lo = -4, long hi = 4) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Int v = rand_range(rng, lo, hi);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

// Involution conjugate to the canonical block form (r0, r_plus, r_minus).
inline FreeGModule random_involution(Rng& rng, int r0, int r_plus, int r_minus) {
    int n = 2 * r0 + r_plus + r_minus;
    IntMat t = random_unimodular(rng, n);
    IntMat tinv = inverse_unimodular(t);
    return FreeGModule(n, tinv * canonical_block_sigma(r0, r_plus, r_minus) * t);
}

// Involution lattice whose sigma is conjugate to the given block form, with a
// random compatible nondegenerate symmetric form.
inline InvolutionLattice random_involution_lattice(Rng& rng, int r0, int r_plus, int r_minus) {
    int n = 2 * r0 + r_plus + r_minus;
    IntMat sigma0 = canonical_block_sigma(r0, r_plus, r_minus);
    for (;;) {
        IntMat h = random_symmetric(rng, n);
        IntMat g0 = h + sigma0.transpose() * h * sigma0; // sigma0-invariant
        IntMat t = random_unimodular(rng, n);
        IntMat tinv = inverse_unimodular(t);
        IntMat g = t.transpose() * g0 * t;
        IntMat s = tinv * sigma0 * t;
        if (det(g) == 0) continue;
        return InvolutionLattice(BilinearLattice(n, g), s);
    }
}

// Block-orthogonal "quotient-surface style" lattice: hyperbolic swap planes
// followed by <+-1> diagonal entries with trivial action. Satisfies
// det(anti-invariants) = +-2^r0 by construction.
inline InvolutionLattice surface_block_lattice(Rng& rng, int r0, int r_diag) {
    int n = 2 * r0 + r_diag;
    IntMat g(n, n);
    for (int b = 0; b < r0; ++b) {
        g(2 * b, 2 * b + 1) = 1;
        g(2 * b + 1, 2 * b) = 1;
    }
    for (int i = 0; i < r_diag; ++i) g(2 * r0 + i, 2 * r0 + i) = rand_range(rng, 0, 1) ? 1 : -1;
    return InvolutionLattice(BilinearLattice(n, g), canonical_block_sigma(r0, r_diag, 0));
}

// sigma-stable saturated sublattice spanned by a random vector and its image;
// retries until the restricted form has odd nonzero determinant and the
// restricted module has no trivial summand (H^2(G, M) = 0).
inline IntMat random_regular_sublattice(Rng& rng, const InvolutionLattice& l, int max_tries = 200) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Int> v(static_cast<size_t>(l.rank()));
        for (auto& e : v) e = rand_range(rng, -2, 2);
        IntMat span(l.rank(), 2);
        span.set_col(0, v);
        span.set_col(1, mat_vec(l.sigma, v));
        if (rank_of(span) != 2) continue;
        IntMat m = saturate(span);
        Int d = det(restrict_gram(l.base, m));
        if (d == 0 || is_even(d)) continue;
        FreeGModule rm(m.cols(), restrict_involution(l, m));
        if (!group_cohomology(rm, 2).is_trivial()) continue;
        return m;
    }
    throw std::runtime_error("random_regular_sublattice: no candidate found");
}

} // namespace prym::testutil
