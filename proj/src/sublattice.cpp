#include "prym/sublattice.hpp"

namespace prym {

IntMat lattice_sum(const IntMat& a, const IntMat& b) { return hnf_cols(hstack(a, b)); }

IntMat lattice_intersect(const IntMat& a, const IntMat& b) {
    // x = A s = B t; the kernel of [A | -B] recovers all such pairs (s, t).
    IntMat k = kernel_basis(hstack(a, -b));
    return hnf_cols(a * k.rows_range(0, a.cols()));
}

IntMat preimage_lattice(const IntMat& m, const IntMat& l) {
    if (m.rows() != l.rows()) throw std::logic_error("preimage_lattice shape mismatch");
    IntMat k = kernel_basis(hstack(m, -l));
    return hnf_cols(k.rows_range(0, m.cols()));
}

bool lattice_member(const IntMat& a, const std::vector<Int>& x) {
    return solve_integer(a, x).has_value();
}

bool lattice_subset(const IntMat& b, const IntMat& a) { return solve_matrix(a, b).has_value(); }

bool lattice_equal(const IntMat& a, const IntMat& b) { return hnf_cols(a) == hnf_cols(b); }

FinAbGroup subquotient(const IntMat& a, const IntMat& b) {
    auto coords = solve_matrix(a, b);
    if (!coords) throw std::logic_error("subquotient: second lattice not contained in first");
    // span(a)/span(b) = Z^(cols a)/colspan(coords) once a's columns are a basis.
    if (rank_of(a) != a.cols()) throw std::logic_error("subquotient: first basis is dependent");
    return cokernel_structure(*coords);
}

Int element_order_mod(const std::vector<Int>& x, const IntMat& l) {
    // pairs (t, y) with t*x = L*y form a lattice; project onto t.
    IntMat xcol = IntMat::col_vector(x);
    IntMat k = kernel_basis(hstack(xcol, -l));
    Int g = 0;
    for (int j = 0; j < k.cols(); ++j) g = gcd(g, k(0, j));
    return abs_val(g);
}

} // namespace prym
