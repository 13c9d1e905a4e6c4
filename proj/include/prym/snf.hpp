#pragma once

#include <optional>
#include <vector>

#include "prym/abelian.hpp"
#include "prym/matrix.hpp"

namespace prym {

// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dk >= 0.
// Uinv and Vinv are maintained alongside so that A = Uinv*D*Vinv.
struct SmithForm {
    IntMat U, D, V;
    IntMat Uinv, Vinv;
    int rank = 0;
};

SmithForm smith_normal_form(const IntMat& a);

// Canonical basis of the column span (column-style Hermite form, pivots
// positive, off-pivot entries reduced). All sublattice-valued results in the
// library are returned in this form so outputs are byte-stable.
IntMat hnf_cols(const IntMat& a);

// Basis of the integer kernel {x : Ax = 0}, canonical form, saturated.
IntMat kernel_basis(const IntMat& a);

// Isomorphism type of Z^rows / colspan(A).
FinAbGroup cokernel_structure(const IntMat& a);

// Primitive closure of the column span. Requires independent columns.
IntMat saturate(const IntMat& b);

// Columns extending a saturated lattice basis to a basis of the ambient Z^n.
IntMat complete_to_basis(const IntMat& p);

// Some integer solution of A x = b, or nullopt.
std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b);

// X with A*X = B, or nullopt if some column has no integer solution.
std::optional<IntMat> solve_matrix(const IntMat& a, const IntMat& b);

int rank_of(const IntMat& a);

// Exact determinant (Bareiss).
Int det(const IntMat& a);

// Inverse of a matrix with det = +-1.
IntMat inverse_unimodular(const IntMat& u);

} // namespace prym
