#pragma once

#include "prym/snf.hpp"

namespace prym {

// Sublattices of Z^n are handled as column matrices; all functions return
// canonical (hnf_cols) bases so equal lattices compare equal entrywise.

IntMat lattice_sum(const IntMat& a, const IntMat& b);
IntMat lattice_intersect(const IntMat& a, const IntMat& b);

// {x in Z^n : M x in span(L)}
IntMat preimage_lattice(const IntMat& m, const IntMat& l);

bool lattice_member(const IntMat& a, const std::vector<Int>& x);
// span(b) contained in span(a)?
bool lattice_subset(const IntMat& b, const IntMat& a);
bool lattice_equal(const IntMat& a, const IntMat& b);

// Isomorphism type of span(a)/span(b); requires span(b) inside span(a).
FinAbGroup subquotient(const IntMat& a, const IntMat& b);

// Smallest k > 0 with k*x in span(l), or 0 if x has infinite order mod l.
Int element_order_mod(const std::vector<Int>& x, const IntMat& l);

} // namespace prym
