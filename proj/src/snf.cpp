#include "prym/snf.hpp"

namespace prym {

namespace {

// Track U (rows) or V (cols) together with its inverse; every elementary
// operation applied to D is mirrored here with its inverse op.
struct OpLog {
    IntMat fwd, inv;
};

} // namespace

SmithForm smith_normal_form(const IntMat& a) {
    const int m = a.rows();
    const int n = a.cols();
    SmithForm s;
    s.D = a;
    s.U = IntMat::identity(m);
    s.Uinv = IntMat::identity(m);
    s.V = IntMat::identity(n);
    s.Vinv = IntMat::identity(n);
    IntMat& d = s.D;

    auto row_swap = [&](int i, int j) {
        d.swap_rows(i, j);
        s.U.swap_rows(i, j);
        s.Uinv.swap_cols(i, j);
    };
    auto col_swap = [&](int i, int j) {
        d.swap_cols(i, j);
        s.V.swap_cols(i, j);
        s.Vinv.swap_rows(i, j);
    };
    auto row_add = [&](int i, int k, const Int& c) { // row i += c*row k
        d.add_row(i, k, c);
        s.U.add_row(i, k, c);
        s.Uinv.add_col(k, i, -c);
    };
    auto col_add = [&](int j, int k, const Int& c) { // col j += c*col k
        d.add_col(j, k, c);
        s.V.add_col(j, k, c);
        s.Vinv.add_row(k, j, -c);
    };
    auto row_negate = [&](int i) {
        d.negate_row(i);
        s.U.negate_row(i);
        s.Uinv.negate_col(i);
    };

    // Nearest-integer quotient; remainders stay at most half the divisor,
    // which keeps intermediate entries from exploding.
    auto round_div = [](const Int& a, const Int& b) {
        Int q = a / b;
        Int r = a - q * b;
        if (r != 0 && 2 * abs_val(r) > abs_val(b)) q += (a < 0) == (b < 0) ? 1 : -1;
        return q;
    };

    int t = 0;
    const int limit = std::min(m, n);
    while (t < limit) {
        for (;;) {
            // Pivot choice: smallest nonzero magnitude over the whole trailing
            // block, ties broken by lowest (row, col); re-selected after every
            // pass so entries stay small and runs are reproducible.
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Int& v = d(i, j);
                    if (v == 0) continue;
                    if (pi < 0 || abs_val(v) < abs_val(d(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                t = limit; // trailing block is zero
                break;
            }
            row_swap(t, pi);
            col_swap(t, pj);

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                Int q = round_div(d(i, t), d(t, t));
                if (q != 0) row_add(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Int q = round_div(d(t, j), d(t, t));
                if (q != 0) col_add(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue; // smaller pivot now exists; re-select

            // pivot must divide the remaining block for the chain d1|d2|...
            bool divides = true;
            for (int i = t + 1; i < m && divides; ++i)
                for (int j = t + 1; j < n && divides; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_add(t, i, 1);
                        divides = false;
                    }
            if (!divides) continue;
            if (d(t, t) < 0) row_negate(t);
            ++t;
            break;
        }
    }
    s.rank = 0;
    for (int i = 0; i < limit; ++i)
        if (d(i, i) != 0) ++s.rank;
    return s;
}

namespace {

// Row-style Hermite form of the row span of A: echelon rows, positive pivots,
// entries above a pivot reduced into [0, pivot). Returns only nonzero rows.
IntMat hnf_rows(IntMat a) {
    const int m = a.rows();
    const int n = a.cols();
    auto round_div = [](const Int& x, const Int& y) {
        Int q = x / y;
        Int r = x - q * y;
        if (r != 0 && 2 * abs_val(r) > abs_val(y)) q += (x < 0) == (y < 0) ? 1 : -1;
        return q;
    };
    int t = 0;
    for (int col = 0; col < n && t < m; ++col) {
        // gcd elimination within this column, rows >= t
        for (;;) {
            int best = -1;
            for (int i = t; i < m; ++i)
                if (a(i, col) != 0 && (best < 0 || abs_val(a(i, col)) < abs_val(a(best, col))))
                    best = i;
            if (best < 0) break;
            a.swap_rows(t, best);
            bool any = false;
            for (int i = t + 1; i < m; ++i) {
                if (a(i, col) == 0) continue;
                Int q = round_div(a(i, col), a(t, col));
                a.add_row(i, t, -q);
                if (a(i, col) != 0) any = true;
            }
            if (!any) break;
        }
        if (t < m && a(t, col) != 0) {
            if (a(t, col) < 0) a.negate_row(t);
            for (int i = 0; i < t; ++i) {
                Int q = fdiv(a(i, col), a(t, col));
                if (q != 0) a.add_row(i, t, -q);
            }
            ++t;
        }
    }
    return a.rows_range(0, t);
}

} // namespace

IntMat hnf_cols(const IntMat& a) { return hnf_rows(a.transpose()).transpose(); }

IntMat kernel_basis(const IntMat& a) {
    if (a.rows() == 0) return IntMat::identity(a.cols());
    SmithForm s = smith_normal_form(a);
    // A * (V e_j) = Uinv * D e_j, zero exactly when the diagonal entry is 0.
    return hnf_cols(s.V.cols_range(s.rank, a.cols() - s.rank));
}

FinAbGroup cokernel_structure(const IntMat& a) {
    if (a.rows() == 0) return FinAbGroup::trivial();
    SmithForm s = smith_normal_form(a);
    std::vector<Int> divisors;
    for (int i = 0; i < s.rank; ++i) divisors.push_back(s.D(i, i));
    return FinAbGroup::normalized(a.rows() - s.rank, std::move(divisors));
}

IntMat saturate(const IntMat& b) {
    SmithForm s = smith_normal_form(b);
    if (s.rank != b.cols()) throw InputError("saturate: columns are not linearly independent");
    // colspan(B) = colspan(Uinv * D), so the saturation is spanned by the
    // first rank columns of Uinv.
    return hnf_cols(s.Uinv.cols_range(0, s.rank));
}

IntMat complete_to_basis(const IntMat& p) {
    SmithForm s = smith_normal_form(p);
    if (s.rank != p.cols()) throw InputError("complete_to_basis: dependent columns");
    for (int i = 0; i < s.rank; ++i)
        if (s.D(i, i) != 1) throw InputError("complete_to_basis: lattice is not saturated");
    return s.Uinv.cols_range(s.rank, p.rows() - s.rank);
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
    SmithForm s = smith_normal_form(a);
    std::vector<Int> c = mat_vec(s.U, b);
    std::vector<Int> y(a.cols(), Int(0));
    for (int i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (c[i] % s.D(i, i) != 0) return std::nullopt;
            y[i] = c[i] / s.D(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(s.V, y);
}

std::optional<IntMat> solve_matrix(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) throw std::logic_error("solve_matrix shape mismatch");
    SmithForm s = smith_normal_form(a);
    IntMat x(a.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        std::vector<Int> c = mat_vec(s.U, b.col(j));
        std::vector<Int> y(a.cols(), Int(0));
        for (int i = 0; i < a.rows(); ++i) {
            if (i < s.rank) {
                if (c[i] % s.D(i, i) != 0) return std::nullopt;
                y[i] = c[i] / s.D(i, i);
            } else if (c[i] != 0) {
                return std::nullopt;
            }
        }
        x.set_col(j, mat_vec(s.V, y));
    }
    return x;
}

int rank_of(const IntMat& a) { return smith_normal_form(a).rank; }

Int det(const IntMat& a) {
    if (!a.is_square()) throw std::logic_error("det: matrix not square");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMat w = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            w.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

IntMat inverse_unimodular(const IntMat& u) {
    SmithForm s = smith_normal_form(u);
    if (!s.D.is_identity()) throw InputError("inverse_unimodular: matrix is not unimodular");
    return s.V * s.U; // U*M*V = I  =>  M^-1 = V*U
}

} // namespace prym
