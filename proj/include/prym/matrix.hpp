#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "prym/integers.hpp"

namespace prym {

// Dense matrix over Z, row-major. Zero-dimensional shapes are legal and show
// up routinely (empty sublattices, rank-0 modules), so nothing here may
// assume rows/cols > 0.
class IntMat {
  public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMat identity(int n);
    static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
    static IntMat from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMat diag(const std::vector<Int>& d);
    static IntMat col_vector(const std::vector<Int>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator-() const;
    IntMat operator*(const Int& s) const;
    bool operator==(const IntMat& o) const = default;

    std::vector<Int> col(int j) const;
    std::vector<Int> row(int i) const;
    void set_col(int j, const std::vector<Int>& v);
    IntMat cols_range(int first, int count) const;
    IntMat rows_range(int first, int count) const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    // row(i) += c * row(k), col(j) += c * col(k)
    void add_row(int i, int k, const Int& c);
    void add_col(int j, int k, const Int& c);

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;
    bool is_symmetric() const;

    std::string str() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

IntMat hstack(const IntMat& a, const IntMat& b);
std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& v);
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

} // namespace prym
