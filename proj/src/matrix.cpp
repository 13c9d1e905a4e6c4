#include "prym/matrix.hpp"

#include <sstream>

namespace prym {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IntMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::logic_error("ragged initializer");
        int j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMat IntMat::diag(const std::vector<Int>& d) {
    int n = static_cast<int>(d.size());
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
}

IntMat IntMat::col_vector(const std::vector<Int>& v) {
    IntMat m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m(i, 0) = v[i];
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix product shape mismatch");
    IntMat p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) p(i, j) += aik * o(k, j);
        }
    return p;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix sum shape mismatch");
    IntMat s = *this;
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
    return s;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix diff shape mismatch");
    IntMat s = *this;
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
    return s;
}

IntMat IntMat::operator-() const {
    IntMat s = *this;
    for (auto& v : s.a_) v = -v;
    return s;
}

IntMat IntMat::operator*(const Int& s) const {
    IntMat m = *this;
    for (auto& v : m.a_) v *= s;
    return m;
}

std::vector<Int> IntMat::col(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Int> IntMat::row(int i) const {
    std::vector<Int> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void IntMat::set_col(int j, const std::vector<Int>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMat IntMat::cols_range(int first, int count) const {
    IntMat m(rows_, count);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
}

IntMat IntMat::rows_range(int first, int count) const {
    IntMat m(count, cols_);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
    return m;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMat::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMat::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

void IntMat::add_row(int i, int k, const Int& c) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) += c * (*this)(k, j);
}

void IntMat::add_col(int j, int k, const Int& c) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) += c * (*this)(i, k);
}

bool IntMat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool IntMat::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMat::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << (*this)(i, j).str();
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

IntMat hstack(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) throw std::logic_error("hstack shape mismatch");
    IntMat m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& v) {
    if (a.cols() != static_cast<int>(v.size())) throw std::logic_error("mat_vec shape mismatch");
    std::vector<Int> out(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Int s = 0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw std::logic_error("dot shape mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace prym
