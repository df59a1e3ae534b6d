#pragma once

#include <vector>

#include "chered/cyclotomic.hpp"

namespace chered {

// Dense matrix over Q(zeta).  Row-major; operator matrices act on column
// vectors.  All elimination is fraction-preserving exact arithmetic with
// pivoting on the first nonzero entry in deterministic column order, so
// identical inputs produce identical echelon forms.
class CycMat {
  public:
    CycMat() : rows_(0), cols_(0) {}
    CycMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CycMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cyc& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Cyc& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Cyc> row(int r) const;
    void set_row(int r, const std::vector<Cyc>& v);

    CycMat operator*(const CycMat& o) const;
    CycMat operator+(const CycMat& o) const;
    CycMat operator-(const CycMat& o) const;
    CycMat scaled(const Cyc& s) const;
    CycMat transposed() const;
    bool operator==(const CycMat& o) const;
    bool is_zero() const;

    // Stack `o` below this matrix (same column count).
    CycMat stacked(const CycMat& o) const;

    Cyc trace() const;

  private:
    int rows_, cols_;
    std::vector<Cyc> a_;
};

std::vector<Cyc> mat_vec(const CycMat& m, const std::vector<Cyc>& v);

int rank(const CycMat& m);

// Rows of the result form a basis of { x : m x = 0 }.
CycMat kernel_basis(const CycMat& m);

// Incremental row-space basis in reduced echelon form.  insert() returns
// true when the vector enlarged the span.  coords() expresses an in-span
// vector in the current basis rows (throws if the vector is outside).
class EchelonSpan {
  public:
    explicit EchelonSpan(int ambient_dim) : dim_(ambient_dim) {}

    bool insert(std::vector<Cyc> v);
    bool contains(std::vector<Cyc> v) const;
    std::vector<Cyc> coords(std::vector<Cyc> v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return dim_; }
    const std::vector<std::vector<Cyc>>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

  private:
    // Reduces v against the current rows; returns the pivot column of the
    // residual or -1 when it reduces to zero.
    int reduce(std::vector<Cyc>& v, std::vector<Cyc>* coeffs) const;

    int dim_;
    std::vector<std::vector<Cyc>> rows_;
    std::vector<int> pivots_;
};

}  // namespace chered
