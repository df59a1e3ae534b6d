#include "chered/linalg.hpp"

#include <stdexcept>

namespace chered {

CycMat CycMat::identity(int n) {
    CycMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
    return m;
}

std::vector<Cyc> CycMat::row(int r) const {
    std::vector<Cyc> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void CycMat::set_row(int r, const std::vector<Cyc>& v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("set_row: size mismatch");
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

CycMat CycMat::operator*(const CycMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("CycMat::mul: shape mismatch");
    CycMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Cyc& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Cyc& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    return r;
}

CycMat CycMat::operator+(const CycMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CycMat::add: shape");
    CycMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

CycMat CycMat::operator-(const CycMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CycMat::sub: shape");
    CycMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

CycMat CycMat::scaled(const Cyc& s) const {
    CycMat r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

CycMat CycMat::transposed() const {
    CycMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool CycMat::operator==(const CycMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool CycMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

CycMat CycMat::stacked(const CycMat& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("CycMat::stacked: column mismatch");
    CycMat r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Cyc CycMat::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("CycMat::trace: not square");
    Cyc t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::vector<Cyc> mat_vec(const CycMat& m, const std::vector<Cyc>& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("mat_vec: shape");
    std::vector<Cyc> r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += m.at(i, j) * v[j];
        }
    return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref_inplace(CycMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        const Cyc inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Cyc f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const CycMat& m) {
    CycMat w = m;
    return static_cast<int>(rref_inplace(w).size());
}

CycMat kernel_basis(const CycMat& m) {
    CycMat w = m;
    const std::vector<int> pivots = rref_inplace(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;

    const int k = m.cols() - static_cast<int>(pivots.size());
    CycMat ker(k, m.cols());
    int kr = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        ker.at(kr, c) = Cyc(1);
        for (size_t pi = 0; pi < pivots.size(); ++pi) ker.at(kr, pivots[pi]) = -w.at(static_cast<int>(pi), c);
        ++kr;
    }
    return ker;
}

int EchelonSpan::reduce(std::vector<Cyc>& v, std::vector<Cyc>* coeffs) const {
    if (coeffs) coeffs->assign(rows_.size(), Cyc());
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Cyc c = v[pivots_[i]];
        if (c.is_zero()) continue;
        if (coeffs) (*coeffs)[i] = c;
        for (int j = 0; j < dim_; ++j)
            if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
    }
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) return j;
    return -1;
}

bool EchelonSpan::insert(std::vector<Cyc> v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("EchelonSpan::insert: size");
    const int p = reduce(v, nullptr);
    if (p < 0) return false;
    const Cyc inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    // Back-substitute into existing rows to keep the basis reduced.
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Cyc c = rows_[i][p];
        if (c.is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) rows_[i][j] -= c * v[j];
    }
    // Insert keeping pivot columns sorted.
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

bool EchelonSpan::contains(std::vector<Cyc> v) const { return reduce(v, nullptr) < 0; }

std::vector<Cyc> EchelonSpan::coords(std::vector<Cyc> v) const {
    std::vector<Cyc> c;
    if (reduce(v, &c) >= 0) throw std::domain_error("EchelonSpan::coords: vector outside span");
    return c;
}

}  // namespace chered
