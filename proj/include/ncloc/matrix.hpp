#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncloc/errors.hpp"
#include "ncloc/modint.hpp"
#include "ncloc/rational.hpp"
#include "ncloc/upoly.hpp"

namespace ncloc {

// Dense rectangular matrix over an exact ring T, with ordered row/column
// labels. Submatrix extraction preserves label order.
template <class T>
class matrix {
  public:
    matrix() : rows_(0), cols_(0) {}
    matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {
        default_labels();
    }
    matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw shape_error("ragged matrix literal");
            for (const auto& v : row) e_.push_back(v);
        }
        default_labels();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<int>& row_labels() const { return rlab_; }
    const std::vector<int>& col_labels() const { return clab_; }
    void set_labels(std::vector<int> r, std::vector<int> c) {
        if (r.size() != rows_ || c.size() != cols_) throw shape_error("label count mismatch");
        rlab_ = std::move(r);
        clab_ = std::move(c);
    }

    std::size_t row_pos(int label) const { return pos(rlab_, label, "row"); }
    std::size_t col_pos(int label) const { return pos(clab_, label, "column"); }
    const T& entry(int rlabel, int clabel) const { return at(row_pos(rlabel), col_pos(clabel)); }

    // A^{I'}_{J'}: keep the listed labels, in their stored order
    matrix submatrix(const std::vector<int>& keep_rows, const std::vector<int>& keep_cols) const {
        matrix s;
        s.rows_ = keep_rows.size();
        s.cols_ = keep_cols.size();
        s.e_.reserve(s.rows_ * s.cols_);
        std::vector<std::size_t> ri, ci;
        for (int lbl : rlab_)
            if (std::find(keep_rows.begin(), keep_rows.end(), lbl) != keep_rows.end())
                ri.push_back(row_pos(lbl));
        for (int lbl : clab_)
            if (std::find(keep_cols.begin(), keep_cols.end(), lbl) != keep_cols.end())
                ci.push_back(col_pos(lbl));
        if (ri.size() != keep_rows.size() || ci.size() != keep_cols.size())
            throw shape_error("submatrix label not present");
        for (auto i : ri)
            for (auto j : ci) s.e_.push_back(at(i, j));
        for (auto i : ri) s.rlab_.push_back(rlab_[i]);
        for (auto j : ci) s.clab_.push_back(clab_[j]);
        return s;
    }

    matrix drop(int row_label, int col_label) const {
        std::vector<int> r, c;
        for (int lbl : rlab_)
            if (lbl != row_label) r.push_back(lbl);
        for (int lbl : clab_)
            if (lbl != col_label) c.push_back(lbl);
        return submatrix(r, c);
    }

    matrix transpose() const {
        matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        t.rlab_ = clab_;
        t.clab_ = rlab_;
        return t;
    }

    matrix replace_col(int col_label, const std::vector<T>& v) const {
        if (v.size() != rows_) throw shape_error("column length mismatch");
        matrix r(*this);
        std::size_t j = col_pos(col_label);
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = v[i];
        return r;
    }

    friend matrix operator+(const matrix& a, const matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_error("matrix add shape");
        matrix r(a);
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] + b.e_[k];
        return r;
    }
    friend matrix operator-(const matrix& a, const matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_error("matrix sub shape");
        matrix r(a);
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] - b.e_[k];
        return r;
    }
    friend matrix operator*(const matrix& a, const matrix& b) {
        if (a.cols_ != b.rows_) throw shape_error("matrix mul shape");
        if (a.rows_ == 0 || b.cols_ == 0 || a.cols_ == 0)
            throw shape_error("matrix mul on empty operand");
        matrix r(a.rows_, b.cols_, zero_entry(a.e_.empty() ? b.e_[0] : a.e_[0]));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        r.rlab_ = a.rlab_;
        r.clab_ = b.clab_;
        return r;
    }
    friend bool operator==(const matrix& a, const matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const matrix& a, const matrix& b) { return !(a == b); }

  private:
    static T zero_entry(const T& exemplar);  // defined via ring_ops below

    void default_labels() {
        rlab_.resize(rows_);
        clab_.resize(cols_);
        for (std::size_t i = 0; i < rows_; ++i) rlab_[i] = static_cast<int>(i) + 1;
        for (std::size_t j = 0; j < cols_; ++j) clab_[j] = static_cast<int>(j) + 1;
    }
    static std::size_t pos(const std::vector<int>& lab, int label, const char* kind) {
        auto it = std::find(lab.begin(), lab.end(), label);
        if (it == lab.end())
            throw shape_error(std::string("unknown ") + kind + " label " + std::to_string(label));
        return static_cast<std::size_t>(it - lab.begin());
    }

    std::size_t rows_, cols_;
    std::vector<T> e_;
    std::vector<int> rlab_, clab_;
};

// ring_ops: the little protocol matrix code needs from its entry ring.
// zero/one take an exemplar so parametrized rings (Z/n, k x k matrices)
// can produce constants of the right shape.
template <class T>
struct ring_ops;

template <>
struct ring_ops<rat> {
    static rat zero_like(const rat&) { return rat(0); }
    static rat one_like(const rat&) { return rat(1); }
    static bool is_zero(const rat& x) { return x.is_zero(); }
    static std::optional<rat> try_invert(const rat& x) { return try_inv(x); }
    static std::string id(const rat&) { return "Q"; }
};

template <>
struct ring_ops<modint> {
    static modint zero_like(const modint& x) { return modint(0, x.modulus()); }
    static modint one_like(const modint& x) { return modint(1, x.modulus()); }
    static bool is_zero(const modint& x) { return x.is_zero(); }
    static std::optional<modint> try_invert(const modint& x) { return try_inv(x); }
    static std::string id(const modint& x) { return x.ring_id(); }
};

template <>
struct ring_ops<ratfunc> {
    static ratfunc zero_like(const ratfunc&) { return ratfunc(); }
    static ratfunc one_like(const ratfunc&) { return ratfunc(rat(1)); }
    static bool is_zero(const ratfunc& x) { return x.is_zero(); }
    static std::optional<ratfunc> try_invert(const ratfunc& x) { return try_inv(x); }
    static std::string id(const ratfunc&) { return "Q(x)"; }
};

template <class T>
T matrix<T>::zero_entry(const T& exemplar) {
    return ring_ops<T>::zero_like(exemplar);
}

template <class T>
matrix<T> identity_like(std::size_t n, const T& exemplar) {
    matrix<T> m(n, n, ring_ops<T>::zero_like(exemplar));
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring_ops<T>::one_like(exemplar);
    return m;
}

template <class T>
bool is_zero_matrix(const matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!ring_ops<T>::is_zero(m.at(i, j))) return false;
    return true;
}

// Gauss-Jordan over a field-like entry ring; returns nullopt when singular.
// Exact arithmetic only: singularity is decided by failing to find an
// invertible pivot, never by magnitude thresholds.
template <class T>
std::optional<matrix<T>> try_invert(const matrix<T>& a) {
    if (!a.is_square()) throw shape_error("inverse of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) throw shape_error("inverse of empty matrix");
    const T& ex = a.at(0, 0);
    matrix<T> m(a);
    matrix<T> inv = identity_like(n, ex);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        std::optional<T> pinv;
        for (std::size_t r = col; r < n; ++r) {
            pinv = ring_ops<T>::try_invert(m.at(r, col));
            if (pinv) {
                piv = r;
                break;
            }
        }
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        T f = *pinv;
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = f * m.at(col, j);
            inv.at(col, j) = f * inv.at(col, j);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || ring_ops<T>::is_zero(m.at(r, col))) continue;
            T g = m.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(r, j) = m.at(r, j) - g * m.at(col, j);
                inv.at(r, j) = inv.at(r, j) - g * inv.at(col, j);
            }
        }
    }
    inv.set_labels(a.col_labels(), a.row_labels());
    return inv;
}

template <class T>
matrix<T> invert(const matrix<T>& a) {
    auto r = try_invert(a);
    if (!r) throw not_invertible("singular matrix");
    return *r;
}

// determinant over a commutative field, by elimination with row swaps
template <class T>
T det(const matrix<T>& a) {
    if (!a.is_square()) throw shape_error("determinant of non-square matrix");
    std::size_t n = a.rows();
    matrix<T> m(a);
    const T& ex = a.at(0, 0);
    T d = ring_ops<T>::one_like(ex);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (!ring_ops<T>::is_zero(m.at(r, col))) {
                piv = r;
                break;
            }
        if (piv == n) return ring_ops<T>::zero_like(ex);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = ring_ops<T>::zero_like(ex) - d;
        }
        T p = m.at(col, col);
        d = d * p;
        T pinv = *ring_ops<T>::try_invert(p);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (ring_ops<T>::is_zero(m.at(r, col))) continue;
            T g = m.at(r, col) * pinv;
            for (std::size_t j = col; j < n; ++j) m.at(r, j) = m.at(r, j) - g * m.at(col, j);
        }
    }
    return d;
}

// solve A x = b over a field-like entry ring
template <class T>
std::optional<std::vector<T>> try_solve(const matrix<T>& a, const std::vector<T>& b) {
    auto ai = try_invert(a);
    if (!ai) return std::nullopt;
    std::vector<T> x(a.rows(), ring_ops<T>::zero_like(a.at(0, 0)));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) x[i] = x[i] + ai->at(i, j) * b[j];
    return x;
}

// ---- rational matrices as a (noncommutative) entry ring -------------------

using qmat = matrix<rat>;

template <>
struct ring_ops<qmat> {
    static qmat zero_like(const qmat& x) {
        check_entry(x);
        return qmat(x.rows(), x.rows(), rat(0));
    }
    static qmat one_like(const qmat& x) {
        check_entry(x);
        return identity_like(x.rows(), rat(0));
    }
    static bool is_zero(const qmat& x) { return is_zero_matrix(x); }
    static std::optional<qmat> try_invert(const qmat& x) { return ncloc::try_invert(x); }
    static std::string id(const qmat& x) { return "M_" + std::to_string(x.rows()) + "(Q)"; }
    static void check_entry(const qmat& x) {
        if (!x.is_square() || x.rows() == 0)
            throw mixed_rings("matrix-ring element must be square and nonempty");
    }
};

// flatten a matrix of k x k blocks into one rational matrix
inline qmat flatten(const matrix<qmat>& m) {
    if (m.rows() == 0 || m.cols() == 0) throw shape_error("flatten of empty matrix");
    std::size_t k = m.at(0, 0).rows();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j).rows() != k || m.at(i, j).cols() != k)
                throw mixed_rings("blocks of unequal size");
    qmat f(m.rows() * k, m.cols() * k, rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t bi = 0; bi < k; ++bi)
                for (std::size_t bj = 0; bj < k; ++bj)
                    f.at(i * k + bi, j * k + bj) = m.at(i, j).at(bi, bj);
    return f;
}

inline matrix<qmat> unflatten(const qmat& f, std::size_t k, const matrix<qmat>& like) {
    matrix<qmat> m(f.rows() / k, f.cols() / k, qmat(k, k, rat(0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t bi = 0; bi < k; ++bi)
                for (std::size_t bj = 0; bj < k; ++bj)
                    m.at(i, j).at(bi, bj) = f.at(i * k + bi, j * k + bj);
    m.set_labels(like.row_labels(), like.col_labels());
    return m;
}

// Inverse of a matrix over the matrix ring M_k(Q). Entrywise elimination can
// stall on non-invertible blocks even when the matrix is invertible, so the
// inverse is computed on the flattened rational matrix and read back in
// blocks.
inline std::optional<matrix<qmat>> try_invert_blockwise(const matrix<qmat>& a) {
    if (!a.is_square()) throw shape_error("inverse of non-square matrix");
    std::size_t k = a.at(0, 0).rows();
    auto fi = try_invert(flatten(a));
    if (!fi) return std::nullopt;
    auto r = unflatten(*fi, k, a);
    r.set_labels(a.col_labels(), a.row_labels());
    return r;
}

// entry_inverter<T>: how quasideterminant code inverts a deleted submatrix
template <class T>
struct entry_inverter {
    static std::optional<matrix<T>> run(const matrix<T>& m) { return try_invert(m); }
};

template <>
struct entry_inverter<qmat> {
    static std::optional<matrix<qmat>> run(const matrix<qmat>& m) {
        return try_invert_blockwise(m);
    }
};

// ring_core [OP] inv: unified element inverse with NotInvertible error
template <class T>
T inv(const T& x) {
    auto r = ring_ops<T>::try_invert(x);
    if (!r) throw not_invertible("element is not invertible in " + ring_ops<T>::id(x));
    return *r;
}

// 2x2 block inversion at split k (top-left block k x k): inverts in stages
// and also returns the assembled flat inverse. Requires bottom-right block
// and its Schur complement invertible.
template <class T>
matrix<T> block_inverse(const matrix<T>& a, std::size_t k) {
    if (!a.is_square()) throw shape_error("block inverse of non-square matrix");
    std::size_t n = a.rows();
    if (k == 0 || k >= n) throw shape_error("split must be interior");
    auto rl = a.row_labels();
    auto cl = a.col_labels();
    std::vector<int> r1(rl.begin(), rl.begin() + k), r2(rl.begin() + k, rl.end());
    std::vector<int> c1(cl.begin(), cl.begin() + k), c2(cl.begin() + k, cl.end());
    matrix<T> p = a.submatrix(r1, c1), q = a.submatrix(r1, c2);
    matrix<T> r = a.submatrix(r2, c1), s = a.submatrix(r2, c2);
    auto sinv = entry_inverter<T>::run(s);
    if (!sinv) throw not_invertible("bottom-right block is singular");
    matrix<T> schur = p - q * (*sinv) * r;
    auto ainv = entry_inverter<T>::run(schur);
    if (!ainv) throw not_invertible("Schur complement of the split is singular");
    matrix<T> out(n, n, ring_ops<T>::zero_like(a.at(0, 0)));
    matrix<T> tl = *ainv;
    matrix<T> tr = (matrix<T>(k, n - k, ring_ops<T>::zero_like(a.at(0, 0))) - tl * q * (*sinv));
    matrix<T> bl = (matrix<T>(n - k, k, ring_ops<T>::zero_like(a.at(0, 0))) - (*sinv) * r * tl);
    matrix<T> br = *sinv + (*sinv) * r * tl * q * (*sinv);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out.at(i, j) = tl.at(i, j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n - k; ++j) out.at(i, j + k) = tr.at(i, j);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < k; ++j) out.at(i + k, j) = bl.at(i, j);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n - k; ++j) out.at(i + k, j + k) = br.at(i, j);
    out.set_labels(cl, rl);
    return out;
}

}  // namespace ncloc
