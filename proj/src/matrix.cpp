#include "hoca/matrix.hpp"

#include <stdexcept>

namespace hoca {

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
        for (const auto& x : r) a_.push_back(x);
    }
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    IntMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const { return *this + (-o); }

IntMat IntMat::operator-() const {
    IntMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

IntMat IntMat::scaled(const Int& c) const {
    IntMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
}

IntMat IntMat::transposed() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Int> r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

IntMat IntMat::col(int j) const {
    IntMat r(rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

void IntMat::set_col(int j, const std::vector<Int>& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::vector<Int> IntMat::col_vec(int j) const {
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
    return r;
}

IntMat IntMat::hcat(const IntMat& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat row mismatch");
    IntMat r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

IntMat IntMat::vcat(const IntMat& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vcat col mismatch");
    IntMat r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

IntMat IntMat::dsum(const IntMat& o) const {
    IntMat r(rows_ + o.rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
    return r;
}

IntMat IntMat::submatrix(int r0, int r1, int c0, int c1) const {
    IntMat r(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) r.at(i - r0, j - c0) = at(i, j);
    return r;
}

namespace {

struct SnfWork {
    IntMat A, U, V;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < A.cols(); ++k) std::swap(A.at(i, k), A.at(j, k));
        for (int k = 0; k < U.cols(); ++k) std::swap(U.at(i, k), U.at(j, k));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < A.rows(); ++k) std::swap(A.at(k, i), A.at(k, j));
        for (int k = 0; k < V.rows(); ++k) std::swap(V.at(k, i), V.at(k, j));
    }
    void add_row(int dst, int src, const Int& c) { // row dst += c * row src
        for (int k = 0; k < A.cols(); ++k) A.at(dst, k) += c * A.at(src, k);
        for (int k = 0; k < U.cols(); ++k) U.at(dst, k) += c * U.at(src, k);
    }
    void add_col(int dst, int src, const Int& c) {
        for (int k = 0; k < A.rows(); ++k) A.at(k, dst) += c * A.at(k, src);
        for (int k = 0; k < V.rows(); ++k) V.at(k, dst) += c * V.at(k, src);
    }
    void negate_row(int i) {
        for (int k = 0; k < A.cols(); ++k) A.at(i, k) = -A.at(i, k);
        for (int k = 0; k < U.cols(); ++k) U.at(i, k) = -U.at(i, k);
    }

    // smallest nonzero |a_ij| in A[t.., t..], ties (row, col); false if none
    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best = 0;
        for (int i = t; i < A.rows(); ++i)
            for (int j = t; j < A.cols(); ++j) {
                const Int& x = A.at(i, j);
                if (x == 0) continue;
                Int ax = hoca::abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

} // namespace

SmithResult smith_normal_form(const IntMat& A0) {
    SnfWork w{A0, IntMat::identity(A0.rows()), IntMat::identity(A0.cols())};
    const int n = std::min(A0.rows(), A0.cols());
    int t = 0;
    while (t < n) {
        int pi = 0, pj = 0;
        if (!w.find_pivot(t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        // Reduce until the pivot divides its whole row and column, then clear.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < w.A.rows(); ++i) {
                if (w.A.at(i, t) == 0) continue;
                Int q = w.A.at(i, t) / w.A.at(t, t);
                w.add_row(i, t, -q);
                if (w.A.at(i, t) != 0) { // remainder smaller than pivot: promote it
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < w.A.cols(); ++j) {
                if (w.A.at(t, j) == 0) continue;
                Int q = w.A.at(t, j) / w.A.at(t, t);
                w.add_col(j, t, -q);
                if (w.A.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
        }
        if (w.A.at(t, t) < 0) w.negate_row(t);
        // Divisibility sweep: pivot must divide every remaining entry.
        bool restart = false;
        for (int i = t + 1; i < w.A.rows() && !restart; ++i)
            for (int j = t + 1; j < w.A.cols() && !restart; ++j)
                if (w.A.at(i, j) % w.A.at(t, t) != 0) {
                    w.add_row(t, i, 1);
                    restart = true;
                }
        if (!restart) ++t;
    }
    SmithResult r{w.U, w.A, w.V, t};
    return r;
}

IntMat kernel_lattice(const IntMat& A) {
    SmithResult s = smith_normal_form(A);
    int free_cols = A.cols() - s.rank;
    IntMat K(A.cols(), free_cols);
    for (int j = 0; j < free_cols; ++j)
        for (int i = 0; i < A.cols(); ++i) K.at(i, j) = s.V.at(i, s.rank + j);
    return K;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& A, const std::vector<Int>& b) {
    if (int(b.size()) != A.rows()) throw std::invalid_argument("solve_integer: size mismatch");
    SmithResult s = smith_normal_form(A);
    std::vector<Int> c = s.U.apply(b);
    std::vector<Int> y(A.cols(), 0);
    for (int i = 0; i < A.rows(); ++i) {
        Int d = (i < std::min(A.rows(), A.cols())) ? s.D.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else if (i < A.cols()) {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    return s.V.apply(y);
}

Int determinant(const IntMat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant: not square");
    int n = A.rows();
    if (n == 0) return 1;
    IntMat m = A;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

} // namespace hoca
