#include "latmid/fpmat.hpp"

#include "latmid/dvr.hpp"

#include <sstream>

namespace latmid {

namespace {
inline long mulmod(long a, long b, long p) {
    return static_cast<long>(static_cast<unsigned long long>(a) * static_cast<unsigned long long>(b) %
                             static_cast<unsigned long long>(p));
}
} // namespace

FpMat::FpMat(long p, size_t rows, size_t cols) : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (p < 2) throw InvalidArgument("FpMat: modulus must be >= 2");
}

FpMat FpMat::identity(long p, size_t n) {
    FpMat m(p, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMat FpMat::from_rows(long p, const std::vector<std::vector<long>>& rows) {
    size_t r = rows.size(), c = r == 0 ? 0 : rows[0].size();
    FpMat m(p, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("from_rows: ragged row");
        for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void FpMat::check_same(const FpMat& o) const {
    if (p_ != o.p_) throw InvalidArgument("FpMat: mixed moduli");
}

FpMat FpMat::operator*(const FpMat& o) const {
    check_same(o);
    if (cols_ != o.rows_) throw DimensionMismatch("FpMat product");
    FpMat r(p_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            long x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.a_[i * r.cols_ + j] = (r.a_[i * r.cols_ + j] + mulmod(x, o.at(k, j), p_)) % p_;
        }
    return r;
}

FpMat FpMat::operator+(const FpMat& o) const {
    check_same(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("FpMat sum");
    FpMat r(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
    return r;
}

FpMat FpMat::operator-(const FpMat& o) const {
    check_same(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("FpMat difference");
    FpMat r(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ((a_[i] - o.a_[i]) % p_ + p_) % p_;
    return r;
}

FpMat FpMat::scaled(long c) const {
    c = ((c % p_) + p_) % p_;
    FpMat r(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = mulmod(a_[i], c, p_);
    return r;
}

FpMat FpMat::transpose() const {
    FpMat t(p_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool FpMat::is_zero() const {
    for (long x : a_)
        if (x != 0) return false;
    return true;
}

long FpMat::det() const {
    if (rows_ != cols_) throw DimensionMismatch("det: not square");
    FpMat m = *this;
    long d = 1;
    size_t n = rows_;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m.at(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (size_t j = k; j < n; ++j) {
                long t = m.at(piv, j);
                m.set(piv, j, m.at(k, j));
                m.set(k, j, t);
            }
            d = p_ - d;
        }
        d = mulmod(d, m.at(k, k), p_);
        long inv = mod_inv(m.at(k, k), p_);
        for (size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            long f = mulmod(m.at(i, k), inv, p_);
            for (size_t j = k; j < n; ++j) m.set(i, j, m.at(i, j) - mulmod(f, m.at(k, j), p_));
        }
    }
    return d % p_;
}

size_t FpMat::rank() const {
    FpMat m = *this;
    size_t r = 0;
    for (size_t col = 0; col < cols_ && r < rows_; ++col) {
        size_t piv = r;
        while (piv < rows_ && m.at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (size_t j = 0; j < cols_; ++j) {
                long t = m.at(piv, j);
                m.set(piv, j, m.at(r, j));
                m.set(r, j, t);
            }
        long inv = mod_inv(m.at(r, col), p_);
        for (size_t i = r + 1; i < rows_; ++i) {
            if (m.at(i, col) == 0) continue;
            long f = mulmod(m.at(i, col), inv, p_);
            for (size_t j = col; j < cols_; ++j) m.set(i, j, m.at(i, j) - mulmod(f, m.at(r, j), p_));
        }
        ++r;
    }
    return r;
}

FpMat FpMat::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse: not square");
    size_t n = rows_;
    FpMat m = *this, inv = identity(p_, n);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m.at(piv, k) == 0) ++piv;
        if (piv == n) throw SingularMatrix("FpMat::inverse: singular");
        if (piv != k)
            for (size_t j = 0; j < n; ++j) {
                long t = m.at(piv, j);
                m.set(piv, j, m.at(k, j));
                m.set(k, j, t);
                t = inv.at(piv, j);
                inv.set(piv, j, inv.at(k, j));
                inv.set(k, j, t);
            }
        long f = mod_inv(m.at(k, k), p_);
        for (size_t j = 0; j < n; ++j) {
            m.set(k, j, mulmod(m.at(k, j), f, p_));
            inv.set(k, j, mulmod(inv.at(k, j), f, p_));
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            long g = m.at(i, k);
            for (size_t j = 0; j < n; ++j) {
                m.set(i, j, m.at(i, j) - mulmod(g, m.at(k, j), p_));
                inv.set(i, j, inv.at(i, j) - mulmod(g, inv.at(k, j), p_));
            }
        }
    }
    return inv;
}

FpMat FpMat::nullspace() const {
    // row-reduce, then read a basis from the free columns
    FpMat m = *this;
    std::vector<long> pivot_col_of_row;
    std::vector<long> pivot_row_of_col(cols_, -1);
    size_t r = 0;
    for (size_t col = 0; col < cols_ && r < rows_; ++col) {
        size_t piv = r;
        while (piv < rows_ && m.at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (size_t j = 0; j < cols_; ++j) {
                long t = m.at(piv, j);
                m.set(piv, j, m.at(r, j));
                m.set(r, j, t);
            }
        long f = mod_inv(m.at(r, col), p_);
        for (size_t j = 0; j < cols_; ++j) m.set(r, j, mulmod(m.at(r, j), f, p_));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            long g = m.at(i, col);
            for (size_t j = 0; j < cols_; ++j) m.set(i, j, m.at(i, j) - mulmod(g, m.at(r, j), p_));
        }
        pivot_row_of_col[col] = static_cast<long>(r);
        ++r;
    }
    std::vector<size_t> free_cols;
    for (size_t j = 0; j < cols_; ++j)
        if (pivot_row_of_col[j] < 0) free_cols.push_back(j);
    FpMat ker(p_, cols_, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        ker.set(fc, k, 1);
        for (size_t j = 0; j < cols_; ++j) {
            long pr = pivot_row_of_col[j];
            if (pr >= 0) ker.set(j, k, -m.at(static_cast<size_t>(pr), fc));
        }
    }
    return ker;
}

FpMat FpMat::solve(const FpMat& rhs) const {
    check_same(rhs);
    if (rhs.rows_ != rows_) throw DimensionMismatch("solve: rhs rows");
    FpMat m = hcat(*this, rhs);
    size_t r = 0;
    std::vector<long> pivot_row_of_col(cols_, -1);
    for (size_t col = 0; col < cols_ && r < rows_; ++col) {
        size_t piv = r;
        while (piv < rows_ && m.at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols_; ++j) {
                long t = m.at(piv, j);
                m.set(piv, j, m.at(r, j));
                m.set(r, j, t);
            }
        long f = mod_inv(m.at(r, col), p_);
        for (size_t j = 0; j < m.cols_; ++j) m.set(r, j, mulmod(m.at(r, j), f, p_));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            long g = m.at(i, col);
            for (size_t j = 0; j < m.cols_; ++j) m.set(i, j, m.at(i, j) - mulmod(g, m.at(r, j), p_));
        }
        pivot_row_of_col[col] = static_cast<long>(r);
        ++r;
    }
    for (size_t j = 0; j < cols_; ++j)
        if (pivot_row_of_col[j] < 0) throw SingularMatrix("solve: coefficient matrix not of full column rank");
    // consistency: rows below rank must be zero on the rhs part
    for (size_t i = r; i < rows_; ++i)
        for (size_t j = cols_; j < m.cols_; ++j)
            if (m.at(i, j) != 0) throw SingularMatrix("solve: inconsistent system");
    FpMat x(p_, cols_, rhs.cols_);
    for (size_t j = 0; j < cols_; ++j) {
        size_t pr = static_cast<size_t>(pivot_row_of_col[j]);
        for (size_t k = 0; k < rhs.cols_; ++k) x.set(j, k, m.at(pr, cols_ + k));
    }
    return x;
}

FpMat FpMat::hcat(const FpMat& a, const FpMat& b) {
    a.check_same(b);
    if (a.rows_ != b.rows_) throw DimensionMismatch("hcat");
    FpMat r(a.p_, a.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
        for (size_t j = 0; j < b.cols_; ++j) r.set(i, a.cols_ + j, b.at(i, j));
    }
    return r;
}

FpMat FpMat::vcat(const FpMat& a, const FpMat& b) {
    a.check_same(b);
    if (a.cols_ != b.cols_) throw DimensionMismatch("vcat");
    FpMat r(a.p_, a.rows_ + b.rows_, a.cols_);
    for (size_t j = 0; j < a.cols_; ++j) {
        for (size_t i = 0; i < a.rows_; ++i) r.set(i, j, a.at(i, j));
        for (size_t i = 0; i < b.rows_; ++i) r.set(a.rows_ + i, j, b.at(i, j));
    }
    return r;
}

FpMat FpMat::block_diag(const FpMat& a, const FpMat& b) {
    long p = a.rows_ > 0 || a.p_ >= 2 ? a.p_ : b.p_;
    if (a.p_ >= 2 && b.p_ >= 2 && a.p_ != b.p_) throw InvalidArgument("block_diag: mixed moduli");
    if (p < 2) p = b.p_;
    FpMat r(p, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
    for (size_t i = 0; i < b.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) r.set(a.rows_ + i, a.cols_ + j, b.at(i, j));
    return r;
}

FpMat FpMat::cols_slice(const std::vector<size_t>& idx) const {
    FpMat r(p_, rows_, idx.size());
    for (size_t k = 0; k < idx.size(); ++k)
        for (size_t i = 0; i < rows_; ++i) r.set(i, k, at(i, idx[k]));
    return r;
}

FpMat FpMat::col(size_t j) const {
    FpMat r(p_, rows_, 1);
    for (size_t i = 0; i < rows_; ++i) r.set(i, 0, at(i, j));
    return r;
}

FpMat FpMat::block(size_t i0, size_t j0, size_t r, size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw DimensionMismatch("block: out of range");
    FpMat m(p_, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.set(i, j, at(i0 + i, j0 + j));
    return m;
}

std::vector<long> FpMat::col_vec(size_t j) const {
    std::vector<long> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

FpMat FpMat::from_col(long p, const std::vector<long>& v) {
    FpMat r(p, v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) r.set(i, 0, v[i]);
    return r;
}

std::string FpMat::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            os << at(i, j);
            if (j + 1 < cols_) os << ", ";
        }
        os << "]";
        if (i + 1 < rows_) os << ", ";
    }
    os << "]";
    return os.str();
}

void SpinBasis::reduce(std::vector<long>& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        long c = v[pivots_[k]];
        if (c == 0) continue;
        for (size_t i = 0; i < dim_; ++i) v[i] = ((v[i] - mulmod(c, rows_[k][i], p_)) % p_ + p_) % p_;
    }
}

bool SpinBasis::insert(std::vector<long> v) {
    if (v.size() != dim_) throw DimensionMismatch("SpinBasis::insert");
    for (long& x : v) x = ((x % p_) + p_) % p_;
    reduce(v);
    size_t piv = dim_;
    for (size_t i = 0; i < dim_; ++i)
        if (v[i] != 0) {
            piv = i;
            break;
        }
    if (piv == dim_) return false;
    long inv = mod_inv(v[piv], p_);
    for (long& x : v) x = mulmod(x, inv, p_);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool SpinBasis::contains(std::vector<long> v) const {
    for (long& x : v) x = ((x % p_) + p_) % p_;
    reduce(v);
    for (long x : v)
        if (x != 0) return false;
    return true;
}

FpMat SpinBasis::basis_matrix() const {
    FpMat b(p_, dim_, rows_.size());
    for (size_t k = 0; k < rows_.size(); ++k)
        for (size_t i = 0; i < dim_; ++i) b.set(i, k, rows_[k][i]);
    return b;
}

FpMat spin(const std::vector<FpMat>& gens, const FpMat& seeds) {
    long p = seeds.p();
    size_t n = seeds.rows();
    SpinBasis basis(p, n);
    std::vector<std::vector<long>> queue;
    for (size_t j = 0; j < seeds.cols(); ++j) {
        std::vector<long> v = seeds.col_vec(j);
        if (basis.insert(v)) queue.push_back(std::move(v));
    }
    while (!queue.empty() && basis.size() < n) {
        std::vector<long> v = std::move(queue.back());
        queue.pop_back();
        for (const FpMat& g : gens) {
            std::vector<long> w(n, 0);
            for (size_t i = 0; i < n; ++i) {
                unsigned long long acc = 0;
                for (size_t k = 0; k < n; ++k)
                    acc += static_cast<unsigned long long>(g.at(i, k)) * static_cast<unsigned long long>(v[k]);
                w[i] = static_cast<long>(acc % static_cast<unsigned long long>(p));
            }
            if (basis.insert(w)) queue.push_back(std::move(w));
        }
    }
    // closure may still be missing when the queue drained early; re-run until stable
    bool grew = true;
    while (grew && basis.size() < n) {
        grew = false;
        FpMat cur = basis.basis_matrix();
        for (const FpMat& g : gens) {
            FpMat img = g * cur;
            for (size_t j = 0; j < img.cols(); ++j)
                if (basis.insert(img.col_vec(j))) grew = true;
        }
    }
    return basis.basis_matrix();
}

} // namespace latmid
