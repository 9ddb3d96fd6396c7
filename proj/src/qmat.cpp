#include "latmid/qmat.hpp"

#include <sstream>

namespace latmid {

RatMat RatMat::identity(size_t n) {
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    RatMat m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw DimensionMismatch("from_rows: ragged row " + std::to_string(i));
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMat RatMat::diagonal(const std::vector<Rat>& d) {
    RatMat m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix product: " + std::to_string(cols_) + " vs " + std::to_string(o.rows_));
    RatMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMat RatMat::scaled(const Rat& c) const {
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

bool RatMat::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0) return false;
    return true;
}

Rat RatMat::det() const {
    if (rows_ != cols_) throw DimensionMismatch("det: not square");
    size_t n = rows_;
    RatMat m = *this;
    Rat d = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m.at(piv, k) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            for (size_t j = k; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            d = -d;
        }
        d *= m.at(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rat f = m.at(i, k) / m.at(k, k);
            for (size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return d;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse: not square");
    size_t n = rows_;
    RatMat m = *this;
    RatMat inv = identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m.at(piv, k) == 0) ++piv;
        if (piv == n) throw SingularMatrix("inverse: singular matrix");
        if (piv != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(k, j));
                std::swap(inv.at(piv, j), inv.at(k, j));
            }
        Rat f = m.at(k, k);
        for (size_t j = 0; j < n; ++j) {
            m.at(k, j) /= f;
            inv.at(k, j) /= f;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            Rat g = m.at(i, k);
            for (size_t j = 0; j < n; ++j) {
                m.at(i, j) -= g * m.at(k, j);
                inv.at(i, j) -= g * inv.at(k, j);
            }
        }
    }
    return inv;
}

RatMat RatMat::hcat(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_) throw DimensionMismatch("hcat: row counts differ");
    RatMat r(a.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

RatMat RatMat::cols_slice(const std::vector<size_t>& idx) const {
    RatMat r(rows_, idx.size());
    for (size_t j = 0; j < idx.size(); ++j)
        for (size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
}

RatMat RatMat::col(size_t j) const {
    RatMat r(rows_, 1);
    for (size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

RatMat RatMat::top_rows(size_t k) const { return block(0, 0, k, cols_); }
RatMat RatMat::bottom_rows(size_t k) const { return block(rows_ - k, 0, k, cols_); }

RatMat RatMat::block(size_t i0, size_t j0, size_t r, size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw DimensionMismatch("block: out of range");
    RatMat m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
}

std::string RatMat::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            os << rat_str(at(i, j));
            if (j + 1 < cols_) os << ", ";
        }
        os << "]";
        if (i + 1 < rows_) os << ", ";
    }
    os << "]";
    return os.str();
}

} // namespace latmid
