#pragma once

#include "latmid/errors.hpp"
#include "latmid/rat.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace latmid {

// Dense matrix over Q. Column-vector convention throughout: a lattice basis
// is the list of columns, group elements act by left multiplication.
class RatMat {
public:
    RatMat() = default;
    RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static RatMat identity(size_t n);
    static RatMat from_rows(const std::vector<std::vector<Rat>>& rows);
    static RatMat diagonal(const std::vector<Rat>& d);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    RatMat transpose() const;
    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat scaled(const Rat& c) const;
    bool operator==(const RatMat& o) const = default;
    bool is_zero() const;

    Rat det() const;
    RatMat inverse() const; // SingularMatrix

    static RatMat hcat(const RatMat& a, const RatMat& b);
    RatMat cols_slice(const std::vector<size_t>& idx) const;
    RatMat col(size_t j) const;
    RatMat top_rows(size_t k) const;
    RatMat bottom_rows(size_t k) const;
    RatMat block(size_t i0, size_t j0, size_t r, size_t c) const;

    std::string str() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

} // namespace latmid
