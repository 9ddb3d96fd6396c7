#pragma once

#include "latmid/errors.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace latmid {

// Dense matrix over F_p, entries reduced into [0, p).
class FpMat {
public:
    FpMat() = default;
    FpMat(long p, size_t rows, size_t cols);
    static FpMat identity(long p, size_t n);
    static FpMat from_rows(long p, const std::vector<std::vector<long>>& rows);

    long p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    long at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, long v) { a_[i * cols_ + j] = ((v % p_) + p_) % p_; }

    FpMat operator*(const FpMat& o) const;
    FpMat operator+(const FpMat& o) const;
    FpMat operator-(const FpMat& o) const;
    FpMat scaled(long c) const;
    FpMat transpose() const;
    bool operator==(const FpMat& o) const = default;
    bool is_zero() const;

    long det() const;
    size_t rank() const;
    FpMat inverse() const;   // SingularMatrix
    FpMat nullspace() const; // columns form a kernel basis (may have 0 columns)
    // Unique X with this * X = rhs; requires full column rank, throws if
    // inconsistent or underdetermined.
    FpMat solve(const FpMat& rhs) const;

    static FpMat hcat(const FpMat& a, const FpMat& b);
    static FpMat vcat(const FpMat& a, const FpMat& b);
    static FpMat block_diag(const FpMat& a, const FpMat& b);
    FpMat cols_slice(const std::vector<size_t>& idx) const;
    FpMat col(size_t j) const;
    FpMat block(size_t i0, size_t j0, size_t r, size_t c) const;

    std::vector<long> col_vec(size_t j) const;
    static FpMat from_col(long p, const std::vector<long>& v);

    std::string str() const;

private:
    long p_ = 0;
    size_t rows_ = 0, cols_ = 0;
    std::vector<long> a_;
    void check_same(const FpMat& o) const;
};

// Incremental semi-echelon basis of a subspace of F_p^n (vectors as columns).
class SpinBasis {
public:
    SpinBasis(long p, size_t dim) : p_(p), dim_(dim) {}
    // Reduces v against the basis; inserts the remainder if nonzero.
    // Returns true when the vector enlarged the space.
    bool insert(std::vector<long> v);
    bool contains(std::vector<long> v) const;
    size_t size() const { return rows_.size(); }
    size_t dim() const { return dim_; }
    FpMat basis_matrix() const; // dim x size, columns = basis

private:
    long p_;
    size_t dim_;
    std::vector<std::vector<long>> rows_;
    std::vector<size_t> pivots_;
    void reduce(std::vector<long>& v) const;
};

// Smallest submodule containing the seed columns, closed under the generators.
FpMat spin(const std::vector<FpMat>& gens, const FpMat& seeds);

} // namespace latmid
