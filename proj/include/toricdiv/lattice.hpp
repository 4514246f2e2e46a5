#pragma once

#include "toricdiv/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace toricdiv {

/// A point of the lattice N (or M) in fixed coordinates.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::size_t rank) : coords_(rank) {}
    explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    LatticeVector(std::initializer_list<long long> coords);

    std::size_t rank() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    Integer content() const;  ///< gcd of the coordinates (0 for the zero vector)

    LatticeVector& operator+=(const LatticeVector& o);
    LatticeVector& operator-=(const LatticeVector& o);
    LatticeVector& operator*=(const Integer& k);

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(const Integer& k, LatticeVector v) { return v *= k; }
    LatticeVector operator-() const;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
        return a.coords_ <=> b.coords_;
    }

    RationalVector to_rational() const;
    std::string str() const;

private:
    std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const RationalVector& form, const LatticeVector& v);
LatticeVector cross(const LatticeVector& a, const LatticeVector& b);

/// Divides by the gcd of the coordinates. Throws on the zero vector.
LatticeVector primitive(const LatticeVector& v);

/// Scales a nonzero rational vector to the primitive integer vector on the same ray.
LatticeVector primitive_on_ray(const RationalVector& v);

/// Dense integer matrix, row major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<LatticeVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    LatticeVector row(std::size_t r) const;
    LatticeVector col(std::size_t c) const;
    IntegerMatrix transpose() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row_i += k * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Integer& k);
    /// col_i += k * col_j
    void add_col_multiple(std::size_t i, std::size_t j, const Integer& k);
    void negate_row(std::size_t i);

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// row vector times matrix
LatticeVector operator*(const LatticeVector& v, const IntegerMatrix& m);

/// Exact determinant with sign (fraction-free Gaussian elimination).
Integer determinant(const IntegerMatrix& m);

/// Inverse of a unimodular matrix. Throws if |det| != 1.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

struct SmithForm {
    std::vector<Integer> diagonal;  ///< s1 | s2 | ... ; zeros trail for rank-deficient input
    IntegerMatrix left;             ///< unimodular, rows x rows
    IntegerMatrix right;            ///< unimodular, cols x cols
};

/// left * m * right = diag(diagonal). Square input must be nonsingular.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Same elimination, any shape, no nonsingularity requirement.
SmithForm smith_normal_form_general(const IntegerMatrix& m);

/// Unimodular matrix whose first row is the primitive vector v.
IntegerMatrix complete_to_basis(const LatticeVector& v);

/// Solves c * rows(g) = v for square nonsingular g.
RationalVector solve_row_combination(const IntegerMatrix& g, const LatticeVector& v);

/// All lattice points sum c_i g_i with c_i in [0,1), g_i the rows of a nonsingular square matrix.
/// Includes the origin; the count equals |det g|.
std::vector<LatticeVector> fundamental_parallelepiped_points(const IntegerMatrix& g);

/// Index of the sublattice spanned by the rows in its saturation (gcd of maximal minors).
Integer saturation_index(const IntegerMatrix& rows);

/// A vector t such that Z^n = saturation(span(rows)) + Z t, for rows of rank n-1.
LatticeVector complement_vector(const IntegerMatrix& rows);

}  // namespace toricdiv
