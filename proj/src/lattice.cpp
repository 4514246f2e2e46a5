#include "toricdiv/lattice.hpp"

#include <ostream>
#include <sstream>

namespace toricdiv {

LatticeVector::LatticeVector(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
}

bool LatticeVector::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

Integer LatticeVector::content() const {
    Integer g = 0;
    for (const auto& c : coords_) g = gcd(g, c);
    return g;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
    if (rank() != o.rank()) throw Error("rank mismatch in lattice vector sum");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
    if (rank() != o.rank()) throw Error("rank mismatch in lattice vector difference");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& k) {
    for (auto& c : coords_) c *= k;
    return *this;
}

LatticeVector LatticeVector::operator-() const {
    LatticeVector r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

RationalVector LatticeVector::to_rational() const {
    RationalVector r;
    r.reserve(coords_.size());
    for (const auto& c : coords_) r.emplace_back(c);
    return r;
}

std::string LatticeVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += coords_[i].str();
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

Integer dot(const LatticeVector& a, const LatticeVector& b) {
    if (a.rank() != b.rank()) throw Error("rank mismatch in pairing");
    Integer s = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RationalVector& form, const LatticeVector& v) {
    if (form.size() != v.rank()) throw Error("rank mismatch in pairing");
    Rational s;
    for (std::size_t i = 0; i < v.rank(); ++i) s += form[i] * Rational(v[i]);
    return s;
}

LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
    if (a.rank() != 3 || b.rank() != 3) throw Error("cross product needs rank-3 vectors");
    return LatticeVector(std::vector<Integer>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                              a[0] * b[1] - a[1] * b[0]});
}

LatticeVector primitive(const LatticeVector& v) {
    Integer g = v.content();
    if (g == 0) throw Error("zero vector has no primitive representative");
    if (g == 1) return v;
    std::vector<Integer> c = v.coords();
    for (auto& x : c) x /= g;
    return LatticeVector(std::move(c));
}

LatticeVector primitive_on_ray(const RationalVector& v) {
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, x.den());
    std::vector<Integer> c;
    c.reserve(v.size());
    for (const auto& x : v) c.push_back(x.num() * (den / x.den()));
    return primitive(LatticeVector(std::move(c)));
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged matrix literal");
        for (long long x : r) data_.emplace_back(x);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<LatticeVector>& rows) {
    if (rows.empty()) return {};
    IntegerMatrix m(rows.size(), rows.front().rank());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].rank() != m.cols_) throw Error("rank mismatch among matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

LatticeVector IntegerMatrix::row(std::size_t r) const {
    std::vector<Integer> v(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                           data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return LatticeVector(std::move(v));
}

LatticeVector IntegerMatrix::col(std::size_t c) const {
    LatticeVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    IntegerMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

LatticeVector operator*(const LatticeVector& v, const IntegerMatrix& m) {
    if (v.rank() != m.rows()) throw Error("vector-matrix shape mismatch");
    LatticeVector r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntegerMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntegerMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::string IntegerMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ",";
        os << row(r).str();
    }
    os << "]";
    return os.str();
}

Integer determinant(const IntegerMatrix& m) {
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Gauss-Jordan over Q; returns false for singular input.
bool rational_inverse(const IntegerMatrix& m, std::vector<RationalVector>& inv) {
    const std::size_t n = m.rows();
    std::vector<RationalVector> a(n, RationalVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col].is_zero()) ++p;
        if (p == n) return false;
        std::swap(a[p], a[col]);
        Rational pivot = a[col][col];
        for (auto& x : a[col]) x /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    inv.assign(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return true;
}

}  // namespace

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
    if (!m.is_square()) throw Error("inverse of a non-square matrix");
    std::vector<RationalVector> inv;
    if (!rational_inverse(m, inv)) throw Error("matrix is singular");
    IntegerMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!inv[i][j].is_integer()) throw Error("matrix is not unimodular");
            r(i, j) = inv[i][j].num();
        }
    return r;
}

RationalVector solve_row_combination(const IntegerMatrix& g, const LatticeVector& v) {
    if (!g.is_square() || g.rows() != v.rank()) throw Error("solve: shape mismatch");
    std::vector<RationalVector> inv;
    if (!rational_inverse(g, inv)) throw Error("degenerate cone");
    const std::size_t n = g.rows();
    RationalVector c(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0) c[j] += Rational(v[i]) * inv[i][j];
    return c;
}

SmithForm smith_normal_form_general(const IntegerMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntegerMatrix a = m;
    IntegerMatrix left = IntegerMatrix::identity(rows);
    IntegerMatrix right = IntegerMatrix::identity(cols);
    const std::size_t steps = std::min(rows, cols);

    auto abs_int = [](const Integer& x) { return x < 0 ? Integer(-x) : x; };

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            bool found = false;
            std::size_t pr = t, pc = t;
            Integer best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    Integer v = abs_int(a(i, j));
                    if (!found || v < best) {
                        found = true;
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
            if (!found) goto done;
            a.swap_rows(t, pr);
            left.swap_rows(t, pr);
            a.swap_cols(t, pc);
            right.swap_cols(t, pc);

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = a(i, t) / a(t, t);
                a.add_row_multiple(i, t, -q);
                left.add_row_multiple(i, t, -q);
                if (a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = a(t, j) / a(t, t);
                a.add_col_multiple(j, t, -q);
                right.add_col_multiple(j, t, -q);
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // divisibility of the trailing block by the pivot
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        left.add_row_multiple(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (fixed) continue;
            if (a(t, t) < 0) {
                a.negate_row(t);
                left.negate_row(t);
            }
            break;
        }
    }
done:
    SmithForm out;
    out.diagonal.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(a(t, t));
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
    if (!m.is_square()) throw Error("smith_normal_form expects a square matrix");
    SmithForm s = smith_normal_form_general(m);
    for (const auto& d : s.diagonal)
        if (d == 0) throw Error("degenerate cone");
    return s;
}

IntegerMatrix complete_to_basis(const LatticeVector& v) {
    if (v.content() != 1) throw Error("complete_to_basis needs a primitive vector");
    IntegerMatrix row = IntegerMatrix::from_rows({v});
    SmithForm s = smith_normal_form_general(row);
    // left (1x1, = +-1) * v * right = e1, hence v = left * e1 * right^{-1}
    IntegerMatrix basis = unimodular_inverse(s.right);
    if (s.left(0, 0) < 0) basis.negate_row(0);
    return basis;
}

std::vector<LatticeVector> fundamental_parallelepiped_points(const IntegerMatrix& g) {
    SmithForm s = smith_normal_form(g);
    IntegerMatrix rinv = unimodular_inverse(s.right);
    const std::size_t n = g.rows();
    std::vector<LatticeVector> out;
    LatticeVector y(n);
    // odometer over prod [0, s_i)
    for (;;) {
        LatticeVector x = y * rinv;
        RationalVector c = solve_row_combination(g, x);
        LatticeVector p(n);
        RationalVector acc(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational f = c[i].frac();
            for (std::size_t j = 0; j < n; ++j) acc[j] += f * Rational(g(i, j));
        }
        for (std::size_t j = 0; j < n; ++j) p[j] = acc[j].num();
        out.push_back(std::move(p));

        std::size_t k = 0;
        for (; k < n; ++k) {
            y[k] += 1;
            if (y[k] < s.diagonal[k]) break;
            y[k] = 0;
        }
        if (k == n) break;
    }
    return out;
}

Integer saturation_index(const IntegerMatrix& rows) {
    SmithForm s = smith_normal_form_general(rows);
    Integer p = 1;
    for (const auto& d : s.diagonal) p *= d;
    return p;
}

LatticeVector complement_vector(const IntegerMatrix& rows) {
    if (rows.rows() + 1 != rows.cols()) throw Error("complement_vector expects n-1 rows in rank n");
    SmithForm s = smith_normal_form_general(rows);
    for (const auto& d : s.diagonal)
        if (d == 0) throw Error("rows are linearly dependent");
    IntegerMatrix rinv = unimodular_inverse(s.right);
    return rinv.row(rows.cols() - 1);
}

}  // namespace toricdiv
