/*
   Copyright 2026 The signrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "signrep/matrix.hpp"

#include "signrep/error.hpp"

namespace signrep {

namespace {

void same_field(const Matrix& a, const Matrix& b) {
    require(a.field() == b.field(), ErrorKind::FieldMismatch, "matrices over different fields");
}

}  // namespace

Matrix::Matrix(Field F, std::size_t rows, std::size_t cols)
    : field_(std::move(F)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix::Matrix(Field F, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(F)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(data_.size() == rows * cols, ErrorKind::DimensionMismatch, "entry count does not match shape");
}

Matrix Matrix::identity(const Field& F, std::size_t n) { return scalar(F, n, F.one()); }

Matrix Matrix::scalar(const Field& F, std::size_t n, const Elem& c) {
    Matrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

Matrix Matrix::from_ints(const Field& F, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<Elem> e;
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        require(r.size() == cols, ErrorKind::DimensionMismatch, "ragged matrix literal");
        for (long long x : r) e.push_back(F.from_int(x));
    }
    return Matrix(F, rows.size(), cols, std::move(e));
}

Matrix Matrix::diagonal(const Field& F, const Vector& diag) {
    Matrix m(F, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    same_field(a, b);
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch, "matrix sum shape");
    Matrix r = a;
    const Field& F = a.field();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = F.add(a(i, j), b(i, j));
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    same_field(a, b);
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch, "matrix difference shape");
    Matrix r = a;
    const Field& F = a.field();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = F.sub(a(i, j), b(i, j));
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    same_field(a, b);
    require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "matrix product shape");
    const Field& F = a.field();
    Matrix r(F, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem& x = a(i, k);
            if (F.is_zero(x)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (F.is_zero(b(k, j))) continue;
                r(i, j) = F.add(r(i, j), F.mul(x, b(k, j)));
            }
        }
    return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
    require(a.cols() == v.size(), ErrorKind::DimensionMismatch, "matrix-vector shape");
    const Field& F = a.field();
    Vector r(a.rows(), F.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!F.is_zero(a(i, k)) && !F.is_zero(v[k])) r[i] = F.add(r[i], F.mul(a(i, k), v[k]));
    return r;
}

Matrix scale(const Matrix& a, const Elem& c) {
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a.field().mul(a(i, j), c);
    return r;
}

Matrix transpose(const Matrix& a) {
    Matrix r(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
    require(a.square(), ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const Field& F = a.field();
    const std::size_t n = a.rows();
    Matrix aug(F, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = F.one();
    }
    Rref r = rref(aug);
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

Matrix inverse(const Matrix& a) {
    auto r = try_inverse(a);
    require(r.has_value(), ErrorKind::Singular, "matrix is not invertible");
    return *r;
}

Elem determinant(const Matrix& a) {
    require(a.square(), ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const Field& F = a.field();
    Matrix m = a;
    const std::size_t n = a.rows();
    Elem det = F.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && F.is_zero(m(p, c))) ++p;
        if (p == n) return F.zero();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = F.neg(det);
        }
        det = F.mul(det, m(c, c));
        const Elem inv = F.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (F.is_zero(m(i, c))) continue;
            const Elem f = F.mul(m(i, c), inv);
            for (std::size_t j = c; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
        }
    }
    return det;
}

Elem trace(const Matrix& a) {
    require(a.square(), ErrorKind::DimensionMismatch, "trace of a non-square matrix");
    Elem t = a.field().zero();
    for (std::size_t i = 0; i < a.rows(); ++i) t = a.field().add(t, a(i, i));
    return t;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

bool is_zero(const Matrix& a) {
    for (const auto& e : a.entries())
        if (!a.field().is_zero(e)) return false;
    return true;
}

Matrix power(const Matrix& a, long long e) {
    Matrix base = e < 0 ? inverse(a) : a;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Matrix r = Matrix::identity(a.field(), a.rows());
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Matrix map_entries(const Matrix& a, const Field& target, const std::function<Elem(const Elem&)>& f) {
    std::vector<Elem> e;
    e.reserve(a.entries().size());
    for (const auto& x : a.entries()) e.push_back(f(x));
    return Matrix(target, a.rows(), a.cols(), std::move(e));
}

Vector flatten(const Matrix& a) { return a.entries(); }

Matrix unflatten(const Field& F, std::size_t rows, std::size_t cols, const Vector& v) {
    return Matrix(F, rows, cols, v);
}

Rref rref(const Matrix& a) {
    const Field& F = a.field();
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && F.is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        if (!F.is_one(m(row, c))) {
            const Elem inv = F.inv(m(row, c));
            for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = F.mul(m(row, j), inv);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || F.is_zero(m(i, c))) continue;
            const Elem f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!F.is_zero(m(row, j))) m(i, j) = F.sub(m(i, j), F.mul(f, m(row, j)));
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::vector<Vector> nullspace(const Matrix& a) {
    const Field& F = a.field();
    Rref r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(a.cols(), F.zero());
        v[free] = F.one();
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = F.neg(r.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<SolutionSet> solve_linear(const Matrix& a, const Vector& rhs) {
    require(rhs.size() == a.rows(), ErrorKind::DimensionMismatch, "right-hand side length");
    const Field& F = a.field();
    Matrix aug(F, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = rhs[i];
    }
    Rref r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
    SolutionSet s;
    s.particular.assign(a.cols(), F.zero());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) s.particular[r.pivots[i]] = r.reduced(i, a.cols());
    s.nullspace = nullspace(a);
    return s;
}

SpanBuilder::SpanBuilder(Field F, std::size_t dim) : field_(std::move(F)), dim_(dim) {}

Vector SpanBuilder::reduce(Vector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (field_.is_zero(v[p])) continue;
        const Elem f = v[p];
        for (std::size_t j = p; j < dim_; ++j)
            if (!field_.is_zero(rows_[r][j])) v[j] = field_.sub(v[j], field_.mul(f, rows_[r][j]));
    }
    return v;
}

bool SpanBuilder::add(const Vector& v_in) {
    require(v_in.size() == dim_, ErrorKind::DimensionMismatch, "span vector length");
    if (rows_.size() == dim_) return false;
    Vector v = reduce(v_in);
    std::size_t p = 0;
    while (p < dim_ && field_.is_zero(v[p])) ++p;
    if (p == dim_) return false;
    const Elem inv = field_.inv(v[p]);
    for (std::size_t j = p; j < dim_; ++j) v[j] = field_.mul(v[j], inv);
    // keep rows sorted by pivot so reduction is a single forward pass
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
    return true;
}

bool SpanBuilder::contains(const Vector& v) const {
    require(v.size() == dim_, ErrorKind::DimensionMismatch, "span vector length");
    Vector r = reduce(v);
    for (const auto& x : r)
        if (!field_.is_zero(x)) return false;
    return true;
}

std::size_t span_dimension(const std::vector<Matrix>& mats) {
    if (mats.empty()) return 0;
    const std::size_t n = mats.front().rows();
    SpanBuilder span(mats.front().field(), n * n);
    for (const auto& m : mats) {
        require(m.square() && m.rows() == n, ErrorKind::DimensionMismatch, "span of matrices of different sizes");
        require(m.field() == mats.front().field(), ErrorKind::FieldMismatch, "span over mixed fields");
        span.add(flatten(m));
        if (span.dimension() == n * n) break;
    }
    return span.dimension();
}

Poly charpoly(const Matrix& a) {
    require(a.square(), ErrorKind::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    const Field& F = a.field();
    const std::size_t n = a.rows();
    Matrix h = a;
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && F.is_zero(h(i, m - 1))) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
        }
        const Elem piv = F.inv(h(m, m - 1));
        for (std::size_t j = m + 1; j < n; ++j) {
            if (F.is_zero(h(j, m - 1))) continue;
            const Elem u = F.mul(h(j, m - 1), piv);
            for (std::size_t k = 0; k < n; ++k) h(j, k) = F.sub(h(j, k), F.mul(u, h(m, k)));
            for (std::size_t k = 0; k < n; ++k) h(k, m) = F.add(h(k, m), F.mul(u, h(k, j)));
        }
    }
    std::vector<Poly> p{poly::constant(F, F.one())};
    for (std::size_t m = 1; m <= n; ++m) {
        Poly cur = poly::mul(F, Poly{F.neg(h(m - 1, m - 1)), F.one()}, p[m - 1]);
        Elem t = F.one();
        for (std::size_t i = m - 1; i >= 1; --i) {
            t = F.mul(t, h(i, i - 1));
            cur = poly::sub(F, cur, poly::scale(F, p[i - 1], F.mul(h(i - 1, m - 1), t)));
        }
        p.push_back(std::move(cur));
    }
    return p[n];
}

Poly minpoly(const Matrix& a) {
    require(a.square(), ErrorKind::DimensionMismatch, "minimal polynomial of a non-square matrix");
    const Field& F = a.field();
    const std::size_t n = a.rows();
    std::vector<Vector> powers{flatten(Matrix::identity(F, n))};
    Matrix cur = Matrix::identity(F, n);
    for (std::size_t k = 1; k <= n; ++k) {
        cur = cur * a;
        powers.push_back(flatten(cur));
        Matrix cols(F, n * n, k + 1);
        for (std::size_t j = 0; j <= k; ++j)
            for (std::size_t i = 0; i < n * n; ++i) cols(i, j) = powers[j][i];
        auto ns = nullspace(cols);
        if (ns.empty()) continue;
        Poly p = ns.front();
        poly::trim(F, p);
        return poly::monic(F, p);
    }
    fail(ErrorKind::Internal, "minimal polynomial exceeds the dimension");
}

Matrix eval_poly(const Poly& p, const Matrix& a) {
    const Field& F = a.field();
    Matrix acc(F, a.rows(), a.cols());
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * a + Matrix::scalar(F, a.rows(), p[i]);
    return acc;
}

std::string to_string(const Matrix& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) s += ",";
            s += a.field().to_string(a(i, j));
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace signrep
