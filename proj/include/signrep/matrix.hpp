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

#pragma once

#include "signrep/field.hpp"
#include "signrep/poly.hpp"

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace signrep {

using Vector = std::vector<Elem>;

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field F, std::size_t rows, std::size_t cols);
    Matrix(Field F, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(const Field& F, std::size_t n);
    static Matrix scalar(const Field& F, std::size_t n, const Elem& c);
    static Matrix from_ints(const Field& F, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix diagonal(const Field& F, const Vector& diag);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const std::vector<Elem>& entries() const { return data_; }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

Matrix scale(const Matrix& a, const Elem& c);
Matrix transpose(const Matrix& a);
/// Throws Singular.
Matrix inverse(const Matrix& a);
std::optional<Matrix> try_inverse(const Matrix& a);
Elem determinant(const Matrix& a);
Elem trace(const Matrix& a);
std::size_t rank(const Matrix& a);
bool is_zero(const Matrix& a);
Matrix power(const Matrix& a, long long e);
/// Entrywise image in another field.
Matrix map_entries(const Matrix& a, const Field& target, const std::function<Elem(const Elem&)>& f);
/// Row-major flattening.
Vector flatten(const Matrix& a);
Matrix unflatten(const Field& F, std::size_t rows, std::size_t cols, const Vector& v);

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
/// Reduced row echelon form, pivoting on the first nonzero entry.
Rref rref(const Matrix& a);

/// Basis of {x : a x = 0} in reduced echelon form (one vector per free column).
std::vector<Vector> nullspace(const Matrix& a);

struct SolutionSet {
    Vector particular;
    std::vector<Vector> nullspace;
};
/// All solutions of a x = rhs, or nullopt if inconsistent.
std::optional<SolutionSet> solve_linear(const Matrix& a, const Vector& rhs);

/// Incrementally maintained row echelon basis of a subspace of F^dim.
class SpanBuilder {
public:
    SpanBuilder(Field F, std::size_t dim);
    /// Adds v; true if it enlarged the span.
    bool add(const Vector& v);
    bool contains(const Vector& v) const;
    std::size_t dimension() const { return rows_.size(); }
    std::size_t ambient() const { return dim_; }
    const std::vector<Vector>& basis() const { return rows_; }

private:
    Vector reduce(Vector v) const;
    Field field_;
    std::size_t dim_;
    std::vector<Vector> rows_;        // each row monic at its pivot
    std::vector<std::size_t> pivots_;
};

/// Characteristic polynomial det(x - a), monic, via Hessenberg reduction.
Poly charpoly(const Matrix& a);
/// Minimal polynomial, monic.
Poly minpoly(const Matrix& a);
/// p(a) for a polynomial p.
Matrix eval_poly(const Poly& p, const Matrix& a);

/// Dimension of the linear span of square matrices of one size.
std::size_t span_dimension(const std::vector<Matrix>& mats);

std::string to_string(const Matrix& a);

}  // namespace signrep
