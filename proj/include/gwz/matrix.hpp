#pragma once

#include <vector>

#include "gwz/graph.hpp"
#include "gwz/rational.hpp"

namespace gwz {

// Dense matrix of exact rationals. Desk-scale dimensions (a few hundred);
// exactness matters more than sparsity here.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {
        if (rows <= 0 || cols <= 0) throw ValidationError("matrix dimensions must be positive");
    }

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const RationalMatrix&) const = default;

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;

private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

// 0/1 matrix; kept separate so the positive-support operator has its own type.
class BinaryMatrix {
public:
    BinaryMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    int at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const BinaryMatrix&) const = default;

    BinaryMatrix transposed() const;
    RationalMatrix to_rational() const;

private:
    int rows_, cols_;
    std::vector<int> entries_;
};

// Grover matrix U over the arcs of G: U_{ef} = 2/d - 1 on the inverse arc,
// 2/d on other incoming arcs (d the degree at the meeting vertex), 0 else.
RationalMatrix grover_matrix(const Graph& g, const ArcTable& arcs);

// Entrywise indicator of strict positivity.
BinaryMatrix positive_support(const RationalMatrix& m);

// Simple-random-walk transition matrix P, row-stochastic.
RationalMatrix transition_matrix(const Graph& g);

// (A, D): adjacency and degree-diagonal matrices.
std::pair<RationalMatrix, RationalMatrix> adjacency_and_degree(const Graph& g);

// Exact determinant by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
Rational determinant(const RationalMatrix& m);

}  // namespace gwz
