#include "gwz/matrix.hpp"

namespace gwz {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ValidationError("matrix shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix BinaryMatrix::to_rational() const {
    RationalMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    return m;
}

RationalMatrix grover_matrix(const Graph& g, const ArcTable& arcs) {
    int na = arcs.num_arcs();
    RationalMatrix u(na, na);
    for (int e = 0; e < na; ++e) {
        for (int f = 0; f < na; ++f) {
            if (arcs.arc(f).terminus != arcs.arc(e).origin) continue;
            Rational w(2, g.degree(arcs.arc(f).terminus));
            w.canonicalize();
            u.at(e, f) = (f == arcs.inverse(e)) ? w - 1 : w;
        }
    }
    return u;
}

BinaryMatrix positive_support(const RationalMatrix& m) {
    BinaryMatrix s(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s.at(i, j) = m.at(i, j) > 0 ? 1 : 0;
    return s;
}

RationalMatrix transition_matrix(const Graph& g) {
    int n = g.num_vertices();
    RationalMatrix p(n, n);
    for (auto& [u, v] : g.edges()) {
        p.at(u - 1, v - 1) = Rational(1, g.degree(u));
        p.at(v - 1, u - 1) = Rational(1, g.degree(v));
        p.at(u - 1, v - 1).canonicalize();
        p.at(v - 1, u - 1).canonicalize();
    }
    return p;
}

std::pair<RationalMatrix, RationalMatrix> adjacency_and_degree(const Graph& g) {
    int n = g.num_vertices();
    RationalMatrix a(n, n), d(n, n);
    for (auto& [u, v] : g.edges()) {
        a.at(u - 1, v - 1) = 1;
        a.at(v - 1, u - 1) = 1;
    }
    for (int v = 1; v <= n; ++v) d.at(v - 1, v - 1) = g.degree(v);
    return {a, d};
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
    int n = m.rows();

    // Clear denominators: work on the integer matrix scale*m.
    Integer scale = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = lcm(scale, m.at(i, j).get_den());
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational scaled = m.at(i, j) * scale;
            scaled.canonicalize();
            a[i][j] = scaled.get_num();
        }

    // Bareiss fraction-free elimination.
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    Rational det(sign * a[n - 1][n - 1]);
    for (int i = 0; i < n; ++i) det /= scale;
    det.canonicalize();
    return det;
}

}  // namespace gwz
