#pragma once

#include <stdexcept>
#include <vector>

#include "wpoly/rational.hpp"

namespace wpoly {

// Small dense rational matrix; just enough for automorphism blocks.
class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {}

    static QMatrix identity(int n) {
        QMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int size() const { return n_; }
    Rational& at(int i, int j) { return a_.at(static_cast<std::size_t>(i) * n_ + j); }
    const Rational& at(int i, int j) const { return a_.at(static_cast<std::size_t>(i) * n_ + j); }

    Rational determinant() const {
        QMatrix m = *this;
        Rational det = 1;
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int row = col; row < n_; ++row)
                if (m.at(row, col) != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) return Rational(0);
            if (pivot != col) {
                for (int j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
                det = -det;
            }
            det *= m.at(col, col);
            Rational inv = Rational(1) / m.at(col, col);
            for (int row = col + 1; row < n_; ++row) {
                if (m.at(row, col) == 0) continue;
                Rational factor = m.at(row, col) * inv;
                for (int j = col; j < n_; ++j) m.at(row, j) -= factor * m.at(col, j);
            }
        }
        return det;
    }

    QMatrix inverse() const {
        QMatrix m = *this;
        QMatrix inv = identity(n_);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int row = col; row < n_; ++row)
                if (m.at(row, col) != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) throw std::invalid_argument("matrix: singular");
            if (pivot != col)
                for (int j = 0; j < n_; ++j) {
                    std::swap(m.at(pivot, j), m.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            Rational scale = Rational(1) / m.at(col, col);
            for (int j = 0; j < n_; ++j) {
                m.at(col, j) *= scale;
                inv.at(col, j) *= scale;
            }
            for (int row = 0; row < n_; ++row) {
                if (row == col || m.at(row, col) == 0) continue;
                Rational factor = m.at(row, col);
                for (int j = 0; j < n_; ++j) {
                    m.at(row, j) -= factor * m.at(col, j);
                    inv.at(row, j) -= factor * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    // The subgroup convention: entry (j,h) may be nonzero only for h <= j,
    // so each variable maps into itself and earlier (larger) variables.
    bool is_triangular() const {
        for (int j = 0; j < n_; ++j)
            for (int h = j + 1; h < n_; ++h)
                if (at(j, h) != 0) return false;
        return true;
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    int n_ = 0;
    std::vector<Rational> a_;
};

}  // namespace wpoly
