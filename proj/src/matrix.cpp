/*
   Copyright 2026 the maxsubfield authors

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

#include "maxsubfield/matrix.hpp"

namespace msf {

Matrix::Matrix(int n, const Field& field) : n_(n), field_(field) {
    if (n < 0) throw math_error("matrix size must be nonnegative");
    e_.assign(static_cast<std::size_t>(n) * n, field.zero());
}

Matrix Matrix::identity(int n, const Field& field) {
    Matrix m(n, field);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::unit(int n, const Field& field, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n) throw math_error("matrix unit index out of range");
    Matrix m(n, field);
    m.at(i - 1, j - 1) = field.one();
    return m;
}

Matrix Matrix::diagonal(const Field& field, const std::vector<FieldElement>& entries) {
    Matrix m(static_cast<int>(entries.size()), field);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
    return m;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw math_error("block_diag needs at least one block");
    const Field& f = blocks.front().field();
    int n = 0;
    for (const auto& b : blocks) {
        if (b.field() != f) throw math_error("block_diag: blocks live in different fields");
        n += b.size();
    }
    Matrix m(n, f);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.size(); ++i)
            for (int j = 0; j < b.size(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.size();
    }
    return m;
}

Matrix Matrix::companion(const Field& field, const std::vector<FieldElement>& low_coeffs) {
    int k = static_cast<int>(low_coeffs.size());
    if (k == 0) throw math_error("companion matrix needs degree >= 1");
    Matrix m(k, field);
    for (int i = 1; i < k; ++i) m.at(i, i - 1) = field.one();
    for (int i = 0; i < k; ++i) m.at(i, k - 1) = -low_coeffs[i];
    return m;
}

Matrix Matrix::random(int n, const Field& field, Rng& rng) {
    Matrix m(n, field);
    for (auto& e : m.e_) e = field.random(rng);
    return m;
}

Matrix Matrix::random_invertible(int n, const Field& field, Rng& rng) {
    for (;;) {
        Matrix m = random(n, field, rng);
        if (!m.det().is_zero()) return m;
    }
}

namespace {
void check_compat(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) throw math_error("matrix dimension mismatch");
    if (a.field() != b.field()) throw math_error("matrix field mismatch");
}
}  // namespace

Matrix Matrix::operator+(const Matrix& o) const {
    check_compat(*this, o);
    Matrix r(n_, field_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_compat(*this, o);
    Matrix r(n_, field_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(n_, field_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_compat(*this, o);
    Matrix r(n_, field_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
        }
    }
    return r;
}

Matrix Matrix::scale(const FieldElement& c) const {
    Matrix r(n_, field_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(n_, field_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Matrix base = *this;
    Matrix acc = identity(n_, field_);
    unsigned long long ue = static_cast<unsigned long long>(e);
    while (ue) {
        if (ue & 1) acc = acc * base;
        base = base * base;
        ue >>= 1;
    }
    return acc;
}

FieldElement Matrix::trace() const {
    FieldElement t = field_.zero();
    for (int i = 0; i < n_; ++i) t = t + at(i, i);
    return t;
}

FieldElement Matrix::det() const {
    // Gaussian elimination with exact division
    Matrix w = *this;
    FieldElement d = field_.one();
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r) {
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return field_.zero();
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            d = -d;
        }
        d = d * w.at(col, col);
        FieldElement inv = w.at(col, col).inverse();
        for (int r = col + 1; r < n_; ++r) {
            if (w.at(r, col).is_zero()) continue;
            FieldElement factor = w.at(r, col) * inv;
            for (int j = col; j < n_; ++j) w.at(r, j) = w.at(r, j) - factor * w.at(col, j);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    // Gauss-Jordan on [this | I]
    Matrix w = *this;
    Matrix inv = identity(n_, field_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r) {
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw math_error("matrix is singular");
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        FieldElement pi = w.at(col, col).inverse();
        for (int j = 0; j < n_; ++j) {
            w.at(col, j) = w.at(col, j) * pi;
            inv.at(col, j) = inv.at(col, j) * pi;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || w.at(r, col).is_zero()) continue;
            FieldElement factor = w.at(r, col);
            for (int j = 0; j < n_; ++j) {
                w.at(r, j) = w.at(r, j) - factor * w.at(col, j);
                inv.at(r, j) = inv.at(r, j) - factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Matrix::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_scalar() const {
    if (n_ == 0) return true;
    const FieldElement& d = at(0, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !(at(i, j) == d)) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (n_ != o.n_ || field_ != o.field_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!(e_[i] == o.e_[i])) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) s += ", ";
        s += "[";
        for (int j = 0; j < n_; ++j) {
            if (j) s += ", ";
            s += at(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

std::vector<FieldElement> solve_linear(const Matrix& A, const std::vector<FieldElement>& b) {
    auto x = solve_any(A, b);
    if (!x) throw math_error("linear system is inconsistent");
    // verify uniqueness by requiring full rank
    if (A.det().is_zero()) throw math_error("matrix is singular");
    return *x;
}

std::optional<std::vector<FieldElement>> solve_any(const Matrix& A, const std::vector<FieldElement>& b) {
    int n = A.size();
    if (static_cast<int>(b.size()) != n) throw math_error("right-hand side dimension mismatch");
    const Field& f = A.field();
    // augmented row reduction
    std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n + 1, f.zero()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = A.at(i, j);
        m[i][n] = b[i];
    }
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r) {
            if (!m[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(m[pr], m[row]);
        FieldElement inv = m[row][col].inverse();
        for (int j = col; j <= n; ++j) m[row][j] = m[row][j] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            FieldElement factor = m[r][col];
            for (int j = col; j <= n; ++j) m[r][j] = m[r][j] - factor * m[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (int r = row; r < n; ++r)
        if (!m[r][n].is_zero()) return std::nullopt;
    std::vector<FieldElement> x(n, f.zero());
    for (int r = 0; r < row; ++r)
        if (pivot_col[r] >= 0) x[pivot_col[r]] = m[r][n];
    return x;
}

}  // namespace msf
