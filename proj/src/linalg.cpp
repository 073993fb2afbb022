#include "legknot/linalg.hpp"

#include <algorithm>
#include <utility>

namespace legknot {

Int det(const IntMatrix& a) {
    if (!a.is_square()) throw DimensionError("det: matrix is not square");
    const int n = a.rows();
    if (n == 0) return 1;  // empty product convention
    IntMatrix b = a;
    Int prev = 1;  // pivot of the previous step; divides the update exactly
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (b.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (b.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            b.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
            b.at(i, k) = 0;
        }
        prev = b.at(k, k);
    }
    return sign > 0 ? b.at(n - 1, n - 1) : Int(-b.at(n - 1, n - 1));
}

std::vector<Rat> solve(const IntMatrix& a, const std::vector<Rat>& b) {
    if (!a.is_square()) throw DimensionError("solve: matrix is not square");
    const int n = a.rows();
    if (int(b.size()) != n) throw DimensionError("solve: right-hand side has wrong length");

    // Augmented matrix [a | b] over Rat.
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][n] = b[i];
    }

    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!w[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw SingularMatrixError("solve: singular matrix (not a rational homology sphere)");
        std::swap(w[col], w[piv]);
        for (int i = col + 1; i < n; ++i) {
            if (w[i][col].is_zero()) continue;
            Rat f = w[i][col] / w[col][col];
            for (int j = col; j <= n; ++j) w[i][j] -= f * w[col][j];
        }
    }

    std::vector<Rat> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Rat acc = w[i][n];
        for (int j = i + 1; j < n; ++j) acc -= w[i][j] * x[j];
        x[i] = acc / w[i][i];
    }
    return x;
}

namespace {

// Row/column operation helpers that keep left * original * right = d.
struct SNFWork {
    IntMatrix d, left, right;

    void add_row(int dst, int src, const Int& c) {  // row dst += c * row src
        for (int j = 0; j < d.cols(); ++j) d.at(dst, j) += c * d.at(src, j);
        for (int j = 0; j < left.cols(); ++j) left.at(dst, j) += c * left.at(src, j);
    }
    void add_col(int dst, int src, const Int& c) {  // col dst += c * col src
        for (int i = 0; i < d.rows(); ++i) d.at(i, dst) += c * d.at(i, src);
        for (int i = 0; i < right.rows(); ++i) right.at(i, dst) += c * right.at(i, src);
    }
    void swap_rows(int i, int j) {
        if (i == j) return;
        d.swap_rows(i, j);
        left.swap_rows(i, j);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        d.swap_cols(i, j);
        right.swap_cols(i, j);
    }
    void negate_row(int i) {
        for (int j = 0; j < d.cols(); ++j) d.at(i, j) = -d.at(i, j);
        for (int j = 0; j < left.cols(); ++j) left.at(i, j) = -left.at(i, j);
    }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
    const int m = a.rows(), n = a.cols();
    SNFWork w{a, IntMatrix::identity(m), IntMatrix::identity(n)};
    const int tmax = std::min(m, n);

    for (int t = 0; t < tmax; ++t) {
        for (;;) {
            // Smallest nonzero entry (in absolute value) of the trailing
            // block becomes the pivot; this keeps intermediate entries small.
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Int& v = w.d.at(i, j);
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (pi < 0 || av < best) {
                        best = av;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                t = tmax;  // trailing block is zero; remaining diagonal stays 0
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            // Reduce the pivot's column and row. Truncated division leaves
            // remainders strictly smaller than the pivot, so either the
            // block cleans up or the next pass finds a smaller pivot.
            bool dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (w.d.at(i, t) == 0) continue;
                Int q = w.d.at(i, t) / w.d.at(t, t);
                if (q != 0) w.add_row(i, t, -q);
                if (w.d.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (w.d.at(t, j) == 0) continue;
                Int q = w.d.at(t, j) / w.d.at(t, t);
                if (q != 0) w.add_col(j, t, -q);
                if (w.d.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Divisibility: d_t must divide the whole trailing block. If
            // some entry resists, fold its row into row t and keep going.
            int bi = -1;
            for (int i = t + 1; i < m && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi >= 0) {
                w.add_row(t, bi, 1);
                continue;
            }
            if (w.d.at(t, t) < 0) w.negate_row(t);
            break;
        }
        if (t == tmax) break;
    }

    SNFResult r;
    r.diagonal.reserve(tmax);
    for (int i = 0; i < tmax; ++i) r.diagonal.push_back(w.d.at(i, i));
    r.left = std::move(w.left);
    r.right = std::move(w.right);
    return r;
}

int rank(const IntMatrix& a) {
    SNFResult s = smith_normal_form(a);
    int r = 0;
    for (const Int& d : s.diagonal)
        if (d != 0) ++r;
    return r;
}

int signature(const IntMatrix& a) {
    if (!a.is_square() || !a.is_symmetric())
        throw DimensionError("signature: matrix is not symmetric");
    const int n = a.rows();
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));

    std::vector<int> live;
    for (int i = 0; i < n; ++i) live.push_back(i);
    int sig = 0;

    while (!live.empty()) {
        // Prefer a nonzero diagonal pivot: split off a 1x1 block and take
        // the Schur complement (congruence preserves inertia).
        int p = -1;
        for (int i : live)
            if (!w[i][i].is_zero()) {
                p = i;
                break;
            }
        if (p >= 0) {
            sig += w[p][p].sign();
            Rat piv = w[p][p];
            live.erase(std::find(live.begin(), live.end(), p));
            for (int i : live)
                for (int j : live) w[i][j] -= w[i][p] * w[p][j] / piv;
            continue;
        }
        // All live diagonals vanish: any nonzero entry sits in a block
        // [[0, b], [b, 0]], a hyperbolic plane of signature 0.
        int pi = -1, pj = -1;
        for (size_t s = 0; s < live.size() && pi < 0; ++s)
            for (size_t t = s + 1; t < live.size(); ++t)
                if (!w[live[s]][live[t]].is_zero()) {
                    pi = live[s];
                    pj = live[t];
                    break;
                }
        if (pi < 0) break;  // the rest is the zero form
        Rat b = w[pi][pj];
        live.erase(std::find(live.begin(), live.end(), pi));
        live.erase(std::find(live.begin(), live.end(), pj));
        for (int i : live)
            for (int j : live) w[i][j] -= (w[i][pi] * w[pj][j] + w[i][pj] * w[pi][j]) / b;
    }
    return sig;
}

}  // namespace legknot
