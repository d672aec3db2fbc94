#include "centra/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace centra {

namespace {

// Householder reduction of a symmetric matrix (in a, row-major) to
// tridiagonal form; d gets the diagonal, e the subdiagonal (e[0] unused).
// When accumulating, a is overwritten with the orthogonal transform.
void tridiagonalize(std::size_t n, std::vector<double>& a, std::vector<double>& d,
                    std::vector<double>& e, bool accumulate) {
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t l = i - 1;
        double h = 0.0;
        double scale = 0.0;
        if (l > 0) {
            for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(a[i * n + k]);
            if (scale == 0.0) {
                e[i] = a[i * n + l];
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                double f = a[i * n + l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    if (accumulate) a[j * n + i] = a[i * n + j] / h;
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += a[j * n + k] * a[i * n + k];
                    for (std::size_t k = j + 1; k <= l; ++k) g += a[k * n + j] * a[i * n + k];
                    e[j] = g / h;
                    f += e[j] * a[i * n + j];
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = a[i * n + j];
                    e[j] = g = e[j] - hh * f;
                    for (std::size_t k = 0; k <= j; ++k)
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    if (accumulate) d[0] = 0.0;
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (accumulate) {
            if (d[i] != 0.0) {
                const std::size_t l = i;  // columns 0..i-1
                for (std::size_t j = 0; j < l; ++j) {
                    double g = 0.0;
                    for (std::size_t k = 0; k < l; ++k) g += a[i * n + k] * a[k * n + j];
                    for (std::size_t k = 0; k < l; ++k) a[k * n + j] -= g * a[k * n + i];
                }
            }
            d[i] = a[i * n + i];
            a[i * n + i] = 1.0;
            for (std::size_t j = 0; j < i; ++j) a[j * n + i] = a[i * n + j] = 0.0;
        } else {
            d[i] = a[i * n + i];
        }
    }
}

// Implicit-shift QL on a tridiagonal matrix; z (when non-null) accumulates
// the eigenvectors on top of the Householder transform.
void ql_implicit(std::size_t n, std::vector<double>& d, std::vector<double>& e,
                 std::vector<double>* z) {
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (std::size_t l = 0; l < n; ++l) {
        std::size_t iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-300 || std::fabs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (++iter == 64) throw std::runtime_error("eigensolver failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                bool underflowed = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflowed = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (std::size_t k = 0; k < n; ++k) {
                            f = (*z)[k * n + i + 1];
                            (*z)[k * n + i + 1] = s * (*z)[k * n + i] + c * f;
                            (*z)[k * n + i] = c * (*z)[k * n + i] - s * f;
                        }
                    }
                }
                if (underflowed) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

SymmetricEigen symmetric_eigen(std::size_t n, const std::vector<double>& matrix_row_major,
                               bool want_vectors) {
    if (matrix_row_major.size() != n * n) throw std::invalid_argument("matrix size mismatch");
    SymmetricEigen out;
    if (n == 0) return out;

    std::vector<double> a = matrix_row_major;
    std::vector<double> d(n, 0.0);
    std::vector<double> e(n, 0.0);
    if (n == 1) {
        out.values = {a[0]};
        if (want_vectors) out.vectors = {1.0};
        return out;
    }

    tridiagonalize(n, a, d, e, want_vectors);
    ql_implicit(n, d, e, want_vectors ? &a : nullptr);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return d[x] > d[y]; });

    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.values[k] = d[order[k]];
    if (want_vectors) {
        out.vectors.resize(n * n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) out.vectors[i * n + k] = a[i * n + order[k]];
    }
    return out;
}

}  // namespace centra
