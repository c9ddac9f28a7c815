#include "gqd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gqd {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) {
        throw std::invalid_argument("matmul: incompatible shapes");
    }
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i) {
        const double* xi = &x.a[static_cast<size_t>(i) * x.cols];
        double* zi = &z.a[static_cast<size_t>(i) * z.cols];
        for (int k = 0; k < x.cols; ++k) {
            const double xik = xi[k];
            if (xik == 0.0) continue;
            const double* yk = &y.a[static_cast<size_t>(k) * y.cols];
            for (int j = 0; j < y.cols; ++j) {
                zi[j] += xik * yk[j];
            }
        }
    }
    return z;
}

Matrix matmul_abt(const Matrix& x, const Matrix& y) {
    if (x.cols != y.cols) {
        throw std::invalid_argument("matmul_abt: incompatible shapes");
    }
    Matrix z(x.rows, y.rows);
    for (int i = 0; i < x.rows; ++i) {
        const double* xi = &x.a[static_cast<size_t>(i) * x.cols];
        for (int j = 0; j < y.rows; ++j) {
            const double* yj = &y.a[static_cast<size_t>(j) * y.cols];
            double s = 0.0;
            for (int k = 0; k < x.cols; ++k) s += xi[k] * yj[k];
            z(i, j) = s;
        }
    }
    return z;
}

double inf_norm(const Matrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows; ++i) {
        double row = 0.0;
        for (int j = 0; j < m.cols; ++j) row += std::abs(m(i, j));
        best = std::max(best, row);
    }
    return best;
}

Matrix expm(const Matrix& m) {
    if (m.rows != m.cols) {
        throw std::invalid_argument("expm: matrix must be square");
    }
    const int n = m.rows;
    if (n == 0) return Matrix(0, 0);

    // Scale so the norm is at most 1/2, exponentiate the scaled matrix by a
    // Taylor series, then square back up.
    const double norm = inf_norm(m);
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    Matrix x = m;
    const double scale = std::ldexp(1.0, -squarings);
    for (double& v : x.a) v *= scale;

    Matrix result = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    bool converged = false;
    for (int k = 1; k <= 64; ++k) {
        term = matmul(term, x);
        const double inv_k = 1.0 / k;
        for (double& v : term.a) v *= inv_k;
        for (size_t idx = 0; idx < result.a.size(); ++idx) {
            result.a[idx] += term.a[idx];
        }
        if (inf_norm(term) < 1e-14 * std::max(1.0, inf_norm(result))) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw std::runtime_error("expm: Taylor series failed to converge");
    }
    for (int i = 0; i < squarings; ++i) {
        result = matmul(result, result);
    }
    return result;
}

std::vector<double> jacobi_eigenvalues(Matrix m) {
    if (m.rows != m.cols) {
        throw std::invalid_argument("jacobi_eigenvalues: matrix must be square");
    }
    const int n = m.rows;
    std::vector<double> eig;
    if (n == 0) return eig;
    if (n == 1) return {m(0, 0)};

    double* a = m.a.data();
    const size_t nn = static_cast<size_t>(n);

    // Symmetrise defensively; the solver assumes exact symmetry.
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const double avg = 0.5 * (a[p * nn + q] + a[q * nn + p]);
            a[p * nn + q] = a[q * nn + p] = avg;
        }
    }

    double frob2 = 0.0;
    for (size_t i = 0; i < nn * nn; ++i) frob2 += a[i] * a[i];
    const double stop = 1e-28 * std::max(frob2, 1e-300);

    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                off += a[p * nn + q] * a[p * nn + q];
            }
        }
        if (off <= stop) break;

        // Threshold schedule: skip small pivots during the first sweeps.
        const double thresh = sweep < 3 ? 0.2 * off / (n * n) : 0.0;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * nn + q];
                const double g = 100.0 * std::abs(apq);
                const double app = a[p * nn + p];
                const double aqq = a[q * nn + q];
                if (sweep > 3 && std::abs(app) + g == std::abs(app) &&
                    std::abs(aqq) + g == std::abs(aqq)) {
                    a[p * nn + q] = a[q * nn + p] = 0.0;
                    continue;
                }
                if (apq * apq <= thresh) continue;
                if (apq == 0.0) continue;

                const double h = aqq - app;
                double t;
                if (std::abs(h) + g == std::abs(h)) {
                    t = apq / h;
                } else {
                    const double theta = 0.5 * h / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double tapq = t * apq;

                a[p * nn + p] = app - tapq;
                a[q * nn + q] = aqq + tapq;
                a[p * nn + q] = a[q * nn + p] = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a[i * nn + p];
                    const double aiq = a[i * nn + q];
                    const double np_ = aip - s * (aiq + aip * tau);
                    const double nq_ = aiq + s * (aip - aiq * tau);
                    a[i * nn + p] = a[p * nn + i] = np_;
                    a[i * nn + q] = a[q * nn + i] = nq_;
                }
            }
        }
    }
    if (sweep == max_sweeps) {
        throw std::runtime_error("jacobi_eigenvalues: failed to converge");
    }

    eig.resize(nn);
    for (int i = 0; i < n; ++i) eig[static_cast<size_t>(i)] = a[i * nn + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace gqd
