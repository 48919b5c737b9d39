#include "qfc/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qfc {

namespace {
constexpr int kExpSeriesOrder = 20;
constexpr double kDareTol = 1e-12;
constexpr long kDareMaxIter = 1000000;

void require_square(const Matrix& M, const char* who) {
    if (M.rows() != M.cols()) {
        throw DimensionError(std::string(who) + ": matrix must be square, got " +
                             std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
    }
}
}  // namespace

bool all_finite(const Matrix& M) {
    return M.allFinite();
}

Matrix mat_exp(const Matrix& A, double t) {
    require_square(A, "mat_exp");
    if (!std::isfinite(t)) throw ArgumentError("mat_exp: t must be finite");
    if (!all_finite(A)) throw ArgumentError("mat_exp: matrix entries must be finite");

    const Eigen::Index n = A.rows();
    Matrix X = A * t;

    // scale so the series argument has norm <= 1/2
    const double norm = induced_max_norm(X);
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
        X /= std::pow(2.0, squarings);
    }

    Matrix result = Matrix::Identity(n, n);
    Matrix term = Matrix::Identity(n, n);
    for (int k = 1; k <= kExpSeriesOrder; ++k) {
        term = (term * X) / static_cast<double>(k);
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;

    if (!all_finite(result)) throw SolverError("mat_exp: result is not finite");
    return result;
}

double induced_max_norm(const Matrix& M) {
    if (M.size() == 0) return 0.0;
    return M.cwiseAbs().rowwise().sum().maxCoeff();
}

double spectral_radius(const Matrix& M) {
    require_square(M, "spectral_radius");
    if (M.rows() == 0) return 0.0;
    Eigen::EigenSolver<Matrix> es(M, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw SolverError("spectral_radius: eigenvalue iteration failed");
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

Matrix solve_dare(const Matrix& A, const Matrix& B, const Matrix& Q, const Matrix& Rw) {
    require_square(A, "solve_dare(A)");
    require_square(Q, "solve_dare(Q)");
    require_square(Rw, "solve_dare(Rw)");
    const Eigen::Index n = A.rows();
    const Eigen::Index m = B.cols();
    if (B.rows() != n || Q.rows() != n || Rw.rows() != m) {
        throw DimensionError("solve_dare: dimension mismatch between A, B, Q, Rw");
    }
    const double qscale = induced_max_norm(Q);
    if (induced_max_norm(Q - Q.transpose()) > 1e-9 * std::max(1.0, qscale)) {
        throw ArgumentError("solve_dare: Q must be symmetric");
    }
    if (induced_max_norm(Rw - Rw.transpose()) > 1e-9 * std::max(1.0, induced_max_norm(Rw))) {
        throw ArgumentError("solve_dare: Rw must be symmetric");
    }

    Matrix P = Q;
    for (long it = 0; it < kDareMaxIter; ++it) {
        const Matrix BtP = B.transpose() * P;
        Eigen::LDLT<Matrix> gram(Rw + BtP * B);
        if (gram.info() != Eigen::Success) {
            throw SolverError("solve_dare: Rw + B'PB not factorizable (Rw must be positive definite)");
        }
        Matrix next = A.transpose() * P * A -
                      (BtP * A).transpose() * gram.solve(BtP * A) + Q;
        next = 0.5 * (next + next.transpose().eval());  // keep iterates symmetric
        if (induced_max_norm(next - P) <= kDareTol) return next;
        P = next;
    }
    throw SolverError("solve_dare: no convergence within iteration cap");
}

Matrix pseudo_inverse(const Matrix& M) {
    if (numerical_rank(M) < M.cols()) {
        throw RankError("pseudo_inverse: matrix does not have full column rank");
    }
    Eigen::LDLT<Matrix> gram(M.transpose() * M);
    if (gram.info() != Eigen::Success) {
        throw RankError("pseudo_inverse: Gram matrix not factorizable");
    }
    return gram.solve(M.transpose());
}

Eigen::Index numerical_rank(const Matrix& M, double tol) {
    if (tol <= 0) throw ArgumentError("numerical_rank: tol must be positive");
    if (M.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double threshold = tol * sv(0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) ++r;
    }
    return r;
}

}  // namespace qfc
