#include "qfc/plant.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>

namespace qfc {

void ContinuousPlant::validate() const {
    if (A.rows() != A.cols()) throw DimensionError("plant: A must be square");
    if (B.rows() != A.rows()) throw DimensionError("plant: B must have n rows");
    if (C.cols() != A.rows()) throw DimensionError("plant: C must have n columns");
    if (!all_finite(A) || !all_finite(B) || !all_finite(C)) {
        throw ArgumentError("plant: matrix entries must be finite");
    }
    if (!state_names.empty() && static_cast<Eigen::Index>(state_names.size()) != n()) {
        throw DimensionError("plant: state_names size mismatch");
    }
    if (!input_names.empty() && static_cast<Eigen::Index>(input_names.size()) != m()) {
        throw DimensionError("plant: input_names size mismatch");
    }
    if (!output_names.empty() && static_cast<Eigen::Index>(output_names.size()) != p()) {
        throw DimensionError("plant: output_names size mismatch");
    }
}

void DiscretePlant::validate() const {
    if (A_d.rows() != A_d.cols()) throw DimensionError("discrete plant: A_d must be square");
    if (B_d.rows() != A_d.rows()) throw DimensionError("discrete plant: B_d must have n rows");
    if (C.cols() != A_d.rows()) throw DimensionError("discrete plant: C must have n columns");
    if (!(h > 0)) throw ArgumentError("discrete plant: h must be positive");
    Eigen::FullPivLU<Matrix> lu(A_d);
    if (!lu.isInvertible()) {
        throw ArgumentError("discrete plant: A_d must be invertible");
    }
}

DiscretePlant discretize(const ContinuousPlant& plant, double h) {
    plant.validate();
    if (!(h > 0) || !std::isfinite(h)) throw ArgumentError("discretize: h must be positive");

    const Eigen::Index n = plant.n();
    const Eigen::Index m = plant.m();
    Matrix aug = Matrix::Zero(n + m, n + m);
    aug.topLeftCorner(n, n) = plant.A;
    aug.topRightCorner(n, m) = plant.B;
    const Matrix big = mat_exp(aug, h);

    DiscretePlant dp;
    dp.A_d = big.topLeftCorner(n, n);
    dp.B_d = big.topRightCorner(n, m);
    dp.C = plant.C;
    dp.h = h;
    dp.validate();
    return dp;
}

namespace {

// rank of the complex PBH pencil [lambda I - A, W]
Eigen::Index complex_pencil_rank(const Matrix& A, const Matrix& W, std::complex<double> lambda) {
    const Eigen::Index n = A.rows();
    Eigen::MatrixXcd pencil(n, n + W.cols());
    pencil.leftCols(n) = lambda * Eigen::MatrixXcd::Identity(n, n) - A.cast<std::complex<double>>();
    pencil.rightCols(W.cols()) = W.cast<std::complex<double>>();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pencil);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > 1e-9 * sv(0)) ++r;
    }
    return r;
}

}  // namespace

AssumptionReport check_assumptions(const DiscretePlant& dp) {
    const Eigen::Index n = dp.n();
    AssumptionReport report;

    Eigen::EigenSolver<Matrix> es(dp.A_d, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw SolverError("check_assumptions: eigenvalue iteration failed");

    report.stabilizable = true;
    report.detectable = true;
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::complex<double> lambda = es.eigenvalues()(i);
        if (std::abs(lambda) < 1.0) continue;
        if (complex_pencil_rank(dp.A_d, dp.B_d, lambda) < n) report.stabilizable = false;
        if (complex_pencil_rank(dp.A_d.transpose(), dp.C.transpose(), std::conj(lambda)) < n) {
            report.detectable = false;
        }
    }

    Matrix obs(n * dp.p(), n);
    Matrix block = dp.C;
    for (Eigen::Index k = 0; k < n; ++k) {
        obs.middleRows(k * dp.p(), dp.p()) = block;
        block = block * dp.A_d;
    }
    report.observable = numerical_rank(obs) == n;
    return report;
}

ContinuousPlant benchmark(const std::string& name) {
    if (name == "inverted_pendulum") {
        ContinuousPlant plant;
        plant.A = Matrix{{0.0, 1.0, 0.0, 0.0},
                         {0.0, -20.06, 53.26, -1.096},
                         {0.0, 0.0, 0.0, 1.0},
                         {0.0, -20.01, 98.41, -2.025}};
        plant.B = Matrix{{0.0}, {35.28}, {0.0}, {35.18}};
        // Two measured coordinates: arm angle and pendulum angle.
        plant.C = Matrix{{1.0, 0.0, 0.0, 0.0},
                         {0.0, 0.0, 1.0, 0.0}};
        plant.state_names = {"arm_angle", "arm_angular_velocity",
                             "pendulum_angle", "pendulum_angular_velocity"};
        plant.input_names = {"motor_voltage"};
        plant.output_names = {"arm_angle", "pendulum_angle"};
        plant.validate();
        return plant;
    }
    throw LookupError("benchmark: unknown plant '" + name + "'");
}

std::vector<std::string> benchmark_names() {
    return {"inverted_pendulum"};
}

}  // namespace qfc
