#include "qfc/design.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>
#include <vector>

namespace qfc {

namespace {
constexpr double kConditionLimit = 1e12;
constexpr double kNilpotencyFactor = 1e-8;

double condition_2norm(const Matrix& M) {
    Eigen::JacobiSVD<Matrix> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / sv(sv.size() - 1);
}
}  // namespace

GainPair GainPair::from(const DiscretePlant& dp, const Matrix& K, const Matrix& L) {
    if (K.rows() != dp.m() || K.cols() != dp.n()) throw DimensionError("GainPair: K must be m x n");
    if (L.rows() != dp.n() || L.cols() != dp.p()) throw DimensionError("GainPair: L must be n x p");
    GainPair g;
    g.K = K;
    g.L = L;
    g.R = dp.A_d - L * dp.C;
    g.Rbar = dp.A_d - dp.B_d * K;
    return g;
}

Matrix lqr_gain(const DiscretePlant& dp, const Matrix& Qx, const Matrix& Ru) {
    if (Qx.rows() != dp.n() || Qx.cols() != dp.n()) throw DimensionError("lqr_gain: Qx must be n x n");
    if (Ru.rows() != dp.m() || Ru.cols() != dp.m()) throw DimensionError("lqr_gain: Ru must be m x m");
    const Matrix P = solve_dare(dp.A_d, dp.B_d, Qx, Ru);
    const Matrix BtP = dp.B_d.transpose() * P;
    Eigen::LDLT<Matrix> gram(Ru + BtP * dp.B_d);
    if (gram.info() != Eigen::Success) throw SolverError("lqr_gain: Ru + B'PB not factorizable");
    const Matrix K = gram.solve(BtP * dp.A_d);
    if (spectral_radius(dp.A_d - dp.B_d * K) >= 1.0) {
        throw SolverError("lqr_gain: closed loop not Schur (check stabilizability and Qx)");
    }
    return K;
}

Matrix kalman_gain(const DiscretePlant& dp, const Matrix& W, const Matrix& V) {
    if (W.rows() != dp.n() || W.cols() != dp.n()) throw DimensionError("kalman_gain: W must be n x n");
    if (V.rows() != dp.p() || V.cols() != dp.p()) throw DimensionError("kalman_gain: V must be p x p");
    const Matrix P = solve_dare(dp.A_d.transpose(), dp.C.transpose(), W, V);
    Eigen::LDLT<Matrix> gram(V + dp.C * P * dp.C.transpose());
    if (gram.info() != Eigen::Success) throw SolverError("kalman_gain: V + CPC' not factorizable");
    // L = A P C' (V + C P C')^{-1}, via the transposed solve
    const Matrix L = gram.solve(dp.C * P * dp.A_d.transpose()).transpose();
    if (spectral_radius(dp.A_d - L * dp.C) >= 1.0) {
        throw SolverError("kalman_gain: error dynamics not Schur (check detectability and W)");
    }
    return L;
}

int observability_index(const DiscretePlant& dp) {
    const Eigen::Index n = dp.n();
    Matrix stacked(n * dp.p(), dp.n());
    Matrix block = dp.C;
    for (int eta = 1; eta <= n; ++eta) {
        stacked.middleRows((eta - 1) * dp.p(), dp.p()) = block;
        if (numerical_rank(stacked.topRows(eta * dp.p())) == n) return eta;
        block = block * dp.A_d;
    }
    throw ObservabilityError("observability_index: (C, A_d) is not observable");
}

namespace {

// Deadbeat state feedback for the dual pair (At, Bt): returns F with
// (At - Bt F)^mu = 0, mu the controllability index. Luenberger canonical
// form construction guided by the per-input controllability indices.
Matrix deadbeat_feedback(const Matrix& At, const Matrix& Bt) {
    const Eigen::Index n = At.rows();
    const Eigen::Index m = Bt.cols();

    // crate-order column selection from [Bt, At Bt, At^2 Bt, ...]
    std::vector<int> mu(m, 0);
    Matrix basis(n, 0);
    {
        std::vector<Matrix> level(m);
        for (Eigen::Index t = 0; t < m; ++t) level[t] = Bt.col(t);
        for (Eigen::Index lvl = 0; lvl < n && basis.cols() < n; ++lvl) {
            for (Eigen::Index t = 0; t < m && basis.cols() < n; ++t) {
                Matrix test(n, basis.cols() + 1);
                test << basis, level[t];
                if (numerical_rank(test) == test.cols()) {
                    basis = test;
                    ++mu[t];
                }
            }
            for (Eigen::Index t = 0; t < m; ++t) level[t] = At * level[t];
        }
    }
    if (basis.cols() < n) {
        throw ObservabilityError("deadbeat: pair is not observable");
    }

    // basis matrix S ordered block-by-input, sigma = last row of each block
    std::vector<Eigen::Index> kept;
    for (Eigen::Index t = 0; t < m; ++t) {
        if (mu[t] > 0) kept.push_back(t);
    }
    Matrix S(n, n);
    std::vector<Eigen::Index> sigma(kept.size());
    {
        Eigen::Index col = 0;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            Matrix v = Bt.col(kept[i]);
            for (int j = 0; j < mu[kept[i]]; ++j) {
                S.col(col++) = v;
                v = At * v;
            }
            sigma[i] = col - 1;
        }
    }
    if (condition_2norm(S) > kConditionLimit) {
        throw ConditioningError("deadbeat: observability structure too ill-conditioned");
    }
    const Matrix Sinv = S.inverse();

    const Eigen::Index r = static_cast<Eigen::Index>(kept.size());
    Matrix gamma(r, r);
    Matrix rhs(r, n);
    for (Eigen::Index i = 0; i < r; ++i) {
        Eigen::RowVectorXd q = Sinv.row(sigma[i]);
        for (int j = 0; j < mu[kept[i]] - 1; ++j) q = q * At;
        gamma.row(i) = q * Bt(Eigen::all, kept);  // q_i A^{mu_i - 1} B
        rhs.row(i) = q * At;                      // q_i A^{mu_i}
    }

    Eigen::FullPivLU<Matrix> lu(gamma);
    if (!lu.isInvertible()) {
        throw ConditioningError("deadbeat: interaction matrix singular");
    }
    const Matrix Fkept = lu.solve(rhs);
    Matrix F = Matrix::Zero(m, n);
    for (Eigen::Index i = 0; i < r; ++i) F.row(kept[i]) = Fkept.row(i);
    return F;
}

}  // namespace

Matrix deadbeat_observer_gain(const DiscretePlant& dp) {
    const Eigen::Index n = dp.n();
    const int eta = observability_index(dp);

    Matrix L;
    if (dp.p() == 1) {
        // Ackermann: L = A_d^n O^{-1} e_n, all observer poles at the origin
        Matrix obs(n, n);
        Matrix row = dp.C;
        for (Eigen::Index k = 0; k < n; ++k) {
            obs.row(k) = row;
            row = row * dp.A_d;
        }
        if (condition_2norm(obs) > kConditionLimit) {
            throw ConditioningError("deadbeat_observer_gain: observability matrix too ill-conditioned");
        }
        Matrix phi = Matrix::Identity(n, n);
        for (Eigen::Index k = 0; k < n; ++k) phi = phi * dp.A_d;
        Vector en = Vector::Zero(n);
        en(n - 1) = 1.0;
        L = phi * obs.fullPivLu().solve(Matrix(en));
    } else {
        const Matrix F = deadbeat_feedback(dp.A_d.transpose(), dp.C.transpose());
        L = F.transpose();
    }

    // nilpotency check: ||R^eta|| <= 1e-8 ||A_d||^eta
    const Matrix R = dp.A_d - L * dp.C;
    Matrix Rp = Matrix::Identity(n, n);
    for (int k = 0; k < eta; ++k) Rp = Rp * R;
    const double tol = kNilpotencyFactor * std::pow(induced_max_norm(dp.A_d), eta);
    if (induced_max_norm(Rp) > tol) {
        throw ConditioningError("deadbeat_observer_gain: nilpotency check failed");
    }
    return L;
}

double pseudo_inverse_observer_norm(const DiscretePlant& dp) {
    const int eta = observability_index(dp);
    const Eigen::Index n = dp.n();

    Matrix stacked(eta * dp.p(), n);
    Matrix block = dp.C;
    for (int k = 0; k < eta; ++k) {
        stacked.middleRows(k * dp.p(), dp.p()) = block;
        block = block * dp.A_d;
    }
    Eigen::FullPivLU<Matrix> lu(dp.A_d);
    if (!lu.isInvertible()) throw ArgumentError("pseudo_inverse_observer_norm: A_d must be invertible");
    Matrix shift = Matrix::Identity(n, n);
    const Matrix Ainv = lu.inverse();
    for (int k = 0; k < eta - 1; ++k) shift = shift * Ainv;

    const Matrix cbold = stacked * shift;
    return induced_max_norm(dp.C * dp.A_d * pseudo_inverse(cbold));
}

}  // namespace qfc
