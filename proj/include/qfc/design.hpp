#pragma once

#include "qfc/plant.hpp"

namespace qfc {

/// Feedback gain K, observer gain L and the derived closed-loop matrices
/// R = A_d - L C (error dynamics) and Rbar = A_d - B_d K.
struct GainPair {
    Matrix K;     ///< m x n feedback gain
    Matrix L;     ///< n x p observer gain
    Matrix R;     ///< A_d - L C
    Matrix Rbar;  ///< A_d - B_d K

    static GainPair from(const DiscretePlant& dp, const Matrix& K, const Matrix& L);

    double error_radius() const { return spectral_radius(R); }
    double closed_loop_radius() const { return spectral_radius(Rbar); }
};

/// Infinite-horizon LQR gain K = (Ru + B'PB)^{-1} B'PA with P from the DARE.
/// The closed loop A_d - B_d K must come out Schur.
Matrix lqr_gain(const DiscretePlant& dp, const Matrix& Qx, const Matrix& Ru);

/// Steady-state Kalman (predictor) gain L = A P C'(V + C P C')^{-1} from the
/// dual DARE. The error dynamics A_d - L C must come out Schur.
Matrix kalman_gain(const DiscretePlant& dp, const Matrix& W, const Matrix& V);

/// Smallest eta >= 1 with rank [C; C A_d; ...; C A_d^{eta-1}] = n.
int observability_index(const DiscretePlant& dp);

/// Observer gain making A_d - L C nilpotent with index eta (the observability
/// index): Ackermann's formula for p = 1, the dual Luenberger canonical-form
/// block construction for p > 1.
Matrix deadbeat_observer_gain(const DiscretePlant& dp);

/// ||C A_d Cbold^+|| with Cbold = [C; C A_d; ...; C A_d^{eta-1}] A_d^{-eta+1},
/// the data-rate constant of the pseudo-inverse-observer baseline.
double pseudo_inverse_observer_norm(const DiscretePlant& dp);

}  // namespace qfc
