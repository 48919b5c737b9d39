#pragma once

#include <string>
#include <vector>

#include "qfc/numerics.hpp"

namespace qfc {

/// Continuous-time LTI plant xdot = A x + B u, y = C x.
struct ContinuousPlant {
    Matrix A;  ///< n x n system matrix (1/second)
    Matrix B;  ///< n x m input matrix
    Matrix C;  ///< p x n output matrix
    std::vector<std::string> state_names;
    std::vector<std::string> input_names;
    std::vector<std::string> output_names;

    Eigen::Index n() const { return A.rows(); }
    Eigen::Index m() const { return B.cols(); }
    Eigen::Index p() const { return C.rows(); }

    /// Throws DimensionError/ArgumentError on inconsistent or non-finite data.
    void validate() const;
};

/// Exact zero-order-hold discretization of a ContinuousPlant.
struct DiscretePlant {
    Matrix A_d;  ///< e^{Ah}
    Matrix B_d;  ///< integral_0^h e^{As} B ds
    Matrix C;    ///< carried through unchanged
    double h = 0.0;  ///< sampling period, seconds

    Eigen::Index n() const { return A_d.rows(); }
    Eigen::Index m() const { return B_d.cols(); }
    Eigen::Index p() const { return C.rows(); }

    void validate() const;
};

/// ZOH discretization via the augmented-matrix exponential
/// exp([[A, B], [0, 0]] h) = [[A_d, B_d], [0, I]].
DiscretePlant discretize(const ContinuousPlant& plant, double h);

/// PBH structural checks on the discretized plant.
struct AssumptionReport {
    bool stabilizable = false;
    bool detectable = false;
    bool observable = false;
};

AssumptionReport check_assumptions(const DiscretePlant& dp);

/// Benchmark catalog. Only the inverted pendulum ships; other benchmark
/// plants are supplied by the user through plant definition files.
ContinuousPlant benchmark(const std::string& name);
std::vector<std::string> benchmark_names();

}  // namespace qfc
