#ifndef SQPL_TYPES_HPP
#define SQPL_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace sqpl {

using cxd = std::complex<double>;
using SpMat = Eigen::SparseMatrix<cxd>;            // column-major, used everywhere
using SpMatRM = Eigen::SparseMatrix<cxd, Eigen::RowMajor>;
using DenseMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

inline constexpr cxd I_UNIT{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double phi) {
    double w = std::fmod(phi, 2.0 * PI);
    if (w < 0.0) w += 2.0 * PI;
    // fmod can return 2*pi - eps rounding up; normalize exactly
    if (w >= 2.0 * PI) w -= 2.0 * PI;
    return w;
}

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatchError : Error {
    using Error::Error;
};
struct RatioMismatchError : Error {
    using Error::Error;
};
struct PhaseMismatchError : Error {
    using Error::Error;
};
struct SingularSteadyStateError : Error {
    using Error::Error;
};
struct IntegrationError : Error {
    using Error::Error;
};
struct CutoffSearchError : Error {
    using Error::Error;
};
struct NoSignChangeError : Error {
    using Error::Error;
};
struct NonLorentzianError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace sqpl

#endif
