#pragma once

#include <Eigen/Dense>
#include <complex>

namespace resample::fft {

// Radix-2 iterative FFT. Length must be a power of two (the frame size is
// fixed at 1024); throws NonPowerOfTwoLength otherwise. forward() computes
// X[k] = sum x[n] e^{-2*pi*i*k*n/N}; inverse() includes the 1/N factor so
// inverse(forward(x)) == x.
Eigen::VectorXcd forward(const Eigen::Ref<const Eigen::VectorXcd>& x);
Eigen::VectorXcd inverse(const Eigen::Ref<const Eigen::VectorXcd>& x);

Eigen::VectorXcd forward_real(const Eigen::Ref<const Eigen::VectorXd>& x);

// Orthonormal DCT-II and its inverse, computed through a 2N even extension
// of the radix-2 FFT; n must be a power of two.
Eigen::VectorXd dct2(const Eigen::Ref<const Eigen::VectorXd>& x);
Eigen::VectorXd idct2(const Eigen::Ref<const Eigen::VectorXd>& c);

bool is_power_of_two(Eigen::Index n);

}  // namespace resample::fft
