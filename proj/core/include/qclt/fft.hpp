#ifndef QCLT_FFT_HPP
#define QCLT_FFT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qclt/numerics.hpp"

namespace qclt::fft {

/// Unnormalized DFT, FFTW sign convention: sign = -1 applies
/// exp(-2*pi*i*j*k/N), sign = +1 applies exp(+2*pi*i*j*k/N).
/// Thread-safe; plans are cached per (size, sign) behind a mutex.
void dft(std::span<const cplx> in, std::span<cplx> out, int sign);

/// In-place variant.
void dft(std::vector<cplx>& data, int sign);

/// Real-to-complex DFT of `in` zero-padded to `n_padded` (power of two).
/// Returns the n_padded/2 + 1 nonredundant bins.
std::vector<cplx> rdft(std::span<const double> in, std::size_t n_padded);

/// Inverse of rdft, normalized so irdft(rdft(x, n), n) == x.
std::vector<double> irdft(std::span<const cplx> spectrum, std::size_t n_padded);

/// Unnormalized 2D DFT of a rows x cols row-major array.
void dft2(std::span<const cplx> in, std::span<cplx> out, std::size_t rows,
          std::size_t cols, int sign);

}  // namespace qclt::fft

#endif
