#include "qclt/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace qclt::fft {

namespace {

// FFTW plan creation is not thread-safe; new-array execution is. Plans are
// created once per shape with FFTW_ESTIMATE | FFTW_UNALIGNED, which keeps the
// algorithm choice deterministic and independent of buffer alignment.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan complex_1d(std::size_t n, int sign) {
    std::scoped_lock lock(mutex_);
    auto key = std::tuple<std::size_t, std::size_t, int>{n, 0, sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<cplx> dummy_in(n), dummy_out(n);
    fftw_plan p = fftw_plan_dft_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(dummy_in.data()),
        reinterpret_cast<fftw_complex*>(dummy_out.data()),
        sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

  fftw_plan complex_2d(std::size_t rows, std::size_t cols, int sign) {
    std::scoped_lock lock(mutex_);
    auto key = std::tuple<std::size_t, std::size_t, int>{rows, cols, sign};
    auto it = plans2d_.find(key);
    if (it != plans2d_.end()) return it->second;
    std::vector<cplx> dummy_in(rows * cols), dummy_out(rows * cols);
    fftw_plan p = fftw_plan_dft_2d(
        static_cast<int>(rows), static_cast<int>(cols),
        reinterpret_cast<fftw_complex*>(dummy_in.data()),
        reinterpret_cast<fftw_complex*>(dummy_out.data()),
        sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans2d_.emplace(key, p);
    return p;
  }

  fftw_plan r2c_1d(std::size_t n) {
    std::scoped_lock lock(mutex_);
    auto it = r2c_.find(n);
    if (it != r2c_.end()) return it->second;
    std::vector<double> dummy_in(n);
    std::vector<cplx> dummy_out(n / 2 + 1);
    fftw_plan p = fftw_plan_dft_r2c_1d(
        static_cast<int>(n), dummy_in.data(),
        reinterpret_cast<fftw_complex*>(dummy_out.data()),
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    r2c_.emplace(n, p);
    return p;
  }

  fftw_plan c2r_1d(std::size_t n) {
    std::scoped_lock lock(mutex_);
    auto it = c2r_.find(n);
    if (it != c2r_.end()) return it->second;
    std::vector<cplx> dummy_in(n / 2 + 1);
    std::vector<double> dummy_out(n);
    fftw_plan p = fftw_plan_dft_c2r_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(dummy_in.data()),
        dummy_out.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    c2r_.emplace(n, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> plans_;
  std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> plans2d_;
  std::map<std::size_t, fftw_plan> r2c_;
  std::map<std::size_t, fftw_plan> c2r_;
};

}  // namespace

void dft(std::span<const cplx> in, std::span<cplx> out, int sign) {
  if (in.size() != out.size()) throw std::invalid_argument("fft: size mismatch");
  fftw_plan p = PlanCache::instance().complex_1d(in.size(), sign);
  fftw_execute_dft(p,
                   reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

void dft(std::vector<cplx>& data, int sign) {
  // Plans are created out-of-place; honor that by staging through a copy.
  std::vector<cplx> input(data);
  dft(std::span<const cplx>(input), std::span<cplx>(data), sign);
}

std::vector<cplx> rdft(std::span<const double> in, std::size_t n_padded) {
  if (n_padded < in.size()) throw std::invalid_argument("rdft: padding too small");
  std::vector<double> buf(n_padded, 0.0);
  std::copy(in.begin(), in.end(), buf.begin());
  std::vector<cplx> out(n_padded / 2 + 1);
  fftw_plan p = PlanCache::instance().r2c_1d(n_padded);
  fftw_execute_dft_r2c(p, buf.data(), reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

std::vector<double> irdft(std::span<const cplx> spectrum, std::size_t n_padded) {
  if (spectrum.size() != n_padded / 2 + 1) {
    throw std::invalid_argument("irdft: spectrum size mismatch");
  }
  // c2r destroys its input; work on a copy.
  std::vector<cplx> buf(spectrum.begin(), spectrum.end());
  std::vector<double> out(n_padded);
  fftw_plan p = PlanCache::instance().c2r_1d(n_padded);
  fftw_execute_dft_c2r(p, reinterpret_cast<fftw_complex*>(buf.data()), out.data());
  const double scale = 1.0 / static_cast<double>(n_padded);
  for (double& v : out) v *= scale;
  return out;
}

void dft2(std::span<const cplx> in, std::span<cplx> out, std::size_t rows,
          std::size_t cols, int sign) {
  if (in.size() != rows * cols || out.size() != rows * cols) {
    throw std::invalid_argument("fft2: size mismatch");
  }
  fftw_plan p = PlanCache::instance().complex_2d(rows, cols, sign);
  fftw_execute_dft(p,
                   reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace qclt::fft
