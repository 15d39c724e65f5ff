// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "genkb/embed/correlation.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "genkb/error.h"

namespace genkb {
namespace {

void CheckLengths(ConstSpan a, ConstSpan b, std::size_t out) {
  if (a.size() != b.size() || a.size() != out) {
    throw Error("circular correlation: length mismatch (" +
                std::to_string(a.size()) + ", " + std::to_string(b.size()) +
                ", " + std::to_string(out) + ")");
  }
  if (a.empty()) throw Error("circular correlation: empty vectors");
}

// FFTW's planner is not reentrant.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

void CircularCorrelationInto(ConstSpan a, ConstSpan b, std::span<double> out) {
  CheckLengths(a, b, out.size());
  const std::size_t d = a.size();
  for (std::size_t k = 0; k < d; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t j = i + k;
      if (j >= d) j -= d;
      sum += a[i] * b[j];
    }
    out[k] = sum;
  }
}

Vec CircularCorrelation(ConstSpan a, ConstSpan b) {
  Vec out(a.size());
  CircularCorrelationInto(a, b, out);
  return out;
}

void CircularConvolutionInto(ConstSpan a, ConstSpan b, std::span<double> out) {
  CheckLengths(a, b, out.size());
  const std::size_t d = a.size();
  for (std::size_t j = 0; j < d; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t i = j + d - k;
      if (i >= d) i -= d;
      sum += a[k] * b[i];
    }
    out[j] = sum;
  }
}

Vec CircularConvolution(ConstSpan a, ConstSpan b) {
  Vec out(a.size());
  CircularConvolutionInto(a, b, out);
  return out;
}

double Dot(ConstSpan a, ConstSpan b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

struct FftCorrelator::Plans {
  double* real = nullptr;
  fftw_complex* fa = nullptr;
  fftw_complex* fb = nullptr;
  fftw_plan forward_a = nullptr;
  fftw_plan forward_b = nullptr;
  fftw_plan inverse = nullptr;
  double* real_b = nullptr;
};

FftCorrelator::FftCorrelator(std::size_t dim)
    : dim_(dim), plans_(std::make_unique<Plans>()) {
  if (dim == 0) throw Error("FftCorrelator: dimension must be positive");
  const std::size_t bins = dim / 2 + 1;
  auto& p = *plans_;
  std::lock_guard<std::mutex> lock(PlannerMutex());
  p.real = fftw_alloc_real(dim);
  p.real_b = fftw_alloc_real(dim);
  p.fa = fftw_alloc_complex(bins);
  p.fb = fftw_alloc_complex(bins);
  const int n = static_cast<int>(dim);
  p.forward_a = fftw_plan_dft_r2c_1d(n, p.real, p.fa, FFTW_ESTIMATE);
  p.forward_b = fftw_plan_dft_r2c_1d(n, p.real_b, p.fb, FFTW_ESTIMATE);
  p.inverse = fftw_plan_dft_c2r_1d(n, p.fa, p.real, FFTW_ESTIMATE);
}

FftCorrelator::~FftCorrelator() {
  auto& p = *plans_;
  std::lock_guard<std::mutex> lock(PlannerMutex());
  fftw_destroy_plan(p.forward_a);
  fftw_destroy_plan(p.forward_b);
  fftw_destroy_plan(p.inverse);
  fftw_free(p.real);
  fftw_free(p.real_b);
  fftw_free(p.fa);
  fftw_free(p.fb);
}

void FftCorrelator::Transform(ConstSpan a, ConstSpan b) {
  auto& p = *plans_;
  std::copy(a.begin(), a.end(), p.real);
  std::copy(b.begin(), b.end(), p.real_b);
  fftw_execute(p.forward_a);
  fftw_execute(p.forward_b);
}

void FftCorrelator::Correlate(ConstSpan a, ConstSpan b, std::span<double> out) {
  CheckLengths(a, b, out.size());
  if (a.size() != dim_) throw Error("FftCorrelator: dimension mismatch");
  Transform(a, b);
  auto& p = *plans_;
  // corr(a, b) = ifft(conj(A) * B)
  for (std::size_t k = 0; k < dim_ / 2 + 1; ++k) {
    const double ar = p.fa[k][0], ai = -p.fa[k][1];
    const double br = p.fb[k][0], bi = p.fb[k][1];
    p.fa[k][0] = ar * br - ai * bi;
    p.fa[k][1] = ar * bi + ai * br;
  }
  fftw_execute(p.inverse);
  const double scale = 1.0 / static_cast<double>(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = p.real[k] * scale;
}

void FftCorrelator::Convolve(ConstSpan a, ConstSpan b, std::span<double> out) {
  CheckLengths(a, b, out.size());
  if (a.size() != dim_) throw Error("FftCorrelator: dimension mismatch");
  Transform(a, b);
  auto& p = *plans_;
  for (std::size_t k = 0; k < dim_ / 2 + 1; ++k) {
    const double ar = p.fa[k][0], ai = p.fa[k][1];
    const double br = p.fb[k][0], bi = p.fb[k][1];
    p.fa[k][0] = ar * br - ai * bi;
    p.fa[k][1] = ar * bi + ai * br;
  }
  fftw_execute(p.inverse);
  const double scale = 1.0 / static_cast<double>(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = p.real[k] * scale;
}

Vec FftCorrelator::Correlate(ConstSpan a, ConstSpan b) {
  Vec out(a.size());
  Correlate(a, b, out);
  return out;
}

Vec FftCorrelator::Convolve(ConstSpan a, ConstSpan b) {
  Vec out(a.size());
  Convolve(a, b, out);
  return out;
}

bool FlipCheck(ConstSpan a, ConstSpan b, const CorrelationFn& correlate,
               double tol) {
  if (a.size() != b.size() || a.empty()) return false;
  const Vec ab = correlate(a, b);
  const Vec ba = correlate(b, a);
  const std::size_t d = a.size();
  if (ab.size() != d || ba.size() != d) return false;
  for (std::size_t k = 0; k < d; ++k) {
    if (!(std::abs(ab[k] - ba[(d - k) % d]) <= tol)) return false;
  }
  return true;
}

bool FlipCheck(ConstSpan a, ConstSpan b, double tol) {
  return FlipCheck(
      a, b, [](ConstSpan x, ConstSpan y) { return CircularCorrelation(x, y); },
      tol);
}

}  // namespace genkb
