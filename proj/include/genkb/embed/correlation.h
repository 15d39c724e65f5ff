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

#ifndef GENKB_EMBED_CORRELATION_H_
#define GENKB_EMBED_CORRELATION_H_

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace genkb {

using Vec = std::vector<double>;
using ConstSpan = std::span<const double>;

// out[k] = sum_i a[i] * b[(i + k) mod d]. Direct O(d^2) summation.
Vec CircularCorrelation(ConstSpan a, ConstSpan b);
void CircularCorrelationInto(ConstSpan a, ConstSpan b, std::span<double> out);

// out[j] = sum_k a[k] * b[(j - k) mod d].
Vec CircularConvolution(ConstSpan a, ConstSpan b);
void CircularConvolutionInto(ConstSpan a, ConstSpan b, std::span<double> out);

double Dot(ConstSpan a, ConstSpan b);

// O(d log d) correlation and convolution through real-to-complex FFTs.
// Plans are created once per dimension. Not safe to share between threads.
class FftCorrelator {
 public:
  explicit FftCorrelator(std::size_t dim);
  ~FftCorrelator();
  FftCorrelator(const FftCorrelator&) = delete;
  FftCorrelator& operator=(const FftCorrelator&) = delete;

  std::size_t dim() const { return dim_; }
  void Correlate(ConstSpan a, ConstSpan b, std::span<double> out);
  void Convolve(ConstSpan a, ConstSpan b, std::span<double> out);
  Vec Correlate(ConstSpan a, ConstSpan b);
  Vec Convolve(ConstSpan a, ConstSpan b);

 private:
  struct Plans;
  void Transform(ConstSpan a, ConstSpan b);
  std::size_t dim_;
  std::unique_ptr<Plans> plans_;
};

using CorrelationFn = std::function<Vec(ConstSpan, ConstSpan)>;

// True when [a o b][k] == [b o a][(d - k) mod d] for every k within `tol`,
// using `correlate` for both sides.
bool FlipCheck(ConstSpan a, ConstSpan b, const CorrelationFn& correlate,
               double tol = 1e-10);
bool FlipCheck(ConstSpan a, ConstSpan b, double tol = 1e-10);

}  // namespace genkb

#endif  // GENKB_EMBED_CORRELATION_H_
