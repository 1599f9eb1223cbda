// Copyright (c) 2026 The geopose authors.
//
// This software is licensed under the Apache License, Version 2.0 (the "License").
// You may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geopose {

/// Bad caller input: non-finite values, shape mismatches, out-of-range options.
class InvalidArgumentError : public std::invalid_argument {
  public:
    explicit InvalidArgumentError(const std::string& what)
      : std::invalid_argument(what)
    {
    }
};

/// Scale solve attempted on an all-ground or empty mask (sum h^2 below threshold).
class DegenerateScaleError : public std::runtime_error {
  public:
    explicit DegenerateScaleError(std::size_t valid_pixels)
      : std::runtime_error("degenerate scale solve: sum of squared heights below 1e-12 over " +
                           std::to_string(valid_pixels) + " valid pixels")
      , valid_pixels_(valid_pixels)
    {
    }

    std::size_t valid_pixels() const { return valid_pixels_; }

  private:
    std::size_t valid_pixels_;
};

/// 2x2 camera block not invertible for an operation that requires it.
class SingularCameraError : public std::runtime_error {
  public:
    explicit SingularCameraError(double det)
      : std::runtime_error("singular camera: |det| of leading 2x2 block is " + std::to_string(det))
    {
    }
};

/// Metric computation with zero jointly valid samples.
class EmptyComparisonError : public std::runtime_error {
  public:
    explicit EmptyComparisonError(const std::string& what)
      : std::runtime_error(what)
    {
    }
};

/// Fewer samples than the operation can work with (but more than zero).
class InsufficientDataError : public std::runtime_error {
  public:
    explicit InsufficientDataError(const std::string& what)
      : std::runtime_error(what)
    {
    }
};

/// File format or filesystem failure.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what)
      : std::runtime_error(what)
    {
    }
};

} // namespace geopose
