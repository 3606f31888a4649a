#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tristego/videoio.hpp"

namespace tristego {

struct QualityReport {
  std::vector<double> per_frame_psnr;  // +inf for identical frames
  double global_psnr = 0.0;            // +inf when mse == 0
  double mse = 0.0;
  std::uint64_t changed_samples = 0;
  double changed_fraction = 0.0;
  std::uint64_t non_lsb_changes = 0;   // differing samples with |xor| != 1

  /// key=value per line; floats with 4 decimals, infinities as "inf".
  std::string to_text() const;
  /// Single JSON object with the same fields and formatting rules.
  std::string to_json() const;
};

/// Mean squared sample error. Requires identical shapes.
double mse(const VideoSequence& a, const VideoSequence& b);

/// 10 * log10(255^2 / m); +inf for m == 0. Rejects negative input.
double psnr(double m);

/// Counts differing samples, flags any non-LSB difference, and fills a full
/// QualityReport. Requires identical shapes.
QualityReport lsb_diff_census(const VideoSequence& a, const VideoSequence& b);

}  // namespace tristego
