#include "tristego/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "tristego/errors.hpp"

namespace tristego {
namespace {

void require_same_shape(const VideoSequence& a, const VideoSequence& b) {
  a.validate();
  b.validate();
  if (a.meta.width != b.meta.width || a.meta.height != b.meta.height ||
      a.meta.colorspace != b.meta.colorspace ||
      a.frames.size() != b.frames.size())
    throw Error("shape mismatch between video sequences");
}

std::uint64_t squared_error(const Frame& x, const Frame& y) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    const std::int64_t d =
        std::int64_t(x.samples[i]) - std::int64_t(y.samples[i]);
    sum += std::uint64_t(d * d);
  }
  return sum;
}

std::string format_value(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

nlohmann::json json_value(double v) {
  if (std::isinf(v)) return "inf";
  return std::round(v * 1e4) / 1e4;
}

}  // namespace

double mse(const VideoSequence& a, const VideoSequence& b) {
  require_same_shape(a, b);
  std::uint64_t sum = 0;
  for (std::size_t f = 0; f < a.frames.size(); ++f)
    sum += squared_error(a.frames[f], b.frames[f]);
  return double(sum) / double(a.total_samples());
}

double psnr(double m) {
  if (m < 0) throw Error("mean squared error cannot be negative");
  if (m == 0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / m);
}

QualityReport lsb_diff_census(const VideoSequence& a, const VideoSequence& b) {
  require_same_shape(a, b);

  QualityReport report;
  const std::size_t frame_samples = a.meta.bytes_per_frame();
  std::uint64_t total_sq = 0;
  for (std::size_t f = 0; f < a.frames.size(); ++f) {
    const Frame& x = a.frames[f];
    const Frame& y = b.frames[f];
    const std::uint64_t sq = squared_error(x, y);
    total_sq += sq;
    report.per_frame_psnr.push_back(psnr(double(sq) / double(frame_samples)));
    for (std::size_t i = 0; i < x.samples.size(); ++i) {
      const std::uint8_t diff = x.samples[i] ^ y.samples[i];
      if (diff == 0) continue;
      ++report.changed_samples;
      if (diff != 1) ++report.non_lsb_changes;
    }
  }

  const std::uint64_t total = a.total_samples();
  report.mse = double(total_sq) / double(total);
  report.global_psnr = psnr(report.mse);
  report.changed_fraction = double(report.changed_samples) / double(total);
  return report;
}

std::string QualityReport::to_text() const {
  std::string out;
  out += "mse=" + format_value(mse) + "\n";
  out += "global_psnr=" + format_value(global_psnr) + "\n";
  out += "changed_samples=" + std::to_string(changed_samples) + "\n";
  out += "changed_fraction=" + format_value(changed_fraction) + "\n";
  out += "non_lsb_changes=" + std::to_string(non_lsb_changes) + "\n";
  out += "per_frame_psnr=";
  for (std::size_t i = 0; i < per_frame_psnr.size(); ++i) {
    if (i > 0) out += ',';
    out += format_value(per_frame_psnr[i]);
  }
  out += "\n";
  return out;
}

std::string QualityReport::to_json() const {
  nlohmann::json j;
  j["mse"] = json_value(mse);
  j["global_psnr"] = json_value(global_psnr);
  j["changed_samples"] = changed_samples;
  j["changed_fraction"] = json_value(changed_fraction);
  j["non_lsb_changes"] = non_lsb_changes;
  auto frames = nlohmann::json::array();
  for (double v : per_frame_psnr) frames.push_back(json_value(v));
  j["per_frame_psnr"] = std::move(frames);
  return j.dump();
}

}  // namespace tristego
