#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace tristego {

enum class Colorspace { C420, C444, Mono, Rgb24 };

/// Display name: "C420", "C444", "mono", "RGB24".
const char* colorspace_name(Colorspace cs) noexcept;

struct VideoMeta {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint32_t fps_num = 25;
  std::uint32_t fps_den = 1;
  Colorspace colorspace = Colorspace::C420;

  /// Verbatim stream-header tokens captured by read_y4m, written back as-is
  /// so a parse/write cycle is byte-identical. Empty for programmatically
  /// built sequences; write_y4m then synthesizes W/H/F/C tokens.
  std::vector<std::string> header_tokens;

  std::size_t bytes_per_frame() const;
  void validate() const;
};

struct Frame {
  /// Plane-ordered samples (Y then U then V; interleaved for RGB24),
  /// row-major within a plane. Exactly meta.bytes_per_frame() bytes.
  std::vector<std::uint8_t> samples;

  /// Raw text between "FRAME" and its newline, kept verbatim.
  std::string params;
};

struct VideoSequence {
  VideoMeta meta;
  std::vector<Frame> frames;

  std::size_t total_samples() const;
  void validate() const;
};

// YUV4MPEG2 stream grammar:
//   "YUV4MPEG2" (" " token)* "\n"  then per frame  "FRAME" params "\n" samples
// Tokens W/H are required, F defaults to 25:1, colorspace tokens accepted are
// C420, C444 and Cmono (C420 when absent). Unknown tokens ride along verbatim.
// Any unconsumed trailing bytes are an error.

VideoSequence read_y4m(std::istream& in);
VideoSequence read_y4m_file(const std::filesystem::path& path);

/// Writes the stream and returns the byte count. Rejects RGB24 input.
/// For any stream accepted by read_y4m, parse-then-write is byte-identical.
std::size_t write_y4m(const VideoSequence& video, std::ostream& out);
std::size_t write_y4m_file(const VideoSequence& video,
                           const std::filesystem::path& path);

/// Reads frame_000001.ppm, frame_000002.ppm, ... (binary P6, maxval 255,
/// contiguous numbering) as an RGB24 sequence at the default 25:1 rate.
VideoSequence read_ppm_dir(const std::filesystem::path& dir);

/// Writes "P6\n<w> <h>\n255\n" frames under dir and returns the file count.
/// Rejects non-RGB24 input.
std::size_t write_ppm_dir(const VideoSequence& video,
                          const std::filesystem::path& dir);

}  // namespace tristego
