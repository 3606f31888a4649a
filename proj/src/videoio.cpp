#include "tristego/videoio.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string_view>

#include "tristego/errors.hpp"

namespace fs = std::filesystem;

namespace tristego {
namespace {

constexpr std::string_view kY4mMagic = "YUV4MPEG2";

std::uint32_t parse_u32_field(std::string_view text, const char* what,
                              std::size_t offset) {
  std::uint32_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError(std::string("malformed ") + what + " token", offset);
  return value;
}

std::string slurp_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::string slurp_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return slurp_stream(in);
}

VideoSequence parse_y4m_buffer(std::string_view data) {
  if (data.substr(0, kY4mMagic.size()) != kY4mMagic)
    throw ParseError("missing YUV4MPEG2 magic", 0);
  std::size_t pos = kY4mMagic.size();

  VideoMeta meta;
  bool have_width = false;
  bool have_height = false;
  while (true) {
    if (pos >= data.size())
      throw ParseError("unterminated stream header", pos);
    if (data[pos] == '\n') {
      ++pos;
      break;
    }
    if (data[pos] != ' ')
      throw ParseError("expected space before header token", pos);
    ++pos;
    std::size_t end = pos;
    while (end < data.size() && data[end] != ' ' && data[end] != '\n') ++end;
    if (end == pos) throw ParseError("empty header token", pos);
    const std::string token(data.substr(pos, end - pos));
    switch (token[0]) {
      case 'W':
        meta.width = parse_u32_field(token.substr(1), "width", pos);
        if (meta.width == 0) throw ParseError("width must be >= 1", pos);
        have_width = true;
        break;
      case 'H':
        meta.height = parse_u32_field(token.substr(1), "height", pos);
        if (meta.height == 0) throw ParseError("height must be >= 1", pos);
        have_height = true;
        break;
      case 'F': {
        const std::string_view body(token.data() + 1, token.size() - 1);
        const std::size_t colon = body.find(':');
        if (colon == std::string_view::npos)
          throw ParseError("malformed frame-rate token", pos);
        meta.fps_num = parse_u32_field(body.substr(0, colon), "frame-rate", pos);
        meta.fps_den = parse_u32_field(body.substr(colon + 1), "frame-rate", pos);
        if (meta.fps_den == 0)
          throw ParseError("frame-rate denominator must be >= 1", pos);
        break;
      }
      case 'C':
        if (token == "C420")
          meta.colorspace = Colorspace::C420;
        else if (token == "C444")
          meta.colorspace = Colorspace::C444;
        else if (token == "Cmono")
          meta.colorspace = Colorspace::Mono;
        else
          throw ParseError("unsupported colorspace token '" + token + "'", pos);
        break;
      default:
        break;  // Ip/A/X and friends ride along verbatim.
    }
    meta.header_tokens.push_back(token);
    pos = end;
  }

  if (!have_width) throw ParseError("missing W token in stream header", pos);
  if (!have_height) throw ParseError("missing H token in stream header", pos);
  if (meta.colorspace == Colorspace::C420 &&
      (meta.width % 2 != 0 || meta.height % 2 != 0))
    throw ParseError("C420 requires even width and height", pos);

  const std::size_t frame_bytes = meta.bytes_per_frame();
  std::vector<Frame> frames;
  while (pos < data.size()) {
    if (data.compare(pos, 5, "FRAME") != 0)
      throw ParseError("expected FRAME marker", pos);
    const std::size_t line_end = data.find('\n', pos + 5);
    if (line_end == std::string_view::npos)
      throw ParseError("unterminated FRAME line", data.size());
    std::string params(data.substr(pos + 5, line_end - (pos + 5)));
    if (!params.empty() && params[0] != ' ')
      throw ParseError("malformed FRAME parameters", pos + 5);
    pos = line_end + 1;
    if (data.size() - pos < frame_bytes)
      throw ParseError("truncated frame payload", data.size());
    Frame frame;
    frame.params = std::move(params);
    const auto* begin = reinterpret_cast<const std::uint8_t*>(data.data()) + pos;
    frame.samples.assign(begin, begin + frame_bytes);
    pos += frame_bytes;
    frames.push_back(std::move(frame));
  }
  if (frames.empty()) throw ParseError("stream contains no frames", pos);

  return VideoSequence{std::move(meta), std::move(frames)};
}

struct PpmImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> samples;
};

PpmImage parse_ppm(std::string_view data, const std::string& name) {
  auto fail = [&name](const std::string& what, std::size_t offset) -> void {
    throw ParseError(name + ": " + what, offset);
  };

  if (data.substr(0, 2) != "P6") fail("not a binary PPM (P6 magic)", 0);
  std::size_t pos = 2;

  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  auto skip_space = [&] {
    bool progressed = false;
    while (pos < data.size()) {
      if (is_space(data[pos])) {
        ++pos;
        progressed = true;
      } else if (data[pos] == '#') {
        while (pos < data.size() && data[pos] != '\n') ++pos;
        progressed = true;
      } else {
        break;
      }
    }
    if (!progressed) fail("expected whitespace in header", pos);
  };
  auto read_number = [&]() -> std::uint32_t {
    skip_space();
    const std::size_t start = pos;
    while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') ++pos;
    if (pos == start) fail("expected a decimal header field", start);
    return parse_u32_field(data.substr(start, pos - start), "header", start);
  };

  PpmImage img;
  img.width = read_number();
  img.height = read_number();
  const std::uint32_t maxval = read_number();
  if (img.width == 0 || img.height == 0)
    fail("dimensions must be >= 1", pos);
  if (maxval != 255)
    fail("maxval must be 255 (got " + std::to_string(maxval) + ")", pos);
  if (pos >= data.size() || !is_space(data[pos]))
    fail("expected single whitespace after maxval", pos);
  ++pos;

  const std::size_t need =
      std::size_t(img.width) * std::size_t(img.height) * 3;
  if (data.size() - pos < need) fail("truncated pixel data", data.size());
  const auto* begin = reinterpret_cast<const std::uint8_t*>(data.data()) + pos;
  img.samples.assign(begin, begin + need);
  pos += need;
  if (pos != data.size()) fail("trailing bytes after pixel data", pos);
  return img;
}

// frame_NNNNNN.ppm with at least six digits; returns the index or 0.
std::uint64_t frame_file_index(const std::string& name) {
  constexpr std::string_view prefix = "frame_";
  constexpr std::string_view suffix = ".ppm";
  if (name.size() < prefix.size() + 6 + suffix.size()) return 0;
  if (name.compare(0, prefix.size(), prefix) != 0) return 0;
  if (name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0)
    return 0;
  const std::string digits =
      name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
  if (digits.size() < 6) return 0;
  std::uint64_t index = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return 0;
    index = index * 10 + std::uint64_t(c - '0');
    if (index > 0xffffffffULL) return 0;
  }
  return index;
}

std::string frame_file_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "frame_%06zu.ppm", index);
  return buf;
}

}  // namespace

const char* colorspace_name(Colorspace cs) noexcept {
  switch (cs) {
    case Colorspace::C420:
      return "C420";
    case Colorspace::C444:
      return "C444";
    case Colorspace::Mono:
      return "mono";
    case Colorspace::Rgb24:
      return "RGB24";
  }
  return "?";
}

std::size_t VideoMeta::bytes_per_frame() const {
  const std::size_t pixels = std::size_t(width) * std::size_t(height);
  switch (colorspace) {
    case Colorspace::C420:
      return pixels + 2 * ((std::size_t(width) / 2) * (std::size_t(height) / 2));
    case Colorspace::C444:
    case Colorspace::Rgb24:
      return pixels * 3;
    case Colorspace::Mono:
      return pixels;
  }
  return 0;
}

void VideoMeta::validate() const {
  if (width == 0 || height == 0)
    throw Error("frame dimensions must be at least 1x1");
  if (fps_den == 0) throw Error("frame-rate denominator must be at least 1");
  if (colorspace == Colorspace::C420 && (width % 2 != 0 || height % 2 != 0))
    throw Error("C420 requires even width and height");
}

std::size_t VideoSequence::total_samples() const {
  return frames.size() * meta.bytes_per_frame();
}

void VideoSequence::validate() const {
  meta.validate();
  if (frames.empty()) throw Error("video must contain at least one frame");
  const std::size_t expect = meta.bytes_per_frame();
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (frames[i].samples.size() != expect)
      throw Error("frame " + std::to_string(i) + " has " +
                  std::to_string(frames[i].samples.size()) +
                  " samples, expected " + std::to_string(expect));
  }
}

VideoSequence read_y4m(std::istream& in) {
  return parse_y4m_buffer(slurp_stream(in));
}

VideoSequence read_y4m_file(const fs::path& path) {
  return parse_y4m_buffer(slurp_file(path));
}

std::size_t write_y4m(const VideoSequence& video, std::ostream& out) {
  video.validate();
  if (video.meta.colorspace == Colorspace::Rgb24)
    throw Error("RGB24 sequences cannot be written as YUV4MPEG2");

  std::string header(kY4mMagic);
  if (!video.meta.header_tokens.empty()) {
    for (const std::string& token : video.meta.header_tokens) {
      header += ' ';
      header += token;
    }
  } else {
    header += " W" + std::to_string(video.meta.width);
    header += " H" + std::to_string(video.meta.height);
    header += " F" + std::to_string(video.meta.fps_num) + ":" +
              std::to_string(video.meta.fps_den);
    header += video.meta.colorspace == Colorspace::Mono
                  ? " Cmono"
                  : (video.meta.colorspace == Colorspace::C444 ? " C444"
                                                               : " C420");
  }
  header += '\n';
  out.write(header.data(), std::streamsize(header.size()));

  std::size_t written = header.size();
  for (const Frame& frame : video.frames) {
    out.write("FRAME", 5);
    out.write(frame.params.data(), std::streamsize(frame.params.size()));
    out.put('\n');
    out.write(reinterpret_cast<const char*>(frame.samples.data()),
              std::streamsize(frame.samples.size()));
    written += 5 + frame.params.size() + 1 + frame.samples.size();
  }
  if (!out) throw IoError("stream write failed");
  return written;
}

std::size_t write_y4m_file(const VideoSequence& video, const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  const std::size_t written = write_y4m(video, out);
  out.close();
  if (!out) throw IoError("write to " + path.string() + " failed");
  return written;
}

VideoSequence read_ppm_dir(const fs::path& dir) {
  if (!fs::is_directory(dir))
    throw IoError("not a directory: " + dir.string());

  std::vector<std::uint64_t> indices;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::uint64_t index =
        frame_file_index(entry.path().filename().string());
    if (index > 0) indices.push_back(index);
  }
  if (indices.empty())
    throw Error("no frame_000001.ppm-style frames in " + dir.string());
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] != i + 1)
      throw Error("frame numbering gap in " + dir.string() + ": expected " +
                  frame_file_name(i + 1));
  }

  VideoSequence video;
  video.meta.colorspace = Colorspace::Rgb24;
  video.meta.fps_num = 25;
  video.meta.fps_den = 1;
  for (std::size_t i = 1; i <= indices.size(); ++i) {
    const std::string name = frame_file_name(i);
    PpmImage img = parse_ppm(slurp_file(dir / name), name);
    if (i == 1) {
      video.meta.width = img.width;
      video.meta.height = img.height;
    } else if (img.width != video.meta.width ||
               img.height != video.meta.height) {
      throw Error("frame dimension mismatch: " + name + " is " +
                  std::to_string(img.width) + "x" + std::to_string(img.height) +
                  ", expected " + std::to_string(video.meta.width) + "x" +
                  std::to_string(video.meta.height));
    }
    video.frames.push_back(Frame{std::move(img.samples), std::string()});
  }
  video.validate();
  return video;
}

std::size_t write_ppm_dir(const VideoSequence& video, const fs::path& dir) {
  video.validate();
  if (video.meta.colorspace != Colorspace::Rgb24)
    throw Error("only RGB24 sequences can be written as PPM frames");

  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw IoError("cannot create directory " + dir.string());

  for (std::size_t i = 0; i < video.frames.size(); ++i) {
    const fs::path path = dir / frame_file_name(i + 1);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "P6\n"
        << video.meta.width << ' ' << video.meta.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(video.frames[i].samples.data()),
              std::streamsize(video.frames[i].samples.size()));
    out.close();
    if (!out) throw IoError("write to " + path.string() + " failed");
  }
  return video.frames.size();
}

}  // namespace tristego
