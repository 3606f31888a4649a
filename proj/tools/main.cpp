// tristego: hide byte payloads in lossless video and get them back with the
// key. Subcommands: hide, reveal, capacity, psnr, inspect.
//
// Exit codes: 0 success, 1 usage, 2 I/O or format error, 3 capacity
// exceeded, 4 bad key or corrupt payload.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include <termios.h>
#include <unistd.h>

#include <CLI11.hpp>

#include "tristego/errors.hpp"
#include "tristego/keycore.hpp"
#include "tristego/metrics.hpp"
#include "tristego/stego.hpp"
#include "tristego/videoio.hpp"

namespace fs = std::filesystem;
using namespace tristego;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string prompt_passphrase() {
  std::fputs("Passphrase: ", stderr);
  std::fflush(stderr);
  termios saved{};
  const bool have_tty = tcgetattr(STDIN_FILENO, &saved) == 0;
  if (have_tty) {
    termios quiet = saved;
    quiet.c_lflag &= ~tcflag_t(ECHO);
    tcsetattr(STDIN_FILENO, TCSANOW, &quiet);
  }
  std::string line;
  std::getline(std::cin, line);
  if (have_tty) {
    tcsetattr(STDIN_FILENO, TCSANOW, &saved);
    std::fputc('\n', stderr);
  }
  return line;
}

SecretKey resolve_key(const std::string& flag_value) {
  try {
    if (!flag_value.empty()) {
      std::fputs(
          "warning: a --key argument is visible to other local users; "
          "prefer STEG_KEY or the prompt\n",
          stderr);
      return SecretKey::from_string(flag_value);
    }
    if (const char* env = std::getenv("STEG_KEY"))
      return SecretKey::from_string(env);
    if (isatty(STDIN_FILENO)) return SecretKey::from_string(prompt_passphrase());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  throw UsageError("no passphrase: set STEG_KEY, pass --key, or run with a tty");
}

VideoSequence load_video(const std::string& path) {
  if (fs::is_directory(path)) return read_ppm_dir(path);
  return read_y4m_file(path);
}

void save_video(const VideoSequence& video, const std::string& path,
                const std::string& format) {
  std::string fmt = format;
  if (fmt == "auto")
    fmt = video.meta.colorspace == Colorspace::Rgb24 ? "ppmdir" : "y4m";
  if (fmt == "y4m")
    write_y4m_file(video, path);
  else
    write_ppm_dir(video, path);
}

std::vector<std::uint8_t> read_message(const std::string& path) {
  if (path.empty() || path == "-") {
    std::string data(std::istreambuf_iterator<char>(std::cin),
                     std::istreambuf_iterator<char>{});
    return {data.begin(), data.end()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string data(std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>{});
  return {data.begin(), data.end()};
}

void write_payload(std::span<const std::uint8_t> payload,
                   const std::string& path) {
  if (path.empty() || path == "-") {
    if (!payload.empty()) std::fwrite(payload.data(), 1, payload.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  if (!payload.empty())
    out.write(reinterpret_cast<const char*>(payload.data()),
              std::streamsize(payload.size()));
  if (!out) throw IoError("write to " + path + " failed");
}

std::string format_psnr(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

int run_hide(const std::string& cover_path, const std::string& message_path,
             const std::string& out_path, const std::string& key_flag,
             const std::string& format) {
  const SecretKey key = resolve_key(key_flag);
  const VideoSequence cover = load_video(cover_path);
  const std::vector<std::uint8_t> message = read_message(message_path);
  const VideoSequence stego = embed(cover, message, key);
  save_video(stego, out_path, format);
  const QualityReport report = lsb_diff_census(cover, stego);
  std::fprintf(stderr, "slots_used=%llu capacity_bytes=%llu psnr=%s\n",
               static_cast<unsigned long long>(lsb_slots_used(message.size())),
               static_cast<unsigned long long>(capacity(cover)),
               format_psnr(report.global_psnr).c_str());
  return 0;
}

int run_reveal(const std::string& stego_path, const std::string& out_path,
               const std::string& key_flag) {
  const SecretKey key = resolve_key(key_flag);
  const VideoSequence stego = load_video(stego_path);
  const std::vector<std::uint8_t> payload = extract(stego, key);
  write_payload(payload, out_path);
  return 0;
}

int run_capacity(const std::string& cover_path) {
  const VideoSequence cover = load_video(cover_path);
  std::printf("capacity_bytes=%llu\n",
              static_cast<unsigned long long>(capacity(cover)));
  return 0;
}

int run_psnr(const std::string& a_path, const std::string& b_path, bool json) {
  const VideoSequence a = load_video(a_path);
  const VideoSequence b = load_video(b_path);
  const QualityReport report = lsb_diff_census(a, b);
  if (json)
    std::printf("%s\n", report.to_json().c_str());
  else
    std::fputs(report.to_text().c_str(), stdout);
  return 0;
}

int run_inspect(const std::string& path) {
  const VideoSequence video = load_video(path);
  std::printf(
      "width=%u height=%u colorspace=%s frames=%zu bytes_per_frame=%zu "
      "lsb_slots=%zu\n",
      video.meta.width, video.meta.height,
      colorspace_name(video.meta.colorspace), video.frames.size(),
      video.meta.bytes_per_frame(), video.total_samples());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LSB video steganography with keyed masking and triangular "
               "encryption"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tristego 0.1.0");

  std::string cover_path, message_path, out_path, stego_path, key_flag;
  std::string format = "auto";
  std::string psnr_a, psnr_b, inspect_path;
  bool psnr_json = false;

  CLI::App* hide = app.add_subcommand("hide", "Embed a message in a cover video");
  hide->add_option("--cover", cover_path,
                   "Cover video: .y4m file or PPM frame directory")
      ->required();
  hide->add_option("--message", message_path,
                   "Message file ('-' or omitted reads stdin)");
  hide->add_option("--out", out_path, "Where to write the stego video")
      ->required();
  hide->add_option("--key", key_flag, "Passphrase (prefer STEG_KEY env var)");
  hide->add_option("--format", format, "Output container")
      ->check(CLI::IsMember({"auto", "y4m", "ppmdir"}));

  CLI::App* reveal =
      app.add_subcommand("reveal", "Recover the message from a stego video");
  reveal->add_option("--stego", stego_path,
                     "Stego video: .y4m file or PPM frame directory")
      ->required();
  reveal->add_option("--out", out_path,
                     "Where to write the message ('-' or omitted: stdout)");
  reveal->add_option("--key", key_flag, "Passphrase (prefer STEG_KEY env var)");

  CLI::App* cap = app.add_subcommand("capacity", "Print payload capacity");
  cap->add_option("--cover", cover_path, "Cover video")->required();

  CLI::App* quality =
      app.add_subcommand("psnr", "Compare two videos: MSE, PSNR, LSB census");
  quality->add_option("a", psnr_a, "First video")->required();
  quality->add_option("b", psnr_b, "Second video")->required();
  quality->add_flag("--json", psnr_json, "Emit a JSON object");

  CLI::App* inspect =
      app.add_subcommand("inspect", "Print container geometry and LSB slots");
  inspect->add_option("video", inspect_path, "Video to inspect")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (hide->parsed())
      return run_hide(cover_path, message_path, out_path, key_flag, format);
    if (reveal->parsed()) return run_reveal(stego_path, out_path, key_flag);
    if (cap->parsed()) return run_capacity(cover_path);
    if (quality->parsed()) return run_psnr(psnr_a, psnr_b, psnr_json);
    if (inspect->parsed()) return run_inspect(inspect_path);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "tristego: %s\n", e.what());
    return 1;
  } catch (const CapacityError& e) {
    std::fprintf(stderr, "tristego: %s\n", e.what());
    return 3;
  } catch (const BadKeyOrNoPayload& e) {
    std::fprintf(stderr, "tristego: %s\n", e.what());
    return 4;
  } catch (const CorruptPayload& e) {
    std::fprintf(stderr, "tristego: %s\n", e.what());
    return 4;
  } catch (const TruncatedCarrier& e) {
    std::fprintf(stderr, "tristego: %s\n", e.what());
    return 4;
  } catch (const Error& e) {
    std::fprintf(stderr, "tristego: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "tristego: %s\n", e.what());
    return 2;
  }
  return 1;
}
