#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tristego/errors.hpp"
#include "tristego/keycore.hpp"
#include "tristego/metrics.hpp"
#include "tristego/stego.hpp"
#include "tristego/trienc.hpp"
#include "tristego/videoio.hpp"

namespace py = pybind11;
using namespace tristego;

namespace {

std::vector<std::uint8_t> as_bytes_vec(const py::bytes& b) {
  const std::string s(b);
  return {s.begin(), s.end()};
}

py::bytes as_py_bytes(std::span<const std::uint8_t> data) {
  return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

}  // namespace

PYBIND11_MODULE(_tristego, m) {
  m.doc() =
      "Keyed LSB steganography for lossless video (Y4M and PPM sequences): "
      "masking, triangular encryption, key-permuted frame embedding.";

  const auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<IoError>(m, "IoError", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<CapacityError>(m, "CapacityError", base);
  py::register_exception<BadKeyOrNoPayload>(m, "BadKeyOrNoPayload", base);
  py::register_exception<CorruptPayload>(m, "CorruptPayload", base);
  py::register_exception<TruncatedCarrier>(m, "TruncatedCarrier", base);

  py::enum_<Colorspace>(m, "Colorspace")
      .value("C420", Colorspace::C420)
      .value("C444", Colorspace::C444)
      .value("MONO", Colorspace::Mono)
      .value("RGB24", Colorspace::Rgb24);

  py::class_<VideoMeta>(m, "VideoMeta")
      .def(py::init([](std::uint32_t width, std::uint32_t height,
                       Colorspace colorspace, std::uint32_t fps_num,
                       std::uint32_t fps_den) {
             VideoMeta meta;
             meta.width = width;
             meta.height = height;
             meta.colorspace = colorspace;
             meta.fps_num = fps_num;
             meta.fps_den = fps_den;
             meta.validate();
             return meta;
           }),
           py::arg("width"), py::arg("height"),
           py::arg("colorspace") = Colorspace::C420, py::arg("fps_num") = 25,
           py::arg("fps_den") = 1)
      .def_readwrite("width", &VideoMeta::width)
      .def_readwrite("height", &VideoMeta::height)
      .def_readwrite("fps_num", &VideoMeta::fps_num)
      .def_readwrite("fps_den", &VideoMeta::fps_den)
      .def_readwrite("colorspace", &VideoMeta::colorspace)
      .def_readwrite("header_tokens", &VideoMeta::header_tokens)
      .def("bytes_per_frame", &VideoMeta::bytes_per_frame)
      .def("__repr__", [](const VideoMeta& meta) {
        return "VideoMeta(" + std::to_string(meta.width) + "x" +
               std::to_string(meta.height) + " " +
               colorspace_name(meta.colorspace) + " " +
               std::to_string(meta.fps_num) + ":" +
               std::to_string(meta.fps_den) + ")";
      });

  py::class_<Frame>(m, "Frame")
      .def(py::init([](const py::bytes& samples, const std::string& params) {
             return Frame{as_bytes_vec(samples), params};
           }),
           py::arg("samples"), py::arg("params") = std::string())
      .def_property(
          "samples", [](const Frame& f) { return as_py_bytes(f.samples); },
          [](Frame& f, const py::bytes& b) { f.samples = as_bytes_vec(b); })
      .def_readwrite("params", &Frame::params);

  py::class_<VideoSequence>(m, "VideoSequence")
      .def(py::init([](VideoMeta meta, std::vector<Frame> frames) {
             VideoSequence video{std::move(meta), std::move(frames)};
             video.validate();
             return video;
           }),
           py::arg("meta"), py::arg("frames"))
      .def_readwrite("meta", &VideoSequence::meta)
      .def_readwrite("frames", &VideoSequence::frames)
      .def("total_samples", &VideoSequence::total_samples)
      .def("validate", &VideoSequence::validate)
      .def("__repr__", [](const VideoSequence& v) {
        return "VideoSequence(" + std::to_string(v.frames.size()) +
               " frames, " + std::to_string(v.total_samples()) + " samples)";
      });

  py::class_<KeySchedule>(m, "KeySchedule")
      .def_readonly("seed_mask", &KeySchedule::seed_mask)
      .def_readonly("seed_perm", &KeySchedule::seed_perm)
      .def_readonly("seed_edge", &KeySchedule::seed_edge);

  py::class_<QualityReport>(m, "QualityReport")
      .def_readonly("per_frame_psnr", &QualityReport::per_frame_psnr)
      .def_readonly("global_psnr", &QualityReport::global_psnr)
      .def_readonly("mse", &QualityReport::mse)
      .def_readonly("changed_samples", &QualityReport::changed_samples)
      .def_readonly("changed_fraction", &QualityReport::changed_fraction)
      .def_readonly("non_lsb_changes", &QualityReport::non_lsb_changes)
      .def("to_text", &QualityReport::to_text)
      .def("to_json", &QualityReport::to_json);

  // container I/O
  m.def("read_y4m", &read_y4m_file, py::arg("path"));
  m.def("write_y4m", &write_y4m_file, py::arg("video"), py::arg("path"));
  m.def("read_ppm_dir", &read_ppm_dir, py::arg("path"));
  m.def("write_ppm_dir", &write_ppm_dir, py::arg("video"), py::arg("path"));

  // hiding pipeline
  m.def(
      "embed",
      [](const VideoSequence& cover, const py::bytes& message,
         const std::string& key) {
        const auto payload = as_bytes_vec(message);
        return embed(cover, payload, SecretKey::from_string(key));
      },
      py::arg("cover"), py::arg("message"), py::arg("key"));
  m.def(
      "extract",
      [](const VideoSequence& stego, const std::string& key) {
        return as_py_bytes(extract(stego, SecretKey::from_string(key)));
      },
      py::arg("stego"), py::arg("key"));
  m.def("capacity", &capacity, py::arg("video"));
  m.def("lsb_slots_used", &lsb_slots_used, py::arg("message_len"));
  m.def("encode_header", [](const py::bytes& payload) {
    return as_py_bytes(encode_header(as_bytes_vec(payload)));
  });
  m.def("crc32",
        [](const py::bytes& data) { return crc32(as_bytes_vec(data)); });

  // metrics
  m.def("mse", &mse, py::arg("a"), py::arg("b"));
  m.def("psnr", &psnr, py::arg("mse"));
  m.def("lsb_diff_census", &lsb_diff_census, py::arg("a"), py::arg("b"));

  // key material primitives
  m.def("fnv1a64",
        [](const py::bytes& data) { return fnv1a64(as_bytes_vec(data)); });
  m.def("derive_schedule", [](const std::string& key) {
    return derive_schedule(SecretKey::from_string(key));
  });
  m.def("keystream_bytes", [](std::uint64_t seed, std::size_t n) {
    return as_py_bytes(keystream_bytes(seed, n));
  });
  m.def(
      "mask",
      [](const py::bytes& data, std::uint64_t seed, std::uint64_t offset) {
        return as_py_bytes(mask(as_bytes_vec(data), seed, offset));
      },
      py::arg("data"), py::arg("seed"), py::arg("offset") = 0);
  m.def("edge_bits", &edge_bits, py::arg("seed"), py::arg("n"));
  m.def("frame_permutation", &frame_permutation, py::arg("seed"),
        py::arg("frame_count"));

  // triangular encryption
  m.def(
      "encrypt_bytes",
      [](const py::bytes& data, const std::vector<std::uint8_t>& edge) {
        return as_py_bytes(encrypt_bytes(as_bytes_vec(data), edge));
      },
      py::arg("data"), py::arg("edge"));
  m.def(
      "decrypt_bytes",
      [](const py::bytes& data, const std::vector<std::uint8_t>& edge) {
        return as_py_bytes(decrypt_bytes(as_bytes_vec(data), edge));
      },
      py::arg("data"), py::arg("edge"));

#ifdef TRISTEGO_VERSION
  m.attr("__version__") = TRISTEGO_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
