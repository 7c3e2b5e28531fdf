#include "sgseg/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>
#include <string>

#include "sgseg/error.hpp"

namespace sgseg {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) {
    throw Error(Errc::Io, "cannot open " + path.string());
  }
  return f;
}

[[noreturn]] void png_error_handler(png_structp png, png_const_charp msg) {
  auto* message = static_cast<std::string*>(png_get_error_ptr(png));
  if (message) *message = msg;
  png_longjmp(png, 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

enum class Want { Rgb, Gray };

// Decodes into either 3 or 1 channels. setjmp/longjmp is confined to this
// function; nothing with a destructor is created between setjmp and the
// end of the read.
std::vector<std::uint8_t> read_png(const std::filesystem::path& path, Want want, int& width,
                                   int& height) {
  FilePtr file = open_file(path, "rb");
  std::string message;
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, &message, png_error_handler, png_warning_handler);
  if (!png) throw Error(Errc::Io, "png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw Error(Errc::Io, "png_create_info_struct failed");
  }

  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
  const char* volatile reject = nullptr;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(Errc::Io, path.string() + ": " + message);
  }

  png_init_io(png, file.get());
  png_read_info(png, info);
  const png_uint_32 w = png_get_image_width(png, info);
  const png_uint_32 h = png_get_image_height(png, info);
  const int depth = png_get_bit_depth(png, info);
  const int color = png_get_color_type(png, info);

  if (depth == 16) {
    reject = "16-bit images are not supported";
  } else if ((color & PNG_COLOR_MASK_ALPHA) != 0 || png_get_valid(png, info, PNG_INFO_tRNS)) {
    reject = "images with alpha are not supported";
  } else if (want == Want::Gray && color == PNG_COLOR_TYPE_RGB) {
    reject = "expected a single-channel image, found RGB";
  }

  if (reject == nullptr) {
    if (depth < 8) {
      if (color == PNG_COLOR_TYPE_GRAY) png_set_expand_gray_1_2_4_to_8(png);
      if (color == PNG_COLOR_TYPE_PALETTE) png_set_packing(png);
    }
    int channels = 1;
    if (want == Want::Rgb) {
      if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
      if (color == PNG_COLOR_TYPE_GRAY) png_set_gray_to_rgb(png);
      channels = 3;
    }
    png_read_update_info(png, info);
    if (png_get_rowbytes(png, info) != static_cast<png_size_t>(w) * channels) {
      reject = "unexpected row layout";
    } else {
      pixels.resize(static_cast<std::size_t>(w) * h * channels);
      rows.resize(h);
      for (png_uint_32 y = 0; y < h; ++y) {
        rows[y] = pixels.data() + static_cast<std::size_t>(y) * w * channels;
      }
      png_read_image(png, rows.data());
      png_read_end(png, nullptr);
    }
  }
  png_destroy_read_struct(&png, &info, nullptr);

  if (reject != nullptr) {
    throw Error(Errc::UnsupportedImage, path.string() + ": " + reject);
  }
  width = static_cast<int>(w);
  height = static_cast<int>(h);
  return pixels;
}

void write_png(const std::filesystem::path& path, int width, int height, int color_type,
               int channels, const std::vector<std::uint8_t>& data) {
  if (data.size() != static_cast<std::size_t>(width) * height * channels) {
    throw Error(Errc::DimensionMismatch, "image buffer does not match its dimensions");
  }
  if (width <= 0 || height <= 0) {
    throw Error(Errc::InvalidArgument, "cannot write an empty PNG");
  }
  FilePtr file = open_file(path, "wb");
  std::string message;
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, &message, png_error_handler, png_warning_handler);
  if (!png) throw Error(Errc::Io, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error(Errc::Io, "png_create_info_struct failed");
  }
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y) {
    rows[y] = const_cast<png_bytep>(data.data()) + static_cast<std::size_t>(y) * width * channels;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(Errc::Io, path.string() + ": " + message);
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  if (std::fflush(file.get()) != 0) {
    throw Error(Errc::Io, "cannot flush " + path.string());
  }
}

}  // namespace

RgbImage read_rgb_png(const std::filesystem::path& path) {
  RgbImage image;
  image.data = read_png(path, Want::Rgb, image.width, image.height);
  return image;
}

GrayImage read_gray_png(const std::filesystem::path& path) {
  GrayImage image;
  image.data = read_png(path, Want::Gray, image.width, image.height);
  return image;
}

void write_rgb_png(const std::filesystem::path& path, const RgbImage& image) {
  write_png(path, image.width, image.height, PNG_COLOR_TYPE_RGB, 3, image.data);
}

void write_gray_png(const std::filesystem::path& path, const GrayImage& image) {
  write_png(path, image.width, image.height, PNG_COLOR_TYPE_GRAY, 1, image.data);
}

SaliencyMap normalize_saliency(const GrayImage& gray) {
  if (gray.data.size() != gray.size()) {
    throw Error(Errc::DimensionMismatch, "grayscale buffer does not match its dimensions");
  }
  std::vector<double> values(gray.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = gray.data[i] / 255.0;
  }
  return SaliencyMap(gray.width, gray.height, std::move(values));
}

LabelMap decode_label_map(const GrayImage& gray, int num_classes) {
  LabelMap labels(gray.width, gray.height, gray.data);
  labels.validate(num_classes);
  return labels;
}

GrayImage to_gray_image(const LabelMap& labels) {
  return GrayImage{labels.width(), labels.height(),
                   std::vector<std::uint8_t>(labels.codes().begin(), labels.codes().end())};
}

}  // namespace sgseg
