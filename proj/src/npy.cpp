/* Copyright 2026 The cai-init Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cai/npy.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <iterator>
#include <optional>

#include "cai/errors.hpp"

namespace cai {
namespace {

constexpr std::uint8_t kMagic[] = {0x93, 'N', 'U', 'M', 'P', 'Y'};
constexpr std::size_t kPreludeV1 = 10;  // magic + version + u16 length

// Parser for the Python-literal dict in an NPY header.
class HeaderParser {
 public:
  HeaderParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  ArrayFileHeader parse() {
    std::optional<DType> dtype;
    std::optional<Shape> shape;
    std::optional<bool> fortran;

    expect('{');
    while (true) {
      skip_space();
      if (peek() == '}') break;
      const std::size_t key_at = pos_;
      const std::string key = string_literal();
      expect(':');
      skip_space();
      if (key == "descr") {
        const std::size_t at = pos_;
        const std::string descr = string_literal();
        if (descr == "<f8") {
          dtype = DType::kFloat64;
        } else if (descr == "<f4") {
          dtype = DType::kFloat32;
        } else {
          fail("unsupported descr '" + descr + "'", at);
        }
      } else if (key == "fortran_order") {
        fortran = boolean();
      } else if (key == "shape") {
        shape = tuple();
      } else {
        fail("unexpected header key '" + key + "'", key_at);
      }
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      skip_space();
      if (peek() != '}') fail("expected ',' or '}'", pos_);
    }
    ++pos_;
    for (; pos_ < text_.size(); ++pos_) {
      if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) fail("trailing bytes after header dict", pos_);
    }
    if (!dtype || !shape || !fortran) fail("header is missing descr, fortran_order or shape", 0);
    if (*fortran) fail("fortran_order=True is not supported", 0);
    return {*dtype, *shape};
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw FormatError("npy header: " + what, base_ + at);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string string_literal() {
    skip_space();
    const char quote = peek();
    if (quote != '\'' && quote != '"') fail("expected a string literal", pos_);
    const std::size_t start = ++pos_;
    while (pos_ < text_.size() && text_[pos_] != quote) ++pos_;
    if (pos_ >= text_.size()) fail("unterminated string literal", start);
    return std::string(text_.substr(start, pos_++ - start));
  }

  bool boolean() {
    if (text_.substr(pos_, 4) == "True") {
      pos_ += 4;
      return true;
    }
    if (text_.substr(pos_, 5) == "False") {
      pos_ += 5;
      return false;
    }
    fail("expected True or False", pos_);
  }

  Shape tuple() {
    expect('(');
    Shape shape;
    while (true) {
      skip_space();
      if (peek() == ')') break;
      const std::size_t start = pos_;
      std::size_t value = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + static_cast<std::size_t>(peek() - '0');
        ++pos_;
      }
      if (pos_ == start) fail("expected an integer extent", pos_);
      shape.push_back(value);
      skip_space();
      if (peek() == ',') {
        ++pos_;
      } else if (peek() != ')') {
        fail("expected ',' or ')'", pos_);
      }
    }
    ++pos_;
    return shape;
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::size_t element_bytes(DType dtype) { return dtype == DType::kFloat32 ? 4 : 8; }

}  // namespace

std::string_view dtype_descr(DType dtype) { return dtype == DType::kFloat32 ? "<f4" : "<f8"; }

DType parse_dtype(std::string_view name) {
  if (name == "f32" || name == "float32") return DType::kFloat32;
  if (name == "f64" || name == "float64") return DType::kFloat64;
  throw ConfigError("unknown dtype '" + std::string(name) + "' (expected f32 or f64)");
}

std::string encode_header(const ArrayFileHeader& header) {
  std::string dict = "{'descr': '" + std::string(dtype_descr(header.dtype)) +
                     "', 'fortran_order': False, 'shape': (";
  for (std::size_t i = 0; i < header.shape.size(); ++i) {
    dict += std::to_string(header.shape[i]);
    dict += header.shape.size() == 1 ? "," : (i + 1 < header.shape.size() ? ", " : "");
  }
  dict += "), }";
  const std::size_t unpadded = kPreludeV1 + dict.size() + 1;
  dict.append((64 - unpadded % 64) % 64, ' ');
  dict += '\n';
  if (dict.size() > 0xffff) throw ConfigError("npy header too long for format version 1.0");

  std::string out(reinterpret_cast<const char*>(kMagic), sizeof kMagic);
  out += '\x01';
  out += '\x00';
  out += static_cast<char>(dict.size() & 0xff);
  out += static_cast<char>(dict.size() >> 8);
  return out + dict;
}

std::vector<std::uint8_t> encode_array(const RealTensor& tensor, DType dtype) {
  const std::string header = encode_header({dtype, tensor.shape()});
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + tensor.size() * element_bytes(dtype));
  for (double v : tensor.data()) {
    if (dtype == DType::kFloat64) {
      const auto bits = std::bit_cast<std::uint64_t>(v);
      for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
    } else {
      const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
      for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
    }
  }
  return out;
}

DecodedArray decode_array(std::span<const std::uint8_t> bytes) {
  for (std::size_t i = 0; i < sizeof kMagic; ++i) {
    if (i >= bytes.size() || bytes[i] != kMagic[i]) throw FormatError("bad npy magic", i);
  }
  if (bytes.size() < 8) throw FormatError("truncated npy version", bytes.size());
  const std::uint8_t major = bytes[6];
  if (major != 1 && major != 2) {
    throw FormatError("unsupported npy version " + std::to_string(major), 6);
  }
  const std::size_t length_bytes = major == 1 ? 2 : 4;
  const std::size_t prelude = 8 + length_bytes;
  if (bytes.size() < prelude) throw FormatError("truncated npy header length", bytes.size());
  std::size_t header_len = 0;
  for (std::size_t b = 0; b < length_bytes; ++b) header_len |= std::size_t{bytes[8 + b]} << (8 * b);
  if (bytes.size() < prelude + header_len) {
    throw FormatError("npy header runs past end of file", bytes.size());
  }

  const std::string_view text(reinterpret_cast<const char*>(bytes.data() + prelude), header_len);
  ArrayFileHeader header = HeaderParser(text, prelude).parse();
  if (header.shape.empty() || header.shape.size() > 4) {
    throw FormatError("npy shape must have rank 1..4", prelude);
  }
  for (std::size_t e : header.shape) {
    if (e == 0) throw FormatError("npy shape has a zero extent", prelude);
  }

  const std::size_t count = checked_element_count(header.shape);
  const std::size_t width = element_bytes(header.dtype);
  const std::size_t data_at = prelude + header_len;
  if (bytes.size() - data_at < count * width) {
    throw FormatError("npy data truncated: expected " + std::to_string(count * width) + " bytes",
                      bytes.size());
  }

  std::vector<double> values(count);
  const std::uint8_t* p = bytes.data() + data_at;
  for (std::size_t i = 0; i < count; ++i, p += width) {
    std::uint64_t bits = 0;
    for (std::size_t b = 0; b < width; ++b) bits |= std::uint64_t{p[b]} << (8 * b);
    values[i] = width == 8 ? std::bit_cast<double>(bits)
                           : static_cast<double>(std::bit_cast<float>(static_cast<std::uint32_t>(bits)));
  }
  RealTensor tensor(header.shape, std::move(values));
  return {std::move(header), std::move(tensor)};
}

void write_array(const std::filesystem::path& path, const RealTensor& tensor, DType dtype) {
  const std::vector<std::uint8_t> bytes = encode_array(tensor, dtype);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

DecodedArray read_array(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return decode_array(bytes);
}

}  // namespace cai
