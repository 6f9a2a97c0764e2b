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

#ifndef CAI_NPY_HPP_
#define CAI_NPY_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cai/tensor.hpp"

namespace cai {

enum class DType { kFloat32, kFloat64 };

std::string_view dtype_descr(DType dtype);  // "<f4" or "<f8"
DType parse_dtype(std::string_view name);   // "f32"/"f64", ConfigError otherwise

struct ArrayFileHeader {
  DType dtype = DType::kFloat64;
  Shape shape;  // row-major, fortran_order is always False
};

// NPY v1.0: magic, version 1.0, u16 header length, space-padded dict ending
// in '\n' such that the prefix is a multiple of 64 bytes.
std::string encode_header(const ArrayFileHeader& header);

std::vector<std::uint8_t> encode_array(const RealTensor& tensor, DType dtype);

struct DecodedArray {
  ArrayFileHeader header;
  RealTensor tensor;
};

// Throws FormatError (with byte offset) on bad magic, unsupported version,
// unknown descr, fortran_order=True, malformed dict or truncated data.
DecodedArray decode_array(std::span<const std::uint8_t> bytes);

void write_array(const std::filesystem::path& path, const RealTensor& tensor, DType dtype);
DecodedArray read_array(const std::filesystem::path& path);

}  // namespace cai

#endif  // CAI_NPY_HPP_
