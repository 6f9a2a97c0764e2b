# Copyright 2026 The cai-init Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Convolution-aware filter bank initialization."""

from cai_init._core import (
    ConfigError,
    DomainError,
    FormatError,
    NumericError,
    analyze,
    check,
    decode_array,
    determinism_hash,
    eigen_symmetric,
    encode_array,
    forward_1d,
    forward_2d,
    initialize,
    inverse_1d,
    inverse_2d,
    make_basis,
    read_array,
    selftest,
    symmetrize,
    write_array,
)

__all__ = [
    "ConfigError", "DomainError", "FormatError", "NumericError", "analyze",
    "check", "decode_array", "determinism_hash", "eigen_symmetric",
    "encode_array", "forward_1d", "forward_2d", "initialize", "inverse_1d",
    "inverse_2d", "make_basis", "read_array", "selftest", "symmetrize",
    "write_array",
]
