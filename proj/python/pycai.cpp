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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>

#include "cai/errors.hpp"
#include "cai/initializers.hpp"
#include "cai/npy.hpp"
#include "cai/orthobasis.hpp"
#include "cai/selftest.hpp"
#include "cai/spectral.hpp"
#include "cai/verify.hpp"

namespace py = pybind11;

namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

cai::RealTensor to_tensor(const RealArray& a) {
  cai::Shape shape(a.shape(), a.shape() + a.ndim());
  return cai::RealTensor(shape, std::vector<double>(a.data(), a.data() + a.size()));
}

cai::ComplexTensor to_tensor(const ComplexArray& a) {
  cai::Shape shape(a.shape(), a.shape() + a.ndim());
  return cai::ComplexTensor(shape, std::vector<cai::Complex>(a.data(), a.data() + a.size()));
}

template <typename Tensor>
auto to_array(const Tensor& t) {
  using T = typename std::decay_t<decltype(t.data())>::value_type;
  py::array_t<T> out(std::vector<py::ssize_t>(t.shape().begin(), t.shape().end()));
  std::copy(t.data().begin(), t.data().end(), out.mutable_data());
  return out;
}

cai::InitSpec make_spec(const std::vector<std::size_t>& shape, const std::string& scheme, std::uint64_t seed,
                        double eps_std, std::optional<std::size_t> fan_in, bool apply_scale, double gain,
                        double low, double high, double mean, double stddev) {
  cai::InitSpec spec;
  spec.shape = cai::Shape(shape.begin(), shape.end());
  spec.scheme = cai::parse_scheme(scheme);
  spec.seed = seed;
  spec.eps_std = eps_std;
  spec.fan_in = fan_in;
  spec.apply_scale = apply_scale;
  spec.gain = gain;
  spec.low = low;
  spec.high = high;
  spec.mean = mean;
  spec.stddev = stddev;
  return spec;
}

#define CAI_SPEC_ARGS                                                                                      \
  py::arg("shape"), py::arg("scheme") = "cai", py::arg("seed") = 0, py::arg("eps_std") = 0.05,            \
      py::arg("fan_in") = py::none(), py::arg("apply_scale") = true, py::arg("gain") = 1.0,               \
      py::arg("low") = -0.05, py::arg("high") = 0.05, py::arg("mean") = 0.0, py::arg("stddev") = 0.3

py::dict report_dict(const cai::StatsReport& r) {
  py::dict d;
  d["scheme"] = r.scheme;
  d["shape"] = py::tuple(py::cast(r.shape));
  d["seed"] = r.seed;
  d["mean"] = r.mean;
  d["variance"] = r.variance;
  d["variance_target"] = r.variance_target;
  d["max_abs"] = r.max_abs;
  d["spectral_gram_residual"] = r.spectral_gram_residual;
  d["bound_margin"] = r.bound_margin;
  d["hash"] = cai::hash_to_hex(r.hash);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<cai::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<cai::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<cai::NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<cai::FormatError>(m, "FormatError", PyExc_ValueError);

  m.def("forward_2d", [](const RealArray& x) { return to_array(cai::forward_2d(to_tensor(x))); }, py::arg("x"));
  m.def(
      "inverse_2d",
      [](const ComplexArray& s, std::size_t rows, std::size_t cols) {
        return to_array(cai::inverse_2d(to_tensor(s), rows, cols));
      },
      py::arg("spectrum"), py::arg("rows"), py::arg("cols"));
  m.def("forward_1d", [](const RealArray& x) { return to_array(cai::forward_1d(to_tensor(x))); }, py::arg("x"));
  m.def(
      "inverse_1d",
      [](const ComplexArray& s, std::size_t length) { return to_array(cai::inverse_1d(to_tensor(s), length)); },
      py::arg("spectrum"), py::arg("length"));

  m.def("symmetrize", [](const RealArray& a) { return to_array(cai::symmetrize(to_tensor(a))); }, py::arg("a"));
  m.def(
      "eigen_symmetric",
      [](const RealArray& s) {
        const cai::EigenDecomposition e = cai::eigen_symmetric(to_tensor(s));
        return py::make_tuple(to_array(e.values), to_array(e.vectors), e.sweeps);
      },
      py::arg("s"), "Returns (values descending, column eigenvectors, sweeps).");
  m.def(
      "make_basis",
      [](std::size_t rows, std::size_t dim, std::uint64_t seed) {
        return to_array(cai::make_basis({rows, dim, seed}).matrix);
      },
      py::arg("rows"), py::arg("dim"), py::arg("seed") = 0);

  m.def(
      "initialize",
      [](const std::vector<std::size_t>& shape, const std::string& scheme, std::uint64_t seed, double eps_std,
         std::optional<std::size_t> fan_in, bool apply_scale, double gain, double low, double high, double mean,
         double stddev) {
        return to_array(cai::initialize(
                            make_spec(shape, scheme, seed, eps_std, fan_in, apply_scale, gain, low, high, mean, stddev))
                            .weights);
      },
      CAI_SPEC_ARGS);
  m.def(
      "analyze",
      [](const RealArray& w, const std::vector<std::size_t>& shape, const std::string& scheme, std::uint64_t seed,
         double eps_std, std::optional<std::size_t> fan_in, bool apply_scale, double gain, double low, double high,
         double mean, double stddev) {
        cai::FilterBank bank{to_tensor(w),
                             make_spec(shape, scheme, seed, eps_std, fan_in, apply_scale, gain, low, high, mean, stddev)};
        return report_dict(cai::analyze(bank));
      },
      py::arg("weights"), CAI_SPEC_ARGS);
  m.def(
      "check",
      [](const RealArray& w, const std::string& policy, bool float32_storage, const std::vector<std::size_t>& shape,
         const std::string& scheme, std::uint64_t seed, double eps_std, std::optional<std::size_t> fan_in,
         bool apply_scale, double gain, double low, double high, double mean, double stddev) {
        cai::FilterBank bank{to_tensor(w),
                             make_spec(shape, scheme, seed, eps_std, fan_in, apply_scale, gain, low, high, mean, stddev)};
        py::list out;
        for (const cai::AssertionResult& r : cai::check(bank, cai::make_policy(policy, bank.spec, float32_storage))) {
          out.append(py::make_tuple(r.name, r.passed, r.measured, r.threshold));
        }
        return out;
      },
      py::arg("weights"), py::arg("policy") = "cai", py::arg("float32_storage") = false, CAI_SPEC_ARGS,
      "Returns a list of (assertion, passed, measured, threshold).");
  m.def(
      "determinism_hash", [](const RealArray& w) { return cai::hash_to_hex(cai::determinism_hash(to_tensor(w))); },
      py::arg("weights"));

  m.def(
      "encode_array",
      [](const RealArray& w, const std::string& dtype) {
        const auto bytes = cai::encode_array(to_tensor(w), cai::parse_dtype(dtype));
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
      },
      py::arg("weights"), py::arg("dtype") = "f64");
  m.def(
      "decode_array",
      [](const py::bytes& data) {
        const std::string s = data;
        const auto* p = reinterpret_cast<const std::uint8_t*>(s.data());
        return to_array(cai::decode_array({p, s.size()}).tensor);
      },
      py::arg("data"));
  m.def(
      "write_array",
      [](const std::string& path, const RealArray& w, const std::string& dtype) {
        cai::write_array(path, to_tensor(w), cai::parse_dtype(dtype));
      },
      py::arg("path"), py::arg("weights"), py::arg("dtype") = "f32");
  m.def("read_array", [](const std::string& path) { return to_array(cai::read_array(path).tensor); },
        py::arg("path"));

  m.def(
      "selftest",
      [](std::uint64_t seed) {
        py::list out;
        for (const cai::SelftestResult& r : cai::run_selftest({seed})) {
          out.append(py::make_tuple(r.name, r.passed, r.cases, r.worst, r.tolerance));
        }
        return out;
      },
      py::arg("seed") = 20170616);
}
