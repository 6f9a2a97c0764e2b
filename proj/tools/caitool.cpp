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

// caitool: generate, verify and self-test convolution kernel banks.
//
// Exit codes: 0 ok, 1 assertion failure, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cai/errors.hpp"
#include "cai/initializers.hpp"
#include "cai/npy.hpp"
#include "cai/selftest.hpp"
#include "cai/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

cai::Shape parse_shape(const std::string& text) {
  cai::Shape shape;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0) {
      throw cai::ConfigError("--shape: '" + item + "' is not a positive integer");
    }
    shape.push_back(static_cast<std::size_t>(v));
  }
  if (shape.size() != 3 && shape.size() != 4) {
    throw cai::ConfigError("--shape must have 3 (f,s,r) or 4 (f,s,r,c) extents");
  }
  return shape;
}

// Flags shared by generate and verify that describe how a bank was made.
struct SpecFlags {
  std::string scheme = "cai";
  std::uint64_t seed = 0;
  double eps_std = 0.05;
  std::optional<std::size_t> fan_in;
  bool no_scale = false;
  double gain = 1.0;
  double low = -0.05;
  double high = 0.05;
  double mean = 0.0;
  double stddev = 0.3;

  void attach(CLI::App& app) {
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--eps-std", eps_std, "std of the symmetry-breaking noise (cai)");
    app.add_option("--fan-in", fan_in, "fan-in used for the variance target");
    app.add_flag("--no-scale", no_scale, "skip the final rescale (cai)");
    app.add_option("--gain", gain, "orthogonal gain");
    app.add_option("--low", low, "uniform lower bound");
    app.add_option("--high", high, "uniform upper bound");
    app.add_option("--mean", mean, "normal mean");
    app.add_option("--stddev", stddev, "normal standard deviation");
  }

  cai::InitSpec to_spec(cai::Shape shape) const {
    cai::InitSpec spec;
    spec.shape = std::move(shape);
    spec.scheme = cai::parse_scheme(scheme);
    spec.seed = seed;
    spec.eps_std = eps_std;
    spec.fan_in = fan_in;
    spec.apply_scale = !no_scale;
    spec.gain = gain;
    spec.low = low;
    spec.high = high;
    spec.mean = mean;
    spec.stddev = stddev;
    spec.validate();
    return spec;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convolution-aware kernel initialization toolkit"};
  app.require_subcommand(1);

  SpecFlags gen_flags;
  std::string gen_shape;
  std::string gen_dtype = "f32";
  std::string gen_out;
  bool gen_json = false;
  bool gen_quiet = false;
  CLI::App* generate = app.add_subcommand("generate", "generate a kernel bank");
  generate->add_option("--scheme", gen_flags.scheme, "initialization scheme");
  generate->add_option("--shape", gen_shape, "f,s,r,c (2-D) or f,s,r (1-D)")->required();
  gen_flags.attach(*generate);
  generate->add_option("--dtype", gen_dtype, "f32 or f64 file storage");
  generate->add_option("--out", gen_out, "output .npy path");
  generate->add_flag("--json", gen_json, "print the report as JSON");
  generate->add_flag("--quiet", gen_quiet, "print only the determinism hash");

  SpecFlags ver_flags;
  std::string ver_in;
  std::string ver_policy = "cai";
  bool ver_json = false;
  CLI::App* verify = app.add_subcommand("verify", "check a bank file against a policy");
  verify->add_option("--in", ver_in, "input .npy path")->required();
  verify->add_option("--policy", ver_policy, "policy name (scheme name or 'none')");
  verify->add_option("--scheme", ver_flags.scheme, "scheme the file was generated with");
  ver_flags.attach(*verify);
  verify->add_flag("--json", ver_json, "print results as JSON");

  std::uint64_t self_seed = cai::SelftestOptions{}.seed;
  CLI::App* selftest = app.add_subcommand("selftest", "run the randomized invariant sweeps");
  selftest->add_option("--seed", self_seed, "sweep seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) {
      const cai::DType dtype = cai::parse_dtype(gen_dtype);
      const cai::FilterBank bank = cai::initialize(gen_flags.to_spec(parse_shape(gen_shape)));
      if (!gen_out.empty()) cai::write_array(gen_out, bank.weights, dtype);
      const cai::StatsReport report = cai::analyze(bank);
      if (gen_quiet) {
        std::cout << cai::hash_to_hex(report.hash) << "\n";
      } else {
        std::cout << (gen_json ? cai::to_json(report) : cai::to_key_value(report));
      }
      return kExitOk;
    }

    if (*verify) {
      cai::DecodedArray file = cai::read_array(ver_in);
      if (file.tensor.rank() != 3 && file.tensor.rank() != 4) {
        throw cai::ConfigError("verify expects a rank-3 or rank-4 kernel bank");
      }
      cai::FilterBank bank{std::move(file.tensor), ver_flags.to_spec(file.header.shape)};
      const bool f32 = file.header.dtype == cai::DType::kFloat32;
      cai::Policy policy = cai::make_policy(ver_policy, bank.spec, f32);
      const auto results = cai::check(bank, policy);
      std::cout << (ver_json ? cai::to_json(results) : cai::to_key_value(results));
      for (const auto& r : results) {
        if (!r.passed) return kExitAssertion;
      }
      return kExitOk;
    }

    const auto results = cai::run_selftest({self_seed});
    std::cout << cai::format_selftest(results);
    for (const auto& r : results) {
      if (!r.passed) return kExitAssertion;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
