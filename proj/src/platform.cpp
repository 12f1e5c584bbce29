// Copyright 2026 The blindreset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blindreset/platform.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"

namespace blindreset {

void PlatformProfile::validate() const {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("profile '" + name + "': " + what);
  };
  for (double t : {t1, t2, t_gate, t_meas_total}) {
    if (!(t > 0.0)) fail("times must be > 0");
  }
  if (!(t_ext >= 0.0)) fail("t_ext must be >= 0");
  if (t2 > 2.0 * t1) fail("T2 must not exceed 2*T1");
  for (double p : {gate_error_p, readout_error}) {
    if (!(p >= 0.0 && p <= 1.0)) fail("probabilities must lie in [0, 1]");
  }
}

PlatformProfile PlatformProfile::with_t_ext(double seconds) const {
  PlatformProfile p = *this;
  p.t_ext = seconds;
  return p;
}

std::string PlatformProfile::to_config_text() const {
  std::ostringstream os;
  os << "[" << name << "]\n"
     << "T1=" << detail::format_g(t1) << "s\n"
     << "T2=" << detail::format_g(t2) << "s\n"
     << "gate_error_p=" << detail::format_g(gate_error_p) << "\n"
     << "t_gate=" << detail::format_g(t_gate) << "s\n"
     << "t_meas_total=" << detail::format_g(t_meas_total) << "s\n"
     << "readout_error=" << detail::format_g(readout_error) << "\n"
     << "t_ext=" << detail::format_g(t_ext) << "s\n";
  return os.str();
}

namespace profiles {

PlatformProfile iqm() {
  return {"IQM", 40e-6, 20e-6, 0.001, 30e-9, 730e-9, 0.02, 0.0};
}

PlatformProfile rigetti() {
  return {"Rigetti", 25e-6, 12.5e-6, 0.002, 40e-9, 940e-9, 0.03, 0.0};
}

PlatformProfile ionq() {
  return {"IonQ", 10.0, 1.0, 0.0005, 100e-6, 350e-6, 0.01, 0.0};
}

PlatformProfile nvqlink() {
  PlatformProfile p = iqm().with_t_ext(4e-6);
  p.name = "NVQLink";
  return p;
}

PlatformProfile noiseless() {
  const double inf = std::numeric_limits<double>::infinity();
  return {"noiseless", inf, inf, 0.0, 30e-9, 730e-9, 0.0, 0.0};
}

std::vector<PlatformProfile> builtin() { return {iqm(), rigetti(), ionq(), nvqlink()}; }

PlatformProfile by_name(std::string_view name) {
  const std::string key = detail::lower(name);
  for (const auto& p : builtin()) {
    if (detail::lower(p.name) == key) return p;
  }
  if (key == "noiseless") return noiseless();
  throw std::invalid_argument("unknown profile '" + std::string(name) + "'");
}

}  // namespace profiles

double parse_duration(std::string_view text) {
  std::string s = detail::trim(text);
  std::size_t split = s.size();
  while (split > 0 && !(std::isdigit(static_cast<unsigned char>(s[split - 1])) ||
                        s[split - 1] == '.')) {
    --split;
  }
  const std::string number = detail::trim(s.substr(0, split));
  const std::string unit = detail::trim(s.substr(split));
  double value = 0.0;
  if (!detail::parse_double(number, value)) {
    throw std::invalid_argument("bad duration '" + std::string(text) + "'");
  }
  double scale = 1.0;
  if (unit.empty() || unit == "s") {
    scale = 1.0;
  } else if (unit == "ms") {
    scale = 1e-3;
  } else if (unit == "us" || unit == "\xC2\xB5s" || unit == "\xCE\xBCs") {
    scale = 1e-6;
  } else if (unit == "ns") {
    scale = 1e-9;
  } else {
    throw std::invalid_argument("bad duration unit '" + unit + "'");
  }
  return value * scale;
}

std::vector<PlatformProfile> parse_profiles(std::string_view text) {
  std::vector<PlatformProfile> out;
  PlatformProfile current;
  bool open = false;
  auto finish = [&] {
    if (!open) return;
    current.validate();
    out.push_back(current);
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad section header");
      }
      finish();
      current = PlatformProfile{};
      current.name = detail::trim(line.substr(1, line.size() - 2));
      open = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key=value");
    }
    open = true;
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    auto number = [&] {
      double v = 0.0;
      if (!detail::parse_double(value, v)) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad number '" + value + "'");
      }
      return v;
    };
    if (key == "name") {
      current.name = value;
    } else if (key == "T1") {
      current.t1 = parse_duration(value);
    } else if (key == "T2") {
      current.t2 = parse_duration(value);
    } else if (key == "gate_error_p") {
      current.gate_error_p = number();
    } else if (key == "t_gate") {
      current.t_gate = parse_duration(value);
    } else if (key == "t_meas_total") {
      current.t_meas_total = parse_duration(value);
    } else if (key == "readout_error") {
      current.readout_error = number();
    } else if (key == "t_ext") {
      current.t_ext = parse_duration(value);
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  finish();
  return out;
}

std::vector<PlatformProfile> load_profiles(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_profiles(buf.str());
}

}  // namespace blindreset
