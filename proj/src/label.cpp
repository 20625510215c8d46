// Copyright 2026 The Pentaform Authors
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

#include "pentaform/label.hpp"

namespace pentaform {

std::string join(const std::vector<Label>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join(const LabelSet& parts, std::string_view sep) {
  return join(std::vector<Label>(parts.begin(), parts.end()), sep);
}

std::vector<Label> split(std::string_view text, char sep) {
  std::vector<Label> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      return out;
    }
    out.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string show(const Label& label) { return label.empty() ? "{}" : label; }

std::string show(const LabelSet& labels) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels) {
    if (!first) out += ", ";
    out += show(l);
    first = false;
  }
  return out + "}";
}

std::string show(const std::vector<Label>& labels) {
  std::string out = "<";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += show(labels[i]);
  }
  return out + ">";
}

}  // namespace pentaform
