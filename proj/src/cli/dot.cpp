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

#include "pentaform/cli/dot.hpp"

#include <array>
#include <sstream>

#include "pentaform/partition.hpp"

namespace pentaform::cli {
namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
    "#cab2d6", "#ffff99", "#8dd3c7", "#bebada"};

std::string html_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_dot(const Pentaform& p,
                   const std::map<Label, Profile>* utilities) {
  const Partition part(p);
  std::map<Label, std::size_t> piece_index;
  for (std::size_t i = 0; i < part.order().size(); ++i) {
    piece_index[part.order()[i]] = i;
  }
  std::map<Label, std::size_t> id;
  for (const auto& x : p.nodes()) id.emplace(x, id.size());

  // An endnode belongs to the piece of its predecessor.
  auto color_of = [&](const Label& x) {
    const Label& w = p.is_decision_node(x) ? x : p.predecessor(x);
    return kPalette[piece_index.at(part.owner(w)) % kPalette.size()];
  };

  std::ostringstream out;
  out << "digraph pentaform {\n"
      << "  node [style=filled, fontname=\"Helvetica\"];\n"
      << "  edge [fontname=\"Helvetica\"];\n";
  for (const auto& x : p.nodes()) {
    std::string text = html_escape(show(x));
    std::string attrs;
    if (p.is_decision_node(x)) {
      const Label& j = p.situation_of(x);
      const std::string owner =
          html_escape(p.player_of(j)) + " @ " + html_escape(show(j));
      if (part.is_subroot(x)) {
        text = "<U>" + text + "</U>";
        attrs = ", shape=ellipse, peripheries=2";
      } else {
        attrs = ", shape=ellipse";
      }
      text += "<BR/><FONT POINT-SIZE=\"10\">" + owner + "</FONT>";
    } else {
      attrs = ", shape=box";
      if (utilities != nullptr) {
        if (auto it = utilities->find(x); it != utilities->end()) {
          text += "<BR/><FONT POINT-SIZE=\"10\">" +
                  html_escape(show(it->second, false)) + "</FONT>";
        }
      }
    }
    out << "  n" << id.at(x) << " [label=<" << text << ">, fillcolor=\""
        << color_of(x) << "\"" << attrs << "];\n";
  }
  for (const auto& q : p.quintuples()) {
    out << "  n" << id.at(q.node) << " -> n" << id.at(q.successor)
        << " [label=<" << html_escape(q.action) << ">];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pentaform::cli
