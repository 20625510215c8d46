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

#include "pentaform/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pentaform/errors.hpp"

namespace pentaform::io {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path, "cannot write file");
  out << text;
}

namespace {

// Reader that carries the document name and a JSON pointer for messages.
class Reader {
 public:
  Reader(const json& node, std::string source, std::string pointer = "")
      : node_(node), source_(std::move(source)), pointer_(std::move(pointer)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_ + ":" + (pointer_.empty() ? "/" : pointer_), what);
  }

  const json& node() const { return node_; }

  Reader at(const std::string& key) const {
    if (!node_.is_object()) fail("expected an object");
    auto it = node_.find(key);
    if (it == node_.end()) fail("missing key \"" + key + "\"");
    return Reader(*it, source_, pointer_ + "/" + escape(key));
  }
  bool has(const std::string& key) const {
    return node_.is_object() && node_.contains(key);
  }
  Reader at(std::size_t i) const {
    return Reader(node_.at(i), source_, pointer_ + "/" + std::to_string(i));
  }

  const json& object() const {
    if (!node_.is_object()) fail("expected an object");
    return node_;
  }
  const json& array() const {
    if (!node_.is_array()) fail("expected an array");
    return node_;
  }
  Label label() const {
    if (!node_.is_string()) fail("expected a string");
    return node_.get<std::string>();
  }
  XReal number() const {
    try {
      if (node_.is_string()) return XReal::parse(node_.get<std::string>());
      if (node_.is_number()) return XReal::parse(node_.dump());
    } catch (const DomainError& e) {
      fail(e.what());
    }
    fail("expected a number or a numeric string");
  }
  std::vector<Label> labels() const {
    std::vector<Label> out;
    for (std::size_t i = 0; i < array().size(); ++i) out.push_back(at(i).label());
    return out;
  }
  Profile profile() const {
    Profile out;
    for (const auto& [k, v] : object().items()) out.emplace(k, at(k).number());
    return out;
  }
  ChoiceMap choices() const {
    ChoiceMap out;
    for (const auto& [k, v] : object().items()) out.emplace(k, at(k).label());
    return out;
  }
  std::vector<Quintuple> quintuple_list() const {
    std::vector<Quintuple> out;
    for (std::size_t i = 0; i < array().size(); ++i) {
      Reader entry = at(i);
      const auto parts = entry.labels();
      if (parts.size() != 5) entry.fail("a quintuple needs exactly 5 labels");
      out.push_back({parts[0], parts[1], parts[2], parts[3], parts[4]});
    }
    return out;
  }

 private:
  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') {
        out += "~0";
      } else if (c == '/') {
        out += "~1";
      } else {
        out += c;
      }
    }
    return out;
  }

  const json& node_;
  std::string source_;
  std::string pointer_;
};

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Convert the byte offset into line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) {
      what = what.substr(pos);
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" +
                         std::to_string(col),
                     what);
  }
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::string profile_text(const Profile& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, x] : p) {
    if (!first) out += ", ";
    out += quote(k) + ": " + quote(x.str());
    first = false;
  }
  return out + "}";
}

std::string quintuple_text(const Quintuple& x) {
  return "[" + quote(x.player) + ", " + quote(x.situation) + ", " +
         quote(x.node) + ", " + quote(x.action) + ", " + quote(x.successor) +
         "]";
}

template <typename Range>
std::string quintuple_block(const Range& qs, const std::string& indent) {
  std::string out = "[";
  bool first = true;
  for (const auto& x : qs) {
    out += first ? "\n" : ",\n";
    out += indent + "  " + quintuple_text(x);
    first = false;
  }
  return out + (first ? "]" : "\n" + indent + "]");
}

template <typename Map, typename Fn>
std::string map_block(const Map& m, const std::string& indent, Fn value) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    out += first ? "\n" : ",\n";
    out += indent + "  " + quote(k) + ": " + value(v);
    first = false;
  }
  return out + (first ? "}" : "\n" + indent + "}");
}

std::string label_list(const LabelSet& ls) {
  std::string out = "[";
  bool first = true;
  for (const auto& l : ls) {
    if (!first) out += ", ";
    out += quote(l);
    first = false;
  }
  return out + "]";
}

}  // namespace

bool has_key(const std::string& text, const std::string& key,
             const std::string& source) {
  const json doc = parse(text, source);
  return doc.is_object() && doc.contains(key);
}

QuintupleSet quintuples_from_text(const std::string& text,
                                  const std::string& source) {
  const json doc = parse(text, source);
  const auto list = Reader(doc, source).at("quintuples").quintuple_list();
  return QuintupleSet(list.begin(), list.end());
}

Game game_from_text(const std::string& text, const std::string& source) {
  const json doc = parse(text, source);
  Reader r(doc, source);
  const auto list = r.at("quintuples").quintuple_list();
  auto checked = validate(QuintupleSet(list.begin(), list.end()));
  if (auto* report = std::get_if<AxiomReport>(&checked)) {
    std::string what = "not a pentaform:";
    for (const auto& v : report->violations) {
      what += " " + std::string(axiom_name(v.axiom)) + " " + v.witness + ";";
    }
    r.at("quintuples").fail(what);
  }
  const auto stakeholder_list = r.at("stakeholders").labels();
  LabelSet stakeholders(stakeholder_list.begin(), stakeholder_list.end());
  std::map<Label, Profile> utilities;
  Reader u = r.at("utilities");
  for (const auto& [y, p] : u.object().items()) {
    utilities.emplace(y, u.at(y).profile());
  }
  try {
    return Game(std::get<Pentaform>(std::move(checked)), std::move(stakeholders),
                std::move(utilities));
  } catch (const DomainError& e) {
    u.fail(e.what());
  }
}

ChoiceMap strategy_from_text(const std::string& text,
                             const std::string& source) {
  const json doc = parse(text, source);
  return Reader(doc, source).at("strategy").choices();
}

ValueFunction values_from_text(const std::string& text,
                               const std::string& source) {
  const json doc = parse(text, source);
  Reader r = Reader(doc, source).at("values");
  ValueFunction v;
  for (const auto& [t, p] : r.object().items()) v.values.emplace(t, r.at(t).profile());
  return v;
}

StationarySystem system_from_text(const std::string& text,
                                  const std::string& source) {
  const json doc = parse(text, source);
  Reader r(doc, source);
  const Label initial = r.at("initial").label();
  const auto stakeholder_list = r.at("stakeholders").labels();
  LabelSet stakeholders(stakeholder_list.begin(), stakeholder_list.end());

  Reader m = r.at("model");
  const Label kind = m.at("kind").label();
  UtilityModel model;
  if (kind == "discounted") {
    const XReal beta = m.at("beta").number();
    if (!beta.is_finite()) m.at("beta").fail("discount factor must be finite");
    model = DiscountedModel{beta.finite()};
  } else if (kind == "absolute_terminal") {
    AbsoluteModel am;
    if (m.has("infinite_run_utility")) {
      am.infinite_run_utility = m.at("infinite_run_utility").profile();
    }
    if (m.has("cycle_utilities")) {
      Reader list = m.at("cycle_utilities");
      for (std::size_t i = 0; i < list.array().size(); ++i) {
        Reader entry = list.at(i);
        am.cycle_utilities.push_back(
            {entry.at("cycle").labels(), entry.at("utility").profile()});
      }
    }
    model = std::move(am);
  } else {
    m.at("kind").fail("unknown model kind \"" + kind +
                      "\" (expected discounted or absolute_terminal)");
  }

  std::map<Label, PieceClass> classes;
  Reader cs = r.at("classes");
  for (const auto& [name, body] : cs.object().items()) {
    Reader c = cs.at(name);
    std::map<Label, Exit> exits;
    Reader ex = c.at("exits");
    for (const auto& [y, rule] : ex.object().items()) {
      Reader e = ex.at(y);
      if (e.has("terminal")) {
        exits.emplace(y, Exit::terminal(e.at("terminal").profile()));
      } else if (e.has("continue")) {
        Profile reward;
        if (e.has("reward")) {
          reward = e.at("reward").profile();
        } else {
          reward = zero_profile(stakeholders);
        }
        exits.emplace(y, Exit::go(e.at("continue").label(), std::move(reward)));
      } else {
        e.fail("exit needs \"terminal\" or \"continue\"");
      }
    }
    try {
      classes.emplace(name, PieceClass(c.at("quintuples").quintuple_list(),
                                       std::move(exits)));
    } catch (const DomainError& e) {
      c.fail(e.what());
    }
  }
  try {
    return StationarySystem(std::move(classes), initial, std::move(stakeholders),
                            std::move(model));
  } catch (const DomainError& e) {
    r.fail(e.what());
  }
}

std::map<Label, ChoiceMap> stationary_strategy_from_text(
    const std::string& text, const std::string& source) {
  const json doc = parse(text, source);
  Reader r = Reader(doc, source).at("stationary_strategy");
  std::map<Label, ChoiceMap> out;
  for (const auto& [c, body] : r.object().items()) out.emplace(c, r.at(c).choices());
  return out;
}

ClassValues class_values_from_text(const std::string& text,
                                   const std::string& source) {
  const json doc = parse(text, source);
  Reader r = Reader(doc, source).at("class_values");
  ClassValues out;
  for (const auto& [c, body] : r.object().items()) out.emplace(c, r.at(c).profile());
  return out;
}

std::string to_text(const QuintupleSet& q) {
  return "{\n  \"quintuples\": " + quintuple_block(q, "  ") + "\n}\n";
}

std::string to_text(const Game& g) {
  return "{\n  \"quintuples\": " + quintuple_block(g.form().quintuples(), "  ") +
         ",\n  \"stakeholders\": " + label_list(g.stakeholders()) +
         ",\n  \"utilities\": " + map_block(g.utilities(), "  ", profile_text) +
         "\n}\n";
}

std::string strategy_to_text(const ChoiceMap& s) {
  return "{\n  \"strategy\": " + map_block(s, "  ", quote) + "\n}\n";
}

std::string to_text(const ValueFunction& v) {
  return "{\n  \"values\": " + map_block(v.values, "  ", profile_text) + "\n}\n";
}

std::string to_text(const StationarySystem& sys) {
  std::string model;
  if (sys.discounted()) {
    model = "{\"kind\": \"discounted\", \"beta\": " +
            quote(XReal(sys.beta()).str()) + "}";
  } else {
    const auto& m = std::get<AbsoluteModel>(sys.model());
    model = "{\n    \"kind\": \"absolute_terminal\"";
    if (m.infinite_run_utility) {
      model += ",\n    \"infinite_run_utility\": " +
               profile_text(*m.infinite_run_utility);
    }
    if (!m.cycle_utilities.empty()) {
      model += ",\n    \"cycle_utilities\": [";
      for (std::size_t i = 0; i < m.cycle_utilities.size(); ++i) {
        const auto& cu = m.cycle_utilities[i];
        std::string cycle = "[";
        for (std::size_t k = 0; k < cu.cycle.size(); ++k) {
          cycle += (k ? ", " : "") + quote(cu.cycle[k]);
        }
        model += std::string(i ? "," : "") + "\n      {\"cycle\": " + cycle +
                 "], \"utility\": " + profile_text(cu.utility) + "}";
      }
      model += "\n    ]";
    }
    model += "\n  }";
  }
  auto exit_text = [](const Exit& e) {
    if (e.kind == Exit::Kind::kTerminal) {
      return "{\"terminal\": " + profile_text(e.reward) + "}";
    }
    return "{\"continue\": " + quote(e.next_class) +
           ", \"reward\": " + profile_text(e.reward) + "}";
  };
  auto class_text = [&](const PieceClass& pc) {
    return "{\n      \"quintuples\": " + quintuple_block(pc.declared(), "      ") +
           ",\n      \"exits\": " + map_block(pc.exits(), "      ", exit_text) +
           "\n    }";
  };
  return "{\n  \"initial\": " + quote(sys.initial()) +
         ",\n  \"stakeholders\": " + label_list(sys.stakeholders()) +
         ",\n  \"model\": " + model +
         ",\n  \"classes\": " + map_block(sys.classes(), "  ", class_text) +
         "\n}\n";
}

std::string to_text(const StationaryStrategy& sigma) {
  auto choices = [](const ChoiceMap& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [j, a] : m) {
      if (!first) out += ", ";
      out += quote(j) + ": " + quote(a);
      first = false;
    }
    return out + "}";
  };
  return "{\n  \"stationary_strategy\": " +
         map_block(sigma.choices, "  ", choices) + "\n}\n";
}

std::string class_values_to_text(const ClassValues& w) {
  return "{\n  \"class_values\": " + map_block(w, "  ", profile_text) + "\n}\n";
}

}  // namespace pentaform::io
