// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "troplab/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "troplab/error.hpp"

namespace troplab {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const char* what, std::size_t line, const std::string& msg) {
  throw PreconditionError(std::string(what) + ": line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_uint(const std::string& tok, const char* what, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(what, line, "expected a nonnegative integer, got '" + tok + "'");
  }
  return v;
}

std::size_t parse_header(const std::vector<Line>& lines, const char* what,
                         std::size_t arg) {
  if (lines.empty()) throw PreconditionError(std::string(what) + ": empty input");
  const Line& h = lines.front();
  if (h.tokens.size() != arg + 1 || h.tokens[0] != what || h.tokens[arg].rfind("vars=", 0) != 0) {
    fail(what, h.number, std::string("expected header '") + what +
                             (arg == 2 ? " <tag>" : "") + " vars=<n>'");
  }
  return parse_uint(h.tokens[arg].substr(5), what, h.number);
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  const char* what = "circuit";
  const auto lines = tokenize(text);
  const std::size_t n = parse_header(lines, what, 2);
  const auto semiring = parse_semiring(lines.front().tokens[1]);
  if (!semiring) fail(what, lines.front().number, "unknown semiring '" + lines.front().tokens[1] + "'");
  std::map<std::string, NodeId> ids;
  std::vector<Node> nodes;
  std::optional<NodeId> output;
  auto ref = [&](const std::string& id, std::size_t line) {
    auto it = ids.find(id);
    if (it == ids.end()) fail(what, line, "unknown node " + id);
    return it->second;
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, t] = lines[i];
    if (output) fail(what, number, "content after output line");
    if (t[0] == "output") {
      if (t.size() != 2) fail(what, number, "expected 'output <id>'");
      output = ref(t[1], number);
      continue;
    }
    if (t.size() < 3 || t[1] != "=") fail(what, number, "expected '<id> = <op> ...'");
    if (ids.count(t[0])) fail(what, number, "duplicate node " + t[0]);
    Node node;
    if (t[2] == "var" && t.size() == 4) {
      const std::uint64_t v = parse_uint(t[3], what, number);
      if (v < 1 || v > n) fail(what, number, "variable index out of range 1.." + std::to_string(n));
      node.kind = NodeKind::Var;
      node.var = static_cast<std::uint32_t>(v - 1);
    } else if (t[2] == "const" && t.size() == 4) {
      node.kind = NodeKind::Const;
      try {
        node.value = Rational::parse(t[3]);
      } catch (const PreconditionError& e) {
        fail(what, number, e.what());
      }
    } else if ((t[2] == "add" || t[2] == "mul") && t.size() == 5) {
      node.kind = t[2] == "add" ? NodeKind::Add : NodeKind::Mul;
      node.left = ref(t[3], number);
      node.right = ref(t[4], number);
    } else {
      fail(what, number, "malformed node definition");
    }
    ids.emplace(t[0], static_cast<NodeId>(nodes.size()));
    nodes.push_back(std::move(node));
  }
  if (!output) throw PreconditionError("circuit: missing output line");
  return Circuit(*semiring, n, std::move(nodes), *output);
}

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "circuit " << semiring_name(c.semiring()) << " vars=" << c.num_vars() << '\n';
  for (std::size_t i = 0; i < c.nodes().size(); ++i) {
    const Node& node = c.nodes()[i];
    out << 'g' << i << " = ";
    switch (node.kind) {
      case NodeKind::Var:
        out << "var " << node.var + 1;
        break;
      case NodeKind::Const:
        out << "const " << node.value.numerator().get_str() << '/'
            << node.value.denominator().get_str();
        break;
      case NodeKind::Add:
      case NodeKind::Mul:
        out << (node.kind == NodeKind::Add ? "add g" : "mul g") << node.left << " g"
            << node.right;
        break;
    }
    out << '\n';
  }
  out << "output g" << c.output() << '\n';
  return out.str();
}

SetFamily parse_family(std::string_view text) {
  const char* what = "family";
  const auto lines = tokenize(text);
  const std::size_t n = parse_header(lines, what, 1);
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::size_t> set;
    for (const auto& tok : lines[i].tokens) {
      const std::uint64_t e = parse_uint(tok, what, lines[i].number);
      if (e < 1 || e > n) fail(what, lines[i].number, "element out of range 1.." + std::to_string(n));
      if (!set.empty() && e - 1 <= set.back()) {
        fail(what, lines[i].number, "elements must be strictly ascending");
      }
      set.push_back(e - 1);
    }
    sets.push_back(std::move(set));
  }
  return SetFamily(n, sets);
}

std::string serialize(const SetFamily& f) {
  std::ostringstream out;
  out << "family vars=" << f.ground_size() << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto els = f.elements(i);
    for (std::size_t j = 0; j < els.size(); ++j) out << (j ? " " : "") << els[j] + 1;
    out << '\n';
  }
  return out.str();
}

Weighting parse_weighting(std::string_view text) {
  const char* what = "weights";
  const auto lines = tokenize(text);
  const std::size_t n = parse_header(lines, what, 1);
  Weighting x;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (const auto& tok : lines[i].tokens) {
      try {
        x.push_back(Rational::parse(tok));
      } catch (const PreconditionError& e) {
        fail(what, lines[i].number, e.what());
      }
    }
  }
  if (x.size() != n) {
    throw PreconditionError("weights: expected " + std::to_string(n) + " values, got " +
                            std::to_string(x.size()));
  }
  check_weighting(x, n);
  return x;
}

std::string serialize_weighting(const Weighting& x) {
  std::ostringstream out;
  out << "weights vars=" << x.size() << '\n';
  for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << x[i].to_string();
  out << '\n';
  return out.str();
}

VectorSet parse_vectors(std::string_view text) {
  const char* what = "vectors";
  const auto lines = tokenize(text);
  const std::size_t n = parse_header(lines, what, 1);
  std::vector<ExponentVector> vs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.size() != n) {
      fail(what, lines[i].number, "expected " + std::to_string(n) + " entries");
    }
    ExponentVector v;
    for (const auto& tok : lines[i].tokens) {
      const std::uint64_t e = parse_uint(tok, what, lines[i].number);
      if (e > UINT32_MAX) fail(what, lines[i].number, "entry too large");
      v.push_back(static_cast<std::uint32_t>(e));
    }
    vs.push_back(std::move(v));
  }
  return VectorSet(n, std::move(vs));
}

std::string serialize(const VectorSet& v) {
  std::ostringstream out;
  out << "vectors vars=" << v.arity() << '\n';
  for (const auto& x : v) {
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << x[i];
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_list(std::string_view text) {
  std::string s(text);
  for (auto& ch : s) {
    if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
  }
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

ExponentVector parse_vector(std::string_view text) {
  ExponentVector v;
  for (const auto& tok : split_list(text)) {
    const std::uint64_t e = parse_uint(tok, "vector", 1);
    if (e > UINT32_MAX) throw PreconditionError("vector: entry too large");
    v.push_back(static_cast<std::uint32_t>(e));
  }
  if (v.empty()) throw PreconditionError("vector: empty");
  return v;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& tok : split_list(text)) out.push_back(Rational::parse(tok));
  if (out.empty()) throw PreconditionError("vector: empty");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << contents;
}

}  // namespace troplab
