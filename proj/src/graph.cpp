// Copyright 2026 The smlg Authors
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

#include "smlg/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "smlg/errors.hpp"

namespace smlg {

namespace {

bool is_plain_label_char(Symbol s) { return s >= 33 && s <= 126; }

void check_raw(const RawGraph& raw) {
  if (raw.labels.empty()) {
    throw std::invalid_argument("graph must have at least one node");
  }
  for (auto [src, dst] : raw.edges) {
    if (src >= raw.labels.size() || dst >= raw.labels.size()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

/// Level of every node, or throws. A node's level is defined when all its
/// in-edges come from nodes of one common level.
std::vector<std::size_t> compute_levels(const RawGraph& raw) {
  std::size_t n = raw.labels.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> in_degree(n, 0);
  for (auto [src, dst] : raw.edges) {
    out[src].push_back(dst);
    in_degree[dst]++;
  }

  std::vector<std::size_t> levels(n, 0);
  std::vector<std::size_t> remaining = in_degree;
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (remaining[v] == 0) ready.push_back(v);
  }
  std::vector<bool> level_known(n, false);
  for (std::size_t v : ready) level_known[v] = true;

  std::size_t visited = 0;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    ++visited;
    for (std::size_t w : out[v]) {
      if (level_known[w]) {
        if (levels[w] != levels[v] + 1) {
          throw NotLevelDagError("edge does not advance level by one");
        }
      } else {
        levels[w] = levels[v] + 1;
        level_known[w] = true;
      }
      if (--remaining[w] == 0) ready.push_back(w);
    }
  }
  if (visited != n) throw NotADagError("graph contains a cycle");

  // A node first reached from level l and later from level l' != l is only
  // detected once its level is known; re-scan the edges to be exhaustive.
  for (auto [src, dst] : raw.edges) {
    if (levels[dst] != levels[src] + 1) {
      throw NotLevelDagError("edge does not advance level by one");
    }
  }
  return levels;
}

}  // namespace

Symbol LevelDag::label(std::size_t i) const {
  if (i >= labels_.size()) throw std::out_of_range("node index out of range");
  return labels_[i];
}

std::size_t LevelDag::level_of(std::size_t i) const {
  if (i >= levels_.size()) throw std::out_of_range("node index out of range");
  return levels_[i];
}

std::size_t LevelDag::in_degree(std::size_t i) const {
  return in_neighbors(i).size();
}

std::size_t LevelDag::in(std::size_t i, std::size_t d) const {
  const auto& nbrs = in_neighbors(i);
  if (d >= nbrs.size()) throw std::out_of_range("in-neighbor rank out of range");
  return nbrs[d];
}

const std::vector<std::size_t>& LevelDag::in_neighbors(std::size_t i) const {
  if (i >= in_.size()) throw std::out_of_range("node index out of range");
  return in_[i];
}

std::size_t LevelDag::level_begin(std::size_t l) const {
  if (l >= level_begin_.size()) throw std::out_of_range("level out of range");
  return level_begin_[l];
}

std::size_t LevelDag::level_size(std::size_t l) const {
  if (l + 1 >= level_begin_.size()) {
    throw std::out_of_range("level out of range");
  }
  return level_begin_[l + 1] - level_begin_[l];
}

Alphabet LevelDag::label_alphabet() const { return Alphabet(labels_); }

std::vector<std::vector<std::size_t>> LevelDag::out_neighbors() const {
  std::vector<std::vector<std::size_t>> out(node_count());
  for (std::size_t i = 0; i < node_count(); ++i) {
    for (std::size_t k : in_[i]) out[k].push_back(i);
  }
  return out;
}

LevelDag validate_levels(const RawGraph& raw) {
  check_raw(raw);
  std::vector<std::size_t> levels = compute_levels(raw);
  std::size_t n = raw.labels.size();

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return levels[a] < levels[b];
                   });
  std::vector<std::size_t> new_id(n);
  for (std::size_t i = 0; i < n; ++i) new_id[order[i]] = i;

  LevelDag g;
  g.labels_.resize(n);
  g.levels_.resize(n);
  g.in_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    g.labels_[i] = raw.labels[order[i]];
    g.levels_[i] = levels[order[i]];
  }
  for (auto [src, dst] : raw.edges) {
    g.in_[new_id[dst]].push_back(new_id[src]);
  }
  g.edge_count_ = 0;
  for (auto& nbrs : g.in_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += nbrs.size();
  }

  std::size_t level_count = g.levels_.empty() ? 0 : g.levels_.back() + 1;
  g.level_begin_.assign(level_count + 1, 0);
  for (std::size_t l : g.levels_) g.level_begin_[l + 1]++;
  for (std::size_t l = 0; l < level_count; ++l) {
    g.level_begin_[l + 1] += g.level_begin_[l];
  }
  return g;
}

LevelDag from_degenerate_string(
    const std::vector<std::vector<Symbol>>& segments) {
  if (segments.empty()) {
    throw std::invalid_argument("degenerate string must have a segment");
  }
  RawGraph raw;
  std::vector<std::size_t> segment_begin;
  for (const auto& seg : segments) {
    if (seg.empty()) {
      throw std::invalid_argument("degenerate string segment is empty");
    }
    segment_begin.push_back(raw.labels.size());
    raw.labels.insert(raw.labels.end(), seg.begin(), seg.end());
  }
  segment_begin.push_back(raw.labels.size());
  for (std::size_t s = 0; s + 1 < segments.size(); ++s) {
    for (std::size_t u = segment_begin[s]; u < segment_begin[s + 1]; ++u) {
      for (std::size_t v = segment_begin[s + 1]; v < segment_begin[s + 2];
           ++v) {
        raw.edges.emplace_back(u, v);
      }
    }
  }
  return validate_levels(raw);
}

PaddedInstance pad_classical(const LevelDag& g, std::span<const Symbol> pattern,
                             Symbol sentinel) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.label(i) == sentinel) {
      throw std::invalid_argument("sentinel symbol occurs in the graph");
    }
  }
  for (Symbol s : pattern) {
    if (s == sentinel) {
      throw std::invalid_argument("sentinel symbol occurs in the pattern");
    }
  }
  std::size_t padded_m = std::bit_ceil(pattern.size());

  RawGraph raw;
  raw.labels.reserve(g.node_count() + g.level_count() + padded_m);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    raw.labels.push_back(g.label(i));
  }
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t k : g.in_neighbors(i)) raw.edges.emplace_back(k, i);
  }

  std::size_t levels = g.level_count();
  std::size_t prev = static_cast<std::size_t>(-1);
  for (std::size_t l = 0; l < levels; ++l) {
    std::size_t s_l = raw.labels.size();
    raw.labels.push_back(sentinel);
    for (std::size_t v = g.level_begin(l); v < g.level_begin(l) + g.level_size(l);
         ++v) {
      raw.edges.emplace_back(v, s_l);
    }
    if (l > 0) raw.edges.emplace_back(prev, s_l);
    prev = s_l;
  }
  for (std::size_t k = 0; k < padded_m; ++k) {
    std::size_t c_k = raw.labels.size();
    raw.labels.push_back(sentinel);
    raw.edges.emplace_back(prev, c_k);
    prev = c_k;
  }

  PaddedInstance out;
  out.graph = validate_levels(raw);
  out.pattern.assign(pattern.begin(), pattern.end());
  out.pattern.resize(padded_m, sentinel);
  return out;
}

PaddedInstance encode_binary(const LevelDag& g,
                             std::span<const Symbol> pattern) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
  std::vector<Symbol> all(g.label_alphabet().symbols());
  all.insert(all.end(), pattern.begin(), pattern.end());
  Alphabet sigma{std::move(all)};
  std::size_t bits = std::max<std::size_t>(
      1, std::bit_width(std::bit_ceil(sigma.size()) - 1));

  auto code_bit = [&](Symbol s, std::size_t b) -> Symbol {
    std::size_t index = sigma.index_of(s);
    return (index >> (bits - 1 - b)) & 1 ? Symbol{'1'} : Symbol{'0'};
  };

  RawGraph raw;
  raw.labels.reserve(g.node_count() * bits);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t b = 0; b < bits; ++b) {
      raw.labels.push_back(code_bit(g.label(i), b));
      if (b > 0) {
        raw.edges.emplace_back(i * bits + b - 1, i * bits + b);
      }
    }
  }
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t k : g.in_neighbors(i)) {
      raw.edges.emplace_back(k * bits + bits - 1, i * bits);
    }
  }

  PaddedInstance out;
  out.graph = validate_levels(raw);
  out.pattern.reserve(pattern.size() * bits);
  for (Symbol s : pattern) {
    for (std::size_t b = 0; b < bits; ++b) out.pattern.push_back(code_bit(s, b));
  }
  return out;
}

std::string format_label(Symbol s) {
  if (is_plain_label_char(s)) return std::string(1, static_cast<char>(s));
  return "int:" + std::to_string(s);
}

namespace {

Symbol parse_label_token(std::string_view token, std::size_t line) {
  if (token.starts_with("int:")) {
    std::string_view digits = token.substr(4);
    Symbol value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError(line, "bad integer label '" + std::string(token) + "'");
    }
    return value;
  }
  if (token.size() == 1 && is_plain_label_char(token[0])) {
    return static_cast<Symbol>(static_cast<unsigned char>(token[0]));
  }
  throw ParseError(line, "bad label '" + std::string(token) + "'");
}

std::size_t parse_size(std::string_view token, std::size_t line,
                       const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" +
                               std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

LevelDag parse_ldag(std::string_view text) {
  struct Line {
    std::vector<std::string_view> tokens;
    std::size_t number;
  };
  std::vector<Line> lines;
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw_line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    std::size_t hash = raw_line.find('#');
    if (hash != std::string_view::npos) raw_line = raw_line.substr(0, hash);
    auto tokens = split_tokens(raw_line);
    if (!tokens.empty()) lines.push_back({std::move(tokens), line_no});
    if (end == text.size()) break;
  }

  if (lines.empty()) throw ParseError(0, "empty .ldag input");
  const Line& header = lines[0];
  if (header.tokens.size() != 4 || header.tokens[0] != "ldag") {
    throw ParseError(header.number,
                     "expected header 'ldag <nodes> <edges> <levels>'");
  }
  std::size_t n = parse_size(header.tokens[1], header.number, "node count");
  std::size_t e = parse_size(header.tokens[2], header.number, "edge count");
  std::size_t level_count =
      parse_size(header.tokens[3], header.number, "level count");
  if (n == 0) throw ParseError(header.number, "node count must be positive");
  if (lines.size() != 1 + n + e) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(n) + " node lines and " +
                         std::to_string(e) + " edge lines");
  }

  RawGraph raw;
  raw.labels.reserve(n);
  std::vector<std::size_t> declared_levels(n);
  std::vector<std::size_t> node_lines(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& line = lines[1 + i];
    if (line.tokens.size() != 4 || line.tokens[0] != "node") {
      throw ParseError(line.number, "expected 'node <id> <level> <label>'");
    }
    std::size_t id = parse_size(line.tokens[1], line.number, "node id");
    if (id != i) {
      throw ParseError(line.number, "node ids must be 0..n-1 in order, got " +
                                        std::to_string(id));
    }
    declared_levels[i] = parse_size(line.tokens[2], line.number, "level");
    node_lines[i] = line.number;
    raw.labels.push_back(parse_label_token(line.tokens[3], line.number));
    if (i > 0 && declared_levels[i] < declared_levels[i - 1]) {
      throw ParseError(line.number, "nodes must be grouped by ascending level");
    }
  }
  for (std::size_t k = 0; k < e; ++k) {
    const Line& line = lines[1 + n + k];
    if (line.tokens.size() != 3 || line.tokens[0] != "edge") {
      throw ParseError(line.number, "expected 'edge <src> <dst>'");
    }
    std::size_t src = parse_size(line.tokens[1], line.number, "edge source");
    std::size_t dst = parse_size(line.tokens[2], line.number, "edge target");
    if (src >= n || dst >= n) {
      throw ParseError(line.number, "edge endpoint out of range");
    }
    raw.edges.emplace_back(src, dst);
  }
  {
    auto sorted = raw.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(lines[1 + n].number, "duplicate edge");
    }
  }

  std::vector<std::size_t> computed = compute_levels(raw);
  for (std::size_t i = 0; i < n; ++i) {
    if (computed[i] != declared_levels[i]) {
      throw ParseError(node_lines[i],
                       "declared level " + std::to_string(declared_levels[i]) +
                           " does not match computed level " +
                           std::to_string(computed[i]));
    }
  }
  std::size_t computed_level_count =
      *std::max_element(computed.begin(), computed.end()) + 1;
  if (computed_level_count != level_count) {
    throw ParseError(header.number,
                     "declared level count " + std::to_string(level_count) +
                         " does not match computed " +
                         std::to_string(computed_level_count));
  }
  return validate_levels(raw);
}

std::string serialize_ldag(const LevelDag& g) {
  std::ostringstream out;
  out << "ldag " << g.node_count() << ' ' << g.edge_count() << ' '
      << g.level_count() << '\n';
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    out << "node " << i << ' ' << g.level_of(i) << ' '
        << format_label(g.label(i)) << '\n';
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t k : g.in_neighbors(i)) edges.emplace_back(k, i);
  }
  std::sort(edges.begin(), edges.end());
  for (auto [src, dst] : edges) out << "edge " << src << ' ' << dst << '\n';
  return out.str();
}

std::vector<Symbol> parse_pattern_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw ParseError(0, "empty pattern");
  std::vector<Symbol> out;
  if (line.starts_with("int:")) {
    for (std::string_view token : split_tokens(line)) {
      if (!token.starts_with("int:")) {
        throw ParseError(0, "mixed label styles in pattern");
      }
      out.push_back(parse_label_token(token, 0));
    }
  } else {
    for (char c : line) {
      if (!is_plain_label_char(static_cast<Symbol>(c))) {
        throw ParseError(0, std::string("bad pattern character '") + c + "'");
      }
      out.push_back(static_cast<Symbol>(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

std::string format_pattern(std::span<const Symbol> pattern) {
  bool plain = !pattern.empty();
  for (Symbol s : pattern) plain = plain && is_plain_label_char(s);
  std::string out;
  if (plain) {
    for (Symbol s : pattern) out.push_back(static_cast<char>(s));
    if (!out.starts_with("int:")) return out;
    out.clear();
  }
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) out.push_back(' ');
    out += "int:" + std::to_string(pattern[i]);
  }
  return out;
}

}  // namespace smlg
