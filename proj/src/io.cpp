#include "mmdc/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "mmdc/errors.hpp"

namespace mmdc {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

struct Line {
  int number;  // 1-based
  std::vector<Token> tokens;
};

// Splits into non-empty, non-comment lines of whitespace-separated tokens.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size()) {
      while (k < raw.size() && (raw[k] == ' ' || raw[k] == '\t')) ++k;
      const std::size_t start = k;
      while (k < raw.size() && raw[k] != ' ' && raw[k] != '\t') ++k;
      if (k > start) line.tokens.push_back({raw.substr(start, k - start), static_cast<int>(start) + 1});
    }
    const bool comment = !line.tokens.empty() && line.tokens.front().text.front() == '#';
    if (!line.tokens.empty() && !comment) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

template <typename Int>
Int to_nonneg(const Line& line, const Token& tok, const char* what) {
  Int value{};
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line.number, tok.column, std::string("expected an integer for ") + what +
                                                  ", got '" + std::string(tok.text) + "'");
  }
  if (value < 0) {
    throw ParseError(line.number, tok.column, std::string(what) + " must be non-negative");
  }
  return value;
}

template <typename Int>
std::vector<Int> read_row(const Line& line, int count, const char* what) {
  if (static_cast<int>(line.tokens.size()) != count) {
    const int col = static_cast<int>(line.tokens.size()) > count ? line.tokens[count].column : 1;
    throw ParseError(line.number, col, std::string(what) + ": expected " + std::to_string(count) +
                                           " values, got " + std::to_string(line.tokens.size()));
  }
  std::vector<Int> out;
  out.reserve(count);
  for (const auto& tok : line.tokens) out.push_back(to_nonneg<Int>(line, tok, what));
  return out;
}

template <typename Range>
void write_row(std::ostringstream& os, const Range& row) {
  bool first = true;
  for (const auto& v : row) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  os << '\n';
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  const int last_line = lines.empty() ? 1 : lines.back().number;
  if (lines.empty()) throw ParseError(1, 1, "empty input; expected header 'mmdc 1'");

  const Line& header = lines[0];
  if (header.tokens.size() != 2 || header.tokens[0].text != "mmdc") {
    throw ParseError(header.number, 1, "expected header 'mmdc 1'");
  }
  if (header.tokens[1].text != "1") {
    throw ParseError(header.number, header.tokens[1].column,
                     "unsupported format version '" + std::string(header.tokens[1].text) + "'");
  }
  if (lines.size() < 2) throw ParseError(last_line, 1, "missing 's t' line");
  const auto dims = read_row<int>(lines[1], 2, "dimensions");
  const int s = dims[0];
  const int t = dims[1];
  if (s < 1 || t < 1) throw ParseError(lines[1].number, 1, "s and t must be positive");

  const std::size_t expected = 6 + static_cast<std::size_t>(s);
  if (lines.size() != expected) {
    const int line_no = lines.size() > expected ? lines[expected].number : last_line;
    throw ParseError(line_no, 1, "expected 6+s=" + std::to_string(expected) +
                                     " non-comment lines, found " + std::to_string(lines.size()));
  }

  std::vector<Cost> weights;
  weights.reserve(static_cast<std::size_t>(s) * t);
  for (int i = 0; i < s; ++i) {
    const auto row = read_row<Cost>(lines[2 + i], t, "weight row");
    weights.insert(weights.end(), row.begin(), row.end());
  }
  const Line& la = lines[2 + s];
  const Line& lca = lines[3 + s];
  const Line& lb = lines[4 + s];
  const Line& lcb = lines[5 + s];
  auto demand_a = read_row<int>(la, s, "demand_a");
  auto cap_a = read_row<int>(lca, s, "cap_a");
  auto demand_b = read_row<int>(lb, t, "demand_b");
  auto cap_b = read_row<int>(lcb, t, "cap_b");
  for (int i = 0; i < s; ++i) {
    if (demand_a[i] > cap_a[i]) {
      throw ParseError(lca.number, lca.tokens[i].column,
                       "cap_a[" + std::to_string(i + 1) + "] is below demand_a");
    }
  }
  for (int j = 0; j < t; ++j) {
    if (demand_b[j] > cap_b[j]) {
      throw ParseError(lcb.number, lcb.tokens[j].column,
                       "cap_b[" + std::to_string(j + 1) + "] is below demand_b");
    }
  }
  return Instance(s, t, std::move(weights), std::move(demand_a), std::move(cap_a),
                  std::move(demand_b), std::move(cap_b));
}

std::string write_instance(const Instance& inst) {
  std::ostringstream os;
  os << "mmdc 1\n" << inst.s() << ' ' << inst.t() << '\n';
  const auto& w = inst.weights();
  for (int i = 0; i < inst.s(); ++i) {
    write_row(os, std::vector<Cost>(w.begin() + static_cast<std::ptrdiff_t>(i) * inst.t(),
                                    w.begin() + static_cast<std::ptrdiff_t>(i + 1) * inst.t()));
  }
  write_row(os, inst.demand_a());
  write_row(os, inst.cap_a());
  write_row(os, inst.demand_b());
  write_row(os, inst.cap_b());
  return os.str();
}

std::string write_solution(const Solution& sol, bool include_stats) {
  std::ostringstream os;
  os << "cost " << sol.total_cost << '\n';
  for (const auto& [pair, m] : sol.multiplicities) {
    os << pair.first + 1 << ' ' << pair.second + 1 << ' ' << m << '\n';
  }
  if (include_stats) {
    const auto& st = sol.stats;
    os << "# stats: augmentations=" << st.augmentations << " label_updates=" << st.label_updates
       << " matched_edges=" << st.matched_edges << " aux_elements=" << st.aux_elements << '\n';
    os << "# stats: path_vertices";
    for (const auto& [len, count] : st.path_vertex_histogram) os << ' ' << len << ':' << count;
    os << '\n';
  }
  return os.str();
}

Solution parse_solution(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty solution; expected 'cost <C>'");
  const Line& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0].text != "cost") {
    throw ParseError(head.number, 1, "expected 'cost <C>'");
  }
  Solution sol;
  sol.total_cost = to_nonneg<Cost>(head, head.tokens[1], "cost");
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto v = read_row<int>(lines[k], 3, "pair line");
    if (v[0] < 1 || v[1] < 1) throw ParseError(lines[k].number, 1, "pair indices are 1-based");
    if (v[2] == 0) continue;
    auto [it, inserted] = sol.multiplicities.emplace(Pair{v[0] - 1, v[1] - 1}, v[2]);
    if (!inserted) throw ParseError(lines[k].number, 1, "duplicate pair line");
  }
  return sol;
}

}  // namespace mmdc
