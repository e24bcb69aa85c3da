#include "geomtype/gt_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace geomtype {

namespace {

struct Line {
  int no;
  std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream is(text);
  std::string raw;
  int no = 0;
  while (std::getline(is, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t\r");
    out.push_back({no, raw.substr(a, b - a + 1)});
  }
  return out;
}

class Cursor {
 public:
  Cursor(const Line& line) : line_(line) {}
  int col() const { return static_cast<int>(pos_) + 1; }
  void skip_ws() {
    while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.text.size();
  }
  char peek() {
    skip_ws();
    return pos_ < line_.text.size() ? line_.text[pos_] : '\0';
  }
  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected ") + what);
    ++pos_;
  }
  void expect_word(const std::string& w) {
    skip_ws();
    if (line_.text.compare(pos_, w.size(), w) != 0) fail("expected '" + w + "'");
    pos_ += w.size();
  }
  int read_int() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < line_.text.size() && (line_.text[pos_] == '-' || line_.text[pos_] == '+')) ++pos_;
    while (pos_ < line_.text.size() && std::isdigit(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(line_.text[start]))))
      fail("expected an integer");
    return std::stoi(line_.text.substr(start, pos_ - start));
  }
  int read_sign() {
    char c = peek();
    if (c == '+') {
      ++pos_;
      return +1;
    }
    if (c == '-') {
      ++pos_;
      return -1;
    }
    fail("expected '+' or '-'");
    return 0;
  }
  void done() {
    if (!at_end()) fail("unexpected trailing characters");
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_.no, col()); }

 private:
  const Line& line_;
  size_t pos_ = 0;
};

SubrectangleRef read_ref(Cursor& c, SlotKind kind) {
  c.expect(kind == SlotKind::H ? 'H' : 'V', kind == SlotKind::H ? "'H'" : "'V'");
  int rect = c.read_int();
  c.expect('.', "'.'");
  int slot = c.read_int();
  return {kind, rect, slot};
}

GtWithTail parse_impl(const std::string& text, bool allow_cycles) {
  GtWithTail out;
  auto lines = significant_lines(text);
  size_t at = 0;
  if (at >= lines.size()) throw ParseError("empty input: expected 'n=<int>'");
  {
    Cursor c(lines[at]);
    c.expect_word("n");
    c.expect('=', "'='");
    int n = c.read_int();
    c.done();
    if (n < 1) throw ParseError("n must be positive", lines[at].no, 1);
    out.g.h.assign(static_cast<size_t>(n), 0);
    out.g.v.assign(static_cast<size_t>(n), 0);
    ++at;
  }
  const int n = out.g.rect_count();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int k = 0; k < n; ++k) {
    if (at >= lines.size()) throw ParseError("unexpected end of input: expected a 'rect' line");
    Cursor c(lines[at]);
    c.expect_word("rect");
    int i = c.read_int();
    if (i < 1 || i > n) c.fail("rectangle index out of range");
    if (seen[static_cast<size_t>(i - 1)]) c.fail("duplicate 'rect' line for rectangle " + std::to_string(i));
    seen[static_cast<size_t>(i - 1)] = true;
    c.expect_word("h");
    c.expect('=', "'='");
    int hv = c.read_int();
    c.expect_word("v");
    c.expect('=', "'='");
    int vv = c.read_int();
    c.done();
    out.g.h[static_cast<size_t>(i - 1)] = hv;
    out.g.v[static_cast<size_t>(i - 1)] = vv;
    ++at;
  }
  for (; at < lines.size(); ++at) {
    Cursor c(lines[at]);
    if (lines[at].text.rfind("cycle:", 0) == 0) {
      if (!allow_cycles) c.fail("'cycle:' lines are not allowed in the .gt format");
      out.cycle_lines.emplace_back(lines[at].no, lines[at].text);
      continue;
    }
    c.expect_word("map");
    MapEntry m;
    m.from = read_ref(c, SlotKind::H);
    m.to = read_ref(c, SlotKind::V);
    m.sign = c.read_sign();
    c.done();
    out.g.maps.push_back(m);
  }
  return out;
}

}  // namespace

GeometricType parse_gt(const std::string& text) { return parse_impl(text, false).g; }

GtWithTail parse_gt_with_tail(const std::string& text) { return parse_impl(text, true); }

std::string serialize_gt(const GeometricType& g) {
  std::ostringstream os;
  os << "n=" << g.rect_count() << "\n";
  for (int i = 1; i <= g.rect_count(); ++i)
    os << "rect " << i << " h=" << g.h[static_cast<size_t>(i - 1)] << " v="
       << g.v[static_cast<size_t>(i - 1)] << "\n";
  std::vector<MapEntry> maps = g.maps;
  std::sort(maps.begin(), maps.end(), [](const MapEntry& a, const MapEntry& b) {
    return std::pair(a.from.rect, a.from.slot) < std::pair(b.from.rect, b.from.slot);
  });
  for (const auto& m : maps)
    os << "map " << m.from.str() << " " << m.to.str() << " " << (m.sign > 0 ? '+' : '-') << "\n";
  return os.str();
}

}  // namespace geomtype
