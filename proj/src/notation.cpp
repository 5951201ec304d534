#include "ringlab/notation.hpp"

#include <cctype>
#include <sstream>

namespace ringlab {

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int read_int(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw error("syntax-error", "expected integer at offset " +
                                                  std::to_string(start));
  return std::stoi(s.substr(start, i - start));
}

}  // namespace

Perm parse_cycles(const std::string& text, int n) {
  if (n < 1) throw error("invalid-degree", "degree must be >= 1");
  Perm result = Perm::identity(n);
  std::size_t i = 0;
  skip_ws(text, i);
  if (i == text.size())
    throw error("syntax-error", "empty cycle expression");
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw error("syntax-error", std::string("expected '(' but found '") +
                                      text[i] + "'");
    ++i;
    std::vector<int> points;
    std::vector<bool> used(n + 1, false);
    skip_ws(text, i);
    while (i < text.size() && text[i] != ')') {
      int v = read_int(text, i);
      if (v < 1 || v > n)
        throw error("point-error", "point " + std::to_string(v) +
                                       " out of range 1.." + std::to_string(n));
      if (used[v])
        throw error("cycle-error",
                    "point " + std::to_string(v) + " repeated within a cycle");
      used[v] = true;
      points.push_back(v);
      skip_ws(text, i);
    }
    if (i == text.size()) throw error("syntax-error", "unbalanced '('");
    ++i;  // ')'
    if (points.size() >= 2) {
      std::vector<std::uint8_t> img(n);
      for (int k = 0; k < n; ++k) img[k] = static_cast<std::uint8_t>(k);
      for (std::size_t k = 0; k < points.size(); ++k) {
        int from = points[k] - 1;
        int to = points[(k + 1) % points.size()] - 1;
        img[from] = static_cast<std::uint8_t>(to);
      }
      result = result * Perm::from_images(std::move(img));
    }
    any = true;
    skip_ws(text, i);
  }
  if (!any) throw error("syntax-error", "no cycles found");
  return result;
}

std::string format_cycles(const Perm& p) {
  auto cyc = p.cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

Row parse_row(const std::string& text) {
  std::vector<std::uint8_t> bells;
  bool has_ws = false;
  for (char c : text)
    if (std::isspace(static_cast<unsigned char>(c))) has_ws = true;
  std::string body = text;
  // trim
  std::size_t a = body.find_first_not_of(" \t\r\n");
  std::size_t b = body.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) throw error("row-error", "empty row");
  body = body.substr(a, b - a + 1);
  has_ws = body.find_first_of(" \t") != std::string::npos;
  if (has_ws) {
    std::istringstream is(body);
    std::string tok;
    while (is >> tok) {
      for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw error("row-error", "bad token '" + tok + "'");
      bells.push_back(static_cast<std::uint8_t>(std::stoi(tok)));
    }
  } else {
    // contiguous digits, one bell per character (stages <= 9)
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw error("row-error", std::string("bad character '") + c + "'");
      bells.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  }
  return Row::from_bells(std::move(bells));
}

std::string format_row(const Row& r) {
  std::ostringstream os;
  for (int i = 1; i <= r.size(); ++i) {
    if (i > 1) os << ' ';
    os << r.bell_at(i);
  }
  return os.str();
}

}  // namespace ringlab
