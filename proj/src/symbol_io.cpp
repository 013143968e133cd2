#include "psindex/symbol_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "psindex/error.hpp"

namespace psindex {

namespace {

// Recursive-descent reader for one expression; `column0` is the column of
// text[0] in the source line.
class ExprParser {
 public:
  ExprParser(std::string_view text, int line, int column0)
      : text_(text), line_(line), column0_(column0) {}

  CoeffFn parse_all() {
    CoeffFn v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what, line_,
                column0_ + static_cast<int>(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(fmt::format("expected '{}'", c));
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  int integer() {
    skip_ws();
    int sign = 1;
    if (accept('-')) sign = -1;
    skip_ws();
    int v = 0;
    const char* b = text_.data() + pos_;
    auto [p, ec] = std::from_chars(b, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ += static_cast<std::size_t>(p - b);
    return sign * v;
  }

  // Optional "INT*" followed by "x".
  int frequency_x() {
    skip_ws();
    int k = 1;
    if (pos_ < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      k = integer();
      expect('*');
    }
    if (!accept('x')) fail("expected 'x'");
    return k;
  }

  CoeffFn expr() {
    CoeffFn v = term();
    while (true) {
      if (accept('+')) {
        v = add(v, term(), 0.0);
      } else if (accept('-')) {
        v = add(v, scale(term(), -1.0, 0.0), 0.0);
      } else {
        return v;
      }
    }
  }

  CoeffFn term() {
    CoeffFn v = unary();
    while (accept('*')) v = multiply(v, unary(), 0.0);
    return v;
  }

  CoeffFn unary() {
    if (accept('-')) return scale(unary(), -1.0, 0.0);
    if (accept('+')) return unary();
    return factor();
  }

  CoeffFn factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      CoeffFn v = expr();
      expect(')');
      return v;
    }
    if (accept_word("exp")) {
      expect('(');
      double sign = 1.0;
      if (accept('-')) sign = -1.0;
      if (!accept('i')) fail("expected 'i' in exp(i*k*x)");
      expect('*');
      const int k = frequency_x();
      expect(')');
      return CoeffFn::monomial(static_cast<int>(sign) * k);
    }
    if (accept_word("cos")) {
      expect('(');
      const int k = frequency_x();
      expect(')');
      return CoeffFn::cosine(k);
    }
    if (accept_word("sin")) {
      expect('(');
      const int k = frequency_x();
      expect(')');
      return CoeffFn::sine(k);
    }
    if (accept('i')) return CoeffFn(cplx(0.0, 1.0));
    return number();
  }

  CoeffFn number() {
    skip_ws();
    const char* b = text_.data() + pos_;
    double v = 0.0;
    auto [p, ec] = std::from_chars(b, text_.data() + text_.size(), v);
    if (ec != std::errc() || p == b) fail("expected a number or factor");
    pos_ += static_cast<std::size_t>(p - b);
    return CoeffFn(v);
  }

  std::string_view text_;
  int line_;
  int column0_;
  std::size_t pos_ = 0;
};

struct Line {
  int number;
  std::string_view text;  // comment stripped
};

std::string_view trim(std::string_view s, int* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = static_cast<int>(b);
  return s.substr(b, e - b);
}

CoeffMatrix parse_matrix_expr(std::string_view text, int line, int column0,
                              int dim) {
  int lead = 0;
  const std::string_view body = trim(text, &lead);
  const int col = column0 + lead;
  if (body.empty()) throw Error(ErrorKind::ParseError, "missing value", line, col);
  if (body.front() != '[') {
    if (dim != 1)
      throw Error(ErrorKind::ParseError,
                  fmt::format("expected a {}x{} matrix in brackets", dim, dim),
                  line, col);
    CoeffMatrix m = CoeffMatrix::zero(1);
    m(0, 0) = ExprParser(body, line, col).parse_all();
    return m;
  }
  if (body.back() != ']')
    throw Error(ErrorKind::ParseError, "missing ']'", line,
                col + static_cast<int>(body.size()));
  const std::string_view inner = body.substr(1, body.size() - 2);
  CoeffMatrix m = CoeffMatrix::zero(dim);
  int row = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = inner.find(';', start);
    const std::string_view row_text =
        inner.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                         : end - start);
    if (row >= dim)
      throw Error(ErrorKind::ParseError, "too many matrix rows", line,
                  col + 1 + static_cast<int>(start));
    int c = 0;
    std::size_t cs = 0;
    while (true) {
      const std::size_t ce = row_text.find(',', cs);
      const std::string_view cell =
          row_text.substr(cs, ce == std::string_view::npos ? std::string_view::npos
                                                          : ce - cs);
      const int cell_col = col + 1 + static_cast<int>(start + cs);
      if (c >= dim)
        throw Error(ErrorKind::ParseError, "too many matrix columns", line,
                    cell_col);
      m(row, c) = ExprParser(cell, line, cell_col).parse_all();
      ++c;
      if (ce == std::string_view::npos) break;
      cs = ce + 1;
    }
    if (c != dim)
      throw Error(ErrorKind::ParseError,
                  fmt::format("row {} has {} entries, expected {}", row + 1, c, dim),
                  line, col + 1 + static_cast<int>(start));
    ++row;
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (row != dim)
    throw Error(ErrorKind::ParseError,
                fmt::format("matrix has {} rows, expected {}", row, dim), line, col);
  return m;
}

template <typename T>
T parse_header_value(std::string_view rest, const Line& ln, int column) {
  const std::string_view v = trim(rest);
  T out{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw Error(ErrorKind::ParseError,
                fmt::format("malformed value '{}'", std::string(v)), ln.number,
                column);
  return out;
}

std::string fmt_double(double v) {
  return fmt::format("{:.17g}", v == 0.0 ? 0.0 : v);  // no "-0"
}

}  // namespace

CoeffFn parse_coeff_expr(std::string_view text) {
  return CoeffFn::from_coeffs(ExprParser(text, 1, 1).parse_all().coeffs());
}

ClassicalSymbol parse_symbol(std::string_view text) {
  std::vector<Line> lines;
  {
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = text.find('\n', start);
      std::string_view raw = text.substr(
          start, end == std::string_view::npos ? std::string_view::npos : end - start);
      ++number;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos)
        raw = raw.substr(0, hash);
      if (!trim(raw).empty()) lines.push_back({number, raw});
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
  }

  double order = 0.0;
  int depth = 0;
  int dim = 1;
  bool have_order = false, have_depth = false;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    int lead = 0;
    const std::string_view t = trim(lines[i].text, &lead);
    const auto sp = t.find_first_of(" \t");
    const std::string_view key = t.substr(0, sp);
    const std::string_view rest =
        sp == std::string_view::npos ? std::string_view{} : t.substr(sp);
    const int vcol = lead + static_cast<int>(key.size()) + 1;
    if (key == "order") {
      order = parse_header_value<double>(rest, lines[i], vcol);
      have_order = true;
    } else if (key == "depth") {
      depth = parse_header_value<int>(rest, lines[i], vcol);
      have_depth = true;
      if (depth < 1)
        throw Error(ErrorKind::ParseError, "depth must be >= 1", lines[i].number, vcol);
    } else if (key == "matrix") {
      dim = parse_header_value<int>(rest, lines[i], vcol);
      if (dim < 1)
        throw Error(ErrorKind::ParseError, "matrix size must be >= 1",
                    lines[i].number, vcol);
    } else {
      break;
    }
  }
  if (!have_order || !have_depth) {
    const int ln = i < lines.size() ? lines[i].number : (lines.empty() ? 1 : lines.back().number);
    throw Error(ErrorKind::ParseError, "header needs 'order' and 'depth' lines", ln, 1);
  }

  ClassicalSymbol sym(order, depth, dim);
  int current = -1;
  for (; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    int lead = 0;
    const std::string_view t = trim(ln.text, &lead);
    if (t.starts_with("component")) {
      const std::string_view rest = t.substr(9);
      const int j = parse_header_value<int>(rest, ln, lead + 10);
      if (j < 0 || j >= depth)
        throw Error(ErrorKind::ParseError,
                    fmt::format("component {} outside depth {}", j, depth), ln.number,
                    lead + 10);
      current = j;
    } else if (t.starts_with("plus:") || t.starts_with("minus:")) {
      if (current < 0)
        throw Error(ErrorKind::ParseError, "branch line before any component",
                    ln.number, lead + 1);
      const bool plus = t.starts_with("plus:");
      const std::size_t skip = plus ? 5 : 6;
      CoeffMatrix m = parse_matrix_expr(t.substr(skip), ln.number,
                                        lead + 1 + static_cast<int>(skip), dim);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = CoeffFn::from_coeffs(m(r, c).coeffs());
      (plus ? sym.component(current).plus : sym.component(current).minus) = m;
    } else {
      throw Error(ErrorKind::ParseError,
                  fmt::format("unrecognised line '{}'", std::string(t)), ln.number,
                  lead + 1);
    }
  }
  return sym;
}

std::string render_coeff(const CoeffFn& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : f.coeffs()) {
    if (!out.empty()) out += " + ";
    std::string amp = fmt::format("({} {} {}*i)", fmt_double(c.real()),
                                  c.imag() < 0 || std::signbit(c.imag()) ? '-' : '+',
                                  fmt_double(std::abs(c.imag())));
    if (k == 0) {
      out += amp;
    } else {
      out += fmt::format("{}*exp({}i*{}*x)", amp, k < 0 ? "-" : "", std::abs(k));
    }
  }
  return out;
}

std::string render_symbol(const ClassicalSymbol& a) {
  std::ostringstream os;
  os << "order " << fmt_double(a.order()) << "\n";
  os << "depth " << a.depth() << "\n";
  if (a.dim() > 1) os << "matrix " << a.dim() << "\n";
  auto render_matrix = [&](const CoeffMatrix& m) {
    if (m.dim() == 1) return render_coeff(m(0, 0));
    std::string s = "[ ";
    for (int r = 0; r < m.dim(); ++r) {
      if (r) s += " ; ";
      for (int c = 0; c < m.dim(); ++c) {
        if (c) s += " , ";
        s += render_coeff(m(r, c));
      }
    }
    return s + " ]";
  };
  for (int j = 0; j < a.depth(); ++j) {
    const auto& c = a.component(j);
    if (c.plus.is_zero() && c.minus.is_zero()) continue;
    os << "component " << j << "\n";
    os << "plus: " << render_matrix(c.plus) << "\n";
    os << "minus: " << render_matrix(c.minus) << "\n";
  }
  return os.str();
}

ClassicalSymbol read_symbol_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_symbol(ss.str());
}

}  // namespace psindex
