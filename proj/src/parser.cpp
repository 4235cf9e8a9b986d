#include "ars/parser.hpp"

#include "ars/errors.hpp"

#include <cctype>
#include <map>
#include <set>

namespace ars {

Frame FrameDocument::frame() const {
  std::vector<VectorField> xs;
  for (const auto& f : fields)
    xs.push_back(f.field);
  return Frame(var_names, std::move(xs), point.value_or(RationalVector{}));
}

namespace {

enum class Tok { ident, number, derivative, slash, caret, plus, minus, equals, star, end };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#')
      break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (line.substr(i, 3) == "d/d" && i + 3 < line.size() && ident_start(line[i + 3]) &&
        (i == 0 || !ident_char(line[i - 1]))) {
      std::size_t j = i + 3;
      while (j < line.size() && ident_char(line[j]))
        ++j;
      out.push_back({Tok::derivative, std::string(line.substr(i + 3, j - i - 3)), col});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j]))
        ++j;
      out.push_back({Tok::ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
        ++j;
      if (j < line.size() && (line[j] == '.' || line[j] == 'e' || line[j] == 'E'))
        throw ParseError("non-rational literal (use p/q)", line_no, col);
      out.push_back({Tok::number, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
    case '/':
      kind = Tok::slash;
      break;
    case '^':
      kind = Tok::caret;
      break;
    case '+':
      kind = Tok::plus;
      break;
    case '-':
      kind = Tok::minus;
      break;
    case '=':
      kind = Tok::equals;
      break;
    case '*':
      kind = Tok::star;
      break;
    case '.':
      throw ParseError("non-rational literal (use p/q)", line_no, col);
    default:
      throw ParseError(std::string("unexpected character '") + c + "'", line_no, col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::end, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
public:
  LineParser(std::vector<Token> tokens, int line_no) : toks_(std::move(tokens)), line_(line_no) {}

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Tok::end; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, peek().column); }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind)
      fail("expected " + what);
    return take();
  }

  Rational rational() {
    const bool negative = peek().kind == Tok::minus;
    if (negative)
      take();
    const Token num = expect(Tok::number, "a rational number");
    std::string text = num.text;
    if (peek().kind == Tok::slash) {
      take();
      text += "/" + expect(Tok::number, "a denominator").text;
    }
    Rational q;
    try {
      q = parse_rational(text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_, num.column);
    }
    return negative ? Rational(-q) : q;
  }

  // expression := ["-"] term {("+"|"-") term} | "0"
  VectorField expression(const std::map<std::string, std::size_t>& vars) {
    const std::size_t n = vars.size();
    VectorField out(n);
    if (peek().kind == Tok::number && peek().text == "0" && toks_[pos_ + 1].kind == Tok::end) {
      take();
      return out;
    }
    Rational sign(1);
    if (peek().kind == Tok::minus) {
      take();
      sign = -1;
    } else if (peek().kind == Tok::plus) {
      take();
    }
    while (true) {
      term(vars, sign, out);
      if (peek().kind == Tok::plus) {
        take();
        sign = 1;
      } else if (peek().kind == Tok::minus) {
        take();
        sign = -1;
      } else if (at_end()) {
        return out;
      } else {
        fail("expected '+', '-' or end of line");
      }
    }
  }

private:
  // term := [rational] {monomial} "d/d" ident
  void term(const std::map<std::string, std::size_t>& vars, const Rational& sign, VectorField& out) {
    const std::size_t n = vars.size();
    Rational coeff = sign;
    if (peek().kind == Tok::number)
      coeff *= rational();
    Exponent e(n, 0);
    while (true) {
      if (peek().kind == Tok::star) {
        take();
        continue;
      }
      if (peek().kind != Tok::ident)
        break;
      const Token v = take();
      const auto it = vars.find(v.text);
      if (it == vars.end())
        throw ParseError("undeclared variable '" + v.text + "'", line_, v.column);
      unsigned power = 1;
      if (peek().kind == Tok::caret) {
        take();
        const Token p = expect(Tok::number, "a positive exponent");
        power = static_cast<unsigned>(std::stoul(p.text));
        if (power == 0)
          throw ParseError("exponent must be positive", line_, p.column);
      }
      e[it->second] += power;
    }
    const Token d = expect(Tok::derivative, "a derivation d/d<var>");
    const auto it = vars.find(d.text);
    if (it == vars.end())
      throw ParseError("undeclared variable '" + d.text + "'", line_, d.column + 3);
    out[it->second].add_term(e, coeff);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

} // namespace

FrameDocument parse_frame(std::string_view text) {
  FrameDocument doc;
  std::map<std::string, std::size_t> vars;
  std::set<std::string> field_names;
  bool have_vars = false;
  bool have_weights = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    LineParser p(lex(line, line_no), line_no);
    if (p.at_end())
      continue;
    const Token keyword = p.expect(Tok::ident, "a keyword (vars, field, weights, point)");
    if (keyword.text == "vars") {
      if (have_vars)
        throw ParseError("duplicate vars line", line_no, keyword.column);
      have_vars = true;
      while (!p.at_end()) {
        const Token v = p.expect(Tok::ident, "a variable name");
        if (!vars.emplace(v.text, doc.var_names.size()).second)
          throw ParseError("duplicate variable '" + v.text + "'", line_no, v.column);
        doc.var_names.push_back(v.text);
      }
      if (doc.var_names.empty())
        throw ParseError("vars line declares no variables", line_no, keyword.column);
      continue;
    }
    if (!have_vars)
      throw ParseError("the first statement must be a vars line", line_no, keyword.column);
    if (keyword.text == "field") {
      const Token name = p.expect(Tok::ident, "a field name");
      if (!field_names.insert(name.text).second)
        throw ParseError("duplicate field name '" + name.text + "'", line_no, name.column);
      p.expect(Tok::equals, "'='");
      doc.fields.push_back({name.text, p.expression(vars)});
    } else if (keyword.text == "weights") {
      if (have_weights)
        throw ParseError("duplicate weights line", line_no, keyword.column);
      have_weights = true;
      if (p.peek().kind == Tok::ident && p.peek().text == "auto") {
        p.take();
      } else {
        std::vector<int> w;
        while (!p.at_end()) {
          const Token t = p.expect(Tok::number, "a positive integer weight");
          const int value = std::stoi(t.text);
          if (value < 1)
            throw ParseError("weights must be positive", line_no, t.column);
          w.push_back(value);
        }
        if (w.size() != doc.var_names.size())
          throw ParseError("weights line needs one weight per variable", line_no, keyword.column);
        doc.weights = WeightVector(std::move(w));
      }
      if (!p.at_end())
        p.fail("unexpected token after weights");
    } else if (keyword.text == "point") {
      if (doc.point)
        throw ParseError("duplicate point line", line_no, keyword.column);
      RationalVector pt;
      while (!p.at_end())
        pt.push_back(p.rational());
      if (pt.size() != doc.var_names.size())
        throw ParseError("point line needs one coordinate per variable", line_no, keyword.column);
      doc.point = std::move(pt);
    } else {
      throw ParseError("unknown keyword '" + keyword.text + "'", line_no, keyword.column);
    }
  }
  if (!have_vars)
    throw ParseError("missing vars line", line_no, 1);
  if (doc.fields.size() != doc.var_names.size())
    throw ParseError("expected " + std::to_string(doc.var_names.size()) + " fields, found " +
                         std::to_string(doc.fields.size()),
                     line_no, 1);
  return doc;
}

std::string format_field(const VectorField& x, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const auto& terms = x[j].terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool negative = sgn(c) < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (mag != 1)
        out += to_string(mag) + " ";
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0)
          continue;
        out += names.at(v);
        if (e[v] > 1)
          out += "^" + std::to_string(e[v]);
        out += " ";
      }
      out += "d/d" + names.at(j);
    }
  }
  return out.empty() ? "0" : out;
}

std::string print_frame(const FrameDocument& doc) {
  std::string out = "vars";
  for (const auto& v : doc.var_names)
    out += " " + v;
  out += "\n";
  for (const auto& f : doc.fields)
    out += "field " + f.name + " = " + format_field(f.field, doc.var_names) + "\n";
  if (doc.weights) {
    out += "weights";
    for (int w : doc.weights->values())
      out += " " + std::to_string(w);
    out += "\n";
  }
  if (doc.point) {
    out += "point";
    for (const auto& q : *doc.point)
      out += " " + to_string(q);
    out += "\n";
  }
  return out;
}

} // namespace ars
