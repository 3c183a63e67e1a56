#include "g2lab/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "g2lab/errors.hpp"

namespace g2lab {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    if (i >= s.size()) throw ParseError("unexpected end of input", i);
    return s[i++];
  }
  void expect(char c) {
    char got = take();
    if (got != c)
      throw ParseError(std::string("expected '") + c + "', got '" + got + "'", i - 1);
  }
};

std::string read_digits(Cursor& c) {
  c.skip_ws();
  std::string out;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) out += c.s[c.i++];
  if (out.empty()) throw ParseError("expected digits", c.i);
  return out;
}

std::string read_ident(Cursor& c) {
  c.skip_ws();
  std::string out;
  while (c.i < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
    out += c.s[c.i++];
  return out;
}

// One multiplicative atom: raw digit strings are kept undecided until the
// term is complete, since only the trailing one can be an index monomial.
struct Atom {
  bool digits = false;     // all-digit token without '/'
  std::string digit_text;  // when digits
  Rational rat;            // when !digits and ident empty
  std::string ident;       // when a named parameter
  int exp = 1;
};

Atom parse_atom(Cursor& c) {
  Atom a;
  std::size_t at = c.i;
  char p = c.peek();
  if (std::isdigit(static_cast<unsigned char>(p))) {
    std::string num = read_digits(c);
    if (c.peek() == '/') {
      c.take();
      std::string den = read_digits(c);
      a.rat = Rational::parse(num + "/" + den);
      return a;
    }
    a.digits = true;
    a.digit_text = num;
    return a;
  }
  if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
    a.ident = read_ident(c);
    if (c.peek() == '^') {
      c.take();
      std::string e = read_digits(c);
      a.exp = std::stoi(e);
      if (a.exp <= 0) throw ParseError("exponent must be positive", c.i);
    }
    return a;
  }
  throw ParseError("expected a coefficient or index monomial", at);
}

MultiIndex indices_from_digits(const std::string& text, int dim, std::size_t at) {
  std::vector<int> idx;
  int prev = 0;
  for (char ch : text) {
    int k = ch - '0';
    if (k < 1 || k > dim)
      throw ParseError("index " + std::string(1, ch) + " outside 1.." + std::to_string(dim), at);
    if (k <= prev) throw ParseError("indices must be strictly increasing", at);
    idx.push_back(k);
    prev = k;
  }
  return MultiIndex::from_indices(idx);
}

// Parses one term after its sign; returns false for the literal "0".
bool parse_term(Cursor& c, int dim, Poly& coef, MultiIndex& idx) {
  std::vector<std::pair<Atom, std::size_t>> atoms;
  for (;;) {
    std::size_t at = c.i;
    c.skip_ws();
    at = c.i;
    atoms.emplace_back(parse_atom(c), at);
    if (c.peek() != '*') break;
    c.take();
  }
  const auto& [last, last_at] = atoms.back();
  bool last_is_index = last.digits && last.digit_text != "0";
  if (last.digits && last.digit_text == "0") {
    if (atoms.size() != 1)
      throw ParseError("zero term cannot carry factors", last_at);
    return false;
  }
  std::size_t ncoef = atoms.size() - (last_is_index ? 1 : 0);
  coef = Poly::one();
  for (std::size_t k = 0; k < ncoef; ++k) {
    const auto& [a, at] = atoms[k];
    if (a.digits) {
      // Interior all-digit factor: integer coefficient like "2" in "2*a*12".
      coef *= Poly(Rational::parse(a.digit_text));
    } else if (a.ident.empty()) {
      coef *= Poly(a.rat);
    } else {
      coef *= Poly::monomial(Rational::one(), Monomial::param(a.ident, a.exp));
    }
  }
  if (last_is_index)
    idx = indices_from_digits(last.digit_text, dim, last_at);
  else
    idx = MultiIndex::empty();
  return true;
}

}  // namespace

Form<Poly> parse_form(const std::string& text, int dim) {
  Cursor c{text};
  Form<Poly> out(dim);
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char p = c.peek();
    if (p == '+' || p == '-') {
      c.take();
      sign = p == '-' ? -1 : 1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", c.i);
    }
    Poly coef;
    MultiIndex idx;
    if (parse_term(c, dim, coef, idx)) {
      if (sign < 0) coef = -coef;
      out.add_term(idx, coef);
    }
    first = false;
  }
  if (first) throw ParseError("empty form expression", 0);
  return out;
}

Frame<Poly> parse_frame(const std::string& text) {
  Cursor c{text};
  c.expect('(');
  std::vector<std::string> entries;
  std::string cur;
  int depth = 1;
  while (depth > 0) {
    if (c.i >= c.s.size()) throw ParseError("unterminated frame tuple", c.i);
    char ch = c.s[c.i++];
    if (ch == '(') ++depth;
    if (ch == ')') {
      --depth;
      if (depth == 0) break;
    }
    if (ch == ',' && depth == 1) {
      entries.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  entries.push_back(cur);
  c.skip_ws();
  if (c.i < c.s.size()) throw ParseError("trailing text after frame tuple", c.i);

  int n = static_cast<int>(entries.size());
  Frame<Poly> fr(n);
  for (int i = 1; i <= n; ++i) {
    Form<Poly> de = parse_form(entries[static_cast<std::size_t>(i - 1)], n);
    fr.set_d(i, std::move(de));
  }
  return fr;
}

StructureFile parse_structure_file(const std::string& text) {
  StructureFile out;
  std::string section;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string t = line.substr(b, e - b + 1);
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError("unterminated section header", 0);
      section = t.substr(1, t.size() - 2);
      if (section != "forms" && section != "params")
        throw ParseError("unknown section [" + section + "]", 0);
      continue;
    }
    if (section.empty()) {
      if (!out.frame_text.empty()) out.frame_text += " ";
      out.frame_text += t;
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected name = value", 0);
    std::string name = t.substr(0, t.find_first_of(" \t="));
    std::string value = t.substr(eq + 1);
    std::size_t vb = value.find_first_not_of(" \t");
    value = vb == std::string::npos ? "" : value.substr(vb);
    if (value.empty()) throw ParseError("empty value for " + name, 0);
    if (section == "forms")
      out.forms[name] = value;
    else
      out.params[name] = Rational::parse(value);
  }
  if (out.frame_text.empty()) throw ParseError("structure file has no frame tuple", 0);
  return out;
}

namespace {

void append_poly_terms(std::ostringstream& os, bool& first, const MultiIndex& idx,
                       const Poly& poly) {
  for (const auto& [mono, rat] : poly.terms()) {
    bool neg = rat.sign() < 0;
    Rational a = rat.abs();
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? "-" : "+");
    }
    std::string coef_piece;
    if (mono.is_unit()) {
      if (idx.degree() == 0)
        coef_piece = a.str_fraction();
      else if (!a.is_one())
        coef_piece = a.str();
    } else {
      coef_piece = (a.is_one() ? "" : a.str() + "*") + mono.str();
    }
    if (idx.degree() == 0) {
      os << coef_piece;
    } else if (coef_piece.empty()) {
      os << idx.str();
    } else {
      os << coef_piece << "*" << idx.str();
    }
  }
}

}  // namespace

std::string print_form(const Form<Poly>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, poly] : f.terms()) append_poly_terms(os, first, idx, poly);
  return os.str();
}

std::string print_form(const Form<Rational>& f) {
  return print_form(f.map_coefficients<Poly>([](const Rational& c) { return Poly(c); }));
}

std::string print_form(const Form<RatFunc>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : f.terms()) {
    bool neg = c.num().lead().sign() < 0;
    RatFunc a = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? "-" : "+");
    }
    std::string cs = a.str();
    bool needs_parens = cs.find_first_of("+-/") != std::string::npos;
    bool is_unit = cs == "1";
    if (idx.degree() == 0) {
      os << cs;
    } else if (is_unit) {
      os << idx.str();
    } else if (needs_parens) {
      os << "(" << cs << ")*" << idx.str();
    } else {
      os << cs << "*" << idx.str();
    }
  }
  return os.str();
}

std::string print_frame(const Frame<Poly>& fr) {
  std::ostringstream os;
  os << "(";
  for (int i = 1; i <= fr.dim(); ++i) {
    if (i > 1) os << ",";
    os << print_form(fr.d_of(i));
  }
  os << ")";
  return os.str();
}

std::string print_frame(const Frame<Rational>& fr) {
  return print_frame(map_frame<Poly>(fr, [](const Rational& c) { return Poly(c); }));
}

Form<Rational> bind_params(const Form<Poly>& f, const std::map<std::string, Rational>& vals) {
  return f.map_coefficients<Rational>(
      [&](const Poly& c) { return c.substitute(vals).to_rational(); });
}

Frame<Rational> bind_params(const Frame<Poly>& fr, const std::map<std::string, Rational>& vals) {
  return map_frame<Rational>(fr, [&](const Poly& c) { return c.substitute(vals).to_rational(); });
}

Form<RatFunc> lift_to_ratfunc(const Form<Poly>& f, const std::string& var) {
  return f.map_coefficients<RatFunc>([&](const Poly& c) { return RatFunc::from_poly(c, var); });
}

Frame<RatFunc> lift_to_ratfunc(const Frame<Poly>& fr, const std::string& var) {
  return map_frame<RatFunc>(fr, [&](const Poly& c) { return RatFunc::from_poly(c, var); });
}

}  // namespace g2lab
