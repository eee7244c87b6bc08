#include "bsq/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bsq {

GroupWord free_reduce(const GroupWord& w) { return detail::merge_reduce(w); }

GroupWord invert(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, checked_neg(it->exp)});
  return out;
}

GroupWord concat(const GroupWord& u, const GroupWord& v) {
  GroupWord out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return free_reduce(out);
}

GroupWord gen_power(Gen g, std::int64_t k) {
  if (k == 0) return {};
  return {Syllable{g, k}};
}

GroupWord conjugate(const GroupWord& x, const GroupWord& y, int sign) {
  if (sign >= 0) return concat(concat(invert(y), x), y);
  return concat(concat(y, x), invert(y));
}

GroupWord parse_word(std::string_view text) {
  GroupWord out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {  // identity token, no exponent allowed
      ++i;
      continue;
    }
    if (c != 'a' && c != 'b')
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    Gen g = (c == 'a') ? Gen::A : Gen::B;
    ++i;
    std::int64_t exp = 1;
    if (i < n && text[i] == '^') {
      std::size_t mark = i;
      ++i;
      bool neg = false;
      if (i < n && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected digits after '^'", i);
      std::int64_t v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        try {
          v = checked_add(checked_mul(v, 10), text[i] - '0');
        } catch (const LimitError&) {
          throw ParseError("exponent out of range", mark + 1);
        }
        ++i;
      }
      exp = neg ? -v : v;
    }
    out.push_back({g, exp});
  }
  return free_reduce(out);
}

std::string render_word(const GroupWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w) {
    if (!first) os << ' ';
    first = false;
    os << gen_char(s.gen);
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

QuandleTerm apply_term_operand(QuandleTerm lhs, const QuandleTerm& rhs, int sign) {
  if (rhs.tail.empty()) {
    lhs.tail.push_back({rhs.head, sign});
    return lhs;
  }
  // Unfold a compound operand: conjugating by rhs equals undoing its tail,
  // operating with its head, then redoing the tail.
  for (auto it = rhs.tail.rbegin(); it != rhs.tail.rend(); ++it)
    lhs.tail.push_back({it->atom, -it->sign});
  lhs.tail.push_back({rhs.head, sign});
  for (const auto& f : rhs.tail) lhs.tail.push_back(f);
  return lhs;
}

namespace {

bool is_atom_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_atom_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' ||
         c == '-';
}

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() { return text[pos]; }

  std::string parse_atom() {
    skip_ws();
    if (pos >= text.size() || !is_atom_start(text[pos]))
      throw ParseError("expected atom", pos);
    std::size_t start = pos;
    while (pos < text.size() && is_atom_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  QuandleTerm parse_operand() {
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      QuandleTerm t = parse_expression();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw ParseError("expected ')'", pos);
      ++pos;
      return t;
    }
    return QuandleTerm{parse_atom(), {}};
  }

  // Returns +1 or -1; the caller has already seen a '*'.
  int parse_op() {
    ++pos;  // consume '*'
    if (text.substr(pos, 3) == "^-1") {
      pos += 3;
      return -1;
    }
    if (text.substr(pos, 2) == "-1") {
      pos += 2;
      return -1;
    }
    if (pos < text.size() && (text[pos] == '^' || text[pos] == '-'))
      throw ParseError("unknown operator", pos - 1);
    return +1;
  }

  QuandleTerm parse_expression() {
    QuandleTerm acc = parse_operand();
    for (;;) {
      skip_ws();
      if (pos >= text.size() || text[pos] != '*') break;
      int sign = parse_op();
      QuandleTerm rhs = parse_operand();
      acc = apply_term_operand(std::move(acc), rhs, sign);
    }
    return acc;
  }
};

}  // namespace

QuandleTerm parse_term(std::string_view text) {
  TermParser parser{text};
  QuandleTerm t = parser.parse_expression();
  if (!parser.at_end()) throw ParseError("trailing input", parser.pos);
  return t;
}

std::string render_term(const QuandleTerm& t) {
  std::ostringstream os;
  os << t.head;
  for (const auto& f : t.tail)
    os << (f.sign > 0 ? " * " : " *^-1 ") << f.atom;
  return os.str();
}

GroupWord expand_term(const QuandleTerm& t, const AtomAssignment& sigma) {
  auto lookup = [&](const std::string& atom) -> const GroupWord& {
    auto it = sigma.find(atom);
    if (it == sigma.end())
      throw std::invalid_argument("unassigned atom '" + atom + "'");
    return it->second;
  };
  GroupWord acc = free_reduce(lookup(t.head));
  for (const auto& f : t.tail) acc = conjugate(acc, lookup(f.atom), f.sign);
  return acc;
}

QuandleTerm substitute(const QuandleTerm& t, const TermSubstitution& phi) {
  auto image = [&](const std::string& atom) -> QuandleTerm {
    auto it = phi.find(atom);
    if (it == phi.end()) return QuandleTerm{atom, {}};
    return it->second;
  };
  QuandleTerm acc = image(t.head);
  for (const auto& f : t.tail)
    acc = apply_term_operand(std::move(acc), image(f.atom), f.sign);
  return acc;
}

}  // namespace bsq
