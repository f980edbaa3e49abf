#include "degbell/text.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace degbell {

namespace {

constexpr std::string_view kMinus = "−";
constexpr std::string_view kLambda = "λ";

class ListReader {
 public:
  explicit ListReader(std::string_view text) : text_(text) {}

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "' in '" + std::string(text_) + "'");
    }
    ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Rational rational() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != ' ') {
      ++pos_;
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  // Reads "[a,b,...]" with an element reader.
  template <class Fn>
  void sequence(Fn&& element) {
    expect('[');
    if (peek(']')) {
      ++pos_;
      return;
    }
    while (true) {
      element();
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return;
    }
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("trailing characters in '" + std::string(text_) + "'");
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) == 0) {
      out.push_back(c);
    }
  }
  return out;
}

std::size_t parse_exponent(std::string_view s, std::string_view whole) {
  if (s.empty()) {
    throw ParseError("missing exponent in '" + std::string(whole) + "'");
  }
  std::size_t value = 0;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
      throw ParseError("bad exponent in '" + std::string(whole) + "'");
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 100000) {
      throw ParseError("exponent too large in '" + std::string(whole) + "'");
    }
  }
  return value;
}

// Magnitude of a rational coefficient in front of a symbol; "" for 1.
std::string coefficient_prefix(const Rational& magnitude, bool has_symbol) {
  if (has_symbol && magnitude.is_one()) {
    return "";
  }
  return magnitude.str();
}

}  // namespace

std::string superscript(long value) {
  static constexpr const char* kDigits[] = {"⁰", "¹", "²", "³", "⁴",
                                            "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  if (value < 0) {
    out = "⁻";
    value = -value;
  }
  const std::string digits = std::to_string(value);
  for (char c : digits) {
    out += kDigits[c - '0'];
  }
  return out;
}

std::string to_list(const LambdaPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) {
      out += ",";
    }
    out += p.coeffs()[i].str();
  }
  return out + "]";
}

std::string to_list(const XPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) {
      out += ",";
    }
    out += to_list(p.coeffs()[i]);
  }
  return out + "]";
}

LambdaPoly parse_lambda_list(std::string_view text) {
  ListReader reader(text);
  std::vector<Rational> coeffs;
  reader.sequence([&] { coeffs.push_back(reader.rational()); });
  reader.finish();
  if (!coeffs.empty() && coeffs.back().is_zero()) {
    throw ParseError("non-canonical polynomial (trailing zero) '" + std::string(text) + "'");
  }
  return LambdaPoly(std::move(coeffs));
}

XPoly parse_xpoly_list(std::string_view text) {
  ListReader reader(text);
  std::vector<LambdaPoly> coeffs;
  reader.sequence([&] {
    std::vector<Rational> inner;
    reader.sequence([&] { inner.push_back(reader.rational()); });
    coeffs.emplace_back(std::move(inner));
  });
  reader.finish();
  if (!coeffs.empty() && coeffs.back().is_zero()) {
    throw ParseError("non-canonical polynomial (trailing zero) '" + std::string(text) + "'");
  }
  return XPoly(std::move(coeffs));
}

std::string to_ascii(const LambdaPoly& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c.is_zero()) {
      continue;
    }
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) {
        out += "-";
      }
    } else {
      out += negative ? "-" : "+";
    }
    const Rational magnitude = negative ? -c : c;
    if (i == 0) {
      out += magnitude.str();
      continue;
    }
    if (!magnitude.is_one()) {
      out += magnitude.str() + "*";
    }
    out += "lambda";
    if (i > 1) {
      out += "^" + std::to_string(i);
    }
  }
  return out;
}

LambdaPoly parse_lambda_ascii(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) {
    throw ParseError("empty polynomial");
  }
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected sign in '" + std::string(text) + "'");
    }
    const auto end = s.find_first_of("+-", pos);
    const std::string_view term = std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (term.empty()) {
      throw ParseError("empty term in '" + std::string(text) + "'");
    }
    pos = end == std::string::npos ? s.size() : end;

    Rational c(1);
    std::size_t power = 0;
    const auto sym = term.find("lambda");
    if (sym == std::string_view::npos) {
      c = Rational::parse(term);
    } else {
      std::string_view head = term.substr(0, sym);
      std::string_view tail = term.substr(sym + 6);
      if (!head.empty()) {
        if (head.back() != '*') {
          throw ParseError("expected '*' before lambda in '" + std::string(text) + "'");
        }
        head.remove_suffix(1);
        c = Rational::parse(head);
      }
      power = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') {
          throw ParseError("expected '^' after lambda in '" + std::string(text) + "'");
        }
        power = parse_exponent(tail.substr(1), text);
      }
    }
    if (coeffs.size() <= power) {
      coeffs.resize(power + 1);
    }
    coeffs[power] += negative ? -c : c;
  }
  return LambdaPoly(std::move(coeffs));
}

std::string to_pretty(const LambdaPoly& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t idx = p.size(); idx-- > 0;) {
    const Rational& c = p.coeffs()[idx];
    if (c.is_zero()) {
      continue;
    }
    const bool negative = c.sign() < 0;
    if (negative) {
      out += kMinus;
    } else if (!out.empty()) {
      out += "+";
    }
    out += coefficient_prefix(negative ? -c : c, idx > 0);
    if (idx > 0) {
      out += kLambda;
      if (idx > 1) {
        out += superscript(static_cast<long>(idx));
      }
    }
  }
  return out;
}

std::string to_pretty(const XPoly& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t idx = p.size(); idx-- > 0;) {
    const LambdaPoly& c = p.coeffs()[idx];
    if (c.is_zero()) {
      continue;
    }
    std::size_t nonzero = 0;
    for (const auto& r : c.coeffs()) {
      nonzero += r.is_zero() ? 0 : 1;
    }
    std::string body;
    if (nonzero == 1) {
      const bool negative = c.leading().sign() < 0;
      std::string text = to_pretty(negative ? -c : c);
      if (idx > 0 && text == "1") {
        text.clear();
      }
      out += out.empty() ? (negative ? std::string(kMinus) : "") : (negative ? " " + std::string(kMinus) + " " : " + ");
      body = text;
    } else {
      out += out.empty() ? "" : " + ";
      body = "(" + to_pretty(c) + ")";
    }
    out += body;
    if (idx > 0) {
      out += "x";
      if (idx > 1) {
        out += superscript(static_cast<long>(idx));
      }
    }
  }
  return out;
}

}  // namespace degbell
