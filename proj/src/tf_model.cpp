#include "fracfreq/tf_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

#include "fracfreq/error.hpp"
#include "fracfreq/roots.hpp"

namespace fracfreq {

// ---------------------------------------------------------------------------
// FracPoly

FracPoly::FracPoly(std::vector<FracTerm> terms) {
  for (const FracTerm& t : terms) {
    if (!std::isfinite(t.exponent) || t.exponent < 0.0) {
      throw DomainError("exponent must be finite and nonnegative");
    }
    if (!std::isfinite(t.coeff)) {
      throw DomainError("coefficient must be finite");
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const FracTerm& x, const FracTerm& y) {
                     return x.exponent > y.exponent;
                   });
  for (const FracTerm& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const FracTerm& t) { return t.coeff == 0.0; });
  if (terms_.empty()) {
    throw DomainError("polynomial has no nonzero terms");
  }
}

bool FracPoly::is_unit() const noexcept {
  return terms_.size() == 1 && terms_[0].coeff == 1.0 &&
         terms_[0].exponent == 0.0;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { number, s, caret, star, plus, minus, slash, lparen, rparen, end };

struct Token {
  Tok kind = Tok::end;
  std::size_t offset = 0;
  double value = 0.0;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) {
        out.push_back({Tok::end, pos_});
        return out;
      }
      const char c = text_[pos_];
      if (is_digit(c) || c == '.') {
        out.push_back(number());
        continue;
      }
      const std::optional<Tok> kind = single(c);
      if (!kind) {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
      out.push_back({*kind, pos_});
      ++pos_;
    }
  }

 private:
  static std::optional<Tok> single(char c) {
    switch (c) {
      case 's': return Tok::s;
      case '^': return Tok::caret;
      case '*': return Tok::star;
      case '+': return Tok::plus;
      case '-': return Tok::minus;
      case '/': return Tok::slash;
      case '(': return Tok::lparen;
      case ')': return Tok::rparen;
      default: return std::nullopt;
    }
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  std::size_t digits(std::size_t i) const {
    while (i < text_.size() && is_digit(text_[i])) ++i;
    return i;
  }

  Token number() {
    const std::size_t start = pos_;
    std::size_t i = digits(pos_);
    bool mantissa_digits = i > start;
    if (i < text_.size() && text_[i] == '.') {
      const std::size_t frac_end = digits(i + 1);
      mantissa_digits = mantissa_digits || frac_end > i + 1;
      i = frac_end;
    }
    if (!mantissa_digits) {
      throw ParseError("malformed number", start);
    }
    // The exponent suffix is only taken when digits follow it.
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      const std::size_t exp_end = digits(j);
      if (exp_end > j) i = exp_end;
    }
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + i, value);
    if (ec != std::errc{} || ptr != text_.data() + i || !std::isfinite(value)) {
      throw ParseError("number out of range", start);
    }
    pos_ = i;
    return {Tok::number, start, value};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  FracTF parse() {
    if (peek().kind == Tok::end) {
      throw ParseError("empty expression", peek().offset);
    }
    FracPoly num = poly("numerator");
    std::optional<FracPoly> den;
    if (peek().kind == Tok::slash) {
      next();
      den = poly("denominator");
    }
    if (peek().kind == Tok::rparen) {
      throw ParseError("unbalanced ')'", peek().offset);
    }
    if (peek().kind != Tok::end) {
      throw ParseError("unexpected token after expression", peek().offset);
    }
    return FracTF{std::move(num),
                  den ? std::move(*den) : FracPoly({{1.0, 0.0}})};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  FracPoly poly(const char* what) {
    const std::size_t start = peek().offset;
    if (peek().kind == Tok::lparen) {
      const std::size_t open = next().offset;
      FracPoly inner = poly(what);
      if (peek().kind != Tok::rparen) {
        throw ParseError(peek().kind == Tok::end
                             ? "unbalanced '(' opened at offset " +
                                   std::to_string(open)
                             : std::string("expected ')'"),
                         peek().offset);
      }
      next();
      return inner;
    }

    std::vector<FracTerm> terms;
    terms.push_back(term(true));
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool negate = next().kind == Tok::minus;
      FracTerm t = term(false);
      if (negate) t.coeff = -t.coeff;
      terms.push_back(t);
    }
    try {
      return FracPoly(std::move(terms));
    } catch (const DomainError&) {
      throw ParseError(std::string(what) + " is the zero polynomial", start);
    }
  }

  FracTerm term(bool allow_sign) {
    const std::size_t start = peek().offset;
    double sign = 1.0;
    if (allow_sign && (peek().kind == Tok::plus || peek().kind == Tok::minus)) {
      sign = next().kind == Tok::minus ? -1.0 : 1.0;
    }
    FracTerm t{sign, 0.0};
    factor(t);
    while (peek().kind == Tok::star) {
      next();
      factor(t);
    }
    if (!std::isfinite(t.coeff) || !std::isfinite(t.exponent)) {
      throw ParseError("term out of range", start);
    }
    return t;
  }

  void factor(FracTerm& t) {
    const Token& tok = peek();
    if (tok.kind == Tok::number) {
      t.coeff *= next().value;
      return;
    }
    if (tok.kind == Tok::s) {
      next();
      if (peek().kind != Tok::caret) {
        t.exponent += 1.0;
        return;
      }
      next();
      if (peek().kind != Tok::number) {
        throw ParseError("expected exponent after '^'", peek().offset);
      }
      t.exponent += next().value;
      return;
    }
    throw ParseError(tok.kind == Tok::end ? "dangling operator"
                                          : "expected a number or 's'",
                     tok.offset);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void append_number(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

FracTF parse_tf(std::string_view text) { return Parser(text).parse(); }

std::string pretty_print(const FracPoly& p) {
  std::string out;
  bool first = true;
  for (const FracTerm& t : p.terms()) {
    if (t.coeff < 0.0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    const double c = std::abs(t.coeff);
    if (t.exponent == 0.0) {
      append_number(out, c);
      continue;
    }
    if (c != 1.0) {
      append_number(out, c);
      out += '*';
    }
    out += "s^";
    append_number(out, t.exponent);
  }
  return out;
}

std::string pretty_print(const FracTF& tf) {
  if (tf.denominator.is_unit()) {
    return pretty_print(tf.numerator);
  }
  return "(" + pretty_print(tf.numerator) + ")/(" +
         pretty_print(tf.denominator) + ")";
}

// ---------------------------------------------------------------------------
// Evaluation

Complex eval_poly(const FracPoly& p, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("omega must be positive and finite");
  }
  const Complex jw{0.0, omega};
  Complex sum{0.0, 0.0};
  for (const FracTerm& t : p.terms()) {
    sum = add(sum, mul(Complex{t.coeff, 0.0}, principal_pow(jw, t.exponent)));
  }
  return sum;
}

Complex eval_tf(const FracTF& tf, double omega) {
  auto fail = [omega](const char* what) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s at omega=%.17g", what, omega);
    return EvaluationError(buf, omega);
  };
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("omega must be positive and finite");
  }
  try {
    const Complex num = eval_poly(tf.numerator, omega);
    const Complex den = eval_poly(tf.denominator, omega);
    if (magnitude(den) <= 1e-300) {
      throw fail("denominator vanishes");
    }
    return div(num, den);
  } catch (const DomainError&) {
    throw fail("value out of floating-point range");
  }
}

}  // namespace fracfreq
