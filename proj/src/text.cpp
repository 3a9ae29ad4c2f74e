#include "leibniz/text.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::optional<std::string> digits() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string required_digits(std::string_view what) {
    auto d = digits();
    if (!d) fail("expected " + std::string(what));
    return *d;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Unsigned magnitude "n" or "n/d"; the caller handles signs.
Scalar parse_magnitude(const Field& field, Cursor& in) {
  const mpz_class num(in.required_digits("a number"));
  if (!in.accept('/')) return Scalar(field, num);
  const auto at = in.position();
  const mpz_class den(in.required_digits("a denominator"));
  try {
    return Scalar::fraction(field, num, den);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DivisionByZero) throw ParseError(at, "zero denominator");
    throw;
  }
}

Scalar parse_signed(const Field& field, Cursor& in) {
  bool negative = false;
  while (true) {
    if (in.accept('-')) {
      negative = !negative;
    } else if (!in.accept('+')) {
      break;
    }
  }
  const Scalar s = parse_magnitude(field, in);
  return negative ? -s : s;
}

Index parse_index(Cursor& in) {
  const auto at = in.position();
  const std::string d = in.required_digits("a basis index");
  if (d.size() > 18) throw ParseError(at, "basis index too large");
  const Index n = std::stoull(d);
  if (n < 1) throw Error(ErrorCode::BadIndex, "basis index must be >= 1 (position " +
                                                   std::to_string(at) + ")");
  return n;
}

std::vector<Scalar> parse_gamma_list(const Field& field, Cursor& in) {
  in.expect('[');
  std::vector<Scalar> gamma;
  if (in.accept(']')) return gamma;
  do {
    gamma.push_back(parse_signed(field, in));
  } while (in.accept(','));
  in.expect(']');
  return gamma;
}

// Optional leading sign, then term ((+|-) term)*; term_fn(sign, cursor).
template <typename TermFn>
void parse_sum(Cursor& in, TermFn term_fn) {
  bool negative = false;
  if (in.accept('-')) {
    negative = true;
  } else {
    in.accept('+');
  }
  term_fn(negative, in);
  while (!in.at_end()) {
    if (in.accept('+')) {
      negative = false;
    } else if (in.accept('-')) {
      negative = true;
    } else {
      in.fail("expected '+' or '-'");
    }
    term_fn(negative, in);
  }
}

}  // namespace

Scalar parse_scalar(const Field& field, std::string_view text) {
  Cursor in(text);
  const Scalar s = parse_signed(field, in);
  in.expect_end();
  return s;
}

Element parse_element(const Field& field, std::string_view text) {
  Cursor in(text);
  Element x(field);
  if (in.peek() == '0') {
    Cursor probe(text);
    probe.accept('0');
    if (probe.at_end()) return x;
  }
  parse_sum(in, [&](bool negative, Cursor& c) {
    Scalar coeff = Scalar::one(field);
    if (c.peek() != 'a') {
      coeff = parse_magnitude(field, c);
      c.expect('*');
    }
    if (!c.accept('a')) c.fail("expected 'a<index>'");
    const Index n = parse_index(c);
    x.add_term(n, negative ? -coeff : coeff);
  });
  return x;
}

Endo parse_endo(const Field& field, std::string_view text) {
  Cursor in(text);
  if (!in.accept_word("endo")) in.fail("expected 'endo'");
  auto gamma = parse_gamma_list(field, in);
  in.expect_end();
  return Endo::from_gamma(field, std::move(gamma));
}

Derivation parse_derivation(const Field& field, std::string_view text) {
  Cursor in(text);
  if (!in.accept_word("der")) in.fail("expected 'der'");
  auto gamma = parse_gamma_list(field, in);
  in.expect_end();
  return Derivation::from_gamma(field, std::move(gamma));
}

Polynomial parse_polynomial(const Field& field, std::string_view text) {
  Cursor in(text);
  std::vector<Scalar> coeffs;
  parse_sum(in, [&](bool negative, Cursor& c) {
    Scalar coeff = Scalar::one(field);
    std::size_t exponent = 0;
    if (c.peek() != 'X') {
      coeff = parse_magnitude(field, c);
      if (c.accept('*')) {
        if (c.peek() != 'X') c.fail("expected 'X'");
      }
    }
    if (c.accept('X')) {
      exponent = 1;
      if (c.accept('^')) {
        const auto at = c.position();
        const std::string d = c.required_digits("an exponent");
        if (d.size() > 6) throw ParseError(at, "exponent too large");
        exponent = std::stoul(d);
      }
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, Scalar::zero(field));
    coeffs[exponent] += negative ? -coeff : coeff;
  });
  return Polynomial::from_coeffs(field, std::move(coeffs));
}

}  // namespace leibniz
