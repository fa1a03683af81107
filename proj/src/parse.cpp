#include "torelli/parse.hpp"

#include <cctype>

namespace torelli {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool at_end() { return peek() == '\0'; }
  std::size_t pos() const { return pos_; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer integer() {
    if (!at_digit()) fail("expected an integer");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar coefficient() {
    Integer num = integer();
    Integer den = 1;
    if (accept('/')) {
      const std::size_t at = pos_;
      den = integer();
      if (den == 0) throw ParseError(at, "zero denominator");
    }
    Scalar c(num, den);
    c.canonicalize();
    return c;
  }

  BasisLabel label() {
    const char c = peek();
    if (c != 'a' && c != 'b') fail("expected a basis label a<i> or b<i>");
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a label index");
    const std::size_t at = pos_;
    const Integer idx = integer();
    if (idx < 1 || idx > 1'000'000) throw ParseError(at, "label index out of range");
    return {c == 'a' ? Family::A : Family::B, static_cast<int>(idx.get_si())};
  }

  // Optional leading "coeff *"; returns 1 when absent.
  Scalar optional_coefficient() {
    if (!at_digit()) return Scalar(1);
    Scalar c = coefficient();
    expect('*');
    return c;
  }

  // Parses "[-] item ((+|-) item)*", scaling each item by its sign.
  template <typename Item>
  void signed_sum(Item&& item) {
    int sign = accept('-') ? -1 : 1;
    item(Scalar(sign));
    for (;;) {
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        break;
      }
      item(Scalar(sign));
    }
  }

  // Consumes a bare "0" standing for the zero vector.
  bool zero_literal() {
    if (peek() != '0') return false;
    const std::size_t save = pos_;
    ++pos_;
    const char next = peek();
    if (next == '\0' || next == ',' || next == ';' || next == ')') return true;
    pos_ = save;
    return false;
  }

  HVec hvec() {
    if (zero_literal()) return {};
    HVec out;
    signed_sum([&](const Scalar& sign) {
      const Scalar c = optional_coefficient();
      out.add_term(label(), sign * c);
    });
    return out;
  }

  HTree tree() {
    expect("T(");
    HTree t;
    t.x1 = hvec();
    expect(',');
    t.x2 = hvec();
    expect(';');
    t.x3 = hvec();
    expect(',');
    t.x4 = hvec();
    expect(')');
    return t;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HVec parse_hvec(std::string_view text) {
  Cursor cur(text);
  HVec v = cur.hvec();
  cur.finish();
  return v;
}

HTree parse_tree(std::string_view text) {
  Cursor cur(text);
  HTree t = cur.tree();
  cur.finish();
  return t;
}

S2L2Vec parse_tree_sum(std::string_view text) {
  Cursor cur(text);
  S2L2Vec out;
  if (cur.zero_literal()) {
    cur.finish();
    return out;
  }
  cur.signed_sum([&](const Scalar& sign) {
    const Scalar c = cur.optional_coefficient();
    out.add_scaled(tree_expand(cur.tree()), sign * c);
  });
  cur.finish();
  return out;
}

TensorVec parse_tensor(std::string_view text) {
  Cursor cur(text);
  TensorVec out;
  if (cur.zero_literal()) {
    cur.finish();
    return out;
  }
  cur.signed_sum([&](const Scalar& sign) {
    const Scalar c = cur.optional_coefficient();
    BasicTensor t{cur.label()};
    while (cur.accept('*')) t.push_back(cur.label());
    out.add_term(t, sign * c);
  });
  cur.finish();
  return out;
}

std::pair<HVec, HVec> parse_twist(std::string_view text) {
  Cursor cur(text);
  cur.expect("twist(");
  HVec x = cur.hvec();
  cur.expect(';');
  HVec y = cur.hvec();
  cur.expect(')');
  cur.finish();
  return {std::move(x), std::move(y)};
}

}  // namespace torelli
