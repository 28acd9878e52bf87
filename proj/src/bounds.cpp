// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tripods/bounds.hpp"

#include <cctype>
#include <sstream>

#include "tripods/errors.hpp"

namespace tripods {

namespace {

// Guards against exponents and binomial sides too large to evaluate.
constexpr long kMaxSmall = 1L << 20;

long small(const BigInt& v, const char* what) {
  if (v < 0 || v > kMaxSmall) {
    throw PreconditionError(std::string(what) + " is too large to evaluate");
  }
  return v.convert_to<long>();
}

}  // namespace

BigInt binomial(const BigInt& n, const BigInt& r) {
  if (r < 0 || r > n) return 0;
  BigInt k = r < n - r ? r : n - r;
  const long steps = small(k, "binomial coefficient side");
  BigInt result = 1;
  for (long i = 1; i <= steps; ++i) {
    result = result * (n - steps + i) / i;
  }
  return result;
}

BigInt ramsey_bound(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) throw PreconditionError("Ramsey arguments must be >= 1");
  return binomial(a + b - 2, a - 1);
}

BigInt transitive_bound(const BigInt& c) {
  if (c < 1) throw PreconditionError("tournament order must be >= 1");
  return BigInt(1) << static_cast<unsigned>(small(c - 1, "tournament order"));
}

// ---------------------------------------------------------------------------
// g5 expressions.

struct G5::Node {
  char op = 0;  // 'n' number, 't' variable, or one of + - * ^
  BigInt value = 0;
  std::shared_ptr<const Node> left, right;

  BigInt eval(const BigInt& t) const {
    switch (op) {
      case 'n':
        return value;
      case 't':
        return t;
      case '+':
        return left->eval(t) + right->eval(t);
      case '-':
        return left->eval(t) - right->eval(t);
      case '*':
        return left->eval(t) * right->eval(t);
      default: {
        BigInt base = left->eval(t);
        long exp = small(right->eval(t), "g5 exponent");
        return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
      }
    }
  }
};

namespace {

class G5Parser {
 public:
  explicit G5Parser(const std::string& text) : text_(text) {}

  std::shared_ptr<const G5::Node> parse() {
    auto node = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  using Ptr = std::shared_ptr<const G5::Node>;

  [[noreturn]] void fail(const std::string& why) const {
    throw PreconditionError("g5 expression, column " + std::to_string(pos_ + 1) +
                            ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool take(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Ptr binary(char op, Ptr l, Ptr r) {
    auto n = std::make_shared<G5::Node>();
    n->op = op;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
  }

  Ptr sum() {
    Ptr node = product();
    for (;;) {
      if (take('+')) {
        node = binary('+', node, product());
      } else if (take('-')) {
        node = binary('-', node, product());
      } else {
        return node;
      }
    }
  }

  Ptr product() {
    Ptr node = power();
    while (take('*')) node = binary('*', node, power());
    return node;
  }

  Ptr power() {
    Ptr base = atom();
    if (take('^')) return binary('^', base, power());
    return base;
  }

  Ptr atom() {
    skip();
    if (take('(')) {
      Ptr inner = sum();
      if (!take(')')) fail("missing ')'");
      return inner;
    }
    if (pos_ < text_.size() && text_[pos_] == 't') {
      ++pos_;
      auto n = std::make_shared<G5::Node>();
      n->op = 't';
      return n;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number, 't' or '('");
    auto n = std::make_shared<G5::Node>();
    n->op = 'n';
    n->value = BigInt(text_.substr(start, pos_ - start));
    return n;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

G5::G5() : text_("t") {
  auto n = std::make_shared<Node>();
  n->op = 't';
  expr_ = std::move(n);
}

G5 G5::parse(const std::string& text) {
  G5 g;
  g.text_ = text;
  g.expr_.reset();
  if (text.find(',') != std::string::npos) {
    std::stringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
      std::size_t a = cell.find_first_not_of(" \t");
      std::size_t b = cell.find_last_not_of(" \t");
      if (a == std::string::npos) throw PreconditionError("g5 table: empty entry");
      cell = cell.substr(a, b - a + 1);
      for (char c : cell) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw PreconditionError("g5 table: '" + cell + "' is not a number");
        }
      }
      BigInt v(cell);
      if (v < 1) throw PreconditionError("g5 table: values must be >= 1");
      g.table_.push_back(v);
    }
    return g;
  }
  g.expr_ = G5Parser(text).parse();
  return g;
}

BigInt G5::operator()(long t) const {
  if (t < 1) throw PreconditionError("g5 argument must be >= 1");
  BigInt v;
  if (!table_.empty()) {
    if (static_cast<std::size_t>(t) > table_.size()) {
      throw PreconditionError("g5 table has no entry for t=" + std::to_string(t));
    }
    v = table_[static_cast<std::size_t>(t) - 1];
  } else {
    v = expr_->eval(t);
  }
  if (v < 1) {
    throw PreconditionError("g5(" + std::to_string(t) + ") = " + v.str() +
                            " is not positive");
  }
  return v;
}

std::string to_string(Route route) {
  return route == Route::kRamsey ? "ramsey" : "iterative";
}

Route parse_route(const std::string& text) {
  if (text == "ramsey") return Route::kRamsey;
  if (text == "iterative") return Route::kIterative;
  throw PreconditionError("route must be 'ramsey' or 'iterative', got '" + text +
                          "'");
}

BigInt BoundTable::g5(long k) const { return g5_(k); }

BigInt BoundTable::g10(const BigInt& l) const {
  const BigInt p = l * l;
  return l * (l + p + p * l);
}

BigInt BoundTable::g10_iterate(BigInt x, long times) const {
  for (long i = 0; i < times; ++i) x = g10(x);
  return x;
}

BigInt BoundTable::g9(long k) const { return g10_iterate(g5(k), k); }

BigInt BoundTable::g4_ramsey(long k) const {
  return ramsey_bound(transitive_bound(2 * g5(k)), k);
}

BigInt BoundTable::g4_iter(long k) const { return k * (2 * g9(k) - 1); }

BigInt BoundTable::g4(long k) const {
  return route_ == Route::kRamsey ? g4_ramsey(k) : g4_iter(k);
}

BigInt BoundTable::f1(long k) const {
  if (k < 1) throw PreconditionError("f1 needs k >= 1");
  BigInt f = 0;
  for (long j = 2; j <= k; ++j) f = 2 * f + 2 * g4(j);
  return f;
}

}  // namespace tripods
