// Copyright 2026 The skewmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skew/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "skew/errors.hpp"

namespace skew {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  void expect_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    for (std::size_t i = 0; i < w.size(); ++i) advance();
  }

  bool consume(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  u64 number() {
    skip_space();
    u64 v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc() || ptr == first) fail("expected a non-negative integer");
    const std::size_t n = static_cast<std::size_t>(ptr - first);
    for (std::size_t i = 0; i < n; ++i) advance();
    return v;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  // Position of the next token, for errors raised after it is read.
  std::pair<std::size_t, std::size_t> mark() {
    skip_space();
    return {line_, col_};
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

GfExt::Elem read_element(const GfExt& L, Cursor& in) {
  const std::size_t r = L.degree();
  const u64 p = L.base().modulus();
  GfExt::Elem out = L.zero();
  in.expect('[');
  std::size_t i = 0;
  if (!in.consume(']')) {
    do {
      const auto [line, col] = in.mark();
      const u64 v = in.number();
      if (v >= p) throw ParseError("coordinate " + std::to_string(v) + " is not below p", line, col);
      if (i >= r) throw ParseError("element has more than r coordinates", line, col);
      out[i++] = v;
    } while (in.consume(','));
    in.expect(']');
  }
  return out;
}

}  // namespace

FieldSpec parse_field(std::string_view text) {
  Cursor in(text);
  FieldSpec spec;
  in.expect_word("p");
  in.expect('=');
  auto [pl, pc] = in.mark();
  spec.p = in.number();
  if (spec.p < 2 || !is_prime_u64(spec.p)) throw ParseError("p is not a prime", pl, pc);
  in.expect(';');
  in.expect_word("f");
  in.expect('=');
  do {
    const auto [line, col] = in.mark();
    const u64 c = in.number();
    if (c >= spec.p) throw ParseError("coefficient is not below p", line, col);
    spec.f.push_back(c);
  } while (in.consume(','));
  const auto [el, ec] = in.mark();
  in.expect_end();
  if (spec.f.size() < 2) throw ParseError("f must have degree at least 1", el, ec);
  if (spec.f.back() != 1) throw ParseError("f must be monic (c_r = 1)", el, ec);
  return spec;
}

std::string format_field(const FieldSpec& spec) {
  std::ostringstream os;
  os << "p=" << spec.p << ";f=";
  for (std::size_t i = 0; i < spec.f.size(); ++i) os << (i ? "," : "") << spec.f[i];
  return os.str();
}

GfExt::Elem parse_element(const GfExt& L, std::string_view text) {
  Cursor in(text);
  auto out = read_element(L, in);
  in.expect_end();
  return out;
}

std::string format_element(const GfExt& L, const GfExt::Elem& a) {
  L.check(a);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ']';
  return os.str();
}

std::vector<GfExt::Elem> parse_word(const GfExt& L, std::string_view text) {
  Cursor in(text);
  std::vector<GfExt::Elem> out;
  in.expect('[');
  if (!in.consume(']')) {
    do {
      out.push_back(read_element(L, in));
    } while (in.consume(','));
    in.expect(']');
  }
  in.expect_end();
  return out;
}

std::string format_word(const GfExt& L, const std::vector<GfExt::Elem>& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += format_element(L, w[i]);
  }
  out += ']';
  return out;
}

SkewOf<GfExt> parse_poly(const GfExt& L, std::string_view text) {
  return skew_make(L, parse_word(L, text));
}

std::string format_poly(const GfExt& L, const SkewOf<GfExt>& a) {
  return format_word(L, a.coeffs);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace skew
