#include "bglab/parser.hpp"

#include <cctype>
#include <limits>

#include "bglab/errors.hpp"

namespace bglab {

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      Identity identity() {
        auto lhs = expr();
        expect('=');
        auto rhs = expr();
        finish();
        return {std::move(lhs), std::move(rhs)};
      }

      Expr whole_expr() {
        auto e = expr();
        finish();
        return e;
      }

     private:
      std::string_view _text;
      std::size_t      _pos = 0;

      [[noreturn]] void fail(std::string const& msg) const {
        throw SyntaxError(msg, _pos);
      }

      void skip() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      char peek() {
        skip();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      void finish() {
        if (peek() != '\0') {
          fail("unexpected trailing input");
        }
      }

      bool starts_factor() {
        auto const c = peek();
        return c == 'x' || c == '(' || c == 'v' || c == 'u' || c == 'w';
      }

      std::uint64_t integer() {
        skip();
        auto const start = _pos;
        std::uint64_t v  = 0;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          auto const d = static_cast<std::uint64_t>(_text[_pos] - '0');
          if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
            fail("integer too large");
          }
          v = v * 10 + d;
          ++_pos;
        }
        if (_pos == start) {
          fail("expected an integer");
        }
        return v;
      }

      // digits directly after the current character, no whitespace
      std::uint32_t index_part() {
        auto const start = _pos;
        std::uint64_t v  = 0;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          v = v * 10 + static_cast<std::uint64_t>(_text[_pos] - '0');
          if (v > std::numeric_limits<std::uint32_t>::max()) {
            fail("variable index too large");
          }
          ++_pos;
        }
        if (_pos == start) {
          fail("expected variable index digits");
        }
        if (v == 0) {
          _pos = start;
          fail("variable indices start at 1");
        }
        return static_cast<std::uint32_t>(v);
      }

      Expr expr() {
        if (peek() == '1') {
          ++_pos;
          return Expr::one();
        }
        if (!starts_factor()) {
          fail("expected a term");
        }
        std::vector<Expr> factors;
        while (starts_factor()) {
          factors.push_back(factor());
        }
        return Expr::product(std::move(factors));
      }

      Expr factor() {
        auto e = primary();
        while (true) {
          auto const c = peek();
          if (c == '^') {
            ++_pos;
            e = Expr::power(std::move(e), integer());
          } else if (c == '\'') {
            ++_pos;
            e = e.starred();
          } else {
            return e;
          }
        }
      }

      std::vector<std::uint64_t> family_args(std::size_t count) {
        std::vector<std::uint64_t> out;
        expect('[');
        for (std::size_t i = 0; i < count; ++i) {
          if (i > 0) {
            expect(',');
          }
          out.push_back(integer());
        }
        expect(']');
        return out;
      }

      unsigned small(std::uint64_t v) {
        if (v > std::numeric_limits<unsigned>::max()) {
          fail("family parameter too large");
        }
        return static_cast<unsigned>(v);
      }

      Expr primary() {
        auto const c     = peek();
        auto const start = _pos;
        if (c == '(') {
          ++_pos;
          auto e = expr();
          expect(')');
          return e;
        }
        ++_pos;
        if (c == 'x') {
          Variable v;
          v.index.push_back(index_part());
          while (_pos < _text.size() && _text[_pos] == '_') {
            ++_pos;
            v.index.push_back(index_part());
          }
          return Expr::variable(std::move(v));
        }
        try {
          if (c == 'v') {
            auto a = family_args(3);
            return Expr::vword(small(a[0]), a[1], small(a[2]));
          }
          if (c == 'u') {
            auto a = family_args(3);
            return Expr::from_term(u_word(small(a[0]), small(a[1]), a[2]));
          }
          if (c == 'w') {
            auto a = family_args(2);
            return Expr::from_term(w_word(small(a[0]), small(a[1])));
          }
        } catch (PreconditionFailed const& e) {
          _pos = start;
          fail(e.what());
        }
        _pos = start;
        fail("unexpected character");
      }
    };

  }  // namespace

  Expr parse_expr(std::string_view text) {
    return Parser(text).whole_expr();
  }

  Identity parse_identity(std::string_view text) {
    return Parser(text).identity();
  }

  Term parse_term(std::string_view text) {
    return parse_expr(text).flatten(default_budgets().word_length);
  }

  std::string format_term(Term const& t) {
    if (t.is_unit()) {
      return "1";
    }
    std::string out;
    for (auto const& l : t.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += l.var.name();
      if (l.inverse) {
        out += '\'';
      }
    }
    return out;
  }

}  // namespace bglab
