#pragma once

// Recursive-descent parser for the word and presentation DSL.
//
//   word    := term+
//   term    := atom ('^' signed_int)?
//   atom    := ident | '(' word ')' | '1'
//   ident   := letter (letter | digit | '_')*
//
//   presentation := '<' ident (',' ident)* ('|' (rel (',' rel)*)?)? '>'
//   rel          := word ('=' word)?
//
// '^' binds tighter than juxtaposition.  '#' starts a comment that runs to
// the end of the line.  All error offsets are byte offsets into the input.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qlab/errors.hpp"
#include "qlab/presentation.hpp"
#include "qlab/word.hpp"

namespace qlab {

  namespace detail {

    // Hard cap on |n| in x^n, so a typo cannot request a gigantic word.
    inline constexpr long long max_power = 1'000'000;

    class Parser {
     public:
      Parser(std::string_view src, Alphabet& alphabet, bool extend)
          : src_(src), alphabet_(alphabet), extend_(extend) {}

      Word word() {
        skip();
        if (!starts_term()) {
          throw ParseError("expected a generator, '1' or '('", pos_);
        }
        Word w;
        while (starts_term()) {
          w *= term();
          skip();
        }
        return w;
      }

      Presentation presentation() {
        expect('<');
        Presentation p;
        skip();
        if (!at('|') && !at('>')) {
          while (true) {
            skip();
            std::size_t start = pos_;
            std::string name  = ident();
            if (p.alphabet.find(name)) {
              throw ParseError("duplicate generator '" + name + "'", start);
            }
            p.alphabet.add(name);
            skip();
            if (!at(',')) {
              break;
            }
            ++pos_;
          }
        }
        alphabet_ = p.alphabet;
        skip();
        if (at('|')) {
          ++pos_;
          skip();
          if (!at('>')) {
            while (true) {
              Word lhs = word();
              skip();
              if (at('=')) {
                ++pos_;
                Word rhs = word();
                p.add_equation({lhs, rhs});
              } else {
                p.add_relator(lhs);
              }
              skip();
              if (!at(',')) {
                break;
              }
              ++pos_;
            }
          }
        }
        expect('>');
        return p;
      }

      void finish() {
        skip();
        if (pos_ != src_.size()) {
          throw ParseError("unexpected trailing input", pos_);
        }
      }

     private:
      bool at(char c) const {
        return pos_ < src_.size() && src_[pos_] == c;
      }

      void expect(char c) {
        skip();
        if (!at(c)) {
          throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
      }

      void skip() {
        while (pos_ < src_.size()) {
          char c = src_[pos_];
          if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos_;
          } else if (c == '#') {
            while (pos_ < src_.size() && src_[pos_] != '\n') {
              ++pos_;
            }
          } else {
            break;
          }
        }
      }

      bool starts_term() const {
        if (pos_ >= src_.size()) {
          return false;
        }
        char c = src_[pos_];
        return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '1';
      }

      std::string ident() {
        std::size_t start = pos_;
        if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
          throw ParseError("expected an identifier", pos_);
        }
        while (pos_ < src_.size()
               && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          ++pos_;
        }
        return std::string(src_.substr(start, pos_ - start));
      }

      Word atom() {
        std::size_t start = pos_;
        if (at('(')) {
          ++pos_;
          Word w = word();
          expect(')');
          return w;
        }
        if (at('1')) {
          ++pos_;
          if (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
            throw ParseError("identifiers must start with a letter", start);
          }
          return {};
        }
        std::string name = ident();
        auto        g    = alphabet_.find(name);
        if (!g) {
          if (!extend_) {
            throw UnknownGeneratorError(name, start);
          }
          g = alphabet_.add(name);
        }
        return Word::generator(*g);
      }

      Word term() {
        Word base = atom();
        skip();
        if (!at('^')) {
          return base;
        }
        ++pos_;
        skip();
        std::size_t start = pos_;
        bool        neg   = false;
        if (at('-') || at('+')) {
          neg = at('-');
          ++pos_;
        }
        long long   n      = 0;
        auto const* first  = src_.data() + pos_;
        auto const* last   = src_.data() + src_.size();
        auto [ptr, ec]     = std::from_chars(first, last, n);
        if (ec != std::errc() || ptr == first) {
          throw ParseError("expected an integer exponent", start);
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        if (n > max_power) {
          throw ParseError("exponent too large", start);
        }
        return base.pow(neg ? -n : n);
      }

      std::string_view src_;
      std::size_t      pos_ = 0;
      Alphabet&        alphabet_;
      bool             extend_;
    };

  }  // namespace detail

  /// Parses a word over a fixed alphabet; unknown names are an error.
  inline Word parse_word(std::string_view s, Alphabet const& alphabet) {
    Alphabet       copy = alphabet;
    detail::Parser p(s, copy, false);
    Word           w = p.word();
    p.finish();
    return w;
  }

  /// Parses a word, appending unseen generator names to the alphabet in order
  /// of first appearance.
  inline Word parse_word_extending(std::string_view s, Alphabet& alphabet) {
    detail::Parser p(s, alphabet, true);
    Word           w = p.word();
    p.finish();
    return w;
  }

  inline Presentation parse_presentation(std::string_view s) {
    Alphabet       scratch;
    detail::Parser p(s, scratch, false);
    Presentation   pres = p.presentation();
    p.finish();
    return pres;
  }

}  // namespace qlab
