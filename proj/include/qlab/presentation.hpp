#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/errors.hpp"
#include "qlab/word.hpp"

namespace qlab {

  /// lhs = rhs, stored as written.
  struct Equation {
    Word lhs;
    Word rhs;

    [[nodiscard]] Word relator() const {
      return lhs * rhs.inverse();
    }
  };

  /// Finitely presented group <generators | relators>.  Equations are stored
  /// as lhs * rhs^-1.  The optional meridian is a distinguished generator used
  /// as the default Schreier transversal for cyclic kernels.
  struct Presentation {
    Alphabet                       alphabet;
    std::vector<Word>              relators;
    std::optional<generator_index> meridian;

    Presentation() = default;

    explicit Presentation(Alphabet a) : alphabet(std::move(a)) {}

    [[nodiscard]] std::size_t number_of_generators() const noexcept {
      return alphabet.size();
    }

    [[nodiscard]] std::size_t number_of_relators() const noexcept {
      return relators.size();
    }

    [[nodiscard]] std::size_t total_length() const noexcept {
      std::size_t n = 0;
      for (auto const& r : relators) {
        n += r.size();
      }
      return n;
    }

    void add_relator(Word r) {
      check_word(r);
      relators.push_back(std::move(r));
    }

    void add_equation(Equation const& e) {
      add_relator(e.relator());
    }

    /// Throws if some relator mentions a generator outside the alphabet.
    void validate() const {
      for (auto const& r : relators) {
        check_word(r);
      }
      if (meridian && *meridian >= alphabet.size()) {
        throw Error("meridian index out of range");
      }
    }

    void check_word(Word const& w) const {
      if (!w.empty() && w.max_generator() >= alphabet.size()) {
        throw Error("word uses a generator outside the alphabet");
      }
    }

    [[nodiscard]] std::string word_string(Word const& w) const {
      return qlab::to_string(w, alphabet);
    }

    /// "< a, b | r1, r2 >", parseable by parse_presentation.
    [[nodiscard]] std::string to_string() const {
      std::string out = "< ";
      for (std::size_t i = 0; i < alphabet.size(); ++i) {
        out += (i == 0 ? "" : ", ") + alphabet.name(static_cast<generator_index>(i));
      }
      out += " |";
      for (std::size_t i = 0; i < relators.size(); ++i) {
        out += (i == 0 ? " " : ", ") + word_string(relators[i]);
      }
      return out + " >";
    }
  };

}  // namespace qlab
