#pragma once

// Free-group words over an indexed alphabet of named generators.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlab/errors.hpp"

namespace qlab {

  using generator_index = std::uint32_t;

  /// A generator or its inverse.
  struct Letter {
    generator_index gen = 0;
    bool            inv = false;

    [[nodiscard]] Letter inverse() const noexcept {
      return {gen, !inv};
    }

    [[nodiscard]] int exponent() const noexcept {
      return inv ? -1 : 1;
    }

    friend bool operator==(Letter, Letter) = default;
    friend auto operator<=>(Letter, Letter) = default;
  };

  /// True for identifiers of the form letter (letter | digit | '_')*.
  inline bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) {
      return false;
    }
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  /// Ordered set of distinct generator names.
  class Alphabet {
   public:
    Alphabet() = default;

    Alphabet(std::initializer_list<std::string> names) {
      for (auto const& n : names) {
        add(n);
      }
    }

    explicit Alphabet(std::vector<std::string> const& names) {
      for (auto const& n : names) {
        add(n);
      }
    }

    generator_index add(std::string const& name) {
      if (!is_identifier(name)) {
        throw Error("invalid generator name '" + name + "'");
      }
      if (index_.contains(name)) {
        throw Error("duplicate generator name '" + name + "'");
      }
      auto i = static_cast<generator_index>(names_.size());
      names_.push_back(name);
      index_.emplace(name, i);
      return i;
    }

    [[nodiscard]] std::optional<generator_index> find(std::string_view name) const {
      auto it = index_.find(std::string(name));
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] generator_index at(std::string_view name) const {
      auto i = find(name);
      if (!i) {
        throw Error("unknown generator '" + std::string(name) + "'");
      }
      return *i;
    }

    [[nodiscard]] std::string const& name(generator_index i) const {
      return names_.at(i);
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return names_.size();
    }

    friend bool operator==(Alphabet const& a, Alphabet const& b) {
      return a.names_ == b.names_;
    }

   private:
    std::vector<std::string>                        names_;
    std::map<std::string, generator_index, std::less<>> index_;
  };

  /// A freely reduced word.  Every constructor and operation maintains the
  /// invariant that no letter is adjacent to its inverse.
  class Word {
   public:
    Word() = default;

    /// Free reduction of an arbitrary letter sequence.
    static Word reduce(std::span<Letter const> raw) {
      Word w;
      w.letters_.reserve(raw.size());
      for (Letter l : raw) {
        w.push_back(l);
      }
      return w;
    }

    static Word reduce(std::initializer_list<Letter> raw) {
      return reduce(std::span<Letter const>(raw.begin(), raw.size()));
    }

    static Word generator(generator_index g, int exponent = 1) {
      Word w;
      Letter l{g, exponent < 0};
      for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
        w.letters_.push_back(l);
      }
      return w;
    }

    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return letters_;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }

    [[nodiscard]] auto begin() const noexcept {
      return letters_.begin();
    }

    [[nodiscard]] auto end() const noexcept {
      return letters_.end();
    }

    Letter operator[](std::size_t i) const {
      return letters_[i];
    }

    [[nodiscard]] Word inverse() const {
      Word w;
      w.letters_.reserve(letters_.size());
      for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        w.letters_.push_back(it->inverse());
      }
      return w;
    }

    [[nodiscard]] Word pow(long long n) const {
      Word base = n < 0 ? inverse() : *this;
      Word r;
      for (long long i = 0; i < (n < 0 ? -n : n); ++i) {
        r *= base;
      }
      return r;
    }

    Word& operator*=(Word const& other) {
      for (Letter l : other.letters_) {
        push_back(l);
      }
      return *this;
    }

    friend Word operator*(Word a, Word const& b) {
      a *= b;
      return a;
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

    [[nodiscard]] long long exponent_sum(generator_index g) const {
      long long s = 0;
      for (Letter l : letters_) {
        if (l.gen == g) {
          s += l.exponent();
        }
      }
      return s;
    }

    [[nodiscard]] std::size_t occurrences(generator_index g) const {
      return static_cast<std::size_t>(std::count_if(
          letters_.begin(), letters_.end(), [g](Letter l) { return l.gen == g; }));
    }

    [[nodiscard]] bool contains(generator_index g) const {
      return occurrences(g) > 0;
    }

    /// Strips matching inverse pairs from the two ends.
    [[nodiscard]] Word cyclically_reduced() const {
      std::size_t lo = 0, hi = letters_.size();
      while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
        ++lo;
        --hi;
      }
      Word w;
      w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                        letters_.begin() + static_cast<std::ptrdiff_t>(hi));
      return w;
    }

    /// Rotation starting at position i (for cyclically reduced words this is
    /// again reduced).
    [[nodiscard]] Word rotated(std::size_t i) const {
      std::vector<Letter> raw;
      raw.reserve(letters_.size());
      for (std::size_t k = 0; k < letters_.size(); ++k) {
        raw.push_back(letters_[(i + k) % letters_.size()]);
      }
      return reduce(raw);
    }

    [[nodiscard]] generator_index max_generator() const {
      generator_index m = 0;
      for (Letter l : letters_) {
        m = std::max(m, l.gen);
      }
      return m;
    }

   private:
    void push_back(Letter l) {
      if (!letters_.empty() && letters_.back() == l.inverse()) {
        letters_.pop_back();
      } else {
        letters_.push_back(l);
      }
    }

    std::vector<Letter> letters_;
  };

  inline Word reduce(std::span<Letter const> raw) {
    return Word::reduce(raw);
  }

  /// x^v = v^-1 x v
  inline Word conjugate(Word const& x, Word const& v) {
    return v.inverse() * x * v;
  }

  /// Homomorphic image of w under g -> images[g].
  inline Word substitute(Word const& w, std::span<Word const> images) {
    Word r;
    for (Letter l : w) {
      if (l.gen >= images.size()) {
        throw MissingImageError("no image for generator index " + std::to_string(l.gen));
      }
      r *= l.inv ? images[l.gen].inverse() : images[l.gen];
    }
    return r;
  }

  /// As above, with a partial map; generators absent from the map are an
  /// error.
  inline Word substitute(Word const& w, std::map<generator_index, Word> const& images) {
    Word r;
    for (Letter l : w) {
      auto it = images.find(l.gen);
      if (it == images.end()) {
        throw MissingImageError("no image for generator index " + std::to_string(l.gen));
      }
      r *= l.inv ? it->second.inverse() : it->second;
    }
    return r;
  }

  /// Renders in the word DSL, e.g. "x y^-1 z^2"; the identity is "1".
  inline std::string to_string(Word const& w, Alphabet const& a) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    auto const& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
      std::size_t j = i;
      while (j < ls.size() && ls[j] == ls[i]) {
        ++j;
      }
      long long run = static_cast<long long>(j - i) * ls[i].exponent();
      if (!out.empty()) {
        out += ' ';
      }
      out += a.name(ls[i].gen);
      if (run != 1) {
        out += '^' + std::to_string(run);
      }
      i = j;
    }
    return out;
  }

}  // namespace qlab
