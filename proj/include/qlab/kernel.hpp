#pragma once

// Homomorphisms onto cyclic groups and Reidemeister-Schreier presentations
// of their kernels.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qlab/errors.hpp"
#include "qlab/presentation.hpp"

namespace qlab {

  /// g -> degrees[g] in Z/modulus (modulus 0 means Z).  The constructor
  /// checks that every relator has degree 0.
  class CyclicHom {
   public:
    CyclicHom(Presentation source, long long modulus, std::vector<long long> degrees)
        : source_(std::move(source)), modulus_(modulus), degrees_(std::move(degrees)) {
      if (modulus_ < 0) {
        throw HomomorphismError("modulus must be nonnegative");
      }
      if (degrees_.size() != source_.alphabet.size()) {
        throw HomomorphismError("need one degree per generator");
      }
      for (auto& d : degrees_) {
        d = normalize(d);
      }
      for (std::size_t i = 0; i < source_.relators.size(); ++i) {
        if (degree(source_.relators[i]) != 0) {
          throw HomomorphismError("relator " + std::to_string(i + 1) + " ("
                                  + source_.word_string(source_.relators[i])
                                  + ") does not map to 0");
        }
      }
    }

    /// Every generator to 1: the abelianization map of a knot-like group
    /// whose generators are all meridians.
    static CyclicHom uniform(Presentation source, long long modulus) {
      std::vector<long long> deg(source.alphabet.size(), 1);
      return {std::move(source), modulus, std::move(deg)};
    }

    [[nodiscard]] Presentation const& source() const noexcept {
      return source_;
    }

    [[nodiscard]] long long modulus() const noexcept {
      return modulus_;
    }

    [[nodiscard]] std::vector<long long> const& degrees() const noexcept {
      return degrees_;
    }

    [[nodiscard]] long long degree(generator_index g) const {
      return degrees_.at(g);
    }

    [[nodiscard]] long long degree(Word const& w) const {
      long long s = 0;
      for (Letter l : w) {
        s = normalize(s + l.exponent() * degrees_.at(l.gen));
      }
      return s;
    }

    /// True if the image is all of Z/modulus.
    [[nodiscard]] bool surjective() const {
      long long g = modulus_;
      for (auto d : degrees_) {
        g = std::gcd(g, d);
      }
      return g == 1;
    }

   private:
    [[nodiscard]] long long normalize(long long v) const {
      if (modulus_ == 0) {
        return v;
      }
      v %= modulus_;
      return v < 0 ? v + modulus_ : v;
    }

    Presentation           source_;
    long long              modulus_;
    std::vector<long long> degrees_;
  };

  /// Appends g^r for each target generator unless an identical relator is
  /// already present.
  inline Presentation adjoin_power_relators(Presentation p,
                                            long long    r,
                                            std::vector<generator_index> const& targets) {
    if (r < 1) {
      throw Error("power relator exponent must be positive");
    }
    for (auto g : targets) {
      if (g >= p.alphabet.size()) {
        throw Error("power relator target out of range");
      }
      Word w = Word::generator(g).pow(r);
      if (std::find(p.relators.begin(), p.relators.end(), w) == p.relators.end()) {
        p.relators.push_back(std::move(w));
      }
    }
    return p;
  }

  namespace detail {
    inline long long inverse_mod(long long a, long long m) {
      long long g = m, x = 0, x1 = 1, b = a;
      while (b != 0) {
        long long q = g / b;
        std::tie(g, b)  = std::make_pair(b, g - q * b);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
      }
      return ((x % m) + m) % m;
    }

    inline std::string fresh_name(Alphabet const& a, std::string name) {
      while (a.find(name)) {
        name += '_';
      }
      return name;
    }
  }  // namespace detail

  /// Which generator supplies the Schreier transversal {mu^0, ..., mu^(r-1)}:
  /// the presentation's meridian if its degree is a unit mod r, else the
  /// first generator of unit degree.
  inline generator_index transversal_generator(CyclicHom const& h) {
    long long const r    = h.modulus();
    auto            unit = [&](generator_index g) { return std::gcd(h.degree(g), r) == 1; };
    auto const&     src  = h.source();
    if (src.meridian && unit(*src.meridian)) {
      return *src.meridian;
    }
    for (generator_index g = 0; g < src.alphabet.size(); ++g) {
      if (unit(g)) {
        return g;
      }
    }
    throw HomomorphismError("no generator has degree coprime to the modulus");
  }

  /// Reidemeister-Schreier presentation of ker(h) for h onto Z/r, r >= 1.
  ///
  /// With transversal T_e = mu^e the Schreier generators are
  /// g_e = T_e g T_e'^-1 where T_e' represents the coset of T_e g.  All
  /// mu_e are trivial except mu_(r-1) = mu^r, which becomes the meridian of
  /// the result.  The output has r*n - (r-1) generators and r*m relators
  /// (some possibly trivial); generator g_e is named "<g>_<e>".
  inline Presentation kernel_presentation(CyclicHom const& h) {
    long long const r = h.modulus();
    if (r == 0) {
      throw HomomorphismError("kernels of maps onto Z have infinite index");
    }
    if (!h.surjective()) {
      throw HomomorphismError("degrees do not generate Z/" + std::to_string(r));
    }
    auto const&           src = h.source();
    generator_index const mu  = transversal_generator(h);
    long long const       inv = detail::inverse_mod(h.degree(mu), r);
    // coset c (= degree mod r) is represented by mu^(c * inv mod r)
    auto                  exponent_of = [&](long long c) { return (c % r) * inv % r; };

    std::size_t const            n = src.alphabet.size();
    std::vector<std::optional<generator_index>> schreier(n * static_cast<std::size_t>(r));
    Presentation                 out;
    for (long long e = 0; e < r; ++e) {
      for (generator_index g = 0; g < n; ++g) {
        if (g == mu && e != r - 1) {
          continue;
        }
        std::string name = detail::fresh_name(out.alphabet,
                                               src.alphabet.name(g) + "_" + std::to_string(e));
        schreier[static_cast<std::size_t>(e) * n + g] = out.alphabet.add(name);
      }
    }
    out.meridian = schreier[static_cast<std::size_t>(r - 1) * n + mu];

    // coset c -> exponent e with T_e in that coset
    std::vector<long long> coset_to_exp(static_cast<std::size_t>(r));
    for (long long c = 0; c < r; ++c) {
      coset_to_exp[static_cast<std::size_t>(c)] = exponent_of(c);
    }
    auto slot = [&](long long coset, generator_index g) {
      return schreier[static_cast<std::size_t>(coset_to_exp[static_cast<std::size_t>(coset)]) * n
                      + g];
    };

    for (long long e = 0; e < r; ++e) {
      long long start = e * h.degree(mu) % r;
      for (auto const& rel : src.relators) {
        long long           c = start;
        std::vector<Letter> raw;
        for (Letter l : rel) {
          long long d = h.degree(l.gen);
          if (!l.inv) {
            if (auto s = slot(c, l.gen)) {
              raw.push_back({*s, false});
            }
            c = (c + d) % r;
          } else {
            c = ((c - d) % r + r) % r;
            if (auto s = slot(c, l.gen)) {
              raw.push_back({*s, true});
            }
          }
        }
        out.relators.push_back(Word::reduce(raw));
      }
    }
    return out;
  }

}  // namespace qlab
