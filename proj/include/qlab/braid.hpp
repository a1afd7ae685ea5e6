#pragma once

// The three-strand braid group B3 = < sig, tau | sig tau sig = tau sig tau >,
// its word problem via the reduced Burau representation, and the ribbon-knot
// groups G_k with their generator images in B3.

#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "qlab/laurent.hpp"
#include "qlab/parser.hpp"
#include "qlab/presentation.hpp"
#include "qlab/verify.hpp"

namespace qlab {

  inline constexpr generator_index sig = 0;
  inline constexpr generator_index tau = 1;

  inline Alphabet const& braid_alphabet() {
    static Alphabet const a{"sig", "tau"};
    return a;
  }

  inline Presentation b3_presentation() {
    return parse_presentation("< sig, tau | sig tau sig = tau sig tau >");
  }

  inline Word parse_braid(std::string_view s) {
    return parse_word(s, braid_alphabet());
  }

  inline std::string braid_string(Word const& w) {
    return to_string(w, braid_alphabet());
  }

  /// Reduced Burau images sig -> [[-t, 1], [0, 1]], tau -> [[1, 0], [t, -t]].
  inline LaurentMatrix burau_generator(Letter l) {
    static LaurentMatrix const s{{-LaurentPoly::t(), 1}, {0, 1}};
    static LaurentMatrix const t{{1, 0}, {LaurentPoly::t(), -LaurentPoly::t()}};
    static LaurentMatrix const s_inv = s.inverse();
    static LaurentMatrix const t_inv = t.inverse();
    if (l.gen == sig) {
      return l.inv ? s_inv : s;
    }
    if (l.gen == tau) {
      return l.inv ? t_inv : t;
    }
    throw Error("braid words use only sig and tau");
  }

  /// Product of the Burau images along w.  Right multiplication by a
  /// generator only shifts and adds entries, so no general products are formed.
  inline LaurentMatrix burau(Word const& w) {
    LaurentMatrix m = LaurentMatrix::identity(2);
    for (Letter l : w) {
      if (l.gen != sig && l.gen != tau) {
        throw Error("braid words use only sig and tau");
      }
      for (std::size_t r = 0; r < 2; ++r) {
        LaurentPoly a = m(r, 0), b = m(r, 1);
        if (l.gen == sig && !l.inv) {  // [[-t, 1], [0, 1]]
          m(r, 0) = -a.shifted(1);
          m(r, 1) = a + b;
        } else if (l.gen == sig) {  // [[-t^-1, t^-1], [0, 1]]
          m(r, 0) = -a.shifted(-1);
          m(r, 1) = a.shifted(-1) + b;
        } else if (!l.inv) {  // [[1, 0], [t, -t]]
          m(r, 0) = a + b.shifted(1);
          m(r, 1) = -b.shifted(1);
        } else {  // [[1, 0], [1, -t^-1]]
          m(r, 0) = a + b;
          m(r, 1) = -b.shifted(-1);
        }
      }
    }
    return m;
  }

  /// Equality in B3.  Sound and complete because reduced Burau is faithful
  /// on three strands.
  inline bool braid_eq(Word const& u, Word const& v) {
    return burau(u) == burau(v);
  }

  /// Oracle for targets that are literally the standard presentation of B3.
  namespace detail {
    /// Burau image of w evaluated at t, reduced mod the prime 2^61 - 1.
    inline bool burau_identity_mod(Word const& w, std::uint64_t t) {
      using u128             = unsigned __int128;
      constexpr std::uint64_t p = (std::uint64_t(1) << 61) - 1;
      auto mul = [](std::uint64_t a, std::uint64_t b) { return std::uint64_t(u128(a) * b % p); };
      auto add = [](std::uint64_t a, std::uint64_t b) { return (a + b) % p; };
      auto neg = [](std::uint64_t a) { return a == 0 ? 0 : p - a; };
      // t^-1 = t^(p-2)
      std::uint64_t ti = 1;
      for (std::uint64_t b = t, e = p - 2; e; e >>= 1, b = mul(b, b)) {
        if (e & 1) {
          ti = mul(ti, b);
        }
      }
      std::uint64_t m[2][2] = {{1, 0}, {0, 1}};
      for (Letter l : w) {
        if (l.gen != sig && l.gen != tau) {
          return true;  // left to the exact check, which reports it
        }
        for (auto& row : m) {
          std::uint64_t a = row[0], b = row[1];
          if (l.gen == sig && !l.inv) {
            row[0] = neg(mul(t, a));
            row[1] = add(a, b);
          } else if (l.gen == sig) {
            row[0] = neg(mul(ti, a));
            row[1] = add(mul(ti, a), b);
          } else if (!l.inv) {
            row[0] = add(a, mul(t, b));
            row[1] = neg(mul(t, b));
          } else {
            row[0] = add(a, b);
            row[1] = neg(mul(ti, b));
          }
        }
      }
      return m[0][0] == 1 && m[0][1] == 0 && m[1][0] == 0 && m[1][1] == 1;
    }
  }  // namespace detail

  class BurauOracle {
   public:
    BurauOracle() = default;

    explicit BurauOracle(Presentation const& target) {
      Presentation b3 = b3_presentation();
      bool         ok = target.alphabet == b3.alphabet && target.relators.size() == 1
               && detail::cyclic_key(target.relators[0].cyclically_reduced())
                      == detail::cyclic_key(b3.relators[0]);
      if (!ok) {
        throw OracleInapplicable("Burau oracle requires the target < sig, tau | sig tau sig = tau sig tau >");
      }
    }

    [[nodiscard]] bool is_identity(Word const& w) const {
      // a nonidentity value at any t mod p rules the word out cheaply
      for (std::uint64_t t : {2u, 3u, 12345u}) {
        if (!detail::burau_identity_mod(w, t)) {
          return false;
        }
      }
      return burau(w) == LaurentMatrix::identity(2);
    }

    [[nodiscard]] static std::string name() {
      return "burau";
    }
  };

  /// Images of x, y, z in B3 for the k-th ribbon-knot group:
  /// x -> tau^-1 sig tau (tau^-1 sig)^(k-1), y -> sig (tau^-1 sig)^(k-1),
  /// z -> (tau^-1 sig)^k tau.
  struct SuciuImages {
    long long k = 1;
    Word      x;
    Word      y;
    Word      z;

    [[nodiscard]] std::vector<Word> as_vector() const {
      return {x, y, z};
    }
  };

  inline void require_positive_k(long long k) {
    if (k < 1) {
      throw Error("k must be at least 1");
    }
  }

  inline SuciuImages suciu_images(long long k) {
    require_positive_k(k);
    Word const u = parse_braid("tau^-1 sig");
    Word const s = parse_braid("sig");
    Word const t = parse_braid("tau");
    return {k, t.inverse() * s * t * u.pow(k - 1), s * u.pow(k - 1), u.pow(k) * t};
  }

  /// G_k = < x, y, z | x = y^V, x = z^W > with V = z y x^-1 z^-1 and
  /// W = (x y^-1)^(k-1) z^-1, where a^b = b^-1 a b.  Meridian x.
  inline Presentation suciu_group(long long k) {
    require_positive_k(k);
    Presentation p(Alphabet{"x", "y", "z"});
    Word const   x = Word::generator(0), y = Word::generator(1), z = Word::generator(2);
    Word const   v = z * y * x.inverse() * z.inverse();
    Word const   w = (x * y.inverse()).pow(k - 1) * z.inverse();
    p.add_equation({x, conjugate(y, v)});
    p.add_equation({x, conjugate(z, w)});
    p.meridian = 0;
    return p;
  }

  inline HomCheck check_suciu_images(long long k, std::vector<Word> const& images) {
    return verify_hom(suciu_group(k), b3_presentation(), images, BurauOracle{});
  }

  /// True iff the standard images kill both relators of G_k in B3.
  inline bool verify_suciu_iso(long long k) {
    return check_suciu_images(k, suciu_images(k).as_vector()).holds();
  }

  /// Breadth-first search over products of at most `radius` image letters
  /// (x, y, z and inverses), deduplicated by Burau matrix.  True once both
  /// sig and tau have been reached.  False only means "not within radius".
  inline bool bounded_generation_check(long long k, std::size_t radius) {
    SuciuImages const img = suciu_images(k);
    std::vector<LaurentMatrix> steps;
    for (Word const& w : img.as_vector()) {
      steps.push_back(burau(w));
      steps.push_back(burau(w.inverse()));
    }
    std::string const target_s = burau(parse_braid("sig")).to_string();
    std::string const target_t = burau(parse_braid("tau")).to_string();
    bool              found_s = false, found_t = false;

    std::unordered_set<std::string> seen;
    std::vector<LaurentMatrix>      frontier{LaurentMatrix::identity(2)};
    seen.insert(frontier.front().to_string());
    for (std::size_t depth = 0; depth < radius && !(found_s && found_t); ++depth) {
      std::vector<LaurentMatrix> next;
      for (auto const& m : frontier) {
        for (auto const& s : steps) {
          LaurentMatrix p   = m * s;
          std::string   key = p.to_string();
          if (!seen.insert(key).second) {
            continue;
          }
          found_s = found_s || key == target_s;
          found_t = found_t || key == target_t;
          next.push_back(std::move(p));
        }
      }
      frontier = std::move(next);
    }
    return found_s && found_t;
  }

  /// The printed two-generator presentation
  /// S_k = < a, b | b a^(k-1) b = a^k, a b^(k-1) a = b >.
  inline Presentation s_presentation(long long k) {
    require_positive_k(k);
    Presentation p(Alphabet{"a", "b"});
    Word const   a = Word::generator(0), b = Word::generator(1);
    p.add_equation({b * a.pow(k - 1) * b, a.pow(k)});
    p.add_equation({a * b.pow(k - 1) * a, b});
    return p;
  }

  /// The variant < a, b | b a^(k-1) b = a^k, a b^(k-1) a = b^k > satisfied by
  /// the images of a -> x z^-1 x y^-1 z x^-1, b -> y x^-1 (see README).
  inline Presentation s_presentation_balanced(long long k) {
    require_positive_k(k);
    Presentation p(Alphabet{"a", "b"});
    Word const   a = Word::generator(0), b = Word::generator(1);
    p.add_equation({b * a.pow(k - 1) * b, a.pow(k)});
    p.add_equation({a * b.pow(k - 1) * a, b.pow(k)});
    return p;
  }

  /// a -> x z^-1 x y^-1 z x^-1, b -> y x^-1 as words over {x, y, z}.
  inline std::vector<Word> s_map_images() {
    Alphabet const a{"x", "y", "z"};
    return {parse_word("x z^-1 x y^-1 z x^-1", a), parse_word("y x^-1", a)};
  }

}  // namespace qlab
