#pragma once

// Heuristic Tietze simplification.  Never claims minimality.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "qlab/presentation.hpp"

namespace qlab {

  struct TietzeStats {
    std::size_t steps          = 0;
    std::size_t eliminations   = 0;
    std::size_t substitutions  = 0;
    bool        budget_exhausted = false;
  };

  namespace detail {

    // Least rotation of w or w^-1 in letter order; equal keys mean the
    // relators are interchangeable.
    inline Word cyclic_key(Word const& w) {
      Word best = w;
      for (Word const& base : {w, w.inverse()}) {
        for (std::size_t i = 0; i < base.size(); ++i) {
          Word r = base.rotated(i);
          if (r < best) {
            best = r;
          }
        }
      }
      return best;
    }

    // Cyclically reduces, drops trivial relators and duplicates up to
    // rotation and inversion.  Keeps the first representative as written.
    inline bool tidy_relators(std::vector<Word>& rels) {
      std::vector<Word> out;
      std::set<Word>    seen;
      for (auto const& r : rels) {
        Word c = r.cyclically_reduced();
        if (c.empty()) {
          continue;
        }
        if (seen.insert(cyclic_key(c)).second) {
          out.push_back(std::move(c));
        }
      }
      bool changed = out != rels;
      rels         = std::move(out);
      return changed;
    }

    inline std::size_t total_length(std::vector<Word> const& rels) {
      std::size_t n = 0;
      for (auto const& r : rels) {
        n += r.size();
      }
      return n;
    }

    // Replaces g by img everywhere.
    inline Word replace_generator(Word const& w, generator_index g, Word const& img) {
      Word out;
      Word img_inv = img.inverse();
      for (Letter l : w) {
        if (l.gen == g) {
          out *= l.inv ? img_inv : img;
        } else {
          out *= Word::generator(l.gen, l.exponent());
        }
      }
      return out;
    }

    struct Elimination {
      std::size_t       length = 0;
      generator_index   gen    = 0;
      std::size_t       relator = 0;
      std::vector<Word> relators;
    };

    // Best elimination of a generator occurring exactly once in a relator:
    // minimal resulting total length, ties to the lowest (generator,
    // relator).
    inline std::optional<Elimination> best_elimination(Presentation const& p) {
      std::optional<Elimination> best;
      for (generator_index g = 0; g < p.alphabet.size(); ++g) {
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
          Word const& rel = p.relators[i];
          if (rel.occurrences(g) != 1) {
            continue;
          }
          auto const& ls  = rel.letters();
          std::size_t pos = static_cast<std::size_t>(
              std::find_if(ls.begin(), ls.end(), [g](Letter l) { return l.gen == g; })
              - ls.begin());
          // rel rotated to g^e w = 1, so g = w^-1 (e = 1) or g = w (e = -1)
          Word rot  = rel.rotated(pos);
          Word rest = Word::reduce(std::span<Letter const>(rot.letters()).subspan(1));
          Word img  = rot[0].inv ? rest : rest.inverse();

          Elimination e;
          e.gen     = g;
          e.relator = i;
          for (std::size_t j = 0; j < p.relators.size(); ++j) {
            if (j != i) {
              e.relators.push_back(replace_generator(p.relators[j], g, img).cyclically_reduced());
            }
          }
          e.length = total_length(e.relators);
          if (!best || e.length < best->length) {
            best = std::move(e);
          }
        }
      }
      return best;
    }

    inline Presentation drop_generator(Presentation const& p,
                                       generator_index     g,
                                       std::vector<Word>   relators) {
      Presentation out;
      std::vector<Word> images(p.alphabet.size());
      for (generator_index h = 0; h < p.alphabet.size(); ++h) {
        if (h != g) {
          images[h] = Word::generator(out.alphabet.add(p.alphabet.name(h)));
        }
      }
      for (auto& r : relators) {
        out.relators.push_back(substitute(r, images));
      }
      if (p.meridian && *p.meridian != g) {
        out.meridian = images[*p.meridian][0].gen;
      }
      return out;
    }

    // If more than half of a cyclic rotation of `s` (or s^-1) occurs as a
    // cyclic subword of `l`, replace it by the inverse of the remainder.
    // Returns the shortened relator, or nullopt if no replacement shortens.
    inline std::optional<Word> shorten_with(Word const& l, Word const& s) {
      std::size_t const n = s.size();
      std::size_t const m = l.size();
      if (n == 0 || m == 0) {
        return std::nullopt;
      }
      std::optional<Word> best;
      for (Word const& base : {s, s.inverse()}) {
        for (std::size_t rot = 0; rot < n; ++rot) {
          Word r = base.rotated(rot);
          // longest prefix of r matched cyclically at each start of l
          for (std::size_t start = 0; start < m; ++start) {
            std::size_t len = 0;
            while (len < n && len < m && l[(start + len) % m] == r[len]) {
              ++len;
            }
            if (2 * len <= n) {
              continue;
            }
            // l = (prefix of r of length len) * tail, cyclically;
            // r = prefix * suffix = 1, so prefix = suffix^-1
            std::vector<Letter> raw;
            for (std::size_t k = len; k < n; ++k) {
              raw.push_back(r[n - 1 - (k - len)].inverse());
            }
            for (std::size_t k = len; k < m; ++k) {
              raw.push_back(l[(start + k) % m]);
            }
            Word cand = Word::reduce(raw).cyclically_reduced();
            if (cand.size() < m && (!best || cand.size() < best->size())) {
              best = std::move(cand);
            }
          }
        }
      }
      return best;
    }

  }  // namespace detail

  /// Simplifies by generator elimination (a relator in which some generator
  /// occurs exactly once defines it), removal of trivial and duplicate
  /// relators, cyclic reduction, and substituting short relators into longer
  /// ones while the total length decreases.  Each move costs one unit of
  /// budget; on exhaustion the current presentation is returned.
  inline Presentation tietze_simplify(Presentation p,
                                      std::size_t  budget = 10'000,
                                      TietzeStats* stats  = nullptr) {
    TietzeStats local;
    TietzeStats& st = stats ? *stats : local;
    st = {};
    auto spend = [&] {
      if (st.steps >= budget) {
        st.budget_exhausted = true;
        return false;
      }
      ++st.steps;
      return true;
    };

    detail::tidy_relators(p.relators);
    while (true) {
      if (auto e = detail::best_elimination(p)) {
        if (!spend()) {
          break;
        }
        p = detail::drop_generator(p, e->gen, std::move(e->relators));
        detail::tidy_relators(p.relators);
        ++st.eliminations;
        continue;
      }
      bool improved = false;
      for (std::size_t i = 0; i < p.relators.size() && !improved; ++i) {
        for (std::size_t j = 0; j < p.relators.size() && !improved; ++j) {
          if (i == j || p.relators[i].size() > p.relators[j].size()) {
            continue;
          }
          if (auto shorter = detail::shorten_with(p.relators[j], p.relators[i])) {
            if (!spend()) {
              return p;
            }
            p.relators[j] = std::move(*shorter);
            detail::tidy_relators(p.relators);
            ++st.substitutions;
            improved = true;
          }
        }
      }
      if (!improved) {
        break;
      }
    }
    return p;
  }

}  // namespace qlab
