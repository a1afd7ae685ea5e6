#pragma once

// Checking that generator images define a homomorphism, relative to a
// word-problem oracle for the target.

#include <concepts>
#include <optional>
#include <span>
#include <vector>

#include "qlab/abelianization.hpp"
#include "qlab/errors.hpp"
#include "qlab/presentation.hpp"
#include "qlab/tietze.hpp"
#include "qlab/todd_coxeter.hpp"

namespace qlab {

  /// Decides w = 1 in a fixed target group, or throws OracleInapplicable.
  template <class O>
  concept WordOracle = requires(O const& o, Word const& w) {
    { o.is_identity(w) } -> std::convertible_to<bool>;
    { o.name() } -> std::convertible_to<std::string>;
  };

  /// Exact for finite targets: enumerates the regular action (trivial
  /// subgroup), which is faithful.
  class CosetTableOracle {
   public:
    explicit CosetTableOracle(Presentation const& target,
                              std::size_t         max_cosets = default_max_cosets) {
      auto t = todd_coxeter(target, max_cosets);
      if (!t) {
        throw OracleInapplicable("coset enumeration exceeded " + std::to_string(max_cosets)
                                 + " cosets; target not certified finite");
      }
      table_.emplace(std::move(*t));
    }

    [[nodiscard]] bool is_identity(Word const& w) const {
      return table_->act(0, w) == 0;
    }

    [[nodiscard]] std::size_t order() const {
      return table_->size();
    }

    [[nodiscard]] static std::string name() {
      return "coset-table";
    }

   private:
    std::optional<CosetTable> table_;
  };

  /// Decides equality in the abelianization.  A nonzero image there proves
  /// w != 1; a zero image proves nothing unless the target is declared
  /// abelian, in which case the oracle throws.
  class AbelianizationOracle {
   public:
    explicit AbelianizationOracle(Presentation const& target, bool target_is_abelian = false)
        : target_(target), base_(abelianization(target)), abelian_(target_is_abelian) {}

    [[nodiscard]] bool is_identity(Word const& w) const {
      Presentation extended = target_;
      extended.relators.push_back(w);
      bool in_lattice = abelianization(extended) == base_;
      if (!in_lattice) {
        return false;
      }
      if (!abelian_) {
        throw OracleInapplicable("image is trivial in the abelianization; "
                                 "inconclusive for a possibly nonabelian target");
      }
      return true;
    }

    [[nodiscard]] static std::string name() {
      return "abelianization";
    }

   private:
    Presentation   target_;
    Abelianization base_;
    bool           abelian_;
  };

  /// Outcome of verify_hom: per-relator verdicts in source order.
  struct HomCheck {
    std::vector<bool> relator_ok;

    [[nodiscard]] bool holds() const {
      for (bool b : relator_ok) {
        if (!b) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] std::optional<std::size_t> first_failure() const {
      for (std::size_t i = 0; i < relator_ok.size(); ++i) {
        if (!relator_ok[i]) {
          return i;
        }
      }
      return std::nullopt;
    }

    explicit operator bool() const {
      return holds();
    }
  };

  /// True without consulting an oracle when w is freely trivial or a cyclic
  /// conjugate of a target relator or its inverse.
  inline bool syntactically_trivial(Word const& w, Presentation const& target) {
    Word c = w.cyclically_reduced();
    if (c.empty()) {
      return true;
    }
    Word key = detail::cyclic_key(c);
    for (auto const& r : target.relators) {
      if (r.size() >= c.size() && detail::cyclic_key(r.cyclically_reduced()) == key) {
        return true;
      }
    }
    return false;
  }

  /// Checks that g -> images[g] sends every source relator to 1 in the
  /// target.  images must have one entry per source generator.
  template <WordOracle Oracle>
  HomCheck verify_hom(Presentation const&    source,
                      Presentation const&    target,
                      std::span<Word const>  images,
                      Oracle const&          oracle) {
    if (images.size() < source.alphabet.size()) {
      throw MissingImageError("need one image per source generator");
    }
    for (auto const& img : images) {
      target.check_word(img);
    }
    HomCheck out;
    for (auto const& rel : source.relators) {
      Word w = substitute(rel, images);
      out.relator_ok.push_back(syntactically_trivial(w, target) || oracle.is_identity(w));
    }
    return out;
  }

}  // namespace qlab
