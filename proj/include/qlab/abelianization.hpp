#pragma once

#include <string>
#include <vector>

#include "qlab/presentation.hpp"
#include "qlab/smith.hpp"

namespace qlab {

  /// Z^rank + Z/torsion[0] + ...; `factors` is the raw Smith diagonal padded
  /// to one entry per generator.
  struct Abelianization {
    std::vector<BigInt> factors;
    std::vector<BigInt> torsion;
    std::size_t         rank = 0;

    [[nodiscard]] bool trivial() const noexcept {
      return rank == 0 && torsion.empty();
    }

    /// Order of the group, or 0 if infinite.
    [[nodiscard]] BigInt order() const {
      if (rank > 0) {
        return 0;
      }
      BigInt n = 1;
      for (auto const& d : torsion) {
        n *= d;
      }
      return n;
    }

    /// "1", "Z", "Z/4", "Z/2 x Z^2", ...
    [[nodiscard]] std::string to_string() const {
      std::vector<std::string> parts;
      for (auto const& d : torsion) {
        parts.push_back("Z/" + d.str());
      }
      if (rank == 1) {
        parts.emplace_back("Z");
      } else if (rank > 1) {
        parts.push_back("Z^" + std::to_string(rank));
      }
      if (parts.empty()) {
        return "1";
      }
      std::string out = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) {
        out += " x " + parts[i];
      }
      return out;
    }

    friend bool operator==(Abelianization const& a, Abelianization const& b) {
      return a.torsion == b.torsion && a.rank == b.rank;
    }
  };

  /// Relator-by-generator exponent-sum matrix.
  inline IntMatrix relation_matrix(Presentation const& p) {
    IntMatrix m(p.relators.size(), p.alphabet.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      for (Letter l : p.relators[i]) {
        m(i, l.gen) += l.exponent();
      }
    }
    return m;
  }

  inline Abelianization abelianization_of(IntMatrix const& m) {
    Abelianization a;
    a.factors = smith_normal_form(m);
    a.factors.resize(m.cols(), 0);
    for (auto const& d : a.factors) {
      if (d == 0) {
        ++a.rank;
      } else if (d != 1) {
        a.torsion.push_back(d);
      }
    }
    return a;
  }

  inline Abelianization abelianization(Presentation const& p) {
    return abelianization_of(relation_matrix(p));
  }

}  // namespace qlab
