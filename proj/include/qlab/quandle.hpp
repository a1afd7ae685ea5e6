#pragma once

// Finite quandles as operation tables, op[x][y] = x * y (row = left operand).

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qlab/errors.hpp"
#include "qlab/laurent.hpp"
#include "qlab/presentation.hpp"
#include "qlab/todd_coxeter.hpp"

namespace qlab {

  using RawTable = std::vector<std::vector<long long>>;

  struct AxiomReport;

  class QuandleTable {
   public:
    QuandleTable() = default;

    [[nodiscard]] std::size_t size() const noexcept {
      return op_.size();
    }

    /// x * y
    [[nodiscard]] std::uint32_t operator()(std::size_t x, std::size_t y) const {
      return op_[x][y];
    }

    [[nodiscard]] std::vector<std::vector<std::uint32_t>> const& rows() const noexcept {
      return op_;
    }

    /// The right translation S_y : x -> x * y.
    [[nodiscard]] std::vector<std::uint32_t> column(std::size_t y) const {
      std::vector<std::uint32_t> c(op_.size());
      for (std::size_t x = 0; x < op_.size(); ++x) {
        c[x] = op_[x][y];
      }
      return c;
    }

    friend bool operator==(QuandleTable const&, QuandleTable const&) = default;

   private:
    friend AxiomReport check_axioms(RawTable const&);

    std::vector<std::vector<std::uint32_t>> op_;
  };

  /// First violation of each axiom, in lexicographic order of the witnesses.
  struct AxiomReport {
    std::optional<std::string>              shape_error;
    std::optional<std::size_t>              idempotence;       // x with x*x != x
    std::optional<std::size_t>              right_invertible;  // column y not a bijection
    std::optional<std::array<std::size_t, 3>> distributive;    // (x, y, z)
    std::optional<QuandleTable>             table;

    [[nodiscard]] bool valid() const {
      return table.has_value();
    }

    [[nodiscard]] std::string summary() const {
      if (shape_error) {
        return "malformed table: " + *shape_error;
      }
      if (valid()) {
        return "all quandle axioms hold";
      }
      std::string out;
      if (idempotence) {
        out += "idempotence fails at x=" + std::to_string(*idempotence) + "; ";
      }
      if (right_invertible) {
        out += "column y=" + std::to_string(*right_invertible) + " is not a permutation; ";
      }
      if (distributive) {
        auto [x, y, z] = *distributive;
        out += "self-distributivity fails at (x,y,z)=(" + std::to_string(x) + ","
               + std::to_string(y) + "," + std::to_string(z) + "); ";
      }
      out.resize(out.size() - 2);
      return out;
    }
  };

  inline AxiomReport check_axioms(RawTable const& raw) {
    AxiomReport       rep;
    std::size_t const n = raw.size();
    for (std::size_t x = 0; x < n; ++x) {
      if (raw[x].size() != n) {
        rep.shape_error = "row " + std::to_string(x) + " has " + std::to_string(raw[x].size())
                          + " entries, expected " + std::to_string(n);
        return rep;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (raw[x][y] < 0 || raw[x][y] >= static_cast<long long>(n)) {
          rep.shape_error = "entry (" + std::to_string(x) + "," + std::to_string(y)
                            + ") out of range";
          return rep;
        }
      }
    }
    auto op = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(raw[a][b]); };
    for (std::size_t x = 0; x < n && !rep.idempotence; ++x) {
      if (op(x, x) != x) {
        rep.idempotence = x;
      }
    }
    for (std::size_t y = 0; y < n && !rep.right_invertible; ++y) {
      std::vector<bool> hit(n);
      for (std::size_t x = 0; x < n; ++x) {
        if (hit[op(x, y)]) {
          rep.right_invertible = y;
          break;
        }
        hit[op(x, y)] = true;
      }
    }
    for (std::size_t x = 0; x < n && !rep.distributive; ++x) {
      for (std::size_t y = 0; y < n && !rep.distributive; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (op(op(x, y), z) != op(op(x, z), op(y, z))) {
            rep.distributive = std::array<std::size_t, 3>{x, y, z};
            break;
          }
        }
      }
    }
    if (!rep.idempotence && !rep.right_invertible && !rep.distributive) {
      QuandleTable q;
      q.op_.assign(n, std::vector<std::uint32_t>(n));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          q.op_[x][y] = static_cast<std::uint32_t>(raw[x][y]);
        }
      }
      rep.table = std::move(q);
    }
    return rep;
  }

  /// Throws Error with the violation summary if the table is not a quandle.
  inline QuandleTable make_quandle(RawTable const& raw) {
    auto rep = check_axioms(raw);
    if (!rep.valid()) {
      throw Error(rep.summary());
    }
    return *rep.table;
  }

  inline QuandleTable trivial_quandle(std::size_t n) {
    RawTable t(n, std::vector<long long>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = static_cast<long long>(x);
      }
    }
    return make_quandle(t);
  }

  /// x * y = 2y - x mod n.
  inline QuandleTable dihedral_quandle(std::size_t n) {
    if (n == 0) {
      throw Error("dihedral quandle needs n >= 1");
    }
    auto     m = static_cast<long long>(n);
    RawTable t(n, std::vector<long long>(n));
    for (long long x = 0; x < m; ++x) {
      for (long long y = 0; y < m; ++y) {
        t[x][y] = ((2 * y - x) % m + m) % m;
      }
    }
    return make_quandle(t);
  }

  /// Order of a permutation given as images.
  inline BigInt permutation_order(std::vector<std::uint32_t> const& p) {
    std::vector<bool> seen(p.size());
    BigInt            order = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      long long len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      order = boost::multiprecision::lcm(order, BigInt(len));
    }
    return order;
  }

  /// min { i >= 1 : x *^i y = x for all x, y }, which for a finite table is
  /// the lcm of the orders of the right translations.
  inline BigInt quandle_type(QuandleTable const& q) {
    BigInt t = 1;
    for (std::size_t y = 0; y < q.size(); ++y) {
      t = boost::multiprecision::lcm(t, permutation_order(q.column(y)));
    }
    return t;
  }

  /// Orbits of the group generated by the right translations, each sorted,
  /// ordered by least element.
  inline std::vector<std::vector<std::size_t>> orbits(QuandleTable const& q) {
    std::size_t const        n = q.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) {
        a = parent[a] = parent[parent[a]];
      }
      return a;
    };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t a = find(x), b = find(q(x, y));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<long long>                slot(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t r = find(x);
      if (slot[r] < 0) {
        slot[r] = static_cast<long long>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot[r])].push_back(x);
    }
    return out;
  }

  /// A finite group by multiplication table; element 0 is the identity.
  class FiniteGroup {
   public:
    explicit FiniteGroup(std::vector<std::vector<std::uint32_t>> mul) : mul_(std::move(mul)) {
      std::size_t const n = mul_.size();
      inv_.assign(n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        if (mul_[a].size() != n) {
          throw DimensionError("group table must be square");
        }
        bool found = false;
        for (std::uint32_t b = 0; b < n; ++b) {
          if (mul_[a][b] == 0) {
            inv_[a] = b;
            found   = true;
          }
        }
        if (!found) {
          throw Error("group table has no inverse for element " + std::to_string(a));
        }
      }
    }

    /// The regular action recorded by a complete coset table of the trivial
    /// subgroup: elements are cosets, and a * b is a followed by any word
    /// reaching b from coset 0.
    static FiniteGroup from_coset_table(CosetTable const& t) {
      std::size_t const                  n = t.size();
      std::vector<Word>                  path(n);
      std::vector<bool>                  seen(n);
      std::vector<std::uint32_t>         queue{0};
      seen[0] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        std::uint32_t c = queue[q];
        for (generator_index g = 0; g < t.number_of_generators(); ++g) {
          for (bool inv : {false, true}) {
            std::uint32_t d = t.act(c, Letter{g, inv});
            if (!seen[d]) {
              seen[d] = true;
              path[d] = path[c] * Word::generator(g, inv ? -1 : 1);
              queue.push_back(d);
            }
          }
        }
      }
      std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          mul[a][b] = t.act(a, path[b]);
        }
      }
      return FiniteGroup(std::move(mul));
    }

    static FiniteGroup cyclic(std::size_t n) {
      std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          mul[a][b] = static_cast<std::uint32_t>((a + b) % n);
        }
      }
      return FiniteGroup(std::move(mul));
    }

    /// All permutations of {0..n-1} in lexicographic order (identity first),
    /// composed as (a * b)(i) = b(a(i)).
    static FiniteGroup symmetric(std::size_t n) {
      std::vector<std::vector<std::uint32_t>> perms;
      std::vector<std::uint32_t>              p(n);
      std::iota(p.begin(), p.end(), 0U);
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::map<std::vector<std::uint32_t>, std::uint32_t> index;
      for (std::uint32_t i = 0; i < perms.size(); ++i) {
        index[perms[i]] = i;
      }
      std::vector<std::vector<std::uint32_t>> mul(perms.size(),
                                                  std::vector<std::uint32_t>(perms.size()));
      for (std::size_t a = 0; a < perms.size(); ++a) {
        for (std::size_t b = 0; b < perms.size(); ++b) {
          std::vector<std::uint32_t> c(n);
          for (std::size_t i = 0; i < n; ++i) {
            c[i] = perms[b][perms[a][i]];
          }
          mul[a][b] = index.at(c);
        }
      }
      return FiniteGroup(std::move(mul));
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return mul_.size();
    }

    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
      return mul_[a][b];
    }

    [[nodiscard]] std::uint32_t inverse(std::uint32_t a) const {
      return inv_[a];
    }

   private:
    std::vector<std::vector<std::uint32_t>> mul_;
    std::vector<std::uint32_t>              inv_;
  };

  /// x * y = y^-1 x y on the elements of g.
  inline QuandleTable conj_quandle(FiniteGroup const& g) {
    std::size_t const n = g.order();
    RawTable          t(n, std::vector<long long>(n));
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        t[x][y] = g.mul(g.mul(g.inverse(y), x), y);
      }
    }
    return make_quandle(t);
  }

  /// < q0, ..., q(n-1) | (x*y)^-1 y^-1 x y, x^r >.  Freely trivial relators
  /// (from x*y = x with y = x, say) are omitted; r = 0 omits the power
  /// relators.  Meridian q0.
  inline Presentation associated_group_presentation(QuandleTable const& q, long long r) {
    if (r < 0) {
      throw Error("r must be nonnegative");
    }
    Presentation p;
    for (std::size_t x = 0; x < q.size(); ++x) {
      p.alphabet.add("q" + std::to_string(x));
    }
    auto gen = [](std::size_t i) { return Word::generator(static_cast<generator_index>(i)); };
    for (std::size_t x = 0; x < q.size(); ++x) {
      for (std::size_t y = 0; y < q.size(); ++y) {
        Word rel = gen(q(x, y)).inverse() * conjugate(gen(x), gen(y));
        if (!rel.empty()) {
          p.relators.push_back(std::move(rel));
        }
      }
    }
    if (r >= 1) {
      for (std::size_t x = 0; x < q.size(); ++x) {
        p.relators.push_back(gen(x).pow(r));
      }
    }
    if (q.size() > 0) {
      p.meridian = 0;
    }
    return p;
  }

  /// "n" then n rows of n 0-based entries; '#' starts a comment.
  inline RawTable parse_quandle_table(std::string_view text) {
    std::size_t pos = 0;
    auto        skip = [&] {
      while (pos < text.size()) {
        if (text[pos] == '#') {
          while (pos < text.size() && text[pos] != '\n') {
            ++pos;
          }
        } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        } else {
          break;
        }
      }
    };
    auto number = [&](char const* what) {
      skip();
      long long   v     = 0;
      auto const* first = text.data() + pos;
      auto [ptr, ec]    = std::from_chars(first, text.data() + text.size(), v);
      if (ec != std::errc() || ptr == first) {
        throw ParseError(std::string("expected ") + what, pos);
      }
      pos += static_cast<std::size_t>(ptr - first);
      return v;
    };
    long long n = number("table size");
    if (n < 0) {
      throw ParseError("table size must be nonnegative", 0);
    }
    RawTable t(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
    for (auto& row : t) {
      for (auto& v : row) {
        v = number("table entry");
      }
    }
    skip();
    if (pos != text.size()) {
      throw ParseError("unexpected trailing input", pos);
    }
    return t;
  }

  inline std::string to_string(QuandleTable const& q) {
    std::string out = std::to_string(q.size()) + "\n";
    for (auto const& row : q.rows()) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out += (i ? " " : "") + std::to_string(row[i]);
      }
      out += "\n";
    }
    return out;
  }

}  // namespace qlab
