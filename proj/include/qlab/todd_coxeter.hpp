#pragma once

// HLT coset enumeration with coincidence processing and a lookahead pass
// when the table fills up.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qlab/presentation.hpp"

namespace qlab {

  /// Complete coset table.  Column 2g is the action of g, column 2g+1 of g^-1;
  /// coset 0 is the subgroup itself.
  class CosetTable {
   public:
    CosetTable(std::size_t generators, std::vector<std::vector<std::uint32_t>> rows)
        : generators_(generators), rows_(std::move(rows)) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return rows_.size();
    }

    [[nodiscard]] std::size_t number_of_generators() const noexcept {
      return generators_;
    }

    [[nodiscard]] std::uint32_t act(std::uint32_t coset, Letter l) const {
      return rows_[coset][2 * l.gen + (l.inv ? 1 : 0)];
    }

    [[nodiscard]] std::uint32_t act(std::uint32_t coset, Word const& w) const {
      for (Letter l : w) {
        coset = act(coset, l);
      }
      return coset;
    }

    [[nodiscard]] std::vector<std::vector<std::uint32_t>> const& rows() const noexcept {
      return rows_;
    }

   private:
    std::size_t                             generators_;
    std::vector<std::vector<std::uint32_t>> rows_;
  };

  inline constexpr std::size_t default_max_cosets = 1'000'000;

  namespace detail {

    class Enumerator {
     public:
      static constexpr std::uint32_t none = UINT32_MAX;

      Enumerator(Presentation const& p, std::size_t max_cosets)
          : cols_(2 * p.alphabet.size()), max_(max_cosets) {
        for (auto const& r : p.relators) {
          if (!r.empty()) {
            rels_.push_back(columns(r));
          }
        }
        new_coset();
      }

      std::optional<CosetTable> run(std::vector<Word> const& subgroup) {
        for (auto const& h : subgroup) {
          if (!h.empty()) {
            scan_and_fill(0, columns(h));
          }
        }
        if (failed_) {
          return std::nullopt;
        }
        for (std::uint32_t a = 0; a < parent_.size(); ++a) {
          for (auto const& r : rels_) {
            if (!alive(a)) {
              break;
            }
            scan_and_fill(a, r);
            if (failed_) {
              return std::nullopt;
            }
          }
          if (alive(a)) {
            for (std::size_t c = 0; c < cols_; ++c) {
              if (table_[a][c] == none) {
                define(a, c);
                if (failed_) {
                  return std::nullopt;
                }
              }
            }
          }
        }
        return compact();
      }

     private:
      std::vector<std::size_t> columns(Word const& w) const {
        std::vector<std::size_t> out;
        for (Letter l : w) {
          out.push_back(2 * l.gen + (l.inv ? 1 : 0));
        }
        return out;
      }

      static std::size_t inverse_col(std::size_t c) {
        return c ^ 1U;
      }

      bool alive(std::uint32_t a) const {
        return parent_[a] == a;
      }

      std::uint32_t find(std::uint32_t a) {
        while (parent_[a] != a) {
          parent_[a] = parent_[parent_[a]];
          a          = parent_[a];
        }
        return a;
      }

      std::uint32_t new_coset() {
        auto a = static_cast<std::uint32_t>(parent_.size());
        parent_.push_back(a);
        table_.emplace_back(cols_, none);
        ++live_;
        return a;
      }

      // Defines a new coset b = a.c, running a lookahead if the bound is hit.
      void define(std::uint32_t a, std::size_t c) {
        if (live_ >= max_) {
          lookahead();
          if (failed_ || !alive(a) || table_[a][c] != none) {
            return;
          }
          if (live_ >= max_) {
            failed_ = true;
            return;
          }
        }
        // dead rows are never reused; cap total storage as well
        if (parent_.size() >= 4 * max_ + 16) {
          failed_ = true;
          return;
        }
        std::uint32_t b = new_coset();
        table_[a][c]                = b;
        table_[b][inverse_col(c)]   = a;
      }

      void lookahead() {
        for (std::uint32_t a = 0; a < parent_.size(); ++a) {
          for (auto const& r : rels_) {
            if (!alive(a)) {
              break;
            }
            scan(a, r);
          }
        }
      }

      // Traces r from a in both directions; deduces or detects coincidences
      // but never defines cosets.
      void scan(std::uint32_t a, std::vector<std::size_t> const& r) {
        std::uint32_t f = a, b = a;
        std::size_t   i = 0, j = r.size();
        while (i < j && table_[f][r[i]] != none) {
          f = table_[f][r[i]];
          ++i;
        }
        if (i == j) {
          if (f != a) {
            coincidence(f, a);
          }
          return;
        }
        while (j > i && table_[b][inverse_col(r[j - 1])] != none) {
          b = table_[b][inverse_col(r[j - 1])];
          --j;
        }
        if (j < i) {
          coincidence(f, b);
        } else if (j == i + 1) {
          table_[f][r[i]]              = b;
          table_[b][inverse_col(r[i])] = f;
        }
      }

      void scan_and_fill(std::uint32_t a, std::vector<std::size_t> const& r) {
        std::uint32_t f = a, b = a;
        std::size_t   i = 0, j = r.size();
        while (true) {
          while (i < j && table_[f][r[i]] != none) {
            f = table_[f][r[i]];
            ++i;
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j > i && table_[b][inverse_col(r[j - 1])] != none) {
            b = table_[b][inverse_col(r[j - 1])];
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (j == i + 1) {
            table_[f][r[i]]              = b;
            table_[b][inverse_col(r[i])] = f;
            return;
          }
          define(f, r[i]);
          if (failed_ || !alive(a)) {
            return;
          }
          // restart, since a lookahead may have merged cosets on the path
          f = a;
          b = a;
          i = 0;
          j = r.size();
        }
      }

      void coincidence(std::uint32_t a, std::uint32_t b) {
        std::vector<std::uint32_t> queue;
        merge(a, b, queue);
        for (std::size_t q = 0; q < queue.size(); ++q) {
          std::uint32_t e = queue[q];
          for (std::size_t c = 0; c < cols_; ++c) {
            std::uint32_t f = table_[e][c];
            if (f == none) {
              continue;
            }
            if (table_[f][inverse_col(c)] == e) {
              table_[f][inverse_col(c)] = none;
            }
            std::uint32_t e1 = find(e);
            std::uint32_t f1 = find(f);
            if (table_[e1][c] != none) {
              merge(f1, table_[e1][c], queue);
            } else if (table_[f1][inverse_col(c)] != none) {
              merge(e1, table_[f1][inverse_col(c)], queue);
            } else {
              table_[e1][c]              = f1;
              table_[f1][inverse_col(c)] = e1;
            }
          }
        }
      }

      void merge(std::uint32_t a, std::uint32_t b, std::vector<std::uint32_t>& queue) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        if (b < a) {
          std::swap(a, b);
        }
        parent_[b] = a;
        --live_;
        queue.push_back(b);
      }

      CosetTable compact() {
        std::vector<std::uint32_t> index(parent_.size(), none);
        std::uint32_t              n = 0;
        for (std::uint32_t a = 0; a < parent_.size(); ++a) {
          if (alive(a)) {
            index[a] = n++;
          }
        }
        std::vector<std::vector<std::uint32_t>> rows;
        rows.reserve(n);
        for (std::uint32_t a = 0; a < parent_.size(); ++a) {
          if (!alive(a)) {
            continue;
          }
          std::vector<std::uint32_t> row(cols_);
          for (std::size_t c = 0; c < cols_; ++c) {
            row[c] = index[find(table_[a][c])];
          }
          rows.push_back(std::move(row));
        }
        return {cols_ / 2, std::move(rows)};
      }

      std::size_t                             cols_;
      std::size_t                             max_;
      std::vector<std::vector<std::size_t>>   rels_;
      std::vector<std::uint32_t>              parent_;
      std::vector<std::vector<std::uint32_t>> table_;
      std::size_t                             live_   = 0;
      bool                                    failed_ = false;
    };

  }  // namespace detail

  /// Enumerates the cosets of the subgroup generated by `subgroup` (trivial
  /// by default).  Returns nullopt if more than max_cosets live cosets would
  /// be needed; otherwise the table size is the index.
  inline std::optional<CosetTable> todd_coxeter(Presentation const&      p,
                                                std::size_t              max_cosets = default_max_cosets,
                                                std::vector<Word> const& subgroup   = {}) {
    if (max_cosets == 0) {
      return std::nullopt;
    }
    detail::Enumerator e(p, max_cosets);
    return e.run(subgroup);
  }

}  // namespace qlab
