#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qlab/errors.hpp"
#include "qlab/laurent.hpp"

namespace qlab {

  /// Dense rectangular integer matrix, used for relation matrices.
  class IntMatrix {
   public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
        : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
      entries_.reserve(rows_ * cols_);
      for (auto const& row : rows) {
        if (row.size() != cols_) {
          throw DimensionError("IntMatrix rows must have equal length");
        }
        for (auto v : row) {
          entries_.emplace_back(v);
        }
      }
    }

    [[nodiscard]] std::size_t rows() const noexcept {
      return rows_;
    }

    [[nodiscard]] std::size_t cols() const noexcept {
      return cols_;
    }

    BigInt& operator()(std::size_t i, std::size_t j) {
      return entries_[i * cols_ + j];
    }

    BigInt const& operator()(std::size_t i, std::size_t j) const {
      return entries_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t j = 0; j < cols_; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
      }
    }

    void swap_cols(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t i = 0; i < rows_; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
      }
    }

    /// row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, BigInt const& q) {
      for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(dst, j) += q * (*this)(src, j);
      }
    }

    /// col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, BigInt const& q) {
      for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, dst) += q * (*this)(i, src);
      }
    }

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t         rows_ = 0;
    std::size_t         cols_ = 0;
    std::vector<BigInt> entries_;
  };

  namespace detail {
    inline BigInt abs(BigInt const& v) {
      return v < 0 ? BigInt(-v) : v;
    }

    // Smallest nonzero |entry| in the submatrix [t.., t..]; ties go to the
    // lowest (row, col).  Returns false if the submatrix is zero.
    inline bool find_pivot(IntMatrix const& m,
                           std::size_t      t,
                           std::size_t&     pr,
                           std::size_t&     pc) {
      bool   found = false;
      BigInt best;
      for (std::size_t i = t; i < m.rows(); ++i) {
        for (std::size_t j = t; j < m.cols(); ++j) {
          if (m(i, j) == 0) {
            continue;
          }
          BigInt a = abs(m(i, j));
          if (!found || a < best) {
            found = true;
            best  = a;
            pr    = i;
            pc    = j;
          }
        }
      }
      return found;
    }

    // Brings a pivot to (t, t) that divides every entry of the trailing block
    // and clears its row and column.  Returns false if the block is zero.
    inline bool smith_step(IntMatrix& m, std::size_t t) {
      while (true) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(m, t, pr, pc)) {
          return false;
        }
        m.swap_rows(t, pr);
        m.swap_cols(t, pc);
        BigInt const p     = m(t, t);
        bool         clean = true;
        for (std::size_t i = t + 1; i < m.rows(); ++i) {
          if (m(i, t) != 0) {
            m.add_row_multiple(i, t, -BigInt(m(i, t) / p));
            clean = clean && m(i, t) == 0;
          }
        }
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          if (m(t, j) != 0) {
            m.add_col_multiple(j, t, -BigInt(m(t, j) / p));
            clean = clean && m(t, j) == 0;
          }
        }
        if (!clean) {
          continue;
        }
        // The pivot must divide the rest; otherwise fold the offending row
        // into row t, which leaves a smaller remainder on the next pass.
        bool divides = true;
        for (std::size_t i = t + 1; i < m.rows() && divides; ++i) {
          for (std::size_t j = t + 1; j < m.cols(); ++j) {
            if (m(i, j) % p != 0) {
              m.add_row_multiple(t, i, 1);
              divides = false;
              break;
            }
          }
        }
        if (divides) {
          return true;
        }
      }
    }
  }  // namespace detail

  /// Diagonal of the Smith normal form of m: min(rows, cols) nonnegative
  /// entries d_1 | d_2 | ... with zeros last.  Pivots are chosen as the
  /// smallest nonzero absolute value, ties broken by lowest (row, col), so the
  /// reduction sequence is deterministic.
  inline std::vector<BigInt> smith_normal_form(IntMatrix m) {
    std::size_t const n = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!detail::smith_step(m, t)) {
        break;
      }
    }
    std::vector<BigInt> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
      diag[i] = detail::abs(m(i, i));
    }
    return diag;
  }

}  // namespace qlab
