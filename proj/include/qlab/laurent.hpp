#pragma once

// Exact arithmetic in Z[t, t^-1] and square matrices over it.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qlab/errors.hpp"

namespace qlab {

  using BigInt = boost::multiprecision::cpp_int;

  /// Element of Z[t^{+-1}] stored as a sparse exponent -> coefficient map.
  /// Zero coefficients are never stored, so structural equality is ring
  /// equality.
  class LaurentPoly {
   public:
    using exponent_type = std::int64_t;
    using map_type      = std::map<exponent_type, BigInt>;

    LaurentPoly() = default;

    // NOLINTNEXTLINE(google-explicit-constructor)
    LaurentPoly(long long c) {
      if (c != 0) {
        coeffs_.emplace(0, BigInt(c));
      }
    }

    // NOLINTNEXTLINE(google-explicit-constructor)
    LaurentPoly(BigInt const& c) {
      if (c != 0) {
        coeffs_.emplace(0, c);
      }
    }

    static LaurentPoly monomial(BigInt const& c, exponent_type e) {
      LaurentPoly p;
      if (c != 0) {
        p.coeffs_.emplace(e, c);
      }
      return p;
    }

    /// t^e
    static LaurentPoly t(exponent_type e = 1) {
      return monomial(1, e);
    }

    [[nodiscard]] bool is_zero() const noexcept {
      return coeffs_.empty();
    }

    [[nodiscard]] map_type const& coefficients() const noexcept {
      return coeffs_;
    }

    [[nodiscard]] std::size_t number_of_terms() const noexcept {
      return coeffs_.size();
    }

    [[nodiscard]] BigInt coefficient(exponent_type e) const {
      auto it = coeffs_.find(e);
      return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    [[nodiscard]] std::optional<exponent_type> min_degree() const {
      if (coeffs_.empty()) {
        return std::nullopt;
      }
      return coeffs_.begin()->first;
    }

    [[nodiscard]] std::optional<exponent_type> max_degree() const {
      if (coeffs_.empty()) {
        return std::nullopt;
      }
      return coeffs_.rbegin()->first;
    }

    [[nodiscard]] bool is_monomial() const noexcept {
      return coeffs_.size() == 1;
    }

    /// The units of Z[t^{+-1}] are exactly +-t^m.
    [[nodiscard]] bool is_unit() const {
      return is_monomial()
             && (coeffs_.begin()->second == 1 || coeffs_.begin()->second == -1);
    }

    /// Inverse of a unit +-t^m.
    [[nodiscard]] LaurentPoly unit_inverse() const {
      if (!is_unit()) {
        throw Error("Laurent polynomial " + to_string() + " is not a unit");
      }
      auto const& [e, c] = *coeffs_.begin();
      return monomial(c, -e);
    }

    LaurentPoly operator-() const {
      LaurentPoly r = *this;
      for (auto& kv : r.coeffs_) {
        kv.second = -kv.second;
      }
      return r;
    }

    LaurentPoly& operator+=(LaurentPoly const& q) {
      for (auto const& [e, c] : q.coeffs_) {
        add_term(e, c);
      }
      return *this;
    }

    LaurentPoly& operator-=(LaurentPoly const& q) {
      for (auto const& [e, c] : q.coeffs_) {
        add_term(e, -c);
      }
      return *this;
    }

    friend LaurentPoly operator+(LaurentPoly p, LaurentPoly const& q) {
      p += q;
      return p;
    }

    friend LaurentPoly operator-(LaurentPoly p, LaurentPoly const& q) {
      p -= q;
      return p;
    }

    friend LaurentPoly operator*(LaurentPoly const& p, LaurentPoly const& q) {
      LaurentPoly r;
      for (auto const& [e1, c1] : p.coeffs_) {
        for (auto const& [e2, c2] : q.coeffs_) {
          r.add_term(e1 + e2, c1 * c2);
        }
      }
      return r;
    }

    LaurentPoly& operator*=(LaurentPoly const& q) {
      *this = *this * q;
      return *this;
    }

    friend bool operator==(LaurentPoly const& p, LaurentPoly const& q) {
      return p.coeffs_ == q.coeffs_;
    }

    /// Multiplies by t^e.
    [[nodiscard]] LaurentPoly shifted(exponent_type e) const {
      LaurentPoly r;
      for (auto const& [d, c] : coeffs_) {
        r.coeffs_.emplace_hint(r.coeffs_.end(), d + e, c);
      }
      return r;
    }

    /// Value at an integer point t = v != 0, as a rational number
    /// numerator / denominator with denominator a power of |v|.
    [[nodiscard]] std::pair<BigInt, BigInt> evaluate(BigInt const& v) const {
      if (v == 0) {
        throw Error("cannot evaluate a Laurent polynomial at t = 0");
      }
      if (coeffs_.empty()) {
        return {0, 1};
      }
      exponent_type lo    = std::min<exponent_type>(0, *min_degree());
      BigInt        num   = 0;
      BigInt        denom = pow_big(v, static_cast<unsigned>(-lo));
      for (auto const& [e, c] : coeffs_) {
        num += c * pow_big(v, static_cast<unsigned>(e - lo));
      }
      return {num, denom};
    }

    /// Renders as e.g. "t^2 + 1", "-3t^-1", "-t + 2".  Exponent 1 is written
    /// as a bare "t"; terms appear in decreasing exponent order.
    [[nodiscard]] std::string to_string() const {
      if (coeffs_.empty()) {
        return "0";
      }
      std::ostringstream os;
      bool               first = true;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        auto const& [e, c] = *it;
        BigInt      mag    = c < 0 ? BigInt(-c) : c;
        if (first) {
          if (c < 0) {
            os << '-';
          }
        } else {
          os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
          os << mag;
          continue;
        }
        if (mag != 1) {
          os << mag;
        }
        os << 't';
        if (e != 1) {
          os << '^' << e;
        }
      }
      return os.str();
    }

   private:
    void add_term(exponent_type e, BigInt const& c) {
      if (c == 0) {
        return;
      }
      auto [it, inserted] = coeffs_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          coeffs_.erase(it);
        }
      }
    }

    static BigInt pow_big(BigInt const& b, unsigned e) {
      BigInt r = 1;
      for (unsigned i = 0; i < e; ++i) {
        r *= b;
      }
      return r;
    }

    map_type coeffs_;
  };

  inline std::ostream& operator<<(std::ostream& os, LaurentPoly const& p) {
    return os << p.to_string();
  }

  /// Parses the textual form produced by LaurentPoly::to_string (whitespace
  /// is insignificant; "t^1" and "1t" are also accepted).
  inline LaurentPoly parse_laurent(std::string_view s) {
    std::size_t pos  = 0;
    auto        skip = [&] {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
    };
    auto read_int = [&](bool allow_sign) -> std::optional<std::int64_t> {
      skip();
      std::size_t start = pos;
      bool        neg   = false;
      if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
      }
      std::size_t digits = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
      if (digits == pos) {
        pos = start;
        return std::nullopt;
      }
      auto v = std::stoll(std::string(s.substr(digits, pos - digits)));
      return neg ? -v : v;
    };

    LaurentPoly result;
    skip();
    if (pos == s.size()) {
      throw ParseError("empty polynomial", pos);
    }
    bool first = true;
    while (true) {
      skip();
      if (pos == s.size()) {
        break;
      }
      BigInt sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos);
      }
      first = false;
      skip();
      std::size_t          term_start = pos;
      std::optional<BigInt> coeff;
      if (auto c = read_int(false)) {
        coeff = BigInt(*c);
      }
      skip();
      LaurentPoly::exponent_type e = 0;
      if (pos < s.size() && s[pos] == 't') {
        ++pos;
        e = 1;
        skip();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          auto v = read_int(true);
          if (!v) {
            throw ParseError("expected exponent after '^'", pos);
          }
          e = *v;
        }
      } else if (!coeff) {
        throw ParseError("expected coefficient or 't'", term_start);
      }
      result += LaurentPoly::monomial(sign * coeff.value_or(1), e);
    }
    return result;
  }

  /// Square matrix over Z[t^{+-1}].
  class LaurentMatrix {
   public:
    LaurentMatrix() = default;

    explicit LaurentMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows)
        : n_(rows.size()) {
      entries_.reserve(n_ * n_);
      for (auto const& row : rows) {
        if (row.size() != n_) {
          throw DimensionError("LaurentMatrix rows must all have length "
                               + std::to_string(n_));
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
      }
    }

    static LaurentMatrix identity(std::size_t n) {
      LaurentMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    [[nodiscard]] std::size_t dimension() const noexcept {
      return n_;
    }

    LaurentPoly& operator()(std::size_t i, std::size_t j) {
      return entries_[i * n_ + j];
    }

    LaurentPoly const& operator()(std::size_t i, std::size_t j) const {
      return entries_[i * n_ + j];
    }

    friend LaurentMatrix operator*(LaurentMatrix const& a, LaurentMatrix const& b) {
      if (a.n_ != b.n_) {
        throw DimensionError("cannot multiply " + std::to_string(a.n_) + "x"
                             + std::to_string(a.n_) + " by " + std::to_string(b.n_)
                             + "x" + std::to_string(b.n_));
      }
      LaurentMatrix r(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) {
        for (std::size_t k = 0; k < a.n_; ++k) {
          auto const& aik = a(i, k);
          if (aik.is_zero()) {
            continue;
          }
          for (std::size_t j = 0; j < a.n_; ++j) {
            if (!b(k, j).is_zero()) {
              r(i, j) += aik * b(k, j);
            }
          }
        }
      }
      return r;
    }

    friend bool operator==(LaurentMatrix const& a, LaurentMatrix const& b) {
      return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    /// A^i by repeated squaring; A^0 = I.
    [[nodiscard]] LaurentMatrix pow(std::uint64_t i) const {
      LaurentMatrix result = identity(n_);
      LaurentMatrix base   = *this;
      while (i > 0) {
        if (i & 1U) {
          result = result * base;
        }
        i >>= 1U;
        if (i > 0) {
          base = base * base;
        }
      }
      return result;
    }

    [[nodiscard]] LaurentPoly determinant() const {
      std::vector<std::size_t> cols(n_);
      for (std::size_t j = 0; j < n_; ++j) {
        cols[j] = j;
      }
      return minor_det(0, cols);
    }

    /// Inverse over Z[t^{+-1}]; exists exactly when the determinant is a unit.
    [[nodiscard]] LaurentMatrix inverse() const {
      LaurentPoly d = determinant();
      if (!d.is_unit()) {
        throw Error("matrix is not invertible over Z[t^{+-1}]: det = " + d.to_string());
      }
      LaurentPoly   dinv = d.unit_inverse();
      LaurentMatrix r(n_);
      if (n_ == 1) {
        r(0, 0) = dinv;
        return r;
      }
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          // adj(A)(j, i) = (-1)^{i+j} det(A without row i, col j)
          LaurentMatrix m(n_ - 1);
          for (std::size_t a = 0, ra = 0; a < n_; ++a) {
            if (a == i) {
              continue;
            }
            for (std::size_t b = 0, cb = 0; b < n_; ++b) {
              if (b == j) {
                continue;
              }
              m(ra, cb++) = (*this)(a, b);
            }
            ++ra;
          }
          LaurentPoly c = m.determinant() * dinv;
          r(j, i)       = ((i + j) % 2 == 0) ? c : -c;
        }
      }
      return r;
    }

    /// Rows of bracketed comma-separated entries, one row per line.
    [[nodiscard]] std::string to_string() const {
      std::string out;
      for (std::size_t i = 0; i < n_; ++i) {
        out += row_string(i);
        if (i + 1 < n_) {
          out += '\n';
        }
      }
      return out;
    }

    [[nodiscard]] std::string row_string(std::size_t i) const {
      std::string out = "[";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j > 0) {
          out += ", ";
        }
        out += (*this)(i, j).to_string();
      }
      return out + "]";
    }

   private:
    LaurentPoly minor_det(std::size_t row, std::vector<std::size_t> const& cols) const {
      if (cols.empty()) {
        return 1;
      }
      LaurentPoly acc;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        auto const& entry = (*this)(row, cols[k]);
        if (entry.is_zero()) {
          continue;
        }
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t l = 0; l < cols.size(); ++l) {
          if (l != k) {
            rest.push_back(cols[l]);
          }
        }
        LaurentPoly term = entry * minor_det(row + 1, rest);
        if (k % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      return acc;
    }

    std::size_t              n_ = 0;
    std::vector<LaurentPoly> entries_;
  };

  inline std::ostream& operator<<(std::ostream& os, LaurentMatrix const& m) {
    return os << m.to_string();
  }

}  // namespace qlab
