#pragma once

// The Tong-Yang-Ma representation of B3 over Z[t, t^-1] and certificates
// that phi(y)^i and phi(x) never commute for the ribbon-knot generators.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qlab/braid.hpp"
#include "qlab/laurent.hpp"

namespace qlab {

  inline LaurentMatrix const& tym_sigma() {
    static LaurentMatrix const m{{0, 1, 0}, {LaurentPoly::t(), 0, 0}, {0, 0, 1}};
    return m;
  }

  inline LaurentMatrix const& tym_tau() {
    static LaurentMatrix const m{{1, 0, 0}, {0, 0, 1}, {0, LaurentPoly::t(), 0}};
    return m;
  }

  /// Which matrix each braid generator is sent to.  `as_displayed` sends sig
  /// to tym_sigma(); `swapped` composes with the automorphism sig <-> tau of
  /// B3.  Both are representations.
  enum class Labeling { as_displayed, swapped };

  inline char const* to_string(Labeling l) {
    return l == Labeling::as_displayed ? "as_displayed" : "swapped";
  }

  inline LaurentMatrix tym_generator(Letter l, Labeling lab = Labeling::as_displayed) {
    static LaurentMatrix const s_inv = tym_sigma().inverse();
    static LaurentMatrix const t_inv = tym_tau().inverse();
    bool is_sig = l.gen == sig;
    if (l.gen != sig && l.gen != tau) {
      throw Error("braid words use only sig and tau");
    }
    if (lab == Labeling::swapped) {
      is_sig = !is_sig;
    }
    if (is_sig) {
      return l.inv ? s_inv : tym_sigma();
    }
    return l.inv ? t_inv : tym_tau();
  }

  inline LaurentMatrix tym_eval(Word const& w, Labeling lab = Labeling::as_displayed) {
    LaurentMatrix m = LaurentMatrix::identity(3);
    for (Letter l : w) {
      m = m * tym_generator(l, lab);
    }
    return m;
  }

  /// The matrices X0, Y0, U and the case-(a) X, Y exactly as printed.
  struct DisplayedMatrices {
    LaurentMatrix x0;
    LaurentMatrix y0;
    LaurentMatrix u;
    LaurentMatrix case_a_x;
    LaurentMatrix case_a_y;
  };

  inline DisplayedMatrices const& displayed_matrices() {
    auto const                     t = LaurentPoly::t();
    static DisplayedMatrices const d{
        {{0, 1, 0}, {1, 0, 0}, {0, 0, t}},
        {{1, 0, 0}, {0, 0, 1}, {0, t, 0}},
        {{0, 0, LaurentPoly::t(-1)}, {1, 0, 0}, {0, t, 0}},
        {{1, 0, 0}, {0, 0, LaurentPoly::t(-1)}, {0, LaurentPoly::t(2), 0}},
        {{0, 1, 0}, {t, 0, 0}, {0, 0, 1}},
    };
    return d;
  }

  /// X = phi(x_img(k)), Y = phi(y_img(k)).
  inline std::pair<LaurentMatrix, LaurentMatrix> xy_for_k(long long k,
                                                          Labeling  lab = Labeling::as_displayed) {
    SuciuImages img = suciu_images(k);
    return {tym_eval(img.x, lab), tym_eval(img.y, lab)};
  }

  /// Which printed case (X0 U, Y0 U^2), (X0 U^2, Y0), (X0, Y0 U) the pair
  /// for k equals, if any.
  inline std::optional<char> displayed_case(long long k, Labeling lab) {
    auto const& d      = displayed_matrices();
    auto [x, y]        = xy_for_k(k, lab);
    LaurentMatrix u2   = d.u * d.u;
    if (x == d.x0 * d.u && y == d.y0 * u2) {
      return 'a';
    }
    if (x == d.x0 * u2 && y == d.y0) {
      return 'b';
    }
    if (x == d.x0 && y == d.y0 * d.u) {
      return 'c';
    }
    return std::nullopt;
  }

  // ---------------------------------------------------------------------------
  // Symbolic templates.  A template entry is a polynomial in s and t where s
  // stands for t^j; Y^(m j + r) = D^j Y^r once Y^m = D is diagonal with
  // monic monomial entries t^e, since then D^j = diag(s^e).

  class BiPoly {
   public:
    using key_type = std::pair<std::int64_t, std::int64_t>;  // (s-degree, t-degree)

    BiPoly() = default;

    static BiPoly from(LaurentPoly const& p) {
      BiPoly b;
      for (auto const& [e, c] : p.coefficients()) {
        b.terms_[{0, e}] = c;
      }
      return b;
    }

    static BiPoly s_power(std::int64_t a) {
      BiPoly b;
      b.terms_[{a, 0}] = 1;
      return b;
    }

    [[nodiscard]] bool is_zero() const {
      return terms_.empty();
    }

    [[nodiscard]] std::map<key_type, BigInt> const& terms() const {
      return terms_;
    }

    friend BiPoly operator*(BiPoly const& p, BiPoly const& q) {
      BiPoly r;
      for (auto const& [a, c] : p.terms_) {
        for (auto const& [b, d] : q.terms_) {
          r.add({a.first + b.first, a.second + b.second}, c * d);
        }
      }
      return r;
    }

    friend BiPoly operator+(BiPoly p, BiPoly const& q) {
      for (auto const& [a, c] : q.terms_) {
        p.add(a, c);
      }
      return p;
    }

    friend bool operator==(BiPoly const&, BiPoly const&) = default;

    /// s -> s * t
    [[nodiscard]] BiPoly step() const {
      BiPoly r;
      for (auto const& [a, c] : terms_) {
        r.add({a.first, a.second + a.first}, c);
      }
      return r;
    }

    /// Value at s = t^j.
    [[nodiscard]] LaurentPoly at(std::int64_t j) const {
      LaurentPoly r;
      for (auto const& [a, c] : terms_) {
        r += LaurentPoly::monomial(c, a.first * j + a.second);
      }
      return r;
    }

    [[nodiscard]] std::string to_string() const {
      if (terms_.empty()) {
        return "0";
      }
      std::string out;
      for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [a, b] = it->first;
        std::string m;
        if (a != 0) {
          std::string e = a == 1 ? "j" : a == -1 ? "-j" : std::to_string(a) + "j";
          if (b != 0) {
            e += (b > 0 ? "+" : "") + std::to_string(b);
          }
          m = e == "j" ? "t^j" : "t^(" + e + ")";
        } else if (b != 0) {
          m = b == 1 ? "t" : "t^" + std::to_string(b);
        }
        std::string c = it->second.str();
        if (m.empty()) {
          m = c;
        } else if (c == "-1") {
          m = "-" + m;
        } else if (c != "1") {
          m = c + m;
        }
        out += (out.empty() ? "" : " + ") + m;
      }
      return out;
    }

   private:
    void add(key_type k, BigInt const& c) {
      BigInt& v = terms_[k];
      v += c;
      if (v == 0) {
        terms_.erase(k);
      }
    }

    std::map<key_type, BigInt> terms_;
  };

  using BiMatrix = std::vector<std::vector<BiPoly>>;

  inline BiMatrix to_bi(LaurentMatrix const& m) {
    BiMatrix r(m.dimension(), std::vector<BiPoly>(m.dimension()));
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      for (std::size_t j = 0; j < m.dimension(); ++j) {
        r[i][j] = BiPoly::from(m(i, j));
      }
    }
    return r;
  }

  inline BiMatrix operator*(BiMatrix const& a, BiMatrix const& b) {
    std::size_t n = a.size();
    BiMatrix    r(n, std::vector<BiPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i][k].is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
      }
    }
    return r;
  }

  inline BiMatrix step(BiMatrix m) {
    for (auto& row : m) {
      for (auto& e : row) {
        e = e.step();
      }
    }
    return m;
  }

  // ---------------------------------------------------------------------------

  struct Witness {
    long long   i   = 0;
    std::size_t row = 0;  // 1-based
    std::size_t col = 0;  // 1-based
    LaurentPoly lhs;      // (Y^i X)(row, col)
    LaurentPoly rhs;      // (X Y^i)(row, col)
  };

  /// Closed forms Y^(m j + r) X and X Y^(m j + r) with s = t^j.
  struct PowerTemplate {
    long long r = 0;
    BiMatrix  y_power;
    BiMatrix  left;   // Y^i X
    BiMatrix  right;  // X Y^i
    /// j >= 0 at which left and right could coincide; each was checked
    /// directly.
    std::vector<long long> critical_j;
  };

  struct NoncommutationCertificate {
    long long                  k     = 0;  // 0 when X, Y were supplied directly
    long long                  i_max = 0;
    std::vector<Witness>       witnesses;
    bool                       all_witnessed        = false;
    bool                       closed_form_verified = false;
    long long                  period               = 0;  // m with Y^m diagonal
    std::vector<PowerTemplate> templates;
    std::string                note;
  };

  namespace detail {

    inline bool is_monic_diagonal(LaurentMatrix const& m) {
      for (std::size_t i = 0; i < m.dimension(); ++i) {
        for (std::size_t j = 0; j < m.dimension(); ++j) {
          auto const& e = m(i, j);
          if (i != j && !e.is_zero()) {
            return false;
          }
          if (i == j && !(e.is_monomial() && e.coefficients().begin()->second == 1)) {
            return false;
          }
        }
      }
      return true;
    }

    inline std::optional<Witness> first_difference(long long            i,
                                                   LaurentMatrix const& l,
                                                   LaurentMatrix const& r) {
      for (std::size_t a = 0; a < l.dimension(); ++a) {
        for (std::size_t b = 0; b < l.dimension(); ++b) {
          if (!(l(a, b) == r(a, b))) {
            return Witness{i, a + 1, b + 1, l(a, b), r(a, b)};
          }
        }
      }
      return std::nullopt;
    }

    // j >= 0 where two template entries may agree; nullopt means "all j".
    // Entries must be zero or single monomials c s^a t^b.
    inline std::optional<std::vector<long long>> agreement(BiPoly const& p, BiPoly const& q,
                                                           bool& monomial) {
      if (p == q) {
        return std::nullopt;
      }
      if (p.terms().size() > 1 || q.terms().size() > 1) {
        monomial = false;
        return std::vector<long long>{};
      }
      if (p.is_zero() || q.is_zero()) {
        return std::vector<long long>{};
      }
      auto [kp, cp] = *p.terms().begin();
      auto [kq, cq] = *q.terms().begin();
      if (cp != cq || kp.first == kq.first) {
        return std::vector<long long>{};
      }
      std::int64_t num = kq.second - kp.second;
      std::int64_t den = kp.first - kq.first;
      if (num % den != 0 || num / den < 0) {
        return std::vector<long long>{};
      }
      return std::vector<long long>{num / den};
    }

  }  // namespace detail

  /// Certifies Y^i X != X Y^i for i = 1..i_max with one entry witness each,
  /// then tries to extend to every i >= 1 by templates:
  ///   find m with Y^m = D diagonal monic-monomial;
  ///   T_r(s) = diag(s^e) Y^r satisfies T_r(1) = Y^r and Y^m T_r(s) = T_r(st),
  ///   so Y^(mj+r) = T_r(t^j) for all j >= 0;
  ///   compare T_r X with X T_r entrywise, listing the finitely many j where
  ///   they could agree and checking those directly.
  inline NoncommutationCertificate check_noncommutation(LaurentMatrix const& x,
                                                        LaurentMatrix const& y,
                                                        long long            i_max,
                                                        long long            max_period = 24) {
    if (i_max < 1) {
      throw Error("i_max must be at least 1");
    }
    NoncommutationCertificate cert;
    cert.i_max         = i_max;
    cert.all_witnessed = true;
    LaurentMatrix yi   = LaurentMatrix::identity(x.dimension());
    for (long long i = 1; i <= i_max; ++i) {
      yi     = yi * y;
      auto w = detail::first_difference(i, yi * x, x * yi);
      if (w) {
        cert.witnesses.push_back(*w);
      } else {
        cert.all_witnessed = false;
      }
    }

    LaurentMatrix ym = y;
    long long     m  = 1;
    while (m <= max_period && !detail::is_monic_diagonal(ym)) {
      ym = ym * y;
      ++m;
    }
    if (m > max_period) {
      cert.note = "no power Y^m with m <= " + std::to_string(max_period)
                  + " is a diagonal matrix of monic monomials";
      return cert;
    }
    cert.period = m;

    std::size_t const n = x.dimension();
    BiMatrix          d(n, std::vector<BiPoly>(n));
    for (std::size_t a = 0; a < n; ++a) {
      d[a][a] = BiPoly::s_power(*ym(a, a).min_degree());
    }
    BiMatrix const bx  = to_bi(x);
    BiMatrix const bym = to_bi(ym);
    bool           ok  = true;
    LaurentMatrix  yr  = LaurentMatrix::identity(n);
    for (long long r = 0; r < m; ++r, yr = yr * y) {
      PowerTemplate pt;
      pt.r       = r;
      pt.y_power = d * to_bi(yr);
      // base case and induction step
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          ok = pt.y_power[a][b].at(0) == yr(a, b);
        }
      }
      ok = ok && bym * pt.y_power == step(pt.y_power);
      pt.left  = pt.y_power * bx;
      pt.right = bx * pt.y_power;

      // j where all entries agree simultaneously
      bool                                  monomial = true;
      std::optional<std::vector<long long>> common;  // nullopt = all j
      bool                                  never    = false;
      for (std::size_t a = 0; a < n && !never; ++a) {
        for (std::size_t b = 0; b < n && !never; ++b) {
          auto agree = detail::agreement(pt.left[a][b], pt.right[a][b], monomial);
          if (!agree) {
            continue;
          }
          if (!common) {
            common = agree;
          } else {
            std::vector<long long> keep;
            for (long long j : *common) {
              if (std::find(agree->begin(), agree->end(), j) != agree->end()) {
                keep.push_back(j);
              }
            }
            common = keep;
          }
          never = common->empty();
        }
      }
      if (!monomial) {
        ok        = false;
        cert.note = "template entries are not monomials";
      } else if (!common) {
        ok        = false;
        cert.note = "Y^" + std::to_string(r) + " (mod period) commutes with X identically";
      } else {
        for (long long j : *common) {
          long long i = m * j + r;
          if (i < 1) {
            continue;  // Y^0 commutes with X trivially
          }
          pt.critical_j.push_back(j);
          LaurentMatrix p = y.pow(static_cast<std::uint64_t>(i));
          if (!detail::first_difference(i, p * x, x * p)) {
            ok        = false;
            cert.note = "Y^" + std::to_string(i) + " commutes with X";
          }
        }
      }
      cert.templates.push_back(std::move(pt));
    }
    cert.closed_form_verified = ok;
    return cert;
  }

  inline NoncommutationCertificate check_noncommutation(long long k,
                                                        long long i_max,
                                                        Labeling  lab = Labeling::as_displayed) {
    auto [x, y] = xy_for_k(k, lab);
    auto cert   = check_noncommutation(x, y, i_max);
    cert.k      = k;
    return cert;
  }

  inline nlohmann::json to_json(NoncommutationCertificate const& c) {
    nlohmann::json w = nlohmann::json::array();
    for (auto const& x : c.witnesses) {
      w.push_back({{"i", x.i},
                   {"entry", {x.row, x.col}},
                   {"lhs", x.lhs.to_string()},
                   {"rhs", x.rhs.to_string()}});
    }
    nlohmann::json t = nlohmann::json::array();
    for (auto const& pt : c.templates) {
      auto mat = [](BiMatrix const& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (auto const& row : m) {
          nlohmann::json r = nlohmann::json::array();
          for (auto const& e : row) {
            r.push_back(e.to_string());
          }
          rows.push_back(r);
        }
        return rows;
      };
      t.push_back({{"residue", pt.r},
                   {"y_power", mat(pt.y_power)},
                   {"y_power_times_x", mat(pt.left)},
                   {"x_times_y_power", mat(pt.right)},
                   {"critical_j", pt.critical_j}});
    }
    nlohmann::json j{{"k", c.k},
                     {"i_max", c.i_max},
                     {"witnesses", w},
                     {"closed_form_verified", c.closed_form_verified},
                     {"period", c.period},
                     {"templates", t}};
    if (!c.note.empty()) {
      j["note"] = c.note;
    }
    return j;
  }

  struct TypeCertificate {
    long long                 k = 0;
    Labeling                  labeling = Labeling::as_displayed;
    NoncommutationCertificate noncommutation;
    std::optional<char>       displayed_case_as_displayed;
    std::optional<char>       displayed_case_swapped;

    /// type = infinity is certified when every i >= 1 is covered.
    [[nodiscard]] bool infinite() const {
      return noncommutation.all_witnessed && noncommutation.closed_form_verified;
    }
  };

  /// If x0 *^i y0 = x0 then y^-i x y^i = x in G_k, hence Y^i X = X Y^i under
  /// any representation.  A noncommutation certificate valid for all i >= 1
  /// therefore certifies type = infinity.
  inline TypeCertificate type_certificate(long long k,
                                          long long i_max = 200,
                                          Labeling  lab   = Labeling::as_displayed) {
    TypeCertificate c;
    c.k                           = k;
    c.labeling                    = lab;
    c.noncommutation              = check_noncommutation(k, i_max, lab);
    c.displayed_case_as_displayed = displayed_case(k, Labeling::as_displayed);
    c.displayed_case_swapped      = displayed_case(k, Labeling::swapped);
    return c;
  }

  inline nlohmann::json to_json(TypeCertificate const& c) {
    auto cs = [](std::optional<char> o) {
      return o ? nlohmann::json(std::string(1, *o)) : nlohmann::json(nullptr);
    };
    nlohmann::json j = to_json(c.noncommutation);
    j["labeling"]     = to_string(c.labeling);
    j["type"]         = c.infinite() ? "infinity" : "not certified";
    j["argument"]     = "x0 *^i y0 = x0 would give y^-i x y^i = x in G_k, so Y^i X = X Y^i";
    j["displayed_case"] = {{"as_displayed", cs(c.displayed_case_as_displayed)},
                           {"swapped", cs(c.displayed_case_swapped)}};
    return j;
  }

}  // namespace qlab
