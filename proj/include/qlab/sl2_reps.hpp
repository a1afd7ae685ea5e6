#pragma once

// Counting conjugacy classes of nonabelian SL(2,C) representations of
// two-generator presentations by multistart Newton.
//
// Irreducible stratum, gauge A = [[al, 1], [0, 1/al]], B = [[be, 0], [ga, 1/be]].
// Reducible nonabelian stratum, two upper-triangular ansatzes:
//   (1) A = [[al, 1], [0, 1/al]], B = diag(be, 1/be)
//   (2) A = diag(al, 1/al),       B = [[be, 1], [0, 1/be]]
// which together meet every reducible nonabelian class.  Irreducible classes
// are identified by (tr A, tr B, tr AB); reducible ones by the characters
// (al, be) on the invariant line.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "qlab/errors.hpp"
#include "qlab/laurent.hpp"
#include "qlab/presentation.hpp"

namespace qlab {

  using cplx = std::complex<double>;

  // ---------------------------------------------------------------------------
  // Symbolic relator equations.

  /// Polynomial in al, be, ga with integer coefficients and integer (possibly
  /// negative) exponents.
  class MPoly {
   public:
    using exponent = std::array<std::int64_t, 3>;

    MPoly() = default;

    MPoly(long long c) {
      if (c != 0) {
        terms_[{0, 0, 0}] = c;
      }
    }

    static MPoly var(std::size_t i, std::int64_t e = 1) {
      MPoly    p;
      exponent x{0, 0, 0};
      x[i]        = e;
      p.terms_[x] = 1;
      return p;
    }

    [[nodiscard]] bool is_zero() const {
      return terms_.empty();
    }

    [[nodiscard]] std::map<exponent, BigInt> const& terms() const {
      return terms_;
    }

    friend MPoly operator+(MPoly p, MPoly const& q) {
      for (auto const& [e, c] : q.terms_) {
        p.add(e, c);
      }
      return p;
    }

    friend MPoly operator-(MPoly p, MPoly const& q) {
      for (auto const& [e, c] : q.terms_) {
        p.add(e, -c);
      }
      return p;
    }

    friend MPoly operator*(MPoly const& p, MPoly const& q) {
      MPoly r;
      for (auto const& [a, c] : p.terms_) {
        for (auto const& [b, d] : q.terms_) {
          r.add({a[0] + b[0], a[1] + b[1], a[2] + b[2]}, c * d);
        }
      }
      return r;
    }

    friend bool operator==(MPoly const&, MPoly const&) = default;

    /// Multiplies by al^-min and be^-min so no negative exponents remain.
    [[nodiscard]] MPoly cleared() const {
      if (terms_.empty()) {
        return *this;
      }
      std::int64_t ma = 0, mb = 0;
      for (auto const& [e, c] : terms_) {
        ma = std::min(ma, e[0]);
        mb = std::min(mb, e[1]);
      }
      return *this * var(0, -ma) * var(1, -mb);
    }

    [[nodiscard]] cplx evaluate(cplx al, cplx be, cplx ga) const {
      cplx s = 0;
      for (auto const& [e, c] : terms_) {
        s += c.convert_to<double>() * std::pow(al, static_cast<double>(e[0]))
             * std::pow(be, static_cast<double>(e[1])) * std::pow(ga, static_cast<double>(e[2]));
      }
      return s;
    }

    /// e.g. "al^2*be - ga + 1", highest exponents first.
    [[nodiscard]] std::string to_string() const {
      if (terms_.empty()) {
        return "0";
      }
      static char const* names[] = {"al", "be", "ga"};
      std::string        out;
      for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono;
        for (std::size_t i = 0; i < 3; ++i) {
          if (it->first[i] == 0) {
            continue;
          }
          mono += (mono.empty() ? "" : "*") + std::string(names[i]);
          if (it->first[i] != 1) {
            mono += "^" + std::to_string(it->first[i]);
          }
        }
        BigInt c   = it->second;
        bool   neg = c < 0;
        if (neg) {
          c = -c;
        }
        std::string body = mono.empty() ? c.str() : (c == 1 ? mono : c.str() + "*" + mono);
        if (out.empty()) {
          out = (neg ? "-" : "") + body;
        } else {
          out += (neg ? " - " : " + ") + body;
        }
      }
      return out;
    }

   private:
    void add(exponent const& e, BigInt const& c) {
      BigInt& v = terms_[e];
      v += c;
      if (v == 0) {
        terms_.erase(e);
      }
    }

    std::map<exponent, BigInt> terms_;
  };

  struct PolynomialSystem {
    /// Four equations per relator (entries of M(R) - I, row-major), each
    /// with denominators cleared.  Identically zero entries are dropped.
    std::vector<MPoly> equations;
  };

  namespace detail {
    using MMat = std::array<MPoly, 4>;

    inline MMat mmul(MMat const& x, MMat const& y) {
      return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
              x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    }

    inline void require_two_generators(Presentation const& p) {
      if (p.alphabet.size() != 2) {
        throw DimensionError("SL(2,C) counting needs exactly 2 generators, got "
                             + std::to_string(p.alphabet.size()));
      }
    }
  }  // namespace detail

  /// Relator identities M(R) = I for the irreducible gauge, expanded to
  /// polynomial equations in al, be, ga.
  inline PolynomialSystem relator_equations(Presentation const& p) {
    detail::require_two_generators(p);
    MPoly const al = MPoly::var(0), be = MPoly::var(1), ga = MPoly::var(2);
    MPoly const ali = MPoly::var(0, -1), bei = MPoly::var(1, -1);
    std::array<detail::MMat, 4> const gens{
        detail::MMat{al, 1, 0, ali},            // A
        detail::MMat{ali, -1, 0, al},           // A^-1
        detail::MMat{be, 0, ga, bei},           // B
        detail::MMat{bei, 0, MPoly(0) - ga, be} // B^-1
    };
    PolynomialSystem sys;
    for (auto const& r : p.relators) {
      detail::MMat m{1, 0, 0, 1};
      for (Letter l : r) {
        m = detail::mmul(m, gens[2 * l.gen + (l.inv ? 1 : 0)]);
      }
      m[0] = m[0] - 1;
      m[3] = m[3] - 1;
      for (auto const& e : m) {
        if (!e.is_zero()) {
          sys.equations.push_back(e.cleared());
        }
      }
    }
    return sys;
  }

  // ---------------------------------------------------------------------------
  // Numerics.

  namespace detail {

    // Complex value with partial derivatives in up to three parameters.
    struct Dual {
      cplx                v;
      std::array<cplx, 3> d{};

      Dual(cplx value = 0) : v(value) {}

      static Dual variable(cplx value, std::size_t i) {
        Dual x(value);
        x.d[i] = 1;
        return x;
      }

      friend Dual operator+(Dual a, Dual const& b) {
        a.v += b.v;
        for (std::size_t i = 0; i < 3; ++i) {
          a.d[i] += b.d[i];
        }
        return a;
      }

      friend Dual operator-(Dual a, Dual const& b) {
        a.v -= b.v;
        for (std::size_t i = 0; i < 3; ++i) {
          a.d[i] -= b.d[i];
        }
        return a;
      }

      friend Dual operator*(Dual const& a, Dual const& b) {
        Dual r(a.v * b.v);
        for (std::size_t i = 0; i < 3; ++i) {
          r.d[i] = a.d[i] * b.v + a.v * b.d[i];
        }
        return r;
      }

      [[nodiscard]] Dual reciprocal() const {
        Dual r(1.0 / v);
        cplx s = -1.0 / (v * v);
        for (std::size_t i = 0; i < 3; ++i) {
          r.d[i] = s * d[i];
        }
        return r;
      }

      [[nodiscard]] Dual neg() const {
        return Dual(0) - *this;
      }
    };

    using DMat = std::array<Dual, 4>;

    inline DMat dmul(DMat const& x, DMat const& y) {
      return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
              x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    }

    inline DMat dinv(DMat const& m) {  // determinant 1
      return {m[3], m[1].neg(), m[2].neg(), m[0]};
    }

    using CMat = std::array<cplx, 4>;

    inline CMat cmul(CMat const& x, CMat const& y) {
      return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
              x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    }

    inline cplx trace(CMat const& m) {
      return m[0] + m[3];
    }

  }  // namespace detail

  enum class Stratum { irreducible, reducible_upper_a, reducible_diagonal_a };

  inline char const* to_string(Stratum s) {
    switch (s) {
      case Stratum::irreducible: return "irreducible";
      case Stratum::reducible_upper_a: return "reducible (A unipotent-type, B diagonal)";
      case Stratum::reducible_diagonal_a: return "reducible (A diagonal, B upper)";
    }
    return "?";
  }

  inline std::size_t parameter_count(Stratum s) {
    return s == Stratum::irreducible ? 3 : 2;
  }

  /// A and B for the given stratum and parameters (al, be[, ga]).
  template <class T>
  std::pair<std::array<T, 4>, std::array<T, 4>> ansatz_matrices(Stratum s, std::vector<T> const& p,
                                                                T (*recip)(T const&)) {
    T const zero(0), one(1);
    switch (s) {
      case Stratum::irreducible:
        return {{p[0], one, zero, recip(p[0])}, {p[1], zero, p[2], recip(p[1])}};
      case Stratum::reducible_upper_a:
        return {{p[0], one, zero, recip(p[0])}, {p[1], zero, zero, recip(p[1])}};
      case Stratum::reducible_diagonal_a:
        return {{p[0], zero, zero, recip(p[0])}, {p[1], one, zero, recip(p[1])}};
    }
    throw Error("unknown stratum");
  }

  struct RepPoint {
    Stratum           stratum = Stratum::irreducible;
    std::vector<cplx> params;  // al, be[, ga]
    double            residual        = 0;
    int               local_dimension = 0;
    cplx              tr_a, tr_b, tr_ab;
  };

  struct SolverOptions {
    std::size_t   seeds          = 10'000;
    double        residual_tol   = 1e-10;
    double        dedup_radius   = 1e-6;
    double        modulus_min    = 0.2;
    double        modulus_max    = 5.0;
    std::uint64_t rng_seed       = 20240521;
    unsigned      threads        = 1;
    int           max_iterations = 80;
  };

  struct SolverDiagnostics {
    std::size_t seeds_per_stratum     = 0;
    std::size_t converged             = 0;
    std::size_t rejected_residual     = 0;
    std::size_t diverged              = 0;
    std::size_t abelian               = 0;
    std::size_t reducible_in_irr_gauge = 0;
    double      max_class_residual    = 0;
    double      min_class_separation  = 0;  // 0 when fewer than 2 classes
    double      seconds               = 0;
  };

  struct RepCountReport {
    std::optional<long long> k;
    std::vector<RepPoint>    irreducible;
    std::vector<RepPoint>    reducible;
    SolverDiagnostics        diagnostics;

    [[nodiscard]] std::size_t count() const {
      return irreducible.size() + reducible.size();
    }

    /// True if some class lies on a positive-dimensional component, in which
    /// case count() lists sample points rather than isolated classes.
    [[nodiscard]] bool positive_dimensional() const {
      auto pos = [](RepPoint const& p) { return p.local_dimension > 0; };
      return std::any_of(irreducible.begin(), irreducible.end(), pos)
             || std::any_of(reducible.begin(), reducible.end(), pos);
    }
  };

  namespace detail {

    class RelatorSystem {
     public:
      RelatorSystem(Presentation const& p, Stratum s) : stratum_(s) {
        require_two_generators(p);
        for (auto const& r : p.relators) {
          if (!r.empty()) {
            rels_.push_back(r);
          }
        }
      }

      [[nodiscard]] std::size_t unknowns() const {
        return parameter_count(stratum_);
      }

      [[nodiscard]] std::size_t equations() const {
        return 4 * rels_.size();
      }

      // Residual vector and Jacobian at p.
      void evaluate(std::vector<cplx> const& p, Eigen::VectorXcd& f, Eigen::MatrixXcd& jac) const {
        std::vector<Dual> v;
        for (std::size_t i = 0; i < p.size(); ++i) {
          v.push_back(Dual::variable(p[i], i));
        }
        auto [a, b] = ansatz_matrices<Dual>(stratum_, v, [](Dual const& x) { return x.reciprocal(); });
        std::array<DMat, 4> gens{a, dinv(a), b, dinv(b)};
        f.resize(static_cast<Eigen::Index>(equations()));
        jac.resize(static_cast<Eigen::Index>(equations()), static_cast<Eigen::Index>(unknowns()));
        Eigen::Index row = 0;
        for (auto const& r : rels_) {
          DMat m{Dual(1), Dual(0), Dual(0), Dual(1)};
          for (Letter l : r) {
            m = dmul(m, gens[2 * l.gen + (l.inv ? 1 : 0)]);
          }
          m[0] = m[0] - Dual(1);
          m[3] = m[3] - Dual(1);
          for (auto const& e : m) {
            f(row) = e.v;
            for (std::size_t j = 0; j < unknowns(); ++j) {
              jac(row, static_cast<Eigen::Index>(j)) = e.d[j];
            }
            ++row;
          }
        }
      }

      [[nodiscard]] double residual(std::vector<cplx> const& p) const {
        Eigen::VectorXcd f;
        Eigen::MatrixXcd j;
        evaluate(p, f, j);
        return f.size() == 0 ? 0.0 : f.cwiseAbs().maxCoeff();
      }

      [[nodiscard]] Stratum stratum() const {
        return stratum_;
      }

     private:
      Stratum           stratum_;
      std::vector<Word> rels_;
    };

    enum class SolveStatus { converged, diverged, residual };

    struct SolveResult {
      SolveStatus       status = SolveStatus::diverged;
      std::vector<cplx> params;
      double            residual = 0;
      int               local_dimension = 0;
    };

    inline bool sane(std::vector<cplx> const& p) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        double m = std::abs(p[i]);
        if (!std::isfinite(m) || m > 1e8 || (i < 2 && m < 1e-8)) {
          return false;
        }
      }
      return true;
    }

    // Newton on a random square subsystem C f = 0, then Gauss-Newton on the
    // full system.
    inline SolveResult solve_from(RelatorSystem const& sys,
                                  std::vector<cplx>    p,
                                  Eigen::MatrixXcd const& mix,
                                  SolverOptions const& opt) {
      SolveResult      out;
      Eigen::VectorXcd f;
      Eigen::MatrixXcd jac;
      auto const       n = static_cast<Eigen::Index>(sys.unknowns());
      Eigen::VectorXcd g, step;
      Eigen::MatrixXcd js;
      for (int it = 0; it < opt.max_iterations; ++it) {
        sys.evaluate(p, f, jac);
        double fn = f.norm();
        if (fn < 1e-14) {
          break;
        }
        g.noalias() = mix * f;
        // a root of the square subsystem that is not a root of the full one
        if (g.norm() < 1e-13 * (1 + fn) && fn > 1e-8) {
          out.status = SolveStatus::residual;
          return out;
        }
        js.noalias() = mix * jac;
        step         = js.partialPivLu().solve(-g);
        if (!step.allFinite()) {
          return out;
        }
        double len = step.norm();
        if (len > 1.0) {
          step /= len;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          p[static_cast<std::size_t>(i)] += step(i);
        }
        if (!sane(p)) {
          return out;
        }
      }
      for (int it = 0; it < 4; ++it) {
        sys.evaluate(p, f, jac);
        Eigen::VectorXcd step = jac.completeOrthogonalDecomposition().solve(-f);
        if (!step.allFinite()) {
          break;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          p[static_cast<std::size_t>(i)] += step(i);
        }
      }
      if (!sane(p)) {
        return out;
      }
      sys.evaluate(p, f, jac);
      out.params   = p;
      out.residual = f.size() == 0 ? 0.0 : f.cwiseAbs().maxCoeff();
      if (!(out.residual < opt.residual_tol)) {
        out.status = SolveStatus::residual;
        return out;
      }
      out.status = SolveStatus::converged;
      if (jac.rows() > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
        auto const& sv   = svd.singularValues();
        double      top  = sv.size() ? sv(0) : 0.0;
        int         rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i) {
          if (sv(i) > 1e-7 * std::max(1.0, top)) {
            ++rank;
          }
        }
        out.local_dimension = static_cast<int>(n) - rank;
      } else {
        out.local_dimension = static_cast<int>(n);
      }
      return out;
    }

    inline RepPoint make_point(Stratum s, SolveResult const& r) {
      RepPoint pt;
      pt.stratum         = s;
      pt.params          = r.params;
      pt.residual        = r.residual;
      pt.local_dimension = r.local_dimension;
      auto [a, b] = ansatz_matrices<cplx>(s, r.params, [](cplx const& x) { return 1.0 / x; });
      pt.tr_a  = trace(a);
      pt.tr_b  = trace(b);
      pt.tr_ab = trace(cmul(a, b));
      return pt;
    }

    inline double commutator_defect(RepPoint const& pt) {
      auto [a, b] = ansatz_matrices<cplx>(pt.stratum, pt.params, [](cplx const& x) { return 1.0 / x; });
      CMat ab = cmul(a, b), ba = cmul(b, a);
      double d = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        d = std::max(d, std::abs(ab[i] - ba[i]));
      }
      return d;
    }

    inline cplx commutator_trace(RepPoint const& pt) {
      auto [a, b] = ansatz_matrices<cplx>(pt.stratum, pt.params, [](cplx const& x) { return 1.0 / x; });
      CMat ai{a[3], -a[1], -a[2], a[0]}, bi{b[3], -b[1], -b[2], b[0]};
      return trace(cmul(cmul(a, b), cmul(ai, bi)));
    }

    inline std::array<cplx, 3> class_key(RepPoint const& p) {
      if (p.stratum == Stratum::irreducible) {
        return {p.tr_a, p.tr_b, p.tr_ab};
      }
      return {p.params[0], p.params[1], 0};
    }

    inline double key_distance(std::array<cplx, 3> const& a, std::array<cplx, 3> const& b) {
      double d = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
      }
      return d;
    }

    inline std::vector<SolveResult> run_seeds(RelatorSystem const& sys,
                                              SolverOptions const& opt,
                                              std::uint64_t        salt) {
      std::vector<SolveResult> results(opt.seeds);
      auto                     work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
          std::seed_seq seq{static_cast<std::uint32_t>(opt.rng_seed),
                            static_cast<std::uint32_t>(opt.rng_seed >> 32),
                            static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(s)};
          std::mt19937_64                        rng(seq);
          std::uniform_real_distribution<double> logmod(std::log(opt.modulus_min),
                                                        std::log(opt.modulus_max));
          std::uniform_real_distribution<double> arg(0.0, 2 * M_PI);
          std::normal_distribution<double>       normal;
          std::vector<cplx>                      p(sys.unknowns());
          for (auto& x : p) {
            x = std::polar(std::exp(logmod(rng)), arg(rng));
          }
          Eigen::MatrixXcd mix(static_cast<Eigen::Index>(sys.unknowns()),
                               static_cast<Eigen::Index>(sys.equations()));
          for (Eigen::Index i = 0; i < mix.rows(); ++i) {
            for (Eigen::Index j = 0; j < mix.cols(); ++j) {
              mix(i, j) = cplx(normal(rng), normal(rng));
            }
          }
          results[s] = solve_from(sys, p, mix, opt);
        }
      };
      unsigned const threads = std::max(1U, std::min<unsigned>(opt.threads, 64));
      if (threads == 1 || opt.seeds < 2 * threads) {
        work(0, opt.seeds);
      } else {
        std::vector<std::thread> pool;
        std::size_t const        chunk = (opt.seeds + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
          std::size_t lo = t * chunk, hi = std::min(opt.seeds, lo + chunk);
          if (lo < hi) {
            pool.emplace_back(work, lo, hi);
          }
        }
        for (auto& th : pool) {
          th.join();
        }
      }
      return results;
    }

  }  // namespace detail

  /// Multistart count of nonabelian SL(2,C) classes of a 2-generator
  /// presentation.  Deterministic for fixed options, independent of the
  /// thread count.
  inline RepCountReport count_nonabelian_classes(Presentation const& p,
                                                 SolverOptions const& opt = {}) {
    detail::require_two_generators(p);
    auto const     start = std::chrono::steady_clock::now();
    RepCountReport rep;
    rep.diagnostics.seeds_per_stratum = opt.seeds;
    std::vector<std::array<cplx, 3>> keys_irr, keys_red;

    auto absorb = [&](Stratum s, std::vector<detail::SolveResult> const& results) {
      for (auto const& r : results) {
        if (r.status == detail::SolveStatus::diverged) {
          ++rep.diagnostics.diverged;
          continue;
        }
        if (r.status == detail::SolveStatus::residual) {
          ++rep.diagnostics.rejected_residual;
          continue;
        }
        ++rep.diagnostics.converged;
        RepPoint pt = detail::make_point(s, r);
        if (detail::commutator_defect(pt) < 1e-6) {
          ++rep.diagnostics.abelian;
          continue;
        }
        bool irreducible = std::abs(detail::commutator_trace(pt) - 2.0) > 1e-6;
        if (s == Stratum::irreducible && !irreducible) {
          ++rep.diagnostics.reducible_in_irr_gauge;
          continue;
        }
        auto& keys = s == Stratum::irreducible ? keys_irr : keys_red;
        auto& list = s == Stratum::irreducible ? rep.irreducible : rep.reducible;
        auto  key  = detail::class_key(pt);
        bool  dup  = false;
        for (std::size_t i = 0; i < keys.size() && !dup; ++i) {
          if (detail::key_distance(keys[i], key) < opt.dedup_radius) {
            dup = true;
            // keep the representative with the smaller residual
            if (pt.residual < list[i].residual) {
              list[i] = pt;
            }
          }
        }
        if (!dup) {
          keys.push_back(key);
          list.push_back(pt);
        }
      }
    };

    std::uint64_t salt = 0;
    for (Stratum s : {Stratum::irreducible, Stratum::reducible_upper_a,
                      Stratum::reducible_diagonal_a}) {
      detail::RelatorSystem sys(p, s);
      absorb(s, detail::run_seeds(sys, opt, ++salt));
    }

    auto by_key = [](RepPoint const& a, RepPoint const& b) {
      auto ka = detail::class_key(a), kb = detail::class_key(b);
      for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(ka[i].real() - kb[i].real()) > 1e-9) {
          return ka[i].real() < kb[i].real();
        }
        if (std::abs(ka[i].imag() - kb[i].imag()) > 1e-9) {
          return ka[i].imag() < kb[i].imag();
        }
      }
      return false;
    };
    std::sort(rep.irreducible.begin(), rep.irreducible.end(), by_key);
    std::sort(rep.reducible.begin(), rep.reducible.end(), by_key);

    double sep = 0;
    for (auto const* list : {&rep.irreducible, &rep.reducible}) {
      for (std::size_t i = 0; i < list->size(); ++i) {
        rep.diagnostics.max_class_residual =
            std::max(rep.diagnostics.max_class_residual, (*list)[i].residual);
        for (std::size_t j = i + 1; j < list->size(); ++j) {
          double d = detail::key_distance(detail::class_key((*list)[i]),
                                          detail::class_key((*list)[j]));
          sep      = sep == 0 ? d : std::min(sep, d);
        }
      }
    }
    rep.diagnostics.min_class_separation = sep;
    rep.diagnostics.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }

  /// Residual of a reported point recomputed from scratch.
  inline double reverify(Presentation const& p, RepPoint const& pt) {
    return detail::RelatorSystem(p, pt.stratum).residual(pt.params);
  }

  inline nlohmann::json to_json(RepCountReport const& r) {
    auto c = [](cplx z) { return nlohmann::json::array({z.real(), z.imag()}); };
    nlohmann::json classes = nlohmann::json::array();
    for (auto const* list : {&r.irreducible, &r.reducible}) {
      for (auto const& pt : *list) {
        nlohmann::json params = nlohmann::json::array();
        for (auto z : pt.params) {
          params.push_back(c(z));
        }
        classes.push_back({{"stratum", to_string(pt.stratum)},
                           {"trA", c(pt.tr_a)},
                           {"trB", c(pt.tr_b)},
                           {"trAB", c(pt.tr_ab)},
                           {"params", params},
                           {"residual", pt.residual},
                           {"local_dimension", pt.local_dimension}});
      }
    }
    auto const&    d = r.diagnostics;
    nlohmann::json j{
        {"count", r.count()},
        {"irreducible", r.irreducible.size()},
        {"reducible_nonabelian", r.reducible.size()},
        {"positive_dimensional", r.positive_dimensional()},
        {"classes", classes},
        {"diagnostics",
         {{"seeds_per_stratum", d.seeds_per_stratum},
          {"converged", d.converged},
          {"rejected_residual", d.rejected_residual},
          {"diverged", d.diverged},
          {"abelian", d.abelian},
          {"reducible_in_irreducible_gauge", d.reducible_in_irr_gauge},
          {"max_class_residual", d.max_class_residual},
          {"min_class_separation", d.min_class_separation},
          {"seconds", d.seconds}}}};
    j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
    return j;
  }

}  // namespace qlab
