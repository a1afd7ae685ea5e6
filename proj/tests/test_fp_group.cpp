#include "catch_amalgamated.hpp"
#include "qlab/abelianization.hpp"
#include "qlab/braid.hpp"
#include "qlab/kernel.hpp"
#include "qlab/parser.hpp"
#include "qlab/pipeline.hpp"
#include "qlab/tietze.hpp"
#include "qlab/todd_coxeter.hpp"
#include "qlab/verify.hpp"

using qlab::CyclicHom;
using qlab::Presentation;
using qlab::Word;

namespace {

  std::size_t order(Presentation const& p) {
    auto t = qlab::todd_coxeter(p, 100'000);
    REQUIRE(t.has_value());
    return t->size();
  }

  struct Fixture {
    char const*            name;
    char const*            text;
    long long              modulus;
    std::vector<long long> degrees;
    std::size_t            order;
  };

  std::vector<Fixture> const finite_fixtures{
      {"Z6", "< a | a^6 >", 3, {1}, 6},
      {"S3", "< a, b | a^2, b^2, (a b)^3 >", 2, {1, 1}, 6},
      {"D4", "< a, b | a^2, b^2, (a b)^4 >", 2, {1, 1}, 8},
      {"Q8", "< a, b | a^4, a^2 b^-2, b^-1 a b a >", 2, {1, 1}, 8},
      {"A4", "< a, b | a^2, b^3, (a b)^3 >", 3, {0, 1}, 12},
  };

  // Fox derivatives at t = -1 of the map sending every generator to t.
  qlab::IntMatrix fox_matrix_at_minus_one(Presentation const& p) {
    qlab::IntMatrix m(p.number_of_relators(), p.number_of_generators());
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      long long deg = 0;
      for (qlab::Letter l : p.relators[i]) {
        if (l.inv) {
          --deg;
        }
        // d(x) contributes t^deg(prefix); d(x^-1) contributes -t^(deg(prefix) - 1)
        m(i, l.gen) += (deg % 2 == 0 ? 1 : -1) * (l.inv ? -1 : 1);
        if (!l.inv) {
          ++deg;
        }
      }
    }
    return m;
  }

  qlab::IntMatrix drop_column(qlab::IntMatrix const& m, std::size_t c) {
    qlab::IntMatrix out(m.rows(), m.cols() - 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0, k = 0; j < m.cols(); ++j) {
        if (j != c) {
          out(i, k++) = m(i, j);
        }
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("Todd-Coxeter on small groups", "[todd-coxeter]") {
  REQUIRE(order(qlab::parse_presentation("< a, b | a^2, b^2, (a b)^3 >")) == 6);
  REQUIRE(order(qlab::parse_presentation("< a | a >")) == 1);
  REQUIRE(order(qlab::parse_presentation("< a, b | a^3, b^2, (a b)^2 >")) == 6);
  REQUIRE(order(qlab::parse_presentation("< a, b | a^2, b^3, (a b)^5 >")) == 60);
  for (auto const& f : finite_fixtures) {
    INFO(f.name);
    REQUIRE(order(qlab::parse_presentation(f.text)) == f.order);
  }
  // infinite groups exhaust the bound
  REQUIRE_FALSE(qlab::todd_coxeter(qlab::parse_presentation("< a | >"), 1000));
  REQUIRE_FALSE(qlab::todd_coxeter(qlab::b3_presentation(), 1000));
}

TEST_CASE("coset tables are permutation actions satisfying the relators", "[todd-coxeter]") {
  auto p = qlab::parse_presentation("< a, b | a^2, b^3, (a b)^3 >");
  auto t = qlab::todd_coxeter(p);
  REQUIRE(t);
  for (std::uint32_t c = 0; c < t->size(); ++c) {
    for (auto const& r : p.relators) {
      REQUIRE(t->act(c, r) == c);
    }
    for (qlab::generator_index g = 0; g < 2; ++g) {
      REQUIRE(t->act(t->act(c, qlab::Letter{g, false}), qlab::Letter{g, true}) == c);
    }
  }
}

TEST_CASE("subgroup index", "[todd-coxeter]") {
  auto p = qlab::parse_presentation("< a, b | a^2, b^2, (a b)^3 >");
  auto t = qlab::todd_coxeter(p, 1000, {Word::generator(0)});
  REQUIRE(t);
  REQUIRE(t->size() == 3);
}

TEST_CASE("index-order law for kernels of finite groups", "[kernel]") {
  for (auto const& f : finite_fixtures) {
    INFO(f.name);
    auto         g = qlab::parse_presentation(f.text);
    Presentation k = qlab::kernel_presentation(CyclicHom(g, f.modulus, f.degrees));
    REQUIRE(order(k) * f.modulus == f.order);
    REQUIRE(k.number_of_relators() == g.number_of_relators() * static_cast<std::size_t>(f.modulus));
    REQUIRE(order(qlab::tietze_simplify(k)) * f.modulus == f.order);
  }
}

TEST_CASE("double-cover quotients of G_k are finite", "[kernel]") {
  std::size_t const expected[] = {6, 48, 720};
  for (long long k = 1; k <= 3; ++k) {
    INFO("k=" << k);
    auto d = qlab::double_cover_kernel(k);
    REQUIRE(order(d.quotient) == expected[k - 1]);
    REQUIRE(order(d.kernel) * 2 == expected[k - 1]);
    REQUIRE(order(d.simplified) * 2 == expected[k - 1]);
  }
}

TEST_CASE("kernel abelianization agrees with Fox calculus at t = -1", "[kernel]") {
  for (long long k = 1; k <= 8; ++k) {
    INFO("k=" << k);
    Presentation g   = qlab::suciu_group(k);
    auto         fox = qlab::abelianization_of(drop_column(fox_matrix_at_minus_one(g), 0));
    auto         d   = qlab::double_cover_kernel(k);
    REQUIRE(qlab::abelianization(d.kernel) == fox);
    REQUIRE(qlab::abelianization(d.simplified) == fox);
    REQUIRE(fox.to_string() == "Z/3");
  }
}

TEST_CASE("kernel generator naming and meridian", "[kernel]") {
  auto g = qlab::parse_presentation("< x, y | x y x = y x y >");
  g.meridian = 0;
  auto k = qlab::kernel_presentation(CyclicHom::uniform(g, 2));
  REQUIRE(k.alphabet.names() == std::vector<std::string>{"y_0", "x_1", "y_1"});
  REQUIRE(k.meridian);
  REQUIRE(k.alphabet.name(*k.meridian) == "x_1");
  REQUIRE(qlab::abelianization(k).to_string() == "Z/3 x Z");
}

TEST_CASE("invalid homomorphisms are rejected", "[kernel]") {
  auto g = qlab::parse_presentation("< a, b | a^2, b^3 >");
  REQUIRE_THROWS_AS(CyclicHom::uniform(g, 2), qlab::HomomorphismError);
  REQUIRE_THROWS_AS(CyclicHom(g, 2, {1}), qlab::HomomorphismError);
  auto z4 = qlab::parse_presentation("< a | a^4 >");
  REQUIRE_THROWS_AS(qlab::kernel_presentation(CyclicHom(z4, 4, {2})), qlab::HomomorphismError);
}

TEST_CASE("power relators are not duplicated", "[kernel]") {
  auto p = qlab::parse_presentation("< x, y | x^2 >");
  auto q = qlab::adjoin_power_relators(p, 2, {0, 1});
  REQUIRE(q.number_of_relators() == 2);
}

TEST_CASE("Tietze simplification", "[tietze]") {
  auto p = qlab::parse_presentation("< a, b, c | c = a b, a^2, b^2, c^3 >");
  qlab::TietzeStats st;
  auto q = qlab::tietze_simplify(p, 10'000, &st);
  REQUIRE(q.number_of_generators() == 2);
  REQUIRE(order(q) == 6);
  REQUIRE(st.eliminations >= 1);
  REQUIRE_FALSE(st.budget_exhausted);

  qlab::TietzeStats none;
  auto unchanged = qlab::tietze_simplify(p, 0, &none);
  REQUIRE(unchanged.number_of_generators() == 3);
  REQUIRE(none.budget_exhausted);

  // the k = 1 kernel is cyclic
  REQUIRE(qlab::double_cover_kernel(1).simplified.number_of_generators() == 1);
  for (long long k = 2; k <= 6; ++k) {
    auto d = qlab::double_cover_kernel(k);
    REQUIRE(d.simplified.number_of_generators() == 2);
    REQUIRE(d.simplified.number_of_relators() == 2);
  }
}

TEST_CASE("homomorphism verification with coset tables", "[verify]") {
  auto s3 = qlab::parse_presentation("< a, b | a^2, b^2, (a b)^3 >");
  auto s3b = qlab::parse_presentation("< s, t | s^3, t^2, (s t)^2 >");
  qlab::CosetTableOracle oracle(s3b);
  REQUIRE(oracle.order() == 6);
  // a -> t, b -> s t
  std::vector<Word> good{qlab::parse_word("t", s3b.alphabet), qlab::parse_word("s t", s3b.alphabet)};
  REQUIRE(qlab::verify_hom(s3, s3b, good, oracle).holds());
  std::vector<Word> bad{qlab::parse_word("s", s3b.alphabet), qlab::parse_word("t", s3b.alphabet)};
  auto chk = qlab::verify_hom(s3, s3b, bad, oracle);
  REQUIRE_FALSE(chk.holds());
  REQUIRE(chk.first_failure() == 0u);
  REQUIRE_THROWS_AS(qlab::verify_hom(s3, s3b, std::vector<Word>{good[0]}, oracle), qlab::MissingImageError);
}

TEST_CASE("abelianization oracle is sound", "[verify]") {
  auto z6 = qlab::parse_presentation("< a | a^6 >");
  qlab::AbelianizationOracle declared(z6, true);
  REQUIRE(declared.is_identity(qlab::parse_word("a^12", z6.alphabet)));
  REQUIRE_FALSE(declared.is_identity(qlab::parse_word("a^4", z6.alphabet)));
  qlab::AbelianizationOracle cautious(qlab::b3_presentation());
  REQUIRE_FALSE(cautious.is_identity(qlab::parse_braid("sig")));
  REQUIRE_THROWS_AS(cautious.is_identity(qlab::parse_braid("sig tau^-1")), qlab::OracleInapplicable);
  REQUIRE_THROWS_AS(qlab::CosetTableOracle(qlab::b3_presentation(), 500), qlab::OracleInapplicable);
}

TEST_CASE("abelianization of knot-like groups", "[abelianization]") {
  REQUIRE(qlab::abelianization(qlab::b3_presentation()).to_string() == "Z");
  for (long long k = 1; k <= 6; ++k) {
    REQUIRE(qlab::abelianization(qlab::suciu_group(k)).to_string() == "Z");
  }
}
