#include "catch_amalgamated.hpp"
#include "qlab/tym.hpp"

using qlab::Labeling;
using qlab::LaurentMatrix;
using qlab::LaurentPoly;
using qlab::parse_braid;
using qlab::tym_eval;

namespace {

  LaurentPoly t(long long e = 1) {
    return LaurentPoly::t(e);
  }

  LaurentMatrix const& identity3() {
    static LaurentMatrix const i = LaurentMatrix::identity(3);
    return i;
  }

  LaurentMatrix power(LaurentMatrix const& m, long long e) {
    return e >= 0 ? m.pow(e) : m.inverse().pow(-e);
  }

}  // namespace

TEST_CASE("generator matrices", "[tym]") {
  REQUIRE(qlab::tym_sigma() == LaurentMatrix{{0, 1, 0}, {t(), 0, 0}, {0, 0, 1}});
  REQUIRE(qlab::tym_tau() == LaurentMatrix{{1, 0, 0}, {0, 0, 1}, {0, t(), 0}});
  for (auto lab : {Labeling::as_displayed, Labeling::swapped}) {
    REQUIRE(tym_eval(parse_braid("sig tau sig"), lab) == tym_eval(parse_braid("tau sig tau"), lab));
    REQUIRE(tym_eval(parse_braid("sig sig^-1 tau^-1 tau"), lab) == identity3());
  }
  REQUIRE(tym_eval(parse_braid("sig"), Labeling::swapped) == qlab::tym_tau());
}

TEST_CASE("displayed matrices", "[tym]") {
  auto const& d = qlab::displayed_matrices();
  REQUIRE(d.u.pow(3) == identity3());
  REQUIRE(d.u * d.u == LaurentMatrix{{0, 1, 0}, {0, 0, t(-1)}, {t(), 0, 0}});
  REQUIRE(d.x0 * d.u == d.case_a_x);
  REQUIRE(d.y0 * d.u * d.u == d.case_a_y);
}

TEST_CASE("braid words behind the displayed matrices", "[tym]") {
  auto const& d = qlab::displayed_matrices();
  // with sig sent to the first generator matrix
  REQUIRE(tym_eval(parse_braid("sig^-1 tau"), Labeling::as_displayed) == d.u);
  REQUIRE(tym_eval(parse_braid("sig^-1 tau^2"), Labeling::as_displayed) == d.x0);
  REQUIRE(tym_eval(parse_braid("tau"), Labeling::as_displayed) == d.y0);
  REQUIRE_FALSE(tym_eval(parse_braid("tau^-1 sig tau"), Labeling::as_displayed) == d.x0);
  // with the labels exchanged
  REQUIRE(tym_eval(parse_braid("tau^-1 sig"), Labeling::swapped) == d.u);
  REQUIRE(tym_eval(parse_braid("sig"), Labeling::swapped) == d.y0);
  REQUIRE(tym_eval(parse_braid("tau^-1 sig^2"), Labeling::swapped) == d.x0);
  REQUIRE_FALSE(tym_eval(parse_braid("tau^-1 sig tau"), Labeling::swapped) == d.x0);
}

TEST_CASE("X and Y as powers of U", "[tym]") {
  auto const& d = qlab::displayed_matrices();
  for (long long k = 1; k <= 12; ++k) {
    INFO("k=" << k);
    auto [x, y] = qlab::xy_for_k(k, Labeling::swapped);
    REQUIRE(x == d.x0 * power(d.u, k - 2));
    REQUIRE(y == d.y0 * power(d.u, k - 1));
    REQUIRE(x.determinant() == -t());
    auto [xa, ya] = qlab::xy_for_k(k, Labeling::as_displayed);
    REQUIRE(xa.determinant() == -t());
  }
}

TEST_CASE("which printed case each k falls in", "[tym]") {
  char const cases[] = {'a', 'b', 'c'};
  for (long long k = 1; k <= 12; ++k) {
    INFO("k=" << k);
    REQUIRE(qlab::displayed_case(k, Labeling::swapped) == cases[k % 3]);
    REQUIRE_FALSE(qlab::displayed_case(k, Labeling::as_displayed).has_value());
  }
}

TEST_CASE("case (a) products match the closed forms", "[tym]") {
  auto const& d = qlab::displayed_matrices();
  auto const& x = d.case_a_x;
  auto const& y = d.case_a_y;
  for (long long j = 0; j <= 20; ++j) {
    LaurentMatrix y_even{{t(j), 0, 0}, {0, t(j), 0}, {0, 0, 1}};
    LaurentMatrix y_odd{{0, t(j), 0}, {t(j + 1), 0, 0}, {0, 0, 1}};
    REQUIRE(y.pow(2 * j) == y_even);
    REQUIRE(y.pow(2 * j + 1) == y_odd);
    REQUIRE(y_even * x == LaurentMatrix{{t(j), 0, 0}, {0, 0, t(j - 1)}, {0, t(2), 0}});
    REQUIRE(y_odd * x == LaurentMatrix{{0, 0, t(j - 1)}, {t(j + 1), 0, 0}, {0, t(2), 0}});
    REQUIRE(x * y_even == LaurentMatrix{{t(j), 0, 0}, {0, 0, t(-1)}, {0, t(j + 2), 0}});
    REQUIRE(x * y_odd == LaurentMatrix{{0, t(j), 0}, {0, 0, t(-1)}, {t(j + 3), 0, 0}});
  }
}

TEST_CASE("noncommutation certificate for case (a)", "[tym]") {
  auto const& d    = qlab::displayed_matrices();
  auto        cert = qlab::check_noncommutation(d.case_a_x, d.case_a_y, 200);
  REQUIRE(cert.all_witnessed);
  REQUIRE(cert.witnesses.size() == 200);
  REQUIRE(cert.closed_form_verified);
  REQUIRE(cert.period == 2);
  for (auto const& w : cert.witnesses) {
    LaurentMatrix yi = d.case_a_y.pow(w.i);
    REQUIRE(w.lhs == (yi * d.case_a_x)(w.row - 1, w.col - 1));
    REQUIRE(w.rhs == (d.case_a_x * yi)(w.row - 1, w.col - 1));
    REQUIRE_FALSE(w.lhs == w.rhs);
  }
}

TEST_CASE("commuting matrices are not certified", "[tym]") {
  LaurentMatrix const y{{0, 1, 0}, {t(), 0, 0}, {0, 0, 1}};
  auto cert = qlab::check_noncommutation(y.pow(3), y, 10);
  REQUIRE_FALSE(cert.all_witnessed);
  REQUIRE_FALSE(cert.closed_form_verified);
  // Y^2 is diagonal, so X = diag(1, 1, t) commutes with even powers only
  LaurentMatrix const x{{1, 0, 0}, {0, 1, 0}, {0, 0, t()}};
  auto partial = qlab::check_noncommutation(LaurentMatrix{{t(), 0, 0}, {0, 1, 0}, {0, 0, 1}}, y, 10);
  REQUIRE_FALSE(partial.all_witnessed);
  REQUIRE_FALSE(partial.closed_form_verified);
  (void) x;
}

TEST_CASE("type certificates for the family", "[tym]") {
  for (long long k = 1; k <= 12; ++k) {
    for (auto lab : {Labeling::as_displayed, Labeling::swapped}) {
      INFO("k=" << k << " labeling=" << qlab::to_string(lab));
      auto c = qlab::type_certificate(k, 60, lab);
      REQUIRE(c.infinite());
    }
  }
  auto j = qlab::to_json(qlab::type_certificate(2, 20));
  REQUIRE(j["type"] == "infinity");
  REQUIRE(nlohmann::json::parse(j.dump()) == j);
}
