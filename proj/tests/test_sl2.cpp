#include "catch_amalgamated.hpp"
#include "qlab/braid.hpp"
#include "qlab/parser.hpp"
#include "qlab/sl2_reps.hpp"

using qlab::SolverOptions;

namespace {

  SolverOptions quick(std::size_t seeds = 1500) {
    SolverOptions o;
    o.seeds = seeds;
    return o;
  }

}  // namespace

TEST_CASE("relator equations", "[sl2]") {
  auto sys = qlab::relator_equations(qlab::s_presentation(2));
  REQUIRE_FALSE(sys.equations.empty());
  REQUIRE(sys.equations.front().to_string() == "-al^2 + al*be^2 + be*ga");
  REQUIRE_THROWS_AS(qlab::relator_equations(qlab::suciu_group(2)), qlab::DimensionError);
}

TEST_CASE("trefoil group: irreducible curve and reducible classes from the Alexander polynomial",
          "[sl2]") {
  auto p   = qlab::b3_presentation();
  auto rep = qlab::count_nonabelian_classes(p, quick());
  REQUIRE(rep.positive_dimensional());
  REQUIRE_FALSE(rep.irreducible.empty());
  for (auto const& pt : rep.irreducible) {
    REQUIRE(pt.local_dimension == 1);
    REQUIRE(std::abs(pt.tr_a - pt.tr_b) < 1e-8);
    REQUIRE(std::abs(pt.tr_ab - 1.0) < 1e-8);
  }
  // nonabelian reducibles sit at al = be with al^2 a root of t^2 - t + 1
  REQUIRE(rep.reducible.size() == 4);
  for (auto const& pt : rep.reducible) {
    auto al = pt.params[0], be = pt.params[1];
    REQUIRE(std::abs(al - be) < 1e-8);
    auto s = al * al;
    REQUIRE(std::abs(s * s - s + 1.0) < 1e-8);
    REQUIRE(pt.local_dimension == 0);
  }
}

TEST_CASE("balanced presentations have k - 1 isolated irreducible classes", "[sl2]") {
  for (long long k = 2; k <= 4; ++k) {
    INFO("k=" << k);
    auto p   = qlab::s_presentation_balanced(k);
    auto rep = qlab::count_nonabelian_classes(p, quick());
    REQUIRE(rep.irreducible.size() == static_cast<std::size_t>(k - 1));
    REQUIRE(rep.reducible.empty());
    REQUIRE_FALSE(rep.positive_dimensional());
    for (auto const& pt : rep.irreducible) {
      REQUIRE(qlab::reverify(p, pt) < 1e-10);
    }
  }
}

TEST_CASE("printed S_k counts", "[sl2]") {
  REQUIRE(qlab::count_nonabelian_classes(qlab::s_presentation(2), quick()).count() == 1);
  REQUIRE(qlab::count_nonabelian_classes(qlab::s_presentation(3), quick()).count() == 0);
}

TEST_CASE("abelian groups have no nonabelian classes", "[sl2]") {
  auto z2 = qlab::parse_presentation("< a, b | a b a^-1 b^-1 >");
  auto rep = qlab::count_nonabelian_classes(z2, quick(500));
  REQUIRE(rep.count() == 0);
  REQUIRE(rep.diagnostics.abelian > 0);
}

TEST_CASE("results do not depend on the thread count", "[sl2]") {
  auto p  = qlab::s_presentation_balanced(3);
  auto o1 = quick(600);
  auto o2 = o1;
  o2.threads = 3;
  auto a = qlab::count_nonabelian_classes(p, o1);
  auto b = qlab::count_nonabelian_classes(p, o2);
  REQUIRE(a.count() == b.count());
  REQUIRE(a.diagnostics.converged == b.diagnostics.converged);
  for (std::size_t i = 0; i < a.irreducible.size(); ++i) {
    REQUIRE(a.irreducible[i].params == b.irreducible[i].params);
  }
  auto j = qlab::to_json(a);
  REQUIRE(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("ansatz matrices have determinant one", "[sl2]") {
  using qlab::cplx;
  auto recip = +[](cplx const& z) { return 1.0 / z; };
  std::vector<cplx> p{{1.3, 0.2}, {-0.4, 0.9}, {0.5, -2.0}};
  for (auto s : {qlab::Stratum::irreducible, qlab::Stratum::reducible_upper_a,
                 qlab::Stratum::reducible_diagonal_a}) {
    auto [a, b] = qlab::ansatz_matrices<cplx>(s, p, recip);
    REQUIRE(std::abs(a[0] * a[3] - a[1] * a[2] - 1.0) < 1e-12);
    REQUIRE(std::abs(b[0] * b[3] - b[1] * b[2] - 1.0) < 1e-12);
  }
}
