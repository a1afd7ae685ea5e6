// Acceptance suite: one PASS/FAIL line per criterion, informational lines
// indented below it.  Exit status is the number of failed criteria.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "qlab/qlab.hpp"
#include "qlab/cli.hpp"
#include "quandle_oracle.hpp"

using namespace qlab;

namespace {

  constexpr double residual_tol = 1e-10;
  constexpr double dedup_radius = 1e-6;

  struct Criterion {
    int                                               id;
    std::string                                       title;
    double                                            budget_seconds;
    std::function<bool(std::vector<std::string>&)>    body;
    std::function<void(std::vector<std::string>&)>    info = {};  // untimed extras
  };

  int cli(std::vector<std::string> args, std::string* out = nullptr) {
    std::ostringstream o, e;
    int                code = cli::run(std::move(args), o, e);
    if (out) {
      *out = o.str();
    }
    return code;
  }

  std::string fixture(std::string const& name) {
    return std::string(QLAB_FIXTURES) + "/" + name;
  }

  SolverOptions solver(std::size_t seeds) {
    SolverOptions o;
    o.seeds        = seeds;
    o.residual_tol = residual_tol;
    o.dedup_radius = dedup_radius;
    o.threads      = cli::thread_count();
    return o;
  }

  std::string yes(bool b) {
    return b ? "yes" : "no";
  }

  // --------------------------------------------------------------------------

  bool c1_verify_iso(std::vector<std::string>& log) {
    bool ok = true;
    for (long long k = 1; k <= 12; ++k) {
      std::string out;
      int         code = cli({"suciu", "verify-iso", "--k", std::to_string(k)}, &out);
      ok = ok && code == 0 && out.find("homomorphism relators verified") != std::string::npos;
    }
    log.push_back("verify-iso k=1..12: " + yes(ok));
    std::size_t caught = 0, total = 0;
    for (long long k = 1; k <= 12; ++k) {
      auto imgs = suciu_images(k).as_vector();
      for (std::size_t g = 0; g < imgs.size(); ++g) {
        for (char const* extra : {"sig", "tau^-1"}) {
          auto bad = imgs;
          bad[g]   = bad[g] * parse_braid(extra);
          ++total;
          caught += !check_suciu_images(k, bad).holds();
        }
      }
    }
    log.push_back("corrupted image words rejected: " + std::to_string(caught) + "/"
                  + std::to_string(total));
    return ok && caught == total;
  }

  bool c2_tym_constants(std::vector<std::string>& log) {
    auto const& d = displayed_matrices();
    auto const  t = LaurentPoly::t();
    LaurentMatrix const shown_sigma{{0, 1, 0}, {t, 0, 0}, {0, 0, 1}};
    LaurentMatrix const shown_tau{{1, 0, 0}, {0, 0, 1}, {0, t, 0}};
    struct Check {
      std::string name;
      bool        ok;
    };
    auto ev = [](char const* w, Labeling lab) { return tym_eval(parse_braid(w), lab); };
    std::vector<Check> checks{
        {"phi(sig) as displayed", ev("sig", Labeling::as_displayed) == shown_sigma},
        {"phi(tau) as displayed", ev("tau", Labeling::as_displayed) == shown_tau},
        {"X0 = phi(tau^-1 sig tau)", ev("tau^-1 sig tau", Labeling::as_displayed) == d.x0},
        {"Y0 = phi(sig)", ev("sig", Labeling::as_displayed) == d.y0},
        {"U = phi(tau^-1 sig)", ev("tau^-1 sig", Labeling::as_displayed) == d.u},
        {"U^3 = I", d.u.pow(3) == LaurentMatrix::identity(3)},
    };
    bool ok = true;
    for (auto const& c : checks) {
      log.push_back(c.name + ": " + yes(c.ok));
      ok = ok && c.ok;
    }
    // what the displayed matrices are, for the record
    log.push_back("with sig -> first matrix: U = phi(sig^-1 tau) "
                  + yes(ev("sig^-1 tau", Labeling::as_displayed) == d.u) + ", X0 = phi(sig^-1 tau^2) "
                  + yes(ev("sig^-1 tau^2", Labeling::as_displayed) == d.x0) + ", Y0 = phi(tau) "
                  + yes(ev("tau", Labeling::as_displayed) == d.y0));
    log.push_back("with labels exchanged: U = phi(tau^-1 sig) "
                  + yes(ev("tau^-1 sig", Labeling::swapped) == d.u) + ", Y0 = phi(sig) "
                  + yes(ev("sig", Labeling::swapped) == d.y0) + ", X0 = phi(tau^-1 sig^2) "
                  + yes(ev("tau^-1 sig^2", Labeling::swapped) == d.x0) + ", X0 = phi(tau^-1 sig tau) "
                  + yes(ev("tau^-1 sig tau", Labeling::swapped) == d.x0));
    return ok;
  }

  bool c3_claim(std::vector<std::string>& log) {
    auto const& d    = displayed_matrices();
    auto const  t    = [](long long e) { return LaurentPoly::t(e); };
    auto        cert = check_noncommutation(d.case_a_x, d.case_a_y, 200);
    bool        ok   = cert.all_witnessed && cert.closed_form_verified && cert.witnesses.size() == 200;
    log.push_back("case (a): witnesses for i=1..200 " + yes(cert.all_witnessed)
                  + ", closed form for all i >= 1 " + yes(cert.closed_form_verified) + " (period "
                  + std::to_string(cert.period) + ")");
    // displayed products at j = 0, 1
    bool shown = true;
    for (long long j = 0; j <= 1; ++j) {
      LaurentMatrix const le{{t(j), 0, 0}, {0, 0, t(j - 1)}, {0, t(2), 0}};
      LaurentMatrix const lo{{0, 0, t(j - 1)}, {t(j + 1), 0, 0}, {0, t(2), 0}};
      LaurentMatrix const re{{t(j), 0, 0}, {0, 0, t(-1)}, {0, t(j + 2), 0}};
      LaurentMatrix const ro{{0, t(j), 0}, {0, 0, t(-1)}, {t(j + 3), 0, 0}};
      for (auto [i, l, r] : {std::tuple{2 * j, le, re}, std::tuple{2 * j + 1, lo, ro}}) {
        if (i < 1) {
          continue;
        }
        auto const& w = cert.witnesses[static_cast<std::size_t>(i - 1)];
        bool m = w.i == i && w.lhs == l(w.row - 1, w.col - 1) && w.rhs == r(w.row - 1, w.col - 1)
                 && d.case_a_y.pow(i) * d.case_a_x == l && d.case_a_x * d.case_a_y.pow(i) == r;
        log.push_back("i=" + std::to_string(i) + " witness (" + std::to_string(w.row) + ","
                      + std::to_string(w.col) + "): " + w.lhs.to_string() + " vs " + w.rhs.to_string()
                      + ", matches displayed products " + yes(m));
        shown = shown && m;
      }
    }
    bool family = true;
    for (long long k = 1; k <= 12; ++k) {
      for (auto lab : {Labeling::as_displayed, Labeling::swapped}) {
        auto c = check_noncommutation(k, 200, lab);
        family = family && c.all_witnessed && c.closed_form_verified;
      }
    }
    log.push_back("X, Y from the braid words, k=1..12, both labelings: " + yes(family));
    return ok && shown && family;
  }

  bool c4_abelianization(std::vector<std::string>& log) {
    std::ifstream  in(fixture("s_k_abelianization.json"));
    nlohmann::json fx = nlohmann::json::parse(in);
    bool           ok = true;
    for (auto const& e : fx["entries"]) {
      long long   k    = e["k"];
      std::string want = e["abelianization"];
      // the fixture's hand derivation, rechecked by Smith normal form
      auto m = e["relation_matrix"];
      auto snf = abelianization_of(IntMatrix{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}).to_string();
      auto ker = abelianization(double_cover_kernel(k).kernel).to_string();
      auto sk  = abelianization(s_presentation(k)).to_string();
      bool row = snf == want && ker == want && sk == want;
      log.push_back("k=" + std::to_string(k) + ": fixture " + want + ", SNF " + snf + ", S_k " + sk
                    + ", kernel " + ker + (row ? "" : "  <- mismatch"));
      ok = ok && row;
    }
    return ok;
  }

  // Counts at 1e4 and 2e4 seeds; returns whether the criterion row holds.
  bool count_row(Presentation const& p, long long expected, std::string& line) {
    auto a = count_nonabelian_classes(p, solver(10'000));
    auto b = count_nonabelian_classes(p, solver(20'000));
    bool verified = true;
    for (auto const* list : {&b.irreducible, &b.reducible}) {
      for (auto const& pt : *list) {
        verified = verified && reverify(p, pt) < residual_tol;
      }
    }
    bool row = a.count() == b.count() && verified && static_cast<long long>(b.count()) == expected
               && !b.positive_dimensional();
    line = std::to_string(a.count()) + " classes at 1e4 seeds, " + std::to_string(b.count())
           + " at 2e4 (expected " + std::to_string(expected) + "), re-verified " + yes(verified)
           + (row ? "" : "  <- mismatch");
    return row;
  }

  bool c5_rep_counts(std::vector<std::string>& log) {
    bool        ok = true;
    std::string line;
    for (long long k = 2; k <= 5; ++k) {
      ok = count_row(s_presentation(k), k - 1, line) && ok;
      log.push_back("S_k k=" + std::to_string(k) + ": " + line);
    }
    return ok;
  }

  // not part of the criterion: the variant whose abelianization matches the kernel
  void c5_balanced_info(std::vector<std::string>& log) {
    std::string line;
    for (long long k = 2; k <= 5; ++k) {
      count_row(s_presentation_balanced(k), k - 1, line);
      log.push_back("(info) with a b^(k-1) a = b^k, k=" + std::to_string(k) + ": " + line);
    }
  }

  bool c6_distinguish(std::vector<std::string>& log) {
    std::string out;
    int         code = cli({"suciu", "distinguish", "--k-range", "2..5", "--json"}, &out);
    auto        j    = nlohmann::json::parse(out);
    bool        ok   = code == 0 && j["pairwise_distinct"] == true;
    log.push_back("exit " + std::to_string(code) + ", pairwise distinct " + yes(j["pairwise_distinct"]));
    long long k = 2;
    for (auto const& e : j["entries"]) {
      std::string ab    = e["kernel"]["abelianization"]["group"];
      long long   count = e["count"];
      std::string want  = "Z/" + std::to_string(k + 2);
      bool        row   = count == k - 1 && ab == want;
      log.push_back("k=" + std::to_string(k) + ": count " + std::to_string(count) + " (expected "
                    + std::to_string(k - 1) + "), abelianization " + ab + " (expected " + want + ")"
                    + (row ? "" : "  <- mismatch"));
      ok = ok && row;
      ++k;
    }
    return ok && k == 6;
  }

  bool c7_quandles(std::vector<std::string>& log) {
    std::size_t tables = 0, quandles = 0, bad = 0;
    auto visit = [&](qlab::RawTable const& t) {
      ++tables;
      bool naive = oracle::is_quandle(t);
      auto rep   = check_axioms(t);
      if (rep.valid() != naive) {
        ++bad;
        return;
      }
      if (!naive) {
        return;
      }
      ++quandles;
      auto const& q = *rep.table;
      if (quandle_type(q) != oracle::naive_type(t)) {
        ++bad;
      }
      std::size_t orb = orbits(q).size();
      if (orb != oracle::naive_orbit_count(t)
          || abelianization(associated_group_presentation(q, 0)).rank != orb) {
        ++bad;
      }
    };
    for (std::size_t n = 0; n <= 3; ++n) {
      oracle::all_tables(n, visit);
    }
    // size 4: every table with permutation columns (all quandles are among them)
    oracle::permutation_column_tables(4, visit);
    // and raw size-4 tables whose columns need not be permutations, sampled
    std::mt19937 rng(4);
    for (int i = 0; i < 200'000; ++i) {
      qlab::RawTable t(4, std::vector<long long>(4));
      for (auto& row : t) {
        for (auto& v : row) {
          v = static_cast<long long>(rng() % 4);
        }
      }
      visit(t);
    }
    log.push_back(std::to_string(tables) + " tables, " + std::to_string(quandles)
                  + " quandles, " + std::to_string(bad) + " disagreements");
    return bad == 0 && quandles > 0;
  }

  bool c8_fp_group(std::vector<std::string>& log) {
    auto s3 = todd_coxeter(parse_presentation("< a, b | a^2, b^2, (a b)^3 >"));
    bool ok = s3 && s3->size() == 6;
    log.push_back("< a, b | a^2, b^2, (a b)^3 >: " + (s3 ? std::to_string(s3->size()) : "none")
                  + " cosets");
    struct F {
      char const*            name;
      char const*            text;
      long long              r;
      std::vector<long long> deg;
    };
    for (auto const& f : std::vector<F>{{"Z6", "< a | a^6 >", 3, {1}},
                                        {"S3", "< a, b | a^2, b^2, (a b)^3 >", 2, {1, 1}},
                                        {"D4", "< a, b | a^2, b^2, (a b)^4 >", 2, {1, 1}},
                                        {"Q8", "< a, b | a^4, a^2 b^-2, b^-1 a b a >", 2, {1, 1}},
                                        {"A4", "< a, b | a^2, b^3, (a b)^3 >", 3, {0, 1}}}) {
      auto g  = parse_presentation(f.text);
      auto go = todd_coxeter(g);
      auto ko = todd_coxeter(kernel_presentation(CyclicHom(g, f.r, f.deg)));
      bool row = go && ko && go->size() == static_cast<std::size_t>(f.r) * ko->size();
      log.push_back(std::string(f.name) + ": |G| = " + std::to_string(go ? go->size() : 0) + ", r = "
                    + std::to_string(f.r) + ", |Ker| = " + std::to_string(ko ? ko->size() : 0));
      ok = ok && row;
    }
    return ok;
  }

  bool c9_negative_controls(std::vector<std::string>& log) {
    std::string out;
    bool        ok = true;
    int rel = cli({"suciu", "verify-iso", "--k", "2", "--group", fixture("bad_relator_g2.txt")}, &out);
    bool r1 = rel == 1 && out.find("relator 2") != std::string::npos;
    log.push_back("bad relator: exit " + std::to_string(rel) + ", stage relator check " + yes(r1));
    int img = cli({"suciu", "verify-iso", "--k", "2", "--images", fixture("bad_image_k2.txt")}, &out);
    bool r2 = img == 1 && out.find("does not map to 1") != std::string::npos;
    log.push_back("bad image: exit " + std::to_string(img) + ", stage relator check " + yes(r2));
    int tab = cli({"quandle", "check", fixture("bad_table.txt")}, &out);
    bool r3 = tab == 1 && out.find("self-distributivity fails") != std::string::npos;
    log.push_back("bad table: exit " + std::to_string(tab) + ", stage axiom check " + yes(r3));
    int rep = cli({"suciu", "reproduce", "--seeds", "300", "--imax", "20", "--corrupt-relator", "--json"},
                  &out);
    bool r4 = rep == 1 && nlohmann::json::parse(out)["failed_stage"] == "verify-iso";
    log.push_back("reproduction with a corrupted relator: exit " + std::to_string(rep)
                  + ", fails at verify-iso " + yes(r4));
    ok = r1 && r2 && r3 && r4;
    return ok;
  }

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "homomorphism G_k -> B3 verified for k = 1..12, corrupted images rejected", 1,
       c1_verify_iso},
      {2, "Tong-Yang-Ma constants reproduce the displayed matrices and labels", 1, c2_tym_constants},
      {3, "Y^i X != X Y^i for all i >= 1 (case (a) and k = 1..12)", 5, c3_claim},
      {4, "kernel abelianization = S_k abelianization = Z/(k+2), k = 1..6", 2, c4_abelianization},
      {5, "S_k has k-1 nonabelian SL(2,C) classes, k = 2..5, stable under doubling", 60,
       c5_rep_counts, c5_balanced_info},
      {6, "distinguish 2..5: counts 1..4 and abelianizations Z/4..Z/7", 90, c6_distinguish},
      {7, "quandle axioms, type and orbits agree with brute force, size <= 4", 30, c7_quandles},
      {8, "Todd-Coxeter and the index-order law on finite fixtures", 10, c8_fp_group},
      {9, "corrupted relator, image and table fail at the right stage with exit 1", 60,
       c9_negative_controls},
  };
  std::cout << "tolerances: residual < " << residual_tol << ", dedup radius " << dedup_radius
            << ", threads " << cli::thread_count() << "\n";
  int failed = 0;
  for (auto const& c : criteria) {
    std::vector<std::string> log;
    auto                     t0 = std::chrono::steady_clock::now();
    bool                     ok = false;
    try {
      ok = c.body(log);
    } catch (std::exception const& e) {
      log.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool   fast = secs <= c.budget_seconds;
    if (!fast) {
      log.push_back("over the time budget of " + std::to_string(static_cast<int>(c.budget_seconds)) + " s");
    }
    ok = ok && fast;
    if (c.info) {
      try {
        c.info(log);
      } catch (std::exception const& e) {
        log.push_back(std::string("(info) exception: ") + e.what());
      }
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << c.id << ": " << c.title << " [" << std::fixed
              << std::setprecision(2) << secs << " s]\n";
    for (auto const& l : log) {
      std::cout << "     " << l << "\n";
    }
    std::cout.flush();
  }
  std::cout << (9 - failed) << "/9 criteria passed\n";
  return failed;
}
