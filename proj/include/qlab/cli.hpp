#pragma once

// Command-line front end.  run() is the whole program; tools/qlab.cpp only
// forwards argv.  Exit codes: 0 success, 1 a check returned false (or could
// not be decided), 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlab/abelianization.hpp"
#include "qlab/braid.hpp"
#include "qlab/kernel.hpp"
#include "qlab/parser.hpp"
#include "qlab/pipeline.hpp"
#include "qlab/quandle.hpp"
#include "qlab/sl2_reps.hpp"
#include "qlab/tietze.hpp"
#include "qlab/todd_coxeter.hpp"
#include "qlab/tym.hpp"
#include "qlab/verify.hpp"

namespace qlab::cli {

  inline constexpr int exit_ok      = 0;
  inline constexpr int exit_failed  = 1;
  inline constexpr int exit_usage   = 2;

  /// A path to an existing file is read; anything else is taken literally.
  inline std::string read_input(std::string const& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
      std::ifstream in(arg, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    return arg;
  }

  /// hardware_concurrency, capped by QUANDLE_LAB_THREADS when set.
  inline unsigned thread_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (char const* env = std::getenv("QUANDLE_LAB_THREADS")) {
      char* end = nullptr;
      long  cap = std::strtol(env, &end, 10);
      if (end != env && cap >= 1) {
        n = std::min<unsigned>(n, static_cast<unsigned>(cap));
      }
    }
    return n;
  }

  /// "A..B" or a single "A".
  inline std::vector<long long> parse_k_range(std::string const& s) {
    auto to_ll = [&](std::string const& t) {
      std::size_t pos = 0;
      long long   v   = std::stoll(t, &pos);
      if (pos != t.size()) {
        throw std::invalid_argument(t);
      }
      return v;
    };
    std::vector<long long> ks;
    try {
      auto dots = s.find("..");
      long long a = to_ll(dots == std::string::npos ? s : s.substr(0, dots));
      long long b = dots == std::string::npos ? a : to_ll(s.substr(dots + 2));
      if (a < 1 || b < a) {
        throw std::invalid_argument(s);
      }
      for (long long k = a; k <= b; ++k) {
        ks.push_back(k);
      }
    } catch (std::logic_error const&) {
      throw CLI::ValidationError("--k-range", "expected A..B with 1 <= A <= B, got '" + s + "'");
    }
    return ks;
  }

  /// Lines of the form "name -> word" (or "name = word"); '#' starts a
  /// comment and ';' separates entries.  Returns the images in source-generator
  /// order over the braid alphabet.
  inline std::vector<Word> parse_images(std::string_view text, Alphabet const& source) {
    std::vector<std::optional<Word>> out(source.size());
    std::size_t                      start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find_first_of(";\n", start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(start, end - start);
      if (auto h = line.find('#'); h != std::string_view::npos) {
        line = line.substr(0, h);
      }
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
        std::size_t arrow = line.find("->");
        std::size_t skip  = 2;
        if (arrow == std::string_view::npos) {
          arrow = line.find('=');
          skip  = 1;
        }
        if (arrow == std::string_view::npos) {
          throw ParseError("expected 'name -> word'", start);
        }
        std::string name(line.substr(0, arrow));
        name.erase(0, name.find_first_not_of(" \t\r"));
        name.erase(name.find_last_not_of(" \t\r") + 1);
        auto g = source.find(name);
        if (!g) {
          throw UnknownGeneratorError(name, start);
        }
        try {
          out[*g] = parse_word(line.substr(arrow + skip), braid_alphabet());
        } catch (ParseError const& e) {
          throw ParseError(std::string("in image of ") + name + ": " + e.what(), start + arrow + skip);
        }
      }
      start = end + 1;
    }
    std::vector<Word> images;
    for (std::size_t g = 0; g < out.size(); ++g) {
      if (!out[g]) {
        throw MissingImageError("no image for generator " + source.name(g));
      }
      images.push_back(*out[g]);
    }
    return images;
  }

  struct Context {
    std::ostream& out;
    std::ostream& err;
    bool          json = false;

    void emit(nlohmann::json const& j, std::string const& text) const {
      if (json) {
        out << j.dump(2) << '\n';
      } else {
        out << text;
        if (!text.empty() && text.back() != '\n') {
          out << '\n';
        }
      }
    }
  };

  inline std::string join_lines(std::vector<std::string> const& v) {
    std::string s;
    for (auto const& l : v) {
      s += l + '\n';
    }
    return s;
  }

  // --- group ----------------------------------------------------------------

  inline int group_abelianize(Context const& c, std::string const& in) {
    Presentation p = parse_presentation(read_input(in));
    auto         a = abelianization(p);
    c.emit({{"statement", "abelianization via Smith normal form"},
            {"abelianization", to_json(a)}},
           a.to_string());
    return exit_ok;
  }

  inline int group_kernel(Context const& c, std::string const& in, long long r,
                          std::vector<long long> degrees, bool simplify) {
    Presentation p = parse_presentation(read_input(in));
    if (degrees.empty()) {
      degrees.assign(p.number_of_generators(), 1);
    }
    CyclicHom    h(p, r, degrees);
    Presentation k = kernel_presentation(h);
    if (simplify) {
      k = tietze_simplify(k);
    }
    auto j         = presentation_json(k);
    j["statement"] = "Reidemeister-Schreier presentation of the kernel of G -> Z/" + std::to_string(r);
    j["modulus"]   = r;
    j["simplified"] = simplify;
    c.emit(j, k.to_string() + "\nabelianization: " + abelianization(k).to_string());
    return exit_ok;
  }

  inline int group_simplify(Context const& c, std::string const& in, std::size_t budget) {
    Presentation p = parse_presentation(read_input(in));
    TietzeStats  st;
    Presentation q = tietze_simplify(p, budget, &st);
    auto         j = presentation_json(q);
    j["statement"] = "Tietze simplification preserves the group";
    j["steps"]     = st.steps;
    j["budget_exhausted"] = st.budget_exhausted;
    c.emit(j, q.to_string());
    return exit_ok;
  }

  inline int group_enumerate(Context const& c, std::string const& in, std::size_t max) {
    Presentation p = parse_presentation(read_input(in));
    auto         t = todd_coxeter(p, max);
    nlohmann::json j{{"statement", "Todd-Coxeter enumeration of the cosets of the trivial subgroup"},
                     {"max_cosets", max}};
    if (!t) {
      j["complete"] = false;
      c.emit(j, "enumeration exceeded " + std::to_string(max) + " cosets");
      return exit_failed;
    }
    j["complete"] = true;
    j["order"]    = t->size();
    c.emit(j, "order " + std::to_string(t->size()));
    return exit_ok;
  }

  // --- braid ----------------------------------------------------------------

  inline int braid_equal(Context const& c, std::string const& a, std::string const& b) {
    Word u = parse_braid(read_input(a));
    Word v = parse_braid(read_input(b));
    bool eq = braid_eq(u, v);
    c.emit({{"statement", "equality in B3 via the reduced Burau representation"},
            {"lhs", braid_string(u)},
            {"rhs", braid_string(v)},
            {"equal", eq}},
           eq ? "equal" : "not equal");
    return eq ? exit_ok : exit_failed;
  }

  // --- suciu ----------------------------------------------------------------

  inline int suciu_verify(Context const& c, long long k, std::string const& group_in,
                          std::string const& images_in) {
    Presentation g = group_in.empty() ? suciu_group(k) : parse_presentation(read_input(group_in));
    std::vector<Word> imgs = images_in.empty() ? suciu_images(k).as_vector()
                                               : parse_images(read_input(images_in), g.alphabet);
    auto chk = verify_hom(g, b3_presentation(), imgs, BurauOracle{});
    nlohmann::json rel = nlohmann::json::array();
    std::string    text;
    for (std::size_t i = 0; i < g.relators.size(); ++i) {
      rel.push_back({{"relator", g.word_string(g.relators[i])}, {"maps_to_identity", bool(chk.relator_ok[i])}});
      if (!chk.relator_ok[i]) {
        text += "relator " + std::to_string(i + 1) + " (" + g.word_string(g.relators[i])
                + ") does not map to 1\n";
      }
    }
    bool ok = chk.holds();
    text += ok ? "homomorphism relators verified" : "homomorphism check failed";
    c.emit({{"statement", "generator images define a homomorphism G_k -> B3"},
            {"k", k},
            {"oracle", BurauOracle::name()},
            {"relators", rel},
            {"verified", ok}},
           text);
    return ok ? exit_ok : exit_failed;
  }

  inline int suciu_type(Context const& c, long long k, long long imax, Labeling lab) {
    auto cert = type_certificate(k, imax, lab);
    auto j    = to_json(cert);
    j["statement"] = "type of the knot quandle is infinite";
    std::string text = "k=" + std::to_string(k) + " labeling=" + to_string(lab) + ": ";
    text += cert.infinite() ? "type = infinity" : "type not certified";
    text += "\n  witnesses for i=1.." + std::to_string(imax) + ": "
            + (cert.noncommutation.all_witnessed ? "all" : "incomplete");
    text += "\n  closed form for all i >= 1: "
            + std::string(cert.noncommutation.closed_form_verified ? "verified" : "not verified");
    if (!cert.noncommutation.note.empty()) {
      text += "\n  " + cert.noncommutation.note;
    }
    c.emit(j, text);
    return cert.infinite() ? exit_ok : exit_failed;
  }

  inline int suciu_distinguish(Context const& c, std::vector<long long> const& ks,
                               SolverOptions const& opt) {
    auto r         = distinguish_family(ks, opt);
    auto j         = to_json(r);
    j["statement"] = "double-cover kernels are pairwise distinguished by their invariants";
    std::string text;
    for (auto const& e : r.entries) {
      text += "k=" + std::to_string(e.k) + ": ";
      if (!e.failed_stage.empty()) {
        text += "failed at " + e.failed_stage + " (" + e.error + ")\n";
        continue;
      }
      text += "kernel " + e.kernel.to_string() + "\n    abelianization "
              + e.abelianization.to_string() + ", nonabelian SL(2,C) classes "
              + std::to_string(e.reps.count()) + " (" + std::to_string(e.reps.irreducible.size())
              + " irreducible, " + std::to_string(e.reps.reducible.size()) + " reducible)";
      if (e.reps.positive_dimensional()) {
        text += ", positive-dimensional";
      }
      text += '\n';
    }
    text += r.pairwise_distinct() ? "pairwise distinct" : "not pairwise distinct";
    c.emit(j, text);
    return r.pairwise_distinct() ? exit_ok : exit_failed;
  }

  inline int suciu_reproduce(Context const& c, ReproduceOptions const& opt) {
    auto stages = reproduce_paper(opt);
    bool all    = true;
    nlohmann::json arr = nlohmann::json::array();
    std::string    text;
    std::string    first_failed;
    for (auto const& s : stages) {
      all = all && s.passed;
      if (!s.passed && first_failed.empty()) {
        first_failed = s.name;
      }
      arr.push_back({{"stage", s.name},
                     {"statement", s.statement},
                     {"passed", s.passed},
                     {"detail", s.detail},
                     {"seconds", s.seconds},
                     {"data", s.data}});
      text += std::string(s.passed ? "PASS " : "FAIL ") + s.name + ": " + s.statement + "\n     "
              + s.detail + "\n";
    }
    text += all ? "all stages passed" : "failed at stage " + first_failed;
    nlohmann::json j{{"stages", arr}, {"passed", all}};
    if (!all) {
      j["failed_stage"] = first_failed;
    }
    c.emit(j, text);
    return all ? exit_ok : exit_failed;
  }

  // --- quandle --------------------------------------------------------------

  inline int quandle_check(Context const& c, std::string const& in) {
    auto rep = check_axioms(parse_quandle_table(read_input(in)));
    nlohmann::json j{{"statement", "quandle axioms"}, {"valid", rep.valid()}, {"summary", rep.summary()}};
    if (rep.idempotence) {
      j["idempotence_fails_at"] = *rep.idempotence;
    }
    if (rep.right_invertible) {
      j["column_not_bijective"] = *rep.right_invertible;
    }
    if (rep.distributive) {
      j["distributivity_fails_at"] = *rep.distributive;
    }
    c.emit(j, rep.summary());
    return rep.valid() ? exit_ok : exit_failed;
  }

  // Parses and validates; on failure reports like `quandle check`.
  inline std::optional<QuandleTable> load_quandle(Context const& c, std::string const& in) {
    auto rep = check_axioms(parse_quandle_table(read_input(in)));
    if (!rep.valid()) {
      c.emit({{"statement", "quandle axioms"}, {"valid", false}, {"summary", rep.summary()}},
             "not a quandle: " + rep.summary());
      return std::nullopt;
    }
    return *rep.table;
  }

  inline int quandle_type_cmd(Context const& c, std::string const& in) {
    auto q = load_quandle(c, in);
    if (!q) {
      return exit_failed;
    }
    BigInt t = quandle_type(*q);
    c.emit({{"statement", "type = lcm of the orders of the right translations"},
            {"size", q->size()},
            {"type", t.str()}},
           "type " + t.str());
    return exit_ok;
  }

  inline int quandle_asgroup(Context const& c, std::string const& in, long long r) {
    auto q = load_quandle(c, in);
    if (!q) {
      return exit_failed;
    }
    Presentation p = associated_group_presentation(*q, r);
    auto         j = presentation_json(p);
    j["statement"] = r == 0 ? "associated group As(Q)" : "associated r-group As_r(Q)";
    j["modulus"]   = r;
    j["orbits"]    = orbits(*q).size();
    c.emit(j, p.to_string() + "\nabelianization: " + abelianization(p).to_string());
    return exit_ok;
  }

  // --- reps -----------------------------------------------------------------

  inline int reps_count(Context const& c, std::string const& in, SolverOptions const& opt) {
    Presentation p   = parse_presentation(read_input(in));
    auto         rep = count_nonabelian_classes(p, opt);
    auto         j   = to_json(rep);
    j["statement"]   = "nonabelian SL(2,C) representation classes";
    std::string text = "nonabelian classes: " + std::to_string(rep.count()) + " ("
                       + std::to_string(rep.irreducible.size()) + " irreducible, "
                       + std::to_string(rep.reducible.size()) + " reducible)";
    if (rep.positive_dimensional()) {
      text += "\nwarning: positive-dimensional component; count lists sample points";
    }
    auto line = [](RepPoint const& pt) {
      std::ostringstream s;
      s.precision(10);
      s << "  " << to_string(pt.stratum) << " trA=" << pt.tr_a << " trB=" << pt.tr_b
        << " trAB=" << pt.tr_ab << " residual=" << pt.residual << " dim=" << pt.local_dimension;
      return s.str();
    };
    // a curve yields one point per seed; keep the text readable
    std::size_t const shown = 20;
    std::size_t       n     = 0;
    for (auto const* list : {&rep.irreducible, &rep.reducible}) {
      for (auto const& pt : *list) {
        if (n++ < shown) {
          text += "\n" + line(pt);
        }
      }
    }
    if (n > shown) {
      text += "\n  ... " + std::to_string(n - shown) + " more (--json lists all)";
    }
    c.emit(j, text);
    return exit_ok;
  }

  // --------------------------------------------------------------------------

  inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr) {
    CLI::App app{"quandle-lab: finitely presented groups, braids and quandles"};
    app.require_subcommand(1, 1);
    Context ctx{out, err};
    app.add_flag("--json", ctx.json, "machine-readable output");

    std::string in, in2, group_file, images_file, k_range = "2..5", labeling = "as_displayed";
    long long   r = 2, k = 1, imax = 200;
    std::size_t max = default_max_cosets, budget = 10'000;
    std::vector<long long> degrees;
    bool        simplify = false, corrupt = false;
    SolverOptions opt;
    opt.threads  = thread_count();
    auto add_solver = [&](CLI::App* a) {
      a->add_option("--seeds", opt.seeds, "random starts per stratum")->check(CLI::PositiveNumber);
      a->add_option("--rng-seed", opt.rng_seed, "base seed");
      a->add_option("--threads", opt.threads, "worker threads (capped by QUANDLE_LAB_THREADS)")
          ->check(CLI::PositiveNumber);
    };
    // every subcommand accepts --json after its own arguments too
    auto json_flag = [&](CLI::App* a) { a->add_flag("--json", ctx.json, "machine-readable output"); };

    auto* group = app.add_subcommand("group", "finitely presented groups");
    group->require_subcommand(1, 1);
    auto* g_ab = group->add_subcommand("abelianize", "abelianization invariants");
    g_ab->add_option("input", in, "presentation file or inline string")->required();
    auto* g_ker = group->add_subcommand("kernel", "kernel of G -> Z/r");
    g_ker->add_option("input", in, "presentation file or inline string")->required();
    g_ker->add_option("--mod", r, "modulus r (0 for Z)")->required()->check(CLI::NonNegativeNumber);
    g_ker->add_option("--degrees", degrees, "image of each generator (default all 1)")->delimiter(',');
    g_ker->add_flag("--simplify", simplify, "run Tietze simplification on the result");
    auto* g_simp = group->add_subcommand("simplify", "Tietze simplification");
    g_simp->add_option("input", in, "presentation file or inline string")->required();
    g_simp->add_option("--budget", budget, "maximum number of moves");
    auto* g_enum = group->add_subcommand("enumerate", "Todd-Coxeter order of a finite group");
    g_enum->add_option("input", in, "presentation file or inline string")->required();
    g_enum->add_option("--max", max, "coset limit")->check(CLI::PositiveNumber);
    for (auto* a : {g_ab, g_ker, g_simp, g_enum}) {
      json_flag(a);
    }

    auto* braid = app.add_subcommand("braid", "three-strand braids");
    braid->require_subcommand(1, 1);
    auto* b_eq = braid->add_subcommand("eq", "equality of two braid words");
    b_eq->add_option("w1", in, "braid word in sig, tau")->required();
    b_eq->add_option("w2", in2, "braid word in sig, tau")->required();
    json_flag(b_eq);

    auto* suciu = app.add_subcommand("suciu", "the ribbon-knot family G_k");
    suciu->require_subcommand(1, 1);
    auto* s_iso = suciu->add_subcommand("verify-iso", "check the braid images of x, y, z");
    s_iso->add_option("--k", k, "family index")->required()->check(CLI::PositiveNumber);
    s_iso->add_option("--group", group_file, "override the presentation of G_k");
    s_iso->add_option("--images", images_file, "override the images ('x -> word' per line)");
    auto* s_type = suciu->add_subcommand("type", "certify that the quandle type is infinite");
    s_type->add_option("--k", k, "family index")->required()->check(CLI::PositiveNumber);
    s_type->add_option("--imax", imax, "finite witness range")->check(CLI::PositiveNumber);
    s_type->add_option("--labeling", labeling, "as_displayed or swapped")
        ->check(CLI::IsMember({"as_displayed", "swapped"}));
    auto* s_dist = suciu->add_subcommand("distinguish", "compare double-cover kernels");
    s_dist->add_option("--k-range", k_range, "A..B");
    add_solver(s_dist);
    auto* s_rep = suciu->add_subcommand("reproduce", "run every family check");
    add_solver(s_rep);
    s_rep->add_option("--imax", imax, "finite witness range")->check(CLI::PositiveNumber);
    s_rep->add_flag("--corrupt-relator", corrupt, "negative control: damage a relator of G_1");
    for (auto* a : {s_iso, s_type, s_dist, s_rep}) {
      json_flag(a);
    }

    auto* quandle = app.add_subcommand("quandle", "finite quandles from operation tables");
    quandle->require_subcommand(1, 1);
    auto* q_check = quandle->add_subcommand("check", "check the quandle axioms");
    auto* q_type  = quandle->add_subcommand("type", "type of the quandle");
    auto* q_as    = quandle->add_subcommand("asgroup", "associated group presentation");
    for (auto* a : {q_check, q_type, q_as}) {
      a->add_option("input", in, "table file or inline string")->required();
      json_flag(a);
    }
    q_as->add_option("--mod", r, "adjoin x^r (0 for none)")->check(CLI::NonNegativeNumber);
    q_as->get_option("--mod")->default_val(0);

    auto* reps = app.add_subcommand("reps", "SL(2,C) representations");
    reps->require_subcommand(1, 1);
    auto* r_count = reps->add_subcommand("count", "count nonabelian classes of a 2-generator group");
    r_count->add_option("input", in, "presentation file or inline string")->required();
    add_solver(r_count);
    json_flag(r_count);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(std::move(rev));
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << '\n';
      return exit_usage;
    }
    opt.threads = std::min(opt.threads, thread_count());

    try {
      if (g_ab->parsed()) return group_abelianize(ctx, in);
      if (g_ker->parsed()) return group_kernel(ctx, in, r, degrees, simplify);
      if (g_simp->parsed()) return group_simplify(ctx, in, budget);
      if (g_enum->parsed()) return group_enumerate(ctx, in, max);
      if (b_eq->parsed()) return braid_equal(ctx, in, in2);
      if (s_iso->parsed()) return suciu_verify(ctx, k, group_file, images_file);
      if (s_type->parsed()) {
        return suciu_type(ctx, k, imax, labeling == "swapped" ? Labeling::swapped : Labeling::as_displayed);
      }
      if (s_dist->parsed()) return suciu_distinguish(ctx, parse_k_range(k_range), opt);
      if (s_rep->parsed()) {
        ReproduceOptions ro;
        ro.solver          = opt;
        ro.i_max           = imax;
        ro.corrupt_relator = corrupt;
        return suciu_reproduce(ctx, ro);
      }
      if (q_check->parsed()) return quandle_check(ctx, in);
      if (q_type->parsed()) return quandle_type_cmd(ctx, in);
      if (q_as->parsed()) return quandle_asgroup(ctx, in, r);
      if (r_count->parsed()) return reps_count(ctx, in, opt);
    } catch (CLI::ValidationError const& e) {
      err << "usage error: " << e.what() << '\n';
      return exit_usage;
    } catch (ParseError const& e) {
      err << "input error: " << e.what() << '\n';
      return exit_usage;
    } catch (DimensionError const& e) {
      err << "input error: " << e.what() << '\n';
      return exit_usage;
    } catch (OracleInapplicable const& e) {
      err << "undecided: " << e.what() << '\n';
      return exit_failed;
    } catch (std::exception const& e) {
      err << "check failed: " << e.what() << '\n';
      return exit_failed;
    }
    err << "usage error: no subcommand\n";
    return exit_usage;
  }

  inline int run(int argc, char const* const* argv, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
  }

}  // namespace qlab::cli
