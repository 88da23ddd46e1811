// Command-line front end: certify, verify, bruhat, oracle.
//
// Machine-readable JSON goes to standard output (or --out), a short human
// summary to standard error.
//
// Exit codes: 0 success, 1 certificate mismatch, 2 search budget exhausted,
// 3 invalid input, 4 oracle cap exceeded.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "normgen/normgen.hpp"

namespace {

  using normgen::io::json;

  enum ExitCode : int {
    ok             = 0,
    mismatch       = 1,
    budget         = 2,
    invalid        = 3,
    cap            = 4,
  };

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw normgen::invalid_input("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw normgen::invalid_input(path + ": " + e.what());
    }
  }

  void write_output(std::string const& text, std::string const& out) {
    if (out.empty()) {
      std::cout << text << '\n';
      return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      throw normgen::invalid_input("cannot write " + out);
    }
    f << text << '\n';
  }

  template <normgen::Field F>
  normgen::GroupMatrix<F> read_matrix(std::string const& path,
                                      F const&           f,
                                      std::size_t        n) {
    auto m = normgen::io::matrix_from_json(read_json_file(path), f);
    if (m.size() != n) {
      throw normgen::invalid_input(path + " is " + std::to_string(m.size())
                                   + "x" + std::to_string(m.size())
                                   + ", expected n = " + std::to_string(n));
    }
    return m;
  }

  // A genset file is a matrix, an array of matrices, or {"elements": [...]}.
  template <normgen::Field F>
  std::vector<normgen::GroupMatrix<F>>
  read_genset(std::string const& path, F const& f, std::size_t n) {
    auto j = read_json_file(path);
    if (j.is_object() && j.contains("elements")) {
      j = j["elements"];
    }
    if (j.is_object()) {
      j = json::array({j});
    }
    std::vector<normgen::GroupMatrix<F>> out;
    for (auto const& m : j) {
      out.push_back(normgen::io::matrix_from_json(m, f));
      if (out.back().size() != n) {
        throw normgen::invalid_input("generating set element has wrong size");
      }
    }
    return out;
  }

  struct CertifyArgs {
    std::string   field;
    std::size_t   n = 0;
    std::string   target;
    std::string   generator;
    std::string   genset;
    std::uint64_t seed   = 1;
    std::size_t   budget = normgen::default_search_budget;
    std::string   out;
  };

  int run_certify(CertifyArgs const& a) {
    auto const spec = normgen::io::parse_field_flag(a.field);
    return normgen::visit_field(spec, [&](auto const& f) -> int {
      using F = std::decay_t<decltype(f)>;
      auto const          target = read_matrix(a.target, f, a.n);
      normgen::Randomness rng(a.seed);
      normgen::Certificate<F> cert = [&] {
        if (!a.generator.empty()) {
          normgen::RegularBorelElement<F> t(read_matrix(a.generator, f, a.n));
          return normgen::decompose_as_conjugates_of(target, t, rng, a.budget);
        }
        normgen::GeneratingSet<F> x(read_genset(a.genset, f, a.n));
        return normgen::decompose_full(target, x, rng, a.budget);
      }();
      if (!normgen::verify_certificate(cert)) {
        std::cerr << "internal error: certificate failed verification\n";
        return mismatch;
      }
      write_output(normgen::io::certificate_to_json(cert).dump(), a.out);
      std::cerr << "length " << cert.length() << ", bound claimed "
                << cert.meta.bound_claimed << '\n';
      return ok;
    });
  }

  int run_verify(std::string const& path) {
    auto const j = read_json_file(path);
    if (!j.is_object() || !j.contains("field")) {
      throw normgen::invalid_input("certificate lacks \"field\"");
    }
    auto const spec = normgen::io::field_from_json(j["field"]);
    return normgen::visit_field(spec, [&](auto const& f) -> int {
      auto const cert = normgen::io::certificate_from_json(j, f);
      for (auto const& l : cert.word) {
        if (l.base_index >= cert.base.size()
            || (l.exponent != 1 && l.exponent != -1)) {
          throw normgen::invalid_input("malformed letter in word");
        }
      }
      if (normgen::verify_certificate(cert)) {
        std::cerr << "valid: length " << cert.length() << '\n';
        return ok;
      }
      std::cout << json{{"recomputed",
                         normgen::io::matrix_to_json(normgen::evaluate(cert))}}
                       .dump()
                << '\n';
      std::cerr << "MISMATCH: word does not evaluate to the target\n";
      return mismatch;
    });
  }

  int run_bruhat(std::string const& path) {
    auto const j    = read_json_file(path);
    auto const spec = normgen::io::matrix_field(j);
    return normgen::visit_field(spec, [&](auto const& f) -> int {
      auto const g  = normgen::io::matrix_from_json(j, f);
      auto const bf = normgen::bruhat_decompose(g);
      auto const bc = normgen::big_cell_decompose(g);
      json       out{{"u", normgen::io::matrix_to_json(bf.u)},
                     {"w", bf.w},
                     {"weyl_rep", normgen::io::matrix_to_json(
                                      normgen::weyl_rep(f, bf.w))},
                     {"b", normgen::io::matrix_to_json(bf.b)},
                     {"longest", bf.w == normgen::longest_element(g.size())},
                     {"big_cell", nullptr}};
      if (bc) {
        out["big_cell"] = {{"lower", normgen::io::matrix_to_json(bc->lower)},
                           {"torus", normgen::io::matrix_to_json(bc->torus)},
                           {"upper", normgen::io::matrix_to_json(bc->upper)}};
      }
      std::cout << out.dump() << '\n';
      std::cerr << "Bruhat cell w = [";
      for (std::size_t i = 0; i < bf.w.size(); ++i) {
        std::cerr << (i ? "," : "") << bf.w[i];
      }
      std::cerr << "]\n";
      return ok;
    });
  }

  struct OracleArgs {
    std::string                mode;
    std::size_t                n = 2;
    std::uint64_t              p = 3;
    std::string                classes;
    std::optional<std::size_t> max_classes;
    std::size_t                cap = 1'000'000;
  };

  std::vector<std::size_t> parse_class_list(std::string const& s) {
    std::vector<std::size_t> out;
    std::stringstream        ss(s);
    std::string              item;
    while (std::getline(ss, item, ',')) {
      auto const v = normgen::detail::parse_integer(item);
      if (v < 0 || !v.fits_ulong_p()) {
        throw normgen::invalid_input("bad class index \"" + item + "\"");
      }
      out.push_back(v.get_ui());
    }
    return out;
  }

  json classes_json(normgen::oracle::GroupTable const& g) {
    json cl = json::array();
    for (std::size_t c = 0; c < g.classes().size(); ++c) {
      cl.push_back(
          {{"index", c},
           {"size", g.classes()[c].size()},
           {"inverse_class", g.class_inverse(c)},
           {"representative",
            normgen::io::matrix_to_json(g.element(g.classes()[c].front()))}});
    }
    return cl;
  }

  int run_oracle(OracleArgs const& a) {
    namespace orc = normgen::oracle;
    orc::Caps caps;
    caps.max_elements = a.cap;
    orc::GroupTable g(a.n, a.p, caps);
    g.cache_products();
    json report{{"group", g.name()},
                {"order", g.order()},
                {"classes", classes_json(g)},
                {"results", json::array()},
                {"delta", nullptr},
                {"delta_k", nullptr},
                {"note",
                 "exact computation over a finite field; a consistency check, "
                 "not an instance of the infinite-field bounds"}};
    if (a.mode == "diameter") {
      orc::ClassSet cs;
      if (a.classes.empty()) {
        for (std::size_t c = 0; c < g.classes().size(); ++c) {
          cs.push_back(c);
        }
      } else {
        cs = parse_class_list(a.classes);
      }
      auto const norms     = orc::ball_norms(g, cs);
      bool       generates = true;
      int        diameter  = 0;
      for (int v : norms) {
        generates = generates && v != orc::unreachable;
        diameter  = std::max(diameter, v);
      }
      report["results"].push_back({{"classSet", orc::symmetrize(g, cs)},
                                   {"generates", generates},
                                   {"diameter", generates ? json(diameter)
                                                          : json(nullptr)}});
      std::cerr << g.name() << ": "
                << (generates ? "diameter " + std::to_string(diameter)
                              : std::string("does not normally generate"))
                << '\n';
    } else if (a.mode == "delta") {
      auto const rep = orc::delta(g, a.max_classes, caps);
      for (auto const& r : rep.results) {
        report["results"].push_back(
            {{"classSet", r.class_set},
             {"generates", r.generates},
             {"diameter", r.generates ? json(r.diameter) : json(nullptr)}});
      }
      report["delta"]         = rep.delta;
      report["delta_k"]       = rep.delta_k;
      report["delta_witness"] = rep.delta_witness;
      report["witnesses"]     = rep.witnesses;
      std::cerr << g.name() << ": Delta = " << rep.delta << '\n';
    } else {
      auto const rep = orc::example64_analog(a.n, a.p, caps);
      report["results"].push_back(
          {{"classSet", orc::symmetrize(g, {rep.class_index})},
           {"generates", rep.generates},
           {"diameter", rep.generates ? json(rep.diameter) : json(nullptr)}});
      report["example64"]
          = {{"element", "E_{1n}(1)"},
             {"class_index", rep.class_index},
             {"class_size", rep.class_size},
             {"diameter", rep.generates ? json(rep.diameter) : json(nullptr)},
             {"rank", rep.rank},
             {"rank_over_two", rep.rank % 2 == 0
                                   ? std::to_string(rep.rank / 2)
                                   : std::to_string(rep.rank) + "/2"}};
      std::cerr << g.name() << ": class of E_1n(1) has diameter "
                << rep.diameter << " (rank " << rep.rank
                << "; finite-field analog only)\n";
    }
    std::cout << report.dump() << '\n';
    return ok;
  }

  std::uint64_t default_seed() {
    if (char const* s = std::getenv("NORMGEN_SEED")) {
      auto const v = normgen::detail::parse_integer(s);
      if (v >= 0 && v.fits_ulong_p()) {
        return v.get_ui();
      }
      throw normgen::invalid_input("NORMGEN_SEED is not a valid seed");
    }
    return 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact factorisation certificates and word-norm oracles for SL_n"};
  app.require_subcommand(1);

  CertifyArgs certify;
  auto*       c = app.add_subcommand("certify", "write g as conjugates of t or X");
  c->add_option("--field", certify.field, "Q or Fp:<p>")->required();
  c->add_option("--n", certify.n, "matrix dimension")->required();
  c->add_option("--target", certify.target, "target matrix JSON")->required();
  auto* gen = c->add_option("--generator", certify.generator,
                            "upper triangular t with distinct diagonal");
  auto* gs  = c->add_option("--genset", certify.genset,
                            "normal generating set X (JSON)");
  gen->excludes(gs);
  auto* seed_opt = c->add_option("--seed", certify.seed, "random seed");
  c->add_option("--budget", certify.budget, "samples per search");
  c->add_option("--out", certify.out, "output file (default: stdout)");

  std::string verify_path;
  auto*       v = app.add_subcommand("verify", "check a certificate");
  v->add_option("file", verify_path)->required();

  std::string bruhat_path;
  auto*       b = app.add_subcommand("bruhat", "Bruhat and big-cell forms");
  b->add_option("--matrix", bruhat_path)->required();

  OracleArgs oracle;
  auto*      o = app.add_subcommand("oracle", "brute-force finite-group oracle");
  o->add_option("mode", oracle.mode, "diameter | delta | example64")
      ->required()
      ->check(CLI::IsMember({"diameter", "delta", "example64"}));
  o->add_option("--n", oracle.n)->required();
  o->add_option("--p", oracle.p)->required();
  o->add_option("--classes", oracle.classes, "comma-separated class indices");
  o->add_option("--max-classes", oracle.max_classes);
  o->add_option("--cap", oracle.cap, "maximum group order");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return invalid;
  }

  try {
    if (c->parsed()) {
      if (certify.generator.empty() && certify.genset.empty()) {
        throw normgen::invalid_input("one of --generator, --genset is required");
      }
      if (seed_opt->count() == 0) {
        certify.seed = default_seed();
      }
      return run_certify(certify);
    }
    if (v->parsed()) {
      return run_verify(verify_path);
    }
    if (b->parsed()) {
      return run_bruhat(bruhat_path);
    }
    return run_oracle(oracle);
  } catch (normgen::search_exhausted const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return budget;
  } catch (normgen::cap_exceeded const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cap;
  } catch (normgen::error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return invalid;
  }
}
