// Command-line front end: evaluate morphism programs, take Taylor expansions
// and homogeneous components, apply entire functions to vectors, and run the
// law-check suites.  All output is deterministic for fixed inputs and flags.
#include <CLI11.hpp>

#include <cohtaylor/analytic.hpp>
#include <cohtaylor/json_io.hpp>
#include <cohtaylor/lang.hpp>
#include <cohtaylor/laws.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace ct = cohtaylor;

namespace {

// Flags shared by the program-evaluating subcommands.
struct CommonOpts {
  std::string model;
  std::string semiring;
  std::string format = "json";
  unsigned long bang_degree = 2;
  unsigned long s_degree = 2;
  std::uint64_t seed = 1;  // only randomized commands read this
  bool no_validate = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--model", o.model,
                  "semantic model: rel, wrel-nat, wrel-rat, wcs, coh, nucs, pcoh-num");
  cmd->add_option("--semiring", o.semiring,
                  "pick the weighted-relation model by semiring: bool, nat-inf, rat-pos");
  cmd->add_option("--bang-degree", o.bang_degree, "bag-size bound of ! (default 2)");
  cmd->add_option("--s-degree", o.s_degree, "degree bound of S (default 2)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--seed", o.seed, "base seed for randomized generation");
  cmd->add_flag("--no-validate", o.no_validate, "skip validity checks on evaluated morphisms");
}

// --model / --semiring / COHTAYLOR_DEFAULT_MODEL, in that order of strength.
// A (model ...) form inside the program file still overrides all of them.
std::optional<ct::Model> resolve_model(const CommonOpts& o) {
  if (!o.model.empty() && !o.semiring.empty())
    ct::fail(ct::Errc::Parse, "--model and --semiring are mutually exclusive");
  if (!o.model.empty()) return ct::model_parse(o.model);
  if (!o.semiring.empty()) {
    switch (ct::semiring_parse(o.semiring)) {
      case ct::Semiring::Bool: return ct::Model::Rel;
      case ct::Semiring::NatInf: return ct::Model::WRelNat;
      case ct::Semiring::RatPos: return ct::Model::WRelRat;
    }
  }
  if (const char* env = std::getenv("COHTAYLOR_DEFAULT_MODEL"))
    if (*env) return ct::model_parse(env);
  return std::nullopt;
}

ct::Session make_session(const CommonOpts& o) {
  ct::Session se;
  if (auto m = resolve_model(o)) se.model = *m;
  se.bang_degree = o.bang_degree;
  se.s_degree = o.s_degree;
  se.validate_outputs = !o.no_validate;
  return se;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ct::fail(ct::Errc::Parse, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs a program file and returns its final expression's value.
ct::Mor run_file(const std::string& path, const CommonOpts& o, ct::Session& se) {
  se = make_session(o);
  ct::ProgramResult pr = ct::run_program(read_file(path), se);
  if (!pr.value) ct::fail(ct::Errc::Parse, path + ": the program has no result expression");
  return *pr.value;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_mor(const ct::Mor& f, const std::string& format) {
  if (format == "json") {
    std::cout << ct::mor_to_json(f).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "dom,cod,value\n";
    for (const auto& [pq, v] : f.e)
      std::cout << csv_field(ct::point_text(pq.first)) << ","
                << csv_field(ct::point_text(pq.second)) << "," << ct::scalar_to_string(v) << "\n";
    return;
  }
  std::cout << "model: " << ct::model_name(f.model()) << "\n";
  std::cout << "dom:   " << f.dom.describe() << "\n";
  std::cout << "cod:   " << f.cod.describe() << "\n";
  size_t w = 0;
  for (const auto& [pq, v] : f.e) w = std::max(w, ct::point_text(pq.first).size());
  for (const auto& [pq, v] : f.e)
    std::cout << "  " << std::left << std::setw(static_cast<int>(w)) << ct::point_text(pq.first)
              << " -> " << ct::point_text(pq.second) << "  =  " << ct::scalar_to_string(v) << "\n";
  std::cout << f.e.size() << (f.e.size() == 1 ? " entry\n" : " entries\n");
}

void print_vec(const ct::Vec& v, const std::string& format) {
  if (format == "json") {
    std::cout << ct::vec_to_json(v).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "point,value\n";
    for (const auto& [p, s] : v.coords)
      std::cout << csv_field(ct::point_text(p)) << "," << ct::scalar_to_string(s) << "\n";
    return;
  }
  std::cout << "web: " << v.web.describe() << "\n";
  size_t w = 0;
  for (const auto& [p, s] : v.coords) w = std::max(w, ct::point_text(p).size());
  for (const auto& [p, s] : v.coords)
    std::cout << "  " << std::left << std::setw(static_cast<int>(w)) << ct::point_text(p)
              << "  =  " << ct::scalar_to_string(s) << "\n";
  std::cout << v.coords.size() << (v.coords.size() == 1 ? " coordinate\n" : " coordinates\n");
}

int cmd_models(const std::string& format) {
  struct RowT {
    ct::Model m;
    const char* sums;
    const char* notes;
  };
  const std::vector<RowT> rows = {
      {ct::Model::Rel, "total", "plain relations"},
      {ct::Model::WRelNat, "total", "completed-natural weights"},
      {ct::Model::WRelRat, "total", "nonnegative-rational weights"},
      {ct::Model::Wcs, "partial", "coherence without a fixed diagonal"},
      {ct::Model::Coh, "partial", "classical coherence, neutral diagonal"},
      {ct::Model::Nucs, "partial", "three-valued coherence"},
      {ct::Model::PcohNum, "partial", "witness-bounded rational weights (sound-only checks)"},
  };
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows)
      out.push_back({{"model", ct::model_name(r.m)},
                     {"semiring", ct::semiring_name(ct::model_semiring(r.m))},
                     {"coherence", ct::model_has_coherence(r.m)},
                     {"sums", r.sums},
                     {"notes", r.notes}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "model,semiring,coherence,sums,notes\n";
    for (const auto& r : rows)
      std::cout << ct::model_name(r.m) << "," << ct::semiring_name(ct::model_semiring(r.m)) << ","
                << (ct::model_has_coherence(r.m) ? "yes" : "no") << "," << r.sums << ","
                << csv_field(r.notes) << "\n";
    return 0;
  }
  std::cout << std::left << std::setw(10) << "model" << std::setw(9) << "semiring" << std::setw(11)
            << "coherence" << std::setw(9) << "sums"
            << "notes\n";
  for (const auto& r : rows)
    std::cout << std::left << std::setw(10) << ct::model_name(r.m) << std::setw(9)
              << ct::semiring_name(ct::model_semiring(r.m)) << std::setw(11)
              << (ct::model_has_coherence(r.m) ? "yes" : "no") << std::setw(9) << r.sums << r.notes
              << "\n";
  return 0;
}

// lawcheck flags: every unset option keeps the full default grid on that axis.
struct LawOpts {
  std::vector<std::string> suites;
  std::string model;
  std::string semiring;
  std::string format = "table";
  std::uint64_t seed = 1;
  unsigned long web_size = 0;
  unsigned long bang_degree = 0;
  unsigned long s_degree = 0;
  unsigned long trials = 0;
};

int cmd_lawcheck(const LawOpts& o) {
  ct::LawParams P;
  P.base_seed = o.seed;
  CommonOpts mo;
  mo.model = o.model;
  mo.semiring = o.semiring;
  if (auto m = resolve_model(mo)) P.models = {*m};
  if (o.web_size != 0) P.webs = {o.web_size};
  if (o.bang_degree != 0) P.bang_degrees = {o.bang_degree};
  if (o.s_degree != 0) P.s_degrees = {o.s_degree};
  if (o.trials != 0) {
    P.seeds = o.trials;
    P.sdl_seeds = o.trials;
  }

  std::vector<ct::Suite> suites;
  if (o.suites.empty()) {
    suites = ct::all_suites();
  } else {
    for (const std::string& s : o.suites) {
      auto k = ct::suite_parse(s);
      if (!k) {
        std::string names;
        for (ct::Suite a : ct::all_suites()) names += std::string(" ") + ct::suite_name(a);
        ct::fail(ct::Errc::Parse, "unknown suite: " + s + " (available:" + names + ")");
      }
      suites.push_back(*k);
    }
  }

  std::vector<ct::CheckReport> reps = ct::run_suites(suites, P);
  size_t failures = 0;
  for (const auto& r : reps)
    if (!r.pass) ++failures;

  if (o.format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : reps)
      checks.push_back({{"suite", r.suite},
                        {"name", r.name},
                        {"config", r.config},
                        {"pass", r.pass},
                        {"detail", r.detail}});
    nlohmann::json out = {
        {"checks", checks}, {"total", reps.size()}, {"failures", failures}};
    std::cout << out.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "suite,name,config,status,detail\n";
    for (const auto& r : reps)
      std::cout << r.suite << "," << csv_field(r.name) << "," << csv_field(r.config) << ","
                << (r.pass ? "pass" : "FAIL") << "," << csv_field(r.detail) << "\n";
  } else {
    size_t w1 = 5, w2 = 5, w3 = 6;
    for (const auto& r : reps) {
      w1 = std::max(w1, r.suite.size());
      w2 = std::max(w2, r.name.size());
      w3 = std::max(w3, r.config.size());
    }
    for (const auto& r : reps) {
      std::cout << std::left << std::setw(static_cast<int>(w1 + 2)) << r.suite
                << std::setw(static_cast<int>(w2 + 2)) << r.name
                << std::setw(static_cast<int>(w3 + 2)) << r.config
                << (r.pass ? "pass" : "FAIL");
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << "\n";
    }
    std::cout << reps.size() << " checks, " << failures << " failure"
              << (failures == 1 ? "" : "s") << "\n";
  }
  return failures == 0 ? 0 : ct::exit_code(ct::Errc::OracleMismatch);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite-web toolkit for coherent Taylor expansion"};
  app.require_subcommand(1);

  CommonOpts eo, to, ho, fo;
  std::string eval_file, taylor_file, homog_file, fun_file, fun_vector, models_format = "table";
  unsigned long homog_n = 0;
  LawOpts lo;
  int rc = 0;

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate a program and print its morphism");
  c_eval->add_option("file", eval_file, "program file")->required();
  add_common(c_eval, eo);
  c_eval->callback([&] {
    ct::Session se;
    print_mor(run_file(eval_file, eo, se), eo.format);
  });

  CLI::App* c_taylor =
      app.add_subcommand("taylor", "Taylor-expand the program's final coKleisli morphism");
  c_taylor->add_option("file", taylor_file, "program file")->required();
  add_common(c_taylor, to);
  c_taylor->callback([&] {
    ct::Session se;
    ct::Mor f = run_file(taylor_file, to, se);
    print_mor(ct::taylor_functor_mor(f, se.s_degree), to.format);
  });

  CLI::App* c_homog = app.add_subcommand(
      "homog", "homogeneous component N of the program's final coKleisli morphism");
  c_homog->add_option("file", homog_file, "program file")->required();
  c_homog->add_option("n", homog_n, "component degree")->required();
  add_common(c_homog, ho);
  c_homog->callback([&] {
    ct::Session se;
    ct::Mor f = run_file(homog_file, ho, se);
    print_mor(ct::homogeneous_mor(f, homog_n, se.s_degree), ho.format);
  });

  CLI::App* c_fun = app.add_subcommand(
      "fun", "apply the program's final morphism as an entire function to a vector");
  c_fun->add_option("file", fun_file, "program file")->required();
  c_fun->add_option("vector", fun_vector, "vector JSON file")->required();
  add_common(c_fun, fo);
  c_fun->callback([&] {
    ct::Session se;
    ct::Mor f = run_file(fun_file, fo, se);
    ct::Vec x = ct::vec_from_json(nlohmann::json::parse(read_file(fun_vector)));
    print_vec(ct::fun_apply(f, x), fo.format);
  });

  CLI::App* c_law = app.add_subcommand("lawcheck", "run the diagram-equality suites");
  c_law->add_option("--suite", lo.suites, "suite name (repeatable; default: all)");
  c_law->add_option("--model", lo.model, "restrict the grid to one model");
  c_law->add_option("--semiring", lo.semiring, "restrict to the weighted model of a semiring");
  c_law->add_option("--seed", lo.seed, "base seed");
  c_law->add_option("--web-size", lo.web_size, "atoms per sampled base object");
  c_law->add_option("--bang-degree", lo.bang_degree, "bag-size bound of !");
  c_law->add_option("--s-degree", lo.s_degree, "degree bound of S");
  c_law->add_option("--trials", lo.trials, "seeds per configuration");
  c_law->add_option("--format", lo.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  c_law->callback([&] { rc = cmd_lawcheck(lo); });

  CLI::App* c_models = app.add_subcommand("models", "list the available semantic models");
  c_models->add_option("--format", models_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  c_models->callback([&] { rc = cmd_models(models_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  } catch (const ct::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ct::exit_code(e.code);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return ct::exit_code(ct::Errc::Internal);
  }
  return rc;
}
