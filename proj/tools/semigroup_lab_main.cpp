// Command-line front end: every checker and computation as a subcommand with
// machine-readable output.
//
// Exit codes: 0 pass / result, 1 mathematical witness or negative outcome,
// 2 usage or parse error, 3 budget misuse.

#include "sgl/json_io.hpp"
#include "sgl/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using sgl::Json;
using sgl::Rational;

struct CommonOpts {
  std::string model;
  int depth = 3;
  int radius = 3;
  std::string eps = "1/10";
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "json";
};

constexpr int kMaxDepth = 10;
constexpr int kMaxRadius = 24;

Rational parse_eps(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(sgl::BigInt(text));
  return Rational(sgl::BigInt(text.substr(0, slash)),
                  sgl::BigInt(text.substr(slash + 1)));
}

Json make_envelope(const CommonOpts& opts, const std::string& command) {
  Json j;
  j["schema"] = sgl::kSchemaVersion;
  j["tool"] = Json{{"name", sgl::kToolName}, {"version", sgl::kToolVersion}};
  Json cfg;
  cfg["command"] = command;
  if (!opts.model.empty()) cfg["model"] = opts.model;
  cfg["depth"] = opts.depth;
  cfg["radius"] = opts.radius;
  cfg["eps"] = opts.eps;
  cfg["seed"] = opts.seed;
  j["config"] = cfg;
  return j;
}

int emit(const CommonOpts& opts, const Json& j, int code) {
  std::string text;
  if (opts.format == "json") {
    text = j.dump(2);
    text += "\n";
  } else {
    text = j["config"]["command"].get<std::string>() + ": " +
           j["result"].dump(2) + "\n";
  }
  if (opts.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << opts.output << "\n";
      return 2;
    }
    out << text;
  }
  return code;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_model = true) {
  auto* m = cmd->add_option("--model", opts.model, "model spec, e.g. free:2, axb:Z");
  if (needs_model) m->required();
  cmd->add_option("--depth", opts.depth, "closure depth bound");
  cmd->add_option("--radius", opts.radius, "window radius");
  cmd->add_option("--eps", opts.eps, "rational tolerance a/b");
  cmd->add_option("--seed", opts.seed, "random seed");
  cmd->add_option("--output", opts.output, "output path (default stdout)");
  cmd->add_option("--format", opts.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

int check_budget(const CommonOpts& opts) {
  if (opts.depth < 1 || opts.depth > kMaxDepth) return 3;
  if (opts.radius < 1 || opts.radius > kMaxRadius) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semigroup-lab: constructible right ideals, amenability checks "
               "and truncated regular representations"};
  app.require_subcommand(1);

  CommonOpts opts;
  bool union_closed = false;
  std::string which, side = "left", ring_text = "Z", ideal_text, into_text,
              ideals_list;
  int words = 50;

  auto* cmd_ideals = app.add_subcommand("ideals", "enumerate the ideal family");
  add_common(cmd_ideals, opts);
  cmd_ideals->add_flag("--union", union_closed, "close under finite unions");

  auto* cmd_check = app.add_subcommand("check", "structural verdicts");
  cmd_check
      ->add_option("which", which,
                   "independence | quasi-lattice | reversible | cancellative")
      ->required();
  add_common(cmd_check, opts);
  cmd_check->add_option("--side", side, "left or right (reversible)")
      ->check(CLI::IsMember({"left", "right"}));

  auto* cmd_folner = app.add_subcommand("folner", "search for a small-defect set");
  add_common(cmd_folner, opts);

  auto* cmd_audit = app.add_subcommand("audit", "cross-check the amenability proxies");
  add_common(cmd_audit, opts);

  auto* cmd_opmodel = app.add_subcommand("opmodel", "verify operator relations");
  add_common(cmd_opmodel, opts);
  cmd_opmodel->add_option("--words", words, "number of random words");
  std::string dump_path;
  cmd_opmodel->add_option("--dump", dump_path,
                          "write generator and projection matrices to a file");

  auto* cmd_ring = app.add_subcommand("ring", "ideal arithmetic");
  std::string verb;
  cmd_ring->add_option("verb", verb, "factor | rep | flat")->required();
  add_common(cmd_ring, opts, false);
  cmd_ring->add_option("--ring", ring_text, "ring descriptor, Z or Q(sqrt(d))");
  cmd_ring->add_option("--ideal", ideal_text, "ideal literal, nZ or (g1,g2)");
  cmd_ring->add_option("--into", into_text, "target ring for flat");
  cmd_ring->add_option("--ideals", ideals_list, "semicolon-separated ideal literals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (int rc = check_budget(opts); rc != 0) {
      std::cerr << "budget out of range (depth 1.." << kMaxDepth << ", radius 1.."
                << kMaxRadius << ")\n";
      return rc;
    }

    if (cmd_ideals->parsed()) {
      auto model = sgl::SemigroupModel::parse(opts.model);
      auto fam = sgl::compute_family(model, opts.depth, union_closed);
      Json j = make_envelope(opts, "ideals");
      j["config"]["union"] = union_closed;
      j["result"] = sgl::json_family(fam);
      return emit(opts, j, 0);
    }

    if (cmd_check->parsed()) {
      auto model = sgl::SemigroupModel::parse(opts.model);
      Json j = make_envelope(opts, "check " + which);
      if (which == "independence") {
        auto fam = sgl::compute_family(model, opts.depth, false);
        auto res = sgl::check_independence(fam);
        Json r;
        r["pass"] = res.pass;
        r["family_size"] = fam.entries.size();
        r["family_complete"] = fam.complete;
        if (!res.pass) {
          r["witness"] = sgl::json_right_ideal(model, fam.at(*res.witness));
          Json covers = Json::array();
          for (int c : res.covers)
            covers.push_back(sgl::json_right_ideal(model, fam.at(c)));
          r["covers"] = covers;
        } else if (!fam.complete) {
          r["note"] = "pass on the enumerated family only (closure truncated)";
        }
        j["result"] = r;
        return emit(opts, j, res.pass ? 0 : 1);
      }
      if (which == "quasi-lattice") {
        auto fam = sgl::compute_family(model, opts.depth, false);
        auto res = sgl::check_quasi_lattice(fam);
        Json r;
        r["pass"] = res.pass;
        r["certain"] = res.certain;
        r["family_size"] = fam.entries.size();
        if (!res.pass)
          r["witness"] = sgl::json_right_ideal(model, fam.at(*res.witness));
        j["result"] = r;
        return emit(opts, j, res.pass ? 0 : 1);
      }
      if (which == "reversible") {
        auto rep = side == "left" ? sgl::check_left_reversible(model, opts.radius)
                                  : sgl::check_right_reversible(model, opts.radius);
        j["config"]["side"] = side;
        j["result"] = sgl::json_reversibility(model, rep);
        return emit(opts, j, rep.holds ? 0 : 1);
      }
      if (which == "cancellative") {
        auto rep = model->check_cancellativity_window(opts.radius);
        Json r;
        r["left_ok"] = rep.left_ok;
        r["right_ok"] = rep.right_ok;
        r["radius"] = rep.radius;
        auto wit = [&](const std::array<sgl::Element, 3>& w) {
          return Json::array({sgl::json_element(model, w[0]),
                              sgl::json_element(model, w[1]),
                              sgl::json_element(model, w[2])});
        };
        if (rep.left_witness) r["left_witness"] = wit(*rep.left_witness);
        if (rep.right_witness) r["right_witness"] = wit(*rep.right_witness);
        j["result"] = r;
        return emit(opts, j, rep.left_ok && rep.right_ok ? 0 : 1);
      }
      std::cerr << "unknown check: " << which << "\n";
      return 2;
    }

    if (cmd_folner->parsed()) {
      auto model = sgl::SemigroupModel::parse(opts.model);
      sgl::FolnerBudget budget;
      budget.max_radius = opts.radius > 3 ? opts.radius : 12;
      auto out =
          sgl::folner_search(model, model->generators(), parse_eps(opts.eps), budget);
      Json j = make_envelope(opts, "folner");
      j["result"] = sgl::json_folner(model, out);
      return emit(opts, j, out.found ? 0 : 1);
    }

    if (cmd_audit->parsed()) {
      auto model = sgl::SemigroupModel::parse(opts.model);
      sgl::AuditParams params;
      params.radius = opts.radius;
      params.epsilon = parse_eps(opts.eps);
      auto rep = sgl::implication_audit(model, params);
      Json j = make_envelope(opts, "audit");
      j["result"] = sgl::json_audit(model, rep);
      return emit(opts, j, rep.consistent ? 0 : 1);
    }

    if (cmd_opmodel->parsed()) {
      auto model = sgl::SemigroupModel::parse(opts.model);
      auto rep = sgl::build_truncation(model, opts.radius);
      auto fam = sgl::compute_family(model, std::min(opts.depth, 2), false);
      sgl::SampleConfig cfg;
      cfg.random_words = words;
      cfg.seed = opts.seed;
      auto report = sgl::verify_relations(rep, fam, cfg);
      if (!dump_path.empty()) {
        std::ofstream dump(dump_path, std::ios::binary);
        if (!dump) {
          std::cerr << "cannot open dump file: " << dump_path << "\n";
          return 2;
        }
        for (const sgl::Element& g : model->generators())
          sgl::dump_matrix(rep, "V_" + model->elem_to_string(g),
                           sgl::matrix_V(rep, g).m, dump);
        for (const auto& entry : fam.entries)
          sgl::dump_matrix(rep, "E_" + sgl::ri_to_string(model, entry.ideal),
                           sgl::matrix_E(rep, entry.ideal), dump);
      }
      Json j = make_envelope(opts, "opmodel");
      j["config"]["words"] = words;
      j["result"] = sgl::json_relation_report(report);
      return emit(opts, j, report.all_ok() ? 0 : 1);
    }

    if (cmd_ring->parsed()) {
      auto ring = sgl::RingDescriptor::parse(ring_text);
      Json j = make_envelope(opts, "ring " + verb);
      j["config"]["ring"] = ring_text;
      if (verb == "factor") {
        auto ideal = sgl::parse_ideal(ring, ideal_text);
        Json r;
        r["ideal"] = sgl::json_ring_ideal(ideal);
        r["factorization"] = sgl::json_factorization(sgl::factor(ideal));
        auto pr = sgl::is_principal(ideal);
        r["principal"] = pr.principal;
        r["principal_exhaustive"] = pr.exhaustive;
        if (pr.generator)
          r["generator"] = sgl::re_to_string(ring, *pr.generator);
        j["result"] = r;
        return emit(opts, j, 0);
      }
      if (verb == "rep") {
        auto ideal = sgl::parse_ideal(ring, ideal_text);
        Json r;
        r["ideal"] = sgl::json_ring_ideal(ideal);
        try {
          auto fr = sgl::fractional_representation(ideal);
          r["a"] = sgl::re_to_string(ring, fr.a);
          r["c"] = sgl::re_to_string(ring, fr.c);
          r["verified"] = true;
          j["result"] = r;
          return emit(opts, j, 0);
        } catch (const sgl::SearchBudgetExhausted& e) {
          r["error"] = e.what();
          j["result"] = r;
          return emit(opts, j, 1);
        }
      }
      if (verb == "flat") {
        auto into = sgl::RingDescriptor::parse(into_text);
        std::vector<sgl::RingIdeal> test;
        std::size_t pos = 0;
        while (pos < ideals_list.size()) {
          auto next = ideals_list.find(';', pos);
          if (next == std::string::npos) next = ideals_list.size();
          test.push_back(sgl::parse_ideal(ring, ideals_list.substr(pos, next - pos)));
          pos = next + 1;
        }
        auto rep = sgl::check_flatness_conditions(ring, into, test);
        j["config"]["into"] = into_text;
        j["result"] = sgl::json_flatness(rep);
        return emit(opts, j, rep.all_ok ? 0 : 1);
      }
      std::cerr << "unknown ring verb: " << verb << "\n";
      return 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
