// Batch front end: validates models, runs the law harness, evaluates wiring
// diagrams, and executes query/decide/fit/bayes with machine-readable JSON
// output. Exit codes: 0 success, 1 validation or domain error, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "codp/laws.hpp"
#include "codp/model.hpp"

namespace {

using namespace codp;

constexpr const char* kVersion = "0.1.0";

struct DocLayout {
  std::string command;
  Json inputs = Json::object();
};

void emit(const DocLayout& layout, Json body) {
  body["command"] = layout.command;
  body["inputs"] = layout.inputs;
  body["version"] = kVersion;
  std::cout << body.dump(2) << "\n";
}

int emit_error(const DocLayout& layout, const DomainError& e) {
  Json body = Json::object();
  Json err = Json::object();
  err["code"] = e.code();
  err["message"] = e.what();
  body["error"] = std::move(err);
  emit(layout, std::move(body));
  return 1;
}

Json diagnostics_rows(const std::vector<Diagnostic>& diagnostics) {
  Json rows = Json::array();
  for (const auto& d : diagnostics) {
    Json row = Json::object();
    row["object"] = d.object;
    row["code"] = d.code;
    row["message"] = d.message;
    rows.push_back(std::move(row));
  }
  return rows;
}

Model require_model(const std::string& path, const DocLayout& layout,
                    bool& failed) {
  std::vector<Diagnostic> diagnostics;
  Model model = load_model_file(path, diagnostics);
  if (!diagnostics.empty()) {
    Json body = Json::object();
    Json err = Json::object();
    err["code"] = "InvalidModel";
    err["message"] = "model file has validation errors";
    body["error"] = std::move(err);
    body["rows"] = diagnostics_rows(diagnostics);
    emit(layout, std::move(body));
    failed = true;
  }
  return model;
}

// --cell accepts a declared cell name or a wiring name (evaluated on demand).
ParamCell resolve_cell(const Model& model, const std::string& name) {
  if (auto it = model.env.cells.find(name); it != model.env.cells.end())
    return it->second;
  if (auto it = model.wirings.find(name); it != model.wirings.end())
    return evaluate(model.env, it->second);
  throw UnboundName("no cell or wiring named '" + name + "'");
}

Json space_to_json(const ParamSpace& space) {
  Json factors = Json::array();
  for (const auto& factor : space.factors())
    factors.push_back(labels_to_json(factor.elements()));
  return factors;
}

Json antichain_to_json(const Antichain& antichain) {
  return labels_to_json(antichain.labels());
}

Json query_result_to_json(const QueryResult& result, bool render_decimal) {
  Json out = Json::object();
  if (const auto* plain = std::get_if<PlainResult>(&result)) {
    out["antichain"] = antichain_to_json(plain->minimal);
  } else if (const auto* possible = std::get_if<PossibilisticResult>(&result)) {
    Json list = Json::array();
    for (const auto& a : possible->outcomes) list.push_back(antichain_to_json(a));
    out["antichains"] = std::move(list);
  } else if (const auto* bounds = std::get_if<IntervalResult>(&result)) {
    out["pessimistic"] = antichain_to_json(bounds->pessimistic);
    out["optimistic"] = antichain_to_json(bounds->optimistic);
  } else if (const auto* prob = std::get_if<ProbabilisticResult>(&result)) {
    Json list = Json::array();
    for (const auto& [a, w] : prob->outcomes) {
      Json row = Json::object();
      row["antichain"] = antichain_to_json(a);
      row["prob"] = rat_to_json(w, render_decimal);
      list.push_back(std::move(row));
    }
    out["dist"] = std::move(list);
    out["p_feasible"] = rat_to_json(prob->feasible_probability, render_decimal);
  }
  return out;
}

Json law_rows(const LawReport& report, const std::string& suite) {
  Json rows = Json::array();
  for (const auto& check : report.checks) {
    Json row = Json::object();
    row["suite"] = suite;
    row["law"] = check.law;
    row["pass"] = check.pass;
    row["witness"] = check.witness;
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_check_laws(const std::string& instance, std::size_t max_carrier,
                   std::uint64_t seed, std::size_t trials) {
  DocLayout layout{"check-laws", Json::object()};
  layout.inputs["instance"] = instance;
  layout.inputs["max_carrier"] = max_carrier;
  layout.inputs["seed"] = seed;
  layout.inputs["trials"] = trials;

  try {
    Json body = Json::object();
    body["seed"] = seed;
    if (instance == "twarr") {
      LawReport report = twarr_report();
      body["rows"] = law_rows(report, "counterexample");
      body["notes"] = Json::array({report.sample_note});
      emit(layout, std::move(body));
      return report.all_pass() ? 0 : 1;
    }

    Monad kind = instance == "powerset-empty" ? Monad::powerset_empty
                                              : monad_from_name(instance);
    LawOptions opts;
    opts.seed = seed;
    opts.carrier_cap = std::max<std::size_t>(max_carrier, 1);
    std::vector<FinitePoset> carriers = default_law_carriers(max_carrier);
    LawReport monad_report = check_monad_laws(kind, carriers, opts);
    LawReport markov_report = check_markov_axioms(kind, carriers, opts);
    LawReport kleisli_report =
        check_kleisli_category(kind, carriers, trials, seed);

    Json rows = law_rows(monad_report, "monad");
    for (auto& row : law_rows(markov_report, "markov")) rows.push_back(row);
    for (auto& row : law_rows(kleisli_report, "kleisli")) rows.push_back(row);
    body["rows"] = std::move(rows);
    Json notes = Json::array();
    if (!monad_report.sample_note.empty())
      notes.push_back(monad_report.sample_note);
    Json carrier_list = Json::array();
    for (const auto& c : monad_report.carriers) carrier_list.push_back(c);
    body["carriers"] = std::move(carrier_list);

    bool ok;
    if (kind == Monad::powerset_empty) {
      // the mutant exists to fail exactly these two checks
      notes.push_back(
          "expected failures for the non-affine mutant: affine, delete_natural");
      ok = true;
      auto expect = [&](const LawReport& report, const std::string& law,
                        bool should_pass) {
        const LawCheck* check = report.find(law);
        if (check && check->pass != should_pass) ok = false;
      };
      for (const auto& check : monad_report.checks)
        expect(monad_report, check.law, check.law != "affine");
      for (const auto& check : markov_report.checks)
        expect(markov_report, check.law, check.law != "delete_natural");
      if (!kleisli_report.all_pass()) ok = false;
      expect(monad_report, "affine", false);
      expect(markov_report, "delete_natural", false);
    } else {
      ok = monad_report.all_pass() && markov_report.all_pass() &&
           kleisli_report.all_pass();
    }
    body["notes"] = std::move(notes);
    emit(layout, std::move(body));
    return ok ? 0 : 1;
  } catch (const DomainError& e) {
    return emit_error(layout, e);
  }
}

int run_validate(const std::string& path) {
  DocLayout layout{"validate", Json::object()};
  layout.inputs["model"] = path;
  try {
    std::vector<Diagnostic> diagnostics;
    load_model_file(path, diagnostics);
    Json body = Json::object();
    body["rows"] = diagnostics_rows(diagnostics);
    emit(layout, std::move(body));
    return diagnostics.empty() ? 0 : 1;
  } catch (const DomainError& e) {
    return emit_error(layout, e);
  }
}

int run_eval(const std::string& path, const std::string& wiring,
             bool render_decimal) {
  DocLayout layout{"eval", Json::object()};
  layout.inputs["model"] = path;
  layout.inputs["wiring"] = wiring;
  try {
    bool failed = false;
    Model model = require_model(path, layout, failed);
    if (failed) return 1;
    ParamCell cell = resolve_cell(model, wiring);
    layout.inputs["monad"] = monad_name(cell.kind());
    layout.inputs["source"] = labels_to_json(cell.source().elements());
    layout.inputs["target"] = labels_to_json(cell.target().elements());
    layout.inputs["space"] = space_to_json(cell.space());
    Json rows = Json::array();
    for (std::size_t i = 0; i < cell.space().size(); ++i) {
      Json row = Json::object();
      row["at"] = labels_to_json(cell.space().labels_at(i));
      row["value"] = uncertain_dp_to_json(cell.at(i), render_decimal);
      rows.push_back(std::move(row));
    }
    Json body = Json::object();
    body["rows"] = std::move(rows);
    emit(layout, std::move(body));
    return 0;
  } catch (const DomainError& e) {
    return emit_error(layout, e);
  }
}

int run_query(const std::string& path, const std::string& cell_name,
              const std::string& fun_label, bool render_decimal) {
  DocLayout layout{"query", Json::object()};
  layout.inputs["model"] = path;
  layout.inputs["cell"] = cell_name;
  layout.inputs["fun"] = fun_label;
  try {
    bool failed = false;
    Model model = require_model(path, layout, failed);
    if (failed) return 1;
    ParamCell cell = resolve_cell(model, cell_name);
    std::size_t f = cell.source().index_of(fun_label);
    auto results = query_cell(cell, f);
    Json rows = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      Json row = Json::object();
      row["at"] = labels_to_json(cell.space().labels_at(i));
      row["result"] = query_result_to_json(results[i], render_decimal);
      rows.push_back(std::move(row));
    }
    Json body = Json::object();
    body["rows"] = std::move(rows);
    emit(layout, std::move(body));
    return 0;
  } catch (const DomainError& e) {
    return emit_error(layout, e);
  }
}

int run_decide(const std::string& path, const std::string& cell_name,
               const std::string& fun_label, const std::string& objective_name_,
               const std::string& cost_name, const std::string& penalty,
               bool render_decimal) {
  DocLayout layout{"decide", Json::object()};
  layout.inputs["model"] = path;
  layout.inputs["cell"] = cell_name;
  layout.inputs["fun"] = fun_label;
  layout.inputs["objective"] = objective_name_;
  layout.inputs["cost"] = cost_name;
  layout.inputs["penalty"] = penalty;
  try {
    bool failed = false;
    Model model = require_model(path, layout, failed);
    if (failed) return 1;
    ParamCell cell = resolve_cell(model, cell_name);
    std::size_t f = cell.source().index_of(fun_label);
    auto cost_it = model.costs.find(cost_name);
    if (cost_it == model.costs.end())
      throw UnboundName("cost map '" + cost_name + "' is not declared");
    std::optional<Rat> penalty_value;
    if (penalty != "inf") penalty_value = rat_from_string(penalty);
    DecisionReport report =
        decide(cell, f, objective_from_name(objective_name_), cost_it->second,
               penalty_value);
    Json rows = Json::array();
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      Json row = Json::object();
      row["at"] = labels_to_json(cell.space().labels_at(i));
      row["value"] = report.rows[i].value
                         ? rat_to_json(*report.rows[i].value, render_decimal)
                         : Json("infeasible");
      rows.push_back(std::move(row));
    }
    Json chosen = Json::object();
    chosen["at"] = labels_to_json(cell.space().labels_at(report.chosen_index));
    chosen["value"] = rat_to_json(*report.rows[report.chosen_index].value,
                                  render_decimal);
    Json body = Json::object();
    body["rows"] = std::move(rows);
    body["chosen"] = std::move(chosen);
    emit(layout, std::move(body));
    return 0;
  } catch (const DomainError& e) {
    return emit_error(layout, e);
  }
}

std::vector<RawObservation> observations_for(const Model& model,
                                             const std::string& data_path) {
  if (data_path.empty()) return model.observations;
  std::ifstream in(data_path);
  if (!in) throw ParseError("cannot open data file '" + data_path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("data file: ") + e.what());
  }
  return parse_observations(doc);
}

int run_fit(const std::string& path, const std::string& family_name,
            const std::string& mode_name, const std::string& lambda,
            const std::string& embedding_name, const std::string& data_path,
            bool render_decimal) {
  DocLayout layout{"fit", Json::object()};
  layout.inputs["model"] = path;
  layout.inputs["family"] = family_name;
  layout.inputs["mode"] = mode_name;
  layout.inputs["lambda"] = lambda;
  layout.inputs["embedding"] = embedding_name;
  try {
    bool failed = false;
    Model model = require_model(path, layout, failed);
    if (failed) return 1;
    auto family_it = model.families.find(family_name);
    if (family_it == model.families.end())
      throw UnboundName("family '" + family_name + "' is not declared");
    auto embed_it = model.costs.find(embedding_name);
    if (embed_it == model.costs.end())
      throw UnboundName("embedding '" + embedding_name + "' is not declared");
    const ThetaFamily& family = family_it->second;
    // grid_fit consumes feasible observations only; drop the rest here so a
    // model's shared observation list can serve both fit and bayes.
    std::vector<RawObservation> raw = observations_for(model, data_path);
    std::erase_if(raw, [](const RawObservation& obs) { return !obs.feasible; });
    std::vector<Observation> data = resolve_observations(
        raw, family.maps.front().dom(), family.maps.front().cod());
    FitReport report = grid_fit(family, data, fit_mode_from_name(mode_name),
                                rat_from_string(lambda), embed_it->second);
    Json rows = Json::array();
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      Json row = Json::object();
      row["at"] = labels_to_json(family.grid.labels_at(i));
      row["respects_data"] = report.rows[i].respects_data;
      row["squared_loss"] =
          rat_to_json(report.rows[i].squared_loss, render_decimal);
      row["score"] = rat_to_json(report.rows[i].score, render_decimal);
      rows.push_back(std::move(row));
    }
    Json chosen = Json::object();
    chosen["at"] = labels_to_json(family.grid.labels_at(report.chosen_index));
    chosen["score"] =
        rat_to_json(report.rows[report.chosen_index].score, render_decimal);
    Json body = Json::object();
    body["rows"] = std::move(rows);
    body["chosen"] = std::move(chosen);
    emit(layout, std::move(body));
    return 0;
  } catch (const DomainError& e) {
    return emit_error(layout, e);
  }
}

int run_bayes(const std::string& path, const std::string& kernel_name,
              const std::string& prior_name, const std::string& data_path,
              bool render_decimal) {
  DocLayout layout{"bayes", Json::object()};
  layout.inputs["model"] = path;
  layout.inputs["kernel"] = kernel_name;
  layout.inputs["prior"] = prior_name;
  try {
    bool failed = false;
    Model model = require_model(path, layout, failed);
    if (failed) return 1;
    ParamCell kernel = resolve_cell(model, kernel_name);
    auto prior_it = model.priors.find(prior_name);
    if (prior_it == model.priors.end())
      throw UnboundName("prior '" + prior_name + "' is not declared");
    if (!(prior_it->second.space == kernel.space()))
      throw ObjectMismatch("prior space does not match the kernel's space");
    std::vector<Observation> data = resolve_observations(
        observations_for(model, data_path), kernel.source(), kernel.target());
    Posterior posterior = bayes_update(prior_it->second.weights, kernel, data);
    Json rows = Json::array();
    for (std::size_t i = 0; i < posterior.weights.size(); ++i) {
      Json row = Json::object();
      row["at"] = labels_to_json(posterior.space.labels_at(i));
      row["prob"] = rat_to_json(posterior.weights[i], render_decimal);
      rows.push_back(std::move(row));
    }
    Json body = Json::object();
    body["rows"] = std::move(rows);
    body["evidence"] = rat_to_json(posterior.evidence, render_decimal);
    emit(layout, std::move(body));
    return 0;
  } catch (const DomainError& e) {
    return emit_error(layout, e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"co-design calculator for uncertain design problems"};
  app.require_subcommand(1);

  std::string model_path, wiring, cell, fun, objective = "expected";
  std::string cost, penalty = "inf", family, mode = "least_squares";
  std::string lambda = "0", embedding, data_path, kernel, prior, instance;
  std::size_t max_carrier = 3, trials = 100;
  std::uint64_t seed = 0;
  bool render_decimal = false;

  CLI::App* validate = app.add_subcommand("validate", "check a model file");
  validate->add_option("model", model_path, "model file")->required();

  CLI::App* laws = app.add_subcommand("check-laws", "run the law harness");
  laws->add_option("--instance", instance,
                   "identity|powerset|interval|dist|powerset-empty|twarr")
      ->required();
  laws->add_option("--max-carrier", max_carrier, "largest carrier size");
  laws->add_option("--seed", seed, "seed for randomized suites");
  laws->add_option("--trials", trials, "random trials per suite");

  CLI::App* eval = app.add_subcommand("eval", "evaluate a wiring expression");
  eval->add_option("model", model_path)->required();
  eval->add_option("--wiring", wiring, "wiring or cell name")->required();
  eval->add_flag("--render-decimal", render_decimal);

  CLI::App* query = app.add_subcommand("query", "minimal resources per parameter");
  query->add_option("model", model_path)->required();
  query->add_option("--cell", cell, "cell or wiring name")->required();
  query->add_option("--fun", fun, "functionality element label")->required();
  query->add_flag("--render-decimal", render_decimal);

  CLI::App* dec = app.add_subcommand("decide", "pick the best parameter");
  dec->add_option("model", model_path)->required();
  dec->add_option("--cell", cell)->required();
  dec->add_option("--fun", fun)->required();
  dec->add_option("--objective", objective, "expected|worst_case|optimistic");
  dec->add_option("--cost", cost, "cost map name")->required();
  dec->add_option("--penalty", penalty, "rational or 'inf'");
  dec->add_flag("--render-decimal", render_decimal);

  CLI::App* fit = app.add_subcommand("fit", "fit a threshold family to data");
  fit->add_option("model", model_path)->required();
  fit->add_option("--family", family)->required();
  fit->add_option("--mode", mode, "least_squares|constrained");
  fit->add_option("--lambda", lambda, "complexity weight");
  fit->add_option("--embedding", embedding, "numeric embedding cost map")
      ->required();
  fit->add_option("--data", data_path, "observation file (JSON array)");
  fit->add_flag("--render-decimal", render_decimal);

  CLI::App* bayes = app.add_subcommand("bayes", "posterior over parameters");
  bayes->add_option("model", model_path)->required();
  bayes->add_option("--kernel", kernel, "dist-instance cell")->required();
  bayes->add_option("--prior", prior, "prior name")->required();
  bayes->add_option("--data", data_path, "observation file (JSON array)");
  bayes->add_flag("--render-decimal", render_decimal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return run_validate(model_path);
    if (laws->parsed()) return run_check_laws(instance, max_carrier, seed, trials);
    if (eval->parsed()) return run_eval(model_path, wiring, render_decimal);
    if (query->parsed()) return run_query(model_path, cell, fun, render_decimal);
    if (dec->parsed())
      return run_decide(model_path, cell, fun, objective, cost, penalty,
                        render_decimal);
    if (fit->parsed())
      return run_fit(model_path, family, mode, lambda, embedding, data_path,
                     render_decimal);
    if (bayes->parsed())
      return run_bayes(model_path, kernel, prior, data_path, render_decimal);
  } catch (const DomainError& e) {
    Json body = Json::object();
    body["error"] = Json::object({{"code", e.code()}, {"message", e.what()}});
    std::cout << body.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
