// Batch front door over the library: validate files, classify functors,
// run the descent oracle, rebuild quotients, and ship the example gallery.
// Output is buffered and canonical, so identical inputs and flags produce
// identical bytes.  Exit codes: 0 success, 1 semantic failure, 2 input
// error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tmcat/gallery.hpp"
#include "tmcat/json_io.hpp"

using namespace tmcat;
using nlohmann::json;

namespace {

MonadPtr monad_from_selector(const std::string& sel) {
  if (sel == "identity") return identity_monad();
  if (sel == "freemonoid") return free_monoid_monad();
  if (sel.rfind("monoid:", 0) == 0)
    return monoid_action_monad(monoid_from_json(load_json_file(sel.substr(7))));
  throw JsonFormatError("unknown monad selector \"" + sel +
                        "\" (use identity, freemonoid, or monoid:<file>)");
}

// supply a default monad to multicategory objects that omit one
json with_default_monad(json j, const std::optional<json>& dflt) {
  if (!dflt || !j.is_object()) return j;
  if (j.contains("x0") && !j.contains("monad")) j["monad"] = *dflt;
  for (const char* side : {"src", "tgt"})
    if (j.contains(side)) j[side] = with_default_monad(j[side], dflt);
  return j;
}

const Fixture& fixture_checked(const std::string& name) {
  for (const Fixture& f : fixture_library())
    if (f.name == name) return f;
  throw JsonFormatError("no fixture named \"" + name + "\"");
}

struct NamedFunctor {
  std::string id;
  TFunctor functor;
};

NamedFunctor resolve_functor(const std::string& path,
                             const std::string& fixture_name,
                             const std::optional<json>& monad_default) {
  if (path.empty() == fixture_name.empty())
    throw JsonFormatError("give exactly one functor: a file path or --fixture");
  if (!fixture_name.empty())
    return {fixture_name, fixture_checked(fixture_name).functor};
  json j = load_json_file(path);
  if (json_kind(j) != "functor")
    throw JsonFormatError("expected kind \"functor\" in " + path + ", got \"" +
                          json_kind(j) + "\"");
  return {path, functor_from_json(with_default_monad(std::move(j), monad_default))};
}

Report validate_one(const std::string& kind, const json& j,
                    const std::string& functor_path) {
  Report r;
  try {
    if (kind == "multicat") {
      MulticatPtr m = multicat_from_json(j);
      r.merge(validate_multicategory(*m));
      if (m->monad()->finite_carriers())
        r.merge(check_model(multicat_sketch(), model_from_multicat(*m)),
                "model: ");
    } else if (kind == "functor") {
      r.merge(validate_functor(functor_from_json(j)));
    } else if (kind == "monoid") {
      monoid_from_json(j);
      r.add("monoid laws", true);
    } else if (kind == "map") {
      map_from_json(j);
      r.add("map boundaries", true);
    } else if (kind == "set") {
      set_from_json(j);
      r.add("set well formed", true);
    } else if (kind == "model") {
      r.merge(check_model(multicat_sketch(), model_from_json(j)));
    } else if (kind == "pseudoeq-object") {
      r.merge(check_pseudoeq_object(pseudoeq_from_json(j)));
    } else if (kind == "descent-datum") {
      if (functor_path.empty())
        throw JsonFormatError("validating a descent datum needs --functor");
      TFunctor p = functor_from_json(load_json_file(functor_path));
      r.merge(check_multicat_datum(p, datum_from_json(j, p.src)));
    } else {
      throw JsonFormatError("unknown kind \"" + kind + "\"");
    }
  } catch (const JsonFormatError&) {
    throw;
  } catch (const Error& e) {
    r.add("construction", false, e.what());
  }
  return r;
}

int run_validate(const std::vector<std::string>& files,
                 const std::string& format,
                 const std::optional<json>& monad_default,
                 const std::string& functor_path) {
  bool all_ok = true;
  std::string text;
  json results = json::array();
  for (const std::string& path : files) {
    json j = with_default_monad(load_json_file(path), monad_default);
    Report r = validate_one(json_kind(j), j, functor_path);
    all_ok = all_ok && r.ok();
    text += "== " + path + "\n" + r.str();
    results.push_back(json{{"file", path},
                           {"ok", r.ok()},
                           {"report", report_to_json(r)}});
  }
  if (format == "json")
    std::cout << pretty(json{{"schemaVersion", kSchemaVersion},
                             {"results", std::move(results)}});
  else
    std::cout << text;
  return all_ok ? 0 : 1;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int run_classify(const std::string& path, const std::string& fixture_name,
                 const std::string& format, int list_length,
                 const std::optional<json>& monad_default) {
  NamedFunctor nf = resolve_functor(path, fixture_name, monad_default);
  Report valid = validate_functor(nf.functor);
  if (!valid.ok()) {
    std::cout << valid.str();
    return 1;
  }
  SurjectivityProfile prof = surjectivity_profile(nf.functor);
  CriterionResult lifted = lifted_cover_criterion(nf.functor, list_length);
  CriterionResult level = level_cover_criterion(nf.functor);
  if (format == "json") {
    std::cout << pretty(json{
        {"schemaVersion", kSchemaVersion},
        {"functor", nf.id},
        {"profile", json{{"p0", prof.p0},
                         {"p1", prof.p1},
                         {"p2", prof.p2},
                         {"p3", prof.p3}}},
        {"liftedCover", lifted.verdict},
        {"levelCover", level.verdict},
        {"liftedCoverReport", report_to_json(lifted.details)},
        {"levelCoverReport", report_to_json(level.details)}});
    return 0;
  }
  std::string out = "functor: " + nf.id + "\n";
  out += "profile: p0=" + yesno(prof.p0) + " p1=" + yesno(prof.p1) +
         " p2=" + yesno(prof.p2) + " p3=" + yesno(prof.p3) + "\n";
  out += "lifted cover criterion: " +
         std::string(lifted.verdict ? "holds" : "fails") + "\n" +
         lifted.details.str();
  out += "level cover criterion: " +
         std::string(level.verdict ? "holds" : "fails") + "\n" +
         level.details.str();
  std::cout << out;
  return 0;
}

int run_oracle(const std::string& path, const std::string& fixture_name,
               const std::string& format, int max_size, int jobs,
               const std::optional<json>& monad_default) {
  NamedFunctor nf = resolve_functor(path, fixture_name, monad_default);
  Report valid = validate_functor(nf.functor);
  if (!valid.ok()) {
    std::cout << valid.str();
    return 1;
  }
  OracleOutcome o = brute_force_oracle(nf.functor, max_size, jobs);
  if (format == "json") {
    std::cout << pretty(json{
        {"schemaVersion", kSchemaVersion},
        {"functor", nf.id},
        {"oracle", json{{"bound", o.bound},
                        {"dataChecked", o.data_checked},
                        {"failures", o.failures},
                        {"comparisonFaithful", o.comparison_faithful},
                        {"comparisonFull", o.comparison_full},
                        {"status", o.status}}}});
    return 0;
  }
  std::string out = "functor: " + nf.id + "\n";
  out += "bound: " + std::to_string(o.bound) + "\n";
  out += "data checked: " + std::to_string(o.data_checked) + "\n";
  for (const std::string& f : o.failures) out += "counterexample: " + f + "\n";
  out += "comparison spot checks: faithful=" + yesno(o.comparison_faithful) +
         " full=" + yesno(o.comparison_full) + "\n";
  out += "status: " + o.status + "\n";
  std::cout << out;
  return 0;
}

int run_quotient(const std::string& path, const std::string& fixture_name,
                 const std::string& datum_path,
                 const std::optional<json>& monad_default) {
  NamedFunctor nf = resolve_functor(path, fixture_name, monad_default);
  Report valid = validate_functor(nf.functor);
  if (!valid.ok()) {
    std::cout << valid.str();
    return 1;
  }
  MultiDescentDatum d =
      datum_from_json(load_json_file(datum_path), nf.functor.src);
  Report laws = check_multicat_datum(nf.functor, d);
  if (!laws.ok()) {
    std::cout << laws.str();
    return 1;
  }
  MultiDescentQuotient q = multicat_descent_quotient(nf.functor, d);
  MultiDescentDatum induced = comparison_multicat_datum(nf.functor, q.f);
  if (!multicat_data_isomorphic(nf.functor, d, induced)) {
    std::cerr << "the rebuilt object does not induce the given datum\n";
    return 1;
  }
  std::cout << pretty(
      json{{"schemaVersion", kSchemaVersion},
           {"kind", "quotient-result"},
           {"w", multicat_to_json(*q.w)},
           {"f", json{{"p0", map_to_json(q.f.p0)}, {"p1", map_to_json(q.f.p1)}}},
           {"h", json{{"p0", map_to_json(q.h.p0)}, {"p1", map_to_json(q.h.p1)}}}});
  return 0;
}

int run_fixtures(bool list, const std::string& dump_name,
                 const std::string& format) {
  if (list) {
    if (format == "json") {
      json items = json::array();
      for (const Fixture& f : fixture_library())
        items.push_back(json{{"name", f.name}, {"summary", f.summary}});
      std::cout << pretty(json{{"schemaVersion", kSchemaVersion},
                               {"fixtures", std::move(items)}});
    } else {
      std::string out;
      for (const Fixture& f : fixture_library())
        out += f.name + ": " + f.summary + "\n";
      std::cout << out;
    }
    return 0;
  }
  std::cout << pretty(functor_to_json(fixture_checked(dump_name).functor));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite internal multicategories: validation, descent "
               "classification, and a brute force descent oracle"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string monad_sel;
  std::string functor_path, fixture_name, datum_path, context_path;
  std::vector<std::string> files;
  int max_size = 2, list_length = 3, jobs = 1;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_monad = [&](CLI::App* cmd) {
    cmd->add_option("--monad", monad_sel,
                    "default monad for files that omit one: identity, "
                    "freemonoid, or monoid:<file>");
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", functor_path, "functor file");
    cmd->add_option("--fixture", fixture_name, "functor from the gallery");
  };

  CLI::App* validate =
      app.add_subcommand("validate", "check the laws of one or more files");
  validate->add_option("files", files, "files to validate")->required();
  validate->add_option("--functor", context_path,
                       "functor context for descent datum files");
  add_format(validate);
  add_monad(validate);

  CLI::App* classify = app.add_subcommand(
      "classify", "surjectivity profile and both sufficient conditions");
  add_input(classify);
  classify->add_option("--list-length", list_length,
                       "word length bound for lifted surjectivity checks");
  add_format(classify);
  add_monad(classify);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustively test descent data up to a carrier bound");
  add_input(oracle);
  oracle->add_option("--max-size", max_size, "carrier size bound");
  oracle->add_option("--jobs", jobs, "worker threads");
  add_format(oracle);
  add_monad(oracle);

  CLI::App* quotient = app.add_subcommand(
      "quotient", "rebuild the object under a datum along a covering functor");
  add_input(quotient);
  quotient->add_option("--datum", datum_path, "descent datum file")->required();
  add_format(quotient);
  add_monad(quotient);

  CLI::App* fixtures =
      app.add_subcommand("fixtures", "the example gallery");
  CLI::App* fx_list = fixtures->add_subcommand("list", "names and summaries");
  add_format(fx_list);
  std::string dump_name;
  CLI::App* fx_dump = fixtures->add_subcommand("dump", "write one as JSON");
  fx_dump->add_option("name", dump_name, "fixture name")->required();
  fixtures->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::optional<json> monad_default;
    if (!monad_sel.empty())
      monad_default = monad_to_json(monad_from_selector(monad_sel));

    if (validate->parsed())
      return run_validate(files, format, monad_default, context_path);
    if (classify->parsed())
      return run_classify(functor_path, fixture_name, format, list_length,
                          monad_default);
    if (oracle->parsed())
      return run_oracle(functor_path, fixture_name, format, max_size, jobs,
                        monad_default);
    if (quotient->parsed())
      return run_quotient(functor_path, fixture_name, datum_path,
                          monad_default);
    if (fixtures->parsed())
      return run_fixtures(fx_list->parsed(), dump_name, format);
  } catch (const JsonFormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
