#include "qg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qg/derivation.hpp"
#include "qg/error.hpp"
#include "qg/extension.hpp"
#include "qg/io.hpp"
#include "qg/mendelsohn.hpp"
#include "qg/semisym.hpp"
#include "qg/stabilizer.hpp"

namespace qg::cli {

using nlohmann::json;

namespace {

struct Report {
  int code = 0;  // 0 ok, 1 fail, 2 error
  json details = json::object();
  std::string text;

  static Report ok(std::string text, json details = json::object()) {
    return {0, std::move(details), std::move(text)};
  }
  static Report failed(std::string text, json details = json::object()) {
    return {1, std::move(details), std::move(text)};
  }
};

const char* status_name(int code) {
  return code == 0 ? "ok" : code == 1 ? "fail" : "error";
}

json quasigroup_json(const Quasigroup& q) {
  json mul = json::array();
  for (int x = 0; x < q.order(); ++x) {
    json row = json::array();
    for (int y = 0; y < q.order(); ++y) row.push_back(q.mul(x, y));
    mul.push_back(std::move(row));
  }
  return json{{"n", q.order()}, {"mul", std::move(mul)}, {"labels", q.labels()}};
}

int resolve_base(const Quasigroup& q, const std::string& label) {
  if (label.empty()) return 0;
  if (auto idx = q.index_of(label)) return *idx;
  fail(Errc::ParseError, "no element labeled '" + label + "'");
}

Report cmd_check(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  try {
    const Quasigroup q = read_quasigroup(in);
    const auto ax = check_axioms(q);
    const bool ss = is_semisymmetric(q), ip = is_idempotent(q);
    json details{{"order", q.order()},
                 {"latin", true},
                 {"axioms",
                  {{"IL", ax.il.ok},
                   {"IR", ax.ir.ok},
                   {"SL", ax.sl.ok},
                   {"SR", ax.sr.ok}}},
                 {"semisymmetric", ss},
                 {"idempotent", ip}};
    std::ostringstream text;
    text << "order " << q.order() << "\nlatin: yes\naxioms IL IR SL SR: "
         << (ax.all_ok() ? "pass" : "FAIL") << "\nsemisymmetric: "
         << (ss ? "true" : "false") << "\nidempotent: " << (ip ? "true" : "false");
    return ax.all_ok() ? Report::ok(text.str(), details)
                       : Report::failed(text.str(), details);
  } catch (const Error& e) {
    if (e.code() != Errc::NotLatin) throw;
    return Report::failed(std::string("not a latin square: ") + e.what(),
                          json{{"latin", false}, {"reason", e.what()}});
  }
}

Report cmd_semisymmetrize(const std::string& path, int cap) {
  const Quasigroup q = read_quasigroup_file(path);
  const Quasigroup cube = semisymmetrize(q, cap);
  return Report::ok(write_quasigroup(cube),
                    json{{"quasigroup", quasigroup_json(cube)}});
}

Report cmd_mts_search(int n, std::uint64_t budget) {
  SearchStats stats;
  const auto found = search_triple_system(n, {budget}, &stats);
  if (!found)
    return Report::failed(
        "no triple system of order " + std::to_string(n) +
            " (search space exhausted)",
        json{{"n", n}, {"found", false}, {"nodes", stats.nodes}});
  return Report::ok(write_triple_system(*found),
                    json{{"n", n},
                         {"found", true},
                         {"nodes", stats.nodes},
                         {"mts", json::parse(write_triple_system(*found))}});
}

Report cmd_mts_to_qg(const std::string& path) {
  const TripleSystem ts = read_triple_system_file(path);
  const auto rep = validate(ts);
  if (!rep.ok)
    return Report::failed("invalid triple system: " + rep.problems.front(),
                          json{{"valid", false}, {"reason", rep.problems.front()}});
  const Quasigroup q = to_quasigroup(ts);
  return Report::ok(write_quasigroup(q),
                    json{{"quasigroup", quasigroup_json(q)}});
}

Report cmd_qg_to_mts(const std::string& path) {
  const Quasigroup q = read_quasigroup_file(path);
  try {
    const TripleSystem ts = from_quasigroup(q);
    return Report::ok(write_triple_system(ts),
                      json{{"mts", json::parse(write_triple_system(ts))}});
  } catch (const Error& e) {
    if (e.code() == Errc::NotIdempotent || e.code() == Errc::NotSemisymmetric ||
        e.code() == Errc::OrderTooSmall)
      return Report::failed(std::string("not representable: ") + e.what(),
                            json{{"reason", errc_name(e.code())}});
    throw;
  }
}

const char* kind_name(StabilizerBasis::Kind k) {
  switch (k) {
    case StabilizerBasis::Kind::E2: return "E2";
    case StabilizerBasis::Kind::T: return "T";
    case StabilizerBasis::Kind::RLoop: return "R";
  }
  return "?";
}

Report cmd_stabilizer_basis(const std::string& path, const std::string& base) {
  const Quasigroup q = read_quasigroup_file(path);
  const int e = resolve_base(q, base);
  if (!is_semisymmetric(q))
    return Report::failed("quasigroup is not semisymmetric",
                          json{{"reason", "NotSemisymmetric"}});
  const auto basis = schreier_basis(q, e);
  std::ostringstream text;
  text << "base " << q.label(e) << "\nrank " << basis.rank();
  json elems = json::array();
  for (const auto& el : basis.elements) {
    std::string tag = kind_name(el.kind);
    if (el.kind == StabilizerBasis::Kind::T)
      tag += "(" + q.label(el.x) + ")";
    else if (el.kind == StabilizerBasis::Kind::RLoop)
      tag += "(" + q.label(el.x) + "," + q.label(el.y) + ")";
    const std::string word = format_free_word(el.word, q);
    text << "\n" << tag << ": " << word;
    json je{{"kind", kind_name(el.kind)}, {"word", word}};
    if (el.x >= 0) je["x"] = q.label(el.x);
    if (el.y >= 0) je["y"] = q.label(el.y);
    elems.push_back(std::move(je));
  }
  return Report::ok(text.str(), json{{"base", q.label(e)},
                                     {"rank", basis.rank()},
                                     {"elements", std::move(elems)}});
}

Report cmd_ideal(const std::string& path, const std::string& base,
                 const std::string& variety) {
  const Quasigroup q = read_quasigroup_file(path);
  const int e = resolve_base(q, base);
  if (!is_semisymmetric(q))
    return Report::failed("quasigroup is not semisymmetric",
                          json{{"reason", "NotSemisymmetric"}});
  std::vector<TermIdentity> basis{semisymmetric_identity()};
  if (variety == "MTS") basis.push_back(idempotent_identity());
  const auto gens = ideal_generators(q, e, basis);
  std::ostringstream text;
  json jgens = json::array();
  text << "generators " << gens.size();
  for (const auto& g : gens) {
    const std::string s = format_ring_element(g, q);
    text << "\n" << s;
    jgens.push_back(s);
  }
  return Report::ok(text.str(), json{{"base", q.label(e)},
                                     {"variety", variety},
                                     {"generators", std::move(jgens)}});
}

Report cmd_module_check(const std::string& qg_path,
                        const std::string& module_path,
                        const std::string& base) {
  const Quasigroup q = read_quasigroup_file(qg_path);
  const int e = resolve_base(q, base);
  const ModuleAssignment a = read_module_file(module_path, q);
  const auto rep = check_module(q, e, a);
  const size_t total = static_cast<size_t>(q.order()) * q.order();
  if (rep.ok)
    return Report::ok("all " + std::to_string(total) +
                          " ideal generators annihilate the module",
                      json{{"ok", true}, {"generators", total}});
  json failing = json::array();
  std::ostringstream text;
  text << rep.failing.size() << " of " << total << " generators fail:";
  for (const auto& [x, y] : rep.failing) {
    failing.push_back(json{{"x", q.label(x)}, {"y", q.label(y)}});
    text << " (" << q.label(x) << "," << q.label(y) << ")";
  }
  return Report::failed(text.str(),
                        json{{"ok", false}, {"failing", std::move(failing)}});
}

Report cmd_extend(const std::string& qg_path, const std::string& module_path,
                  const std::string& base, int cap,
                  const std::string& output) {
  const Quasigroup q = read_quasigroup_file(qg_path);
  const int e = resolve_base(q, base);
  const ModuleAssignment a = read_module_file(module_path, q);
  try {
    const Extension ext = build_extension(q, a, e, cap);
    const std::string table = write_quasigroup(ext.total);
    json details{{"order", ext.total.order()}};
    if (output.empty()) {
      details["quasigroup"] = quasigroup_json(ext.total);
      return Report::ok(table, details);
    }
    std::ofstream ofs(output);
    if (!ofs) fail(Errc::IoError, "cannot write " + output);
    ofs << table;
    details["path"] = output;
    return Report::ok("wrote order-" + std::to_string(ext.total.order()) +
                          " quasigroup to " + output,
                      details);
  } catch (const Error& e2) {
    if (e2.code() != Errc::ModuleCheckFailed) throw;
    return Report::failed(e2.what(), json{{"reason", "ModuleCheckFailed"}});
  }
}

Report cmd_normalize_word(const std::string& path, const std::string& word,
                          const std::string& variety) {
  const Quasigroup q = read_quasigroup_file(path);
  const Term t = parse_term(word, q);
  const Term nf = normalize(t, q, variety == "MTS" ? Variety::MTS : Variety::P);
  const std::string s = format_term(nf, q);
  return Report::ok(s, json{{"input", word}, {"normalized", s}});
}

Report cmd_differentiate(const std::string& path, const std::string& word,
                         int var, const std::string& args_csv) {
  const Quasigroup q = read_quasigroup_file(path);
  if (!is_semisymmetric(q))
    return Report::failed("quasigroup is not semisymmetric",
                          json{{"reason", "NotSemisymmetric"}});
  const Term t = parse_term(word, q, /*allow_variables=*/true);
  if (var < 1) fail(Errc::ParseError, "--var indices start at 1");
  std::vector<int> args;
  std::istringstream ss(args_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (auto idx = q.index_of(tok))
      args.push_back(*idx);
    else
      fail(Errc::ParseError, "no element labeled '" + tok + "'");
  }
  const RingElement d = differentiate(t, var - 1, args, q);
  const std::string s = format_ring_element(d, q);
  return Report::ok(s, json{{"word", word}, {"var", var}, {"result", s}});
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite semisymmetric quasigroup toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json trail the subcommand
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit a machine-readable report");

  std::string file, second_file, base, word, args_csv, output;
  std::string variety = "P";
  int n = 0, var = 1;
  int cap = 1024;
  std::uint64_t budget = SearchLimits{}.node_budget;

  auto* c_check = app.add_subcommand("check", "validate a quasigroup file");
  c_check->add_option("file", file)->required();

  auto* c_semi = app.add_subcommand(
      "semisymmetrize", "cube construction on a quasigroup file");
  c_semi->add_option("file", file)->required();
  c_semi->add_option("--cap", cap, "largest allowed result order");

  auto* c_search =
      app.add_subcommand("mts-search", "search for a triple system of order n");
  c_search->add_option("n", n)->required();
  c_search->add_option("--budget", budget, "placement budget");

  auto* c_m2q = app.add_subcommand("mts-to-qg",
                                   "triple system JSON to quasigroup table");
  c_m2q->add_option("file", file)->required();

  auto* c_q2m = app.add_subcommand("qg-to-mts",
                                   "quasigroup table to triple system JSON");
  c_q2m->add_option("file", file)->required();

  auto* c_stab = app.add_subcommand("stabilizer-basis",
                                    "free basis of a point stabilizer");
  c_stab->add_option("file", file)->required();
  c_stab->add_option("--base", base, "base point label");

  auto* c_ideal =
      app.add_subcommand("ideal", "representation-ring ideal generators");
  c_ideal->add_option("file", file)->required();
  c_ideal->add_option("--base", base, "base point label");
  c_ideal->add_option("--variety", variety)->check(CLI::IsMember({"P", "MTS"}));

  auto* c_mod = app.add_subcommand("module-check",
                                   "test that a module kills the ideal");
  c_mod->add_option("qg-file", file)->required();
  c_mod->add_option("module-file", second_file)->required();
  c_mod->add_option("--base", base, "base point label");

  auto* c_ext = app.add_subcommand("extend", "build a module extension");
  c_ext->add_option("qg-file", file)->required();
  c_ext->add_option("module-file", second_file)->required();
  c_ext->add_option("--base", base, "base point label");
  c_ext->add_option("--cap", cap, "largest allowed result order");
  c_ext->add_option("--output", output, "write the table here");

  auto* c_norm = app.add_subcommand("normalize-word", "word normal form");
  c_norm->add_option("file", file)->required();
  c_norm->add_option("word", word)->required();
  c_norm->add_option("--variety", variety)->check(CLI::IsMember({"P", "MTS"}));

  auto* c_diff = app.add_subcommand("differentiate",
                                    "derivative of a word at arguments");
  c_diff->add_option("file", file)->required();
  c_diff->add_option("word", word)->required();
  c_diff->add_option("--var", var, "variable index (1-based)")->required();
  c_diff->add_option("--args", args_csv, "comma-separated element labels")
      ->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    Report rep;
    if (c_check->parsed()) rep = cmd_check(file);
    else if (c_semi->parsed()) rep = cmd_semisymmetrize(file, cap);
    else if (c_search->parsed()) rep = cmd_mts_search(n, budget);
    else if (c_m2q->parsed()) rep = cmd_mts_to_qg(file);
    else if (c_q2m->parsed()) rep = cmd_qg_to_mts(file);
    else if (c_stab->parsed()) rep = cmd_stabilizer_basis(file, base);
    else if (c_ideal->parsed()) rep = cmd_ideal(file, base, variety);
    else if (c_mod->parsed()) rep = cmd_module_check(file, second_file, base);
    else if (c_ext->parsed())
      rep = cmd_extend(file, second_file, base, cap, output);
    else if (c_norm->parsed()) rep = cmd_normalize_word(file, word, variety);
    else if (c_diff->parsed()) rep = cmd_differentiate(file, word, var, args_csv);

    if (json_mode) {
      out << json{{"status", status_name(rep.code)}, {"details", rep.details}}
                 .dump(2)
          << "\n";
    } else if (!rep.text.empty()) {
      out << rep.text;
      if (rep.text.back() != '\n') out << "\n";
    }
    return rep.code;
  } catch (const Error& e) {
    if (json_mode)
      out << json{{"status", "error"},
                  {"details", {{"code", errc_name(e.code())},
                               {"message", e.what()}}}}
                 .dump(2)
          << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qg::cli
