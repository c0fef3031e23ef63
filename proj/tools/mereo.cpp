// Command-line front end: check axioms, induce structures across the two
// presentations, round-trip, enumerate models, run the witness fixtures,
// and export DOT diagrams.
//
// Exit codes: 0 all requested checks hold / command succeeded; 1 at least
// one axiom, profile, or round-trip failure (witnesses printed); 2 usage or
// parse errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mereo/mereo.hpp"

namespace {

using nlohmann::json;

mereo::ModelDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw mereo::Error(mereo::ErrorKind::parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return mereo::parse_model(buf.str());
}

json witness_json(const mereo::Witness& w, const mereo::Domain& d) {
  json out = json::object();
  for (const auto& [role, value] : w.roles) {
    if (std::holds_alternative<int>(value)) {
      out[role] = d.label(std::get<int>(value));
    } else if (std::holds_alternative<mereo::Subset>(value)) {
      json arr = json::array();
      std::get<mereo::Subset>(value).for_each([&](int i) { arr.push_back(d.label(i)); });
      out[role] = arr;
    } else {
      json fam = json::array();
      for (mereo::Subset X : std::get<mereo::SubsetFamily>(value)) {
        json arr = json::array();
        X.for_each([&](int i) { arr.push_back(d.label(i)); });
        fam.push_back(arr);
      }
      out[role] = fam;
    }
  }
  return out;
}

json verdict_json(const mereo::AxiomVerdict& v, const mereo::Domain& d) {
  json out;
  out["axiom"] = mereo::to_string(v.id);
  out["holds"] = v.holds;
  out["witness"] = v.witness ? witness_json(*v.witness, d) : json(nullptr);
  if (!v.method.empty()) out["method"] = v.method;
  return out;
}

int print_report(const mereo::AxiomReport& rep, const mereo::Domain& d, bool as_json,
                 const std::string& file, const std::string& kind) {
  if (as_json) {
    json out;
    out["file"] = file;
    out["kind"] = kind;
    json verdicts = json::array();
    for (const auto& v : rep.verdicts) verdicts.push_back(verdict_json(v, d));
    out["verdicts"] = verdicts;
    out["all_hold"] = rep.all_hold();
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& v : rep.verdicts) std::cout << mereo::format_verdict(v, d) << "\n";
  }
  return rep.all_hold() ? 0 : 1;
}

std::vector<mereo::AxiomId> parse_axiom_list(const std::string& csv) {
  std::vector<mereo::AxiomId> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) {
    if (cur.empty()) continue;
    auto id = mereo::axiom_from_string(cur);
    if (!id)
      throw mereo::Error(mereo::ErrorKind::bad_argument, "unknown axiom '" + cur + "'");
    out.push_back(*id);
  }
  if (out.empty())
    throw mereo::Error(mereo::ErrorKind::bad_argument, "empty axiom list");
  return out;
}

int cmd_check(const std::string& file, const std::string& theory, const std::string& axioms,
              bool strict_s1, bool as_json) {
  auto doc = load_document(file);
  if (!theory.empty() && theory != doc.kind) {
    std::cerr << "error: --theory=" << theory << " but '" << file << "' has kind "
              << doc.kind << "\n";
    return 2;
  }
  mereo::CheckOptions opt;
  opt.strict_s1_in_x = strict_s1;
  mereo::AxiomReport rep;
  if (doc.is_part()) {
    rep = axioms.empty() ? mereo::check_part_axioms(doc.part())
                         : mereo::check_part_axioms(doc.part(), parse_axiom_list(axioms));
  } else {
    if (axioms.empty()) {
      rep = mereo::check_sum_axioms(doc.sum(), mereo::default_sum_axioms(), opt);
      auto suite = mereo::derived_theorem_suite(doc.sum(), opt);
      for (auto& v : suite.verdicts) rep.verdicts.push_back(std::move(v));
    } else {
      rep = mereo::check_sum_axioms(doc.sum(), parse_axiom_list(axioms), opt);
    }
  }
  return print_report(rep, doc.domain(), as_json, file, doc.kind);
}

int cmd_induce(const std::string& file, const std::string& to) {
  auto doc = load_document(file);
  if (to == doc.kind) {
    std::cerr << "error: document already has kind " << doc.kind << "\n";
    return 2;
  }
  if (to == "sum") {
    auto s = mereo::induce_sum(doc.part());
    std::cout << mereo::export_model(mereo::document_of(std::move(s), doc.name));
  } else {
    auto m = mereo::induce_part(doc.sum());
    std::cout << mereo::export_model(mereo::document_of(std::move(m), doc.name));
  }
  return 0;
}

int cmd_roundtrip(const std::string& file, bool as_json) {
  auto doc = load_document(file);
  mereo::RoundtripReport rep =
      doc.is_part() ? mereo::roundtrip_part(doc.part()) : mereo::roundtrip_sum(doc.sum());
  const mereo::Domain& d = doc.domain();
  std::string diff;
  if (rep.part_difference)
    diff = d.label(rep.part_difference->first) + " " + d.label(rep.part_difference->second);
  if (rep.sum_difference)
    diff = d.label(rep.sum_difference->first) + " " +
           mereo::format_subset(rep.sum_difference->second, d);
  if (as_json) {
    json out;
    out["file"] = file;
    out["direction"] = doc.is_part() ? "part-first" : "sum-first";
    out["in_theory"] = rep.in_theory;
    out["equal"] = rep.equal;
    out["difference"] = rep.equal ? json(nullptr) : json(diff);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "direction: " << (doc.is_part() ? "part-first" : "sum-first") << "\n"
              << "in theory: " << (rep.in_theory ? "yes" : "no") << "\n"
              << "round-trip " << (rep.equal ? "equal" : "differs at " + diff) << "\n";
  }
  return rep.equal ? 0 : 1;
}

int cmd_enumerate(int n, const std::string& theory, bool count_only, bool up_to_iso,
                  unsigned threads, bool as_json) {
  const bool collect = up_to_iso;
  mereo::EnumerationResult res = theory == "part" ? mereo::enumerate_mereo(n, collect, threads)
                                                  : mereo::enumerate_sum(n, collect, threads);
  if (up_to_iso)
    res.iso_count = theory == "part" ? mereo::canonical_count(res.part_models)
                                     : mereo::canonical_count(res.sum_models);
  if (as_json) {
    json out;
    out["n"] = res.n;
    out["theory"] = mereo::to_string(res.theory);
    out["labeled"] = res.labeled_count;
    out["iso"] = res.iso_count ? json(*res.iso_count) : json(nullptr);
    out["via_bijection"] = res.via_bijection;
    out["elapsed_seconds"] = res.elapsed_seconds;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (count_only) {
    std::cout << (up_to_iso ? *res.iso_count : res.labeled_count) << "\n";
    return 0;
  }
  std::cout << "theory " << mereo::to_string(res.theory) << ", n=" << res.n << ": "
            << res.labeled_count << " labeled model(s)";
  if (res.iso_count) std::cout << ", " << *res.iso_count << " up to isomorphism";
  if (res.via_bijection) std::cout << " (via the part-model bijection)";
  std::cout << "\n";
  return 0;
}

int cmd_witnesses(bool as_json) {
  bool all_ok = true;
  json jfixtures = json::array();
  for (const auto& f : mereo::all_fixtures()) {
    auto rep = mereo::check_sum_axioms(f.structure, f.expected_ids());
    bool ok = true;
    for (const auto& [id, want] : f.expected) ok = ok && rep.holds(id) == want;
    all_ok = all_ok && ok;
    if (as_json) {
      json jf;
      jf["name"] = f.name;
      json profile = json::object();
      for (const auto& v : rep.verdicts) profile[mereo::to_string(v.id)] = v.holds;
      jf["profile"] = profile;
      jf["matched"] = ok;
      if (!f.note.empty()) jf["note"] = f.note;
      jfixtures.push_back(jf);
    } else {
      std::cout << f.name << ": profile " << (ok ? "matched" : "MISMATCH") << "\n";
      for (const auto& v : rep.verdicts)
        std::cout << "  " << mereo::format_verdict(v, f.structure.domain) << "\n";
      if (!f.note.empty()) std::cout << "  note: " << f.note << "\n";
    }
  }
  if (as_json) {
    json out;
    out["fixtures"] = jfixtures;
    out["all_matched"] = all_ok;
    std::cout << out.dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_export_dot(const std::string& file) {
  std::cout << mereo::export_dot(load_document(file));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite model toolkit for part-whole and sum structures"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file, theory, axioms, to;
  bool strict_s1 = false, count_only = false, up_to_iso = false;
  int n = 0;
  unsigned threads = 0;

  auto* check = app.add_subcommand("check", "Check axioms and derived theorems of a model file");
  check->add_option("file", file, "Model document")->required();
  check->add_option("--theory", theory, "Expected kind; mismatch is a usage error")
      ->check(CLI::IsMember({"part", "sum"}));
  check->add_option("--axioms", axioms,
                    "Comma-separated axiom list (default: the kind's axioms, plus the "
                    "derived suite for sum documents)");
  check->add_flag("--strict-s1-in-x", strict_s1,
                  "Require the sum of X to be a member of X when checking S1");

  auto* induce = app.add_subcommand("induce", "Induce the other presentation of a model");
  induce->add_option("file", file, "Model document")->required();
  induce->add_option("--to", to, "Target kind")
      ->check(CLI::IsMember({"part", "sum"}))
      ->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "Induce across and back, compare");
  roundtrip->add_option("file", file, "Model document")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all labeled models of a size");
  enumerate->add_option("--n", n, "Domain size")->required();
  enumerate->add_option("--theory", theory, "Which theory to enumerate")
      ->check(CLI::IsMember({"part", "sum"}))
      ->required();
  enumerate->add_flag("--count-only", count_only, "Print only the count");
  enumerate->add_flag("--up-to-iso", up_to_iso, "Also count up to isomorphism");
  enumerate->add_option("--threads", threads, "Worker threads (0 = auto)");

  auto* witnesses =
      app.add_subcommand("witnesses", "Run the five independence fixtures and verify profiles");
  (void)witnesses;

  auto* export_dot = app.add_subcommand("export-dot", "Write a DOT diagram of a model file");
  export_dot->add_option("file", file, "Model document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // normalize CLI11 error codes to the usage exit
  }

  const bool as_json = format == "json";
  try {
    if (app.got_subcommand(check)) return cmd_check(file, theory, axioms, strict_s1, as_json);
    if (app.got_subcommand(induce)) return cmd_induce(file, to);
    if (app.got_subcommand(roundtrip)) return cmd_roundtrip(file, as_json);
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(n, theory, count_only, up_to_iso, threads, as_json);
    if (app.got_subcommand(witnesses)) return cmd_witnesses(as_json);
    if (app.got_subcommand(export_dot)) return cmd_export_dot(file);
  } catch (const mereo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
