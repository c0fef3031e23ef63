#pragma once
// Text format for structures, canonical export, and DOT diagram export.
//
// Grammar (line-oriented, UTF-8, '#' starts a comment, blank lines ignored):
//   kind part|sum
//   name <free text to end of line>        (optional)
//   note <free text to end of line>        (optional)
//   elements <label> <label> ...
//   part <x> <y>                           (kind part: x is part of y)
//   sum <x> { <member> ... }               (kind sum; { } is the empty set)
// Labels are whitespace-free and may not contain '{', '}' or '#'. kind and
// elements must precede any pair line. Nothing is closed implicitly: a
// reflexive relation lists its diagonal pairs.

#include <cctype>
#include <set>
#include <sstream>
#include <variant>

#include "core.hpp"
#include "report.hpp"

namespace mereo {

struct ModelDocument {
  std::string kind;  // "part" or "sum"
  std::string name, note;
  std::variant<MereoStructure, SumStructure> structure;

  bool is_part() const { return std::holds_alternative<MereoStructure>(structure); }
  const MereoStructure& part() const {
    if (!is_part()) throw Error(ErrorKind::bad_argument, "document holds a sum structure");
    return std::get<MereoStructure>(structure);
  }
  const SumStructure& sum() const {
    if (is_part()) throw Error(ErrorKind::bad_argument, "document holds a part structure");
    return std::get<SumStructure>(structure);
  }
  const Domain& domain() const {
    return is_part() ? std::get<MereoStructure>(structure).domain
                     : std::get<SumStructure>(structure).domain;
  }
};

inline ModelDocument document_of(MereoStructure m, std::string name = "",
                                 std::string note = "") {
  return ModelDocument{"part", std::move(name), std::move(note), std::move(m)};
}
inline ModelDocument document_of(SumStructure s, std::string name = "", std::string note = "") {
  return ModelDocument{"sum", std::move(name), std::move(note), std::move(s)};
}

namespace detail {

struct Token {
  std::string text;
  int column;  // 1-based start column in the source line
};

/// Whitespace-separated tokens with '{' and '}' always split off on their own.
inline std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> out;
  std::string cur;
  int cur_col = 0;
  auto flush = [&] {
    if (!cur.empty()) out.push_back({cur, cur_col});
    cur.clear();
  };
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '{' || c == '}') {
      flush();
      out.push_back({std::string(1, c), static_cast<int>(i) + 1});
    } else {
      if (cur.empty()) cur_col = static_cast<int>(i) + 1;
      cur += c;
    }
  }
  flush();
  return out;
}

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] inline void parse_fail(const std::string& msg, int line, int col = 0) {
  throw Error(ErrorKind::parse,
              "line " + std::to_string(line) + ": " + msg, line, col);
}

}  // namespace detail

inline ModelDocument parse_model(const std::string& text) {
  std::string kind, name, note;
  std::optional<Domain> dom;
  std::optional<PartRelation> part;
  std::optional<SumRelation> sum;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto toks = detail::tokenize_line(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (head == "kind") {
      if (!kind.empty()) detail::parse_fail("duplicate kind directive", lineno, toks[0].column);
      if (toks.size() != 2 || (toks[1].text != "part" && toks[1].text != "sum"))
        detail::parse_fail("expected 'kind part' or 'kind sum'", lineno, toks[0].column);
      kind = toks[1].text;
    } else if (head == "name" || head == "note") {
      std::string value = detail::trim(line.substr(line.find(head) + head.size()));
      (head == "name" ? name : note) = value;
    } else if (head == "elements") {
      if (dom) detail::parse_fail("duplicate elements directive", lineno, toks[0].column);
      std::vector<std::string> labels;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].text == "{" || toks[i].text == "}")
          detail::parse_fail("braces are not valid labels", lineno, toks[i].column);
        labels.push_back(toks[i].text);
      }
      try {
        dom = make_domain(labels);
      } catch (Error& e) {
        throw Error(e.kind, "line " + std::to_string(lineno) + ": " + e.what(), lineno,
                    toks[0].column);
      }
    } else if (head == "part" || head == "sum") {
      if (kind.empty())
        detail::parse_fail("kind must be declared before pair lines", lineno, toks[0].column);
      if (head != kind)
        detail::parse_fail("'" + head + "' line in a document of kind " + kind, lineno,
                           toks[0].column);
      if (!dom)
        detail::parse_fail("elements must be declared before pair lines", lineno,
                           toks[0].column);
      auto resolve = [&](const detail::Token& t) {
        int i = dom->find(t.text);
        if (i < 0)
          throw Error(ErrorKind::unknown_label,
                      "line " + std::to_string(lineno) + ": unknown label '" + t.text + "'",
                      lineno, t.column);
        return i;
      };
      if (head == "part") {
        if (!part) part.emplace(dom->size());
        if (toks.size() != 3)
          detail::parse_fail("expected 'part <x> <y>'", lineno, toks[0].column);
        int x = resolve(toks[1]), y = resolve(toks[2]);
        if (part->at(x, y))
          throw Error(ErrorKind::duplicate_pair,
                      "line " + std::to_string(lineno) + ": duplicate pair '" + toks[1].text +
                          " " + toks[2].text + "'",
                      lineno, toks[1].column);
        part->set(x, y);
      } else {
        if (!sum) sum.emplace(dom->size());
        if (toks.size() < 4 || toks[2].text != "{" || toks.back().text != "}")
          detail::parse_fail("expected 'sum <x> { <members> }'", lineno, toks[0].column);
        int x = resolve(toks[1]);
        Subset X;
        for (size_t i = 3; i + 1 < toks.size(); ++i) {
          if (toks[i].text == "{")
            detail::parse_fail("nested braces", lineno, toks[i].column);
          int m = resolve(toks[i]);
          if (X.contains(m))
            throw Error(ErrorKind::duplicate_member,
                        "line " + std::to_string(lineno) + ": duplicate member '" +
                            toks[i].text + "'",
                        lineno, toks[i].column);
          X = X.with(m);
        }
        if (sum->holds(x, X))
          throw Error(ErrorKind::duplicate_pair,
                      "line " + std::to_string(lineno) + ": duplicate sum pair for '" +
                          toks[1].text + "'",
                      lineno, toks[1].column);
        sum->add(x, X);
      }
    } else {
      detail::parse_fail("unknown directive '" + head + "'", lineno, toks[0].column);
    }
  }

  if (kind.empty()) detail::parse_fail("missing kind directive", lineno ? lineno : 1);
  if (!dom) detail::parse_fail("missing elements directive", lineno ? lineno : 1);
  if (kind == "part") {
    if (!part) part.emplace(dom->size());
    return ModelDocument{kind, std::move(name), std::move(note),
                         MereoStructure(std::move(*dom), std::move(*part))};
  }
  if (!sum) sum.emplace(dom->size());
  return ModelDocument{kind, std::move(name), std::move(note),
                       SumStructure(std::move(*dom), std::move(*sum))};
}

/// Canonical text: fixed directive order, part pairs ascending by (x, y)
/// index, sum pairs ascending by element then subset; one pair per line.
inline std::string export_model(const ModelDocument& doc) {
  std::ostringstream out;
  out << "kind " << doc.kind << "\n";
  if (!doc.name.empty()) out << "name " << doc.name << "\n";
  if (!doc.note.empty()) out << "note " << doc.note << "\n";
  const Domain& d = doc.domain();
  out << "elements";
  for (const auto& l : d.labels()) out << " " << l;
  out << "\n";
  if (doc.is_part()) {
    const PartRelation& r = doc.part().part;
    for (int x = 0; x < d.size(); ++x)
      for (int y = 0; y < d.size(); ++y)
        if (r.at(x, y)) out << "part " << d.label(x) << " " << d.label(y) << "\n";
  } else {
    const SumRelation& r = doc.sum().sum;
    for (int x = 0; x < d.size(); ++x)
      for (Mask X : r.family(x)) {
        out << "sum " << d.label(x) << " {";
        Subset(X).for_each([&](int m) { out << " " << d.label(m); });
        out << " }\n";
      }
  }
  return out.str();
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Part structures draw the covering relation bottom-to-top with solid
/// arrows from part to whole.
inline std::string export_dot(const MereoStructure& m) {
  const int n = m.domain.size();
  auto strict = [&](int x, int y) { return x != y && m.part.at(x, y); };
  std::ostringstream out;
  out << "digraph part_structure {\n  rankdir=BT;\n";
  for (int i = 0; i < n; ++i)
    out << "  e" << i << " [label=\"" << detail::dot_escape(m.domain.label(i)) << "\"];\n";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!strict(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < n && covered; ++z)
        covered = !(strict(x, z) && strict(z, y));
      if (covered) out << "  e" << x << " -> e" << y << ";\n";
    }
  out << "}\n";
  return out.str();
}

/// Sum structures draw elements as labeled dots, summed collections as
/// brace-labeled boxes, and a dashed arrow from each element to every
/// collection it sums.
inline std::string export_dot(const SumStructure& s) {
  const int n = s.domain.size();
  std::ostringstream out;
  out << "digraph sum_structure {\n  rankdir=BT;\n"
      << "  node [shape=point, width=0.12];\n";
  for (int i = 0; i < n; ++i)
    out << "  e" << i << " [xlabel=\"" << detail::dot_escape(s.domain.label(i)) << "\"];\n";
  std::set<Mask> subsets;
  for (int x = 0; x < n; ++x)
    for (Mask X : s.sum.family(x)) subsets.insert(X);
  out << "  node [shape=box, style=rounded, fontsize=10];\n";
  for (Mask X : subsets)
    out << "  s" << X << " [label=\""
        << detail::dot_escape(format_subset(Subset(X), s.domain)) << "\"];\n";
  for (int x = 0; x < n; ++x)
    for (Mask X : s.sum.family(x)) out << "  e" << x << " -> s" << X << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

inline std::string export_dot(const ModelDocument& doc) {
  return doc.is_part() ? export_dot(doc.part()) : export_dot(doc.sum());
}

}  // namespace mereo
