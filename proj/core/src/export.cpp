#include "simplicia/export.hpp"

#include <sstream>

#include "simplicia/errors.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"

namespace simplicia {

namespace {

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '^': out += "\\^{}"; break;
      case '_': out += "\\_"; break;
      case '#': out += "\\#"; break;
      case '&': out += "\\&"; break;
      case '%': out += "\\%"; break;
      case '$': out += "\\$"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

template <class T>
std::string list(const std::vector<T>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

}  // namespace

std::string export_latex(const Complex& c) {
  std::ostringstream out;
  const std::string name = c.name().empty() ? "unnamed complex" : c.name();
  out << "% " << name << "\n";
  out << "\\begin{longtable}{r|l}\n";
  out << "\\multicolumn{2}{l}{" << latex_escape(name) << ", " << c.facet_count() << " facets} \\\\\n\\hline\n";
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    out << (i + 1) << " & $\\langle ";
    const auto& f = c.facets()[i];
    for (std::size_t t = 0; t < f.size(); ++t) out << (t ? "\\, " : "") << latex_escape(to_string(c.labels()[f[t] - 1]));
    out << " \\rangle$ \\\\\n";
  }
  out << "\\end{longtable}\n\n";
  out << "\\begin{tabular}{ll}\n";
  out << "dimension & $" << c.dim() << "$ \\\\\n";
  out << "$f$-vector & $" << list(f_vector(c)) << "$ \\\\\n";
  out << "$\\chi$ & $" << euler_characteristic(c) << "$ \\\\\n";
  out << "homology & $" << format_homology(homology(c)) << "$ \\\\\n";
  out << "\\end{tabular}\n";
  return out.str();
}

std::string export_topaz(const Complex& c) {
  std::ostringstream out;
  if (!c.name().empty()) out << "# " << c.name() << "\n";
  out << "FACETS\n";
  for (const auto& f : c.facets()) {
    out << "{";
    for (std::size_t t = 0; t < f.size(); ++t) out << (t ? " " : "") << (f[t] - 1);
    out << "}\n";
  }
  out << "\nVERTEX_LABELS\n";
  for (int v = 0; v < c.vertex_count(); ++v) out << (v ? " " : "") << to_string(c.labels()[v]);
  out << "\n";
  return out.str();
}

Complex import_topaz(const std::string& text) {
  std::istringstream in(text);
  std::string line, section, name;
  std::vector<std::vector<std::int64_t>> raw;
  std::vector<std::string> label_words;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("# ", 0) == 0 && name.empty() && section.empty()) {
      name = line.substr(2);
      continue;
    }
    if (line.empty()) {
      section.clear();
      continue;
    }
    if (line == "FACETS" || line == "VERTEX_LABELS") {
      section = line;
      continue;
    }
    if (section == "FACETS") {
      if (line.front() != '{' || line.back() != '}')
        throw ParseError("line " + std::to_string(lineno), "expected {v0 v1 ...}");
      std::istringstream f(line.substr(1, line.size() - 2));
      std::vector<std::int64_t> facet;
      std::int64_t v;
      while (f >> v) {
        if (v < 0) throw ParseError("line " + std::to_string(lineno), "negative vertex");
        facet.push_back(v + 1);
      }
      if (!f.eof()) throw ParseError("line " + std::to_string(lineno), "non-integer vertex");
      raw.push_back(std::move(facet));
    } else if (section == "VERTEX_LABELS") {
      std::istringstream w(line);
      std::string word;
      while (w >> word) label_words.push_back(word);
    }
  }
  if (raw.empty()) throw ParseError("FACETS", "no facets");
  std::optional<std::vector<Label>> labels;
  if (!label_words.empty()) {
    std::vector<Label> ls;
    for (const auto& w : label_words) {
      std::int64_t value = 0;
      std::size_t used = 0;
      try {
        value = std::stoll(w, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == w.size()) ls.emplace_back(value);
      else ls.emplace_back(w);
    }
    labels = std::move(ls);
  }
  std::int64_t top = 0;
  for (const auto& f : raw)
    for (auto v : f) top = std::max(top, v);
  if (labels && static_cast<std::int64_t>(labels->size()) < top)
    throw ParseError("VERTEX_LABELS", "fewer labels than vertices");
  if (!labels) {
    std::vector<Label> ls;
    for (std::int64_t v = 1; v <= top; ++v) ls.emplace_back(v);
    labels = std::move(ls);
  }
  return from_facets(raw, labels).with_name(name);
}

}  // namespace simplicia
