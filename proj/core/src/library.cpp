#include "simplicia/library.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "simplicia/errors.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "simplicia/store.hpp"

#ifndef SIMPLICIA_LIBRARY_DIR
#define SIMPLICIA_LIBRARY_DIR "data/library"
#endif

namespace simplicia {

const char* predicate_grammar() {
  return "predicate := clause (\"and\" clause)*\n"
         "clause    := scalar OP INT | homology[K].torsion (empty|nonempty)\n"
         "           | [not] FLAG | type (==|!=) \"STRING\"\n"
         "scalar    := dim | n | chi | facets | f[K] | homology[K].betti\n"
         "OP        := == | != | < | <= | > | >=\n"
         "FLAG      := pure | connected | strongly_connected | pseudomanifold\n"
         "           | has_boundary | closed | orientable";
}

namespace {

struct Token {
  enum Kind { word, number, string, op, lbracket, rbracket, dot, end } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto bad = [&](const std::string& why) {
    throw InvalidArgument("cannot parse predicate (" + why + ")\n" + predicate_grammar());
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::word, s.substr(i, j - i)});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::number, s.substr(i, j - i)});
      i = j;
    } else if (c == '"') {
      const std::size_t j = s.find('"', i + 1);
      if (j == std::string::npos) bad("unterminated string");
      out.push_back({Token::string, s.substr(i + 1, j - i - 1)});
      i = j + 1;
    } else if (c == '[') {
      out.push_back({Token::lbracket, "["});
      ++i;
    } else if (c == ']') {
      out.push_back({Token::rbracket, "]"});
      ++i;
    } else if (c == '.') {
      out.push_back({Token::dot, "."});
      ++i;
    } else if (c == '=' || c == '!' || c == '<' || c == '>') {
      std::string o(1, c);
      if (i + 1 < s.size() && s[i + 1] == '=') o += '=';
      if (o == "=" || o == "!") bad("unknown operator '" + o + "'");
      out.push_back({Token::op, o});
      i += o.size();
    } else {
      bad(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::end, ""});
  return out;
}

bool compare(std::int64_t x, const std::string& op, std::int64_t y) {
  if (op == "==") return x == y;
  if (op == "!=") return x != y;
  if (op == "<") return x < y;
  if (op == "<=") return x <= y;
  if (op == ">") return x > y;
  return x >= y;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  std::vector<std::function<bool(const LibraryEntry&)>> run() {
    std::vector<std::function<bool(const LibraryEntry&)>> out;
    out.push_back(clause());
    while (peek().kind == Token::word && peek().text == "and") {
      ++pos_;
      out.push_back(clause());
    }
    if (peek().kind != Token::end) bad("unexpected '" + peek().text + "'");
    return out;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  [[noreturn]] void bad(const std::string& why) const {
    throw InvalidArgument("cannot parse predicate (" + why + ")\n" + predicate_grammar());
  }
  const Token& peek() const { return toks_[pos_]; }
  const Token& take(Token::Kind k, const char* what) {
    if (peek().kind != k) bad(std::string("expected ") + what);
    return toks_[pos_++];
  }
  int index() {
    take(Token::lbracket, "'['");
    const int k = std::stoi(take(Token::number, "an index").text);
    take(Token::rbracket, "']'");
    if (k < 0) bad("negative index");
    return k;
  }

  std::function<bool(const LibraryEntry&)> clause() {
    const std::string w = take(Token::word, "a property name").text;
    static const std::vector<std::string> flags{"pure", "connected", "strongly_connected", "pseudomanifold",
                                                "has_boundary", "closed", "orientable"};
    if (w == "not") {
      const std::string f = take(Token::word, "a flag").text;
      if (std::find(flags.begin(), flags.end(), f) == flags.end()) bad("unknown flag '" + f + "'");
      auto get = flag(f);
      return [get](const LibraryEntry& e) { return !get(e); };
    }
    if (std::find(flags.begin(), flags.end(), w) != flags.end()) return flag(w);
    if (w == "type") {
      const std::string op = take(Token::op, "== or !=").text;
      if (op != "==" && op != "!=") bad("type supports only == and !=");
      const std::string want = take(Token::string, "a quoted string").text;
      return [op, want](const LibraryEntry& e) { return (e.topological_type == want) == (op == "=="); };
    }
    std::function<std::int64_t(const LibraryEntry&)> scalar;
    if (w == "dim") {
      scalar = [](const LibraryEntry& e) { return static_cast<std::int64_t>(e.complex.dim()); };
    } else if (w == "n") {
      scalar = [](const LibraryEntry& e) { return static_cast<std::int64_t>(e.complex.vertex_count()); };
    } else if (w == "chi") {
      scalar = [](const LibraryEntry& e) { return euler_characteristic(e.complex); };
    } else if (w == "facets") {
      scalar = [](const LibraryEntry& e) { return static_cast<std::int64_t>(e.complex.facet_count()); };
    } else if (w == "f") {
      const int k = index();
      scalar = [k](const LibraryEntry& e) {
        auto f = f_vector(e.complex);
        return k < static_cast<int>(f.size()) ? f[k] : 0;
      };
    } else if (w == "homology") {
      const int k = index();
      take(Token::dot, "'.'");
      const std::string part = take(Token::word, "betti or torsion").text;
      if (part == "torsion") {
        const std::string e = take(Token::word, "empty or nonempty").text;
        if (e != "empty" && e != "nonempty") bad("expected empty or nonempty");
        const bool want_empty = e == "empty";
        return [k, want_empty](const LibraryEntry& en) {
          auto h = homology(en.complex);
          const bool empty = k >= static_cast<int>(h.size()) || h[k].torsion.empty();
          return empty == want_empty;
        };
      }
      if (part != "betti") bad("expected betti or torsion");
      scalar = [k](const LibraryEntry& e) {
        auto h = homology(e.complex);
        return k < static_cast<int>(h.size()) ? h[k].betti : 0;
      };
    } else {
      bad("unknown property '" + w + "'");
    }
    const std::string op = take(Token::op, "a comparison operator").text;
    const std::int64_t value = std::stoll(take(Token::number, "an integer").text);
    return [scalar, op, value](const LibraryEntry& e) { return compare(scalar(e), op, value); };
  }

  std::function<bool(const LibraryEntry&)> flag(const std::string& f) {
    if (f == "orientable") {
      return [](const LibraryEntry& e) {
        auto fl = structural_flags(e.complex);
        return fl.is_pseudomanifold && orientability(e.complex).orientable;
      };
    }
    return [f](const LibraryEntry& e) {
      auto fl = structural_flags(e.complex);
      if (f == "pure") return fl.is_pure;
      if (f == "connected") return fl.is_connected;
      if (f == "strongly_connected") return fl.is_strongly_connected;
      if (f == "pseudomanifold") return fl.is_pseudomanifold;
      if (f == "has_boundary") return fl.has_boundary;
      return fl.is_pseudomanifold && !fl.has_boundary;  // closed
    };
  }
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Predicate Predicate::parse(const std::string& text) {
  Predicate p;
  p.clauses_ = Parser(text).run();
  return p;
}

bool Predicate::operator()(const LibraryEntry& e) const {
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const auto& c) { return c(e); });
}

bool looks_like_predicate(const std::string& query) {
  for (const char* op : {"==", "!=", "<", ">"})
    if (query.find(op) != std::string::npos) return true;
  std::istringstream words(query);
  std::string w;
  while (words >> w)
    if (w == "empty" || w == "nonempty") return true;
  return false;
}

std::filesystem::path Library::default_directory() {
  if (const char* env = std::getenv("SIMPLICIA_LIB"); env && *env) return env;
  return SIMPLICIA_LIBRARY_DIR;
}

Library Library::open(const std::filesystem::path& dir, bool strict) {
  Library lib;
  lib.dir_ = dir;
  const auto index_path = dir / "index.json";
  std::ifstream in(index_path);
  if (!in) throw Error("library index not found: " + index_path.string());
  nlohmann::json index;
  try {
    index = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(index_path.string(), e.what());
  }
  if (!index.is_object() || !index.contains("entries") || !index["entries"].is_array())
    throw ParseError(index_path.string(), "expected {\"entries\": [...]}");
  for (const auto& item : index["entries"]) {
    LibraryEntry e;
    try {
      e.name = item.at("name").get<std::string>();
      e.file = item.at("file").get<std::string>();
      e.topological_type = item.value("topological_type", "");
      e.provenance = item.value("provenance", "");
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(index_path.string(), ex.what());
    }
    e.complex = load(dir / e.file, strict).complex;
    lib.entries_.push_back(std::move(e));
  }
  return lib;
}

std::vector<const LibraryEntry*> Library::search_name(const std::string& needle) const {
  std::vector<const LibraryEntry*> out;
  const std::string n = lower(needle);
  for (const auto& e : entries_)
    if (lower(e.name).find(n) != std::string::npos) out.push_back(&e);
  return out;
}

std::vector<const LibraryEntry*> Library::search_predicate(const Predicate& p) const {
  std::vector<const LibraryEntry*> out;
  for (const auto& e : entries_)
    if (p(e)) out.push_back(&e);
  return out;
}

std::vector<const LibraryEntry*> Library::search(const std::string& query) const {
  if (looks_like_predicate(query)) return search_predicate(Predicate::parse(query));
  return search_name(query);
}

const LibraryEntry* Library::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace simplicia
