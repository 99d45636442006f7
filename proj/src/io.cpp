#include "qg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qg/error.hpp"

#include <json.hpp>

namespace qg {

using nlohmann::json;

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const std::string& what) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "expected integer for " + what + ", got '" + tok + "'");
  }
  if (pos != tok.size())
    fail(Errc::ParseError, "trailing characters in " + what + " '" + tok + "'");
  return v;
}

}  // namespace

Quasigroup read_quasigroup(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(Errc::ParseError, "empty input");
  const auto head = split_ws(line);
  if (head.size() != 1) fail(Errc::ParseError, "first line must be the order");
  const int n = parse_int(head[0], "order");
  if (n < 1) fail(Errc::ParseError, "order must be positive");

  std::vector<std::vector<int>> table;
  table.reserve(n);
  for (int r = 0; r < n; ++r) {
    if (!std::getline(in, line))
      fail(Errc::ParseError, "expected " + std::to_string(n) + " table rows");
    const auto toks = split_ws(line);
    if (static_cast<int>(toks.size()) != n)
      fail(Errc::ParseError,
           "row " + std::to_string(r + 1) + " has " +
               std::to_string(toks.size()) + " entries, expected " +
               std::to_string(n));
    std::vector<int> row(n);
    for (int c = 0; c < n; ++c) row[c] = parse_int(toks[c], "table entry");
    table.push_back(std::move(row));
  }

  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] != "labels:")
      fail(Errc::ParseError, "unexpected trailing line '" + line + "'");
    toks.erase(toks.begin());
    if (static_cast<int>(toks.size()) != n)
      fail(Errc::ParseError, "expected " + std::to_string(n) + " labels");
    labels = std::move(toks);
  }
  return Quasigroup::from_mul_table(table, std::move(labels));
}

Quasigroup read_quasigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  return read_quasigroup(in);
}

std::string write_quasigroup(const Quasigroup& q, bool with_labels) {
  std::ostringstream out;
  out << q.order() << "\n";
  for (int x = 0; x < q.order(); ++x) {
    for (int y = 0; y < q.order(); ++y) {
      if (y) out << ' ';
      out << q.mul(x, y);
    }
    out << "\n";
  }
  if (with_labels) {
    // only worth a line when the labels differ from the default digits
    bool interesting = false;
    for (int i = 0; i < q.order(); ++i)
      if (q.label(i) != std::to_string(i)) interesting = true;
    if (interesting) {
      out << "labels:";
      for (int i = 0; i < q.order(); ++i) out << ' ' << q.label(i);
      out << "\n";
    }
  }
  return out.str();
}

TripleSystem read_triple_system(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("triples"))
    fail(Errc::ParseError, "expected {\"n\":..., \"triples\":[...]}");
  TripleSystem ts;
  ts.n = j["n"].get<int>();
  for (const auto& t : j["triples"]) {
    if (!t.is_array() || t.size() != 3)
      fail(Errc::ParseError, "each triple must have three points");
    ts.triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  return TripleSystem::canonical(ts.n, std::move(ts.triples));
}

TripleSystem read_triple_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  return read_triple_system(in);
}

std::string write_triple_system(const TripleSystem& ts) {
  json j;
  j["n"] = ts.n;
  j["triples"] = json::array();
  for (const auto& t : ts.triples) j["triples"].push_back({t[0], t[1], t[2]});
  return j.dump();
}

ModuleAssignment read_module(std::istream& in, const Quasigroup& q) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("modulus") || !j.contains("dim") ||
      !j.contains("assign"))
    fail(Errc::ParseError,
         "expected {\"modulus\":..., \"dim\":..., \"assign\":{...}}");
  const long long m = j["modulus"].get<long long>();
  const int k = j["dim"].get<int>();
  std::vector<MatrixMod> assign(static_cast<size_t>(q.order()),
                                MatrixMod(std::max(k, 1), std::max(m, 2ll)));
  std::vector<bool> given(q.order(), false);
  for (const auto& [label, rows] : j["assign"].items()) {
    const auto idx = q.index_of(label);
    if (!idx) fail(Errc::ParseError, "unknown element label '" + label + "'");
    std::vector<std::vector<long long>> r;
    for (const auto& row : rows) r.push_back(row.get<std::vector<long long>>());
    if (static_cast<int>(r.size()) != k)
      fail(Errc::ParseError, "matrix for '" + label + "' is not " +
                                 std::to_string(k) + "x" + std::to_string(k));
    assign[*idx] = MatrixMod::from_rows(r, m);
    given[*idx] = true;
  }
  for (int i = 0; i < q.order(); ++i)
    if (!given[i])
      fail(Errc::ParseError, "no matrix assigned to element '" + q.label(i) + "'");
  return ModuleAssignment(m, k, std::move(assign));
}

ModuleAssignment read_module_file(const std::string& path,
                                  const Quasigroup& q) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  return read_module(in, q);
}

namespace {

// Recursive-descent parser for the parenthesized infix word syntax.
struct TermParser {
  const std::string& s;
  size_t pos = 0;
  const Quasigroup& q;
  bool allow_vars;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  [[noreturn]] void err(const std::string& msg) {
    fail(Errc::ParseError,
         msg + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  bool at_op() {
    return pos < s.size() && (s[pos] == '*' || s[pos] == '/' || s[pos] == '\\');
  }

  Term primary() {
    skip_ws();
    if (pos >= s.size()) err("unexpected end of word");
    if (s[pos] == '(') {
      ++pos;
      Term t = expression();
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') err("expected ')'");
      ++pos;
      return t;
    }
    size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')' && s[pos] != '*' && s[pos] != '/' &&
           s[pos] != '\\')
      ++pos;
    if (pos == start) err("expected an element, X, or '('");
    const std::string tok = s.substr(start, pos - start);
    if (tok == "X") return Term::x();
    if (allow_vars && tok.size() >= 2 && tok[0] == 'x' &&
        std::all_of(tok.begin() + 1, tok.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int i = parse_int(tok.substr(1), "variable index");
      if (i < 1) err("variable indices start at x1");
      return Term::variable(i - 1);
    }
    if (auto idx = q.index_of(tok)) return Term::element(*idx);
    err("unknown element '" + tok + "'");
  }

  Term expression() {
    Term l = primary();
    skip_ws();
    if (!at_op()) return l;
    const char op = s[pos++];
    Term r = primary();
    skip_ws();
    if (at_op()) err("ambiguous word; parenthesize explicitly");
    switch (op) {
      case '*': return Term::mul(std::move(l), std::move(r));
      case '/': return Term::rdiv(std::move(l), std::move(r));
      default: return Term::ldiv(std::move(l), std::move(r));
    }
  }

  Term parse() {
    Term t = expression();
    skip_ws();
    if (pos != s.size()) err("trailing characters");
    return t;
  }
};

void format_term_rec(const Term& t, const Quasigroup& q, std::string& out,
                     bool parens) {
  switch (t.kind()) {
    case Term::Kind::Element:
      out += q.label(t.value());
      return;
    case Term::Kind::X:
      out += 'X';
      return;
    case Term::Kind::Variable:
      out += 'x' + std::to_string(t.value() + 1);
      return;
    default:
      break;
  }
  const char op = t.kind() == Term::Kind::Mul    ? '*'
                  : t.kind() == Term::Kind::RDiv ? '/'
                                                 : '\\';
  if (parens) out += '(';
  format_term_rec(t.left(), q, out, true);
  out += op;
  format_term_rec(t.right(), q, out, true);
  if (parens) out += ')';
}

}  // namespace

Term parse_term(const std::string& text, const Quasigroup& q,
                bool allow_variables) {
  TermParser p{text, 0, q, allow_variables};
  return p.parse();
}

std::string format_term(const Term& t, const Quasigroup& q) {
  std::string out;
  format_term_rec(t, q, out, false);
  return out;
}

FreeWord parse_free_word(const std::string& text, const Quasigroup& q) {
  std::vector<FreeWord::Letter> letters;
  for (const auto& tok : split_ws(text)) {
    if (tok == "1") continue;
    if (tok.size() < 4 || tok[0] != 'R' || tok[1] != '(')
      fail(Errc::ParseError, "expected letter like R(a), got '" + tok + "'");
    const auto close = tok.find(')');
    if (close == std::string::npos)
      fail(Errc::ParseError, "missing ')' in '" + tok + "'");
    const std::string label = tok.substr(2, close - 2);
    const auto idx = q.index_of(label);
    if (!idx) fail(Errc::ParseError, "unknown element '" + label + "'");
    const std::string rest = tok.substr(close + 1);
    int exp = +1;
    if (rest == "^-1")
      exp = -1;
    else if (!rest.empty())
      fail(Errc::ParseError, "bad exponent '" + rest + "'");
    letters.push_back({*idx, exp});
  }
  return FreeWord::from_letters(letters);
}

std::string format_free_word(const FreeWord& w, const Quasigroup& q) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "R(" + q.label(l.gen) + ")";
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

std::string format_ring_element(const RingElement& r, const Quasigroup& q) {
  if (r.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : r.terms()) {
    const long long mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || w.is_identity()) {
      out += std::to_string(mag);
      if (!w.is_identity()) out += ' ';
    }
    if (!w.is_identity()) out += format_free_word(w, q);
  }
  return out;
}

}  // namespace qg
