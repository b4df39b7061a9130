#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "hyperarr/cli.hpp"
#include "hyperarr/errors.hpp"

namespace hyperarr::cli {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(std::string_view(s).substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

std::int64_t parse_int(const std::string& token) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) throw ParseError("'" + token + "' is not an integer");
  return value;
}

using Params = std::map<std::string, std::vector<std::int64_t>>;

Params parse_params(const std::string& text, const std::set<std::string>& allowed, const std::string& where) {
  Params out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in '" + item + "' of " + where);
    const auto key = trim(std::string_view(item).substr(0, eq));
    if (!allowed.count(key)) throw ParseError("unknown key '" + key + "' for " + where);
    if (out.count(key)) throw ParseError("repeated key '" + key + "' for " + where);
    out[key] = parse_int_list(item.substr(eq + 1));
  }
  return out;
}

const std::vector<std::int64_t>& need(const Params& p, const std::string& key, const std::string& where) {
  const auto it = p.find(key);
  if (it == p.end()) throw ParseError(where + " needs " + key + "=...");
  return it->second;
}

std::int64_t need_one(const Params& p, const std::string& key, const std::string& where) {
  const auto& v = need(p, key, where);
  if (v.size() != 1) throw ParseError(where + " expects a single value for " + key);
  return v.front();
}

// Splits on '+' outside parentheses.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) throw ParseError("unbalanced ')' in graph spec");
    if (s[i] == '+' && depth == 0) {
      out.push_back(trim(std::string_view(s).substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in graph spec");
  out.push_back(trim(std::string_view(s).substr(start)));
  return out;
}

Graph parse_term(const std::string& term) {
  if (term.empty()) throw ParseError("empty graph term");
  if (term.rfind("bar(", 0) == 0) {
    if (term.back() != ')') throw ParseError("bar(...) must close with ')'");
    return add_pendants(parse_graph(term.substr(4, term.size() - 5)));
  }
  const auto colon = term.find(':');
  const auto name = trim(std::string_view(term).substr(0, colon));
  const auto rest = colon == std::string::npos ? std::string() : term.substr(colon + 1);
  const auto where = "graph '" + name + "'";
  if (name == "G" || name == "F") {
    const auto p = parse_params(rest, {"a", "k"}, where);
    const auto& a = need(p, "a", where);
    const auto k = need_one(p, "k", where);
    return name == "G" ? build_G(a, k) : build_F(a, k);
  }
  if (name == "Gr" || name == "Fa") {
    const auto p = parse_params(rest, {"a", "b", "k"}, where);
    const auto& a = need(p, "a", where);
    const auto& b = need(p, "b", where);
    const auto k = need_one(p, "k", where);
    return name == "Gr" ? build_G_ratio(a, b, k) : build_F_affine(a, b, k);
  }
  if (name == "C" || name == "K" || name == "P" || name == "E") {
    const auto p = parse_params(rest, {"k"}, where);
    const auto k = need_one(p, "k", where);
    if (k < 0) throw ParseError(where + " needs k >= 0");
    const auto size = static_cast<std::size_t>(k);
    if (name == "C") return cycle_graph(size);
    if (name == "K") return complete_graph(size);
    if (name == "P") return path_graph(size);
    return empty_graph(size);
  }
  throw ParseError("unknown graph '" + name + "'");
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (trim(text).empty()) return out;
  for (const auto& token : split(text, ',')) out.push_back(parse_int(token));
  return out;
}

std::vector<std::vector<std::int64_t>> parse_int_lists(const std::string& text) {
  std::vector<std::vector<std::int64_t>> out;
  if (trim(text).empty()) return out;
  for (const auto& part : split(text, ';')) out.push_back(parse_int_list(part));
  return out;
}

ArrangementFamily parse_family(const std::string& raw) {
  const auto spec = trim(raw);
  const auto colon = spec.find(':');
  const auto name = trim(std::string_view(spec).substr(0, colon));
  const auto rest = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  const auto where = "family '" + name + "'";
  ArrangementFamily f;
  if (name == "braid" || name == "catalan" || name == "shi") {
    parse_params(rest, {}, where);
    f = name == "braid" ? ArrangementFamily::braid()
        : name == "catalan" ? ArrangementFamily::catalan()
                            : ArrangementFamily::shi();
  } else if (name == "eq1" || name == "eq1minus0" || name == "diff" || name == "logcatalan") {
    const auto p = parse_params(rest, {"a"}, where);
    const auto& a = need(p, "a", where);
    f = name == "eq1"          ? ArrangementFamily::eq1(a)
        : name == "eq1minus0"  ? ArrangementFamily::eq1_minus_zero(a)
        : name == "diff"       ? ArrangementFamily::difference(a)
                               : ArrangementFamily::log_catalan(a);
  } else if (name == "affine" || name == "ratio") {
    const auto p = parse_params(rest, {"a", "b"}, where);
    const auto& a = need(p, "a", where);
    const auto& b = need(p, "b", where);
    f = name == "affine" ? ArrangementFamily::affine_mult(a, b) : ArrangementFamily::ratio(a, b);
  } else if (name == "extcatalan") {
    f = ArrangementFamily::extended_catalan(need_one(parse_params(rest, {"amax"}, where), "amax", where));
  } else if (name == "half") {
    f = ArrangementFamily::half_mult(need_one(parse_params(rest, {"a"}, where), "a", where));
  } else {
    throw ParseError("unknown family '" + name + "'");
  }
  try {
    f.validate();
  } catch (const InvalidParams& e) {
    throw ParseError(e.what());
  }
  return f;
}

Graph parse_graph(const std::string& spec) {
  std::vector<Graph> parts;
  try {
    for (const auto& term : split_terms(trim(spec))) parts.push_back(parse_term(term));
  } catch (const InvalidParams& e) {
    throw ParseError(e.what());
  } catch (const InvalidStep& e) {
    throw ParseError(e.what());
  }
  return parts.size() == 1 ? parts.front() : disjoint_union(parts);
}

}  // namespace hyperarr::cli
