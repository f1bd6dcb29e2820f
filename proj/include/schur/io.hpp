#pragma once

// Group and table file formats.
//
// Three input shapes, distinguished by their first significant character:
//
//   perm <degree>     one generator per line, disjoint cycles: (1,2,3)(4,5)
//
//   pc <n>            polycyclic presentation: a line of relative orders,
//                     then relations "g2^4 = 0 0 1" (power of g2 equals the
//                     word with exponent vector 0 0 1) and "g3^g1 = 0 1 1"
//                     (conjugate of g3 by g1); omitted relations are trivial
//
//   { ... }           JSON character-table document for table-only runs
//
// Blank lines and '#' comments are ignored in the line-based formats.

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schur/chartab.hpp"
#include "schur/group.hpp"

namespace schur {

struct GroupInput {
  enum class Kind { permutation, polycyclic, table };
  Kind kind = Kind::permutation;
  std::optional<Group> group;           // permutation / polycyclic inputs
  std::optional<CharacterTable> table;  // table documents (detached)
};

namespace detail_io {

struct Line {
  std::string text;
  std::size_t number;  // 1-based position in the original stream
};

inline std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() &&
           std::isspace(static_cast<unsigned char>(raw.back())))
      raw.pop_back();
    std::size_t start = 0;
    while (start < raw.size() &&
           std::isspace(static_cast<unsigned char>(raw[start])))
      ++start;
    if (start == raw.size()) continue;
    out.push_back({raw.substr(start), no});
  }
  return out;
}

[[noreturn]] inline void fail_at(std::size_t lineno, const std::string& why) {
  throw_parse("line " + std::to_string(lineno) + ": " + why);
}

inline std::vector<u64> parse_numbers(const Line& ln, const std::string& tail,
                                      std::size_t expected) {
  std::istringstream is(tail);
  std::vector<u64> out;
  u64 v;
  while (is >> v) out.push_back(v);
  std::string rest;
  if (is.fail() && !is.eof()) fail_at(ln.number, "expected an integer");
  if (out.size() != expected)
    fail_at(ln.number, "expected " + std::to_string(expected) +
                           " integers, found " + std::to_string(out.size()));
  return out;
}

}  // namespace detail_io

// ---------------------------------------------------------------------------
// Line-based group formats.

inline Group read_permutation_group(const std::vector<detail_io::Line>& lines,
                                    u64 max_order) {
  using detail_io::fail_at;
  std::istringstream head(lines[0].text);
  std::string word;
  u64 degree = 0;
  head >> word >> degree;
  if (head.fail() || word != "perm")
    fail_at(lines[0].number, "expected 'perm <degree>'");
  std::string extra;
  if (head >> extra) fail_at(lines[0].number, "trailing tokens after degree");
  if (degree < 1 || degree > 100000)
    fail_at(lines[0].number, "degree out of range");
  std::vector<Elt> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      gens.push_back(parse_permutation(lines[i].text, degree));
    } catch (const Error& e) {
      fail_at(lines[i].number, e.what());
    }
  }
  return Group::permutation(degree, std::move(gens), max_order);
}

inline Group read_polycyclic_group(const std::vector<detail_io::Line>& lines,
                                   u64 max_order) {
  using detail_io::fail_at;
  std::istringstream head(lines[0].text);
  std::string word;
  u64 n = 0;
  head >> word >> n;
  if (head.fail() || word != "pc") fail_at(lines[0].number, "expected 'pc <n>'");
  std::string extra;
  if (head >> extra)
    fail_at(lines[0].number, "trailing tokens after generator count");
  if (n < 1 || n > 64)
    fail_at(lines[0].number, "generator count out of range");
  if (lines.size() < 2)
    fail_at(lines[0].number, "missing the relative-order line");

  PcRep rep;
  for (u64 o : detail_io::parse_numbers(lines[1], lines[1].text, n)) {
    if (o < 2 || o > UINT32_MAX) fail_at(lines[1].number, "relative order must be at least 2");
    rep.relord.push_back(static_cast<std::uint32_t>(o));
  }
  rep.power_tail.resize(n);
  rep.conj.assign(n, std::vector<Elt>(n));
  std::vector<bool> seen_power(n, false);
  std::vector<std::vector<bool>> seen_conj(n, std::vector<bool>(n, false));

  for (std::size_t li = 2; li < lines.size(); ++li) {
    const auto& ln = lines[li];
    const std::string& s = ln.text;
    std::size_t i = 0;
    auto expect = [&](char c) {
      if (i >= s.size() || s[i] != c)
        fail_at(ln.number, std::string("expected '") + c + "'");
      ++i;
    };
    auto skip_ws = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
    };
    auto parse_index = [&]() -> u64 {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      if (j == i) fail_at(ln.number, "expected a number");
      u64 v = std::stoull(s.substr(i, j - i));
      i = j;
      return v;
    };
    expect('g');
    u64 base = parse_index();
    if (base < 1 || base > n) fail_at(ln.number, "generator index out of range");
    expect('^');
    bool is_conj = i < s.size() && s[i] == 'g';
    u64 by = 0;
    if (is_conj) {
      ++i;
      by = parse_index();
      if (by < 1 || by > n)
        fail_at(ln.number, "conjugating index out of range");
      if (by >= base)
        fail_at(ln.number, "conjugating generator must come earlier");
    } else {
      u64 k = parse_index();
      if (k != rep.relord[base - 1])
        fail_at(ln.number, "power must equal the relative order");
    }
    skip_ws();
    expect('=');
    auto w64 = detail_io::parse_numbers(ln, s.substr(i), n);
    Elt w(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
      if (w64[t] >= rep.relord[t])
        fail_at(ln.number, "exponent exceeds the relative order");
      w[t] = static_cast<std::uint32_t>(w64[t]);
    }
    bool all_zero = std::all_of(w.begin(), w.end(), [](auto x) { return !x; });
    if (is_conj) {
      if (seen_conj[by - 1][base - 1])
        fail_at(ln.number, "duplicate conjugate relation");
      seen_conj[by - 1][base - 1] = true;
      Elt plain(n, 0);
      plain[base - 1] = 1;
      if (w != plain) rep.conj[by - 1][base - 1] = std::move(w);
    } else {
      if (seen_power[base - 1]) fail_at(ln.number, "duplicate power relation");
      seen_power[base - 1] = true;
      if (!all_zero) rep.power_tail[base - 1] = std::move(w);
    }
  }
  return Group::polycyclic(std::move(rep), max_order);
}

// ---------------------------------------------------------------------------
// Character-table documents.

namespace detail_io {

inline const nlohmann::json& member(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw_parse(std::string("table document: missing '") + key + "'");
  return j.at(key);
}

inline u64 as_u64(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_unsigned())
    throw_parse("table document: " + what + " must be a non-negative integer");
  return j.get<u64>();
}

inline std::vector<u64> as_u64_vector(const nlohmann::json& j,
                                      const std::string& what) {
  if (!j.is_array())
    throw_parse("table document: " + what + " must be an array");
  std::vector<u64> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(as_u64(x, what + " entry"));
  return out;
}

inline std::vector<std::uint32_t> as_u32_vector(const nlohmann::json& j,
                                                const std::string& what) {
  std::vector<std::uint32_t> out;
  for (u64 v : as_u64_vector(j, what)) {
    if (v > UINT32_MAX) throw_parse("table document: " + what + " entry too large");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

}  // namespace detail_io

inline CharacterTable table_from_json(const nlohmann::json& doc) {
  using detail_io::as_u32_vector;
  using detail_io::as_u64;
  using detail_io::as_u64_vector;
  using detail_io::member;
  const auto& tab = member(doc, "character_table");
  u64 order = as_u64(member(tab, "group_order"), "group_order");
  auto class_orders = as_u64_vector(member(tab, "class_orders"), "class_orders");
  auto class_sizes = as_u64_vector(member(tab, "class_sizes"), "class_sizes");
  auto inv = as_u32_vector(member(tab, "inverse_class"), "inverse_class");

  std::map<u64, std::vector<std::uint32_t>> powmaps;
  const auto& pm = member(tab, "power_maps");
  if (!pm.is_object())
    throw_parse("table document: power_maps must be an object");
  for (const auto& [key, arr] : pm.items()) {
    u64 k = 0;
    try {
      std::size_t used = 0;
      k = std::stoull(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw_parse("table document: power_maps key '" + key +
                  "' is not an integer");
    }
    powmaps[k] = as_u32_vector(arr, "power_maps[" + key + "]");
  }

  const auto& chars = member(tab, "characters");
  if (!chars.is_array())
    throw_parse("table document: characters must be an array");
  std::vector<std::vector<Cyclo>> rows;
  rows.reserve(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto& r = chars[i];
    if (!r.is_array())
      throw_parse("table document: characters[" + std::to_string(i) +
                  "] must be an array of value strings");
    std::vector<Cyclo> row;
    row.reserve(r.size());
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (!r[c].is_string())
        throw_parse("table document: characters[" + std::to_string(i) + "][" +
                    std::to_string(c) + "] must be a string");
      try {
        row.push_back(Cyclo::parse(r[c].get<std::string>()));
      } catch (const Error& e) {
        throw_parse("table document: characters[" + std::to_string(i) + "][" +
                    std::to_string(c) + "]: " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }

  return CharacterTable::detached(order, std::move(class_orders),
                                  std::move(class_sizes), std::move(inv),
                                  std::move(powmaps), std::move(rows));
}

inline CharacterTable read_table_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw_parse(std::string("table document: ") + e.what());
  }
  return table_from_json(doc);
}

// Serialize a table so that re-ingesting it reproduces the same detached
// behaviour: power maps carry k = 2 and every divisor of the exponent, which
// is everything the index bounds ever ask of a table.
inline nlohmann::ordered_json table_document(const CharacterTable& T) {
  nlohmann::ordered_json tab;
  tab["group_order"] = T.group_order();
  std::size_t k = T.num_classes();
  std::vector<u64> orders, sizes;
  std::vector<std::uint32_t> inv;
  for (std::size_t c = 0; c < k; ++c) {
    orders.push_back(T.class_order(c));
    sizes.push_back(T.class_size(c));
    inv.push_back(T.inverse_class(c));
  }
  tab["class_orders"] = orders;
  tab["class_sizes"] = sizes;
  tab["inverse_class"] = inv;

  std::vector<u64> keys{2};
  for (u64 d : divisors(T.exponent()))
    if (d >= 2 && d != 2) keys.push_back(d);
  std::sort(keys.begin(), keys.end());
  nlohmann::ordered_json maps = nlohmann::ordered_json::object();
  for (u64 key : keys) {
    std::vector<std::uint32_t> img(k);
    for (std::size_t c = 0; c < k; ++c)
      img[c] = T.power_class(c, static_cast<i64>(key));
    maps[std::to_string(key)] = img;
  }
  tab["power_maps"] = std::move(maps);

  nlohmann::ordered_json chars = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < T.num_rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < k; ++c) row.push_back(T.value(i, c).to_string());
    chars.push_back(std::move(row));
  }
  tab["characters"] = std::move(chars);

  nlohmann::ordered_json doc;
  doc["character_table"] = std::move(tab);
  return doc;
}

// ---------------------------------------------------------------------------
// Format dispatch.

inline GroupInput read_group_input(std::istream& in, u64 max_order) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::size_t first = 0;
  while (first < text.size() &&
         std::isspace(static_cast<unsigned char>(text[first])))
    ++first;
  if (first == text.size()) throw_parse("empty input");

  GroupInput gi;
  if (text[first] == '{') {
    gi.kind = GroupInput::Kind::table;
    gi.table = read_table_document(text);
    return gi;
  }
  std::istringstream is(text);
  auto lines = detail_io::significant_lines(is);
  std::istringstream head(lines[0].text);
  std::string word;
  head >> word;
  if (word == "perm") {
    gi.kind = GroupInput::Kind::permutation;
    gi.group = read_permutation_group(lines, max_order);
  } else if (word == "pc") {
    gi.kind = GroupInput::Kind::polycyclic;
    gi.group = read_polycyclic_group(lines, max_order);
  } else {
    detail_io::fail_at(lines[0].number,
                       "expected 'perm', 'pc', or a JSON table document");
  }
  return gi;
}

inline GroupInput read_group_file(const std::string& path, u64 max_order) {
  std::ifstream f(path);
  if (!f) throw_parse("cannot open '" + path + "'");
  return read_group_input(f, max_order);
}

}  // namespace schur
