#include "ipf/codec.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <set>

#include "json.hpp"

namespace ipf {

namespace {

using nlohmann::json;

template <class S>
std::string render_seq(S const& a) {
  std::string out = "{";
  bool first = true;
  for (auto const& [x, v] : a.entries()) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += std::to_string(x);
    out += "\":";
    out += std::to_string(v);
  }
  out += '}';
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) +
                     ": " + e.what());
  }
}

Index parse_index_key(std::string const& key) {
  bool canonical = !key.empty() && (key == "0" || key[0] != '0');
  Index x = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), x);
  if (!canonical || ec != std::errc{} || ptr != key.data() + key.size()) {
    throw ParseError("key \"" + key + "\" is not a decimal index");
  }
  return x;
}

Value parse_value(json const& j, std::string const& where) {
  if (j.is_number_integer() && !j.is_number_unsigned()) {
    return j.get<std::int64_t>();
  }
  if (j.is_number_unsigned()) {
    auto u = j.get<std::uint64_t>();
    if (u <= static_cast<std::uint64_t>(std::numeric_limits<Value>::max())) {
      return static_cast<Value>(u);
    }
  }
  throw ParseError(where + ": expected a 64-bit integer, got " + j.dump());
}

Index parse_index(json const& j, std::string const& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<Index>(j.get<std::int64_t>());
  }
  throw ParseError(where + ": expected a non-negative index, got " + j.dump());
}

template <class S>
S seq_from_json(json const& j, char const* what) {
  if (!j.is_object()) {
    throw ParseError(std::string(what) + ": expected an object, got " +
                     j.dump());
  }
  std::vector<typename S::Entry> entries;
  for (auto const& [key, val] : j.items()) {
    Index x = parse_index_key(key);
    Value v = parse_value(val, std::string(what) + " index " + key);
    if (v == S::fill) {
      throw ParseError(std::string(what) + ": index " + key +
                       " stores the default value " + std::to_string(v));
    }
    entries.emplace_back(x, v);
  }
  try {
    return S::from_entries(std::move(entries));
  } catch (InvalidValue const& e) {
    throw ParseError(e.what());
  }
}

Perm perm_from_json(json const& j) {
  if (!j.is_array()) {
    throw ParseError("Perm: expected an array of [from,to] pairs, got " +
                     j.dump());
  }
  std::vector<Perm::Pair> pairs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto const& p = j[i];
    std::string where = "Perm pair " + std::to_string(i);
    if (!p.is_array() || p.size() != 2) {
      throw ParseError(where + ": expected [from,to], got " + p.dump());
    }
    pairs.emplace_back(parse_index(p[0], where), parse_index(p[1], where));
  }
  try {
    return Perm::from_pairs(std::move(pairs));
  } catch (InvalidValue const& e) {
    throw ParseError(e.what());
  }
}

void require_keys(json const& j, std::set<std::string> const& keys,
                  char const* what) {
  if (!j.is_object()) {
    throw ParseError(std::string(what) + ": expected an object, got " +
                     j.dump());
  }
  for (auto const& k : keys) {
    if (!j.contains(k)) {
      throw ParseError(std::string(what) + ": missing key \"" + k + "\"");
    }
  }
  for (auto const& [k, v] : j.items()) {
    if (!keys.contains(k)) {
      throw ParseError(std::string(what) + ": unexpected key \"" + k + "\"");
    }
  }
}

}  // namespace

std::string render(NSeq const& a) { return render_seq(a); }
std::string render(ZSeq const& z) { return render_seq(z); }

std::string render(Perm const& g) {
  std::string out = "[";
  bool first = true;
  for (auto const& [from, to] : g.moved()) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(from) + ',' + std::to_string(to) + ']';
  }
  out += ']';
  return out;
}

std::string render(Element const& alpha) {
  return "{\"g\":" + render(alpha.g) + ",\"d\":" + render(alpha.d) +
         ",\"r\":" + render(alpha.r) + "}";
}

std::string render(BPair const& u) {
  return "[" + render(u.p) + "," + render(u.q) + "]";
}

std::string render(SdpElem const& s) {
  return "{\"g\":" + render(s.g) + ",\"pair\":" + render(s.pair) + "}";
}

std::string render(QuotElem const& q) {
  return "{\"g\":" + render(q.g) + ",\"z\":" + render(q.z) + "}";
}

NSeq parse_nseq(std::string_view text) {
  return seq_from_json<NSeq>(parse_json(text), "NSeq");
}

ZSeq parse_zseq(std::string_view text) {
  return seq_from_json<ZSeq>(parse_json(text), "ZSeq");
}

Perm parse_perm(std::string_view text) { return perm_from_json(parse_json(text)); }

Element parse_element(std::string_view text) {
  json j = parse_json(text);
  require_keys(j, {"g", "d", "r"}, "Element");
  return Element{perm_from_json(j["g"]), seq_from_json<NSeq>(j["d"], "d"),
                 seq_from_json<NSeq>(j["r"], "r")};
}

QuotElem parse_quot(std::string_view text) {
  json j = parse_json(text);
  require_keys(j, {"g", "z"}, "QuotElem");
  return QuotElem{perm_from_json(j["g"]), seq_from_json<ZSeq>(j["z"], "z")};
}

std::ostream& operator<<(std::ostream& os, NSeq const& a) { return os << render(a); }
std::ostream& operator<<(std::ostream& os, ZSeq const& z) { return os << render(z); }
std::ostream& operator<<(std::ostream& os, Perm const& g) { return os << render(g); }
std::ostream& operator<<(std::ostream& os, Element const& a) { return os << render(a); }
std::ostream& operator<<(std::ostream& os, BPair const& u) { return os << render(u); }
std::ostream& operator<<(std::ostream& os, SdpElem const& s) { return os << render(s); }
std::ostream& operator<<(std::ostream& os, QuotElem const& q) { return os << render(q); }

}  // namespace ipf
