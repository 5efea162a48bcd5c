#include "rbn/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace rbn {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int small_int(const std::string& text, const std::string& what, int lo, int hi) {
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || p != end) throw ParseError("expected an integer for " + what + ", got '" + text + "'");
  if (v < lo || v > hi)
    throw ParseError(what + " = " + text + " is outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

std::uint64_t coordinate(const std::string& text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || p != end) throw ParseError("bad point coordinate '" + text + "'");
  return v;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  const std::string t = strip(text);
  Integer v;
  if (t.empty() || v.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) throw ParseError("expected an integer, got '" + t + "'");
  return v;
}

Rational parse_rational(std::string_view text) {
  const std::string t = strip(text);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t));
  const Integer n = parse_integer(t.substr(0, slash));
  const Integer d = parse_integer(t.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + t + "'");
  return ratio(n, d);
}

Surface parse_surface(std::string_view text) {
  const std::string t = strip(text);
  const auto parts = split(t, ':');
  const std::string& head = parts[0];
  auto options = [&](std::size_t from) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = from; i < parts.size(); ++i) {
      const auto eq = parts[i].find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value in surface spec, got '" + parts[i] + "'");
      if (!kv.emplace(parts[i].substr(0, eq), parts[i].substr(eq + 1)).second)
        throw ParseError("repeated key in surface spec: '" + parts[i] + "'");
    }
    return kv;
  };
  if (head.rfind("blp2", 0) == 0 && head.size() == 4) {
    auto kv = options(1);
    if (!kv.count("k")) throw ParseError("blp2 needs k=<points> in '" + t + "'");
    const int k = small_int(kv["k"], "k", 0, 9);
    PointConfig cfg;
    if (kv.count("collinear") && kv.count("points")) throw ParseError("collinear= and points= cannot be combined");
    if (kv.count("collinear")) {
      std::vector<int> idx;
      for (const auto& f : split(kv["collinear"], ',')) idx.push_back(small_int(f, "collinear index", 1, k));
      cfg = PointConfig::collinear_points(std::move(idx));
    } else if (kv.count("points")) {
      std::vector<ProjectivePoint> pts;
      for (const auto& f : split(kv["points"], '/')) {
        const auto c = split(f, ',');
        if (c.size() != 3) throw ParseError("a point needs three coordinates x,y,z, got '" + f + "'");
        pts.push_back({coordinate(c[0]), coordinate(c[1]), coordinate(c[2])});
      }
      if (static_cast<int>(pts.size()) != k) throw ParseError("points= lists " + std::to_string(pts.size()) + " points but k = " + std::to_string(k));
      cfg = PointConfig::explicit_points(std::move(pts));
    }
    for (const auto& [key, _] : kv)
      if (key != "k" && key != "collinear" && key != "points") throw ParseError("unknown blp2 option '" + key + "'");
    return Surface::blowup_p2(k, std::move(cfg));
  }
  if (head.rfind("blF", 0) == 0) {
    const int e = small_int(head.substr(3), "e", 0, 1000);
    auto kv = options(1);
    if (kv.size() != 1 || !kv.count("k")) throw ParseError("blF<e> needs exactly k=<points> in '" + t + "'");
    return Surface::blowup_hirzebruch(e, small_int(kv["k"], "k", 0, 9));
  }
  if (parts.size() != 1) throw ParseError("unexpected options in surface spec '" + t + "'");
  if (head.rfind("dp", 0) == 0) return Surface::del_pezzo(small_int(head.substr(2), "del Pezzo degree", 4, 7));
  if (head.rfind("F", 0) == 0) return Surface::hirzebruch(small_int(head.substr(1), "e", 0, 1000));
  throw ParseError("unknown surface spec '" + t + "' (expected F<e>, blp2:k=<k>, blF<e>:k=<k> or dp<d>)");
}

Divisor parse_divisor(const Surface& s, std::string_view text) {
  const std::string t = strip(text);
  if (t.empty()) throw ParseError("empty divisor expression");
  Divisor out = Divisor::zero(s);
  if (t == "0") return out;
  std::size_t i = 0;
  bool first = true;
  while (i < t.size()) {
    const std::size_t term_start = i;
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected + or - before '" + t.substr(i) + "'");
    }
    std::size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    Integer coeff = 1;
    if (j > i) coeff = parse_integer(t.substr(i, j - i));
    std::size_t k = j;
    if (k < t.size() && std::isalpha(static_cast<unsigned char>(t[k]))) {
      ++k;
      while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
    }
    const std::string sym = t.substr(j, k - j);
    const std::string term = t.substr(term_start, k - term_start);
    if (sym.empty()) throw ParseError("term '" + term + "' has no basis symbol (expected L, E, F or E1..E9)");
    std::optional<std::size_t> index;
    const std::string key = sym == "H" ? "L" : sym;
    for (std::size_t b = 0; b < s.picard_rank(); ++b)
      if (s.basis_symbol(b) == key) index = b;
    if (!index) throw ParseError("symbol '" + sym + "' in term '" + term + "' is not a basis class of " + s.name());
    out += (sign * coeff) * basis_class(s, *index);
    i = k;
    first = false;
  }
  return out;
}

ChernCharacter parse_character(const Surface& s, std::string_view text) {
  const std::string t = strip(text);
  std::map<std::string, std::string> kv;
  for (const auto& f : split(t, ';')) {
    if (f.empty()) continue;
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in character, got '" + f + "'");
    if (!kv.emplace(f.substr(0, eq), f.substr(eq + 1)).second) throw ParseError("repeated key in character: '" + f + "'");
  }
  for (const auto& [key, _] : kv)
    if (key != "r" && key != "c1" && key != "chi" && key != "ch2") throw ParseError("unknown character key '" + key + "'");
  if (!kv.count("r") || !kv.count("c1")) throw ParseError("character needs r= and c1= in '" + t + "'");
  if (kv.count("chi") == kv.count("ch2")) throw ParseError("character needs exactly one of chi= or ch2= in '" + t + "'");
  const Integer r = parse_integer(kv["r"]);
  if (r <= 0) throw ParseError("rank must be positive, got r=" + kv["r"]);
  const Divisor c1 = parse_divisor(s, kv["c1"]);
  if (kv.count("chi")) return character_from_chi(r, c1, parse_integer(kv["chi"]));
  try {
    return ChernCharacter(r, c1, parse_rational(kv["ch2"]));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace rbn
