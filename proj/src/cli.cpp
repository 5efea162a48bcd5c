#include "rbn/cli.hpp"

#include "rbn/decide.hpp"
#include "rbn/interpolation.hpp"
#include "rbn/parse.hpp"
#include "rbn/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <deque>
#include <functional>
#include <sstream>

namespace rbn {

namespace {

constexpr int kOk = 0, kUnknown = 1, kInputError = 2, kInternalError = 3;

struct Common {
  std::string surface;
  std::string format;
  std::uint64_t seed = 1;
  int trials = 3;
  std::uint32_t prime = 0;  // 0: environment or default
};

OracleOptions oracle_options(const Common& c) {
  OracleOptions o;
  o.seed = c.seed;
  o.trials = c.trials;
  if (const char* env = std::getenv("RBN_ORACLE_PRIME")) {
    const Integer p = parse_integer(env);
    if (!p.fits_ulong_p() || p >= (Integer(1) << 31)) throw ParseError(std::string("RBN_ORACLE_PRIME out of range: ") + env);
    o.prime = static_cast<std::uint32_t>(p.get_ui());
  }
  if (c.prime != 0) o.prime = c.prime;
  if (!is_prime(o.prime) || o.prime <= 1000) throw ParseError("oracle modulus " + std::to_string(o.prime) + " must be a prime > 1000");
  if (o.trials < 1) throw ParseError("--trials must be at least 1");
  return o;
}

void emit(std::ostream& out, const Json& j, const std::string& format, const std::string& text) {
  if (format == "json")
    out << j.dump(2) << '\n';
  else
    out << text;
}

std::string cohom_text(const CohomologyVector& h) {
  return "h0=" + h.h0.get_str() + " h1=" + h.h1.get_str() + " h2=" + h.h2.get_str() + "\n";
}

void add_surface(CLI::App* cmd, Common& c) {
  cmd->add_option("--surface,-s", c.surface, "F<e> | blp2:k=<k>[:collinear=i,j,..] | blF<e>:k=<k> | dp<d>")->required();
}

// each subcommand keeps its own default; the callback copies it into Common
void add_format(CLI::App* cmd, Common& c, std::deque<std::string>& store, const std::string& def) {
  std::string& slot = store.emplace_back(def);
  cmd->add_option("--format", slot, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->preparse_callback([&c, &slot](std::size_t) { c.format = slot; });
  cmd->parse_complete_callback([&c, &slot] { c.format = slot; });
}

void add_oracle(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "oracle seed");
  cmd->add_option("--trials", c.trials, "oracle trials");
  cmd->add_option("--prime", c.prime, "oracle field modulus (overrides RBN_ORACLE_PRIME)");
}

int verdict_code(const WBNVerdict& v) { return v.status == WBNStatus::Unknown ? kUnknown : kOk; }

std::string csv_field(std::string s) {
  if (s.find(',') == std::string::npos) return s;
  return "\"" + s + "\"";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"rbn: line-bundle cohomology and weak Brill-Noether on rational surfaces"};
  app.require_subcommand(1);
  Common c;
  std::deque<std::string> formats;
  std::function<int()> action;

  // cohom
  std::string divisor;
  bool explain = false;
  auto* cohom = app.add_subcommand("cohom", "cohomology of a line bundle");
  add_surface(cohom, c);
  add_format(cohom, c, formats, "text");
  add_oracle(cohom, c);
  cohom->add_option("--divisor,-d", divisor, "divisor expression")->required();
  cohom->add_flag("--explain", explain, "report how the numbers were obtained");
  cohom->callback([&] {
    action = [&] {
      const Surface s = parse_surface(c.surface);
      const Divisor d = parse_divisor(s, divisor);
      std::optional<CohomologyVector> h;
      std::string method;
      std::vector<std::string> derivation;
      if (s.kind() == SurfaceKind::Hirzebruch) {
        h = hirzebruch_cohomology(d);
        method = "exact";
      } else if ((h = known_cohomology(d))) {
        method = "rules";
        derivation = vanishing_by_rules(d).derivation;
      } else if (s.is_plane_blowup()) {
        h = blowup_cohomology_oracle(d, oracle_options(c));
        method = "oracle";
      }
      if (!h) {
        Json j{{"surface", s.name()}, {"divisor", to_string(d)}, {"status", "Unknown"}};
        emit(out, j, c.format, "unknown: cohomology of " + to_string(d) + " is not decided\n");
        return kUnknown;
      }
      Json j = to_json(*h);
      std::string text = cohom_text(*h);
      if (explain) {
        j["method"] = method;
        j["derivation"] = derivation;
        text += "method: " + method + "\n";
        for (const auto& line : derivation) text += "  " + line + "\n";
      }
      emit(out, j, c.format, text);
      return kOk;
    };
  });

  // chi
  std::string character;
  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of a divisor or a character");
  add_surface(chi_cmd, c);
  add_format(chi_cmd, c, formats, "text");
  auto* chi_div = chi_cmd->add_option("--divisor,-d", divisor, "divisor expression");
  auto* chi_chr = chi_cmd->add_option("--character,-c", character, "r=..;c1=..;chi=.. or ch2=..");
  chi_div->excludes(chi_chr);
  chi_cmd->callback([&] {
    action = [&] {
      const Surface s = parse_surface(c.surface);
      Rational value;
      if (!divisor.empty())
        value = Rational(chi(parse_divisor(s, divisor)));
      else if (!character.empty())
        value = riemann_roch_chi(parse_character(s, character));
      else
        throw ParseError("chi needs --divisor or --character");
      emit(out, Json{{"chi", rational_json(value)}}, c.format, value.get_str() + "\n");
      return kOk;
    };
  });

  // wbn
  bool sweep = false;
  int sweep_range = 4;
  std::string sweep_rank = "2";
  auto* wbn = app.add_subcommand("wbn", "weak Brill-Noether verdict");
  add_surface(wbn, c);
  add_format(wbn, c, formats, "json");
  add_oracle(wbn, c);
  wbn->add_option("--character,-c", character, "r=..;c1=..;chi=.. or ch2=..");
  wbn->add_flag("--sweep", sweep, "CSV over all c1 with coefficients in [-range, range] and chi = 0");
  wbn->add_option("--range", sweep_range, "coefficient bound for --sweep")->check(CLI::Range(0, 64));
  wbn->add_option("--rank", sweep_rank, "rank for --sweep");
  wbn->callback([&] {
    action = [&]() -> int {
      const Surface s = parse_surface(c.surface);
      const OracleOptions opts = oracle_options(c);
      if (!sweep) {
        if (character.empty()) throw ParseError("wbn needs --character (or --sweep)");
        const ChernCharacter v = parse_character(s, character);
        const WBNVerdict verdict = decide(v, opts);
        const Json j = to_json(verdict);
        emit(out, j, c.format, to_text(j));
        return verdict_code(verdict);
      }
      const Integer r = parse_integer(sweep_rank);
      if (r < 1) throw ParseError("--rank must be positive");
      const std::size_t n = s.picard_rank();
      const long width = 2L * sweep_range + 1;
      long cells = 1;
      for (std::size_t i = 0; i < n; ++i) {
        cells *= width;
        if (cells > 2000000) throw ParseError("--sweep grid too large; lower --range");
      }
      out << "c1,r,status,lower_bound\n";
      std::vector<Integer> coords(n);
      for (long cell = 0; cell < cells; ++cell) {
        long x = cell;
        for (std::size_t i = 0; i < n; ++i) {
          coords[i] = x % width - sweep_range;
          x /= width;
        }
        const Divisor c1(s, coords);
        const Rational ch2 = -Rational(r) + ratio(intersect(c1, canonical(s)), 2);
        const Rational c2 = ratio(intersect(c1, c1), 2) - ch2;
        if (c2.get_den() != 1) continue;
        const ChernCharacter v(r, c1, ch2);
        const WBNVerdict verdict = decide(v, opts);
        out << csv_field(to_string(c1)) << ',' << r.get_str() << ',' << to_string(verdict.status) << ','
            << (verdict.obstruction ? verdict.obstruction->lower_bound.get_str() : "") << '\n';
      }
      return kOk;
    };
  });

  // resolve
  bool solve = false;
  int split = -1;
  auto* resolve = app.add_subcommand("resolve", "two-term resolution by the builtin exceptional collection");
  add_surface(resolve, c);
  add_format(resolve, c, formats, "json");
  resolve->add_option("--character,-c", character, "r=..;c1=..;chi=0 or ch2=..")->required();
  resolve->add_flag("--solve", solve, "solve the exponent recurrences instead of the closed form");
  resolve->add_option("--split", split, "number of left bundles for --solve");
  resolve->callback([&] {
    action = [&]() -> int {
      const Surface s = parse_surface(c.surface);
      const ChernCharacter v = parse_character(s, character);
      ResolutionReport rep = [&] {
        if (solve) {
          ExceptionalCollection coll = builtin_collection(s);
          if (split >= 0) coll.split = split;
          return solve_exponents(v, coll);
        }
        switch (s.kind()) {
          case SurfaceKind::Hirzebruch: return hirzebruch_resolution(v);
          case SurfaceKind::BlowupHirzebruch: return blowup_hirzebruch_resolution(v);
          default: return blowup_resolution(v);
        }
      }();
      const Json j = to_json(rep);
      emit(out, j, c.format, to_text(j));
      return kOk;
    };
  });

  // goodsum
  std::string rank_text, c1_text;
  auto* goodsum = app.add_subcommand("goodsum", "good direct sum of line bundles with given rank and c1");
  add_surface(goodsum, c);
  add_format(goodsum, c, formats, "json");
  add_oracle(goodsum, c);
  goodsum->add_option("--rank,-r", rank_text, "rank")->required();
  goodsum->add_option("--c1", c1_text, "first Chern class")->required();
  goodsum->callback([&] {
    action = [&]() -> int {
      const Surface s = parse_surface(c.surface);
      const Integer r = parse_integer(rank_text);
      const Divisor c1 = parse_divisor(s, c1_text);
      const OracleOptions opts = oracle_options(c);
      GoodSum sum = s.kind() == SurfaceKind::DelPezzo ? delpezzo_decompose(c1, r) : rounding_sum(r, c1, opts);
      const GoodnessReport rep = is_good_sum(sum, opts);
      Json j = to_json(sum);
      j["good"] = rep.ok();
      if (!rep.ok()) j["detail"] = rep.detail;
      j["provenance"] = rep.provenance;
      emit(out, j, c.format, to_text(j));
      return rep.ok() ? kOk : kInternalError;
    };
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "interpolation oracle on blowups of P^2");
  oracle->require_subcommand(1);
  for (const char* what : {"h0", "cohom"}) {
    auto* sub = oracle->add_subcommand(what, std::string(what) == "h0" ? "h0 by interpolation" : "h0, h1, h2 by interpolation");
    add_surface(sub, c);
    add_format(sub, c, formats, "text");
    add_oracle(sub, c);
    sub->add_option("--divisor,-d", divisor, "divisor expression")->required();
    const bool only_h0 = std::string(what) == "h0";
    sub->callback([&, only_h0] {
      action = [&, only_h0] {
        const Surface s = parse_surface(c.surface);
        if (!s.is_plane_blowup()) throw ParseError("the oracle works on blowups of P^2, not " + s.name());
        const Divisor d = parse_divisor(s, divisor);
        const OracleOptions opts = oracle_options(c);
        if (only_h0) {
          const Integer h0 = interpolation_h0(d, opts);
          emit(out, Json{{"h0", integer_json(h0)}}, c.format, h0.get_str() + "\n");
        } else {
          const CohomologyVector h = blowup_cohomology_oracle(d, opts);
          emit(out, to_json(h), c.format, cohom_text(h));
        }
        return kOk;
      };
    });
  }

  // curves
  auto* curves = app.add_subcommand("curves", "(-1)-curves on del Pezzo surfaces, nef test curves on F_e");
  add_surface(curves, c);
  add_format(curves, c, formats, "text");
  curves->callback([&] {
    action = [&] {
      const Surface s = parse_surface(c.surface);
      Json j = Json::array();
      std::string text;
      for (const auto& cv : nef_test_curves(s)) {
        j.push_back(to_string(cv));
        text += to_string(cv) + "\n";
      }
      emit(out, j, c.format, text);
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  try {
    return action ? action() : kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace rbn
