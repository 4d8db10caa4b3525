#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "acsv/asympt.hpp"
#include "acsv/critical.hpp"
#include "acsv/groebner.hpp"
#include "acsv/oracle.hpp"
#include "acsv/parse.hpp"
#include "acsv/spai.hpp"

namespace acsv::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr unsigned kMinPrec = 64;
constexpr unsigned kMaxPrec = 4096;
constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

RingPtr ring_from(const std::string& vars) {
  auto names = split(vars, ',');
  if (names.empty()) throw UsageError("--vars is empty");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw UsageError("empty variable name in --vars");
    if (!seen.insert(n).second) throw UsageError("duplicate variable " + n);
  }
  return make_ring(names);
}

Direction direction_from(const std::string& text, const RingPtr& ring) {
  std::vector<long> r;
  for (const auto& s : split(text, ',')) {
    try {
      std::size_t used = 0;
      r.push_back(std::stol(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw UsageError("invalid direction entry '" + s + "'");
    }
  }
  if (r.size() != ring->size()) throw UsageError("--dir length differs from --vars");
  bool nonzero = false;
  for (long v : r) nonzero = nonzero || v != 0;
  if (!nonzero) throw UsageError("--dir is the zero vector");
  return Direction(std::move(r));
}

int digits_for(unsigned prec) { return std::max(17, static_cast<int>(prec * 0.30103) - 2); }

std::string num(const BigFloat& x, int digits) { return x.to_string(digits); }

std::vector<std::string> render(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string height_text(const Interval& h, int digits) {
  if (h.lo.is_zero() && h.hi.is_zero()) return "0";
  return num(h.mid(), digits);
}

json coord_json(const Ball& b, const UPoly& min_poly, const std::string& var, int digits) {
  json c;
  c["min_poly"] = min_poly.to_string(var);
  c["approx_re"] = num(b.center.re, digits);
  c["approx_im"] = num(b.center.im, digits);
  c["radius"] = num(b.radius, 6);
  return c;
}

std::vector<StratumSpec> read_strata(const std::string& path, const RingPtr& ring) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open strata file " + path);
  static const std::regex line_re(R"(^\s*codim\s*=\s*(\d+)\s*:(.*)$)");
  std::vector<StratumSpec> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::smatch m;
    if (!std::regex_match(line, m, line_re)) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'codim=<c>: p1; p2; ...'");
    }
    StratumSpec s;
    s.codimension = std::stoi(m[1]);
    s.generators = parse_polynomial_list(m[2].str(), ring);
    out.push_back(std::move(s));
  }
  return out;
}

struct Common {
  std::string vars;
  std::string poly;
  std::string num = "1";
  std::string dir;
  bool json_out = false;
  std::optional<unsigned> prec;
};

class Runner {
 public:
  Runner(std::ostream& out, unsigned default_prec) : out_(out), default_prec_(default_prec) {}

  unsigned prec(const Common& c) const {
    unsigned p = c.prec.value_or(default_prec_);
    if (p < kMinPrec || p > kMaxPrec) {
      throw UsageError("precision must lie in [64, 4096]");
    }
    return p;
  }

  int gb(const std::string& gens, const std::string& vars, const std::string& order, bool as_json) {
    auto ring = ring_from(vars);
    auto ps = parse_polynomial_list(gens, ring);
    const std::size_t n = ring->size();
    TermOrder ord = TermOrder::grevlex(n);
    if (order == "lex") {
      ord = TermOrder::lex(n);
    } else if (order.rfind("elim:", 0) == 0) {
      std::size_t k = 0;
      try {
        k = std::stoul(order.substr(5));
      } catch (const std::exception&) {
        throw UsageError("invalid order " + order);
      }
      if (k == 0 || k >= n) throw UsageError("elim:<k> needs 0 < k < number of variables");
      std::vector<std::size_t> block(k);
      for (std::size_t i = 0; i < k; ++i) block[i] = i;
      ord = TermOrder::elimination(n, block);
    } else if (order != "grevlex") {
      throw UsageError("unknown order " + order);
    }
    auto basis = render(groebner_basis(ps, ord));
    if (as_json) {
      out_ << json{{"order", order}, {"basis", basis}}.dump(2) << "\n";
    } else {
      for (const auto& s : basis) out_ << s << "\n";
    }
    return kOk;
  }

  json report_json(const SpaiReport& rep, unsigned p) const {
    const int digits = digits_for(p);
    const auto& names = rep.saturated_ideal.ring()->names();
    json j;
    j["exists"] = rep.exists ? json(*rep.exists) : json(nullptr);
    j["saturated_ideal"] = render(rep.saturated_ideal.basis());
    json ws = json::array();
    for (const auto& w : rep.witnesses) {
      json wj;
      wj["chart"] = w.chart;
      json coords = json::array();
      if (w.point) {
        for (std::size_t i = 0; i < w.point->size(); ++i) {
          const std::string& var = i < names.size() ? names[i] : "t";
          coords.push_back(coord_json(w.point->coords[i], w.point->min_polys[i], var, digits));
        }
      }
      wj["coords"] = coords;
      if (!w.point) wj["dimension"] = w.dimension;
      ws.push_back(wj);
    }
    j["witnesses"] = ws;
    json hs = json::array();
    for (const auto& v : rep.heights.values) {
      hs.push_back({{"eta_min_poly", v.min_poly.to_string("eta")},
                    {"eta_approx", v.eta.ball.center.to_string(digits)},
                    {"height", height_text(v.height, digits)}});
    }
    j["heights"] = hs;
    if (rep.heights.unconstrained) j["heights_unconstrained"] = true;
    return j;
  }

  void report_text(const SpaiReport& rep, unsigned p) const {
    const int digits = std::min(20, digits_for(p));
    out_ << "exists: " << (rep.exists ? (*rep.exists ? "true" : "false") : "undetermined") << "\n";
    out_ << "saturated ideal:\n";
    for (const auto& g : rep.saturated_ideal.basis()) out_ << "  " << g.to_string() << "\n";
    out_ << "heights:";
    if (rep.heights.unconstrained) out_ << " unconstrained";
    for (const auto& v : rep.heights.values) out_ << " " << height_text(v.height, digits);
    out_ << "\n";
    const auto& names = rep.saturated_ideal.ring()->names();
    for (const auto& w : rep.witnesses) {
      out_ << "witness chart " << w.chart << ":";
      if (!w.point) {
        out_ << " dimension " << w.dimension << "\n";
        continue;
      }
      for (std::size_t i = 0; i < w.point->size(); ++i) {
        out_ << " " << (i < names.size() ? names[i] : "t") << "="
             << w.point->coords[i].center.to_string(digits);
      }
      out_ << "\n";
    }
  }

  int spai(const Common& c, const std::string& exclude, const std::string& strata_file,
           bool symbolic, bool heights_only) {
    unsigned p = prec(c);
    auto ring = ring_from(c.vars);
    Direction r = direction_from(c.dir, ring);
    std::vector<SpaiReport> reps;
    if (!strata_file.empty()) {
      if (symbolic) throw UsageError("--symbolic-dir cannot be combined with --strata");
      reps = algorithm2(read_strata(strata_file, ring), r, p);
    } else {
      Polynomial q = parse_polynomial(c.poly, ring);
      std::vector<Polynomial> ex;
      if (!exclude.empty()) ex = parse_polynomial_list(exclude, ring);
      reps.push_back(algorithm1({q, r, ex, symbolic}, p));
    }
    bool any = false;
    for (const auto& rep : reps) any = any || rep.exists.value_or(false);

    if (heights_only) {
      const int digits = c.json_out ? digits_for(p) : std::min(20, digits_for(p));
      json hs = json::array();
      for (const auto& rep : reps) {
        for (const auto& v : rep.heights.values) {
          if (c.json_out) {
            hs.push_back({{"eta_min_poly", v.min_poly.to_string("eta")},
                          {"eta_approx", v.eta.ball.center.to_string(digits)},
                          {"height", height_text(v.height, digits)}});
          } else {
            out_ << height_text(v.height, digits) << "\n";
          }
        }
      }
      if (c.json_out) out_ << hs.dump(2) << "\n";
    } else if (c.json_out) {
      if (reps.size() == 1) {
        out_ << report_json(reps[0], p).dump(2) << "\n";
      } else {
        json all = json::array();
        for (const auto& rep : reps) all.push_back(report_json(rep, p));
        out_ << all.dump(2) << "\n";
      }
    } else {
      for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps.size() > 1) out_ << "stratum " << i << ":\n";
        report_text(reps[i], p);
      }
    }
    return any ? kSpaiExist : kOk;
  }

  int critical(const Common& c) {
    unsigned p = prec(c);
    auto ring = ring_from(c.vars);
    Direction r = direction_from(c.dir, ring);
    Polynomial q = parse_polynomial(c.poly, ring);
    auto pts = affine_critical_points(q, r, p);
    const int digits = c.json_out ? digits_for(p) : std::min(20, digits_for(p));
    if (c.json_out) {
      json arr = json::array();
      for (const auto& pt : pts) {
        json coords = json::array(), polys = json::array();
        for (std::size_t i = 0; i < pt.size(); ++i) {
          coords.push_back({{"approx_re", num(pt.coords[i].center.re, digits)},
                            {"approx_im", num(pt.coords[i].center.im, digits)},
                            {"radius", num(pt.coords[i].radius, 6)}});
          polys.push_back(pt.min_polys[i].to_string(ring->name(i)));
        }
        arr.push_back({{"coords", coords},
                       {"height", num(pt.height->mid(), digits)},
                       {"min_polys", polys}});
      }
      out_ << arr.dump(2) << "\n";
    } else {
      for (const auto& pt : pts) {
        for (std::size_t i = 0; i < pt.size(); ++i) {
          out_ << (i ? " " : "") << ring->name(i) << "=" << pt.coords[i].center.to_string(digits);
        }
        out_ << " height=" << num(pt.height->mid(), digits) << "\n";
      }
    }
    return kOk;
  }

  int series(const Common& c, std::size_t terms) {
    auto ring = ring_from(c.vars);
    Direction r = direction_from(c.dir, ring);
    auto a = coefficients({parse_polynomial(c.num, ring), parse_polynomial(c.poly, ring), r, terms});
    if (c.json_out) {
      std::vector<std::string> vals;
      for (const auto& v : a) vals.push_back(v.get_str());
      out_ << json{{"values", vals}}.dump(2) << "\n";
    } else {
      for (const auto& v : a) out_ << v.get_str() << "\n";
    }
    return kOk;
  }

  // A polynomial in t whose roots include z^{-r} at every critical point.
  static UPoly base_polynomial(const Polynomial& q, const Direction& r) {
    Ideal crit = critical_system(q, r);
    const std::size_t d = q.nvars();
    auto names = q.ring()->names();
    names.push_back(q.ring()->fresh_name("t"));
    auto ext = make_ring(names);
    std::vector<Polynomial> gens;
    for (const auto& g : crit.basis()) gens.push_back(g.mapped_to(ext));
    Monomial pos, neg;
    for (std::size_t j = 0; j < d; ++j) {
      long e = r.r()[j];
      if (e > 0) pos.set(j, static_cast<unsigned>(e));
      if (e < 0) neg.set(j, static_cast<unsigned>(-e));
    }
    Polynomial t = Polynomial::variable(ext, d);
    gens.push_back(t * Polynomial::monomial(ext, pos) - Polynomial::monomial(ext, neg));
    return eliminant(Ideal(ext, gens), d);
  }

  int asympt(const Common& c, std::size_t terms, double tolerance) {
    unsigned p = prec(c);
    auto ring = ring_from(c.vars);
    Direction r = direction_from(c.dir, ring);
    Polynomial q = parse_polynomial(c.poly, ring);
    Polynomial f = parse_polynomial(c.num, ring);
    auto pts = affine_critical_points(q, r, p);
    std::vector<AsymptoticTerm> cands;
    for (const auto& pt : pts) cands.push_back(smooth_leading_term(f, q, pt, r, p));
    std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
      return abs(a.base.center) > abs(b.base.center);
    });

    std::optional<Selection> sel;
    if (!cands.empty() && r.nonnegative() && q.constant_term() != 0 && terms >= 8) {
      SeriesWindow w{r, 0, coefficients({f, q, r, terms})};
      sel = select_contributions(cands, w, tolerance);
    }
    UPoly base_poly = cands.empty() ? UPoly() : base_polynomial(q, r);

    const int digits = c.json_out ? digits_for(p) : std::min(20, digits_for(p));
    auto weight_of = [&](const AsymptoticTerm& t) -> std::optional<int> {
      if (!sel || !sel->conclusive) return std::nullopt;
      for (const auto& s : sel->terms) {
        if (s.base.overlaps(t.base) && s.source.coords[0].overlaps(t.source.coords[0])) {
          return s.weight;
        }
      }
      return 0;
    };
    auto constant_of = [&](const AsymptoticTerm& t) {
      if (sel && sel->conclusive) {
        for (const auto& s : sel->terms) {
          if (s.base.overlaps(t.base) && s.source.coords[0].overlaps(t.source.coords[0])) {
            return s.constant;
          }
        }
      }
      return t.constant;
    };

    if (c.json_out) {
      json arr = json::array();
      for (const auto& t : cands) {
        json tj;
        tj["base_approx"] = t.base.center.to_string(digits);
        if (!base_poly.is_zero()) tj["base_min_poly"] = base_poly.to_string("t");
        tj["poly_order"] = t.poly_order.get_str();
        Ball k = constant_of(t);
        tj["constant_re"] = num(k.center.re, digits);
        tj["constant_im"] = num(k.center.im, digits);
        auto w = weight_of(t);
        tj["weight"] = w ? json(*w) : json(nullptr);
        json src = json::array();
        for (const auto& b : t.source.coords) {
          src.push_back({{"approx_re", num(b.center.re, digits)},
                         {"approx_im", num(b.center.im, digits)}});
        }
        tj["source_point"] = src;
        arr.push_back(tj);
      }
      json outj;
      outj["terms"] = arr;
      outj["oracle_relative_error"] = sel ? json(sel->relative_error) : json(nullptr);
      out_ << outj.dump(2) << "\n";
    } else {
      for (const auto& t : cands) {
        auto w = weight_of(t);
        Ball k = constant_of(t);
        out_ << "weight=" << (w ? std::to_string(*w) : std::string("?"))
             << " base=" << t.base.center.to_string(digits) << " n^" << t.poly_order.get_str()
             << " constant=" << k.center.to_string(digits) << "\n";
      }
      if (sel) {
        out_ << "oracle relative error: " << sel->relative_error
             << (sel->conclusive ? "" : " (inconclusive)") << "\n";
      }
    }
    return kOk;
  }

 private:
  std::ostream& out_;
  unsigned default_prec_;
};

void add_common(CLI::App* app, Common& c, bool with_num, bool with_prec) {
  app->add_option("--poly", c.poly, "Denominator Q")->required();
  app->add_option("--vars", c.vars, "Comma-separated variables")->required();
  app->add_option("--dir", c.dir, "Comma-separated integer direction")->required();
  if (with_num) app->add_option("--num", c.num, "Numerator P (default 1)");
  if (with_prec) app->add_option("--prec", c.prec, "Working precision in bits");
  app->add_flag("--json", c.json_out, "JSON output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* env_prec) {
  unsigned default_prec = kDefaultPrecision;
  if (env_prec && *env_prec) {
    try {
      std::size_t used = 0;
      long v = std::stol(env_prec, &used);
      if (used != std::string(env_prec).size() || v < kMinPrec || v > kMaxPrec) {
        throw std::out_of_range(env_prec);
      }
      default_prec = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      err << "error: ACSV_PREC must be an integer in [64, 4096]\n";
      return kUsage;
    }
  }

  CLI::App app{"Stationary points at infinity and smooth-point asymptotics", "acsv"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string gens, gb_vars, order = "grevlex";
  bool gb_json = false;
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  gb->add_option("--gens", gens, "Generators separated by ';'")->required();
  gb->add_option("--vars", gb_vars, "Comma-separated variables")->required();
  gb->add_option("--order", order, "grevlex, lex or elim:<k>");
  gb->add_flag("--json", gb_json, "JSON output");

  Common spai_c, heights_c, crit_c, asym_c, series_c;
  std::string exclude, strata, h_exclude;
  bool symbolic = false;
  auto* spai = app.add_subcommand("spai", "Decide stationary points at infinity");
  add_common(spai, spai_c, false, true);
  spai->add_option("--exclude", exclude, "Generators of a locus to remove, ';'-separated");
  spai->add_option("--strata", strata, "Strata file, lines 'codim=<c>: p1; p2'");
  spai->add_flag("--symbolic-dir", symbolic, "Keep the direction symbolic");
  // With --strata the generators come from the file.
  spai->get_option("--poly")->required(false);

  auto* heights = app.add_subcommand("heights", "Heights of stationary points at infinity");
  add_common(heights, heights_c, false, true);
  heights->add_option("--exclude", h_exclude, "Generators of a locus to remove, ';'-separated");

  auto* crit = app.add_subcommand("critical", "Affine critical points");
  add_common(crit, crit_c, false, true);

  std::size_t asym_terms = 16;
  double tolerance = 0.1;
  auto* asym = app.add_subcommand("asympt", "Smooth-point leading terms");
  add_common(asym, asym_c, true, true);
  asym->add_option("--terms", asym_terms, "Oracle window length");
  asym->add_option("--tolerance", tolerance, "Accepted relative error of the selection");

  std::size_t series_terms = 0;
  auto* ser = app.add_subcommand("series", "Exact diagonal coefficients");
  add_common(ser, series_c, true, false);
  ser->add_option("--terms", series_terms, "Largest n")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Runner runner(out, default_prec);
  try {
    if (*gb) return runner.gb(gens, gb_vars, order, gb_json);
    if (*spai) {
      if (spai_c.poly.empty() && strata.empty()) throw UsageError("--poly or --strata is required");
      return runner.spai(spai_c, exclude, strata, symbolic, false);
    }
    if (*heights) return runner.spai(heights_c, h_exclude, "", false, true);
    if (*crit) return runner.critical(crit_c);
    if (*asym) return runner.asympt(asym_c, asym_terms, tolerance);
    if (*ser) return runner.series(series_c, series_terms);
  } catch (const PositiveDimensional& e) {
    err << "error: positive-dimensional critical locus (" << e.what() << ")\n";
    return kPositiveDimensional;
  } catch (const NotSmooth& e) {
    err << "error: not smooth: " << e.what() << "\n";
    return kNotSmooth;
  } catch (const HigherOrderPole& e) {
    err << "error: not smooth: " << e.what() << "\n";
    return kNotSmooth;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace acsv::cli
