#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <thread>

#include "farey/farey.hpp"

namespace farey::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "farey 0.1.0";

// Formats results as CSV (with '#' metadata lines) or as a JSON object
// {"meta": ..., "rows": [...]}.
class Emitter {
 public:
  Emitter(std::ostream& out, const Config& config, std::string command)
      : out_(out), config_(config), command_(std::move(command)) {}

  std::string real(long double v) const {
    std::ostringstream os;
    os << std::setprecision(config_.precision_digits) << v;
    return os.str();
  }

  json real_cell(long double v) const {
    if (!std::isfinite(v)) return real(v);
    return std::stod(real(v));
  }

  static json int_cell(CheckedInt v) {
    if (v >= CheckedInt{std::numeric_limits<std::int64_t>::min()} &&
        v <= CheckedInt{std::numeric_limits<std::int64_t>::max()}) {
      return v.to_i64();
    }
    return v.to_string();
  }

  // A single value: bare text in CSV mode.
  void scalar(const std::string& name, const json& value) {
    if (json_mode()) {
      write_json({name}, {{value}});
    } else {
      out_ << text(value) << '\n';
    }
  }

  void table(const std::vector<std::string>& columns, const std::vector<std::vector<json>>& rows) {
    if (json_mode()) {
      write_json(columns, rows);
      return;
    }
    write_meta();
    for (std::size_t c = 0; c < columns.size(); ++c) out_ << (c ? "," : "") << columns[c];
    out_ << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out_ << (c ? "," : "") << text(row[c]);
      out_ << '\n';
    }
  }

  void line(const std::string& text) { out_ << text << '\n'; }

 private:
  bool json_mode() const { return config_.output_format == "json"; }

  static std::string text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
  }

  json meta() const {
    return json{{"command", command_},
                {"version", kVersion},
                {"table_limit", config_.table_limit},
                {"term_budget", config_.term_budget},
                {"precision_digits", config_.precision_digits}};
  }

  void write_meta() {
    out_ << "# command: " << command_ << '\n';
    out_ << "# config: table_limit=" << config_.table_limit << " term_budget=" << config_.term_budget
         << " precision_digits=" << config_.precision_digits << '\n';
    out_ << "# version: " << kVersion << '\n';
  }

  void write_json(const std::vector<std::string>& columns, const std::vector<std::vector<json>>& rows) {
    json doc{{"meta", meta()}, {"rows", json::array()}};
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < columns.size() && c < row.size(); ++c) obj[columns[c]] = row[c];
      doc["rows"].push_back(std::move(obj));
    }
    out_ << doc.dump(2) << '\n';
  }

  std::ostream& out_;
  const Config& config_;
  std::string command_;
};

std::string join_args(const std::vector<std::string>& argv) {
  std::string s = "farey";
  for (std::size_t k = 1; k < argv.size(); ++k) s += " " + argv[k];
  return s;
}

std::string cell(const Fraction& f) { return f.to_string(); }

FranelOptions franel_options(const Config& config) {
  FranelOptions o;
  o.term_budget = config.term_budget;
  o.table_limit = config.table_limit;
  return o;
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---- subcommands ---------------------------------------------------------

struct EnumerateArgs {
  std::int64_t order = 0;
  std::string lo = "0/1";
  std::string hi = "1/1";
};

int do_enumerate(const EnumerateArgs& a, const Config& config, Emitter& em) {
  const Fraction lo = Fraction::parse(a.lo);
  const Fraction hi = Fraction::parse(a.hi);
  const FareyWindow w = enumerate_window(a.order, lo, hi, config.term_budget);
  std::vector<std::vector<json>> rows;
  if (!w.fractions.empty()) {
    const TotientTable table = TotientTable::build(a.order, config.table_limit);
    CheckedInt rank = rank_fast(a.order, w.fractions.front(), table).rank;
    for (const auto& f : w.fractions) {
      rows.push_back({Emitter::int_cell(rank), cell(f), f.num(), f.den()});
      rank += CheckedInt{1};
    }
  }
  em.table({"index", "fraction", "num", "den"}, rows);
  return kOk;
}

struct RankArgs {
  std::int64_t order = 0;
  std::string fraction;
  std::string method = "fast";
};

int do_rank(const RankArgs& a, const Config& config, Emitter& em) {
  const Fraction x = Fraction::parse(a.fraction);
  if (a.method == "oracle") {
    em.scalar("rank", Emitter::int_cell(rank_oracle(a.order, x).rank));
    return kOk;
  }
  const TotientTable table = TotientTable::build(a.order, config.table_limit);
  const RankReport fast = rank_fast(a.order, x, table);
  if (a.method == "both") {
    const RankReport oracle = rank_oracle(a.order, x);
    if (oracle.rank != fast.rank) {
      throw IdentityViolation("rank mismatch: oracle " + oracle.rank.to_string() + ", Moebius " +
                              fast.rank.to_string());
    }
  }
  em.scalar("rank", Emitter::int_cell(fast.rank));
  return kOk;
}

struct IndexArgs {
  std::int64_t i_max = 0;
  std::int64_t q = 0;
  bool asymptotic = false;
  bool sweep = false;
  std::size_t samples = 50;
  std::string vertex;
  std::string co_vertex;
};

int do_index(const IndexArgs& a, const Config& config, Emitter& em) {
  if (!a.vertex.empty()) {
    const VertexPair pair = VertexPair::make(Fraction::parse(a.vertex), Fraction::parse(a.co_vertex));
    if (a.q == 0) throw DomainError("--q is required with --vertex");
    const std::int64_t order = (CheckedInt{pair.eta()} * lcm_range(a.i_max)).to_i64();
    const TotientTable table = TotientTable::build(std::max(order, a.i_max), config.table_limit);
    const CheckedInt base = rank_fast(order, pair.vertex(), table).rank;
    const IndexEstimate est = general_index_estimate(pair, a.i_max, a.q, base, table);
    const CheckedInt actual = rank_fast(order, est.target, table).rank;
    em.table({"N", "q", "i", "target", "base_rank", "estimate", "rank", "residual"},
             {{order, a.q, est.i, cell(est.target), Emitter::int_cell(base), Emitter::int_cell(est.value),
               Emitter::int_cell(actual), Emitter::int_cell(actual - est.value)}});
    return kOk;
  }

  const std::int64_t order = lcm_range(a.i_max).to_i64();
  const TotientTable table = TotientTable::build(a.i_max, config.table_limit);
  auto row = [&](std::int64_t q) -> std::vector<json> {
    const IndexEstimate est = exact_index_unit_fraction(a.i_max, q, table);
    const long double approx = asymptotic_index_zero(order, q);
    const long double residual = est.value.to_long_double() - approx;
    return {q, Emitter::int_cell(est.value), em.real_cell(approx), em.real_cell(residual),
            em.real_cell(residual / static_cast<long double>(order))};
  };
  const std::vector<std::string> columns{"q", "exact", "asymptotic", "residual", "residual_over_N"};

  if (a.sweep) {
    std::vector<std::vector<json>> rows;
    for (const auto q : log_spaced_q(order, a.i_max, a.samples)) rows.push_back(row(q));
    em.table(columns, rows);
    return kOk;
  }
  if (a.q == 0) throw DomainError("--q is required unless --sweep is given");
  if (a.asymptotic) {
    em.table(columns, {row(a.q)});
  } else {
    em.scalar("index", Emitter::int_cell(exact_index_unit_fraction(a.i_max, a.q, table).value));
  }
  return kOk;
}

struct MapArgs {
  std::string vertex;
  std::string co_vertex;
  std::int64_t q = 0;
  std::int64_t i = 0;
  std::int64_t order = 0;
  bool inverse = false;
};

int do_map(const MapArgs& a, const Config&, Emitter& em, std::ostream& err) {
  const VertexPair pair = VertexPair::make(Fraction::parse(a.vertex), Fraction::parse(a.co_vertex));
  const MapParams params = MapParams::make(pair, a.q, a.i, a.order);
  const MapVerification check = verify_map(params);

  std::vector<std::vector<json>> rows;
  if (a.inverse) {
    for (const auto& ul : enumerate_window(params.order(), params.lower(), params.upper()).fractions) {
      rows.push_back({cell(inverse_map(params, ul)), cell(ul)});
    }
  } else {
    for (const auto& hk : build_f_prime(params).members) rows.push_back({cell(hk), cell(forward_map(params, hk))});
  }
  em.table({"h/k", "u/l"}, rows);
  if (!check.ok()) {
    err << "map check failed: " << check.failure << '\n';
    return kFalsified;
  }
  return kOk;
}

struct GcdArgs {
  std::int64_t exhaustive = 0;
  std::int64_t random = 0;
  std::int64_t max_value = 10'000;
  std::uint64_t seed = 1;
};

int do_gcd_check(const GcdArgs& a, const Config&, Emitter& em) {
  if (a.exhaustive == 0 && a.random == 0) throw DomainError("give --exhaustive N and/or --random COUNT");
  int status = kOk;
  auto report = [&](const GcdSweepReport& r) {
    em.line(std::to_string(r.counterexamples + r.neighbor_failures) + " counterexamples among " +
            std::to_string(r.triples) + " triples");
    if (!r.clean()) {
      const auto& t = *r.first_counterexample;
      em.line("# first counterexample: " + cell(t[0]) + " " + cell(t[1]) + " " + cell(t[2]));
      status = kFalsified;
    }
  };
  if (a.exhaustive > 0) report(gcd_sweep_exhaustive(a.exhaustive));
  if (a.random > 0) report(gcd_sweep_random(a.random, a.max_value, a.seed));
  return status;
}

struct FranelArgs {
  std::int64_t order = 0;
  std::string lo;
  std::string hi;
};

int do_franel(const FranelArgs& a, const Config& config, Emitter& em) {
  const FranelOptions opts = franel_options(config);
  FranelResult r;
  if (a.lo.empty() && a.hi.empty()) {
    r = full_franel_sum(a.order, opts);
  } else {
    const Fraction lo = a.lo.empty() ? Fraction::zero() : Fraction::parse(a.lo);
    const Fraction hi = a.hi.empty() ? Fraction::one() : Fraction::parse(a.hi);
    const TotientTable table = TotientTable::build(a.order, config.table_limit);
    const CheckedInt anchor = rank_fast(a.order, lo, table).rank;
    r = partial_franel_sum_range(a.order, lo, hi, anchor, table, opts);
  }
  em.table({"N", "lo", "hi", "first_rank", "last_rank", "terms", "sum_exact", "sum", "max_term", "argmax_rank"},
           {{r.order, cell(r.lo), cell(r.hi), Emitter::int_cell(r.first_rank), Emitter::int_cell(r.last_rank),
             Emitter::int_cell(r.term_count), r.sum_exact ? json(to_string(*r.sum_exact)) : json(nullptr),
             em.real_cell(r.sum_float), em.real_cell(r.max_term_float), Emitter::int_cell(r.argmax_rank)}});
  return kOk;
}

struct GrowthArgs {
  std::string vertex;
  std::string co_vertex;
  std::vector<std::int64_t> i_list;
};

int do_growth(const GrowthArgs& a, const Config& config, Emitter& em) {
  const VertexPair pair = VertexPair::make(Fraction::parse(a.vertex), Fraction::parse(a.co_vertex));
  const GrowthScan scan = growth_scan(pair, a.i_list, franel_options(config), default_threads());
  std::vector<std::vector<json>> rows;
  for (const auto& r : scan.rows) {
    rows.push_back({r.i, r.order, Emitter::int_cell(r.sum.term_count), em.real_cell(r.sum.sum_float),
                    em.real_cell(r.sum_over_log_n), r.predicted ? em.real_cell(*r.predicted) : json(nullptr)});
  }
  em.table({"i", "N", "terms", "sum", "sum_over_logN", "predicted"}, rows);
  return kOk;
}

struct DressArgs {
  std::int64_t order = 0;
  std::int64_t max_order = 0;
};

int do_dress(const DressArgs& a, const Config& config, Emitter& em) {
  if ((a.order == 0) == (a.max_order == 0)) throw DomainError("give exactly one of --order and --max-order");
  const std::int64_t first = a.order ? a.order : 1;
  const std::int64_t last = a.order ? a.order : a.max_order;
  const auto reports = dress_sweep(first, last, franel_options(config), default_threads());
  std::vector<std::vector<json>> rows;
  bool all_ok = true;
  for (const auto& r : reports) {
    all_ok = all_ok && r.bound_ok;
    rows.push_back({r.order, to_string(r.max_term), em.real_cell(r.max_term_float), Emitter::int_cell(r.argmax_rank),
                    to_string(r.rank2_term), r.bound_ok});
  }
  em.table({"N", "max_term", "max_term_float", "argmax_rank", "rank2_term", "bound_ok"}, rows);
  return all_ok ? kOk : kFalsified;
}

int do_kanemitsu(std::int64_t order, const Config& config, Emitter& em) {
  const KanemitsuResult r = kanemitsu_sum(order, franel_options(config));
  em.table({"N", "cutoff_rank", "cardinality", "exact", "value"},
           {{r.order, Emitter::int_cell(r.cutoff_rank), Emitter::int_cell(r.cardinality),
             r.exact ? json(to_string(*r.exact)) : json(nullptr), em.real_cell(r.value)}});
  return kOk;
}

int do_totient(std::int64_t limit, const Config& config, Emitter& em) {
  const TotientTable table = TotientTable::build(limit, config.table_limit);
  std::vector<std::vector<json>> rows;
  for (const auto& e : error_term_series(limit, table)) {
    rows.push_back({e.n, table.phi(e.n), Emitter::int_cell(table.phi_sum(e.n)), em.real_cell(e.e_n),
                    em.real_cell(e.h_n)});
  }
  em.table({"n", "phi", "Phi", "E", "H"}, rows);
  return kOk;
}

// Small-order cross-checks of every closed form against its brute-force oracle.
int do_selftest(Emitter& em) {
  std::int64_t checks = 0;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  };

  const TotientTable table = TotientTable::build(2520);
  for (std::int64_t n = 1; n <= 40; ++n) {
    const FareyWindow all = enumerate_window(n, Fraction::zero(), Fraction::one());
    expect(CheckedInt{static_cast<std::int64_t>(all.fractions.size())} == farey_cardinality(n, table),
           "|F_" + std::to_string(n) + "| = 1 + Phi(N)");
    CheckedInt rank{1};
    for (const auto& x : all.fractions) {
      expect(rank_oracle(n, x).rank == rank && rank_fast(n, x, table).rank == rank,
             "rank of " + x.to_string() + " in F_" + std::to_string(n));
      rank += CheckedInt{1};
    }
  }
  for (std::int64_t i_max = 2; i_max <= 6; ++i_max) {
    const std::int64_t n = lcm_range(i_max).to_i64();
    for (std::int64_t q = (n + i_max - 1) / i_max; q <= n; ++q) {
      expect(exact_index_unit_fraction(i_max, q, table).value == rank_oracle(n, Fraction(1, q)).rank,
             "I_" + std::to_string(n) + "(1/" + std::to_string(q) + ")");
    }
  }
  expect(gcd_sweep_exhaustive(8).clean(), "gcd identities over F_8");
  for (std::int64_t eta = 1; eta <= 3; ++eta) {
    for (const auto& pair : vertex_pairs_with_eta(eta)) {
      for (std::int64_t i = 1; i <= 3; ++i) {
        const std::int64_t n = eta * i * (i + 1);
        for (std::int64_t q = n / (eta * (i + 1)) + 1; q <= n / (eta * i); ++q) {
          const MapVerification v = verify_map(MapParams::make(pair, q, i, n));
          // The strict lower bound on |F'_i| does not hold at i = 1 (0/1 drops
          // out of F'_1 at the top of the q range); only i >= 2 is checked here.
          const bool cardinality_ok = v.cardinality_holds || i == 1;
          expect(v.round_trip && v.window_matches && v.monotone && v.endpoints_adjacent && cardinality_ok,
                 "bijection at " + pair.vertex().to_string() + "|" + pair.co_vertex().to_string() +
                     ", i=" + std::to_string(i) + ", q=" + std::to_string(q) + ": " + v.failure);
        }
      }
    }
  }
  expect(full_franel_sum(3).sum_exact == Rational(1, 2), "Franel sum of F_3");
  expect(full_franel_sum(5).sum_exact == Rational(59, 110), "Franel sum of F_5");
  expect(kanemitsu_sum(4).exact == Rational(-1, 28), "Kanemitsu sum for N=4");
  expect(kanemitsu_sum(5).exact == Rational(9, 220), "Kanemitsu sum for N=5");
  for (const auto& r : dress_sweep(1, 60)) expect(r.bound_ok, "max distance <= 1/N for N=" + std::to_string(r.order));

  for (const auto& f : failures) em.line("# FAILED: " + f);
  em.line("selftest: " + std::to_string(checks - static_cast<std::int64_t>(failures.size())) + "/" +
          std::to_string(checks) + " checks passed");
  return failures.empty() ? kOk : kFalsified;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Exact Farey-sequence positions, bijections and Franel sums", "farey"};
  app.require_subcommand(1);
  app.add_option("--table-limit", config.table_limit, "Largest totient sieve allowed")
      ->envname("FAREY_TABLE_LIMIT")
      ->check(CLI::PositiveNumber);
  app.add_option("--term-budget", config.term_budget, "Largest number of streamed terms per command")
      ->envname("FAREY_TERM_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", config.output_format, "Output format")
      ->envname("FAREY_FORMAT")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--precision", config.precision_digits, "Significant digits for real output")
      ->envname("FAREY_PRECISION")
      ->check(CLI::Range(1, 40));
  app.fallthrough();

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "List F_N over [lo, hi]");
  enumerate->add_option("--order", enumerate_args.order, "Order N")->required();
  enumerate->add_option("--lo", enumerate_args.lo, "Lower bound a/b");
  enumerate->add_option("--hi", enumerate_args.hi, "Upper bound c/d");

  RankArgs rank_args;
  auto* rank = app.add_subcommand("rank", "Position of a fraction in F_N");
  rank->add_option("--order", rank_args.order, "Order N")->required();
  rank->add_option("--fraction", rank_args.fraction, "Fraction a/b in [0, 1]")->required();
  rank->add_option("--method", rank_args.method, "fast | oracle | both")
      ->check(CLI::IsMember({"fast", "oracle", "both"}));

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "Closed-form position of 1/q (or near a vertex)");
  index->add_option("--imax", index_args.i_max, "N = lcm(2..imax)")->required();
  index->add_option("--q", index_args.q, "Denominator q");
  index->add_flag("--asymptotic", index_args.asymptotic, "Also report 3N^2/(pi^2 q)");
  index->add_flag("--sweep", index_args.sweep, "Log-spaced sweep over q");
  index->add_option("--samples", index_args.samples, "Number of q values in a sweep");
  index->add_option("--vertex", index_args.vertex, "Vertex chi/eta, eta > 1");
  index->add_option("--covertex", index_args.co_vertex, "Neighbour a/b of the vertex");

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "Bijection between F'_i and an F_N window");
  map->add_option("--vertex", map_args.vertex, "Vertex chi/eta")->required();
  map->add_option("--covertex", map_args.co_vertex, "Co-vertex a/b")->required();
  map->add_option("--q", map_args.q, "q")->required();
  map->add_option("--i", map_args.i, "i")->required();
  map->add_option("--order", map_args.order, "Order N")->required();
  map->add_flag("--inverse", map_args.inverse, "Map the window back onto F'_i");

  GcdArgs gcd_args;
  auto* gcd_check = app.add_subcommand("gcd-check", "Check the determinant-gcd identities");
  gcd_check->add_option("--exhaustive", gcd_args.exhaustive, "All ascending triples of F_N");
  gcd_check->add_option("--random", gcd_args.random, "Number of random triples");
  gcd_check->add_option("--max-value", gcd_args.max_value, "Largest numerator/denominator for random triples");
  gcd_check->add_option("--seed", gcd_args.seed, "Random seed");

  FranelArgs franel_args;
  auto* franel = app.add_subcommand("franel", "Full or partial Franel sum");
  franel->add_option("--order", franel_args.order, "Order N")->required();
  franel->add_option("--lo", franel_args.lo, "Range start (must be in F_N)");
  franel->add_option("--hi", franel_args.hi, "Range end");

  GrowthArgs growth_args;
  auto* growth = app.add_subcommand("growth", "Partial sums near a vertex over several i");
  growth->add_option("--vertex", growth_args.vertex, "Vertex chi/eta")->required();
  growth->add_option("--covertex", growth_args.co_vertex, "Co-vertex a/b")->required();
  growth->add_option("--i", growth_args.i_list, "Comma-separated i values")->required()->delimiter(',');

  DressArgs dress_args;
  auto* dress = app.add_subcommand("dress", "Largest distance |F_N(j) - j/|F_N||");
  dress->add_option("--order", dress_args.order, "Single order N");
  dress->add_option("--max-order", dress_args.max_order, "Every order 1..M");

  std::int64_t kanemitsu_order = 0;
  auto* kanemitsu = app.add_subcommand("kanemitsu", "Signed sum over the F_N prefix up to 1/4");
  kanemitsu->add_option("--order", kanemitsu_order, "Order N >= 4")->required();

  std::int64_t totient_limit = 0;
  auto* totient = app.add_subcommand("totient", "phi, Phi and the error terms E, H");
  totient->add_option("--limit", totient_limit, "Largest n")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the small-order oracle suite");

  std::vector<std::string> args(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "farey: " << e.what() << '\n';
    return kUsage;
  }

  Emitter em(out, config, join_args(argv));
  try {
    if (*enumerate) return do_enumerate(enumerate_args, config, em);
    if (*rank) return do_rank(rank_args, config, em);
    if (*index) return do_index(index_args, config, em);
    if (*map) return do_map(map_args, config, em, err);
    if (*gcd_check) return do_gcd_check(gcd_args, config, em);
    if (*franel) return do_franel(franel_args, config, em);
    if (*growth) return do_growth(growth_args, config, em);
    if (*dress) return do_dress(dress_args, config, em);
    if (*kanemitsu) return do_kanemitsu(kanemitsu_order, config, em);
    if (*totient) return do_totient(totient_limit, config, em);
    if (*selftest) return do_selftest(em);
  } catch (const IdentityViolation& e) {
    err << "farey: identity violated: " << e.what() << '\n';
    return kFalsified;
  } catch (const DomainError& e) {
    err << "farey: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    err << "farey: overflow: " << e.what() << '\n';
    return kComputation;
  } catch (const BudgetError& e) {
    err << "farey: budget exceeded: " << e.what() << '\n';
    return kComputation;
  } catch (const std::exception& e) {
    err << "farey: " << e.what() << '\n';
    return kComputation;
  }
  return kUsage;
}

}  // namespace farey::cli
