#include "cannonball/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cannonball/arith.hpp"
#include "cannonball/circle.hpp"
#include "cannonball/decompose.hpp"
#include "cannonball/errors.hpp"
#include "cannonball/large.hpp"
#include "cannonball/lehmer.hpp"
#include "cannonball/polygon.hpp"
#include "cannonball/pyramidal.hpp"
#include "cannonball/range_verify.hpp"
#include "cannonball/representation.hpp"

namespace cannonball::cli {

namespace {

using json = nlohmann::ordered_json;

// u128 as a JSON number when it fits, else as a decimal string
json big(u128 v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

json big(i128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}}; }

std::uint64_t to_u64(const std::string& text) {
  const u128 v = parse_u128(text);
  if (v > std::numeric_limits<std::uint64_t>::max()) throw PreconditionError("value " + text + " exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

long double to_real(const std::string& text) {
  // accepts a/q as an exact-ish rational
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const long double num = std::stold(text.substr(0, slash));
    const long double den = std::stold(text.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in " + text);
    return num / den;
  }
  std::size_t used = 0;
  const long double v = std::stold(text, &used);
  if (used != text.size()) throw PreconditionError("not a number: " + text);
  return v;
}

json decomposition_json(const core::Decomposition& d) {
  json out;
  out["terms"] = d.terms;
  json values = json::array();
  for (u128 v : d.values()) values.push_back(big(v));
  out["values"] = values;
  return out;
}

json trace_json(const core::LargeDecompositionTrace& t) {
  json terms = json::array();
  json values = json::array();
  for (u128 n : t.terms) {
    terms.push_back(big(n));
    values.push_back(big(core::pyramidal_signed(static_cast<i128>(n))));
  }
  const auto problems = core::verify_trace(t);
  return json{{"m", big(t.m)},
              {"p", t.p},
              {"x", t.x},
              {"L", big(t.L)},
              {"ell", t.ell},
              {"r", t.r},
              {"ell0", t.ell0},
              {"r0", t.r0},
              {"a", big(t.a)},
              {"b", big(t.b)},
              {"c", big(t.c)},
              {"M", big(t.M)},
              {"t", t.t},
              {"epsilon", t.epsilon},
              {"delta", t.delta},
              {"alpha", t.alpha},
              {"epsilon_widened", t.epsilon_widened},
              {"candidates_scanned", t.candidates_scanned},
              {"terms", terms},
              {"values", values},
              {"violations", problems}};
}

json polygon_json(const polygon::PolygonInstance& poly, const polygon::WeightFunction& w, std::uint64_t Z) {
  json vertices = json::array();
  for (const auto& v : poly.vertices) vertices.push_back({v.x, v.y});
  json radii = json::array();
  for (u128 r : poly.squared_radii) radii.push_back(big(r));
  return json{{"Z", Z},
              {"weights", w.w},
              {"sides", poly.sides},
              {"orientations", poly.orientations},
              {"vertices", vertices},
              {"squared_radii", radii},
              {"closure_residual", poly.closure_residual}};
}

json prediction_json(const circle::PredictionReport& r, const std::string& mode) {
  json out{{"m", r.m},
           {"s", r.s},
           {"Q", r.Q},
           {"exact_ordered", big(r.exact_ordered)},
           {"exact_multiset", big(r.exact_multiset)},
           {"singular_series", r.singular_series},
           {"ratio", r.ratio}};
  if (mode == "A" || mode == "both") {
    out["main_A"] = r.main_A;
    out["ratio_over_A"] = r.ratio_over_A;
  }
  if ((mode == "B" || mode == "both") && r.main_B) {
    out["main_B"] = *r.main_B;
    out["ratio_over_B"] = *r.ratio_over_B;
  }
  return out;
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flag storage for every subcommand; numbers arrive as text so that
// shorthand such as 1e5 is accepted everywhere.
struct Flags {
  unsigned threads = 0;
  std::string out_path;
  std::string mem_budget;
  bool timing = false;

  std::string m, lo, hi, Z, p, B, L, q, a, N, Q, chunk, m_min, m_max;
  unsigned s = 8, k = 0, j = 1, points = 12, max_terms = 0, b0 = 0, b1 = 0;
  std::string mode = "ordered", method = "auto", kind = "V", format = "json", constant_mode = "both";
  std::string alpha, orientation_bits;
  std::vector<std::int64_t> weights;
  double c = 1.3e7, t = 3.17, epsilon = 0.5, delta = 0.5, alpha_int = 0.5, eta = 1;
  double t0 = 0.5, t1 = 0.5, g0 = 0.5, g1 = 0.5;
  std::string scan_budget = "10000", p_max;
  bool pair = false, upper = false;
};

polygon::WeightFunction weight_for(const Flags& f, std::uint64_t Z) {
  if (!f.weights.empty()) return polygon::WeightFunction{f.weights, f.s};
  if (Z > std::numeric_limits<std::uint32_t>::max()) throw PreconditionError("Z too large for a default weight");
  auto w = polygon::weight_from_decomposition(core::decompose8(Z * Z));
  return w;
}

std::vector<bool> bits_from(const std::string& text) {
  std::vector<bool> bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw PreconditionError("orientation bits must be 0/1");
    bits.push_back(ch == '1');
  }
  return bits;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of square pyramidal numbers: decompositions, range checks, polygons and circle-method tools",
               "cannonball"};
  app.require_subcommand(1, 1);
  app.fallthrough();  // global flags may follow the subcommand
  auto flags = std::make_shared<Flags>();
  Flags& f = *flags;
  app.add_option("--threads", f.threads, "worker threads (default: all cores)");
  app.add_option("--out", f.out_path, "write output to this file instead of stdout");
  app.add_option("--mem-budget", f.mem_budget, "bit-table budget in bytes (overrides CANNONBALL_MEM_BUDGET_BYTES)");

  // Each handler writes its output to the stream it receives.
  std::function<void(std::ostream&)> handler;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  {
    auto* c = sub("decompose", "write m as a sum of at most 8 pyramidal numbers");
    c->add_option("--m", f.m, "target")->required();
    c->add_option("--max-terms", f.max_terms, "search for a shortest decomposition with at most this many terms");
    c->add_option("--c", f.c, "greedy constant");
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto m = to_u64(f.m);
        const auto d = f.max_terms ? core::decompose_minimal(m, f.max_terms)
                                   : core::decompose8(m, core::GreedyOptions{f.c, 100'000'000});
        os << decomposition_json(d).dump() << '\n';
      };
    });
  }
  {
    auto* c = sub("count", "number of representations of m as a sum of s pyramidal numbers");
    c->add_option("--m", f.m)->required();
    c->add_option("--s", f.s)->required();
    c->add_option("--mode", f.mode)->check(CLI::IsMember({"ordered", "multiset"}));
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto m = to_u64(f.m);
        const auto mode = f.mode == "ordered" ? core::CountMode::kOrdered : core::CountMode::kMultiset;
        os << json{{"m", m}, {"s", f.s}, {"mode", f.mode}, {"count", big(core::count_representations(m, f.s, mode))}}
                  .dump()
           << '\n';
      };
    });
  }
  {
    auto* c = sub("min-terms", "least number of pyramidal numbers summing to m");
    c->add_option("--m", f.m)->required();
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto m = to_u64(f.m);
        os << json{{"m", m}, {"min_terms", core::min_terms(m)}}.dump() << '\n';
      };
    });
  }
  {
    auto* c = sub("verify-range", "find every m in [lo, hi] that is not a sum of k pyramidal numbers");
    c->add_option("--lo", f.lo)->required();
    c->add_option("--hi", f.hi)->required();
    c->add_option("--k", f.k)->required();
    c->add_option("--chunk-size", f.chunk, "split the range and emit one JSON line per chunk");
    c->add_flag("--timing", f.timing, "include wall-clock seconds");
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto lo = to_u64(f.lo), hi = to_u64(f.hi);
        core::RangeOptions opts;
        opts.threads = f.threads ? f.threads : std::max(1U, std::thread::hardware_concurrency());
        if (!f.mem_budget.empty()) opts.table_bit_budget = to_u64(f.mem_budget) * 8;
        auto emit = [&](std::uint64_t a, std::uint64_t b) {
          const auto rep = core::verify_range(a, b, f.k, opts);
          json j{{"lo", rep.lo}, {"hi", rep.hi}, {"k", rep.k}, {"failures", rep.failures}};
          if (f.timing) j["seconds"] = rep.seconds;
          os << j.dump() << '\n';
        };
        if (f.chunk.empty()) return emit(lo, hi);
        const auto step = to_u64(f.chunk);
        if (step == 0) throw PreconditionError("--chunk-size must be positive");
        for (std::uint64_t a = lo; a <= hi;) {
          const std::uint64_t b = hi - a < step - 1 ? hi : a + step - 1;
          emit(a, b);
          if (b == hi) break;
          a = b + 1;
        }
      };
    });
  }
  {
    auto* c = sub("decompose-large", "constructive eight-term decomposition for very large m");
    c->add_option("--m", f.m)->required();
    c->add_option("--t", f.t);
    c->add_option("--epsilon", f.epsilon);
    c->add_option("--delta", f.delta);
    c->add_option("--alpha", f.alpha_int);
    c->add_option("--scan-budget", f.scan_budget);
    c->callback([&] {
      handler = [&](std::ostream& os) {
        core::LargeOptions opts{f.t, f.epsilon, f.delta, f.alpha_int, to_u64(f.scan_budget)};
        os << trace_json(core::decompose_large(parse_u128(f.m), opts)).dump() << '\n';
      };
    });
  }
  for (const char* name : {"polygon", "polygon-svg"}) {
    const bool svg = std::string(name) == "polygon-svg";
    auto* c = sub(name, svg ? "render a cannonball polygon as SVG" : "build a cannonball polygon");
    c->add_option("--Z", f.Z)->required();
    c->add_option("--weights", f.weights, "w(1) w(2) ...; default comes from decomposing Z^2");
    c->add_option("--s", f.s, "multiplicity used for validation");
    c->add_option("--orientation", f.orientation_bits, "one 0/1 per non-final side; 1 turns counter-clockwise");
    c->callback([&, svg] {
      handler = [&, svg](std::ostream& os) {
        const auto Z = to_u64(f.Z);
        const auto w = weight_for(f, Z);
        const auto poly = polygon::build_polygon(w, Z, bits_from(f.orientation_bits));
        if (svg) {
          os << polygon::svg_string(poly);
          return;
        }
        auto j = polygon_json(poly, w, Z);
        const auto verdict = polygon::validate_weight(w, f.s, Z);
        j["valid"] = verdict.valid;
        j["violations"] = verdict.violations;
        os << j.dump() << '\n';
      };
    });
  }
  {
    auto* c = sub("class-count", "number of weight functions of multiplicity s for final side Z");
    c->add_option("--Z", f.Z)->required();
    c->add_option("--s", f.s)->required();
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto Z = to_u64(f.Z);
        os << json{{"Z", Z}, {"s", f.s}, {"count", big(polygon::class_count(Z, f.s))}}.dump() << '\n';
      };
    });
  }
  {
    auto* c = sub("exp-sum", "V(q, a) or f_N(alpha)");
    c->add_option("--kind", f.kind)->check(CLI::IsMember({"V", "f"}));
    c->add_option("--q", f.q);
    c->add_option("--a", f.a);
    c->add_option("--N", f.N);
    c->add_option("--alpha", f.alpha, "real or a/q");
    c->callback([&] {
      handler = [&](std::ostream& os) {
        if (f.kind == "V") {
          if (f.q.empty() || f.a.empty()) throw PreconditionError("V needs --q and --a");
          const auto r = arith::exp_sum_V(to_u64(f.q), to_u64(f.a));
          auto j = json{{"kind", "V"}, {"q", r.q}, {"a", r.a}, {"n_terms", r.n_terms}};
          j["value"] = complex_json(r.value);
          os << j.dump() << '\n';
          return;
        }
        if (f.N.empty()) throw PreconditionError("f needs --N");
        const auto N = to_u64(f.N);
        json j{{"kind", "f"}, {"N", N}};
        if (!f.alpha.empty()) {
          j["alpha"] = f.alpha;
          j["value"] = complex_json(circle::f_exp_sum(to_real(f.alpha), N));
        } else {
          if (f.q.empty() || f.a.empty()) throw PreconditionError("f needs --alpha or --a/--q");
          j["a"] = to_u64(f.a);
          j["q"] = to_u64(f.q);
          j["value"] = complex_json(circle::f_exp_sum_rational(to_u64(f.a), to_u64(f.q), N));
        }
        os << j.dump() << '\n';
      };
    });
  }
  {
    auto* c = sub("singular-series", "partial singular series up to Q (JSON lines with --m-min/--m-max)");
    c->add_option("--m", f.m);
    c->add_option("--m-min", f.m_min);
    c->add_option("--m-max", f.m_max);
    c->add_option("--points", f.points);
    c->add_option("--s", f.s)->required();
    c->add_option("--Q", f.Q)->required();
    c->callback([&] {
      handler = [&](std::ostream& os) {
        std::vector<std::uint64_t> ms;
        if (!f.m.empty())
          ms.push_back(to_u64(f.m));
        else if (!f.m_min.empty() && !f.m_max.empty())
          ms = circle::log_spaced(to_u64(f.m_min), to_u64(f.m_max), f.points);
        else
          throw PreconditionError("give --m or --m-min and --m-max");
        for (const auto& r : arith::singular_series_partial(ms, f.s, to_u64(f.Q))) {
          json j{{"m", r.m}, {"s", r.s}, {"Q", r.Q}, {"re", r.value.real()}, {"im", r.value.imag()}};
          j["tail_bound"] = std::isfinite(r.tail_bound) ? json(r.tail_bound) : json("inf");
          os << j.dump() << '\n';
        }
      };
    });
  }
  {
    auto* c = sub("local-density", "p-adic density approximant, or an Euler product with --p-max");
    c->add_option("--m", f.m)->required();
    c->add_option("--p", f.p);
    c->add_option("--p-max", f.p_max);
    c->add_option("--s", f.s)->required();
    c->add_option("--k", f.k, "level (default depends on p)");
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto m = to_u64(f.m);
        auto one = [](const arith::LocalDensity& d) {
          return json{{"p", d.p}, {"k", d.k}, {"s", d.s}, {"m", d.m}, {"value", d.value}};
        };
        if (!f.p_max.empty()) {
          const auto e = arith::euler_product_estimate(m, f.s, to_u64(f.p_max), f.k);
          json factors = json::array();
          for (const auto& d : e.factors) factors.push_back(one(d));
          os << json{{"m", m}, {"s", f.s}, {"value", e.value}, {"factors", factors}}.dump() << '\n';
          return;
        }
        if (f.p.empty()) throw PreconditionError("give --p or --p-max");
        const auto p = to_u64(f.p);
        os << one(arith::local_density(m, p, f.s, f.k ? f.k : arith::default_level(p))).dump() << '\n';
      };
    });
  }
  {
    auto* c = sub("curve-count", "affine points of f(x) + f(y) + B = 0 over F_p (every B when --B is omitted)");
    c->add_option("--p", f.p)->required();
    c->add_option("--B", f.B);
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto p = to_u64(f.p);
        auto emit = [&](std::uint64_t B) {
          const auto r = arith::curve_count(p, B);
          os << json{{"p", r.p},
                     {"B", r.B},
                     {"count", r.count},
                     {"case", arith::to_string(r.curve_case)},
                     {"b0", r.b0},
                     {"b0_shifted", r.shifted_b0},
                     {"points_at_infinity", r.points_at_infinity},
                     {"lower_margin", r.lower_margin},
                     {"upper_margin", r.upper_margin},
                     {"corrected_lower_margin", r.corrected_lower_margin},
                     {"within_stated_bound", arith::within_stated_bound(r)},
                     {"within_corrected_bound", arith::within_corrected_bound(r)}}
                    .dump()
             << '\n';
        };
        if (!f.B.empty()) return emit(to_u64(f.B));
        for (std::uint64_t B = 0; B < p; ++B) emit(B);
      };
    });
  }
  {
    auto* c = sub("lehmer", "residue-restricted point count in a box, or a pair search with --pair");
    c->add_option("--p", f.p)->required();
    c->add_option("--L", f.L);
    c->add_option("--m", f.m);
    c->add_option("--b0", f.b0);
    c->add_option("--b1", f.b1);
    c->add_option("--t0", f.t0);
    c->add_option("--t1", f.t1);
    c->add_option("--g0", f.g0);
    c->add_option("--g1", f.g1);
    c->add_option("--method", f.method)->check(CLI::IsMember({"auto", "table", "stream"}));
    c->add_flag("--pair", f.pair, "find (ell, r) meeting both divisibility conditions for --m");
    c->add_option("--scan-budget", f.scan_budget);
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto p = to_u64(f.p);
        if (f.pair) {
          if (f.m.empty()) throw PreconditionError("--pair needs --m");
          const u128 m = parse_u128(f.m);
          const auto r = lehmer::find_lehmer_pair(m, p, to_u64(f.scan_budget));
          os << json{{"m", big(m)},
                     {"p", p},
                     {"L", big(r.L)},
                     {"ell", r.ell},
                     {"r", r.r},
                     {"ell0", r.ell0},
                     {"r0", r.r0},
                     {"violations", lehmer::pair_violations(m, p, r.ell, r.r)}}
                    .dump()
             << '\n';
          return;
        }
        if (f.L.empty()) throw PreconditionError("lehmer needs --L (or --pair --m)");
        lehmer::LehmerQuery q{p, to_u64(f.L), f.b0, f.b1, f.t0, f.t1, f.g0, f.g1};
        const auto method = f.method == "table"    ? lehmer::CountMethod::kTable
                            : f.method == "stream" ? lehmer::CountMethod::kStream
                                                   : lehmer::CountMethod::kAuto;
        const auto r = lehmer::lehmer_distribution_F(q, method);
        os << json{{"p", p},       {"L", q.L},           {"b0", q.b0},         {"b1", q.b1},
                   {"t0", q.t0},   {"t1", q.t1},         {"g0", q.g0},         {"g1", q.g1},
                   {"F", r.F},     {"main_term", r.main_term}, {"bound", r.bound}, {"margin", r.margin}}
                  .dump()
           << '\n';
      };
    });
  }
  {
    auto* c = sub("mean-value", "integral of |f_N|^(2^j) over [0, 1]");
    c->add_option("--N", f.N)->required();
    c->add_option("--j", f.j)->required();
    c->add_flag("--upper", f.upper, "use the integer upper bound when the exact count is out of budget");
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto N = to_u64(f.N);
        bool exact = true;
        BigCount v = 0;
        try {
          v = circle::mean_value(N, f.j);
        } catch (const ResourceError&) {
          if (!f.upper) throw;
          v = circle::mean_value_upper_bound(N, f.j);
          exact = false;
        }
        os << json{{"N", N}, {"j", f.j}, {"value", big(v)}, {"exact", exact},
                   {"bound", circle::mean_value_bound(N, f.j)}}
                  .dump()
           << '\n';
      };
    });
  }
  {
    auto* c = sub("weyl", "|f_N(alpha)| against the Weyl bound near a/q");
    c->add_option("--alpha", f.alpha)->required();
    c->add_option("--N", f.N)->required();
    c->add_option("--a", f.a)->required();
    c->add_option("--q", f.q)->required();
    c->add_option("--eta", f.eta);
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto w = circle::weyl_margin(to_real(f.alpha), to_u64(f.N), to_u64(f.a), to_u64(f.q), f.eta);
        os << json{{"alpha", f.alpha}, {"N", to_u64(f.N)}, {"a", to_u64(f.a)},  {"q", to_u64(f.q)},
                   {"eta", f.eta},     {"abs_f", w.abs_f},   {"bound", w.bound}, {"margin", w.margin},
                   {"q_eff", w.q_eff}, {"eta_eff", w.eta_eff}}
                  .dump()
           << '\n';
      };
    });
  }
  {
    auto* c = sub("j1", "singular integral J1 by weighted convolution");
    c->add_option("--m", f.m)->required();
    c->add_option("--s", f.s)->required();
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto v = circle::J1_exact(to_u64(f.m), f.s);
        os << json{{"m", v.m}, {"s", v.s}, {"J1", v.J1}, {"main_term", v.main_term}, {"bound", v.bound},
                   {"within_bound", std::abs(v.J1 - v.main_term) <= v.bound}}
                  .dump()
           << '\n';
      };
    });
  }
  {
    auto* c = sub("predict", "exact counts against the singular-series prediction over log-spaced m");
    c->add_option("--m-min", f.m_min)->required();
    c->add_option("--m-max", f.m_max)->required();
    c->add_option("--points", f.points);
    c->add_option("--s", f.s);
    c->add_option("--Q", f.Q)->required();
    c->add_option("--constant-mode", f.constant_mode)->check(CLI::IsMember({"A", "B", "both"}));
    c->add_option("--format", f.format)->check(CLI::IsMember({"json", "csv"}));
    c->callback([&] {
      handler = [&](std::ostream& os) {
        const auto ms = circle::log_spaced(to_u64(f.m_min), to_u64(f.m_max), f.points);
        const auto rows = circle::prediction_batch(ms, f.s, to_u64(f.Q));
        bool header = true;
        for (const auto& r : rows) {
          const json j = prediction_json(r, f.constant_mode);
          if (f.format == "json") {
            os << j.dump() << '\n';
            continue;
          }
          if (header) {
            std::string line;
            for (const auto& [key, _] : j.items()) line += (line.empty() ? "" : ",") + key;
            os << line << '\n';
            header = false;
          }
          std::string line;
          bool first = true;
          for (const auto& [_, v] : j.items()) {
            line += (first ? "" : ",") + csv_cell(v);
            first = false;
          }
          os << line << '\n';
        }
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (!handler) throw PreconditionError("no subcommand");
    if (f.out_path.empty()) {
      std::ostringstream buffer;
      handler(buffer);
      out << buffer.str();
    } else {
      std::ostringstream buffer;
      handler(buffer);
      std::ofstream file(f.out_path, std::ios::binary);
      if (!file) throw ResourceError("cannot open " + f.out_path);
      file << buffer.str();
    }
    return kOk;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvalidClassError& e) {
    err << "invalid class: " << e.what() << '\n';
    return kPrecondition;
  } catch (const DegenerateInstanceError& e) {
    err << "degenerate polygon at vertex " << e.vertex << ": " << e.what() << '\n';
    return kPrecondition;
  } catch (const ArithmeticRangeError& e) {
    err << "range: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::out_of_range& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InternalError& e) {
    err << "internal: " << e.what() << '\n';
    return kInternal;
  } catch (const std::bad_alloc&) {
    err << "resource: out of memory\n";
    return kResource;
  } catch (const std::runtime_error& e) {
    // budgets, exhausted searches and quadrature accuracy
    err << "resource: " << e.what() << '\n';
    return kResource;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, out, err);
}

}  // namespace cannonball::cli
