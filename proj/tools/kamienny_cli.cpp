#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

#include "kamienny/analytic.hpp"
#include "kamienny/bounds.hpp"
#include "kamienny/cache.hpp"
#include "kamienny/graph_paths.hpp"
#include "kamienny/independence.hpp"

using nlohmann::json;
using namespace kamienny;

namespace {

json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json mpq_json(const mpq_class& r) { return r.get_str(); }

json point_json(const P1Point& pt) { return pt.str(); }

json symbol_vector_json(const SymbolVector& v) {
  json arr = json::array();
  for (const auto& [pt, c] : v.terms()) arr.push_back({point_json(pt), mpz_json(c)});
  return arr;
}

json class_json(const HomologyClass& cls) {
  json arr = json::array();
  for (const auto& c : cls.coords) arr.push_back(mpz_json(c));
  return arr;
}

json path_json(const PathRecord& rec) {
  json doc;
  doc["r"] = rec.r;
  doc["start"] = point_json(rec.start);
  doc["direction"] = rec.direction == StepDirection::backward ? "backward" : "forward";
  doc["interval_start"] = rec.interval_start;
  doc["interval_length"] = rec.interval_length;
  doc["start_blocked"] = rec.start_blocked;
  doc["wrapped"] = rec.wrapped;
  if (rec.blocked_at) doc["blocked_at"] = point_json(*rec.blocked_at);
  json visited = json::array();
  for (const auto& pt : rec.visited) visited.push_back(point_json(pt));
  doc["visited"] = std::move(visited);
  return doc;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Output {
  json result;
  int exit_code = 0;
};

void emit(const std::string& command, const json& params, const Output& out, bool table,
          int cache_hits, std::chrono::steady_clock::time_point t0) {
  const std::string dump = out.result.dump(2);
  if (table) {
    // Minimal human rendering: flat key/value lines.
    for (const auto& [k, v] : out.result.items())
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    std::cout << dump << "\n";
  }
  const auto wall =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  json manifest;
  manifest["command"] = command;
  manifest["parameters"] = params;
  manifest["version"] = "0.1.0";
  manifest["cache_hits"] = cache_hits;
  manifest["wall_ms"] = wall.count();
  char digest[32];
  std::snprintf(digest, sizeof digest, "%016llx",
                static_cast<unsigned long long>(fnv1a(dump)));
  manifest["result_digest"] = digest;
  std::cerr << manifest.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke images, independence criteria and exponential-sum estimates "
               "on prime-power level modular curves"};
  app.require_subcommand(1);

  std::string cache_dir_flag;
  bool table = false;
  bool json_flag = false;  // accepted for symmetry; JSON is the default
  app.add_option("--cache-dir", cache_dir_flag, "presentation cache directory");
  app.add_flag("--table", table, "human-readable output instead of JSON");
  app.add_flag("--json", json_flag, "machine-readable output (default)");

  i64 p = 0, r = 1, d = 1, m = 0, D = 2, q = 0, a = 0, K = 1, b = 0, Kp = 1, h = 0, hp = 0;
  int n = 1, precision = bounds::default_digits;
  bool all_m = false, decompose = false;

  auto* c_p1 = app.add_subcommand("p1-list", "enumerate the canonical points");
  c_p1->add_option("--p", p)->required();
  c_p1->add_option("--n", n)->required();

  auto* c_hecke = app.add_subcommand("hecke", "matrices and image of {0,oo} under T_r");
  c_hecke->add_option("--p", p)->required();
  c_hecke->add_option("--n", n)->required();
  c_hecke->add_option("--r", r)->required();

  auto* c_crit = app.add_subcommand("criterion", "independence of the first s*d images");
  c_crit->add_option("--p", p)->required();
  c_crit->add_option("--n", n)->required();
  c_crit->add_option("--d", d)->required();
  c_crit->add_option("--m", m);
  c_crit->add_flag("--all-m", all_m);

  auto* c_paths = app.add_subcommand("paths", "obstacle-avoiding walks flanking (1, r)");
  c_paths->add_option("--p", p)->required();
  c_paths->add_option("--n", n)->required();
  c_paths->add_option("--r", r)->required();
  c_paths->add_option("--D", D)->required();

  auto* c_lambda = app.add_subcommand("lambda", "window correlation over units");
  c_lambda->add_option("--q", q)->required();
  c_lambda->add_option("--a", a)->required();
  c_lambda->add_option("--K", K)->required();
  c_lambda->add_option("--b", b)->required();
  c_lambda->add_option("--Kp", Kp)->required();
  c_lambda->add_flag("--decompose", decompose);

  auto* c_kloos = app.add_subcommand("kloosterman", "S(-h, -h'; q)");
  c_kloos->set_help_flag("--help");  // frees -h/--h for the frequency flag
  c_kloos->add_option("--q", q)->required();
  c_kloos->add_option("--h", h)->required();
  c_kloos->add_option("--hp", hp)->required();

  auto* c_theta = app.add_subcommand("theta", "window DFT magnitude at frequency h");
  c_theta->set_help_flag("--help");
  c_theta->add_option("--q", q)->required();
  c_theta->add_option("--K", K)->required();
  c_theta->add_option("--a", a)->required();
  c_theta->add_option("--h", h)->required();

  auto* c_bounds = app.add_subcommand("bounds", "explicit constants and level bounds");
  c_bounds->add_option("--d", d)->required();
  c_bounds->add_option("--p", p);
  c_bounds->add_option("--precision", precision);

  auto* c_cascade = app.add_subcommand("cascade", "precondition cascade at level p^n");
  c_cascade->add_option("--p", p)->required();
  c_cascade->add_option("--n", n)->required();
  c_cascade->add_option("--D", D)->required();
  c_cascade->add_option("--precision", precision);

  auto* c_cache = app.add_subcommand("cache-info", "list cached presentations");

  // Global flags (--table, --cache-dir, ...) may appear after the subcommand.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto cache_dir = resolve_cache_dir(cache_dir_flag);
  int cache_hits = 0;

  auto presentation = [&](const PrimePowerLevel& level) {
    bool hit = false;
    HomologyPresentation pres = load_or_build_presentation(level, cache_dir, &hit);
    if (hit) ++cache_hits;
    return pres;
  };

  try {
    Output out;
    std::string command;
    json params;

    if (c_p1->parsed()) {
      command = "p1-list";
      params = {{"p", p}, {"n", n}};
      PrimePowerLevel level(p, n);
      json pts = json::array();
      for (const auto& pt : enumerate_points(level)) pts.push_back(point_json(pt));
      out.result = {{"p", p}, {"n", n}, {"q", level.q}, {"count", level.point_count()},
                    {"points", std::move(pts)}};
    } else if (c_hecke->parsed()) {
      command = "hecke";
      params = {{"p", p}, {"n", n}, {"r", r}};
      PrimePowerLevel level(p, n);
      json mats = json::array();
      for (const auto& mt : hecke_matrices(r)) mats.push_back({mt.u, mt.v, mt.w, mt.t});
      HomologyPresentation pres = presentation(level);
      out.result = {{"p", p},
                    {"n", n},
                    {"r", r},
                    {"matrices", std::move(mats)},
                    {"image", symbol_vector_json(hecke_image(r, level))},
                    {"class", class_json(hecke_class(r, pres))}};
    } else if (c_crit->parsed()) {
      command = "criterion";
      params = {{"p", p}, {"n", n}, {"d", d}, {"all_m", all_m}, {"m", m}};
      if (all_m == (m != 0))
        fail(errc::bad_argument, "choose exactly one of --m M and --all-m");
      PrimePowerLevel level(p, n);
      HomologyPresentation pres = presentation(level);
      CriterionReport rep = criterion_verdict(
          pres, d, all_m ? IndependenceMode::all_mod : IndependenceMode::single_mod,
          all_m ? std::nullopt : std::optional<i64>(m));
      json res;
      res["p"] = p;
      res["n"] = n;
      res["degree"] = rep.degree;
      res["s"] = rep.s;
      res["tested_images"] = rep.tested;
      res["mode"] = all_m ? "all-m" : "single-m";
      res["independent"] = rep.result.independent;
      res["pigeonhole"] = rep.result.pigeonhole;
      res["quotient_rank"] = pres.rank();
      res["threshold"] = mpz_json(rep.threshold);
      res["level_clears_threshold"] = rep.level_clears_threshold;
      if (all_m) {
        json divs = json::array();
        for (const auto& e : rep.result.divisors) divs.push_back(mpz_json(e));
        res["elementary_divisors"] = std::move(divs);
      } else {
        res["m"] = m;
        res["rank_mod_m"] = rep.result.rank_mod;
      }
      if (rep.result.witness) {
        res["witness"] = *rep.result.witness;
        res["witness_modulus"] = *rep.result.witness_modulus;
      }
      out.result = std::move(res);
      out.exit_code = rep.result.independent ? 0 : 1;
    } else if (c_paths->parsed()) {
      command = "paths";
      params = {{"p", p}, {"n", n}, {"r", r}, {"D", D}};
      PrimePowerLevel level(p, n);
      PathRecord pa = build_chemin_A(level, r, D);
      PathRecord pb = build_chemin_B(level, r, D);
      auto meet = find_meeting(pa, pb, level);
      json res;
      res["p"] = p;
      res["n"] = n;
      res["r"] = r;
      res["D"] = D;
      res["chemin_a"] = path_json(pa);
      res["chemin_b"] = path_json(pb);
      res["bound_a"] = chemin_a_lower_bound(level, D);
      res["bound_b"] = chemin_b_lower_bound(level, D);
      res["bound_a_holds"] = static_cast<double>(pa.interval_length) >= chemin_a_lower_bound(level, D);
      res["bound_b_holds"] = static_cast<double>(pb.interval_length) >= chemin_b_lower_bound(level, D);
      if (meet) {
        res["meeting"] = {{"y", meet->y}, {"z", meet->z}, {"y_sigma_in_a", meet->y_sigma_in_a}};
      }
      out.result = std::move(res);
    } else if (c_lambda->parsed()) {
      command = "lambda";
      params = {{"q", q}, {"a", a}, {"K", K}, {"b", b}, {"Kp", Kp}, {"decompose", decompose}};
      PrimePowerLevel level = PrimePowerLevel::from_modulus(q);
      Window wa(q, a, K), wb(q, b, Kp);
      json res;
      res["q"] = q;
      res["lambda"] = mpq_json(lambda_exact(level, wa, wb));
      if (decompose) {
        LambdaDecomposition dec = lambda_decompose(level, wa, wb);
        res["lambda00"] = mpq_json(dec.lambda00);
        res["lambda0_row"] = mpq_json(dec.lambda0_row);
        res["lambda0_col"] = mpq_json(dec.lambda0_col);
        res["lambda_s"] = dec.lambda_s;
        res["residual"] = dec.residual;
        res["k_hypothesis"] = dec.k_hypothesis;
        res["bounds_ok"] = dec.lambda00_formula_ok && dec.lambda_s_bound_ok &&
                           (!dec.k_hypothesis ||
                            (dec.lambda0_row_bound_ok && dec.lambda0_col_bound_ok)) &&
                           dec.chain_ok;
      }
      out.result = std::move(res);
    } else if (c_kloos->parsed()) {
      command = "kloosterman";
      params = {{"q", q}, {"h", h}, {"hp", hp}};
      PrimePowerLevel level = PrimePowerLevel::from_modulus(q);
      const auto s = kloosterman(h, hp, level);
      out.result = {{"q", q}, {"h", h}, {"hp", hp}, {"re", s.real()}, {"im", s.imag()},
                    {"abs", std::abs(s)}};
    } else if (c_theta->parsed()) {
      command = "theta";
      params = {{"q", q}, {"K", K}, {"a", a}, {"h", h}};
      PrimePowerLevel::from_modulus(q);  // validates q
      Window w(q, a, K);
      json res;
      res["q"] = q;
      res["direct"] = theta_direct(w, h);
      if (floor_mod(h, q) != 0) res["closed"] = theta_closed(w, h);
      if (2 * floor_mod(h, q) <= q) res["bound"] = theta_bound(floor_mod(h, q), K, q);
      out.result = std::move(res);
    } else if (c_bounds->parsed()) {
      command = "bounds";
      params = {{"d", d}, {"p", p}, {"precision", precision}};
      auto rep = bounds::bound_report(d, p > 0 ? std::optional<i64>(p) : std::nullopt, precision);
      json res;
      res["d"] = rep.d;
      res["C"] = rep.c;
      res["independence_threshold"] = mpz_json(rep.independence);
      if (rep.p) {
        res["p"] = *rep.p;
        res["torsion_level_bound"] = mpz_json(rep.level_bound);
        res["l"] = bounds::l_choice(*rep.p);
        res["s"] = bounds::s_choice(*rep.p);
      }
      res["merel_oesterle_prime_bound"] = mpz_json(rep.merel_oesterle);
      res["primes"] = rep.primes;
      res["global_torsion_bound"] = mpz_json(rep.global);
      out.result = std::move(res);
    } else if (c_cascade->parsed()) {
      command = "cascade";
      params = {{"p", p}, {"n", n}, {"D", D}, {"precision", precision}};
      PrimePowerLevel level(p, n);
      auto rep = bounds::cascade_check(level, D, precision);
      auto block = [](const std::vector<bounds::CascadeCondition>& v) {
        json arr = json::array();
        for (const auto& c : v)
          arr.push_back({{"name", c.name}, {"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs}});
        return arr;
      };
      out.result = {{"p", p},
                    {"n", n},
                    {"D", D},
                    {"lemma_block", block(rep.lemma_block)},
                    {"mid_block", block(rep.mid_block)},
                    {"final_block", block(rep.final_block)},
                    {"lemma_ok", rep.lemma_ok},
                    {"mid_ok", rep.mid_ok},
                    {"final_ok", rep.final_ok},
                    {"implication_final_to_mid_ok", rep.implication_final_to_mid_ok},
                    {"implication_mid_to_lemma_ok", rep.implication_mid_to_lemma_ok},
                    {"helper_implications", block(rep.helper_implications)}};
    } else if (c_cache->parsed()) {
      command = "cache-info";
      params = json::object();
      json entries = json::array();
      if (cache_dir) {
        for (const auto& e : cache_info(*cache_dir))
          entries.push_back({{"file", e.file}, {"p", e.p}, {"n", e.n}, {"rank", e.rank},
                             {"bytes", e.bytes}});
      }
      out.result = {{"dir", cache_dir ? cache_dir->string() : ""}, {"entries", entries}};
    }

    emit(command, params, out, table, cache_hits, t0);
    return out.exit_code;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::bad_argument:
      case errc::overflow:
      case errc::d_out_of_range:
        return 2;
      default:
        return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
