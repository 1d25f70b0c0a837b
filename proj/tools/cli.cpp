#include "cli.hpp"

#include "box_oracle.hpp"
#include "walldiv/brill_noether.hpp"
#include "walldiv/catalog.hpp"
#include "walldiv/coisotropic.hpp"
#include "walldiv/mukai.hpp"
#include "walldiv/wall.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <memory>
#include <optional>
#include <ostream>
#include <thread>

namespace walldiv::cli {

using json = nlohmann::ordered_json;

namespace {

json jint(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return to_int64(n);
  }
  return n.str();
}

json jrat(const Rational& r) { return to_fraction_string(r); }

json jgram(const Gram2& g) { return json::array({jint(g.a), jint(g.b), jint(g.b), jint(g.c)}); }

json jtriple(const MukaiTriple& t) { return json::array({jrat(t.r), jrat(t.m), jrat(t.s)}); }

json jint_triple(const MukaiTriple& t) {
  if (!t.is_integral()) return jtriple(t);
  return json::array({jint(to_integer(t.r)), jint(to_integer(t.m)), jint(to_integer(t.s))});
}

json jcurve(const CurveClass& c) { return {{"l", jint(c.l_coeff)}, {"r", jint(c.r_coeff)}}; }

json jdivisor(const DivisorClass& d) { return {{"l", jrat(d.l_coeff)}, {"e", jrat(d.e_coeff)}}; }

json jcandidate(const WitnessCandidate& w) {
  return {{"t_coords", json::array({jint(w.coords[0]), jint(w.coords[1])})},
          {"branch", to_string(w.branch)},
          {"pairing_with_v", jint(w.pairing_with_v)},
          {"square", jint(w.square)}};
}

void check_epsilon(int eps) {
  if (eps != 0 && eps != 1) throw DomainError("epsilon must be 0 (K3) or 1 (abelian)");
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(output_dir_env); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

// Writes to --output when given, otherwise to out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    const auto p = resolve_output(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    file_ = std::make_unique<std::ofstream>(p);
    if (!*file_) throw DomainError("cannot open output file " + p.string());
    os_ = file_.get();
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

struct PointOpts {
  int epsilon = 0;
  std::int64_t k = 0;
  std::int64_t p = 0;
  std::int64_t delta = 0;
};

void add_point_options(CLI::App* cmd, PointOpts& o, bool need_delta) {
  cmd->add_option("--epsilon", o.epsilon, "0 for K3, 1 for abelian")->required();
  cmd->add_option("--k", o.k, "number of points")->required();
  cmd->add_option("--p", o.p, "genus of the polarisation")->required();
  auto* d = cmd->add_option("--delta", o.delta, "number of nodes");
  if (need_delta) d->required();
}

BNParams point_params(const PointOpts& o) {
  check_epsilon(o.epsilon);
  return BNParams::make(o.epsilon, o.p, o.delta, o.k);
}

json point_header(const PointOpts& o) {
  return {{"epsilon", o.epsilon}, {"k", o.k}, {"p", o.p}, {"delta", o.delta}};
}

json verdict_json(const WallVerdict& v) {
  json j;
  j["is_wall"] = v.is_wall;
  j["status"] = v.status;
  j["t_gram"] = v.t_gram ? jgram(*v.t_gram) : json(nullptr);
  j["branch"] = v.branch ? json(to_string(*v.branch)) : json(nullptr);
  if (v.witness) {
    json w = jcandidate(v.witness->in_t);
    w["triple"] = jint_triple(v.witness->ambient);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["primitive_d"] = jdivisor(v.primitive_d);
  j["divisor_div"] = jint(v.divisor_div);
  j["scale"] = jrat(v.scale);
  j["input_square"] = jrat(v.input_square);
  return j;
}

// ---- scan -----------------------------------------------------------------

struct GridPoint {
  int epsilon;
  std::int64_t k, p, delta;
};

json scan_point(const GridPoint& g, const std::string& check) {
  json j{{"epsilon", g.epsilon}, {"k", g.k}, {"p", g.p}, {"delta", g.delta}, {"check", check}};
  const BNParams params = BNParams::make(g.epsilon, g.p, g.delta, g.k);
  const SurfaceContext& ctx = params.ctx();
  const bool exists = exists_pencil(params);
  if (check == "bound-equiv") {
    const bool via = exists_pencil_via_rho(params);
    j["exists"] = exists;
    j["via_rho"] = via;
    j["consistent"] = exists == via;
    return j;
  }
  const CurveSquare sq = curve_square(params);
  if (check == "square-forms") {
    const Integer c = ctx.exceptional_index();
    const bool in_range = -c < sq.beta && sq.beta <= c;
    j["q_R"] = jrat(sq.value);
    j["alternate"] = jrat(sq.alternate);
    j["beta"] = jint(sq.beta);
    j["beta_in_range"] = in_range;
    j["consistent"] = sq.forms_agree && in_range;
    return j;
  }
  if (check == "mukai") {
    const LazarsfeldMukaiVector lm = lm_mukai_vector(ctx, g.delta);
    const Rational qlm = mukai_square(lm.vector, ctx);
    const MukaiTriple v = hilb_vector(ctx);
    const MukaiTriple e = ek_vector(ctx);
    const bool integral = (Rational(1, 2) * (v + e)).is_integral() &&
                          (Rational(1) / Rational(ctx.exceptional_divisibility()) * (v - e)).is_integral();
    bool consistent = integral;
    try {
      const Integer dim = moduli_dim(ctx, g.delta);
      j["moduli_dim"] = jint(dim);
      consistent = consistent && Rational(dim) == qlm + 2;
    } catch (const DomainError&) {
      j["moduli_dim"] = nullptr;
    }
    j["chi"] = jint(lm.chi);
    j["integrality"] = integral;
    j["consistent"] = consistent;
    return j;
  }
  j["exists"] = exists;
  if (!exists) {
    j["consistent"] = true;
    j["skipped"] = "no pencil";
    return j;
  }
  if (check == "thm51") {
    const WallVerdict v = wall_test(curve_class(params), ctx);
    j["q_R"] = jrat(sq.value);
    j["is_wall"] = v.is_wall;
    j["consistent"] = v.is_wall == (sq.value < 0);
    return j;
  }
  if (check == "mbm") {
    const WallVerdict v = wall_test(curve_class(params), ctx);
    const Rational bound = mbm_bound(ctx);
    j["q_R"] = jrat(sq.value);
    j["bound"] = jrat(bound);
    j["is_wall"] = v.is_wall;
    j["minimal"] = sq.minimal;
    j["equality_case"] = sq.equality_case;
    j["consistent"] = (!v.is_wall || sq.value >= bound) && (sq.minimal == sq.equality_case);
    return j;
  }
  if (check == "oracle") {
    if (sq.value >= 0) {
      j["consistent"] = true;
      j["skipped"] = "nonnegative square";
      return j;
    }
    const PrimitiveDual pd = primitive_dual_divisor(curve_class(params), ctx);
    const SaturatedLattice t = saturated_T(pd.divisor, ctx);
    const auto fast = enumerate_witnesses(t.gram, t.v_coords, g.epsilon);
    const auto slow = box_witnesses(t.gram, g.epsilon);
    j["t_gram"] = jgram(t.gram);
    j["witness_count"] = fast.size();
    j["oracle_count"] = slow.size();
    j["consistent"] = fast == slow;
    return j;
  }
  throw DomainError("unknown check '" + check + "'");
}

int run_scan(const std::string& eps_text, const std::string& k_text, const std::string& p_text,
             const std::string& delta_text, const std::string& check, unsigned threads, std::ostream& os,
             std::ostream& err) {
  static const std::vector<std::string> checks{"thm51", "bound-equiv", "square-forms", "mbm", "mukai", "oracle"};
  if (std::find(checks.begin(), checks.end(), check) == checks.end()) {
    throw DomainError("--check must be one of thm51, bound-equiv, square-forms, mbm, mukai, oracle");
  }
  const Range er = parse_range(eps_text);
  const Range kr = parse_range(k_text);
  const Range pr = parse_range(p_text);
  if (er.lo < 0 || er.hi > 1) throw DomainError("epsilon range must lie in 0..1");
  if (kr.lo < 2) throw DomainError("k >= 2 required");
  if (pr.lo < 2) throw DomainError("p >= 2 required");
  std::optional<Range> dr;
  if (!delta_text.empty()) {
    dr = parse_range(delta_text);
    if (dr->lo < 0) throw DomainError("0 <= delta <= p - 2eps required");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  // Grid points are produced lazily in (eps, k, p, delta) order and handled in
  // fixed-size batches so memory stays bounded.
  std::vector<GridPoint> batch;
  std::size_t total = 0, inconsistent = 0;
  auto flush = [&] {
    std::vector<std::string> lines(batch.size());
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (batch.size() + threads - 1) / threads;
    for (std::size_t start = 0; start < batch.size(); start += chunk) {
      const std::size_t stop = std::min(batch.size(), start + chunk);
      jobs.push_back(std::async(std::launch::async, [&, start, stop] {
        for (std::size_t i = start; i < stop; ++i) lines[i] = scan_point(batch[i], check).dump();
      }));
    }
    for (auto& f : jobs) f.get();
    for (const auto& line : lines) {
      ++total;
      if (line.find("\"consistent\":false") != std::string::npos) ++inconsistent;
      os << line << '\n';
    }
    os.flush();
    batch.clear();
  };
  constexpr std::size_t batch_size = 512;
  for (std::int64_t e = er.lo; e <= er.hi; ++e)
    for (std::int64_t k = kr.lo; k <= kr.hi; ++k)
      for (std::int64_t p = pr.lo; p <= pr.hi; ++p) {
        const std::int64_t d_lo = dr ? dr->lo : 0;
        const std::int64_t d_hi = std::min(dr ? dr->hi : p, p - 2 * e);
        for (std::int64_t d = d_lo; d <= d_hi; ++d) {
          batch.push_back({static_cast<int>(e), k, p, d});
          if (batch.size() == batch_size) flush();
        }
      }
  flush();
  err << "scan " << check << ": " << total << " records, " << inconsistent << " inconsistent\n";
  return exit_ok;
}

}  // namespace

Range parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw DomainError("malformed range '" + text + "' (expected a or a..b)");
    return v;
  };
  const auto dots = text.find("..");
  Range r{};
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw DomainError("empty range '" + text + "'");
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wall divisors on Hilbert schemes of K3 surfaces and generalised Kummer varieties", "walldiv"};
  app.require_subcommand(1);
  std::string output;

  PointOpts wt;
  bool oracle = false;
  std::optional<std::int64_t> class_l, class_r;
  auto* wall_cmd = app.add_subcommand("wall-test", "decide whether the dual of a curve class is a wall divisor");
  add_point_options(wall_cmd, wt, false);
  wall_cmd->add_option("--class-l", class_l, "L-coefficient of an explicit curve class");
  wall_cmd->add_option("--class-r", class_r, "r_k-coefficient of an explicit curve class");
  wall_cmd->add_flag("--oracle", oracle, "cross-check witnesses against brute-force box enumeration");
  wall_cmd->add_option("--output", output);

  PointOpts cl;
  auto* class_cmd = app.add_subcommand("class", "curve class R and its dual divisor");
  add_point_options(class_cmd, cl, true);
  class_cmd->add_option("--output", output);

  PointOpts ex;
  auto* exists_cmd = app.add_subcommand("exists", "existence of nodal curves with a pencil");
  add_point_options(exists_cmd, ex, true);
  exists_cmd->add_option("--output", output);

  PointOpts sqo;
  auto* square_cmd = app.add_subcommand("square", "q(R) in both closed forms");
  add_point_options(square_cmd, sqo, true);
  square_cmd->add_option("--output", output);

  int cat_eps = 0;
  std::int64_t cat_k = 0, cat_delta_max = 0;
  std::string cat_p;
  auto* catalog_cmd = app.add_subcommand("catalog", "catalog of wall-divisor lattices T (JSON lines)");
  catalog_cmd->add_option("--epsilon", cat_eps)->required();
  catalog_cmd->add_option("--k", cat_k)->required();
  catalog_cmd->add_option("--p", cat_p, "genus range a..b")->required();
  catalog_cmd->add_option("--delta-max", cat_delta_max)->required();
  catalog_cmd->add_option("--output", output);

  PointOpts co;
  std::string family = "all";
  auto* cois_cmd = app.add_subcommand("coisotropic", "coisotropic subvarieties swept out by rational curves");
  add_point_options(cois_cmd, co, false);
  cois_cmd->add_option("--family", family, "projbundle, severi, symprod or all")
      ->check(CLI::IsMember({"projbundle", "severi", "symprod", "all"}));
  cois_cmd->add_option("--output", output);

  int lag_eps = 0;
  std::int64_t lag_k = 0;
  auto* lag_cmd = app.add_subcommand("lagrangian", "the Lagrangian P^k case");
  lag_cmd->add_option("--epsilon", lag_eps)->required();
  lag_cmd->add_option("--k", lag_k)->required();
  lag_cmd->add_option("--output", output);

  std::string sc_eps, sc_k, sc_p, sc_delta, sc_check;
  unsigned sc_threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "grid consistency scan (JSON lines)");
  scan_cmd->add_option("--epsilon", sc_eps, "0, 1 or 0..1")->required();
  scan_cmd->add_option("--k", sc_k, "range a..b")->required();
  scan_cmd->add_option("--p", sc_p, "range a..b")->required();
  scan_cmd->add_option("--delta", sc_delta, "range a..b (default 0..p-2eps)");
  scan_cmd->add_option("--check", sc_check, "thm51, bound-equiv, square-forms, mbm, mukai or oracle")->required();
  scan_cmd->add_option("--threads", sc_threads, "worker threads (default: hardware concurrency)");
  scan_cmd->add_option("--output", output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "walldiv: " << e.what() << '\n';
    return exit_invalid;
  }

  try {
    Sink sink(output, out);
    std::ostream& os = sink.stream();

    if (wall_cmd->parsed()) {
      check_epsilon(wt.epsilon);
      const SurfaceContext ctx(wt.epsilon, wt.p, wt.k);
      json j = point_header(wt);
      CurveClass r;
      if (class_l || class_r) {
        if (!class_l || !class_r) throw DomainError("--class-l and --class-r must be given together");
        r = {*class_l, *class_r};
        j.erase("delta");
      } else {
        const BNParams params(ctx, wt.delta);
        r = curve_class(params);
        j["exists_pencil"] = exists_pencil(params);
      }
      const WallVerdict v = wall_test(r, ctx);
      j["class"] = jcurve(r);
      j["q_R"] = jrat(bb_square(r, ctx));
      j.update(verdict_json(v));
      if (oracle) {
        if (v.t_gram) {
          const auto fast = enumerate_witnesses(*v.t_gram, {0, 1}, wt.epsilon);
          const auto slow = box_witnesses(*v.t_gram, wt.epsilon);
          j["oracle"] = {{"agrees", fast == slow}, {"witness_count", fast.size()}, {"oracle_count", slow.size()}};
        } else {
          j["oracle"] = {{"agrees", true}, {"witness_count", 0}, {"oracle_count", 0}};
        }
      }
      os << j.dump() << '\n';
    } else if (class_cmd->parsed()) {
      const BNParams params = point_params(cl);
      const PrimitiveDual pd = primitive_dual_divisor(curve_class(params), params.ctx());
      json j = point_header(cl);
      j["curve_class"] = jcurve(curve_class(params));
      j["dual_divisor"] = jdivisor(dual_divisor(params));
      j["primitive_d"] = jdivisor(pd.divisor);
      j["divisor_div"] = jint(pd.divisibility);
      j["scale"] = jint(pd.scale);
      os << j.dump() << '\n';
    } else if (exists_cmd->parsed()) {
      const BNParams params = point_params(ex);
      json j = point_header(ex);
      const bool e = exists_pencil(params);
      j["exists"] = e;
      j["alpha"] = jint(params.alpha());
      j["exists_via_rho"] = exists_pencil_via_rho(params);
      if (e) {
        const BNDimensions d = bn_dims(params);
        j["locus_dim"] = jint(d.locus_dim);
        j["g1_dim"] = jint(d.g1_dim);
      }
      os << j.dump() << '\n';
    } else if (square_cmd->parsed()) {
      const BNParams params = point_params(sqo);
      const CurveSquare sq = curve_square(params);
      json j = point_header(sqo);
      j["q_R"] = jrat(sq.value);
      j["alternate"] = jrat(sq.alternate);
      j["forms_agree"] = sq.forms_agree;
      j["rho"] = jint(sq.rho);
      j["beta"] = jint(sq.beta);
      j["alpha"] = jint(sq.alpha);
      j["mbm_bound"] = jrat(mbm_bound(params.ctx()));
      j["minimal"] = sq.minimal;
      j["equality_case"] = sq.equality_case;
      os << j.dump() << '\n';
    } else if (catalog_cmd->parsed()) {
      check_epsilon(cat_eps);
      const Range pr = parse_range(cat_p);
      const auto entries = generate_catalog({cat_k, cat_eps, pr.lo, pr.hi, cat_delta_max});
      write_catalog(os, entries);
      const auto verified = std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.verified; });
      err << "catalog: " << entries.size() << " classes, " << verified << " verified walls; classification "
          << (classification_is_complete(cat_k, cat_eps) ? "complete (k-1+2eps is a prime power)"
                                                         : "up to isometry only (k-1+2eps not a prime power)")
          << '\n';
    } else if (cois_cmd->parsed()) {
      check_epsilon(co.epsilon);
      auto descriptor = [](const SubvarietyDescriptor& d) {
        json j{{"source", to_string(d.source)},
               {"codim", d.codim},
               {"total_dim", d.total_dim},
               {"fiber_dim", d.fiber_dim},
               {"base_dim", d.base_dim},
               {"line_class", jcurve(d.line_class)},
               {"q_line", jrat(d.q_line)}};
        if (d.delta) j["delta"] = *d.delta;
        if (d.k_prime) j["k_prime"] = *d.k_prime;
        return j;
      };
      json j{{"epsilon", co.epsilon}, {"k", co.k}, {"p", co.p}};
      if (family == "all" || family == "projbundle") {
        if (cois_cmd->count("--delta") == 0 && family == "projbundle") {
          throw DomainError("--family projbundle needs --delta");
        }
        if (cois_cmd->count("--delta") > 0) {
          const auto d = thm61_descriptor(co.p, co.delta, co.k, co.epsilon);
          j["delta"] = co.delta;
          j["projbundle"] = d ? descriptor(*d) : json(nullptr);
        }
      }
      if (family == "all" || family == "severi") {
        json arr = json::array();
        for (const auto& s : thm63_enumerate(co.p, co.k, co.epsilon)) arr.push_back(descriptor(s.descriptor));
        j["severi"] = arr;
      }
      if (family == "all" || family == "symprod") {
        json arr = json::array();
        for (const auto& s : thm64_enumerate(co.p, co.k, co.epsilon)) arr.push_back(descriptor(s.descriptor));
        j["symprod"] = arr;
      }
      os << j.dump() << '\n';
    } else if (lag_cmd->parsed()) {
      check_epsilon(lag_eps);
      const LagrangianPlane lp = lagrangian_plane_params(lag_k, lag_eps);
      json j{{"epsilon", lag_eps}, {"k", lag_k}, {"p", lp.p}, {"delta", lp.delta}};
      j["chi"] = jint(lp.chi);
      j["satisfies_projbundle_bound"] = lp.satisfies_projbundle_bound;
      j["moduli_dim"] = jint(lp.moduli_dim);
      j["codim"] = lp.descriptor.codim;
      j["base_dim"] = lp.descriptor.base_dim;
      j["line_class"] = jcurve(lp.descriptor.line_class);
      j["q_line"] = jrat(lp.descriptor.q_line);
      j["line_is_minimal"] = lp.line_is_minimal;
      os << j.dump() << '\n';
    } else if (scan_cmd->parsed()) {
      return run_scan(sc_eps, sc_k, sc_p, sc_delta, sc_check, sc_threads, os, err);
    }
    return exit_ok;
  } catch (const DomainError& e) {
    err << "walldiv: " << e.what() << '\n';
    return exit_invalid;
  } catch (const ContractViolation& e) {
    err << "walldiv: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::exception& e) {
    err << "walldiv: internal error: " << e.what() << '\n';
    return exit_internal;
  }
}

}  // namespace walldiv::cli
