#include "altbounds/cli.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "altbounds/altforms.hpp"
#include "altbounds/gf.hpp"
#include "altbounds/oracle.hpp"

namespace altbounds::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_field(long q) {
  if (!prime_power_decomposition(q) || q > (1L << 16)) {
    throw UsageError("q = " + std::to_string(q) + " is not a prime power > 1");
  }
}

void require_instance(long q, int n) {
  require_field(q);
  if (n < 2) throw UsageError("n must be at least 2");
}

void require_distance(int n, int d) {
  if (d < 1) throw UsageError("d must be at least 1");
  if (d > n / 2) throw UsageError("d exceeds floor(n/2) = " + std::to_string(n / 2));
}

// "a..b" or "a"
std::pair<int, int> parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " range '" + text + "'");
  }
}

nlohmann::json rational_json(const Rational& r) {
  return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

nlohmann::json entry_json(const BoundEntry& e) {
  nlohmann::json j;
  if (!e.value) {
    j["na"] = e.reason;
    return j;
  }
  j["value"] = e.value->get_str();
  if (e.exact) j["exact"] = rational_json(*e.exact);
  if (e.clamped) j["clamped"] = true;
  if (e.linear_only) j["linear_only"] = true;
  return j;
}

std::string entry_cell(const BoundEntry& e) {
  if (!e.value) return "NA:" + e.reason;
  return e.value->get_str();
}

std::vector<std::string> resolve_bounds(const std::vector<std::string>& requested) {
  if (requested.empty() || (requested.size() == 1 && requested.front() == "all")) return bound_names();
  for (const auto& name : requested) {
    if (std::find(bound_names().begin(), bound_names().end(), name) == bound_names().end()) {
      throw UsageError("unknown bound '" + name + "'");
    }
  }
  return requested;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw OutputError("failed writing '" + path + "'");
}

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].get_str();
  return s;
}

nlohmann::json big_array(const std::vector<BigInt>& xs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : xs) arr.push_back(x.get_str());
  return arr;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string render_report_text(const BoundReport& rep) {
  std::ostringstream os;
  os << "A_" << rep.q << "(" << rep.n << ", " << 2 * rep.d << ") upper bounds, |Alt_" << rep.n << "(F_" << rep.q
     << ")| = " << space_size(rep.n, rep.q).get_str() << "\n";
  for (const auto& name : bound_names()) {
    const BoundEntry& e = rep.entries.at(name);
    os << "  " << std::left << std::setw(16) << name;
    if (!e.value) {
      os << "NA (" << e.reason << ")";
    } else {
      os << e.value->get_str();
      if (e.exact && e.exact->get_den() != 1) os << "  [exact " << to_string(*e.exact) << "]";
      if (e.clamped) os << "  [clamped to the whole space]";
      if (e.linear_only) os << "  [linear codes only]";
    }
    os << "\n";
  }
  for (const auto& [name, holds] : rep.equivalences) {
    os << "  " << std::left << std::setw(22) << name << (holds ? "holds" : "FAILS") << "\n";
  }
  os << "  perfectness           " << to_string(rep.perfectness) << "\n";
  os << "  best                  " << rep.best().get_str() << "\n";
  return os.str();
}

nlohmann::json report_json(const BoundReport& rep) {
  nlohmann::json j;
  j["q"] = rep.q;
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["space_size"] = space_size(rep.n, rep.q).get_str();
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& name : bound_names()) entries[name] = entry_json(rep.entries.at(name));
  j["bounds"] = entries;
  j["equivalences"] = rep.equivalences;
  j["perfectness"] = to_string(rep.perfectness);
  j["best"] = rep.best().get_str();
  return j;
}

nlohmann::json spectrum_json(const SpectrumTable& st, const IntersectionArray& ia) {
  return {{"n", st.n},
          {"q", st.q},
          {"vertices", space_size(st.n, st.q).get_str()},
          {"diameter", st.diameter},
          {"theta", big_array(st.theta)},
          {"mult", big_array(st.mult)},
          {"b", big_array(ia.b)},
          {"c", big_array(ia.c)},
          {"a", big_array(ia.a)},
          {"k", big_array(ia.k)}};
}

std::vector<BoundReport> evaluate_table(const TableRequest& req, std::ostream& err) {
  struct Cell {
    long q;
    int n;
    int d;
  };
  std::vector<Cell> cells;
  for (long q : req.qs) {
    require_field(q);
    for (int n = std::max(req.n_min, 2); n <= req.n_max; ++n) {
      const int lo = req.d_range ? req.d_range->first : 1;
      const int hi = req.d_range ? req.d_range->second : n / 2;
      for (int d = lo; d <= hi; ++d) {
        if (d < 1 || d > n / 2) {
          err << "skipping q=" << q << " n=" << n << " d=" << d << ": d must lie in [1, " << n / 2 << "]\n";
          continue;
        }
        cells.push_back({q, n, d});
      }
    }
  }

  // Cells are independent; workers fill fixed slots so output order stays deterministic.
  std::vector<std::optional<BoundReport>> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      results[i] = full_report(cells[i].q, cells[i].n, cells[i].d);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads && t < cells.size(); ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<BoundReport> rows;
  for (auto& r : results) rows.push_back(std::move(*r));
  return rows;
}

std::string render_csv(const std::vector<BoundReport>& rows, const std::vector<std::string>& bounds) {
  std::ostringstream os;
  std::vector<std::string> header{"q", "n", "d"};
  header.insert(header.end(), bounds.begin(), bounds.end());
  header.insert(header.end(), equivalence_names().begin(), equivalence_names().end());
  header.emplace_back("best");
  header.emplace_back("perfectness");
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
  os << "\r\n";
  for (const auto& rep : rows) {
    std::vector<std::string> cells{std::to_string(rep.q), std::to_string(rep.n), std::to_string(rep.d)};
    for (const auto& name : bounds) cells.push_back(entry_cell(rep.entries.at(name)));
    for (const auto& name : equivalence_names()) {
      const auto it = rep.equivalences.find(name);
      cells.push_back(it == rep.equivalences.end() ? "NA:not-applicable" : (it->second ? "true" : "false"));
    }
    cells.push_back(rep.best().get_str());
    cells.push_back(to_string(rep.perfectness));
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\r\n";
  }
  return os.str();
}

nlohmann::json table_json(const std::vector<BoundReport>& rows, const std::vector<std::string>& bounds) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& rep : rows) {
    nlohmann::json row = report_json(rep);
    nlohmann::json selected = nlohmann::json::object();
    for (const auto& name : bounds) selected[name] = row["bounds"][name];
    row["bounds"] = selected;
    arr.push_back(row);
  }
  return {{"rows", arr}};
}

namespace {

int cmd_bounds(long q, int n, int d, bool best, bool json, const std::string& dump_lp, std::ostream& out) {
  require_instance(q, n);
  require_distance(n, d);
  const BoundReport rep = full_report(q, n, d);
  if (!dump_lp.empty()) {
    std::string text = "# Delsarte LP, q=" + std::to_string(q) + " n=" + std::to_string(n) + " d=" +
                       std::to_string(d) + "\n" + to_text(delsarte_lp(q, n, d).program);
    text += "# minor-polynomial LP, k=" + std::to_string(d - 1) + "\n" + to_text(ratio_general_lp(q, n, d - 1).program);
    write_output(text, dump_lp, out);
  }
  if (best) {
    out << rep.best().get_str() << "\n";
  } else if (json) {
    out << report_json(rep).dump(2) << "\n";
  } else {
    out << render_report_text(rep);
  }
  return kExitOk;
}

int cmd_spectrum(long q, int n, bool json, std::ostream& out) {
  require_instance(q, n);
  const SpectrumTable st = spectrum(n, q);
  const IntersectionArray ia = intersection_array(n, q);
  if (json) {
    out << spectrum_json(st, ia).dump(2) << "\n";
    return kExitOk;
  }
  out << "alternating forms graph n=" << n << " q=" << q << ": " << space_size(n, q).get_str()
      << " vertices, diameter " << st.diameter << "\n";
  out << "theta: " << join(st.theta) << "\n";
  out << "mult: " << join(st.mult) << "\n";
  out << "b: " << join(ia.b) << "\n";
  out << "c: " << join(ia.c) << "\n";
  out << "a: " << join(ia.a) << "\n";
  out << "k: " << join(ia.k) << "\n";
  return kExitOk;
}

int cmd_table(const TableRequest& req, const std::string& path, std::ostream& out, std::ostream& err) {
  const auto bounds = resolve_bounds(req.bounds);
  const auto rows = evaluate_table(req, err);
  const std::string text = req.json ? table_json(rows, bounds).dump(2) + "\n" : render_csv(rows, bounds);
  write_output(text, path, out);
  return kExitOk;
}

int cmd_verify(long q, int n, std::optional<int> alpha_k, std::uint64_t budget, std::uint64_t seed,
               std::ostream& out) {
  require_instance(q, n);
  const DenseGraph g = build_graph(n, q);
  const SpectrumTable st = spectrum(n, q);
  bool ok = true;
  auto report = [&](bool pass, const std::string& line) {
    out << (pass ? "PASS " : "FAIL ") << line << "\n";
    ok = ok && pass;
  };

  const BigInt delta = degree(n, q);
  bool regular = true;
  for (Vertex v = 0; v < g.size(); ++v) regular = regular && BigInt(static_cast<unsigned long>(g.neighbors(v).size())) == delta;
  report(regular, "degree = " + delta.get_str() + " at every vertex");

  const GeodesicCheck geo = verify_geodesic_rank(g);
  report(geo.pass, geo.pass ? "geodesic distance = rank/2"
                            : "geodesic distance = rank/2 (counterexample vertex " +
                                  std::to_string(*geo.counterexample) + ")");

  const DistanceRegularityCheck drg = verify_distance_regularity(g, 3, seed);
  report(drg.pass, drg.pass ? "intersection array matches the closed forms" : "distance regularity: " + drg.message);

  const SpectrumCheck spec = verify_spectrum(g, st);
  report(spec.pass, spec.pass ? std::string("spectrum: ") +
                                    (spec.annihilation_checked ? "annihilation and " : "") + "trace identities"
                              : "spectrum: " + spec.message);

  const BigInt walks = closed_walks(g, 3);
  const BigInt expected = delta_walks(n, q);
  report(walks == expected, "closed 3-walks at a vertex = " + walks.get_str() + " (delta * a_1 = " +
                                expected.get_str() + ")");
  report(verify_walk_regularity(g, 3, 10, seed), "walk counts agree across sampled vertices");

  if (alpha_k) {
    const AlphaResult res = exact_alpha_k(g, *alpha_k, budget);
    const bool valid = validate_witness(g, res.witness, *alpha_k);
    report(valid, "alpha_" + std::to_string(*alpha_k) + (res.proven_optimal ? " = " : " >= ") +
                      std::to_string(res.size) +
                      (res.proven_optimal ? " (proven optimal" : " (node budget exhausted") + ", " +
                      std::to_string(res.nodes) + " nodes)");
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_lp(long q, int n, int d, const std::string& kind, std::ostream& out) {
  require_instance(q, n);
  require_distance(n, d);
  LPBound lp = kind == "delsarte" ? delsarte_lp(q, n, d) : ratio_general_lp(q, n, d - 1);
  out << to_text(lp.program);
  out << "status " << to_string(lp.solution.status) << "\n";
  out << "value " << to_string(lp.bound.exact) << "\n";
  out << "floor " << lp.bound.floored.get_str() << "\n";
  for (std::size_t j = 0; j < lp.solution.assignment.size(); ++j) {
    out << lp.program.variable_name(j) << " = " << to_string(lp.solution.assignment[j]) << "\n";
  }
  out << "basis";
  for (const auto& b : lp.solution.basis) out << " " << b;
  out << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact upper bounds on alternating rank-metric codes", "altbounds"};
  app.require_subcommand(1);

  long q = 0;
  int n = 0, d = 0;
  bool best = false, json = false;
  std::string dump_lp;
  auto* bounds = app.add_subcommand("bounds", "every applicable bound on A_q(n, 2d)");
  bounds->add_option("--q", q, "field size")->required();
  bounds->add_option("--n", n, "matrix size")->required();
  bounds->add_option("--d", d, "half the minimum rank distance")->required();
  bounds->add_flag("--best", best, "print only the smallest bound");
  bounds->add_flag("--json", json, "JSON output");
  bounds->add_option("--dump-lp", dump_lp, "write both LP instances to this path ('-' for stdout)");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues, multiplicities and intersection array");
  spectrum_cmd->add_option("--q", q, "field size")->required();
  spectrum_cmd->add_option("--n", n, "matrix size")->required();
  spectrum_cmd->add_flag("--json", json, "JSON output");

  std::vector<long> qs;
  std::string n_range = "4..10", d_range = "all", format = "csv", out_path;
  std::vector<std::string> bound_sel;
  auto* table = app.add_subcommand("table", "grid of bounds as CSV or JSON");
  table->add_option("--q", qs, "field sizes")->delimiter(',')->required();
  table->add_option("--n", n_range, "n or n_min..n_max");
  table->add_option("--d", d_range, "'all', d or d_min..d_max");
  table->add_option("--bounds", bound_sel, "bound names or 'all'")->delimiter(',');
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "output path (default stdout)");

  std::optional<int> alpha_k;
  std::uint64_t budget = 100'000'000, seed = 1;
  auto* verify = app.add_subcommand("verify", "brute-force checks on the explicit graph");
  verify->add_option("--q", q, "field size")->required();
  verify->add_option("--n", n, "matrix size")->required();
  verify->add_option("--alpha-k", alpha_k, "also compute alpha_k exactly");
  verify->add_option("--budget", budget, "node budget for the alpha_k search");
  verify->add_option("--seed", seed, "seed for sampled vertices");

  std::string kind = "delsarte";
  auto* lp = app.add_subcommand("lp", "print an LP instance with its exact solution");
  lp->add_option("--q", q, "field size")->required();
  lp->add_option("--n", n, "matrix size")->required();
  lp->add_option("--d", d, "half the minimum rank distance")->required();
  lp->add_option("--kind", kind, "delsarte or minor")->check(CLI::IsMember({"delsarte", "minor"}));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*bounds) return cmd_bounds(q, n, d, best, json, dump_lp, out);
    if (*spectrum_cmd) return cmd_spectrum(q, n, json, out);
    if (*table) {
      TableRequest req;
      req.qs = qs;
      std::tie(req.n_min, req.n_max) = parse_range(n_range, "n");
      if (d_range != "all") req.d_range = parse_range(d_range, "d");
      req.bounds = bound_sel;
      req.json = format == "json";
      return cmd_table(req, out_path, out, err);
    }
    if (*verify) return cmd_verify(q, n, alpha_k, budget, seed, out);
    if (*lp) return cmd_lp(q, n, d, kind, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace altbounds::cli
