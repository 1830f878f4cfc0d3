#include "conegb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

namespace conegb::cli {

namespace {

std::size_t parse_size_suffix(const std::string& spec, const std::string& prefix) {
  const auto digits = spec.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 6)
    throw InputError("malformed system name: " + spec);
  return static_cast<std::size_t>(std::stoul(digits));
}

std::vector<std::string> indexed_names(const std::string& base, std::size_t first, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < count; ++k) names.push_back(base + std::to_string(first + k));
  return names;
}

const char* tiebreak_name(const TermOrdering& o) {
  if (!o.has_weight()) return "lex";
  switch (o.tiebreak()) {
    case Tiebreak::Grevlex: return "grevlex";
    case Tiebreak::Lex: return "lex";
    case Tiebreak::Matrix: return "matrix";
  }
  return "grevlex";
}

nlohmann::json report_json(const RunReport& r) {
  nlohmann::json j;
  j["system_name"] = r.system_name;
  j["mode"] = r.mode;
  j["stats"] = {
      {"rejected_by_corners", r.stats.rejected_by_corners},
      {"rejected_by_disjoint_cones", r.stats.rejected_by_disjoint_cones},
      {"lps_solved", r.stats.lps_solved},
      {"lps_failed", r.stats.lps_failed},
      {"constraint_count", r.stats.constraint_count},
      {"spolys_processed", r.stats.spolys_processed},
      {"zero_reductions", r.stats.zero_reductions},
      {"feasibility_batches", r.stats.feasibility_batches},
      {"order_changes", r.stats.order_changes},
  };
  j["basis_size_pols"] = r.basis_size_pols;
  j["basis_size_terms"] = r.basis_size_terms;
  j["final_order"] = {
      {"weight", std::vector<std::int64_t>(r.final_order.weight().begin(), r.final_order.weight().end())},
      {"tiebreak", tiebreak_name(r.final_order)},
      {"tiebreak_rows", r.final_order.tiebreak_rows()},
  };
  j["variables"] = r.variables;
  j["verified"] = r.verified ? nlohmann::json(*r.verified) : nlohmann::json(nullptr);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open system file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

NamedSystem resolve_system(const std::string& spec) {
  if (spec.rfind("cyclic-", 0) == 0) {
    const auto n = parse_size_suffix(spec, "cyclic-");
    if (n < 2) throw InputError("cyclic-N needs N >= 2");
    return NamedSystem{spec, SystemFile{indexed_names("x", 1, n), generate_cyclic(n)}};
  }
  if (spec.rfind("katsura-", 0) == 0) {
    const auto n = parse_size_suffix(spec, "katsura-");
    if (n < 2) throw InputError("katsura-N needs N >= 2 variables");
    return NamedSystem{spec, SystemFile{indexed_names("x", 0, n), generate_katsura(n - 1)}};
  }
  const auto text = read_file(spec);
  try {
    return NamedSystem{spec, parse_system(text)};
  } catch (const ParseError& e) {
    throw InputError(spec + ": " + e.what());
  }
}

NamedSystem homogenized(const NamedSystem& s) {
  NamedSystem out;
  out.name = s.name + " hom.";
  out.system.variables = s.system.variables;
  std::string h = "h";
  for (int k = 1; std::find(out.system.variables.begin(), out.system.variables.end(), h) !=
                  out.system.variables.end();
       ++k)
    h = "h" + std::to_string(k);
  out.system.variables.push_back(h);
  for (const auto& p : s.system.polynomials) out.system.polynomials.push_back(homogenize(p));
  return out;
}

TermOrdering parse_order(const std::string& text, std::size_t nvars) {
  if (text == "grevlex") return TermOrdering::grevlex(nvars);
  if (text == "lex") return TermOrdering::lex(nvars);
  std::vector<std::vector<std::int64_t>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<std::int64_t> entries;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) {
      try {
        std::size_t used = 0;
        entries.push_back(std::stoll(entry, &used));
        if (entry.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(entry);
      } catch (const std::exception&) {
        throw InputError("malformed ordering entry '" + entry + "'");
      }
    }
    if (entries.size() != nvars)
      throw InputError("ordering row has " + std::to_string(entries.size()) + " entries, expected " +
                       std::to_string(nvars));
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw InputError("empty ordering");
  try {
    return rows.size() == 1 ? TermOrdering::weighted(rows.front()) : TermOrdering::matrix(rows);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid ordering: ") + e.what());
  }
}

RunOutcome run_system(const NamedSystem& system, const RunOptions& options) {
  const auto& inputs = system.system.polynomials;
  for (const auto& p : inputs)
    if (p.is_zero()) throw InputError(system.name + ": the system contains the zero polynomial");
  const std::size_t n = system.system.variables.size();
  RunResult result;
  if (options.config.static_mode) {
    const TermOrdering order = options.static_order.value_or(TermOrdering::grevlex(n));
    if (order.nvars() != n) throw InputError(system.name + ": ordering has the wrong number of variables");
    result = static_run(inputs, order, options.config);
  } else {
    result = dynamic_run(inputs, options.config);
  }
  RunOutcome out;
  out.report.system_name = system.name;
  out.report.mode = options.config.static_mode ? "static" : "dynamic";
  out.report.stats = result.stats;
  out.report.basis_size_pols = static_cast<std::int64_t>(result.basis.size());
  out.report.basis_size_terms = static_cast<std::int64_t>(distinct_terms(result.basis));
  out.report.final_order = result.order;
  out.report.variables = system.system.variables;
  if (options.verify) {
    bool ok = is_groebner_oracle(result.basis, result.order);
    for (const auto& f : inputs) ok = ok && reduce(result.order, f, result.basis).is_zero();
    out.report.verified = ok;
  }
  out.basis = std::move(result.basis);
  return out;
}

std::string tsv_header() {
  return "system\tmode\trejected_corners\trejected_disjoint\tlps_solved\tlps_failed\tconstraints_final\tpols\tterms\t"
         "verified";
}

std::string tsv_row(const RunReport& r) {
  std::ostringstream os;
  os << r.system_name << '\t' << r.mode << '\t' << r.stats.rejected_by_corners << '\t'
     << r.stats.rejected_by_disjoint_cones << '\t' << r.stats.lps_solved << '\t' << r.stats.lps_failed << '\t'
     << r.stats.constraint_count << '\t' << r.basis_size_pols << '\t' << r.basis_size_terms << '\t'
     << (r.verified ? (*r.verified ? "true" : "false") : "-");
  return os.str();
}

std::string to_json(const std::vector<RunReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamic and static Groebner basis computation"};
  bool static_mode = false;
  std::string order_text;
  std::string strategy = "normal";
  bool weighted_sugar = false;
  bool no_boundary = false;
  bool no_disjoint = false;
  std::vector<std::string> systems;
  bool homogenize_inputs = false;
  bool verify = false;
  std::string output = "tsv";
  std::uint64_t seed = 0;
  std::string out_basis;
  unsigned jobs = 1;

  app.add_flag("--static", static_mode, "Run the static algorithm under a fixed ordering");
  app.add_option("--order", order_text, "Static ordering: grevlex, lex, or rows 'w1,..,wn;r1,..;...'");
  app.add_option("--strategy", strategy, "Pair selection strategy")
      ->check(CLI::IsMember({"sugar", "normal", "mindeg"}));
  app.add_flag("--weighted-sugar", weighted_sugar, "Compute sugar with the ordering's weights");
  app.add_flag("--no-boundary-vectors", no_boundary, "Disable the boundary-vector criterion");
  app.add_flag("--no-disjoint-cones", no_disjoint, "Disable the disjoint-cones criterion");
  app.add_option("--system", systems, "System file, cyclic-N or katsura-N (repeatable)")->required();
  app.add_flag("--homogenize", homogenize_inputs, "Homogenize the inputs first");
  app.add_flag("--verify", verify, "Check the result by brute force");
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--seed", seed, "Shuffle Hilbert-equal candidates with this seed (0: deterministic)");
  app.add_option("--out-basis", out_basis, "Write the final bases to this file");
  app.add_option("--jobs", jobs, "Run independent systems in parallel")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  RunOptions options;
  options.config.static_mode = static_mode;
  options.config.strategy = strategy == "sugar" ? Strategy::Sugar : strategy == "mindeg" ? Strategy::MinDeg : Strategy::Normal;
  options.config.weighted_sugar = weighted_sugar;
  options.config.use_boundary_vectors = !no_boundary;
  options.config.use_disjoint_cones = !no_disjoint;
  options.config.seed = seed;
  options.verify = verify;

  std::vector<NamedSystem> resolved;
  std::vector<RunOptions> per_system;
  try {
    if (!order_text.empty() && !static_mode) throw InputError("--order requires --static");
    for (const auto& spec : systems) {
      auto s = resolve_system(spec);
      if (homogenize_inputs) s = homogenized(s);
      RunOptions o = options;
      if (!order_text.empty()) o.static_order = parse_order(order_text, s.system.variables.size());
      resolved.push_back(std::move(s));
      per_system.push_back(std::move(o));
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::vector<RunOutcome> outcomes(resolved.size());
  try {
    if (jobs <= 1 || resolved.size() <= 1) {
      for (std::size_t i = 0; i < resolved.size(); ++i) outcomes[i] = run_system(resolved[i], per_system[i]);
    } else {
      std::size_t next = 0;
      while (next < resolved.size()) {
        std::vector<std::pair<std::size_t, std::future<RunOutcome>>> wave;
        for (unsigned j = 0; j < jobs && next < resolved.size(); ++j, ++next)
          wave.emplace_back(next, std::async(std::launch::async, run_system, std::cref(resolved[next]),
                                             std::cref(per_system[next])));
        for (auto& [i, f] : wave) outcomes[i] = f.get();
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::vector<RunReport> reports;
  for (const auto& o : outcomes) reports.push_back(o.report);
  if (output == "json") {
    out << to_json(reports) << '\n';
  } else {
    out << tsv_header() << '\n';
    for (const auto& r : reports) out << tsv_row(r) << '\n';
  }

  if (!out_basis.empty()) {
    std::ofstream file(out_basis);
    if (!file) {
      err << "error: cannot write " << out_basis << '\n';
      return 2;
    }
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (i > 0) file << '\n';
      file << "# " << outcomes[i].report.system_name << " (" << outcomes[i].report.mode << ", "
           << outcomes[i].report.final_order.describe() << ")\n";
      file << render_system(SystemFile{resolved[i].system.variables, outcomes[i].basis});
    }
  }

  const bool failed = std::any_of(reports.begin(), reports.end(),
                                  [](const RunReport& r) { return r.verified && !*r.verified; });
  return failed ? 1 : 0;
}

}  // namespace conegb::cli
