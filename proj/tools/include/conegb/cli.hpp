#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conegb/engine.hpp"
#include "conegb/systems.hpp"

namespace conegb::cli {

/// Bad flags, unreadable files, unparsable systems; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedSystem {
  std::string name;
  SystemFile system;
};

/// `cyclic-N`, `katsura-N` (the N-variable Katsura system) or a path to a
/// system file.
NamedSystem resolve_system(const std::string& spec);

/// Appends a homogenizing variable named h (or h1, h2, ... on clashes).
NamedSystem homogenized(const NamedSystem& s);

struct RunOptions {
  StrategyConfig config;
  /// Ordering for static runs; grevlex when unset.
  std::optional<TermOrdering> static_order;
  bool verify = false;
};

struct RunReport {
  std::string system_name;
  std::string mode;  // "static" or "dynamic"
  Stats stats;
  std::int64_t basis_size_pols = 0;
  std::int64_t basis_size_terms = 0;
  TermOrdering final_order;
  std::vector<std::string> variables;
  /// Set only when verification ran: the basis passed the S-polynomial check
  /// and every input reduced to zero.
  std::optional<bool> verified;
};

struct RunOutcome {
  RunReport report;
  std::vector<Polynomial> basis;
};

RunOutcome run_system(const NamedSystem& system, const RunOptions& options);

/// Parses "grevlex", "lex", or matrix rows "w1,...,wn;r1,...;..." whose first
/// row is the weight. Throws InputError.
TermOrdering parse_order(const std::string& text, std::size_t nvars);

std::string tsv_header();
std::string tsv_row(const RunReport& r);
std::string to_json(const std::vector<RunReport>& reports);

/// Full command-line driver; returns 0 on success, 1 when a verification
/// failed, 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conegb::cli
