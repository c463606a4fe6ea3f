#include "neobalco/identities.hpp"
#include "neobalco/neobalco.hpp"
#include "neobalco/oracle.hpp"
#include "neobalco/pell.hpp"
#include "neobalco/sequences.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

enum class Format { table, json, csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::table;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    return out;
  };
  std::cout << line(header) << '\n';
  for (const auto& row : rows) std::cout << line(row) << '\n';
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out.append(width[i] - cells[i].size(), ' ');
    }
    return out;
  };
  std::cout << line(header) << '\n';
  for (const auto& row : rows) std::cout << line(row) << '\n';
}

std::string family_list() {
  std::string out;
  for (neobalco::SeqFamily f : neobalco::all_families()) {
    if (!out.empty()) out += ' ';
    out += std::string(neobalco::family_tag(f));
  }
  return out;
}

int run_gen(const std::string& family_str, std::int64_t count, Format format) {
  auto family = neobalco::parse_family(family_str);
  if (!family) {
    std::cerr << "error: unknown family '" << family_str << "'; valid tags: " << family_list()
              << '\n';
    return 2;
  }
  const std::int64_t start = neobalco::family_min_index(*family);
  const bool neo = *family == neobalco::SeqFamily::Bneobc ||
                   *family == neobalco::SeqFamily::Cneobc ||
                   *family == neobalco::SeqFamily::Rneobc ||
                   *family == neobalco::SeqFamily::CRneobc;
  const neobalco::SeqWindow win = neo ? neobalco::neo_window(*family, start, count)
                                      : neobalco::window(*family, start, count);
  if (format == Format::json) {
    ordered_json doc;
    doc["command"] = "gen";
    doc["family"] = family_str;
    doc["start"] = win.start;
    doc["count"] = count;
    ordered_json terms = ordered_json::array();
    for (std::size_t i = 0; i < win.values.size(); ++i) {
      terms.push_back({{"n", win.start + static_cast<std::int64_t>(i)},
                       {"value", win.values[i].str()}});
    }
    doc["terms"] = std::move(terms);
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  rows.reserve(win.values.size());
  for (std::size_t i = 0; i < win.values.size(); ++i) {
    rows.push_back({std::to_string(win.start + static_cast<std::int64_t>(i)),
                    win.values[i].str()});
  }
  if (format == Format::csv) {
    print_csv({"n", "value"}, rows);
  } else {
    print_table({"n", "value"}, rows);
  }
  return 0;
}

int run_verify(const std::string& theorem_str, std::int64_t from, std::int64_t to,
               Format format) {
  if (from > to) {
    std::cerr << "error: --from must be <= --to\n";
    return 2;
  }
  std::vector<neobalco::VerifyReport> reports;
  if (theorem_str == "all") {
    for (neobalco::TheoremId id : neobalco::all_theorems()) {
      const std::int64_t lo = std::max(from, neobalco::theorem_min_index(id));
      if (lo > to) continue;  // theorem has no indices in this range
      reports.push_back(neobalco::run_suite(id, {lo, to}));
    }
  } else {
    auto id = neobalco::parse_theorem(theorem_str);
    if (!id) {
      std::string tags;
      for (neobalco::TheoremId t : neobalco::all_theorems()) {
        if (!tags.empty()) tags += ' ';
        tags += std::string(neobalco::theorem_tag(t));
      }
      std::cerr << "error: unknown theorem '" << theorem_str << "'; valid tags: all " << tags
                << '\n';
      return 2;
    }
    reports.push_back(neobalco::run_suite(*id, {from, to}));
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const neobalco::VerifyReport& r) { return r.ok(); });
  if (format == Format::json) {
    ordered_json doc;
    doc["command"] = "verify";
    ordered_json list = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json failures = ordered_json::array();
      for (const auto& f : r.failed) {
        failures.push_back({{"index", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}});
      }
      list.push_back({{"theorem", std::string(neobalco::theorem_tag(r.theorem))},
                      {"from", r.range.from},
                      {"to", r.range.to},
                      {"passed", r.passed},
                      {"failed", std::move(failures)}});
    }
    doc["reports"] = std::move(list);
    doc["ok"] = ok;
    std::cout << doc.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    const std::string tag{neobalco::theorem_tag(r.theorem)};
    rows.push_back({tag, std::to_string(r.range.from), std::to_string(r.range.to),
                    std::to_string(r.passed), std::to_string(r.failed.size()), "", "", ""});
    for (const auto& f : r.failed) {
      rows.push_back({tag, std::to_string(r.range.from), std::to_string(r.range.to), "", "",
                      std::to_string(f.index), f.lhs, f.rhs});
    }
  }
  const std::vector<std::string> header = {"theorem", "from", "to",  "passed",
                                           "failed",  "index", "lhs", "rhs"};
  if (format == Format::csv) {
    print_csv(header, rows);
  } else {
    print_table(header, rows);
    std::cout << (ok ? "all suites passed" : "FAILURES FOUND") << '\n';
  }
  return ok ? 0 : 1;
}

int run_oracle(const std::string& max_str, Format format) {
  if (max_str.empty() || max_str.find_first_not_of("0123456789") != std::string::npos) {
    std::cerr << "error: --max expects a nonnegative integer\n";
    return 2;
  }
  const neobalco::Int max{max_str};
  if (max < 2) {
    std::cerr << "error: --max must be >= 2\n";
    return 2;
  }
  const std::vector<neobalco::OracleHit> hits = neobalco::scan(max);
  // Closed-form enumeration under the same bound, conventional zero included.
  std::vector<neobalco::OracleHit> closed;
  closed.push_back({0, 1});
  for (std::int64_t k = 1;; ++k) {
    neobalco::NeoQuad q = neobalco::neo_quad_closed(k);
    if (q.B > max) break;
    closed.push_back({std::move(q.B), std::move(q.R)});
  }
  const bool ok = hits == closed;
  if (format == Format::json) {
    ordered_json doc;
    doc["command"] = "oracle";
    doc["max"] = max.str();
    ordered_json list = ordered_json::array();
    for (const auto& h : hits) list.push_back({{"n", h.n.str()}, {"r", h.r.str()}});
    doc["hits"] = std::move(list);
    doc["cross_check"] = ok;
    std::cout << doc.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  std::vector<std::vector<std::string>> rows;
  rows.reserve(hits.size());
  for (const auto& h : hits) rows.push_back({h.n.str(), h.r.str()});
  if (format == Format::csv) {
    print_csv({"n", "r"}, rows);
    std::cerr << "cross-check: " << (ok ? "ok" : "MISMATCH with closed forms") << '\n';
  } else {
    print_table({"n", "r"}, rows);
    std::cout << "cross-check: " << (ok ? "ok" : "MISMATCH with closed forms") << '\n';
  }
  return ok ? 0 : 1;
}

int run_pell(std::int64_t count, Format format) {
  const std::vector<neobalco::SolutionPair> orbit = neobalco::solve_orbit(count);
  bool all_ok = true;
  std::vector<std::vector<std::string>> rows;
  ordered_json list = ordered_json::array();
  for (std::int64_t n = 1; n <= count; ++n) {
    const neobalco::SolutionPair& p = orbit[static_cast<std::size_t>(n - 1)];
    const bool solves = neobalco::is_solution(p);
    const bool closed = p == neobalco::orbit_closed(n);
    all_ok = all_ok && solves && closed;
    if (format == Format::json) {
      list.push_back({{"n", n},
                      {"x", p.x.str()},
                      {"y", p.y.str()},
                      {"solves_pell", solves},
                      {"matches_closed", closed}});
    } else {
      rows.push_back({std::to_string(n), p.x.str(), p.y.str(), solves ? "true" : "false",
                      closed ? "true" : "false"});
    }
  }
  if (format == Format::json) {
    ordered_json doc;
    doc["command"] = "pell";
    doc["count"] = count;
    doc["solutions"] = std::move(list);
    doc["ok"] = all_ok;
    std::cout << doc.dump(2) << '\n';
  } else if (format == Format::csv) {
    print_csv({"n", "x", "y", "solves_pell", "matches_closed"}, rows);
  } else {
    print_table({"n", "x", "y", "solves_pell", "matches_closed"}, rows);
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"neo balcobalancing numbers: generation, verification, oracle scans"};
  app.require_subcommand(1);

  std::string format_str = "table";
  const auto format_validator = CLI::IsMember({"table", "json", "csv"});

  std::string gen_family;
  std::int64_t gen_count = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate sequence terms");
  gen->add_option("family", gen_family, "sequence tag (" + family_list() + ")")->required();
  gen->add_option("--count", gen_count, "number of terms")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--format", format_str, "output format")->check(format_validator);

  std::string verify_theorem;
  std::int64_t verify_from = 0, verify_to = 0;
  CLI::App* verify = app.add_subcommand("verify", "check paper identities over an index range");
  verify->add_option("theorem", verify_theorem, "theorem tag or 'all'")->required();
  verify->add_option("--from", verify_from, "first index")->required();
  verify->add_option("--to", verify_to, "last index")->required();
  verify->add_option("--format", format_str, "output format")->check(format_validator);

  std::string oracle_max;
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force scan of the defining equation");
  oracle->add_option("--max", oracle_max, "scan bound (inclusive)")->required();
  oracle->add_option("--format", format_str, "output format")->check(format_validator);

  std::int64_t pell_count = 0;
  CLI::App* pell = app.add_subcommand("pell", "solution orbit of x^2 - 2y^2 = -9");
  pell->add_option("--count", pell_count, "number of solutions")
      ->required()
      ->check(CLI::PositiveNumber);
  pell->add_option("--format", format_str, "output format")->check(format_validator);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Format format = parse_format(format_str);
  try {
    if (gen->parsed()) return run_gen(gen_family, gen_count, format);
    if (verify->parsed()) return run_verify(verify_theorem, verify_from, verify_to, format);
    if (oracle->parsed()) return run_oracle(oracle_max, format);
    return run_pell(pell_count, format);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
