#include "crslab/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "crslab/crs.hpp"
#include "crslab/parallel.hpp"
#include "crslab/report.hpp"
#include "crslab/suites.hpp"
#include "crslab/weighted.hpp"

namespace crslab {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed non-negative integer: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct Options {
  std::string what;  // compute/table target, verify suite, seq variant
  std::string k, s, j, r, n, x, eps, lambda, variant, tol;
  std::uint64_t k_max = 0, r_max = 0;
  std::string format = "csv";
  std::string out_path;
  unsigned threads = 1;
};

std::uint64_t single(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing required ") + flag);
  return parse_u64(text);
}

unsigned single_u(const std::string& text, const char* flag) {
  const auto v = single(text, flag);
  if (v == 0 || v > 1'000'000) throw UsageError(std::string(flag) + " out of range");
  return static_cast<unsigned>(v);
}

std::vector<std::uint64_t> list_or(const std::string& text, std::vector<std::uint64_t> fallback) {
  return text.empty() ? fallback : parse_u64_list(text);
}

std::vector<unsigned> to_unsigned(const std::vector<std::uint64_t>& v, const char* flag) {
  std::vector<unsigned> out;
  for (auto x : v) {
    if (x == 0 || x > 1'000'000) throw UsageError(std::string(flag) + " value out of range");
    out.push_back(static_cast<unsigned>(x));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (auto part : split(text, ',')) out.push_back(Rational::parse(part));
  return out;
}

void emit_table(std::ostream& os, const std::string& format,
                const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
    return;
  }
  write_csv_row(os, header);
  for (const auto& row : rows) write_csv_row(os, row);
}

int cmd_compute(const Options& o, std::ostream& os) {
  if (o.what == "crs") {
    const CrsQuery q(single(o.k, "--k"), single_u(o.s, "--s"),
                     o.j.empty() ? throw UsageError("missing required --j") : parse_bigint(o.j));
    if (q.k().value() == 0) throw UsageError("--k must be positive");
    os << to_string(crs_closed(q).value) << "\n";
    return 0;
  }
  if (o.what == "weighted") {
    const auto k = single(o.k, "--k");
    if (k == 0) throw UsageError("--k must be positive");
    os << weighted_average_value(k, single_u(o.r, "--r"), single_u(o.s, "--s")).str() << "\n";
    return 0;
  }
  throw UsageError("compute expects 'crs' or 'weighted', got '" + o.what + "'");
}

std::vector<std::vector<std::string>> crs_table_rows(const Options& o) {
  const auto ks = list_or(o.k, {});
  const auto ss = to_unsigned(list_or(o.s, {1}), "--s");
  struct Block {
    std::uint64_t k;
    unsigned s;
  };
  std::vector<Block> blocks;
  for (auto k : ks) {
    if (k == 0) throw UsageError("--k values must be positive");
    for (auto s : ss) blocks.push_back({k, s});
  }
  const auto per_block = parallel_map(blocks.size(), o.threads, [&](std::size_t i) {
    const auto [k, s] = blocks[i];
    std::vector<std::vector<std::string>> rows;
    const BigInt period = pow(k, s);
    std::vector<std::uint64_t> js;
    if (!o.j.empty()) {
      js = parse_u64_list(o.j);
    } else if (period > kOracleGuard) {
      rows.push_back({std::to_string(k), std::to_string(s), "", "", "", "",
                      "k^s exceeds " + std::to_string(kOracleGuard) + "; pass --j"});
      return rows;
    } else {
      for (std::uint64_t j = 1; j <= to_u64(period); ++j) js.push_back(j);
    }
    for (auto j : js) {
      const auto e = crs_closed(CrsQuery(k, s, BigInt(static_cast<unsigned long>(j))));
      rows.push_back({std::to_string(k), std::to_string(s), std::to_string(j), to_string(e.value),
                      to_string(e.d), to_string(e.gcd_s), ""});
    }
    return rows;
  });
  std::vector<std::vector<std::string>> rows;
  for (const auto& b : per_block) rows.insert(rows.end(), b.begin(), b.end());
  return rows;
}

std::vector<std::vector<std::string>> weighted_table_rows(const Options& o) {
  const auto ks = list_or(o.k, {});
  const auto rs = to_unsigned(list_or(o.r, {1}), "--r");
  const auto ss = to_unsigned(list_or(o.s, {1}), "--s");
  struct Cell {
    std::uint64_t k;
    unsigned r, s;
  };
  std::vector<Cell> cells;
  for (auto k : ks) {
    if (k == 0) throw UsageError("--k values must be positive");
    for (auto r : rs) {
      for (auto s : ss) cells.push_back({k, r, s});
    }
  }
  return parallel_map(cells.size(), o.threads, [&](std::size_t i) {
    const auto [k, r, s] = cells[i];
    auto row = weighted_row(weighted_average_breakdown(factorization_of(k), r, s));
    row.emplace_back();
    return row;
  });
}

int cmd_table(const Options& o, std::ostream& os) {
  if (o.what == "crs") {
    auto header = kCrsColumns;
    header.push_back("error");
    emit_table(os, o.format, header, crs_table_rows(o));
    return 0;
  }
  if (o.what == "weighted") {
    auto header = kWeightedColumns;
    header.push_back("error");
    emit_table(os, o.format, header, weighted_table_rows(o));
    return 0;
  }
  throw UsageError("table expects 'crs' or 'weighted', got '" + o.what + "'");
}

SuiteOptions suite_options(const Options& o) {
  SuiteOptions so;
  so.threads = o.threads;
  if (o.k_max) so.k_max = o.k_max;
  if (o.r_max) so.r_max = static_cast<unsigned>(o.r_max);
  if (!o.k.empty()) so.k_values = parse_u64_list(o.k);
  if (!o.r.empty()) so.r_values = to_unsigned(parse_u64_list(o.r), "--r");
  if (!o.s.empty()) so.s_values = to_unsigned(parse_u64_list(o.s), "--s");
  if (!o.x.empty()) so.x = single(o.x, "--x");
  if (!o.eps.empty()) so.eps = parse_rational_list(o.eps);
  if (!o.lambda.empty()) so.lambda = Rational::parse(o.lambda);
  if (!o.n.empty()) so.n_values = parse_u64_list(o.n);
  if (!o.tol.empty()) so.tolerance = Rational::parse(o.tol);
  if (!o.variant.empty()) {
    std::vector<SequenceVariant> vs;
    for (auto part : split(o.variant, ',')) vs.push_back(parse_variant(part));
    so.variants = vs;
  }
  return so;
}

int cmd_verify(const Options& o, std::ostream& os, std::ostream& err) {
  bool known = false;
  for (auto name : kSuiteNames) known = known || name == o.what;
  if (!known) throw UsageError("unknown suite '" + o.what + "'");
  if (o.format != "json" && o.format != "csv") throw UsageError("bad --format");
  const auto reports = run_suite(o.what, suite_options(o));
  std::size_t passed = 0;
  for (const auto& r : reports) passed += report_passed(r) ? 1 : 0;
  os << render_reports(reports);
  err << "verify " << o.what << ": " << passed << " passed, " << reports.size() - passed
      << " failed\n";
  return passed == reports.size() ? 0 : 1;
}

int cmd_seq(const Options& o, std::ostream& os) {
  std::string variant = o.what.empty() ? o.variant : o.what;
  if (variant.empty()) throw UsageError("seq needs a variant");
  const auto v = parse_variant(variant);
  const auto ns = parse_u64_list(o.n.empty() ? throw UsageError("missing required --n") : o.n);
  const Rational lambda = o.lambda.empty() ? Rational(2) : Rational::parse(o.lambda);
  const Rational tol = o.tol.empty() ? Rational(1, 20) : Rational::parse(o.tol);
  const auto rep = check_theorem_3_2(v, single_u(o.r, "--r"), single_u(o.s, "--s"), ns, lambda,
                                     tol);
  if (o.format == "json") {
    os << to_json(rep).dump(2) << "\n";
    return 0;
  }
  write_csv_row(os, kSequenceColumns);
  for (const auto& row : rep.rows) write_csv_row(os, sequence_row(row));
  return 0;
}

}  // namespace

std::vector<std::uint64_t> parse_u64_list(std::string_view text) {
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const auto lo = parse_u64(text.substr(0, dots));
    const auto hi = parse_u64(text.substr(dots + 2));
    if (hi >= lo && hi - lo > 100'000'000) throw std::invalid_argument("range too long");
    std::vector<std::uint64_t> out;
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::vector<std::uint64_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_u64(part));
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized Ramanujan sums and weighted power-sum averages", "crs-lab"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "k value, list (a,b,c) or range (a..b)");
    sub->add_option("--s", o.s, "s value, list or range");
    sub->add_option("--r", o.r, "r value, list or range");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out_path, "output file (default: standard output)");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* compute = app.add_subcommand("compute", "print one exact value");
  compute->add_option("what", o.what, "crs or weighted")->required();
  compute->add_option("--j", o.j, "argument j of c_k^(s)(j)");
  add_common(compute);

  auto* table = app.add_subcommand("table", "sweep a parameter grid into a table");
  table->add_option("what", o.what, "crs or weighted")->required();
  table->add_option("--j", o.j, "j list or range (default: 1..k^s)");
  add_common(table);

  auto* verify = app.add_subcommand("verify", "run a verification suite, JSON report");
  verify->add_option("suite", o.what,
                     "identities, thm31, thm32, thm33, thm34, corollary or all")->required();
  verify->add_option("--k-max", o.k_max, "largest k in k sweeps");
  verify->add_option("--r-max", o.r_max, "largest r in r sweeps");
  verify->add_option("--x", o.x, "largest x for averages over k");
  verify->add_option("--eps", o.eps, "epsilon list as exact rationals, e.g. 1/2,1/4");
  verify->add_option("--lambda", o.lambda, "window ratio as an exact rational");
  verify->add_option("--n", o.n, "sequence indices (list or range)");
  verify->add_option("--variant", o.variant, "sequence variants, comma separated");
  verify->add_option("--tol", o.tol, "convergence tolerance as an exact rational");
  add_common(verify);

  auto* seq = app.add_subcommand("seq", "weighted averages along a k_n sequence");
  seq->add_option("sequence", o.what, "window, window2 (window-times2) or bounded-omega");
  seq->add_option("--variant", o.variant, "same as the positional variant");
  seq->add_option("--lambda", o.lambda, "window ratio as an exact rational (default 2)");
  seq->add_option("--n", o.n, "indices n (list or range)");
  seq->add_option("--tol", o.tol, "convergence tolerance (json output only)");
  add_common(seq);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (*verify) {
      if (o.format == "csv") o.format = "json";
      status = cmd_verify(o, buffer, err);
    } else if (*compute) {
      status = cmd_compute(o, buffer);
    } else if (*table) {
      status = cmd_table(o, buffer);
    } else {
      status = cmd_seq(o, buffer);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << "\n";
      return 2;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace crslab
