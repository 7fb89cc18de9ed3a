#include "pentafold/cli.hpp"

#include "pentafold/cyclotomic.hpp"
#include "pentafold/pentagonal.hpp"
#include "pentafold/qseries.hpp"
#include "pentafold/reproduction.hpp"
#include "pentafold/sigma.hpp"
#include "pentafold/summation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace pentafold::cli {

namespace {

constexpr double kAbelTolerance = 1e-9;
constexpr double kAbelReferenceRho = 0.9;

// Everything a command produces before formatting.
struct Output {
  std::vector<std::string> headline;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
};

const char* command_name(Command c) {
  switch (c) {
    case Command::Seq: return "seq";
    case Command::Sigma: return "sigma";
    case Command::VerifyPnt: return "verify-pnt";
    case Command::VerifyPeriods: return "verify-periods";
    case Command::VerifyPowersums: return "verify-powersums";
    case Command::Sum: return "sum";
    case Command::Abel: return "abel";
    case Command::Report: return "report";
  }
  return "?";
}

template <typename T>
std::string join(const std::vector<T>& values, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t j = 0; j < values.size(); ++j) os << (j ? sep : "") << values[j];
  return os.str();
}

std::string scientific(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << v;
  return os.str();
}

std::string plain(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// --- commands ---------------------------------------------------------------

Output run_seq(const RunConfig& c) {
  Output out;
  const std::size_t count = c.count.value_or(12);
  if (c.interpolated) {
    out.columns = {"j", "value"};
    const auto seq = interpolated_sequence(count);
    for (std::size_t j = 0; j < seq.size(); ++j) {
      out.rows.push_back({std::to_string(j + 1), to_string(seq[j])});
    }
    return out;
  }
  out.columns = {"p", "k", "branch", "value", "sign", "diff"};
  const auto terms = term_stream(count, c.include_zero);
  const std::uint64_t first_position = c.include_zero ? 0 : 1;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const PentagonalTerm& t = terms[j];
    const std::string diff = j == 0 ? "" : (t.value - terms[j - 1].value).str();
    out.rows.push_back({std::to_string(first_position + j), std::to_string(t.k), to_string(t.branch),
                        t.value.str(), t.sign > 0 ? "+" : "-", diff});
    const auto inverse = is_pentagonal(t.value);
    if (!inverse || (t.k != 0 && (inverse->k != t.k || inverse->branch != t.branch))) {
      out.failures.push_back("value " + t.value.str() + " does not invert to its index");
    }
  }
  return out;
}

std::optional<std::string> cache_location(const RunConfig& c) {
  if (const char* env = std::getenv("PENTAFOLD_CACHE"); env != nullptr && *env != '\0') {
    return std::string(env);
  }
  return c.cache_path;
}

SigmaTable load_or_build_sigma(std::uint64_t max_n, const std::optional<std::string>& path,
                               std::ostream& err) {
  if (path && std::filesystem::exists(*path)) {
    std::ifstream in(*path);
    try {
      SigmaTable cached = read_sigma_csv(in);
      if (cached.max_n() >= max_n) return cached.prefix(max_n);
    } catch (const std::exception& e) {
      err << "ignoring cache " << *path << ": " << e.what() << '\n';
    }
  }
  SigmaTable table = sigma_table(max_n, SigmaMethod::Recurrence);
  if (path) {
    std::ofstream os(*path);
    if (os) {
      write_sigma_csv(os, table);
    } else {
      err << "could not write cache " << *path << '\n';
    }
  }
  return table;
}

Output run_sigma(const RunConfig& c, std::ostream& err) {
  Output out;
  const std::uint64_t max_n = *c.max_n;
  const SigmaTable table = load_or_build_sigma(max_n, cache_location(c), err);
  out.columns = {"N", "sigma"};
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    out.rows.push_back({std::to_string(n), table[n].str()});
    const BigInt brute = sigma_brute(n);
    if (table[n] != brute) {
      out.failures.push_back(std::to_string(n) + "," + table[n].str() + " (trial division gives " +
                             brute.str() + ")");
    }
  }
  if (c.trace) {
    const std::uint64_t n = *c.trace;
    const SigmaTable earlier = n - 1 <= max_n ? table : sigma_table(n - 1, SigmaMethod::Recurrence);
    out.headline.push_back("sigma(" + std::to_string(n) + ") = " +
                           sigma_recurrence_trace(n, earlier).expression());
  }
  return out;
}

Output run_verify_pnt(const RunConfig& c) {
  Output out;
  const std::uint64_t degree = c.degree.value_or(1000);
  const DenseSeries product = euler_product(degree);
  const DenseSeries sparse = pentagonal_series(degree);
  for (std::uint64_t d = 0; d <= degree; ++d) {
    if (product[d] != sparse[d] && out.failures.size() < 10) {
      out.failures.push_back("degree " + std::to_string(d) + ": product " + product[d].str() +
                             ", pentagonal series " + sparse[d].str());
    }
  }
  std::uint64_t exponents = 0;
  for (std::uint64_t v = 0; v <= degree; ++v) exponents += is_pentagonal(BigInt(v)).has_value();
  if (exponents != product.nonzero_count()) {
    out.failures.push_back("nonzero count " + std::to_string(product.nonzero_count()) +
                           " differs from pentagonal exponent count " + std::to_string(exponents));
  }
  const std::string verdict = out.failures.empty() ? "PASS" : "FAIL";
  out.headline.push_back("verify-pnt degree=" + std::to_string(degree) + " " + verdict);
  if (c.dump) {
    out.columns = {"degree", "coefficient"};
    for (std::uint64_t d = 0; d <= degree; ++d) {
      if (product[d] != 0) out.rows.push_back({std::to_string(d), product[d].str()});
    }
  } else {
    out.columns = {"degree", "nonzero", "pentagonal_exponents", "verdict"};
    out.rows.push_back({std::to_string(degree), std::to_string(product.nonzero_count()),
                        std::to_string(exponents), verdict});
  }
  return out;
}

Output run_verify_periods(const RunConfig& c) {
  Output out;
  out.columns = {"m", "r", "period_length", "signed_sum", "basis_sum", "verdict"};
  const std::uint64_t lo = c.m.value_or(1);
  const std::uint64_t hi = c.m ? *c.m : c.max_n.value_or(24);
  const std::uint64_t periods = c.count.value_or(5);
  for (std::uint64_t m = lo; m <= hi; ++m) {
    const PeriodReport periodic = verify_period_cancellation(m, periods);
    out.rows.push_back({std::to_string(m), "all", std::to_string(4 * m),
                        periodic.max_residue_sum.str(), to_string(periodic.partial_sum_aggregate),
                        periodic.passed() ? "PASS" : "FAIL"});
    for (const auto& v : periodic.violations) {
      out.failures.push_back(period_line(periodic) + " block " + std::to_string(v.block) +
                             " position " + std::to_string(v.position) + ": " + v.what);
    }
    for (std::uint64_t r = 0; r < m; ++r) {
      if (c.r && *c.r != r) continue;
      const BasisReport basis = verify_basis_cancellation(m, r);
      out.rows.push_back({std::to_string(m), std::to_string(r), std::to_string(basis.period_length),
                          basis.signed_sum.str(), basis.basis_sum.str(),
                          basis.passed() ? "PASS" : "FAIL"});
      if (!basis.passed()) out.failures.push_back(basis.line());
    }
  }
  return out;
}

Output run_verify_powersums(const RunConfig& c) {
  Output out;
  const std::uint64_t k_max = c.degree.value_or(200);
  const DenseSeries s = euler_product(k_max);
  const auto e = elementary_symmetric(s, k_max);
  const auto p = power_sums_from_elementary(e);
  out.columns = {"k", "e_k", "p_k", "sigma_k", "verdict"};
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const BigInt sigma = sigma_brute(k);
    const bool ok = p[k - 1] == sigma;
    out.rows.push_back({std::to_string(k), e[k - 1].str(), p[k - 1].str(), sigma.str(),
                        ok ? "PASS" : "FAIL"});
    if (!ok) out.failures.push_back(join(out.rows.back()));
  }
  const std::size_t shown = std::min<std::size_t>(7, e.size());
  out.headline.push_back("e_1..e_" + std::to_string(shown) + " = " +
                         join(std::vector<BigInt>(e.begin(), e.begin() + shown), " "));
  if (e.size() >= 7) out.notes.push_back("e_6 = " + e[5].str() + ", e_7 = " + e[6].str());
  return out;
}

std::string table_rows(const DifferenceTable& t) {
  std::vector<std::string> rows;
  for (const auto& row : t.rows) rows.push_back(join(row));
  return join(rows, " / ");
}

Output run_sum(const RunConfig& c) {
  Output out;
  const PowerSumSplit split = pentagonal_power_sum(*c.lambda);
  out.headline.push_back("s=" + to_string(split.s) + " t=" + to_string(split.t) +
                         " total=" + to_string(split.total));
  out.columns = {"lambda", "s", "t", "total"};
  out.rows.push_back({std::to_string(split.lambda), to_string(split.s), to_string(split.t),
                      to_string(split.total)});
  out.notes.push_back("minus branch differences: " + table_rows(split.minus_table));
  out.notes.push_back("plus branch differences: " + table_rows(split.plus_table));
  if (split.total != 0) out.failures.push_back("total " + to_string(split.total) + " is not 0");
  return out;
}

Output run_abel(const RunConfig& c) {
  Output out;
  const std::uint64_t lambda = *c.lambda;
  const std::uint64_t m = *c.m;
  const double rho = c.rho.value_or(0.999);
  const bool compare = rho > kAbelReferenceRho;
  out.columns = {"lambda", "m", "label", "rho", "abs_value", "verdict"};

  const Eigen::VectorXcd values = abel_at_roots(lambda, m, rho, kAbelTolerance);
  const Eigen::VectorXcd filtered = residue_filter(m) * values;
  Eigen::VectorXcd reference_values;
  Eigen::VectorXcd reference_filtered;
  if (compare) {
    reference_values = abel_at_roots(lambda, m, kAbelReferenceRho, kAbelTolerance);
    reference_filtered = residue_filter(m) * reference_values;
  }

  auto emit = [&](const std::string& label, std::complex<double> v, std::complex<double> ref) {
    std::string verdict = "n/a";
    if (compare) verdict = std::abs(v) < std::abs(ref) ? "PASS" : "FAIL";
    out.rows.push_back({std::to_string(lambda), std::to_string(m), label, plain(rho),
                        scientific(std::abs(v)), verdict});
    if (verdict == "FAIL") out.failures.push_back(join(out.rows.back()));
  };
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (c.r) break;
    emit("i=" + std::to_string(i), values(i), compare ? reference_values(i) : 0.0);
  }
  for (Eigen::Index r = 0; r < filtered.size(); ++r) {
    if (c.r && static_cast<Eigen::Index>(*c.r) != r) continue;
    emit("r=" + std::to_string(r), filtered(r), compare ? reference_filtered(r) : 0.0);
  }
  if (compare) {
    out.notes.push_back("verdict: |value| at rho=" + plain(rho) + " below |value| at rho=" +
                        plain(kAbelReferenceRho));
  }
  return out;
}

Output run_report() {
  Output out;
  out.columns = {"id", "check", "verdict", "detail"};
  std::size_t passed = 0;
  const auto outcomes = reproduce_all();
  for (const CheckOutcome& o : outcomes) {
    out.rows.push_back({o.id, o.title, o.passed ? "PASS" : "FAIL", o.detail});
    if (o.passed) {
      ++passed;
    } else {
      out.failures.push_back(o.id + ": " + o.detail);
    }
  }
  out.headline.push_back(std::to_string(passed) + "/" + std::to_string(outcomes.size()) +
                         " checks passed");
  return out;
}

// --- formatting -------------------------------------------------------------

void write_table(const Output& o, std::ostream& os) {
  for (const auto& line : o.headline) os << line << '\n';
  if (!o.rows.empty()) {
    std::vector<std::size_t> width(o.columns.size(), 0);
    for (std::size_t j = 0; j < o.columns.size(); ++j) width[j] = o.columns[j].size();
    for (const auto& row : o.rows) {
      for (std::size_t j = 0; j < row.size() && j < width.size(); ++j) {
        width[j] = std::max(width[j], row[j].size());
      }
    }
    auto emit = [&](const std::vector<std::string>& cells) {
      std::string line;
      for (std::size_t j = 0; j < cells.size(); ++j) {
        std::string cell = cells[j];
        if (j + 1 < cells.size()) cell.resize(std::max(cell.size(), width[j]), ' ');
        line += (j ? "  " : "") + cell;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << '\n';
    };
    emit(o.columns);
    for (const auto& row : o.rows) emit(row);
  }
  for (const auto& line : o.notes) os << line << '\n';
}

void write_csv(const Output& o, std::ostream& os) {
  for (const auto& row : o.rows) os << join(row) << '\n';
}

void write_json(const Output& o, Command command, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["command"] = command_name(command);
  doc["passed"] = o.failures.empty();
  doc["headline"] = o.headline;
  doc["columns"] = o.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : o.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t j = 0; j < row.size() && j < o.columns.size(); ++j) obj[o.columns[j]] = row[j];
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["notes"] = o.notes;
  doc["failures"] = o.failures;
  os << doc.dump(2) << '\n';
}

}  // namespace

void validate(const RunConfig& c) {
  auto require = [](bool cond, const std::string& msg) {
    if (!cond) throw UsageError(msg);
  };
  switch (c.command) {
    case Command::Seq:
      require(!c.count || *c.count >= 1, "--count must be at least 1");
      break;
    case Command::Sigma:
      require(c.max_n.has_value(), "sigma requires --max");
      require(*c.max_n >= 1, "--max must be at least 1");
      require(!c.trace || *c.trace >= 1, "--trace must be at least 1");
      break;
    case Command::VerifyPnt:
      break;
    case Command::VerifyPeriods:
      require(!c.m || *c.m >= 1, "--m must be at least 1");
      require(!c.max_n || *c.max_n >= 1, "--max must be at least 1");
      require(!c.count || *c.count >= 1, "--count must be at least 1");
      if (c.r) require(c.m && *c.r < *c.m, "--r requires --m with r < m");
      break;
    case Command::VerifyPowersums:
      require(!c.degree || *c.degree >= 1, "--degree must be at least 1");
      break;
    case Command::Sum:
      require(c.lambda.has_value(), "sum requires --lambda");
      break;
    case Command::Abel:
      require(c.lambda.has_value(), "abel requires --lambda");
      require(c.m.has_value() && *c.m >= 1, "abel requires --m >= 1");
      require(!c.rho || (*c.rho > 0.0 && *c.rho < 1.0), "--rho must lie in (0, 1)");
      if (c.r) require(*c.r < *c.m, "--r must be smaller than --m");
      break;
    case Command::Report:
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  Output result;
  try {
    switch (config.command) {
      case Command::Seq: result = run_seq(config); break;
      case Command::Sigma: result = run_sigma(config, err); break;
      case Command::VerifyPnt: result = run_verify_pnt(config); break;
      case Command::VerifyPeriods: result = run_verify_periods(config); break;
      case Command::VerifyPowersums: result = run_verify_powersums(config); break;
      case Command::Sum: result = run_sum(config); break;
      case Command::Abel: result = run_abel(config); break;
      case Command::Report: result = run_report(); break;
    }
  } catch (const TruncationInfeasible& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  switch (config.format) {
    case OutputFormat::Table: write_table(result, out); break;
    case OutputFormat::Csv: write_csv(result, out); break;
    case OutputFormat::Json: write_json(result, config.command, out); break;
  }
  for (const auto& f : result.failures) err << "FAIL: " << f << '\n';
  return result.failures.empty() ? kPass : kFail;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pentagonal number identities: exact checks and reports", "pentafold"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "table";
  std::uint64_t max_n = 0, degree = 0, m = 0, r = 0, lambda = 0, count = 0, trace = 0;
  double rho = 0.0;
  std::string cache;

  struct Flags {
    CLI::Option* max_n = nullptr;
    CLI::Option* degree = nullptr;
    CLI::Option* m = nullptr;
    CLI::Option* r = nullptr;
    CLI::Option* lambda = nullptr;
    CLI::Option* rho = nullptr;
    CLI::Option* count = nullptr;
    CLI::Option* cache = nullptr;
    CLI::Option* trace = nullptr;
  };
  std::vector<std::pair<CLI::App*, Command>> subcommands;
  std::vector<Flags> flags;

  auto add = [&](const char* name, const char* help, Command command) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    subcommands.emplace_back(sub, command);
    flags.emplace_back();
    return std::make_pair(sub, &flags.back());
  };
  flags.reserve(8);

  {
    auto [sub, f] = add("seq", "generalized pentagonal numbers in stream order", Command::Seq);
    f->count = sub->add_option("--count", count, "number of terms (default 12)");
    sub->add_flag("--include-zero", config.include_zero, "lead with the k=0 term");
    sub->add_flag("--interpolated", config.interpolated, "merged sequence with thirds inserted");
  }
  {
    auto [sub, f] = add("sigma", "divisor sums via the pentagonal recurrence", Command::Sigma);
    f->max_n = sub->add_option("--max", max_n, "largest N");
    f->cache = sub->add_option("--cache", cache, "sigma table cache file (N,sigma lines)");
    f->trace = sub->add_option("--trace", trace, "print the recurrence expansion for this N");
  }
  {
    auto [sub, f] = add("verify-pnt", "expanded product against the pentagonal series", Command::VerifyPnt);
    f->degree = sub->add_option("--degree", degree, "truncation degree (default 1000)");
    sub->add_flag("--dump", config.dump, "list nonzero coefficients as degree,coefficient");
  }
  {
    auto [sub, f] = add("verify-periods", "period and basis cancellation at roots of unity",
                        Command::VerifyPeriods);
    f->m = sub->add_option("--m", m, "single root order");
    f->max_n = sub->add_option("--max", max_n, "check every order 1..max (default 24)");
    f->r = sub->add_option("--r", r, "single residue class");
    f->count = sub->add_option("--count", count, "number of 4m-term blocks (default 5)");
  }
  {
    auto [sub, f] = add("verify-powersums", "elementary symmetric values and power sums",
                        Command::VerifyPowersums);
    f->degree = sub->add_option("--degree", degree, "largest k (default 200)");
  }
  {
    auto [sub, f] = add("sum", "difference-rule sums of the lambda-th powers", Command::Sum);
    f->lambda = sub->add_option("--lambda", lambda, "power");
  }
  {
    auto [sub, f] = add("abel", "damped evaluation at roots of unity", Command::Abel);
    f->lambda = sub->add_option("--lambda", lambda, "power");
    f->m = sub->add_option("--m", m, "root order");
    f->r = sub->add_option("--r", r, "single residue class");
    f->rho = sub->add_option("--rho", rho, "damping radius in (0,1) (default 0.999)");
  }
  add("report", "run every check and summarise", Command::Report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  for (std::size_t j = 0; j < subcommands.size(); ++j) {
    if (!subcommands[j].first->parsed()) continue;
    config.command = subcommands[j].second;
    const Flags& f = flags[j];
    auto given = [](CLI::Option* o) { return o != nullptr && o->count() > 0; };
    if (given(f.max_n)) config.max_n = max_n;
    if (given(f.degree)) config.degree = degree;
    if (given(f.m)) config.m = m;
    if (given(f.r)) config.r = r;
    if (given(f.lambda)) config.lambda = lambda;
    if (given(f.rho)) config.rho = rho;
    if (given(f.count)) config.count = count;
    if (given(f.cache)) config.cache_path = cache;
    if (given(f.trace)) config.trace = trace;
  }
  config.format = format == "csv" ? OutputFormat::Csv
                  : format == "json" ? OutputFormat::Json
                                     : OutputFormat::Table;
  return run(config, out, err);
}

}  // namespace pentafold::cli
