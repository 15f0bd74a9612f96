#include "permroots/cli.hpp"

#include <charconv>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "permroots/counting.hpp"
#include "permroots/egf.hpp"
#include "permroots/errors.hpp"
#include "permroots/gsets.hpp"
#include "permroots/kernels/power_kernels.hpp"
#include "permroots/numtheory.hpp"
#include "permroots/roots.hpp"

namespace permroots::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw FormatError("invalid number '" + std::string(s) + "'");
  }
  return v;
}

void require_m(const Request& req) {
  if (req.m == 0) throw UsageError("-m must be a positive integer");
}

// Exactly one of --perm / --type.
CycleType input_type(const Request& req) {
  if (req.permutation.has_value() == req.cycle_type.has_value()) {
    throw UsageError("give exactly one of --perm or --type");
  }
  if (req.permutation) return CycleType::of(Permutation::parse(*req.permutation));
  return CycleType::parse(*req.cycle_type);
}

std::string join(const std::vector<std::uint64_t>& v, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

int do_exists(const Request& req, std::ostream& out) {
  require_m(req);
  const CycleType t = input_type(req);
  const bool verdict = has_mth_root(t, req.m);
  if (req.format == Format::json) {
    json witness = json::array();
    for (const auto& [ell, a] : t.parts()) {
      const auto b = bracket(ell, req.m);
      witness.push_back({{"ell", ell}, {"a", a}, {"bracket", b}, {"divides", a % b == 0}});
    }
    out << json{{"m", req.m}, {"type", t.to_string()}, {"has_root", verdict}, {"witness", witness}}.dump(2)
        << '\n';
    return 0;
  }
  out << (verdict ? "yes" : "no") << '\n';
  out << "ell a_ell bracket divides\n";
  for (const auto& [ell, a] : t.parts()) {
    const auto b = bracket(ell, req.m);
    out << ell << ' ' << a << ' ' << b << ' ' << (a % b == 0 ? "yes" : "no") << '\n';
  }
  return 0;
}

int do_count(const Request& req, std::ostream& out) {
  require_m(req);
  const CycleType t = input_type(req);
  const BigInt count = root_count(t, req.m);
  if (req.format == Format::json) {
    json j{{"m", req.m}, {"type", t.to_string()}, {"count", count.str()}};
    if (req.verbosity >= 1) {
      json lengths = json::array();
      for (const auto& [ell, a] : t.parts()) {
        const GSet set = g_set_bounded(req.m, ell, a);
        lengths.push_back({{"ell", ell},
                           {"a", a},
                           {"g", set.elements},
                           {"solutions", epsilon_set(set.elements, a).size()},
                           {"factor", root_count_for_length(ell, a, req.m).str()}});
      }
      j["lengths"] = lengths;
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  out << count << '\n';
  if (req.verbosity >= 1) {
    for (const auto& [ell, a] : t.parts()) {
      const GSet set = g_set_bounded(req.m, ell, a);
      out << "ell=" << ell << " a=" << a << " G={" << join(set.elements, ",") << "} g=("
          << join(set.elements, ",") << ") |E|=" << epsilon_set(set.elements, a).size()
          << " factor=" << root_count_for_length(ell, a, req.m) << '\n';
    }
  }
  return 0;
}

int do_roots(const Request& req, std::ostream& out) {
  require_m(req);
  if (req.permutation.has_value() == req.cycle_type.has_value()) {
    throw UsageError("give exactly one of --perm or --type");
  }
  const Permutation sigma = req.permutation ? Permutation::parse(*req.permutation)
                                            : CycleType::parse(*req.cycle_type).representative();
  std::uint64_t emitted = 0;
  bool truncated = false;
  json listed = json::array();
  for (const auto& tau : enumerate_roots(sigma, req.m)) {
    if (!req.unlimited && emitted == req.limit) {
      truncated = true;
      break;
    }
    if (req.format == Format::json) {
      listed.push_back(tau.to_string());
    } else {
      out << tau.to_string() << '\n';
    }
    ++emitted;
  }
  if (req.format == Format::json) out << json{{"m", req.m}, {"sigma", sigma.to_string()}, {"roots", listed}}.dump(2) << '\n';
  if (truncated) {
    throw SizeCapError("stopped after " + std::to_string(emitted) + " of " +
                       root_count(CycleType::of(sigma), req.m).str() +
                       " roots; raise --limit or pass --unlimited");
  }
  return 0;
}

int do_table(const Request& req, std::ostream& out) {
  require_m(req);
  if (req.range.lo > req.range.hi) throw UsageError("--n range is empty");
  if (req.range.hi > req.max_order) {
    throw SizeCapError("n = " + std::to_string(req.range.hi) + " exceeds the truncation cap " +
                       std::to_string(req.max_order) + " (raise --max-order)");
  }
  const auto totals = r_totals(req.range.hi, req.m);
  json rows = json::array();
  if (req.format != Format::json) out << "n,m,r_total,p_num,p_den,p_decimal\n";
  for (std::uint64_t n = req.range.lo; n <= req.range.hi; ++n) {
    const Rational p(totals[n], factorial(n));
    const std::string dec = to_decimal_string(p, 12);
    if (req.format == Format::json) {
      rows.push_back({{"n", n},
                      {"m", req.m},
                      {"r_total", totals[n].str()},
                      {"p_num", numerator(p).str()},
                      {"p_den", denominator(p).str()},
                      {"p_decimal", dec}});
    } else {
      out << n << ',' << req.m << ',' << totals[n] << ',' << numerator(p) << ',' << denominator(p) << ','
          << dec << '\n';
    }
  }
  if (req.format == Format::json) out << rows.dump(2) << '\n';
  return 0;
}

json block_json(const ProbabilityBlock& b, std::uint64_t q) {
  std::vector<std::string> values;
  for (const auto& v : b.values) values.push_back(to_fraction_string(v));
  return {{"j", b.j}, {"n_first", b.j * q}, {"values", values}, {"equal", b.equal}};
}

int do_prob(const Request& req, std::ostream& out, bool with_structure) {
  if (req.max_j * req.q + req.q - 1 > req.max_order) {
    throw SizeCapError("blocks reach beyond the truncation cap " + std::to_string(req.max_order));
  }
  const auto report = check_prime_power_equalities(req.q, req.r, req.max_j);
  bool ok = report.passed();
  std::optional<PrimePowerStructure> structure;
  if (with_structure) {
    if (req.structure_order > req.max_order) {
      throw SizeCapError("--order exceeds the truncation cap " + std::to_string(req.max_order));
    }
    structure = check_prime_power_structure(req.q, req.r, req.structure_order);
    ok = ok && structure->passed();
  }

  if (req.format == Format::json) {
    json blocks = json::array();
    for (const auto& b : report.blocks) blocks.push_back(block_json(b, req.q));
    json j{{"q", report.q}, {"r", report.r}, {"m", report.m}, {"blocks", blocks}, {"passed", ok}};
    if (structure) {
      j["structure"] = {{"order", req.structure_order},
                        {"exponents_divisible", structure->exponents_divisible},
                        {"partial_sums_match", structure->partial_sums_match},
                        {"matches_powers_egf", structure->matches_powers_egf}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "m = " << report.m << " (q = " << report.q << ", r = " << report.r << ")\n";
    for (const auto& b : report.blocks) {
      out << "j=" << b.j << " n=" << b.j * req.q << ".." << b.j * req.q + req.q - 1 << ' ';
      for (const auto& v : b.values) out << ' ' << to_fraction_string(v);
      out << "  " << (b.equal ? "equal" : "MISMATCH") << '\n';
    }
    if (structure) {
      out << "G(x) exponents divisible by " << req.q << ": " << (structure->exponents_divisible ? "yes" : "NO")
          << '\n';
      out << "G(x)/(1-x) partial sums: " << (structure->partial_sums_match ? "yes" : "NO") << '\n';
      out << "G(x)/(1-x) equals the product EGF: " << (structure->matches_powers_egf ? "yes" : "NO") << '\n';
    }
    out << (ok ? "all checks passed" : "FAILED") << '\n';
  }
  return ok ? 0 : static_cast<int>(ExitCode::internal);
}

int do_selftest(const Request& req, std::ostream& out) {
  if (req.selftest_n > req.oracle_cap) {
    throw SizeCapError("--max-n " + std::to_string(req.selftest_n) + " exceeds the oracle cap " +
                       std::to_string(req.oracle_cap));
  }
  const std::vector<std::uint64_t> ms =
      req.m == 0 ? std::vector<std::uint64_t>{2, 3, 4, 5, 6, 8, 9, 12} : std::vector<std::uint64_t>{req.m};
  OracleConfig oracle{req.oracle_cap};
  std::uint64_t checked = 0, failures = 0;

  for (std::uint64_t n = 0; n <= req.selftest_n; ++n) {
    std::vector<Permutation::value_type> one_line(n);
    for (std::uint64_t i = 0; i < n; ++i) one_line[i] = static_cast<Permutation::value_type>(i + 1);
    do {
      const Permutation sigma = Permutation::from_one_line(one_line);
      const CycleType t = CycleType::of(sigma);
      for (std::uint64_t m : ms) {
        const auto brute = brute_force_roots(sigma, m, oracle);
        std::set<Permutation> built;
        for (const auto& tau : enumerate_roots(sigma, m)) built.insert(tau);
        const bool same = built.size() == brute.size() && std::equal(built.begin(), built.end(), brute.begin()) &&
                          root_count(t, m) == brute.size();
        ++checked;
        if (!same) {
          ++failures;
          out << "MISMATCH sigma=" << sigma.to_string() << " m=" << m << '\n';
        }
      }
    } while (std::next_permutation(one_line.begin(), one_line.end()));
  }
  out << "oracle equivalence: " << checked << " cases, " << failures << " failures\n";

  std::uint64_t identity_failures = 0;
  for (std::uint64_t m : ms) {
    for (std::uint64_t n = 0; n <= 2 * req.selftest_n; ++n) {
      BigInt sum = 0;
      for (const auto& t : all_cycle_types(n)) sum += root_count(t, m) * class_size(t);
      const bool ok = sum == factorial(n) && r_total(n, m) == r_total_by_classification(n, m);
      if (!ok) {
        ++identity_failures;
        out << "IDENTITY FAILURE n=" << n << " m=" << m << '\n';
      }
    }
  }
  out << "global identities: " << identity_failures << " failures\n";
  out << "kernel: " << kernels::isa_name(kernels::selected_isa()) << '\n';
  const bool ok = failures == 0 && identity_failures == 0;
  out << (ok ? "selftest passed" : "selftest FAILED") << '\n';
  return ok ? 0 : static_cast<int>(ExitCode::internal);
}

}  // namespace

NRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_u64(text);
    return {n, n};
  }
  return {parse_u64(std::string_view(text).substr(0, dots)), parse_u64(std::string_view(text).substr(dots + 2))};
}

int run(const Request& req, std::ostream& out, std::ostream& err) {
  try {
    switch (req.subcommand) {
      case Subcommand::exists: return do_exists(req, out);
      case Subcommand::count: return do_count(req, out);
      case Subcommand::roots: return do_roots(req, out);
      case Subcommand::table: return do_table(req, out);
      case Subcommand::prob: return do_prob(req, out, false);
      case Subcommand::verify: return do_prob(req, out, true);
      case Subcommand::selftest: return do_selftest(req, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::input_format);
  } catch (const SizeCapError& e) {
    err << "size cap: " << e.what() << '\n';
    return static_cast<int>(ExitCode::size_cap);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::internal);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::internal);
  }
  return static_cast<int>(ExitCode::usage);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"m-th roots of permutations: existence, counts, enumeration and probabilities"};
  app.require_subcommand(1);
  Request req;
  std::string range_text = "0..10";
  std::string format_text = "text";

  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-m", req.m, "Root order m")->required();
    sub->add_option("--perm", req.permutation, "Permutation in one-line notation, e.g. \"2 3 1\"");
    sub->add_option("--type", req.cycle_type, "Cycle type, e.g. \"1^2 3\"");
    add_common(sub);
  };

  auto* exists = app.add_subcommand("exists", "Decide whether an m-th root exists");
  add_input(exists);
  auto* count = app.add_subcommand("count", "Count the m-th roots");
  add_input(count);
  count->add_flag("-v,--verbose", req.verbosity, "Show per-length details");
  auto* roots = app.add_subcommand("roots", "Stream the m-th roots in one-line notation");
  add_input(roots);
  roots->add_option("--limit", req.limit, "Stop after this many roots");
  roots->add_flag("--unlimited", req.unlimited, "Emit every root");
  auto* table = app.add_subcommand("table", "Tabulate r(n,m) and p_m(n)");
  table->add_option("-m", req.m, "Root order m")->required();
  table->add_option("--n", range_text, "n range a..b");
  table->add_option("--max-order", req.max_order, "Truncation cap");
  add_common(table);
  auto* prob = app.add_subcommand("prob", "Check p_m(jq) = ... = p_m(jq+q-1) for m = q^r");
  auto* verify = app.add_subcommand("verify", "prob plus the reduced-series structure checks");
  for (auto* sub : {prob, verify}) {
    sub->add_option("-q", req.q, "Prime q");
    sub->add_option("-r", req.r, "Exponent r (m = q^r)");
    sub->add_option("-J,--max-j", req.max_j, "Largest block index j");
    sub->add_option("--max-order", req.max_order, "Truncation cap");
    add_common(sub);
  }
  verify->add_option("--order", req.structure_order, "Truncation order of the structure checks");
  auto* selftest = app.add_subcommand("selftest", "Oracle equivalence and identity checks");
  selftest->add_option("--max-n", req.selftest_n, "Largest n scanned exhaustively");
  selftest->add_option("--oracle-cap", req.oracle_cap, "Brute-force oracle bound");
  selftest->add_option("-m", req.m, "Only this m (default: 2,3,4,5,6,8,9,12)");

  std::vector<std::string> argv_store{"permroots"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  }

  if (*exists) req.subcommand = Subcommand::exists;
  if (*count) req.subcommand = Subcommand::count;
  if (*roots) req.subcommand = Subcommand::roots;
  if (*table) req.subcommand = Subcommand::table;
  if (*prob) req.subcommand = Subcommand::prob;
  if (*verify) req.subcommand = Subcommand::verify;
  if (*selftest) req.subcommand = Subcommand::selftest;

  req.format = formats.at(format_text);
  if (req.subcommand == Subcommand::table) {
    if (table->count("--format") == 0) req.format = Format::csv;
    try {
      req.range = parse_range(range_text);
    } catch (const FormatError& e) {
      err << "input error: " << e.what() << '\n';
      return static_cast<int>(ExitCode::input_format);
    }
  }
  return run(req, out, err);
}

}  // namespace permroots::cli
