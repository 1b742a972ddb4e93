// compsum: command-line front end for the identity checks, residue
// computations, order-simplex counts and the conjecture scan.
//
// Exit codes: 0 verified / success, 1 mismatch or failed theorem check,
// 2 usage or guard error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "compsum/compsum.hpp"

namespace {

using namespace compsum;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Polynomials above this degree are elided in table output.
constexpr long kPrintDegreeCap = 64;

enum class Format { table, csv, json };

const std::map<std::string, Format> kFormats{{"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};
const std::map<std::string, Sparseness> kPredicates{
    {"distinct", Sparseness::distinct}, {"sparse", Sparseness::sparse}, {"two-sparse", Sparseness::two_sparse}};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

json coefficients_json(const CountingPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

std::string semicolon_list(const CountingPolynomial& p) {
  std::string out = coefficient_list(p);
  std::replace(out.begin(), out.end(), ',', ';');
  return out;
}

std::string display(const CountingPolynomial& p) {
  if (p.degree() > kPrintDegreeCap)
    return "<degree " + std::to_string(p.degree()) + ", digest " + fnv1a_hex(coefficient_list(p)) + ">";
  return to_string(p);
}

template <class S>
json sequence_json(const std::vector<S>& values) {
  json out = json::array();
  for (const auto& v : values) {
    if constexpr (std::is_same_v<S, Rational>) out.push_back(to_string(v));
    else out.push_back(coefficients_json(v));
  }
  return out;
}

// ---------------------------------------------------------------- verify

void print_reports(const std::vector<IdentityReport>& reports, Format format, std::ostream& os) {
  switch (format) {
    case Format::table:
      for (const auto& r : reports) {
        os << r.name << " n=" << r.n << ": " << (r.equal ? "equal" : "MISMATCH");
        if (r.first_mismatch_exponent) os << " (first differing exponent " << *r.first_mismatch_exponent << ")";
        os << "\n  left : " << display(r.left) << "\n  right: " << display(r.right) << "\n";
      }
      break;
    case Format::csv:
      os << "identity,n,equal,first_mismatch,left,right\n";
      for (const auto& r : reports) {
        os << r.name << "," << r.n << "," << (r.equal ? "true" : "false") << ","
           << (r.first_mismatch_exponent ? std::to_string(*r.first_mismatch_exponent) : "") << ","
           << semicolon_list(r.left) << "," << semicolon_list(r.right) << "\n";
      }
      break;
    case Format::json: {
      json doc = json::array();
      for (const auto& r : reports) {
        doc.push_back({{"identity", r.name},
                       {"n", r.n},
                       {"equal", r.equal},
                       {"first_mismatch_exponent", r.first_mismatch_exponent ? json(*r.first_mismatch_exponent) : json()},
                       {"left", coefficients_json(r.left)},
                       {"right", coefficients_json(r.right)}});
      }
      os << doc.dump(2) << "\n";
      break;
    }
  }
}

struct VerifyOptions {
  std::string identity;
  int n = 1;
  bool upto = false;
  std::uint64_t seed = kDefaultSeed;
  int count = 5;
  std::string deck = "connected-graphs";
  int brute_max = 5;
};

Deck parse_deck(const std::string& spec, int n) {
  if (spec == "connected-graphs") return connected_graph_deck(n);
  std::vector<BigInt> cards;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational r = parse_rational(item);
    if (r.get_den() != 1 || sgn(r) < 0) throw UsageError("deck entries must be nonnegative integers");
    cards.push_back(r.get_num());
  }
  if (cards.empty()) throw UsageError("empty deck");
  return Deck(std::move(cards));
}

int run_verify(const VerifyOptions& opt, Format format) {
  std::vector<IdentityReport> reports;
  const std::map<std::string, Identity> named{{"id1", Identity::id1}, {"id2", Identity::id2}, {"id3", Identity::id3}};
  if (auto it = named.find(opt.identity); it != named.end()) {
    for (int n = opt.upto ? 1 : opt.n; n <= opt.n; ++n) reports.push_back(verify(it->second, n));
  } else if (opt.identity == "first-order") {
    FixedSeedRng rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) {
      auto r = first_order_identity(random_potential(rng, opt.n), opt.n);
      r.name = "first-order#" + std::to_string(i + 1);
      reports.push_back(std::move(r));
    }
  } else if (opt.identity == "exp-formula") {
    const Deck deck = parse_deck(opt.deck, opt.n);
    if (opt.deck != "connected-graphs" && deck.size() < opt.n)
      throw UsageError("deck must list d_1..d_n");
    reports = exp_formula_check(deck, opt.n);
    if (opt.deck == "connected-graphs") {
      const int census_max = std::min({opt.n, opt.brute_max, 7});
      for (int n = 1; n <= census_max; ++n) {
        reports.push_back(make_report("exp-formula-census", n, hand_polynomial(hands_by_composition(deck, n)),
                                      hand_polynomial(component_census(n))));
      }
    }
  } else {
    throw UsageError("unknown identity '" + opt.identity + "'");
  }
  print_reports(reports, format, std::cout);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.equal; });
  return ok ? kExitOk : kExitMismatch;
}

// -------------------------------------------------------------- residues

struct ResidueOptions {
  std::string u;
  bool u_given = false;
  std::string family;
  int order = 0;
  std::string equation = "second";
};

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("cannot parse potential: ") + e.what());
    }
  }
  if (out.empty()) throw UsageError("empty potential");
  return out;
}

int run_residues(const ResidueOptions& opt, Format format) {
  if (opt.u_given == !opt.family.empty()) throw UsageError("give exactly one of --u or --family");
  if (opt.u_given) {
    Potential<Rational> u(parse_rational_list(opt.u));
    const int order = opt.order > 0 ? opt.order : u.order();
    const auto a = opt.equation == "second" ? from_second_order_potential(u, order) : from_first_order_potential(u, order);
    const auto rho = residues_by_recurrence(a, order, Rational(1));
    switch (format) {
      case Format::table:
        for (int n = 1; n <= order; ++n) std::cout << "rho_" << n << " = " << to_string(rho[n - 1]) << "\n";
        break;
      case Format::csv:
        std::cout << "n,rho\n";
        for (int n = 1; n <= order; ++n) std::cout << n << "," << to_string(rho[n - 1]) << "\n";
        break;
      case Format::json:
        std::cout << json{{"equation", opt.equation}, {"potential", sequence_json(u.coefficients())}, {"residues", sequence_json(rho)}}.dump(2)
                  << "\n";
        break;
    }
    return kExitOk;
  }

  const std::map<std::string, Identity> families{{"id1", Identity::id1}, {"id2", Identity::id2}, {"id3", Identity::id3}};
  auto it = families.find(opt.family);
  if (it == families.end()) throw UsageError("unknown family '" + opt.family + "'");
  if (opt.order < 1) throw UsageError("--order is required with --family");
  const Identity which = it->second;
  const auto rho = residues_by_recurrence(from_second_order_potential(identity_potential(which, opt.order)), opt.order,
                                         CountingPolynomial(Rational(1)));
  std::vector<CountingPolynomial> closed;
  std::vector<bool> match;
  for (int n = 1; n <= opt.order; ++n) {
    closed.push_back(closed_form_residue(which, n));
    // id3's closed form is stated at n!(n-1)! times the residue
    CountingPolynomial scaled = which == Identity::id3 ? rho[n - 1] * Rational(factorial(n) * factorial(n - 1)) : rho[n - 1];
    match.push_back(scaled == closed.back());
  }
  switch (format) {
    case Format::table:
      for (int n = 1; n <= opt.order; ++n)
        std::cout << "rho_" << n << " = " << display(rho[n - 1]) << "   closed form: " << display(closed[n - 1])
                  << "   match=" << (match[n - 1] ? "true" : "false") << "\n";
      break;
    case Format::csv:
      std::cout << "n,rho,closed_form,match\n";
      for (int n = 1; n <= opt.order; ++n)
        std::cout << n << "," << semicolon_list(rho[n - 1]) << "," << semicolon_list(closed[n - 1]) << ","
                  << (match[n - 1] ? "true" : "false") << "\n";
      break;
    case Format::json: {
      json m = json::array();
      for (bool b : match) m.push_back(b);
      std::cout << json{{"family", opt.family}, {"residues", sequence_json(rho)}, {"closed_form", sequence_json(closed)}, {"match", m}}.dump(2)
                << "\n";
      break;
    }
  }
  return std::all_of(match.begin(), match.end(), [](bool b) { return b; }) ? kExitOk : kExitMismatch;
}

// --------------------------------------------------------------- simplex

struct SimplexOptions {
  int N = 3;
  int n = 3;
  int d = 1;
  int vs = 1;
  std::string predicate = "distinct";
  bool brute = false;
};

void print_verdict(const std::string& title, const DominanceVerdict& v, Format format, std::ostream& os) {
  auto list = [](const std::vector<int>& ls) {
    std::string out;
    for (int l : ls) out += (out.empty() ? "" : " ") + std::to_string(l);
    return out.empty() ? std::string("-") : out;
  };
  switch (format) {
    case Format::table:
      os << title << ": " << (v.holds ? "holds" : "FAILS") << " for " << v.l_min << " <= l <= " << v.l_max << "\n";
      os << "  larger : " << display(v.larger) << "\n  smaller: " << display(v.smaller) << "\n";
      os << "  l   larger   smaller\n";
      for (int l = v.l_min; l <= v.l_max; ++l)
        os << "  " << l << "   " << to_string(v.larger.coeff(l)) << "   " << to_string(v.smaller.coeff(l)) << "\n";
      os << "  strict: " << list(v.strict) << "   vacuous (both zero): " << list(v.vacuous)
         << "   failed: " << list(v.failed) << "\n";
      break;
    case Format::csv:
      os << "l,larger,smaller,relation\n";
      for (int l = 0; l <= std::max<long>(v.l_max, std::max(v.larger.degree(), v.smaller.degree())); ++l) {
        const auto a = v.larger.coeff(l), b = v.smaller.coeff(l);
        std::string rel = a > b ? "greater" : a == b ? "equal" : "less";
        os << l << "," << to_string(a) << "," << to_string(b) << "," << rel << "\n";
      }
      break;
    case Format::json:
      os << json{{"check", title},
                 {"holds", v.holds},
                 {"l_min", v.l_min},
                 {"l_max", v.l_max},
                 {"larger", coefficients_json(v.larger)},
                 {"smaller", coefficients_json(v.smaller)},
                 {"strict", v.strict},
                 {"vacuous", v.vacuous},
                 {"failed", v.failed},
                 {"low_order_equal", v.low_order_equal}}
                .dump(2)
         << "\n";
      break;
  }
}

Sparseness predicate_of(const std::string& name) {
  auto it = kPredicates.find(name);
  if (it == kPredicates.end()) throw UsageError("unknown predicate '" + name + "'");
  return it->second;
}

int run_simplex(const std::string& sub, const SimplexOptions& opt, Format format) {
  if (sub == "count") {
    const OrderSimplexSpec spec{opt.N, opt.n};
    check_default_guard(spec);
    const auto pred = predicate_of(opt.predicate);
    const auto hist = value_histogram(spec, opt.d);
    const auto e = opt.brute ? brute_force_enumerator(spec, opt.d, pred, opt.n + 1) : enumerator(spec, opt.d, pred);
    switch (format) {
      case Format::table:
        std::cout << "S^" << opt.N << "(" << opt.n << "), coordinate " << opt.d << ", " << opt.predicate
                  << (opt.brute ? " (brute force)" : "") << "\n";
        std::cout << "  values: ";
        for (std::size_t v = 0; v < hist.counts.size(); ++v) std::cout << (v ? " " : "") << to_string(hist.counts[v]);
        std::cout << "\n  " << display(e) << "\n";
        break;
      case Format::csv:
        std::cout << "l,count\n";
        for (long l = 0; l <= e.degree(); ++l) std::cout << l << "," << to_string(e.coeff(l)) << "\n";
        break;
      case Format::json: {
        json h = json::array();
        for (const auto& c : hist.counts) h.push_back(to_string(c));
        std::cout << json{{"N", opt.N}, {"n", opt.n}, {"d", opt.d}, {"predicate", opt.predicate},
                          {"histogram", h}, {"enumerator", coefficients_json(e)}}
                         .dump(2)
                  << "\n";
        break;
      }
    }
    return kExitOk;
  }
  if (sub == "compare") {
    const OrderSimplexSpec spec{opt.N, opt.n};
    check_default_guard(spec);
    const auto pred = predicate_of(opt.predicate);
    auto larger = enumerator(spec, opt.d, pred);
    auto smaller = enumerator(spec, opt.vs, pred);
    const int prefix = dominance_prefix(larger, smaller);
    const long top = std::max(larger.degree(), smaller.degree());
    auto verdict = compare_dominance(std::move(larger), std::move(smaller), 2, static_cast<int>(std::max(2L, top)));
    print_verdict("x_" + std::to_string(opt.d) + " vs x_" + std::to_string(opt.vs), verdict, format, std::cout);
    if (format == Format::table) std::cout << "  dominance prefix L = " << prefix << "\n";
    return kExitOk;
  }
  if (sub == "thm1") {
    auto v = check_thm1(opt.n);
    print_verdict("thm1 S^3(" + std::to_string(opt.n) + ") distinct y vs distinct x", v, format, std::cout);
    return v.holds ? kExitOk : kExitMismatch;
  }
  if (sub == "thm2") {
    auto v = check_thm2(opt.n);
    if (format == Format::table) {
      std::cout << "thm2 S^3(" << opt.n << "): sparse y "
                << (v.generating_functions_equal ? "==" : "!=") << " 2-sparse x\n  sparse y    : "
                << display(v.sparse_y) << "\n  2-sparse x  : " << display(v.two_sparse_x) << "\n";
    } else if (format == Format::json) {
      std::cout << json{{"check", "thm2-equality"}, {"equal", v.generating_functions_equal},
                        {"sparse_y", coefficients_json(v.sparse_y)}, {"two_sparse_x", coefficients_json(v.two_sparse_x)}}
                       .dump(2)
                << "\n";
    }
    print_verdict("thm2 S^3(" + std::to_string(opt.n) + ") sparse y vs sparse x", v.dominance, format, std::cout);
    return v.holds ? kExitOk : kExitMismatch;
  }
  if (sub == "thm3") {
    auto v = check_thm3(opt.n);
    print_verdict("thm3 S^5(" + std::to_string(opt.n) + ") sparse x_3 vs 2-sparse x_1", v, format, std::cout);
    return v.holds ? kExitOk : kExitMismatch;
  }
  throw UsageError("unknown simplex subcommand '" + sub + "'");
}

// ------------------------------------------------------------------ scan

struct ScanOptions {
  int N_min = 3;
  int N_max = 3;
  int n_min = 3;
  int n_max = 3;
  std::string predicate = "distinct";
  unsigned jobs = 1;
};

void print_scan(const std::vector<ScanRow>& rows, Format format, std::ostream& os) {
  switch (format) {
    case Format::csv:
      os << "N,d,n,L,coefficients-digest\n";
      for (const auto& r : rows) os << r.N << "," << r.d << "," << r.n << "," << r.dominance_prefix << "," << r.digest << "\n";
      break;
    case Format::table:
      os << " N  d   n   L  range    digest\n";
      for (const auto& r : rows) {
        char line[96];
        std::snprintf(line, sizeof line, "%2d %2d %3d %3d  %-7s  %s\n", r.N, r.d, r.n, r.dominance_prefix,
                      r.in_conjecture_range ? "inside" : "outside", r.digest.c_str());
        os << line;
      }
      break;
    case Format::json: {
      json doc = json::array();
      for (const auto& r : rows) {
        doc.push_back({{"N", r.N},
                       {"d", r.d},
                       {"n", r.n},
                       {"L", r.dominance_prefix},
                       {"in_conjecture_range", r.in_conjecture_range},
                       {"inner", coefficients_json(r.inner)},
                       {"outer", coefficients_json(r.outer)},
                       {"digest", r.digest}});
      }
      os << doc.dump(2) << "\n";
      break;
    }
  }
}

int run_scan(const ScanOptions& opt, Format format) {
  if (opt.N_max <= 2) throw UsageError("the conjecture needs N > 2");
  if (opt.N_min < 3 || opt.N_min > opt.N_max) throw UsageError("need 3 <= N-min <= N-max");
  if (opt.n_max < opt.N_min) throw UsageError("n-max must be at least N-min");
  const auto rows = conjecture_scan({opt.N_min, opt.N_max, opt.n_min, opt.n_max}, predicate_of(opt.predicate), opt.jobs);
  print_scan(rows, format, std::cout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact composition-sum identities, spectral residues and order-simplex counts"};
  app.require_subcommand(1);
  // empty means the subcommand default: csv for scan, table elsewhere
  std::string format_name;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity exactly");
  verify_cmd->add_option("identity", verify_opt.identity, "id1 | id2 | id3 | first-order | exp-formula")
      ->required()
      ->check(CLI::IsMember({"id1", "id2", "id3", "first-order", "exp-formula"}));
  verify_cmd->add_option("--n", verify_opt.n, "n (or series order)")->required()->check(CLI::Range(1, 1 << 20));
  verify_cmd->add_flag("--upto", verify_opt.upto, "Check every n from 1 up to --n");
  verify_cmd->add_option("--seed", verify_opt.seed, "Seed for the random potentials of first-order");
  verify_cmd->add_option("--count", verify_opt.count, "Number of random potentials for first-order")->check(CLI::Range(1, 1 << 20));
  verify_cmd->add_option("--deck", verify_opt.deck, "connected-graphs or comma-separated d_1,d_2,...");
  verify_cmd->add_option("--brute-max", verify_opt.brute_max, "Largest n for the brute-force graph census (<= 7)")
      ->check(CLI::Range(0, 7));
  verify_cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));

  ResidueOptions residue_opt;
  auto* residues_cmd = app.add_subcommand("residues", "Spectral residues of a potential");
  residues_cmd->add_option("--u", residue_opt.u, "Comma-separated U_1,U_2,... (rationals p/q allowed)");
  residues_cmd->add_option("--family", residue_opt.family, "id1 | id2 | id3 (potential in t)");
  residues_cmd->add_option("--order", residue_opt.order, "Number of residues")->check(CLI::Range(1, 1 << 20));
  residues_cmd->add_option("--equation", residue_opt.equation, "first | second")->check(CLI::IsMember({"first", "second"}));
  residues_cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));

  SimplexOptions simplex_opt;
  std::string simplex_sub;
  auto* simplex_cmd = app.add_subcommand("simplex", "Order-simplex enumerators and theorem checks");
  simplex_cmd->add_option("action", simplex_sub, "count | compare | thm1 | thm2 | thm3")
      ->required()
      ->check(CLI::IsMember({"count", "compare", "thm1", "thm2", "thm3"}));
  simplex_cmd->add_option("--N", simplex_opt.N, "Tuple length");
  simplex_cmd->add_option("--n", simplex_opt.n, "Coordinate bound");
  simplex_cmd->add_option("--d", simplex_opt.d, "Coordinate (1-based)");
  simplex_cmd->add_option("--vs", simplex_opt.vs, "Coordinate to compare against (compare)");
  simplex_cmd->add_option("--predicate", simplex_opt.predicate, "distinct | sparse | two-sparse");
  simplex_cmd->add_flag("--brute-force", simplex_opt.brute, "Count subsets literally (count)");
  simplex_cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));

  ScanOptions scan_opt;
  auto* scan_cmd = app.add_subcommand("scan", "Tabulate dominance prefixes of x_{d+1} over x_d");
  scan_cmd->add_option("--N-max", scan_opt.N_max, "Largest tuple length")->required();
  scan_cmd->add_option("--n-max", scan_opt.n_max, "Largest coordinate bound")->required();
  scan_cmd->add_option("--N-min", scan_opt.N_min, "Smallest tuple length");
  scan_cmd->add_option("--n-min", scan_opt.n_min, "Smallest coordinate bound");
  scan_cmd->add_option("--predicate", scan_opt.predicate, "distinct | sparse | two-sparse");
  scan_cmd->add_option("--jobs", scan_opt.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  scan_cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Format format = format_name.empty() ? (*scan_cmd ? Format::csv : Format::table) : kFormats.at(format_name);
  try {
    if (*verify_cmd) return run_verify(verify_opt, format);
    if (*residues_cmd) {
      residue_opt.u_given = residues_cmd->count("--u") > 0;
      return run_residues(residue_opt, format);
    }
    if (*simplex_cmd) return run_simplex(simplex_sub, simplex_opt, format);
    if (*scan_cmd) return run_scan(scan_opt, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
