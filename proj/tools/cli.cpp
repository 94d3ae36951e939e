#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "treebalance/enumeration.hpp"
#include "treebalance/errors.hpp"
#include "treebalance/extremal.hpp"
#include "treebalance/generators.hpp"
#include "treebalance/newick.hpp"
#include "treebalance/stairs2.hpp"

namespace treebalance::cli {

namespace {

// Reported as exit code 2 with the message on stderr.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string render(const Rational& value, int precision) {
  return value.to_string() + " (" + value.to_decimal(precision) + ")";
}

std::size_t enumeration_bound() {
  const char* raw = std::getenv("TREEBALANCE_MAX_ENUM");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultEnumerationBound;
  }
  std::size_t value = 0;
  std::istringstream parse(raw);
  if (!(parse >> value) || !parse.eof() || value < 1) {
    throw UsageError(std::string("TREEBALANCE_MAX_ENUM must be a positive integer, got '") +
                     raw + "'");
  }
  return value;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw UsageError("cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

struct ComputeArgs {
  std::string input = "-";
  std::string method = "direct";
  int precision = 10;
};

int cmd_compute(const ComputeArgs& args, Streams io) {
  const NewickDocument doc = parse_newick(read_input(args.input, io.in));
  if (args.method == "direct") {
    io.out << render(stairs2_direct(doc.shape), args.precision) << '\n';
    return kExitOk;
  }
  if (args.method == "recursive") {
    io.out << render(stairs2_recursive(doc.shape), args.precision) << '\n';
    return kExitOk;
  }
  const Rational direct = stairs2_direct(doc.shape);
  const Rational recursive = stairs2_recursive(doc.shape);
  io.out << "direct " << render(direct, args.precision) << '\n';
  io.out << "recursive " << render(recursive, args.precision) << '\n';
  if (direct != recursive) {
    io.err << "error: direct and recursive values disagree\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

struct GenerateArgs {
  std::string shape;
  std::optional<std::size_t> n;
  std::optional<std::size_t> h;
};

int cmd_generate(const GenerateArgs& args, Streams io) {
  Tree tree;
  if (args.shape == "fb") {
    if (!args.h || args.n) {
      throw UsageError("--shape fb takes --h (and not --n)");
    }
    if (*args.h >= 64 || (std::size_t{1} << *args.h) > kMaxGeneratedLeaves) {
      throw UsageError("--h " + std::to_string(*args.h) + " exceeds the output limit of " +
                       std::to_string(kMaxGeneratedLeaves) + " leaves");
    }
    tree = fully_balanced(*args.h);
  } else {
    if (!args.n || args.h) {
      throw UsageError("--shape " + args.shape + " takes --n (and not --h)");
    }
    if (*args.n < 1) {
      throw UsageError("--n must be at least 1; the empty tree has no Newick form");
    }
    if (*args.n > kMaxGeneratedLeaves) {
      throw UsageError("--n " + std::to_string(*args.n) + " exceeds the output limit of " +
                       std::to_string(kMaxGeneratedLeaves) + " leaves");
    }
    tree = args.shape == "echelon" ? echelon(*args.n) : caterpillar(*args.n);
  }
  io.out << write_newick(tree) << '\n';
  return kExitOk;
}

struct MaxValueArgs {
  std::size_t n = 0;
  std::string method = "recursive";
  int precision = 10;
};

int cmd_max_value(const MaxValueArgs& args, Streams io) {
  if (args.n < 1) {
    throw UsageError("--n must be at least 1");
  }
  const bool even = args.n % 2 == 0 && args.n >= 2;
  if (args.method == "even" && !even) {
    throw UsageError("--method even needs an even --n >= 2");
  }
  if (args.method == "recursive") {
    io.out << render(max_value_recursive(args.n), args.precision) << '\n';
    return kExitOk;
  }
  if (args.method == "closed") {
    io.out << render(max_value_closed(args.n), args.precision) << '\n';
    return kExitOk;
  }
  if (args.method == "even") {
    io.out << render(max_value_even_recursion(args.n), args.precision) << '\n';
    return kExitOk;
  }

  const Rational recursive = max_value_recursive(args.n);
  const Rational closed = max_value_closed(args.n);
  bool agree = recursive == closed;
  io.out << "recursive " << render(recursive, args.precision) << '\n';
  io.out << "closed " << render(closed, args.precision) << '\n';
  if (even) {
    const Rational halved = max_value_even_recursion(args.n);
    agree = agree && halved == recursive;
    io.out << "even " << render(halved, args.precision) << '\n';
  }
  if (!agree) {
    io.err << "error: formulas disagree for n = " << args.n << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::size_t max_n = 0;
  unsigned jobs = 0;
  int precision = 10;
};

const char* flag(bool value) { return value ? "true" : "false"; }

int cmd_verify(const VerifyArgs& args, Streams io) {
  const std::size_t bound = enumeration_bound();
  if (args.max_n < 2 || args.max_n > bound) {
    throw UsageError("--max-n must be in 2.." + std::to_string(bound) + ", got " +
                     std::to_string(args.max_n));
  }
  VerifyOptions options;
  options.bound = bound;
  options.jobs = args.jobs != 0 ? args.jobs : std::max(1U, std::thread::hardware_concurrency());

  std::size_t failures = 0;
  for (std::size_t n = 2; n <= args.max_n; ++n) {
    const ExtremalReport report = verify_extremal(n, options);
    const bool count_ok = count_shapes(n).count == report.shape_count;
    const bool formula_ok = report.max_value == max_value_recursive(n);
    const bool ok = report.all_hold() && count_ok && formula_ok;
    failures += ok ? 0 : 1;
    io.out << "n=" << n << " shapes=" << report.shape_count
           << " st2_max=" << render(report.max_value, args.precision)
           << " st2_min=" << render(report.min_value, args.precision)
           << " count_matches=" << flag(count_ok) << " max_matches_formula=" << flag(formula_ok)
           << " max_unique_echelon=" << flag(report.max_unique_and_is_echelon)
           << " min_unique_caterpillar=" << flag(report.min_unique_and_is_caterpillar)
           << " subtree_maximality=" << flag(report.subtree_maximality_holds) << '\n';
  }
  if (failures != 0) {
    io.out << "FAILED: " << failures << " of " << args.max_n - 1 << " leaf counts\n";
    return kExitCheckFailed;
  }
  io.out << "OK: all checks hold for n=2.." << args.max_n << '\n';
  return kExitOk;
}

struct TableArgs {
  std::size_t from = 0;
  std::size_t to = 0;
  std::string format = "csv";
  int precision = 10;
};

int cmd_table(const TableArgs& args, Streams io) {
  if (args.from < 1 || args.from > args.to || args.to > kMaxTableLeaves) {
    throw UsageError("need 1 <= --from <= --to <= " + std::to_string(kMaxTableLeaves));
  }
  const std::string sep = args.format == "csv" ? "," : args.format == "tsv" ? "\t" : " ";
  io.out << "n" << sep << "st2_max_exact" << sep << "st2_max_decimal" << '\n';
  for (std::size_t n = args.from; n <= args.to; ++n) {
    const Rational value = max_value_recursive(n);
    if (value != max_value_closed(n)) {
      io.err << "error: recursive and closed forms disagree at n = " << n << '\n';
      return kExitCheckFailed;
    }
    io.out << n << sep << value.to_string() << sep << value.to_decimal(args.precision) << '\n';
  }
  return kExitOk;
}

struct EnumerateArgs {
  std::size_t n = 0;
  bool count_only = false;
  bool emit_newick = false;
};

int cmd_enumerate(const EnumerateArgs& args, Streams io) {
  if (args.n < 1) {
    throw UsageError("--n must be at least 1");
  }
  if (args.emit_newick) {
    const std::size_t bound = enumeration_bound();
    if (args.n > bound) {
      throw UsageError("--n " + std::to_string(args.n) + " exceeds the enumeration bound " +
                       std::to_string(bound) + " (raise with TREEBALANCE_MAX_ENUM)");
    }
    for (const Shape& shape : enumerate_shapes(args.n, bound)) {
      io.out << write_newick(shape.tree) << '\n';
    }
    return kExitOk;
  }
  if (args.n > kMaxCountedLeaves) {
    throw UsageError("--n " + std::to_string(args.n) + " exceeds the counting limit " +
                     std::to_string(kMaxCountedLeaves));
  }
  io.out << count_shapes(args.n).count.get_str() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Exact stairs2 tree-balance computations on rooted binary trees", "treebalance"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "stairs2 index of a Newick tree");
  compute_cmd->add_option("input", compute.input, "Newick file, or - for stdin");
  compute_cmd->add_option("--method", compute.method)
      ->check(CLI::IsMember({"direct", "recursive", "both"}));
  compute_cmd->add_option("--precision", compute.precision, "significant digits")
      ->check(CLI::Range(1, 1000));

  GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "print a named tree family as Newick");
  generate_cmd->set_help_flag("--help", "Print this help message and exit");  // --h is height
  generate_cmd->add_option("--shape", generate.shape)
      ->required()
      ->check(CLI::IsMember({"echelon", "fb", "caterpillar"}));
  generate_cmd->add_option("--n", generate.n, "leaf count (echelon, caterpillar)");
  generate_cmd->add_option("--h", generate.h, "height (fb)");

  MaxValueArgs max_value;
  auto* max_value_cmd = app.add_subcommand("max-value", "maximum stairs2 value on n leaves");
  max_value_cmd->add_option("--n", max_value.n)->required();
  max_value_cmd->add_option("--method", max_value.method)
      ->check(CLI::IsMember({"recursive", "closed", "even", "all"}));
  max_value_cmd->add_option("--precision", max_value.precision)->check(CLI::Range(1, 1000));

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "exhaustively check the extremal trees for n = 2..max-n");
  verify_cmd->add_option("--max-n", verify.max_n)->required();
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads (default: all cores)");
  verify_cmd->add_option("--precision", verify.precision)->check(CLI::Range(1, 1000));

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "maximum stairs2 values for a range of n");
  table_cmd->add_option("--from", table.from)->required();
  table_cmd->add_option("--to", table.to)->required();
  table_cmd->add_option("--format", table.format)
      ->check(CLI::IsMember({"csv", "tsv", "plain"}));
  table_cmd->add_option("--precision", table.precision)->check(CLI::Range(1, 1000));

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "count or list all tree shapes");
  enumerate_cmd->add_option("--n", enumerate.n)->required();
  auto* count_flag = enumerate_cmd->add_flag("--count-only", enumerate.count_only);
  enumerate_cmd->add_flag("--emit-newick", enumerate.emit_newick)->excludes(count_flag);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute_cmd->parsed()) {
      return cmd_compute(compute, io);
    }
    if (generate_cmd->parsed()) {
      return cmd_generate(generate, io);
    }
    if (max_value_cmd->parsed()) {
      return cmd_max_value(max_value, io);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify, io);
    }
    if (table_cmd->parsed()) {
      return cmd_table(table, io);
    }
    return cmd_enumerate(enumerate, io);
  } catch (const NewickParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace treebalance::cli
