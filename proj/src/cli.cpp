#include "mdsgrs/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mdsgrs/error.hpp"
#include "mdsgrs/json_io.hpp"

namespace mdsgrs {

namespace {

bool is_usage_error(ErrorKind kind) {
  return kind == ErrorKind::InvalidArgument || kind == ErrorKind::NotPrime ||
         kind == ErrorKind::TooLarge || kind == ErrorKind::Parse;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    out *= base;
    if (out > kMaxFieldOrder) throw Error(ErrorKind::TooLarge, "field order too large");
  }
  return out;
}

std::vector<std::uint64_t> parse_list(const std::string& text, const char* flag) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.front() == '-')
      throw Error(ErrorKind::InvalidArgument, std::string("bad value '") + item + "' for " + flag);
    out.push_back(value);
  }
  return out;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  file << text;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

MdsOptions resolve_mds(const GrsCode& code, const VerifyOptions& options) {
  MdsOptions mds = options.mds;
  if (options.auto_mds)
    mds.mode = binomial(code.length(), code.k()) <= mds.budget ? MdsMode::Exact
                                                               : MdsMode::Randomized;
  return mds;
}

struct FieldArgs {
  std::optional<std::uint64_t> p, e, q, r, t, n, node_budget;

  std::optional<std::uint64_t> order() const {
    if (q) return q;
    if (p) return ipow(*p, e.value_or(1));
    return std::nullopt;
  }
};

void add_field_flags(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--p", args.p, "prime characteristic");
  cmd->add_option("--e", args.e, "extension degree (with --p)");
  cmd->add_option("--q", args.q, "field order");
  cmd->add_option("--r", args.r, "subfield order, q = r^2");
  cmd->add_option("--t", args.t, "number of coset pairs (theorem-3-5)");
  cmd->add_option("--n", args.n, "code length");
  cmd->add_option("--node-budget", args.node_budget, "square-set search node budget");
}

struct CellOutcome {
  std::string status;
  std::string detail;
  Json artifact;
};

CellOutcome run_cell(const SweepCell& cell, const VerifyOptions& options) {
  try {
    const ConstructionResult result = construct(cell.request);
    const VerificationReport report = verify_code(result.code, std::nullopt, options);
    return {report.overall() ? "pass" : "fail", "",
            Json{{"result", to_json(result)}, {"report", to_json(report)}}};
  } catch (const Error& err) {
    return {"no-code", err.what(), Json{{"error", err.what()}}};
  }
}

std::vector<SweepCell> family_grid(Family family, const std::vector<std::uint64_t>& qs,
                                   const std::vector<std::uint64_t>& rs,
                                   const std::vector<std::uint64_t>& ts,
                                   const std::vector<std::uint64_t>& ns, bool ns_given) {
  std::vector<SweepCell> cells;
  auto add = [&](std::uint64_t q, std::size_t n, ConstructionRequest req) {
    req.family = family;
    cells.push_back({family, req, q, n});
  };
  auto lengths = [&](std::uint64_t upto, auto&& admissible) {
    std::vector<std::uint64_t> out;
    if (ns_given) return ns;
    for (std::uint64_t n = 2; n <= upto; n += 2)
      if (admissible(n)) out.push_back(n);
    return out;
  };
  auto any = [](std::uint64_t) { return true; };

  switch (family) {
    case Family::EvenChar:
      for (auto q : qs)
        for (auto n : lengths(q, any)) add(q, n, {.q = q, .n = n});
      break;
    case Family::Extended:
      for (auto q : qs) add(q, q + 1, {.q = q});
      break;
    case Family::SquareSet:
    case Family::Auto:
      for (auto q : qs)
        for (auto n : ns) add(q, n, {.q = q, .n = n});
      break;
    case Family::SubfieldPoints:
      for (auto r : rs)
        for (auto n : lengths(r, any)) add(r * r, n, {.r = r, .n = n});
      break;
    case Family::RootsOfUnity:
      for (auto q : qs)
        for (auto n : lengths(q, [&](std::uint64_t n) { return (q - 1) % (n - 1) == 0; }))
          add(q, n, {.q = q, .n = n});
      break;
    case Family::CosetUnion:
      for (auto r : rs) {
        std::vector<std::uint64_t> tlist = ts;
        if (tlist.empty())
          for (std::uint64_t t = 1; 2 * t + 1 <= r; ++t) tlist.push_back(t);
        for (auto t : tlist) add(r * r, 2 * t * r, {.r = r, .t = t});
      }
      break;
  }
  return cells;
}

int cmd_construct(const FieldArgs& args, const std::string& family_name, const std::string& output,
                  std::ostream& out) {
  const auto family = family_from_string(family_name);
  if (!family) throw Error(ErrorKind::InvalidArgument, "unknown family '" + family_name + "'");
  ConstructionRequest req{*family, args.order(), args.r, args.t, args.n, args.node_budget};
  emit(to_json(construct(req)), output, out);
  return kExitOk;
}

int cmd_verify(const std::string& input, const VerifyOptions& options, const std::string& output,
               std::ostream& out) {
  const ParsedCode parsed = code_from_json(parse_json(read_input(input)));
  const VerificationReport report = verify_code(parsed.code, parsed.generator, options);
  emit(to_json(report), output, out);
  return report.overall() ? kExitOk : kExitVerifyFailed;
}

int cmd_search(const FieldArgs& args, const std::string& output, std::ostream& out) {
  const auto q = args.order();
  if (!q) throw Error(ErrorKind::InvalidArgument, "missing parameter q (or p)");
  if (!args.n) throw Error(ErrorKind::InvalidArgument, "missing parameter n");
  const Field field = make_field_of_order(*q);
  const Vec set = search_square_difference_set(field, *args.n, args.node_budget);
  emit(Json{{"field", to_json(*field)},
            {"q", *q},
            {"n", *args.n},
            {"set", to_json(*field, set)},
            {"indices", [&] {
               Json idx = Json::array();
               for (Felt x : set) idx.push_back(x.index);
               return idx;
             }()}},
       output, out);
  return kExitOk;
}

int cmd_sweep(const std::vector<SweepCell>& cells, const VerifyOptions& options,
              const std::string& out_dir, std::ostream& out) {
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  out << std::left << std::setw(8) << "q" << std::setw(6) << "n" << std::setw(18) << "family"
      << std::setw(10) << "status" << "time_ms\n";
  bool all_pass = true;
  for (const SweepCell& cell : cells) {
    const auto start = std::chrono::steady_clock::now();
    const CellOutcome outcome = run_cell(cell, options);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                        .count();
    all_pass = all_pass && outcome.status == "pass";
    out << std::left << std::setw(8) << cell.q << std::setw(6) << cell.n << std::setw(18)
        << to_string(cell.family) << std::setw(10) << outcome.status << std::fixed
        << std::setprecision(1) << ms;
    if (!outcome.detail.empty()) out << "  " << outcome.detail;
    out << "\n";
    if (!out_dir.empty()) {
      const std::string name = std::string(to_string(cell.family)) + "_q" +
                               std::to_string(cell.q) + "_n" + std::to_string(cell.n) + ".json";
      emit(outcome.artifact, (std::filesystem::path(out_dir) / name).string(), out);
    }
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

VerificationReport verify_code(const GrsCode& code, const std::optional<MatrixGF>& generator,
                               const VerifyOptions& options) {
  VerificationReport report;
  const MatrixGF expected = generator_matrix(code);
  const MatrixGF& g = generator ? *generator : expected;
  if (generator) {
    const bool same = *generator == expected;
    report.add({"generator_consistency", same ? CheckStatus::Pass : CheckStatus::Fail,
                CheckMode::Exact,
                same ? "stored generator matches alpha, v, k"
                     : "stored generator differs from the one defined by alpha, v, k",
                std::nullopt});
  }
  report.add(check_self_dual(g));

  const MdsOptions mds = resolve_mds(code, options);
  if (mds.mode == MdsMode::Structural)
    report.add(check_mds(code, mds));
  else
    report.add(check_mds(g, mds));

  if (options.dual_identity) {
    if (code.extended())
      report.add({"dual_identity", CheckStatus::Skipped, CheckMode::Exact,
                  "dual identity applies to plain codes only", std::nullopt});
    else
      report.add(check_dual_identity(code.field(), code.alpha(), code.k()));
  }
  return report;
}

std::vector<SweepCell> default_sweep_grid() {
  std::vector<SweepCell> cells;
  auto append = [&](std::vector<SweepCell> more) {
    cells.insert(cells.end(), more.begin(), more.end());
  };
  append(family_grid(Family::EvenChar, {4, 8, 16}, {}, {}, {}, false));
  append(family_grid(Family::Extended, {5, 7, 9, 13, 17, 25, 27}, {}, {}, {}, false));
  append(family_grid(Family::SubfieldPoints, {}, {3, 5, 7, 9}, {}, {}, false));
  append(family_grid(Family::RootsOfUnity, {9, 25, 49, 81}, {}, {}, {}, false));
  append(family_grid(Family::CosetUnion, {}, {3, 7}, {}, {}, false));
  append(family_grid(Family::SquareSet, {29}, {}, {}, {4}, true));
  return cells;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify MDS self-dual codes from generalized Reed-Solomon codes",
               "mdsgrs"};
  app.require_subcommand(1);

  FieldArgs field_args;
  std::string family = "auto";
  std::string output;
  auto* construct_cmd = app.add_subcommand("construct", "build a self-dual code and print it as JSON");
  add_field_flags(construct_cmd, field_args);
  construct_cmd->add_option("--family", family,
                            "even-char | extended | square-set | subfield-points | "
                            "roots-of-unity | theorem-3-5 | auto");
  construct_cmd->add_option("-o,--output", output, "write JSON here instead of stdout");

  std::string input = "-";
  VerifyOptions verify_options;
  std::string mds_mode = "auto";
  auto add_mds_flags = [&](CLI::App* cmd) {
    cmd->add_option("--mds-mode", mds_mode, "auto | exact | randomized | structural");
    cmd->add_option("--budget", verify_options.mds.budget, "exact MDS subset budget");
    cmd->add_option("--samples", verify_options.mds.samples, "randomized MDS samples");
    cmd->add_option("--seed", verify_options.mds.seed, "seed for randomized checks");
  };
  auto* verify_cmd = app.add_subcommand("verify", "check a code JSON file");
  verify_cmd->add_option("input", input, "code JSON path, or - for stdin");
  add_mds_flags(verify_cmd);
  verify_cmd->add_flag("--dual-identity", verify_options.dual_identity,
                       "also check the GRS dual identity");
  verify_cmd->add_option("-o,--output", output, "write the report here instead of stdout");

  FieldArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "find a square-difference set");
  search_cmd->add_option("--p", search_args.p, "prime characteristic");
  search_cmd->add_option("--e", search_args.e, "extension degree (with --p)");
  search_cmd->add_option("--q", search_args.q, "field order");
  search_cmd->add_option("--n", search_args.n, "set size");
  search_cmd->add_option("--node-budget", search_args.node_budget, "search node budget");
  search_cmd->add_option("-o,--output", output, "write JSON here instead of stdout");

  std::optional<std::string> sweep_family;
  std::string sweep_q, sweep_r, sweep_t, sweep_n, out_dir;
  bool sweep_n_given = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "construct and verify a grid of parameters");
  sweep_cmd->add_option("--family", sweep_family, "family to sweep (default: the full grid)");
  sweep_cmd->add_option("--q", sweep_q, "comma-separated field orders");
  sweep_cmd->add_option("--r", sweep_r, "comma-separated subfield orders");
  sweep_cmd->add_option("--t", sweep_t, "comma-separated t values (theorem-3-5)");
  auto* n_opt = sweep_cmd->add_option("--n", sweep_n, "comma-separated lengths");
  add_mds_flags(sweep_cmd);
  sweep_cmd->add_option("--out-dir", out_dir, "directory for per-cell JSON artifacts");

  std::vector<std::string> argv_store{"mdsgrs"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mds_mode == "auto") {
      verify_options.auto_mds = true;
    } else {
      verify_options.auto_mds = false;
      if (mds_mode == "exact") verify_options.mds.mode = MdsMode::Exact;
      else if (mds_mode == "randomized") verify_options.mds.mode = MdsMode::Randomized;
      else if (mds_mode == "structural") verify_options.mds.mode = MdsMode::Structural;
      else throw Error(ErrorKind::InvalidArgument, "unknown --mds-mode '" + mds_mode + "'");
    }

    if (*construct_cmd) return cmd_construct(field_args, family, output, out);
    if (*verify_cmd) return cmd_verify(input, verify_options, output, out);
    if (*search_cmd) return cmd_search(search_args, output, out);

    std::vector<SweepCell> cells;
    if (!sweep_family) {
      cells = default_sweep_grid();
    } else {
      const auto fam = family_from_string(*sweep_family);
      if (!fam) throw Error(ErrorKind::InvalidArgument, "unknown family '" + *sweep_family + "'");
      sweep_n_given = n_opt->count() > 0;
      cells = family_grid(*fam, parse_list(sweep_q, "--q"), parse_list(sweep_r, "--r"),
                          parse_list(sweep_t, "--t"), parse_list(sweep_n, "--n"), sweep_n_given);
    }
    return cmd_sweep(cells, verify_options, out_dir, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.kind()) ? kExitUsage : kExitNoCode;
  }
}

}  // namespace mdsgrs
