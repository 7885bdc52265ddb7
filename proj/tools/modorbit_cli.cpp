// modorbit: command-line front end for the orbit library.
//
// Exit codes: 0 success, 1 verification mismatch or internal defect,
// 2 invalid input, 3 overflow or search cap exhausted.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "modorbit/modorbit.hpp"
#include "modorbit/report.hpp"

namespace {

using namespace modorbit;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInvalid = 2;
constexpr int kOverflowOrCap = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return kOverflowOrCap;
    case ErrorCode::NonSquareFreeN:
    case ErrorCode::ZeroDenominator:
    case ErrorCode::NotInSet:
    case ErrorCode::OutOfRange:
    case ErrorCode::AlreadyInH:
    case ErrorCode::ParseError: return kInvalid;
    case ErrorCode::InternalInvariantBroken:
    case ErrorCode::RelationViolation:
    case ErrorCode::NonIntegralSum:
    case ErrorCode::CycleGroupingFailure: return kMismatch;
  }
  return kMismatch;
}

std::string line(const Element& e) { return display(e) + " [" + to_string(classify(e)) + "]"; }

/// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Options {
  long long n = 0;
  long long from = 1;
  long long to = 1;
  long long a = 0;
  long long c = 1;
  long long to_a = 0;
  long long to_c = 1;
  std::string method = "formula";
  std::string emit = "text";
  std::string word;
  std::string group = "H";
  std::string out;
  std::size_t cap = SearchOptions{}.cap;
  std::size_t probes = 0;
  std::uint64_t seed = 20240601;
};

int cmd_count(const Options& o) {
  const Int n = o.n;
  if (!is_square_free(n)) throw Error(ErrorCode::NonSquareFreeN, "n = " + to_string(n));
  Int value = 0;
  if (o.method == "formula") {
    value = count_h_orbits_formula(n);
  } else if (o.method == "oracle") {
    value = count_h_orbits_oracle(n);
  } else {
    value = count_h_orbits_legacy(n);
  }
  std::cout << to_string(value) << '\n';
  return kOk;
}

/// Runs the splitting check for every unit of n; returns false on any
/// inconsistency.
bool check_splitting(Int n, const Options& o, std::ostream& log) {
  WordSampler sampler(o.seed ^ static_cast<std::uint64_t>(n));
  std::vector<GWord> probes;
  for (std::size_t i = 0; i < o.probes; ++i) probes.push_back(sampler.g_word());
  bool ok = true;
  for (const auto& unit : special_units(n)) {
    if (self_paired(unit)) continue;
    const SplitEvidence ev = gather_split_evidence(unit, probes, SearchOptions{o.cap});
    if (!ev.consistent()) {
      ok = false;
      log << "split check failed for n=" << to_string(n) << " unit " << display(representative(unit))
          << ": beta_side=" << ev.beta_side << " x_beta_side=" << ev.x_beta_side << " unverified=" << ev.unverified
          << " search=" << to_string(ev.beta_to_x_beta.outcome) << '\n';
    }
  }
  return ok;
}

int cmd_verify(const Options& o) {
  const auto records = sweep(o.from, o.to);
  Sink sink(o.out);
  auto& out = sink.stream();
  if (o.emit == "json") {
    out << to_json(records).dump(2) << '\n';
  } else if (o.emit == "csv") {
    write_csv(out, records);
  } else {
    write_text(out, records);
  }
  bool ok = std::all_of(records.begin(), records.end(), [](const RunRecord& r) { return r.ok(); });
  if (o.probes > 0) {
    for (const auto& r : records) ok = check_splitting(r.n, o, std::cerr) && ok;
  }
  return ok ? kOk : kMismatch;
}

int cmd_enumerate_units(const Options& o) {
  const auto units = special_units(o.n);
  Sink sink(o.out);
  auto& out = sink.stream();
  if (o.emit == "json") {
    out << units_to_json(o.n, units).dump(2) << '\n';
    return kOk;
  }
  for (const auto& unit : units) {
    if (const auto* pair = std::get_if<NormZeroPair>(&unit)) {
      out << "norm-zero pair: " << display(pair->beta);
      if (!pair->self_paired()) out << " <-> " << display(pair->x_beta);
      out << '\n';
    } else {
      out << "positive cycle:";
      for (const auto& e : std::get<PositiveCycle>(unit).cycle.members) out << ' ' << display(e);
      out << '\n';
    }
  }
  out << "G-orbits: " << units.size() << ", H-orbits: " << to_string(count_h_orbits_oracle(o.n)) << '\n';
  return kOk;
}

int cmd_act(const Options& o) {
  Element e = make_element(o.a, o.c, o.n);
  const Letters letters = parse_letters(o.word);
  std::cout << "start " << line(e) << '\n';
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    e = apply_generator(*it, e);
    std::cout << to_string(*it) << " -> " << line(e) << '\n';
  }
  return kOk;
}

int cmd_classify(const Options& o) {
  const Element e = make_element(o.a, o.c, o.n);
  std::cout << line(e) << " b=" << to_string(e.b()) << '\n';
  return kOk;
}

int cmd_reduce_word(const Options& o) {
  const GWord w = parse_g_word(o.word);
  if (is_in_h(w)) {
    const HWord h = *g_to_h(w);
    std::cout << to_string(h) << " | in H";
    if (!h.is_identity()) std::cout << " | class " << to_string(h.classification().tag);
    if (to_string(h) != to_string(w)) std::cout << " | G: " << to_string(w);
  } else {
    std::cout << to_string(w) << " | not in H | x-reduce: " << to_string(x_reduce(w));
  }
  std::cout << '\n';
  return kOk;
}

int cmd_search(const Options& o) {
  const Element start = make_element(o.a, o.c, o.n);
  const Element target = make_element(o.to_a, o.to_c, o.n);
  const std::span<const Generator> gens =
      o.group == "G" ? std::span<const Generator>(kGGenerators) : std::span<const Generator>(kHGenerators);
  const SearchResult r = bounded_search(start, target, gens, SearchOptions{o.cap});
  if (!r.found()) {
    std::cout << "not found (" << to_string(r.outcome) << " after " << r.expanded << " nodes; inconclusive)\n";
    return kOverflowOrCap;
  }
  std::cout << to_string(r.path) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits of the modular group and its subgroup <y, v> on Q*(sqrt(-n))"};
  app.require_subcommand(1);
  Options o;

  auto add_element = [&o](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "square-free field parameter")->required();
    cmd->add_option("--a", o.a, "numerator shift a")->required();
    cmd->add_option("--c", o.c, "denominator c")->required();
  };

  auto* count = app.add_subcommand("count", "number of H-orbits");
  count->add_option("--n", o.n)->required();
  count->add_option("--method", o.method)->check(CLI::IsMember({"formula", "oracle", "legacy"}));

  auto* verify = app.add_subcommand("verify", "sweep formula against oracle over square-free n");
  verify->add_option("--from", o.from)->required();
  verify->add_option("--to", o.to)->required();
  verify->add_option("--emit", o.emit)->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", o.out);
  verify->add_option("--probes", o.probes, "random probe words per unit for the splitting check (0 = off)");
  verify->add_option("--seed", o.seed, "probe seed")->capture_default_str();
  verify->add_option("--cap", o.cap, "node budget of the negative H-search")->capture_default_str();

  auto* units = app.add_subcommand("enumerate-units", "list norm-zero pairs and totally positive y-cycles");
  units->add_option("--n", o.n)->required();
  units->add_option("--emit", o.emit)->check(CLI::IsMember({"json", "text"}));
  units->add_option("--out", o.out);

  auto* act = app.add_subcommand("act", "apply a word, rightmost letter first");
  add_element(act);
  act->add_option("--word", o.word)->required();

  auto* cls = app.add_subcommand("classify", "sign class of an element");
  add_element(cls);

  auto* reduce = app.add_subcommand("reduce-word", "normal form, H-membership and x-reduction");
  reduce->add_option("word", o.word)->required();

  auto* search = app.add_subcommand("search", "bounded best-first search for a connecting word");
  add_element(search);
  search->add_option("--to-a", o.to_a)->required();
  search->add_option("--to-c", o.to_c)->required();
  search->add_option("--group", o.group)->check(CLI::IsMember({"G", "H"}));
  search->add_option("--cap", o.cap)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*count) return cmd_count(o);
    if (*verify) return cmd_verify(o);
    if (*units) return cmd_enumerate_units(o);
    if (*act) return cmd_act(o);
    if (*cls) return cmd_classify(o);
    if (*reduce) return cmd_reduce_word(o);
    if (*search) return cmd_search(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kInvalid;
}
