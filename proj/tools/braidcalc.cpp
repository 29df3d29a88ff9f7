#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>

#include "braidcalc/braiding.hpp"
#include "braidcalc/error.hpp"
#include "braidcalc/json_io.hpp"
#include "braidcalc/lmove.hpp"
#include "braidcalc/random.hpp"
#include "braidcalc/search.hpp"
#include "braidcalc/temperley_lieb.hpp"

using namespace braidcalc;

namespace {

// sysexits.h values
constexpr int kUsage = 64;
constexpr int kDataErr = 65;
constexpr int kNoInput = 66;
constexpr int kSoftware = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

using Input = std::variant<BraidWord, ParsedDiagram>;

// Braid text starts with "B<n>:", JSON with '{'; anything else is a diagram.
Input read_input(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (line[start] == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, e.what());
      }
      if (j.is_object() && j.contains("letters")) return braid_from_json(j);
      return diagram_from_json(j);
    }
    if (line[start] == 'B') return parse_braid(text);
    break;
  }
  return parse_diagram(text);
}

BraidWord read_braid(const std::string& path) {
  auto in = read_input(path);
  if (auto* w = std::get_if<BraidWord>(&in)) return *w;
  throw UsageError(path + ": expected a braid word, got a diagram");
}

ParsedDiagram read_diagram(const std::string& path) {
  auto in = read_input(path);
  if (auto* d = std::get_if<ParsedDiagram>(&in)) return *d;
  throw UsageError(path + ": expected a diagram, got a braid word");
}

OrientedDiagram oriented(const ParsedDiagram& p) {
  return {p.diagram, p.orientation ? *p.orientation : orient(p.diagram)};
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.images[i] + 1);
  }
  return out;
}

std::string invariant(const std::string& name, const Input& in) {
  if (const auto* w = std::get_if<BraidWord>(&in)) {
    if (name == "jones") return normalized_jones(*w).to_string_half("q");
    if (name == "bracket") {
      if (w->strands() <= kDefaultTLStrandCap) return bracket_via_tl(*w).to_string("A");
      return kauffman_bracket_transfer(closure(*w)).to_string("A");
    }
    if (name == "components") return std::to_string(closure_components(*w));
    if (name == "writhe" || name == "expsum") return std::to_string(exponent_sum(*w));
    return format_permutation(permutation(*w));
  }
  const OrientedDiagram d = oriented(std::get<ParsedDiagram>(in));
  if (name == "jones") return jones(d.diagram, d.orientation).to_string_half("q");
  if (name == "bracket") return kauffman_bracket_transfer(d.diagram).to_string("A");
  if (name == "components") return std::to_string(components(d.diagram));
  if (name == "writhe") return std::to_string(writhe(d.diagram, d.orientation));
  throw UsageError("invariant " + name + " needs a braid word");
}

int exit_code(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return 0;
    case SearchOutcome::not_equivalent: return 1;
    case SearchOutcome::exhausted: return 2;
  }
  return kSoftware;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid words, Morse diagrams, L-moves and invariant checks"};
  app.require_subcommand(1);
  int status = 0;

  std::string validate_in;
  auto* validate = app.add_subcommand("validate", "Parse a braid or diagram and report its shape");
  validate->add_option("input", validate_in, "File, or - for stdin")->required();
  validate->callback([&] {
    const auto in = read_input(validate_in);
    if (const auto* w = std::get_if<BraidWord>(&in)) {
      std::cout << "braid strands=" << w->strands() << " letters=" << w->length() << "\n";
    } else {
      const auto& d = std::get<ParsedDiagram>(in).diagram;
      std::cout << "diagram events=" << d.events.size() << " crossings=" << d.crossing_count()
                << " components=" << components(d) << "\n";
    }
  });

  std::string braid_in, algorithm = "lr";
  bool canon = false;
  auto* braid = app.add_subcommand("braid", "Turn a diagram into a braid word");
  braid->add_option("--algorithm", algorithm, "lr or kl")->check(CLI::IsMember({"lr", "kl"}));
  braid->add_flag("--canonicalize", canon, "Free reduce and destabilize the result");
  braid->add_option("input", braid_in, "Diagram file, or - for stdin")->required();
  braid->callback([&] {
    const auto d = oriented(read_diagram(braid_in));
    BraidWord w = to_braid(d, algorithm == "kl" ? BraidingAlgorithm::kl : BraidingAlgorithm::lr);
    if (canon) w = canonicalize(w);
    std::cout << format_braid(w) << "\n";
  });

  std::string closure_in;
  auto* close = app.add_subcommand("closure", "Closure diagram of a braid word");
  close->add_option("input", closure_in, "Braid file, or - for stdin")->required();
  close->callback([&] { std::cout << format_diagram(closure(read_braid(closure_in))); });

  std::string kind, sign, split, col, lmove_in;
  auto* lmove = app.add_subcommand("lmove", "Apply one L-move: over|under +|- split=K col=I");
  lmove->add_option("kind", kind)->required()->check(CLI::IsMember({"over", "under"}));
  lmove->add_option("sign", sign)->required()->check(CLI::IsMember({"+", "-"}));
  lmove->add_option("split", split, "split=K")->required();
  lmove->add_option("column", col, "col=I")->required();
  lmove->add_option("input", lmove_in, "Braid file, or - for stdin")->required();
  lmove->callback([&] {
    LMoveSpec spec;
    try {
      spec = parse_lmove_spec(kind + " " + sign + " " + split + " " + col);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    const BraidWord w = read_braid(lmove_in);
    if (!lmove_spec_valid(w, spec)) throw UsageError(format_lmove_spec(spec) + " does not fit " + format_braid(w));
    std::cout << format_braid(apply_lmove(w, spec)) << "\n";
  });

  std::string inv_name, inv_in;
  auto* inv = app.add_subcommand("invariant", "Print an invariant of a braid closure or diagram");
  inv->add_option("name", inv_name)
      ->required()
      ->check(CLI::IsMember({"jones", "bracket", "components", "writhe", "perm", "expsum"}));
  inv->add_option("input", inv_in, "File, or - for stdin")->required();
  inv->callback([&] { std::cout << invariant(inv_name, read_input(inv_in)) << "\n"; });

  std::string moves = "markov", first, second;
  SearchBudget budget;
  auto* equiv = app.add_subcommand("equiv", "Bounded search for a move sequence between two braids");
  equiv->add_option("--moves", moves, "markov or lmove")->check(CLI::IsMember({"markov", "lmove"}));
  equiv->add_option("--budget", budget.max_states, "Maximum stored states")->check(CLI::PositiveNumber);
  equiv->add_option("--extra-strands", budget.extra_strands, "Strands allowed above the inputs")
      ->check(CLI::NonNegativeNumber);
  equiv->add_option("--extra-length", budget.extra_length, "Letters allowed above the inputs");
  equiv->add_option("first", first, "Braid file, or - for stdin")->required();
  equiv->add_option("second", second, "Braid file")->required();
  equiv->callback([&] {
    if (first == "-" && second == "-") throw UsageError("only one input can come from stdin");
    const auto r = equivalent_bounded(read_braid(first), read_braid(second),
                                      moves == "lmove" ? MoveSet::lmove : MoveSet::markov, budget);
    std::cout << search_report_to_json(r).dump(2) << "\n";
    status = exit_code(r.outcome);
  });

  std::string gen_kind;
  std::uint64_t seed = 1;
  int size = 8, strands = 3, width = 6;
  auto* gen = app.add_subcommand("gen", "Seeded random braid word or diagram");
  gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"braid", "diagram"}));
  gen->add_option("--seed", seed, "mt19937_64 seed");
  gen->add_option("--size", size, "Letters of a braid, maximum crossings of a diagram")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--strands", strands, "Strands of a braid")->check(CLI::Range(2, 64));
  gen->add_option("--width", width, "Maximum width of a diagram")->check(CLI::Range(2, 64));
  gen->callback([&] {
    Rng rng(seed);
    if (gen_kind == "braid") {
      std::cout << format_braid(random_braid(rng, strands, static_cast<std::size_t>(size))) << "\n";
    } else {
      RandomDiagramOptions options;
      options.max_crossings = size;
      options.max_width = width;
      options.max_events = static_cast<std::size_t>(5 * size + 8);
      std::cout << format_diagram(random_diagram(rng, options));
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoInput;
  } catch (const ParseError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kDataErr;
  } catch (const Error& e) {
    const bool internal = e.code() == ErrorCode::ContractViolation || e.code() == ErrorCode::Overflow;
    std::cerr << (internal ? "internal error: " : "error: ") << e.what() << "\n";
    return internal ? kSoftware : kDataErr;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kSoftware;
  }
  return status;
}
