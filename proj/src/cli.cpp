#include "hypertrees/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "hypertrees/bipartite_codec.hpp"
#include "hypertrees/counting.hpp"
#include "hypertrees/errors.hpp"
#include "hypertrees/hypertree_codec.hpp"
#include "hypertrees/json_io.hpp"
#include "hypertrees/oracle.hpp"
#include "hypertrees/sampling.hpp"
#include "hypertrees/selftest.hpp"

namespace hypertrees {
namespace {

constexpr int kDefaultMaxN = 5;
constexpr int kDefaultMaxAb = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text, const char* flag) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    int value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw UsageError(std::string(flag) + " expects comma-separated integers, got \"" + text + "\"");
    }
    values.push_back(value);
    start = end + 1;
  }
  return values;
}

std::optional<std::vector<int>> parse_optional_list(const std::optional<std::string>& text,
                                                    const char* flag) {
  if (!text) return std::nullopt;
  return parse_list(*text, flag);
}

int require(const std::optional<int>& value, const char* flag) {
  if (!value) throw UsageError(std::string(flag) + " is required");
  return *value;
}

void require_match(const std::optional<int>& given, int derived, const char* flag) {
  if (given && *given != derived) {
    throw Error(ErrorKind::ProfileMismatch, std::string(flag) + " = " + std::to_string(*given) +
                                                " contradicts the profile, which implies " +
                                                std::to_string(derived));
  }
}

// One JSON document, or several JSON documents one per line.
std::vector<Json> read_documents(const std::optional<std::string>& path, std::istream& in) {
  std::string text;
  if (path) {
    std::ifstream file(*path);
    if (!file) throw UsageError("cannot open " + *path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return {Json::parse(text)};
  } catch (const nlohmann::json::parse_error&) {
  }
  std::vector<Json> documents;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    documents.push_back(parse_json(line));
  }
  if (documents.empty()) throw Error(ErrorKind::MalformedInput, "no JSON input");
  return documents;
}

void warn_if_large(int requested, int default_bound, const char* flag, std::ostream& err) {
  if (requested > default_bound) {
    err << "warning: " << flag << " " << requested << " exceeds the default bound "
        << default_bound << "; exhaustive enumeration may take a long time\n";
  }
}

struct Options {
  std::optional<int> n, k, a, b;
  std::optional<std::string> lambda, mu, alpha, beta, input;
  bool weighted = false;
  bool probability = false;
  std::uint64_t seed = 0;
  int count = 1;
  int max_n = kDefaultMaxN;
  int max_ab = kDefaultMaxAb;
};

void run_count(const Options& opt, std::ostream& out) {
  const auto lambda_parts = parse_optional_list(opt.lambda, "--lambda");
  const auto mu_values = parse_optional_list(opt.mu, "--mu");
  if (lambda_parts) {
    const SizePartition lambda(*lambda_parts);
    require_match(opt.n, lambda.n(), "--n");
    require_match(opt.k, lambda.k(), "--k");
    if (mu_values) {
      const DegreeVector mu{*mu_values};
      if (opt.probability) {
        out << dump(to_json(size_profile_probability(lambda, lambda.n(), lambda.k()) *
                            degree_profile_probability(mu, lambda.n(), lambda.k())))
            << '\n';
      } else {
        out << count_hypertrees(lambda, mu) << '\n';
      }
    } else if (opt.probability) {
      out << dump(to_json(size_profile_probability(lambda, lambda.n(), lambda.k()))) << '\n';
    } else {
      out << count_hypertrees_by_sizes(lambda) << '\n';
    }
    return;
  }
  if (mu_values) {
    const DegreeVector mu{*mu_values};
    const int n = static_cast<int>(mu.mu.size()) - 1;
    require_match(opt.n, n, "--n");
    const int k = opt.k ? *opt.k : mu.total() + 1;
    const Probability p = degree_profile_probability(mu, n, k);
    if (opt.probability) {
      out << dump(to_json(p)) << '\n';
    } else {
      out << stirling2(n, k) * multinomial(k - 1, mu.mu) << '\n';
    }
    return;
  }
  const int n = require(opt.n, "--n");
  const int k = require(opt.k, "--k");
  if (opt.probability) throw UsageError("--probability needs --lambda or --mu");
  out << (opt.weighted ? weighted_total(n, k) : count_hypertrees_total(n, k)) << '\n';
}

void run_bipartite_count(const Options& opt, std::ostream& out) {
  const auto alpha = parse_optional_list(opt.alpha, "--alpha");
  const auto beta = parse_optional_list(opt.beta, "--beta");
  if (alpha && beta) {
    require_match(opt.a, static_cast<int>(alpha->size()) - 1, "--a");
    require_match(opt.b, static_cast<int>(beta->size()) - 1, "--b");
    out << count_bipartite(*alpha, *beta) << '\n';
  } else if (alpha) {
    const int a = static_cast<int>(alpha->size()) - 1;
    const int b = std::accumulate(alpha->begin(), alpha->end(), 0);
    require_match(opt.a, a, "--a");
    require_match(opt.b, b, "--b");
    out << multinomial(b, *alpha) * pow(BigCount(b + 1), static_cast<unsigned>(a)) << '\n';
  } else if (beta) {
    const int b = static_cast<int>(beta->size()) - 1;
    const int a = std::accumulate(beta->begin(), beta->end(), 0);
    require_match(opt.a, a, "--a");
    require_match(opt.b, b, "--b");
    out << multinomial(a, *beta) * pow(BigCount(a + 1), static_cast<unsigned>(b)) << '\n';
  } else {
    out << count_bipartite_total(require(opt.a, "--a"), require(opt.b, "--b")) << '\n';
  }
}

void run_sample(const Options& opt, std::ostream& out) {
  SeedStream rng(opt.seed);
  const auto lambda_parts = parse_optional_list(opt.lambda, "--lambda");
  const auto mu_values = parse_optional_list(opt.mu, "--mu");
  std::optional<DegreeVector> mu;
  if (mu_values) mu = DegreeVector{*mu_values};
  if (lambda_parts) {
    const SizePartition lambda(*lambda_parts);
    require_match(opt.n, lambda.n(), "--n");
    require_match(opt.k, lambda.k(), "--k");
    for (int i = 0; i < opt.count; ++i) out << dump(to_json(sample_hypertree(lambda, mu, rng))) << '\n';
    return;
  }
  if (mu) throw UsageError("--mu needs --lambda when sampling");
  const int n = require(opt.n, "--n");
  const int k = require(opt.k, "--k");
  for (int i = 0; i < opt.count; ++i) out << dump(to_json(sample_hypertree(n, k, rng))) << '\n';
}

void run_bipartite_sample(const Options& opt, std::ostream& out) {
  SeedStream rng(opt.seed);
  const auto alpha = parse_optional_list(opt.alpha, "--alpha");
  const auto beta = parse_optional_list(opt.beta, "--beta");
  int a = alpha ? static_cast<int>(alpha->size()) - 1 : beta ? std::accumulate(beta->begin(), beta->end(), 0) : require(opt.a, "--a");
  int b = beta ? static_cast<int>(beta->size()) - 1 : alpha ? std::accumulate(alpha->begin(), alpha->end(), 0) : require(opt.b, "--b");
  require_match(opt.a, a, "--a");
  require_match(opt.b, b, "--b");
  for (int i = 0; i < opt.count; ++i) {
    out << dump(to_json(sample_bipartite_tree(a, b, alpha, beta, rng))) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app("Hypertree and bipartite tree codecs, counts and samplers", "hypertrees");
  app.require_subcommand(1);
  Options opt;

  auto* count = app.add_subcommand("count", "Count hypertrees on {0..n}");
  count->add_option("--n", opt.n, "Largest vertex label");
  count->add_option("--k", opt.k, "Number of hyperedges");
  count->add_option("--lambda", opt.lambda, "Hyperedge sizes minus one, e.g. 2,1");
  count->add_option("--mu", opt.mu, "Vertex degrees minus one, e.g. 0,1,0,0");
  count->add_flag("--weighted", opt.weighted, "Sum of prod (lambda_j - 1)! instead of a count");
  count->add_flag("--probability", opt.probability, "Print the profile probability as a fraction");

  auto* bcount = app.add_subcommand("bipartite-count", "Count labelled bipartite trees");
  bcount->add_option("--a", opt.a, "Largest U index");
  bcount->add_option("--b", opt.b, "Largest V index");
  bcount->add_option("--alpha", opt.alpha, "U degrees minus one");
  bcount->add_option("--beta", opt.beta, "V degrees minus one");

  auto* enc = app.add_subcommand("encode", "Hypertree JSON to code JSON");
  auto* dec = app.add_subcommand("decode", "Code JSON to hypertree JSON");
  auto* benc = app.add_subcommand("bip-encode", "Bipartite tree JSON to code JSON");
  auto* bdec = app.add_subcommand("bip-decode", "Bipartite code JSON to tree JSON");
  for (auto* sub : {enc, dec, benc, bdec}) {
    sub->add_option("input", opt.input, "Input file (default: standard input)");
  }

  auto* sample = app.add_subcommand("sample", "Uniform random hypertrees as JSON lines");
  sample->add_option("--n", opt.n, "Largest vertex label");
  sample->add_option("--k", opt.k, "Number of hyperedges");
  sample->add_option("--lambda", opt.lambda, "Hyperedge sizes minus one");
  sample->add_option("--mu", opt.mu, "Vertex degrees minus one");

  auto* bsample = app.add_subcommand("bip-sample", "Uniform random bipartite trees as JSON lines");
  bsample->add_option("--a", opt.a, "Largest U index");
  bsample->add_option("--b", opt.b, "Largest V index");
  bsample->add_option("--alpha", opt.alpha, "U degrees minus one");
  bsample->add_option("--beta", opt.beta, "V degrees minus one");
  for (auto* sub : {sample, bsample}) {
    sub->add_option("--seed", opt.seed, "64-bit seed")->capture_default_str();
    sub->add_option("--count", opt.count, "Number of samples")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  }

  auto* enumerate = app.add_subcommand("enumerate", "All hypertrees as JSON lines");
  enumerate->add_option("--n", opt.n, "Largest vertex label")->required();
  enumerate->add_option("--k", opt.k, "Number of hyperedges")->required();
  enumerate->add_option("--max-n", opt.max_n, "Enumeration bound")->capture_default_str();

  auto* benumerate = app.add_subcommand("bip-enumerate", "All spanning trees of K_{a+1,b+1}");
  benumerate->add_option("--a", opt.a, "Largest U index")->required();
  benumerate->add_option("--b", opt.b, "Largest V index")->required();
  benumerate->add_option("--max-ab", opt.max_ab, "Enumeration bound")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Certify formulas and codecs by enumeration");
  selftest->add_option("--max-n", opt.max_n, "Hypertree bound")->capture_default_str();
  selftest->add_option("--max-ab", opt.max_ab, "Bipartite bound")->capture_default_str();

  auto* identity = app.add_subcommand("identity", "Both sides of the splitting identity");
  identity->add_option("--n", opt.n, "n >= 1")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitUsage;
  }

  try {
    if (*count) {
      run_count(opt, out);
    } else if (*bcount) {
      run_bipartite_count(opt, out);
    } else if (*enc) {
      for (const auto& doc : read_documents(opt.input, in)) {
        out << dump(to_json(encode(validate_hypertree(hypergraph_from_json(doc))))) << '\n';
      }
    } else if (*dec) {
      for (const auto& doc : read_documents(opt.input, in)) {
        out << dump(to_json(decode(hypertree_code_from_json(doc)))) << '\n';
      }
    } else if (*benc) {
      for (const auto& doc : read_documents(opt.input, in)) {
        out << dump(to_json(encode_bipartite(bipartite_tree_from_json(doc)))) << '\n';
      }
    } else if (*bdec) {
      for (const auto& doc : read_documents(opt.input, in)) {
        out << dump(to_json(decode_bipartite(bipartite_code_from_json(doc)))) << '\n';
      }
    } else if (*sample) {
      run_sample(opt, out);
    } else if (*bsample) {
      run_bipartite_sample(opt, out);
    } else if (*enumerate) {
      warn_if_large(opt.max_n, kDefaultMaxN, "--max-n", err);
      for_each_hypertree(
          *opt.n, *opt.k, [&](const Hypertree& t) { out << dump(to_json(t)) << '\n'; },
          {opt.max_n, kDefaultMaxAb});
    } else if (*benumerate) {
      warn_if_large(opt.max_ab, kDefaultMaxAb, "--max-ab", err);
      for_each_bipartite_tree(
          *opt.a, *opt.b, [&](const BipartiteTree& t) { out << dump(to_json(t)) << '\n'; },
          {kDefaultMaxN, opt.max_ab});
    } else if (*selftest) {
      warn_if_large(opt.max_n, kDefaultMaxN, "--max-n", err);
      warn_if_large(opt.max_ab, kDefaultMaxAb, "--max-ab", err);
      const SelftestOutcome outcome = run_selftest({opt.max_n, opt.max_ab});
      out << dump(outcome.report) << '\n';
      return outcome.passed ? kExitOk : kExitSelftestFailed;
    } else if (*identity) {
      const IdentitySides sides = split_identity_check(*opt.n);
      Json json;
      json["n"] = *opt.n;
      json["lhs"] = sides.lhs.str();
      json["rhs"] = sides.rhs.str();
      out << dump(json) << '\n';
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace hypertrees
