#include "treesplit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "treesplit/baseline.hpp"
#include "treesplit/generators.hpp"
#include "treesplit/io.hpp"
#include "treesplit/rng.hpp"
#include "treesplit/splitter.hpp"

namespace treesplit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double elapsed_us(Clock::time_point t0, Clock::time_point t1) {
  return std::chrono::duration<double, std::micro>(t1 - t0).count();
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_uint(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const auto* begin = text.data();
  const auto* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  return value;
}

VertexId resolve_start(const std::string& start, const WeightedTree& t,
                       std::uint64_t seed) {
  if (start == "improved") return improved_start(t);
  if (start == "random") {
    Xoshiro256ss rng(seed);
    return static_cast<VertexId>(rng.below(t.vertex_count()));
  }
  const std::uint64_t id = parse_uint(start, "start vertex");
  if (id >= t.vertex_count())
    throw UsageError("start vertex " + start + " out of range");
  return static_cast<VertexId>(id);
}

WeightSpec parse_weight_spec(const std::string& text, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  try {
    if (parts.size() == 2 && parts[0] == "const")
      return WeightSpec::constant(static_cast<Weight>(parse_uint(parts[1], "weight")));
    if (parts.size() == 3 && parts[0] == "uniform")
      return WeightSpec::uniform(static_cast<Weight>(parse_uint(parts[1], "weight")),
                                 static_cast<Weight>(parse_uint(parts[2], "weight")),
                                 seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("invalid weight spec '" + text +
                   "' (expected const:<c> or uniform:<lo>:<hi>)");
}

std::string trace_action(const Classification& c) {
  if (std::holds_alternative<FoundCut>(c)) return "found";
  if (std::holds_alternative<DescendStep>(c)) return "descend";
  return "not_splittable";
}

void print_trace(const WeightedTree& t, const CutResult& result,
                 const std::string& format, std::ostream& out) {
  const std::uint32_t scale = t.scale_exponent();
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const TraceStep& step = result.trace[i];
    if (format == "structured") {
      ordered_json row;
      row["record"] = "trace";
      row["step"] = i + 1;
      row["vertex"] = step.vertex;
      row["action"] = trace_action(step.outcome);
      if (const auto* f = std::get_if<FoundCut>(&step.outcome)) {
        row["edge_u"] = f->edge.u;
        row["edge_v"] = f->edge.v;
        row["side_weight"] = format_scaled_decimal(f->side_weight, scale);
      } else if (const auto* d = std::get_if<DescendStep>(&step.outcome)) {
        row["next"] = d->next;
        row["component_weight"] = format_scaled_decimal(d->component_weight, scale);
      } else {
        row["witness"] = std::get<NoSplitWitness>(step.outcome).witness;
      }
      out << row.dump() << "\n";
    } else {
      out << "step " << (i + 1) << ": vertex " << step.vertex;
      if (const auto* f = std::get_if<FoundCut>(&step.outcome)) {
        out << " found edge (" << f->edge.u << "," << f->edge.v << "), side "
            << format_scaled_decimal(f->side_weight, scale);
      } else if (const auto* d = std::get_if<DescendStep>(&step.outcome)) {
        out << " descend -> " << d->next << " (component "
            << format_scaled_decimal(d->component_weight, scale) << ")";
      } else {
        out << " not splittable (witness "
            << std::get<NoSplitWitness>(step.outcome).witness << ")";
      }
      out << "\n";
    }
  }
}

}  // namespace

int run_split(const SplitOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const WeightedTree t = load_tree_file(options.input);
    const Weight doubled_eps =
        parse_doubled_epsilon(options.epsilon, t.scale_exponent());
    const ToleranceWindow win = ToleranceWindow::for_tree(t, doubled_eps);
    const std::uint32_t scale = t.scale_exponent();

    std::string verdict;
    ordered_json record;
    record["record"] = "result";

    if (options.method == "descent" || options.method == "literal") {
      const VertexId start = resolve_start(options.start, t, options.seed);
      const auto t0 = Clock::now();
      const CutResult result = options.method == "descent"
                                   ? find_cut_edge_descent(t, win, start)
                                   : find_cut_edge_literal(t, win, start);
      const auto t1 = Clock::now();

      if (options.trace) print_trace(t, result, options.format, out);

      if (const SplitVerdict* split = result.split()) {
        if (!is_cut_edge(t, split->edge, win)) {
          err << "internal error: reported edge fails the cut test\n";
          return kExitInternal;
        }
        verdict = "split";
        record["verdict"] = verdict;
        record["edge_u"] = split->edge.u;
        record["edge_v"] = split->edge.v;
        record["w1"] = format_scaled_decimal(split->w1, scale);
        record["w2"] = format_scaled_decimal(split->w2, scale);
      } else {
        const VertexId witness = result.witness()->witness;
        if (!is_notsplittable_witness(t, witness, win)) {
          err << "internal error: reported witness fails the component check\n";
          return kExitInternal;
        }
        verdict = "not_splittable";
        record["verdict"] = verdict;
        record["witness"] = witness;
      }
      record["iterations"] = result.trace.size();
      record["method"] = options.method;
      record["start"] = start;
      record["epsilon"] = options.epsilon;
      record["total"] = format_scaled_decimal(t.total_weight(), scale);
      record["elapsed_us"] = elapsed_us(t0, t1);
    } else if (options.method == "oracle") {
      const auto t0 = Clock::now();
      const std::vector<Edge> all = oracle_find_all(t, win);
      const auto t1 = Clock::now();
      if (!all.empty()) {
        const Edge e = all.front();
        const auto [w1, w2] = edge_split_weights(t, e);
        verdict = "split";
        record["verdict"] = verdict;
        record["edge_u"] = e.u;
        record["edge_v"] = e.v;
        record["w1"] = format_scaled_decimal(w1, scale);
        record["w2"] = format_scaled_decimal(w2, scale);
      } else {
        // The oracle proves absence edge-by-edge; a witness vertex is still
        // reported so the verdict stays independently checkable.
        const CutResult result = find_cut_edge_descent(t, win, improved_start(t));
        if (result.is_split() ||
            !is_notsplittable_witness(t, result.witness()->witness, win)) {
          err << "internal error: oracle and search disagree\n";
          return kExitInternal;
        }
        verdict = "not_splittable";
        record["verdict"] = verdict;
        record["witness"] = result.witness()->witness;
      }
      record["iterations"] = t.vertex_count() - 1;  // edges tested
      record["method"] = options.method;
      record["start"] = 0;
      record["epsilon"] = options.epsilon;
      record["total"] = format_scaled_decimal(t.total_weight(), scale);
      record["elapsed_us"] = elapsed_us(t0, t1);
    } else {
      throw UsageError("unknown method '" + options.method + "'");
    }

    if (options.format == "structured") {
      out << record.dump() << "\n";
    } else {
      out << "verdict: " << verdict << "\n";
      if (verdict == "split") {
        out << "edge: " << record["edge_u"] << " " << record["edge_v"] << "\n";
        out << "sides: " << record["w1"].get<std::string>() << " "
            << record["w2"].get<std::string>() << "\n";
      } else {
        out << "witness: " << record["witness"] << "\n";
      }
      out << "method: " << options.method << "  start: " << record["start"]
          << "  iterations: " << record["iterations"]
          << "  elapsed_us: " << record["elapsed_us"] << "\n";
    }
    return verdict == "split" ? kExitSuccess : kExitNotSplittable;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const WeightedTree t = load_tree_file(options.input);
    const Weight doubled_eps =
        parse_doubled_epsilon(options.epsilon, t.scale_exponent());
    const ToleranceWindow win = ToleranceWindow::for_tree(t, doubled_eps);
    const Edge e = Edge::canonical(options.edge_u, options.edge_v);
    const auto [w1, w2] = edge_split_weights(t, e);  // throws if absent
    const bool cut = win.in_range(w1);
    const std::uint32_t scale = t.scale_exponent();

    if (options.format == "structured") {
      ordered_json record;
      record["record"] = "check";
      record["edge_u"] = e.u;
      record["edge_v"] = e.v;
      record["is_cut_edge"] = cut;
      record["w1"] = format_scaled_decimal(w1, scale);
      record["w2"] = format_scaled_decimal(w2, scale);
      record["epsilon"] = options.epsilon;
      record["total"] = format_scaled_decimal(t.total_weight(), scale);
      out << record.dump() << "\n";
    } else {
      out << "cut edge: " << (cut ? "yes" : "no") << "  sides: "
          << format_scaled_decimal(w1, scale) << " "
          << format_scaled_decimal(w2, scale) << "\n";
    }
    return cut ? kExitSuccess : kExitNotSplittable;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  try {
    TreeTopology topo;
    if (options.kind == "prufer") {
      if (options.n == 0) throw UsageError("prufer generator requires --n >= 1");
      topo = prufer_random_tree(options.n, derive_seed(options.seed, 0, 0));
    } else if (options.kind == "grid") {
      if (options.width == 0 || options.height == 0)
        throw UsageError("grid generator requires --width and --height >= 1");
      topo = wilson_spanning_tree(options.width, options.height,
                                  derive_seed(options.seed, 0, 0));
    } else {
      throw UsageError("unknown generator kind '" + options.kind + "'");
    }
    const WeightSpec spec =
        parse_weight_spec(options.weights, derive_seed(options.seed, 0, 1));
    const WeightedTree t = assign_weights(topo, spec);
    if (options.output.empty()) {
      out << serialize_tree(t);
    } else {
      save_tree_file(t, options.output);
    }
    return kExitSuccess;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

namespace {

struct MethodKey {
  std::string method;
  std::string start;  // "-" for baseline
  friend bool operator==(const MethodKey&, const MethodKey&) = default;
};

struct MethodStats {
  std::uint64_t runs = 0;
  std::uint64_t positive = 0;  // split / found
  std::uint64_t negative = 0;  // not_splittable / gave_up
  std::vector<std::uint64_t> steps;
  double total_us = 0.0;
};

double mean_of(const std::vector<std::uint64_t>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0;
  for (auto x : xs) sum += static_cast<double>(x);
  return sum / static_cast<double>(xs.size());
}

double median_of(std::vector<std::uint64_t> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  if (xs.size() % 2 == 1) return static_cast<double>(xs[mid]);
  return (static_cast<double>(xs[mid - 1]) + static_cast<double>(xs[mid])) / 2.0;
}

Weight ratio_doubled_epsilon(Weight total, std::uint64_t num, std::uint64_t den) {
  // 2e = floor(2 * S * num / den), clamped into the 64-bit window (anything
  // at or above S already admits every edge).
  __int128 v = 2 * static_cast<__int128>(total) * static_cast<__int128>(num);
  v /= static_cast<__int128>(den);
  const __int128 hi = std::numeric_limits<Weight>::max();
  return static_cast<Weight>(v > hi ? hi : v);
}

}  // namespace

int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.trials == 0) throw UsageError("trials must be >= 1");
    const bool from_file = !options.input.empty();
    if (from_file == !options.kind.empty())
      throw UsageError("provide exactly one of --input or --kind");

    std::uint64_t ratio_num = 0, ratio_den = 0;
    if (options.epsilon.empty() == options.epsilon_ratio.empty())
      throw UsageError("provide exactly one of --epsilon or --epsilon-ratio");
    if (!options.epsilon_ratio.empty()) {
      const auto slash = options.epsilon_ratio.find('/');
      if (slash == std::string::npos)
        throw UsageError("epsilon ratio must look like <num>/<den>");
      ratio_num = parse_uint(options.epsilon_ratio.substr(0, slash), "epsilon ratio");
      ratio_den = parse_uint(options.epsilon_ratio.substr(slash + 1), "epsilon ratio");
      if (ratio_den == 0) throw UsageError("epsilon ratio denominator must be nonzero");
    }

    for (const auto& m : options.methods)
      if (m != "descent" && m != "literal" && m != "baseline")
        throw UsageError("unknown bench method '" + m + "'");
    for (const auto& s : options.starts)
      if (s != "improved" && s != "random")
        throw UsageError("unknown start policy '" + s + "'");
    if (options.methods.empty()) throw UsageError("methods list is empty");
    if (options.starts.empty()) throw UsageError("starts list is empty");

    std::optional<WeightedTree> file_tree;
    if (from_file) file_tree = load_tree_file(options.input);

    // Row order is fixed by the configuration, independent of scheduling.
    std::vector<MethodKey> keys;
    std::vector<MethodStats> stats;
    for (const auto& m : options.methods) {
      if (m == "baseline") {
        keys.push_back(MethodKey{m, "-"});
        stats.emplace_back();
      } else {
        for (const auto& s : options.starts) {
          keys.push_back(MethodKey{m, s});
          stats.emplace_back();
        }
      }
    }
    auto stats_for = [&](const MethodKey& key) -> MethodStats& {
      for (std::size_t i = 0; i < keys.size(); ++i)
        if (keys[i] == key) return stats[i];
      throw std::logic_error("unregistered bench row");
    };

    for (std::uint32_t trial = 0; trial < options.trials; ++trial) {
      WeightedTree instance = [&] {
        if (from_file) return *file_tree;
        const std::uint64_t topo_seed = derive_seed(options.seed, trial, 0);
        const std::uint64_t weight_seed = derive_seed(options.seed, trial, 1);
        TreeTopology topo =
            options.kind == "grid"
                ? wilson_spanning_tree(options.width, options.height, topo_seed)
                : prufer_random_tree(options.n, topo_seed);
        return assign_weights(topo, parse_weight_spec(options.weights, weight_seed));
      }();

      const Weight doubled_eps =
          options.epsilon.empty()
              ? ratio_doubled_epsilon(instance.total_weight(), ratio_num, ratio_den)
              : parse_doubled_epsilon(options.epsilon, instance.scale_exponent());
      const ToleranceWindow win = ToleranceWindow::for_tree(instance, doubled_eps);

      // Reference verdict for the cross-method agreement assertions.
      const CutResult reference =
          find_cut_edge_descent(instance, win, improved_start(instance));
      const bool ref_split = reference.is_split();

      for (const auto& method : options.methods) {
        if (method == "baseline") {
          if (instance.vertex_count() < 2)
            throw UsageError("baseline requires trees with at least one edge");
          const std::uint64_t bl_seed = derive_seed(options.seed, trial, 3);
          const auto t0 = Clock::now();
          const BaselineOutcome outcome =
              random_edge_baseline(instance, win, options.max_attempts, bl_seed);
          const auto t1 = Clock::now();
          if (outcome.found() && !ref_split) {
            err << "bench self-check failed: baseline found an edge on a tree "
                   "the search certified as not splittable (trial "
                << trial << ")\n";
            return kExitInternal;
          }
          MethodStats& s = stats_for(MethodKey{method, "-"});
          ++s.runs;
          outcome.found() ? ++s.positive : ++s.negative;
          s.steps.push_back(outcome.attempts);
          s.total_us += elapsed_us(t0, t1);
          continue;
        }
        for (const auto& start_policy : options.starts) {
          const VertexId start =
              start_policy == "improved"
                  ? improved_start(instance)
                  : static_cast<VertexId>(Xoshiro256ss(derive_seed(options.seed, trial, 2))
                                              .below(instance.vertex_count()));
          const auto t0 = Clock::now();
          const CutResult result = method == "descent"
                                       ? find_cut_edge_descent(instance, win, start)
                                       : find_cut_edge_literal(instance, win, start);
          const auto t1 = Clock::now();
          if (result.is_split() != ref_split) {
            err << "bench self-check failed: " << method << "/" << start_policy
                << " disagrees with the reference verdict (trial " << trial << ")\n";
            return kExitInternal;
          }
          MethodStats& s = stats_for(MethodKey{method, start_policy});
          ++s.runs;
          result.is_split() ? ++s.positive : ++s.negative;
          s.steps.push_back(result.trace.size());
          s.total_us += elapsed_us(t0, t1);
        }
      }
    }

    const bool structured = options.format == "structured";
    if (structured) {
      ordered_json config;
      config["record"] = "bench_config";
      config["source"] = from_file ? options.input : options.kind;
      if (!from_file) {
        if (options.kind == "grid") {
          config["width"] = options.width;
          config["height"] = options.height;
        } else {
          config["n"] = options.n;
        }
        config["weights"] = options.weights;
      }
      if (!options.epsilon.empty()) config["epsilon"] = options.epsilon;
      if (!options.epsilon_ratio.empty()) config["epsilon_ratio"] = options.epsilon_ratio;
      config["trials"] = options.trials;
      config["seed"] = options.seed;
      config["max_attempts"] = options.max_attempts;
      out << config.dump() << "\n";
    } else {
      out << "method    start     runs    split/found  not_split/gave_up  "
             "mean_steps  median_steps  mean_time_us\n";
    }

    for (std::size_t i = 0; i < keys.size(); ++i) {
      const MethodKey& key = keys[i];
      const MethodStats& s = stats[i];
      const bool is_baseline = key.method == "baseline";
      const double mean_steps = mean_of(s.steps);
      const double median_steps = median_of(s.steps);
      const double mean_us = s.runs ? s.total_us / static_cast<double>(s.runs) : 0.0;
      if (structured) {
        ordered_json row;
        row["record"] = "bench_row";
        row["method"] = key.method;
        row["start"] = key.start;
        row["runs"] = s.runs;
        if (is_baseline) {
          row["found"] = s.positive;
          row["gave_up"] = s.negative;
          row["mean_attempts"] = mean_steps;
          row["median_attempts"] = median_steps;
        } else {
          row["split"] = s.positive;
          row["not_splittable"] = s.negative;
          row["mean_iterations"] = mean_steps;
          row["median_iterations"] = median_steps;
        }
        row["mean_time_us"] = mean_us;
        row["total_time_ms"] = s.total_us / 1000.0;
        out << row.dump() << "\n";
      } else {
        char line[256];
        std::snprintf(line, sizeof(line),
                      "%-9s %-9s %-7llu %-12llu %-18llu %-11.2f %-13.1f %.1f\n",
                      key.method.c_str(), key.start.c_str(),
                      static_cast<unsigned long long>(s.runs),
                      static_cast<unsigned long long>(s.positive),
                      static_cast<unsigned long long>(s.negative), mean_steps,
                      median_steps, mean_us);
        out << line;
      }
    }
    return kExitSuccess;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace treesplit::cli
