#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification disagreement,
// 2 usage or precondition error.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homcount/homcount.hpp"

namespace homcount::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_disagreement = 1;
inline constexpr int exit_usage = 2;

inline constexpr std::uint64_t max_work_cap = 100'000'000;
inline constexpr std::uint64_t max_cyclic_sweep = 1'000'000;

enum class Format { plain, jsonl, csv };

struct GlobalOptions {
  std::optional<Format> format;
  std::string output_path;
  bool oracle = false;
  std::uint64_t max_work = default_work_budget;
};

/// Raised for argument problems detected after CLI11 parsing.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t parse_positive(const std::string& text, const char* what) {
  const auto g = ProductGroup::parse(text);
  if (!g.is_cyclic_presentation()) {
    throw usage_error(std::string(what) + " must be a single positive integer, got '" + text + "'");
  }
  return g[0];
}

inline std::string join(std::span<const std::uint64_t> values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

struct OracleResult {
  std::optional<NaturalCount> value;
  std::string unverified_reason;
};

/// Runs an oracle, turning budget refusals into an "unverified" result.
inline OracleResult run_oracle(const std::function<NaturalCount()>& oracle) {
  try {
    return {oracle(), {}};
  } catch (const budget_exceeded& e) {
    return {std::nullopt, e.what()};
  }
}

class Runner {
 public:
  Runner(GlobalOptions opts, std::ostream& out, std::ostream& err)
      : opts_(std::move(opts)), out_(out), err_(err) {}

  int count(const std::string& kind, const std::vector<std::string>& args);
  int enumerate(const std::string& kind, const std::vector<std::string>& args);
  int classify(const std::string& n_text);
  int verify(const std::string& scope, std::uint64_t max_n, std::size_t max_k,
             std::uint64_t max_mod);

 private:
  Format format_or(Format fallback) const { return opts_.format.value_or(fallback); }

  /// Payload sink: --output file if given, else stdout.
  std::ostream& payload() {
    if (opts_.output_path.empty()) return out_;
    if (!file_) {
      file_.emplace(opts_.output_path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw usage_error("cannot open output file '" + opts_.output_path + "'");
    }
    return *file_;
  }

  /// Human-readable summaries go to stdout unless stdout carries the payload.
  std::ostream& summary() { return opts_.output_path.empty() ? err_ : out_; }

  void require_args(const std::vector<std::string>& args, std::size_t n, const char* usage) {
    if (args.size() != n) throw usage_error(std::string("expected: ") + usage);
  }

  int emit_count(const std::string& kind, const std::vector<std::string>& args,
                 const NaturalCount& value, const std::function<NaturalCount()>& oracle);

  GlobalOptions opts_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<std::ofstream> file_;
};

inline int Runner::emit_count(const std::string& kind, const std::vector<std::string>& args,
                              const NaturalCount& value,
                              const std::function<NaturalCount()>& oracle) {
  const Format fmt = format_or(Format::plain);
  if (fmt == Format::csv) throw usage_error("count supports --format plain or jsonl");

  std::optional<OracleResult> check;
  if (opts_.oracle) check = run_oracle(oracle);
  const bool disagree = check && check->value && *check->value != value;

  auto& os = payload();
  if (fmt == Format::plain) {
    os << value << '\n';
    if (check) {
      if (check->value) {
        os << "oracle: " << *check->value << (disagree ? " (DISAGREE)" : " (agree)") << '\n';
      } else {
        os << "oracle: unverified (" << check->unverified_reason << ")\n";
      }
    }
  } else {
    os << "{\"kind\":\"" << kind << "\",\"args\":[";
    for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << '"' << args[i] << '"';
    os << "],\"count\":" << value;
    if (check) {
      os << ",\"oracle\":";
      if (check->value) os << *check->value; else os << "null";
      os << ",\"verified\":" << (check->value && !disagree ? "true" : "false");
    }
    os << "}\n";
  }
  return disagree ? exit_disagreement : exit_ok;
}

inline int Runner::count(const std::string& kind, const std::vector<std::string>& args) {
  const std::uint64_t budget = opts_.max_work;

  if (kind == "surj-group" || kind == "ring") {
    require_args(args, 2, "count surj-group|ring SOURCE TARGET");
    const auto source = ProductGroup::parse(args[0]);
    const auto target = ProductGroup::parse(args[1]);
    if (source.rank() != target.rank()) {
      throw usage_error("source and target must have the same number of factors");
    }

    if (kind == "surj-group") {
      const auto result = count_componentwise_surjective_homs(source, target);
      if (result.blocking_index) summary() << "note: " << result.status() << '\n';
      const int rc = emit_count(kind, args, result.count, [&] {
        NaturalCount product = 1;
        for (std::size_t i = 0; i < source.rank(); ++i) {
          product *= count_surjective_group_homs_by_enumeration(source[i], target[i], budget);
        }
        return product;
      });
      if (opts_.oracle && !source.is_cyclic_presentation()) {
        try {
          const auto all = enumerate_all_group_homs_matrix(source, target, budget);
          summary() << "all homomorphisms (matrix oracle): " << all.total << ", surjective: "
                    << (all.surjective ? all.surjective->str() : std::string("unverified")) << '\n';
        } catch (const budget_exceeded& e) {
          summary() << "all homomorphisms (matrix oracle): unverified (" << e.what() << ")\n";
        }
      }
      return rc;
    }

    NaturalCount value = 1;
    for (std::size_t i = 0; i < source.rank(); ++i) {
      try {
        value *= count_ring_homs_closed_form(source[i], target[i]);
      } catch (const precondition_violation& e) {
        throw usage_error(std::string(e.what()) + "; use 'enumerate ring-homs' for the general count");
      }
    }
    return emit_count(kind, args, value, [&] {
      NaturalCount product = 1;
      for (std::size_t i = 0; i < source.rank(); ++i) {
        product *= enumerate_ring_homs(source[i], target[i], budget).size();
      }
      return product;
    });
  }

  if (kind == "idempotents") {
    require_args(args, 1, "count idempotents GROUP");
    const auto r = ProductGroup::parse(args[0]);
    return emit_count(kind, args, count_product_idempotents(r), [&] {
      return NaturalCount(enumerate_product_idempotents(r, budget).size());
    });
  }

  if (kind == "order-d") {
    require_args(args, 2, "count order-d GROUP D");
    const auto r = ProductGroup::parse(args[0]);
    const auto d = parse_positive(args[1], "D");
    return emit_count(kind, args, count_elements_of_order(r, d), [&] {
      NaturalCount n = 0;
      for_each_element(r, [&](const ProductElement& x) { if (element_order(r, x) == d) ++n; }, budget);
      return n;
    });
  }

  if (kind == "max-order") {
    require_args(args, 1, "count max-order GROUP");
    const auto r = ProductGroup::parse(args[0]);
    return emit_count(kind, args, count_maximal_order_elements(r),
                      [&] { return count_maximal_order_elements_by_scan(r, budget); });
  }

  throw usage_error("unknown count kind '" + kind +
                    "' (expected surj-group, ring, idempotents, order-d, max-order)");
}

inline int Runner::enumerate(const std::string& kind, const std::vector<std::string>& args) {
  const Format fmt = format_or(Format::plain);
  if (fmt == Format::csv) throw usage_error("enumerate supports --format plain or jsonl");
  const std::uint64_t budget = opts_.max_work;

  if (kind == "homs" || kind == "ring-homs") {
    require_args(args, 2, "enumerate homs|ring-homs M N");
    const auto m = parse_positive(args[0], "M");
    const auto n = parse_positive(args[1], "N");
    std::vector<std::uint64_t> images;
    if (kind == "homs") {
      for (const auto& w : enumerate_group_homs(m, n, budget)) images.push_back(w.generator_image);
    } else {
      for (const auto& w : enumerate_ring_homs(m, n, budget)) images.push_back(w.generator_image);
    }
    auto& os = payload();
    for (auto a : images) {
      if (fmt == Format::plain) {
        os << a << '\n';
      } else {
        os << "{\"source\":" << m << ",\"target\":" << n << ",\"image\":" << a << "}\n";
      }
    }
    return exit_ok;
  }

  if (kind == "idempotents") {
    require_args(args, 1, "enumerate idempotents GROUP");
    const auto r = ProductGroup::parse(args[0]);
    const auto elements = enumerate_product_idempotents(r, budget);
    auto& os = payload();
    for (const auto& e : elements) {
      const auto text = join(e.components, ',');
      if (fmt == Format::jsonl) {
        os << "[" << text << "]\n";
      } else if (r.is_cyclic_presentation()) {
        os << text << '\n';
      } else {
        os << '(' << text << ")\n";
      }
    }
    return exit_ok;
  }

  throw usage_error("unknown enumerate kind '" + kind + "' (expected homs, ring-homs, idempotents)");
}

inline int Runner::classify(const std::string& n_text) {
  const auto n = parse_positive(n_text, "N");
  const auto r = check_main_theorem(n);
  auto& os = payload();
  switch (format_or(Format::plain)) {
    case Format::jsonl:
      write_jsonl(os, r);
      break;
    case Format::csv:
      os << cyclic_csv_header << '\n';
      write_csv_row(os, r);
      break;
    case Format::plain:
      os << "n: " << r.n << '\n'
         << "omega: " << r.omega << '\n'
         << "phi: " << r.phi << '\n'
         << "ring_homs: " << r.ring_hom_count << '\n'
         << "surj_homs: " << r.surj_hom_count << '\n'
         << "divides: " << (r.divides ? "true" : "false") << '\n'
         << "exceptional: " << (r.exceptional ? "true" : "false") << '\n'
         << "agrees: " << (r.agrees ? "true" : "false") << '\n'
         << "verdict: " << (r.exceptional ? "exceptional" : "regular") << ", " << r.ring_hom_count
         << (r.divides ? " divides " : " does not divide ") << r.surj_hom_count << '\n';
      break;
  }
  return r.agrees ? exit_ok : exit_disagreement;
}

inline int Runner::verify(const std::string& scope, std::uint64_t max_n, std::size_t max_k,
                          std::uint64_t max_mod) {
  const Format fmt = format_or(Format::jsonl);
  auto write = [&](const auto& report) {
    if (fmt == Format::jsonl) write_jsonl(payload(), report);
    if (fmt == Format::csv) write_csv(payload(), report);
    write_summary(fmt == Format::plain ? out_ : summary(), report);
    if (file_) {
      file_->flush();
      if (!*file_) throw usage_error("failed writing '" + opts_.output_path + "'");
    }
  };

  if (scope == "cyclic") {
    if (max_n > max_cyclic_sweep) {
      throw usage_error("--max is capped at " + std::to_string(max_cyclic_sweep));
    }
    const auto report = sweep_cyclic(max_n);
    write(report);
    return report.ok() ? exit_ok : exit_disagreement;
  }
  if (scope == "products") {
    const auto report = sweep_products(max_k, max_mod);
    write(report);
    return report.ok() ? exit_ok : exit_disagreement;
  }
  throw usage_error("unknown verify scope '" + scope + "' (expected cyclic or products)");
}

}  // namespace detail

/// Parses and executes one command line. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of homomorphisms between finite cyclic groups and their products",
               "homcount"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  std::string format_text;
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"plain", "jsonl", "csv"}));
  app.add_option("--output", opts.output_path, "Write the payload to PATH instead of stdout");
  app.add_flag("--oracle,-v,--verbose", opts.oracle, "Cross-check counts by brute force");
  app.add_option("--max-work", opts.max_work, "Enumeration budget override")
      ->check(CLI::Range(std::uint64_t{1}, max_work_cap));

  std::string kind;
  std::vector<std::string> rest;
  auto* count = app.add_subcommand("count", "Print a homomorphism or element count");
  count->add_option("kind", kind, "surj-group | ring | idempotents | order-d | max-order")->required();
  count->add_option("args", rest, "Group descriptors such as 12 or 4,6")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List witnesses one per line");
  enumerate->add_option("kind", kind, "homs | ring-homs | idempotents")->required();
  enumerate->add_option("args", rest, "Moduli or group descriptor")->required();

  std::string n_text;
  auto* classify = app.add_subcommand("classify", "Full divisibility record for one modulus");
  classify->add_option("n", n_text, "Positive modulus")->required();

  std::string scope;
  std::uint64_t max_n = 0;
  std::size_t max_k = max_sweep_rank;
  std::uint64_t max_mod = max_sweep_modulus;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("scope", scope, "cyclic | products")
      ->required()
      ->check(CLI::IsMember({"cyclic", "products"}));
  verify->add_option("--max", max_n, "Largest n for the cyclic sweep");
  verify->add_option("--max-k", max_k, "Largest number of factors for the product sweep");
  verify->add_option("--max-mod", max_mod, "Largest modulus for the product sweep");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (format_text == "plain") opts.format = Format::plain;
  if (format_text == "jsonl") opts.format = Format::jsonl;
  if (format_text == "csv") opts.format = Format::csv;

  detail::Runner runner(opts, out, err);
  try {
    if (*count) return runner.count(kind, rest);
    if (*enumerate) return runner.enumerate(kind, rest);
    if (*classify) return runner.classify(n_text);
    if (*verify) {
      if (scope == "cyclic" && verify->count("--max") == 0) {
        throw usage_error("verify cyclic requires --max N");
      }
      return runner.verify(scope, max_n, max_k, max_mod);
    }
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const precondition_violation& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const arithmetic_overflow& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace homcount::cli
