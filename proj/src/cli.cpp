#include "hhht/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "hhht/core.hpp"
#include "hhht/exact.hpp"
#include "hhht/excursions.hpp"
#include "hhht/montecarlo.hpp"
#include "hhht/rational.hpp"
#include "hhht/renewal.hpp"
#include "hhht/verify.hpp"

namespace hhht {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_cell(const Json& v) {
  switch (v.type()) {
    case Json::value_t::null: return "";
    case Json::value_t::boolean: return v.get<bool>() ? "true" : "false";
    case Json::value_t::number_float: return fmt::format("{:.17g}", v.get<double>());
    case Json::value_t::number_integer: return std::to_string(v.get<std::int64_t>());
    case Json::value_t::number_unsigned: return std::to_string(v.get<std::uint64_t>());
    default: break;
  }
  const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void write_csv_row(std::ostream& out, const Json& obj, bool header) {
  bool first = true;
  for (const auto& [key, value] : obj.items()) {
    if (!first) out << ',';
    first = false;
    out << (header ? key : csv_cell(value));
  }
  out << '\n';
}

void write_csv(std::ostream& out, const Json& record) {
  if (record.contains("rows")) {
    const auto& rows = record["rows"];
    if (rows.empty()) return;
    write_csv_row(out, rows.front(), true);
    for (const auto& row : rows) write_csv_row(out, row, false);
    return;
  }
  write_csv_row(out, record, true);
  write_csv_row(out, record, false);
}

void emit(std::ostream& out, const Json& record, const std::string& format) {
  if (format == "csv") {
    write_csv(out, record);
  } else {
    out << record.dump(2) << '\n';
  }
}

Json exact_record(const std::string& command, const std::string& method, const ExactDistribution& d) {
  return Json{{"command", command},
              {"method", method},
              {"n", d.n},
              {"p", to_fraction_string(d.p)},
              {"pA", to_fraction_string(d.pA)},
              {"pB", to_fraction_string(d.pB)},
              {"pTie", to_fraction_string(d.pTie)},
              {"diff", to_fraction_string(d.diff())}};
}

Json float_record(const std::string& command, const FloatDistribution& d) {
  return Json{{"command", command},  {"method", "dp-float"}, {"n", d.n},
              {"p", d.p},            {"pA", d.pA},           {"pB", d.pB},
              {"pTie", d.pTie},      {"diff", d.diff()},     {"rounding_bound", d.rounding_bound}};
}

Json decomposition_record(const FlipSequence& seq, const Decomposition& d) {
  Json slots = Json::array();
  for (const auto& s : d.slots) {
    slots.push_back(Json{{"start", s.start},
                         {"end", s.end},
                         {"kind", std::string(to_string(s.kind))},
                         {"tau_end", s.tau_end ? Json(*s.tau_end) : Json(nullptr)},
                         {"complete", s.complete},
                         {"content", s.content.to_string()}});
  }
  return Json{{"command", "decompose"},
              {"sequence", seq.to_string()},
              {"length", d.length},
              {"initial_tailrun_len", d.initial_tailrun_len},
              {"first_head_pos", d.first_head_pos ? Json(*d.first_head_pos) : Json(nullptr)},
              {"slots", std::move(slots)},
              {"trailing", std::string(to_string(d.trailing))}};
}

Json table_record(std::size_t from, std::size_t to, std::size_t step, const std::string& mode) {
  if (from < 1 || to < from || step < 1) {
    throw DomainError("table: need 1 <= n-from <= n-to and step >= 1");
  }
  const bool exact = mode == "exact" || (mode == "auto" && to <= kMaxExactDpHorizon);
  Json rows = Json::array();
  auto add_row = [&rows](std::size_t n, double pA, double pB, double pTie) {
    const auto a = asymptotics(n);
    rows.push_back(Json{{"n", n},
                        {"pA", pA},
                        {"pB", pB},
                        {"pTie", pTie},
                        {"diff", pB - pA},
                        {"tie_asym", a.tie_approx},
                        {"diff_asym", a.diff_approx}});
  };
  if (exact) {
    ExactScoreDp dp(Rational(1, 2), to);
    for (std::size_t n = 1; n <= to; ++n) {
      dp.step();
      if (n < from || (n - from) % step != 0) continue;
      const auto d = dp.distribution();
      // diff from the exact difference, not the rounded components
      add_row(n, d.pA.get_d(), d.pB.get_d(), d.pTie.get_d());
      rows.back()["diff"] = d.diff().get_d();
    }
  } else {
    FloatScoreDp dp(0.5, to);
    for (std::size_t n = 1; n <= to; ++n) {
      dp.step();
      if (n < from || (n - from) % step != 0) continue;
      const auto d = dp.distribution();
      add_row(n, d.pA, d.pB, d.pTie);
    }
  }
  return Json{{"command", "table"}, {"method", exact ? "dp-exact" : "dp-float"}, {"rows", std::move(rows)}};
}

Json renewal_record(std::size_t m_to) {
  if (m_to < 1) throw DomainError("renewal: m-to must be at least 1");
  Json rows = Json::array();
  for (const auto& row : renewal_table(m_to)) {
    rows.push_back(Json{{"m", row.m},
                        {"count_rx", row.count.get_str()},
                        {"pi_exact", to_fraction_string(row.pi)},
                        {"pi_float", row.pi_approx}});
  }
  return Json{{"command", "renewal"}, {"method", "renewal"}, {"rows", std::move(rows)}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Win and tie probabilities of the HH-vs-HT coin game", "hhht"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string format = "json";
  auto add_format = [&format](CLI::App* sub, const std::string& fallback) {
    sub->add_option("--format", format, "Output format (json or csv)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_str(fallback);
  };

  std::size_t n = 0;
  std::string p_text = "1/2";

  auto* exact_cmd = app.add_subcommand("exact", "Exhaustive enumeration over all 2^n sequences");
  exact_cmd->add_option("--n", n, "Number of flips")->required();
  exact_cmd->add_option("--p", p_text, "Head probability, NUM/DEN or decimal");
  add_format(exact_cmd, "json");
  exact_cmd->callback([&] {
    action = [&] {
      emit(out, exact_record("exact", "enum", enumerate_distribution(n, parse_probability(p_text))),
           format);
      return 0;
    };
  });

  std::string mode = "exact";
  auto* dp_cmd = app.add_subcommand("dp", "Dynamic programming over (last flip, score)");
  dp_cmd->add_option("--n", n, "Number of flips")->required();
  dp_cmd->add_option("--p", p_text, "Head probability, NUM/DEN or decimal");
  dp_cmd->add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  add_format(dp_cmd, "json");
  dp_cmd->callback([&] {
    action = [&] {
      const Rational p = parse_probability(p_text);
      if (mode == "exact") {
        emit(out, exact_record("dp", "dp-exact", dp_exact(n, p)), format);
      } else {
        emit(out, float_record("dp", dp_float(n, p.get_d())), format);
      }
      return 0;
    };
  });

  SimConfig sim;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo simulation of the game");
  mc_cmd->add_option("--n", sim.n, "Number of flips")->required();
  mc_cmd->add_option("--trials", sim.trials, "Number of games");
  mc_cmd->add_option("--seed", sim.seed, "64-bit seed");
  mc_cmd->add_option("--p", sim.p, "Head probability");
  mc_cmd->add_option("--batch-size", sim.batch_size, "Games per substream");
  add_format(mc_cmd, "json");
  mc_cmd->callback([&] {
    action = [&] {
      const auto r = simulate_game(sim);
      emit(out,
           Json{{"command", "mc"},       {"method", "mc"},          {"n", sim.n},
                {"p", sim.p},            {"trials", r.trials},      {"seed", r.seed},
                {"batch_size", sim.batch_size},
                {"winsA", r.winsA},      {"winsB", r.winsB},        {"ties", r.ties},
                {"pA", r.pA},            {"pB", r.pB},              {"pTie", r.pTie},
                {"seA", r.seA},          {"seB", r.seB},            {"seTie", r.seTie},
                {"diff", r.diff()},      {"diff_stderr", r.diff_stderr()}},
           format);
      return 0;
    };
  });

  std::size_t m_to = 0;
  auto* renewal_cmd = app.add_subcommand("renewal", "Renewal counts and pi_m for m = 1..M");
  renewal_cmd->add_option("--m-to", m_to, "Largest m")->required();
  add_format(renewal_cmd, "csv");
  renewal_cmd->callback([&] {
    action = [&] {
      emit(out, renewal_record(m_to), format);
      return 0;
    };
  });

  std::string method = "dp";
  auto* diff_cmd = app.add_subcommand("diff", "P(Bob wins) - P(Alice wins) at p = 1/2");
  diff_cmd->add_option("--n", n, "Number of flips")->required();
  diff_cmd->add_option("--method", method, "renewal, dp or enum")
      ->check(CLI::IsMember({"renewal", "dp", "enum"}));
  add_format(diff_cmd, "json");
  diff_cmd->callback([&] {
    action = [&] {
      Rational d;
      std::string tag = method;
      if (method == "renewal") {
        d = renewal_diff(n);
      } else if (method == "dp") {
        d = dp_exact(n, Rational(1, 2)).diff();
        tag = "dp-exact";
      } else {
        d = enumerate_distribution(n, Rational(1, 2)).diff();
      }
      emit(out, Json{{"command", "diff"}, {"method", tag}, {"n", n}, {"diff", to_fraction_string(d)}},
           format);
      return 0;
    };
  });

  auto* asym_cmd = app.add_subcommand("asym", "Leading-order sqrt(n) approximations");
  asym_cmd->add_option("--n", n, "Number of flips")->required();
  add_format(asym_cmd, "json");
  asym_cmd->callback([&] {
    action = [&] {
      const auto r = asymptotics(n);
      emit(out,
           Json{{"command", "asym"},         {"method", "asym"},           {"n", r.n},
                {"c", r.c},                  {"diff_approx", r.diff_approx},
                {"tie_approx", r.tie_approx}, {"deficit_B", r.deficit_B},
                {"deficit_A", r.deficit_A}},
           format);
      return 0;
    };
  });

  std::uint64_t steps = 0;
  std::uint64_t seed = 1;
  auto* walk_cmd = app.add_subcommand("walk", "Score walk sampled at tail appearances");
  walk_cmd->add_option("--steps", steps, "Number of tails")->required();
  walk_cmd->add_option("--seed", seed, "64-bit seed");
  add_format(walk_cmd, "json");
  walk_cmd->callback([&] {
    action = [&] {
      const auto w = tailwalk(steps, seed);
      emit(out,
           Json{{"command", "walk"},       {"method", "mc"},
                {"steps", w.steps},        {"seed", w.seed},
                {"zero_hits", w.zero_hits}, {"sample_mean_jump", w.sample_mean_jump},
                {"sample_std_jump", w.sample_std_jump}},
           format);
      return 0;
    };
  });

  std::string sequence_text;
  auto* decompose_cmd = app.add_subcommand("decompose", "Excursion decomposition of a sequence");
  decompose_cmd->add_option("sequence", sequence_text, "H/T string")->required();
  add_format(decompose_cmd, "json");
  decompose_cmd->callback([&] {
    action = [&] {
      const auto seq = parse_sequence(sequence_text);
      const auto rec = decomposition_record(seq, decompose(seq));
      if (format == "csv") {
        emit(out, Json{{"rows", rec["slots"]}}, format);
      } else {
        emit(out, rec, format);
      }
      return 0;
    };
  });

  std::size_t n_from = 1, n_to = 1, n_step = 1;
  std::string table_mode = "auto";
  auto* table_cmd = app.add_subcommand("table", "Sweep of exact probabilities over n");
  table_cmd->add_option("--n-from", n_from, "First n")->required();
  table_cmd->add_option("--n-to", n_to, "Last n")->required();
  table_cmd->add_option("--step", n_step, "Stride");
  table_cmd->add_option("--mode", table_mode, "auto, exact or float")
      ->check(CLI::IsMember({"auto", "exact", "float"}));
  add_format(table_cmd, "csv");
  table_cmd->callback([&] {
    action = [&] {
      emit(out, table_record(n_from, n_to, n_step, table_mode), format);
      return 0;
    };
  });

  std::string only;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check every invariant against its oracle");
  verify_cmd->add_option("--only", only, "Run checks whose name starts with this prefix");
  add_format(verify_cmd, "json");
  verify_cmd->callback([&] {
    action = [&] {
      const auto results = run_verification(only);
      bool all = !results.empty();
      Json checks = Json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        checks.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                              {"seconds", std::round(r.seconds * 1000.0) / 1000.0}});
      }
      if (format == "csv") {
        emit(out, Json{{"rows", checks}}, format);
      } else {
        emit(out, Json{{"command", "verify"}, {"passed", all}, {"checks", std::move(checks)}}, format);
      }
      for (const auto& r : results) {
        err << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
      }
      return all ? 0 : 1;
    };
  });

  // Table-style commands default to CSV.
  for (auto* sub : {renewal_cmd, table_cmd}) {
    sub->preparse_callback([&format](std::size_t) { format = "csv"; });
  }
  for (auto* sub : {exact_cmd, dp_cmd, mc_cmd, diff_cmd, asym_cmd, walk_cmd, decompose_cmd, verify_cmd}) {
    sub->preparse_callback([&format](std::size_t) { format = "json"; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hhht
