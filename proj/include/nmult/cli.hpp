// Command-line front end. Parsing and dispatch live in a header so the test
// suite can drive the exact binary surface in-process. stdout carries the
// report only; diagnostics go to stderr. Exit codes: 0 success, 2 parse or
// schema error, 3 mathematical precondition, 4 inconclusive under --strict.
#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nmult/io.hpp"

namespace nmult {

inline constexpr const char* kVersion = "0.1.0";

inline Chain parse_chain_spec(const std::string& spec) {
  int base = 0, ratio = 0, length = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  if (!(is >> base >> c1 >> ratio >> c2 >> length) || c1 != ':' || c2 != ':' || !is.eof())
    throw parse_error("chain spec must look like base:ratio:length, e.g. 1:2:7");
  try {
    return make_chain(base, ratio, length);
  } catch (const value_error& e) {
    throw parse_error(e.what());
  }
}

namespace cli_detail {

enum class InputKind { Ideal, Region, System, Items };

inline InputKind classify(const json& j) {
  if (j.contains("type")) {
    std::string t = j.at("type").get<std::string>();
    if (t == "ideal") return InputKind::Ideal;
    if (t == "region") return InputKind::Region;
    if (t == "system") return InputKind::System;
    if (t == "ideals" || t == "systems") return InputKind::Items;
    throw parse_error("unknown input type: " + t);
  }
  if (j.contains("kind")) return InputKind::System;
  if (j.contains("generators")) return InputKind::Ideal;
  if (j.contains("vertices")) return InputKind::Region;
  if (j.contains("items")) return InputKind::Items;
  throw parse_error("cannot classify input: expected ideal, region, system or items");
}

struct Options {
  std::string in, in2, out;
  std::string chain_spec = "1:2:7";
  std::string format = "json";
  std::string c_value;
  std::string c_grid = "1,2,3";
  std::string d_max = "3";
  std::string d_step = "1";
  std::string m_range = "5:40";
  std::string ceil_index_s = "off";
  std::string strict_s = "off";
  int weights_sum = 5;
  int m_max = 30;
  long grid_n = 0;
  bool ceil_index = false;
  bool strict = false;
};

inline std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(parse_rat(item));
  }
  if (out.empty()) throw parse_error("empty rational list: " + s);
  return out;
}

inline std::pair<int, int> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw parse_error("range must look like lo:hi");
  try {
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw parse_error("malformed range: " + s);
  }
}

inline json table_json(const std::vector<MultiplicityRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["k"] = r.k;
    row["ea"] = rat_to_json(r.ea);
    row["eb"] = rat_to_json(r.eb);
    row["gap"] = rat_to_json(r.gap);
    arr.push_back(row);
  }
  return arr;
}

inline std::string table_csv(const std::vector<MultiplicityRow>& rows) {
  std::string csv = "k,ea,eb,gap\n";
  for (const auto& r : rows) {
    csv += std::to_string(r.k) + "," + decimal_string(r.ea) + "," + decimal_string(r.eb) + "," +
           decimal_string(r.gap) + "\n";
  }
  return csv;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using cli_detail::Options;
  CLI::App app{"newton-mult: exact multiplicities of graded systems of monomial ideals"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool needs_in = true) {
    if (needs_in) cmd->add_option("--in", o.in, "input JSON file")->required();
    cmd->add_option("--chain", o.chain_spec, "divisibility chain base:ratio:length (default 1:2:7)");
    cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "also write the report to this path");
    cmd->add_option("--strict", o.strict_s, "on|off: exit 4 on inconclusive results")
        ->check(CLI::IsMember({"on", "off"}));
  };

  auto* mult = app.add_subcommand("mult", "Samuel multiplicity of an ideal or asymptotic multiplicity of a system");
  add_common(mult);
  mult->add_option("--grid-N", o.grid_n, "cross-check covolume with the grid oracle at this N");

  auto* mj = app.add_subcommand("mj", "multiplier ideal J(a^c) or asymptotic multiplier ideal J(c * a_bullet)");
  add_common(mj);
  mj->add_option("--c", o.c_value, "positive rational coefficient")->required();

  auto* els = app.add_subcommand("els", "multiplicity table e(a_k)/k^n vs e(b_k)/k^n with the exact limit");
  add_common(els);

  auto* kw = app.add_subcommand("kw", "Kuronya-Wolfe constant search b_{Cm+D} inside a_m");
  add_common(kw);
  kw->add_option("--c-grid", o.c_grid, "ascending candidate constants, comma separated (default 1,2,3)");
  kw->add_option("--d-max", o.d_max, "largest D in the grid (default 3)");
  kw->add_option("--d-step", o.d_step, "D grid step (default 1)");
  kw->add_option("--m-range", o.m_range, "index range lo:hi (default 5:40)");
  kw->add_option("--ceil-index", o.ceil_index_s, "on|off: ceiling convention for the index Cm+D")
      ->check(CLI::IsMember({"on", "off"}));

  auto* tame = app.add_subcommand("tame", "tameness constants of a region weight or of a system's limit region");
  add_common(tame);
  tame->add_option("--m-max", o.m_max, "check approximants up to this index (default 30)");

  auto* veq = app.add_subcommand("veq", "valuative equivalence of two graded systems");
  add_common(veq);
  veq->add_option("--in2", o.in2, "second system JSON file")->required();
  veq->add_option("--weights-sum", o.weights_sum, "weight sample: coordinate sum bound (default 5)");

  auto* mixed = app.add_subcommand("mixed", "mixed multiplicity of n ideals in dimension n");
  add_common(mixed);

  auto* inter = app.add_subcommand("inter", "intersection number of limit b-divisors of n systems");
  add_common(inter);

  std::vector<const char*> argv;
  argv.push_back("newton-mult");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << std::endl;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << std::endl;
    return 2;
  }

  o.strict = o.strict_s == "on";
  o.ceil_index = o.ceil_index_s == "on";

  try {
    if (o.grid_n != 0 && o.grid_n < 10)
      throw parse_error("--grid-N must be at least 10");
    Chain chain = parse_chain_spec(o.chain_spec);
    json result;
    std::string csv;
    bool csv_capable = false;
    std::string command;

    if (app.got_subcommand(mult)) {
      command = "mult";
      json in = load_json_file(o.in);
      auto kind = cli_detail::classify(in);
      if (kind == cli_detail::InputKind::Ideal) {
        MonomialIdeal a = json_to_ideal(in);
        if (!is_m_primary(a)) {
          for (int i = 0; i < a.dim(); ++i) {
            bool has = false;
            for (const auto& g : a.generators()) {
              bool pure = g[i] > 0;
              for (int j = 0; j < a.dim() && pure; ++j)
                if (j != i && g[j] != 0) pure = false;
              if (pure) { has = true; break; }
            }
            if (!has)
              throw value_error("ideal is not m-primary: no pure power on axis " +
                                std::to_string(i + 1));
          }
        }
        result["e"] = rat_to_json(Rat(samuel_multiplicity(a)));
        result["colength"] = int_to_json(colength(a));
        if (o.grid_n > 0) {
          json g;
          g["N"] = (std::int64_t)o.grid_n;
          g["value"] = rat_to_json(covolume_grid_oracle(newton_region(a), o.grid_n));
          g["covolume"] = rat_to_json(covolume(newton_region(a)));
          result["grid_oracle"] = g;
        }
      } else if (kind == cli_detail::InputKind::System) {
        GradedSystem s = json_to_system(in);
        auto am = asymptotic_multiplicity(s, chain);
        result["e"] = rat_to_json(am.estimate);
        result["exact"] = am.exact;
        json table = json::array();
        std::vector<MultiplicityRow> rows;
        for (const auto& [k, ea] : am.table) {
          json row;
          row["k"] = k;
          row["ea"] = rat_to_json(ea);
          table.push_back(row);
        }
        result["table"] = table;
        csv_capable = true;
        if (o.format == "csv") {
          csv = "k,ea\n";
          for (const auto& [k, ea] : am.table) csv += std::to_string(k) + "," + decimal_string(ea) + "\n";
        }
        if (o.strict && !am.exact)
          throw inconclusive_error("asymptotic multiplicity is an upper bound only");
      } else {
        throw parse_error("mult expects an ideal or a system");
      }
    } else if (app.got_subcommand(mj)) {
      command = "mj";
      Rat c = parse_rat(o.c_value);
      json in = load_json_file(o.in);
      auto kind = cli_detail::classify(in);
      if (kind == cli_detail::InputKind::Ideal) {
        result["ideal"] = ideal_to_json(howald_multiplier(json_to_ideal(in), c));
      } else if (kind == cli_detail::InputKind::System) {
        auto b = asymptotic_multiplier_adaptive(json_to_system(in), c, chain);
        result["ideal"] = ideal_to_json(b.ideal);
        result["stabilized"] = b.stabilized;
        result["region_certified"] = b.region_certified;
        result["last_index"] = b.last_index;
        if (o.strict && !b.stabilized)
          throw inconclusive_error("asymptotic multiplier ideal did not stabilize; lower bound only");
      } else {
        throw parse_error("mj expects an ideal or a system");
      }
    } else if (app.got_subcommand(els)) {
      command = "els";
      GradedSystem s = json_to_system(load_json_file(o.in));
      auto report = els_check(s, chain);
      result["rows"] = cli_detail::table_json(report.rows);
      result["exact"] = report.exact;
      if (report.exact_limit) result["exact_limit"] = rat_to_json(*report.exact_limit);
      result["sandwich_ok"] = report.sandwich_ok;
      result["gap_last"] = rat_to_json(report.gap_last);
      result["b_stabilized"] = report.b_stabilized;
      csv_capable = true;
      if (o.format == "csv") csv = cli_detail::table_csv(report.rows);
      if (o.strict && (!report.exact || !report.b_stabilized))
        throw inconclusive_error("els table is not fully exact on this chain");
    } else if (app.got_subcommand(kw)) {
      command = "kw";
      GradedSystem s = json_to_system(load_json_file(o.in));
      auto [lo, hi] = cli_detail::parse_range(o.m_range);
      auto report = kw_constant(s, cli_detail::parse_rat_list(o.c_grid), parse_rat(o.d_max), lo, hi,
                                o.ceil_index, parse_rat(o.d_step));
      result["C"] = rat_to_json(report.C);
      result["D"] = rat_to_json(report.D);
      result["verified"] = report.verified;
      result["ceil_index"] = report.ceil_index;
      result["m_range"] = json::array({report.m_min, report.m_max});
      result["b_lower_bound_only"] = report.b_lower_bound_only;
      auto witnesses_json = [](const std::vector<std::pair<int, ZVec>>& ws) {
        json arr = json::array();
        for (const auto& [m, g] : ws) arr.push_back(json{{"m", m}, {"monomial", zvec_to_json(g)}});
        return arr;
      };
      result["witnesses"] = witnesses_json(report.witnesses);
      json rejected = json::array();
      for (const auto& f : report.rejected)
        rejected.push_back(json{{"C", rat_to_json(f.C)},
                                {"D", rat_to_json(f.D)},
                                {"witnesses", witnesses_json(f.witnesses)}});
      result["rejected"] = rejected;
      csv_capable = true;
      if (o.format == "csv") {
        auto monomial_text = [](const ZVec& g) {
          std::string s;
          for (const Int& x : g) s += (s.empty() ? "" : " ") + to_string(x);
          return s;
        };
        csv = "C,D,verified,witness_m,witness_monomial\n";
        for (const auto& f : report.rejected) {
          csv += decimal_string(f.C) + "," + decimal_string(f.D) + ",false,";
          if (!f.witnesses.empty())
            csv += std::to_string(f.witnesses.front().first) + "," +
                   monomial_text(f.witnesses.front().second);
          else
            csv += ",";
          csv += "\n";
        }
        if (report.verified)
          csv += decimal_string(report.C) + "," + decimal_string(report.D) + ",true,,\n";
      }
      if (o.strict && report.b_lower_bound_only)
        throw inconclusive_error("containment verdicts used unstabilized multiplier ideals");
    } else if (app.got_subcommand(tame)) {
      command = "tame";
      json in = load_json_file(o.in);
      auto kind = cli_detail::classify(in);
      NewtonRegion p = simplex_region(1);
      if (kind == cli_detail::InputKind::Region) {
        p = json_to_region(in);
      } else if (kind == cli_detail::InputKind::System) {
        auto lr = limit_region(json_to_system(in), chain);
        if (!(lr.stabilized || lr.asserted))
          throw value_error("tame: system limit region unavailable; supply known_limit");
        p = lr.region;
      } else {
        throw parse_error("tame expects a region or a system");
      }
      auto report = tameness_check(p, o.m_max);
      json per_m = json::array();
      for (const auto& [m, c] : report.per_m)
        per_m.push_back(json{{"m", m}, {"C", rat_to_json(c)}});
      result["per_m"] = per_m;
      result["C"] = rat_to_json(report.C);
      result["verdict"] = report.verdict == TamenessVerdict::TameWithC ? "tame-with-C" : "inconclusive-growing";
      if (o.strict && report.verdict != TamenessVerdict::TameWithC)
        throw inconclusive_error("tameness constants keep growing on this range");
    } else if (app.got_subcommand(veq)) {
      command = "veq";
      GradedSystem s1 = json_to_system(load_json_file(o.in));
      GradedSystem s2 = json_to_system(load_json_file(o.in2));
      auto weights = default_weight_sample(s1.dim(), o.weights_sum);
      auto report = v_equivalent(s1, s2, weights, chain);
      result["verdict"] = report.verdict;
      result["exact"] = report.exact;
      json samples = json::array();
      for (const auto& [w, ab] : report.samples)
        samples.push_back(json{{"weight", weight_to_json(w)},
                               {"ord1", rat_to_json(ab.first)},
                               {"ord2", rat_to_json(ab.second)}});
      result["samples"] = samples;
      result["z1"] = b_divisor_to_json(b_divisor_sample(s1, weights, chain));
      result["z2"] = b_divisor_to_json(b_divisor_sample(s2, weights, chain));
      if (o.strict && !report.exact)
        throw inconclusive_error("v-equivalence decided on samples only");
    } else if (app.got_subcommand(mixed)) {
      command = "mixed";
      json in = load_json_file(o.in);
      if (!in.contains("items")) throw parse_error("mixed expects {\"items\": [ideal, ...]}");
      std::vector<MonomialIdeal> ideals;
      for (const auto& item : in.at("items")) ideals.push_back(json_to_ideal(item));
      result["e"] = rat_to_json(Rat(mixed_multiplicity(ideals)));
    } else if (app.got_subcommand(inter)) {
      command = "inter";
      json in = load_json_file(o.in);
      if (!in.contains("items")) throw parse_error("inter expects {\"items\": [system, ...]}");
      std::vector<GradedSystem> systems;
      for (const auto& item : in.at("items")) systems.push_back(json_to_system(item));
      result["intersection"] = rat_to_json(intersection_number(systems, chain));
    }

    if (o.format == "csv" && !csv_capable)
      throw parse_error("subcommand '" + command + "' has no CSV rendering; use --format json");

    json report;
    report["meta"] = json{{"tool", "newton-mult"},
                          {"version", kVersion},
                          {"command", command},
                          {"config", json{{"chain", o.chain_spec},
                                          {"format", o.format},
                                          {"strict", o.strict_s},
                                          {"ceil_index", o.ceil_index_s},
                                          {"weights_sum", o.weights_sum},
                                          {"grid_N", (std::int64_t)o.grid_n}}}};
    report["result"] = result;
    std::string rendered = o.format == "csv" && !csv.empty() ? csv : report.dump(2) + "\n";
    out << rendered;
    if (!o.out.empty()) {
      std::ofstream f(o.out);
      if (!f) throw value_error("cannot write output file: " + o.out);
      f << rendered;
    }
    return 0;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << std::endl;
    return 2;
  } catch (const inconclusive_error& e) {
    err << "inconclusive: " << e.what() << std::endl;
    return 4;
  } catch (const value_error& e) {
    err << "error: " << e.what() << std::endl;
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << std::endl;
    return 1;
  }
}

}  // namespace nmult
