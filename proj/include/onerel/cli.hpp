#ifndef ONEREL_CLI_HPP
#define ONEREL_CLI_HPP

#include <cstdint>
#include <sstream>
#include <string>

#include "onerel/classify.hpp"
#include "onerel/map_text.hpp"
#include "onerel/oracle.hpp"
#include "onerel/report_json.hpp"
#include "onerel/small_cancellation.hpp"

namespace onerel {

struct CliRequest {
  enum class Command { Classify, CheckMap, Balance, Oracle, ScCheck };

  Command command = Command::Classify;
  std::string relator_text;
  std::string presentation_text;  // sc-check input
  long long n = 2;
  std::string map_text;  // check-map input
  bool json = false;
  bool trace = false;
  long long widen = 10;
  std::uint64_t seed = 1;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

namespace detail {

inline std::string witness_line(const Witnesses& w) {
  std::string out = "delta: ";
  out += w.delta_in ? "yes" : "no";
  out += "; alphas: {";
  bool first = true;
  for (const long long k : w.alpha_ks) {
    if (!first) out += ", ";
    out += std::to_string(k);
    first = false;
  }
  out += "}; betas: {";
  first = true;
  for (const long long k : w.beta_ks) {
    if (!first) out += ", ";
    out += std::to_string(k);
    first = false;
  }
  out += "}; zeta_0: ";
  out += w.zeta0_in ? "yes" : "no";
  return out;
}

inline std::string render_classification(const ClassificationReport& rep,
                                         bool with_trace) {
  std::ostringstream out;
  out << "out_class: " << to_string(rep.out_class) << "\n";
  out << "balanced relator: " << format_word(rep.balanced.s)
      << "  (n = " << rep.balanced.n << ")\n";
  if (rep.balanced.primitive) out << "flags: primitive\n";
  if (rep.balanced.in_derived) out << "flags: in derived subgroup\n";
  out << "witnesses: " << witness_line(rep.witnesses) << "\n";
  if (rep.scan) {
    const auto opt = [](const std::optional<long long>& v) {
      return v ? std::to_string(*v) : std::string("-");
    };
    out << "scan: min+ " << opt(rep.scan->min_plus) << ", max+ "
        << opt(rep.scan->max_plus) << ", min- " << opt(rep.scan->min_minus)
        << ", max- " << opt(rep.scan->max_minus) << "\n";
  }
  out << "Out(G) = " << rep.out_presentation.to_text();
  if (!rep.out_presentation.iso_label.empty())
    out << "  [" << rep.out_presentation.iso_label << "]";
  out << "\n";
  if (rep.aut_presentation) {
    out << "Aut(G) = " << rep.aut_presentation->to_text();
    if (!rep.aut_presentation->iso_label.empty())
      out << "  [" << rep.aut_presentation->iso_label << "]";
    out << "\n";
  }
  if (with_trace)
    for (const auto& line : rep.trace) out << "trace: " << line << "\n";
  return out.str();
}

inline RunResult run_classify(const CliRequest& req) {
  if (req.n <= 1)
    throw std::invalid_argument("classify: n must exceed 1");
  const Word r = parse_word(req.relator_text);
  const auto rep = classify_out(r, req.n);
  if (req.json) return {0, to_json(rep).dump(2) + "\n"};
  return {0, render_classification(rep, req.trace)};
}

inline RunResult run_check_map(const CliRequest& req) {
  if (req.n <= 1)
    throw std::invalid_argument("check-map: n must exceed 1");
  const Word r = parse_word(req.relator_text);
  const GenMap m = parse_genmap(req.map_text);
  const Word s = cyclic_reduce(r).core;
  const AutVerdict verdict = is_relator_auto(s, m);
  std::string text;
  switch (verdict) {
    case AutVerdict::NotAut: text = "NotAut"; break;
    case AutVerdict::FixesRelator: text = "FixesRelator"; break;
    case AutVerdict::InvertsRelator: text = "InvertsRelator"; break;
  }
  if (req.json) {
    nlohmann::json j{{"map", format_genmap(m)},
                     {"relator", format_word(s)},
                     {"verdict", text},
                     {"is_automorphism", verdict != AutVerdict::NotAut}};
    return {0, j.dump(2) + "\n"};
  }
  return {0, text + "\n"};
}

inline RunResult run_balance(const CliRequest& req) {
  const Word r = parse_word(req.relator_text);
  const auto bp = balance_relator(r, req.n > 1 ? req.n : 2);
  const long long g =
      std::gcd(std::abs(exponent_sum(r, Gen::A)),
               std::abs(exponent_sum(r, Gen::B)));
  if (req.json) {
    nlohmann::json j{{"s", format_word(bp.s)},
                     {"n", bp.n},
                     {"basis_change", format_genmap(bp.basis_change)},
                     {"flags",
                      {{"primitive", bp.primitive},
                       {"in_derived", bp.in_derived}}},
                     {"sigma_b_abs", std::abs(exponent_sum(bp.s, Gen::B))},
                     {"gcd_of_input_sums", g}};
    return {0, j.dump(2) + "\n"};
  }
  std::ostringstream out;
  out << "s = " << format_word(bp.s) << "\n";
  out << "basis change: " << format_genmap(bp.basis_change) << "\n";
  out << "|sigma_b(s)| = " << std::abs(exponent_sum(bp.s, Gen::B))
      << " = gcd of input exponent sums (" << g << ")\n";
  if (bp.primitive) out << "primitive relator\n";
  if (bp.in_derived) out << "relator lies in the derived subgroup\n";
  return {0, out.str()};
}

inline RunResult run_oracle(const CliRequest& req) {
  const Word r = parse_word(req.relator_text);
  const auto bp = balance_relator(r, req.n > 1 ? req.n : 2);
  if (detect_branch(bp) != Branch::Generic)
    throw std::invalid_argument(
        "oracle: relator balances into a non-generic branch");
  const Word& s = bp.s;
  const auto table = enumerate_family_auts(s);
  const bool scan_ok = scan_power_crosscheck(s);
  const bool finite = height_membership(s) == Cone::Neither;
  std::optional<bool> ranges_ok;
  if (finite) ranges_ok = verify_finite_candidate_ranges(s, req.widen);

  const auto set_to_json = [](const std::set<long long>& ks) {
    return nlohmann::json(ks);
  };
  if (req.json) {
    nlohmann::json j{
        {"balanced", format_word(s)},
        {"window", s.length() + 5},
        {"passes",
         {{"alpha", set_to_json(table.alpha_ks)},
          {"beta", set_to_json(table.beta_ks)},
          {"zeta", set_to_json(table.zeta_ks)},
          {"delta", set_to_json(table.delta_ks)}}},
        {"scan_power_crosscheck", scan_ok},
        {"candidate_ranges_sound",
         ranges_ok ? nlohmann::json(*ranges_ok) : nlohmann::json(nullptr)}};
    return {0, j.dump(2) + "\n"};
  }
  std::ostringstream out;
  out << "balanced relator: " << format_word(s) << "\n";
  const auto print_set = [&](const char* name,
                             const std::set<long long>& ks) {
    out << name << " passes at k = {";
    bool first = true;
    for (const long long k : ks) {
      if (!first) out << ", ";
      out << k;
      first = false;
    }
    out << "}\n";
  };
  print_set("alpha", table.alpha_ks);
  print_set("beta", table.beta_ks);
  print_set("zeta", table.zeta_ks);
  print_set("delta", table.delta_ks);
  out << "squared-relator scan crosscheck: " << (scan_ok ? "ok" : "FAILED")
      << "\n";
  if (ranges_ok)
    out << "candidate ranges sound (widen = " << req.widen
        << "): " << (*ranges_ok ? "ok" : "FAILED") << "\n";
  return {0, out.str()};
}

inline RunResult run_sc_check(const CliRequest& req) {
  const auto p = parse_presentation(req.presentation_text);
  const auto ss = symmetrize(p.relators);
  const long long piece =
      ss.members.size() >= 2 ? max_piece_length(ss) : 0;
  const bool sixth = satisfies_metric(p, 1, 6);
  const bool twenty_fourth = satisfies_metric(p, 1, 24);
  const auto rep = classify_sc_out(p);

  if (req.json) {
    nlohmann::json j{{"relators", nlohmann::json::array()},
                     {"max_piece_length", piece},
                     {"satisfies_C_1_6", sixth},
                     {"satisfies_C_1_24", twenty_fourth},
                     {"classification", to_json(rep)}};
    for (const Word& r : p.relators)
      j["relators"].push_back(format_word(r));
    return {0, j.dump(2) + "\n"};
  }
  std::ostringstream out;
  out << "relators: " << p.relators.size() << ", symmetrized members: "
      << ss.members.size() << "\n";
  out << "max piece length: " << piece << "\n";
  out << "C'(1/6): " << (sixth ? "yes" : "no")
      << "; C'(1/24): " << (twenty_fourth ? "yes" : "no") << "\n";
  if (!rep.failed_hypotheses.empty()) {
    for (const auto& f : rep.failed_hypotheses)
      out << "hypothesis failed: " << f << "\n";
  }
  if (rep.hypotheses_ok && rep.alpha_witnessed) {
    out << "witnessed: delta yes"
        << ", alpha " << (*rep.alpha_witnessed ? "yes" : "not witnessed")
        << ", beta " << (*rep.beta_witnessed ? "yes" : "not witnessed")
        << ", zeta " << (*rep.zeta_witnessed ? "yes" : "not witnessed")
        << "\n";
  }
  out << rep.summary << "\n";
  return {0, out.str()};
}

}  // namespace detail

// Exit codes: 0 success, 1 input error, 2 theory-violation diagnostic.
inline RunResult run(const CliRequest& req) {
  try {
    switch (req.command) {
      case CliRequest::Command::Classify: return detail::run_classify(req);
      case CliRequest::Command::CheckMap: return detail::run_check_map(req);
      case CliRequest::Command::Balance: return detail::run_balance(req);
      case CliRequest::Command::Oracle: return detail::run_oracle(req);
      case CliRequest::Command::ScCheck: return detail::run_sc_check(req);
    }
    return {1, "error: unknown command\n"};
  } catch (const theory_violation& e) {
    return {2, std::string("theory violation: ") + e.what() + "\n"};
  } catch (const parse_error& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace onerel

#endif  // ONEREL_CLI_HPP
