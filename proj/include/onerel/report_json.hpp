#ifndef ONEREL_REPORT_JSON_HPP
#define ONEREL_REPORT_JSON_HPP

#include <json.hpp>

#include "onerel/classify.hpp"
#include "onerel/small_cancellation.hpp"
#include "onerel/text.hpp"

namespace onerel {

inline nlohmann::json to_json(const ScanStats& st) {
  const auto opt = [](const std::optional<long long>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {{"min_plus", opt(st.min_plus)},
          {"max_plus", opt(st.max_plus)},
          {"min_minus", opt(st.min_minus)},
          {"max_minus", opt(st.max_minus)}};
}

inline nlohmann::json to_json(const Witnesses& w) {
  return {{"delta", w.delta_in},
          {"alphas", w.alpha_ks},
          {"betas", w.beta_ks},
          {"zeta0", w.zeta0_in}};
}

inline nlohmann::json to_json(const GroupPresentation& p) {
  return {{"generators", p.generators},
          {"relators", p.relators},
          {"iso_label", p.iso_label}};
}

inline nlohmann::json to_json(const ClassificationReport& rep) {
  nlohmann::json j;
  j["out_class"] = to_string(rep.out_class);
  j["witnesses"] = to_json(rep.witnesses);
  j["balanced"] = {{"s", format_word(rep.balanced.s)},
                   {"flags",
                    {{"primitive", rep.balanced.primitive},
                     {"in_derived", rep.balanced.in_derived}}}};
  j["scan"] = rep.scan ? to_json(*rep.scan) : nlohmann::json(nullptr);
  j["presentations"] = {
      {"out", to_json(rep.out_presentation)},
      {"aut", rep.aut_presentation ? to_json(*rep.aut_presentation)
                                   : nlohmann::json(nullptr)}};
  j["trace"] = rep.trace;
  return j;
}

inline nlohmann::json to_json(const ScOutReport& rep) {
  const auto opt_bool = [](const std::optional<bool>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["hypotheses_ok"] = rep.hypotheses_ok;
  j["failed_hypotheses"] = rep.failed_hypotheses;
  j["out_class"] = rep.out_class ? nlohmann::json(to_string(*rep.out_class))
                                 : nlohmann::json(nullptr);
  j["delta"] = rep.delta_holds;
  j["alpha_witnessed"] = opt_bool(rep.alpha_witnessed);
  j["beta_witnessed"] = opt_bool(rep.beta_witnessed);
  j["zeta_witnessed"] = opt_bool(rep.zeta_witnessed);
  j["b_order"] = rep.b_order ? nlohmann::json(*rep.b_order)
                             : nlohmann::json(nullptr);
  j["summary"] = rep.summary;
  return j;
}

}  // namespace onerel

#endif  // ONEREL_REPORT_JSON_HPP
