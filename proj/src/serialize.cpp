#include "wht/serialize.hpp"

namespace wht {

namespace {

nlohmann::json coeff_to_json(const mpz_class& c) {
  if (c.fits_slong_p()) return nlohmann::json(c.get_si());
  return nlohmann::json(c.get_str());
}

}  // namespace

nlohmann::json laurent_to_json(const Laurent& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [exp, coeff] : p.terms())
    arr.push_back(nlohmann::json::array({exp, coeff_to_json(coeff)}));
  return arr;
}

nlohmann::json ratfn_to_json(const RatFn& f) {
  return nlohmann::json{{"num", laurent_to_json(f.num())},
                        {"den", laurent_to_json(f.den())}};
}

nlohmann::json matrix_to_json(const std::vector<std::vector<RatFn>>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(ratfn_to_json(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

nlohmann::json wrt_rows_to_json(const std::vector<WrtRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r{{"r", row.r},
                     {"lhs", nlohmann::json::array({row.lhs.real(), row.lhs.imag()})},
                     {"rhs", nlohmann::json::array({row.rhs.real(), row.rhs.imag()})},
                     {"abs_err", row.abs_err},
                     {"status", row.status}};
    if (!row.reason.empty()) r["reason"] = row.reason;
    arr.push_back(std::move(r));
  }
  return arr;
}

nlohmann::json eval_report_json(const std::string& input, const RatFn& value,
                                const std::vector<WrtRow>* wrt) {
  nlohmann::json j{{"input", input},
                   {"invariant", ratfn_to_json(value)},
                   {"pretty", value.pretty()}};
  if (wrt) j["wrt"] = wrt_rows_to_json(*wrt);
  return j;
}

}  // namespace wht
