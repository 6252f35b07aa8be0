#pragma once

#include <string>
#include <vector>

#include "wht/laurent.hpp"
#include "wht/ratfn.hpp"
#include "wht/wrt.hpp"

#include <json.hpp>

namespace wht {

// [[exp, coeff]...] sorted by exponent; coefficients that fit in 64 bits
// are JSON numbers, larger ones decimal strings.
nlohmann::json laurent_to_json(const Laurent& p);
// {"num": ..., "den": ...}
nlohmann::json ratfn_to_json(const RatFn& f);
nlohmann::json matrix_to_json(const std::vector<std::vector<RatFn>>& m);
nlohmann::json wrt_rows_to_json(const std::vector<WrtRow>& rows);

// The documented CLI schema:
// {"input", "invariant": {"num","den"}, "pretty", "wrt": [...]}.
nlohmann::json eval_report_json(const std::string& input, const RatFn& value,
                                const std::vector<WrtRow>* wrt = nullptr);

}  // namespace wht
