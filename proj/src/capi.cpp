#include "wht.h"

#include <cstring>
#include <string>

#include "wht/diagram.hpp"
#include "wht/engine.hpp"
#include "wht/serialize.hpp"
#include "wht/tqft.hpp"
#include "wht/wrt.hpp"

struct wht_diagram {
  wht::Diagram d;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wht_rc rc_of(const wht::Error& e) {
  using wht::ErrorCode;
  switch (e.code()) {
    case ErrorCode::SyntaxError:
      return WHT_ERR_PARSE;
    case ErrorCode::PositionOutOfRange:
    case ErrorCode::ColorMismatch:
    case ErrorCode::InadmissibleVertex:
    case ErrorCode::DuplicateDiskId:
    case ErrorCode::NotClosed:
    case ErrorCode::HasDiskGates:
    case ErrorCode::BoundaryMismatch:
      return WHT_ERR_INVALID;
    case ErrorCode::DivisionByZero:
    case ErrorCode::PoleAtPoint:
    case ErrorCode::InadmissibleTriple:
    case ErrorCode::SingularBasis:
    case ErrorCode::NotSingleWormhole:
    case ErrorCode::NonLaurentResult:
    case ErrorCode::ColorOutOfRange:
    case ErrorCode::DenominatorZero:
      return WHT_ERR_DOMAIN;
    case ErrorCode::Internal:
      return WHT_ERR_INTERNAL;
  }
  return WHT_ERR_INTERNAL;
}

nlohmann::json matrix_pretty_json(const std::vector<std::vector<wht::RatFn>>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.pretty());
    rows.push_back(std::move(r));
  }
  return rows;
}

wht_rc set_error(const wht::Error& e, wht_rc rc_override = WHT_OK) {
  g_last_error = std::string(e.what()) + " (" + wht::error_code_name(e.code()) + ")";
  return rc_override != WHT_OK ? rc_override : rc_of(e);
}

template <typename Fn>
wht_rc guarded(Fn&& fn) {
  try {
    fn();
    return WHT_OK;
  } catch (const wht::Error& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WHT_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* wht_version(void) { return "1.0.0"; }

const char* wht_last_error(void) { return g_last_error.c_str(); }

void wht_string_free(char* s) { delete[] s; }

wht_rc wht_diagram_parse(const char* text, wht_diagram** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return WHT_ERR_INVALID;
  }
  *out = nullptr;
  try {
    auto* h = new wht_diagram{wht::parse_dsl(text)};
    *out = h;
    return WHT_OK;
  } catch (const wht::Error& e) {
    return set_error(e, WHT_ERR_PARSE);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WHT_ERR_INTERNAL;
  }
}

void wht_diagram_free(wht_diagram* d) { delete d; }

wht_rc wht_diagram_pretty(const wht_diagram* d, char** out) {
  if (!d || !out) {
    g_last_error = "null argument";
    return WHT_ERR_INVALID;
  }
  return guarded([&] { *out = dup_string(wht::pretty_dsl(d->d)); });
}

wht_rc wht_eval(const wht_diagram* d, int use_oracle, char** pretty_out,
                char** json_out) {
  if (!d) {
    g_last_error = "null diagram";
    return WHT_ERR_INVALID;
  }
  return guarded([&] {
    wht::RatFn v = wht::bracket(d->d, wht::FusionOrder::LeftComb,
                                use_oracle != 0);
    if (pretty_out) *pretty_out = dup_string(v.pretty());
    if (json_out)
      *json_out =
          dup_string(wht::eval_report_json(wht::pretty_dsl(d->d), v).dump());
  });
}

wht_rc wht_dim(const int* colors, int n, long* out) {
  if ((!colors && n > 0) || n < 0 || !out) {
    g_last_error = "bad dimension request";
    return WHT_ERR_INVALID;
  }
  return guarded([&] {
    wht::MarkedSphere s;
    s.colors.assign(colors, colors + n);
    for (int c : s.colors)
      if (c < 0)
        throw wht::Error(wht::ErrorCode::ColorOutOfRange, "negative color");
    *out = wht::dim_v(s);
  });
}

wht_rc wht_gram(int n, int want_det, char** json_out) {
  if (n < 1 || !json_out) {
    g_last_error = "gram requires n >= 1";
    return WHT_ERR_INVALID;
  }
  return guarded([&] {
    wht::GramMatrix g = wht::gram_matrix_catalan(n);
    nlohmann::json j{{"n", n},
                     {"entries", wht::matrix_to_json(g.entries)},
                     {"entries_pretty", matrix_pretty_json(g.entries)}};
    if (want_det) {
      wht::RatFn det = wht::determinant(g.entries);
      j["det"] = wht::ratfn_to_json(det);
      j["det_pretty"] = det.pretty();
      auto lp = det.as_laurent();
      long deg = (lp && !lp->is_zero()) ? lp->max_exp() / 2 : -1;
      j["det_degree"] = deg;
      j["degree_ok"] = wht::gram_det_degree_check(n);
    }
    *json_out = dup_string(j.dump());
  });
}

wht_rc wht_matrix(const wht_diagram* d, char** json_out) {
  if (!d || !json_out) {
    g_last_error = "null argument";
    return WHT_ERR_INVALID;
  }
  return guarded([&] {
    wht::MarkedSphere src{d->d.bottom_colors}, tgt{d->d.top_colors};
    auto b1 = wht::tree_basis(src);
    auto b2 = wht::tree_basis(tgt);
    wht::MorphismMatrix m = wht::morphism_matrix(d->d, b1, b2);
    nlohmann::json j{{"source", src.colors},
                     {"target", tgt.colors},
                     {"entries", wht::matrix_to_json(m.entries)},
                     {"entries_pretty", matrix_pretty_json(m.entries)}};
    if (src.colors == tgt.colors) {
      wht::RatFn tr = wht::trace_morphism(m);
      j["trace"] = wht::ratfn_to_json(tr);
      j["trace_pretty"] = tr.pretty();
    }
    *json_out = dup_string(j.dump());
  });
}

wht_rc wht_wrt_check(const wht_diagram* d, int r_lo, int r_hi, double tol,
                     char** json_out, int* all_pass) {
  if (!d || r_lo < 3 || r_hi < r_lo) {
    g_last_error = "bad wrt-check request";
    return WHT_ERR_INVALID;
  }
  return guarded([&] {
    auto rows = wht::convergence_check(d->d, r_lo, r_hi, tol);
    bool ok = true;
    for (const auto& row : rows)
      if (row.status == "fail") ok = false;
    if (all_pass) *all_pass = ok ? 1 : 0;
    if (json_out) *json_out = dup_string(wht::wrt_rows_to_json(rows).dump());
  });
}

}  // extern "C"
