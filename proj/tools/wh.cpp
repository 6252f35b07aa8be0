// Command-line front end; talks to the engine exclusively through the
// C API in wht.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wht.h"

namespace {

constexpr int kExitUser = 1;      // parse / validation / argument errors
constexpr int kExitInternal = 2;  // engine contract violation
constexpr int kExitWrtFail = 3;   // wrt-check had a failing r

int fail(wht_rc rc) {
  std::cerr << "error: " << wht_last_error() << "\n";
  return rc == WHT_ERR_INTERNAL ? kExitInternal : kExitUser;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

struct DiagramHandle {
  wht_diagram* d = nullptr;
  ~DiagramHandle() { wht_diagram_free(d); }
};

struct StringOut {
  char* s = nullptr;
  ~StringOut() { wht_string_free(s); }
};

int load_diagram(const std::string& path, DiagramHandle& h) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitUser;
  }
  wht_rc rc = wht_diagram_parse(text.c_str(), &h.d);
  if (rc != WHT_OK) return fail(rc);
  return 0;
}

bool parse_points(const std::string& arg, std::vector<int>& out) {
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) return false;
      out.push_back(v);
    } catch (...) {
      return false;
    }
  }
  return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of colored graphs in wormhole spaces"};
  app.require_subcommand(1);

  std::string file;
  bool use_oracle = false, as_json = false, want_det = false;
  std::string points_arg, r_range = "5..10";
  int gram_n = 1;
  double tol = 1e-9;

  auto* c_eval = app.add_subcommand("eval", "Evaluate the invariant of a closed diagram");
  c_eval->add_option("file", file, "Diagram file (.wh)")->required();
  c_eval->add_flag("--oracle", use_oracle, "Use the brute-force evaluator");
  c_eval->add_flag("--json", as_json, "Emit JSON");

  auto* c_parse = app.add_subcommand("parse", "Parse and reprint a diagram");
  c_parse->add_option("file", file, "Diagram file (.wh)")->required();

  auto* c_dim = app.add_subcommand("dim", "Dimension of V(sphere with colored points)");
  c_dim->add_option("--points", points_arg, "Comma-separated colors")->required();

  auto* c_gram = app.add_subcommand("gram", "Gram matrix of the Catalan basis");
  c_gram->add_option("-n", gram_n, "Half the number of points")->required();
  c_gram->add_flag("--det", want_det, "Also print the determinant");
  c_gram->add_flag("--json", as_json, "Emit JSON");

  auto* c_matrix = app.add_subcommand("matrix", "Morphism matrix of a tangle");
  c_matrix->add_option("file", file, "Tangle file with declared boundaries")->required();
  c_matrix->add_flag("--json", as_json, "Emit JSON");

  auto* c_wrt = app.add_subcommand("wrt-check", "Root-of-unity cross-check");
  c_wrt->add_option("file", file, "Diagram file (.wh)")->required();
  c_wrt->add_option("--r-range", r_range, "Range a..b of roots (default 5..10)");
  c_wrt->add_option("--tol", tol, "Tolerance (default 1e-9)");
  c_wrt->add_flag("--json", as_json, "Emit JSON");

  CLI11_PARSE(app, argc, argv);

  if (c_eval->parsed()) {
    DiagramHandle h;
    if (int rc = load_diagram(file, h)) return rc;
    StringOut pretty, json;
    wht_rc rc = wht_eval(h.d, use_oracle ? 1 : 0, &pretty.s, &json.s);
    if (rc != WHT_OK) return fail(rc);
    std::cout << (as_json ? json.s : pretty.s) << "\n";
    return 0;
  }

  if (c_parse->parsed()) {
    DiagramHandle h;
    if (int rc = load_diagram(file, h)) return rc;
    StringOut pretty;
    wht_rc rc = wht_diagram_pretty(h.d, &pretty.s);
    if (rc != WHT_OK) return fail(rc);
    std::cout << pretty.s;
    return 0;
  }

  if (c_dim->parsed()) {
    std::vector<int> colors;
    if (!parse_points(points_arg, colors)) {
      std::cerr << "error: malformed --points list\n";
      return kExitUser;
    }
    long dim = 0;
    wht_rc rc = wht_dim(colors.data(), static_cast<int>(colors.size()), &dim);
    if (rc != WHT_OK) return fail(rc);
    std::cout << dim << "\n";
    return 0;
  }

  if (c_gram->parsed()) {
    if (gram_n < 1) {
      std::cerr << "error: -n must be >= 1\n";
      return kExitUser;
    }
    StringOut json;
    wht_rc rc = wht_gram(gram_n, want_det ? 1 : 0, &json.s);
    if (rc != WHT_OK) return fail(rc);
    if (as_json) {
      std::cout << json.s << "\n";
      return 0;
    }
    auto j = nlohmann::json::parse(json.s);
    for (const auto& row : j["entries_pretty"]) {
      std::cout << "[";
      for (size_t i = 0; i < row.size(); ++i)
        std::cout << (i ? ", " : "") << row[i].get<std::string>();
      std::cout << "]\n";
    }
    if (want_det) {
      std::cout << "det = " << j["det_pretty"].get<std::string>() << "\n";
      std::cout << "degree in d = " << j["det_degree"].get<long>()
                << (j["degree_ok"].get<bool>() ? " (expected)" : " (UNEXPECTED)")
                << "\n";
    }
    return 0;
  }

  if (c_matrix->parsed()) {
    DiagramHandle h;
    if (int rc = load_diagram(file, h)) return rc;
    StringOut json;
    wht_rc rc = wht_matrix(h.d, &json.s);
    if (rc != WHT_OK) return fail(rc);
    if (as_json) {
      std::cout << json.s << "\n";
      return 0;
    }
    auto j = nlohmann::json::parse(json.s);
    for (const auto& row : j["entries_pretty"]) {
      std::cout << "[";
      for (size_t i = 0; i < row.size(); ++i)
        std::cout << (i ? ", " : "") << row[i].get<std::string>();
      std::cout << "]\n";
    }
    if (j.contains("trace_pretty"))
      std::cout << "trace = " << j["trace_pretty"].get<std::string>() << "\n";
    return 0;
  }

  if (c_wrt->parsed()) {
    int r_lo = 0, r_hi = 0;
    if (std::sscanf(r_range.c_str(), "%d..%d", &r_lo, &r_hi) != 2 ||
        r_lo < 3 || r_hi < r_lo) {
      std::cerr << "error: --r-range must be a..b with a >= 3\n";
      return kExitUser;
    }
    DiagramHandle h;
    if (int rc = load_diagram(file, h)) return rc;
    StringOut json;
    int all_pass = 0;
    wht_rc rc = wht_wrt_check(h.d, r_lo, r_hi, tol, &json.s, &all_pass);
    if (rc != WHT_OK) return fail(rc);
    if (as_json) {
      std::cout << json.s << "\n";
    } else {
      auto rows = nlohmann::json::parse(json.s);
      for (const auto& row : rows) {
        std::cout << "r=" << row["r"].get<int>() << " "
                  << row["status"].get<std::string>();
        if (row["status"] == "skip")
          std::cout << " (" << row["reason"].get<std::string>() << ")";
        else
          std::cout << " abs_err=" << row["abs_err"].get<double>();
        std::cout << "\n";
      }
    }
    return all_pass ? 0 : kExitWrtFail;
  }

  return kExitUser;
}
