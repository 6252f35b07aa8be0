#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "wht/diagram.hpp"
#include "wht/ratfn.hpp"

namespace whtest {

inline std::string read_fixture_text(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline wht::Diagram load_fixture(const std::string& name) {
  return wht::parse_dsl(read_fixture_text(name));
}

// Identity tangle on n strands of the given color.
inline wht::Diagram identity_tangle(int n, int color = 1) {
  wht::Diagram d;
  d.bottom_colors.assign(n, color);
  d.top_colors.assign(n, color);
  return d;
}

// Random closed diagram built from cups, caps and crossings on colors
// {1, 2}, then force-closed with caps/merges/splits. Deterministic in the
// RNG state. max_width bounds the cabled width; max_crossings bounds the
// total number of cabled (strand-level) crossings, so that brute-force
// evaluation stays at no more than 2^max_crossings states.
inline wht::Diagram random_closed_diagram(std::mt19937& rng, int max_width = 8,
                                          int max_crossings = 10,
                                          int body_steps = 12) {
  using wht::Slice;
  wht::Diagram d;
  std::vector<int> prof;
  int crossings = 0;
  auto width = [&] {
    int w = 0;
    for (int c : prof) w += c;
    return w;
  };
  auto rnd = [&](int n) { return static_cast<int>(rng() % n); };

  for (int step = 0; step < body_steps; ++step) {
    int move = rnd(3);
    if (move == 0) {
      int color = 1 + rnd(2);
      if (width() + 2 * color <= max_width) {
        int pos = rnd(static_cast<int>(prof.size()) + 1);
        d.slices.push_back(Slice::cup(pos, color));
        prof.insert(prof.begin() + pos, 2, color);
        continue;
      }
    }
    if (move == 1 && prof.size() >= 2) {
      int pos = rnd(static_cast<int>(prof.size()) - 1);
      // A block crossing of colors (m, n) expands to m*n strand crossings.
      int cost = prof[pos] * prof[pos + 1];
      if (crossings + cost <= max_crossings) {
        d.slices.push_back(Slice::cross(pos, rnd(2) ? +1 : -1));
        std::swap(prof[pos], prof[pos + 1]);
        crossings += cost;
        continue;
      }
    }
    if (move == 2 && prof.size() >= 2) {
      // Cap the first adjacent equal-color pair if one exists.
      for (size_t i = 0; i + 1 < prof.size(); ++i) {
        if (prof[i] == prof[i + 1]) {
          d.slices.push_back(Slice::cap(static_cast<int>(i)));
          prof.erase(prof.begin() + i, prof.begin() + i + 2);
          break;
        }
      }
    }
  }

  // Force closure.
  while (!prof.empty()) {
    bool capped = false;
    for (size_t i = 0; i + 1 < prof.size(); ++i) {
      if (prof[i] == prof[i + 1]) {
        d.slices.push_back(Slice::cap(static_cast<int>(i)));
        prof.erase(prof.begin() + i, prof.begin() + i + 2);
        capped = true;
        break;
      }
    }
    if (capped) continue;
    if (prof.size() >= 2) {
      int a = prof[0], b = prof[1];
      int c = std::abs(a - b);
      d.slices.push_back(Slice::vmerge(0, a, b, c));
      prof.erase(prof.begin());
      prof[0] = c;
    } else {
      // Single strand; total color parity is even, so it is 0 or 2.
      int c = prof[0];
      d.slices.push_back(Slice::vsplit(0, c, c / 2, c / 2));
      d.slices.push_back(Slice::cap(0));
      prof.clear();
    }
  }
  return d;
}

// Random closed diagram with n_gates disk gates inserted at random heights.
inline wht::Diagram random_gated_diagram(std::mt19937& rng, int n_gates,
                                         int max_width = 6,
                                         int max_crossings = 6) {
  wht::Diagram d = random_closed_diagram(rng, max_width, max_crossings, 10);
  auto profile = wht::width_profile(d);
  auto rnd = [&](int n) { return static_cast<int>(rng() % n); };
  for (int g = 0; g < n_gates; ++g) {
    // Pick an insertion height whose profile is nonempty if possible.
    int at = rnd(static_cast<int>(profile.size()));
    for (int tries = 0; tries < 20 && profile[at].empty(); ++tries)
      at = rnd(static_cast<int>(profile.size()));
    int w = static_cast<int>(profile[at].size());
    int span = w == 0 ? 0 : 1 + rnd(w);
    int pos = w == span ? 0 : rnd(w - span + 1);
    d.slices.insert(d.slices.begin() + at,
                    wht::Slice::disk("G" + std::to_string(g + 1), pos, span));
    profile.insert(profile.begin() + at, profile[at]);
  }
  wht::validate(d);
  return d;
}

}  // namespace whtest
