#include "wht/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wht {

Slice Slice::cup(int pos, int color) {
  Slice s;
  s.kind = SliceKind::Cup;
  s.pos = pos;
  s.color = color;
  return s;
}

Slice Slice::cap(int pos) {
  Slice s;
  s.kind = SliceKind::Cap;
  s.pos = pos;
  return s;
}

Slice Slice::cross(int pos, int sign) {
  Slice s;
  s.kind = sign >= 0 ? SliceKind::CrossPos : SliceKind::CrossNeg;
  s.pos = pos;
  return s;
}

Slice Slice::vmerge(int pos, int a, int b, int c) {
  Slice s;
  s.kind = SliceKind::VertexMerge;
  s.pos = pos;
  s.a = a;
  s.b = b;
  s.c = c;
  return s;
}

Slice Slice::vsplit(int pos, int c, int a, int b) {
  Slice s;
  s.kind = SliceKind::VertexSplit;
  s.pos = pos;
  s.a = a;
  s.b = b;
  s.c = c;
  return s;
}

Slice Slice::disk(std::string id, int pos, int span) {
  Slice s;
  s.kind = SliceKind::DiskGate;
  s.disk_id = std::move(id);
  s.pos = pos;
  s.span = span;
  return s;
}

int Diagram::gate_count() const {
  int n = 0;
  for (const auto& s : slices)
    if (s.kind == SliceKind::DiskGate) ++n;
  return n;
}

std::vector<std::string> Diagram::gate_ids() const {
  std::vector<std::string> ids;
  for (const auto& s : slices)
    if (s.kind == SliceKind::DiskGate) ids.push_back(s.disk_id);
  return ids;
}

namespace {

bool admissible_colors(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return std::abs(a - b) <= c && c <= a + b;
}

// Applies one slice to the color profile; on violation throws an Error
// carrying `line` (1-based DSL line, or slice index + 1 for built diagrams).
void apply_slice(std::vector<int>& colors, const Slice& s,
                 std::set<std::string>& disk_ids, int line) {
  const int w = static_cast<int>(colors.size());
  switch (s.kind) {
    case SliceKind::Cup:
      if (s.pos < 0 || s.pos > w)
        throw Error(ErrorCode::PositionOutOfRange, "cup position out of range", line);
      if (s.color < 0)
        throw Error(ErrorCode::ColorMismatch, "negative cup color", line);
      colors.insert(colors.begin() + s.pos, 2, s.color);
      break;
    case SliceKind::Cap:
      if (s.pos < 0 || s.pos + 1 >= w)
        throw Error(ErrorCode::PositionOutOfRange, "cap position out of range", line);
      if (colors[s.pos] != colors[s.pos + 1])
        throw Error(ErrorCode::ColorMismatch, "cap over unequal colors", line);
      colors.erase(colors.begin() + s.pos, colors.begin() + s.pos + 2);
      break;
    case SliceKind::CrossPos:
    case SliceKind::CrossNeg:
      if (s.pos < 0 || s.pos + 1 >= w)
        throw Error(ErrorCode::PositionOutOfRange, "crossing position out of range", line);
      std::swap(colors[s.pos], colors[s.pos + 1]);
      break;
    case SliceKind::VertexMerge:
      if (s.pos < 0 || s.pos + 1 >= w)
        throw Error(ErrorCode::PositionOutOfRange, "vmerge position out of range", line);
      if (colors[s.pos] != s.a || colors[s.pos + 1] != s.b)
        throw Error(ErrorCode::ColorMismatch, "vmerge colors do not match strands", line);
      if (!admissible_colors(s.a, s.b, s.c))
        throw Error(ErrorCode::InadmissibleVertex, "inadmissible vertex triple", line);
      colors.erase(colors.begin() + s.pos);
      colors[s.pos] = s.c;
      break;
    case SliceKind::VertexSplit:
      if (s.pos < 0 || s.pos >= w)
        throw Error(ErrorCode::PositionOutOfRange, "vsplit position out of range", line);
      if (colors[s.pos] != s.c)
        throw Error(ErrorCode::ColorMismatch, "vsplit color does not match strand", line);
      if (!admissible_colors(s.a, s.b, s.c))
        throw Error(ErrorCode::InadmissibleVertex, "inadmissible vertex triple", line);
      colors[s.pos] = s.a;
      colors.insert(colors.begin() + s.pos + 1, s.b);
      break;
    case SliceKind::DiskGate:
      if (s.pos < 0 || s.span < 0 || s.pos + s.span > w)
        throw Error(ErrorCode::PositionOutOfRange, "disk gate span out of range", line);
      if (!disk_ids.insert(s.disk_id).second)
        throw Error(ErrorCode::DuplicateDiskId, "duplicate disk id " + s.disk_id, line);
      break;
  }
}

std::vector<std::vector<int>> check_profile(const Diagram& d,
                                            const std::vector<int>* lines) {
  std::vector<std::vector<int>> profile;
  std::vector<int> colors = d.bottom_colors;
  std::set<std::string> ids;
  profile.push_back(colors);
  for (size_t i = 0; i < d.slices.size(); ++i) {
    int line = lines ? (*lines)[i] : static_cast<int>(i) + 1;
    apply_slice(colors, d.slices[i], ids, line);
    profile.push_back(colors);
  }
  if (colors != d.top_colors) {
    int line = d.slices.empty() ? 1
               : (lines ? lines->back() : static_cast<int>(d.slices.size()));
    throw Error(ErrorCode::ColorMismatch,
                "final profile does not match top boundary", line);
  }
  return profile;
}

}  // namespace

std::vector<std::vector<int>> width_profile(const Diagram& d) {
  return check_profile(d, nullptr);
}

void validate(const Diagram& d) { check_profile(d, nullptr); }

std::vector<Error> validate_all(const Diagram& d) {
  // Profile errors cascade, so report the first structural failure and
  // keep scanning only for independent duplicate-id violations.
  std::vector<Error> errs;
  try {
    check_profile(d, nullptr);
  } catch (const Error& e) {
    errs.push_back(e);
  }
  std::set<std::string> ids;
  for (size_t i = 0; i < d.slices.size(); ++i) {
    const Slice& s = d.slices[i];
    if (s.kind == SliceKind::DiskGate && !ids.insert(s.disk_id).second) {
      Error dup(ErrorCode::DuplicateDiskId, "duplicate disk id " + s.disk_id,
                static_cast<int>(i) + 1);
      bool have = false;
      for (const auto& e : errs)
        if (e.code() == ErrorCode::DuplicateDiskId && e.line() == dup.line())
          have = true;
      if (!have) errs.push_back(dup);
    }
  }
  return errs;
}

Diagram parse_dsl(const std::string& text) {
  Diagram d;
  std::vector<int> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_slice = false, saw_top = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto need_int = [&](const char* what) {
      long v;
      if (!(ls >> v))
        throw Error(ErrorCode::SyntaxError,
                    std::string("expected ") + what, lineno);
      return static_cast<int>(v);
    };
    if (saw_top)
      throw Error(ErrorCode::SyntaxError, "content after top footer", lineno);
    if (tok == "bottom") {
      if (saw_slice || !d.bottom_colors.empty())
        throw Error(ErrorCode::SyntaxError, "misplaced bottom header", lineno);
      int c;
      while (ls >> c) d.bottom_colors.push_back(c);
      continue;
    }
    if (tok == "top") {
      int c;
      while (ls >> c) d.top_colors.push_back(c);
      saw_top = true;
      continue;
    }
    saw_slice = true;
    if (tok == "cup") {
      int p = need_int("position"), c = need_int("color");
      d.slices.push_back(Slice::cup(p, c));
    } else if (tok == "cap") {
      d.slices.push_back(Slice::cap(need_int("position")));
    } else if (tok == "x+") {
      d.slices.push_back(Slice::cross(need_int("position"), +1));
    } else if (tok == "x-") {
      d.slices.push_back(Slice::cross(need_int("position"), -1));
    } else if (tok == "vmerge") {
      int p = need_int("position"), a = need_int("color a"),
          b = need_int("color b"), c = need_int("color c");
      d.slices.push_back(Slice::vmerge(p, a, b, c));
    } else if (tok == "vsplit") {
      int p = need_int("position"), c = need_int("color c"),
          a = need_int("color a"), b = need_int("color b");
      d.slices.push_back(Slice::vsplit(p, c, a, b));
    } else if (tok == "disk") {
      std::string id;
      if (!(ls >> id))
        throw Error(ErrorCode::SyntaxError, "expected disk id", lineno);
      int p = need_int("position"), span = need_int("span");
      d.slices.push_back(Slice::disk(id, p, span));
    } else {
      throw Error(ErrorCode::SyntaxError, "unknown slice '" + tok + "'", lineno);
    }
    std::string extra;
    if (ls >> extra)
      throw Error(ErrorCode::SyntaxError, "trailing tokens", lineno);
    lines.push_back(lineno);
  }
  check_profile(d, &lines);
  return d;
}

std::string pretty_dsl(const Diagram& d) {
  std::ostringstream out;
  if (!d.bottom_colors.empty()) {
    out << "bottom";
    for (int c : d.bottom_colors) out << " " << c;
    out << "\n";
  }
  for (const auto& s : d.slices) {
    switch (s.kind) {
      case SliceKind::Cup: out << "cup " << s.pos << " " << s.color; break;
      case SliceKind::Cap: out << "cap " << s.pos; break;
      case SliceKind::CrossPos: out << "x+ " << s.pos; break;
      case SliceKind::CrossNeg: out << "x- " << s.pos; break;
      case SliceKind::VertexMerge:
        out << "vmerge " << s.pos << " " << s.a << " " << s.b << " " << s.c;
        break;
      case SliceKind::VertexSplit:
        out << "vsplit " << s.pos << " " << s.c << " " << s.a << " " << s.b;
        break;
      case SliceKind::DiskGate:
        out << "disk " << s.disk_id << " " << s.pos << " " << s.span;
        break;
    }
    out << "\n";
  }
  if (!d.top_colors.empty()) {
    out << "top";
    for (int c : d.top_colors) out << " " << c;
    out << "\n";
  }
  return out.str();
}

Diagram mirror(const Diagram& d) {
  Diagram m = d;
  for (auto& s : m.slices) {
    if (s.kind == SliceKind::CrossPos)
      s.kind = SliceKind::CrossNeg;
    else if (s.kind == SliceKind::CrossNeg)
      s.kind = SliceKind::CrossPos;
  }
  return m;
}

Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
  if (!d1.closed() || !d2.closed())
    throw Error(ErrorCode::BoundaryMismatch, "disjoint_union requires closed diagrams");
  Diagram u = d1;
  std::set<std::string> ids;
  for (const auto& id : d1.gate_ids()) ids.insert(id);
  for (Slice s : d2.slices) {
    if (s.kind == SliceKind::DiskGate) {
      std::string id = s.disk_id;
      int k = 2;
      while (!ids.insert(id).second) id = s.disk_id + "_" + std::to_string(k++);
      s.disk_id = id;
    }
    u.slices.push_back(std::move(s));
  }
  return u;
}

Diagram compose_vertical(const Diagram& d1, const Diagram& d2) {
  if (d1.top_colors != d2.bottom_colors)
    throw Error(ErrorCode::BoundaryMismatch, "compose_vertical: boundary mismatch");
  Diagram r;
  r.bottom_colors = d1.bottom_colors;
  r.top_colors = d2.top_colors;
  r.slices = d1.slices;
  std::set<std::string> ids;
  for (const auto& id : d1.gate_ids()) ids.insert(id);
  for (Slice s : d2.slices) {
    if (s.kind == SliceKind::DiskGate) {
      std::string id = s.disk_id;
      int k = 2;
      while (!ids.insert(id).second) id = s.disk_id + "_" + std::to_string(k++);
      s.disk_id = id;
    }
    r.slices.push_back(std::move(s));
  }
  return r;
}

Diagram vertical_flip(const Diagram& d) {
  auto profile = width_profile(d);
  Diagram f;
  f.bottom_colors = d.top_colors;
  f.top_colors = d.bottom_colors;
  for (size_t i = d.slices.size(); i-- > 0;) {
    const Slice& s = d.slices[i];
    switch (s.kind) {
      case SliceKind::Cup: f.slices.push_back(Slice::cap(s.pos)); break;
      case SliceKind::Cap:
        f.slices.push_back(Slice::cup(s.pos, profile[i][s.pos]));
        break;
      case SliceKind::CrossPos: f.slices.push_back(Slice::cross(s.pos, +1)); break;
      case SliceKind::CrossNeg: f.slices.push_back(Slice::cross(s.pos, -1)); break;
      case SliceKind::VertexMerge:
        f.slices.push_back(Slice::vsplit(s.pos, s.c, s.a, s.b));
        break;
      case SliceKind::VertexSplit:
        f.slices.push_back(Slice::vmerge(s.pos, s.a, s.b, s.c));
        break;
      case SliceKind::DiskGate: f.slices.push_back(s); break;
    }
  }
  return f;
}

Diagram closure_of_tangle(const Diagram& d) {
  if (d.bottom_colors != d.top_colors)
    throw Error(ErrorCode::BoundaryMismatch, "closure requires equal boundaries");
  const int n = static_cast<int>(d.bottom_colors.size());
  Diagram c;
  for (int i = 0; i < n; ++i)
    c.slices.push_back(Slice::cup(i, d.bottom_colors[i]));
  for (const auto& s : d.slices) c.slices.push_back(s);
  for (int i = n - 1; i >= 0; --i) c.slices.push_back(Slice::cap(i));
  return c;
}

Diagram expand_gate_to_belt(const Diagram& d, const std::string& disk_id,
                            int belt_color, bool mirror_belt) {
  Diagram r;
  r.bottom_colors = d.bottom_colors;
  r.top_colors = d.top_colors;
  bool found = false;
  const int sign = mirror_belt ? +1 : -1;
  for (const auto& s : d.slices) {
    if (s.kind == SliceKind::DiskGate && s.disk_id == disk_id) {
      found = true;
      if (belt_color == 0) continue;  // 0-colored belt is deletable
      const int p = s.pos, sp = s.span;
      r.slices.push_back(Slice::cup(p + sp, belt_color));
      for (int q = p + sp - 1; q >= p; --q) r.slices.push_back(Slice::cross(q, sign));
      for (int q = p; q <= p + sp - 1; ++q) r.slices.push_back(Slice::cross(q, sign));
      r.slices.push_back(Slice::cap(p + sp));
    } else {
      r.slices.push_back(s);
    }
  }
  if (!found)
    throw Error(ErrorCode::Internal, "no disk gate named " + disk_id);
  return r;
}

}  // namespace wht
