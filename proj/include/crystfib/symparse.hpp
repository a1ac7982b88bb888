#pragma once

#include "crystfib/affine.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace crystfib {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline const char* axis_letters() { return "xyzw"; }
}

// Parses one symmetry operation like "-x,y+1/2,-z" into a point matrix and a
// translation vector.  Coefficients of axis symbols are +-1; at most one
// rational constant per coordinate; the constant is kept exact (not reduced
// mod 1).
inline AffineElement parse_symop(const std::string& s, size_t dim) {
  if (dim < 1 || dim > 4) throw ParseError("dimension must be 1..4");
  IntMat point(dim, dim);
  RatVec trans(dim);

  size_t coord = 0;
  size_t i = 0;
  auto fail = [&](const std::string& msg, size_t pos) {
    std::ostringstream os;
    os << "symop '" << s << "': " << msg << " at position " << pos;
    throw ParseError(os.str());
  };

  std::vector<bool> seen_axis(dim, false);
  bool seen_const = false;
  bool any_term = false;

  auto end_coordinate = [&](size_t pos) {
    if (!any_term) fail("empty coordinate", pos);
    seen_axis.assign(dim, false);
    seen_const = false;
    any_term = false;
    ++coord;
  };

  while (true) {
    // skip spaces
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    if (i == s.size() || s[i] == ',') {
      size_t pos = i;
      if (coord >= dim) fail("too many coordinates", pos);
      end_coordinate(pos);
      if (i == s.size()) break;
      ++i;
      continue;
    }
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    if (i == s.size()) fail("dangling sign", i);
    char c = std::tolower((unsigned char)s[i]);
    const char* axes = detail::axis_letters();
    const char* found = nullptr;
    for (size_t a = 0; a < dim; ++a)
      if (c == axes[a]) { found = axes + a; break; }
    if (found) {
      size_t axis = (size_t)(found - axes);
      if (coord >= dim) fail("too many coordinates", i);
      if (seen_axis[axis]) fail(std::string("repeated axis '") + c + "'", i);
      seen_axis[axis] = true;
      point(coord, axis) = sign;
      any_term = true;
      ++i;
    } else if (std::isdigit((unsigned char)c)) {
      if (coord >= dim) fail("too many coordinates", i);
      if (seen_const) fail("second constant term", i);
      size_t start = i;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
      Int num(s.substr(start, i - start));
      Int den = 1;
      if (i < s.size() && s[i] == '/') {
        ++i;
        size_t ds = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (ds == i) fail("missing denominator", i);
        den = Int(s.substr(ds, i - ds));
        if (den == 0) fail("zero denominator", i);
      }
      trans[coord] = Rat(Int(sign) * num, den);
      seen_const = true;
      any_term = true;
    } else {
      fail(std::string("unexpected character '") + s[i] + "'", i);
    }
  }
  if (coord != dim) fail("wrong coordinate count", s.size());
  return AffineElement(point, trans);
}

inline std::string format_symop(const AffineElement& e) {
  const char* axes = detail::axis_letters();
  std::string out;
  for (size_t i = 0; i < e.dim(); ++i) {
    if (i) out += ",";
    bool first = true;
    for (size_t j = 0; j < e.dim(); ++j) {
      if (e.point(i, j) == 0) continue;
      if (e.point(i, j) > 0) {
        if (!first) out += "+";
      } else {
        out += "-";
      }
      out += axes[j];
      first = false;
    }
    if (e.trans[i] != 0 || first) {
      Rat t = e.trans[i];
      if (t >= 0 && !first) out += "+";
      out += rat_to_string(t);
      first = false;
    }
  }
  return out;
}

struct CatalogEntry {
  std::string id;    // "<dim>/<IT>"
  size_t dim = 0;
  int it_number = 0;
  std::string name;
  RatMat gram;       // n x n; identity when unspecified
  std::vector<AffineElement> ops;
  std::vector<std::string> op_strings;
};

namespace detail {

inline Rat parse_rat_token(const std::string& tok, size_t line_no) {
  size_t slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(tok));
    Int num(tok.substr(0, slash));
    Int den(tok.substr(slash + 1));
    if (den == 0) throw std::exception();
    return Rat(num, den);
  } catch (...) {
    std::ostringstream os;
    os << "line " << line_no << ": bad rational '" << tok << "'";
    throw ParseError(os.str());
  }
}

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

// Parses the line-oriented catalog format:
//   [group]
//   id = <dim>/<IT>
//   name = <text>
//   gram = r11 r12 ...; r21 ...; ...   (optional, identity when absent)
//   op = <symop>                       (one per non-translation generator)
// '#' starts a comment; the translations e_1+I..e_n+I are implicit.
inline std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::vector<std::string> seen_ids;
  CatalogEntry cur;
  bool open = false;
  bool gram_given = false;
  std::vector<std::string> pending_ops;
  size_t line_no = 0;
  size_t group_line = 0;

  auto fail = [&](size_t ln, const std::string& msg) {
    std::ostringstream os;
    os << "line " << ln << ": " << msg;
    throw ParseError(os.str());
  };

  auto finish = [&]() {
    if (!open) return;
    if (cur.id.empty()) fail(group_line, "[group] without id");
    for (const std::string& sid : seen_ids)
      if (sid == cur.id) fail(group_line, "duplicate id '" + cur.id + "'");
    seen_ids.push_back(cur.id);
    if (!gram_given) cur.gram = to_rat_mat(IntMat::identity(cur.dim));
    try {
      GramForm check(cur.gram);
      (void)check;
    } catch (const std::exception& e) {
      fail(group_line, std::string("bad gram for '") + cur.id + "': " + e.what());
    }
    for (const std::string& opstr : pending_ops) {
      try {
        cur.ops.push_back(parse_symop(opstr, cur.dim));
        cur.op_strings.push_back(opstr);
      } catch (const std::exception& e) {
        fail(group_line, std::string("bad op in '") + cur.id + "': " + e.what());
      }
    }
    entries.push_back(cur);
    cur = CatalogEntry();
    pending_ops.clear();
    gram_given = false;
    open = false;
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line == "[group]") {
      finish();
      open = true;
      group_line = line_no;
      continue;
    }
    if (!open) fail(line_no, "content before [group] header");
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (key == "id") {
      size_t slash = value.find('/');
      if (slash == std::string::npos) fail(line_no, "id must be <dim>/<IT>");
      try {
        cur.dim = std::stoul(value.substr(0, slash));
        cur.it_number = std::stoi(value.substr(slash + 1));
      } catch (...) {
        fail(line_no, "bad id '" + value + "'");
      }
      if (cur.dim < 1 || cur.dim > 4) fail(line_no, "dimension out of range in id");
      if (cur.dim == 2 && (cur.it_number < 1 || cur.it_number > 17))
        fail(line_no, "2-dimensional IT number out of range [1,17]");
      if (cur.dim == 3 && (cur.it_number < 1 || cur.it_number > 230))
        fail(line_no, "3-dimensional IT number out of range [1,230]");
      cur.id = value;
    } else if (key == "name") {
      cur.name = value;
    } else if (key == "gram") {
      if (cur.dim == 0) fail(line_no, "gram before id");
      std::vector<RatVec> grows;
      std::stringstream rs(value);
      std::string rowstr;
      while (std::getline(rs, rowstr, ';')) {
        std::stringstream ts(rowstr);
        std::string tok;
        RatVec row;
        while (ts >> tok) row.push_back(detail::parse_rat_token(tok, line_no));
        if (!row.empty()) grows.push_back(row);
      }
      if (grows.size() != cur.dim) fail(line_no, "gram row count mismatch");
      cur.gram = RatMat(cur.dim, cur.dim);
      for (size_t i = 0; i < cur.dim; ++i) {
        if (grows[i].size() != cur.dim) fail(line_no, "gram column count mismatch");
        for (size_t j = 0; j < cur.dim; ++j) cur.gram(i, j) = grows[i][j];
      }
      gram_given = true;
    } else if (key == "op") {
      if (cur.dim == 0) fail(line_no, "op before id");
      pending_ops.push_back(value);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  finish();
  return entries;
}

inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

}  // namespace crystfib
