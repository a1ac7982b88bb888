#pragma once

#include "crystfib/groupcore.hpp"
#include "crystfib/data/atlas2d.hpp"
#include "crystfib/data/atlas3d.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <string>

namespace crystfib {

struct UnknownIdError : std::runtime_error {
  explicit UnknownIdError(const std::string& what) : std::runtime_error(what) {}
};

// Versioned, validated collection of built space groups keyed by "dim/IT".
// Enantiomorphic 3D partners resolve to their stored representative.
class Atlas {
 public:
  static const std::map<std::string, std::string>& aliases() {
    static const std::map<std::string, std::string> a = {
        {"3/78", "3/76"},   {"3/95", "3/91"},   {"3/96", "3/92"},
        {"3/145", "3/144"}, {"3/153", "3/151"}, {"3/154", "3/152"},
        {"3/170", "3/169"}, {"3/172", "3/171"}, {"3/179", "3/178"},
        {"3/181", "3/180"}, {"3/213", "3/212"}};
    return a;
  }

  static Atlas load_default() {
    Atlas a;
    a.add_text(atlas2d_text());
    a.add_text(atlas3d_text());
    if (a.count(2) != 17 || a.count(3) != 219)
      throw GroupError("corrupt bundle: unexpected catalog entry counts");
    return a;
  }

  // The default bundle, built once and shared.
  static const Atlas& bundled() {
    static const Atlas a = load_default();
    return a;
  }

  void add_text(const std::string& text) {
    for (const CatalogEntry& e : parse_catalog(text)) {
      names_[e.id] = e.name;
      entries_[e.id] = build_group(e);
    }
  }

  void add_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    add_text(text);
  }

  size_t count(size_t dim) const {
    size_t n = 0;
    for (const auto& [id, g] : entries_)
      if (g.dim() == dim) ++n;
    return n;
  }

  std::string resolve(const std::string& id) const {
    auto al = aliases().find(id);
    return al == aliases().end() ? id : al->second;
  }

  bool has(const std::string& id) const { return entries_.count(resolve(id)) > 0; }

  const SpaceGroup& get(const std::string& id) const {
    auto it = entries_.find(resolve(id));
    if (it == entries_.end()) throw UnknownIdError("unknown group id '" + id + "'" + near(id));
    return it->second;
  }

  const std::string& name_of(const std::string& id) const {
    static const std::string empty;
    auto it = names_.find(resolve(id));
    return it == names_.end() ? empty : it->second;
  }

  std::vector<std::string> ids(size_t dim) const {
    std::vector<std::string> out;
    for (const auto& [id, g] : entries_)
      if (g.dim() == dim) out.push_back(id);
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
      return std::stoi(a.substr(a.find('/') + 1)) < std::stoi(b.substr(b.find('/') + 1));
    });
    return out;
  }

 private:
  std::string near(const std::string& id) const {
    size_t slash = id.find('/');
    if (slash == std::string::npos) return "";
    int want = 0;
    try {
      want = std::stoi(id.substr(slash + 1));
    } catch (...) {
      return "";
    }
    std::string dim = id.substr(0, slash);
    std::vector<std::pair<int, std::string>> cand;
    for (const auto& [key, g] : entries_) {
      if (key.substr(0, key.find('/')) != dim) continue;
      int it = std::stoi(key.substr(key.find('/') + 1));
      cand.push_back({std::abs(it - want), key});
    }
    if (cand.empty()) return "";
    std::sort(cand.begin(), cand.end());
    std::string s = "; nearest: ";
    for (size_t i = 0; i < cand.size() && i < 3; ++i) {
      if (i) s += ", ";
      s += cand[i].second;
    }
    return s;
  }

  std::map<std::string, SpaceGroup> entries_;
  std::map<std::string, std::string> names_;
};

}  // namespace crystfib
