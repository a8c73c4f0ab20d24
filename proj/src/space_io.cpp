#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "fischer/spaces.hpp"

namespace fischer {
namespace {

bool parse_id(const std::string& token, long long& out) {
  if (token.empty() || token.size() > 9) return false;
  for (char c : token)
    if (c < '0' || c > '9') return false;
  out = std::stoll(token);
  return true;
}

}  // namespace

FischerSpace parse_space_text(const std::string& text, const std::string& label) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  long long n = -1;
  std::vector<Line> lines;
  std::map<std::pair<Point, Point>, int> pair_owner;  // collinear pair -> defining file line

  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "points") {
      if (n >= 0) throw ParseError(lineno, "duplicate 'points' header");
      if (tok.size() != 2 || !parse_id(tok[1], n)) throw ParseError(lineno, "expected 'points N'");
      continue;
    }
    if (tok[0] != "line") throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    if (n < 0) throw ParseError(lineno, "'line' before 'points' header");
    if (tok.size() != 4) throw ParseError(lineno, "expected 'line i j k'");
    Line l{};
    for (int i = 0; i < 3; ++i) {
      long long v = 0;
      if (!parse_id(tok[static_cast<std::size_t>(i + 1)], v)) throw ParseError(lineno, "bad point id '" + tok[static_cast<std::size_t>(i + 1)] + "'");
      if (v >= n) throw ParseError(lineno, "point id " + std::to_string(v) + " out of range");
      l[static_cast<std::size_t>(i)] = static_cast<Point>(v);
    }
    std::sort(l.begin(), l.end());
    if (l[0] == l[1] || l[1] == l[2]) throw ParseError(lineno, "line repeats a point");
    for (auto [a, b] : {std::pair{l[0], l[1]}, std::pair{l[0], l[2]}, std::pair{l[1], l[2]}}) {
      auto [it, inserted] = pair_owner.emplace(std::pair{a, b}, lineno);
      if (!inserted) {
        throw ParseError(lineno, "points " + std::to_string(a) + " and " + std::to_string(b) +
                                     " already lie on the line given at line " + std::to_string(it->second));
      }
    }
    lines.push_back(l);
  }
  if (n < 0) throw ParseError(lineno, "missing 'points N' header");
  return FischerSpace(static_cast<int>(n), std::move(lines), label);
}

FischerSpace load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open space file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space_text(buf.str(), "file:" + path);
}

std::string to_space_text(const FischerSpace& space) {
  std::ostringstream out;
  out << "# " << space.label() << "\n";
  out << "points " << space.point_count() << "\n";
  for (const Line& l : space.lines()) out << "line " << l[0] << ' ' << l[1] << ' ' << l[2] << "\n";
  return out.str();
}

std::string to_json_text(const FischerSpace& space) {
  nlohmann::ordered_json j;
  j["label"] = space.label();
  j["points"] = space.point_count();
  j["lines"] = nlohmann::ordered_json::array();
  for (const Line& l : space.lines()) j["lines"].push_back({l[0], l[1], l[2]});
  return j.dump();
}

FischerSpace space_from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<Line> lines;
  for (const auto& l : j.at("lines")) {
    if (l.size() != 3) throw std::invalid_argument("line entries must have three points");
    lines.push_back({l[0].get<Point>(), l[1].get<Point>(), l[2].get<Point>()});
  }
  return FischerSpace(j.at("points").get<int>(), std::move(lines), j.value("label", std::string()));
}

}  // namespace fischer
