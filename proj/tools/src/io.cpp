#include "psrecon_cli/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace psrecon::cli {

using ordered_json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  throw Error(ErrorCode::InvalidArgument,
              "unknown format '" + std::string(name) + "'");
}

std::string read_input(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(stdin_stream), {}};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(file), {}};
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    f(line, line_no);
  }
}

}  // namespace

StringMultiset parse_strings(std::string_view text) {
  std::vector<BitString> members;
  for_each_line(text, [&](std::string_view line, std::size_t) {
    members.push_back(BitString::parse(line));
  });
  if (members.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no strings in input");
  }
  return StringMultiset(std::move(members));
}

std::vector<CompositionPair> parse_pairs(std::string_view text) {
  std::vector<CompositionPair> pairs;
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    ordered_json doc;
    try {
      doc = ordered_json::parse(body);
      for (const auto& p : doc.at("pairs")) {
        if (!p.is_array() || p.size() != 2) {
          throw Error(ErrorCode::ParseError, "pair must be [zeros, ones]");
        }
        pairs.push_back({p[0].get<int>(), p[1].get<int>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return pairs;
  }
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    std::istringstream is{std::string(line)};
    CompositionPair p;
    std::string rest;
    if (!(is >> p.zeros >> p.ones) || (is >> rest)) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'zeros ones'");
    }
    pairs.push_back(p);
  });
  return pairs;
}

CompositionMultiset read_compositions(std::string_view text,
                                      const Expectations& expect) {
  const auto pairs = parse_pairs(text);
  Expectations merged = expect;
  // Header fields in a JSON file are assertions too.
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    const auto doc = ordered_json::parse(body);
    auto check = [&](const char* key, std::optional<int>& slot) {
      if (!doc.contains(key)) return;
      const int v = doc[key].get<int>();
      if (slot && *slot != v) {
        throw Error(ErrorCode::SizeMismatch,
                    std::string(key) + " in file is " + std::to_string(v) +
                        ", expected " + std::to_string(*slot));
      }
      slot = v;
    };
    check("n", merged.n);
    check("h", merged.h);
    check("wbar", merged.wbar);
  }
  return parse_and_validate(pairs, merged);
}

std::string write_compositions(const CompositionMultiset& m, Format format) {
  const auto pairs = m.pairs();
  if (format == Format::Text) {
    std::ostringstream os;
    os << "# n=" << m.length() << " h=" << m.string_count()
       << " wbar=" << m.weight() << '\n';
    for (const auto& p : pairs) os << p.zeros << ' ' << p.ones << '\n';
    return os.str();
  }
  ordered_json doc;
  doc["n"] = m.length();
  doc["h"] = m.string_count();
  doc["wbar"] = m.weight();
  auto arr = ordered_json::array();
  for (const auto& p : pairs) arr.push_back({p.zeros, p.ones});
  doc["pairs"] = std::move(arr);
  return doc.dump() + "\n";
}

std::string write_strings(const StringMultiset& u, Format format) {
  if (format == Format::Json) {
    auto arr = ordered_json::array();
    for (const auto& t : u.members()) arr.push_back(t.str());
    return ordered_json{{"strings", std::move(arr)}}.dump() + "\n";
  }
  std::string out;
  for (const auto& t : u.members()) out += t.str() + "\n";
  return out;
}

std::string write_classes(const std::vector<ReversalClass>& classes,
                          bool count_only, Format format) {
  if (format == Format::Json) {
    ordered_json doc;
    doc["count"] = classes.size();
    if (!count_only) {
      auto arr = ordered_json::array();
      for (const auto& cls : classes) {
        auto members = ordered_json::array();
        for (const auto& t : cls.canonical()) members.push_back(t.str());
        arr.push_back(std::move(members));
      }
      doc["classes"] = std::move(arr);
    }
    return doc.dump() + "\n";
  }
  if (count_only) return std::to_string(classes.size()) + "\n";
  std::string out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    out += "class " + std::to_string(k + 1) + ":\n";
    for (const auto& t : classes[k].canonical()) out += t.str() + "\n";
  }
  return out;
}

}  // namespace psrecon::cli
