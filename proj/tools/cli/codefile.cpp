#include "cli/codefile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ccodes/analysis.hpp"

namespace ccodes::cli {

namespace {

int parse_int(const std::string& token, const std::string& what) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw parse_error("bad " + what + " token '" + token + "'");
  }
  return value;
}

}  // namespace

CodeFile parse_code(std::istream& in) {
  std::optional<int> header_d;
  std::optional<int> header_k;
  std::vector<int> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      if (token.rfind("d=", 0) == 0 || token.rfind("k=", 0) == 0) {
        if (!labels.empty()) {
          throw parse_error("header token '" + token + "' after label data");
        }
        auto& slot = token[0] == 'd' ? header_d : header_k;
        if (slot) throw parse_error("duplicate header token '" + token + "'");
        slot = parse_int(token.substr(2), "header");
        continue;
      }
      labels.push_back(parse_int(token, "label"));
    }
  }
  int d = 0;
  if (header_d) {
    d = *header_d;
  } else if (!labels.empty()) {
    d = *std::max_element(labels.begin(), labels.end());
  }
  return CodeFile{TransitionSequence(std::move(labels), d), header_k};
}

CodeFile parse_code(const std::string& text) {
  std::istringstream in(text);
  return parse_code(in);
}

CodeFile load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read '" + path + "'");
  return parse_code(in);
}

std::string serialize_code(const TransitionSequence& t, std::optional<int> k) {
  std::ostringstream out;
  out << "d=" << t.dimension();
  if (k) out << " k=" << *k;
  out << '\n';
  const auto& labels = t.labels();
  int n = t.length();
  int wrap = 20;
  if (n >= 2 && is_symmetric(t)) wrap = n / 2;
  for (int i = 0; i < n; ++i) {
    out << labels[i];
    out << ((i + 1) % wrap == 0 || i + 1 == n ? '\n' : ' ');
  }
  return out.str();
}

void save_code(const std::string& path, const TransitionSequence& t, std::optional<int> k) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  out << serialize_code(t, k);
  if (!out) throw parse_error("write to '" + path + "' failed");
}

}  // namespace ccodes::cli
