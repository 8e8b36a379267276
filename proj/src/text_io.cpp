#include "minrec/text_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace minrec {

std::string format_function(const FiniteFunction& f) {
  std::ostringstream out;
  out << "k=" << f.k() << " n=" << f.n() << '\n';
  out << "labels:";
  for (const auto& label : f.labels()) out << ' ' << label;
  out << '\n';
  out << "table:";
  for (std::uint8_t v : f.table()) out << ' ' << f.labels()[v];
  out << '\n';
  return out.str();
}

namespace {

bool next_nonblank_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    if (!blank) return true;
  }
  return false;
}

std::vector<std::string> tokens_after_tag(const std::string& line, const std::string& tag) {
  auto pos = line.find(tag);
  if (pos == std::string::npos)
    throw std::invalid_argument("function record: expected '" + tag + "' line");
  std::istringstream rest(line.substr(pos + tag.size()));
  std::vector<std::string> tokens;
  std::string token;
  while (rest >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

std::optional<FiniteFunction> read_function(std::istream& in) {
  std::string line;
  if (!next_nonblank_line(in, line)) return std::nullopt;

  int k = -1, n = -1;
  {
    std::istringstream header(line);
    std::string token;
    while (header >> token) {
      if (token.rfind("k=", 0) == 0)
        k = std::stoi(token.substr(2));
      else if (token.rfind("n=", 0) == 0)
        n = std::stoi(token.substr(2));
      else
        throw std::invalid_argument("function record: bad header token '" + token + "'");
    }
    if (k < 1 || n < 1)
      throw std::invalid_argument("function record: header must give k>=1 and n>=1");
  }

  if (!next_nonblank_line(in, line))
    throw std::invalid_argument("function record: missing labels line");
  std::vector<std::string> labels = tokens_after_tag(line, "labels:");
  if (labels.empty()) throw std::invalid_argument("function record: empty label list");

  std::unordered_map<std::string, int> index_of;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index_of.emplace(labels[i], static_cast<int>(i)).second)
      throw std::invalid_argument("function record: duplicate label '" + labels[i] + "'");
  }

  if (!next_nonblank_line(in, line))
    throw std::invalid_argument("function record: missing table line");
  std::vector<std::string> entries = tokens_after_tag(line, "table:");
  const std::uint64_t expected = power_checked(k, n);
  if (entries.size() != expected)
    throw std::invalid_argument("function record: table has " +
                                std::to_string(entries.size()) + " entries, expected " +
                                std::to_string(expected));
  std::vector<std::uint8_t> table(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto it = index_of.find(entries[i]);
    if (it == index_of.end())
      throw std::invalid_argument("function record: unknown label '" + entries[i] + "'");
    table[i] = static_cast<std::uint8_t>(it->second);
  }
  return FiniteFunction(k, n, std::move(labels), std::move(table));
}

FiniteFunction parse_function(const std::string& text) {
  std::istringstream in(text);
  auto f = read_function(in);
  if (!f) throw std::invalid_argument("empty function record");
  return *std::move(f);
}

FiniteFunction load_function_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open function file: " + path);
  auto f = read_function(in);
  if (!f) throw std::invalid_argument("no function record in file: " + path);
  return *std::move(f);
}

Permutation parse_permutation(const std::string& text, int degree) {
  if (text.find(',') != std::string::npos) {
    Permutation p = Permutation::from_oneline_text(text);
    if (p.degree() != degree)
      throw std::invalid_argument("one-line permutation has degree " +
                                  std::to_string(p.degree()) + ", expected " +
                                  std::to_string(degree));
    return p;
  }
  return Permutation::from_cycles_text(text, degree);
}

}  // namespace minrec
