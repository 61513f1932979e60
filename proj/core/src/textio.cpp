#include "harmonia/textio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace harmonia {

namespace {

// Drop '#' comment lines, then split the rest into integer tokens.
std::vector<long long> tokenize(std::string_view text) {
  std::string filtered;
  filtered.reserve(text.size());
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t end = text.find('\n', i);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(i, end - i);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] != '#') {
      filtered.append(line);
      filtered.push_back('\n');
    }
    if (end == text.size()) break;
    i = end + 1;
  }

  std::vector<long long> tokens;
  std::istringstream in(filtered);
  std::string tok;
  while (in >> tok) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InputError("unexpected token '" + tok + "' in numeric input");
    tokens.push_back(value);
  }
  return tokens;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::vector<Element>> table_from_tokens(const std::vector<long long>& tokens) {
  if (tokens.empty()) throw InputError("empty table input");
  const long long n = tokens[0];
  if (n < 1 || n > max_group_order())
    throw InputError("declared table order is out of range");
  if (static_cast<long long>(tokens.size()) != 1 + n * n) {
    std::ostringstream out;
    out << "expected " << n * n << " table entries after the order, got "
        << tokens.size() - 1;
    throw InputError(out.str());
  }
  std::vector<std::vector<Element>> table(static_cast<std::size_t>(n));
  std::size_t k = 1;
  for (long long i = 0; i < n; ++i) {
    table[i].resize(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j, ++k) {
      const long long v = tokens[k];
      if (v < 0 || v >= n) throw InputError("table entry out of range [0, n)");
      table[i][j] = static_cast<Element>(v);
    }
  }
  return table;
}

}  // namespace

std::string serialize_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (int i = 0; i < g.order(); ++i) {
    const auto row = g.row(i);
    for (int j = 0; j < g.order(); ++j) {
      if (j > 0) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

FiniteGroup parse_group_text(std::string_view text, const ValidateOptions& opts) {
  return from_cayley_table(table_from_tokens(tokenize(text)), opts);
}

FiniteGroup read_group_file(const std::string& path, const ValidateOptions& opts) {
  return parse_group_text(slurp(path), opts);
}

std::string serialize_sequence(std::span<const Element> entries) {
  std::ostringstream out;
  out << entries.size() << '\n';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out << ' ';
    out << entries[i];
  }
  out << '\n';
  return out.str();
}

std::vector<Element> parse_sequence_text(std::string_view text) {
  const std::vector<long long> tokens = tokenize(text);
  if (tokens.empty()) throw InputError("empty sequence input");
  const long long l = tokens[0];
  if (l < 1 || l > max_group_order())
    throw InputError("declared sequence length is out of range");
  if (static_cast<long long>(tokens.size()) != 1 + l) {
    std::ostringstream out;
    out << "expected " << l << " sequence entries after the length, got "
        << tokens.size() - 1;
    throw InputError(out.str());
  }
  std::vector<Element> entries(static_cast<std::size_t>(l));
  for (long long i = 0; i < l; ++i) {
    const long long v = tokens[1 + i];
    if (v < 0 || v >= l) throw InputError("sequence entry out of range [0, l)");
    entries[i] = static_cast<Element>(v);
  }
  return entries;
}

std::vector<Element> read_sequence_file(const std::string& path) {
  return parse_sequence_text(slurp(path));
}

std::vector<std::vector<Element>> parse_raw_table_text(std::string_view text) {
  return table_from_tokens(tokenize(text));
}

std::vector<std::vector<Element>> read_raw_table_file(const std::string& path) {
  return parse_raw_table_text(slurp(path));
}

std::string serialize_raw_table(const std::vector<std::vector<Element>>& table) {
  std::ostringstream out;
  out << table.size() << '\n';
  for (const auto& row : table) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<Element>> normalize_table(std::vector<std::vector<Element>> table) {
  const int n = static_cast<int>(table.size());
  int identity = -1;
  for (int e = 0; e < n && identity == -1; ++e) {
    bool two_sided = true;
    for (int j = 0; j < n && two_sided; ++j) {
      if (table[e][j] != j || table[j][e] != j) two_sided = false;
    }
    if (two_sided) identity = e;
  }
  if (identity == -1) throw StructureError("table has no two-sided identity element");
  if (identity == 0) return table;

  // Swap the names 0 and e; everything else keeps its index.
  auto rename = [&](Element x) -> Element {
    if (x == 0) return identity;
    if (x == identity) return 0;
    return x;
  };
  std::vector<std::vector<Element>> out(table.size(),
                                        std::vector<Element>(table.size()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = rename(table[rename(i)][rename(j)]);
  return out;
}

}  // namespace harmonia
