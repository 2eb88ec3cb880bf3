#include "treesplit/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace treesplit {

namespace {

constexpr std::uint32_t kMaxScale = 18;  // 10^18 fits in int64

using int128 = __int128;

int128 pow10_128(std::uint32_t e) {
  int128 p = 1;
  while (e--) p *= 10;
  return p;
}

struct DecimalParts {
  bool negative = false;
  int128 digits = 0;          // all digits, fractional point removed
  std::uint32_t frac_len = 0;
};

// Accepts [+-]? digits [. digits]; at least one digit overall.
std::optional<DecimalParts> scan_decimal(std::string_view text) {
  DecimalParts parts;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    parts.negative = text[i] == '-';
    ++i;
  }
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    any_digit = true;
    if (seen_point) ++parts.frac_len;
    parts.digits = parts.digits * 10 + (c - '0');
    if (parts.digits > (int128{1} << 100)) return std::nullopt;  // absurdly long
  }
  if (!any_digit) return std::nullopt;
  return parts;
}

Weight to_weight_checked(int128 value, std::string_view text) {
  constexpr int128 lo = std::numeric_limits<Weight>::min();
  constexpr int128 hi = std::numeric_limits<Weight>::max();
  if (value < lo || value > hi)
    throw ParseError(ParseErrc::out_of_range, 0,
                     "value '" + std::string(text) + "' does not fit in 64 bits");
  return static_cast<Weight>(value);
}

}  // namespace

const char* to_string(ParseErrc code) {
  switch (code) {
    case ParseErrc::syntax: return "syntax";
    case ParseErrc::too_many_fractional_digits: return "too_many_fractional_digits";
    case ParseErrc::out_of_range: return "out_of_range";
    case ParseErrc::epsilon_not_representable: return "epsilon_not_representable";
  }
  return "unknown";
}

Weight parse_scaled_decimal(std::string_view text, std::uint32_t scale) {
  const auto parts = scan_decimal(text);
  if (!parts)
    throw ParseError(ParseErrc::syntax, 0,
                     "malformed decimal '" + std::string(text) + "'");
  if (parts->frac_len > scale)
    throw ParseError(ParseErrc::too_many_fractional_digits, 0,
                     "'" + std::string(text) + "' has more than " +
                         std::to_string(scale) + " fractional digits");
  int128 units = parts->digits * pow10_128(scale - parts->frac_len);
  if (parts->negative) units = -units;
  return to_weight_checked(units, text);
}

std::string format_scaled_decimal(Weight units, std::uint32_t scale) {
  const bool negative = units < 0;
  unsigned long long magnitude =
      negative ? 0ull - static_cast<unsigned long long>(units)
               : static_cast<unsigned long long>(units);
  std::string digits = std::to_string(magnitude);
  std::string out = negative ? "-" : "";
  if (scale == 0) return out + digits;
  if (digits.size() <= scale) digits.insert(0, scale + 1 - digits.size(), '0');
  out += digits.substr(0, digits.size() - scale);
  out += '.';
  out += digits.substr(digits.size() - scale);
  return out;
}

Weight parse_doubled_epsilon(std::string_view text, std::uint32_t scale) {
  const auto parts = scan_decimal(text);
  if (!parts)
    throw ParseError(ParseErrc::syntax, 0,
                     "malformed tolerance '" + std::string(text) + "'");
  if (parts->negative && parts->digits != 0)
    throw ParseError(ParseErrc::out_of_range, 0, "tolerance must be non-negative");
  // 2 * eps * 10^scale must be an integer.
  int128 doubled = 2 * parts->digits;
  if (parts->frac_len <= scale) {
    doubled *= pow10_128(scale - parts->frac_len);
  } else {
    const int128 divisor = pow10_128(parts->frac_len - scale);
    if (doubled % divisor != 0)
      throw ParseError(ParseErrc::epsilon_not_representable, 0,
                       "doubled tolerance '" + std::string(text) +
                           "' is not an integer at scale " + std::to_string(scale));
    doubled /= divisor;
  }
  return to_weight_checked(doubled, text);
}

WeightedTree parse_tree(std::string_view text) {
  bool have_header = false;
  std::uint32_t n = 0;
  std::uint32_t scale = 0;
  std::vector<std::optional<Weight>> weights;
  std::vector<std::pair<VertexId, VertexId>> edges;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream iss{std::string(line)};
    std::string tag;
    if (!(iss >> tag)) continue;  // blank or comment-only

    auto expect_end = [&] {
      std::string extra;
      if (iss >> extra)
        throw ParseError(ParseErrc::syntax, lineno, "unexpected token '" + extra + "'");
    };

    if (!have_header) {
      if (tag != "tree")
        throw ParseError(ParseErrc::syntax, lineno,
                         "expected header 'tree <n> scale=<d>', got '" + tag + "'");
      long long count = 0;
      std::string scale_tok;
      if (!(iss >> count >> scale_tok))
        throw ParseError(ParseErrc::syntax, lineno, "malformed header");
      if (count <= 0 || count > 0xFFFFFFFFll)
        throw ParseError(ParseErrc::out_of_range, lineno, "vertex count out of range");
      if (scale_tok.rfind("scale=", 0) != 0)
        throw ParseError(ParseErrc::syntax, lineno, "expected 'scale=<d>' in header");
      long long d = -1;
      try {
        std::size_t used = 0;
        d = std::stoll(scale_tok.substr(6), &used);
        if (used != scale_tok.size() - 6) d = -1;
      } catch (const std::exception&) {
        d = -1;
      }
      if (d < 0 || d > kMaxScale)
        throw ParseError(ParseErrc::out_of_range, lineno,
                         "scale must be an integer in [0, " + std::to_string(kMaxScale) + "]");
      expect_end();
      have_header = true;
      n = static_cast<std::uint32_t>(count);
      scale = static_cast<std::uint32_t>(d);
      weights.assign(n, std::nullopt);
      continue;
    }

    if (tag == "v") {
      long long id = -1;
      std::string weight_text;
      if (!(iss >> id >> weight_text))
        throw ParseError(ParseErrc::syntax, lineno, "malformed vertex line");
      expect_end();
      if (id < 0 || static_cast<unsigned long long>(id) >= n)
        throw ParseError(ParseErrc::out_of_range, lineno,
                         "vertex id " + std::to_string(id) + " out of range");
      if (weights[static_cast<std::size_t>(id)])
        throw ParseError(ParseErrc::syntax, lineno,
                         "duplicate vertex line for id " + std::to_string(id));
      try {
        weights[static_cast<std::size_t>(id)] = parse_scaled_decimal(weight_text, scale);
      } catch (const ParseError& e) {
        throw ParseError(e.code(), lineno, e.what());
      }
    } else if (tag == "e") {
      long long a = -1, b = -1;
      if (!(iss >> a >> b))
        throw ParseError(ParseErrc::syntax, lineno, "malformed edge line");
      expect_end();
      if (a < 0 || b < 0 || static_cast<unsigned long long>(a) >= n ||
          static_cast<unsigned long long>(b) >= n)
        throw ParseError(ParseErrc::out_of_range, lineno, "edge endpoint out of range");
      edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    } else {
      throw ParseError(ParseErrc::syntax, lineno, "unknown directive '" + tag + "'");
    }
  }

  if (!have_header)
    throw ParseError(ParseErrc::syntax, 0, "missing 'tree <n> scale=<d>' header");
  std::vector<Weight> resolved(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!weights[v])
      throw ParseError(ParseErrc::syntax, 0,
                       "missing vertex line for id " + std::to_string(v));
    resolved[v] = *weights[v];
  }
  return WeightedTree::build(n, std::move(resolved), edges, scale);
}

std::string serialize_tree(const WeightedTree& t) {
  std::string out = "tree " + std::to_string(t.vertex_count()) + " scale=" +
                    std::to_string(t.scale_exponent()) + "\n";
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    out += "v " + std::to_string(v) + " " +
           format_scaled_decimal(t.weight(v), t.scale_exponent()) + "\n";
  }
  for (const Edge& e : t.edges())
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

WeightedTree load_tree_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tree(buffer.str());
}

void save_tree_file(const WeightedTree& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << serialize_tree(t);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace treesplit
