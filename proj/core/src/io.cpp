#include "psts/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "psts/error.hpp"

namespace psts {

namespace {

struct SourceLine {
  std::size_t number;
  std::string text;
};

/// Non-blank lines not starting with '#', with their 1-based line numbers.
std::vector<SourceLine> significant_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({number, std::string(line)});
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& token, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what + " at '" + token + "'");
}

std::optional<std::size_t> parse_count(std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

/// `{a,b}->z` split into its three labels.
std::optional<std::array<std::string, 3>> parse_assignment(std::string_view token) {
  if (token.size() < 7 || token.front() != '{') return std::nullopt;
  const auto close = token.find("}->");
  if (close == std::string_view::npos) return std::nullopt;
  const std::string_view pair = token.substr(1, close - 1);
  const auto comma = pair.find(',');
  if (comma == std::string_view::npos || pair.find(',', comma + 1) != std::string_view::npos) return std::nullopt;
  std::array<std::string, 3> out{std::string(pair.substr(0, comma)), std::string(pair.substr(comma + 1)),
                                 std::string(token.substr(close + 3))};
  if (out[0].empty() || out[1].empty() || out[2].empty()) return std::nullopt;
  return out;
}

/// Fills a labelling from assignment tokens; `line` is only used for messages.
void assign_pairs(Labelling& mu, const std::vector<std::string>& tokens, std::size_t first_token, std::size_t line) {
  const std::size_t k = mu.domain.size();
  std::vector<char> done(mu.image.size(), 0);
  for (std::size_t t = first_token; t < tokens.size(); ++t) {
    auto parts = parse_assignment(tokens[t]);
    if (!parts) syntax_error(line, tokens[t], "expected {a,b}->z");
    auto pos_a = std::find(mu.domain.begin(), mu.domain.end(), (*parts)[0]);
    auto pos_b = std::find(mu.domain.begin(), mu.domain.end(), (*parts)[1]);
    if (pos_a == mu.domain.end() || pos_b == mu.domain.end()) {
      throw Error(ErrorCode::UnknownPoint, "pair " + tokens[t] + " uses a vertex outside X");
    }
    std::size_t a = static_cast<std::size_t>(pos_a - mu.domain.begin());
    std::size_t b = static_cast<std::size_t>(pos_b - mu.domain.begin());
    if (a == b) syntax_error(line, tokens[t], "pair with equal vertices");
    if (a > b) std::swap(a, b);
    const std::size_t idx = pair_index(a, b, k);
    if (done[idx]) throw Error(ErrorCode::NotBijective, "pair " + tokens[t] + " assigned twice");
    done[idx] = 1;
    mu.image[idx] = (*parts)[2];
  }
  for (auto [a, b] : lex_pairs(k)) {
    if (!done[pair_index(a, b, k)]) {
      throw Error(ErrorCode::NotBijective,
                  "pair {" + mu.domain[a] + "," + mu.domain[b] + "} has no assigned point");
    }
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i];
  }
  return out;
}

}  // namespace

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    pos = text.find_first_not_of(" \t\r\n\f\v", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = text.find_first_of(" \t\r\n\f\v", pos);
    if (end == std::string_view::npos) end = text.size();
    out.emplace_back(text.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

Configuration parse_config(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw Error(ErrorCode::SyntaxError, "line 1: missing points declaration at ''");
  RawConfiguration raw;
  {
    const auto tokens = split_tokens(lines.front().text);
    const std::size_t at = lines.front().number;
    if (tokens.front() != "points") syntax_error(at, tokens.front(), "expected 'points'");
    if (tokens.size() < 2) syntax_error(at, tokens.front(), "missing point count");
    auto k = parse_count(tokens[1]);
    if (!k) syntax_error(at, tokens[1], "bad point count");
    if (tokens.size() - 2 != *k) {
      syntax_error(at, tokens.back(), "declared " + tokens[1] + " points but listed " + std::to_string(tokens.size() - 2));
    }
    raw.points.assign(tokens.begin() + 2, tokens.end());
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tokens = split_tokens(lines[i].text);
    if (tokens.front() != "line") syntax_error(lines[i].number, tokens.front(), "expected 'line'");
    raw.lines.emplace_back(tokens.begin() + 1, tokens.end());
  }
  return validate_configuration(raw);
}

std::string emit_config(const Configuration& config) {
  std::string out = "points " + std::to_string(config.point_count());
  for (const std::string& label : config.labels()) out += ' ' + label;
  out += '\n';
  for (const Triple& t : config.lines()) {
    out += "line " + config.label(t[0]) + ' ' + config.label(t[1]) + ' ' + config.label(t[2]) + '\n';
  }
  return out;
}

Labelling parse_labelling(std::string_view text, const std::vector<std::string>& vertices) {
  Labelling mu;
  mu.domain = vertices;
  mu.image.assign(binomial(vertices.size(), 2), std::string());
  std::vector<std::string> tokens;
  std::size_t first_line = 1;
  for (const auto& line : significant_lines(text)) {
    if (tokens.empty()) first_line = line.number;
    for (auto& t : split_tokens(line.text)) tokens.push_back(std::move(t));
  }
  assign_pairs(mu, tokens, 0, first_line);
  return mu;
}

std::string emit_labelling(const Labelling& mu) {
  std::string out;
  const std::size_t k = mu.domain.size();
  for (auto [a, b] : lex_pairs(k)) {
    out += '{' + mu.domain[a] + ',' + mu.domain[b] + "}->" + mu.image[pair_index(a, b, k)] + '\n';
  }
  return out;
}

PerspectiveData parse_perspective(std::string_view text, const AxisLoader& load_axis) {
  PerspectiveData data;
  std::optional<std::size_t> m, n;
  std::optional<std::string> axis_path;
  bool have_x = false;
  struct Pending {
    std::size_t line;
    std::vector<std::string> tokens;
  };
  std::map<std::size_t, Pending> mu_records;
  std::map<std::pair<std::size_t, std::size_t>, Pending> xi_records;

  auto bracket_index = [](std::string_view s, std::size_t& pos) -> std::optional<std::size_t> {
    if (pos >= s.size() || s[pos] != '[') return std::nullopt;
    const auto close = s.find(']', pos);
    if (close == std::string_view::npos) return std::nullopt;
    auto v = parse_count(s.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    return v;
  };

  for (const auto& line : significant_lines(text)) {
    const std::string& s = line.text;
    const auto start = s.find_first_not_of(" \t");
    const std::string body = s.substr(start);
    const auto head_end = body.find_first_of(" \t");
    const std::string head = body.substr(0, head_end);
    if (head.starts_with("m=") || head.starts_with("n=")) {
      auto v = parse_count(std::string_view(head).substr(2));
      if (!v || head_end != std::string::npos) syntax_error(line.number, head, "expected a count");
      (head[0] == 'm' ? m : n) = *v;
    } else if (body.starts_with("axis=")) {
      const auto tokens = split_tokens(body.substr(5));
      if (tokens.size() != 1) syntax_error(line.number, body, "expected one axis path");
      axis_path = tokens.front();
    } else if (body.starts_with("X=")) {
      data.simplex_vertices = split_tokens(body.substr(2));
      have_x = true;
    } else if (head.starts_with("mu[")) {
      std::size_t pos = 2;
      auto i = bracket_index(head, pos);
      if (!i || *i == 0 || head.substr(pos) != ":") syntax_error(line.number, head, "expected mu[i]:");
      if (mu_records.contains(*i)) syntax_error(line.number, head, "repeated record");
      auto tokens = split_tokens(body);
      tokens.erase(tokens.begin());
      mu_records[*i] = {line.number, std::move(tokens)};
    } else if (head.starts_with("xi[")) {
      std::size_t pos = 2;
      auto i = bracket_index(head, pos);
      auto j = i ? bracket_index(head, pos) : std::nullopt;
      if (!i || !j || *i == 0 || *j == 0 || head.substr(pos) != ":") {
        syntax_error(line.number, head, "expected xi[i][j]:");
      }
      if (xi_records.contains({*i, *j})) syntax_error(line.number, head, "repeated record");
      auto tokens = split_tokens(body);
      tokens.erase(tokens.begin());
      xi_records[{*i, *j}] = {line.number, std::move(tokens)};
    } else {
      syntax_error(line.number, head, "unknown record");
    }
  }
  if (!m) throw Error(ErrorCode::SyntaxError, "line 0: missing record at 'm='");
  if (!n) throw Error(ErrorCode::SyntaxError, "line 0: missing record at 'n='");
  if (!axis_path) throw Error(ErrorCode::SyntaxError, "line 0: missing record at 'axis='");
  if (!have_x) throw Error(ErrorCode::SyntaxError, "line 0: missing record at 'X='");
  data.m = *m;
  data.n = *n;
  data.axis = load_axis(*axis_path);

  const auto& X = data.simplex_vertices;
  const std::size_t k = X.size();
  for (const auto& [i, rec] : mu_records) {
    if (i > data.m) syntax_error(rec.line, "mu[" + std::to_string(i) + "]", "index exceeds m");
  }
  for (std::size_t i = 1; i <= data.m; ++i) {
    auto it = mu_records.find(i);
    if (it == mu_records.end()) {
      throw Error(ErrorCode::SyntaxError, "line 0: missing record at 'mu[" + std::to_string(i) + "]'");
    }
    Labelling mu;
    mu.domain = X;
    mu.image.assign(binomial(k, 2), std::string());
    assign_pairs(mu, it->second.tokens, 0, it->second.line);
    data.mu.push_back(std::move(mu));
  }

  std::vector<std::vector<std::optional<Permutation>>> given(data.m,
                                                             std::vector<std::optional<Permutation>>(data.m));
  for (const auto& [ij, rec] : xi_records) {
    const auto [i, j] = ij;
    if (i > data.m || j > data.m) syntax_error(rec.line, "xi", "index exceeds m");
    Permutation perm;
    for (const std::string& image : rec.tokens) {
      auto at = std::find(X.begin(), X.end(), image);
      if (at == X.end()) syntax_error(rec.line, image, "not a vertex of X");
      perm.push_back(static_cast<std::size_t>(at - X.begin()));
    }
    given[i - 1][j - 1] = std::move(perm);
  }
  data.xi.assign(data.m, std::vector<Permutation>(data.m));
  for (std::size_t i = 0; i < data.m; ++i) {
    for (std::size_t j = 0; j < data.m; ++j) {
      if (given[i][j]) {
        data.xi[i][j] = *given[i][j];
      } else if (i == j) {
        data.xi[i][j] = identity_permutation(k);
      } else if (given[j][i]) {
        check_permutation(*given[j][i], k);
        data.xi[i][j] = inverse(*given[j][i]);
      } else {
        throw Error(ErrorCode::SyntaxError, "line 0: missing record at 'xi[" + std::to_string(std::min(i, j) + 1) +
                                                "][" + std::to_string(std::max(i, j) + 1) + "]'");
      }
    }
  }
  return data;
}

std::string emit_perspective(const PerspectiveData& data, const std::string& axis_path) {
  std::string out;
  out += "m=" + std::to_string(data.m) + '\n';
  out += "n=" + std::to_string(data.n) + '\n';
  out += "axis=" + axis_path + '\n';
  out += "X=" + join(data.simplex_vertices) + '\n';
  const auto& X = data.simplex_vertices;
  const std::size_t k = X.size();
  for (std::size_t i = 0; i < data.mu.size(); ++i) {
    out += "mu[" + std::to_string(i + 1) + "]:";
    for (auto [a, b] : lex_pairs(k)) out += " {" + X[a] + ',' + X[b] + "}->" + data.mu[i].at(a, b);
    out += '\n';
  }
  for (std::size_t i = 0; i < data.xi.size(); ++i) {
    for (std::size_t j = i + 1; j < data.xi[i].size(); ++j) {
      out += "xi[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]:";
      for (std::size_t a : data.xi[i][j]) out += ' ' + X.at(a);
      out += '\n';
    }
  }
  return out;
}

PerspectiveData read_perspective_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto dir = path.parent_path();
  return parse_perspective(text, [&](const std::string& axis) {
    std::filesystem::path p(axis);
    if (p.is_relative()) p = dir / p;
    return read_config_file(p);
  });
}

std::string emit_swap_certificate(const SwapCertificate& cert) {
  return "swap p=" + cert.p + " q=" + cert.q + " a1=" + cert.a1 + " b1=" + cert.b1 + " a2=" + cert.a2 +
         " b2=" + cert.b2 + '\n';
}

SwapCertificate parse_swap_certificate(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.size() != 1) throw Error(ErrorCode::SyntaxError, "line 1: expected one swap record at ''");
  const auto tokens = split_tokens(lines.front().text);
  const std::size_t at = lines.front().number;
  if (tokens.front() != "swap") syntax_error(at, tokens.front(), "expected 'swap'");
  std::map<std::string, std::string> fields;
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    const auto eq = tokens[t].find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tokens[t].size()) syntax_error(at, tokens[t], "expected key=value");
    const std::string key = tokens[t].substr(0, eq);
    if (!fields.emplace(key, tokens[t].substr(eq + 1)).second) syntax_error(at, tokens[t], "repeated key");
  }
  SwapCertificate cert;
  const std::pair<const char*, std::string*> slots[] = {{"p", &cert.p},   {"q", &cert.q},   {"a1", &cert.a1},
                                                        {"b1", &cert.b1}, {"a2", &cert.a2}, {"b2", &cert.b2}};
  for (auto [key, slot] : slots) {
    auto it = fields.find(key);
    if (it == fields.end()) syntax_error(at, key, "missing key");
    *slot = it->second;
    fields.erase(it);
  }
  if (!fields.empty()) syntax_error(at, fields.begin()->first, "unknown key");
  return cert;
}

std::string emit_subgraph_report(const Configuration& config, std::span<const FreeSubgraph> subgraphs) {
  std::string out = "count " + std::to_string(subgraphs.size()) + '\n';
  for (const FreeSubgraph& g : subgraphs) {
    out += "K " + std::to_string(g.order()) + ':';
    for (PointIndex p : g.vertices) out += ' ' + config.label(p);
    out += "\nsides:\n";
    for (auto [a, b] : lex_pairs(g.order())) {
      const Triple& t = config.line(g.sides[pair_index(a, b, g.order())]);
      out += "  " + config.label(g.vertices[a]) + ' ' + config.label(g.vertices[b]) + " -> " + config.label(t[0]) +
             ' ' + config.label(t[1]) + ' ' + config.label(t[2]) + '\n';
    }
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::FileError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::FileError, "write to '" + path.string() + "' failed");
}

Configuration read_config_file(const std::filesystem::path& path) { return parse_config(read_text_file(path)); }

}  // namespace psts
