#include "qcoh/serialize.hpp"

#include <charconv>
#include <sstream>

#include "qcoh/errors.hpp"

namespace qcoh {

Format parse_format(std::string_view s) {
  if (s == "markdown" || s == "md") return Format::Markdown;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw InvalidInput("unknown format '" + std::string(s) + "' (expected markdown, json or csv)");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Markdown: return "markdown";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "markdown";
}

std::vector<int> parse_index_list(std::string_view text, int rank) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw InvalidInput("malformed index '" + std::string(tok) + "' in '" + std::string(text) + "'");
    if (v < 1 || v > rank)
      throw InvalidInput("index " + std::to_string(v) + " outside 1.." + std::to_string(rank));
    out.push_back(v - 1);
    pos = end + 1;
  }
  return out;
}

std::vector<int> parse_word(std::string_view text, int rank) {
  if (text.empty() || text == "e") return {};
  return parse_index_list(text, rank);
}

std::string join_one_based(const std::vector<int>& zero_based, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < zero_based.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(zero_based[i] + 1);
  }
  return s;
}

std::string format_weyl(const WeylGroup& g, int w) {
  if (g.length(w) == 0) return "";
  return "s[" + join_one_based(g.word(w)) + "]";
}

std::string format_term(const WeylGroup& g, const BasisElement& b, const mpq_class& c) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < b.q.size(); ++i) {
    if (b.q[i] == 0) continue;
    std::string p = "q" + std::to_string(i + 1);
    if (b.q[i] != 1) p += "^" + std::to_string(b.q[i]);
    parts.push_back(std::move(p));
  }
  if (g.length(b.w) > 0) parts.push_back(format_weyl(g, b.w));
  std::string body;
  for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];
  if (body.empty()) return c.get_str();
  if (c == 1) return body;
  return c.get_str() + "*" + body;
}

std::string format_class(const WeylGroup& g, const QClass& x) {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [b, c] : x) {
    if (first) {
      s += format_term(g, b, c);
    } else if (sgn(c) < 0) {
      s += " - " + format_term(g, b, -c);
    } else {
      s += " + " + format_term(g, b, c);
    }
    first = false;
  }
  return s;
}

nlohmann::json weyl_json(const WeylGroup& g, int w) {
  nlohmann::json word = nlohmann::json::array();
  for (int i : g.word(w)) word.push_back(i + 1);
  return word;
}

nlohmann::json class_json(const WeylGroup& g, const QClass& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [b, c] : x) arr.push_back({{"word", weyl_json(g, b.w)}, {"q", b.q}, {"coeff", c.get_str()}});
  return arr;
}

QClass class_from_json(const WeylGroup& g, const nlohmann::json& j) {
  QClass out;
  for (const auto& t : j) {
    std::vector<int> word;
    for (int i : t.at("word")) word.push_back(i - 1);
    Multidegree q = t.at("q").get<Multidegree>();
    if (static_cast<int>(q.size()) != g.rank()) throw InvalidInput("q vector has the wrong length");
    out.add(BasisElement{g.from_word(word), std::move(q)}, mpq_class(t.at("coeff").get<std::string>()));
  }
  return out;
}

nlohmann::json lift_json(const RootSystem& rs, const PWLift& l) {
  nlohmann::json prime = nlohmann::json::array();
  for (int i : l.delta_P_prime.indices) prime.push_back(i + 1);
  nlohmann::json omega = nlohmann::json::array();
  for (int i : weyl::reduced_word(rs, l.omega_factor)) omega.push_back(i + 1);
  return {{"lambda_B", l.lambda_B.coeffs}, {"delta_P_prime", prime}, {"omega_factor", omega}};
}

namespace {

std::string cell_text(const WeylGroup& g, const std::vector<BasisElement>& cell) {
  if (cell.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < cell.size(); ++i) s += (i ? ", " : "") + format_term(g, cell[i]);
  return s;
}

std::string row_label(const IntVec& row) {
  if (row.size() == 1) return std::to_string(row[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
  return s + ")";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string render_grading_table(const WeylGroup& g, const GradingTable& t, Format f) {
  std::ostringstream os;
  if (f == Format::Json) {
    nlohmann::json cells = nlohmann::json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t j = 0; j < t.cols.size(); ++j)
        for (const auto& b : t.cells[i][j]) {
          IntVec gr = t.rows[i];
          gr.push_back(t.cols[j]);
          cells.push_back({{"grading", gr}, {"word", weyl_json(g, b.w)}, {"q", b.q}});
        }
    nlohmann::json rows = t.rows;
    os << nlohmann::json{{"rows", rows}, {"cols", t.cols}, {"cells", cells}}.dump(2) << "\n";
    return os.str();
  }
  if (f == Format::Csv) {
    os << "i";
    for (int c : t.cols) os << "," << c;
    os << "\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      os << csv_quote(row_label(t.rows[i]));
      for (std::size_t j = 0; j < t.cols.size(); ++j) os << "," << csv_quote(cell_text(g, t.cells[i][j]));
      os << "\n";
    }
    return os.str();
  }
  os << "| i \\ j |";
  for (int c : t.cols) os << " " << c << " |";
  os << "\n|---|";
  for (std::size_t j = 0; j < t.cols.size(); ++j) os << "---|";
  os << "\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    os << "| " << row_label(t.rows[i]) << " |";
    for (std::size_t j = 0; j < t.cols.size(); ++j) os << " " << cell_text(g, t.cells[i][j]) << " |";
    os << "\n";
  }
  return os.str();
}

}  // namespace qcoh
